#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "iqpsim/approx.h"
#include "iqpsim/gf2.h"
#include "iqpsim/ising.h"
#include "iqpsim/lattice.h"
#include "iqpsim/oracle.h"
#include "iqpsim/planar.h"
#include "iqpsim/random_circuits.h"
#include "iqpsim/sparse.h"
#include "test_oracles.h"

using namespace iqpsim;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool passed;
    std::string detail;
};

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

OutcomeString random_bits(Rng &rng, size_t n) {
    OutcomeString s(n);
    for (size_t i = 0; i < n; i++) {
        s.set(i, rng() & 1);
    }
    return s;
}

Outcome ising_map_equivalence() {
    auto t0 = Clock::now();
    Rng rng(1001);
    double worst = 0.0;
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng() % 10;
        auto c = random_circuit(rng, n, rng() % (3 * n + 1));
        auto oracle = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < oracle.size(); x++) {
            double p = joint_probability(c, OutcomeString::from_index(x, n));
            worst = std::max(worst, std::abs(oracle[x] - p));
        }
    }
    double secs = seconds_since(t0);
    return {worst <= 1e-10 && secs <= 30.0,
            fmt("200 circuits, max |oracle - 2^-2n |Z|^2| = %.3g (tol 1e-10), %.2f s (limit 30 s)", worst, secs)};
}

Outcome mbiqp_equals_iqp() {
    Rng rng(1002);
    double worst = 0.0;
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + rng() % 6;
        auto c = random_circuit(rng, n, 1 + rng() % (n + 2));
        auto g = circuit_to_graph(c);
        for (int k = 0; k < 8; k++) {
            auto mv = random_bits(rng, n);
            std::vector<uint8_t> mu(g.num_ub());
            for (auto &m : mu) {
                m = rng() & 1;
            }
            double lhs = mbiqp_probability(g, mv, mu);
            double rhs =
                std::ldexp(joint_probability(c, mbiqp_to_iqp_outcome(mv, mu, g)), -static_cast<int>(g.num_ub()));
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return {worst <= 1e-10, fmt("100 instances x 8 outcomes, max |P_MBIQP - 2^-|U_B| P_IQP| = %.3g (tol 1e-10)", worst)};
}

Outcome sparse_fast_path() {
    Rng rng(1003);
    double worst = 0.0;
    size_t ifrb = 0, ib = 0;
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + rng() % 10;
        auto c = random_sparse_circuit(rng, n, 1 + rng() % n);
        auto kind = classify(c).kind;
        if (kind == SparseKind::General) {
            return {false, "generator produced a General circuit"};
        }
        (kind == SparseKind::IFRB ? ifrb : ib)++;
        auto oracle = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < oracle.size(); x++) {
            worst = std::max(worst, std::abs(sparse_probability(c, OutcomeString::from_index(x, n)) - oracle[x]));
        }
    }
    double min_pvalue = 1.0;
    for (int t = 0; t < 5; t++) {
        size_t n = 4 + rng() % 5;
        auto c = random_sparse_circuit(rng, n, 2 + rng() % (n - 1));
        auto table = xbasis_table(simulate_statevector(c));
        SparseSampler sampler(c);
        const size_t draws = 100000;
        std::vector<double> counts(table.size(), 0.0);
        for (size_t k = 0; k < draws; k++) {
            counts[sampler.sample(rng).to_index()] += 1.0;
        }
        double stat = 0.0, pooled_e = 0.0, pooled_n = 0.0;
        int cells = 0;
        bool off_support = false;
        for (size_t x = 0; x < table.size(); x++) {
            double e = table[x] * draws;
            if (e >= 5.0) {
                stat += (counts[x] - e) * (counts[x] - e) / e;
                cells++;
            } else if (table[x] > 1e-12) {
                pooled_e += e;
                pooled_n += counts[x];
            } else if (counts[x] > 0) {
                off_support = true;
            }
        }
        if (pooled_e > 0.0) {
            stat += (pooled_n - pooled_e) * (pooled_n - pooled_e) / pooled_e;
            cells++;
        }
        if (off_support) {
            min_pvalue = 0.0;
        } else if (cells > 1) {
            boost::math::chi_squared dist(cells - 1);
            min_pvalue = std::min(min_pvalue, boost::math::cdf(boost::math::complement(dist, stat)));
        }
    }
    bool ok = worst <= 1e-10 && min_pvalue > 1e-3;
    return {ok, fmt("100 circuits (%.0f IFRB, %.0f IB), max error %.3g (tol 1e-10); ", ifrb, ib, worst) +
                    fmt("chi-square on 5 circuits, 1e5 draws each, min p-value %.3g (must exceed 1e-3)", min_pvalue)};
}

Outcome ifrb_worked_example() {
    Angle t = Angle::pi_fraction(1, 8);
    // gates Z1Z2, Z2, Z1Z2Z3 in this order; column j of R is gate j
    IqpCircuit c(3, {{{0, 1}, t}, {{1}, t}, {{0, 1, 2}, t}});
    GF2Matrix r(3, 3);
    for (size_t j = 0; j < 3; j++) {
        for (auto q : c.gates()[j].qubits) {
            r.set(q, j, true);
        }
    }
    bool kind_ok = classify(c).kind == SparseKind::IFRB && is_ifrb(r);
    auto sol = solve(r, {0, 0, 1});
    bool solve_ok = sol && *sol == std::vector<uint8_t>{1, 0, 1};
    auto shifted = renormalized_angles(c, OutcomeString::parse("001"));
    bool shift_ok = shifted.size() == 3 && shifted[0] == t.plus_quarter_turns(1) && shifted[1] == t &&
                    shifted[2] == t.plus_quarter_turns(1);
    std::string detail = std::string("classification ") + (kind_ok ? "IFRB" : "wrong") + ", solve(R,001) " +
                         (solve_ok ? "= 101" : "wrong") + ", angle shift " + (shift_ok ? "on gates 1 and 3" : "wrong");
    return {kind_ok && solve_ok && shift_ok, detail};
}

Outcome parity_law() {
    Rng rng(1005);
    double worst = 0.0, worst_planar = 0.0;
    size_t planar = 0;
    for (int t = 0; t < 50; t++) {
        size_t n = 2 + rng() % 7;
        std::vector<GateTerm> gates;
        for (size_t v = 1; v < n; v++) {
            gates.push_back({{static_cast<size_t>(rng() % v), v}, random_angle(rng)});
        }
        size_t extra = rng() % (2 * n);
        for (size_t k = 0; k < extra; k++) {
            size_t a = rng() % n, b = rng() % n;
            if (a != b) {
                gates.push_back({{a, b}, random_angle(rng)});
            }
        }
        IqpCircuit c(n, gates);
        auto oracle = xbasis_table(simulate_statevector(c));
        std::optional<PlanarCircuit> pc;
        if (is_planar_two_body(c)) {
            pc.emplace(c);
            planar++;
        }
        for (uint64_t x = 0; x < oracle.size(); x++) {
            auto s = OutcomeString::from_index(x, n);
            if (!s.parity()) {
                continue;
            }
            worst = std::max(worst, oracle[x]);
            if (pc) {
                worst_planar = std::max(worst_planar, planar_joint_probability(*pc, s));
            }
        }
    }
    return {worst <= 1e-12 && worst_planar == 0.0,
            fmt("50 connected instances (%.0f planar), max oracle P over odd s = %.3g (tol 1e-12), planar engine max %.3g",
                planar, worst, worst_planar)};
}

Outcome pfaffian_kernel() {
    auto t0 = Clock::now();
    Rng rng(1006);
    std::normal_distribution<double> g;
    double worst = 0.0;
    bool odd_ok = true;
    for (int t = 0; t < 500; t++) {
        size_t n = 1 + rng() % 40;
        SkewMatrix a(n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                a.set(i, j, {g(rng), g(rng)});
            }
        }
        auto pf = pfaffian(a);
        if (n % 2) {
            odd_ok = odd_ok && pf == std::complex<double>(0.0);
            continue;
        }
        auto det = testoracle::lu_determinant(testoracle::to_rows(a));
        worst = std::max(worst, std::abs(pf * pf - det) / std::abs(det));
    }
    double secs = seconds_since(t0);
    return {worst <= 1e-8 && odd_ok && secs <= 10.0,
            fmt("500 matrices up to 40x40, max relative |Pf^2 - det| = %.3g (tol 1e-8), odd dimension gives 0: ",
                worst) +
                std::string(odd_ok ? "yes" : "no") + fmt(", %.2f s (limit 10 s)", secs)};
}

Outcome planar_partition_agreement() {
    auto t0 = Clock::now();
    Rng rng(1007);
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    std::vector<std::pair<size_t, size_t>> shapes;
    for (size_t r = 1; r <= 4; r++) {
        for (size_t c = std::max<size_t>(r, 2); c <= 4; c++) {
            shapes.push_back({r, c});
        }
    }
    double worst = 0.0;
    size_t with_half_turns = 0;
    for (int t = 0; t < 200; t++) {
        auto [r, c] = shapes[t % shapes.size()];
        auto emb = grid_embedding(r, c);
        int mode = t % 4;
        std::vector<Angle> a;
        for (size_t e = 0; e < emb.edges.size(); e++) {
            bool half = mode == 0 || (mode == 1 && (rng() & 1));
            a.push_back(half ? Angle::pi_fraction(1, 2) : Angle::radians(u(rng)));
        }
        with_half_turns += mode <= 1;
        OutcomeString s = (t % 3 == 0) ? OutcomeString(r * c) : random_bits(rng, r * c);
        auto circuit = grid_circuit(r, c, a);
        auto zb = partition_function_bruteforce(make_ising_instance(circuit_to_graph(circuit), s)).value;
        auto zp = planar_partition_function({emb, a, s});
        worst = std::max(worst, std::abs(zp - zb) / std::max(1.0, std::abs(zb)));
    }
    double secs = seconds_since(t0);
    return {worst <= 1e-8 && secs <= 60.0,
            fmt("200 draws over every grid up to 4x4 (%.0f with pi/2 weights), max relative error %.3g (tol 1e-8), ",
                with_half_turns, worst) +
                fmt("%.2f s (limit 60 s)", secs)};
}

Outcome merged_marginals() {
    Rng rng(1008);
    double worst = 0.0;
    size_t checked = 0, fallback = 0;
    for (int t = 0; t < 100; t++) {
        size_t n = 2 + rng() % 5;
        auto c = random_planar_circuit(rng, n, rng() % (n + 1));
        PlanarCircuit pc(c);
        auto psi = simulate_statevector(c);
        std::vector<uint64_t> adj(n, 0);
        for (const auto &gt : c.gates()) {
            adj[gt.qubits[0]] |= uint64_t{1} << gt.qubits[1];
            adj[gt.qubits[1]] |= uint64_t{1} << gt.qubits[0];
        }
        for (uint64_t set = 1; set < (uint64_t{1} << n); set++) {
            uint64_t reach = set & (~set + 1), frontier = reach;
            while (frontier) {
                uint64_t next = 0;
                for (size_t v = 0; v < n; v++) {
                    if ((frontier >> v) & 1) {
                        next |= adj[v];
                    }
                }
                frontier = next & set & ~reach;
                reach |= frontier;
            }
            if (reach != set) {
                continue;
            }
            std::vector<size_t> m;
            for (size_t v = 0; v < n; v++) {
                if ((set >> v) & 1) {
                    m.push_back(v);
                }
            }
            if (!merge_for_marginal(pc, m, std::vector<uint8_t>(m.size(), 0)).planar) {
                fallback++;
            }
            for (uint64_t bits = 0; bits < (uint64_t{1} << m.size()); bits++) {
                std::vector<uint8_t> v(m.size());
                for (size_t k = 0; k < m.size(); k++) {
                    v[k] = (bits >> k) & 1;
                }
                worst = std::max(worst, std::abs(marginal_probability(pc, m, v) - xbasis_marginal(psi, m, v)));
                checked++;
            }
        }
    }
    return {worst <= 1e-8,
            fmt("100 instances, %.0f (M, s_M) pairs over every connected M, max |merged - oracle| = %.3g (tol 1e-8); ",
                static_cast<double>(checked), worst) +
                fmt("%.0f merged graphs had no planar embedding and were enumerated", static_cast<double>(fallback))};
}

Outcome planar_sampler() {
    PlanarCircuit small(grid_circuit(2, 3, Angle::pi_fraction(1, 8)), grid_embedding(2, 3).rotation);
    auto table = xbasis_table(simulate_statevector(small.circuit()));
    PlanarSampler sampler(small);
    Rng rng(1009);
    const size_t draws = 100000;
    std::vector<double> counts(table.size(), 0.0);
    for (size_t k = 0; k < draws; k++) {
        counts[sampler.sample(rng).to_index()] += 1.0;
    }
    double tv = 0.0;
    for (size_t x = 0; x < table.size(); x++) {
        tv += std::abs(counts[x] / draws - table[x]);
    }
    tv /= 2;
    PlanarCircuit big(grid_circuit(20, 20, Angle::pi_fraction(1, 8)), grid_embedding(20, 20).rotation);
    auto t0 = Clock::now();
    auto s = planar_sample(big, 2024);
    double secs = seconds_since(t0);
    return {tv < 1e-2 && secs < 10.0 && s.size() == 400,
            fmt("2x3 grid TV distance %.4f over 1e5 samples (limit 0.01); one 20x20 sample in %.2f s (limit 10 s)", tv,
                secs)};
}

Outcome error_budget_formulas() {
    double e1 = epsilon_budget(1);
    double exact = (std::numbers::sqrt2 - 1) / (std::numbers::sqrt2 + 1);
    double worst_factor = 0.0;
    for (size_t n = 1; n <= 50; n++) {
        worst_factor = std::max(worst_factor, per_step_error_compose(std::vector<double>(n, epsilon_budget(n))));
    }
    bool ok = std::abs(e1 - exact) <= 1e-12 && worst_factor <= std::numbers::sqrt2 + 1e-12 &&
              gate_norm_error(std::numbers::pi) == 4.0;
    return {ok, fmt("eps(1) - closed form = %.3g, max composed factor n<=50 = %.15f, gate_norm_error(pi) = %.17g",
                    e1 - exact, worst_factor, gate_norm_error(std::numbers::pi))};
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"ising-map equivalence", ising_map_equivalence},
        {"measurement-based equals circuit model", mbiqp_equals_iqp},
        {"sparse fast path", sparse_fast_path},
        {"three-qubit IFRB worked example", ifrb_worked_example},
        {"parity law", parity_law},
        {"pfaffian kernel", pfaffian_kernel},
        {"planar partition function", planar_partition_agreement},
        {"merged-graph marginals", merged_marginals},
        {"planar sampler", planar_sampler},
        {"error budget formulas", error_budget_formulas},
    };
    int failures = 0;
    for (size_t k = 0; k < criteria.size(); k++) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception &e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += !o.passed;
        std::printf("%s [%zu] %s: %s\n", o.passed ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
