#include "iqpsim/selftest.h"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "iqpsim/approx.h"
#include "iqpsim/ising.h"
#include "iqpsim/lattice.h"
#include "iqpsim/oracle.h"
#include "iqpsim/planar.h"
#include "iqpsim/random_circuits.h"
#include "iqpsim/sparse.h"

namespace iqpsim {

namespace {

std::string fmt(const char *label, double value) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.3g", label, value);
    return buf;
}

SelfTestResult ising_map() {
    Rng rng(101);
    double worst = 0.0;
    for (int t = 0; t < 30; t++) {
        size_t n = 1 + rng() % 6;
        auto c = random_circuit(rng, n, rng() % (3 * n + 1));
        auto table = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < table.size(); x++) {
            worst = std::max(worst, std::abs(table[x] - joint_probability(c, OutcomeString::from_index(x, n))));
        }
    }
    return {"ising-map", worst <= 1e-10, fmt("max |oracle - 2^-2n |Z|^2| =", worst)};
}

SelfTestResult mbiqp() {
    Rng rng(102);
    double worst = 0.0;
    for (int t = 0; t < 15; t++) {
        size_t n = 1 + rng() % 4;
        auto c = random_circuit(rng, n, 1 + rng() % 4);
        auto g = circuit_to_graph(c);
        OutcomeString mv(n);
        std::vector<uint8_t> mu(g.num_ub());
        for (size_t i = 0; i < n; i++) {
            mv.set(i, rng() & 1);
        }
        for (auto &m : mu) {
            m = rng() & 1;
        }
        double lhs = mbiqp_probability(g, mv, mu);
        double rhs = std::ldexp(joint_probability(c, mbiqp_to_iqp_outcome(mv, mu, g)), -static_cast<int>(g.num_ub()));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return {"mbiqp", worst <= 1e-10, fmt("max |P_MBIQP - 2^-|U_B| P_IQP| =", worst)};
}

SelfTestResult sparse() {
    Rng rng(103);
    double worst = 0.0;
    for (int t = 0; t < 20; t++) {
        size_t n = 1 + rng() % 6;
        auto c = random_sparse_circuit(rng, n, 1 + rng() % n);
        auto table = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < table.size(); x++) {
            worst = std::max(worst, std::abs(table[x] - sparse_probability(c, OutcomeString::from_index(x, n))));
        }
    }
    return {"sparse", worst <= 1e-10, fmt("max |oracle - prod cos^2| =", worst)};
}

SelfTestResult ifrb_example() {
    Angle t = Angle::pi_fraction(1, 8);
    IqpCircuit c(3, {{{0, 1}, t}, {{1}, t}, {{0, 1, 2}, t}});
    bool ok = classify(c).kind == SparseKind::IFRB;
    auto shifted = renormalized_angles(c, OutcomeString::parse("001"));
    ok = ok && shifted.size() == 3 && shifted[0] == t.plus_quarter_turns(1) && shifted[1] == t &&
         shifted[2] == t.plus_quarter_turns(1);
    return {"ifrb-example", ok, ok ? "IFRB, s=001 shifts gates 1 and 3" : "unexpected classification or shift"};
}

SelfTestResult parity(const PlanarOptions &opts) {
    Rng rng(104);
    double worst = 0.0;
    for (int t = 0; t < 10; t++) {
        size_t n = 2 + rng() % 5;
        auto c = random_planar_circuit(rng, n, rng() % n);
        PlanarCircuit pc(c);
        auto table = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < table.size(); x++) {
            auto s = OutcomeString::from_index(x, n);
            if (s.parity()) {
                worst = std::max({worst, table[x], planar_joint_probability(pc, s, opts)});
            }
        }
    }
    return {"parity", worst <= 1e-12, fmt("max odd-parity probability =", worst)};
}

SelfTestResult pfaffian(const PlanarOptions &opts) {
    Rng rng(105);
    double worst = 0.0;
    for (auto [rows, cols] : {std::pair<size_t, size_t>{2, 2}, {2, 3}, {3, 3}}) {
        for (int t = 0; t < 5; t++) {
            std::vector<Angle> a;
            for (size_t e = 0; e < grid_edge_count(rows, cols); e++) {
                a.push_back(t == 0 ? Angle::pi_fraction(1, 2) : random_angle(rng));
            }
            OutcomeString s(rows * cols);
            for (size_t i = 0; i < s.size(); i++) {
                s.set(i, rng() & 1);
            }
            auto c = grid_circuit(rows, cols, a);
            auto zb = partition_function_bruteforce(make_ising_instance(circuit_to_graph(c), s)).value;
            auto zp = planar_partition_function({grid_embedding(rows, cols), a, s}, opts);
            worst = std::max(worst, std::abs(zp - zb) / std::max(1.0, std::abs(zb)));
        }
    }
    return {"pfaffian", worst <= 1e-8, fmt("max relative |Z_pf - Z_brute| =", worst)};
}

SelfTestResult marginal(const PlanarOptions &opts) {
    Rng rng(106);
    double worst = 0.0;
    for (int t = 0; t < 10; t++) {
        size_t n = 2 + rng() % 4;
        auto c = random_planar_circuit(rng, n, rng() % n);
        PlanarCircuit pc(c);
        auto state = simulate_statevector(c);
        auto order = measurement_order(pc);
        std::vector<size_t> m;
        std::vector<uint8_t> v;
        for (auto q : order) {
            m.push_back(q);
            v.push_back(rng() & 1);
            worst = std::max(worst, std::abs(marginal_probability(pc, m, v, opts) - xbasis_marginal(state, m, v)));
        }
    }
    return {"marginal", worst <= 1e-8, fmt("max |merged - oracle| =", worst)};
}

SelfTestResult sampler(const PlanarOptions &opts) {
    PlanarCircuit pc(grid_circuit(2, 2, Angle::pi_fraction(1, 8)), grid_embedding(2, 2).rotation);
    auto table = xbasis_table(simulate_statevector(pc.circuit()));
    PlanarSampler s(pc, opts);
    Rng rng(107);
    const size_t draws = 4000;
    std::vector<double> counts(table.size(), 0.0);
    for (size_t k = 0; k < draws; k++) {
        counts[s.sample(rng).to_index()] += 1.0;
    }
    double tv = 0.0;
    for (size_t x = 0; x < table.size(); x++) {
        tv += std::abs(counts[x] / draws - table[x]);
    }
    tv /= 2.0;
    return {"sampler", tv < 0.05, fmt("TV distance on 2x2 grid =", tv)};
}

SelfTestResult approx() {
    double e1 = epsilon_budget(1);
    double exact = (std::numbers::sqrt2 - 1.0) / (std::numbers::sqrt2 + 1.0);
    bool ok = std::abs(e1 - exact) <= 1e-12 && gate_norm_error(std::numbers::pi) == 4.0;
    for (size_t n = 1; n <= 50; n++) {
        ok = ok && per_step_error_compose(std::vector<double>(n, epsilon_budget(n))) <= std::numbers::sqrt2 + 1e-12;
    }
    return {"approx", ok, ok ? "budget and composition bounds hold" : "formula mismatch"};
}

}  // namespace

std::vector<SelfTestResult> run_selftest(const PlanarOptions &planar) {
    std::vector<SelfTestResult> out;
    std::vector<std::pair<std::string, std::function<SelfTestResult()>>> checks = {
        {"ising-map", ising_map},
        {"mbiqp", mbiqp},
        {"sparse", sparse},
        {"ifrb-example", ifrb_example},
        {"parity", [&] { return parity(planar); }},
        {"pfaffian", [&] { return pfaffian(planar); }},
        {"marginal", [&] { return marginal(planar); }},
        {"sampler", [&] { return sampler(planar); }},
        {"approx", approx},
    };
    for (auto &[name, check] : checks) {
        try {
            out.push_back(check());
        } catch (const std::exception &e) {
            out.push_back({name, false, std::string("threw: ") + e.what()});
        }
    }
    return out;
}

}  // namespace iqpsim
