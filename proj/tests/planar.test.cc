#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "iqpsim/embedding.h"
#include "iqpsim/ising.h"
#include "iqpsim/lattice.h"
#include "iqpsim/oracle.h"
#include "iqpsim/planar.h"
#include "iqpsim/planar_ising.h"
#include "iqpsim/random_circuits.h"
#include "test_oracles.h"

using namespace iqpsim;
using testoracle::Complex;
using std::numbers::pi;

namespace {

IqpCircuit edges_to_circuit(const PlanarEmbedding &emb, const std::vector<Angle> &couplings) {
    std::vector<GateTerm> gates;
    for (size_t e = 0; e < emb.edges.size(); e++) {
        gates.push_back({{emb.edges[e].u, emb.edges[e].v}, couplings[e]});
    }
    return IqpCircuit(emb.num_vertices, gates);
}

Complex brute_z(const PlanarEmbedding &emb, const std::vector<Angle> &couplings, const OutcomeString &s) {
    return testoracle::naive_partition(edges_to_circuit(emb, couplings), s.bits());
}

double rel(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

PlanarEmbedding embed(size_t n, const std::vector<Edge> &edges) {
    auto emb = find_planar_embedding(n, edges);
    if (!emb) {
        throw std::logic_error("test graph is not planar");
    }
    return *emb;
}

// Wheel on rim 1..5 around hub 0, pendants 6 on rim vertex 1 and 7 on rim vertex 3.
IqpCircuit wheel_with_pendants() {
    std::vector<GateTerm> g;
    Rng rng(40);
    for (size_t k = 1; k <= 5; k++) {
        g.push_back({{0, k}, random_angle(rng)});
        g.push_back({{k, k % 5 + 1}, random_angle(rng)});
    }
    g.push_back({{1, 6}, random_angle(rng)});
    g.push_back({{3, 7}, random_angle(rng)});
    return IqpCircuit(8, g);
}

}  // namespace

TEST(PlanarZ, SingleEdge) {
    PlanarEmbedding emb;
    emb.num_vertices = 2;
    emb.edges = {{0, 1}};
    emb.rotation = {{0}, {0}};
    for (double th : {0.0, 0.3, pi / 2, 2.0}) {
        auto z = planar_zero_field_log(emb, {Angle::radians(th)}).value();
        EXPECT_NEAR(std::abs(z - Complex(4 * std::cos(th))), 0.0, 1e-12);
    }
}

TEST(PlanarZ, FourCycle) {
    auto emb = grid_embedding(2, 2);
    std::vector<Angle> a(4, Angle::pi_fraction(1, 8));
    Complex z = planar_partition_function({emb, a, OutcomeString(4)});
    EXPECT_NEAR(std::abs(brute_z(emb, a, OutcomeString(4)) - Complex(12.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z - Complex(12.0)), 0.0, 1e-12);
}

TEST(PlanarZ, IsolatedVertices) {
    PlanarEmbedding emb;
    emb.num_vertices = 3;
    emb.edges = {{0, 2}};
    emb.rotation = {{0}, {}, {0}};
    auto z = planar_partition_function({emb, {Angle::radians(0.4)}, OutcomeString(3)});
    EXPECT_NEAR(std::abs(z - Complex(8 * std::cos(0.4))), 0.0, 1e-12);
    auto odd = planar_partition_function({emb, {Angle::radians(0.4)}, OutcomeString::parse("010")});
    EXPECT_EQ(odd, Complex(0.0));
}

TEST(PlanarZ, GridsAgainstBruteForce) {
    Rng rng(41);
    std::uniform_real_distribution<double> u(0.0, pi / 2);
    for (size_t r = 1; r <= 4; r++) {
        for (size_t c = 2; c <= 4; c++) {
            auto emb = grid_embedding(r, c);
            for (int t = 0; t < 4; t++) {
                std::vector<Angle> a;
                for (size_t e = 0; e < emb.edges.size(); e++) {
                    a.push_back(t == 0 ? Angle::pi_fraction(1, 2) : Angle::radians(u(rng)));
                }
                OutcomeString s(r * c);
                if (t >= 2) {
                    for (size_t i = 0; i < s.size(); i++) {
                        s.set(i, rng() & 1);
                    }
                }
                Complex ref = brute_z(emb, a, s);
                for (auto m : {PfaffianMethod::Dense, PfaffianMethod::Sparse}) {
                    PlanarOptions o;
                    o.method = m;
                    EXPECT_LE(rel(planar_partition_function({emb, a, s}, o), ref), 1e-8) << r << "x" << c;
                }
            }
        }
    }
}

TEST(PlanarZ, HighDegreeAndParallelEdges) {
    Rng rng(42);
    // star K_{1,6}, wheel W_6, and a doubled edge
    std::vector<std::pair<size_t, std::vector<Edge>>> graphs = {
        {7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}},
        {7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}}},
        {3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}}},
    };
    for (const auto &[n, edges] : graphs) {
        auto emb = embed(n, edges);
        for (int t = 0; t < 5; t++) {
            std::vector<Angle> a;
            for (size_t e = 0; e < edges.size(); e++) {
                a.push_back(random_angle(rng));
            }
            OutcomeString s(n);
            for (size_t i = 0; i < n; i++) {
                s.set(i, rng() & 1);
            }
            EXPECT_LE(rel(planar_partition_function({emb, a, s}), brute_z(emb, a, s)), 1e-8);
        }
    }
}

TEST(PlanarZ, DenseAndSparseAgreeOnLargerGrid) {
    Rng rng(43);
    auto emb = grid_embedding(6, 7);
    std::vector<Angle> a;
    for (size_t e = 0; e < emb.edges.size(); e++) {
        a.push_back(random_angle(rng));
    }
    PlanarOptions dense, sparse;
    dense.method = PfaffianMethod::Dense;
    sparse.method = PfaffianMethod::Sparse;
    auto zd = planar_zero_field_log(emb, a, dense);
    auto zs = planar_zero_field_log(emb, a, sparse);
    EXPECT_NEAR(zd.log_abs, zs.log_abs, 1e-8);
    EXPECT_NEAR(std::abs(zd.phase - zs.phase), 0.0, 1e-8);
}

TEST(PlanarZ, LargeGridStaysFinite) {
    auto emb = grid_embedding(30, 30);
    auto z = planar_zero_field_log(emb, std::vector<Angle>(emb.edges.size(), Angle::pi_fraction(1, 8)));
    EXPECT_TRUE(std::isfinite(z.log_abs));
    EXPECT_LE(z.log_abs, 900 * std::log(2.0) + 1e-9);
}

TEST(PlanarZ, RejectsBadInput) {
    auto emb = grid_embedding(2, 2);
    EXPECT_THROW(planar_zero_field_log(emb, {Angle()}), std::invalid_argument);
    PlanarEmbedding k4;
    k4.num_vertices = 4;
    k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    k4.rotation = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    EXPECT_THROW(planar_zero_field_log(k4, std::vector<Angle>(6)), std::invalid_argument);
}

TEST(Renormalization, Examples) {
    PlanarEmbedding emb;
    emb.num_vertices = 2;
    emb.edges = {{0, 1}};
    emb.rotation = {{0}, {0}};
    Angle th = Angle::radians(0.7);
    auto zero = path_renormalize(emb, {th}, OutcomeString(2));
    EXPECT_TRUE(zero.admissible);
    EXPECT_EQ(zero.couplings[0], th);
    EXPECT_TRUE(zero.flipped_edges.empty());
    auto both = path_renormalize(emb, {th}, OutcomeString::parse("11"));
    EXPECT_TRUE(both.admissible);
    EXPECT_EQ(both.couplings[0], th.plus_quarter_turns(1));
    EXPECT_EQ(both.flipped_edges, (std::vector<size_t>{0}));
    EXPECT_FALSE(path_renormalize(emb, {th}, OutcomeString::parse("10")).admissible);
    EXPECT_FALSE(parity_admissible(emb, OutcomeString::parse("10")));
    EXPECT_TRUE(parity_admissible(emb, OutcomeString::parse("11")));
    EXPECT_TRUE(parity_admissible(emb, OutcomeString(2)));
}

TEST(Renormalization, FieldEqualsShiftedZeroField) {
    Rng rng(44);
    auto emb = grid_embedding(3, 3);
    for (int t = 0; t < 20; t++) {
        std::vector<Angle> a;
        for (size_t e = 0; e < emb.edges.size(); e++) {
            a.push_back(random_angle(rng));
        }
        OutcomeString s(9);
        for (size_t i = 0; i < 9; i++) {
            s.set(i, rng() & 1);
        }
        if (s.parity()) {
            s.set(4, !s[4]);
        }
        auto ren = path_renormalize(emb, a, s);
        ASSERT_TRUE(ren.admissible);
        Complex phase = std::pow(Complex(0.0, -1.0), static_cast<double>(ren.flipped_edges.size()));
        EXPECT_LE(rel(phase * brute_z(emb, ren.couplings, OutcomeString(9)), brute_z(emb, a, s)), 1e-10);
        auto c = edges_to_circuit(emb, a);
        auto shifted = edges_to_circuit(emb, ren.couplings);
        EXPECT_NEAR(joint_probability(c, s), joint_probability(shifted, OutcomeString(9)), 1e-12);
    }
}

TEST(Renormalization, PathChoiceDoesNotMatter) {
    // 2x2 grid: vertices 0 and 3 joined through 1 or through 2
    auto emb = grid_embedding(2, 2);
    Rng rng(45);
    for (int t = 0; t < 10; t++) {
        std::vector<Angle> a;
        for (size_t e = 0; e < 4; e++) {
            a.push_back(random_angle(rng));
        }
        auto s = OutcomeString::parse("1001");
        Complex ref = brute_z(emb, a, s);
        auto via = [&](size_t mid) {
            auto b = a;
            for (size_t e = 0; e < 4; e++) {
                const auto &ed = emb.edges[e];
                bool on_path = (ed.u == mid || ed.v == mid);
                if (on_path) {
                    b[e] = b[e].plus_quarter_turns(1);
                }
            }
            return -brute_z(emb, b, OutcomeString(4));
        };
        EXPECT_LE(rel(via(1), ref), 1e-10);
        EXPECT_LE(rel(via(2), ref), 1e-10);
    }
}

TEST(PlanarCircuit, RejectsUnsupportedCircuits) {
    EXPECT_THROW(PlanarCircuit(IqpCircuit(3, {{{0, 1, 2}, Angle()}})), std::invalid_argument);
    EXPECT_THROW(PlanarCircuit(IqpCircuit(2, {{{0}, Angle()}})), std::invalid_argument);
    std::vector<GateTerm> k5;
    for (size_t a = 0; a < 5; a++) {
        for (size_t b = a + 1; b < 5; b++) {
            k5.push_back({{a, b}, Angle::radians(0.1)});
        }
    }
    EXPECT_FALSE(is_planar_two_body(IqpCircuit(5, k5)));
    EXPECT_THROW(PlanarCircuit(IqpCircuit(5, k5)), std::domain_error);
    EXPECT_TRUE(is_planar_two_body(grid_circuit(3, 3, Angle::pi_fraction(1, 8))));
}

TEST(PlanarCircuit, ParityLaw) {
    Rng rng(46);
    for (int t = 0; t < 30; t++) {
        size_t n = 2 + rng() % 7;
        auto c = random_planar_circuit(rng, n, rng() % n);
        PlanarCircuit pc(c);
        auto table = xbasis_table(simulate_statevector(c));
        for (uint64_t x = 0; x < table.size(); x++) {
            auto s = OutcomeString::from_index(x, n);
            EXPECT_EQ(parity_admissible(pc, s), !s.parity());
            double p = planar_joint_probability(pc, s);
            if (s.parity()) {
                EXPECT_EQ(p, 0.0);
                EXPECT_LE(table[x], 1e-12);
            } else {
                EXPECT_NEAR(p, table[x], 1e-10);
            }
        }
    }
}

TEST(Marginal, EmptyAndFullSets) {
    Rng rng(47);
    auto c = random_planar_circuit(rng, 5, 3);
    PlanarCircuit pc(c);
    EXPECT_NEAR(marginal_probability(pc, {}, {}), 1.0, 1e-12);
    auto full = merge_for_marginal(pc, {0, 1, 2, 3, 4}, {1, 1, 0, 0, 0});
    EXPECT_TRUE(full.boundary.empty());
    EXPECT_EQ(full.model.embedding.num_vertices, 10u);
    for (uint64_t x = 0; x < 32; x++) {
        auto s = OutcomeString::from_index(x, 5);
        EXPECT_NEAR(marginal_probability(pc, {0, 1, 2, 3, 4}, s.bits()), joint_probability(c, s), 1e-10);
    }
}

TEST(Marginal, SingleEdge) {
    for (double th : {0.3, pi / 4, 1.2}) {
        PlanarCircuit pc(IqpCircuit(2, {{{0, 1}, Angle::radians(th)}}));
        EXPECT_NEAR(marginal_probability(pc, {0}, {0}), std::pow(std::cos(th), 2), 1e-12);
        EXPECT_NEAR(marginal_probability(pc, {0}, {1}), std::pow(std::sin(th), 2), 1e-12);
    }
    PlanarCircuit quarter(IqpCircuit(2, {{{0, 1}, Angle::pi_fraction(1, 4)}}));
    EXPECT_NEAR(marginal_probability(quarter, {0}, {0}), 0.5, 1e-12);
}

TEST(Marginal, MergedGraphShape) {
    PlanarCircuit pc(grid_circuit(2, 2, Angle::pi_fraction(1, 8)), grid_embedding(2, 2).rotation);
    auto m = merge_for_marginal(pc, {0}, {1});
    EXPECT_EQ(m.measured, (std::vector<size_t>{0}));
    EXPECT_EQ(m.boundary, (std::vector<size_t>{1, 2}));
    EXPECT_EQ(m.gate_count, 2u);
    EXPECT_EQ(m.model.embedding.num_vertices, 4u);
    EXPECT_EQ(m.model.embedding.edges.size(), 4u);
    EXPECT_TRUE(m.planar);
    EXPECT_TRUE(is_planar_embedding(m.model.embedding));
    auto psi = simulate_statevector(pc.circuit());
    EXPECT_NEAR(marginal_probability(pc, {0}, {1}), xbasis_marginal(psi, {0}, {1}), 1e-12);
    EXPECT_THROW(merge_for_marginal(pc, {0, 0}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(merge_for_marginal(pc, {4}, {0}), std::invalid_argument);
}

TEST(Marginal, PrefactorIsTwoToMinusTwiceMeasuredMinusBoundary) {
    Rng rng(48);
    for (int t = 0; t < 20; t++) {
        auto c = random_planar_circuit(rng, 6, 4);
        PlanarCircuit pc(c);
        auto order = measurement_order(pc);
        std::vector<size_t> m(order.begin(), order.begin() + 3);
        std::vector<uint8_t> v = {static_cast<uint8_t>(rng() & 1), static_cast<uint8_t>(rng() & 1),
                                  static_cast<uint8_t>(rng() & 1)};
        auto merged = merge_for_marginal(pc, m, v);
        Complex z = testoracle::naive_partition(
            edges_to_circuit(merged.model.embedding, merged.model.couplings), merged.model.field_bits.bits());
        double expect = std::ldexp(std::abs(z), -static_cast<int>(2 * m.size() + merged.boundary.size()));
        double oracle = xbasis_marginal(simulate_statevector(c), m, v);
        EXPECT_NEAR(expect, oracle, 1e-12);
        EXPECT_NEAR(marginal_probability(pc, m, v), oracle, 1e-10);
    }
}

TEST(Marginal, ThreeByThreeGridFourConnected) {
    PlanarCircuit pc(grid_circuit(3, 3, Angle::pi_fraction(1, 8)), grid_embedding(3, 3).rotation);
    auto psi = simulate_statevector(pc.circuit());
    Rng rng(49);
    for (const auto &m : {std::vector<size_t>{0, 1, 3, 4}, {1, 4, 7, 8}, {3, 4, 5, 2}}) {
        std::vector<uint8_t> v(4);
        for (auto &b : v) {
            b = rng() & 1;
        }
        EXPECT_NEAR(marginal_probability(pc, m, v), xbasis_marginal(psi, m, v), 1e-8);
    }
}

TEST(Marginal, MergedParityIsEvenWhenGlued) {
    Rng rng(50);
    for (int t = 0; t < 30; t++) {
        size_t n = 2 + rng() % 5;
        PlanarCircuit pc(random_planar_circuit(rng, n, rng() % n));
        auto order = measurement_order(pc);
        size_t k = 1 + rng() % n;
        std::vector<size_t> m(order.begin(), order.begin() + k);
        std::vector<uint8_t> v(k);
        for (auto &b : v) {
            b = rng() & 1;
        }
        auto merged = merge_for_marginal(pc, m, v);
        if (!merged.boundary.empty()) {
            EXPECT_TRUE(parity_admissible(merged.model.embedding, merged.model.field_bits));
        }
    }
}

TEST(Marginal, BfsPrefixesOfGridsGluePlanar) {
    for (auto [r, c] : {std::pair<size_t, size_t>{3, 3}, {4, 4}, {3, 5}}) {
        PlanarCircuit pc(grid_circuit(r, c, Angle::pi_fraction(1, 8)), grid_embedding(r, c).rotation);
        auto order = measurement_order(pc);
        std::vector<size_t> m;
        for (auto q : order) {
            m.push_back(q);
            auto merged = merge_for_marginal(pc, m, std::vector<uint8_t>(m.size(), 0));
            EXPECT_TRUE(merged.planar);
            EXPECT_TRUE(is_planar_embedding(merged.model.embedding));
        }
    }
}

TEST(Marginal, NonPlanarMergedGraphFallsBackToEnumeration) {
    auto c = wheel_with_pendants();
    PlanarCircuit pc(c);
    std::vector<size_t> rim = {1, 2, 3, 4, 5};
    std::vector<uint8_t> v = {1, 0, 0, 1, 1};
    auto merged = merge_for_marginal(pc, rim, v);
    EXPECT_FALSE(merged.planar);
    EXPECT_NEAR(marginal_probability(pc, rim, v), xbasis_marginal(simulate_statevector(c), rim, v), 1e-10);
    PlanarOptions tight;
    tight.brute_force_sites = 4;
    EXPECT_THROW(marginal_probability(pc, rim, v, tight), std::domain_error);
}

TEST(Marginal, ChainRuleGivesJoint) {
    Rng rng(51);
    for (int t = 0; t < 10; t++) {
        size_t n = 3 + rng() % 4;
        auto c = random_planar_circuit(rng, n, rng() % n);
        PlanarCircuit pc(c);
        auto order = measurement_order(pc);
        for (uint64_t x = 0; x < (uint64_t{1} << n); x += 3) {
            auto s = OutcomeString::from_index(x, n);
            double product = 1.0, prev = 1.0;
            std::vector<size_t> m;
            std::vector<uint8_t> v;
            for (auto q : order) {
                m.push_back(q);
                v.push_back(s[q]);
                double cur = marginal_probability(pc, m, v);
                product *= prev > 0 ? cur / prev : 0.0;
                prev = cur;
            }
            EXPECT_NEAR(product, joint_probability(c, s), 1e-8);
        }
    }
}

TEST(MeasurementOrder, BreadthFirst) {
    PlanarCircuit pc(grid_circuit(2, 3, Angle::pi_fraction(1, 8)), grid_embedding(2, 3).rotation);
    EXPECT_EQ(measurement_order(pc), (std::vector<size_t>{0, 1, 3, 2, 4, 5}));
}

TEST(PlanarSampler, DeterministicCases) {
    Rng rng(52);
    PlanarSampler zero(PlanarCircuit(grid_circuit(2, 3, Angle::pi_fraction(0, 1))));
    for (int k = 0; k < 20; k++) {
        EXPECT_EQ(zero.sample(rng), OutcomeString(6));
    }
    PlanarCircuit g(grid_circuit(2, 2, Angle::radians(0.3)), grid_embedding(2, 2).rotation);
    EXPECT_EQ(planar_sample(g, 99), planar_sample(g, 99));
}

TEST(PlanarSampler, SingleEdgeQuarterTurn) {
    PlanarSampler s(PlanarCircuit(IqpCircuit(2, {{{0, 1}, Angle::pi_fraction(1, 4)}})));
    Rng rng(53);
    const int draws = 20000;
    int ones = 0;
    for (int k = 0; k < draws; k++) {
        auto out = s.sample(rng);
        ASSERT_EQ(out[0], out[1]);
        ones += out[0];
    }
    EXPECT_NEAR(static_cast<double>(ones) / draws, 0.5, 3 * 0.5 / std::sqrt(static_cast<double>(draws)));
}
