#include "iqpsim/random_circuits.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iqpsim/embedding.h"
#include "iqpsim/gf2.h"

namespace iqpsim {

double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Angle random_angle(Rng &rng) {
    if (rng() % 8 == 0) {
        return Angle::pi_fraction(static_cast<int64_t>(rng() % 16), 8);
    }
    return Angle::radians(2.0 * std::numbers::pi * uniform01(rng));
}

IqpCircuit random_circuit(Rng &rng, size_t n, size_t num_gates, size_t max_weight) {
    std::vector<GateTerm> gates;
    std::vector<size_t> qubits(n);
    for (size_t j = 0; j < num_gates; j++) {
        size_t w = 1 + rng() % std::min(max_weight, n);
        for (size_t q = 0; q < n; q++) {
            qubits[q] = q;
        }
        std::shuffle(qubits.begin(), qubits.end(), rng);
        std::vector<size_t> s(qubits.begin(), qubits.begin() + static_cast<std::ptrdiff_t>(w));
        std::sort(s.begin(), s.end());
        gates.push_back({s, random_angle(rng)});
    }
    return IqpCircuit(n, std::move(gates));
}

IqpCircuit random_sparse_circuit(Rng &rng, size_t n, size_t num_gates) {
    num_gates = std::min(num_gates, n);
    std::vector<std::vector<uint8_t>> cols;
    GF2Matrix current(n, 0);
    while (cols.size() < num_gates) {
        std::vector<uint8_t> col(n, 0);
        size_t weight = 0;
        for (size_t q = 0; q < n; q++) {
            col[q] = (rng() % 3 == 0);
            weight += col[q];
        }
        if (weight == 0) {
            continue;
        }
        GF2Matrix candidate = current.with_columns({col});
        if (rank(candidate) == candidate.cols()) {
            current = std::move(candidate);
            cols.push_back(col);
        }
    }
    std::vector<GateTerm> gates;
    for (const auto &col : cols) {
        GateTerm g;
        for (size_t q = 0; q < n; q++) {
            if (col[q]) {
                g.qubits.push_back(q);
            }
        }
        g.theta = random_angle(rng);
        gates.push_back(std::move(g));
    }
    return IqpCircuit(n, std::move(gates));
}

IqpCircuit random_planar_circuit(Rng &rng, size_t n, size_t extra_edges) {
    std::vector<Edge> edges;
    std::vector<size_t> perm(n);
    for (size_t q = 0; q < n; q++) {
        perm[q] = q;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    for (size_t k = 1; k < n; k++) {
        size_t parent = perm[rng() % k];
        edges.push_back({std::min(parent, perm[k]), std::max(parent, perm[k])});
    }
    for (size_t tries = 0; tries < 4 * extra_edges && n >= 3; tries++) {
        if (edges.size() >= n - 1 + extra_edges) {
            break;
        }
        size_t a = rng() % n;
        size_t b = rng() % n;
        if (a == b) {
            continue;
        }
        Edge e{std::min(a, b), std::max(a, b)};
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
            continue;
        }
        edges.push_back(e);
        if (!find_planar_embedding(n, edges)) {
            edges.pop_back();
        }
    }
    std::vector<GateTerm> gates;
    for (const auto &e : edges) {
        gates.push_back({{e.u, e.v}, random_angle(rng)});
    }
    return IqpCircuit(n, std::move(gates));
}

}  // namespace iqpsim
