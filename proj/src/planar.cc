#include "iqpsim/planar.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "iqpsim/ising.h"

namespace iqpsim {

namespace {

std::vector<Edge> gate_edges(const IqpCircuit &circuit) {
    std::vector<Edge> edges;
    edges.reserve(circuit.gates().size());
    for (size_t j = 0; j < circuit.gates().size(); j++) {
        const auto &q = circuit.gates()[j].qubits;
        if (q.size() != 2) {
            throw std::invalid_argument("gate " + std::to_string(j + 1) + " is not a two-qubit gate");
        }
        edges.push_back({std::min(q[0], q[1]), std::max(q[0], q[1])});
    }
    return edges;
}

}  // namespace

PlanarCircuit::PlanarCircuit(IqpCircuit circuit, std::vector<std::vector<size_t>> rotation)
    : circuit_(std::move(circuit)) {
    auto edges = gate_edges(circuit_);
    if (rotation.empty()) {
        auto found = find_planar_embedding(circuit_.num_qubits(), edges);
        if (!found) {
            throw std::domain_error("interaction graph is not planar");
        }
        embedding_ = std::move(*found);
        return;
    }
    embedding_.num_vertices = circuit_.num_qubits();
    embedding_.edges = std::move(edges);
    embedding_.rotation = std::move(rotation);
    check_rotation_system(embedding_);
    if (!is_planar_embedding(embedding_)) {
        throw std::domain_error("rotation system is not a planar embedding");
    }
}

std::vector<Angle> PlanarCircuit::couplings() const {
    std::vector<Angle> out;
    out.reserve(circuit_.gates().size());
    for (const auto &g : circuit_.gates()) {
        out.push_back(g.theta);
    }
    return out;
}

bool is_planar_two_body(const IqpCircuit &circuit) {
    if (!circuit.all_two_body()) {
        return false;
    }
    return find_planar_embedding(circuit.num_qubits(), gate_edges(circuit)).has_value();
}

bool parity_admissible(const PlanarCircuit &pc, const OutcomeString &s) {
    return parity_admissible(pc.embedding(), s);
}

std::complex<double> planar_partition(const PlanarCircuit &pc, const OutcomeString &s, const PlanarOptions &options) {
    if (s.size() != pc.num_qubits()) {
        throw std::invalid_argument("outcome length does not match the circuit");
    }
    return planar_partition_function({pc.embedding(), pc.couplings(), s}, options);
}

double planar_joint_probability(const PlanarCircuit &pc, const OutcomeString &s, const PlanarOptions &options) {
    if (s.size() != pc.num_qubits()) {
        throw std::invalid_argument("outcome length does not match the circuit");
    }
    LogValue z = planar_partition_log({pc.embedding(), pc.couplings(), s}, options);
    if (z.is_zero()) {
        return 0.0;
    }
    return std::exp(2.0 * z.log_abs - 2.0 * static_cast<double>(pc.num_qubits()) * std::log(2.0));
}

MergedGraph merge_for_marginal(
    const PlanarCircuit &pc, const std::vector<size_t> &measured, const std::vector<uint8_t> &values) {
    size_t n = pc.num_qubits();
    if (measured.size() != values.size()) {
        throw std::invalid_argument("need one value per measured qubit");
    }
    const auto &emb = pc.embedding();
    std::vector<size_t> slot(n, SIZE_MAX);
    for (size_t k = 0; k < measured.size(); k++) {
        if (measured[k] >= n) {
            throw std::invalid_argument("measured qubit out of range");
        }
        if (slot[measured[k]] != SIZE_MAX) {
            throw std::invalid_argument("measured qubit listed twice");
        }
        if (values[k] > 1) {
            throw std::invalid_argument("measured values must be 0 or 1");
        }
        slot[measured[k]] = k;
    }
    auto in_m = [&](size_t q) { return slot[q] != SIZE_MAX; };

    MergedGraph out;
    out.measured = measured;
    std::vector<size_t> merged_id(emb.edges.size(), SIZE_MAX);
    std::vector<size_t> gates;
    for (size_t j = 0; j < emb.edges.size(); j++) {
        if (in_m(emb.edges[j].u) || in_m(emb.edges[j].v)) {
            merged_id[j] = gates.size();
            gates.push_back(j);
        }
    }
    out.gate_count = gates.size();
    std::vector<uint8_t> is_boundary(n, 0);
    for (auto j : gates) {
        for (auto q : {emb.edges[j].u, emb.edges[j].v}) {
            if (!in_m(q)) {
                is_boundary[q] = 1;
            }
        }
    }
    std::vector<size_t> boundary_slot(n, SIZE_MAX);
    for (size_t q = 0; q < n; q++) {
        if (is_boundary[q]) {
            boundary_slot[q] = out.boundary.size();
            out.boundary.push_back(q);
        }
    }
    size_t m = measured.size();
    size_t b = out.boundary.size();
    auto vertex_a = [&](size_t q) { return in_m(q) ? slot[q] : m + boundary_slot[q]; };
    auto vertex_b = [&](size_t q) { return in_m(q) ? m + b + slot[q] : m + boundary_slot[q]; };

    auto &g = out.model.embedding;
    g.num_vertices = 2 * m + b;
    const auto &gate_list = pc.circuit().gates();
    for (auto j : gates) {
        g.edges.push_back({vertex_a(emb.edges[j].u), vertex_a(emb.edges[j].v)});
        out.model.couplings.push_back(gate_list[j].theta);
        out.source_gate.push_back(j);
    }
    for (auto j : gates) {
        g.edges.push_back({vertex_b(emb.edges[j].u), vertex_b(emb.edges[j].v)});
        out.model.couplings.push_back(-gate_list[j].theta);
        out.source_gate.push_back(j);
    }
    size_t h = gates.size();
    g.rotation.resize(g.num_vertices);
    for (size_t k = 0; k < m; k++) {
        const auto &rot = emb.rotation[measured[k]];
        auto &ra = g.rotation[k];
        auto &rb = g.rotation[m + b + k];
        for (auto e : rot) {
            ra.push_back(merged_id[e]);
        }
        for (auto it = rot.rbegin(); it != rot.rend(); ++it) {
            rb.push_back(h + merged_id[*it]);
        }
    }
    for (size_t k = 0; k < b; k++) {
        const auto &rot = emb.rotation[out.boundary[k]];
        size_t d = rot.size();
        size_t start = 0;
        for (size_t i = 0; i < d; i++) {
            if (merged_id[rot[i]] != SIZE_MAX && merged_id[rot[(i + d - 1) % d]] == SIZE_MAX) {
                start = i;
                break;
            }
        }
        std::vector<size_t> kept;
        for (size_t i = 0; i < d; i++) {
            size_t e = rot[(start + i) % d];
            if (merged_id[e] != SIZE_MAX) {
                kept.push_back(merged_id[e]);
            }
        }
        auto &r = g.rotation[m + k];
        for (auto e : kept) {
            r.push_back(e);
        }
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            r.push_back(h + *it);
        }
    }
    out.model.field_bits = OutcomeString(g.num_vertices);
    for (size_t k = 0; k < m; k++) {
        out.model.field_bits.set(k, values[k]);
        out.model.field_bits.set(m + b + k, values[k]);
    }
    if (!is_planar_embedding(g)) {
        out.gluing_was_planar = false;
        auto found = find_planar_embedding(g.num_vertices, g.edges);
        if (found) {
            g = std::move(*found);
        } else {
            out.planar = false;
        }
    }
    return out;
}

double marginal_log_probability(const PlanarCircuit &pc, const std::vector<size_t> &measured,
                                const std::vector<uint8_t> &values, const PlanarOptions &options) {
    if (measured.empty()) {
        return 0.0;
    }
    MergedGraph merged = merge_for_marginal(pc, measured, values);
    LogValue z;
    if (merged.planar) {
        z = planar_partition_log(merged.model, options);
    } else {
        const auto &g = merged.model.embedding;
        if (g.num_vertices > options.brute_force_sites) {
            throw std::domain_error("merged graph is not planar and too large to enumerate");
        }
        IsingInstance inst;
        inst.sites = g.num_vertices;
        inst.field_bits = merged.model.field_bits;
        for (size_t e = 0; e < g.edges.size(); e++) {
            inst.terms.push_back({{g.edges[e].u, g.edges[e].v}, merged.model.couplings[e]});
        }
        BruteForceLimits limits;
        limits.max_sites = options.brute_force_sites;
        z = LogValue::from(partition_function_bruteforce(inst, limits).value);
    }
    if (z.is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    double scale = 2.0 * static_cast<double>(merged.measured.size()) + static_cast<double>(merged.boundary.size());
    return z.log_abs - scale * std::log(2.0);
}

double marginal_probability(const PlanarCircuit &pc, const std::vector<size_t> &measured,
                            const std::vector<uint8_t> &values, const PlanarOptions &options) {
    return std::exp(marginal_log_probability(pc, measured, values, options));
}

std::vector<size_t> measurement_order(const PlanarCircuit &pc) {
    const auto &emb = pc.embedding();
    std::vector<std::vector<size_t>> adj(emb.num_vertices);
    for (const auto &e : emb.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
    }
    std::vector<uint8_t> seen(emb.num_vertices, 0);
    std::vector<size_t> order;
    order.reserve(emb.num_vertices);
    for (size_t root = 0; root < emb.num_vertices; root++) {
        if (seen[root]) {
            continue;
        }
        seen[root] = 1;
        size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            size_t x = order[head++];
            for (auto y : adj[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    order.push_back(y);
                }
            }
        }
    }
    return order;
}

PlanarSampler::PlanarSampler(PlanarCircuit pc, PlanarOptions options)
    : pc_(std::move(pc)), options_(options), order_(measurement_order(pc_)) {
}

OutcomeString planar_sample(const PlanarCircuit &pc, uint64_t seed, const PlanarOptions &options) {
    std::mt19937_64 rng(seed);
    return PlanarSampler(pc, options).sample(rng);
}

}  // namespace iqpsim
