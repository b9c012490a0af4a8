#include "iqpsim/circuit.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace iqpsim {

OutcomeString::OutcomeString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (auto &b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("outcome bits must be 0 or 1");
        }
    }
}

OutcomeString OutcomeString::parse(const std::string &text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("outcome string must contain only 0/1: '" + text + "'");
        }
        bits.push_back(c == '1');
    }
    return OutcomeString(std::move(bits));
}

OutcomeString OutcomeString::from_index(uint64_t value, size_t n) {
    OutcomeString s(n);
    for (size_t k = 0; k < n; k++) {
        s.bits_[k] = (value >> k) & 1;
    }
    return s;
}

uint64_t OutcomeString::to_index() const {
    if (bits_.size() > 64) {
        throw std::out_of_range("outcome string too long for an index");
    }
    uint64_t v = 0;
    for (size_t k = 0; k < bits_.size(); k++) {
        v |= static_cast<uint64_t>(bits_[k]) << k;
    }
    return v;
}

bool OutcomeString::parity() const {
    uint8_t p = 0;
    for (auto b : bits_) {
        p ^= b;
    }
    return p;
}

bool OutcomeString::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](uint8_t b) { return b == 0; });
}

std::string OutcomeString::str() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

IqpCircuit::IqpCircuit(size_t num_qubits, std::vector<GateTerm> gates)
    : num_qubits_(num_qubits), gates_(std::move(gates)) {
    if (num_qubits_ == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
    for (size_t j = 0; j < gates_.size(); j++) {
        const auto &q = gates_[j].qubits;
        if (q.empty()) {
            throw std::invalid_argument("gate " + std::to_string(j) + " acts on no qubits");
        }
        std::vector<size_t> sorted = q;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("gate " + std::to_string(j) + " repeats a qubit");
        }
        if (sorted.back() >= num_qubits_) {
            throw std::invalid_argument("gate " + std::to_string(j) + " touches a qubit out of range");
        }
    }
}

std::vector<size_t> IqpCircuit::canonical_order() const {
    std::vector<std::vector<size_t>> keys;
    keys.reserve(gates_.size());
    for (const auto &g : gates_) {
        auto k = g.qubits;
        std::sort(k.begin(), k.end());
        keys.push_back(std::move(k));
    }
    std::vector<size_t> order(gates_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (keys[a] != keys[b]) {
            return keys[a] < keys[b];
        }
        return angle_less(gates_[a].theta, gates_[b].theta);
    });
    return order;
}

uint64_t IqpCircuit::gate_mask(size_t j) const {
    if (num_qubits_ > 64) {
        throw std::out_of_range("gate masks need n <= 64");
    }
    uint64_t m = 0;
    for (auto q : gates_[j].qubits) {
        m |= uint64_t{1} << q;
    }
    return m;
}

bool IqpCircuit::all_two_body() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const GateTerm &g) { return g.qubits.size() == 2; });
}

std::vector<std::vector<size_t>> BipartiteInteractionGraph::va_neighbors() const {
    std::vector<std::vector<size_t>> out(num_va);
    for (size_t j = 0; j < ub_neighbors.size(); j++) {
        for (auto v : ub_neighbors[j]) {
            out[v].push_back(j);
        }
    }
    return out;
}

BipartiteInteractionGraph circuit_to_graph(const IqpCircuit &circuit) {
    BipartiteInteractionGraph g;
    g.num_va = circuit.num_qubits();
    for (const auto &gate : circuit.gates()) {
        g.ub_weights.push_back(gate.theta);
        g.ub_neighbors.push_back(gate.qubits);
    }
    return g;
}

IqpCircuit graph_to_circuit(const BipartiteInteractionGraph &graph) {
    if (graph.ub_weights.size() != graph.ub_neighbors.size()) {
        throw std::invalid_argument("U_B weights and neighbourhoods differ in length");
    }
    std::vector<GateTerm> gates;
    gates.reserve(graph.num_ub());
    for (size_t j = 0; j < graph.num_ub(); j++) {
        gates.push_back({graph.ub_neighbors[j], graph.ub_weights[j]});
    }
    return IqpCircuit(graph.num_va, std::move(gates));
}

namespace {

OutcomeString xor_neighbourhood(
    const OutcomeString &base, const std::vector<uint8_t> &mu, const BipartiteInteractionGraph &graph) {
    if (base.size() != graph.num_va) {
        throw std::invalid_argument("V_A outcome length does not match the graph");
    }
    if (mu.size() != graph.num_ub()) {
        throw std::invalid_argument("U_B outcome length does not match the graph");
    }
    OutcomeString out = base;
    for (size_t j = 0; j < graph.num_ub(); j++) {
        if (mu[j] > 1) {
            throw std::invalid_argument("outcome bits must be 0 or 1");
        }
        if (mu[j]) {
            for (auto v : graph.ub_neighbors[j]) {
                out.set(v, !out[v]);
            }
        }
    }
    return out;
}

}  // namespace

OutcomeString mbiqp_to_iqp_outcome(
    const OutcomeString &mv, const std::vector<uint8_t> &mu, const BipartiteInteractionGraph &graph) {
    return xor_neighbourhood(mv, mu, graph);
}

MbiqpOutcome iqp_to_mbiqp_outcome(
    const OutcomeString &s, const std::vector<uint8_t> &mu, const BipartiteInteractionGraph &graph) {
    return {xor_neighbourhood(s, mu, graph), mu};
}

}  // namespace iqpsim
