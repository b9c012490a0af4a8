#include "iqpsim/oracle.h"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "iqpsim/ising.h"

namespace iqpsim {

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

StateVector simulate_statevector(const IqpCircuit &circuit, size_t max_qubits) {
    size_t n = circuit.num_qubits();
    if (n > max_qubits) {
        throw std::length_error("statevector oracle limited to " + std::to_string(max_qubits) + " qubits");
    }
    size_t dim = size_t{1} << n;
    StateVector state{n, std::vector<std::complex<double>>(dim, 1.0 / std::sqrt(double(dim)))};
    for (auto j : circuit.canonical_order()) {
        uint64_t mask = circuit.gate_mask(j);
        double theta = circuit.gates()[j].theta.value();
        auto even = std::polar(1.0, theta);
        auto odd = std::conj(even);
        for (uint64_t z = 0; z < dim; z++) {
            state.amplitudes[z] *= (std::popcount(z & mask) & 1) ? odd : even;
        }
    }
    return state;
}

void walsh_hadamard(std::vector<std::complex<double>> &values, uint64_t mask) {
    size_t dim = values.size();
    for (size_t h = 1; h < dim; h <<= 1) {
        if (!(mask & h)) {
            continue;
        }
        for (size_t i = 0; i < dim; i += 2 * h) {
            for (size_t k = i; k < i + h; k++) {
                auto a = values[k];
                auto b = values[k + h];
                values[k] = a + b;
                values[k + h] = a - b;
            }
        }
    }
}

double xbasis_probability(const StateVector &state, const OutcomeString &s) {
    if (s.size() != state.num_qubits) {
        throw std::invalid_argument("outcome length does not match the state");
    }
    uint64_t sm = s.to_index();
    std::complex<double> overlap = 0.0;
    for (uint64_t z = 0; z < state.amplitudes.size(); z++) {
        overlap += (std::popcount(sm & z) & 1) ? -state.amplitudes[z] : state.amplitudes[z];
    }
    return checked_probability(std::norm(overlap) / double(state.amplitudes.size()));
}

std::vector<double> xbasis_table(const StateVector &state) {
    auto values = state.amplitudes;
    walsh_hadamard(values, ~uint64_t{0});
    std::vector<double> table(values.size());
    for (size_t s = 0; s < values.size(); s++) {
        table[s] = checked_probability(std::norm(values[s]) / double(values.size()));
    }
    return table;
}

double xbasis_marginal(
    const StateVector &state, const std::vector<size_t> &measured, const std::vector<uint8_t> &values) {
    if (measured.size() != values.size()) {
        throw std::invalid_argument("measured qubits and values differ in length");
    }
    uint64_t mask = 0;
    uint64_t target = 0;
    for (size_t k = 0; k < measured.size(); k++) {
        if (measured[k] >= state.num_qubits) {
            throw std::invalid_argument("measured qubit out of range");
        }
        uint64_t bit = uint64_t{1} << measured[k];
        if (mask & bit) {
            throw std::invalid_argument("measured qubit listed twice");
        }
        mask |= bit;
        if (values[k]) {
            target |= bit;
        }
    }
    // Hadamard on the measured qubits only; the rest are read in the Z basis,
    // which gives the same marginal as any other basis.
    auto amps = state.amplitudes;
    walsh_hadamard(amps, mask);
    double total = 0.0;
    for (uint64_t z = 0; z < amps.size(); z++) {
        if ((z & mask) == target) {
            total += std::norm(amps[z]);
        }
    }
    return checked_probability(std::ldexp(total, -static_cast<int>(measured.size())));
}

double mbiqp_probability(
    const BipartiteInteractionGraph &graph, const OutcomeString &mv, const std::vector<uint8_t> &mu) {
    size_t na = graph.num_va;
    size_t nb = graph.num_ub();
    if (mv.size() != na || mu.size() != nb) {
        throw std::invalid_argument("outcome lengths do not match the graph");
    }
    size_t total_qubits = na + nb;
    if (total_qubits > 26) {
        throw std::length_error("MBIQP oracle limited to 26 graph-state qubits");
    }
    // <theta_{j,0}| = cos(t)<0| + i sin(t)<1|;  m = 1 swaps the two coefficients.
    std::vector<std::array<std::complex<double>, 2>> ub_bra(nb);
    for (size_t j = 0; j < nb; j++) {
        double c = graph.ub_weights[j].cos();
        double s = graph.ub_weights[j].sin();
        std::array<std::complex<double>, 2> b{std::complex<double>(c, 0), std::complex<double>(0, s)};
        if (mu[j]) {
            std::swap(b[0], b[1]);
        }
        ub_bra[j] = b;
    }
    std::vector<uint64_t> ub_masks(nb, 0);
    for (size_t j = 0; j < nb; j++) {
        for (auto v : graph.ub_neighbors[j]) {
            ub_masks[j] |= uint64_t{1} << v;
        }
    }
    uint64_t mv_mask = mv.to_index();
    uint64_t va_dim = uint64_t{1} << na;
    uint64_t ub_dim = uint64_t{1} << nb;
    std::complex<double> amp = 0.0;
    for (uint64_t za = 0; za < va_dim; za++) {
        double va_sign = (std::popcount(za & mv_mask) & 1) ? -1.0 : 1.0;
        for (uint64_t zb = 0; zb < ub_dim; zb++) {
            // <z|G> sign: (-1)^{number of edges with both ends set}.
            int edge_parity = 0;
            std::complex<double> coeff = va_sign;
            for (size_t j = 0; j < nb; j++) {
                int bit = (zb >> j) & 1;
                if (bit) {
                    edge_parity ^= std::popcount(za & ub_masks[j]) & 1;
                }
                coeff *= ub_bra[j][bit];
            }
            amp += edge_parity ? -coeff : coeff;
        }
    }
    // |+_m> projections contribute 2^{-na/2}, the graph state 2^{-(na+nb)/2}.
    double p = std::norm(amp) * std::ldexp(1.0, -static_cast<int>(2 * na + nb));
    return checked_probability(p);
}

}  // namespace iqpsim
