#include "iqpsim/ising.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace iqpsim {

namespace {

constexpr size_t kBlock = 256;

std::complex<double> pairwise_sum(std::vector<std::complex<double>> values) {
    if (values.empty()) {
        return 0.0;
    }
    while (values.size() > 1) {
        size_t half = (values.size() + 1) / 2;
        for (size_t k = 0; k < values.size() / 2; k++) {
            values[k] = values[2 * k] + values[2 * k + 1];
        }
        if (values.size() % 2) {
            values[half - 1] = values.back();
        }
        values.resize(half);
    }
    return values[0];
}

/// Terms sorted by (spins, coupling).
std::vector<IsingInstance::Term> canonical_terms(const IsingInstance &inst) {
    auto terms = inst.terms;
    for (auto &t : terms) {
        std::sort(t.spins.begin(), t.spins.end());
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) {
        if (a.spins != b.spins) {
            return a.spins < b.spins;
        }
        return angle_less(a.coupling, b.coupling);
    });
    return terms;
}

}  // namespace

IsingInstance make_ising_instance(const BipartiteInteractionGraph &graph, const OutcomeString &s) {
    if (s.size() != graph.num_va) {
        throw std::invalid_argument("field bits must have one entry per V_A vertex");
    }
    IsingInstance inst;
    inst.sites = graph.num_va;
    inst.field_bits = s;
    for (size_t j = 0; j < graph.num_ub(); j++) {
        inst.terms.push_back({graph.ub_neighbors[j], graph.ub_weights[j]});
    }
    return inst;
}

PartitionValue partition_function_bruteforce(const IsingInstance &inst, const BruteForceLimits &limits) {
    if (inst.sites > limits.max_sites) {
        throw std::length_error(
            "brute-force partition function limited to " + std::to_string(limits.max_sites) + " sites");
    }
    if (inst.field_bits.size() != inst.sites) {
        throw std::invalid_argument("field bits must have one entry per site");
    }
    auto terms = canonical_terms(inst);
    std::vector<std::vector<size_t>> terms_of_site(inst.sites);
    for (size_t j = 0; j < terms.size(); j++) {
        for (auto k : terms[j].spins) {
            if (k >= inst.sites) {
                throw std::invalid_argument("term touches a site out of range");
            }
            terms_of_site[k].push_back(j);
        }
    }

    // Start from sigma = +1 everywhere: every term has sign +1, no field phase.
    std::vector<int> sign(terms.size(), 1);
    double coupling_phase = 0.0;
    for (const auto &t : terms) {
        coupling_phase += t.coupling.value();
    }
    std::vector<int8_t> down(inst.sites, 0);
    int field_flips = 0;

    uint64_t total = uint64_t{1} << inst.sites;
    std::vector<std::complex<double>> blocks;
    blocks.reserve(total / kBlock + 1);
    std::complex<double> acc = 0.0;
    for (uint64_t step = 0; step < total; step++) {
        if (step > 0) {
            size_t k = static_cast<size_t>(std::countr_zero(step));
            down[k] ^= 1;
            if (inst.field_bits[k]) {
                field_flips += down[k] ? 1 : -1;
            }
            for (auto j : terms_of_site[k]) {
                coupling_phase -= 2.0 * sign[j] * terms[j].coupling.value();
                sign[j] = -sign[j];
            }
        }
        std::complex<double> w = std::polar(1.0, coupling_phase);
        acc += (field_flips & 1) ? -w : w;
        if ((step + 1) % kBlock == 0) {
            blocks.push_back(acc);
            acc = 0.0;
        }
    }
    if (total % kBlock) {
        blocks.push_back(acc);
    }
    return {pairwise_sum(std::move(blocks))};
}

double checked_probability(double p) {
    if (std::isnan(p) || p < -1e-12 || p > 1.0 + 1e-12) {
        throw std::logic_error("probability outside [0, 1]: " + std::to_string(p));
    }
    return std::clamp(p, 0.0, 1.0);
}

double joint_probability(const IqpCircuit &circuit, const OutcomeString &s, const BruteForceLimits &limits) {
    auto inst = make_ising_instance(circuit_to_graph(circuit), s);
    auto z = partition_function_bruteforce(inst, limits).value;
    double scale = std::ldexp(1.0, -2 * static_cast<int>(circuit.num_qubits()));
    return checked_probability(scale * std::norm(z));
}

std::vector<double> probability_table(const IqpCircuit &circuit, const BruteForceLimits &limits) {
    size_t n = circuit.num_qubits();
    if (n > limits.max_table_qubits) {
        throw std::length_error(
            "probability table limited to " + std::to_string(limits.max_table_qubits) + " qubits");
    }
    // Z(s) = sum_sigma (-1)^{s . sigmabar} exp(i sum_j theta_j prod sigma): a
    // Walsh-Hadamard transform of the field-free Boltzmann weights.
    auto order = circuit.canonical_order();
    std::vector<uint64_t> masks;
    std::vector<double> thetas;
    for (auto j : order) {
        masks.push_back(circuit.gate_mask(j));
        thetas.push_back(circuit.gates()[j].theta.value());
    }
    size_t dim = size_t{1} << n;
    std::vector<std::complex<double>> z(dim);
    for (uint64_t sigma_bar = 0; sigma_bar < dim; sigma_bar++) {
        double phase = 0.0;
        for (size_t j = 0; j < masks.size(); j++) {
            phase += (std::popcount(sigma_bar & masks[j]) & 1) ? -thetas[j] : thetas[j];
        }
        z[sigma_bar] = std::polar(1.0, phase);
    }
    for (size_t h = 1; h < dim; h <<= 1) {
        for (size_t i = 0; i < dim; i += 2 * h) {
            for (size_t k = i; k < i + h; k++) {
                auto a = z[k];
                auto b = z[k + h];
                z[k] = a + b;
                z[k + h] = a - b;
            }
        }
    }
    double scale = std::ldexp(1.0, -2 * static_cast<int>(n));
    std::vector<double> table(dim);
    for (size_t s = 0; s < dim; s++) {
        table[s] = checked_probability(scale * std::norm(z[s]));
    }
    return table;
}

}  // namespace iqpsim
