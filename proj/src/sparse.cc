#include "iqpsim/sparse.h"

#include <random>
#include <stdexcept>

namespace iqpsim {

namespace {

struct PaddedSystem {
    SparseClassification classification;
    /// Canonical gate order (column k of `matrix` is gate order[k]).
    std::vector<size_t> order;
    GF2Matrix matrix;
};

PaddedSystem build_padded(const IqpCircuit &circuit) {
    PaddedSystem sys;
    sys.order = circuit.canonical_order();
    GF2Matrix r = incidence_matrix(circuit);
    size_t n = circuit.num_qubits();
    size_t g = circuit.gates().size();
    size_t rk = rank(r);
    if (rk != g) {
        sys.classification.kind = SparseKind::General;
        sys.matrix = r;
        return sys;
    }
    if (g == n) {
        sys.classification.kind = SparseKind::IFRB;
        sys.matrix = r;
        return sys;
    }
    // Greedy basis completion with unit columns e_q, lowest qubit first.
    sys.classification.kind = SparseKind::IB;
    GF2Matrix current = r;
    for (size_t q = 0; q < n && current.cols() < n; q++) {
        std::vector<uint8_t> unit(n, 0);
        unit[q] = 1;
        GF2Matrix candidate = current.with_columns({unit});
        if (rank(candidate) == candidate.cols()) {
            current = std::move(candidate);
            sys.classification.padding_qubits.push_back(q);
        }
    }
    sys.classification.padded_gate_count = sys.classification.padding_qubits.size();
    sys.matrix = std::move(current);
    return sys;
}

void require_sparse(const PaddedSystem &sys) {
    if (sys.classification.kind == SparseKind::General) {
        throw std::domain_error("circuit's gate incidence matrix has dependent columns (General class)");
    }
}

std::vector<uint8_t> solve_gate_bits(const PaddedSystem &sys, const OutcomeString &s) {
    auto c = solve(sys.matrix, s.bits());
    if (!c) {
        throw std::domain_error("outcome is outside the column space of the incidence matrix");
    }
    return *c;
}

}  // namespace

const char *sparse_kind_name(SparseKind kind) {
    switch (kind) {
        case SparseKind::IFRB:
            return "IFRB";
        case SparseKind::IB:
            return "IB";
        case SparseKind::General:
            return "general";
    }
    return "general";
}

GF2Matrix incidence_matrix(const IqpCircuit &circuit) {
    auto order = circuit.canonical_order();
    GF2Matrix r(circuit.num_qubits(), order.size());
    for (size_t k = 0; k < order.size(); k++) {
        for (auto q : circuit.gates()[order[k]].qubits) {
            r.set(q, k, true);
        }
    }
    return r;
}

SparseClassification classify(const IqpCircuit &circuit) {
    return build_padded(circuit).classification;
}

std::vector<Angle> renormalized_angles(const IqpCircuit &circuit, const OutcomeString &s) {
    if (s.size() != circuit.num_qubits()) {
        throw std::invalid_argument("outcome length does not match the circuit");
    }
    auto sys = build_padded(circuit);
    require_sparse(sys);
    auto c = solve_gate_bits(sys, s);
    size_t g = circuit.gates().size();
    std::vector<Angle> out(g + sys.classification.padded_gate_count);
    for (size_t k = 0; k < g; k++) {
        size_t j = sys.order[k];
        out[j] = circuit.gates()[j].theta.plus_quarter_turns(c[k]);
    }
    for (size_t k = g; k < out.size(); k++) {
        out[k] = Angle::pi_fraction(0, 1).plus_quarter_turns(c[k]);
    }
    return out;
}

double sparse_probability(const IqpCircuit &circuit, const OutcomeString &s) {
    if (s.size() != circuit.num_qubits()) {
        throw std::invalid_argument("outcome length does not match the circuit");
    }
    auto sys = build_padded(circuit);
    require_sparse(sys);
    auto c = solve_gate_bits(sys, s);
    size_t g = circuit.gates().size();
    double p = 1.0;
    for (size_t k = 0; k < c.size(); k++) {
        Angle base = k < g ? circuit.gates()[sys.order[k]].theta : Angle::pi_fraction(0, 1);
        double cs = base.plus_quarter_turns(c[k]).cos();
        p *= cs * cs;
    }
    return p;
}

SparseSampler::SparseSampler(const IqpCircuit &circuit) {
    auto sys = build_padded(circuit);
    require_sparse(sys);
    matrix_ = std::move(sys.matrix);
    size_t g = circuit.gates().size();
    flip_probability_.assign(matrix_.cols(), 0.0);
    for (size_t k = 0; k < g; k++) {
        double sn = circuit.gates()[sys.order[k]].theta.sin();
        flip_probability_[k] = sn * sn;
    }
}

OutcomeString sparse_sample(const IqpCircuit &circuit, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return SparseSampler(circuit).sample(rng);
}

}  // namespace iqpsim
