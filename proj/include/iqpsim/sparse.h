#ifndef IQPSIM_SPARSE_H
#define IQPSIM_SPARSE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/gf2.h"

namespace iqpsim {

// Exact simulation of circuits whose qubit/gate incidence matrix R has
// independent columns. With R square and invertible (IFRB) the outcome
// s = R c is a bijection onto gate bits c, and P(s) = prod_j cos^2(theta_j + c_j pi/2).
// Independent but short R (IB) is completed to a basis with unit columns
// that stand for theta = 0 single-qubit gates, which leave every probability
// unchanged.

enum class SparseKind { IFRB, IB, General };

const char *sparse_kind_name(SparseKind kind);

struct SparseClassification {
    SparseKind kind = SparseKind::General;
    size_t padded_gate_count = 0;
    /// Qubits that received a theta = 0 single-qubit padding gate.
    std::vector<size_t> padding_qubits;
};

/// |V_A| x |U_B| incidence matrix; columns follow the circuit's canonical gate order.
GF2Matrix incidence_matrix(const IqpCircuit &circuit);

SparseClassification classify(const IqpCircuit &circuit);

/// Angles theta_j + c_j pi/2 with R_padded c = s. The first gates().size()
/// entries line up with circuit.gates(); padding gates follow in the order of
/// SparseClassification::padding_qubits. Throws std::domain_error for General circuits.
std::vector<Angle> renormalized_angles(const IqpCircuit &circuit, const OutcomeString &s);

/// prod cos^2 of the renormalized angles. Throws std::domain_error for General circuits.
double sparse_probability(const IqpCircuit &circuit, const OutcomeString &s);

/// Precomputed sampler: gate bits c_j ~ Bernoulli(sin^2 theta_j), s = R c.
class SparseSampler {
   public:
    /// Throws std::domain_error for General circuits.
    explicit SparseSampler(const IqpCircuit &circuit);

    template <typename Rng>
    OutcomeString sample(Rng &rng) const {
        std::vector<uint8_t> c(flip_probability_.size(), 0);
        for (size_t j = 0; j < c.size(); j++) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            c[j] = u < flip_probability_[j];
        }
        return OutcomeString(matrix_.multiply(c));
    }

   private:
    GF2Matrix matrix_;
    std::vector<double> flip_probability_;
};

/// One sample from a std::mt19937_64 seeded with `seed`.
OutcomeString sparse_sample(const IqpCircuit &circuit, uint64_t seed);

}  // namespace iqpsim

#endif
