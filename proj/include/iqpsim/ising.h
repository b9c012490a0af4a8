#ifndef IQPSIM_ISING_H
#define IQPSIM_ISING_H

#include <complex>
#include <cstddef>
#include <vector>

#include "iqpsim/circuit.h"

namespace iqpsim {

/// Multibody Ising model with imaginary couplings i*theta_j and i*pi/2
/// magnetic fields on the sites whose field bit is set:
///
///   -H = sum_i i*pi*s_i*(1 - sigma_i)/2 + sum_j i*theta_j * prod_{k in N_j} sigma_k
struct IsingInstance {
    struct Term {
        std::vector<size_t> spins;
        Angle coupling;
    };

    size_t sites = 0;
    std::vector<Term> terms;
    OutcomeString field_bits;
};

/// Total conversion from a bipartite graph plus outcome string.
IsingInstance make_ising_instance(const BipartiteInteractionGraph &graph, const OutcomeString &s);

struct PartitionValue {
    std::complex<double> value;
};

struct BruteForceLimits {
    size_t max_sites = 24;
    size_t max_table_qubits = 20;
};

/// Sum over all 2^sites spin configurations, visited in Gray-code order with
/// a fixed pairwise reduction; the result is reproducible bit for bit.
/// Throws std::length_error above `limits.max_sites`.
PartitionValue partition_function_bruteforce(const IsingInstance &inst, const BruteForceLimits &limits = {});

/// 2^{-2n} |Z(s)|^2.
double joint_probability(const IqpCircuit &circuit, const OutcomeString &s, const BruteForceLimits &limits = {});

/// All 2^n joint probabilities, indexed by OutcomeString::to_index().
std::vector<double> probability_table(const IqpCircuit &circuit, const BruteForceLimits &limits = {});

/// Maps 2^{-2n}|Z|^2 into a probability. Values above 1 by at most 1e-12 are
/// clamped; larger overshoots throw std::logic_error.
double checked_probability(double p);

}  // namespace iqpsim

#endif
