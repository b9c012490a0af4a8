#ifndef IQPSIM_ORACLE_H
#define IQPSIM_ORACLE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "iqpsim/circuit.h"

namespace iqpsim {

// Dense statevector reference simulator working from the circuit definition
// (phases on |+>^n, Hadamard-basis readout) without the Ising mapping.

/// Amplitudes over the computational basis; bit k of the index is qubit k.
struct StateVector {
    size_t num_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm_squared() const;
};

constexpr size_t kOracleMaxQubits = 20;

StateVector simulate_statevector(const IqpCircuit &circuit, size_t max_qubits = kOracleMaxQubits);

/// |<+_s|psi>|^2.
double xbasis_probability(const StateVector &state, const OutcomeString &s);

/// Every X-basis outcome probability via one fast Walsh-Hadamard transform.
std::vector<double> xbasis_table(const StateVector &state);

/// Probability that the qubits in `measured` read `values` (same order), the
/// other qubits summed out.
double xbasis_marginal(
    const StateVector &state, const std::vector<size_t> &measured, const std::vector<uint8_t> &values);

/// P_MBIQP(mv, mu): the bipartite graph state on V_A u U_B measured in
/// |+_{m}> on V_A and |theta_{j,m}> on U_B, by dense summation over all
/// 2^{|V_A|+|U_B|} basis states.
double mbiqp_probability(
    const BipartiteInteractionGraph &graph, const OutcomeString &mv, const std::vector<uint8_t> &mu);

/// In-place unnormalized Walsh-Hadamard butterflies on the qubits selected by `mask`.
void walsh_hadamard(std::vector<std::complex<double>> &values, uint64_t mask);

}  // namespace iqpsim

#endif
