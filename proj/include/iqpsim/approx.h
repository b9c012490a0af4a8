#ifndef IQPSIM_APPROX_H
#define IQPSIM_APPROX_H

#include <cstddef>
#include <vector>

#include "iqpsim/circuit.h"

namespace iqpsim {

struct ErrorReport {
    /// Smallest c with P/c <= Pap <= c*P on every outcome; +inf when one side
    /// vanishes where the other does not.
    double c = 1.0;
    OutcomeString worst_outcome;
};

/// Values at or below this are treated as exact zeros.
constexpr double kZeroThreshold = 1e-15;

/// Both tables are indexed by OutcomeString::to_index() over `num_qubits`
/// bits. Throws std::invalid_argument when the sizes differ or do not match.
ErrorReport multiplicative_error(const std::vector<double> &p, const std::vector<double> &p_ap, size_t num_qubits);

/// (2^{1/(2n)} - 1) / (2^{1/(2n)} + 1), the per-qubit relative error that keeps
/// the composed factor at sqrt(2). Throws std::invalid_argument for n == 0.
double epsilon_budget(size_t n);

/// prod (1 + e_k) / (1 - e_k). Throws std::invalid_argument unless 0 <= e_k < 1.
double per_step_error_compose(const std::vector<double> &eps);

/// ||I - D(eps, S)||^2 = 2 (1 - cos eps).
double gate_norm_error(double eps);

}  // namespace iqpsim

#endif
