#include "iqpsim/approx.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace iqpsim {

ErrorReport multiplicative_error(const std::vector<double> &p, const std::vector<double> &p_ap, size_t num_qubits) {
    if (p.size() != p_ap.size()) {
        throw std::invalid_argument("distributions have different sizes");
    }
    if (num_qubits >= 64 || p.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("distribution size does not match 2^n");
    }
    ErrorReport report;
    report.worst_outcome = OutcomeString(num_qubits);
    for (size_t x = 0; x < p.size(); x++) {
        bool zero_p = p[x] <= kZeroThreshold;
        bool zero_ap = p_ap[x] <= kZeroThreshold;
        if (zero_p && zero_ap) {
            continue;
        }
        double ratio = std::numeric_limits<double>::infinity();
        if (!zero_p && !zero_ap) {
            ratio = std::max(p[x] / p_ap[x], p_ap[x] / p[x]);
        }
        if (ratio > report.c) {
            report.c = ratio;
            report.worst_outcome = OutcomeString::from_index(x, num_qubits);
        }
    }
    return report;
}

double epsilon_budget(size_t n) {
    if (n == 0) {
        throw std::invalid_argument("epsilon budget needs n >= 1");
    }
    // 2^{1/(2n)} - 1 without cancellation
    double t = std::expm1(std::log(2.0) / (2.0 * static_cast<double>(n)));
    return t / (t + 2.0);
}

double per_step_error_compose(const std::vector<double> &eps) {
    double factor = 1.0;
    for (double e : eps) {
        if (!(e >= 0.0 && e < 1.0)) {
            throw std::invalid_argument("per-step errors must lie in [0, 1)");
        }
        factor *= (1.0 + e) / (1.0 - e);
    }
    return factor;
}

double gate_norm_error(double eps) {
    return 2.0 * (1.0 - std::cos(eps));
}

}  // namespace iqpsim
