#ifndef IQPSIM_PFAFFIAN_H
#define IQPSIM_PFAFFIAN_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace iqpsim {

using Complex = std::complex<double>;

/// A complex number stored as log-magnitude and unit phase.
struct LogValue {
    double log_abs = -std::numeric_limits<double>::infinity();
    Complex phase = 0.0;

    static LogValue zero() {
        return {};
    }
    static LogValue one() {
        return {0.0, 1.0};
    }
    static LogValue from(Complex z);

    bool is_zero() const {
        return log_abs == -std::numeric_limits<double>::infinity();
    }
    LogValue &operator*=(const LogValue &other);
    LogValue &operator*=(Complex z);
    Complex value() const;
};

/// Dense skew-symmetric matrix holding only the strict upper triangle, so
/// A = -A^T holds by construction.
class SkewMatrix {
   public:
    SkewMatrix() = default;
    explicit SkewMatrix(size_t dim) : dim_(dim), upper_(dim * (dim ? dim - 1 : 0) / 2) {
    }

    size_t dim() const {
        return dim_;
    }
    Complex get(size_t i, size_t j) const;
    /// Sets A[i][j] = v and A[j][i] = -v. Throws on i == j.
    void set(size_t i, size_t j, Complex v);

   private:
    size_t index(size_t i, size_t j) const {
        return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
    }
    size_t dim_ = 0;
    std::vector<Complex> upper_;
};

/// Skew-symmetric tridiagonalization (Parlett-Reid) with partial pivoting:
/// rows/columns k+1 and p are exchanged when |A[k+1][k]| is below 1e-3 of the
/// largest entry of column k. Odd dimension gives 0.
LogValue pfaffian_log(const SkewMatrix &a);
Complex pfaffian(const SkewMatrix &a);

/// Skew-symmetric matrix in adjacency-map form for large sparse Kasteleyn matrices.
class SparseSkewMatrix {
   public:
    explicit SparseSkewMatrix(size_t dim) : rows_(dim) {
    }
    size_t dim() const {
        return rows_.size();
    }
    /// A[i][j] += v, A[j][i] -= v.
    void add(size_t i, size_t j, Complex v);
    Complex get(size_t i, size_t j) const;
    SkewMatrix to_dense() const;

    struct Entry {
        uint32_t col;
        Complex value;
    };

   private:
    friend LogValue sparse_pfaffian_log(SparseSkewMatrix a);
    std::vector<std::vector<Entry>> rows_;
};

/// Pfaffian by pairwise elimination: repeatedly take the live row with the
/// fewest nonzeros, pair it with its largest partner (preferring the
/// lowest-degree partner among entries within 10% of that maximum) and form
/// the Schur complement. Fill-in stays small on planar sparsity patterns.
LogValue sparse_pfaffian_log(SparseSkewMatrix a);

/// Sign of the permutation (p_0 q_0 p_1 q_1 ...) listing a perfect matching.
int matching_permutation_sign(const std::vector<std::pair<size_t, size_t>> &pairs, size_t dim);

}  // namespace iqpsim

#endif
