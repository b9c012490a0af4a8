#ifndef IQPSIM_GF2_H
#define IQPSIM_GF2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace iqpsim {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class GF2Matrix {
   public:
    GF2Matrix() = default;
    GF2Matrix(size_t rows, size_t cols);

    static GF2Matrix identity(size_t n);
    /// Rows given as strings of '0'/'1', e.g. {"101", "011"}.
    static GF2Matrix from_rows(const std::vector<std::string> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    void set(size_t r, size_t c, bool v);

    /// row[target] ^= row[source]
    void add_row(size_t target, size_t source);
    void swap_rows(size_t a, size_t b);

    std::vector<uint8_t> multiply(const std::vector<uint8_t> &x) const;
    GF2Matrix transposed() const;
    /// Copy with `extra` appended as new columns (each of length rows()).
    GF2Matrix with_columns(const std::vector<std::vector<uint8_t>> &extra) const;

    std::string str() const;

    bool operator==(const GF2Matrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> data_;
};

/// One elementary row operation: a CNOT (row add) or a qubit relabelling (swap).
struct RowOp {
    enum class Kind { Add, Swap };
    Kind kind;
    /// Add: row[a] ^= row[b].  Swap: exchange rows a and b.
    size_t a;
    size_t b;

    bool operator==(const RowOp &other) const = default;
};

using EliminationTrace = std::vector<RowOp>;

size_t rank(const GF2Matrix &m);
bool is_independent_columns(const GF2Matrix &m);
/// rank == number of rows (the V_A dimension).
bool is_full_rank(const GF2Matrix &m);
/// Square with independent columns (and therefore full rank).
bool is_ifrb(const GF2Matrix &m);

struct GaussJordanResult {
    GF2Matrix reduced;
    EliminationTrace trace;
};

/// Reduced row-echelon form. Pivot = first row (from the current one down)
/// with the column bit set; invertible input reduces to the identity.
GaussJordanResult gauss_jordan(const GF2Matrix &m);

GF2Matrix replay(const GF2Matrix &m, const EliminationTrace &trace);

/// Some x with m*x = rhs, free variables set to 0; nullopt when rhs is not in
/// the column space.
std::optional<std::vector<uint8_t>> solve(const GF2Matrix &m, const std::vector<uint8_t> &rhs);

}  // namespace iqpsim

#endif
