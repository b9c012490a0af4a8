#include "iqpsim/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace iqpsim {

GF2Matrix::GF2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {
}

GF2Matrix GF2Matrix::identity(size_t n) {
    GF2Matrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m.set(k, k, true);
    }
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    GF2Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged GF(2) matrix rows");
        }
        for (size_t c = 0; c < cols; c++) {
            char ch = rows[r][c];
            if (ch != '0' && ch != '1') {
                throw std::invalid_argument("GF(2) entries must be 0 or 1");
            }
            m.set(r, c, ch == '1');
        }
    }
    return m;
}

void GF2Matrix::set(size_t r, size_t c, bool v) {
    uint64_t bit = uint64_t{1} << (c % 64);
    auto &w = data_[r * words_ + c / 64];
    w = v ? (w | bit) : (w & ~bit);
}

void GF2Matrix::add_row(size_t target, size_t source) {
    uint64_t *t = &data_[target * words_];
    const uint64_t *s = &data_[source * words_];
    for (size_t k = 0; k < words_; k++) {
        t[k] ^= s[k];
    }
}

void GF2Matrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t k = 0; k < words_; k++) {
        std::swap(data_[a * words_ + k], data_[b * words_ + k]);
    }
}

std::vector<uint8_t> GF2Matrix::multiply(const std::vector<uint8_t> &x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("GF(2) vector length does not match the column count");
    }
    std::vector<uint64_t> packed(words_, 0);
    for (size_t c = 0; c < cols_; c++) {
        if (x[c] & 1) {
            packed[c / 64] |= uint64_t{1} << (c % 64);
        }
    }
    std::vector<uint8_t> out(rows_, 0);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        for (size_t k = 0; k < words_; k++) {
            acc ^= data_[r * words_ + k] & packed[k];
        }
        out[r] = std::popcount(acc) & 1;
    }
    return out;
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

GF2Matrix GF2Matrix::with_columns(const std::vector<std::vector<uint8_t>> &extra) const {
    GF2Matrix out(rows_, cols_ + extra.size());
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.set(r, c, get(r, c));
        }
    }
    for (size_t k = 0; k < extra.size(); k++) {
        if (extra[k].size() != rows_) {
            throw std::invalid_argument("appended column has the wrong length");
        }
        for (size_t r = 0; r < rows_; r++) {
            out.set(r, cols_ + k, extra[k][r] & 1);
        }
    }
    return out;
}

std::string GF2Matrix::str() const {
    std::string out;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

GaussJordanResult gauss_jordan(const GF2Matrix &m) {
    GaussJordanResult result{m, {}};
    auto &a = result.reduced;
    size_t pivot_row = 0;
    for (size_t c = 0; c < a.cols() && pivot_row < a.rows(); c++) {
        size_t r = pivot_row;
        while (r < a.rows() && !a.get(r, c)) {
            r++;
        }
        if (r == a.rows()) {
            continue;
        }
        if (r != pivot_row) {
            a.swap_rows(r, pivot_row);
            result.trace.push_back({RowOp::Kind::Swap, pivot_row, r});
        }
        for (size_t other = 0; other < a.rows(); other++) {
            if (other != pivot_row && a.get(other, c)) {
                a.add_row(other, pivot_row);
                result.trace.push_back({RowOp::Kind::Add, other, pivot_row});
            }
        }
        pivot_row++;
    }
    return result;
}

GF2Matrix replay(const GF2Matrix &m, const EliminationTrace &trace) {
    GF2Matrix out = m;
    for (const auto &op : trace) {
        if (op.a >= out.rows() || op.b >= out.rows()) {
            throw std::out_of_range("row operation refers to a missing row");
        }
        if (op.kind == RowOp::Kind::Add) {
            out.add_row(op.a, op.b);
        } else {
            out.swap_rows(op.a, op.b);
        }
    }
    return out;
}

size_t rank(const GF2Matrix &m) {
    auto reduced = gauss_jordan(m).reduced;
    size_t r = 0;
    for (size_t row = 0; row < reduced.rows(); row++) {
        for (size_t c = 0; c < reduced.cols(); c++) {
            if (reduced.get(row, c)) {
                r++;
                break;
            }
        }
    }
    return r;
}

bool is_independent_columns(const GF2Matrix &m) {
    return rank(m) == m.cols();
}

bool is_full_rank(const GF2Matrix &m) {
    return rank(m) == m.rows();
}

bool is_ifrb(const GF2Matrix &m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<std::vector<uint8_t>> solve(const GF2Matrix &m, const std::vector<uint8_t> &rhs) {
    if (rhs.size() != m.rows()) {
        throw std::invalid_argument("right-hand side length does not match the row count");
    }
    std::vector<std::vector<uint8_t>> col{rhs};
    auto reduced = gauss_jordan(m.with_columns(col)).reduced;
    size_t n = m.cols();
    std::vector<uint8_t> x(n, 0);
    for (size_t row = 0; row < reduced.rows(); row++) {
        size_t lead = n + 1;
        for (size_t c = 0; c <= n; c++) {
            if (reduced.get(row, c)) {
                lead = c;
                break;
            }
        }
        if (lead == n) {
            return std::nullopt;
        }
        if (lead < n) {
            x[lead] = reduced.get(row, n);
        }
    }
    return x;
}

}  // namespace iqpsim
