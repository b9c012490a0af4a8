#include "iqpsim/pfaffian.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <functional>
#include <queue>
#include <stdexcept>

namespace iqpsim {

LogValue LogValue::from(Complex z) {
    double m = std::abs(z);
    if (m == 0.0) {
        return zero();
    }
    return {std::log(m), z / m};
}

LogValue &LogValue::operator*=(const LogValue &other) {
    if (is_zero() || other.is_zero()) {
        *this = zero();
        return *this;
    }
    log_abs += other.log_abs;
    phase *= other.phase;
    phase /= std::abs(phase);
    return *this;
}

LogValue &LogValue::operator*=(Complex z) {
    return *this *= from(z);
}

Complex LogValue::value() const {
    if (is_zero()) {
        return 0.0;
    }
    return std::exp(log_abs) * phase;
}

Complex SkewMatrix::get(size_t i, size_t j) const {
    if (i == j) {
        return 0.0;
    }
    return i < j ? upper_[index(i, j)] : -upper_[index(j, i)];
}

void SkewMatrix::set(size_t i, size_t j, Complex v) {
    if (i == j) {
        throw std::invalid_argument("skew-symmetric matrices have a zero diagonal");
    }
    if (i < j) {
        upper_[index(i, j)] = v;
    } else {
        upper_[index(j, i)] = -v;
    }
}

LogValue pfaffian_log(const SkewMatrix &a) {
    size_t n = a.dim();
    if (n % 2) {
        return LogValue::zero();
    }
    if (n == 0) {
        return LogValue::one();
    }
    std::vector<Complex> m(n * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m[i * n + j] = a.get(i, j);
        }
    }
    auto at = [&](size_t i, size_t j) -> Complex & { return m[i * n + j]; };

    LogValue result = LogValue::one();
    std::vector<Complex> tau(n);
    for (size_t k = 0; k + 1 < n; k += 2) {
        size_t kp = k + 1;
        double best = std::abs(at(k + 1, k));
        for (size_t i = k + 2; i < n; i++) {
            double v = std::abs(at(i, k));
            if (v > best) {
                best = v;
                kp = i;
            }
        }
        if (best == 0.0) {
            return LogValue::zero();
        }
        if (kp != k + 1 && std::abs(at(k + 1, k)) < 1e-3 * best) {
            for (size_t j = 0; j < n; j++) {
                std::swap(at(k + 1, j), at(kp, j));
            }
            for (size_t i = 0; i < n; i++) {
                std::swap(at(i, k + 1), at(i, kp));
            }
            result.phase = -result.phase;
        }
        Complex pivot = at(k, k + 1);
        result *= pivot;
        if (k + 2 < n) {
            for (size_t i = k + 2; i < n; i++) {
                tau[i] = at(k, i) / pivot;
            }
            for (size_t i = k + 2; i < n; i++) {
                Complex ti = tau[i];
                Complex ci = at(i, k + 1);
                Complex *row = &m[i * n];
                for (size_t j = k + 2; j < n; j++) {
                    row[j] += ti * at(j, k + 1) - ci * tau[j];
                }
            }
        }
    }
    return result;
}

Complex pfaffian(const SkewMatrix &a) {
    return pfaffian_log(a).value();
}

void SparseSkewMatrix::add(size_t i, size_t j, Complex v) {
    if (i == j) {
        throw std::invalid_argument("skew-symmetric matrices have a zero diagonal");
    }
    if (v == Complex(0.0)) {
        return;
    }
    auto bump = [](std::vector<Entry> &row, uint32_t col, Complex dv) {
        for (auto &en : row) {
            if (en.col == col) {
                en.value += dv;
                return;
            }
        }
        row.push_back({col, dv});
    };
    bump(rows_[i], static_cast<uint32_t>(j), v);
    bump(rows_[j], static_cast<uint32_t>(i), -v);
}

Complex SparseSkewMatrix::get(size_t i, size_t j) const {
    for (const auto &en : rows_[i]) {
        if (en.col == j) {
            return en.value;
        }
    }
    return 0.0;
}

SkewMatrix SparseSkewMatrix::to_dense() const {
    SkewMatrix d(dim());
    for (size_t i = 0; i < dim(); i++) {
        for (const auto &en : rows_[i]) {
            if (i < en.col) {
                d.set(i, en.col, en.value);
            }
        }
    }
    return d;
}

int matching_permutation_sign(const std::vector<std::pair<size_t, size_t>> &pairs, size_t dim) {
    if (2 * pairs.size() != dim) {
        throw std::invalid_argument("matching does not cover every index");
    }
    std::vector<size_t> perm;
    perm.reserve(dim);
    for (const auto &[p, q] : pairs) {
        perm.push_back(p);
        perm.push_back(q);
    }
    std::vector<uint8_t> seen(dim, 0);
    int sign = 1;
    for (size_t start = 0; start < dim; start++) {
        if (seen[start]) {
            continue;
        }
        size_t len = 0;
        for (size_t x = start; !seen[x]; x = perm[x]) {
            if (perm[x] >= dim) {
                throw std::invalid_argument("matching index out of range");
            }
            seen[x] = 1;
            len++;
        }
        if (len % 2 == 0) {
            sign = -sign;
        }
    }
    return sign;
}

LogValue sparse_pfaffian_log(SparseSkewMatrix a) {
    using Entry = SparseSkewMatrix::Entry;
    size_t n = a.dim();
    if (n % 2) {
        return LogValue::zero();
    }
    auto &rows = a.rows_;
    using Key = std::pair<size_t, uint32_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> by_degree;
    for (uint32_t i = 0; i < n; i++) {
        by_degree.push({rows[i].size(), i});
    }
    std::vector<uint8_t> alive(n, 1);
    std::vector<uint8_t> in_clique(n, 0);
    std::vector<int64_t> pos(n, -1);
    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(n / 2);
    LogValue result = LogValue::one();

    std::vector<uint32_t> clique;
    std::vector<Complex> col_p, col_q;
    while (pairs.size() < n / 2) {
        auto [degree, p] = by_degree.top();
        by_degree.pop();
        if (!alive[p] || rows[p].size() != degree) {
            continue;
        }
        if (rows[p].empty()) {
            return LogValue::zero();
        }
        double best = 0.0;
        for (const auto &en : rows[p]) {
            best = std::max(best, std::norm(en.value));
        }
        uint32_t q = UINT32_MAX;
        size_t q_degree = SIZE_MAX;
        Complex pivot = 0.0;
        for (const auto &en : rows[p]) {
            size_t d = rows[en.col].size();
            if (std::norm(en.value) >= 0.01 * best && (d < q_degree || (d == q_degree && en.col < q))) {
                q = en.col;
                q_degree = d;
                pivot = en.value;
            }
        }
        pairs.push_back({p, q});
        result *= pivot;

        // col_p[k] = A[i][p] = -A[p][i], likewise for q
        clique.clear();
        col_p.clear();
        col_q.clear();
        for (const auto &en : rows[p]) {
            if (en.col != q) {
                in_clique[en.col] = 1;
                pos[en.col] = static_cast<int64_t>(clique.size());
                clique.push_back(en.col);
                col_p.push_back(-en.value);
                col_q.push_back(0.0);
            }
        }
        for (const auto &en : rows[q]) {
            if (en.col == p) {
                continue;
            }
            if (!in_clique[en.col]) {
                in_clique[en.col] = 1;
                pos[en.col] = static_cast<int64_t>(clique.size());
                clique.push_back(en.col);
                col_p.push_back(0.0);
                col_q.push_back(-en.value);
            } else {
                col_q[pos[en.col]] = -en.value;
            }
        }
        for (auto i : clique) {
            in_clique[i] = 0;
            pos[i] = -1;
        }
        rows[p].clear();
        rows[q].clear();
        alive[p] = alive[q] = 0;

        // Schur complement: A'[i][j] = A[i][j] + (A[i][p] A[q][j] - A[i][q] A[p][j]) / A[p][q]
        Complex inv = 1.0 / pivot;
        for (size_t x = 0; x < clique.size(); x++) {
            auto &row = rows[clique[x]];
            for (size_t k = 0; k < row.size();) {
                if (row[k].col == p || row[k].col == q) {
                    row[k] = row.back();
                    row.pop_back();
                } else {
                    k++;
                }
            }
            for (size_t k = 0; k < row.size(); k++) {
                pos[row[k].col] = static_cast<int64_t>(k);
            }
            bool dropped = false;
            for (size_t y = 0; y < clique.size(); y++) {
                if (y == x) {
                    continue;
                }
                Complex delta = (col_q[x] * col_p[y] - col_p[x] * col_q[y]) * inv;
                if (delta == Complex(0.0)) {
                    continue;
                }
                uint32_t j = clique[y];
                if (pos[j] < 0) {
                    pos[j] = static_cast<int64_t>(row.size());
                    row.push_back({j, delta});
                    continue;
                }
                Entry &en = row[pos[j]];
                Complex updated = en.value + delta;
                if (std::norm(updated) <= 1e-28 * (std::norm(en.value) + std::norm(delta))) {
                    updated = 0.0;
                    dropped = true;
                }
                en.value = updated;
            }
            for (const auto &en : row) {
                pos[en.col] = -1;
            }
            if (dropped) {
                std::erase_if(row, [](const Entry &en) { return en.value == Complex(0.0); });
            }
            by_degree.push({row.size(), clique[x]});
        }
    }
    result.phase *= matching_permutation_sign(pairs, n);
    return result;
}

}  // namespace iqpsim
