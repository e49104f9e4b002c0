#include "gmi/poly_matrix.hpp"

#include "gmi/errors.hpp"

#include <cstdint>
#include <unordered_map>

namespace gmi {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw InvalidArgument("matrix entry count does not match its shape");
    for (const auto& e : entries_) require_same_ring(ring_, e.ring(), "matrix construction");
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial value) {
    if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
    require_same_ring(ring_, value.ring(), "matrix assignment");
    entries_[r * cols_ + c] = std::move(value);
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
    std::vector<Polynomial> out;
    out.reserve(rows.size() * cols.size());
    for (std::size_t r : rows) {
        for (std::size_t c : cols) out.push_back((*this)(r, c));
    }
    return PolyMatrix(ring_, rows.size(), cols.size(), std::move(out));
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    }
    return t;
}

PolyMatrix PolyMatrix::identity(RingPtr ring, std::size_t n) {
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix product");
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    PolyMatrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < b.cols_; ++j) {
            Polynomial acc(a.ring_);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& x = a(i, k);
                const auto& y = b(k, j);
                if (!x.is_zero() && !y.is_zero()) acc += x * y;
            }
            out.entries_[i * out.cols_ + j] = std::move(acc);
        }
    }
    return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_ring(a.ring_, b.ring_, "matrix sum");
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum shape mismatch");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
    return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

// Laplace expansion along successive rows; the determinant of the trailing
// rows restricted to the unused columns depends only on the used-column mask.
class CofactorExpansion {
public:
    explicit CofactorExpansion(const PolyMatrix& m) : m_(m), n_(m.rows()) {}

    Polynomial run() { return det(0, 0); }

private:
    Polynomial det(std::size_t row, std::uint32_t used) {
        if (row == n_) return Polynomial::constant(m_.ring(), 1);
        if (auto it = memo_.find(used); it != memo_.end()) return it->second;
        Polynomial acc(m_.ring());
        int sign = 1;
        for (std::size_t c = 0; c < n_; ++c) {
            if (used & (1u << c)) continue;
            const Polynomial& entry = m_(row, c);
            if (!entry.is_zero()) {
                Polynomial sub = det(row + 1, used | (1u << c));
                if (!sub.is_zero()) {
                    if (sign > 0) {
                        acc += entry * sub;
                    } else {
                        acc -= entry * sub;
                    }
                }
            }
            sign = -sign;
        }
        memo_.emplace(used, acc);
        return acc;
    }

    const PolyMatrix& m_;
    std::size_t n_;
    std::unordered_map<std::uint32_t, Polynomial> memo_;
};

void next_combination_init(std::vector<std::size_t>& idx, std::size_t k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m, std::size_t size_limit) {
    if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
    if (m.rows() > size_limit || m.rows() > 31) {
        throw InvalidArgument("determinant size " + std::to_string(m.rows()) + " exceeds the limit of " +
                              std::to_string(size_limit));
    }
    return CofactorExpansion(m).run();
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, std::size_t size_limit) {
    if (k == 0 || k > m.rows() || k > m.cols()) {
        throw InvalidArgument("minor size " + std::to_string(k) + " out of range for a " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()) + " matrix");
    }
    std::vector<Polynomial> out;
    std::vector<std::size_t> rows;
    next_combination_init(rows, k);
    do {
        std::vector<std::size_t> cols;
        next_combination_init(cols, k);
        do {
            out.push_back(determinant(m.submatrix(rows, cols), size_limit));
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return out;
}

}  // namespace gmi
