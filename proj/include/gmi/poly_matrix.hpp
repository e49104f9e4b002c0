#pragma once

#include "gmi/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gmi {

/// Largest square size `determinant` accepts unless told otherwise.
inline constexpr std::size_t kDefaultDeterminantLimit = 6;

/// Dense row-major matrix of polynomials from one ring.
class PolyMatrix {
public:
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
    PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries);

    const RingPtr& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const std::vector<Polynomial>& entries() const noexcept { return entries_; }

    const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
    void set(std::size_t r, std::size_t c, Polynomial value);

    PolyMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
    PolyMatrix transpose() const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    static PolyMatrix identity(RingPtr ring, std::size_t n);

private:
    RingPtr ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> entries_;
};

/// Symbolic determinant by cofactor expansion with memoized minors.
/// Throws InvalidArgument for non-square input or sizes above `size_limit`.
Polynomial determinant(const PolyMatrix& m, std::size_t size_limit = kDefaultDeterminantLimit);

/// All k x k minors, ordered lexicographically by (row set, column set).
/// Zero minors are kept.
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k,
                               std::size_t size_limit = kDefaultDeterminantLimit);

}  // namespace gmi
