#pragma once

#include "gmi/monomial.hpp"
#include "gmi/monomial_order.hpp"
#include "gmi/rational.hpp"
#include "gmi/ring.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gmi {

struct Term {
    Rational coef;
    Monomial mono;
};

/// Multivariate polynomial over Q.
///
/// Terms are stored without zero coefficients and in strictly decreasing
/// grevlex order, so equal polynomials have identical representations.
class Polynomial {
public:
    /// The zero polynomial of `ring`.
    explicit Polynomial(RingPtr ring);
    /// Builds from arbitrary terms; sorts, merges and drops zeros.
    Polynomial(RingPtr ring, std::vector<Term> terms);

    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial variable(RingPtr ring, std::string_view name);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t num_terms() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;

    /// Total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    /// Largest exponent of variable `var`; -1 for zero.
    int degree_in(std::size_t var) const;
    bool is_homogeneous() const noexcept;
    bool uses_variable(std::size_t var) const;
    /// Leading term in grevlex (the stored order). Requires nonzero.
    const Term& leading_term() const;
    /// Leading term with respect to an arbitrary order. Requires nonzero.
    const Term& leading_term(const MonomialOrder& order) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Content removed, integer coefficients, positive leading coefficient.
    Polynomial primitive_part() const;
    /// Divided by the grevlex leading coefficient.
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    /// Same ring and identical term lists.
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text form, e.g. `2*s_{1,1}^2 - 3/2*s_{1,2} + 1`.
    std::string to_string() const;

    /// Re-expresses this polynomial in `target`, mapping variable i to
    /// `var_map[i]`. Variables mapped to `npos` must not occur.
    Polynomial remap(RingPtr target, std::span<const std::size_t> var_map) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Polynomial(RingPtr ring, std::vector<Term> terms, bool already_canonical);
    void check_ring(const Polynomial& other, const char* what) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

}  // namespace gmi
