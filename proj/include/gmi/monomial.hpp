#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace gmi {

/// Dense exponent vector with a cached total degree.
class Monomial {
public:
    using Exponent = std::uint16_t;
    using Storage = boost::container::small_vector<Exponent, 32>;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    Monomial(std::initializer_list<unsigned> exps);
    explicit Monomial(std::span<const unsigned> exps);

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
    const Exponent* data() const noexcept { return exps_.data(); }
    bool is_one() const noexcept { return degree_ == 0; }

    void set(std::size_t i, unsigned e);

    /// Bit i set iff variable i (mod 64) occurs; used as a quick divisibility filter.
    std::uint64_t support_mask() const noexcept;

    bool divides(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Exact quotient; requires `b.divides(a)`.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    std::size_t hash() const noexcept;

private:
    Storage exps_;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace gmi
