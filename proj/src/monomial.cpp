#include "gmi/monomial.hpp"

#include "gmi/errors.hpp"

#include <algorithm>
#include <limits>

namespace gmi {

namespace {

Monomial::Exponent checked(unsigned e) {
    if (e > std::numeric_limits<Monomial::Exponent>::max()) throw ResourceLimitExceeded("exponent overflow");
    return static_cast<Monomial::Exponent>(e);
}

}  // namespace

Monomial::Monomial(std::initializer_list<unsigned> exps) {
    exps_.reserve(exps.size());
    for (unsigned e : exps) {
        exps_.push_back(checked(e));
        degree_ += e;
    }
}

Monomial::Monomial(std::span<const unsigned> exps) {
    exps_.reserve(exps.size());
    for (unsigned e : exps) {
        exps_.push_back(checked(e));
        degree_ += e;
    }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    degree_ = degree_ - exps_.at(i) + e;
    exps_[i] = checked(e);
}

std::uint64_t Monomial::support_mask() const noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0) mask |= std::uint64_t{1} << (i % 64);
    }
    return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = checked(unsigned{a.exps_[i]} + b.exps_[i]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        r.degree_ += r.exps_[i];
    }
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    }
    return true;
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Exponent e : exps_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace gmi
