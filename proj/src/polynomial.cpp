#include "gmi/polynomial.hpp"

#include "gmi/errors.hpp"

#include <algorithm>

namespace gmi {

namespace {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Merges two grevlex-sorted term lists, computing a + sign * b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (grevlex_greater(a[i].mono, b[j].mono)) {
            out.push_back(a[i++]);
        } else if (grevlex_greater(b[j].mono, a[i].mono)) {
            out.push_back(subtract ? Term{-b[j].coef, b[j].mono} : b[j]);
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (c != 0) out.push_back(Term{std::move(c), a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(subtract ? Term{-b[j].coef, b[j].mono} : b[j]);
    return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw InvalidArgument("polynomial requires a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms, bool) : ring_(std::move(ring)), terms_(std::move(terms)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : Polynomial(std::move(ring)) {
    for (const auto& t : terms) {
        if (t.mono.size() != ring_->size()) throw InvalidArgument("monomial length does not match ring");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.mono, b.mono); });
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coef += t.coef;
        } else {
            if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
            terms_.push_back(std::move(t));
        }
    }
    if (!terms_.empty() && terms_.back().coef == 0) terms_.pop_back();
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    std::size_t n = ring->size();
    std::vector<Term> terms;
    if (c != 0) terms.push_back(Term{c, Monomial(n)});
    return Polynomial(std::move(ring), std::move(terms), true);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw InvalidArgument("variable index out of range");
    std::size_t n = ring->size();
    return Polynomial(std::move(ring), {Term{Rational(1), Monomial::variable(n, index)}}, true);
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw InvalidArgument("unknown variable: " + std::string(name));
    return variable(std::move(ring), *idx);
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

int Polynomial::degree() const noexcept { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }

int Polynomial::degree_in(std::size_t var) const {
    if (var >= ring_->size()) throw InvalidArgument("variable index out of range");
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_) {
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
}

bool Polynomial::uses_variable(std::size_t var) const { return degree_in(var) > 0; }

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    return terms_.front();
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading term");
    const Term* best = &terms_.front();
    for (const auto& t : terms_) {
        if (order.greater(t.mono, best->mono)) best = &t;
    }
    return *best;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->size()) throw InvalidArgument("evaluation point has wrong length");
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational v = t.coef;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Integer den_lcm = 1;
    for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    Integer content = 0;
    std::vector<Integer> ints;
    ints.reserve(terms_.size());
    for (const auto& t : terms_) {
        ints.push_back(t.coef.get_num() * (den_lcm / t.coef.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    if (ints.front() < 0) content = -content;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) out.push_back(Term{Rational(Integer(ints[i] / content)), terms_[i].mono});
    return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    Rational inv = 1 / terms_.front().coef;
    return *this * inv;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

void Polynomial::check_ring(const Polynomial& other, const char* what) const { require_same_ring(ring_, other.ring_, what); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_ring(other, "polynomial addition");
    terms_ = merge(terms_, other.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_ring(other, "polynomial subtraction");
    terms_ = merge(terms_, other.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b, "polynomial multiplication");
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    // Multiply the shorter operand term by term into the longer one and merge,
    // which keeps each partial product sorted.
    const Polynomial& big = a.num_terms() >= b.num_terms() ? a : b;
    const Polynomial& small = a.num_terms() >= b.num_terms() ? b : a;
    std::vector<Term> acc;
    for (const auto& s : small.terms_) {
        std::vector<Term> row;
        row.reserve(big.terms_.size());
        for (const auto& t : big.terms_) row.push_back(Term{s.coef * t.coef, s.mono * t.mono});
        acc = merge(acc, row, false);
    }
    return Polynomial(a.ring_, std::move(acc), true);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].coef != b.terms_[i].coef || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = t.coef < 0;
        Rational mag = abs(t.coef);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            unsigned e = t.mono[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->name(i);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += gmi::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += gmi::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

Polynomial Polynomial::remap(RingPtr target, std::span<const std::size_t> var_map) const {
    if (var_map.size() != ring_->size()) throw InvalidArgument("variable map has wrong length");
    std::size_t n = target->size();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(n);
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (var_map[i] == npos || var_map[i] >= n) {
                throw InvalidArgument("variable " + ring_->name(i) + " has no image in the target ring");
            }
            m.set(var_map[i], m[var_map[i]] + t.mono[i]);
        }
        out.push_back(Term{t.coef, std::move(m)});
    }
    return Polynomial(std::move(target), std::move(out));
}

}  // namespace gmi
