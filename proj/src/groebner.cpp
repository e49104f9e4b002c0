#include "gmi/groebner.hpp"

#include "gmi/errors.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <utility>

namespace gmi {

namespace {

// ---------------------------------------------------------------------------
// Integer-coefficient working representation.

struct ZTerm {
    Integer c;
    Monomial m;
};

struct ZPoly {
    std::vector<ZTerm> terms;  // strictly decreasing in the working order
    unsigned sugar = 0;

    bool zero() const noexcept { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const Integer& lc() const { return terms.front().c; }
};

// Divides by the gcd of the coefficients; returns the divisor (1 if none).
Integer make_primitive(ZPoly& p, std::size_t from = 0) {
    Integer g = 0;
    for (std::size_t i = from; i < p.terms.size(); ++i) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.terms[i].c.get_mpz_t());
        if (g == 1) return 1;
    }
    if (g == 0 || g == 1) return 1;
    for (std::size_t i = from; i < p.terms.size(); ++i) mpz_divexact(p.terms[i].c.get_mpz_t(), p.terms[i].c.get_mpz_t(), g.get_mpz_t());
    return g;
}

ZPoly to_zpoly(const Polynomial& p, const MonomialOrder& order) {
    Polynomial prim = p.primitive_part();
    ZPoly z;
    z.terms.reserve(prim.num_terms());
    for (const auto& t : prim.terms()) z.terms.push_back(ZTerm{t.coef.get_num(), t.mono});
    std::sort(z.terms.begin(), z.terms.end(), [&](const ZTerm& a, const ZTerm& b) { return order.greater(a.m, b.m); });
    z.sugar = prim.is_zero() ? 0u : static_cast<unsigned>(prim.degree());
    return z;
}

Polynomial to_monic_polynomial(const ZPoly& z, const RingPtr& ring) {
    std::vector<Term> terms;
    terms.reserve(z.terms.size());
    Rational inv = 1 / Rational(z.lc());
    for (const auto& t : z.terms) terms.push_back(Term{Rational(t.c) * inv, t.m});
    return Polynomial(ring, std::move(terms));
}

struct Element {
    ZPoly poly;
    std::uint64_t mask = 0;
    bool active = true;
};

class Guard {
public:
    Guard(const ResourceLimits& limits, std::string_view what)
        : limits_(limits), what_(what.empty() ? "groebner basis" : std::string(what)),
          start_(std::chrono::steady_clock::now()) {}

    void check_terms(std::size_t n) const {
        if (n > limits_.max_terms) {
            fail("intermediate polynomial has " + std::to_string(n) + " terms (max-terms " +
                 std::to_string(limits_.max_terms) + ")");
        }
    }
    void check_basis(std::size_t n) const {
        if (n > limits_.max_basis) {
            fail("basis reached " + std::to_string(n) + " elements (max-basis " + std::to_string(limits_.max_basis) + ")");
        }
    }
    void check_time() const {
        if (limits_.timeout_seconds <= 0) return;
        std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
        if (elapsed.count() > limits_.timeout_seconds) {
            fail("exceeded timeout of " + std::to_string(limits_.timeout_seconds) + " seconds");
        }
    }

private:
    [[noreturn]] void fail(const std::string& why) const { throw ResourceLimitExceeded(what_ + ": " + why); }

    const ResourceLimits& limits_;
    std::string what_;
    std::chrono::steady_clock::time_point start_;
};

// Fraction-free reduction of `f` by the active elements of `basis`.
//
// The vector f.terms holds the finished remainder in [0, head) and the part
// still to be reduced in [head, end). Each step replaces f by a*f - b*q*g,
// which scales the remainder by a. `scale` tracks the rational factor such
// that scale * result equals the true remainder of the input.
class Reducer {
public:
    Reducer(const MonomialOrder& order, const std::vector<Element>& basis, const Guard* guard)
        : order_(order), basis_(basis), guard_(guard) {}

    void reduce(ZPoly& f, bool full, std::size_t skip = static_cast<std::size_t>(-1), Rational* scale = nullptr) {
        std::size_t head = 0;
        unsigned steps = 0;
        while (head < f.terms.size()) {
            const ZTerm& t = f.terms[head];
            std::size_t g = find_divisor(t.m, skip);
            if (g == npos) {
                if (!full) return;
                ++head;
                continue;
            }
            step(f, head, basis_[g].poly, scale);
            if (++steps % 4 == 0) remove_content(f, scale);
            if (guard_) guard_->check_terms(f.terms.size());
        }
        remove_content(f, scale);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t find_divisor(const Monomial& m, std::size_t skip) const {
        std::uint64_t mask = m.support_mask();
        std::size_t best = npos;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Element& e = basis_[i];
            if (!e.active || i == skip || (e.mask & ~mask) != 0) continue;
            if (!e.poly.lm().divides(m)) continue;
            if (best == npos || e.poly.terms.size() < basis_[best].poly.terms.size()) best = i;
        }
        return best;
    }

    void step(ZPoly& f, std::size_t head, const ZPoly& g, Rational* scale) {
        Monomial q = f.terms[head].m / g.lm();
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.terms[head].c.get_mpz_t(), g.lc().get_mpz_t());
        Integer a = g.lc() / d;
        Integer b = f.terms[head].c / d;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        f.sugar = std::max(f.sugar, q.degree() + g.sugar);

        std::vector<ZTerm> out;
        out.reserve(f.terms.size() + g.terms.size());
        bool unit = (a == 1);
        for (std::size_t i = 0; i < head; ++i) {
            out.push_back(std::move(f.terms[i]));
            if (!unit) out.back().c *= a;
        }
        std::size_t i = head + 1;
        std::size_t j = 1;
        const auto& ft = f.terms;
        const auto& gt = g.terms;
        while (i < ft.size() || j < gt.size()) {
            if (j < gt.size()) {
                Monomial gm = gt[j].m * q;
                while (i < ft.size() && order_.greater(ft[i].m, gm)) {
                    out.push_back(ZTerm{unit ? ft[i].c : Integer(ft[i].c * a), ft[i].m});
                    ++i;
                }
                if (i < ft.size() && ft[i].m == gm) {
                    Integer c = unit ? Integer(ft[i].c - b * gt[j].c) : Integer(ft[i].c * a - b * gt[j].c);
                    if (c != 0) out.push_back(ZTerm{std::move(c), std::move(gm)});
                    ++i;
                } else {
                    out.push_back(ZTerm{Integer(-b * gt[j].c), std::move(gm)});
                }
                ++j;
            } else {
                out.push_back(ZTerm{unit ? ft[i].c : Integer(ft[i].c * a), ft[i].m});
                ++i;
            }
        }
        f.terms = std::move(out);
        if (scale && !unit) *scale /= Rational(a);
    }

    static void remove_content(ZPoly& f, Rational* scale) {
        Integer g = make_primitive(f);
        if (scale && g != 1) *scale *= Rational(g);
    }

    const MonomialOrder& order_;
    const std::vector<Element>& basis_;
    const Guard* guard_;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
};

class Buchberger {
public:
    Buchberger(const MonomialOrder& order, const ResourceLimits& limits, std::string_view what, unsigned degree_bound)
        : order_(order), guard_(limits, what), degree_bound_(degree_bound),
          lcm_first_(order.kind() == MonomialOrder::Kind::lex) {}

    std::vector<ZPoly> run(std::vector<ZPoly> inputs) {
        std::sort(inputs.begin(), inputs.end(), [&](const ZPoly& a, const ZPoly& b) {
            if (a.zero() || b.zero()) return !a.zero() && b.zero();
            return order_.greater(b.lm(), a.lm());
        });
        for (auto& f : inputs) {
            if (f.zero()) continue;
            Reducer(order_, basis_, &guard_).reduce(f, true);
            if (!f.zero()) insert(std::move(f));
        }
        while (!pairs_.empty()) {
            guard_.check_time();
            Pair p = take_pair();
            ZPoly s = spoly(p);
            Reducer(order_, basis_, &guard_).reduce(s, true);
            if (!s.zero()) insert(std::move(s));
        }
        return finish();
    }

private:
    Pair take_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& a = pairs_[k];
            const Pair& b = pairs_[best];
            bool better = lcm_first_
                ? order_.greater(b.lcm, a.lcm) || (a.lcm == b.lcm && a.sugar < b.sugar)
                : a.sugar < b.sugar || (a.sugar == b.sugar && order_.greater(b.lcm, a.lcm));
            if (better) best = k;
        }
        Pair p = std::move(pairs_[best]);
        pairs_[best] = std::move(pairs_.back());
        pairs_.pop_back();
        return p;
    }

    ZPoly spoly(const Pair& p) const {
        const ZPoly& f = basis_[p.i].poly;
        const ZPoly& g = basis_[p.j].poly;
        Monomial qf = p.lcm / f.lm();
        Monomial qg = p.lcm / g.lm();
        Integer d;
        mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        Integer a = g.lc() / d;
        Integer b = f.lc() / d;
        std::vector<ZTerm> out;
        out.reserve(f.terms.size() + g.terms.size());
        std::size_t i = 1;
        std::size_t j = 1;
        while (i < f.terms.size() || j < g.terms.size()) {
            if (i < f.terms.size() && j < g.terms.size()) {
                Monomial fm = f.terms[i].m * qf;
                Monomial gm = g.terms[j].m * qg;
                auto cmp = order_.compare(fm, gm);
                if (cmp > 0) {
                    out.push_back(ZTerm{Integer(a * f.terms[i].c), std::move(fm)});
                    ++i;
                } else if (cmp < 0) {
                    out.push_back(ZTerm{Integer(-b * g.terms[j].c), std::move(gm)});
                    ++j;
                } else {
                    Integer c = a * f.terms[i].c - b * g.terms[j].c;
                    if (c != 0) out.push_back(ZTerm{std::move(c), std::move(fm)});
                    ++i;
                    ++j;
                }
            } else if (i < f.terms.size()) {
                out.push_back(ZTerm{Integer(a * f.terms[i].c), f.terms[i].m * qf});
                ++i;
            } else {
                out.push_back(ZTerm{Integer(-b * g.terms[j].c), g.terms[j].m * qg});
                ++j;
            }
        }
        ZPoly s;
        s.terms = std::move(out);
        s.sugar = p.sugar;
        make_primitive(s);
        return s;
    }

    // Gebauer-Moeller installation of a new basis element.
    void insert(ZPoly h) {
        guard_.check_terms(h.terms.size());
        if (h.lc() < 0) {
            for (auto& t : h.terms) t.c = -t.c;
        }
        std::size_t hi = basis_.size();
        const Monomial hm = h.lm();

        struct Candidate {
            std::size_t j;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Candidate> pending;
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            if (!basis_[j].active) continue;
            const Monomial& gm = basis_[j].poly.lm();
            pending.push_back(Candidate{j, lcm(hm, gm), coprime(hm, gm)});
        }
        // Chain criterion on the new pairs; coprime pairs take part in the
        // filtering and are discarded afterwards.
        std::vector<Candidate> kept;
        for (std::size_t a = 0; a < pending.size(); ++a) {
            const Candidate& p = pending[a];
            auto divides_p = [&](const Candidate& q) { return q.lcm.divides(p.lcm); };
            bool dominated = std::any_of(pending.begin() + static_cast<std::ptrdiff_t>(a) + 1, pending.end(), divides_p) ||
                             std::any_of(kept.begin(), kept.end(), divides_p);
            if (p.coprime || !dominated) kept.push_back(p);
        }
        std::vector<Candidate> cands;
        for (auto& c : kept) {
            if (!c.coprime) cands.push_back(std::move(c));
        }
        // Old pairs whose lcm is divisible by lm(h) with distinct lcms to h.
        std::erase_if(pairs_, [&](const Pair& p) {
            if (!hm.divides(p.lcm)) return false;
            Monomial li = lcm(basis_[p.i].poly.lm(), hm);
            Monomial lj = lcm(basis_[p.j].poly.lm(), hm);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        for (const auto& c : cands) {
            if (degree_bound_ && c.lcm.degree() > degree_bound_) continue;
            const ZPoly& g = basis_[c.j].poly;
            unsigned sugar = std::max(h.sugar + (c.lcm.degree() - hm.degree()), g.sugar + (c.lcm.degree() - g.lm().degree()));
            pairs_.push_back(Pair{c.j, hi, c.lcm, sugar});
        }
        for (auto& e : basis_) {
            if (e.active && hm.divides(e.poly.lm())) e.active = false;
        }
        Element e;
        e.mask = hm.support_mask();
        e.poly = std::move(h);
        basis_.push_back(std::move(e));
        guard_.check_basis(basis_.size());
    }

    std::vector<ZPoly> finish() {
        // Minimalize: keep active elements whose leading monomial no other divides.
        std::vector<bool> keep(basis_.size(), false);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (!basis_[i].active) continue;
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (j == i || !basis_[j].active) continue;
                const Monomial& a = basis_[j].poly.lm();
                const Monomial& b = basis_[i].poly.lm();
                if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
            }
            keep[i] = !redundant;
        }
        std::vector<Element> minimal;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (keep[i]) minimal.push_back(std::move(basis_[i]));
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const Element& a, const Element& b) { return order_.greater(b.poly.lm(), a.poly.lm()); });
        // Tail reduction: each element against the others.
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            guard_.check_time();
            ZPoly& f = minimal[i].poly;
            ZPoly tail;
            tail.terms.assign(std::make_move_iterator(f.terms.begin() + 1), std::make_move_iterator(f.terms.end()));
            ZTerm lead = std::move(f.terms.front());
            Rational scale = 1;
            Reducer(order_, minimal, &guard_).reduce(tail, true, i, &scale);
            // lead*scale' + tail' with tail' = tail_true / scale; rescale lead.
            Rational lead_c = Rational(lead.c) / scale;
            Integer den = lead_c.get_den();
            f.terms.clear();
            f.terms.push_back(ZTerm{lead_c.get_num(), std::move(lead.m)});
            for (auto& t : tail.terms) f.terms.push_back(ZTerm{Integer(t.c * den), std::move(t.m)});
            make_primitive(f);
        }
        std::vector<ZPoly> out;
        out.reserve(minimal.size());
        for (auto& e : minimal) out.push_back(std::move(e.poly));
        return out;
    }

    const MonomialOrder& order_;
    Guard guard_;
    unsigned degree_bound_;
    // Lex bases blow up under sugar selection; smallest lcm first keeps them tame.
    bool lcm_first_;
    std::vector<Element> basis_;
    std::vector<Pair> pairs_;
};

RingPtr common_ring(std::span<const Polynomial> polys, const RingPtr& fallback) {
    RingPtr ring = polys.empty() ? fallback : polys.front().ring();
    for (const auto& p : polys) require_same_ring(ring, p.ring(), "groebner basis");
    return ring;
}

std::vector<Polynomial> run_groebner(std::span<const Polynomial> generators, const MonomialOrder& order,
                                     const ResourceLimits& limits, std::string_view what, unsigned degree_bound) {
    if (generators.empty()) return {};
    RingPtr ring = common_ring(generators, nullptr);
    if (order.num_vars() != ring->size()) throw InvalidArgument("monomial order does not match the ring");
    std::vector<ZPoly> inputs;
    inputs.reserve(generators.size());
    for (const auto& g : generators) {
        if (!g.is_zero()) inputs.push_back(to_zpoly(g, order));
    }
    Buchberger engine(order, limits, what, degree_bound);
    std::vector<ZPoly> basis = engine.run(std::move(inputs));
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& z : basis) out.push_back(to_monic_polynomial(z, ring));
    return out;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order) {
    for (const auto& b : basis) require_same_ring(f.ring(), b.ring(), "normal form");
    if (order.num_vars() != f.ring()->size()) throw InvalidArgument("monomial order does not match the ring");
    if (f.is_zero()) return f;
    std::vector<Element> elements;
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        Element e;
        e.poly = to_zpoly(b, order);
        e.mask = e.poly.lm().support_mask();
        elements.push_back(std::move(e));
    }
    // f = content * primitive(f); track the rational scale through reduction.
    Polynomial prim = f.primitive_part();
    Rational scale = f.terms().front().coef / prim.terms().front().coef;
    ZPoly z = to_zpoly(prim, order);
    Reducer(order, elements, nullptr).reduce(z, true, static_cast<std::size_t>(-1), &scale);
    std::vector<Term> terms;
    terms.reserve(z.terms.size());
    for (auto& t : z.terms) terms.push_back(Term{Rational(t.c) * scale, std::move(t.m)});
    return Polynomial(f.ring(), std::move(terms));
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order,
                                       const ResourceLimits& limits, std::string_view what) {
    return run_groebner(generators, order, limits, what, 0);
}

std::vector<Polynomial> truncated_groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order,
                                                 unsigned degree_bound, const ResourceLimits& limits,
                                                 std::string_view what) {
    for (const auto& g : generators) {
        if (!g.is_homogeneous()) throw InvalidArgument("truncated groebner basis requires homogeneous generators");
    }
    return run_groebner(generators, order, limits, what, std::max(degree_bound, 1u));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    require_same_ring(f.ring(), g.ring(), "s-polynomial");
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial l = lcm(lf.mono, lg.mono);
    std::size_t n = f.ring()->size();
    Polynomial mf(f.ring(), {Term{1 / lf.coef, l / lf.mono}});
    Polynomial mg(g.ring(), {Term{1 / lg.coef, l / lg.mono}});
    (void)n;
    return mf * f - mg * g;
}

// ---------------------------------------------------------------------------
// Ideal

struct Ideal::Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw InvalidArgument("ideal requires a ring");
    for (auto& g : generators) {
        require_same_ring(ring_, g.ring(), "ideal construction");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(const ResourceLimits& limits) const {
    return groebner_basis(MonomialOrder::grevlex(ring_->size()), limits);
}

const std::vector<Polynomial>& Ideal::groebner_basis(const MonomialOrder& order, const ResourceLimits& limits) const {
    {
        std::lock_guard lock(cache_->mutex);
        for (const auto& [o, basis] : cache_->bases) {
            if (o == order) return *basis;
        }
    }
    // Computed outside the lock; a concurrent duplicate is discarded below.
    auto basis = std::make_shared<const std::vector<Polynomial>>(gmi::groebner_basis(generators_, order, limits));
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, existing] : cache_->bases) {
        if (o == order) return *existing;
    }
    cache_->bases.emplace_back(order, basis);
    return *basis;
}

void Ideal::seed_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, existing] : cache_->bases) {
        if (o == order) return;
    }
    cache_->bases.emplace_back(order, std::make_shared<const std::vector<Polynomial>>(std::move(basis)));
}

bool Ideal::contains(const Polynomial& f, const ResourceLimits& limits) const {
    require_same_ring(ring_, f.ring(), "ideal membership");
    if (f.is_zero()) return true;
    const auto& gb = groebner_basis(limits);
    return normal_form(f, gb, MonomialOrder::grevlex(ring_->size())).is_zero();
}

bool Ideal::is_zero(const ResourceLimits&) const { return generators_.empty(); }

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const ResourceLimits& limits) {
    return ideal.contains(f, limits);
}

bool is_subset(const Ideal& a, const Ideal& b, const ResourceLimits& limits) {
    require_same_ring(a.ring(), b.ring(), "ideal containment");
    for (const auto& g : a.generators()) {
        if (!b.contains(g, limits)) return false;
    }
    return true;
}

IdealRelation ideal_compare(const Ideal& a, const Ideal& b, const ResourceLimits& limits) {
    require_same_ring(a.ring(), b.ring(), "ideal comparison");
    bool ab = is_subset(a, b, limits);
    bool ba = is_subset(b, a, limits);
    if (ab && ba) return IdealRelation::equal;
    if (ab) return IdealRelation::first_in_second;
    if (ba) return IdealRelation::second_in_first;
    return IdealRelation::incomparable;
}

std::string_view to_string(IdealRelation r) noexcept {
    switch (r) {
    case IdealRelation::equal:
        return "equal";
    case IdealRelation::first_in_second:
        return "A⊆B";
    case IdealRelation::second_in_first:
        return "B⊆A";
    case IdealRelation::incomparable:
        return "incomparable";
    }
    return "?";
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> kill, const ResourceLimits& limits,
                std::string_view what) {
    const RingPtr& ring = ideal.ring();
    MonomialOrder order = MonomialOrder::elimination(ring->size(), kill);
    std::vector<Polynomial> basis =
        gmi::groebner_basis(ideal.generators(), order, limits, what.empty() ? "elimination" : what);
    std::vector<Polynomial> kept;
    for (auto& g : basis) {
        bool free = std::none_of(kill.begin(), kill.end(), [&](std::size_t v) { return g.uses_variable(v); });
        if (free) kept.push_back(std::move(g));
    }
    Ideal result(ring, kept);
    // Restricted to the surviving variables the block order is grevlex, so
    // the kept elements already form the reduced grevlex basis.
    result.seed_basis(MonomialOrder::grevlex(ring->size()), std::move(kept));
    return result;
}

namespace {

struct Echelon {
    std::vector<Polynomial> rows;  // distinct grevlex leading monomials

    // True when `v` was independent of the existing rows (and was added).
    bool add(Polynomial v) {
        while (!v.is_zero()) {
            const Term& lead = v.leading_term();
            auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const Polynomial& r) { return r.leading_term().mono == lead.mono; });
            if (it == rows.end()) {
                rows.push_back(v.monic());
                return true;
            }
            v -= *it * lead.coef;
        }
        return false;
    }
};

}  // namespace

std::vector<Polynomial> minimal_generators(const Ideal& ideal, const ResourceLimits& limits) {
    std::vector<Polynomial> gens = ideal.generators();
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    const RingPtr& ring = ideal.ring();
    MonomialOrder grevlex = MonomialOrder::grevlex(ring->size());
    bool homogeneous = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_homogeneous(); });

    std::vector<Polynomial> retained;
    if (!homogeneous) {
        for (auto& g : gens) {
            if (!retained.empty()) {
                auto gb = gmi::groebner_basis(retained, grevlex, limits, "minimal generators");
                if (normal_form(g, gb, grevlex).is_zero()) continue;
            }
            retained.push_back(std::move(g));
        }
        return retained;
    }

    std::size_t i = 0;
    while (i < gens.size()) {
        int d = gens[i].degree();
        std::vector<Polynomial> lower_gb;
        if (!retained.empty()) {
            lower_gb = truncated_groebner_basis(retained, grevlex, static_cast<unsigned>(d), limits, "minimal generators");
        }
        Echelon echelon;
        for (; i < gens.size() && gens[i].degree() == d; ++i) {
            Polynomial r = lower_gb.empty() ? gens[i] : normal_form(gens[i], lower_gb, grevlex);
            if (echelon.add(std::move(r))) retained.push_back(gens[i]);
        }
    }
    return retained;
}

DegreeProfile min_gens_degrees(const Ideal& ideal, const ResourceLimits& limits) {
    DegreeProfile profile;
    profile.homogeneous = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                      [](const Polynomial& g) { return g.is_homogeneous(); });
    for (const auto& g : minimal_generators(ideal, limits)) profile.degrees.push_back(g.degree());
    std::sort(profile.degrees.begin(), profile.degrees.end());
    return profile;
}

}  // namespace gmi
