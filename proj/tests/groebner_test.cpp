#include "gmi/errors.hpp"
#include "gmi/groebner.hpp"

#include "support/poly_helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <random>
#include <thread>

using namespace gmi;
using gmi::testing::num;
using gmi::testing::random_polynomial;
using gmi::testing::ring_of;
using gmi::testing::var;

namespace {

struct Xyz {
    RingPtr r = ring_of({"x", "y", "z"});
    Polynomial x = var(r, "x"), y = var(r, "y"), z = var(r, "z");
};

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

/// Random ideal with few, low-degree generators in three variables.
std::vector<Polynomial> random_generators(const RingPtr& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 3);
    std::vector<Polynomial> gens;
    int k = count(rng);
    while (static_cast<int>(gens.size()) < k) {
        auto p = random_polynomial(r, rng, 3, 2, 3);
        if (!p.is_zero()) gens.push_back(p);
    }
    return gens;
}

}  // namespace

TEST(NormalForm, SpecExamples) {
    Xyz v;
    auto lex = MonomialOrder::lex(3);
    std::vector<Polynomial> basis{v.x};
    EXPECT_TRUE(normal_form(v.x * v.x * v.y, basis, lex).is_zero());
    EXPECT_EQ(normal_form(v.x * v.x + v.y, basis, lex), v.y);
}

TEST(NormalForm, NoRemainderTermDivisible) {
    Xyz v;
    auto order = MonomialOrder::grevlex(3);
    std::vector<Polynomial> basis{v.x * v.y - num(v.r, 1), v.y * v.y - v.z};
    auto f = v.x * v.x * v.y * v.y * v.y + v.z * v.x * v.y + num(v.r, 3) * v.y;
    auto rem = normal_form(f, basis, order);
    for (const auto& t : rem.terms())
        for (const auto& b : basis) EXPECT_FALSE(b.leading_term(order).mono.divides(t.mono));
}

TEST(NormalForm, RingMismatch) {
    Xyz v;
    auto other = ring_of({"a", "b", "c"});
    std::vector<Polynomial> basis{var(other, "a")};
    EXPECT_THROW(normal_form(v.x, basis, MonomialOrder::grevlex(3)), RingMismatch);
}

TEST(GroebnerBasis, SpecExamples) {
    Xyz v;
    Ideal xy(v.r, {v.x, v.y});
    EXPECT_EQ(texts(xy.groebner_basis(MonomialOrder::lex(3))), (std::vector<std::string>{"y", "x"}));

    Ideal twisted(v.r, {v.y - v.x * v.x, v.y * v.y - v.z});
    std::vector<std::size_t> kill{1};
    const auto& gb = twisted.groebner_basis(MonomialOrder::elimination(3, kill));
    auto target = v.x * v.x * v.x * v.x - v.z;
    EXPECT_NE(std::find(gb.begin(), gb.end(), target), gb.end());

    EXPECT_TRUE(Ideal(v.r, {Polynomial(v.r)}).groebner_basis().empty());
    EXPECT_TRUE(Ideal(v.r, {Polynomial(v.r)}).generators().empty());
}

TEST(GroebnerBasis, ReducedMonicSorted) {
    Xyz v;
    Ideal i(v.r, {num(v.r, 3) * v.x * v.x - v.y, num(v.r, 2) * v.x * v.y - v.z * v.z});
    auto order = MonomialOrder::grevlex(3);
    const auto& gb = i.groebner_basis(order);
    for (std::size_t k = 0; k < gb.size(); ++k) {
        EXPECT_EQ(gb[k].leading_term(order).coef, 1);
        if (k > 0) {
            EXPECT_TRUE(order.greater(gb[k].leading_term(order).mono, gb[k - 1].leading_term(order).mono));
        }
        for (std::size_t m = 0; m < gb.size(); ++m) {
            if (m == k) continue;
            for (const auto& t : gb[k].terms()) EXPECT_FALSE(gb[m].leading_term(order).mono.divides(t.mono));
        }
    }
}

TEST(GroebnerBasis, UnitIdeal) {
    Xyz v;
    Ideal i(v.r, {v.x * v.y - num(v.r, 1), v.x});
    EXPECT_EQ(texts(i.groebner_basis()), (std::vector<std::string>{"1"}));
    EXPECT_TRUE(i.contains(v.z * v.z + v.y));
}

TEST(GroebnerBasis, ResourceGuardNamesComputation) {
    Xyz v;
    std::vector<Polynomial> gens{v.x * v.x * v.y - v.z * v.z, v.y * v.y * v.x - v.z, v.z * v.z * v.z - v.x * v.y};
    ResourceLimits tight;
    tight.max_basis = 2;
    try {
        groebner_basis(gens, MonomialOrder::grevlex(3), tight, "toy ideal");
        FAIL() << "expected a resource limit";
    } catch (const ResourceLimitExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("toy ideal"), std::string::npos);
    }
    ResourceLimits few_terms;
    few_terms.max_terms = 1;
    EXPECT_THROW(groebner_basis(gens, MonomialOrder::grevlex(3), few_terms), ResourceLimitExceeded);
}

TEST(GroebnerProperty, UniqueUnderShuffle) {
    auto r = ring_of({"x", "y", "z"});
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        auto gens = random_generators(r, rng);
        for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
            auto expected = groebner_basis(gens, order);
            auto shuffled = gens;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            // scaling and adding a combination does not change the ideal
            shuffled[0] *= Rational(-5, 2);
            if (shuffled.size() > 1) shuffled.push_back(shuffled[0] * shuffled[1] + shuffled[1]);
            EXPECT_EQ(groebner_basis(shuffled, order), expected);
        }
    }
}

TEST(GroebnerProperty, SPolynomialsReduceToZero) {
    auto r = ring_of({"x", "y", "z"});
    std::mt19937_64 rng(202);
    std::vector<std::size_t> kill{0};
    for (int trial = 0; trial < 60; ++trial) {
        auto gens = random_generators(r, rng);
        for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::elimination(3, kill)}) {
            auto gb = groebner_basis(gens, order);
            for (std::size_t i = 0; i < gb.size(); ++i)
                for (std::size_t j = i + 1; j < gb.size(); ++j)
                    EXPECT_TRUE(normal_form(s_polynomial(gb[i], gb[j], order), gb, order).is_zero());
            for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, order).is_zero());
        }
    }
}

TEST(GroebnerProperty, NormalFormIdempotent) {
    auto r = ring_of({"x", "y", "z"});
    std::mt19937_64 rng(303);
    auto order = MonomialOrder::grevlex(3);
    for (int trial = 0; trial < 40; ++trial) {
        auto gb = groebner_basis(random_generators(r, rng), order);
        auto f = random_polynomial(r, rng, 5, 3);
        auto nf = normal_form(f, gb, order);
        EXPECT_EQ(normal_form(nf, gb, order), nf);
        EXPECT_TRUE(normal_form(f - nf, gb, order).is_zero());
    }
}

TEST(GroebnerProperty, MembershipAgainstCombinations) {
    // Every combination sum h_i g_i with small h_i is a member; random
    // perturbations by a non-member constant are not.
    auto r = ring_of({"x", "y"});
    std::mt19937_64 rng(404);
    auto x = var(r, "x"), y = var(r, "y");
    std::vector<Polynomial> gens{x * x - y, x * y - num(r, 2) * y * y};
    Ideal ideal(r, gens);
    ASSERT_FALSE(ideal.contains(num(r, 1)));
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial combo(r);
        for (const auto& g : gens) combo += random_polynomial(r, rng, 3, 2, 4) * g;
        EXPECT_TRUE(ideal.contains(combo));
        EXPECT_FALSE(ideal.contains(combo + num(r, 1)));
    }
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
        if (i + 1 == nvars) {
            m.set(i, left);
            out.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m.set(i, e);
            fill(i + 1, left - e);
        }
    };
    fill(0, d);
    return out;
}

/// p (homogeneous of degree d) lies in the ideal of homogeneous `gens` iff it
/// is in the span of the products m*g of degree d. Decided by elimination.
bool in_degree_span(const Polynomial& p, const std::vector<Polynomial>& gens) {
    const RingPtr& r = p.ring();
    auto d = static_cast<unsigned>(p.degree());
    std::vector<Polynomial> rows;
    for (const auto& g : gens) {
        if (g.degree() > static_cast<int>(d)) continue;
        for (const auto& m : monomials_of_degree(r->size(), d - static_cast<unsigned>(g.degree())))
            rows.push_back(Polynomial(r, {{Rational(1), m}}) * g);
    }
    auto basis = monomials_of_degree(r->size(), d);
    auto coords = [&](const Polynomial& f) {
        std::vector<Rational> v(basis.size(), Rational(0));
        for (const auto& t : f.terms())
            v[std::find(basis.begin(), basis.end(), t.mono) - basis.begin()] = t.coef;
        return v;
    };
    std::vector<std::vector<Rational>> echelon;
    std::vector<std::size_t> pivots;
    auto reduce = [&](std::vector<Rational> v) {
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if (v[pivots[k]] != 0) {
                Rational f = v[pivots[k]] / echelon[k][pivots[k]];
                for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[k][c];
            }
        return v;
    };
    for (const auto& row : rows) {
        auto v = reduce(coords(row));
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
        if (it == v.end()) continue;
        pivots.push_back(static_cast<std::size_t>(it - v.begin()));
        echelon.push_back(std::move(v));
    }
    auto rest = reduce(coords(p));
    return std::all_of(rest.begin(), rest.end(), [](const Rational& q) { return q == 0; });
}

Polynomial random_homogeneous(const RingPtr& r, std::mt19937_64& rng, unsigned d, int max_terms) {
    auto monos = monomials_of_degree(r->size(), d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<Term> terms;
    for (int k = 0; k < max_terms; ++k) terms.push_back({Rational(coef(rng)), monos[pick(rng)]});
    return Polynomial(r, std::move(terms));
}

}  // namespace

TEST(GroebnerProperty, MembershipMatchesLinearAlgebraOracle) {
    auto r = ring_of({"x", "y", "z"});
    std::mt19937_64 rng(404);
    std::uniform_int_distribution<unsigned> gdeg(1, 2);
    std::size_t members = 0, checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            auto g = random_homogeneous(r, rng, gdeg(rng), 3);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal ideal(r, gens);
        for (unsigned d = 2; d <= 4; ++d) {
            for (int k = 0; k < 4; ++k) {
                // even samples are built as members, odd ones are random
                Polynomial p = k % 2 == 0 ? Polynomial(r) : random_homogeneous(r, rng, d, 2);
                if (k % 2 == 0)
                    for (const auto& g : gens)
                        if (g.degree() <= static_cast<int>(d))
                            p += random_homogeneous(r, rng, d - static_cast<unsigned>(g.degree()), 2) * g;
                if (p.is_zero()) continue;
                bool expected = in_degree_span(p, gens);
                EXPECT_EQ(ideal.contains(p), expected) << p.to_string();
                members += expected;
                ++checked;
            }
        }
    }
    EXPECT_GT(members, 20u);
    EXPECT_GT(checked - members, 20u);
}

TEST(IdealMembership, SpecExamples) {
    Xyz v;
    EXPECT_TRUE(ideal_membership(v.x * v.x * v.y, Ideal(v.r, {v.x})));
    EXPECT_FALSE(ideal_membership(num(v.r, 1), Ideal(v.r, {v.x})));
    EXPECT_TRUE(ideal_membership(v.x + v.y, Ideal(v.r, {v.x - v.y, num(v.r, 2) * v.y})));
    auto other = ring_of({"u"});
    EXPECT_THROW(ideal_membership(var(other, "u"), Ideal(v.r, {v.x})), RingMismatch);
}

TEST(IdealCompare, SpecExamples) {
    Xyz v;
    Ideal x(v.r, {v.x}), x2(v.r, {v.x * v.x}), y(v.r, {v.y});
    EXPECT_EQ(ideal_compare(x, x), IdealRelation::equal);
    EXPECT_EQ(ideal_compare(x, x2), IdealRelation::second_in_first);
    EXPECT_EQ(ideal_compare(x2, x), IdealRelation::first_in_second);
    EXPECT_EQ(ideal_compare(x, y), IdealRelation::incomparable);
    EXPECT_EQ(to_string(IdealRelation::first_in_second), "A⊆B");
    EXPECT_EQ(to_string(IdealRelation::second_in_first), "B⊆A");
    EXPECT_THROW(ideal_compare(x, Ideal(ring_of({"u"}), {})), RingMismatch);
    // different generators, same ideal
    EXPECT_EQ(ideal_compare(Ideal(v.r, {v.x + v.y, v.y}), Ideal(v.r, {v.x, v.y})), IdealRelation::equal);
    EXPECT_TRUE(is_subset(Ideal(v.r, {}), x));
}

TEST(Eliminate, SpecExamples) {
    Xyz v;
    std::vector<std::size_t> kill_y{1}, kill_x{0}, none;
    auto result = eliminate(Ideal(v.r, {v.y - v.x * v.x, v.y * v.y - v.z}), kill_y);
    EXPECT_EQ(texts(result.generators()), (std::vector<std::string>{"x^4 - z"}));
    EXPECT_TRUE(eliminate(Ideal(v.r, {v.x}), kill_x).generators().empty());
    Ideal i(v.r, {v.x * v.y - v.z, v.y * v.y});
    EXPECT_EQ(ideal_compare(eliminate(i, none), i), IdealRelation::equal);
}

TEST(EliminateProperty, FreeOfKilledAndContained) {
    auto r = ring_of({"x", "y", "z"});
    std::mt19937_64 rng(505);
    for (int trial = 0; trial < 60; ++trial) {
        auto gens = random_generators(r, rng);
        Ideal ideal(r, gens);
        std::vector<std::size_t> kill{static_cast<std::size_t>(trial % 3)};
        auto result = eliminate(ideal, kill);
        for (const auto& g : result.generators()) {
            EXPECT_FALSE(g.uses_variable(kill[0]));
            EXPECT_TRUE(ideal.contains(g));
        }
    }
}

TEST(EliminateProperty, ImplicitizationOfTwistedCubic) {
    // (t, t^2, t^3): eliminating t gives the twisted cubic.
    auto r = ring_of({"t", "a", "b", "c"});
    auto t = var(r, "t"), a = var(r, "a"), b = var(r, "b"), c = var(r, "c");
    std::vector<std::size_t> kill{0};
    auto cubic = eliminate(Ideal(r, {a - t, b - t * t, c - t * t * t}), kill);
    Ideal expected(r, {b - a * a, c - a * b});
    EXPECT_EQ(ideal_compare(cubic, expected), IdealRelation::equal);
}

TEST(MinGensDegrees, Examples) {
    Xyz v;
    auto profile = min_gens_degrees(Ideal(v.r, {v.x * v.x, v.x * v.x + v.y * v.y}));
    EXPECT_EQ(profile.degrees, (std::vector<int>{2, 2}));
    EXPECT_TRUE(profile.homogeneous);
    // redundant generators are discarded
    profile = min_gens_degrees(Ideal(v.r, {v.x, v.x * v.y, v.y * v.y, v.x * v.z + v.y * v.y}));
    EXPECT_EQ(profile.degrees, (std::vector<int>{1, 2}));
    EXPECT_TRUE(min_gens_degrees(Ideal(v.r, {})).degrees.empty());
    // inhomogeneous input takes the warning path
    profile = min_gens_degrees(Ideal(v.r, {v.x - num(v.r, 1), v.x * v.x - num(v.r, 1)}));
    EXPECT_FALSE(profile.homogeneous);
    EXPECT_EQ(profile.degrees, (std::vector<int>{1}));
}

TEST(MinGensDegrees, InvariantUnderBasisReplacement) {
    Xyz v;
    std::vector<Ideal> ideals{
        Ideal(v.r, {v.x * v.y - v.z * v.z, v.x * v.z - v.y * v.y, v.y * v.z - v.x * v.x}),
        Ideal(v.r, {v.x * v.x * v.y - v.z * v.z * v.z, v.y * v.y - v.x * v.z}),
        Ideal(v.r, {v.x * v.x, v.y * v.y, v.x * v.y + v.z * v.z}),
    };
    for (const auto& ideal : ideals) {
        auto direct = min_gens_degrees(ideal);
        auto from_gb = min_gens_degrees(Ideal(v.r, ideal.groebner_basis()));
        EXPECT_EQ(direct.degrees, from_gb.degrees);
        auto mins = minimal_generators(ideal);
        EXPECT_EQ(ideal_compare(Ideal(v.r, mins), ideal), IdealRelation::equal);
        EXPECT_EQ(mins.size(), direct.degrees.size());
    }
}

TEST(IdealCache, ConcurrentBasisRequests) {
    auto r = ring_of({"a", "b", "c", "d"});
    auto a = var(r, "a"), b = var(r, "b"), c = var(r, "c"), d = var(r, "d");
    Ideal ideal(r, {a * d - b * c, a * c - b * b, b * d - c * c});
    std::vector<std::vector<Polynomial>> results(8);
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < results.size(); ++k)
        threads.emplace_back([&, k] { results[k] = ideal.groebner_basis(); });
    for (auto& t : threads) t.join();
    for (const auto& res : results) EXPECT_EQ(res, results[0]);
    EXPECT_EQ(results[0].size(), 3u);
}
