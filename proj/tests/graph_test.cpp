#include "gmi/errors.hpp"
#include "gmi/graph.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace gmi;

namespace {

MixedGraph dag5() {
    return MixedGraph({"a", "b", "c", "d", "e"}, {{"a", "d"}, {"b", "d"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
}

MixedGraph cycle5() { return MixedGraph::numbered(5, {}, {}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}); }

MixedGraph mixed4() { return MixedGraph::numbered(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}, {{1, 2}, {2, 4}}); }

VertexSet set_of(std::initializer_list<std::size_t> one_based) {
    VertexSet s;
    for (auto v : one_based) s.insert(v - 1);
    return s;
}

VertexSet labels(const MixedGraph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (auto n : names) s.insert(*g.position(n));
    return s;
}

}  // namespace

TEST(VertexSet, Basics) {
    VertexSet s = set_of({1, 3, 4});
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.min(), 0u);
    EXPECT_EQ(s.to_vector(), (std::vector<std::size_t>{0, 2, 3}));
    EXPECT_TRUE(set_of({3}).subset_of(s));
    EXPECT_TRUE(set_of({2, 5}).disjoint(s));
    EXPECT_EQ((s - set_of({1})) | set_of({2}), set_of({2, 3, 4}));
    EXPECT_LT(set_of({1, 5}), set_of({2}));
}

TEST(LabelOrder, NaturalSort) {
    EXPECT_TRUE(label_less("2", "10"));
    EXPECT_TRUE(label_less("a", "b"));
    EXPECT_TRUE(label_less("10", "a"));
    MixedGraph g({"10", "9", "x"}, {{"10", "9"}});
    EXPECT_EQ(g.labels(), (std::vector<std::string>{"9", "10", "x"}));
}

TEST(MixedGraph, ConstructionErrors) {
    EXPECT_THROW(MixedGraph({"a", "a"}, {}), InvalidArgument);
    EXPECT_THROW(MixedGraph({"a", "b"}, {{"a", "a"}}), InvalidArgument);
    EXPECT_THROW(MixedGraph({"a", "b"}, {{"a", "c"}}), InvalidArgument);
    EXPECT_THROW(MixedGraph({"a", "b"}, {}, {{"b", "b"}}), InvalidArgument);
}

TEST(MixedGraph, CanonicalEdgesIndependentOfInputOrder) {
    MixedGraph g1({"e", "d", "c", "b", "a"}, {{"d", "e"}, {"c", "e"}, {"a", "d"}, {"c", "d"}, {"b", "d"}});
    MixedGraph g2 = dag5();
    EXPECT_EQ(g1.labels(), g2.labels());
    EXPECT_EQ(g1.directed_edges(), g2.directed_edges());
    MixedGraph m1 = MixedGraph::numbered(3, {}, {{2, 1}, {3, 2}});
    MixedGraph m2 = MixedGraph::numbered(3, {}, {{2, 3}, {1, 2}});
    EXPECT_EQ(m1.bidirected_edges(), m2.bidirected_edges());
}

TEST(MixedGraph, Relations) {
    auto g = dag5();
    std::size_t d = *g.position("d");
    EXPECT_EQ(g.parents(d), labels(g, {"a", "b", "c"}));
    EXPECT_EQ(g.children(d), labels(g, {"e"}));
    EXPECT_EQ(g.descendants(*g.position("c")), labels(g, {"d", "e"}));
    EXPECT_EQ(g.ancestral_closure(labels(g, {"d"})), labels(g, {"a", "b", "c", "d"}));
    EXPECT_TRUE(g.is_dag());
    EXPECT_FALSE(cycle5().is_dag());
    EXPECT_TRUE(cycle5().is_undirected());
    EXPECT_EQ(mixed4().spouses(1), set_of({1, 4}));
    EXPECT_EQ(g.format_set(labels(g, {"e", "a"})), "{a,e}");
}

TEST(TopologicalSort, Examples) {
    EXPECT_EQ(topological_sort(MixedGraph::numbered(4, {{1, 2}, {2, 3}, {3, 4}})),
              (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(topological_sort(MixedGraph::numbered(3, {})), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(topological_sort(dag5()), (std::vector<std::size_t>{0, 1, 2, 3, 4}));
    EXPECT_EQ(topological_sort(MixedGraph::numbered(3, {{3, 1}, {2, 1}})), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(TopologicalSort, CycleIsNamed) {
    auto g = MixedGraph::numbered(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
    try {
        topological_sort(g);
        FAIL() << "expected a cycle error";
    } catch (const CycleError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("1"), std::string::npos);
        EXPECT_NE(msg.find("3"), std::string::npos);
        EXPECT_EQ(msg.find("4"), std::string::npos);
    }
}

TEST(TopologicalSort, EdgesGoForward) {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_dag(rng, 6, 0.4);
        auto order = topological_sort(g);
        std::vector<std::size_t> rank(g.size());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        for (auto [u, v] : g.directed_edges()) EXPECT_LT(rank[u], rank[v]);
    }
}

TEST(Separates, Examples) {
    auto g = cycle5();
    EXPECT_TRUE(separates(g, set_of({1}), set_of({3, 4}), set_of({2, 5})));
    EXPECT_FALSE(separates(g, set_of({1}), set_of({3}), VertexSet{}));
    EXPECT_TRUE(separates(MixedGraph::numbered(2, {}), set_of({1}), set_of({2}), VertexSet{}));
    EXPECT_THROW(separates(g, set_of({1}), set_of({1, 3}), VertexSet{}), InvalidArgument);
    EXPECT_THROW(separates(g, VertexSet{}, set_of({3}), VertexSet{}), InvalidArgument);
    EXPECT_THROW(separates(dag5(), set_of({1}), set_of({2}), VertexSet{}), UnsupportedGraph);
}

TEST(Separates, SymmetricAndMonotone) {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_undirected(rng, 5, 0.4);
        for (const auto& t : oracle::all_triples(5)) {
            bool s = separates(g, t.a, t.b, t.c);
            EXPECT_EQ(s, separates(g, t.b, t.a, t.c));
            if (!s) continue;
            VertexSet free = g.vertices() - t.a - t.b - t.c;
            for (std::size_t v : free) EXPECT_TRUE(separates(g, t.a, t.b, t.c | VertexSet{v}));
        }
    }
}

TEST(Moralize, Examples) {
    auto collider = MixedGraph({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    EXPECT_EQ(moralize(collider).undirected_edges().size(), 3u);
    auto chain = MixedGraph::numbered(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(moralize(chain).undirected_edges(), (std::vector<MixedGraph::Edge>{{0, 1}, {1, 2}}));
    auto m = moralize(dag5());
    for (const char* u : {"a", "b", "c"})
        for (const char* v : {"a", "b", "c"})
            if (std::string(u) < v) {
                EXPECT_TRUE(m.neighbors(*m.position(u)).contains(*m.position(v)));
            }
    EXPECT_THROW(moralize(cycle5()), UnsupportedGraph);
}

TEST(Moralize, ContainsSkeleton) {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_dag(rng, 6, 0.4);
        auto m = moralize(g);
        for (auto [u, v] : g.directed_edges()) EXPECT_TRUE(m.neighbors(u).contains(v));
    }
}

TEST(DSeparates, Examples) {
    auto collider = MixedGraph({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
    auto a = labels(collider, {"a"}), b = labels(collider, {"b"}), c = labels(collider, {"c"});
    EXPECT_TRUE(d_separates(collider, a, b, VertexSet{}));
    EXPECT_FALSE(d_separates(collider, a, b, c));
    auto chain = MixedGraph::numbered(3, {{1, 2}, {2, 3}});
    EXPECT_TRUE(d_separates(chain, set_of({1}), set_of({3}), set_of({2})));
    EXPECT_FALSE(d_separates(chain, set_of({1}), set_of({3}), VertexSet{}));
    EXPECT_THROW(d_separates(chain, set_of({1}), set_of({1}), VertexSet{}), InvalidArgument);
}

TEST(DSeparates, DescendantOfColliderOpensPath) {
    auto g = MixedGraph::numbered(4, {{1, 3}, {2, 3}, {3, 4}});
    EXPECT_FALSE(d_separates(g, set_of({1}), set_of({2}), set_of({4})));
    EXPECT_TRUE(d_separates(g, set_of({1}), set_of({2}), VertexSet{}));
}

TEST(DSeparates, AgreesWithPathOracle) {
    oracle::Rng rng(2024);
    std::size_t graphs = 0, checks = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        auto triples = oracle::all_triples(n);
        for (int trial = 0; trial < 60; ++trial, ++graphs) {
            auto g = oracle::random_dag(rng, n, 0.2 + 0.1 * (trial % 6));
            for (const auto& t : triples) {
                ASSERT_EQ(d_separates(g, t.a, t.b, t.c), oracle::d_separated_by_paths(g, t.a, t.b, t.c));
                ++checks;
            }
        }
    }
    EXPECT_GE(graphs, 200u);
    EXPECT_GT(checks, 10000u);
}

TEST(TrekMinCut, Examples) {
    auto one = MixedGraph::numbered(1, {});
    EXPECT_EQ(trek_min_cut(one, set_of({1}), set_of({1})), 1u);
    auto two = MixedGraph::numbered(2, {});
    EXPECT_EQ(trek_min_cut(two, set_of({1}), set_of({2})), 0u);
    auto g = mixed4();
    auto all = set_of({1, 2, 3, 4});
    EXPECT_GE(trek_min_cut(g, all, all), 4u);
    EXPECT_THROW(trek_min_cut(cycle5(), set_of({1}), set_of({2})), UnsupportedGraph);
    EXPECT_THROW(trek_min_cut(MixedGraph::numbered(2, {{1, 2}, {2, 1}}), set_of({1}), set_of({2})), CycleError);
}

TEST(TrekMinCut, ChainAndCommonCause) {
    auto chain = MixedGraph::numbered(3, {{1, 2}, {2, 3}});
    EXPECT_EQ(trek_min_cut(chain, set_of({1}), set_of({3})), 1u);
    auto dag = dag5();
    // {a,b} vs {c,e}: every trek passes through d or c on the right
    EXPECT_EQ(trek_min_cut(dag, labels(dag, {"a", "b"}), labels(dag, {"c", "e"})), 1u);
}

TEST(TrekMinCut, AgreesWithBruteForce) {
    oracle::Rng rng(77);
    std::size_t graphs = 0;
    for (int trial = 0; trial < 120; ++trial, ++graphs) {
        std::size_t n = 2 + trial % 4;
        auto g = oracle::random_mixed(rng, n, 0.4, 0.3);
        for (std::uint64_t a = 1; a < (1u << n); ++a)
            for (std::uint64_t b = 1; b < (1u << n); ++b) {
                if ((a * 7 + b + trial) % 3 != 0 && n == 5) continue;  // sample pairs on the largest graphs
                auto va = VertexSet::from_bits(a), vb = VertexSet::from_bits(b);
                ASSERT_EQ(trek_min_cut(g, va, vb), oracle::trek_separation_brute_force(g, va, vb))
                    << "n=" << n << " a=" << a << " b=" << b;
            }
    }
    EXPECT_GE(graphs, 100u);
}
