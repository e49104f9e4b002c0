#include "gmi/markov.hpp"

#include "gmi/errors.hpp"

#include <algorithm>
#include <set>

namespace gmi {

CIStatement::CIStatement(VertexSet a, VertexSet b, VertexSet c) : a_(a), b_(b), c_(c) {
    if (a.empty() || b.empty()) throw InvalidArgument("independence statement needs nonempty A and B");
    if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c)) {
        throw InvalidArgument("independence statement sets must be pairwise disjoint");
    }
    if (b_.min() < a_.min()) std::swap(a_, b_);
}

bool dominates(const CIStatement& big, const CIStatement& small) {
    if (big == small || big.c() != small.c()) return false;
    return (small.a().subset_of(big.a()) && small.b().subset_of(big.b())) ||
           (small.a().subset_of(big.b()) && small.b().subset_of(big.a()));
}

namespace {

enum class GraphClass { undirected, dag };

GraphClass classify(const MixedGraph& g) {
    if (g.is_undirected()) return GraphClass::undirected;
    if (g.has_bidirected() || g.has_undirected()) {
        throw UnsupportedGraph("Markov statements require an undirected graph or a directed acyclic graph");
    }
    topological_sort(g);
    return GraphClass::dag;
}

VertexSet nondescendants(const MixedGraph& g, std::size_t v) {
    return g.vertices() - g.descendants(v) - VertexSet{v};
}

void sort_unique(std::vector<CIStatement>& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

bool graph_implies(const MixedGraph& g, const CIStatement& s) {
    return classify(g) == GraphClass::undirected ? separates(g, s.a(), s.b(), s.c()) : d_separates(g, s.a(), s.b(), s.c());
}

std::vector<CIStatement> pairwise_markov(const MixedGraph& g) {
    GraphClass cls = classify(g);
    std::vector<CIStatement> out;
    VertexSet all = g.vertices();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (i == j || g.adjacent(i).contains(j)) continue;
            if (cls == GraphClass::undirected) {
                if (i < j) out.emplace_back(VertexSet{i}, VertexSet{j}, all - VertexSet{i, j});
            } else {
                VertexSet nd = nondescendants(g, i);
                if (nd.contains(j)) out.emplace_back(VertexSet{i}, VertexSet{j}, nd - VertexSet{j});
            }
        }
    }
    sort_unique(out);
    return out;
}

std::vector<CIStatement> local_markov(const MixedGraph& g) {
    GraphClass cls = classify(g);
    std::vector<CIStatement> out;
    for (std::size_t v = 0; v < g.size(); ++v) {
        VertexSet self{v};
        VertexSet cond = cls == GraphClass::undirected ? g.neighbors(v) : g.parents(v);
        VertexSet far = cls == GraphClass::undirected ? g.vertices() - self - cond : nondescendants(g, v) - cond;
        if (far.empty()) continue;
        CIStatement s(self, far, cond);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

std::vector<CIStatement> global_markov(const MixedGraph& g, std::size_t max_vertices) {
    GraphClass cls = classify(g);
    std::size_t n = g.size();
    if (n > max_vertices) {
        throw ResourceLimitExceeded("global Markov enumeration over " + std::to_string(n) +
                                    " vertices exceeds the cap of " + std::to_string(max_vertices) +
                                    " (4^n candidate triples)");
    }
    auto holds = [&](VertexSet a, VertexSet b, VertexSet c) {
        return cls == GraphClass::undirected ? separates(g, a, b, c) : d_separates(g, a, b, c);
    };
    auto key = [](VertexSet a, VertexSet b) {
        if (b.min() < a.min()) std::swap(a, b);
        return std::pair{a.bits(), b.bits()};
    };

    std::vector<CIStatement> out;
    const std::uint64_t full = VertexSet::range(n).bits();
    for (std::uint64_t cbits = 0;; cbits = (cbits - full) & full) {
        VertexSet c = VertexSet::from_bits(cbits);
        std::vector<std::size_t> rest = (g.vertices() - c).to_vector();
        std::size_t m = rest.size();
        std::vector<std::pair<VertexSet, VertexSet>> found;
        std::set<std::pair<std::uint64_t, std::uint64_t>> index;
        // Assign each remaining vertex to none/A/B in base 3; the smallest
        // vertex of A ∪ B goes to A.
        std::size_t total = 1;
        for (std::size_t k = 0; k < m; ++k) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            VertexSet a;
            VertexSet b;
            std::size_t x = code;
            for (std::size_t k = 0; k < m; ++k, x /= 3) {
                if (x % 3 == 1) a.insert(rest[k]);
                if (x % 3 == 2) b.insert(rest[k]);
            }
            if (a.empty() || b.empty() || b.min() < a.min()) continue;
            if (!holds(a, b, c)) continue;
            found.emplace_back(a, b);
            index.insert(key(a, b));
        }
        // Separation is closed under shrinking A or B, so a statement is
        // dominated iff some one-vertex extension also holds.
        VertexSet free_all = g.vertices() - c;
        for (auto [a, b] : found) {
            bool dominated = false;
            for (std::size_t v : free_all - a - b) {
                if (index.count(key(a | VertexSet{v}, b)) || index.count(key(a, b | VertexSet{v}))) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.emplace_back(a, b, c);
        }
        if (cbits == full) break;
    }
    sort_unique(out);
    return out;
}

std::string format_statement(const MixedGraph& g, const CIStatement& s) {
    return g.format_set(s.a()) + " _||_ " + g.format_set(s.b()) + " | " + g.format_set(s.c());
}

}  // namespace gmi
