#include "gmi/graph.hpp"

#include "gmi/errors.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace gmi {

std::vector<std::size_t> VertexSet::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t v : *this) out.push_back(v);
    return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia <=> *ib;
    }
    if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
    return ia == a.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

bool label_less(std::string_view a, std::string_view b) {
    auto numeric = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (numeric(a) && numeric(b)) {
        auto strip = [](std::string_view s) {
            std::size_t k = s.find_first_not_of('0');
            return k == std::string_view::npos ? std::string_view("0") : s.substr(k);
        };
        std::string_view x = strip(a);
        std::string_view y = strip(b);
        if (x.size() != y.size()) return x.size() < y.size();
        if (x != y) return x < y;
    }
    return a < b;
}

MixedGraph::MixedGraph(std::vector<std::string> vertices, const std::vector<LabelPair>& directed,
                       const std::vector<LabelPair>& bidirected, const std::vector<LabelPair>& undirected)
    : labels_(std::move(vertices)) {
    if (labels_.size() > kMaxVertices) {
        throw InvalidArgument("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
    }
    std::sort(labels_.begin(), labels_.end(), [](const std::string& a, const std::string& b) { return label_less(a, b); });
    for (std::size_t i = 1; i < labels_.size(); ++i) {
        if (labels_[i] == labels_[i - 1]) throw InvalidArgument("duplicate vertex label: " + labels_[i]);
    }
    auto resolve = [&](const LabelPair& e, const char* kind) {
        auto u = position(e.first);
        auto v = position(e.second);
        if (!u || !v) {
            throw InvalidArgument(std::string(kind) + " edge " + e.first + "," + e.second + " uses an unknown vertex");
        }
        if (*u == *v) throw InvalidArgument(std::string(kind) + " self-loop at vertex " + e.first);
        return Edge{*u, *v};
    };
    std::set<Edge> dir;
    std::set<Edge> bi;
    std::set<Edge> und;
    for (const auto& e : directed) dir.insert(resolve(e, "directed"));
    for (const auto& e : bidirected) {
        auto [u, v] = resolve(e, "bidirected");
        bi.insert({std::min(u, v), std::max(u, v)});
    }
    for (const auto& e : undirected) {
        auto [u, v] = resolve(e, "undirected");
        und.insert({std::min(u, v), std::max(u, v)});
    }
    directed_.assign(dir.begin(), dir.end());
    bidirected_.assign(bi.begin(), bi.end());
    undirected_.assign(und.begin(), und.end());
    add_edges();
}

MixedGraph MixedGraph::numbered(std::size_t n, const std::vector<Edge>& directed, const std::vector<Edge>& bidirected,
                                const std::vector<Edge>& undirected) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    auto convert = [](const std::vector<Edge>& edges) {
        std::vector<LabelPair> out;
        for (auto [u, v] : edges) out.emplace_back(std::to_string(u), std::to_string(v));
        return out;
    };
    return MixedGraph(std::move(labels), convert(directed), convert(bidirected), convert(undirected));
}

void MixedGraph::add_edges() {
    std::size_t n = labels_.size();
    parents_.assign(n, {});
    children_.assign(n, {});
    neighbors_.assign(n, {});
    spouses_.assign(n, {});
    for (auto [u, v] : directed_) {
        children_[u].insert(v);
        parents_[v].insert(u);
    }
    for (auto [u, v] : bidirected_) {
        spouses_[u].insert(v);
        spouses_[v].insert(u);
    }
    for (auto [u, v] : undirected_) {
        neighbors_[u].insert(v);
        neighbors_[v].insert(u);
    }
}

std::optional<std::size_t> MixedGraph::position(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label,
                               [](const std::string& a, std::string_view b) { return label_less(a, b); });
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

VertexSet MixedGraph::descendants(std::size_t v) const {
    VertexSet seen;
    std::vector<std::size_t> stack(1, v);
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : children_.at(u)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

VertexSet MixedGraph::ancestral_closure(VertexSet s) const {
    VertexSet seen = s;
    std::vector<std::size_t> stack = s.to_vector();
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t w : parents_.at(u)) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

bool MixedGraph::is_dag() const {
    if (!bidirected_.empty() || !undirected_.empty()) return false;
    try {
        topological_sort(*this);
    } catch (const CycleError&) {
        return false;
    }
    return true;
}

std::string MixedGraph::format_set(VertexSet s) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t v : s) {
        if (!first) out += ",";
        first = false;
        out += labels_.at(v);
    }
    return out + "}";
}

std::vector<std::size_t> topological_sort(const MixedGraph& g) {
    std::size_t n = g.size();
    std::vector<std::size_t> indegree(n);
    for (std::size_t v = 0; v < n; ++v) indegree[v] = g.parents(v).size();
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.insert(v);
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    while (!ready.empty()) {
        std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(v);
        for (std::size_t w : g.children(v)) {
            if (--indegree[w] == 0) ready.insert(w);
        }
    }
    if (order.size() == n) return order;

    // Every unplaced vertex has an unplaced parent; walk parents until a repeat.
    VertexSet placed;
    for (std::size_t v : order) placed.insert(v);
    std::size_t start = (g.vertices() - placed).min();
    std::vector<std::size_t> walk;
    std::vector<int> seen_at(n, -1);
    std::size_t cur = start;
    while (seen_at[cur] < 0) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        cur = (g.parents(cur) - placed).min();
    }
    std::vector<std::size_t> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    std::string text;
    for (std::size_t v : cycle) text += g.label(v) + " -> ";
    text += g.label(cycle.front());
    throw CycleError("directed cycle: " + text);
}

namespace {

void require_disjoint(VertexSet a, VertexSet b, VertexSet c, std::size_t n) {
    if (!a.disjoint(b) || !a.disjoint(c) || !b.disjoint(c)) throw InvalidArgument("vertex sets must be pairwise disjoint");
    if (a.empty() || b.empty()) throw InvalidArgument("separated vertex sets must be nonempty");
    if (!(a | b | c).subset_of(VertexSet::range(n))) throw InvalidArgument("vertex set out of range");
}

bool reachable(const std::vector<VertexSet>& adjacency, VertexSet from, VertexSet to, VertexSet blocked) {
    VertexSet seen = from;
    std::vector<std::size_t> stack = from.to_vector();
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        if (to.contains(u)) return true;
        for (std::size_t w : adjacency[u] - blocked - seen) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return false;
}

}  // namespace

bool separates(const MixedGraph& g, VertexSet a, VertexSet b, VertexSet c) {
    if (!g.is_undirected()) throw UnsupportedGraph("separation requires an undirected graph");
    require_disjoint(a, b, c, g.size());
    std::vector<VertexSet> adjacency(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) adjacency[v] = g.neighbors(v);
    return !reachable(adjacency, a, b, c);
}

MixedGraph moralize(const MixedGraph& g) {
    if (!g.is_dag()) throw UnsupportedGraph("moralization requires a directed acyclic graph");
    std::vector<MixedGraph::LabelPair> edges;
    for (auto [u, v] : g.directed_edges()) edges.emplace_back(g.label(u), g.label(v));
    for (std::size_t child = 0; child < g.size(); ++child) {
        auto pa = g.parents(child).to_vector();
        for (std::size_t i = 0; i < pa.size(); ++i) {
            for (std::size_t j = i + 1; j < pa.size(); ++j) edges.emplace_back(g.label(pa[i]), g.label(pa[j]));
        }
    }
    return MixedGraph(g.labels(), {}, {}, edges);
}

bool d_separates(const MixedGraph& g, VertexSet a, VertexSet b, VertexSet c) {
    if (!g.is_dag()) throw UnsupportedGraph("d-separation requires a directed acyclic graph");
    require_disjoint(a, b, c, g.size());
    VertexSet keep = g.ancestral_closure(a | b | c);
    std::vector<VertexSet> adjacency(g.size());
    for (std::size_t v : keep) {
        adjacency[v] |= g.parents(v) | (g.children(v) & keep);
        VertexSet pa = g.parents(v);
        for (std::size_t p : pa) adjacency[p] |= pa - VertexSet{p};
    }
    return !reachable(adjacency, a, b, c);
}

namespace {

// Edmonds-Karp on a dense capacity matrix.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t n) : n_(n), cap_(n * n, 0) {}

    void add(std::size_t u, std::size_t v, int c) { cap_[u * n_ + v] += c; }

    int max_flow(std::size_t s, std::size_t t) {
        int flow = 0;
        std::vector<std::size_t> prev(n_);
        for (;;) {
            std::fill(prev.begin(), prev.end(), n_);
            prev[s] = s;
            std::deque<std::size_t> queue{s};
            while (!queue.empty() && prev[t] == n_) {
                std::size_t u = queue.front();
                queue.pop_front();
                for (std::size_t v = 0; v < n_; ++v) {
                    if (prev[v] == n_ && cap_[u * n_ + v] > 0) {
                        prev[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if (prev[t] == n_) return flow;
            int push = std::numeric_limits<int>::max();
            for (std::size_t v = t; v != s; v = prev[v]) push = std::min(push, cap_[prev[v] * n_ + v]);
            for (std::size_t v = t; v != s; v = prev[v]) {
                cap_[prev[v] * n_ + v] -= push;
                cap_[v * n_ + prev[v]] += push;
            }
            flow += push;
        }
    }

private:
    std::size_t n_;
    std::vector<int> cap_;
};

}  // namespace

std::size_t trek_min_cut(const MixedGraph& g, VertexSet a, VertexSet b) {
    if (g.has_undirected()) throw UnsupportedGraph("trek separation does not support undirected edges");
    topological_sort(g);
    std::size_t n = g.size();
    if (!(a | b).subset_of(g.vertices())) throw InvalidArgument("vertex set out of range");
    // Node layout: copy 0 (top) and copy 1 (bottom), each vertex split into
    // an in-node and an out-node joined by a unit edge.
    auto in = [n](std::size_t copy, std::size_t v) { return 2 * (copy * n + v); };
    auto out = [n](std::size_t copy, std::size_t v) { return 2 * (copy * n + v) + 1; };
    const std::size_t source = 4 * n;
    const std::size_t sink = 4 * n + 1;
    const int inf = static_cast<int>(4 * n + 4);
    FlowNetwork net(4 * n + 2);
    for (std::size_t v = 0; v < n; ++v) {
        net.add(in(0, v), out(0, v), 1);
        net.add(in(1, v), out(1, v), 1);
        net.add(out(0, v), in(1, v), inf);
    }
    for (auto [u, w] : g.directed_edges()) {
        net.add(out(0, w), in(0, u), inf);
        net.add(out(1, u), in(1, w), inf);
    }
    for (auto [u, w] : g.bidirected_edges()) {
        net.add(out(0, u), in(1, w), inf);
        net.add(out(0, w), in(1, u), inf);
    }
    for (std::size_t v : a) net.add(source, in(0, v), inf);
    for (std::size_t v : b) net.add(out(1, v), sink, inf);
    return static_cast<std::size_t>(net.max_flow(source, sink));
}

}  // namespace gmi
