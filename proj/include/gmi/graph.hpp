#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gmi {

/// Hard cap on graph size; vertex sets are 64-bit masks.
inline constexpr std::size_t kMaxVertices = 64;

/// Set of vertex positions (0-based) of a graph with at most 64 vertices.
class VertexSet {
public:
    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<std::size_t> vs) {
        for (std::size_t v : vs) insert(v);
    }
    static constexpr VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet range(std::size_t n) { return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    bool contains(std::size_t v) const noexcept { return v < 64 && ((bits_ >> v) & 1u); }
    void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
    void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    /// Smallest element; requires nonempty.
    std::size_t min() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }
    bool subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    bool disjoint(VertexSet o) const noexcept { return (bits_ & o.bits_) == 0; }
    std::vector<std::size_t> to_vector() const;

    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    /// Lexicographic order of the sorted element lists.
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

    class iterator {
    public:
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const = default;

    private:
        std::uint64_t rest_ = 0;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Orders labels numerically when both are digit strings, lexicographically otherwise.
bool label_less(std::string_view a, std::string_view b);

/// Graph with directed, bidirected and undirected edge classes.
///
/// Vertices are canonicalized at construction: labels are sorted with
/// `label_less` and referred to by position from then on.
class MixedGraph {
public:
    using LabelPair = std::pair<std::string, std::string>;
    using Edge = std::pair<std::size_t, std::size_t>;

    MixedGraph() = default;
    MixedGraph(std::vector<std::string> vertices, const std::vector<LabelPair>& directed,
               const std::vector<LabelPair>& bidirected = {}, const std::vector<LabelPair>& undirected = {});

    /// Vertices labelled "1".."n"; edges given as 1-based pairs.
    static MixedGraph numbered(std::size_t n, const std::vector<Edge>& directed, const std::vector<Edge>& bidirected = {},
                               const std::vector<Edge>& undirected = {});

    std::size_t size() const noexcept { return labels_.size(); }
    VertexSet vertices() const { return VertexSet::range(size()); }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> position(std::string_view label) const;

    /// Sorted (tail, head) pairs.
    const std::vector<Edge>& directed_edges() const noexcept { return directed_; }
    /// Sorted pairs with first < second.
    const std::vector<Edge>& bidirected_edges() const noexcept { return bidirected_; }
    const std::vector<Edge>& undirected_edges() const noexcept { return undirected_; }

    VertexSet parents(std::size_t v) const { return parents_.at(v); }
    VertexSet children(std::size_t v) const { return children_.at(v); }
    VertexSet neighbors(std::size_t v) const { return neighbors_.at(v); }
    VertexSet spouses(std::size_t v) const { return spouses_.at(v); }
    /// Vertices joined to v by an edge of any class.
    VertexSet adjacent(std::size_t v) const { return parents_.at(v) | children_.at(v) | neighbors_.at(v) | spouses_.at(v); }

    /// Vertices reachable from v by a nonempty directed path (v excluded
    /// unless it lies on a cycle).
    VertexSet descendants(std::size_t v) const;
    /// `s` together with every vertex having a directed path into `s`.
    VertexSet ancestral_closure(VertexSet s) const;

    bool has_directed() const noexcept { return !directed_.empty(); }
    bool has_bidirected() const noexcept { return !bidirected_.empty(); }
    bool has_undirected() const noexcept { return !undirected_.empty(); }
    /// Only undirected edges (possibly none).
    bool is_undirected() const noexcept { return directed_.empty() && bidirected_.empty(); }
    /// Only directed edges and no directed cycle.
    bool is_dag() const;

    std::string format_set(VertexSet s) const;

private:
    void add_edges();

    std::vector<std::string> labels_;
    std::vector<Edge> directed_;
    std::vector<Edge> bidirected_;
    std::vector<Edge> undirected_;
    std::vector<VertexSet> parents_;
    std::vector<VertexSet> children_;
    std::vector<VertexSet> neighbors_;
    std::vector<VertexSet> spouses_;
};

/// Kahn's algorithm with ties broken by position. Throws CycleError naming a
/// directed cycle.
std::vector<std::size_t> topological_sort(const MixedGraph& g);

/// True iff every path from `a` to `b` in the undirected graph `g` meets `c`.
bool separates(const MixedGraph& g, VertexSet a, VertexSet b, VertexSet c);

/// Undirected skeleton of a DAG plus edges between parents of a common child.
MixedGraph moralize(const MixedGraph& g);

/// d-separation via the moralized ancestral graph of a ∪ b ∪ c.
bool d_separates(const MixedGraph& g, VertexSet a, VertexSet b, VertexSet c);

/// Minimum of #C_A + #C_B over pairs (C_A, C_B) trek-separating `a` from
/// `b`, as a minimum vertex cut in the two-copy flow network.
std::size_t trek_min_cut(const MixedGraph& g, VertexSet a, VertexSet b);

}  // namespace gmi
