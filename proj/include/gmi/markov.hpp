#pragma once

#include "gmi/graph.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gmi {

/// X_A independent of X_B given X_C, stored with min(A) < min(B).
class CIStatement {
public:
    /// Throws InvalidArgument unless the sets are pairwise disjoint and A, B nonempty.
    CIStatement(VertexSet a, VertexSet b, VertexSet c);

    VertexSet a() const noexcept { return a_; }
    VertexSet b() const noexcept { return b_; }
    VertexSet c() const noexcept { return c_; }
    VertexSet support() const noexcept { return a_ | b_ | c_; }

    friend bool operator==(const CIStatement&, const CIStatement&) = default;
    /// Lexicographic on (A, B, C).
    friend std::strong_ordering operator<=>(const CIStatement& x, const CIStatement& y) {
        if (auto o = x.a_ <=> y.a_; o != 0) return o;
        if (auto o = x.b_ <=> y.b_; o != 0) return o;
        return x.c_ <=> y.c_;
    }

private:
    VertexSet a_;
    VertexSet b_;
    VertexSet c_;
};

/// True when `big` strictly dominates `small`: same C and, up to swapping
/// the sides of `small`, A and B supersets.
bool dominates(const CIStatement& big, const CIStatement& small);

/// Default vertex cap for global Markov enumeration (4^n triples).
inline constexpr std::size_t kDefaultGlobalMarkovCap = 8;

std::vector<CIStatement> pairwise_markov(const MixedGraph& g);
std::vector<CIStatement> local_markov(const MixedGraph& g);
std::vector<CIStatement> global_markov(const MixedGraph& g, std::size_t max_vertices = kDefaultGlobalMarkovCap);

/// True iff the statement holds by (d-)separation in `g`.
bool graph_implies(const MixedGraph& g, const CIStatement& s);

/// `{A} _||_ {B} | {C}` using the graph's labels.
std::string format_statement(const MixedGraph& g, const CIStatement& s);

}  // namespace gmi
