#pragma once

#include "gmi/graph.hpp"
#include "gmi/groebner.hpp"
#include "gmi/markov.hpp"
#include "gmi/poly_matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gmi {

/// Ring of joint probabilities p_{i1,...,in} of discrete variables with the
/// given numbers of levels; variables in lexicographic tuple order.
class DiscreteModelRing {
public:
    explicit DiscreteModelRing(std::vector<unsigned> levels);

    const std::vector<unsigned>& levels() const noexcept { return levels_; }
    std::size_t num_factors() const noexcept { return levels_.size(); }
    const RingPtr& ring() const noexcept { return ring_; }

    /// Variable index of a 0-based level tuple.
    std::size_t index(std::span<const unsigned> tuple) const;
    Polynomial p(std::span<const unsigned> tuple) const { return Polynomial::variable(ring_, index(tuple)); }

private:
    std::vector<unsigned> levels_;
    RingPtr ring_;
};

DiscreteModelRing markov_ring(std::vector<unsigned> levels);

/// Ring of covariances s_{i,j} (i <= j), optionally preceded by the
/// parameters of a graph: l_{i,j} per directed edge, then p_{i,j} for the
/// diagonal and bidirected edges (or k_{i,j} for the diagonal and the
/// undirected edges of an undirected graph).
class GaussianModelRing {
public:
    explicit GaussianModelRing(std::size_t n);
    explicit GaussianModelRing(const MixedGraph& g);

    std::size_t num_nodes() const noexcept { return n_; }
    const RingPtr& ring() const noexcept { return ring_; }
    const std::optional<MixedGraph>& graph() const noexcept { return graph_; }

    /// Index of s_{i,j} = s_{j,i}.
    std::size_t covariance_index(std::size_t i, std::size_t j) const;
    Polynomial sigma(std::size_t i, std::size_t j) const { return Polynomial::variable(ring_, covariance_index(i, j)); }
    /// Symbolic covariance matrix with s_{j,i} := s_{i,j}.
    PolyMatrix covariance_matrix() const;

    /// Parameter variable indices (l, then p or k), in ring order.
    const std::vector<std::size_t>& parameters() const noexcept { return parameters_; }
    bool has_parameters() const noexcept { return !parameters_.empty(); }
    std::optional<std::size_t> lambda_index(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> psi_index(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> kappa_index(std::size_t i, std::size_t j) const;

private:
    void build(const std::vector<std::string>& labels);

    std::size_t n_;
    std::optional<MixedGraph> graph_;
    RingPtr ring_;
    std::vector<std::size_t> parameters_;
    std::size_t first_covariance_ = 0;
};

GaussianModelRing gaussian_ring(std::size_t n);
GaussianModelRing gaussian_ring(const MixedGraph& g);

/// One matrix per statement and per level tuple of C: rows are the level
/// tuples of A, columns those of B, entries marginal sums over the rest.
std::vector<PolyMatrix> markov_matrices(const DiscreteModelRing& r, std::span<const CIStatement> statements);

/// 2x2 minors of all markov matrices; duplicates (up to sign) and zeros dropped.
Ideal ci_ideal(const DiscreteModelRing& r, std::span<const CIStatement> statements);

/// (#C+1)-minors of the covariance submatrices on rows A∪C and columns B∪C.
Ideal ci_ideal(const GaussianModelRing& r, std::span<const CIStatement> statements);

/// Homogeneous vanishing ideal of the discrete model on a DAG.
Ideal discrete_vanishing_ideal(const DiscreteModelRing& r, const MixedGraph& dag, const ResourceLimits& limits = {});

/// Covariance parametrization (I - Λ)^{-T} Ψ (I - Λ)^{-1} over the ring's
/// parameters. Requires a ring built from a graph without undirected edges.
PolyMatrix covariance_parametrization(const GaussianModelRing& r);

/// Vanishing ideal of the Gaussian model of the ring's graph.
Ideal gaussian_vanishing_ideal(const GaussianModelRing& r, const ResourceLimits& limits = {});

inline constexpr std::size_t kDefaultTrekVertexCap = 6;

/// Ideal of all covariance subdeterminants forced to vanish by trek separation.
Ideal trek_ideal(const GaussianModelRing& r, const MixedGraph& g, std::size_t max_vertices = kDefaultTrekVertexCap);

enum class Identifiability { generically_identifiable, non_identifiable_generically, algebraic, undetermined };

std::string_view to_string(Identifiability c) noexcept;

struct ParameterReport {
    std::size_t variable;            ///< ring index of the parameter
    std::string name;
    Identifiability classification;
    /// Relations between the parameter and the covariances (empty when undetermined).
    std::optional<Ideal> relations;
    /// c(s)*t - r(s) with c not vanishing on the model; set when identifiable.
    std::optional<Polynomial> witness;
    std::string diagnostic;          ///< reason when undetermined
};

struct IdentResult {
    std::vector<ParameterReport> parameters;  ///< ring order

    const ParameterReport* find(std::string_view name) const;
    std::size_t count(Identifiability c) const;
};

IdentResult identify_parameters(const GaussianModelRing& r, const ResourceLimits& limits = {});

}  // namespace gmi
