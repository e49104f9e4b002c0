#include "gmi/models.hpp"

#include "gmi/errors.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <unordered_set>

namespace gmi {

namespace {

// All level tuples of `vars` in lexicographic order (first variable slowest).
std::vector<std::vector<unsigned>> level_tuples(const std::vector<unsigned>& levels, const std::vector<std::size_t>& vars) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(vars.size(), 0);
    for (;;) {
        out.push_back(cur);
        std::size_t k = vars.size();
        while (k > 0) {
            --k;
            if (++cur[k] < levels[vars[k]]) break;
            cur[k] = 0;
            if (k == 0) return out;
        }
        if (vars.empty()) return out;
    }
}

std::string index_name(const std::string& stem, const std::vector<std::string>& parts) {
    std::string s = stem + "_{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += parts[i];
    }
    return s + "}";
}

// Collects generators, dropping zeros and duplicates up to a scalar.
class GeneratorSet {
public:
    explicit GeneratorSet(RingPtr ring) : ring_(std::move(ring)) {}

    void add(Polynomial p) {
        if (p.is_zero()) return;
        if (seen_.insert(p.primitive_part().to_string()).second) gens_.push_back(std::move(p));
    }

    Ideal ideal() && { return Ideal(ring_, std::move(gens_)); }

private:
    RingPtr ring_;
    std::unordered_set<std::string> seen_;
    std::vector<Polynomial> gens_;
};

void check_statement_range(const CIStatement& s, std::size_t n) {
    if (!s.support().subset_of(VertexSet::range(n))) {
        throw InvalidArgument("independence statement mentions a vertex outside the model's " + std::to_string(n) +
                              " variables");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Rings

DiscreteModelRing::DiscreteModelRing(std::vector<unsigned> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw InvalidArgument("markov ring needs at least one variable");
    if (levels_.size() > kMaxVertices) throw InvalidArgument("too many discrete variables");
    std::size_t count = 1;
    for (unsigned d : levels_) {
        if (d == 0) throw InvalidArgument("every discrete variable needs at least one level");
        count *= d;
        if (count > 100000) throw ResourceLimitExceeded("markov ring would have more than 100000 variables");
    }
    std::vector<std::size_t> all(levels_.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::string> names;
    names.reserve(count);
    for (const auto& t : level_tuples(levels_, all)) {
        std::vector<std::string> parts;
        for (unsigned x : t) parts.push_back(std::to_string(x + 1));
        names.push_back(index_name("p", parts));
    }
    ring_ = make_ring(std::move(names));
}

std::size_t DiscreteModelRing::index(std::span<const unsigned> tuple) const {
    if (tuple.size() != levels_.size()) throw InvalidArgument("level tuple has wrong length");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= levels_[i]) throw InvalidArgument("level out of range");
        idx = idx * levels_[i] + tuple[i];
    }
    return idx;
}

DiscreteModelRing markov_ring(std::vector<unsigned> levels) { return DiscreteModelRing(std::move(levels)); }

GaussianModelRing::GaussianModelRing(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidArgument("gaussian ring needs at least one node");
    if (n > kMaxVertices) throw InvalidArgument("too many gaussian nodes");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    build(labels);
}

GaussianModelRing::GaussianModelRing(const MixedGraph& g) : n_(g.size()), graph_(g) {
    if (n_ == 0) throw InvalidArgument("gaussian ring needs at least one node");
    if (g.has_undirected() && !g.is_undirected()) {
        throw UnsupportedGraph("gaussian ring: graphs mixing undirected with directed or bidirected edges are not supported");
    }
    topological_sort(g);
    build(g.labels());
}

void GaussianModelRing::build(const std::vector<std::string>& labels) {
    std::vector<std::string> names;
    if (graph_) {
        const MixedGraph& g = *graph_;
        for (auto [u, v] : g.directed_edges()) names.push_back(index_name("l", {labels[u], labels[v]}));
        const char* stem = g.has_undirected() ? "k" : "p";
        const auto& off = g.has_undirected() ? g.undirected_edges() : g.bidirected_edges();
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i; j < n_; ++j) {
                if (i == j || std::binary_search(off.begin(), off.end(), MixedGraph::Edge{i, j})) {
                    names.push_back(index_name(stem, {labels[i], labels[j]}));
                }
            }
        }
    }
    parameters_.resize(names.size());
    std::iota(parameters_.begin(), parameters_.end(), 0);
    first_covariance_ = names.size();
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) names.push_back(index_name("s", {labels[i], labels[j]}));
    }
    ring_ = make_ring(std::move(names));
}

std::size_t GaussianModelRing::covariance_index(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) throw InvalidArgument("covariance index out of range");
    if (i > j) std::swap(i, j);
    // Row-major upper triangle: rows 0..i-1 contribute n + (n-1) + ... entries.
    return first_covariance_ + i * n_ - i * (i - 1) / 2 + (j - i);
}

PolyMatrix GaussianModelRing::covariance_matrix() const {
    PolyMatrix m(ring_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m.set(i, j, sigma(i, j));
    }
    return m;
}

namespace {

std::optional<std::size_t> find_parameter(const GaussianModelRing& r, const char* stem, std::size_t i, std::size_t j) {
    if (!r.graph()) return std::nullopt;
    const MixedGraph& g = *r.graph();
    if (i >= g.size() || j >= g.size()) return std::nullopt;
    return r.ring()->index_of(std::string(stem) + "_{" + g.label(i) + "," + g.label(j) + "}");
}

}  // namespace

std::optional<std::size_t> GaussianModelRing::lambda_index(std::size_t i, std::size_t j) const {
    return find_parameter(*this, "l", i, j);
}

std::optional<std::size_t> GaussianModelRing::psi_index(std::size_t i, std::size_t j) const {
    return find_parameter(*this, "p", std::min(i, j), std::max(i, j));
}

std::optional<std::size_t> GaussianModelRing::kappa_index(std::size_t i, std::size_t j) const {
    return find_parameter(*this, "k", std::min(i, j), std::max(i, j));
}

GaussianModelRing gaussian_ring(std::size_t n) { return GaussianModelRing(n); }
GaussianModelRing gaussian_ring(const MixedGraph& g) { return GaussianModelRing(g); }

// ---------------------------------------------------------------------------
// Conditional independence ideals

std::vector<PolyMatrix> markov_matrices(const DiscreteModelRing& r, std::span<const CIStatement> statements) {
    const auto& levels = r.levels();
    std::size_t n = levels.size();
    std::vector<PolyMatrix> out;
    for (const auto& s : statements) {
        check_statement_range(s, n);
        auto a = s.a().to_vector();
        auto b = s.b().to_vector();
        auto c = s.c().to_vector();
        auto rest = (VertexSet::range(n) - s.support()).to_vector();
        auto rows = level_tuples(levels, a);
        auto cols = level_tuples(levels, b);
        auto rest_tuples = level_tuples(levels, rest);
        for (const auto& tc : level_tuples(levels, c)) {
            std::vector<Polynomial> entries;
            entries.reserve(rows.size() * cols.size());
            std::vector<unsigned> full(n, 0);
            for (std::size_t k = 0; k < c.size(); ++k) full[c[k]] = tc[k];
            for (const auto& ta : rows) {
                for (std::size_t k = 0; k < a.size(); ++k) full[a[k]] = ta[k];
                for (const auto& tb : cols) {
                    for (std::size_t k = 0; k < b.size(); ++k) full[b[k]] = tb[k];
                    std::vector<Term> terms;
                    for (const auto& tr : rest_tuples) {
                        for (std::size_t k = 0; k < rest.size(); ++k) full[rest[k]] = tr[k];
                        terms.push_back(Term{Rational(1), Monomial::variable(r.ring()->size(), r.index(full))});
                    }
                    entries.emplace_back(r.ring(), std::move(terms));
                }
            }
            out.emplace_back(r.ring(), rows.size(), cols.size(), std::move(entries));
        }
    }
    return out;
}

Ideal ci_ideal(const DiscreteModelRing& r, std::span<const CIStatement> statements) {
    GeneratorSet gens(r.ring());
    for (const auto& m : markov_matrices(r, statements)) {
        if (m.rows() < 2 || m.cols() < 2) continue;
        for (auto& minor : minors(m, 2)) gens.add(std::move(minor));
    }
    return std::move(gens).ideal();
}

Ideal ci_ideal(const GaussianModelRing& r, std::span<const CIStatement> statements) {
    GeneratorSet gens(r.ring());
    PolyMatrix sigma = r.covariance_matrix();
    for (const auto& s : statements) {
        check_statement_range(s, r.num_nodes());
        auto rows = (s.a() | s.c()).to_vector();
        auto cols = (s.b() | s.c()).to_vector();
        for (auto& minor : minors(sigma.submatrix(rows, cols), s.c().size() + 1)) gens.add(std::move(minor));
    }
    return std::move(gens).ideal();
}

// ---------------------------------------------------------------------------
// Vanishing ideals

Ideal discrete_vanishing_ideal(const DiscreteModelRing& r, const MixedGraph& dag, const ResourceLimits& limits) {
    if (!dag.is_dag()) throw UnsupportedGraph("discrete vanishing ideal requires a directed acyclic graph");
    if (dag.size() != r.num_factors()) {
        throw InvalidArgument("graph has " + std::to_string(dag.size()) + " vertices but the ring has " +
                              std::to_string(r.num_factors()) + " discrete variables");
    }
    const auto& levels = r.levels();
    const std::size_t n = levels.size();
    const std::size_t root = topological_sort(dag).front();

    // Parameter block: one variable per conditional probability entry.
    // theta_index[v] maps (parent tuple, own level) to a variable.
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> parents(n);
    std::vector<std::size_t> theta_offset(n);
    for (std::size_t v = 0; v < n; ++v) {
        parents[v] = dag.parents(v).to_vector();
        theta_offset[v] = names.size();
        for (const auto& pt : level_tuples(levels, parents[v])) {
            std::vector<std::string> parts;
            for (unsigned x : pt) parts.push_back(std::to_string(x + 1));
            for (unsigned x = 0; x < levels[v]; ++x) {
                std::string cond;
                for (std::size_t k = 0; k < parts.size(); ++k) cond += (k ? "," : "") + parts[k];
                names.push_back("t" + dag.label(v) + "_{" + std::to_string(x + 1) + "|" + cond + "}");
            }
        }
    }
    const std::size_t nparams = names.size();
    for (const auto& name : r.ring()->names()) names.push_back(name);
    RingPtr work = make_ring(std::move(names));

    auto theta = [&](std::size_t v, const std::vector<unsigned>& full, unsigned level) {
        std::size_t config = 0;
        for (std::size_t p : parents[v]) config = config * levels[p] + full[p];
        return theta_offset[v] + config * levels[v] + level;
    };

    std::vector<Polynomial> gens;
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (const auto& full : level_tuples(levels, all)) {
        Monomial m(work->size());
        for (std::size_t v = 0; v < n; ++v) {
            std::size_t t = theta(v, full, full[v]);
            m.set(t, m[t] + 1);
        }
        gens.push_back(Polynomial::variable(work, nparams + r.index(full)) - Polynomial(work, {Term{Rational(1), m}}));
    }
    // The root's table stays unnormalized; its scale sweeps out the cone over
    // the model, so the resulting ideal is homogeneous.
    for (std::size_t v = 0; v < n; ++v) {
        if (v == root) continue;
        for (const auto& pt : level_tuples(levels, parents[v])) {
            std::vector<unsigned> full(n, 0);
            for (std::size_t k = 0; k < parents[v].size(); ++k) full[parents[v][k]] = pt[k];
            Polynomial sum = Polynomial::constant(work, -1);
            for (unsigned x = 0; x < levels[v]; ++x) sum += Polynomial::variable(work, theta(v, full, x));
            gens.push_back(std::move(sum));
        }
    }

    std::vector<std::size_t> kill(nparams);
    std::iota(kill.begin(), kill.end(), 0);
    Ideal eliminated = eliminate(Ideal(work, std::move(gens)), kill, limits, "discrete vanishing ideal");

    std::vector<std::size_t> var_map(work->size(), Polynomial::npos);
    for (std::size_t i = 0; i < r.ring()->size(); ++i) var_map[nparams + i] = i;
    std::vector<Polynomial> out;
    for (const auto& g : eliminated.generators()) out.push_back(g.remap(r.ring(), var_map));
    Ideal result(r.ring(), out);
    result.seed_basis(MonomialOrder::grevlex(r.ring()->size()), std::move(out));
    return result;
}

PolyMatrix covariance_parametrization(const GaussianModelRing& r) {
    if (!r.graph()) throw InvalidArgument("covariance parametrization needs a ring constructed from a graph");
    const MixedGraph& g = *r.graph();
    if (g.has_undirected()) throw UnsupportedGraph("covariance parametrization does not support undirected edges");
    const RingPtr& ring = r.ring();
    std::size_t n = r.num_nodes();
    PolyMatrix lambda(ring, n, n);
    PolyMatrix psi(ring, n, n);
    for (auto [u, v] : g.directed_edges()) lambda.set(u, v, Polynomial::variable(ring, *r.lambda_index(u, v)));
    for (std::size_t i = 0; i < n; ++i) psi.set(i, i, Polynomial::variable(ring, *r.psi_index(i, i)));
    for (auto [u, v] : g.bidirected_edges()) {
        auto p = Polynomial::variable(ring, *r.psi_index(u, v));
        psi.set(u, v, p);
        psi.set(v, u, p);
    }
    // Λ is nilpotent, so (I - Λ)^{-1} = I + Λ + ... + Λ^{n-1}.
    PolyMatrix inverse = PolyMatrix::identity(ring, n);
    PolyMatrix power = lambda;
    for (std::size_t k = 1; k < n; ++k) {
        inverse = inverse + power;
        power = power * lambda;
    }
    return inverse.transpose() * psi * inverse;
}

namespace {

std::vector<Polynomial> parametrization_relations(const GaussianModelRing& r) {
    PolyMatrix sigma = covariance_parametrization(r);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < r.num_nodes(); ++i) {
        for (std::size_t j = i; j < r.num_nodes(); ++j) gens.push_back(r.sigma(i, j) - sigma(i, j));
    }
    return gens;
}

}  // namespace

Ideal gaussian_vanishing_ideal(const GaussianModelRing& r, const ResourceLimits& limits) {
    if (!r.graph()) throw InvalidArgument("gaussian vanishing ideal needs a ring constructed from a graph");
    const MixedGraph& g = *r.graph();
    const RingPtr& ring = r.ring();
    std::size_t n = r.num_nodes();
    std::vector<Polynomial> gens;
    if (g.has_undirected()) {
        // Concentration model: Σ K = I with K supported on the edges.
        PolyMatrix k(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (auto idx = r.kappa_index(i, j)) k.set(i, j, Polynomial::variable(ring, *idx));
            }
        }
        PolyMatrix product = r.covariance_matrix() * k;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                gens.push_back(i == j ? product(i, j) - Polynomial::constant(ring, 1) : product(i, j));
            }
        }
    } else {
        gens = parametrization_relations(r);
    }
    return eliminate(Ideal(ring, std::move(gens)), r.parameters(), limits, "gaussian vanishing ideal");
}

Ideal trek_ideal(const GaussianModelRing& r, const MixedGraph& g, std::size_t max_vertices) {
    if (g.has_undirected()) throw UnsupportedGraph("trek ideal does not support undirected edges");
    if (g.size() != r.num_nodes()) throw InvalidArgument("graph and gaussian ring disagree on the number of nodes");
    if (g.size() > max_vertices) {
        throw ResourceLimitExceeded("trek ideal enumeration over " + std::to_string(g.size()) +
                                    " vertices exceeds the cap of " + std::to_string(max_vertices));
    }
    topological_sort(g);
    const std::size_t n = g.size();
    PolyMatrix sigma = r.covariance_matrix();
    GeneratorSet gens(r.ring());
    std::set<std::pair<std::uint64_t, std::uint64_t>> done;
    const std::uint64_t full = VertexSet::range(n).bits();
    for (std::uint64_t abits = 1; abits <= full; ++abits) {
        for (std::uint64_t bbits = 1; bbits <= full; ++bbits) {
            VertexSet a = VertexSet::from_bits(abits);
            VertexSet b = VertexSet::from_bits(bbits);
            std::size_t cut = trek_min_cut(g, a, b);
            if (cut >= std::min(a.size(), b.size())) continue;
            // Enumerate (cut+1)-subsets of A and B; each square subdeterminant
            // is computed once (Σ is symmetric, so transposes coincide).
            auto rows = a.to_vector();
            auto cols = b.to_vector();
            std::size_t k = cut + 1;
            std::vector<std::size_t> ri(k);
            std::vector<std::size_t> ci(k);
            auto first = [](std::vector<std::size_t>& idx) { std::iota(idx.begin(), idx.end(), 0); };
            auto next = [](std::vector<std::size_t>& idx, std::size_t m) {
                for (std::size_t i = idx.size(); i-- > 0;) {
                    if (idx[i] < m - idx.size() + i) {
                        ++idx[i];
                        for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
                        return true;
                    }
                }
                return false;
            };
            first(ri);
            do {
                std::vector<std::size_t> sub_rows;
                VertexSet rs;
                for (std::size_t i : ri) {
                    sub_rows.push_back(rows[i]);
                    rs.insert(rows[i]);
                }
                first(ci);
                do {
                    std::vector<std::size_t> sub_cols;
                    VertexSet cs;
                    for (std::size_t i : ci) {
                        sub_cols.push_back(cols[i]);
                        cs.insert(cols[i]);
                    }
                    std::pair<std::uint64_t, std::uint64_t> key{std::min(rs.bits(), cs.bits()), std::max(rs.bits(), cs.bits())};
                    if (!done.insert(key).second) continue;
                    gens.add(determinant(sigma.submatrix(sub_rows, sub_cols)));
                } while (next(ci, cols.size()));
            } while (next(ri, rows.size()));
        }
    }
    return std::move(gens).ideal();
}

// ---------------------------------------------------------------------------
// Identifiability

std::string_view to_string(Identifiability c) noexcept {
    switch (c) {
    case Identifiability::generically_identifiable:
        return "generically-identifiable";
    case Identifiability::non_identifiable_generically:
        return "non-identifiable-generically";
    case Identifiability::algebraic:
        return "algebraic";
    case Identifiability::undetermined:
        return "undetermined";
    }
    return "?";
}

const ParameterReport* IdentResult::find(std::string_view name) const {
    for (const auto& p : parameters) {
        if (p.name == name) return &p;
    }
    return nullptr;
}

std::size_t IdentResult::count(Identifiability c) const {
    return static_cast<std::size_t>(
        std::count_if(parameters.begin(), parameters.end(), [c](const ParameterReport& p) { return p.classification == c; }));
}

IdentResult identify_parameters(const GaussianModelRing& r, const ResourceLimits& limits) {
    if (!r.has_parameters()) throw InvalidArgument("identifiability needs a ring carrying graph parameters");
    if (r.graph()->has_undirected()) throw UnsupportedGraph("identifiability is defined for directed and bidirected edges");
    const RingPtr& ring = r.ring();
    std::vector<Polynomial> relations = parametrization_relations(r);
    const auto& params = r.parameters();

    IdentResult result;
    for (std::size_t t : params) {
        ParameterReport report{t, ring->name(t), Identifiability::undetermined, std::nullopt, std::nullopt, {}};
        // Other parameters first, then t alone, then the covariances.
        std::vector<std::uint8_t> block_of(ring->size(), 2);
        for (std::size_t q : params) block_of[q] = 0;
        block_of[t] = 1;
        MonomialOrder order = MonomialOrder::blocks(block_of);
        std::vector<Polynomial> basis;
        try {
            basis = groebner_basis(relations, order, limits, "identifiability of " + ring->name(t));
        } catch (const ResourceLimitExceeded& e) {
            report.diagnostic = e.what();
            result.parameters.push_back(std::move(report));
            continue;
        }
        std::vector<Polynomial> kept;
        for (auto& g : basis) {
            bool other = std::any_of(params.begin(), params.end(), [&](std::size_t q) { return q != t && g.uses_variable(q); });
            if (!other) kept.push_back(std::move(g));
        }
        int min_degree = 0;
        for (const auto& g : kept) {
            int d = g.degree_in(t);
            if (d > 0 && (min_degree == 0 || d < min_degree)) min_degree = d;
        }
        if (min_degree == 0) {
            report.classification = Identifiability::non_identifiable_generically;
        } else if (min_degree == 1) {
            report.classification = Identifiability::generically_identifiable;
            // Basis order is increasing leading monomial: take the smallest witness.
            auto it = std::find_if(kept.begin(), kept.end(), [&](const Polynomial& g) { return g.degree_in(t) == 1; });
            report.witness = it->primitive_part();
        } else {
            report.classification = Identifiability::algebraic;
        }
        report.relations = Ideal(ring, std::move(kept));
        result.parameters.push_back(std::move(report));
    }
    return result;
}

}  // namespace gmi
