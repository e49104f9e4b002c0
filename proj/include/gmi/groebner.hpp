#pragma once

#include "gmi/monomial_order.hpp"
#include "gmi/polynomial.hpp"

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gmi {

/// Caps on a Groebner basis computation. Exceeding one raises
/// ResourceLimitExceeded; results are never silently truncated.
struct ResourceLimits {
    std::size_t max_basis = 20000;      ///< elements in the intermediate basis
    std::size_t max_terms = 500000;     ///< terms in any intermediate polynomial
    double timeout_seconds = 0.0;       ///< wall clock per computation; 0 disables
};

/// Remainder of multivariate division of `f` by `basis` (full reduction).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const MonomialOrder& order);

/// Reduced Groebner basis: monic, auto-reduced, sorted by increasing leading
/// monomial in `order`. `what` names the computation in diagnostics.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators, const MonomialOrder& order,
                                       const ResourceLimits& limits = {}, std::string_view what = {});

/// As above for homogeneous input, correct up to degree `degree_bound` only.
std::vector<Polynomial> truncated_groebner_basis(std::span<const Polynomial> generators,
                                                 const MonomialOrder& order, unsigned degree_bound,
                                                 const ResourceLimits& limits = {},
                                                 std::string_view what = {});

/// S-polynomial of f and g with respect to `order`.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Ideal of a polynomial ring. Reduced bases are cached per monomial order;
/// copies share the cache and the cache is safe under concurrent use.
class Ideal {
public:
    explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool has_zero_generators() const noexcept { return generators_.empty(); }

    /// Reduced basis in `order` (grevlex when omitted), computed once.
    const std::vector<Polynomial>& groebner_basis(const ResourceLimits& limits = {}) const;
    const std::vector<Polynomial>& groebner_basis(const MonomialOrder& order,
                                                  const ResourceLimits& limits = {}) const;

    /// Seeds the cache with a basis known to be the reduced basis for `order`.
    void seed_basis(const MonomialOrder& order, std::vector<Polynomial> basis) const;

    bool contains(const Polynomial& f, const ResourceLimits& limits = {}) const;
    /// True iff the ideal is the zero ideal.
    bool is_zero(const ResourceLimits& limits = {}) const;

private:
    struct Cache;

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal, const ResourceLimits& limits = {});

/// True iff every generator of `a` lies in `b`.
bool is_subset(const Ideal& a, const Ideal& b, const ResourceLimits& limits = {});

enum class IdealRelation { equal, first_in_second, second_in_first, incomparable };

IdealRelation ideal_compare(const Ideal& a, const Ideal& b, const ResourceLimits& limits = {});

std::string_view to_string(IdealRelation r) noexcept;

/// Intersection with the subring generated by the variables not in `kill`.
/// The result lives in the same ring and its generators are the reduced
/// grevlex basis of the elimination ideal.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> kill, const ResourceLimits& limits = {},
                std::string_view what = {});

struct DegreeProfile {
    std::vector<int> degrees;  ///< sorted ascending
    bool homogeneous = true;   ///< false: degrees of an interreduced, not minimal, generating set
};

/// Degrees of a minimal homogeneous generating set.
DegreeProfile min_gens_degrees(const Ideal& ideal, const ResourceLimits& limits = {});

/// Generators of a minimal generating set, chosen greedily from the
/// generators in degree order (homogeneous ideals only).
std::vector<Polynomial> minimal_generators(const Ideal& ideal, const ResourceLimits& limits = {});

}  // namespace gmi
