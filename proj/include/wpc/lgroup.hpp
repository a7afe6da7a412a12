#ifndef WPC_LGROUP_HPP
#define WPC_LGROUP_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpc/errors.hpp"

namespace wpc {

// Enumeration guard: operations that materialize the torsion subgroup refuse
// to run when its cardinality exceeds this (callers may raise or lower it).
inline constexpr std::uint64_t kDefaultTorsionBound = 1u << 16;

// Weight sequence (p_1, ..., p_t), t >= 0, each p_i >= 1. The attached
// abelian group L(p) is free on x_1..x_t modulo p_1 x_1 = ... = p_t x_t,
// with c denoting the common value; L(p) has rank one and its torsion
// subgroup tL(p) has order (prod p_i) / lcm(p_i).
struct WeightType {
    std::vector<int> weights;

    WeightType() = default;
    explicit WeightType(std::vector<int> w) : weights(std::move(w)) {}

    int count() const { return static_cast<int>(weights.size()); }
    mpz_class lcm() const;              // 1 for the empty sequence
    mpz_class weight_product() const;   // 1 for the empty sequence
    mpz_class torsion_order() const;    // weight_product / lcm, always exact

    bool operator==(const WeightType& o) const { return weights == o.weights; }
    std::string str() const;            // "(2,3,4)"
};

// Throws bad_weights unless every weight is >= 1.
void validate_weights(const WeightType& p);

// Group element in normal form: sum coeffs[i] * x_i + c_coeff * c with
// 0 <= coeffs[i] < p_i. The c coordinate is unconstrained. Every way of
// writing an element reduces to exactly one normal form, so structural
// equality below is group equality.
struct LElement {
    std::vector<int> coeffs;
    long long c_coeff = 0;

    auto operator<=>(const LElement&) const = default;
};

// --- construction -----------------------------------------------------------

// Reduce arbitrary integer coordinates: carries floor(a_i / p_i) move into
// the c coordinate via p_i x_i = c.
LElement normal_form(const WeightType& p, const std::vector<long long>& coeffs,
                     long long c_coeff);

LElement lel_zero(const WeightType& p);
LElement lel_basis(const WeightType& p, int i);   // x_i, 1-based index
LElement lel_c(const WeightType& p);

// --- arithmetic (all results in normal form) --------------------------------

LElement lel_add(const WeightType& p, const LElement& x, const LElement& y);
LElement lel_neg(const WeightType& p, const LElement& x);
LElement lel_sub(const WeightType& p, const LElement& x, const LElement& y);
LElement lel_scale(const WeightType& p, long long k, const LElement& x);

// --- structure maps ----------------------------------------------------------

// Degree homomorphism L(p) -> Z fixed by delta(x_i) = lcm/p_i, delta(c) = lcm.
// Its kernel is exactly the torsion subgroup.
mpz_class delta(const WeightType& p, const LElement& x);

bool is_torsion(const WeightType& p, const LElement& x);

// nullopt when x has infinite order; otherwise the exact order.
std::optional<mpz_class> element_order(const WeightType& p, const LElement& x);

// Dualizing element omega = (t - 2) c - sum x_i.
LElement dualizing_element(const WeightType& p);

// --- torsion subgroup --------------------------------------------------------

// Generating set {(p_i/d) x_i - (p_j/d) x_j : i < j, d = gcd(p_i, p_j)} for
// tL(p), zero entries dropped.
std::vector<LElement> torsion_generators(const WeightType& p);

// All torsion elements, sorted; throws torsion_too_large past the bound.
// The cardinality is asserted against (prod p_i)/lcm before returning.
std::vector<LElement> torsion_elements(const WeightType& p,
                                       std::uint64_t bound = kDefaultTorsionBound);

// --- subgroups ---------------------------------------------------------------

struct Subgroup {
    WeightType ambient;
    std::vector<LElement> generators;
    std::vector<LElement> elements;   // sorted, unique, closed under the group ops

    long long order() const { return static_cast<long long>(elements.size()); }
};

// Closure of torsion generators; throws non_torsion_generator if any given
// element has infinite order, torsion_too_large if the closure passes bound.
Subgroup subgroup_generate(const WeightType& p, const std::vector<LElement>& gens,
                           std::uint64_t bound = kDefaultTorsionBound);

// The full torsion subgroup as a Subgroup value.
Subgroup full_torsion_subgroup(const WeightType& p,
                               std::uint64_t bound = kDefaultTorsionBound);

bool subgroup_contains(const Subgroup& h, const LElement& x);

// Every subgroup of tL(p), each exactly once, sorted by (order, elements).
// Feasible only for small torsion; the same bound guards materialization.
std::vector<Subgroup> enumerate_subgroups(const WeightType& p,
                                          std::uint64_t bound = kDefaultTorsionBound);

// --- permutation canonicalization -------------------------------------------

// Identifier of a subgroup up to the index permutations that preserve the
// sorted weight sequence: weights ascending plus the lexicographically least
// permuted image of the element set. Two pairs (p, H), (p', H') are related
// by a weight-preserving relabeling of the marked points iff keys compare
// equal.
struct SubgroupKey {
    std::vector<int> weights;
    std::vector<LElement> elements;

    auto operator<=>(const SubgroupKey&) const = default;
    std::string str() const;
};

SubgroupKey permutation_canonical(const WeightType& p, const Subgroup& h);

} // namespace wpc

#endif
