#ifndef WPC_QUOTIENT_HPP
#define WPC_QUOTIENT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wpc/lgroup.hpp"
#include "wpc/rational.hpp"

namespace wpc {

// Numerical data of the quotient curve attached to a finite degree-shift
// action: a subgroup H <= tL(p) of order n acting on the weighted line with
// weight type p. Per original index j the quotient carries n_j = n d_j / p_j
// points of weight d_j, where d_j is the coordinate gcd below, and its genus
// satisfies g = (n/2) sum_j (1 - d_j/p_j) - n + 1.
struct QuotientCurve {
    long long genus = 0;
    // (d_j, n_j) in original index order, one entry per weight of p.
    std::vector<std::pair<int, long long>> full_weights;
    // Reduced weight sequence: every d_j > 1 repeated n_j times, sorted.
    std::vector<int> weights;
    long long order = 1;    // |H|
    bool smooth = false;    // all d_j == 1
};

// d_j = gcd(p_j, all j-th normal-form coefficients over the WHOLE element
// set of H). Computing over the full set rather than a generating set makes
// the value independent of the chosen generators.
std::vector<int> coordinate_gcds(const WeightType& p, const Subgroup& h);

// Throws non_integral_multiplicity / non_integral_genus if H is not actually
// a subgroup for p (cannot happen for closures produced by this library).
// The orbifold Riemann-Hurwitz identity n * chi(p) = chi(quotient) is
// asserted internally on every call.
QuotientCurve quotient_curve(const WeightType& p, const Subgroup& h);

bool is_smooth_quotient(const WeightType& p, const Subgroup& h);

// Euler characteristic 2(1 - g) - sum_j n_j (1 - 1/d_j) of the quotient.
Rational quotient_euler(const QuotientCurve& q);

// Number of indices attaining the maximal power of the prime q among the
// weights; equals t when q divides no weight. Throws not_prime otherwise.
int index_q(const WeightType& p, long long q);

// Some H <= tL(p) with all d_j = 1 exists iff index_q(p) >= 2 for every
// prime q dividing a weight; the full torsion subgroup is then a witness.
// Returns the existence flag plus the witness (materialized only under the
// bound; existence itself needs no enumeration).
std::pair<bool, std::optional<Subgroup>>
exists_smooth_subgroup(const WeightType& p, std::uint64_t bound = kDefaultTorsionBound);

// The weight type (2,...,2) with g+3 entries together with the rank-two
// subgroup whose quotient is a smooth hyperelliptic curve of genus g:
// H = < x1 - x2,  [g even] x2 + sum_{i=3}^{g+3} (-1)^i x_i >. Requires g >= 1.
std::pair<WeightType, Subgroup> hyperelliptic_subgroup(long long g);

} // namespace wpc

#endif
