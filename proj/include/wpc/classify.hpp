#ifndef WPC_CLASSIFY_HPP
#define WPC_CLASSIFY_HPP

#include <string>

#include "wpc/lgroup.hpp"
#include "wpc/quotient.hpp"
#include "wpc/rational.hpp"

namespace wpc {

// Representation type of a weighted projective line, by sign of the Euler
// characteristic: positive / zero / negative.
enum class WplType { Domestic, Tubular, Wild };

std::string wpl_type_name(WplType t);   // "domestic" / "tubular" / "wild"

// What a quotient curve is, as a tagged value:
//   wpl_domestic, wpl_tubular, wpl_wild : genus 0 with the named weight type
//   smooth_elliptic                     : genus 1, no weighted points
//   weighted_elliptic                   : genus 1 with weighted points
//   higher_genus (carries g)            : genus >= 2
struct CurveKind {
    enum class Tag {
        WplDomestic,
        WplTubular,
        WplWild,
        SmoothElliptic,
        WeightedElliptic,
        HigherGenus,
    } tag;
    long long genus = 0;   // set for HigherGenus

    bool operator==(const CurveKind& o) const {
        return tag == o.tag && (tag != Tag::HigherGenus || genus == o.genus);
    }
    std::string str() const;   // e.g. "higher_genus:3"
};

// chi = 2 - sum (1 - 1/p_i); cross-checked on every call against
// -delta(omega)/lcm, the degree of the dualizing element.
Rational euler_char(const WeightType& p);

// Sign classification, cross-checked against the finite weight lists
// (after dropping weight-1 entries and sorting):
//   domestic: t <= 2, (2,2,n), (2,3,3), (2,3,4), (2,3,5)
//   tubular : (2,2,2,2), (3,3,3), (2,4,4), (2,3,6)
WplType wpl_type(const WeightType& p);

// Whether omega = (t-2)c - sum x_i lies in H (false when omega has infinite
// order, i.e. when chi != 0).
bool contains_dualizing(const WeightType& p, const Subgroup& h);

CurveKind curve_kind(const QuotientCurve& q);

// The equivariant trichotomy for the pair (p, H):
//   p domestic => quotient is a domestic weighted line
//   p tubular  => quotient is a tubular weighted line, except that subgroups
//                 containing omega yield a smooth elliptic curve
//   p wild     => quotient is a wild weighted line, a weighted genus-1
//                 curve, or a curve of genus >= 2
bool trichotomy_check(const WeightType& p, const Subgroup& h);

} // namespace wpc

#endif
