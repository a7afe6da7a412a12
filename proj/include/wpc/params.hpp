#ifndef WPC_PARAMS_HPP
#define WPC_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wpc/quadext.hpp"
#include "wpc/rational.hpp"

namespace wpc {

// Orbit of a 4-point parameter under the anharmonic action
//   lambda, 1/lambda, 1-lambda, 1/(1-lambda), lambda/(lambda-1), (lambda-1)/lambda
// together with the shared j-invariant. Representatives live in one common
// quadratic presentation, are exact-deduplicated and sorted; the orbit size
// divides 6 and the j value agrees across representatives (both asserted at
// construction).
struct ParamOrbit {
    std::vector<QuadExtElem> reps;
    QuadExtElem j;

    bool contains(const QuadExtElem& x) const;
    // All representatives as plain rationals, when the orbit is rational.
    std::optional<std::vector<Rational>> rational_reps() const;
};

// Throws degenerate_parameter when lambda is 0 or 1 (the binary/degenerate
// configurations have no orbit here).
ParamOrbit gamma_orbit(const Rational& lambda);
ParamOrbit gamma_orbit(const QuadExtElem& lambda);

// j(lambda) = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
Rational j_invariant(const Rational& lambda);
QuadExtElem j_invariant(const QuadExtElem& lambda);

bool same_gamma_orbit(const Rational& a, const Rational& b);
bool same_gamma_orbit(const QuadExtElem& a, const QuadExtElem& b);

// The primitive sixth root of unity presentation and its distinguished
// parameter w (a root of x^2 = x - 1, the weight-(3,3,3) / (2,3,6) value).
QuadExtElem omega_parameter();

// Parameter transforms for the subgroup rows of the 4-point tubular type
// (2,2,2,2; lambda). Rows whose subgroup is generated by an index pair
// difference move lambda into a quadratic extension; rows that keep all
// four points fixed up to relabeling keep lambda itself.
enum class TubularTransform {
    Pair12_34,    // <x1-x2> or <x3-x4>:  mu = ((sqrt(l)+1)/(sqrt(l)-1))^2
    Pair13_24,    // <x1-x3> or <x2-x4>:  mu = ((sqrt(1-l)+1)/(sqrt(1-l)-1))^2
    Pair14_23,    // <x1-x4> or <x2-x3>:  mu = ((2l-1) + 2 sqrt(l^2-l))^2
    GammaLambda,  // Klein rows and rows containing omega: mu = lambda
};

std::string tubular_transform_name(TubularTransform t);
// Accepts row names "x1-x2", "x3-x4", "x1-x3", "x2-x4", "x1-x4", "x2-x3",
// "klein", "omega"; throws unknown_row otherwise.
TubularTransform tubular_transform_by_row(const std::string& row);

// Evaluate the transform at an exact rational lambda (not 0 or 1). When the
// needed square root is rational the orbit stays rational; otherwise it is
// computed in the single quadratic extension the transform lives in (the
// third pair row needs only sqrt(lambda^2 - lambda): the two-root quotient
// ((sqrt(l)+sqrt(l-1))/(sqrt(l)-sqrt(l-1)))^2 collapses to
// ((2l-1)+2 sqrt(l^2-l))^2, so no tower arises).
ParamOrbit tubular_param_transform(TubularTransform tr, const Rational& lambda);

} // namespace wpc

#endif
