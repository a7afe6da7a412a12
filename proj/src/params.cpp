#include "wpc/params.hpp"

#include <algorithm>

namespace wpc {

namespace {

// Deterministic order on elements of one fixed field.
bool elem_less(const QuadExtElem& x, const QuadExtElem& y) {
    if (x.a() != y.a())
        return x.a() < y.a();
    return x.b() < y.b();
}

void check_not_degenerate(const QuadExtElem& lambda) {
    if (auto a = lambda.as_rational()) {
        if (a->is_zero() || *a == Rational(1))
            throw degenerate_parameter("parameter must avoid 0 and 1, got " + lambda.str());
    }
}

}  // namespace

bool ParamOrbit::contains(const QuadExtElem& x) const {
    for (const QuadExtElem& r : reps)
        if (r == x)
            return true;
    return false;
}

std::optional<std::vector<Rational>> ParamOrbit::rational_reps() const {
    std::vector<Rational> out;
    out.reserve(reps.size());
    for (const QuadExtElem& r : reps) {
        auto v = r.as_rational();
        if (!v)
            return std::nullopt;
        out.push_back(*v);
    }
    return out;
}

QuadExtElem omega_parameter() {
    return QuadExtElem::generator(QuadField::omega());
}

QuadExtElem j_invariant(const QuadExtElem& lambda) {
    check_not_degenerate(lambda);
    const QuadField& f = lambda.field();
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));
    QuadExtElem q = lambda * lambda - lambda + one;              // lambda^2 - lambda + 1
    QuadExtElem num = QuadExtElem::rational(f, Rational(256)) * q * q * q;
    QuadExtElem den = lambda * lambda * (lambda - one) * (lambda - one);
    return num / den;
}

Rational j_invariant(const Rational& lambda) {
    if (lambda.is_zero() || lambda == Rational(1))
        throw degenerate_parameter("parameter must avoid 0 and 1, got " + lambda.str());
    Rational q = lambda * lambda - lambda + Rational(1);
    Rational num = Rational(256) * q * q * q;
    Rational den = lambda * lambda * (lambda - Rational(1)) * (lambda - Rational(1));
    return num / den;
}

ParamOrbit gamma_orbit(const QuadExtElem& lambda) {
    check_not_degenerate(lambda);
    const QuadField& f = lambda.field();
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));
    std::vector<QuadExtElem> reps = {
        lambda,
        one / lambda,
        one - lambda,
        one / (one - lambda),
        lambda / (lambda - one),
        (lambda - one) / lambda,
    };
    std::sort(reps.begin(), reps.end(), elem_less);
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    ParamOrbit orbit{std::move(reps), j_invariant(lambda)};
    if (6 % orbit.reps.size() != 0)
        throw internal_check("anharmonic orbit size must divide 6");
    for (const QuadExtElem& r : orbit.reps)
        if (!(j_invariant(r) == orbit.j))
            throw internal_check("j-invariant must be constant on an anharmonic orbit");
    return orbit;
}

ParamOrbit gamma_orbit(const Rational& lambda) {
    QuadField q = QuadField::sqrt_of(Rational(0));
    return gamma_orbit(QuadExtElem::rational(q, lambda));
}

bool same_gamma_orbit(const QuadExtElem& a, const QuadExtElem& b) {
    return gamma_orbit(a).contains(b);
}

bool same_gamma_orbit(const Rational& a, const Rational& b) {
    QuadField q = QuadField::sqrt_of(Rational(0));
    return gamma_orbit(a).contains(QuadExtElem::rational(q, b));
}

std::string tubular_transform_name(TubularTransform t) {
    switch (t) {
        case TubularTransform::Pair12_34: return "sqrt_lambda";
        case TubularTransform::Pair13_24: return "sqrt_1_minus_lambda";
        case TubularTransform::Pair14_23: return "sqrt_lambda_sq_minus_lambda";
        case TubularTransform::GammaLambda: return "lambda";
    }
    throw internal_check("unhandled transform");
}

TubularTransform tubular_transform_by_row(const std::string& row) {
    if (row == "x1-x2" || row == "x3-x4") return TubularTransform::Pair12_34;
    if (row == "x1-x3" || row == "x2-x4") return TubularTransform::Pair13_24;
    if (row == "x1-x4" || row == "x2-x3") return TubularTransform::Pair14_23;
    if (row == "klein" || row == "omega") return TubularTransform::GammaLambda;
    throw unknown_row(row);
}

namespace {

// Orbit of mu = ((s+1)/(s-1))^2 where s^2 = d; used with d = lambda and
// d = 1 - lambda.  When d is a rational square the whole computation stays
// in the rationals.
ParamOrbit sqrt_mobius_orbit(const Rational& d) {
    if (d.is_zero() || d == Rational(1))
        throw degenerate_parameter("radicand must avoid 0 and 1, got " + d.str());
    if (auto r = rational_sqrt(d)) {
        Rational mu = (*r + Rational(1)) / (*r - Rational(1));
        return gamma_orbit(mu * mu);
    }
    QuadField f = QuadField::sqrt_of(d);
    QuadExtElem s = QuadExtElem::generator(f);
    QuadExtElem one = QuadExtElem::rational(f, Rational(1));
    QuadExtElem mu = (s + one) / (s - one);
    return gamma_orbit(mu * mu);
}

// Orbit of mu = ((2*lambda - 1) + 2s)^2 where s^2 = lambda^2 - lambda; this is
// ((sqrt(lambda) + sqrt(lambda - 1)) / (sqrt(lambda) - sqrt(lambda - 1)))^2
// rewritten to live in a single quadratic extension.
ParamOrbit double_sqrt_orbit(const Rational& lambda) {
    Rational d = lambda * lambda - lambda;
    if (d.is_zero())
        throw degenerate_parameter("parameter must avoid 0 and 1, got " + lambda.str());
    Rational w = Rational(2) * lambda - Rational(1);
    if (auto r = rational_sqrt(d)) {
        Rational mu = w + Rational(2) * *r;
        return gamma_orbit(mu * mu);
    }
    QuadField f = QuadField::sqrt_of(d);
    QuadExtElem s = QuadExtElem::generator(f);
    QuadExtElem mu = QuadExtElem::rational(f, w) + QuadExtElem::rational(f, Rational(2)) * s;
    return gamma_orbit(mu * mu);
}

}  // namespace

ParamOrbit tubular_param_transform(TubularTransform t, const Rational& lambda) {
    if (lambda.is_zero() || lambda == Rational(1))
        throw degenerate_parameter("parameter must avoid 0 and 1, got " + lambda.str());
    switch (t) {
        case TubularTransform::Pair12_34: return sqrt_mobius_orbit(lambda);
        case TubularTransform::Pair13_24: return sqrt_mobius_orbit(Rational(1) - lambda);
        case TubularTransform::Pair14_23: return double_sqrt_orbit(lambda);
        case TubularTransform::GammaLambda: return gamma_orbit(lambda);
    }
    throw internal_check("unhandled transform");
}

}  // namespace wpc
