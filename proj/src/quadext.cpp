#include "wpc/quadext.hpp"

namespace wpc {

std::string QuadField::str() const {
    if (mode == QuadMode::Omega)
        return "Q(w), w^2 = w - 1";
    if (d.is_zero())
        return "Q";   // the rational-orbit marker field
    return "Q(sqrt(" + d.str() + "))";
}

static void require_same_field(const QuadExtElem& x, const QuadExtElem& y) {
    if (!(x.field() == y.field()))
        throw field_mismatch("elements of " + x.field().str() + " and " +
                             y.field().str() + " do not mix");
}

QuadExtElem QuadExtElem::conj() const {
    if (field_.mode == QuadMode::Omega)
        return QuadExtElem(field_, a_ + b_, -b_);   // conj(w) = 1 - w
    return QuadExtElem(field_, a_, -b_);
}

Rational QuadExtElem::norm() const {
    if (field_.mode == QuadMode::Omega)
        return a_ * a_ + a_ * b_ + b_ * b_;
    return a_ * a_ - field_.d * b_ * b_;
}

QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_field(x, y);
    return QuadExtElem(x.field_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_field(x, y);
    return QuadExtElem(x.field_, x.a_ - y.a_, x.b_ - y.b_);
}

QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_field(x, y);
    if (x.field_.mode == QuadMode::Omega) {
        // (a1 + b1 w)(a2 + b2 w), reduced by w^2 = w - 1
        return QuadExtElem(x.field_,
                           x.a_ * y.a_ - x.b_ * y.b_,
                           x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
    }
    return QuadExtElem(x.field_,
                       x.a_ * y.a_ + x.field_.d * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_);
}

QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_field(x, y);
    Rational n = y.norm();
    if (n.is_zero()) {
        if (y.is_zero())
            throw division_by_zero();
        // Only reachable when d is a rational square (the presentation has
        // zero divisors); the callers that build over square d stay rational.
        throw division_by_zero("division by a zero divisor (norm vanishes in " +
                               y.field_.str() + ")");
    }
    QuadExtElem z = x * y.conj();
    return QuadExtElem(x.field_, z.a_ / n, z.b_ / n);
}

bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
    require_same_field(x, y);
    return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExtElem::str() const {
    const char* gen = field_.mode == QuadMode::Omega ? "w" : "s";
    if (b_.is_zero())
        return a_.str();
    std::string bs = b_ == Rational(1) ? std::string(gen)
                   : b_ == Rational(-1) ? "-" + std::string(gen)
                                        : b_.str() + "*" + gen;
    if (a_.is_zero())
        return bs;
    return a_.str() + (b_.sign() > 0 ? "+" : "") + bs;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r.sign() < 0)
        return std::nullopt;
    const mpz_class& num = r.num();
    const mpz_class& den = r.den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

} // namespace wpc
