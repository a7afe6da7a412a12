#ifndef WPC_QUADEXT_HPP
#define WPC_QUADEXT_HPP

#include <optional>
#include <string>

#include "wpc/rational.hpp"

namespace wpc {

// Which degree-2 presentation an element lives in:
//   SqrtD : basis {1, s} with s^2 = d       (Q(sqrt(d)); d any rational)
//   Omega : basis {1, w} with w^2 = w - 1   (w a primitive sixth root of unity)
// The Omega presentation is kept separate rather than encoded as d = -3/4-ish
// shifts so that w itself is a basis element and w^2 - w + 1 == 0 holds on
// the nose.
enum class QuadMode { SqrtD, Omega };

struct QuadField {
    QuadMode mode = QuadMode::SqrtD;
    Rational d;   // meaningful only in SqrtD mode

    static QuadField sqrt_of(const Rational& d) { return {QuadMode::SqrtD, d}; }
    static QuadField omega() { return {QuadMode::Omega, Rational(0)}; }

    bool operator==(const QuadField& o) const {
        if (mode != o.mode) return false;
        return mode == QuadMode::Omega || d == o.d;
    }
    std::string str() const;
};

// Element a + b*s of a quadratic presentation. Two elements interoperate only
// when their fields coincide; mixing throws. For non-square d (and always in
// Omega mode) the presentation is a field; for square d it is merely a ring
// with zero divisors, and division throws when it hits one (norm == 0).
class QuadExtElem {
public:
    QuadExtElem() : field_(QuadField::sqrt_of(Rational(0))) {}
    QuadExtElem(QuadField field, Rational a, Rational b)
        : field_(field), a_(std::move(a)), b_(std::move(b)) {}
    // The rational r embedded into `field`.
    static QuadExtElem rational(const QuadField& field, const Rational& r) {
        return QuadExtElem(field, r, Rational(0));
    }
    // The generator s (resp. w) of `field`.
    static QuadExtElem generator(const QuadField& field) {
        return QuadExtElem(field, Rational(0), Rational(1));
    }

    const QuadField& field() const { return field_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational_value() const { return b_.is_zero(); }
    // The rational value if b == 0, nullopt otherwise.
    std::optional<Rational> as_rational() const {
        if (b_.is_zero()) return a_;
        return std::nullopt;
    }

    QuadExtElem conj() const;
    // x * conj(x), always rational. In Omega mode this is a^2 + ab + b^2 > 0
    // unless x == 0; in SqrtD mode it is a^2 - d b^2.
    Rational norm() const;

    QuadExtElem operator-() const { return QuadExtElem(field_, -a_, -b_); }
    friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y);
    friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y);
    friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y);
    friend QuadExtElem operator/(const QuadExtElem& x, const QuadExtElem& y);

    friend bool operator==(const QuadExtElem& x, const QuadExtElem& y);
    friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

    std::string str() const;

private:
    QuadField field_;
    Rational a_, b_;
};

// Exact square-root test: returns the nonnegative rational root of r when r
// is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace wpc

#endif
