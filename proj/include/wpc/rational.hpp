#ifndef WPC_RATIONAL_HPP
#define WPC_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "wpc/errors.hpp"

namespace wpc {

// Arbitrary-precision rational, always stored reduced with positive
// denominator (the canonical form mpq maintains). All arithmetic is exact;
// nothing in this library ever touches floating point.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                  // NOLINT: implicit on purpose
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw division_by_zero("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    // Accepts "p/q" or "p" with optional sign; rejects anything else.
    static Rational parse(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value (exact floor, also for negatives).
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }

    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw division_by_zero();
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

} // namespace wpc

#endif
