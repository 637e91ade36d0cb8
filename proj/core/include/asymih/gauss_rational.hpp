// Exact Gaussian rationals: a + b*i with a, b in Q.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace asymih {

using Rational = mpq_class;
using Integer = mpz_class;

class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }  // NOLINT
    GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return {re_, -im_}; }
    /// |a|^2 = re^2 + im^2.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    /// |re| + |im|, an upper bound for the modulus that stays rational.
    Rational magnitude_bound() const { return abs(re_) + abs(im_); }

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    /// Throws std::domain_error on division by zero.
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic on (re, im); only for canonical ordering, not a field order.
    friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

    GaussRat pow(unsigned e) const;

    /// Canonical text: "3/2", "-i", "2*i", "(1/2 - 3*i)". Parseable by the polynomial grammar.
    std::string to_string() const;
    /// True when to_string() needs no parentheses as a product factor.
    bool is_atomic() const { return is_real() || sgn(re_) == 0; }

private:
    Rational re_{0};
    Rational im_{0};
};

std::string rational_to_string(const Rational& q);

}  // namespace asymih
