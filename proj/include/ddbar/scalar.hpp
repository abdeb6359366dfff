#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ddbar {

/// Base error type for the whole engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape or ambient-dimension mismatch between operands.
struct DimensionError : Error {
    using Error::Error;
};

/// A quotient was requested whose denominator is not contained in the
/// numerator. Upstream this always means a broken complex.
struct ContainmentError : Error {
    using Error::Error;
};

/// Malformed input document (scalar literal, model file, bicomplex file).
struct ParseError : Error {
    using Error::Error;
};

/// Structural misuse: unknown builtin, missing conjugation, non-positive
/// metric, not an exterior-algebra model.
struct ModelError : Error {
    using Error::Error;
};

using Rational = mpq_class;

/// Parse "a" or "a/b" into a canonical rational. Rejects zero denominators
/// and anything that is not an optionally signed integer fraction.
Rational parse_rational(const std::string& text);

/// Canonical "a" or "a/b" rendering (den > 0, gcd = 1).
std::string rational_to_string(const Rational& q);

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// mpq_class keeps both parts in canonical reduced form, so equality of
/// values is equality of representations.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// Squared modulus re^2 + im^2, a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Human-readable rendering, e.g. "0", "3/2", "i", "1-2i".
    std::string str() const;

  private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace ddbar
