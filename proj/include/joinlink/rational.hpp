#pragma once

#include <gmpxx.h>

#include <string>

#include "joinlink/error.hpp"

namespace jl {

// Parses "p" or "p/q" (q > 0 after canonicalization) into an exact rational.
mpq_class parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_text(const mpq_class& q);

// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  mpq_class re, im;

  GaussianRational() = default;
  GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, mpq_class(-im)}; }

  GaussianRational operator-() const { return {mpq_class(-re), mpq_class(-im)}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }

  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }

  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {mpq_class(a.re * b.re - a.im * b.im), mpq_class(a.re * b.im + a.im * b.re)};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

}  // namespace jl
