// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "qucell/error.hpp"

namespace qucell {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Laurent polynomial in the formal variable v (a square root of q) with exact
// rational coefficients.  Invariant: either the coefficient vector is empty
// (the zero polynomial) or both its first and last entries are nonzero.
class VLaurent {
 public:
  VLaurent() = default;
  explicit VLaurent(const BigRat& constant);
  static VLaurent monomial(const BigRat& coeff, long long v_exponent);

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest and highest v-exponents with nonzero coefficient; zero polynomial
  // has no valid degree.
  long long low() const;
  long long high() const;
  BigRat coeff(long long v_exponent) const;
  // Number of nonzero terms.
  std::size_t term_count() const;

  VLaurent operator+(const VLaurent& rhs) const;
  VLaurent operator-(const VLaurent& rhs) const;
  VLaurent operator*(const VLaurent& rhs) const;
  VLaurent operator-() const;
  bool operator==(const VLaurent& rhs) const = default;

  // Multiplies by v^shift.
  VLaurent shifted(long long shift) const;
  // Multiplies every coefficient by c.
  VLaurent scaled(const BigRat& c) const;
  // The image under v -> v^{-1}.
  VLaurent bar() const;
  // Value at v = 1 (sum of coefficients).
  BigRat eval_at_one() const;

  // Iteration support: calls fn(exponent, coefficient) in increasing exponent
  // order.
  template <typename Fn>
  void for_terms(Fn&& fn) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) fn(low_ + static_cast<long long>(k), coeffs_[k]);
    }
  }

 private:
  long long low_ = 0;
  std::vector<BigRat> coeffs_;  // coeffs_[k] multiplies v^(low_ + k)

  void trim();
  friend class Scalar;
};

// Element of the rational function field Q(v), v = q^{1/2}, kept in a unique
// canonical form: numerator and denominator are coprime in Q[v], the
// denominator is an ordinary polynomial with nonzero constant term, monic in
// its highest v-power.  Syntactic equality of canonical forms is semantic
// equality.
class Scalar {
 public:
  Scalar() : den_(BigRat(1)) {}  // zero
  static Scalar zero() { return Scalar(); }
  static Scalar one() { return from_int(1); }
  static Scalar from_int(long long n);
  static Scalar from_rat(const BigRat& r);
  // v^e, i.e. q^{e/2}.
  static Scalar v_power(long long e);
  // q^e.
  static Scalar q_power(long long e) { return v_power(2 * e); }
  // num/den, reduced and normalized.  den must be nonzero.
  static Scalar ratio(const VLaurent& num, const VLaurent& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  // True when the denominator is trivial.
  bool is_laurent_polynomial() const;
  // True for c * v^e with trivial denominator.
  bool is_monomial() const;
  // Requires is_monomial(); returns (coefficient, v-exponent).
  std::pair<BigRat, long long> monomial_parts() const;

  const VLaurent& num() const { return num_; }
  const VLaurent& den() const { return den_; }

  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;  // rhs must be nonzero
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
  Scalar& operator/=(const Scalar& rhs) { return *this = *this / rhs; }
  bool operator==(const Scalar& rhs) const = default;

  // Multiplicative inverse; fails on zero.
  Scalar inverse() const;
  // Integer power, negative allowed on nonzero scalars.
  Scalar pow(long long n) const;
  // The bar involution v -> v^{-1}.
  Scalar bar() const;
  // Exact value at v = 1; raises ErrorKind::pole when the reduced denominator
  // vanishes there.
  BigRat specialize_at_one() const;

  // Canonical rendering; parse() accepts everything str() produces.
  std::string str() const;
  // Parses sums/products/quotients/powers of rational numbers and q, v;
  // fractional q-exponents with denominator 2 are accepted (q^(1/2) = v).
  static Scalar parse(std::string_view text);

 private:
  VLaurent num_;
  VLaurent den_;  // canonical: monic, constant term nonzero

  void normalize();
};

// q-integer [n] in base q^d (in v-units: q_d = v^{2d}):
// [n] = (q_d^n - q_d^{-n}) / (q_d - q_d^{-1}).
Scalar q_int(long long n, long long d);
// [n]! in base q^d.
Scalar q_factorial(long long n, long long d);

}  // namespace qucell
