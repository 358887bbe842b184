// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qucell {

namespace {

// Dense ordinary polynomial, index = v-exponent.  Used only inside
// normalization; the empty vector is zero and the last entry is nonzero.
using Poly = std::vector<BigRat>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool poly_is_zero(const Poly& p) { return p.empty(); }

long long poly_deg(const Poly& p) { return static_cast<long long>(p.size()) - 1; }

Poly poly_quot(Poly a, const Poly& b) {
  const long long db = poly_deg(b);
  const BigRat& lead_b = b.back();
  Poly q;
  if (poly_deg(a) >= db) q.assign(static_cast<std::size_t>(poly_deg(a) - db + 1), BigRat(0));
  while (!poly_is_zero(a) && poly_deg(a) >= db) {
    const long long shift = poly_deg(a) - db;
    const BigRat factor = a.back() / lead_b;
    q[static_cast<std::size_t>(shift)] = factor;
    for (long long k = 0; k <= db; ++k) {
      a[static_cast<std::size_t>(k + shift)] -= factor * b[static_cast<std::size_t>(k)];
    }
    poly_trim(a);
  }
  poly_trim(q);
  return q;
}

// Integer polynomials for the gcd kernel; rational Euclid explodes the
// coefficient sizes, the primitive remainder sequence keeps them bounded.
using BigInt = boost::multiprecision::cpp_int;
using ZPoly = std::vector<BigInt>;

void z_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void z_make_primitive(ZPoly& p) {
  BigInt g = 0;
  for (const BigInt& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (BigInt& c : p) c /= g;
  }
}

ZPoly z_primitive_from(const Poly& p) {
  BigInt common = 1;
  for (const BigRat& c : p) {
    const BigInt d = boost::multiprecision::denominator(c);
    common = common / boost::multiprecision::gcd(common, d) * d;
  }
  ZPoly r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] = boost::multiprecision::numerator(p[k]) *
           (common / boost::multiprecision::denominator(p[k]));
  }
  z_trim(r);
  z_make_primitive(r);
  return r;
}

// Primitive part of the pseudo-remainder of a by b; b nonzero.
ZPoly z_prim_prem(ZPoly a, const ZPoly& b) {
  const long long db = static_cast<long long>(b.size()) - 1;
  const BigInt& lead_b = b.back();
  while (!a.empty() && static_cast<long long>(a.size()) - 1 >= db) {
    const long long shift = static_cast<long long>(a.size()) - 1 - db;
    const BigInt factor = a.back();
    for (BigInt& c : a) c *= lead_b;
    for (long long k = 0; k <= db; ++k) {
      a[static_cast<std::size_t>(k + shift)] -= factor * b[static_cast<std::size_t>(k)];
    }
    z_trim(a);
  }
  z_make_primitive(a);
  return a;
}

// Monic gcd over Q[v].
Poly poly_gcd(const Poly& a, const Poly& b) {
  ZPoly za = z_primitive_from(a);
  ZPoly zb = z_primitive_from(b);
  if (za.size() < zb.size()) std::swap(za, zb);
  while (!zb.empty()) {
    ZPoly r = z_prim_prem(std::move(za), zb);
    za = std::move(zb);
    zb = std::move(r);
  }
  Poly g(za.size());
  if (!za.empty()) {
    const BigRat lead(za.back());
    for (std::size_t k = 0; k < za.size(); ++k) g[k] = BigRat(za[k]) / lead;
  }
  return g;
}

}  // namespace

// ---------------------------------------------------------------------------
// VLaurent

VLaurent::VLaurent(const BigRat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

VLaurent VLaurent::monomial(const BigRat& coeff, long long v_exponent) {
  VLaurent p;
  if (coeff != 0) {
    p.low_ = v_exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

long long VLaurent::low() const {
  if (is_zero()) fail(ErrorKind::invalid_argument, "degree of zero polynomial");
  return low_;
}

long long VLaurent::high() const {
  if (is_zero()) fail(ErrorKind::invalid_argument, "degree of zero polynomial");
  return low_ + static_cast<long long>(coeffs_.size()) - 1;
}

BigRat VLaurent::coeff(long long v_exponent) const {
  if (is_zero() || v_exponent < low_ ||
      v_exponent >= low_ + static_cast<long long>(coeffs_.size())) {
    return BigRat(0);
  }
  return coeffs_[static_cast<std::size_t>(v_exponent - low_)];
}

std::size_t VLaurent::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) {
    if (c != 0) ++n;
  }
  return n;
}

void VLaurent::trim() {
  std::size_t drop_front = 0;
  while (drop_front < coeffs_.size() && coeffs_[drop_front] == 0) ++drop_front;
  if (drop_front == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  if (drop_front > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop_front));
    low_ += static_cast<long long>(drop_front);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

VLaurent VLaurent::operator+(const VLaurent& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const long long lo = std::min(low_, rhs.low_);
  const long long hi = std::max(high(), rhs.high());
  VLaurent r;
  r.low_ = lo;
  r.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), BigRat(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    r.coeffs_[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    r.coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + k] += rhs.coeffs_[k];
  }
  r.trim();
  return r;
}

VLaurent VLaurent::operator-() const {
  VLaurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

VLaurent VLaurent::operator-(const VLaurent& rhs) const { return *this + (-rhs); }

VLaurent VLaurent::operator*(const VLaurent& rhs) const {
  if (is_zero() || rhs.is_zero()) return VLaurent();
  VLaurent r;
  r.low_ = low_ + rhs.low_;
  r.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

VLaurent VLaurent::shifted(long long shift) const {
  if (is_zero()) return *this;
  VLaurent r = *this;
  r.low_ += shift;
  return r;
}

VLaurent VLaurent::scaled(const BigRat& c) const {
  if (c == 0) return VLaurent();
  VLaurent r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

VLaurent VLaurent::bar() const {
  if (is_zero()) return *this;
  VLaurent r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -high();
  r.trim();
  return r;
}

BigRat VLaurent::eval_at_one() const {
  BigRat s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_int(long long n) { return from_rat(BigRat(n)); }

Scalar Scalar::from_rat(const BigRat& r) {
  Scalar s;
  s.num_ = VLaurent(r);
  s.den_ = VLaurent(BigRat(1));
  return s;
}

Scalar Scalar::v_power(long long e) {
  Scalar s;
  s.num_ = VLaurent::monomial(BigRat(1), e);
  s.den_ = VLaurent(BigRat(1));
  return s;
}

Scalar Scalar::ratio(const VLaurent& num, const VLaurent& den) {
  if (den.is_zero()) fail(ErrorKind::invalid_argument, "zero denominator");
  Scalar s;
  s.num_ = num;
  s.den_ = den;
  s.normalize();
  return s;
}

// Restores the canonical form: denominator monic with nonzero constant term,
// numerator and denominator coprime in Q[v].
void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = VLaurent(BigRat(1));
    return;
  }
  // Shift all v-powers of the denominator into the numerator.
  const long long dshift = den_.low_;
  den_.low_ = 0;
  num_.low_ -= dshift;
  // A monomial numerator shares no factor with the denominator: after the
  // shift the denominator has a nonzero constant term, so v does not divide
  // it and the gcd is constant.
  if (den_.coeffs_.size() > 1 && num_.coeffs_.size() > 1) {
    // Cancel common polynomial factors (v itself never divides den_ now).
    Poly n0(num_.coeffs_.begin(), num_.coeffs_.end());
    Poly d0(den_.coeffs_.begin(), den_.coeffs_.end());
    poly_trim(n0);
    poly_trim(d0);
    Poly g = poly_gcd(n0, d0);
    if (poly_deg(g) > 0) {
      const long long nlow = num_.low_;
      Poly nq = poly_quot(std::move(n0), g);
      Poly dq = poly_quot(std::move(d0), g);
      num_.coeffs_.assign(nq.begin(), nq.end());
      num_.low_ = nlow;
      den_.coeffs_.assign(dq.begin(), dq.end());
      den_.low_ = 0;
      num_.trim();
      den_.trim();
    }
  }
  // Make the denominator monic.
  const BigRat lead = den_.coeffs_.back();
  if (lead != 1) {
    const BigRat inv = BigRat(1) / lead;
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

bool Scalar::is_one() const {
  return den_.coeffs_.size() == 1 && den_.low_ == 0 && num_.coeffs_.size() == 1 &&
         num_.low_ == 0 && num_.coeffs_[0] == 1;
}

bool Scalar::is_laurent_polynomial() const {
  return den_.coeffs_.size() == 1 && den_.low_ == 0;
}

bool Scalar::is_monomial() const {
  return is_laurent_polynomial() && num_.term_count() == 1;
}

std::pair<BigRat, long long> Scalar::monomial_parts() const {
  if (!is_monomial()) fail(ErrorKind::invalid_argument, "scalar is not a monomial: " + str());
  return {num_.coeffs_.front(), num_.low_};
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  Scalar s;
  if (den_ == rhs.den_) {
    s.num_ = num_ + rhs.num_;
    s.den_ = den_;
  } else {
    s.num_ = num_ * rhs.den_ + rhs.num_ * den_;
    s.den_ = den_ * rhs.den_;
  }
  s.normalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  if (is_zero() || rhs.is_zero()) return Scalar();
  Scalar s;
  s.num_ = num_ * rhs.num_;
  s.den_ = den_ * rhs.den_;
  s.normalize();
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::invalid_argument, "inverse of zero");
  Scalar s;
  s.num_ = den_;
  s.den_ = num_;
  s.normalize();
  return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::pow(long long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r = one();
  Scalar base = *this;
  unsigned long long e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::bar() const {
  Scalar s;
  s.num_ = num_.bar();
  s.den_ = den_.bar();
  s.normalize();
  return s;
}

BigRat Scalar::specialize_at_one() const {
  const BigRat d = den_.eval_at_one();
  if (d == 0) fail(ErrorKind::pole, "pole at q = 1 in " + str());
  return num_.eval_at_one() / d;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string rat_str(const BigRat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// Renders |coeff| * v^e with v shown as q^{1/2}; omits a unit coefficient
// unless the monomial is constant.
std::string term_str(const BigRat& coeff_abs, long long e) {
  std::string power;
  if (e != 0) {
    if (e % 2 == 0) {
      const long long qe = e / 2;
      power = qe == 1 ? "q" : "q^" + std::to_string(qe);
    } else {
      power = "q^(" + std::to_string(e) + "/2)";
    }
  }
  const bool unit = coeff_abs == 1;
  if (power.empty()) return rat_str(coeff_abs);
  if (unit) return power;
  return rat_str(coeff_abs) + "*" + power;
}

std::string laurent_str(const VLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  p.for_terms([&](long long e, const BigRat& c) {
    const bool neg = c < 0;
    const BigRat mag = neg ? BigRat(-c) : c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_str(mag, e);
  });
  return out;
}

}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  const std::string n = laurent_str(num_);
  if (is_laurent_polynomial()) return n;
  const std::string d = laurent_str(den_);
  const std::string wrapped_num = num_.term_count() > 1 ? "(" + n + ")" : n;
  return wrapped_num + "/(" + d + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

// Recursive-descent parser for the scalar grammar.  Whitespace insensitive.
//   sum    := ['-'] product (('+'|'-') product)*
//   product:= factor (('*'|'/') factor)*
//   factor := base ['^' exponent]
//   base   := uint | 'q' | 'v' | '(' sum ')'
//   exponent := ['-'] uint ['/' uint] | '(' ['-'] uint ['/' uint] ')'
// A fractional exponent on q must have denominator 2; v takes integers only.
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar run() {
    Scalar s = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail_here("unexpected trailing input");
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail_here(const std::string& what) {
    fail(ErrorKind::parse,
         what + " at offset " + std::to_string(pos_) + " in scalar \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  BigInt parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail_here("expected a number");
    }
    BigInt value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  // Returns the exponent as a rational with denominator 1 or 2.
  std::pair<BigInt, int> parse_exponent() {
    const bool parens = eat('(');
    const bool neg = eat('-');
    BigInt numer = parse_uint();
    int denom = 1;
    // A fractional exponent must be parenthesized; a bare "/" after the
    // exponent is the scalar-level division operator.
    if (parens && eat('/')) {
      const BigInt d = parse_uint();
      if (d != 2) fail_here("exponent denominator must be 2");
      denom = 2;
    }
    if (parens && !eat(')')) fail_here("expected ')'");
    if (neg) numer = -numer;
    return {numer, denom};
  }

  long long exponent_to_ll(const BigInt& e) {
    if (e > 1000000 || e < -1000000) fail_here("exponent out of range");
    return e.convert_to<long long>();
  }

  Scalar parse_sum() {
    bool neg = false;
    skip_ws();
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    Scalar s = parse_product();
    if (neg) s = -s;
    while (true) {
      skip_ws();
      if (eat('+')) {
        s += parse_product();
      } else if (eat('-')) {
        s -= parse_product();
      } else {
        return s;
      }
    }
  }

  Scalar parse_product() {
    Scalar s = parse_factor();
    while (true) {
      if (eat('*')) {
        s *= parse_factor();
      } else if (eat('/')) {
        const Scalar d = parse_factor();
        if (d.is_zero()) fail_here("division by zero");
        s /= d;
      } else {
        return s;
      }
    }
  }

  Scalar parse_factor() {
    const char c = peek();
    if (c == 'q' || c == 'v') {
      ++pos_;
      const int unit = c == 'q' ? 2 : 1;
      if (eat('^')) {
        auto [e, denom] = parse_exponent();
        BigInt ve = e * unit;
        if (denom == 2) {
          if (c != 'q') fail_here("fractional exponent is only valid on q");
          ve = e;  // q^(e/2) = v^e
        }
        return Scalar::v_power(exponent_to_ll(ve));
      }
      return Scalar::v_power(unit);
    }
    if (c == '(') {
      ++pos_;
      Scalar s = parse_sum();
      if (!eat(')')) fail_here("expected ')'");
      if (peek() == '^') {
        ++pos_;
        auto [e, denom] = parse_exponent();
        if (denom != 1) fail_here("fractional exponent on a parenthesized expression");
        return s.pow(exponent_to_ll(e));
      }
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const BigInt n = parse_uint();
      if (peek() == '^') {
        ++pos_;
        auto [e, denom] = parse_exponent();
        if (denom != 1) fail_here("fractional exponent on a number");
        return Scalar::from_rat(BigRat(n)).pow(exponent_to_ll(e));
      }
      return Scalar::from_rat(BigRat(n));
    }
    fail_here("expected a scalar factor");
  }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).run(); }

// ---------------------------------------------------------------------------
// q-integer helpers

Scalar q_int(long long n, long long d) {
  // [n] = q_d^{n-1} + q_d^{n-3} + ... + q_d^{1-n}
  Scalar s = Scalar::zero();
  for (long long k = 0; k < n; ++k) s += Scalar::v_power(2 * d * (n - 1 - 2 * k));
  return s;
}

Scalar q_factorial(long long n, long long d) {
  Scalar s = Scalar::one();
  for (long long k = 2; k <= n; ++k) s *= q_int(k, d);
  return s;
}

}  // namespace qucell
