// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/scalar.hpp"

#include <random>

#include "doctest.h"

using namespace qucell;

namespace {

Scalar q() { return Scalar::q_power(1); }

// Independent oracle for small rational-function identities: evaluates a
// scalar at several rational points v = a/b (away from denominator zeros)
// and compares values, giving an equality check that does not rely on the
// canonical-form machinery under test.
BigRat eval_laurent(const VLaurent& p, const BigRat& v) {
  BigRat acc(0);
  p.for_terms([&](long long e, const BigRat& c) {
    BigRat power(1);
    const BigRat base = e >= 0 ? v : BigRat(1) / v;
    for (long long k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    acc += c * power;
  });
  return acc;
}

bool equal_by_evaluation(const Scalar& a, const Scalar& b) {
  const BigRat points[] = {BigRat(2), BigRat(3), BigRat(5, 2), BigRat(7, 3), BigRat(11, 5)};
  for (const auto& v : points) {
    const BigRat da = eval_laurent(a.den(), v);
    const BigRat db = eval_laurent(b.den(), v);
    if (da == 0 || db == 0) continue;
    if (eval_laurent(a.num(), v) * db != eval_laurent(b.num(), v) * da) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("field arithmetic examples") {
  // q * q^{-1} = 1
  CHECK((q() * Scalar::q_power(-1)).is_one());
  // 1 / (1 - q^2)
  const Scalar one_minus_q2 = Scalar::one() - q() * q();
  const Scalar r = Scalar::one() / one_minus_q2;
  CHECK(r * one_minus_q2 == Scalar::one());
  // q/(1-q^2) + q^2/(1-q^2) = (q+q^2)/(1-q^2); frozen via the independent
  // evaluation oracle.
  const Scalar lhs = q() / one_minus_q2 + q() * q() / one_minus_q2;
  const Scalar expected = (q() + q() * q()) / one_minus_q2;
  CHECK(equal_by_evaluation(lhs, expected));
  CHECK(lhs == expected);
}

TEST_CASE("bar involution") {
  CHECK(Scalar::q_power(3).bar() == Scalar::q_power(-3));
  CHECK(Scalar::one().bar() == Scalar::one());
  // bar(1/(1-q^2)) = 1/(1-q^{-2}) = -q^2/(1-q^2)
  const Scalar one_minus_q2 = Scalar::one() - q() * q();
  const Scalar r = Scalar::one() / one_minus_q2;
  const Scalar expected = -(q() * q()) / one_minus_q2;
  CHECK(r.bar() == expected);
  CHECK(equal_by_evaluation(r.bar(), expected));
}

TEST_CASE("bar is an involution on random scalars") {
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> expo(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Scalar num = Scalar::zero();
    Scalar den = Scalar::zero();
    for (int t = 0; t < 3; ++t) {
      num += Scalar::from_int(coeff(rng)) * Scalar::v_power(expo(rng));
      den += Scalar::from_int(coeff(rng)) * Scalar::v_power(expo(rng));
    }
    if (den.is_zero()) continue;
    const Scalar s = num / den;
    CHECK(s.bar().bar() == s);
  }
}

TEST_CASE("specialization at q = 1") {
  CHECK((q() + Scalar::q_power(-1)).specialize_at_one() == 2);
  // (1-q^4)/(1-q^2) -> 2 after cancellation
  const Scalar num = Scalar::one() - Scalar::q_power(2);
  const Scalar den = Scalar::one() - Scalar::q_power(1);
  CHECK((num / den).specialize_at_one() == 2);
  // 1/(1-q^2) has a pole
  CHECK_THROWS_AS((void)(Scalar::one() / num).specialize_at_one(), Error);
}

TEST_CASE("field identity (a*b)/b = a on random values") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    Scalar a = Scalar::zero();
    Scalar b = Scalar::zero();
    for (int t = 0; t < 3; ++t) {
      a += Scalar::from_int(coeff(rng)) * Scalar::v_power(expo(rng));
      b += Scalar::from_int(coeff(rng)) * Scalar::v_power(expo(rng));
    }
    if (b.is_zero()) continue;
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("canonical form uniqueness") {
  // Same value through different arithmetic routes must agree syntactically.
  const Scalar a = (Scalar::one() - Scalar::q_power(2)) / (Scalar::one() - q());
  const Scalar b = Scalar::one() + q();
  CHECK(a == b);
  CHECK(a.str() == b.str());
  const Scalar zero = a - b;
  CHECK(zero.is_zero());
  CHECK(zero.str() == "0");
  // Denominators are normalized monic with lowest exponent zero.
  const Scalar c = Scalar::one() / (Scalar::from_int(2) - Scalar::from_int(2) * q());
  CHECK(c.den().coeff(c.den().high()) == 1);
  CHECK(c.den().low() == 0);
}

TEST_CASE("rendering and parsing round-trip") {
  const Scalar one_minus_q2 = Scalar::one() - q() * q();
  const Scalar samples[] = {
      Scalar::zero(),
      Scalar::one(),
      -Scalar::one(),
      Scalar::q_power(-3),
      Scalar::v_power(1),
      Scalar::v_power(-5),
      q() / one_minus_q2,
      (q() + q() * q()) / one_minus_q2,
      Scalar::from_rat(BigRat(3, 2)) * Scalar::v_power(3) - Scalar::one(),
      Scalar::one() / (q() * (Scalar::one() + q())),
  };
  for (const Scalar& s : samples) {
    CAPTURE(s.str());
    CHECK(Scalar::parse(s.str()) == s);
  }
  // Grammar accepts equivalent non-canonical spellings.
  CHECK(Scalar::parse("q^(1/2)") == Scalar::v_power(1));
  CHECK(Scalar::parse("v^2") == q());
  CHECK(Scalar::parse("1/(1-q^2)") == Scalar::one() / one_minus_q2);
  CHECK(Scalar::parse(" (1 + q)^2 ") == (Scalar::one() + q()).pow(2));
  CHECK(Scalar::parse("q^(-3/2)") == Scalar::v_power(-3));
  CHECK_THROWS_AS((void)Scalar::parse("q^(1/3)"), Error);
  CHECK_THROWS_AS((void)Scalar::parse("1 +"), Error);
  CHECK_THROWS_AS((void)Scalar::parse("x"), Error);
}

TEST_CASE("q-integers") {
  // [2] in base q: q + q^{-1}
  CHECK(q_int(2, 1) == q() + Scalar::q_power(-1));
  // [3]! = [2][3]
  CHECK(q_factorial(3, 1) == q_int(2, 1) * q_int(3, 1));
  // base q^2 (d = 2): [2] = q^2 + q^{-2}
  CHECK(q_int(2, 2) == Scalar::q_power(2) + Scalar::q_power(-2));
  CHECK(q_int(1, 3) == Scalar::one());
  CHECK(q_int(0, 1).is_zero());
}

TEST_CASE("monomial introspection") {
  CHECK(Scalar::q_power(2).is_monomial());
  const auto [c, e] = (Scalar::from_int(-3) * Scalar::v_power(5)).monomial_parts();
  CHECK(c == -3);
  CHECK(e == 5);
  CHECK(!(Scalar::one() + q()).is_monomial());
  CHECK_THROWS_AS((void)(Scalar::one() + q()).monomial_parts(), Error);
}
