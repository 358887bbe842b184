// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/uqminus.hpp"

#include <random>

#include "doctest.h"

using namespace qucell;

namespace {

NCElement f(int i) { return NCElement::generator(i); }

NCElement word_elt(std::initializer_list<int> letters) {
  return NCElement::monomial(Word(letters), Scalar::one());
}

NCElement random_element(std::mt19937& rng, int rank, int max_len, int terms) {
  std::uniform_int_distribution<int> letter(0, rank - 1);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(-2, 2);
  NCElement x;
  for (int t = 0; t < terms; ++t) {
    Word w(static_cast<std::size_t>(len(rng)));
    for (auto& l : w) l = letter(rng);
    x.add_term(w, Scalar::from_int(coeff(rng)) * Scalar::v_power(expo(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("q-derivations") {
  UqMinus u(RootDatum::from_type("A2"));
  // e'_1(f_1 f_2 f_1) = f_2 f_1 + q^{-1} f_1 f_2
  const NCElement x = word_elt({0, 1, 0});
  NCElement expected = word_elt({1, 0});
  expected += word_elt({0, 1}).scaled(Scalar::q_power(-1));
  CHECK(u.e_prime(0, x) == expected);
  // generators: e'_i(f_j) = delta_ij
  CHECK(u.e_prime(0, f(0)) == NCElement::unit());
  CHECK(u.e_prime(0, f(1)).is_zero());
  CHECK(u.e_prime(1, NCElement::unit()).is_zero());
}

TEST_CASE("derivation Leibniz rule") {
  std::mt19937 rng(42);
  for (const char* type : {"A2", "B2"}) {
    UqMinus u(RootDatum::from_type(type), 12);
    const RootDatum& d = u.datum();
    for (int trial = 0; trial < 8; ++trial) {
      NCElement x = random_element(rng, d.rank(), 3, 2);
      NCElement y = random_element(rng, d.rank(), 3, 2);
      for (const auto& [cx, xc] : x.homogeneous_components(d.rank())) {
        const long long pairing_exp_base = -u.weight_of(cx).coord(0);
        (void)pairing_exp_base;
        for (int i = 0; i < d.rank(); ++i) {
          // e'_i(xy) = e'_i(x) y + q_i^{<h_i, wt x>} x e'_i(y)
          const long long h = u.weight_of(cx).coord(i);
          const NCElement lhs = u.e_prime(i, xc * y);
          const NCElement rhs =
              u.e_prime(i, xc) * y +
              (xc * u.e_prime(i, y)).scaled(Scalar::v_power(u.qi_v_exp(i) * h));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("bilinear pairing examples") {
  UqMinus a2(RootDatum::from_type("A2"));
  const Scalar q = Scalar::q_power(1);
  const Scalar one_minus_q2 = Scalar::one() - q * q;
  // (f_1 f_2, f_2 f_1) = q / (1-q^2)^2
  CHECK(a2.lusztig_pair(word_elt({0, 1}), word_elt({1, 0})) ==
        q / (one_minus_q2 * one_minus_q2));
  // (f_i, f_i) = 1/(1-q_i^2)
  CHECK(a2.lusztig_pair(f(0), f(0)) == Scalar::one() / one_minus_q2);
  UqMinus b2(RootDatum::from_type("B2"));
  for (int i = 0; i < 2; ++i) {
    CHECK(b2.lusztig_pair(f(i), f(i)) ==
          Scalar::one() / (Scalar::one() - Scalar::v_power(2 * b2.qi_v_exp(i))));
  }
  // unit and orthogonality across contents
  CHECK(a2.lusztig_pair(NCElement::unit(), NCElement::unit()).is_one());
  CHECK(a2.lusztig_pair(f(0), f(1)).is_zero());
  CHECK(a2.lusztig_pair(word_elt({0, 1}), word_elt({0, 0})).is_zero());
}

TEST_CASE("pairing symmetry and star invariance") {
  std::mt19937 rng(2718);
  for (const char* type : {"A2", "B2", "G2"}) {
    UqMinus u(RootDatum::from_type(type), 12);
    for (int trial = 0; trial < 6; ++trial) {
      const NCElement x = random_element(rng, u.datum().rank(), 4, 2);
      const NCElement y = random_element(rng, u.datum().rank(), 4, 2);
      CHECK(u.lusztig_pair(x, y) == u.lusztig_pair(y, x));
      CHECK(u.lusztig_pair(u.star(x), u.star(y)) == u.lusztig_pair(x, y));
    }
  }
}

TEST_CASE("twin derivation is adjoint to right multiplication") {
  std::mt19937 rng(31415);
  UqMinus u(RootDatum::from_type("B2"), 12);
  for (int trial = 0; trial < 8; ++trial) {
    const NCElement x = random_element(rng, 2, 3, 2);
    const NCElement y = random_element(rng, 2, 4, 2);
    for (int i = 0; i < 2; ++i) {
      CHECK(u.lusztig_pair(x * f(i), y) ==
            u.lusztig_pair(x, u.e_prime_op(i, y)) / u.one_minus_qi2(i));
    }
  }
}

TEST_CASE("involutions") {
  std::mt19937 rng(999);
  UqMinus u(RootDatum::from_type("A2"), 12);
  // sigma(f_i) = -q_i^2 f_i
  for (int i = 0; i < 2; ++i) {
    CHECK(u.sigma(f(i)) == f(i).scaled(-Scalar::v_power(2 * u.qi_v_exp(i))));
    CHECK(u.sigma_prime(f(i)) == -f(i));
  }
  for (int trial = 0; trial < 8; ++trial) {
    const NCElement x = random_element(rng, 2, 4, 3);
    CHECK(u.bar(u.bar(x)) == x);
    CHECK(u.star(u.star(x)) == x);
    CHECK(u.sigma(u.sigma(x)) == x);
    CHECK(u.sigma_prime(u.sigma_prime(x)) == x);
    const NCElement y = random_element(rng, 2, 3, 2);
    // star and sigma' reverse products; sigma twists by a q-power in the
    // weights.
    CHECK(u.star(x * y) == u.star(y) * u.star(x));
    CHECK(u.sigma_prime(x * y) == u.sigma_prime(y) * u.sigma_prime(x));
    for (const auto& [cx, xc] : x.homogeneous_components(2)) {
      for (const auto& [cy, yc] : y.homogeneous_components(2)) {
        const long long pair_exp =
            u.datum().sym_form_int(u.weight_of(cx), u.weight_of(cy));
        CHECK(u.sigma(xc * yc) ==
              (u.sigma(yc) * u.sigma(xc)).scaled(Scalar::v_power(2 * pair_exp)));
      }
    }
  }
}

TEST_CASE("weight spaces and defining relations") {
  UqMinus u(RootDatum::from_type("A2"));
  // content (1,1): two words, dimension 2
  const auto& ws = u.weight_space(Content{1, 1});
  CHECK(ws.words.size() == 2);
  CHECK(ws.dim() == 2);
  CHECK(u.kostant_count(Content{1, 1}) == 2);
  // the quantum Serre element is in the pairing radical
  const Scalar q = Scalar::q_power(1);
  NCElement serre = word_elt({0, 0, 1});
  serre -= word_elt({0, 1, 0}).scaled(q + Scalar::q_power(-1));
  serre += word_elt({1, 0, 0});
  CHECK(u.is_zero_in_algebra(serre));
  const auto coords = u.weight_basis_coords(Content{2, 1}, serre);
  for (const auto& c : coords) CHECK(c.is_zero());
  CHECK(u.weight_space(Content{2, 1}).dim() == 2);
  CHECK(u.kostant_count(Content{2, 2}) == 3);
  CHECK(u.weight_space(Content{2, 2}).dim() == 3);
  // derivations descend to the quotient: e'_i of a radical element stays in
  // the radical
  for (int i = 0; i < 2; ++i) CHECK(u.is_zero_in_algebra(u.e_prime(i, serre)));
  // equal_in_algebra sees through the relation
  NCElement lhs = word_elt({0, 0, 1}) + word_elt({1, 0, 0});
  NCElement rhs = word_elt({0, 1, 0}).scaled(q + Scalar::q_power(-1));
  CHECK(u.equal_in_algebra(lhs, rhs));
  CHECK(!u.equal_in_algebra(word_elt({0, 1}), word_elt({1, 0})));
}

TEST_CASE("gram rank equals kostant count") {
  for (const char* type : {"A2", "B2", "G2"}) {
    UqMinus u(RootDatum::from_type(type), 6);
    std::vector<Content> contents;
    if (std::string(type) == "G2")
      contents = {{1, 1}, {2, 1}, {3, 1}, {2, 2}};
    else
      contents = {{1, 1}, {2, 1}, {2, 2}, {3, 1}};
    for (const auto& c : contents) {
      CAPTURE(type);
      CAPTURE(c[0]);
      CAPTURE(c[1]);
      CHECK(u.weight_space(c).dim() == u.kostant_count(c));
    }
  }
}

TEST_CASE("height cap") {
  UqMinus u(RootDatum::from_type("A2"), 3);
  CHECK_NOTHROW((void)u.weight_space(Content{2, 1}));
  CHECK_THROWS_AS((void)u.weight_space(Content{2, 2}), Error);
  u.set_height_cap(4);
  CHECK_NOTHROW((void)u.weight_space(Content{2, 2}));
}

TEST_CASE("weights of contents") {
  UqMinus u(RootDatum::from_type("A2"));
  const RootDatum& d = u.datum();
  CHECK(u.weight_of(Content{1, 1}) == -(d.simple_root(0) + d.simple_root(1)));
  CHECK(u.weight_of(word_elt({0, 1, 0})) ==
        -(d.simple_root(0).scaled(2) + d.simple_root(1)));
}
