// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/root_datum.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

using namespace qucell;

TEST_CASE("symmetric form on fundamental weights") {
  const RootDatum a2 = RootDatum::from_type("A2");
  const Weight w1 = a2.fundamental_weight(0);
  CHECK(a2.sym_form(w1, w1) == BigRat(2, 3));
  // (varpi_i, alpha_j) = delta_ij d_j
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(a2.sym_form(a2.fundamental_weight(i), a2.simple_root(j)) ==
            BigRat(i == j ? a2.d(j) : 0));
  const RootDatum b2 = RootDatum::from_type("B2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(b2.sym_form(b2.fundamental_weight(i), b2.simple_root(j)) ==
            BigRat(i == j ? b2.d(j) : 0));
  // (alpha_i, alpha_j) = d_i a_ij
  const RootDatum g2 = RootDatum::from_type("G2");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(g2.sym_form(g2.simple_root(i), g2.simple_root(j)) ==
            BigRat(static_cast<long long>(g2.d(i)) * g2.cartan(i, j)));
}

TEST_CASE("form integrality on the root lattice") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<long long> c(-3, 3);
  for (const char* type : {"A2", "A3", "B2", "G2"}) {
    const RootDatum d = RootDatum::from_type(type);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<long long> alpha(static_cast<std::size_t>(d.rank()));
      std::vector<long long> weight_coords(static_cast<std::size_t>(d.rank()));
      for (auto& x : alpha) x = c(rng);
      for (auto& x : weight_coords) x = c(rng);
      const Weight xi = d.weight_from_alpha(alpha);
      const Weight mu{weight_coords};
      // (P, Q) is integral and (xi, xi) is even for xi in the root lattice.
      (void)d.sym_form_int(mu, xi);
      CHECK(d.sym_form_int(xi, xi) % 2 == 0);
    }
  }
}

TEST_CASE("longest element") {
  CHECK(longest_element(RootDatum::from_type("A1")).length() == 1);
  CHECK(longest_element(RootDatum::from_type("A2")).length() == 3);
  CHECK(longest_element(RootDatum::from_type("B2")).length() == 4);
  CHECK(longest_element(RootDatum::from_type("G2")).length() == 6);
  // length of w0 equals the number of positive roots
  for (const char* type : {"A1", "A2", "A3", "B2", "G2"}) {
    const RootDatum d = RootDatum::from_type(type);
    CHECK(longest_element(d).length() ==
          static_cast<int>(d.positive_roots().size()));
  }
  // action on fundamental weights
  const RootDatum a2 = RootDatum::from_type("A2");
  CHECK(longest_element(a2).apply(a2.fundamental_weight(0)) ==
        -a2.fundamental_weight(1));
  const RootDatum b2 = RootDatum::from_type("B2");
  CHECK(longest_element(b2).apply(b2.fundamental_weight(0)) ==
        -b2.fundamental_weight(0));
}

TEST_CASE("reduced words of the longest element") {
  const RootDatum a2 = RootDatum::from_type("A2");
  const auto words_a2 = longest_element(a2).reduced_words();
  const std::vector<std::vector<int>> expected = {{0, 1, 0}, {1, 0, 1}};
  CHECK(words_a2 == expected);
  const RootDatum a3 = RootDatum::from_type("A3");
  CHECK(longest_element(a3).reduced_words().size() == 16);
  // every listed word is reduced and rebuilds the same element
  const WeylElt w0 = longest_element(a3);
  for (const auto& word : w0.reduced_words()) {
    CHECK(is_reduced_word(a3, word));
    CHECK(WeylElt::from_word(a3, word) == w0);
  }
}

TEST_CASE("finite-type gate") {
  CHECK_THROWS_AS(RootDatum({{2, -2}, {-2, 2}}, {1, 1}), Error);
  // affine A2 shape
  CHECK_THROWS_AS(RootDatum({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}, {1, 1, 1}), Error);
  // invalid symmetrizer: D A must be symmetric
  CHECK_THROWS_AS(RootDatum({{2, -1}, {-2, 2}}, {1, 1}), Error);
  // B2 with the matching symmetrizer is accepted either way around
  CHECK_NOTHROW(RootDatum({{2, -1}, {-2, 2}}, {2, 1}));
}

TEST_CASE("weyl action is word independent") {
  std::mt19937 rng(77);
  for (const char* type : {"A2", "A3", "B2", "G2"}) {
    const RootDatum d = RootDatum::from_type(type);
    std::uniform_int_distribution<int> letter(0, d.rank() - 1);
    std::uniform_int_distribution<long long> c(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> word(6);
      for (auto& l : word) l = letter(rng);
      const WeylElt w = WeylElt::from_word(d, word);
      std::vector<long long> coords(static_cast<std::size_t>(d.rank()));
      for (auto& x : coords) x = c(rng);
      const Weight mu{coords};
      // the canonicalized element acts like the defining word
      CHECK(w.apply(mu) == apply_word(d, word, mu));
    }
  }
}

TEST_CASE("group identities") {
  const RootDatum b2 = RootDatum::from_type("B2");
  const WeylElt s0 = WeylElt::from_word(b2, {0});
  const WeylElt s1 = WeylElt::from_word(b2, {1});
  CHECK((s0 * s0).is_identity());
  CHECK((s1 * s1).is_identity());
  // braid relation: (s0 s1)^4 = e in B2
  WeylElt prod = WeylElt::identity(b2);
  for (int k = 0; k < 4; ++k) prod = prod * s0 * s1;
  CHECK(prod.is_identity());
  const WeylElt w = s0 * s1 * s0;
  CHECK((w * w.inverse()).is_identity());
  CHECK(w.inverse().length() == w.length());
}

TEST_CASE("roots heights and dominance") {
  const RootDatum g2 = RootDatum::from_type("G2");
  for (int i = 0; i < 2; ++i) CHECK(g2.height(g2.simple_root(i)) == 1);
  // rho has all fundamental coordinates 1 and is dominant
  const Weight rho = g2.rho();
  for (int i = 0; i < 2; ++i) CHECK(rho.coord(i) == 1);
  CHECK(g2.is_dominant(rho));
  CHECK(!g2.is_dominant(-rho));
  CHECK(!g2.is_dominant(g2.simple_reflection(0, g2.fundamental_weight(0))));
  // the highest root of G2 has height 5
  const auto& roots = g2.positive_roots();
  long long best = 0;
  for (const auto& r : roots) {
    long long h = 0;
    for (long long c : r) h += c;
    best = std::max(best, h);
  }
  CHECK(best == 5);
  CHECK(roots.size() == 6);
  // alpha_coords round-trips and rejects non-lattice weights
  const Weight w1 = g2.fundamental_weight(0);
  CHECK(g2.alpha_coords(g2.simple_root(0)).value() ==
        std::vector<long long>{1, 0});
  const RootDatum a2 = RootDatum::from_type("A2");
  CHECK(!a2.alpha_coords(a2.fundamental_weight(0)).has_value());
  CHECK(g2.weight_from_alpha({1, 1}) ==
        g2.simple_root(0) + g2.simple_root(1));
  (void)w1;
}

TEST_CASE("string forms") {
  const RootDatum a2 = RootDatum::from_type("A2");
  CHECK(WeylElt::identity(a2).str() == "e");
  CHECK(WeylElt::from_word(a2, {0, 1, 0}).str() == "1,2,1");
  CHECK(a2.type_name() == "A2");
}
