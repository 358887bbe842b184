// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qucell/scalar.hpp"

namespace qucell {

// Integral weight, stored in fundamental-weight coordinates:
// coord(i) = <h_i, weight>.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<long long> coords) : coords_(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<long long>(rank, 0)); }

  int rank() const { return static_cast<int>(coords_.size()); }
  long long coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<long long>& coords() const { return coords_; }

  Weight operator+(const Weight& rhs) const;
  Weight operator-(const Weight& rhs) const;
  Weight operator-() const;
  Weight scaled(long long k) const;
  bool is_zero() const;
  bool operator==(const Weight& rhs) const = default;
  // Lexicographic; suitable for ordered map keys.
  bool operator<(const Weight& rhs) const { return coords_ < rhs.coords_; }

  std::string str() const;

 private:
  std::vector<long long> coords_;
};

// Symmetrizable Cartan datum restricted to finite type.  Immutable; copies
// share one representation.
class RootDatum {
 public:
  // Validates the generalized Cartan matrix, the symmetrizer, and finite type
  // (the symmetrized matrix must be positive definite).
  RootDatum(const std::vector<std::vector<int>>& cartan, const std::vector<int>& symmetrizer);
  // Shorthands: A1, A2, A3, B2, G2.
  static RootDatum from_type(std::string_view shorthand);

  int rank() const;
  int cartan(int i, int j) const;
  // Symmetrizer entry d_i = (alpha_i, alpha_i)/2.
  int d(int i) const;
  const std::string& type_name() const;  // empty for custom data

  Weight fundamental_weight(int i) const;
  Weight rho() const;
  // alpha_i in fundamental-weight coordinates.
  Weight simple_root(int i) const;
  Weight simple_reflection(int i, const Weight& mu) const;

  // The symmetric bilinear form, exact.
  BigRat sym_form(const Weight& x, const Weight& y) const;
  // Form value known to be an integer (e.g. one argument in the root
  // lattice); raises ErrorKind::consistency otherwise.
  long long sym_form_int(const Weight& x, const Weight& y) const;

  // Coordinates in the simple-root basis.
  std::vector<BigRat> alpha_coords_rat(const Weight& mu) const;
  // Integral simple-root coordinates; nullopt when mu is not in the root
  // lattice.
  std::optional<std::vector<long long>> alpha_coords(const Weight& mu) const;
  Weight weight_from_alpha(const std::vector<long long>& alpha_coords) const;
  // Sum of simple-root coordinates; requires mu in the root lattice.
  long long height(const Weight& mu) const;

  bool is_dominant(const Weight& mu) const;

  // Positive roots in simple-root coordinates, sorted by (height, coords).
  const std::vector<std::vector<long long>>& positive_roots() const;

  bool operator==(const RootDatum& rhs) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Weyl group element, held as its lexicographically least reduced word
// (letters are 0-based simple-reflection indices).  Two elements are equal
// exactly when they act identically on rho; canonical words make that a
// word comparison.
class WeylElt {
 public:
  static WeylElt identity(const RootDatum& datum);
  // Builds the element s_{word[0]} ... s_{word.back()}; the input word need
  // not be reduced.
  static WeylElt from_word(const RootDatum& datum, const std::vector<int>& word);

  const RootDatum& datum() const { return datum_; }
  // The canonical (lex-least) reduced word.
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const Weight& mu) const;
  WeylElt operator*(const WeylElt& rhs) const;
  WeylElt inverse() const;
  bool operator==(const WeylElt& rhs) const;

  // All reduced words, lexicographically sorted.
  std::vector<std::vector<int>> reduced_words() const;

  std::string str() const;  // 1-based letters joined by commas

 private:
  WeylElt(RootDatum datum, std::vector<int> canonical_word)
      : datum_(std::move(datum)), word_(std::move(canonical_word)) {}

  RootDatum datum_;
  std::vector<int> word_;
};

WeylElt longest_element(const RootDatum& datum);

// Applies the word s_{word[0]} ... s_{word.back()} to mu.
Weight apply_word(const RootDatum& datum, const std::vector<int>& word, const Weight& mu);

bool is_reduced_word(const RootDatum& datum, const std::vector<int>& word);

}  // namespace qucell
