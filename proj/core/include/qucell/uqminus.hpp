// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qucell/nc_element.hpp"
#include "qucell/root_datum.hpp"
#include "qucell/scalar.hpp"

namespace qucell {

// The negative half of the quantized enveloping algebra, modeled on the free
// word algebra: elements are NCElement values, and equality in the algebra is
// decided through the bilinear pairing, whose radical is exactly the defining
// ideal.  No noncommutative rewriting is ever performed.
//
// The context owns memo tables (pairings, weight-space bases); all published
// values are immutable.
class UqMinus {
 public:
  explicit UqMinus(RootDatum datum, long long height_cap = 10);

  const RootDatum& datum() const { return datum_; }
  long long height_cap() const { return height_cap_; }
  void set_height_cap(long long cap) { height_cap_ = cap; }

  // v-exponent of q_i = q^{d_i}.
  long long qi_v_exp(int i) const { return 2 * datum_.d(i); }
  // 1 - q_i^2.
  Scalar one_minus_qi2(int i) const;

  Weight weight_of(const Content& c) const;  // -(sum c_i alpha_i)
  Weight weight_of(const NCElement& x) const;

  // Left q-derivation: acts on f_j as delta_ij and obeys the twisted Leibniz
  // rule on products.
  NCElement e_prime(int i, const NCElement& x) const;
  // The twin derivation adjoint to right multiplication.
  NCElement e_prime_op(int i, const NCElement& x) const;

  // Coefficient-fixing anti-automorphism reversing words.
  NCElement star(const NCElement& x) const;
  // Bar involution: conjugates coefficients, fixes words.
  NCElement bar(const NCElement& x) const;
  // Dual-bar involution sigma = sign * q-power * (bar o star) per
  // homogeneous component; anti-automorphism up to weight-dependent q-powers.
  NCElement sigma(const NCElement& x) const;
  // sigma without the q-power: a Q-algebra anti-involution.
  NCElement sigma_prime(const NCElement& x) const;

  // The bilinear pairing with (1,1) = 1 and the generator recursion through
  // e_prime; memoized on word pairs.
  Scalar lusztig_pair(const NCElement& x, const NCElement& y);

  // Basis data for one content: all words, a greedy maximal
  // pairing-independent subset of them, and solver state for coordinates.
  struct WeightSpace {
    Content content;
    std::vector<Word> words;   // all words of this content, lex sorted
    std::vector<std::size_t> pivots;  // indices into words
    // Full Gram matrix of pairings, words x words.
    std::vector<std::vector<Scalar>> gram;
    int dim() const { return static_cast<int>(pivots.size()); }
    struct Solver;
    std::shared_ptr<const Solver> solver;
  };

  // Cached; enforces the height cap.
  const WeightSpace& weight_space(const Content& c);

  // Coordinates of the class of x (homogeneous of content c) in the pivot
  // basis of its weight space.
  std::vector<Scalar> weight_basis_coords(const Content& c, const NCElement& x);

  // Equality tests in the algebra (i.e. modulo the pairing radical).
  bool is_zero_in_algebra(const NCElement& x);
  bool equal_in_algebra(const NCElement& x, const NCElement& y);

  // All words of the given content in lex order.
  static std::vector<Word> words_of_content(const Content& c);

  // Number of ways to write the content as a sum of positive roots; equals
  // the weight-space dimension.
  long long kostant_count(const Content& c) const;

 private:
  RootDatum datum_;
  long long height_cap_;
  std::map<std::pair<Word, Word>, Scalar> pair_memo_;
  std::map<std::pair<Word, Word>, VLaurent> pair_core_memo_;
  std::map<Content, VLaurent> content_denom_memo_;
  std::map<Content, WeightSpace> spaces_;

  Scalar pair_words(const Word& a, const Word& b);
  // The pairing times the content denominator: a Laurent polynomial, so the
  // recursion runs without rational-function normalization.
  const VLaurent& pair_core(const Word& a, const Word& b);
  // Product of (1 - q_i^2) to the content multiplicities.
  const VLaurent& content_denominator(const Content& c);
  void check_cap(const Content& c) const;
};

}  // namespace qucell
