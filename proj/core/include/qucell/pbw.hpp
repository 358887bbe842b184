// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qucell/uqminus.hpp"

namespace qucell {

// Monomial of the full quantized enveloping algebra in normal order: a word
// in the f_i, then a torus point beta in the root lattice (simple-root
// coordinates, for K_beta), then a word in the e_i.
struct TriMonomial {
  Word fword;
  std::vector<long long> torus;
  Word eword;
  auto operator<=>(const TriMonomial&) const = default;
};

// Element of the full algebra with eagerly straightened normal order.  The
// e/f cross relation and the torus twists are applied by multiplication;
// the two Serre ideals are not quotiented out here, so free-form equality
// is finer than equality in the algebra (see PBWContext).
class TriangularElement {
 public:
  TriangularElement() = default;
  static TriangularElement zero() { return {}; }
  static TriangularElement unit(int rank);
  static TriangularElement f(int i, int rank);
  static TriangularElement e(int i, int rank);
  static TriangularElement torus(std::vector<long long> beta);
  static TriangularElement monomial(TriMonomial m, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<TriMonomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const TriMonomial& m) const;
  void add_term(const TriMonomial& m, const Scalar& c);

  TriangularElement operator+(const TriangularElement& rhs) const;
  TriangularElement operator-(const TriangularElement& rhs) const;
  TriangularElement operator-() const;
  TriangularElement& operator+=(const TriangularElement& rhs);
  TriangularElement& operator-=(const TriangularElement& rhs);
  TriangularElement scaled(const Scalar& c) const;
  bool operator==(const TriangularElement& rhs) const = default;

  // The component with empty e-word and trivial torus part, as an element
  // of the negative half.
  NCElement lower_component() const;
  // True when every monomial has empty e-word and trivial torus part.
  bool is_pure_lower() const;

  std::string str() const;

 private:
  std::map<TriMonomial, Scalar> terms_;
};

enum class BraidDirection { forward, inverse };

// Exponent vector for a PBW monomial, one entry per letter of the chosen
// reduced word.
using ExponentVec = std::vector<long long>;

// A PBW basis vector of the lower form: exponents, the reduced word that
// parameterizes the basis, and the expanded element.
struct PBWVector {
  ExponentVec exponents;
  std::vector<int> word;
  NCElement lowered;
  Scalar norm;
};

// Braid symmetries and PBW bases over one ambient algebra.  Holds memo
// tables for braid generator images and expanded PBW vectors.
class PBWContext {
 public:
  explicit PBWContext(UqMinus& alg) : alg_(alg) {}

  UqMinus& alg() { return alg_; }
  const RootDatum& datum() const { return alg_.datum(); }

  // Arithmetic in the straightened triangular representation.
  TriangularElement tri_mul(const TriangularElement& a, const TriangularElement& b) const;
  // x^n / [n]_i! for the q_i-factorial.
  TriangularElement tri_divided_power(const TriangularElement& x, int i, long long n) const;

  // The braid symmetry (or its inverse) applied as an algebra automorphism:
  // letterwise on each monomial, then re-straightened.
  TriangularElement braid_apply(int i, const TriangularElement& x, BraidDirection dir);

  // Equality in the algebra: both Serre ideals are divided out factorwise,
  // monomial groups of equal (torus, f-content, e-content) are compared in
  // tensor coordinates.
  bool tri_equal_in_algebra(const TriangularElement& a, const TriangularElement& b);
  bool tri_is_zero_in_algebra(const TriangularElement& x);

  TriangularElement tri_from_lower(const NCElement& x) const;

  // beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}) in simple-root
  // coordinates; all positive exactly when the word is reduced.
  std::vector<std::vector<long long>> root_sequence(const std::vector<int>& word) const;

  // The lower PBW vector for the exponents, expanded into the negative
  // half.  Validated on first computation against the closed-form norm;
  // cached per (exponents, word).
  const NCElement& pbw_vector(const ExponentVec& c, const std::vector<int>& word);
  // The dual vector: pbw_vector divided by its self-pairing.
  NCElement dual_pbw_vector(const ExponentVec& c, const std::vector<int>& word);
  PBWVector make_pbw(const ExponentVec& c, const std::vector<int>& word);

  // Closed form of the self-pairing (F(c), F(c)).
  Scalar pbw_norm_closed(const ExponentVec& c, const std::vector<int>& word) const;

  struct Expansion {
    std::map<ExponentVec, Scalar> coeffs;  // zero coefficients omitted
    NCElement residual;                    // orthogonal to the span
  };
  // Orthogonal expansion of x over the PBW basis for the word; the residual
  // vanishes in the algebra exactly when x lies in the subalgebra the word
  // generates.
  Expansion pbw_expand(const NCElement& x, const std::vector<int>& word);
  bool in_subalgebra(const NCElement& x, const std::vector<int>& word);

  // All exponent vectors whose PBW vectors have the given content.
  std::vector<ExponentVec> exponents_for_content(const Content& content,
                                                 const std::vector<int>& word) const;

 private:
  UqMinus& alg_;
  // Generator images T_i^{+-1}(f_j) and T_i^{+-1}(e_j), keyed by
  // (i, j, direction).
  std::map<std::tuple<int, int, int>, TriangularElement> gen_image_memo_;
  // Root vectors T_{i_1}...T_{i_{k-1}}(f_{i_k}), keyed by (prefix, letter).
  std::map<std::pair<Word, int>, TriangularElement> root_vector_memo_;
  std::map<std::pair<ExponentVec, Word>, NCElement> pbw_memo_;

  const TriangularElement& generator_image(int i, int j, BraidDirection dir, bool lower);
  const TriangularElement& root_vector(const std::vector<int>& prefix, int letter);
  TriangularElement right_mul_letter(const TriangularElement& x, const TriMonomial& letter) const;
};

}  // namespace qucell
