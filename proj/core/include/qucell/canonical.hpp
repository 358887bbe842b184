// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <map>
#include <vector>

#include "qucell/pbw.hpp"

namespace qucell {

enum class CrystalSide { left, right };

// A dual canonical basis element together with its crystal statistics.  The
// exponents parameterize the element through the PBW basis of the reference
// word; equal elements reached through different words are identified by
// equality in the algebra.
struct CrystalLabel {
  std::vector<int> word;       // reference reduced word of the longest element
  ExponentVec exponents;       // PBW parametrization
  Weight weight;
  std::vector<long long> eps;       // left nilpotency degrees, one per index
  std::vector<long long> eps_star;  // right nilpotency degrees
  NCElement gup;               // the dual canonical element itself

  long long phi(int i) const { return eps[static_cast<std::size_t>(i)] + weight.coord(i); }
};

// Construction of the dual canonical basis by triangular correction over the
// dual PBW basis, with the twisted involution fixing each element; plus
// expansion into the basis, crystal statistics, and Demazure membership.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(PBWContext& pbw);

  PBWContext& pbw() { return pbw_; }
  UqMinus& alg() { return pbw_.alg(); }
  const RootDatum& datum() const { return pbw_.datum(); }

  // Lex-least reduced word of the longest element; the default
  // parametrization used by dcb_expand.
  const std::vector<int>& reference_word() const { return reference_word_; }

  // The dual canonical element for the exponents: the unique element equal
  // to the dual PBW vector plus a strictly lex-lower correction with
  // coefficients in q Z[q], fixed by the twisted involution.  Cached.
  const NCElement& dual_canonical_element(const ExponentVec& c, const std::vector<int>& word);
  NCElement dual_canonical_element(const ExponentVec& c);

  // Full label with cached weight and crystal statistics.
  CrystalLabel label(const ExponentVec& c, const std::vector<int>& word);
  CrystalLabel label(const ExponentVec& c);

  // The basis element pairing as a Kronecker delta against the dual
  // canonical elements of the same content.  Cached.
  const NCElement& canonical_element(const ExponentVec& c, const std::vector<int>& word);
  NCElement canonical_element(const ExponentVec& c);

  // Coordinates of x in the dual canonical basis, keyed by exponents with
  // respect to the reference word.  Zero coefficients are omitted.
  std::map<ExponentVec, Scalar> dcb_expand(const NCElement& x);

  // Exponents (reference word) of the image of the labeled element under
  // the star involution; the image is again a basis element.
  ExponentVec star_label(const ExponentVec& c, const std::vector<int>& word);

  // Nilpotency degree of the left (or right) derivation on the element.
  long long crystal_epsilon(int i, const NCElement& x, CrystalSide side);

  // True when the labeled element pairs nontrivially with some monomial in
  // the generators drawn from a reduced word of w.
  bool demazure_membership(const ExponentVec& c, const std::vector<int>& word, const WeylElt& w);
  bool demazure_membership(const ExponentVec& c, const WeylElt& w);
  // Same test with an explicit choice of reduced word for w; the answer is
  // independent of the choice.
  bool demazure_membership_with(const ExponentVec& c, const std::vector<int>& word,
                                const std::vector<int>& w_word);

  // All labels of one content for the given word, in lex order.
  std::vector<ExponentVec> labels_for_content(const Content& content,
                                              const std::vector<int>& word) const;

 private:
  PBWContext& pbw_;
  std::vector<int> reference_word_;
  std::map<std::pair<ExponentVec, Word>, NCElement> dcb_memo_;
  std::map<std::pair<ExponentVec, Word>, NCElement> canon_memo_;

  // Solves d - bar(d) = r in q Z[q]; fails unless bar(r) = -r and the
  // solution is a polynomial in q with integer coefficients.
  Scalar solve_correction(const Scalar& r) const;
};

}  // namespace qucell
