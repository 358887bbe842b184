// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qucell/canonical.hpp"
#include "qucell/hw_module.hpp"

namespace qucell {

// Class of an element in the quotient of the negative half by the orthogonal
// complement of the pattern's Demazure span: finite support over dual
// canonical labels that pass the Demazure membership test for the pattern.
struct ClosedCellElement {
  std::vector<int> pattern;             // canonical reduced word of w
  std::map<ExponentVec, Scalar> terms;  // labels of the reference word

  bool is_zero() const { return terms.empty(); }
  bool operator==(const ClosedCellElement& rhs) const = default;
};

// A localized element of the cell algebra: the inverse of the pattern minor
// of the denominator weight times the numerator class.  The canonical form
// keeps the denominator componentwise minimal: no fundamental-weight minor
// divides the numerator while the matching coordinate is positive.
struct CellElement {
  std::vector<int> pattern;
  Weight denominator;  // dominant
  ClosedCellElement numerator;

  bool is_zero() const { return numerator.is_zero(); }
  bool operator==(const CellElement& rhs) const = default;
};

// A localized element on the unipotent subgroup side: the inverse of the
// pattern minor times a numerator in the negative half whose star image
// lies in the pattern subalgebra.  Numerators are kept as sums of dual
// canonical elements, so structural equality is algebra equality.
struct LocalizedSubgroupElement {
  std::vector<int> pattern;
  Weight denominator;  // dominant
  NCElement numerator;

  bool is_zero() const { return numerator.is_zero(); }
  bool operator==(const LocalizedSubgroupElement& rhs) const = default;
};

// Outcome of iterating the twist automorphism on a homogeneous element.
struct PeriodicityReport {
  int iterations = 0;
  // The iterate equals the input exactly.
  bool identity = false;
  // For six iterations: the iterate matches the closed form, a q-power
  // times a frozen minor times the input.  For other counts this repeats
  // the identity verdict.
  bool theorem_holds = false;
};

// Arithmetic of one quantum unipotent cell: projection to the closed cell,
// the Ore localization at the pattern minors, frozen minors for arbitrary
// integral weights, the dual bar involution, the twist isomorphism onto the
// localized subgroup side, and the twist automorphism.
//
// All element values are immutable; the context owns memo tables for minors,
// twist images, and minor-shift expansions.
class CellAlgebra {
 public:
  CellAlgebra(CanonicalBasis& basis, WeylElt w);

  CanonicalBasis& basis() { return basis_; }
  PBWContext& pbw() { return basis_.pbw(); }
  UqMinus& alg() { return basis_.alg(); }
  const RootDatum& datum() const { return basis_.datum(); }
  const WeylElt& pattern() const { return w_; }

  // The minor attached to the pattern and a dominant weight, as an element
  // of the negative half; unit at weight zero.  Cached.
  const NCElement& pattern_minor(const Weight& lambda);

  // --- closed cell ---

  // Expands x in the dual canonical basis and drops every label outside the
  // pattern's Demazure crystal; a surjective ring homomorphism.
  ClosedCellElement project_closed(const NCElement& x);
  ClosedCellElement closed_zero() const;
  // A representative of the class: the coefficient sum of dual canonical
  // elements over the support.
  NCElement closed_lift(const ClosedCellElement& x);
  ClosedCellElement closed_mul(const ClosedCellElement& x, const ClosedCellElement& y);

  // --- cell elements ---

  CellElement cell_zero() const;
  CellElement cell_one();
  // The class of x with trivial denominator.
  CellElement cell_project(const NCElement& x);
  // The class of the dual canonical element of the label; zero when the
  // label fails Demazure membership.
  CellElement embed_dcb(const ExponentVec& c);
  // The normalized localized basis element of the denominator weight and
  // label: the q-power making it fixed under the dual bar involution.
  CellElement dcb_cell_element(const Weight& lambda, const ExponentVec& c);
  // True when the canonical form of x is exactly one normalized localized
  // basis element.
  bool is_basis_element(const CellElement& x);

  CellElement cell_add(const CellElement& x, const CellElement& y);
  CellElement cell_sub(const CellElement& x, const CellElement& y);
  CellElement cell_scale(const CellElement& x, const Scalar& c);
  CellElement cell_mul(const CellElement& x, const CellElement& y);

  // The invertible q-central minor of an arbitrary integral weight, realized
  // through the componentwise-minimal dominant decomposition.
  CellElement frozen(const Weight& lambda);
  // The same element realized through an explicit decomposition
  // lambda = -lambda1 + lambda2 with both parts dominant; the result is
  // independent of the decomposition.
  CellElement frozen_with(const Weight& lambda1, const Weight& lambda2);

  // Reduces the denominator by every fundamental weight whose minor divides
  // the numerator exactly; the reduced form is unique.
  CellElement canonicalize_cell(const CellElement& x);

  // The dual bar involution: semilinear over bar on coefficients, fixing
  // every normalized localized basis element.
  CellElement cell_sigma(const CellElement& x);

  // Weight of a homogeneous nonzero element; fails on zero or mixed input.
  Weight cell_weight(const CellElement& x);

  // --- localized subgroup side ---

  LocalizedSubgroupElement subgroup_zero() const;
  LocalizedSubgroupElement subgroup_one() const;
  // True when the star image of y lies in the pattern subalgebra.
  bool subgroup_member(const NCElement& y);
  LocalizedSubgroupElement subgroup_add(const LocalizedSubgroupElement& x,
                                        const LocalizedSubgroupElement& y);
  LocalizedSubgroupElement subgroup_scale(const LocalizedSubgroupElement& x, const Scalar& c);
  LocalizedSubgroupElement subgroup_mul(const LocalizedSubgroupElement& x,
                                        const LocalizedSubgroupElement& y);
  // Minimal denominator and dual-canonical numerator representative.
  LocalizedSubgroupElement canonicalize_subgroup(const LocalizedSubgroupElement& x);
  LocalizedSubgroupElement subgroup_sigma(const LocalizedSubgroupElement& x);
  // The normalized basis element of the denominator weight and label.
  LocalizedSubgroupElement dcb_subgroup_element(const Weight& lambda, const ExponentVec& c);
  bool is_subgroup_basis_element(const LocalizedSubgroupElement& x);
  Weight subgroup_weight(const LocalizedSubgroupElement& x);

  // --- the twist maps ---

  // Projects the numerator and keeps the denominator: the localization of
  // the embedding of the subgroup algebra into the closed cell; an algebra
  // isomorphism onto the cell.
  CellElement dcp_embed(const LocalizedSubgroupElement& x);

  // The twist isomorphism onto the subgroup side, computed termwise through
  // the minimal module realization of each label.
  LocalizedSubgroupElement twist_iso(const CellElement& x);

  // The twist automorphism of the cell: twist_iso followed by dcp_embed.
  CellElement twist_auto(const CellElement& x);

  // Applies the twist automorphism n times to a homogeneous element and
  // compares against the expected closed form.  Requires the pattern to be
  // the longest element.
  PeriodicityReport periodicity_check(const CellElement& x, int n);

 private:
  CanonicalBasis& basis_;
  WeylElt w_;
  std::vector<int> w_word_;
  std::vector<std::vector<long long>> ref_roots_;  // root sequence, alpha coords
  std::map<Weight, NCElement> minor_memo_;
  std::map<ExponentVec, bool> member_memo_;
  std::map<std::pair<int, ExponentVec>, std::map<ExponentVec, Scalar>> shift_memo_;
  std::map<ExponentVec, LocalizedSubgroupElement> twist_memo_;
  bool longest_ = false;

  int rank() const { return datum().rank(); }
  bool demazure_member(const ExponentVec& c);
  Content label_content(const ExponentVec& c) const;
  Weight label_weight(const ExponentVec& c);
  // Integral pairing helper; the second argument must lie in the root
  // lattice up to the weight-lattice part of the first.
  long long form(const Weight& a, const Weight& b) const { return datum().sym_form_int(a, b); }
  void check_pattern(const std::vector<int>& pattern) const;
  void check_dominant(const Weight& lambda) const;

  // Expansion of the fundamental minor times the labeled dual canonical
  // element, in the dual canonical basis.  Cached.
  const std::map<ExponentVec, Scalar>& minor_shift(int i, const ExponentVec& c);
  // Left division of a label expansion by the fundamental minor; nullopt
  // when the division leaves a remainder.  Restricts quotient labels to the
  // Demazure crystal when closed is set.
  std::optional<std::map<ExponentVec, Scalar>> divide_terms(
      const std::map<ExponentVec, Scalar>& terms, int i, bool closed);

  // The twist image of one dual canonical class, canonicalized.  Cached.
  const LocalizedSubgroupElement& twist_label(const ExponentVec& c);

  std::map<ExponentVec, Scalar> expand_lower(const NCElement& y);
  NCElement rebuild_lower(const std::map<ExponentVec, Scalar>& terms);

  // At the longest pattern the subgroup side admits exact label arithmetic
  // in the starred dual canonical basis: the pattern minor of a dominant
  // weight times a starred basis element is a q-power times the starred
  // element with labels raised by a fixed vector.  Lifted numerators stay
  // label expansions, so oversized products are never expanded.
  ExponentVec minor_label(const Weight& lambda) const;
  std::map<ExponentVec, Scalar> star_expand(const NCElement& y);
  NCElement star_rebuild(const std::map<ExponentVec, Scalar>& terms);
  // Multiplication by the minor of lambda on starred-basis expansions.
  std::map<ExponentVec, Scalar> raise_labels(const Weight& lambda,
                                             const std::map<ExponentVec, Scalar>& terms);
  // Division by the fundamental minor; nullopt when a label drops below
  // zero, which is exactly failure of divisibility.
  std::optional<std::map<ExponentVec, Scalar>> lower_labels(
      int i, const std::map<ExponentVec, Scalar>& terms);
  // The reduction loop of canonicalize_subgroup on starred-basis terms.
  LocalizedSubgroupElement reduce_star_terms(Weight lambda,
                                             std::map<ExponentVec, Scalar> terms);
};

}  // namespace qucell
