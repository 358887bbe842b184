// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "qucell/canonical.hpp"
#include "qucell/nc_element.hpp"
#include "qucell/pbw.hpp"
#include "qucell/root_datum.hpp"
#include "qucell/scalar.hpp"
#include "qucell/uqminus.hpp"

namespace qucell {

class HWModule;

// A vector in one weight space of a highest-weight module, stored as
// coordinates over the pivot-monomial basis of that space.
struct ModuleVector {
  HWModule* module = nullptr;
  Weight weight;
  std::vector<Scalar> coords;

  bool is_zero() const;
  bool operator==(const ModuleVector& rhs) const = default;
};

// The integrable highest-weight module of a dominant weight.  Weight spaces
// are spans of the monomial classes y.u_lambda, y a word in the generators,
// modulo the radical of the contravariant form; the per-weight rank is
// gated against an independent Freudenthal multiplicity computation.
class HWModule {
 public:
  HWModule(PBWContext& pbw, Weight lambda);

  const Weight& highest_weight() const { return lambda_; }
  const RootDatum& datum() const { return alg_.datum(); }
  PBWContext& pbw() { return pbw_; }
  UqMinus& alg() { return alg_; }

  // Basis data for one weight space: every word of content lambda - mu, a
  // greedy maximal form-independent subset of them, the full Gram matrix of
  // the contravariant form, and solver state for coordinates.
  struct WeightBasis {
    Weight mu;
    std::vector<Word> words;          // all words, lex sorted
    std::vector<std::size_t> pivots;  // indices into words
    std::vector<std::vector<Scalar>> gram;
    int dim() const { return static_cast<int>(pivots.size()); }
    struct Solver;
    std::shared_ptr<const Solver> solver;
  };

  // Cached; enforces the height cap of the ambient algebra.  Weights with
  // lambda - mu outside the positive root cone get the zero space.
  const WeightBasis& weight_basis(const Weight& mu);

  // Weight multiplicity by the exact Freudenthal recursion on dominant
  // chamber representatives; independent of the form machinery.
  long long character_dim(const Weight& mu);

  ModuleVector highest_vector();
  ModuleVector zero_vector(const Weight& mu);
  // The j-th pivot basis vector of the weight-mu space.
  ModuleVector basis_vector(const Weight& mu, std::size_t j);
  // Class of (sum_w expr_w . w).u_lambda; every word must have content
  // lambda - mu.
  ModuleVector vector_from_words(const std::map<Word, Scalar>& expr, const Weight& mu);
  // y.u_lambda for homogeneous y in the negative half.
  ModuleVector vector_from_element(const NCElement& y);

  ModuleVector act_f(int i, const ModuleVector& v);
  // f_i^n / [n]_i! applied to v.
  ModuleVector act_f_divided(int i, long long n, const ModuleVector& v);
  // Commutes e_i past the word letters; kills the highest vector.
  ModuleVector act_e(int i, const ModuleVector& v);
  // K_beta for beta in the root lattice (simple-root coordinates); acts on
  // the weight-mu space by the scalar q^{(beta, mu)}.
  ModuleVector act_torus(const std::vector<long long>& beta, const ModuleVector& v);

  // y.v where each word of y acts by lowering generators.
  ModuleVector act_element_f(const NCElement& y, const ModuleVector& v);
  // The image of y under the swap of lowering and raising generators,
  // applied to v; word order is preserved.
  ModuleVector act_element_e(const NCElement& y, const ModuleVector& v);

  // The symmetric bilinear form with (u_lambda, u_lambda) = 1 that flips
  // f_i to e_i across the comma; weight-orthogonal.
  Scalar contravariant_form(const ModuleVector& v1, const ModuleVector& v2);

  // The extremal vector of weight w(lambda): the divided-power monomial
  // f_{i_1}^{(a_1)} ... f_{i_l}^{(a_l)} . u_lambda over the canonical word
  // of w with a_k = <h_{i_k}, s_{i_{k+1}} ... s_{i_l} lambda>.  Its
  // self-pairing is checked to be 1.
  ModuleVector extremal_vector(const WeylElt& w);

  // The unique element D of the negative half with (D, x)_L = (u, x.u')
  // for all x, expanded over the PBW basis of the canonical longest word
  // and verified against every word of its content.  Zero when
  // wt(u) - wt(u') is not a nonpositive root-lattice element.
  NCElement matrix_coefficient(const ModuleVector& u, const ModuleVector& uprime);

 private:
  PBWContext& pbw_;
  UqMinus& alg_;
  Weight lambda_;
  std::vector<int> w0_word_;
  std::map<Weight, WeightBasis> bases_;
  std::map<std::pair<Word, Word>, Scalar> form_memo_;
  std::map<Weight, long long> mult_memo_;  // dominant representatives only

  // Simple-root coordinates of lambda - mu when that lies in the positive
  // cone, nullopt otherwise.
  std::optional<Content> content_below(const Weight& mu) const;
  Scalar form_words(const Word& a, const Word& b);
  std::map<Word, Scalar> e_on_words(int i, const std::map<Word, Scalar>& expr) const;
  std::map<Word, Scalar> raw_of(const ModuleVector& v);
  Scalar form_raw(const std::map<Word, Scalar>& a, const std::map<Word, Scalar>& b);
  void check_module(const ModuleVector& v) const;
};

// The quantum minor D_{w lambda, w' lambda} over a caller-provided module.
NCElement quantum_minor(HWModule& module, const WeylElt& w, const WeylElt& wprime);
// Convenience overload constructing a transient module for lambda.
NCElement quantum_minor(PBWContext& pbw, const WeylElt& w, const WeylElt& wprime,
                        const Weight& lambda);

// The minimal-weight module realization of a dual canonical element: the
// module of lambda_b = sum_i eps*_i(b) varpi_i together with the unique
// vector u of weight wt(b) + lambda_b whose matrix coefficient against the
// highest vector reproduces the element exactly.
struct DCBVector {
  std::shared_ptr<HWModule> module;
  ModuleVector vector;
};
DCBVector vector_from_dcb(CanonicalBasis& basis, const CrystalLabel& b);

}  // namespace qucell
