// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/canonical.hpp"

#include <algorithm>
#include <functional>

#include "linalg.hpp"
#include "qucell/error.hpp"

namespace qucell {

CanonicalBasis::CanonicalBasis(PBWContext& pbw) : pbw_(pbw) {
  reference_word_ = longest_element(pbw.datum()).word();
}

Scalar CanonicalBasis::solve_correction(const Scalar& r) const {
  if (r.is_zero()) return Scalar::zero();
  if (!r.is_laurent_polynomial())
    fail(ErrorKind::consistency, "correction data is not a Laurent polynomial");
  if (!(r.bar() == -r))
    fail(ErrorKind::consistency, "correction data is not bar-antisymmetric");
  // r = sum_{e>0} a_e (v^e - v^{-e}); the unique solution with positive
  // exponents keeps the positive half.
  Scalar d = Scalar::zero();
  r.num().for_terms([&](long long e, const BigRat& a) {
    if (e > 0) d += Scalar::from_rat(a) * Scalar::v_power(e);
  });
  // The correction must lie in q Z[q]: even positive exponents, integral
  // coefficients.
  d.num().for_terms([&](long long e, const BigRat& a) {
    if (e <= 0 || e % 2 != 0)
      fail(ErrorKind::consistency, "correction is not a positive power series in q");
    if (boost::multiprecision::denominator(a) != 1)
      fail(ErrorKind::consistency, "correction has a non-integral coefficient");
  });
  return d;
}

const NCElement& CanonicalBasis::dual_canonical_element(const ExponentVec& c,
                                                        const std::vector<int>& word) {
  const auto key = std::make_pair(c, word);
  const auto it = dcb_memo_.find(key);
  if (it != dcb_memo_.end()) return it->second;

  UqMinus& u = alg();
  const auto roots = pbw_.root_sequence(word);
  if (c.size() != word.size())
    fail(ErrorKind::invalid_argument, "exponent vector length does not match the word");
  Content content(static_cast<std::size_t>(datum().rank()), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    for (std::size_t a = 0; a < content.size(); ++a) content[a] += c[k] * roots[k][a];

  // All exponent vectors of the weight that can appear: the correction is
  // supported strictly below c in left-lex order.
  std::vector<ExponentVec> all = pbw_.exponents_for_content(content, word);
  std::sort(all.begin(), all.end());
  std::vector<ExponentVec> lower;
  for (const auto& e : all) {
    if (e < c) lower.push_back(e);
  }
  if (std::find(all.begin(), all.end(), c) == all.end())
    fail(ErrorKind::consistency, "exponent vector does not belong to its own weight family");

  // s(a, b) = coefficient of the dual vector at b in the twisted image of
  // the dual vector at a; triangular with unit diagonal.
  const auto s_entry = [&](const ExponentVec& a, const ExponentVec& b) {
    const NCElement sig = u.sigma(pbw_.dual_pbw_vector(a, word));
    return u.lusztig_pair(sig, pbw_.pbw_vector(b, word));
  };
  for (const auto& a : lower) {
    if (!(s_entry(a, a) == Scalar::one()))
      fail(ErrorKind::consistency, "twisted dual vector lost its unit diagonal");
  }
  if (!(s_entry(c, c) == Scalar::one()))
    fail(ErrorKind::consistency, "twisted dual vector lost its unit diagonal");

  // Solve for the corrections in decreasing lex order below c.
  std::map<ExponentVec, Scalar> d;
  for (std::size_t idx = lower.size(); idx-- > 0;) {
    const ExponentVec& target = lower[idx];
    Scalar r = s_entry(c, target);
    for (std::size_t j = idx + 1; j < lower.size(); ++j) {
      const Scalar dj = d[lower[j]];
      if (dj.is_zero()) continue;
      r += dj.bar() * s_entry(lower[j], target);
    }
    d[target] = solve_correction(r);
  }

  NCElement g = pbw_.dual_pbw_vector(c, word);
  for (const auto& [e, coeff] : d) {
    if (!coeff.is_zero()) g += pbw_.dual_pbw_vector(e, word).scaled(coeff);
  }
  // The defining fixedness must hold in the algebra.
  if (!u.equal_in_algebra(u.sigma(g), g))
    fail(ErrorKind::consistency, "constructed element is not fixed by the twisted involution");
  return dcb_memo_.emplace(key, std::move(g)).first->second;
}

NCElement CanonicalBasis::dual_canonical_element(const ExponentVec& c) {
  return dual_canonical_element(c, reference_word_);
}

const NCElement& CanonicalBasis::canonical_element(const ExponentVec& c,
                                                   const std::vector<int>& word) {
  const auto key = std::make_pair(c, Word(word));
  if (auto it = canon_memo_.find(key); it != canon_memo_.end()) return it->second;
  UqMinus& u = alg();
  const NCElement& g = dual_canonical_element(c, word);
  const Content content = g.content(datum().rank());
  const auto labels = labels_for_content(content, word);
  const auto pos_it = std::find(labels.begin(), labels.end(), c);
  if (pos_it == labels.end())
    fail(ErrorKind::consistency, "label missing from its own content block");
  detail::ScalarMat gram(labels.size(), detail::ScalarRow(labels.size(), Scalar::zero()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const NCElement& gi = dual_canonical_element(labels[i], word);
    for (std::size_t j = i; j < labels.size(); ++j) {
      gram[i][j] = u.lusztig_pair(gi, dual_canonical_element(labels[j], word));
      gram[j][i] = gram[i][j];
    }
  }
  detail::ScalarRow rhs(labels.size(), Scalar::zero());
  rhs[static_cast<std::size_t>(pos_it - labels.begin())] = Scalar::one();
  const auto solved = detail::solve_linear(gram, rhs);
  if (!solved) fail(ErrorKind::consistency, "the pairing is degenerate on the weight space");
  NCElement out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (!(*solved)[k].is_zero())
      out = out + dual_canonical_element(labels[k], word).scaled((*solved)[k]);
  }
  return canon_memo_.emplace(key, std::move(out)).first->second;
}

NCElement CanonicalBasis::canonical_element(const ExponentVec& c) {
  return canonical_element(c, reference_word_);
}

long long CanonicalBasis::crystal_epsilon(int i, const NCElement& x, CrystalSide side) {
  UqMinus& u = alg();
  if (u.is_zero_in_algebra(x))
    fail(ErrorKind::invalid_argument, "crystal statistics of the zero element");
  NCElement cur = x;
  long long count = 0;
  while (true) {
    cur = side == CrystalSide::left ? u.e_prime(i, cur) : u.e_prime_op(i, cur);
    if (u.is_zero_in_algebra(cur)) return count;
    ++count;
  }
}

CrystalLabel CanonicalBasis::label(const ExponentVec& c, const std::vector<int>& word) {
  CrystalLabel b;
  b.word = word;
  b.exponents = c;
  b.gup = dual_canonical_element(c, word);
  b.weight = alg().weight_of(b.gup.is_zero() ? Content(static_cast<std::size_t>(datum().rank()), 0)
                                             : b.gup.content(datum().rank()));
  for (int i = 0; i < datum().rank(); ++i) {
    b.eps.push_back(crystal_epsilon(i, b.gup, CrystalSide::left));
    b.eps_star.push_back(crystal_epsilon(i, b.gup, CrystalSide::right));
  }
  return b;
}

CrystalLabel CanonicalBasis::label(const ExponentVec& c) { return label(c, reference_word_); }

std::vector<ExponentVec> CanonicalBasis::labels_for_content(const Content& content,
                                                            const std::vector<int>& word) const {
  auto all = pbw_.exponents_for_content(content, word);
  std::sort(all.begin(), all.end());
  return all;
}

std::map<ExponentVec, Scalar> CanonicalBasis::dcb_expand(const NCElement& x) {
  std::map<ExponentVec, Scalar> out;
  UqMinus& u = alg();
  for (const auto& [content, part] : x.homogeneous_components(datum().rank())) {
    const auto labels = labels_for_content(content, reference_word_);
    // Solve part = sum_b coeff_b G(b) in pivot coordinates of the weight
    // space; the basis property makes the solution unique.
    const auto target = u.weight_basis_coords(content, part);
    detail::ScalarMat columns;
    for (const auto& lbl : labels) {
      columns.push_back(u.weight_basis_coords(content, dual_canonical_element(lbl)));
    }
    const std::size_t dim = target.size();
    if (labels.size() != dim)
      fail(ErrorKind::consistency, "basis size does not match the weight space dimension");
    detail::ScalarMat system(dim, detail::ScalarRow(labels.size(), Scalar::zero()));
    for (std::size_t col = 0; col < labels.size(); ++col)
      for (std::size_t row = 0; row < dim; ++row) system[row][col] = columns[col][row];
    const auto solved = detail::solve_linear(system, target);
    if (!solved) fail(ErrorKind::consistency, "expansion over the basis is inconsistent");
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (!(*solved)[k].is_zero()) {
        auto [it, inserted] = out.emplace(labels[k], (*solved)[k]);
        if (!inserted) it->second += (*solved)[k];
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

ExponentVec CanonicalBasis::star_label(const ExponentVec& c, const std::vector<int>& word) {
  const NCElement starred = alg().star(dual_canonical_element(c, word));
  const auto expansion = dcb_expand(starred);
  if (expansion.size() != 1 || !expansion.begin()->second.is_one())
    fail(ErrorKind::consistency, "star image is not a single basis element");
  return expansion.begin()->first;
}

bool CanonicalBasis::demazure_membership(const ExponentVec& c, const std::vector<int>& word,
                                         const WeylElt& w) {
  return demazure_membership_with(c, word, w.word());
}

bool CanonicalBasis::demazure_membership(const ExponentVec& c, const WeylElt& w) {
  return demazure_membership_with(c, reference_word_, w.word());
}

bool CanonicalBasis::demazure_membership_with(const ExponentVec& c, const std::vector<int>& word,
                                              const std::vector<int>& w_word) {
  UqMinus& u = alg();
  if (!is_reduced_word(datum(), w_word))
    fail(ErrorKind::invalid_argument, "word is not reduced");
  const NCElement& g = dual_canonical_element(c, word);
  if (g.is_zero()) fail(ErrorKind::invalid_argument, "membership of the zero element");
  const Content content = g.content(datum().rank());
  const std::vector<int>& mono_word = w_word;

  // Enumerate generator monomials over the reduced word whose content
  // matches; membership is nonvanishing of some pairing.
  std::vector<long long> remaining = content;
  Word current;
  bool found = false;
  const std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (found) return;
    if (k == mono_word.size()) {
      if (std::all_of(remaining.begin(), remaining.end(), [](long long x) { return x == 0; })) {
        if (!u.lusztig_pair(g, NCElement::monomial(current, Scalar::one())).is_zero())
          found = true;
      }
      return;
    }
    const int i = mono_word[k];
    const long long max_a = remaining[static_cast<std::size_t>(i)];
    long long pushed = 0;
    for (long long a = 0; a <= max_a && !found; ++a) {
      rec(k + 1);
      if (!found && a < max_a) {
        remaining[static_cast<std::size_t>(i)] -= 1;
        current.push_back(i);
        ++pushed;
      }
    }
    remaining[static_cast<std::size_t>(i)] += pushed;
    current.resize(current.size() - static_cast<std::size_t>(pushed));
  };
  rec(0);
  return found;
}

}  // namespace qucell
