// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include <algorithm>
#include <functional>
#include <string>

#include "qucell/error.hpp"
#include "qucell/pbw.hpp"

namespace qucell {

std::vector<std::vector<long long>> PBWContext::root_sequence(const std::vector<int>& word) const {
  const RootDatum& d = datum();
  if (!is_reduced_word(d, word)) fail(ErrorKind::invalid_argument, "word is not reduced");
  std::vector<std::vector<long long>> roots;
  roots.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    Weight w = d.simple_root(word[k]);
    for (std::size_t t = k; t-- > 0;) w = d.simple_reflection(word[t], w);
    const auto coords = d.alpha_coords(w);
    if (!coords) fail(ErrorKind::consistency, "root sequence left the root lattice");
    roots.push_back(*coords);
  }
  return roots;
}

const TriangularElement& PBWContext::root_vector(const std::vector<int>& prefix, int letter) {
  const auto key = std::make_pair(prefix, letter);
  const auto it = root_vector_memo_.find(key);
  if (it != root_vector_memo_.end()) return it->second;
  TriangularElement value;
  if (prefix.empty()) {
    value = TriangularElement::f(letter, datum().rank());
  } else {
    const std::vector<int> tail(prefix.begin() + 1, prefix.end());
    value = braid_apply(prefix.front(), root_vector(tail, letter), BraidDirection::forward);
  }
  return root_vector_memo_.emplace(key, std::move(value)).first->second;
}

Scalar PBWContext::pbw_norm_closed(const ExponentVec& c, const std::vector<int>& word) const {
  if (c.size() != word.size())
    fail(ErrorKind::invalid_argument, "exponent vector length does not match the word");
  Scalar denom = Scalar::one();
  for (std::size_t k = 0; k < word.size(); ++k) {
    const long long di = datum().d(word[k]);
    for (long long j = 1; j <= c[k]; ++j) {
      denom *= Scalar::one() - Scalar::v_power(4 * di * j);
    }
  }
  return Scalar::one() / denom;
}

const NCElement& PBWContext::pbw_vector(const ExponentVec& c, const std::vector<int>& word) {
  if (c.size() != word.size())
    fail(ErrorKind::invalid_argument, "exponent vector length does not match the word");
  for (long long ck : c)
    if (ck < 0) fail(ErrorKind::invalid_argument, "negative PBW exponent");
  const auto key = std::make_pair(c, word);
  const auto it = pbw_memo_.find(key);
  if (it != pbw_memo_.end()) return it->second;
  if (!is_reduced_word(datum(), word)) fail(ErrorKind::invalid_argument, "word is not reduced");

  TriangularElement x = TriangularElement::unit(datum().rank());
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (c[k] == 0) continue;
    const std::vector<int> prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
    const TriangularElement& rv = root_vector(prefix, word[k]);
    x = tri_mul(x, tri_divided_power(rv, word[k], c[k]));
  }
  NCElement low = x.lower_component();
  // The dropped mixed components cannot meet the pure lower slice; the norm
  // identity certifies the projection on every new vector.
  if (alg_.lusztig_pair(low, low) != pbw_norm_closed(c, word))
    fail(ErrorKind::consistency, "PBW vector failed its norm validation");
  return pbw_memo_.emplace(key, std::move(low)).first->second;
}

NCElement PBWContext::dual_pbw_vector(const ExponentVec& c, const std::vector<int>& word) {
  return pbw_vector(c, word).scaled(Scalar::one() / pbw_norm_closed(c, word));
}

PBWVector PBWContext::make_pbw(const ExponentVec& c, const std::vector<int>& word) {
  return PBWVector{c, word, pbw_vector(c, word), pbw_norm_closed(c, word)};
}

std::vector<ExponentVec> PBWContext::exponents_for_content(const Content& content,
                                                           const std::vector<int>& word) const {
  const auto roots = root_sequence(word);
  std::vector<ExponentVec> out;
  ExponentVec current(word.size(), 0);
  std::vector<long long> remaining = content;
  const auto all_zero = [](const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  };
  const std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == word.size()) {
      if (all_zero(remaining)) out.push_back(current);
      return;
    }
    // Largest multiple of roots[k] that fits under the remaining content.
    long long max_t = -1;
    for (std::size_t a = 0; a < remaining.size(); ++a) {
      if (roots[k][a] == 0) continue;
      const long long bound = remaining[a] / roots[k][a];
      max_t = max_t < 0 ? bound : std::min(max_t, bound);
    }
    for (long long t = 0; t <= max_t; ++t) {
      current[k] = t;
      rec(k + 1);
      current[k] = 0;
      for (std::size_t a = 0; a < remaining.size(); ++a) remaining[a] -= roots[k][a];
    }
    for (std::size_t a = 0; a < remaining.size(); ++a)
      remaining[a] += (max_t + 1) * roots[k][a];
  };
  rec(0);
  return out;
}

PBWContext::Expansion PBWContext::pbw_expand(const NCElement& x, const std::vector<int>& word) {
  Expansion result;
  result.residual = x;
  for (const auto& [content, part] : x.homogeneous_components(datum().rank())) {
    for (const auto& c : exponents_for_content(content, word)) {
      const NCElement& basis = pbw_vector(c, word);
      const Scalar coeff = alg_.lusztig_pair(part, basis) / pbw_norm_closed(c, word);
      if (coeff.is_zero()) continue;
      result.coeffs[c] = coeff;
      result.residual -= basis.scaled(coeff);
    }
  }
  return result;
}

bool PBWContext::in_subalgebra(const NCElement& x, const std::vector<int>& word) {
  return alg_.is_zero_in_algebra(pbw_expand(x, word).residual);
}

}  // namespace qucell
