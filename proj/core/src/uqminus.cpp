// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/uqminus.hpp"

#include <algorithm>

#include "linalg.hpp"

namespace qucell {

struct UqMinus::WeightSpace::Solver {
  detail::LUSolver lu;
  explicit Solver(detail::ScalarMat m) : lu(std::move(m)) {}
};

UqMinus::UqMinus(RootDatum datum, long long height_cap)
    : datum_(std::move(datum)), height_cap_(height_cap) {}

Scalar UqMinus::one_minus_qi2(int i) const {
  return Scalar::one() - Scalar::v_power(4 * datum_.d(i));
}

Weight UqMinus::weight_of(const Content& c) const {
  std::vector<long long> neg(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
  return datum_.weight_from_alpha(neg);
}

Weight UqMinus::weight_of(const NCElement& x) const {
  return weight_of(x.content(datum_.rank()));
}

NCElement UqMinus::e_prime(int i, const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) {
    // Pairing of h_i with the weight of the prefix left of the removed
    // letter; the letter at position p contributes q_i^{<h_i, wt(prefix)>}.
    long long prefix_pairing = 0;
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] == i) {
        Word rest;
        rest.reserve(word.size() - 1);
        rest.insert(rest.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
        rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(p) + 1, word.end());
        r.add_term(rest, coeff * Scalar::v_power(qi_v_exp(i) * prefix_pairing));
      }
      prefix_pairing -= datum_.cartan(i, word[p]);
    }
  }
  return r;
}

NCElement UqMinus::e_prime_op(int i, const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) {
    long long suffix_pairing = 0;
    for (std::size_t pp = word.size(); pp-- > 0;) {
      if (word[pp] == i) {
        Word rest;
        rest.reserve(word.size() - 1);
        rest.insert(rest.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pp));
        rest.insert(rest.end(), word.begin() + static_cast<std::ptrdiff_t>(pp) + 1, word.end());
        r.add_term(rest, coeff * Scalar::v_power(qi_v_exp(i) * suffix_pairing));
      }
      suffix_pairing -= datum_.cartan(i, word[pp]);
    }
  }
  return r;
}

NCElement UqMinus::star(const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) {
    Word reversed(word.rbegin(), word.rend());
    r.add_term(reversed, coeff);
  }
  return r;
}

NCElement UqMinus::bar(const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) r.add_term(word, coeff.bar());
  return r;
}

NCElement UqMinus::sigma_prime(const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) {
    Word reversed(word.rbegin(), word.rend());
    const Scalar sign = word.size() % 2 == 0 ? Scalar::one() : -Scalar::one();
    r.add_term(reversed, coeff.bar() * sign);
  }
  return r;
}

NCElement UqMinus::sigma(const NCElement& x) const {
  NCElement r;
  for (const auto& [word, coeff] : x.terms()) {
    const Content c = word_content(word, datum_.rank());
    const Weight beta = -weight_of(c);  // positive counterpart of the weight
    // q-exponent (xi,xi)/2 - (xi,rho) for xi = -beta.
    const long long e = datum_.sym_form_int(beta, beta) / 2 + datum_.sym_form_int(beta, datum_.rho());
    const Scalar sign = word.size() % 2 == 0 ? Scalar::one() : -Scalar::one();
    Word reversed(word.rbegin(), word.rend());
    r.add_term(reversed, coeff.bar() * sign * Scalar::q_power(e));
  }
  return r;
}

const VLaurent& UqMinus::content_denominator(const Content& c) {
  auto it = content_denom_memo_.find(c);
  if (it != content_denom_memo_.end()) return it->second;
  VLaurent d(BigRat(1));
  for (int i = 0; i < datum_.rank(); ++i) {
    const VLaurent factor =
        VLaurent(BigRat(1)) - VLaurent::monomial(BigRat(1), 4 * datum_.d(i));
    for (long long k = 0; k < c[static_cast<std::size_t>(i)]; ++k) d = d * factor;
  }
  return content_denom_memo_.emplace(c, std::move(d)).first->second;
}

const VLaurent& UqMinus::pair_core(const Word& a, const Word& b) {
  const auto key = std::make_pair(a, b);
  auto it = pair_core_memo_.find(key);
  if (it != pair_core_memo_.end()) return it->second;

  VLaurent acc;
  if (a.empty()) {
    acc = VLaurent(BigRat(1));
  } else {
    const int i = a[0];
    const Word rest(a.begin() + 1, a.end());
    long long prefix_pairing = 0;
    for (std::size_t p = 0; p < b.size(); ++p) {
      if (b[p] == i) {
        Word b_rest;
        b_rest.reserve(b.size() - 1);
        b_rest.insert(b_rest.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(p));
        b_rest.insert(b_rest.end(), b.begin() + static_cast<std::ptrdiff_t>(p) + 1, b.end());
        acc = acc + pair_core(rest, b_rest).shifted(qi_v_exp(i) * prefix_pairing);
      }
      prefix_pairing -= datum_.cartan(i, b[p]);
    }
  }
  return pair_core_memo_.emplace(key, std::move(acc)).first->second;
}

Scalar UqMinus::pair_words(const Word& a, const Word& b) {
  if (a.empty() && b.empty()) return Scalar::one();
  if (a.empty() || b.empty()) return Scalar::zero();
  const Content ca = word_content(a, datum_.rank());
  if (ca != word_content(b, datum_.rank())) return Scalar::zero();
  const auto key = std::make_pair(a, b);
  auto it = pair_memo_.find(key);
  if (it != pair_memo_.end()) return it->second;
  Scalar result = Scalar::ratio(pair_core(a, b), content_denominator(ca));
  pair_memo_.emplace(key, result);
  return result;
}

Scalar UqMinus::lusztig_pair(const NCElement& x, const NCElement& y) {
  Scalar s = Scalar::zero();
  for (const auto& [wa, ca] : x.terms()) {
    for (const auto& [wb, cb] : y.terms()) {
      if (wa.size() != wb.size()) continue;
      const Scalar p = pair_words(wa, wb);
      if (!p.is_zero()) s += ca * cb * p;
    }
  }
  return s;
}

std::vector<Word> UqMinus::words_of_content(const Content& c) {
  std::vector<Word> words;
  Word current;
  Content remaining = c;
  const long long total = content_height(c);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long long>(current.size()) == total) {
      words.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] == 0) continue;
      remaining[i] -= 1;
      current.push_back(static_cast<int>(i));
      self(self);
      current.pop_back();
      remaining[i] += 1;
    }
  };
  rec(rec);
  return words;
}

void UqMinus::check_cap(const Content& c) const {
  const long long h = content_height(c);
  if (h > height_cap_) {
    fail(ErrorKind::height_cap, "weight height " + std::to_string(h) +
                                    " exceeds the configured cap " + std::to_string(height_cap_));
  }
}

long long UqMinus::kostant_count(const Content& c) const {
  const auto& roots = datum_.positive_roots();
  // Count multisets of positive roots summing to c; roots are scanned in a
  // fixed order with multiplicities chosen greedily.
  auto rec = [&](auto&& self, std::size_t idx, Content rem) -> long long {
    bool all_zero = std::all_of(rem.begin(), rem.end(), [](long long x) { return x == 0; });
    if (all_zero) return 1;
    if (idx == roots.size()) return 0;
    long long count = 0;
    Content r = rem;
    while (true) {
      count += self(self, idx + 1, r);
      bool ok = true;
      for (std::size_t k = 0; k < r.size(); ++k) {
        r[k] -= roots[idx][k];
        if (r[k] < 0) ok = false;
      }
      if (!ok) break;
    }
    return count;
  };
  return rec(rec, 0, c);
}

const UqMinus::WeightSpace& UqMinus::weight_space(const Content& c) {
  auto it = spaces_.find(c);
  if (it != spaces_.end()) return it->second;
  check_cap(c);

  WeightSpace ws;
  ws.content = c;
  ws.words = words_of_content(c);
  const std::size_t n = ws.words.size();
  // The gram holds the pairings scaled by the content denominator: plain
  // Laurent polynomials.  The scaling is uniform across the matrix, so the
  // pivot structure and every linear solve against it are unchanged.
  const VLaurent one(BigRat(1));
  ws.gram.assign(n, std::vector<Scalar>(n));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s; t < n; ++t) {
      Scalar p = Scalar::ratio(pair_core(ws.words[s], ws.words[t]), one);
      ws.gram[t][s] = p;
      ws.gram[s][t] = std::move(p);
    }
  }
  // Greedy pivoting: keep a word when its full pairing row is independent of
  // the rows already kept.
  detail::RowEchelon echelon;
  for (std::size_t s = 0; s < n; ++s) {
    if (echelon.add_row(ws.gram[s])) ws.pivots.push_back(s);
  }
  const long long expected = kostant_count(c);
  if (static_cast<long long>(ws.pivots.size()) != expected) {
    fail(ErrorKind::consistency,
         "pairing rank " + std::to_string(ws.pivots.size()) + " does not match the expected " +
             "dimension " + std::to_string(expected));
  }
  // Pivot-principal Gram submatrix; nonsingular because the pairing is
  // definite on the quotient by its radical.
  detail::ScalarMat pp(ws.pivots.size(), detail::ScalarRow(ws.pivots.size()));
  for (std::size_t s = 0; s < ws.pivots.size(); ++s) {
    for (std::size_t t = 0; t < ws.pivots.size(); ++t) {
      pp[s][t] = ws.gram[ws.pivots[s]][ws.pivots[t]];
    }
  }
  ws.solver = std::make_shared<const WeightSpace::Solver>(std::move(pp));
  return spaces_.emplace(c, std::move(ws)).first->second;
}

std::vector<Scalar> UqMinus::weight_basis_coords(const Content& c, const NCElement& x) {
  const WeightSpace& ws = weight_space(c);
  const std::size_t n = ws.words.size();
  // Coefficient vector of x over the full word list.
  std::vector<Scalar> u(n, Scalar::zero());
  for (const auto& [word, coeff] : x.terms()) {
    const auto pos = std::lower_bound(ws.words.begin(), ws.words.end(), word);
    if (pos == ws.words.end() || *pos != word) {
      fail(ErrorKind::invalid_argument, "element has a word outside the requested weight space");
    }
    u[static_cast<std::size_t>(pos - ws.words.begin())] = coeff;
  }
  // Right-hand side: pairings of x against the pivot words.
  std::vector<Scalar> rhs(ws.pivots.size(), Scalar::zero());
  for (std::size_t k = 0; k < ws.pivots.size(); ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!u[t].is_zero()) rhs[k] += ws.gram[ws.pivots[k]][t] * u[t];
    }
  }
  // The pivot classes span every word class, so matching the pairings
  // against the pivot words determines the class of x exactly.
  return ws.solver->lu.solve(std::move(rhs));
}

bool UqMinus::is_zero_in_algebra(const NCElement& x) {
  if (x.is_zero()) return true;
  for (const auto& [c, part] : x.homogeneous_components(datum_.rank())) {
    const WeightSpace& ws = weight_space(c);
    const std::size_t n = ws.words.size();
    std::vector<Scalar> u(n, Scalar::zero());
    for (const auto& [word, coeff] : part.terms()) {
      const auto pos = std::lower_bound(ws.words.begin(), ws.words.end(), word);
      u[static_cast<std::size_t>(pos - ws.words.begin())] = coeff;
    }
    for (std::size_t t = 0; t < n; ++t) {
      Scalar s = Scalar::zero();
      for (std::size_t w = 0; w < n; ++w) {
        if (!u[w].is_zero()) s += ws.gram[w][t] * u[w];
      }
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

bool UqMinus::equal_in_algebra(const NCElement& x, const NCElement& y) {
  return is_zero_in_algebra(x - y);
}

}  // namespace qucell
