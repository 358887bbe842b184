// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/hw_module.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qucell/error.hpp"
#include "linalg.hpp"

namespace qucell {

namespace {

// [n]_{q^d} for n of either sign; q_int itself is empty below zero.
Scalar q_int_signed(long long n, long long d) {
  if (n >= 0) return q_int(n, d);
  return -q_int(-n, d);
}

}  // namespace

struct HWModule::WeightBasis::Solver {
  detail::LUSolver lu;
  explicit Solver(detail::ScalarMat m) : lu(std::move(m)) {}
};

bool ModuleVector::is_zero() const {
  for (const auto& c : coords) {
    if (!c.is_zero()) return false;
  }
  return true;
}

HWModule::HWModule(PBWContext& pbw, Weight lambda)
    : pbw_(pbw), alg_(pbw.alg()), lambda_(std::move(lambda)) {
  if (lambda_.rank() != alg_.datum().rank()) {
    fail(ErrorKind::invalid_argument, "highest weight rank does not match the root datum");
  }
  if (!alg_.datum().is_dominant(lambda_)) {
    fail(ErrorKind::invalid_argument, "highest weight must be dominant");
  }
  w0_word_ = longest_element(alg_.datum()).word();
}

std::optional<Content> HWModule::content_below(const Weight& mu) const {
  const auto coords = alg_.datum().alpha_coords(lambda_ - mu);
  if (!coords) return std::nullopt;
  for (const long long c : *coords) {
    if (c < 0) return std::nullopt;
  }
  return Content(coords->begin(), coords->end());
}

long long HWModule::character_dim(const Weight& mu) {
  const RootDatum& rd = alg_.datum();
  // Multiplicities are Weyl-invariant; walk mu into the dominant chamber.
  // Each reflection raises mu, so the walk either terminates or leaves the
  // cone below lambda, where the multiplicity is zero.
  Weight m = mu;
  for (;;) {
    if (!content_below(m).has_value()) return 0;
    int neg = -1;
    for (int i = 0; i < rd.rank(); ++i) {
      if (m.coord(i) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    m = rd.simple_reflection(neg, m);
  }
  const auto memo = mult_memo_.find(m);
  if (memo != mult_memo_.end()) return memo->second;
  const Content nu = *content_below(m);
  if (content_height(nu) == 0) {
    mult_memo_.emplace(m, 1);
    return 1;
  }
  // Freudenthal recursion: the shifted norm gap times the multiplicity
  // equals twice the form-weighted count over the root strings above m.
  const Weight lam_r = lambda_ + rd.rho();
  const Weight m_r = m + rd.rho();
  const BigRat denom = rd.sym_form(lam_r, lam_r) - rd.sym_form(m_r, m_r);
  if (denom <= 0) {
    fail(ErrorKind::consistency, "multiplicity recursion hit a nonpositive norm gap");
  }
  BigRat sum = 0;
  for (const auto& alpha : rd.positive_roots()) {
    const Weight root = rd.weight_from_alpha(alpha);
    for (long long k = 1;; ++k) {
      const Weight above = m + root.scaled(k);
      if (!content_below(above).has_value()) break;
      const long long mult = character_dim(above);
      if (mult != 0) sum += BigRat(2 * mult) * rd.sym_form(above, root);
    }
  }
  const BigRat value = sum / denom;
  if (boost::multiprecision::denominator(value) != 1) {
    fail(ErrorKind::consistency, "multiplicity recursion produced a non-integer");
  }
  const long long out = boost::multiprecision::numerator(value).convert_to<long long>();
  mult_memo_.emplace(m, out);
  return out;
}

Scalar HWModule::form_words(const Word& a, const Word& b) {
  const RootDatum& rd = alg_.datum();
  if (word_content(a, rd.rank()) != word_content(b, rd.rank())) return Scalar::zero();
  if (a.empty()) return Scalar::one();
  const auto key = std::make_pair(a, b);
  const auto it = form_memo_.find(key);
  if (it != form_memo_.end()) return it->second;
  // Peel the leading letter of a across the comma; it lands on b.u_lambda
  // as the derivation that removes one matching letter at a time, weighted
  // by the q-integer of the pairing with the weight to its right.
  const int i = a.front();
  const Word rest(a.begin() + 1, a.end());
  Scalar out = Scalar::zero();
  for (std::size_t p = 0; p < b.size(); ++p) {
    if (b[p] != i) continue;
    long long pairing = lambda_.coord(i);
    for (std::size_t r = p + 1; r < b.size(); ++r) pairing -= rd.cartan(i, b[r]);
    if (pairing == 0) continue;
    Word removed;
    removed.reserve(b.size() - 1);
    removed.insert(removed.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(p));
    removed.insert(removed.end(), b.begin() + static_cast<std::ptrdiff_t>(p) + 1, b.end());
    out += q_int_signed(pairing, rd.d(i)) * form_words(rest, removed);
  }
  form_memo_.emplace(key, out);
  return out;
}

std::map<Word, Scalar> HWModule::e_on_words(int i, const std::map<Word, Scalar>& expr) const {
  const RootDatum& rd = alg_.datum();
  std::map<Word, Scalar> out;
  for (const auto& [word, coeff] : expr) {
    for (std::size_t p = 0; p < word.size(); ++p) {
      if (word[p] != i) continue;
      long long pairing = lambda_.coord(i);
      for (std::size_t r = p + 1; r < word.size(); ++r) pairing -= rd.cartan(i, word[r]);
      if (pairing == 0) continue;
      Word removed;
      removed.reserve(word.size() - 1);
      removed.insert(removed.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
      removed.insert(removed.end(), word.begin() + static_cast<std::ptrdiff_t>(p) + 1, word.end());
      out[removed] += coeff * q_int_signed(pairing, rd.d(i));
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

const HWModule::WeightBasis& HWModule::weight_basis(const Weight& mu) {
  const auto found = bases_.find(mu);
  if (found != bases_.end()) return found->second;

  WeightBasis ws;
  ws.mu = mu;
  const auto c = content_below(mu);
  if (c.has_value()) {
    if (content_height(*c) > alg_.height_cap()) {
      fail(ErrorKind::height_cap, "weight space at depth " + std::to_string(content_height(*c)) +
                                      " exceeds the height cap " +
                                      std::to_string(alg_.height_cap()));
    }
    ws.words = UqMinus::words_of_content(*c);
    const std::size_t n = ws.words.size();
    ws.gram.assign(n, std::vector<Scalar>(n));
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        ws.gram[s][t] = form_words(ws.words[s], ws.words[t]);
      }
    }
    detail::RowEchelon echelon;
    for (std::size_t s = 0; s < n; ++s) {
      if (echelon.add_row(ws.gram[s])) ws.pivots.push_back(s);
    }
    const long long expected = character_dim(mu);
    if (static_cast<long long>(ws.pivots.size()) != expected) {
      fail(ErrorKind::consistency,
           "form rank " + std::to_string(ws.pivots.size()) +
               " does not match the character multiplicity " + std::to_string(expected));
    }
    if (!ws.pivots.empty()) {
      detail::ScalarMat pp(ws.pivots.size(), detail::ScalarRow(ws.pivots.size()));
      for (std::size_t s = 0; s < ws.pivots.size(); ++s) {
        for (std::size_t t = 0; t < ws.pivots.size(); ++t) {
          pp[s][t] = ws.gram[ws.pivots[s]][ws.pivots[t]];
        }
      }
      ws.solver = std::make_shared<const WeightBasis::Solver>(std::move(pp));
    }
  }
  return bases_.emplace(mu, std::move(ws)).first->second;
}

ModuleVector HWModule::highest_vector() {
  return vector_from_words({{Word{}, Scalar::one()}}, lambda_);
}

ModuleVector HWModule::zero_vector(const Weight& mu) {
  const WeightBasis& ws = weight_basis(mu);
  return ModuleVector{this, mu, std::vector<Scalar>(ws.pivots.size(), Scalar::zero())};
}

ModuleVector HWModule::basis_vector(const Weight& mu, std::size_t j) {
  const WeightBasis& ws = weight_basis(mu);
  if (j >= ws.pivots.size()) {
    fail(ErrorKind::invalid_argument, "basis index outside the weight space dimension");
  }
  std::vector<Scalar> coords(ws.pivots.size(), Scalar::zero());
  coords[j] = Scalar::one();
  return ModuleVector{this, mu, std::move(coords)};
}

ModuleVector HWModule::vector_from_words(const std::map<Word, Scalar>& expr, const Weight& mu) {
  const WeightBasis& ws = weight_basis(mu);
  const std::size_t n = ws.words.size();
  std::vector<Scalar> u(n, Scalar::zero());
  for (const auto& [word, coeff] : expr) {
    const auto pos = std::lower_bound(ws.words.begin(), ws.words.end(), word);
    if (pos == ws.words.end() || *pos != word) {
      fail(ErrorKind::invalid_argument, "expression has a word outside the weight space");
    }
    u[static_cast<std::size_t>(pos - ws.words.begin())] = coeff;
  }
  if (ws.pivots.empty()) return zero_vector(mu);
  std::vector<Scalar> rhs(ws.pivots.size(), Scalar::zero());
  for (std::size_t k = 0; k < ws.pivots.size(); ++k) {
    for (std::size_t t = 0; t < n; ++t) {
      if (!u[t].is_zero()) rhs[k] += ws.gram[ws.pivots[k]][t] * u[t];
    }
  }
  std::vector<Scalar> coords = ws.solver->lu.solve(std::move(rhs));
  // Residual guard: the class minus its pivot expansion must pair to zero
  // with every word.
  for (std::size_t t = 0; t < n; ++t) {
    Scalar resid = Scalar::zero();
    for (std::size_t s = 0; s < n; ++s) {
      if (!u[s].is_zero()) resid += ws.gram[s][t] * u[s];
    }
    for (std::size_t k = 0; k < ws.pivots.size(); ++k) {
      if (!coords[k].is_zero()) resid -= coords[k] * ws.gram[ws.pivots[k]][t];
    }
    if (!resid.is_zero()) {
      fail(ErrorKind::consistency, "module coordinate solve left a nonzero residual");
    }
  }
  return ModuleVector{this, mu, std::move(coords)};
}

ModuleVector HWModule::vector_from_element(const NCElement& y) {
  if (y.is_zero()) return zero_vector(lambda_);
  if (!y.is_homogeneous(alg_.datum().rank())) {
    fail(ErrorKind::invalid_argument, "module vectors come from homogeneous elements");
  }
  return vector_from_words(y.terms(), lambda_ + alg_.weight_of(y));
}

std::map<Word, Scalar> HWModule::raw_of(const ModuleVector& v) {
  const WeightBasis& ws = weight_basis(v.weight);
  if (v.coords.size() != ws.pivots.size()) {
    fail(ErrorKind::invalid_argument, "vector coordinates do not match the weight space");
  }
  std::map<Word, Scalar> out;
  for (std::size_t j = 0; j < ws.pivots.size(); ++j) {
    if (!v.coords[j].is_zero()) out.emplace(ws.words[ws.pivots[j]], v.coords[j]);
  }
  return out;
}

Scalar HWModule::form_raw(const std::map<Word, Scalar>& a, const std::map<Word, Scalar>& b) {
  Scalar out = Scalar::zero();
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      const Scalar f = form_words(wa, wb);
      if (!f.is_zero()) out += ca * cb * f;
    }
  }
  return out;
}

void HWModule::check_module(const ModuleVector& v) const {
  if (v.module != this) {
    fail(ErrorKind::invalid_argument, "vector belongs to a different module");
  }
}

ModuleVector HWModule::act_f(int i, const ModuleVector& v) {
  check_module(v);
  const Weight target = v.weight - alg_.datum().simple_root(i);
  std::map<Word, Scalar> moved;
  for (const auto& [word, coeff] : raw_of(v)) {
    Word prefixed;
    prefixed.reserve(word.size() + 1);
    prefixed.push_back(i);
    prefixed.insert(prefixed.end(), word.begin(), word.end());
    moved.emplace(std::move(prefixed), coeff);
  }
  return vector_from_words(moved, target);
}

ModuleVector HWModule::act_f_divided(int i, long long n, const ModuleVector& v) {
  if (n < 0) fail(ErrorKind::invalid_argument, "divided power exponent must be nonnegative");
  ModuleVector out = v;
  for (long long k = 0; k < n; ++k) out = act_f(i, out);
  const Scalar inv = q_factorial(n, alg_.datum().d(i)).inverse();
  for (auto& c : out.coords) c *= inv;
  return out;
}

ModuleVector HWModule::act_e(int i, const ModuleVector& v) {
  check_module(v);
  const Weight target = v.weight + alg_.datum().simple_root(i);
  return vector_from_words(e_on_words(i, raw_of(v)), target);
}

ModuleVector HWModule::act_torus(const std::vector<long long>& beta, const ModuleVector& v) {
  check_module(v);
  const Weight wb = alg_.datum().weight_from_alpha(beta);
  const Scalar factor = Scalar::q_power(alg_.datum().sym_form_int(wb, v.weight));
  ModuleVector out = v;
  for (auto& c : out.coords) c *= factor;
  return out;
}

ModuleVector HWModule::act_element_f(const NCElement& y, const ModuleVector& v) {
  check_module(v);
  if (y.is_zero()) return zero_vector(v.weight);
  const Weight target = v.weight + alg_.weight_of(y);
  std::map<Word, Scalar> moved;
  for (const auto& [yw, yc] : y.terms()) {
    for (const auto& [word, coeff] : raw_of(v)) {
      Word joined = yw;
      joined.insert(joined.end(), word.begin(), word.end());
      const Scalar prod = yc * coeff;
      auto [it, inserted] = moved.emplace(std::move(joined), prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = moved.begin(); it != moved.end();)
    it = it->second.is_zero() ? moved.erase(it) : std::next(it);
  return vector_from_words(moved, target);
}

ModuleVector HWModule::act_element_e(const NCElement& y, const ModuleVector& v) {
  check_module(v);
  if (y.is_zero()) return zero_vector(v.weight);
  const Weight target = v.weight - alg_.weight_of(y);
  ModuleVector out = zero_vector(target);
  for (const auto& [yw, yc] : y.terms()) {
    ModuleVector cur = v;
    for (auto it = yw.rbegin(); it != yw.rend(); ++it) cur = act_e(*it, cur);
    if (!(cur.weight == target))
      fail(ErrorKind::consistency, "raising action landed at the wrong weight");
    for (std::size_t k = 0; k < cur.coords.size(); ++k) out.coords[k] += yc * cur.coords[k];
  }
  return out;
}

Scalar HWModule::contravariant_form(const ModuleVector& v1, const ModuleVector& v2) {
  check_module(v1);
  check_module(v2);
  if (!(v1.weight == v2.weight)) return Scalar::zero();
  return form_raw(raw_of(v1), raw_of(v2));
}

ModuleVector HWModule::extremal_vector(const WeylElt& w) {
  if (!(w.datum() == alg_.datum())) {
    fail(ErrorKind::invalid_argument, "Weyl element belongs to a different root datum");
  }
  const std::vector<int>& word = w.word();
  ModuleVector v = highest_vector();
  for (std::size_t k = word.size(); k-- > 0;) {
    const std::vector<int> suffix(word.begin() + static_cast<std::ptrdiff_t>(k) + 1, word.end());
    const long long a = apply_word(alg_.datum(), suffix, lambda_).coord(word[k]);
    v = act_f_divided(word[k], a, v);
  }
  if (!(v.weight == w.apply(lambda_))) {
    fail(ErrorKind::consistency, "extremal vector landed at the wrong weight");
  }
  if (!(contravariant_form(v, v) == Scalar::one())) {
    fail(ErrorKind::consistency, "extremal vector self-pairing is not 1");
  }
  return v;
}

NCElement HWModule::matrix_coefficient(const ModuleVector& u, const ModuleVector& uprime) {
  check_module(u);
  check_module(uprime);
  const auto coords = alg_.datum().alpha_coords(uprime.weight - u.weight);
  if (!coords) return NCElement();
  for (const long long c : *coords) {
    if (c < 0) return NCElement();
  }
  const Content content(coords->begin(), coords->end());
  const std::map<Word, Scalar> raw_u = raw_of(u);
  const std::map<Word, Scalar> raw_up = raw_of(uprime);
  if (content_height(content) == 0) {
    const Scalar s = form_raw(raw_u, raw_up);
    return s.is_zero() ? NCElement() : NCElement::unit().scaled(s);
  }
  if (content_height(content) > alg_.height_cap()) {
    fail(ErrorKind::height_cap, "matrix coefficient at depth " +
                                    std::to_string(content_height(content)) +
                                    " exceeds the height cap " +
                                    std::to_string(alg_.height_cap()));
  }
  // Orthogonal expansion over the PBW basis of the canonical longest word:
  // the coefficient on each basis vector is the pairing of the target
  // vectors across that vector's module action, divided by the self-pairing.
  NCElement out;
  for (const ExponentVec& exps : pbw_.exponents_for_content(content, w0_word_)) {
    const NCElement& basis_vec = pbw_.pbw_vector(exps, w0_word_);
    std::map<Word, Scalar> acted;
    for (const auto& [bw, bc] : basis_vec.terms()) {
      for (const auto& [pw, pc] : raw_up) {
        Word joined;
        joined.reserve(bw.size() + pw.size());
        joined.insert(joined.end(), bw.begin(), bw.end());
        joined.insert(joined.end(), pw.begin(), pw.end());
        acted[joined] += bc * pc;
      }
    }
    const Scalar val = form_raw(raw_u, acted);
    if (val.is_zero()) continue;
    out += basis_vec.scaled(val / pbw_.pbw_norm_closed(exps, w0_word_));
  }
  // The defining identity must hold against every word of the content, not
  // only the orthogonality rows used to build the expansion.
  for (const Word& m : UqMinus::words_of_content(content)) {
    std::map<Word, Scalar> acted;
    for (const auto& [pw, pc] : raw_up) {
      Word joined;
      joined.reserve(m.size() + pw.size());
      joined.insert(joined.end(), m.begin(), m.end());
      joined.insert(joined.end(), pw.begin(), pw.end());
      acted.emplace(std::move(joined), pc);
    }
    const Scalar lhs = alg_.lusztig_pair(out, NCElement::monomial(m, Scalar::one()));
    const Scalar rhs = form_raw(raw_u, acted);
    if (!(lhs == rhs)) {
      fail(ErrorKind::consistency, "matrix coefficient fails its defining pairing identity");
    }
  }
  return out;
}

NCElement quantum_minor(HWModule& module, const WeylElt& w, const WeylElt& wprime) {
  const ModuleVector u = module.extremal_vector(w);
  const ModuleVector uprime = module.extremal_vector(wprime);
  return module.matrix_coefficient(u, uprime);
}

NCElement quantum_minor(PBWContext& pbw, const WeylElt& w, const WeylElt& wprime,
                        const Weight& lambda) {
  HWModule module(pbw, lambda);
  return quantum_minor(module, w, wprime);
}

DCBVector vector_from_dcb(CanonicalBasis& basis, const CrystalLabel& b) {
  const RootDatum& rd = basis.datum();
  if (static_cast<int>(b.eps_star.size()) != rd.rank()) {
    fail(ErrorKind::invalid_argument, "crystal label rank does not match the root datum");
  }
  // The minimal dominant weight admitting the element as a matrix
  // coefficient against the highest vector.
  const Weight lambda(std::vector<long long>(b.eps_star.begin(), b.eps_star.end()));
  auto module = std::make_shared<HWModule>(basis.pbw(), lambda);
  const Weight mu = lambda + b.weight;
  const HWModule::WeightBasis& ws = module->weight_basis(mu);
  if (ws.pivots.empty()) {
    fail(ErrorKind::consistency, "dual canonical element has no realizing weight vector");
  }
  // The defining identity against the pivot words is a square system whose
  // matrix is the pivot Gram matrix of the weight space.
  std::vector<Scalar> rhs(ws.pivots.size());
  for (std::size_t j = 0; j < ws.pivots.size(); ++j) {
    rhs[j] = basis.alg().lusztig_pair(b.gup,
                                      NCElement::monomial(ws.words[ws.pivots[j]], Scalar::one()));
  }
  ModuleVector u{module.get(), mu, ws.solver->lu.solve(std::move(rhs))};
  if (!(module->matrix_coefficient(u, module->highest_vector()) == b.gup)) {
    fail(ErrorKind::consistency,
         "module realization failed to reproduce the dual canonical element");
  }
  return DCBVector{std::move(module), std::move(u)};
}

}  // namespace qucell
