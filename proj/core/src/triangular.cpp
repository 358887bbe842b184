// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include <string>
#include <tuple>

#include "qucell/error.hpp"
#include "qucell/pbw.hpp"

namespace qucell {

namespace {

// (beta, alpha_j) for beta in simple-root coordinates.
long long form_alpha(const RootDatum& d, const std::vector<long long>& beta, int j) {
  long long acc = 0;
  for (int k = 0; k < d.rank(); ++k)
    acc += beta[static_cast<std::size_t>(k)] * d.d(k) * d.cartan(k, j);
  return acc;
}

long long word_form_alpha(const RootDatum& d, const std::vector<long long>& beta, const Word& w) {
  long long acc = 0;
  for (int u : w) acc += form_alpha(d, beta, u);
  return acc;
}

bool torus_is_zero(const std::vector<long long>& beta) {
  for (long long b : beta)
    if (b != 0) return false;
  return true;
}

// x * K_beta.
TriangularElement right_mul_torus(const RootDatum& d, const TriangularElement& x,
                                  const std::vector<long long>& beta) {
  TriangularElement out;
  for (const auto& [m, c] : x.terms()) {
    TriMonomial r = m;
    for (std::size_t k = 0; k < beta.size(); ++k) r.torus[k] += beta[k];
    // K_beta commutes leftward past the e-word at a q-power cost.
    const long long twist = -word_form_alpha(d, beta, m.eword);
    out.add_term(r, c * Scalar::v_power(2 * twist));
  }
  return out;
}

TriangularElement right_mul_e(const TriangularElement& x, int i) {
  TriangularElement out;
  for (const auto& [m, c] : x.terms()) {
    TriMonomial r = m;
    r.eword.push_back(i);
    out.add_term(r, c);
  }
  return out;
}

// One normally ordered monomial times f_j, straightened: f_j moves left
// through the e-word by the cross relation and then through the torus part.
void mul_monomial_f(const RootDatum& d, const TriMonomial& m, const Scalar& c, int j,
                    TriangularElement& out) {
  if (m.eword.empty()) {
    TriMonomial r = m;
    r.fword.push_back(j);
    const long long twist = -form_alpha(d, m.torus, j);
    out.add_term(r, c * Scalar::v_power(2 * twist));
    return;
  }
  TriMonomial head = m;
  const int i = head.eword.back();
  head.eword.pop_back();
  // e_i f_j = f_j e_i + delta_ij (K_{alpha_i} - K_{-alpha_i})/(q_i - q_i^{-1})
  TriangularElement passed;
  mul_monomial_f(d, head, c, j, passed);
  for (const auto& [mm, cc] : passed.terms()) {
    TriMonomial r = mm;
    r.eword.push_back(i);
    out.add_term(r, cc);
  }
  if (i == j) {
    const Scalar denom = Scalar::v_power(2 * d.d(i)) - Scalar::v_power(-2 * d.d(i));
    for (int sign : {1, -1}) {
      TriMonomial r = head;
      r.torus[static_cast<std::size_t>(i)] += sign;
      std::vector<long long> beta(static_cast<std::size_t>(d.rank()), 0);
      beta[static_cast<std::size_t>(i)] = sign;
      const long long twist = -word_form_alpha(d, beta, head.eword);
      out.add_term(r, c * Scalar::from_int(sign) * Scalar::v_power(2 * twist) / denom);
    }
  }
}

TriangularElement right_mul_f(const RootDatum& d, const TriangularElement& x, int j) {
  TriangularElement out;
  for (const auto& [m, c] : x.terms()) mul_monomial_f(d, m, c, j, out);
  return out;
}

}  // namespace

TriangularElement TriangularElement::unit(int rank) {
  return monomial(TriMonomial{{}, std::vector<long long>(static_cast<std::size_t>(rank), 0), {}},
                  Scalar::one());
}

TriangularElement TriangularElement::f(int i, int rank) {
  return monomial(TriMonomial{{i}, std::vector<long long>(static_cast<std::size_t>(rank), 0), {}},
                  Scalar::one());
}

TriangularElement TriangularElement::e(int i, int rank) {
  return monomial(TriMonomial{{}, std::vector<long long>(static_cast<std::size_t>(rank), 0), {i}},
                  Scalar::one());
}

TriangularElement TriangularElement::torus(std::vector<long long> beta) {
  return monomial(TriMonomial{{}, std::move(beta), {}}, Scalar::one());
}

TriangularElement TriangularElement::monomial(TriMonomial m, Scalar c) {
  TriangularElement x;
  x.add_term(m, c);
  return x;
}

Scalar TriangularElement::coeff(const TriMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void TriangularElement::add_term(const TriMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TriangularElement TriangularElement::operator+(const TriangularElement& rhs) const {
  TriangularElement out = *this;
  out += rhs;
  return out;
}

TriangularElement TriangularElement::operator-(const TriangularElement& rhs) const {
  TriangularElement out = *this;
  out -= rhs;
  return out;
}

TriangularElement TriangularElement::operator-() const {
  TriangularElement out;
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

TriangularElement& TriangularElement::operator+=(const TriangularElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

TriangularElement& TriangularElement::operator-=(const TriangularElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

TriangularElement TriangularElement::scaled(const Scalar& c) const {
  TriangularElement out;
  if (c.is_zero()) return out;
  for (const auto& [m, cc] : terms_) out.add_term(m, cc * c);
  return out;
}

NCElement TriangularElement::lower_component() const {
  NCElement out;
  for (const auto& [m, c] : terms_) {
    if (m.eword.empty() && torus_is_zero(m.torus)) out.add_term(m.fword, c);
  }
  return out;
}

bool TriangularElement::is_pure_lower() const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (!m.eword.empty() || !torus_is_zero(m.torus)) return false;
  }
  return true;
}

std::string TriangularElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.str() + ")";
    for (int i : m.fword) out += " f" + std::to_string(i + 1);
    if (!torus_is_zero(m.torus)) {
      out += " K[";
      for (std::size_t k = 0; k < m.torus.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(m.torus[k]);
      }
      out += "]";
    }
    for (int i : m.eword) out += " e" + std::to_string(i + 1);
  }
  return out;
}

TriangularElement PBWContext::tri_mul(const TriangularElement& a,
                                      const TriangularElement& b) const {
  const RootDatum& d = datum();
  TriangularElement out;
  for (const auto& [m, c] : b.terms()) {
    TriangularElement acc = a.scaled(c);
    for (int j : m.fword) acc = right_mul_f(d, acc, j);
    if (!torus_is_zero(m.torus)) acc = right_mul_torus(d, acc, m.torus);
    for (int i : m.eword) acc = right_mul_e(acc, i);
    out += acc;
  }
  return out;
}

TriangularElement PBWContext::tri_divided_power(const TriangularElement& x, int i,
                                                long long n) const {
  if (n < 0) fail(ErrorKind::invalid_argument, "negative divided power");
  TriangularElement out = TriangularElement::unit(datum().rank());
  for (long long k = 0; k < n; ++k) out = tri_mul(out, x);
  return out.scaled(Scalar::one() / q_factorial(n, datum().d(i)));
}

TriangularElement PBWContext::tri_from_lower(const NCElement& x) const {
  TriangularElement out;
  const std::vector<long long> zero(static_cast<std::size_t>(datum().rank()), 0);
  for (const auto& [w, c] : x.terms()) out.add_term(TriMonomial{w, zero, {}}, c);
  return out;
}

const TriangularElement& PBWContext::generator_image(int i, int j, BraidDirection dir,
                                                     bool lower) {
  const int code = (dir == BraidDirection::inverse ? 2 : 0) + (lower ? 0 : 1);
  const auto key = std::make_tuple(i, j, code);
  const auto it = gen_image_memo_.find(key);
  if (it != gen_image_memo_.end()) return it->second;

  const RootDatum& d = datum();
  const int rank = d.rank();
  TriangularElement img;
  if (i == j) {
    std::vector<long long> alpha_i(static_cast<std::size_t>(rank), 0);
    alpha_i[static_cast<std::size_t>(i)] = 1;
    std::vector<long long> minus_alpha_i = alpha_i;
    minus_alpha_i[static_cast<std::size_t>(i)] = -1;
    if (dir == BraidDirection::forward) {
      img = lower ? tri_mul(TriangularElement::torus(minus_alpha_i),
                            TriangularElement::e(i, rank))
                  : tri_mul(TriangularElement::f(i, rank),
                            TriangularElement::torus(alpha_i));
    } else {
      img = lower ? tri_mul(TriangularElement::e(i, rank),
                            TriangularElement::torus(alpha_i))
                  : tri_mul(TriangularElement::torus(minus_alpha_i),
                            TriangularElement::f(i, rank));
    }
    img = -img;
  } else {
    const long long m = -d.cartan(i, j);
    const long long qi = d.d(i);
    for (long long r = 0; r <= m; ++r) {
      const long long s = m - r;
      // Exponent sign and factor order distinguish the four cases.
      const long long qexp = lower ? r * qi : -r * qi;
      const Scalar coeff = (r % 2 ? -Scalar::one() : Scalar::one()) * Scalar::v_power(2 * qexp);
      const TriangularElement gen_i =
          lower ? TriangularElement::f(i, rank) : TriangularElement::e(i, rank);
      const TriangularElement gen_j =
          lower ? TriangularElement::f(j, rank) : TriangularElement::e(j, rank);
      const TriangularElement left = tri_divided_power(gen_i, i, r);
      const TriangularElement right = tri_divided_power(gen_i, i, s);
      // forward lower / inverse upper: i^(r) j i^(s); the mirrored cases
      // swap the outer factors.
      const bool r_first = lower == (dir == BraidDirection::forward);
      const TriangularElement prod = r_first ? tri_mul(tri_mul(left, gen_j), right)
                                            : tri_mul(tri_mul(right, gen_j), left);
      img += prod.scaled(coeff);
    }
  }
  return gen_image_memo_.emplace(key, std::move(img)).first->second;
}

TriangularElement PBWContext::braid_apply(int i, const TriangularElement& x,
                                          BraidDirection dir) {
  const RootDatum& d = datum();
  if (i < 0 || i >= d.rank()) fail(ErrorKind::invalid_argument, "generator index out of range");
  TriangularElement out;
  for (const auto& [m, c] : x.terms()) {
    TriangularElement acc = TriangularElement::unit(d.rank()).scaled(c);
    for (int j : m.fword) acc = tri_mul(acc, generator_image(i, j, dir, true));
    if (!torus_is_zero(m.torus)) {
      // T_i^{+-1}(K_beta) = K_{s_i beta}
      std::vector<long long> beta = m.torus;
      long long pairing = 0;
      for (int k = 0; k < d.rank(); ++k)
        pairing += d.cartan(i, k) * beta[static_cast<std::size_t>(k)];
      beta[static_cast<std::size_t>(i)] -= pairing;
      acc = right_mul_torus(d, acc, beta);
    }
    for (int j : m.eword) acc = tri_mul(acc, generator_image(i, j, dir, false));
    out += acc;
  }
  return out;
}

bool PBWContext::tri_is_zero_in_algebra(const TriangularElement& x) {
  const int rank = datum().rank();
  // Group by (torus, f-content, e-content); each group is tested in the
  // tensor product of the two factor quotients.
  std::map<std::tuple<std::vector<long long>, Content, Content>,
           std::vector<std::pair<const TriMonomial*, const Scalar*>>>
      groups;
  for (const auto& [m, c] : x.terms()) {
    groups[std::make_tuple(m.torus, word_content(m.fword, rank), word_content(m.eword, rank))]
        .emplace_back(&m, &c);
  }
  for (const auto& [key, entries] : groups) {
    const Content& cf = std::get<1>(key);
    const Content& ce = std::get<2>(key);
    const int dim_f = static_cast<int>(alg_.weight_space(cf).pivots.size());
    const int dim_e = static_cast<int>(alg_.weight_space(ce).pivots.size());
    std::vector<std::vector<Scalar>> acc(
        static_cast<std::size_t>(dim_f),
        std::vector<Scalar>(static_cast<std::size_t>(dim_e), Scalar::zero()));
    for (const auto& [m, c] : entries) {
      const auto coords_f =
          alg_.weight_basis_coords(cf, NCElement::monomial(m->fword, Scalar::one()));
      const auto coords_e =
          alg_.weight_basis_coords(ce, NCElement::monomial(m->eword, Scalar::one()));
      for (int p = 0; p < dim_f; ++p) {
        if (coords_f[static_cast<std::size_t>(p)].is_zero()) continue;
        for (int q = 0; q < dim_e; ++q) {
          acc[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] +=
              *c * coords_f[static_cast<std::size_t>(p)] * coords_e[static_cast<std::size_t>(q)];
        }
      }
    }
    for (const auto& row : acc)
      for (const auto& entry : row)
        if (!entry.is_zero()) return false;
  }
  return true;
}

bool PBWContext::tri_equal_in_algebra(const TriangularElement& a, const TriangularElement& b) {
  return tri_is_zero_in_algebra(a - b);
}

}  // namespace qucell
