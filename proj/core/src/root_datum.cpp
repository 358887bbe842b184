// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qucell {

// ---------------------------------------------------------------------------
// Weight

Weight Weight::operator+(const Weight& rhs) const {
  std::vector<long long> c(coords_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += rhs.coords_[k];
  return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& rhs) const {
  std::vector<long long> c(coords_);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= rhs.coords_[k];
  return Weight(std::move(c));
}

Weight Weight::operator-() const {
  std::vector<long long> c(coords_);
  for (auto& x : c) x = -x;
  return Weight(std::move(c));
}

Weight Weight::scaled(long long k) const {
  std::vector<long long> c(coords_);
  for (auto& x : c) x *= k;
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](long long x) { return x == 0; });
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// RootDatum

struct RootDatum::Impl {
  std::vector<std::vector<int>> a;
  std::vector<int> d;
  int rank = 0;
  std::string name;
  std::vector<std::vector<BigRat>> a_inv;             // exact inverse of a
  std::vector<std::vector<long long>> positive_roots;  // alpha coordinates
};

namespace {

// Exact determinant by fraction-free elimination; used for the positivity
// gate on small matrices.
BigInt int_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  BigInt det = 1;
  bool negate = false;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return BigInt(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  det = m[n - 1][n - 1];
  return negate ? BigInt(-det) : det;
}

std::vector<std::vector<BigRat>> invert_matrix(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(2 * n, BigRat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = BigRat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) fail(ErrorKind::invalid_argument, "Cartan matrix is singular");
    std::swap(m[pivot], m[k]);
    const BigRat inv = BigRat(1) / m[k][k];
    for (auto& x : m[k]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i][k] == 0) continue;
      const BigRat f = m[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  std::vector<std::vector<BigRat>> inv(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  }
  return inv;
}

// Simple reflection on alpha coordinates.
std::vector<long long> reflect_alpha(const std::vector<std::vector<int>>& a, int i,
                                     std::vector<long long> c) {
  long long pairing = 0;
  for (std::size_t j = 0; j < c.size(); ++j) pairing += a[static_cast<std::size_t>(i)][j] * c[j];
  c[static_cast<std::size_t>(i)] -= pairing;
  return c;
}

std::vector<std::vector<long long>> enumerate_positive_roots(
    const std::vector<std::vector<int>>& a) {
  const int rank = static_cast<int>(a.size());
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<long long> e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    for (int i = 0; i < rank; ++i) {
      auto next = reflect_alpha(a, i, current);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    if (queue.size() > 4096) {
      fail(ErrorKind::invalid_argument, "root system is too large or not finite");
    }
  }
  std::vector<std::vector<long long>> positives;
  for (const auto& c : seen) {
    if (std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; })) {
      positives.push_back(c);
    }
  }
  auto ht = [](const std::vector<long long>& c) {
    long long h = 0;
    for (long long x : c) h += x;
    return h;
  };
  std::sort(positives.begin(), positives.end(),
            [&](const auto& x, const auto& y) { return std::pair(ht(x), x) < std::pair(ht(y), y); });
  return positives;
}

}  // namespace

RootDatum::RootDatum(const std::vector<std::vector<int>>& cartan,
                     const std::vector<int>& symmetrizer) {
  const std::size_t n = cartan.size();
  if (n == 0) fail(ErrorKind::invalid_argument, "empty Cartan matrix");
  if (symmetrizer.size() != n) {
    fail(ErrorKind::invalid_argument, "symmetrizer size does not match the Cartan matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) fail(ErrorKind::invalid_argument, "Cartan matrix is not square");
    if (cartan[i][i] != 2) fail(ErrorKind::invalid_argument, "Cartan diagonal entry must be 2");
    if (symmetrizer[i] < 1) fail(ErrorKind::invalid_argument, "symmetrizer entries must be positive");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) fail(ErrorKind::invalid_argument, "off-diagonal Cartan entry must be <= 0");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) {
        fail(ErrorKind::invalid_argument, "Cartan zero pattern must be symmetric");
      }
      if (symmetrizer[i] * cartan[i][j] != symmetrizer[j] * cartan[j][i]) {
        fail(ErrorKind::invalid_argument, "symmetrizer does not symmetrize the Cartan matrix");
      }
    }
  }
  // Finite-type gate: the symmetrized matrix must be positive definite, which
  // for a symmetric matrix is positivity of all leading principal minors.
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<BigInt>> minor(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = BigInt(symmetrizer[i]) * cartan[i][j];
    }
    if (int_determinant(std::move(minor)) <= 0) {
      fail(ErrorKind::invalid_argument, "Cartan datum is not of finite type");
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->a = cartan;
  impl->d = symmetrizer;
  impl->rank = static_cast<int>(n);
  impl->a_inv = invert_matrix(cartan);
  impl->positive_roots = enumerate_positive_roots(cartan);
  impl_ = std::move(impl);
}

RootDatum RootDatum::from_type(std::string_view shorthand) {
  auto make = [&](std::vector<std::vector<int>> a, std::vector<int> d, std::string name) {
    RootDatum datum(a, d);
    const_cast<Impl*>(datum.impl_.get())->name = std::move(name);
    return datum;
  };
  if (shorthand == "A1") return make({{2}}, {1}, "A1");
  if (shorthand == "A2") return make({{2, -1}, {-1, 2}}, {1, 1}, "A2");
  if (shorthand == "A3") return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}, "A3");
  if (shorthand == "B2") return make({{2, -1}, {-2, 2}}, {2, 1}, "B2");
  if (shorthand == "G2") return make({{2, -1}, {-3, 2}}, {3, 1}, "G2");
  fail(ErrorKind::invalid_argument,
       "unknown type shorthand \"" + std::string(shorthand) + "\" (known: A1 A2 A3 B2 G2)");
}

int RootDatum::rank() const { return impl_->rank; }

int RootDatum::cartan(int i, int j) const {
  return impl_->a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

int RootDatum::d(int i) const { return impl_->d[static_cast<std::size_t>(i)]; }

const std::string& RootDatum::type_name() const { return impl_->name; }

Weight RootDatum::fundamental_weight(int i) const {
  std::vector<long long> c(static_cast<std::size_t>(impl_->rank), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Weight(std::move(c));
}

Weight RootDatum::rho() const {
  return Weight(std::vector<long long>(static_cast<std::size_t>(impl_->rank), 1));
}

Weight RootDatum::simple_root(int i) const {
  std::vector<long long> c(static_cast<std::size_t>(impl_->rank));
  for (int k = 0; k < impl_->rank; ++k) {
    c[static_cast<std::size_t>(k)] = impl_->a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  }
  return Weight(std::move(c));
}

Weight RootDatum::simple_reflection(int i, const Weight& mu) const {
  return mu - simple_root(i).scaled(mu.coord(i));
}

std::vector<BigRat> RootDatum::alpha_coords_rat(const Weight& mu) const {
  const int n = impl_->rank;
  std::vector<BigRat> c(static_cast<std::size_t>(n), BigRat(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c[static_cast<std::size_t>(i)] +=
          impl_->a_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * mu.coord(j);
    }
  }
  return c;
}

std::optional<std::vector<long long>> RootDatum::alpha_coords(const Weight& mu) const {
  const auto rat = alpha_coords_rat(mu);
  std::vector<long long> c(rat.size());
  for (std::size_t k = 0; k < rat.size(); ++k) {
    if (denominator(rat[k]) != 1) return std::nullopt;
    const BigInt n = numerator(rat[k]);
    c[k] = n.convert_to<long long>();
  }
  return c;
}

Weight RootDatum::weight_from_alpha(const std::vector<long long>& alpha_coords) const {
  const int n = impl_->rank;
  std::vector<long long> c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c[static_cast<std::size_t>(i)] +=
          impl_->a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
          alpha_coords[static_cast<std::size_t>(j)];
    }
  }
  return Weight(std::move(c));
}

long long RootDatum::height(const Weight& mu) const {
  const auto c = alpha_coords(mu);
  if (!c) fail(ErrorKind::invalid_argument, "height of a weight outside the root lattice");
  long long h = 0;
  for (long long x : *c) h += x;
  return h;
}

BigRat RootDatum::sym_form(const Weight& x, const Weight& y) const {
  // (x, y) = sum_j c_j(x) d_j <h_j, y> with c(x) the alpha coordinates of x.
  const auto c = alpha_coords_rat(x);
  BigRat s(0);
  for (int j = 0; j < impl_->rank; ++j) {
    s += c[static_cast<std::size_t>(j)] * impl_->d[static_cast<std::size_t>(j)] * y.coord(j);
  }
  return s;
}

long long RootDatum::sym_form_int(const Weight& x, const Weight& y) const {
  const BigRat s = sym_form(x, y);
  if (denominator(s) != 1) {
    fail(ErrorKind::consistency, "expected integral form value, got non-integer");
  }
  return numerator(s).convert_to<long long>();
}

bool RootDatum::is_dominant(const Weight& mu) const {
  for (int i = 0; i < impl_->rank; ++i) {
    if (mu.coord(i) < 0) return false;
  }
  return true;
}

const std::vector<std::vector<long long>>& RootDatum::positive_roots() const {
  return impl_->positive_roots;
}

bool RootDatum::operator==(const RootDatum& rhs) const {
  return impl_ == rhs.impl_ || (impl_->a == rhs.impl_->a && impl_->d == rhs.impl_->d);
}

// ---------------------------------------------------------------------------
// WeylElt

Weight apply_word(const RootDatum& datum, const std::vector<int>& word, const Weight& mu) {
  Weight w = mu;
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = datum.simple_reflection(*it, w);
  return w;
}

namespace {

// True when w^{-1}(alpha_i) is a negative root, i.e. i is a left descent.
// inverse_word represents w^{-1}.
bool is_left_descent(const RootDatum& datum, const std::vector<int>& inverse_word, int i) {
  const Weight image = apply_word(datum, inverse_word, datum.simple_root(i));
  const auto c = datum.alpha_coords_rat(image);
  for (const auto& x : c) {
    if (x != 0) return x < 0;
  }
  fail(ErrorKind::consistency, "root mapped to zero by a Weyl element");
}

// Lex-least reduced word via greedy descent stripping.
std::vector<int> canonicalize(const RootDatum& datum, std::vector<int> word) {
  std::vector<int> out;
  // remaining = product of `word`; inverse = reversed word.
  std::vector<int> inverse(word.rbegin(), word.rend());
  // Iterate: pick the smallest left descent i, record it, and replace the
  // element by s_i * element.  Each step shortens the element by one.
  while (true) {
    bool found = false;
    for (int i = 0; i < datum.rank(); ++i) {
      if (is_left_descent(datum, inverse, i)) {
        out.push_back(i);
        word.insert(word.begin(), i);
        inverse.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) break;
    if (out.size() > 1000) fail(ErrorKind::consistency, "descent stripping failed to terminate");
  }
  // The element is now the identity exactly when `word` composes to it; the
  // recorded descents form the canonical word of the original element.
  const Weight rho = datum.rho();
  if (!(apply_word(datum, word, rho) == rho)) {
    fail(ErrorKind::consistency, "descent stripping did not reach the identity");
  }
  return out;
}

}  // namespace

WeylElt WeylElt::identity(const RootDatum& datum) { return WeylElt(datum, {}); }

WeylElt WeylElt::from_word(const RootDatum& datum, const std::vector<int>& word) {
  for (int i : word) {
    if (i < 0 || i >= datum.rank()) {
      fail(ErrorKind::invalid_argument, "word letter out of range: " + std::to_string(i + 1));
    }
  }
  return WeylElt(datum, canonicalize(datum, word));
}

Weight WeylElt::apply(const Weight& mu) const { return apply_word(datum_, word_, mu); }

WeylElt WeylElt::operator*(const WeylElt& rhs) const {
  std::vector<int> joined = word_;
  joined.insert(joined.end(), rhs.word_.begin(), rhs.word_.end());
  return WeylElt(datum_, canonicalize(datum_, std::move(joined)));
}

WeylElt WeylElt::inverse() const {
  std::vector<int> reversed(word_.rbegin(), word_.rend());
  return WeylElt(datum_, canonicalize(datum_, std::move(reversed)));
}

bool WeylElt::operator==(const WeylElt& rhs) const {
  // Equal actions on rho characterize equal elements; canonical words make
  // this a direct comparison.
  return datum_ == rhs.datum_ && word_ == rhs.word_;
}

std::vector<std::vector<int>> WeylElt::reduced_words() const {
  // Recursive enumeration over left descents, memoized per element.
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
  auto rec = [&](auto&& self, const WeylElt& w) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(w.word());
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> words;
    if (w.is_identity()) {
      words.push_back({});
    } else {
      std::vector<int> winv_word(w.word().rbegin(), w.word().rend());
      for (int i = 0; i < datum_.rank(); ++i) {
        if (!is_left_descent(datum_, winv_word, i)) continue;
        std::vector<int> shorter = w.word();
        shorter.insert(shorter.begin(), i);
        const auto& tails = self(self, WeylElt::from_word(datum_, shorter));
        for (const auto& tail : tails) {
          std::vector<int> full;
          full.reserve(tail.size() + 1);
          full.push_back(i);
          full.insert(full.end(), tail.begin(), tail.end());
          words.push_back(std::move(full));
        }
      }
    }
    return memo.emplace(w.word(), std::move(words)).first->second;
  };
  return rec(rec, *this);
}

std::string WeylElt::str() const {
  std::string s;
  for (std::size_t k = 0; k < word_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(word_[k] + 1);
  }
  return s.empty() ? std::string("e") : s;
}

WeylElt longest_element(const RootDatum& datum) {
  // Extend on the right while some simple root stays positive.
  std::vector<int> word;
  while (true) {
    bool extended = false;
    for (int i = 0; i < datum.rank(); ++i) {
      const Weight image = apply_word(datum, word, datum.simple_root(i));
      const auto c = datum.alpha_coords_rat(image);
      bool positive = false;
      for (const auto& x : c) {
        if (x != 0) {
          positive = x > 0;
          break;
        }
      }
      if (positive) {
        word.push_back(i);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return WeylElt::from_word(datum, word);
}

bool is_reduced_word(const RootDatum& datum, const std::vector<int>& word) {
  return WeylElt::from_word(datum, word).length() == static_cast<int>(word.size());
}

}  // namespace qucell
