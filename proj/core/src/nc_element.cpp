// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#include "qucell/nc_element.hpp"

#include "qucell/error.hpp"

namespace qucell {

Content word_content(const Word& word, int rank) {
  Content c(static_cast<std::size_t>(rank), 0);
  for (int letter : word) c[static_cast<std::size_t>(letter)] += 1;
  return c;
}

long long content_height(const Content& c) {
  long long h = 0;
  for (long long x : c) h += x;
  return h;
}

NCElement NCElement::monomial(Word word, Scalar coeff) {
  NCElement x;
  if (!coeff.is_zero()) x.terms_.emplace(std::move(word), std::move(coeff));
  return x;
}

Scalar NCElement::coeff(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void NCElement::add_term(const Word& word, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement NCElement::operator+(const NCElement& rhs) const {
  NCElement r = *this;
  r += rhs;
  return r;
}

NCElement& NCElement::operator+=(const NCElement& rhs) {
  for (const auto& [word, coeff] : rhs.terms_) add_term(word, coeff);
  return *this;
}

NCElement NCElement::operator-() const {
  NCElement r = *this;
  for (auto& [word, coeff] : r.terms_) coeff = -coeff;
  return r;
}

NCElement NCElement::operator-(const NCElement& rhs) const {
  NCElement r = *this;
  r -= rhs;
  return r;
}

NCElement& NCElement::operator-=(const NCElement& rhs) {
  for (const auto& [word, coeff] : rhs.terms_) add_term(word, -coeff);
  return *this;
}

NCElement NCElement::operator*(const NCElement& rhs) const {
  NCElement r;
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : rhs.terms_) {
      Word joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      r.add_term(joined, ca * cb);
    }
  }
  return r;
}

NCElement NCElement::scaled(const Scalar& c) const {
  NCElement r;
  if (c.is_zero()) return r;
  for (const auto& [word, coeff] : terms_) r.terms_.emplace(word, coeff * c);
  return r;
}

bool NCElement::is_homogeneous(int rank) const {
  if (terms_.empty()) return true;
  const Content first = word_content(terms_.begin()->first, rank);
  for (const auto& [word, coeff] : terms_) {
    if (word_content(word, rank) != first) return false;
  }
  return true;
}

Content NCElement::content(int rank) const {
  if (terms_.empty()) fail(ErrorKind::invalid_argument, "content of the zero element");
  const Content first = word_content(terms_.begin()->first, rank);
  for (const auto& [word, coeff] : terms_) {
    if (word_content(word, rank) != first) {
      fail(ErrorKind::invalid_argument, "content of an inhomogeneous element");
    }
  }
  return first;
}

std::map<Content, NCElement> NCElement::homogeneous_components(int rank) const {
  std::map<Content, NCElement> parts;
  for (const auto& [word, coeff] : terms_) {
    parts[word_content(word, rank)].add_term(word, coeff);
  }
  return parts;
}

std::string NCElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, coeff] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + coeff.str() + ")";
    if (word.empty()) {
      out += "*1";
    } else {
      for (int letter : word) out += "*f" + std::to_string(letter + 1);
    }
  }
  return out;
}

}  // namespace qucell
