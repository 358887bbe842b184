// Copyright 2026 the qucell authors
//
// Licensed under the Apache License, Version 2.0; see LICENSE for details.

#pragma once

#include <map>
#include <vector>

#include "qucell/scalar.hpp"

namespace qucell {

// A word in the generators f_i, letters 0-based.
using Word = std::vector<int>;

// Letter multiplicity vector of a word; word content c corresponds to the
// weight -(sum_i c_i alpha_i).
using Content = std::vector<long long>;

Content word_content(const Word& word, int rank);
long long content_height(const Content& c);

// Element of the free associative algebra on the generators f_i with Scalar
// coefficients.  Zero coefficients are never stored.  Equality of NCElement
// is equality of normal forms in the free algebra; algebra-level equality
// (modulo the defining ideal) lives in UqMinus.
class NCElement {
 public:
  NCElement() = default;
  static NCElement zero() { return NCElement(); }
  static NCElement unit() { return monomial(Word{}, Scalar::one()); }
  static NCElement generator(int i) { return monomial(Word{i}, Scalar::one()); }
  static NCElement monomial(Word word, Scalar coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }
  Scalar coeff(const Word& word) const;

  void add_term(const Word& word, const Scalar& coeff);

  NCElement operator+(const NCElement& rhs) const;
  NCElement operator-(const NCElement& rhs) const;
  NCElement operator-() const;
  // Concatenation product, extended bilinearly.
  NCElement operator*(const NCElement& rhs) const;
  NCElement& operator+=(const NCElement& rhs);
  NCElement& operator-=(const NCElement& rhs);
  NCElement scaled(const Scalar& c) const;
  bool operator==(const NCElement& rhs) const = default;

  // True when every word has the same content (the zero element counts as
  // homogeneous).
  bool is_homogeneous(int rank) const;
  // The content shared by all words; fails on inhomogeneous or zero input.
  Content content(int rank) const;
  // Splits into content-homogeneous parts, keyed by content.
  std::map<Content, NCElement> homogeneous_components(int rank) const;

  std::string str() const;

 private:
  std::map<Word, Scalar> terms_;
};

}  // namespace qucell
