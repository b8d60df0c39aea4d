#pragma once

// Truncated integer polynomials in noncommuting variables, and the Magnus
// expansion a_i -> 1 + X_i, a_i^{-1} -> 1 - X_i + X_i^2 - ... of free-group
// words.  Everything above the truncation degree is discarded.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordspace/word.hpp"

namespace ordspace {

// A monomial is a sequence of variable ids (>= 1); the empty sequence is 1.
using Monomial = std::vector<std::int32_t>;

// Graded order, then lexicographic with X_1 < X_2 < ...
bool grlex_less(const Monomial& a, const Monomial& b);

class NcPolynomial {
 public:
  explicit NcPolynomial(std::int32_t degree_cap) : cap_(degree_cap) {}

  static NcPolynomial constant(std::int64_t c, std::int32_t degree_cap);

  std::int32_t degree_cap() const { return cap_; }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Monomial& m) const;
  void add_term(Monomial m, std::int64_t c);

  NcPolynomial operator+(const NcPolynomial& o) const;
  NcPolynomial operator-(const NcPolynomial& o) const;
  NcPolynomial operator*(const NcPolynomial& o) const;

  friend bool operator==(const NcPolynomial&, const NcPolynomial&) = default;

  // Least nonzero term of degree >= 1 in grlex order, if any.
  std::optional<std::pair<Monomial, std::int64_t>> least_positive_degree_term() const;

  std::string str() const;  // for diagnostics

 private:
  std::int32_t cap_;
  std::map<Monomial, std::int64_t> terms_;  // zero coefficients absent
};

// Image of w under the Magnus map, truncated at degree d.  Requires all
// generator ids >= 1 (relabel integer-indexed words first).
NcPolynomial magnus_truncated(const Word& w, std::int32_t d);

// Sign of the coefficient of the grlex-least monomial of magnus(w) - 1.
// The truncation degree starts at 1 and deepens adaptively; a nontrivial
// reduced word of length L is detected by degree L.  Throws on the empty
// word.
int magnus_sign(const Word& w);

// Bi-invariant Magnus order comparison: u < v iff magnus_sign(u^{-1} v) > 0.
bool magnus_less(const Word& u, const Word& v);

}  // namespace ordspace
