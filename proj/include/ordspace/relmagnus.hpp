#pragma once

// Sign oracle witnessing that a sub-basis free factor A of a free group F is
// left relatively convex, via a partial Magnus expansion: letters of A map to
// themselves (degree 0), every other basis letter t maps to 1 + Y_t.  The
// expansion of g lives in the tensor ring with mixed monomials
//
//     alpha_0 Y_{t_1} alpha_1 ... Y_{t_k} alpha_k,   alpha_i in A,
//
// ordered lexicographically on (alpha_0, t_1, alpha_1, ..., t_k, alpha_k)
// with the alphas compared in the Magnus bi-order of A and the t's by index.
// For g outside A the sign of the leading coefficient of the least
// positive-degree part defines Q(g); the resulting subset Q satisfies
// Q Q <= Q, A Q A <= Q and Q u Q^{-1} u A = F because two-sided translation
// by A and single-letter products preserve leading terms (the alpha
// comparisons are bi-invariant).

#include <cstdint>
#include <map>
#include <vector>

#include "ordspace/word.hpp"

namespace ordspace {

struct MixedMonomial {
  std::vector<std::int32_t> tvars;  // B-letter ids, one per Y factor
  std::vector<Word> aparts;         // size tvars.size() + 1

  std::int32_t degree() const { return static_cast<std::int32_t>(tvars.size()); }
  friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

// Q oracle for the sub-basis free factor A = <a_s : s in factor_ids> inside
// the free group on all ids appearing in queried words.
class FreeFactorOracle {
 public:
  explicit FreeFactorOracle(std::vector<std::int32_t> factor_ids);

  bool in_factor(const Word& w) const;

  // +1 if w in Q, -1 if w in Q^{-1}.  Precondition: w nonempty, not in A.
  int q_sign(const Word& w) const;

  const std::vector<std::int32_t>& factor_ids() const { return ids_; }

 private:
  std::vector<std::int32_t> ids_;  // sorted

  Word relabel_to_factor(const Word& aword) const;
  bool apart_less(const Word& u, const Word& v) const;
  bool monomial_less(const MixedMonomial& a, const MixedMonomial& b) const;

  friend class MixedPoly;
};

}  // namespace ordspace
