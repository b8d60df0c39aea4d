#pragma once

// Homomorphisms out of free groups, and Reidemeister-Schreier rewriting for
// the kernel of h: F_2 -> Z, h(a) = 1, h(b) = 0.

#include <cstdint>
#include <variant>
#include <vector>

#include "ordspace/word.hpp"

namespace ordspace {

using ZVector = std::vector<std::int64_t>;

// A homomorphism from a free group, given by generator images: either words
// in a target free group or integer vectors in a free abelian target.
class GroupHom {
 public:
  static GroupHom to_free(std::int32_t source_rank, std::vector<Word> images);
  static GroupHom to_free_abelian(std::int32_t source_rank, std::vector<ZVector> images);

  std::int32_t source_rank() const { return source_rank_; }
  bool abelian_target() const { return std::holds_alternative<std::vector<ZVector>>(images_); }

  Word apply_free(const Word& u) const;
  ZVector apply_abelian(const Word& u) const;

 private:
  std::int32_t source_rank_ = 0;
  std::variant<std::vector<Word>, std::vector<ZVector>> images_;
};

// h: F_2 -> Z with h(a) = 1, h(b) = 0; returns the total a-exponent.
std::int64_t a_exponent(const Word& u);

// Rewrites u in ker h over the basis {x_n = a^n b a^{-n} : n in Z}; the
// output word's generator ids are the integers n.  Throws "not in kernel"
// when h(u) != 0.
Word rs_rewrite(const Word& u);

// Substitutes x_n -> a^n b a^{-n} and reduces; inverse of rs_rewrite on
// kernel elements.
Word rs_back_substitute(const Word& xword);

}  // namespace ordspace
