#pragma once

// Decidable subsets of F_2: finite word sets, complements of finite sets,
// and explicit bitmaps over a ball (false outside the ball).

#include <cstdint>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "ordspace/word.hpp"

namespace ordspace {

class SetDescriptor {
 public:
  enum class Kind { Finite, Cofinite, Bitmap };

  static SetDescriptor finite(std::vector<Word> words);
  static SetDescriptor cofinite(std::vector<Word> words);
  // bits indexed by ball(2, radius) order.
  static SetDescriptor bitmap(std::int32_t radius, const std::vector<bool>& bits);

  Kind kind() const { return kind_; }
  bool contains(const Word& w) const;

  // Members among the finitely many candidates (Finite/Bitmap: the support;
  // Cofinite: the exceptions).
  std::vector<Word> carrier() const;

  nlohmann::ordered_json to_json() const;
  static SetDescriptor from_json(const nlohmann::json& j);

  friend bool operator==(const SetDescriptor&, const SetDescriptor&);

 private:
  Kind kind_ = Kind::Finite;
  std::vector<Word> words_;             // canonical shortlex order, deduplicated
  std::unordered_set<Word> membership_;  // Finite/Bitmap: members; Cofinite: non-members
  std::int32_t radius_ = 0;             // Bitmap only

  void index();
};

// Left shift: membership(shift(u, A), x) = membership(A, u^{-1} x).
SetDescriptor shift_action(const Word& u, const SetDescriptor& A);

}  // namespace ordspace
