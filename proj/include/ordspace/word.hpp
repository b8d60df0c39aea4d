#pragma once

// Freely reduced words over generator alphabets.
//
// A Word is a sequence of letters (generator id, exponent +/-1), stored fully
// expanded and freely reduced.  Generator ids are positive integers 1..rank
// for ranked alphabets; rewriting routines also produce words over
// integer-indexed alphabets (ids may be zero or negative), for which the free
// group operations work unchanged and only rank-aware operations (balls,
// text serialization) are restricted.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ordspace {

struct Letter {
  std::int32_t id;
  std::int32_t exp;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;

  // Reduces the given letter sequence.  Exponents may be arbitrary nonzero
  // integers; they are expanded into single steps.
  static Word from_letters(const std::vector<std::pair<std::int32_t, std::int64_t>>& syllables);

  // Single generator g_id^exp.
  static Word generator(std::int32_t id, std::int64_t exp = 1);

  bool empty() const { return letters_.size() == 0; }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  Word operator*(const Word& other) const;
  Word inverse() const;

  // Run-length view: (id, signed exponent) with adjacent ids distinct.
  std::vector<std::pair<std::int32_t, std::int64_t>> syllables() const;

  // Largest generator id used (0 for the empty word); only meaningful for
  // ranked alphabets.
  std::int32_t max_id() const;
  bool ids_in_range(std::int32_t rank) const;

  friend bool operator==(const Word&, const Word&) = default;

  // shortlex: by length, then letterwise with a1 < a2 < ... < a1^-1 < a2^-1 < ...
  static bool shortlex_less(const Word& a, const Word& b);
  bool operator<(const Word& b) const { return shortlex_less(*this, b); }

  std::size_t hash() const;

  // Text form "a2 b-1" (generator name + signed exponent); empty word is "e".
  // Only ids 1..26 (names a..z) are supported.
  std::string str() const;
  static Word parse(const std::string& text);

 private:
  std::vector<Letter> letters_;

  void push_reduce(Letter l);
};

// All freely reduced words of length <= r over a rank-generator alphabet, in
// shortlex order.  Deterministic.  Throws std::invalid_argument for r < 0.
std::vector<Word> ball(std::int32_t rank, std::int32_t r);

// Relabels arbitrary integer ids to positive ones via the fixed injection
// 0 -> 1, 1 -> 2, -1 -> 3, 2 -> 4, -2 -> 5, ...
std::int32_t zigzag_id(std::int32_t n);
Word zigzag_relabel(const Word& w);

}  // namespace ordspace

template <>
struct std::hash<ordspace::Word> {
  std::size_t operator()(const ordspace::Word& w) const { return w.hash(); }
};
