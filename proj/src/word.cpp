#include "ordspace/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ordspace {

void Word::push_reduce(Letter l) {
  if (!letters_.empty() && letters_.back().id == l.id && letters_.back().exp == -l.exp) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

Word Word::from_letters(const std::vector<std::pair<std::int32_t, std::int64_t>>& syllables) {
  std::int64_t total = 0;
  for (const auto& [id, exp] : syllables) {
    (void)id;
    total += exp < 0 ? -exp : exp;
    if (total > 1'000'000) throw std::invalid_argument("word expansion exceeds the length limit");
  }
  Word w;
  for (const auto& [id, exp] : syllables) {
    std::int32_t step = exp > 0 ? 1 : -1;
    for (std::int64_t i = 0; i != exp; i += step) {
      w.push_reduce(Letter{id, step});
    }
  }
  return w;
}

Word Word::generator(std::int32_t id, std::int64_t exp) { return from_letters({{id, exp}}); }

Word Word::operator*(const Word& other) const {
  Word result = *this;
  for (const Letter& l : other.letters_) {
    result.push_reduce(l);
  }
  return result;
}

Word Word::inverse() const {
  Word result;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back(Letter{it->id, -it->exp});
  }
  return result;
}

std::vector<std::pair<std::int32_t, std::int64_t>> Word::syllables() const {
  std::vector<std::pair<std::int32_t, std::int64_t>> out;
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().first == l.id) {
      out.back().second += l.exp;
    } else {
      out.emplace_back(l.id, l.exp);
    }
  }
  return out;
}

std::int32_t Word::max_id() const {
  std::int32_t m = 0;
  for (const Letter& l : letters_) {
    if (l.id > m) m = l.id;
  }
  return m;
}

bool Word::ids_in_range(std::int32_t rank) const {
  for (const Letter& l : letters_) {
    if (l.id < 1 || l.id > rank) return false;
  }
  return true;
}

namespace {
// a1 < a2 < ... < a1^-1 < a2^-1 < ...; works for any integer ids.
std::pair<int, std::int64_t> letter_key(const Letter& l) {
  return {l.exp > 0 ? 0 : 1, l.id};
}
}  // namespace

bool Word::shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    auto ka = letter_key(a.letters_[i]);
    auto kb = letter_key(b.letters_[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::size_t Word::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : letters_) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(l.id)) * 2 +
         (l.exp > 0 ? 1 : 0);
    h *= 1099511628211ull;
  }
  return h;
}

std::string Word::str() const {
  if (empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, exp] : syllables()) {
    if (id < 1 || id > 26) {
      throw std::invalid_argument("text form supports generator ids 1..26 only");
    }
    if (!first) os << ' ';
    first = false;
    os << static_cast<char>('a' + id - 1) << exp;
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::pair<std::int32_t, std::int64_t>> syls;
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 1 || tok[0] < 'a' || tok[0] > 'z') {
      throw std::invalid_argument("bad word token: " + tok);
    }
    std::int32_t id = tok[0] - 'a' + 1;
    std::int64_t exp = 1;
    if (tok.size() > 1) {
      char* end = nullptr;
      exp = std::strtoll(tok.c_str() + 1, &end, 10);
      if (end == nullptr || *end != '\0' || exp == 0) {
        throw std::invalid_argument("bad word token: " + tok);
      }
    }
    syls.emplace_back(id, exp);
  }
  return from_letters(syls);
}

std::vector<Word> ball(std::int32_t rank, std::int32_t r) {
  if (rank < 1) throw std::invalid_argument("finite rank required");
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  // Letters in shortlex order.
  std::vector<Letter> alphabet;
  for (std::int32_t i = 1; i <= rank; ++i) alphabet.push_back(Letter{i, 1});
  for (std::int32_t i = 1; i <= rank; ++i) alphabet.push_back(Letter{i, -1});

  std::vector<Word> out;
  out.emplace_back();
  std::vector<Word> prev = {Word()};
  for (std::int32_t len = 1; len <= r; ++len) {
    if (out.size() > 5'000'000 / alphabet.size()) {
      throw std::invalid_argument("ball exceeds the enumeration size limit");
    }
    std::vector<Word> next;
    for (const Word& w : prev) {
      for (const Letter& l : alphabet) {
        if (!w.empty() && w.letters().back().id == l.id &&
            w.letters().back().exp == -l.exp) {
          continue;  // would cancel
        }
        Word e = w * Word::generator(l.id, l.exp);
        next.push_back(e);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  return out;
}

std::int32_t zigzag_id(std::int32_t n) {
  if (n == 0) return 1;
  return n > 0 ? 2 * n : -2 * n + 1;
}

Word zigzag_relabel(const Word& w) {
  std::vector<std::pair<std::int32_t, std::int64_t>> syls;
  for (const Letter& l : w.letters()) {
    syls.emplace_back(zigzag_id(l.id), l.exp);
  }
  return Word::from_letters(syls);
}

}  // namespace ordspace
