#include "ordspace/sets.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordspace/groups.hpp"

namespace ordspace {

void SetDescriptor::index() {
  std::sort(words_.begin(), words_.end(), Word::shortlex_less);
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  membership_.clear();
  membership_.insert(words_.begin(), words_.end());
}

SetDescriptor SetDescriptor::finite(std::vector<Word> words) {
  SetDescriptor s;
  s.kind_ = Kind::Finite;
  s.words_ = std::move(words);
  s.index();
  return s;
}

SetDescriptor SetDescriptor::cofinite(std::vector<Word> words) {
  SetDescriptor s;
  s.kind_ = Kind::Cofinite;
  s.words_ = std::move(words);
  s.index();
  return s;
}

SetDescriptor SetDescriptor::bitmap(std::int32_t radius, const std::vector<bool>& bits) {
  std::vector<Word> b = ball(2, radius);
  if (bits.size() != b.size()) {
    throw std::invalid_argument("bitmap length must match the ball size");
  }
  SetDescriptor s;
  s.kind_ = Kind::Bitmap;
  s.radius_ = radius;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (bits[i]) s.words_.push_back(b[i]);
  }
  s.index();
  return s;
}

bool SetDescriptor::contains(const Word& w) const {
  bool in = membership_.count(w) > 0;
  return kind_ == Kind::Cofinite ? !in : in;
}

std::vector<Word> SetDescriptor::carrier() const { return words_; }

bool operator==(const SetDescriptor& a, const SetDescriptor& b) {
  // Finite and Bitmap descriptors with equal members are the same set.
  bool a_cof = a.kind_ == SetDescriptor::Kind::Cofinite;
  bool b_cof = b.kind_ == SetDescriptor::Kind::Cofinite;
  return a_cof == b_cof && a.words_ == b.words_;
}

nlohmann::ordered_json SetDescriptor::to_json() const {
  nlohmann::ordered_json j;
  switch (kind_) {
    case Kind::Finite: j["kind"] = "finite"; break;
    case Kind::Cofinite: j["kind"] = "cofinite"; break;
    case Kind::Bitmap: j["kind"] = "finite"; break;  // exported by members
  }
  nlohmann::ordered_json words = nlohmann::ordered_json::array();
  for (const Word& w : words_) words.push_back(w.str());
  j["words"] = words;
  return j;
}

SetDescriptor SetDescriptor::from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "bitmap") {
    std::int32_t radius = j.at("radius").get<std::int32_t>();
    std::string bits = j.at("bits").get<std::string>();
    std::vector<bool> b;
    b.reserve(bits.size());
    for (char c : bits) {
      if (c != '0' && c != '1') throw std::invalid_argument("bitmap bits must be 0/1");
      b.push_back(c == '1');
    }
    return bitmap(radius, b);
  }
  std::vector<Word> words;
  for (const auto& t : j.at("words")) {
    words.push_back(t.is_string() ? Word::parse(t.get<std::string>()) : word_from_json(t));
  }
  if (kind == "finite") return finite(std::move(words));
  if (kind == "cofinite") return cofinite(std::move(words));
  throw std::invalid_argument("unknown set kind: " + kind);
}

SetDescriptor shift_action(const Word& u, const SetDescriptor& A) {
  std::vector<Word> shifted;
  for (const Word& w : A.carrier()) shifted.push_back(u * w);
  if (A.kind() == SetDescriptor::Kind::Cofinite) {
    return SetDescriptor::cofinite(std::move(shifted));
  }
  return SetDescriptor::finite(std::move(shifted));
}

}  // namespace ordspace
