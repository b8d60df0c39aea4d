#pragma once

// The group families with exact normal forms: free groups, free abelian
// groups, the Tararin tower groups T_n and T_infinity, the Klein-type
// semidirect product (Z x Z) x| <z> with z acting by -I, and the restricted
// wreath product Z wr F_2.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordspace/hom.hpp"
#include "ordspace/word.hpp"

namespace ordspace {

enum class Family { Free, FreeAbelian, Tararin, TararinInf, Klein, Wreath };

struct GroupDescriptor {
  Family family = Family::Free;
  // Free: rank (nullopt = unbounded); FreeAbelian: k; Tararin: n.
  std::optional<std::int32_t> rank;

  static GroupDescriptor free_group(std::optional<std::int32_t> rank) {
    return {Family::Free, rank};
  }
  static GroupDescriptor free_abelian(std::int32_t k) { return {Family::FreeAbelian, k}; }
  static GroupDescriptor tararin(std::int32_t n) { return {Family::Tararin, n}; }
  static GroupDescriptor tararin_inf() { return {Family::TararinInf, std::nullopt}; }
  static GroupDescriptor klein() { return {Family::Klein, std::nullopt}; }
  static GroupDescriptor wreath() { return {Family::Wreath, std::nullopt}; }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// Normal form x_1^{k_1} ... x_n^{k_n}; exponents stored with trailing zeros
// trimmed, so the same value serves T_n and T_infinity.
struct TararinElement {
  std::vector<std::int64_t> exp;

  std::int64_t at(std::size_t i) const { return i < exp.size() ? exp[i] : 0; }
  void trim();
  friend bool operator==(const TararinElement&, const TararinElement&) = default;
};

struct KleinElement {
  std::int64_t v1 = 0, v2 = 0, k = 0;
  friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

// (f, u) with f: F_2 -> Z finitely supported, u in F_2.
struct WreathElement {
  std::map<Word, std::int64_t> lamps;  // zero values absent
  Word top;

  void prune();
  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

using Element = std::variant<Word, ZVector, TararinElement, KleinElement, WreathElement>;

// --- family operations -----------------------------------------------------

TararinElement tararin_mul(const TararinElement& s, const TararinElement& t);
TararinElement tararin_inv(const TararinElement& s);

KleinElement klein_mul(const KleinElement& p, const KleinElement& q);
KleinElement klein_inv(const KleinElement& p);

WreathElement wreath_mul(const WreathElement& w, const WreathElement& v);
WreathElement wreath_inv(const WreathElement& w);
Word wreath_quotient(const WreathElement& w);

// --- generic element operations --------------------------------------------

Element identity(const GroupDescriptor& g);
bool is_identity(const Element& e);
Element mul(const GroupDescriptor& g, const Element& x, const Element& y);
Element inv(const GroupDescriptor& g, const Element& x);
// g * x * g^{-1}
Element conj(const GroupDescriptor& desc, const Element& g, const Element& x);

// Canonical generating set (Free/FreeAbelian: declared rank required;
// Tararin(n): x_1..x_n; Klein: x, y, z; Wreath: a, b, lamp at identity).
std::vector<Element> generators(const GroupDescriptor& g);
std::vector<std::string> generator_names(const GroupDescriptor& g);

// Evaluates a word over the canonical generators.
Element eval_word(const GroupDescriptor& g, const Word& w);

// All elements of generator-word length <= r, deduplicated via normal form;
// breadth-first discovery order (by length, then parent order, then
// generator order), except free groups which use shortlex enumeration.
std::vector<Element> ball_of(const GroupDescriptor& g, std::int32_t r);

// Canonical encoding used for deduplication.
std::string element_key(const Element& e);

std::string element_str(const GroupDescriptor& g, const Element& e);

// --- serialization ----------------------------------------------------------

nlohmann::ordered_json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const nlohmann::json& j);

nlohmann::ordered_json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

nlohmann::ordered_json element_to_json(const GroupDescriptor& g, const Element& e);
Element element_from_json(const GroupDescriptor& g, const nlohmann::json& j);

}  // namespace ordspace
