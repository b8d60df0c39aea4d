#include "ordspace/groups.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ordspace {

void TararinElement::trim() {
  while (!exp.empty() && exp.back() == 0) exp.pop_back();
}

void WreathElement::prune() {
  for (auto it = lamps.begin(); it != lamps.end();) {
    it = it->second == 0 ? lamps.erase(it) : std::next(it);
  }
}

// x_{i+1} x_i x_{i+1}^{-1} = x_i^{-1}, and x_j commutes with x_i for
// j >= i + 2.  Pushing the right factor's letters left past the left
// factor's tail gives, in 0-based coordinates,
//   (s t)_i = s_i + (-1)^{s_{i+1}} t_i.
TararinElement tararin_mul(const TararinElement& s, const TararinElement& t) {
  TararinElement out;
  std::size_t n = std::max(s.exp.size(), t.exp.size());
  out.exp.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t flip = (s.at(i + 1) % 2 == 0) ? 1 : -1;
    out.exp[i] = s.at(i) + flip * t.at(i);
  }
  out.trim();
  return out;
}

TararinElement tararin_inv(const TararinElement& s) {
  TararinElement out;
  out.exp.resize(s.exp.size(), 0);
  for (std::size_t i = 0; i < s.exp.size(); ++i) {
    std::int64_t flip = (s.at(i + 1) % 2 == 0) ? 1 : -1;
    out.exp[i] = -flip * s.at(i);
  }
  out.trim();
  return out;
}

KleinElement klein_mul(const KleinElement& p, const KleinElement& q) {
  std::int64_t flip = (p.k % 2 == 0) ? 1 : -1;
  return {p.v1 + flip * q.v1, p.v2 + flip * q.v2, p.k + q.k};
}

KleinElement klein_inv(const KleinElement& p) {
  std::int64_t flip = (p.k % 2 == 0) ? 1 : -1;
  return {-flip * p.v1, -flip * p.v2, -p.k};
}

WreathElement wreath_mul(const WreathElement& w, const WreathElement& v) {
  WreathElement out;
  out.top = w.top * v.top;
  out.lamps = w.lamps;
  for (const auto& [x, c] : v.lamps) {
    out.lamps[w.top * x] += c;
  }
  out.prune();
  return out;
}

WreathElement wreath_inv(const WreathElement& w) {
  WreathElement out;
  out.top = w.top.inverse();
  for (const auto& [x, c] : w.lamps) {
    out.lamps[out.top * x] = -c;
  }
  out.prune();
  return out;
}

Word wreath_quotient(const WreathElement& w) { return w.top; }

Element identity(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::Free: return Word();
    case Family::FreeAbelian: return ZVector(static_cast<std::size_t>(g.rank.value()), 0);
    case Family::Tararin:
    case Family::TararinInf: return TararinElement{};
    case Family::Klein: return KleinElement{};
    case Family::Wreath: return WreathElement{};
  }
  throw std::logic_error("unknown family");
}

bool is_identity(const Element& e) {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Word>) {
          return v.empty();
        } else if constexpr (std::is_same_v<T, ZVector>) {
          return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
        } else if constexpr (std::is_same_v<T, TararinElement>) {
          return v.exp.empty();
        } else if constexpr (std::is_same_v<T, KleinElement>) {
          return v.v1 == 0 && v.v2 == 0 && v.k == 0;
        } else {
          return v.lamps.empty() && v.top.empty();
        }
      },
      e);
}

namespace {

void check_rank(const GroupDescriptor& g, const Word& w) {
  if (g.rank && !w.ids_in_range(*g.rank)) {
    throw std::invalid_argument("word uses a generator outside the declared rank");
  }
  if (!g.rank) {
    for (const Letter& l : w.letters()) {
      if (l.id < 1) throw std::invalid_argument("free group generator ids must be positive");
    }
  }
}

ZVector zvec_add(const ZVector& a, const ZVector& b, std::int64_t sign) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch");
  ZVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

void check_tararin_rank(const GroupDescriptor& g, const TararinElement& t) {
  if (g.family == Family::Tararin &&
      static_cast<std::int32_t>(t.exp.size()) > g.rank.value()) {
    throw std::invalid_argument("element uses a generator outside Tararin(n)");
  }
}

}  // namespace

Element mul(const GroupDescriptor& g, const Element& x, const Element& y) {
  switch (g.family) {
    case Family::Free: {
      const Word& a = std::get<Word>(x);
      const Word& b = std::get<Word>(y);
      check_rank(g, a);
      check_rank(g, b);
      return a * b;
    }
    case Family::FreeAbelian:
      return zvec_add(std::get<ZVector>(x), std::get<ZVector>(y), 1);
    case Family::Tararin:
    case Family::TararinInf: {
      const auto& s = std::get<TararinElement>(x);
      const auto& t = std::get<TararinElement>(y);
      check_tararin_rank(g, s);
      check_tararin_rank(g, t);
      return tararin_mul(s, t);
    }
    case Family::Klein:
      return klein_mul(std::get<KleinElement>(x), std::get<KleinElement>(y));
    case Family::Wreath:
      return wreath_mul(std::get<WreathElement>(x), std::get<WreathElement>(y));
  }
  throw std::logic_error("unknown family");
}

Element inv(const GroupDescriptor& g, const Element& x) {
  switch (g.family) {
    case Family::Free: return std::get<Word>(x).inverse();
    case Family::FreeAbelian: {
      ZVector v = std::get<ZVector>(x);
      for (auto& c : v) c = -c;
      return v;
    }
    case Family::Tararin:
    case Family::TararinInf: return tararin_inv(std::get<TararinElement>(x));
    case Family::Klein: return klein_inv(std::get<KleinElement>(x));
    case Family::Wreath: return wreath_inv(std::get<WreathElement>(x));
  }
  throw std::logic_error("unknown family");
}

Element conj(const GroupDescriptor& desc, const Element& g, const Element& x) {
  return mul(desc, mul(desc, g, x), inv(desc, g));
}

std::vector<Element> generators(const GroupDescriptor& g) {
  std::vector<Element> out;
  switch (g.family) {
    case Family::Free: {
      if (!g.rank) throw std::invalid_argument("finite rank required");
      for (std::int32_t i = 1; i <= *g.rank; ++i) out.push_back(Word::generator(i));
      return out;
    }
    case Family::FreeAbelian: {
      std::int32_t k = g.rank.value();
      for (std::int32_t i = 0; i < k; ++i) {
        ZVector v(static_cast<std::size_t>(k), 0);
        v[static_cast<std::size_t>(i)] = 1;
        out.push_back(v);
      }
      return out;
    }
    case Family::Tararin: {
      std::int32_t n = g.rank.value();
      for (std::int32_t i = 1; i <= n; ++i) {
        TararinElement t;
        t.exp.assign(static_cast<std::size_t>(i), 0);
        t.exp.back() = 1;
        out.push_back(t);
      }
      return out;
    }
    case Family::TararinInf:
      throw std::invalid_argument("T_infinity has no declared finite generating set");
    case Family::Klein:
      out.push_back(KleinElement{1, 0, 0});
      out.push_back(KleinElement{0, 1, 0});
      out.push_back(KleinElement{0, 0, 1});
      return out;
    case Family::Wreath: {
      WreathElement a;
      a.top = Word::generator(1);
      WreathElement b;
      b.top = Word::generator(2);
      WreathElement t;
      t.lamps[Word()] = 1;
      out.push_back(a);
      out.push_back(b);
      out.push_back(t);
      return out;
    }
  }
  throw std::logic_error("unknown family");
}

std::vector<std::string> generator_names(const GroupDescriptor& g) {
  switch (g.family) {
    case Family::Free:
    case Family::FreeAbelian: {
      std::vector<std::string> names;
      std::int32_t k = g.rank.value();
      for (std::int32_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
      return names;
    }
    case Family::Tararin: {
      std::vector<std::string> names;
      for (std::int32_t i = 1; i <= g.rank.value(); ++i) names.push_back("x" + std::to_string(i));
      return names;
    }
    case Family::TararinInf:
      throw std::invalid_argument("T_infinity has no declared finite generating set");
    case Family::Klein: return {"x", "y", "z"};
    case Family::Wreath: return {"a", "b", "t"};
  }
  throw std::logic_error("unknown family");
}

Element eval_word(const GroupDescriptor& g, const Word& w) {
  std::vector<Element> gens = generators(g);
  Element acc = identity(g);
  for (const Letter& l : w.letters()) {
    if (l.id < 1 || l.id > static_cast<std::int32_t>(gens.size())) {
      throw std::invalid_argument("word uses a generator outside the declared generating set");
    }
    const Element& im = gens[static_cast<std::size_t>(l.id - 1)];
    acc = mul(g, acc, l.exp > 0 ? im : inv(g, im));
  }
  return acc;
}

std::vector<Element> ball_of(const GroupDescriptor& g, std::int32_t r) {
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  if (g.family == Family::Free) {
    if (!g.rank) throw std::invalid_argument("finite rank required");
    std::vector<Element> out;
    for (Word& w : ball(*g.rank, r)) out.push_back(std::move(w));
    return out;
  }
  std::vector<Element> gens = generators(g);
  std::vector<Element> steps;
  for (const Element& e : gens) steps.push_back(e);
  for (const Element& e : gens) steps.push_back(inv(g, e));

  std::vector<Element> out = {identity(g)};
  std::unordered_set<std::string> seen = {element_key(out.front())};
  std::vector<Element> frontier = out;
  for (std::int32_t len = 1; len <= r; ++len) {
    if (out.size() > 2'000'000 / steps.size()) {
      throw std::invalid_argument("ball exceeds the enumeration size limit");
    }
    std::vector<Element> next;
    for (const Element& e : frontier) {
      for (const Element& s : steps) {
        Element cand = mul(g, e, s);
        std::string key = element_key(cand);
        if (seen.insert(key).second) {
          next.push_back(cand);
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::string element_key(const Element& e) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Word>) {
          os << 'W';
          for (const Letter& l : v.letters()) os << l.id << ':' << l.exp << ',';
        } else if constexpr (std::is_same_v<T, ZVector>) {
          os << 'Z';
          for (auto c : v) os << c << ',';
        } else if constexpr (std::is_same_v<T, TararinElement>) {
          os << 'T';
          for (auto c : v.exp) os << c << ',';
        } else if constexpr (std::is_same_v<T, KleinElement>) {
          os << 'K' << v.v1 << ',' << v.v2 << ',' << v.k;
        } else {
          os << 'L';
          for (const auto& [x, c] : v.lamps) {
            for (const Letter& l : x.letters()) os << l.id << ':' << l.exp << '.';
            os << '=' << c << ',';
          }
          os << '|';
          for (const Letter& l : v.top.letters()) os << l.id << ':' << l.exp << ',';
        }
      },
      e);
  return os.str();
}

std::string element_str(const GroupDescriptor& g, const Element& e) {
  std::ostringstream os;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Word>) {
          os << v.str();
        } else if constexpr (std::is_same_v<T, ZVector>) {
          os << '(';
          for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
          os << ')';
        } else if constexpr (std::is_same_v<T, TararinElement>) {
          if (v.exp.empty()) os << 'e';
          bool first = true;
          for (std::size_t i = 0; i < v.exp.size(); ++i) {
            if (v.exp[i] == 0) continue;
            if (!first) os << ' ';
            first = false;
            os << 'x' << (i + 1) << '^' << v.exp[i];
          }
        } else if constexpr (std::is_same_v<T, KleinElement>) {
          os << "((" << v.v1 << ',' << v.v2 << ")," << v.k << ')';
        } else {
          os << '{';
          bool first = true;
          for (const auto& [x, c] : v.lamps) {
            if (!first) os << ", ";
            first = false;
            os << x.str() << "->" << c;
          }
          os << "}; " << v.top.str();
        }
      },
      e);
  (void)g;
  return os.str();
}

// --- serialization ----------------------------------------------------------

nlohmann::ordered_json group_to_json(const GroupDescriptor& g) {
  nlohmann::ordered_json j;
  switch (g.family) {
    case Family::Free:
      j["family"] = "free";
      if (g.rank) j["rank"] = *g.rank;
      break;
    case Family::FreeAbelian:
      j["family"] = "free_abelian";
      j["k"] = g.rank.value();
      break;
    case Family::Tararin:
      j["family"] = "tararin";
      j["n"] = g.rank.value();
      break;
    case Family::TararinInf: j["family"] = "tararin_inf"; break;
    case Family::Klein: j["family"] = "klein"; break;
    case Family::Wreath: j["family"] = "wreath"; break;
  }
  return j;
}

GroupDescriptor group_from_json(const nlohmann::json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam == "free") {
    if (j.contains("rank")) return GroupDescriptor::free_group(j["rank"].get<std::int32_t>());
    return GroupDescriptor::free_group(std::nullopt);
  }
  if (fam == "free_abelian") return GroupDescriptor::free_abelian(j.at("k").get<std::int32_t>());
  if (fam == "tararin") return GroupDescriptor::tararin(j.at("n").get<std::int32_t>());
  if (fam == "tararin_inf") return GroupDescriptor::tararin_inf();
  if (fam == "klein") return GroupDescriptor::klein();
  if (fam == "wreath") return GroupDescriptor::wreath();
  throw std::invalid_argument("unknown group family: " + fam);
}

nlohmann::ordered_json word_to_json(const Word& w) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [id, exp] : w.syllables()) {
    j.push_back({id, exp});
  }
  return j;
}

Word word_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Word::parse(j.get<std::string>());
  std::vector<std::pair<std::int32_t, std::int64_t>> syls;
  for (const auto& p : j) {
    syls.emplace_back(p.at(0).get<std::int32_t>(), p.at(1).get<std::int64_t>());
  }
  return Word::from_letters(syls);
}

nlohmann::ordered_json element_to_json(const GroupDescriptor& g, const Element& e) {
  switch (g.family) {
    case Family::Free: return word_to_json(std::get<Word>(e));
    case Family::FreeAbelian: return nlohmann::ordered_json(std::get<ZVector>(e));
    case Family::Tararin:
    case Family::TararinInf: return nlohmann::ordered_json(std::get<TararinElement>(e).exp);
    case Family::Klein: {
      const auto& k = std::get<KleinElement>(e);
      return nlohmann::ordered_json::array({{k.v1, k.v2}, k.k});
    }
    case Family::Wreath: {
      const auto& w = std::get<WreathElement>(e);
      nlohmann::ordered_json support = nlohmann::ordered_json::array();
      for (const auto& [x, c] : w.lamps) {
        support.push_back({word_to_json(x), c});
      }
      nlohmann::ordered_json j;
      j["support"] = support;
      j["top"] = word_to_json(w.top);
      return j;
    }
  }
  throw std::logic_error("unknown family");
}

Element element_from_json(const GroupDescriptor& g, const nlohmann::json& j) {
  switch (g.family) {
    case Family::Free: return word_from_json(j);
    case Family::FreeAbelian: {
      ZVector v = j.get<ZVector>();
      if (static_cast<std::int32_t>(v.size()) != g.rank.value()) {
        throw std::invalid_argument("rank mismatch");
      }
      return v;
    }
    case Family::Tararin:
    case Family::TararinInf: {
      TararinElement t;
      t.exp = j.get<std::vector<std::int64_t>>();
      t.trim();
      return t;
    }
    case Family::Klein: {
      KleinElement k;
      k.v1 = j.at(0).at(0).get<std::int64_t>();
      k.v2 = j.at(0).at(1).get<std::int64_t>();
      k.k = j.at(1).get<std::int64_t>();
      return k;
    }
    case Family::Wreath: {
      WreathElement w;
      for (const auto& p : j.at("support")) {
        w.lamps[word_from_json(p.at(0))] = p.at(1).get<std::int64_t>();
      }
      w.top = word_from_json(j.at("top"));
      w.prune();
      return w;
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace ordspace
