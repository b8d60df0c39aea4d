#include "ordspace/relmagnus.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordspace/nc_poly.hpp"

namespace ordspace {

namespace {

// Structural order for container keys; cheap, unrelated to the semantic one.
struct MonomialKeyLess {
  bool operator()(const MixedMonomial& a, const MixedMonomial& b) const {
    if (a.tvars != b.tvars) return a.tvars < b.tvars;
    for (std::size_t i = 0; i < a.aparts.size(); ++i) {
      const auto& u = a.aparts[i].letters();
      const auto& v = b.aparts[i].letters();
      if (u.size() != v.size()) return u.size() < v.size();
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j].id != v[j].id) return u[j].id < v[j].id;
        if (u[j].exp != v[j].exp) return u[j].exp < v[j].exp;
      }
    }
    return false;
  }
};

struct MixedPolyImpl {
  std::int32_t cap;
  std::map<MixedMonomial, std::int64_t, MonomialKeyLess> terms;

  void add(MixedMonomial m, std::int64_t c) {
    if (c == 0 || m.degree() > cap) return;
    auto [it, inserted] = terms.emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

MixedMonomial concat(const MixedMonomial& a, const MixedMonomial& b) {
  MixedMonomial out;
  out.tvars = a.tvars;
  out.tvars.insert(out.tvars.end(), b.tvars.begin(), b.tvars.end());
  out.aparts = a.aparts;
  out.aparts.back() = out.aparts.back() * b.aparts.front();
  out.aparts.insert(out.aparts.end(), b.aparts.begin() + 1, b.aparts.end());
  return out;
}

MixedPolyImpl mul(const MixedPolyImpl& p, const MixedPolyImpl& q) {
  MixedPolyImpl out{std::min(p.cap, q.cap), {}};
  for (const auto& [m1, c1] : p.terms) {
    for (const auto& [m2, c2] : q.terms) {
      if (m1.degree() + m2.degree() > out.cap) continue;
      out.add(concat(m1, m2), c1 * c2);
    }
  }
  return out;
}

MixedMonomial unit_monomial() {
  MixedMonomial m;
  m.aparts.emplace_back();
  return m;
}

}  // namespace

FreeFactorOracle::FreeFactorOracle(std::vector<std::int32_t> factor_ids) : ids_(std::move(factor_ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (ids_.empty()) throw std::invalid_argument("factor needs at least one basis letter");
}

bool FreeFactorOracle::in_factor(const Word& w) const {
  for (const Letter& l : w.letters()) {
    if (!std::binary_search(ids_.begin(), ids_.end(), l.id)) return false;
  }
  return true;
}

Word FreeFactorOracle::relabel_to_factor(const Word& aword) const {
  std::vector<std::pair<std::int32_t, std::int64_t>> syls;
  for (const Letter& l : aword.letters()) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), l.id);
    syls.emplace_back(static_cast<std::int32_t>(it - ids_.begin()) + 1, l.exp);
  }
  return Word::from_letters(syls);
}

bool FreeFactorOracle::apart_less(const Word& u, const Word& v) const {
  if (u == v) return false;
  return magnus_less(relabel_to_factor(u), relabel_to_factor(v));
}

bool FreeFactorOracle::monomial_less(const MixedMonomial& a, const MixedMonomial& b) const {
  // Same degree by construction; interleaved lexicographic comparison.
  for (std::size_t i = 0;; ++i) {
    if (!(a.aparts[i] == b.aparts[i])) return apart_less(a.aparts[i], b.aparts[i]);
    if (i == a.tvars.size()) return false;
    if (a.tvars[i] != b.tvars[i]) return a.tvars[i] < b.tvars[i];
  }
}

int FreeFactorOracle::q_sign(const Word& w) const {
  if (w.empty()) throw std::domain_error("identity has no sign");
  if (in_factor(w)) throw std::invalid_argument("element lies in the factor");

  std::int32_t b_letters = 0;
  for (const Letter& l : w.letters()) {
    if (!std::binary_search(ids_.begin(), ids_.end(), l.id)) ++b_letters;
  }
  std::int32_t cap_limit = 2 * b_letters + 4;

  // Most signs resolve at degree 1 or 2; deepen only when needed.
  std::int32_t cap = 1;
  while (true) {
    MixedPolyImpl acc{cap, {}};
    acc.add(unit_monomial(), 1);
    for (const Letter& l : w.letters()) {
      MixedPolyImpl factor{cap, {}};
      if (std::binary_search(ids_.begin(), ids_.end(), l.id)) {
        MixedMonomial m;
        m.aparts.push_back(Word::generator(l.id, l.exp));
        factor.add(std::move(m), 1);
      } else if (l.exp > 0) {
        factor.add(unit_monomial(), 1);
        MixedMonomial m;
        m.tvars.push_back(l.id);
        m.aparts.resize(2);
        factor.add(std::move(m), 1);
      } else {
        // 1 - Y + Y^2 - ...
        std::int64_t sign = 1;
        for (std::int32_t k = 0; k <= cap; ++k) {
          MixedMonomial m;
          m.tvars.assign(static_cast<std::size_t>(k), l.id);
          m.aparts.resize(static_cast<std::size_t>(k) + 1);
          factor.add(std::move(m), sign);
          sign = -sign;
        }
      }
      acc = mul(acc, factor);
    }

    // Least positive-degree term: least degree first, then the interleaved
    // lexicographic order within that degree.
    const MixedMonomial* best = nullptr;
    std::int64_t best_coeff = 0;
    for (const auto& [m, c] : acc.terms) {
      if (m.degree() == 0) continue;
      if (best == nullptr || m.degree() < best->degree() ||
          (m.degree() == best->degree() && monomial_less(m, *best))) {
        best = &m;
        best_coeff = c;
      }
    }
    if (best != nullptr) return best_coeff > 0 ? 1 : -1;
    if (cap >= cap_limit) {
      throw std::logic_error("relative magnus expansion vanished below the degree ceiling on: " +
                             zigzag_relabel(w).str());
    }
    cap = std::min(2 * cap, cap_limit);
  }
}

}  // namespace ordspace
