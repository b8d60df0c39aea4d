#include "ordspace/nc_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ordspace {

bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NcPolynomial NcPolynomial::constant(std::int64_t c, std::int32_t degree_cap) {
  NcPolynomial p(degree_cap);
  p.add_term({}, c);
  return p;
}

std::int64_t NcPolynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void NcPolynomial::add_term(Monomial m, std::int64_t c) {
  if (c == 0 || static_cast<std::int32_t>(m.size()) > cap_) return;
  auto [it, inserted] = terms_.emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  NcPolynomial out(std::min(cap_, o.cap_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const {
  NcPolynomial out(std::min(cap_, o.cap_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
  NcPolynomial out(std::min(cap_, o.cap_));
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      if (static_cast<std::int32_t>(m1.size() + m2.size()) > out.cap_) continue;
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.add_term(std::move(m), c1 * c2);
    }
  }
  return out;
}

std::optional<std::pair<Monomial, std::int64_t>> NcPolynomial::least_positive_degree_term() const {
  std::optional<std::pair<Monomial, std::int64_t>> best;
  for (const auto& [m, c] : terms_) {
    if (m.empty()) continue;
    if (!best || grlex_less(m, best->first)) best = {m, c};
  }
  return best;
}

std::string NcPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (auto v : m) os << "*X" << v;
  }
  return os.str();
}

NcPolynomial magnus_truncated(const Word& w, std::int32_t d) {
  if (d < 1) throw std::invalid_argument("truncation degree must be positive");
  NcPolynomial acc = NcPolynomial::constant(1, d);
  for (const Letter& l : w.letters()) {
    if (l.id < 1) {
      throw std::invalid_argument("magnus expansion requires positive generator ids");
    }
    NcPolynomial factor(d);
    if (l.exp > 0) {
      factor.add_term({}, 1);
      factor.add_term({l.id}, 1);
    } else {
      // geometric series 1 - X + X^2 - ...
      std::int64_t sign = 1;
      Monomial m;
      for (std::int32_t k = 0; k <= d; ++k) {
        factor.add_term(m, sign);
        m.push_back(l.id);
        sign = -sign;
      }
    }
    acc = acc * factor;
  }
  return acc;
}

int magnus_sign(const Word& w) {
  if (w.empty()) throw std::domain_error("identity has no sign");
  std::int32_t len = static_cast<std::int32_t>(w.length());
  // Deepen until a nonzero positive-degree term exists.  Degree len always
  // suffices for a nontrivial reduced word.
  std::int32_t d = 1;
  while (true) {
    NcPolynomial p = magnus_truncated(w, d);
    auto t = p.least_positive_degree_term();
    if (t) return t->second > 0 ? 1 : -1;
    if (d >= len) {
      throw std::logic_error("magnus expansion vanished to the length bound on: " + w.str());
    }
    d = std::min(2 * d, len);
  }
}

bool magnus_less(const Word& u, const Word& v) {
  if (u == v) return false;
  return magnus_sign(u.inverse() * v) > 0;
}

}  // namespace ordspace
