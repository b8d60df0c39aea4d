#include "ordspace/checks.hpp"

namespace ordspace {

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["status"] = pass ? "pass" : "fail";
  j["radius"] = radius;
  if (!counterexample.is_null()) j["counterexample"] = counterexample;
  if (!stats.is_null()) j["stats"] = stats;
  return j;
}

namespace {

nlohmann::ordered_json element_json(const GroupDescriptor& g, const Element& e) {
  return element_to_json(g, e);
}

}  // namespace

CheckReport axioms_check_over(const ConePtr& cone, const GroupDescriptor& group,
                              const std::vector<Element>& elements, std::int32_t r) {
  CheckReport rep;
  rep.check = "axioms";
  rep.radius = r;
  for (const Element& g : elements) {
    if (is_identity(g)) continue;
    int s = cone->sign(g);
    int si = cone->sign(inv(group, g));
    if (s + si != 0) {
      rep.pass = false;
      rep.counterexample["violation"] = "antisymmetry";
      rep.counterexample["element"] = element_json(group, g);
      return rep;
    }
  }
  std::vector<const Element*> positives;
  for (const Element& g : elements) {
    if (!is_identity(g) && cone->sign(g) == 1) positives.push_back(&g);
  }
  for (const Element* g : positives) {
    for (const Element* h : positives) {
      Element p = mul(group, *g, *h);
      if (is_identity(p)) continue;  // cannot happen after antisymmetry holds
      if (cone->sign(p) != 1) {
        rep.pass = false;
        rep.counterexample["violation"] = "closure";
        rep.counterexample["left"] = element_json(group, *g);
        rep.counterexample["right"] = element_json(group, *h);
        return rep;
      }
    }
  }
  rep.stats["elements"] = elements.size();
  return rep;
}

CheckReport axioms_check(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r) {
  return axioms_check_over(cone, group, ball_of(group, r), r);
}

CheckReport q_conditions_check(const SubsetOracle& Q, const GroupDescriptor& group,
                               std::int32_t r) {
  CheckReport rep;
  rep.check = "q_conditions";
  rep.radius = r;
  std::vector<Element> b = ball_of(group, r);

  auto in_Q = [&](const Element& g) {
    return !is_identity(g) && !Q.in_subgroup(g) && Q.q_sign(g) == 1;
  };

  // (3) partition: exactly one of C, Q, Q^{-1} holds.
  for (const Element& g : b) {
    if (is_identity(g)) {
      if (!Q.in_subgroup(g)) {
        rep.pass = false;
        rep.counterexample["violation"] = "identity outside C";
        return rep;
      }
      continue;
    }
    bool c = Q.in_subgroup(g);
    bool ci = Q.in_subgroup(inv(group, g));
    if (c != ci) {
      rep.pass = false;
      rep.counterexample["violation"] = "C not closed under inversion";
      rep.counterexample["element"] = element_json(group, g);
      return rep;
    }
    if (c) continue;
    int s = Q.q_sign(g);
    int si = Q.q_sign(inv(group, g));
    if (s + si != 0 || (s != 1 && s != -1)) {
      rep.pass = false;
      rep.counterexample["violation"] = "trichotomy";
      rep.counterexample["element"] = element_json(group, g);
      return rep;
    }
  }

  // (1) QQ <= Q.
  std::vector<const Element*> q_elts;
  std::vector<const Element*> c_elts;
  for (const Element& g : b) {
    if (in_Q(g)) q_elts.push_back(&g);
    if (Q.in_subgroup(g)) c_elts.push_back(&g);
  }
  for (const Element* g : q_elts) {
    for (const Element* h : q_elts) {
      Element p = mul(group, *g, *h);
      if (!in_Q(p)) {
        rep.pass = false;
        rep.counterexample["violation"] = "QQ";
        rep.counterexample["left"] = element_json(group, *g);
        rep.counterexample["right"] = element_json(group, *h);
        return rep;
      }
    }
  }

  // (2) CQC <= Q, via CQ <= Q and QC <= Q (C is a subgroup containing 1).
  for (const Element* c : c_elts) {
    for (const Element* g : q_elts) {
      if (!in_Q(mul(group, *c, *g)) || !in_Q(mul(group, *g, *c))) {
        rep.pass = false;
        rep.counterexample["violation"] = "CQC";
        rep.counterexample["subgroup_element"] = element_json(group, *c);
        rep.counterexample["q_element"] = element_json(group, *g);
        return rep;
      }
    }
  }

  rep.stats["ball"] = b.size();
  rep.stats["q_elements"] = q_elts.size();
  rep.stats["c_elements"] = c_elts.size();
  return rep;
}

CheckReport conradian_probe(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r,
                            std::int32_t N) {
  CheckReport rep;
  rep.check = "conradian";
  rep.radius = r;
  rep.stats["bound"] = N;
  std::vector<Element> b = ball_of(group, r);
  std::vector<const Element*> positives;
  for (const Element& g : b) {
    if (!is_identity(g) && cone->sign(g) == 1) positives.push_back(&g);
  }
  nlohmann::ordered_json refuted = nlohmann::ordered_json::array();
  for (const Element* g : positives) {
    Element gi = inv(group, *g);
    for (const Element* h : positives) {
      bool witness = false;
      Element acc = mul(group, gi, *h);  // g^{-1} h g^n, built incrementally
      for (std::int32_t n = 1; n <= N; ++n) {
        acc = mul(group, acc, *g);
        if (!is_identity(acc) && cone->sign(acc) == 1) {
          witness = true;
          break;
        }
      }
      if (!witness) {
        refuted.push_back({{"g", element_json(group, *g)}, {"h", element_json(group, *h)}});
      }
    }
  }
  rep.pass = refuted.empty();
  if (!rep.pass) rep.counterexample["refuted_pairs"] = refuted;
  rep.stats["positive_elements"] = positives.size();
  return rep;
}

CheckReport convexity_check(const std::function<bool(const Element&)>& in_C,
                            const ConePtr& cone, const GroupDescriptor& group, std::int32_t r) {
  CheckReport rep;
  rep.check = "convexity";
  rep.radius = r;
  std::vector<Element> b = ball_of(group, r);
  auto less = [&](const Element& x, const Element& y) {
    Element d = mul(group, inv(group, x), y);
    return !is_identity(d) && cone->sign(d) == 1;
  };
  std::vector<const Element*> c_elts;
  for (const Element& e : b) {
    if (in_C(e)) c_elts.push_back(&e);
  }
  // f is sandwiched iff some element of C lies below it and some above.
  for (const Element& f : b) {
    if (in_C(f)) continue;
    const Element* below = nullptr;
    const Element* above = nullptr;
    for (const Element* c : c_elts) {
      if (below == nullptr && less(*c, f)) below = c;
      if (above == nullptr && less(f, *c)) above = c;
      if (below && above) break;
    }
    if (below && above) {
      rep.pass = false;
      rep.counterexample["violation"] = "sandwiched element outside C";
      rep.counterexample["g"] = element_json(group, *below);
      rep.counterexample["f"] = element_json(group, f);
      rep.counterexample["h"] = element_json(group, *above);
      return rep;
    }
  }
  rep.stats["subgroup_elements"] = c_elts.size();
  return rep;
}

CheckReport biinvariance_check(const ConePtr& cone, const GroupDescriptor& group,
                               std::int32_t r) {
  CheckReport rep;
  rep.check = "biinvariance";
  rep.radius = r;
  std::vector<Element> b = ball_of(group, r);
  for (const Element& g : b) {
    for (const Element& p : b) {
      if (is_identity(p)) continue;
      if (cone->sign(conj(group, g, p)) != cone->sign(p)) {
        rep.pass = false;
        rep.counterexample["conjugator"] = element_json(group, g);
        rep.counterexample["element"] = element_json(group, p);
        return rep;
      }
    }
  }
  rep.stats["ball"] = b.size();
  return rep;
}

CheckReport malnormality_probe(const std::function<bool(const Element&)>& in_C,
                               const GroupDescriptor& group, std::int32_t r) {
  CheckReport rep;
  rep.check = "malnormality";
  rep.radius = r;
  std::vector<Element> b = ball_of(group, r);
  std::vector<const Element*> c_elts;
  for (const Element& e : b) {
    if (!is_identity(e) && in_C(e)) c_elts.push_back(&e);
  }
  nlohmann::ordered_json candidates = nlohmann::ordered_json::array();
  for (const Element& h : b) {
    if (in_C(h) || c_elts.empty()) continue;
    bool maps_in = true;
    for (const Element* c : c_elts) {
      if (!in_C(conj(group, h, *c))) {
        maps_in = false;
        break;
      }
    }
    if (maps_in) candidates.push_back(element_json(group, h));
  }
  rep.pass = candidates.empty();
  if (!rep.pass) rep.counterexample["candidates"] = candidates;
  rep.stats["subgroup_elements"] = c_elts.size();
  return rep;
}

}  // namespace ordspace
