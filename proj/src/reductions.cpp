#include "ordspace/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace ordspace {

std::vector<std::int64_t> sidon_prefix(std::int32_t k) {
  if (k < 1) throw std::invalid_argument("prefix length must be positive");
  if (k > 62) throw std::invalid_argument("prefix length exceeds the 64-bit range");
  std::vector<std::int64_t> c;
  c.push_back(1);
  if (k >= 2) c.push_back(2);
  while (static_cast<std::int32_t>(c.size()) < k) {
    c.push_back(2 * c.back() + 1);
  }
  // Exhaustive difference-distinctness re-check.
  std::set<std::int64_t> diffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!diffs.insert(c[j] - c[i]).second) {
        throw std::logic_error("sidon prefix lost difference-distinctness");
      }
    }
  }
  return c;
}

SourceObject act_on_object(const ReductionWitness& w, const Element& g, const SourceObject& obj) {
  if (std::holds_alternative<ConePtr>(obj)) {
    return SourceObject{conjugate_cone(g, std::get<ConePtr>(obj))};
  }
  (void)w;
  return SourceObject{shift_action(std::get<Word>(g), std::get<SetDescriptor>(obj))};
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["witness"] = witness;
  j["status"] = pass() ? "pass" : "fail";
  j["samples"] = samples;
  j["failures"] = failures;
  j["radius"] = radius;
  if (failures > 0) j["failed_samples"] = failed_samples;
  return j;
}

SuiteReport equivariance_suite(const ReductionWitness& w, std::size_t max_samples,
                               std::int32_t radius) {
  SuiteReport rep;
  rep.witness = w.name;
  rep.radius = radius;
  rep.failed_samples = nlohmann::ordered_json::array();
  std::vector<Element> tball = ball_of(w.target_group, radius);

  std::size_t taken = 0;
  for (std::size_t oi = 0; oi < w.objects.size() && taken < max_samples; ++oi) {
    ConePtr image = w.forward(w.objects[oi]);
    for (std::size_t ci = 0; ci < w.conjugators.size() && taken < max_samples; ++ci) {
      const Element& g = w.conjugators[ci];
      ++taken;

      ConePtr lhs = w.forward(act_on_object(w, g, w.objects[oi]));
      ConePtr rhs = conjugate_cone(w.transport(g), image);
      Fingerprint fl = fingerprint_over(lhs, tball, radius);
      Fingerprint fr = fingerprint_over(rhs, tball, radius);
      if (!(fl == fr)) {
        ++rep.failures;
        rep.failed_samples.push_back(
            {{"object", oi}, {"conjugator", element_to_json(w.source_group, g)}});
      }
    }
  }
  rep.samples = taken;
  return rep;
}

namespace {

// Deterministic conjugator lists.
std::vector<Element> word_conjugators(std::int32_t rank, std::int32_t len, std::size_t cap) {
  std::vector<Element> out;
  for (Word& w : ball(rank, len)) {
    out.push_back(std::move(w));
    if (out.size() >= cap) break;
  }
  return out;
}

std::vector<Element> kernel_conjugators(std::int32_t len, std::size_t cap) {
  std::vector<Element> out;
  for (Word& w : ball(2, len)) {
    if (a_exponent(w) != 0) continue;
    out.push_back(std::move(w));
    if (out.size() >= cap) break;
  }
  return out;
}

}  // namespace

ReductionWitness relconvex_reduction(GroupDescriptor ambient, SubsetOracle Q,
                                     GroupDescriptor source_group, std::int32_t check_radius) {
  CheckReport qc = q_conditions_check(Q, ambient, check_radius);
  if (!qc.pass) {
    throw std::invalid_argument("construction rejected: Q fails its conditions at radius " +
                                std::to_string(check_radius));
  }
  ReductionWitness w;
  w.source_group = source_group;
  w.target_group = ambient;
  auto q = std::make_shared<SubsetOracle>(std::move(Q));
  GroupDescriptor amb = ambient;
  w.forward = [amb, q](const SourceObject& obj) {
    return relconvex_ext_cone(amb, std::get<ConePtr>(obj), *q);
  };
  w.transport = [](const Element& g) { return g; };  // inclusion
  return w;
}

ReductionWitness free_factor_reduction(std::int32_t n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("ambient rank must be at least 3");
  ReductionWitness w =
      relconvex_reduction(GroupDescriptor::free_group(n), free_factor_Q(n, {1, 2}),
                          GroupDescriptor::free_group(2), 3);
  w.name = "prop3.2";
  w.fingerprint_radius = 3;

  ConePtr base = magnus_cone(2);
  w.objects = {SourceObject{base}, SourceObject{opposite_cone(base)}};
  std::mt19937_64 rng(seed);
  std::vector<Word> b2 = ball(2, 2);
  std::uniform_int_distribution<std::size_t> pick(1, b2.size() - 1);
  for (int i = 0; i < 4; ++i) {
    w.objects.push_back(SourceObject{conjugate_cone(Element{b2[pick(rng)]}, base)});
  }
  w.conjugators = word_conjugators(2, 3, 24);
  return w;
}

ReductionWitness finf_to_f2_reduction(std::int32_t k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("truncation rank must be positive");
  std::vector<std::int64_t> prefix = sidon_prefix(k);
  std::vector<std::int32_t> prefix_ids(prefix.begin(), prefix.end());

  ReductionWitness w;
  w.name = "prop3.3";
  w.source_group = GroupDescriptor::free_group(k);
  w.target_group = GroupDescriptor::free_group(2);
  w.fingerprint_radius = 3;

  // id c_i -> i within the factor, identity elsewhere (unused there).
  auto to_dense = [prefix_ids](std::int32_t id) {
    auto it = std::lower_bound(prefix_ids.begin(), prefix_ids.end(), id);
    if (it != prefix_ids.end() && *it == id) {
      return static_cast<std::int32_t>(it - prefix_ids.begin()) + 1;
    }
    return id;
  };

  GroupDescriptor h_group = GroupDescriptor::free_group(std::nullopt);
  w.forward = [=](const SourceObject& obj) {
    ConePtr on_factor = relabel_cone(h_group, to_dense, std::get<ConePtr>(obj));
    ConePtr on_h =
        relconvex_ext_cone(h_group, on_factor, free_factor_Q(std::nullopt, prefix_ids));
    return relconvex_ext_cone(GroupDescriptor::free_group(2), rs_pullback_cone(on_h),
                              hom_positive_Q({1, 0}));
  };
  w.transport = [prefix](const Element& g) {
    Word out;
    for (const Letter& l : std::get<Word>(g).letters()) {
      std::int64_t c = prefix[static_cast<std::size_t>(l.id - 1)];
      out = out * Word::generator(1, c) * Word::generator(2, l.exp) * Word::generator(1, -c);
    }
    return Element{out};
  };

  ConePtr base = magnus_cone(k);
  w.objects = {SourceObject{base}, SourceObject{opposite_cone(base)}};
  std::mt19937_64 rng(seed);
  std::vector<Word> bsrc = ball(k, 2);
  std::uniform_int_distribution<std::size_t> pick(1, bsrc.size() - 1);
  for (int i = 0; i < 4; ++i) {
    w.objects.push_back(SourceObject{conjugate_cone(Element{bsrc[pick(rng)]}, base)});
  }
  w.conjugators = word_conjugators(k, 2, 12);
  return w;
}

ReductionWitness quotient_reduction_f2_over_z(std::uint64_t seed) {
  (void)seed;
  ConePtr kernel = magnus_cone(2);
  CheckReport bi = biinvariance_check(kernel, GroupDescriptor::free_group(2), 3);
  if (!bi.pass) {
    throw std::invalid_argument("construction rejected: kernel cone is not bi-invariant");
  }
  ReductionWitness w;
  w.name = "prop3.4";
  w.source_group = GroupDescriptor::free_abelian(1);
  w.target_group = GroupDescriptor::free_group(2);
  w.fingerprint_radius = 3;
  w.forward = [kernel](const SourceObject& obj) {
    return hom_ses_cone({1, 0}, kernel, std::get<ConePtr>(obj));
  };
  w.transport = [](const Element& g) {
    return Element{Word::generator(1, std::get<ZVector>(g)[0])};
  };
  ConePtr plus = int_lex_cone({ZVector{1}});
  ConePtr minus = int_lex_cone({ZVector{-1}});
  w.objects = {SourceObject{plus}, SourceObject{minus}, SourceObject{opposite_cone(plus)},
               SourceObject{conjugate_cone(Element{ZVector{1}}, plus)},
               SourceObject{conjugate_cone(Element{ZVector{-2}}, minus)}};
  w.conjugators.push_back(ZVector{0});
  for (std::int64_t m = 1; m <= 3; ++m) {
    w.conjugators.push_back(ZVector{m});
    w.conjugators.push_back(ZVector{-m});
  }
  return w;
}

ReductionWitness finf_cover_reduction(GroupDescriptor target, std::uint64_t seed) {
  std::int32_t cover_rank;
  switch (target.family) {
    case Family::Tararin: cover_rank = target.rank.value(); break;
    case Family::Klein: cover_rank = 3; break;
    case Family::FreeAbelian: cover_rank = target.rank.value(); break;
    default:
      throw std::invalid_argument("unsupported cover target family");
  }
  ConePtr kernel = magnus_cone(cover_rank);
  CheckReport bi = biinvariance_check(kernel, GroupDescriptor::free_group(cover_rank), 2);
  if (!bi.pass) {
    throw std::invalid_argument("construction rejected: kernel cone is not bi-invariant");
  }

  ReductionWitness w;
  w.name = "cor3.6";
  w.source_group = target;
  w.target_group = GroupDescriptor::free_group(cover_rank);
  w.fingerprint_radius = 3;
  w.forward = [cover_rank, target, kernel](const SourceObject& obj) {
    return cover_ses_cone(cover_rank, target, kernel, std::get<ConePtr>(obj));
  };
  // Section of the canonical surjection: exponents back to generator words.
  w.transport = [target](const Element& g) {
    Word out;
    if (target.family == Family::Klein) {
      const auto& e = std::get<KleinElement>(g);
      out = Word::from_letters({{1, e.v1}, {2, e.v2}, {3, e.k}});
    } else if (target.family == Family::Tararin) {
      const auto& t = std::get<TararinElement>(g);
      std::vector<std::pair<std::int32_t, std::int64_t>> syls;
      for (std::size_t i = 0; i < t.exp.size(); ++i) {
        syls.emplace_back(static_cast<std::int32_t>(i) + 1, t.exp[i]);
      }
      out = Word::from_letters(syls);
    } else {
      const auto& v = std::get<ZVector>(g);
      std::vector<std::pair<std::int32_t, std::int64_t>> syls;
      for (std::size_t i = 0; i < v.size(); ++i) {
        syls.emplace_back(static_cast<std::int32_t>(i) + 1, v[i]);
      }
      out = Word::from_letters(syls);
    }
    return Element{out};
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> small(-3, 3);
  if (target.family == Family::Klein) {
    for (int i = 0; i < 8; ++i) {
      ZVector u{small(rng), small(rng)};
      ZVector v{small(rng), small(rng)};
      if (u[0] * v[1] - u[1] * v[0] == 0) {
        --i;
        continue;
      }
      w.objects.push_back(SourceObject{klein_cone(u, v, i % 2 == 0 ? 1 : -1)});
    }
  } else if (target.family == Family::Tararin) {
    std::int32_t n = target.rank.value();
    for (int mask = 0; mask < (1 << n) && mask < 8; ++mask) {
      std::vector<int> signs;
      for (std::int32_t i = 0; i < n; ++i) signs.push_back((mask >> i) & 1 ? 1 : -1);
      w.objects.push_back(SourceObject{tararin_signs_cone(signs, false)});
    }
  } else {
    w.objects = {SourceObject{int_lex_cone({ZVector{1}})},
                 SourceObject{int_lex_cone({ZVector{-1}})}};
  }
  std::vector<Element> sball = ball_of(target, target.family == Family::Klein ? 2 : 3);
  for (std::size_t i = 0; i < sball.size() && w.conjugators.size() < 17; ++i) {
    w.conjugators.push_back(sball[i]);
  }
  return w;
}

ReductionWitness universal_reduction(std::uint64_t seed) {
  ReductionWitness w;
  w.name = "prop4.2";
  w.source_group = GroupDescriptor::free_group(2);
  w.target_group = GroupDescriptor::wreath();
  w.fingerprint_radius = 2;
  w.forward = [](const SourceObject& obj) { return phi_cone(std::get<SetDescriptor>(obj)); };
  w.transport = [](const Element& g) {
    WreathElement e;
    e.top = std::get<Word>(g);
    return Element{e};
  };

  w.objects.push_back(SourceObject{SetDescriptor::finite({})});
  w.objects.push_back(SourceObject{SetDescriptor::finite({Word()})});
  w.objects.push_back(SourceObject{SetDescriptor::finite({Word(), Word::generator(1)})});
  w.objects.push_back(SourceObject{SetDescriptor::cofinite({Word::generator(2)})});
  std::mt19937_64 rng(seed);
  std::vector<Word> b2 = ball(2, 2);
  std::uniform_int_distribution<int> coin(0, 3);
  while (w.objects.size() < 8) {
    std::vector<Word> members;
    for (const Word& x : b2) {
      if (coin(rng) == 0) members.push_back(x);
    }
    w.objects.push_back(SourceObject{SetDescriptor::finite(std::move(members))});
  }
  w.conjugators = word_conjugators(2, 3, 16);
  return w;
}

std::vector<std::string> witness_names() {
  return {"prop3.1", "prop3.2", "prop3.3", "prop3.4", "cor3.6", "prop4.2", "negative-control"};
}

ReductionWitness make_witness(const std::string& name, std::uint64_t seed) {
  if (name == "prop3.1") {
    // C = ker h inside F_2, Q = h-positive.
    ReductionWitness w =
        relconvex_reduction(GroupDescriptor::free_group(2), hom_positive_Q({1, 0}),
                            GroupDescriptor::free_group(2), 4);
    w.name = "prop3.1";
    w.fingerprint_radius = 3;
    ConePtr base = rs_pullback_cone(int_indexed_magnus_cone());
    w.objects = {SourceObject{base}, SourceObject{opposite_cone(base)}};
    std::vector<Element> kers = kernel_conjugators(3, 64);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(1, kers.size() - 1);
    for (int i = 0; i < 2; ++i) {
      w.objects.push_back(SourceObject{conjugate_cone(kers[pick(rng)], base)});
    }
    w.conjugators = kernel_conjugators(3, 16);
    return w;
  }
  if (name == "prop3.2") return free_factor_reduction(3, seed);
  if (name == "prop3.3") return finf_to_f2_reduction(4, seed);
  if (name == "prop3.4") return quotient_reduction_f2_over_z(seed);
  if (name == "cor3.6") return finf_cover_reduction(GroupDescriptor::klein(), seed);
  if (name == "prop4.2") return universal_reduction(seed);
  if (name == "negative-control") {
    ReductionWitness w = universal_reduction(seed);
    w.name = "negative-control";
    // Deliberately corrupted transport: shifts the top component by a.  The
    // empty set is fixed by every shift, so it goes last to surface the
    // corruption in the first samples.
    std::rotate(w.objects.begin(), w.objects.begin() + 1, w.objects.end());
    w.transport = [](const Element& g) {
      WreathElement e;
      e.top = std::get<Word>(g) * Word::generator(1);
      return Element{e};
    };
    return w;
  }
  throw std::invalid_argument("unknown witness: " + name);
}

bool cone_conjugacy_refuted(const ConePtr& x, const ConePtr& y, const GroupDescriptor& group,
                            std::int32_t conj_len, std::int32_t fp_radius) {
  std::vector<Element> fball = ball_of(group, fp_radius);
  Fingerprint target = fingerprint_over(y, fball, fp_radius);
  for (const Element& g : ball_of(group, conj_len)) {
    if (fingerprint_over(conjugate_cone(g, x), fball, fp_radius) == target) return false;
  }
  return true;
}

bool shift_inequivalent_on_b2(const SetDescriptor& A, const SetDescriptor& A2,
                              std::int32_t shift_len) {
  std::vector<Word> b2 = ball(2, 2);
  auto pattern = [&b2](const SetDescriptor& s) {
    std::vector<bool> bits;
    bits.reserve(b2.size());
    for (const Word& w : b2) bits.push_back(s.contains(w));
    return bits;
  };
  std::vector<bool> want = pattern(A2);
  for (const Word& u : ball(2, shift_len)) {
    if (pattern(shift_action(u, A)) == want) return false;
  }
  return true;
}

}  // namespace ordspace
