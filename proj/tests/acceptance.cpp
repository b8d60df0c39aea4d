// Acceptance suite: one pass/fail line per criterion.  Optionally takes the
// CLI binary path as argv[1] for the end-to-end determinism criterion.
//
// Exit code: number of failed criteria (0 on full pass).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ordspace/checks.hpp"
#include "ordspace/cones.hpp"
#include "ordspace/dynamics.hpp"
#include "ordspace/groups.hpp"
#include "ordspace/reductions.hpp"

using namespace ordspace;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

struct KleinSample {
  ZVector u, w;
  int zsign;
};

// 50 deterministic Z^2 parameter cones (independent functionals, both z signs).
std::vector<KleinSample> sampled_klein_cones() {
  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<std::int64_t> coord(-5, 5);
  std::vector<KleinSample> out;
  while (out.size() < 50) {
    ZVector u{coord(rng), coord(rng)};
    ZVector w{coord(rng), coord(rng)};
    if (u[0] * w[1] - u[1] * w[0] == 0) continue;
    out.push_back({u, w, out.size() % 2 == 0 ? 1 : -1});
  }
  return out;
}

std::vector<Element> wreath_base_ball(std::int32_t r) {
  std::vector<Element> out;
  for (Element& e : ball_of(GroupDescriptor::wreath(), r)) {
    if (std::get<WreathElement>(e).top.empty()) out.push_back(std::move(e));
  }
  return out;
}

// All total sign assignments on B_r(T_2) minus identity satisfying
// antisymmetry and in-ball closure, counted by backtracking.
std::size_t count_consistent_assignments_t2(std::int32_t r) {
  GroupDescriptor g = GroupDescriptor::tararin(2);
  std::vector<Element> b = ball_of(g, r);
  std::vector<Element> elems;
  for (const Element& e : b) {
    if (!is_identity(e)) elems.push_back(e);
  }
  std::size_t n = elems.size();
  std::vector<std::string> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = element_key(elems[i]);
  auto index_of = [&](const Element& e) -> std::ptrdiff_t {
    std::string k = element_key(e);
    for (std::size_t i = 0; i < n; ++i) {
      if (keys[i] == k) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };

  std::vector<std::size_t> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    inverse[i] = static_cast<std::size_t>(index_of(inv(g, elems[i])));
  }
  // prod[i][j] = index of elems[i]*elems[j] within the ball, or -1 (identity
  // products cannot arise between a consistently signed pair and are skipped
  // via the inverse pairing).
  std::vector<std::vector<std::ptrdiff_t>> prod(n, std::vector<std::ptrdiff_t>(n, -1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element p = mul(g, elems[i], elems[j]);
      if (is_identity(p)) continue;
      prod[i][j] = index_of(p);
    }
  }

  std::vector<int> sign(n, 0);
  std::size_t count = 0;

  std::function<bool()> consistent = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (sign[i] != 1) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sign[j] != 1) continue;
        std::ptrdiff_t p = prod[i][j];
        if (p >= 0 && sign[static_cast<std::size_t>(p)] == -1) return false;
      }
    }
    return true;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    std::size_t i = from;
    while (i < n && sign[i] != 0) ++i;
    if (i == n) {
      ++count;
      return;
    }
    for (int s : {1, -1}) {
      sign[i] = s;
      sign[inverse[i]] = -s;
      if (consistent()) dfs(i + 1);
      sign[i] = 0;
      sign[inverse[i]] = 0;
    }
  };
  dfs(0);
  return count;
}

bool run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " > /dev/null 2>&1";
  return std::system(cmd.c_str()) == 0;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

// --- criteria ----------------------------------------------------------------

bool criterion_axioms(std::ostream& log) {
  bool ok = true;
  auto expect = [&](const CheckReport& rep, const std::string& what) {
    if (!rep.pass) {
      log << "    axiom failure: " << what << ": " << rep.to_json().dump() << "\n";
      ok = false;
    }
  };

  expect(axioms_check(magnus_cone(2), GroupDescriptor::free_group(2), 4), "magnus rank 2");
  expect(axioms_check(magnus_cone(3), GroupDescriptor::free_group(3), 4), "magnus rank 3");

  for (std::int32_t nn = 1; nn <= 5; ++nn) {
    for (std::uint32_t mask = 0; mask < (1u << nn); ++mask) {
      std::vector<int> signs;
      for (std::int32_t i = 0; i < nn; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
      expect(axioms_check(tararin_signs_cone(signs, false), GroupDescriptor::tararin(nn), 4),
             "tararin n=" + std::to_string(nn));
    }
  }

  for (const KleinSample& s : sampled_klein_cones()) {
    expect(axioms_check(klein_cone(s.u, s.w, s.zsign), GroupDescriptor::klein(), 4),
           "sampled klein cone");
  }

  // Lexicographic direct sum over the wreath base (generic and R_A forms).
  std::vector<Element> base3 = wreath_base_ball(3);
  ConePtr lexsum = lex_direct_sum_cone(
      [](const Word& a, const Word& b) { return Word::shortlex_less(a, b); },
      [](const Word&, std::int64_t v) { return v > 0 ? 1 : -1; });
  expect(axioms_check_over(lexsum, GroupDescriptor::wreath(), base3, 3), "lex direct sum");
  expect(axioms_check_over(wreath_ra_cone(SetDescriptor::finite({Word(), W("a1")}), 1),
                           GroupDescriptor::wreath(), base3, 3),
         "wreath R_A");

  expect(axioms_check(hom_ses_cone({1, 0}, magnus_cone(2), int_lex_cone({ZVector{1}})),
                      GroupDescriptor::free_group(2), 4),
         "ses-lex over Z");

  expect(axioms_check(relconvex_ext_cone(GroupDescriptor::free_group(3), magnus_cone(2),
                                         free_factor_Q(3, {1, 2})),
                      GroupDescriptor::free_group(3), 4),
         "relconvex F2 in F3");

  std::mt19937_64 rng(424242);
  std::vector<Word> b2 = ball(2, 2);
  for (int i = 0; i < 20; ++i) {
    std::vector<Word> members;
    for (const Word& x : b2) {
      if (rng() % 3 == 0) members.push_back(x);
    }
    expect(axioms_check(phi_cone(SetDescriptor::finite(members)), GroupDescriptor::wreath(), 3),
           "phi(A) sample " + std::to_string(i));
  }
  return ok;
}

bool criterion_tararin_count(std::ostream& log) {
  bool ok = true;
  for (std::int32_t nn = 1; nn <= 5; ++nn) {
    GroupDescriptor g = GroupDescriptor::tararin(nn);
    std::vector<Element> b = ball_of(g, 2);
    std::set<std::string> fps;
    for (std::uint32_t mask = 0; mask < (1u << nn); ++mask) {
      std::vector<int> signs;
      for (std::int32_t i = 0; i < nn; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
      fps.insert(fingerprint_over(tararin_signs_cone(signs, false), b, 2).hex());
    }
    if (fps.size() != (1u << nn)) {
      log << "    expected " << (1u << nn) << " distinct fingerprints for n=" << nn << ", got "
          << fps.size() << "\n";
      ok = false;
    }
  }

  std::size_t assignments = count_consistent_assignments_t2(4);
  if (assignments != 4) {
    log << "    brute-force search found " << assignments
        << " consistent assignments on B_4(T_2), expected 4\n";
    ok = false;
  }
  return ok;
}

bool criterion_klein_orbits(std::ostream& log) {
  bool ok = true;
  auto in_z2 = [](const Element& e) { return std::get<KleinElement>(e).k == 0; };
  for (const KleinSample& s : sampled_klein_cones()) {
    ConePtr cone = klein_cone(s.u, s.w, s.zsign);
    auto probe = finite_orbit_probe(cone, GroupDescriptor::klein(), 3, 16);
    if (!probe || *probe != 2) {
      log << "    orbit probe did not return finite(2)\n";
      ok = false;
    }
    if (!convexity_check(in_z2, cone, GroupDescriptor::klein(), 3).pass) {
      log << "    Z^2 failed the convexity check\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion_tinf_dictionary(std::ostream& log) {
  bool ok = true;
  const std::int32_t m = 6;
  for (std::int32_t mask = 0; mask < (1 << m); ++mask) {
    EpsSequence eps;
    for (std::int32_t i = 0; i < m; ++i) eps.push_back((mask >> i) & 1 ? 1 : 0);

    // Flip orbit via x_2..x_{m+1}.
    std::set<EpsSequence> orbit = {eps};
    std::vector<EpsSequence> frontier = {eps};
    while (!frontier.empty()) {
      std::vector<EpsSequence> next;
      for (const EpsSequence& cur : frontier) {
        for (std::int32_t j = 2; j <= m + 1; ++j) {
          EpsSequence img = tinf_action(j, cur);
          if (orbit.insert(img).second) next.push_back(img);
        }
      }
      frontier = std::move(next);
    }
    // Eventual-equality class at level m over length-m truncations.
    std::size_t class_size = 0;
    for (std::int32_t other = 0; other < (1 << m); ++other) {
      EpsSequence o;
      for (std::int32_t i = 0; i < m; ++i) o.push_back((other >> i) & 1 ? 1 : 0);
      if (e0_related(eps, o, m)) {
        ++class_size;
        if (orbit.count(o) == 0) {
          log << "    class member missing from the flip orbit\n";
          ok = false;
        }
      }
    }
    if (orbit.size() != class_size) {
      log << "    orbit size " << orbit.size() << " != class size " << class_size << "\n";
      ok = false;
    }

    // decode(conjugate(x_j, encode(eps))) = action(j, eps) for j = 2..7.
    for (std::int32_t j = 2; j <= 7; ++j) {
      TararinElement xj;
      xj.exp.assign(static_cast<std::size_t>(j), 0);
      xj.exp.back() = 1;
      ConePtr conjd = conjugate_cone(Element{xj}, tinf_encode(eps));
      if (tinf_decode(conjd, m) != tinf_action(j, eps)) {
        log << "    decode o conjugate mismatch at j=" << j << "\n";
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_q_conditions(std::ostream& log) {
  bool ok = true;
  CheckReport a = q_conditions_check(hom_positive_Q({1, 0}), GroupDescriptor::free_group(2), 4);
  if (!a.pass) {
    log << "    hom-positive Q failed: " << a.to_json().dump() << "\n";
    ok = false;
  }
  CheckReport b = q_conditions_check(free_factor_Q(3, {1, 2}), GroupDescriptor::free_group(3), 4);
  if (!b.pass) {
    log << "    free-factor Q failed: " << b.to_json().dump() << "\n";
    ok = false;
  }
  return ok;
}

bool criterion_equivariance(std::ostream& log) {
  bool ok = true;
  for (const std::string& name :
       {"prop3.1", "prop3.2", "prop3.3", "prop3.4", "cor3.6", "prop4.2"}) {
    ReductionWitness w = make_witness(name, 20260810);
    SuiteReport rep = equivariance_suite(w, 48, w.fingerprint_radius);
    if (rep.samples < 32 || !rep.pass()) {
      log << "    " << name << ": " << rep.to_json().dump() << "\n";
      ok = false;
    }
  }

  // phi(hA) = (0,h) phi(A) (0,h)^{-1} pointwise over the radius-2 ball.
  GroupDescriptor wr = GroupDescriptor::wreath();
  std::vector<Element> wball = ball_of(wr, 2);
  std::vector<SetDescriptor> sets = {
      SetDescriptor::finite({}),
      SetDescriptor::finite({Word()}),
      SetDescriptor::finite({Word(), W("a1"), W("b-1")}),
      SetDescriptor::cofinite({W("a1")}),
  };
  for (const SetDescriptor& A : sets) {
    for (const Word& h : ball(2, 3)) {
      WreathElement th;
      th.top = h;
      ConePtr lhs = conjugate_cone(Element{th}, phi_cone(A));
      ConePtr rhs = phi_cone(shift_action(h, A));
      for (const Element& e : wball) {
        if (is_identity(e)) continue;
        if (lhs->sign(e) != rhs->sign(e)) {
          log << "    phi equivariance mismatch at h=" << h.str() << "\n";
          ok = false;
          break;
        }
      }
    }
  }
  return ok;
}

bool criterion_refutation_probes(std::ostream& log) {
  bool ok = true;
  // The radius-2 ball of the wreath product contains base elements only at
  // the identity lamp, so radius-2 fingerprints of phi-cones expose a single
  // membership bit of the set.  Pairs refutable at this radius therefore pit
  // the empty set against sets containing the identity; they are
  // shift-inequivalent (every shift of the empty set stays empty).
  std::mt19937_64 rng(1312);
  std::vector<Word> b2 = ball(2, 2);
  SetDescriptor empty = SetDescriptor::finite({});
  std::vector<SetDescriptor> others;
  std::set<std::string> seen;
  while (others.size() < 10) {
    std::vector<Word> members = {Word()};
    for (const Word& x : b2) {
      if (!x.empty() && rng() % 3 == 0) members.push_back(x);
    }
    SetDescriptor s = SetDescriptor::finite(members);
    if (seen.insert(s.to_json().dump()).second) others.push_back(s);
  }
  std::size_t index = 0;
  for (const SetDescriptor& other : others) {
    ++index;
    if (!shift_inequivalent_on_b2(empty, other, 4)) {
      log << "    pair " << index << " unexpectedly shift-equivalent\n";
      ok = false;
      continue;
    }
    if (!cone_conjugacy_refuted(phi_cone(empty), phi_cone(other), GroupDescriptor::wreath(), 3,
                                2)) {
      log << "    unexpected conjugator found for pair " << index << "\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion_conradian(std::ostream& log) {
  bool ok = true;
  auto expect = [&](const CheckReport& rep, const std::string& what) {
    if (!rep.pass) {
      log << "    conradian refutation for " << what << "\n";
      ok = false;
    }
  };
  expect(conradian_probe(magnus_cone(2), GroupDescriptor::free_group(2), 3, 2), "magnus 2");
  expect(conradian_probe(magnus_cone(3), GroupDescriptor::free_group(3), 3, 2), "magnus 3");
  for (std::int32_t nn = 1; nn <= 5; ++nn) {
    for (std::uint32_t mask = 0; mask < (1u << nn); ++mask) {
      std::vector<int> signs;
      for (std::int32_t i = 0; i < nn; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
      expect(conradian_probe(tararin_signs_cone(signs, false), GroupDescriptor::tararin(nn), 3, 2),
             "tararin");
    }
  }
  for (const KleinSample& s : sampled_klein_cones()) {
    expect(conradian_probe(klein_cone(s.u, s.w, s.zsign), GroupDescriptor::klein(), 3, 2),
           "klein");
  }
  return ok;
}

bool criterion_sidon(std::ostream& log) {
  bool ok = true;
  std::vector<std::int64_t> c = sidon_prefix(12);
  std::vector<std::int64_t> first5(c.begin(), c.begin() + 5);
  if (first5 != std::vector<std::int64_t>{1, 2, 5, 11, 23}) {
    log << "    unexpected prefix head\n";
    ok = false;
  }
  // Exhaustive difference-distinctness.
  std::set<std::int64_t> diffs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!diffs.insert(c[j] - c[i]).second) {
        log << "    repeated difference " << c[j] - c[i] << "\n";
        ok = false;
      }
    }
  }
  // |(C+l) n C| <= 1 for every l <= max(C).
  std::set<std::int64_t> members(c.begin(), c.end());
  for (std::int64_t l = 1; l <= c.back(); ++l) {
    int count = 0;
    for (std::int64_t x : c) {
      if (members.count(x + l)) ++count;
    }
    if (count > 1) {
      log << "    |(C+" << l << ") n C| = " << count << "\n";
      ok = false;
    }
  }
  return ok;
}

bool criterion_determinism(std::ostream& log, const std::string& cli) {
  bool ok = true;

  // Library level: identical seeds give byte-identical reports.
  for (const std::string& name : {"prop3.4", "prop4.2"}) {
    ReductionWitness w1 = make_witness(name, 777);
    ReductionWitness w2 = make_witness(name, 777);
    std::string r1 = equivariance_suite(w1, 40, w1.fingerprint_radius).to_json().dump(2);
    std::string r2 = equivariance_suite(w2, 40, w2.fingerprint_radius).to_json().dump(2);
    if (r1 != r2) {
      log << "    library reports differ for " << name << "\n";
      ok = false;
    }
  }

  if (cli.empty()) {
    log << "    (cli path not provided; end-to-end half skipped)\n";
    return ok;
  }
  struct Run {
    std::string args;
    std::string out_a, out_b;
  };
  std::vector<Run> runs = {
      {"reduce --witness prop3.4 --samples 40 --seed 7", "acc_red_a.json", "acc_red_b.json"},
      {"check --check axioms --cone '{\"kind\":\"magnus\",\"rank\":2}' --radius 3",
       "acc_chk_a.json", "acc_chk_b.json"},
      {"orbit --cone '{\"kind\":\"klein\",\"u\":[1,0],\"w\":[0,1],\"zsign\":1}' --radius 3",
       "acc_orb_a.json", "acc_orb_b.json"},
  };
  for (const Run& r : runs) {
    bool a = run_cli(cli, r.args + " --out " + r.out_a);
    bool b = run_cli(cli, r.args + " --out " + r.out_b);
    if (!a || !b) {
      log << "    cli run failed for: " << r.args << "\n";
      ok = false;
      continue;
    }
    std::string ca = slurp(r.out_a);
    std::string cb = slurp(r.out_b);
    if (ca.empty() || ca != cb) {
      log << "    cli outputs differ for: " << r.args << "\n";
      ok = false;
    }
    std::remove(r.out_a.c_str());
    std::remove(r.out_b.c_str());
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";

  struct Criterion {
    std::string name;
    std::function<bool(std::ostream&)> run;
  };
  std::vector<Criterion> criteria = {
      {"1 cone axiom suite", criterion_axioms},
      {"2 tararin order count", criterion_tararin_count},
      {"3 klein two-element orbits", criterion_klein_orbits},
      {"4 sign-sequence dictionary", criterion_tinf_dictionary},
      {"5 subset-oracle conditions", criterion_q_conditions},
      {"6 reduction equivariance", criterion_equivariance},
      {"7 refutation probes", criterion_refutation_probes},
      {"8 conradian consistency", criterion_conradian},
      {"9 difference-distinct prefix", criterion_sidon},
      {"10 determinism", [&cli](std::ostream& log) { return criterion_determinism(log, cli); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run(log);
    } catch (const std::exception& e) {
      log << "    exception: " << e.what() << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.name << " (" << ms
              << " ms)\n";
    std::cout << log.str();
    if (!pass) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
