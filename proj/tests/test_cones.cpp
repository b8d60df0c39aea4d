#include <doctest.h>

#include <random>

#include "ordspace/checks.hpp"
#include "ordspace/cones.hpp"
#include "ordspace/dynamics.hpp"
#include "ordspace/nc_poly.hpp"
#include "oracles.hpp"

using namespace ordspace;

namespace {

Word W(const std::string& s) { return Word::parse(s); }

TararinElement T(std::vector<std::int64_t> exp) {
  TararinElement t;
  t.exp = std::move(exp);
  t.trim();
  return t;
}

WreathElement lamp(std::initializer_list<std::pair<Word, std::int64_t>> lamps,
                   const Word& top = Word()) {
  WreathElement e;
  for (const auto& [x, c] : lamps) e.lamps[x] = c;
  e.top = top;
  e.prune();
  return e;
}

std::vector<Element> base_ball(std::int32_t r) {
  std::vector<Element> out;
  for (Element& e : ball_of(GroupDescriptor::wreath(), r)) {
    if (std::get<WreathElement>(e).top.empty()) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

TEST_CASE("magnus cone evaluations") {
  ConePtr m2 = magnus_cone(2);
  CHECK(m2->sign(Element{W("a1")}) == 1);
  CHECK(m2->sign(Element{W("b1 a-1")}) == -1);
  CHECK(m2->sign(Element{W("a-1 b1")}) == -1);
  CHECK(m2->sign(Element{W("a1 b1 a-1 b-1")}) == 1);
  CHECK_THROWS_WITH_AS(m2->sign(Element{Word()}), "identity has no sign", std::domain_error);
}

TEST_CASE("magnus cone is bi-invariant on B_4") {
  CheckReport rep = biinvariance_check(magnus_cone(2), GroupDescriptor::free_group(2), 4);
  CHECK(rep.pass);
}

TEST_CASE("magnus cone passes the axiom check") {
  CHECK(axioms_check(magnus_cone(2), GroupDescriptor::free_group(2), 4).pass);
  CHECK(axioms_check(magnus_cone(3), GroupDescriptor::free_group(3), 3).pass);
}

TEST_CASE("constant oracle fails the axiom check at a mutually inverse pair") {
  CheckReport rep = axioms_check(constant_cone(GroupDescriptor::free_group(2), 1),
                                 GroupDescriptor::free_group(2), 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.counterexample["violation"] == "antisymmetry");
}

TEST_CASE("tararin sign cones") {
  ConePtr pp = tararin_signs_cone({1, 1}, false);
  // Highest nonzero index decides: x1^-1 x2 is positive under (+,+).
  CHECK(pp->sign(Element{T({-1, 1})}) == 1);
  CHECK(pp->sign(Element{T({-1})}) == -1);

  ConePtr pm = tararin_signs_cone({1, -1}, false);
  CHECK(pm->sign(Element{T({0, 1})}) == -1);

  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs;
      for (int i = 0; i < n; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
      CHECK(axioms_check(tararin_signs_cone(signs, false), GroupDescriptor::tararin(n), 4).pass);
    }
  }
}

TEST_CASE("tararin sign cones pass the axiom check at radius 6") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> signs;
      for (int i = 0; i < n; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
      CHECK(axioms_check(tararin_signs_cone(signs, false), GroupDescriptor::tararin(n), 6).pass);
    }
  }
}

TEST_CASE("tararin sign cones have distinct fingerprints") {
  GroupDescriptor g = GroupDescriptor::tararin(3);
  std::vector<Element> b = ball_of(g, 2);
  std::vector<Fingerprint> fps;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<int> signs;
    for (int i = 0; i < 3; ++i) signs.push_back((mask >> i) & 1u ? 1 : -1);
    fps.push_back(fingerprint_over(tararin_signs_cone(signs, false), b, 2));
  }
  for (std::size_t i = 0; i < fps.size(); ++i) {
    for (std::size_t j = i + 1; j < fps.size(); ++j) CHECK_FALSE(fps[i] == fps[j]);
  }
}

TEST_CASE("z2 cone requires independent functionals") {
  CHECK_THROWS_AS(z2_cone({1, 2}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(z2_cone({0, 0}, {1, 0}), std::invalid_argument);
  ConePtr c = z2_cone({1, 0}, {0, 1});
  CHECK(c->sign(Element{ZVector{2, -5}}) == 1);
  CHECK(c->sign(Element{ZVector{0, -5}}) == -1);
}

TEST_CASE("klein cone evaluations and conjugation") {
  ConePtr k = klein_cone({1, 0}, {0, 1}, 1);
  CHECK(k->sign(Element{KleinElement{0, 0, 1}}) == 1);   // z-part decides
  CHECK(k->sign(Element{KleinElement{5, 9, -2}}) == -1);
  CHECK(k->sign(Element{KleinElement{1, 0, 0}}) == 1);   // Z^2 cone decides
  CHECK(axioms_check(k, GroupDescriptor::klein(), 4).pass);

  // Conjugating by z flips the Z^2 part: fingerprints match KleinCone(R^-1, +).
  GroupDescriptor g = GroupDescriptor::klein();
  std::vector<Element> b = ball_of(g, 3);
  ConePtr conj_by_z = conjugate_cone(Element{KleinElement{0, 0, 1}}, k);
  ConePtr flipped = klein_cone({-1, 0}, {0, -1}, 1);
  CHECK(fingerprint_over(conj_by_z, b, 3) == fingerprint_over(flipped, b, 3));
}

TEST_CASE("conjugation composes contravariantly into products") {
  // conjugate by g then by h equals conjugate by hg.
  GroupDescriptor g2 = GroupDescriptor::free_group(2);
  std::vector<Element> b = ball_of(g2, 4);
  Element g = Element{W("a1 b1")};
  Element h = Element{W("b-1 a1")};
  ConePtr base = magnus_cone(2);
  ConePtr two_step = conjugate_cone(h, conjugate_cone(g, base));
  ConePtr one_step = conjugate_cone(mul(g2, h, g), base);
  CHECK(fingerprint_over(two_step, b, 4) == fingerprint_over(one_step, b, 4));

  ConePtr ident = conjugate_cone(Element{Word()}, base);
  CHECK(fingerprint_over(ident, b, 4) == fingerprint_over(base, b, 4));
}

TEST_CASE("opposite cone") {
  ConePtr m2 = magnus_cone(2);
  ConePtr opp = opposite_cone(m2);
  CHECK(axioms_check(opp, GroupDescriptor::free_group(2), 3).pass);
  std::vector<Element> b = ball_of(GroupDescriptor::free_group(2), 3);
  CHECK(fingerprint_over(opp, b, 3) == fingerprint_over(m2, b, 3).complement());
  CHECK(fingerprint_over(opposite_cone(opp), b, 3) == fingerprint_over(m2, b, 3));
}

TEST_CASE("lexicographic direct-sum cone") {
  auto shortlex = [](const Word& a, const Word& b) { return Word::shortlex_less(a, b); };
  auto positives = [](const Word&, std::int64_t v) { return v > 0 ? 1 : -1; };
  ConePtr c = lex_direct_sum_cone(shortlex, positives);

  CHECK(c->sign(Element{lamp({{Word(), 1}})}) == 1);
  // Supported on {e, a}: decided at e.
  CHECK(c->sign(Element{lamp({{Word(), -2}, {W("a1"), 5}})}) == -1);
  // Equal below the least support point: signs agree.
  CHECK(c->sign(Element{lamp({{Word(), 1}, {W("b1"), -7}})}) ==
        c->sign(Element{lamp({{Word(), 1}, {W("b1"), 4}})}));
  CHECK_THROWS_AS(c->sign(Element{lamp({{Word(), 1}}, W("a1"))}), std::domain_error);
  CHECK_THROWS_AS(c->sign(Element{lamp({})}), std::domain_error);
}

TEST_CASE("ses-lex cone splits by the quotient") {
  // Klein as kernel Z^2 with quotient <z>.
  ConePtr k = klein_cone({1, 0}, {0, 1}, 1);
  CHECK(k->sign(Element{KleinElement{0, 0, 1}}) == 1);
  CHECK(k->sign(Element{KleinElement{-3, 2, 0}}) == -1);

  // F_2 over Z via h, kernel ordered by Magnus.
  ConePtr f2 = hom_ses_cone({1, 0}, magnus_cone(2), int_lex_cone({ZVector{1}}));
  CHECK(f2->sign(Element{W("a1")}) == 1);
  CHECK(f2->sign(Element{W("b-1")}) == -1);          // kernel case
  CHECK(f2->sign(Element{W("a1 b1 a-1 b1")}) == 1);  // kernel case, x_1 x_0
  CHECK(f2->sign(Element{W("b-2 a1")}) == 1);        // quotient case
  CHECK(axioms_check(f2, GroupDescriptor::free_group(2), 4).pass);
}

TEST_CASE("relative convex extension over ker h") {
  ConePtr kernel_cone = rs_pullback_cone(int_indexed_magnus_cone());
  ConePtr ext = relconvex_ext_cone(GroupDescriptor::free_group(2), kernel_cone,
                                   hom_positive_Q({1, 0}));
  CHECK(ext->sign(Element{W("b1")}) == kernel_cone->sign(Element{W("b1")}));
  CHECK(ext->sign(Element{W("a1 b-5")}) == 1);
  CHECK(ext->sign(Element{W("a-1")}) == -1);
  CHECK(axioms_check(ext, GroupDescriptor::free_group(2), 4).pass);
}

TEST_CASE("free factor oracle") {
  SubsetOracle q = free_factor_Q(3, {1, 2});

  CHECK(q.in_subgroup(Element{W("a1 b-2")}));
  CHECK_FALSE(q.in_subgroup(Element{W("c1")}));
  CHECK(q.q_sign(Element{W("c1")}) == 1);
  CHECK(q.q_sign(Element{W("c-1")}) == -1);

  // Membership in Q is invariant under multiplication by factor elements.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    Word g = oracles::random_word(rng, 3, 5);
    if (q.in_subgroup(Element{g})) continue;
    Word c = oracles::random_word(rng, 2, 4);
    int s = q.q_sign(Element{g});
    Word cg = c * g;
    Word gc = g * c;
    if (!q.in_subgroup(Element{cg})) CHECK(q.q_sign(Element{cg}) == s);
    if (!q.in_subgroup(Element{gc})) CHECK(q.q_sign(Element{gc}) == s);
  }

  // A rank-1 factor case that defeats first-syllable comparisons: a^-2 b and
  // its inverse land on opposite sides.
  SubsetOracle q1 = free_factor_Q(2, {1});
  CHECK(q1.q_sign(Element{W("a-2 b1")}) == 1);
  CHECK(q1.q_sign(Element{W("b-1 a2")}) == -1);

  CHECK_THROWS_AS(free_factor_Q(3, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(free_factor_Q(3, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("q conditions hold for the shipped oracles") {
  CHECK(q_conditions_check(hom_positive_Q({1, 0}), GroupDescriptor::free_group(2), 4).pass);
  CHECK(q_conditions_check(free_factor_Q(3, {1, 2}), GroupDescriptor::free_group(3), 3).pass);
  // Factors that are not a basis prefix.
  CHECK(q_conditions_check(free_factor_Q(3, {2}), GroupDescriptor::free_group(3), 3).pass);
  CHECK(q_conditions_check(free_factor_Q(3, {1, 3}), GroupDescriptor::free_group(3), 3).pass);
}

TEST_CASE("free factor oracle over an integer-indexed alphabet") {
  // The ambient alphabet used by the kernel rewriting has ids in Z; sample
  // short words over a window around the factor {1, 5}.
  SubsetOracle q = free_factor_Q(std::nullopt, {1, 5});
  std::vector<Word> letters;
  for (std::int32_t id : {-1, 0, 1, 2, 5}) {
    for (int e : {1, -1}) letters.push_back(Word::generator(id, e));
  }
  std::vector<Word> sample = {Word()};
  sample.insert(sample.end(), letters.begin(), letters.end());
  for (const Word& l1 : letters) {
    for (const Word& l2 : letters) {
      Word w = l1 * l2;
      if (w.length() == 2) sample.push_back(w);
    }
  }
  // Trichotomy and inversion antisymmetry.
  for (const Word& w : sample) {
    if (w.empty() || q.in_subgroup(Element{w})) continue;
    CHECK(q.q_sign(Element{w}) + q.q_sign(Element{w.inverse()}) == 0);
  }
  // Q Q <= Q and A Q A <= Q on sampled pairs.
  for (const Word& g : sample) {
    if (g.empty() || q.in_subgroup(Element{g}) || q.q_sign(Element{g}) != 1) continue;
    for (const Word& h : sample) {
      if (h.empty() || q.in_subgroup(Element{h}) || q.q_sign(Element{h}) != 1) continue;
      Word p = g * h;
      if (p.empty()) continue;
      CHECK_FALSE(q.in_subgroup(Element{p}));
      CHECK(q.q_sign(Element{p}) == 1);
    }
    for (std::int32_t aid : {1, 5}) {
      for (int e : {1, -1}) {
        Word c = Word::generator(aid, e);
        CHECK(q.q_sign(Element{c * g}) == 1);
        CHECK(q.q_sign(Element{g * c}) == 1);
        CHECK(q.q_sign(Element{c * g * c.inverse()}) == 1);
      }
    }
  }
}

TEST_CASE("free factor extension satisfies the cone laws on random long words") {
  // Random sampling past the enumerated balls.
  SubsetOracle q = free_factor_Q(3, {1, 2});
  ConePtr ext = relconvex_ext_cone(GroupDescriptor::free_group(3), magnus_cone(2), q);
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    Word g = oracles::random_word(rng, 3, 10);
    Word h = oracles::random_word(rng, 3, 10);
    if (!g.empty()) {
      CHECK(ext->sign(Element{g}) + ext->sign(Element{g.inverse()}) == 0);
    }
    if (!g.empty() && !h.empty() && !(g * h).empty()) {
      if (ext->sign(Element{g}) == 1 && ext->sign(Element{h}) == 1) {
        CHECK(ext->sign(Element{g * h}) == 1);
      }
    }
  }
}

TEST_CASE("q conditions reject the all-positive oracle") {
  SubsetOracle bad;
  bad.in_subgroup = [](const Element& e) { return is_identity(e); };
  bad.q_sign = [](const Element&) { return 1; };
  bad.descriptor["kind"] = "opaque";
  CheckReport rep = q_conditions_check(bad, GroupDescriptor::free_group(2), 2);
  CHECK_FALSE(rep.pass);
  CHECK(rep.counterexample["violation"] == "trichotomy");
}

TEST_CASE("relconvex extension over a free factor") {
  SubsetOracle q = free_factor_Q(3, {1, 2});
  ConePtr ext = relconvex_ext_cone(GroupDescriptor::free_group(3), magnus_cone(2), q);
  CHECK(ext->sign(Element{W("a1")}) == 1);   // factor case
  CHECK(ext->sign(Element{W("c1")}) == 1);   // coset case
  CHECK(axioms_check(ext, GroupDescriptor::free_group(3), 3).pass);

  // F_2 is convex in the extension.
  SubsetOracle membership = free_factor_Q(3, {1, 2});
  CHECK(convexity_check(membership.in_subgroup, ext, GroupDescriptor::free_group(3), 3).pass);

  // Conjugation by factor elements fixes Q, so it commutes with extension.
  GroupDescriptor f3 = GroupDescriptor::free_group(3);
  std::vector<Element> b = ball_of(f3, 3);
  for (const Word& cw : {W("a1"), W("b-1"), W("a1 b1")}) {
    ConePtr lhs = conjugate_cone(Element{cw}, ext);
    ConePtr rhs = relconvex_ext_cone(f3, conjugate_cone(Element{cw}, magnus_cone(2)),
                                     free_factor_Q(3, {1, 2}));
    CHECK(fingerprint_over(lhs, b, 3) == fingerprint_over(rhs, b, 3));
  }
}

TEST_CASE("convexity checks") {
  // Z^2 is convex in every Klein cone.
  auto in_z2 = [](const Element& e) { return std::get<KleinElement>(e).k == 0; };
  CHECK(convexity_check(in_z2, klein_cone({1, 0}, {0, 1}, 1), GroupDescriptor::klein(), 3).pass);
  CHECK(convexity_check(in_z2, klein_cone({2, 3}, {1, 2}, -1), GroupDescriptor::klein(), 3).pass);

  // The trivial subgroup is convex vacuously at radius 1.
  auto trivial = [](const Element& e) { return is_identity(e); };
  CHECK(convexity_check(trivial, magnus_cone(2), GroupDescriptor::free_group(2), 1).pass);
}

TEST_CASE("conradian probe finds witnesses at N = 2") {
  CHECK(conradian_probe(magnus_cone(2), GroupDescriptor::free_group(2), 3, 2).pass);
  CHECK(conradian_probe(tararin_signs_cone({1, 1, 1}, false), GroupDescriptor::tararin(3), 3, 2)
            .pass);
  CHECK(conradian_probe(klein_cone({1, 0}, {0, 1}, 1), GroupDescriptor::klein(), 3, 2).pass);
  CHECK(conradian_probe(klein_cone({1, 2}, {0, -1}, -1), GroupDescriptor::klein(), 3, 2).pass);
}

TEST_CASE("wreath R_A cone") {
  SetDescriptor A = SetDescriptor::finite({Word()});
  ConePtr ra_in = wreath_ra_cone(A, 1);
  CHECK(ra_in->sign(Element{lamp({{Word(), 1}})}) == 1);

  SetDescriptor empty = SetDescriptor::finite({});
  ConePtr ra_out = wreath_ra_cone(empty, 1);
  CHECK(ra_out->sign(Element{lamp({{Word(), 1}})}) == -1);

  // Adding points above the support minimum does not change the sign.
  SetDescriptor bigger = SetDescriptor::finite({Word(), W("a1")});
  ConePtr ra_big = wreath_ra_cone(bigger, 1);
  Element f = Element{lamp({{Word(), 3}, {W("b-1"), 2}})};
  CHECK(ra_in->sign(f) == ra_big->sign(f));

  CHECK_THROWS_AS(ra_in->sign(Element{lamp({{Word(), 1}}, W("a1"))}), std::domain_error);
}

TEST_CASE("R_A conjugation equivariance") {
  // h R_A h^{-1} = R_{hA} pointwise on the base ball.
  std::vector<Element> b = base_ball(2);
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
      ConePtr lhs = conjugate_cone(Element{th}, wreath_ra_cone(A, 1));
      ConePtr rhs = wreath_ra_cone(shift_action(h, A), 1);
      CHECK(fingerprint_over(lhs, b, 2) == fingerprint_over(rhs, b, 2));
    }
  }
}

TEST_CASE("phi cone") {
  SetDescriptor A = SetDescriptor::finite({Word()});
  ConePtr phi = phi_cone(A);
  // Quotient case: sign((0, a)) is the Magnus sign of a.
  WreathElement a;
  a.top = W("a1");
  CHECK(phi->sign(Element{a}) == 1);
  // Base case: sign((delta_e, e)) = +1 iff e in A.
  CHECK(phi->sign(Element{lamp({{Word(), 1}})}) == 1);
  ConePtr phi_empty = phi_cone(SetDescriptor::finite({}));
  CHECK(phi_empty->sign(Element{lamp({{Word(), 1}})}) == -1);

  CHECK(axioms_check(phi, GroupDescriptor::wreath(), 3).pass);
}

TEST_CASE("phi transports shifts to conjugations exactly") {
  GroupDescriptor wr = GroupDescriptor::wreath();
  std::vector<Element> b = ball_of(wr, 2);
  std::vector<SetDescriptor> sets = {
      SetDescriptor::finite({W("a1")}),
      SetDescriptor::finite({Word(), W("b1")}),
      SetDescriptor::cofinite({}),
  };
  for (const SetDescriptor& A : sets) {
    for (const Word& h : ball(2, 3)) {
      WreathElement th;
      th.top = h;
      ConePtr lhs = conjugate_cone(Element{th}, phi_cone(A));
      ConePtr rhs = phi_cone(shift_action(h, A));
      CHECK(fingerprint_over(lhs, b, 2) == fingerprint_over(rhs, b, 2));
    }
  }
}

TEST_CASE("generic ses-lex cone agrees with the phi instance") {
  SetDescriptor A = SetDescriptor::finite({Word(), W("a1")});
  ConePtr generic = ses_lex_cone(
      GroupDescriptor::wreath(), GroupDescriptor::free_group(2),
      [](const Element& e) { return Element{wreath_quotient(std::get<WreathElement>(e))}; },
      wreath_ra_cone(A, 1), magnus_cone(2));
  ConePtr phi = phi_cone(A);
  for (const Element& e : ball_of(GroupDescriptor::wreath(), 2)) {
    if (is_identity(e)) continue;
    CHECK(generic->sign(e) == phi->sign(e));
  }
}

TEST_CASE("cone json round trips") {
  std::vector<ConePtr> cones = {
      magnus_cone(2),
      tararin_signs_cone({1, -1}, false),
      z2_cone({1, 2}, {0, 1}),
      klein_cone({1, 0}, {0, 1}, -1),
      opposite_cone(magnus_cone(2)),
      conjugate_cone(Element{W("a1 b-1")}, magnus_cone(2)),
      wreath_ra_cone(SetDescriptor::finite({Word()}), 1),
      phi_cone(SetDescriptor::finite({Word(), W("a1")})),
      hom_ses_cone({1, 0}, magnus_cone(2), int_lex_cone({ZVector{1}})),
      cover_ses_cone(3, GroupDescriptor::klein(), magnus_cone(3),
                     klein_cone({1, 0}, {0, 1}, 1)),
      relconvex_ext_cone(GroupDescriptor::free_group(3), magnus_cone(2),
                         free_factor_Q(3, {1, 2})),
      constant_cone(GroupDescriptor::free_group(2), 1),
  };
  for (const ConePtr& c : cones) {
    ConePtr back = cone_from_json(cone_to_json(c));
    REQUIRE(back->group() == c->group());
    GroupDescriptor g = c->group();
    std::int32_t r = g.family == Family::Wreath ? 2 : 3;
    // R_A only evaluates on the base subgroup.
    bool base_only = cone_to_json(c)["kind"] == "wreath_ra";
    std::vector<Element> b = base_only ? base_ball(r) : ball_of(g, r);
    CHECK(fingerprint_over(back, b, r) == fingerprint_over(c, b, r));
  }
}
