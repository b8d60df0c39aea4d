#pragma once

// Ball-truncated verification of the defining conditions: cone axioms,
// subset-oracle conditions, the Conradian inequality, convexity of a
// subgroup, bi-invariance, and the malnormality probe.  Checks quantify over
// an enumerated ball; products are evaluated wherever they land, since the
// oracles are total.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordspace/cones.hpp"
#include "ordspace/groups.hpp"

namespace ordspace {

struct CheckReport {
  std::string check;
  bool pass = true;
  std::int32_t radius = 0;
  nlohmann::ordered_json counterexample;  // present iff the check failed
  nlohmann::ordered_json stats;           // sizes, bounds; deterministic

  nlohmann::ordered_json to_json() const;
};

// Antisymmetry under inversion and closure of positives under products, over
// all of B_r; stops at the first counterexample.
CheckReport axioms_check(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r);
// Same, over an explicit element list (closed enough under products to be
// meaningful); used for subgroup-restricted checks.
CheckReport axioms_check_over(const ConePtr& cone, const GroupDescriptor& group,
                              const std::vector<Element>& elements, std::int32_t r);

// (1) QQ <= Q, (2) CQC <= Q, (3) Q u Q^{-1} u C partitions; quantifiers over
// B_r.  Since C is a subgroup, (2) is checked as CQ <= Q and QC <= Q.
CheckReport q_conditions_check(const SubsetOracle& Q, const GroupDescriptor& group,
                               std::int32_t r);

// For every pair of cone-positive g, h in B_r, searches n <= N with
// g < h g^n; reports pairs with no witness.  A refutation up to N only.
CheckReport conradian_probe(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r,
                            std::int32_t N);

// g, h in C, f in B_r with g < f < h implies f in C.
CheckReport convexity_check(const std::function<bool(const Element&)>& in_C,
                            const ConePtr& cone, const GroupDescriptor& group, std::int32_t r);

// sign(g p g^{-1}) = sign(p) for all p, g in B_r.
CheckReport biinvariance_check(const ConePtr& cone, const GroupDescriptor& group,
                               std::int32_t r);

// Searches h in B_r outside C whose conjugation maps every ball element of C
// into C; such h are candidates against condition (*).  Refutation evidence
// only.
CheckReport malnormality_probe(const std::function<bool(const Element&)>& in_C,
                               const GroupDescriptor& group, std::int32_t r);

}  // namespace ordspace
