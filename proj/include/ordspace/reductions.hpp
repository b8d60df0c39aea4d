#pragma once

// Executable reduction witnesses: each carries a forward map on cones (or
// sets) and a conjugator-transport rule, verified at desk scale by the
// equivariance suite.  The converse directions are undecidable at finite
// radius; bounded refutation searches stand in for them.

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordspace/checks.hpp"
#include "ordspace/cones.hpp"
#include "ordspace/dynamics.hpp"
#include "ordspace/sets.hpp"

namespace ordspace {

// Ascending positive integers with pairwise-distinct differences, so that
// |(C + l) n C| <= 1 for every l != 0.  Grown by the doubling schedule
// c_1 = 1, c_2 = 2, c_{i+1} = 2 c_i + 1, whose new differences all exceed
// the old ones; every prefix is re-verified exhaustively.
std::vector<std::int64_t> sidon_prefix(std::int32_t k);

using SourceObject = std::variant<ConePtr, SetDescriptor>;

struct ReductionWitness {
  std::string name;
  GroupDescriptor source_group;
  GroupDescriptor target_group;
  std::function<ConePtr(const SourceObject&)> forward;
  std::function<Element(const Element&)> transport;
  std::vector<SourceObject> objects;     // sample objects, deterministic order
  std::vector<Element> conjugators;      // source conjugators, identity first
  std::int32_t fingerprint_radius = 2;
};

// g . object: conjugation for cones, the left shift for sets.
SourceObject act_on_object(const ReductionWitness& w, const Element& g, const SourceObject& obj);

struct SuiteReport {
  std::string witness;
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::int32_t radius = 0;
  nlohmann::ordered_json failed_samples;

  bool pass() const { return failures == 0; }
  nlohmann::ordered_json to_json() const;
};

// Checks fingerprint(f(g . x)) = fingerprint(transport(g) f(x) transport(g)^{-1})
// over the witness's (object, conjugator) pairs, up to max_samples of them.
SuiteReport equivariance_suite(const ReductionWitness& w, std::size_t max_samples,
                               std::int32_t radius);

// --- witness registry --------------------------------------------------------

// Names: prop3.1, prop3.2, prop3.3, prop3.4, cor3.6, prop4.2, and the
// deliberately broken negative-control.
std::vector<std::string> witness_names();
ReductionWitness make_witness(const std::string& name, std::uint64_t seed);

// --- individual constructions (exposed for direct use and tests) ------------

// P |-> P u Q over the ambient group; validates Q via q_conditions_check at
// the given radius and rejects the construction on failure.
ReductionWitness relconvex_reduction(GroupDescriptor ambient, SubsetOracle Q,
                                     GroupDescriptor source_group, std::int32_t check_radius);

// F_2 as a free factor of F_n.
ReductionWitness free_factor_reduction(std::int32_t n, std::uint64_t seed);

// Rank-k truncation of the embedding of F_infinity into F_2 through the
// Sidon-indexed basis of ker h.
ReductionWitness finf_to_f2_reduction(std::int32_t k, std::uint64_t seed);

// Q |-> q^{-1}(Q) u P for a short exact sequence with G-invariant kernel
// cone P; rejects when the bi-invariance probe fails.
ReductionWitness quotient_reduction_f2_over_z(std::uint64_t seed);

// Covers of the supported families by finite-rank free groups.
ReductionWitness finf_cover_reduction(GroupDescriptor target, std::uint64_t seed);

// A |-> phi(A) with transport h |-> (0, h).
ReductionWitness universal_reduction(std::uint64_t seed);

// --- refutation probes -------------------------------------------------------

// True when no conjugator of generator-length <= conj_len makes the two
// cones fingerprint-equal at the given radius.
bool cone_conjugacy_refuted(const ConePtr& x, const ConePtr& y, const GroupDescriptor& group,
                            std::int32_t conj_len, std::int32_t fp_radius);

// True when no shift of length <= shift_len matches A's B_2 membership
// pattern to A2's.
bool shift_inequivalent_on_b2(const SetDescriptor& A, const SetDescriptor& A2,
                              std::int32_t shift_len);

}  // namespace ordspace
