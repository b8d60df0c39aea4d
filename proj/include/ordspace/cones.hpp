#pragma once

// Positive cones as total sign oracles on the nontrivial elements of a
// group, built as composition trees.  Evaluation is pure; descriptors are
// immutable and freely shareable.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ordspace/groups.hpp"
#include "ordspace/sets.hpp"

namespace ordspace {

class ConeNode {
 public:
  virtual ~ConeNode() = default;

  // +1 or -1; throws std::domain_error on the identity.
  int sign(const Element& g) const;

  virtual GroupDescriptor group() const = 0;
  virtual nlohmann::ordered_json to_json() const = 0;

 protected:
  virtual int do_sign(const Element& g) const = 0;
};

using ConePtr = std::shared_ptr<const ConeNode>;

// Membership oracle for a subgroup C together with a sign oracle on the
// complement: q_sign(g) = +1 iff g in Q, for g outside C.
struct SubsetOracle {
  std::function<bool(const Element&)> in_subgroup;
  std::function<int(const Element&)> q_sign;
  nlohmann::ordered_json descriptor;  // serialized form, or {"kind":"opaque"}
};

// --- constructions ----------------------------------------------------------

// Sign of the least grlex monomial of the Magnus expansion; a bi-ordering.
ConePtr magnus_cone(std::optional<std::int32_t> rank);

// The 2^n orders of T_n (or finitely many declared signs of T_infinity, +1
// beyond the stored prefix): the highest nonzero exponent decides.
ConePtr tararin_signs_cone(std::vector<int> signs, bool infinite);

// On Z^k: the first functional with a nonzero value decides.  Rows must have
// full rank k.
ConePtr int_lex_cone(std::vector<ZVector> rows);
ConePtr z2_cone(const ZVector& u, const ZVector& w);

// Lexicographic cone on (Z x Z) x| <z>: nonzero z-exponent decides by
// z_sign, otherwise the Z^2 cone (u, w) decides.
ConePtr klein_cone(const ZVector& u, const ZVector& w, int z_sign);

ConePtr opposite_cone(ConePtr inner);

// Cone of g P g^{-1}: evaluates the inner cone at g^{-1} h g.
ConePtr conjugate_cone(const Element& g, ConePtr inner);

// Constant-sign oracle; violates the cone axioms.  Testing fixture.
ConePtr constant_cone(GroupDescriptor group, int sign);

// Lexicographic direct-sum cone on the base subgroup B of the wreath
// product: the factor at the index-least support point decides.  Evaluating
// at an element with nontrivial top part throws.
ConePtr lex_direct_sum_cone(std::function<bool(const Word&, const Word&)> index_less,
                            std::function<int(const Word&, std::int64_t)> factor_sign);

// lex_direct_sum_cone with the Magnus order on indices and factor cones
// P_x = base_sign if x in A, -base_sign otherwise.
ConePtr wreath_ra_cone(SetDescriptor A, int base_sign);

// R_A extended over the wreath quotient by the Magnus bi-order of F_2.
ConePtr phi_cone(SetDescriptor A);

// Generic short-exact-sequence lexicographic cone.
ConePtr ses_lex_cone(GroupDescriptor source, GroupDescriptor target,
                     std::function<Element(const Element&)> quotient_map,
                     ConePtr kernel_cone, ConePtr quotient_cone);

// Serializable instance for h: F_rank -> Z given by generator images.
ConePtr hom_ses_cone(std::vector<std::int64_t> images, ConePtr kernel_cone,
                     ConePtr quotient_cone);

// Serializable instance for the canonical surjection F_cover_rank -> target.
ConePtr cover_ses_cone(std::int32_t cover_rank, GroupDescriptor target,
                       ConePtr kernel_cone, ConePtr quotient_cone);

// P u Q: sign(g) = P(g) for g in C, q_sign(g) otherwise.
ConePtr relconvex_ext_cone(GroupDescriptor ambient, ConePtr subgroup_cone, SubsetOracle Q);

// Applies an id relabeling to word letters before evaluating the inner cone.
ConePtr relabel_cone(GroupDescriptor outer, std::function<std::int32_t(std::int32_t)> relabel,
                     ConePtr inner);

// Evaluates a cone on Reidemeister-Schreier basis words at elements of
// ker(h) in F_2.
ConePtr rs_pullback_cone(ConePtr inner_on_x_words);

// Magnus cone on integer-indexed free words (relabels ids by zigzag_id).
ConePtr int_indexed_magnus_cone();

// --- subset oracles ---------------------------------------------------------

// Q for the sub-basis free factor <a_i : i in factor_ids> of the free group
// of the given rank (nullopt: integer-indexed alphabet).  Throws when the
// ids do not name a sub-basis.
SubsetOracle free_factor_Q(std::optional<std::int32_t> ambient_rank,
                           std::vector<std::int32_t> factor_ids);

// Q = h^{-1}(positives) for h: F -> Z with the given generator images;
// C = ker h.
SubsetOracle hom_positive_Q(std::vector<std::int64_t> images);

// --- serialization ----------------------------------------------------------

nlohmann::ordered_json cone_to_json(const ConePtr& cone);
ConePtr cone_from_json(const nlohmann::json& j);

}  // namespace ordspace
