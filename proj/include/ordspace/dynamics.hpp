#pragma once

// The conjugacy action on cones as a dynamical system over ball
// fingerprints: orbit exploration, the finite-orbit probe, and the
// T_infinity sign-sequence dictionary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordspace/cones.hpp"
#include "ordspace/groups.hpp"

namespace ordspace {

// Bit pattern of a cone on B_r minus the identity, in ball order.
struct Fingerprint {
  std::int32_t radius = 0;
  std::vector<std::uint8_t> bits;  // 1 iff cone-positive

  std::string hex() const;  // "r3:..." with bits packed 4 per digit, MSB first
  Fingerprint complement() const;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  bool operator<(const Fingerprint& o) const;
};

Fingerprint fingerprint(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r);
Fingerprint fingerprint_over(const ConePtr& cone, const std::vector<Element>& elements,
                             std::int32_t r);

struct OrbitGraph {
  enum class Status { Closed, FrontierLimited };

  struct Edge {
    std::size_t from;
    std::string generator;  // e.g. "x" or "x^-1"
    std::size_t to;
  };

  std::vector<Fingerprint> nodes;
  std::vector<Edge> edges;
  Status status = Status::Closed;

  nlohmann::ordered_json to_json() const;
  std::string to_dot() const;
};

// Breadth-first closure of the fingerprint orbit under conjugation by the
// declared generators and their inverses.  Nodes are identified by their
// radius-r fingerprints, so distinct cones may collide; the result is a
// radius-r approximation.
OrbitGraph orbit_explore(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r,
                         std::size_t max_nodes);

// finite(k) iff the orbit closes with k nodes at radius r; nullopt otherwise.
std::optional<std::size_t> finite_orbit_probe(const ConePtr& cone, const GroupDescriptor& group,
                                              std::int32_t r, std::size_t max_nodes);

// --- T_infinity / eventual-equality dictionary ------------------------------

// Truncated sign sequence; bits[i] = 1 iff x_{i+1} is positive.
using EpsSequence = std::vector<std::uint8_t>;

ConePtr tinf_encode(const EpsSequence& eps);
EpsSequence tinf_decode(const ConePtr& cone, std::int32_t m);

// Conjugation by x_j flips bit j-1 (1-based); x_1 acts trivially.  Throws
// when j-1 exceeds the truncation length.
EpsSequence tinf_action(std::int32_t j, const EpsSequence& eps);

// Agreement at every position > k (1-based positions).
bool e0_related(const EpsSequence& a, const EpsSequence& b, std::int32_t k);

}  // namespace ordspace
