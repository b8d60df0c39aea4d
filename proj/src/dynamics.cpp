#include "ordspace/dynamics.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace ordspace {

std::string Fingerprint::hex() const {
  static const char* digits = "0123456789abcdef";
  std::ostringstream os;
  os << 'r' << radius << ':';
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j]) nibble |= 1;
    }
    os << digits[nibble];
  }
  return os.str();
}

Fingerprint Fingerprint::complement() const {
  Fingerprint out = *this;
  for (auto& b : out.bits) b = b ? 0 : 1;
  return out;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  if (radius != o.radius) return radius < o.radius;
  return bits < o.bits;
}

Fingerprint fingerprint_over(const ConePtr& cone, const std::vector<Element>& elements,
                             std::int32_t r) {
  Fingerprint fp;
  fp.radius = r;
  fp.bits.reserve(elements.size());
  for (const Element& e : elements) {
    if (is_identity(e)) continue;
    fp.bits.push_back(cone->sign(e) == 1 ? 1 : 0);
  }
  return fp;
}

Fingerprint fingerprint(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r) {
  return fingerprint_over(cone, ball_of(group, r), r);
}

nlohmann::ordered_json OrbitGraph::to_json() const {
  nlohmann::ordered_json j;
  j["status"] = status == Status::Closed ? "closed" : "frontier-limited";
  nlohmann::ordered_json ns = nlohmann::ordered_json::array();
  for (const Fingerprint& f : nodes) ns.push_back(f.hex());
  j["nodes"] = ns;
  nlohmann::ordered_json es = nlohmann::ordered_json::array();
  for (const Edge& e : edges) {
    es.push_back({{"from", e.from}, {"generator", e.generator}, {"to", e.to}});
  }
  j["edges"] = es;
  return j;
}

std::string OrbitGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph orbit {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << nodes[i].hex() << "\"];\n";
  }
  for (const Edge& e : edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.generator << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

OrbitGraph orbit_explore(const ConePtr& cone, const GroupDescriptor& group, std::int32_t r,
                         std::size_t max_nodes) {
  std::vector<Element> b = ball_of(group, r);
  std::vector<Element> gens = generators(group);
  std::vector<std::string> names = generator_names(group);
  std::vector<std::pair<Element, std::string>> steps;
  for (std::size_t i = 0; i < gens.size(); ++i) steps.emplace_back(gens[i], names[i]);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    steps.emplace_back(inv(group, gens[i]), names[i] + "^-1");
  }

  OrbitGraph graph;
  std::map<Fingerprint, std::size_t> seen;
  std::vector<ConePtr> representative;

  Fingerprint root = fingerprint_over(cone, b, r);
  seen[root] = 0;
  graph.nodes.push_back(root);
  representative.push_back(cone);

  std::size_t next = 0;
  while (next < graph.nodes.size()) {
    if (graph.nodes.size() >= max_nodes) {
      graph.status = OrbitGraph::Status::FrontierLimited;
      break;
    }
    std::size_t current = next++;
    ConePtr rep = representative[current];
    for (const auto& [g, name] : steps) {
      ConePtr conjugated = conjugate_cone(g, rep);
      Fingerprint fp = fingerprint_over(conjugated, b, r);
      auto it = seen.find(fp);
      std::size_t target;
      if (it == seen.end()) {
        target = graph.nodes.size();
        seen[fp] = target;
        graph.nodes.push_back(fp);
        representative.push_back(conjugated);
      } else {
        target = it->second;
      }
      graph.edges.push_back({current, name, target});
    }
  }
  return graph;
}

std::optional<std::size_t> finite_orbit_probe(const ConePtr& cone, const GroupDescriptor& group,
                                              std::int32_t r, std::size_t max_nodes) {
  OrbitGraph g = orbit_explore(cone, group, r, max_nodes);
  if (g.status == OrbitGraph::Status::Closed) return g.nodes.size();
  return std::nullopt;
}

ConePtr tinf_encode(const EpsSequence& eps) {
  std::vector<int> signs;
  signs.reserve(eps.size());
  for (auto b : eps) signs.push_back(b ? 1 : -1);
  return tararin_signs_cone(std::move(signs), true);
}

EpsSequence tinf_decode(const ConePtr& cone, std::int32_t m) {
  EpsSequence eps;
  eps.reserve(static_cast<std::size_t>(m));
  for (std::int32_t i = 1; i <= m; ++i) {
    TararinElement x;
    x.exp.assign(static_cast<std::size_t>(i), 0);
    x.exp.back() = 1;
    eps.push_back(cone->sign(Element{x}) == 1 ? 1 : 0);
  }
  return eps;
}

EpsSequence tinf_action(std::int32_t j, const EpsSequence& eps) {
  if (j < 1) throw std::invalid_argument("generator index must be positive");
  if (j == 1) return eps;  // x_1 acts trivially on the signs
  if (static_cast<std::size_t>(j - 1) > eps.size()) {
    throw std::out_of_range("truncation error: flipped position exceeds the stored length");
  }
  EpsSequence out = eps;
  out[static_cast<std::size_t>(j - 2)] ^= 1;
  return out;
}

bool e0_related(const EpsSequence& a, const EpsSequence& b, std::int32_t k) {
  if (a.size() != b.size()) throw std::invalid_argument("truncation lengths differ");
  for (std::size_t i = static_cast<std::size_t>(k); i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace ordspace
