// Command-line front end: evaluate cone signs, run ball-truncated checks,
// explore conjugacy orbits, and drive the reduction equivariance suites.
//
// Exit codes: 0 pass, 1 counterexample/refutation, 2 usage or input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordspace/checks.hpp"
#include "ordspace/cones.hpp"
#include "ordspace/dynamics.hpp"
#include "ordspace/groups.hpp"
#include "ordspace/reductions.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using namespace ordspace;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::int32_t radius_cap(const GroupDescriptor& g) {
  if (const char* env = std::getenv("ORDSPACE_MAX_RADIUS")) {
    return static_cast<std::int32_t>(std::strtol(env, nullptr, 10));
  }
  return g.family == Family::Wreath ? 4 : 6;
}

void enforce_radius(const GroupDescriptor& g, std::int32_t r) {
  std::int32_t cap = radius_cap(g);
  if (r > cap) {
    throw std::invalid_argument("radius " + std::to_string(r) + " exceeds the hard cap " +
                                std::to_string(cap) + " (override with ORDSPACE_MAX_RADIUS)");
  }
}

// Atomic write: temp file then rename.
void write_file(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + tmp);
    os << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

void emit(const ordered_json& j, const std::string& out_path) {
  std::string text = j.dump(2) + "\n";
  if (!out_path.empty()) {
    write_file(out_path, text);
  } else {
    std::cout << text;
  }
}

Element parse_element(const GroupDescriptor& g, const std::string& text) {
  if (g.family == Family::Free && !text.empty() && (text[0] == 'e' || std::isalpha(text[0]))) {
    return Word::parse(text);
  }
  if ((g.family == Family::Tararin || g.family == Family::TararinInf) && !text.empty() &&
      text[0] == 'x') {
    // Tokens "x2" or "x2^-3", whitespace-separated.
    TararinElement acc;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      std::size_t caret = tok.find('^');
      std::int32_t index = std::stoi(tok.substr(1, caret - 1));
      std::int64_t exp = caret == std::string::npos ? 1 : std::stoll(tok.substr(caret + 1));
      if (index < 1) throw std::invalid_argument("bad generator token: " + tok);
      TararinElement step;
      step.exp.assign(static_cast<std::size_t>(index), 0);
      step.exp.back() = exp;
      step.trim();
      acc = tararin_mul(acc, step);
    }
    return acc;
  }
  return element_from_json(g, json::parse(text));
}

struct SubgroupSpec {
  std::function<bool(const Element&)> membership;
  GroupDescriptor group;
};

SubgroupSpec parse_subgroup(const json& j, std::optional<GroupDescriptor> group_hint) {
  std::string kind = j.at("kind").get<std::string>();
  SubgroupSpec s;
  if (kind == "free_factor") {
    std::int32_t rank = j.at("ambient_rank").get<std::int32_t>();
    std::vector<std::int32_t> factor = j.at("factor").get<std::vector<std::int32_t>>();
    SubsetOracle q = free_factor_Q(rank, factor);
    s.membership = q.in_subgroup;
    s.group = GroupDescriptor::free_group(rank);
    return s;
  }
  if (kind == "kernel") {
    std::vector<std::int64_t> images = j.at("images").get<std::vector<std::int64_t>>();
    SubsetOracle q = hom_positive_Q(images);
    s.membership = q.in_subgroup;
    s.group = GroupDescriptor::free_group(static_cast<std::int32_t>(images.size()));
    return s;
  }
  if (kind == "klein_z2") {
    s.membership = [](const Element& e) { return std::get<KleinElement>(e).k == 0; };
    s.group = GroupDescriptor::klein();
    return s;
  }
  if (kind == "axis") {
    // <e_i> inside Z^k.
    std::int32_t k = j.at("k").get<std::int32_t>();
    std::size_t index = j.at("index").get<std::size_t>();
    s.membership = [index](const Element& e) {
      const auto& v = std::get<ZVector>(e);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != index - 1 && v[i] != 0) return false;
      }
      return true;
    };
    s.group = GroupDescriptor::free_abelian(k);
    return s;
  }
  if (kind == "trivial" || kind == "whole") {
    if (!group_hint) throw std::invalid_argument("subgroup kind needs --group");
    bool whole = kind == "whole";
    s.membership = [whole](const Element& e) { return whole || is_identity(e); };
    s.group = *group_hint;
    return s;
  }
  throw std::invalid_argument("unknown subgroup kind: " + kind);
}

int cmd_sign(const std::string& cone_json, const std::string& element_text,
             const std::string& out_path) {
  ConePtr cone = cone_from_json(json::parse(cone_json));
  Element e = parse_element(cone->group(), element_text);
  int s;
  try {
    s = cone->sign(e);
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  std::string text = s > 0 ? "+1" : "-1";
  std::cout << text << "\n";
  if (!out_path.empty()) write_file(out_path, text + "\n");
  return kExitPass;
}

int cmd_check(const std::string& check_name, const std::string& cone_json,
              const std::string& subgroup_json, std::optional<std::string> group_json,
              std::int32_t radius, std::int32_t bound, const std::string& out_path) {
  std::optional<GroupDescriptor> group_hint;
  if (group_json) group_hint = group_from_json(json::parse(*group_json));

  CheckReport rep;
  if (check_name == "axioms" || check_name == "conradian" || check_name == "biinvariance" ||
      check_name == "convexity") {
    ConePtr cone = cone_from_json(json::parse(cone_json));
    GroupDescriptor group = group_hint.value_or(cone->group());
    enforce_radius(group, radius);
    if (check_name == "axioms") {
      rep = axioms_check(cone, group, radius);
    } else if (check_name == "conradian") {
      rep = conradian_probe(cone, group, radius, bound);
    } else if (check_name == "biinvariance") {
      rep = biinvariance_check(cone, group, radius);
    } else {
      SubgroupSpec sub = parse_subgroup(json::parse(subgroup_json), group_hint);
      rep = convexity_check(sub.membership, cone, group, radius);
    }
  } else if (check_name == "qconds") {
    json qj = json::parse(cone_json);
    std::string kind = qj.at("kind").get<std::string>();
    SubsetOracle q = kind == "free_factor"
                         ? free_factor_Q(qj.at("ambient_rank").get<std::int32_t>(),
                                         qj.at("factor").get<std::vector<std::int32_t>>())
                         : hom_positive_Q(qj.at("images").get<std::vector<std::int64_t>>());
    GroupDescriptor group = group_hint.value_or(
        kind == "free_factor"
            ? GroupDescriptor::free_group(qj.at("ambient_rank").get<std::int32_t>())
            : GroupDescriptor::free_group(static_cast<std::int32_t>(qj.at("images").size())));
    enforce_radius(group, radius);
    rep = q_conditions_check(q, group, radius);
  } else if (check_name == "malnormal") {
    SubgroupSpec sub = parse_subgroup(json::parse(subgroup_json), group_hint);
    GroupDescriptor group = group_hint.value_or(sub.group);
    enforce_radius(group, radius);
    rep = malnormality_probe(sub.membership, group, radius);
  } else {
    throw std::invalid_argument("unknown check: " + check_name);
  }

  emit(rep.to_json(), out_path);
  return rep.pass ? kExitPass : kExitCounterexample;
}

// Orbit of a truncated sign sequence of T_infinity under generator flips.
int tinf_orbit(const ConePtr& cone, std::int32_t m, const std::string& out_path,
               const std::string& format) {
  EpsSequence root = tinf_decode(cone, m);
  std::vector<EpsSequence> nodes = {root};
  std::vector<OrbitGraph::Edge> edges;
  std::size_t next = 0;
  while (next < nodes.size()) {
    EpsSequence cur = nodes[next];
    for (std::int32_t j = 2; j <= m + 1; ++j) {
      EpsSequence img = tinf_action(j, cur);
      std::size_t to = 0;
      for (; to < nodes.size(); ++to) {
        if (nodes[to] == img) break;
      }
      if (to == nodes.size()) nodes.push_back(img);
      edges.push_back({next, "x" + std::to_string(j), to});
    }
    ++next;
  }
  ordered_json j;
  j["status"] = "closed";
  ordered_json ns = ordered_json::array();
  for (const auto& eps : nodes) {
    std::string bits;
    for (auto b : eps) bits += b ? '1' : '0';
    ns.push_back(bits);
  }
  j["nodes"] = ns;
  ordered_json es = ordered_json::array();
  for (const auto& e : edges) {
    es.push_back({{"from", e.from}, {"generator", e.generator}, {"to", e.to}});
  }
  j["edges"] = es;
  std::cout << "closed, " << nodes.size() << (nodes.size() == 1 ? " node" : " nodes") << "\n";
  if (!out_path.empty() && format != "dot") emit(j, out_path);
  return kExitPass;
}

int cmd_orbit(const std::string& cone_json, std::optional<std::string> group_json,
              std::int32_t radius, std::size_t max_nodes, const std::string& out_path,
              const std::string& format) {
  ConePtr cone = cone_from_json(json::parse(cone_json));
  GroupDescriptor group =
      group_json ? group_from_json(json::parse(*group_json)) : cone->group();
  if (group.family == Family::TararinInf) {
    return tinf_orbit(cone, radius, out_path, format);
  }
  enforce_radius(group, radius);
  OrbitGraph g = orbit_explore(cone, group, radius, max_nodes);
  std::string summary =
      std::string(g.status == OrbitGraph::Status::Closed ? "closed" : "frontier-limited") +
      ", " + std::to_string(g.nodes.size()) + (g.nodes.size() == 1 ? " node" : " nodes");
  std::cout << summary << "\n";
  if (!out_path.empty()) {
    if (format == "dot") {
      write_file(out_path, g.to_dot());
    } else if (format == "text") {
      write_file(out_path, summary + "\n");
    } else {
      emit(g.to_json(), out_path);
    }
  }
  return kExitPass;
}

int cmd_reduce(const std::string& witness, std::size_t samples, std::int32_t radius,
               std::uint64_t seed, const std::string& out_path) {
  ReductionWitness w = make_witness(witness, seed);
  std::int32_t r = radius > 0 ? radius : w.fingerprint_radius;
  enforce_radius(w.target_group, r);
  SuiteReport rep = equivariance_suite(w, samples, r);
  ordered_json j = rep.to_json();
  j["seed"] = seed;
  emit(j, out_path);
  return rep.pass() ? kExitPass : kExitCounterexample;
}

int cmd_tararin_enumerate(std::int32_t n, std::int32_t radius, const std::string& out_path) {
  if (n < 1 || n > 16) throw std::invalid_argument("n must lie in 1..16");
  GroupDescriptor group = GroupDescriptor::tararin(n);
  enforce_radius(group, radius);
  std::vector<Element> b = ball_of(group, radius);
  ordered_json list = ordered_json::array();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> signs;
    std::string tag;
    for (std::int32_t i = 0; i < n; ++i) {
      bool pos = (mask >> i) & 1u;
      signs.push_back(pos ? 1 : -1);
      tag += pos ? '+' : '-';
    }
    ConePtr cone = tararin_signs_cone(signs, false);
    Fingerprint fp = fingerprint_over(cone, b, radius);
    std::cout << tag << " " << fp.hex() << "\n";
    list.push_back({{"signs", tag}, {"fingerprint", fp.hex()}});
  }
  if (!out_path.empty()) emit(list, out_path);
  return kExitPass;
}

int cmd_sidon(std::int32_t k, const std::string& out_path) {
  std::vector<std::int64_t> c = sidon_prefix(k);
  std::string line;
  for (std::size_t i = 0; i < c.size(); ++i) {
    line += (i ? " " : "") + std::to_string(c[i]);
  }
  std::cout << line << "\n";
  if (!out_path.empty()) write_file(out_path, line + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordspace: positive cones, conjugacy dynamics, and reduction witnesses"};
  app.require_subcommand(1);

  std::string cone_json, set_json, subgroup_json, element_text, out_path, check_name, witness;
  std::string format = "json";
  std::optional<std::string> group_json;
  std::int32_t radius = 3;
  std::int32_t bound = 2;
  std::size_t max_nodes = 64;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  std::int32_t n = 2;
  std::int32_t k = 5;

  CLI::App* sign = app.add_subcommand("sign", "evaluate a cone sign at an element");
  sign->add_option("--cone", cone_json)->required();
  sign->add_option("--element", element_text)->required();
  sign->add_option("--out", out_path);

  CLI::App* check = app.add_subcommand("check", "run a ball-truncated checker");
  check->add_option("--check", check_name)->required();
  check->add_option("--cone", cone_json);
  check->add_option("--subgroup", subgroup_json);
  check->add_option("--group", group_json);
  check->add_option("--radius", radius);
  check->add_option("--bound", bound);
  check->add_option("--out", out_path);

  CLI::App* orbit = app.add_subcommand("orbit", "explore a conjugacy orbit of fingerprints");
  orbit->add_option("--cone", cone_json)->required();
  orbit->add_option("--group", group_json);
  orbit->add_option("--radius", radius);
  orbit->add_option("--bound", max_nodes);
  orbit->add_option("--out", out_path);
  orbit->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));

  CLI::App* reduce = app.add_subcommand("reduce", "run an equivariance suite");
  reduce->add_option("--witness", witness)->required();
  reduce->add_option("--samples", samples);
  reduce->add_option("--radius", radius)->default_val(0);
  reduce->add_option("--seed", seed);
  reduce->add_option("--out", out_path);

  CLI::App* tenum = app.add_subcommand("tararin-enumerate", "list the 2^n sign cones");
  tenum->add_option("--n", n)->required();
  tenum->add_option("--radius", radius)->default_val(2);
  tenum->add_option("--out", out_path);

  CLI::App* sidon = app.add_subcommand("sidon", "print a difference-distinct prefix");
  sidon->add_option("--k", k)->required();
  sidon->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sign->parsed()) return cmd_sign(cone_json, element_text, out_path);
    if (check->parsed()) {
      return cmd_check(check_name, cone_json, subgroup_json, group_json, radius, bound, out_path);
    }
    if (orbit->parsed()) {
      return cmd_orbit(cone_json, group_json, radius, max_nodes, out_path, format);
    }
    if (reduce->parsed()) return cmd_reduce(witness, samples, radius, seed, out_path);
    if (tenum->parsed()) return cmd_tararin_enumerate(n, radius, out_path);
    if (sidon->parsed()) return cmd_sidon(k, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
