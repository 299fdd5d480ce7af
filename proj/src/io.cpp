#include "fintop/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fintop/error.hpp"

namespace fintop {

namespace {

void require_keys(const Json& j, const char* what, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const auto* a : allowed) known = known || key == a;
    if (!known) throw InputError(std::string(what) + " has unknown key '" + key + "'");
  }
}

const Json& array_at(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  const auto& a = j.at(key);
  if (!a.is_array()) throw InputError(std::string("'") + key + "' must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_of(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) out.push_back(string_of(s, what));
  return out;
}

std::size_t index_of(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string set_label(const FiniteSpace& space, const PointSet& a) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(a)) {
    out += (first ? "" : ",") + space.name(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    std::string msg = e.what();
    throw InputError("malformed JSON in '" + path + "': " + msg.substr(msg.find(']') + 2));
  }
}

FiniteSpace parse_space(const Json& j) {
  require_keys(j, "space", {"points", "order", "opens"});
  auto points = strings_of(array_at(j, "points"), "point identifier");
  const bool has_order = j.contains("order"), has_opens = j.contains("opens");
  if (has_order == has_opens) throw InputError("space needs exactly one of 'order' or 'opens'");

  if (has_order) {
    std::vector<NamedPair> pairs;
    for (const auto& p : array_at(j, "order")) {
      auto pair = strings_of(p, "order pair");
      if (pair.size() != 2) throw InputError("order pairs must have two entries");
      pairs.emplace_back(pair[0], pair[1]);
    }
    return FiniteSpace::from_preorder(std::move(points), pairs);
  }
  OpenFamily family{points, {{}, points}};
  for (const auto& u : array_at(j, "opens")) family.opens.push_back(strings_of(u, "open set"));
  return space_from_open_sets(family);
}

Decomposition parse_decomposition(const Json& j) {
  require_keys(j, "decomposition", {"space", "blocks", "labels"});
  if (!j.contains("space")) throw InputError("missing key 'space'");
  auto space = parse_space(j.at("space"));
  Partition blocks;
  for (const auto& b : array_at(j, "blocks")) {
    PointSet block(space.size());
    for (const auto& name : strings_of(b, "block member")) {
      const auto x = space.index_of(name);
      if (block.test(x)) throw InputError("block lists '" + name + "' twice");
      block.set(x);
    }
    blocks.blocks.push_back(std::move(block));
  }
  blocks.validate(space.size());

  std::optional<std::vector<std::string>> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (!l.is_object()) throw InputError("'labels' must be an object keyed by block index");
    std::vector<std::optional<std::string>> slots(blocks.size());
    for (const auto& [key, value] : l.items()) {
      std::size_t b = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), b);
      if (ec != std::errc() || ptr != key.data() + key.size() || b >= blocks.size())
        throw InputError("label key '" + key + "' is not a block index");
      slots[b] = string_of(value, "label");
    }
    labels.emplace();
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (!slots[b]) throw InputError("block " + std::to_string(b) + " has no label");
      labels->push_back(*slots[b]);
    }
  }
  return Decomposition(std::move(space), std::move(blocks), std::move(labels));
}

CombinatorialComplex parse_complex(const Json& j) {
  require_keys(j, "complex", {"maximal_faces", "cells", "faces", "values"});
  if (j.contains("maximal_faces")) {
    if (j.contains("cells") || j.contains("faces"))
      throw InputError("complex needs either 'maximal_faces' or 'cells' and 'faces'");
    std::vector<std::vector<std::int64_t>> maximal;
    for (const auto& f : array_at(j, "maximal_faces")) {
      if (!f.is_array()) throw InputError("maximal faces must be arrays of integers");
      std::vector<std::int64_t> face;
      for (const auto& v : f) {
        if (!v.is_number_integer()) throw InputError("vertex labels must be integers");
        face.push_back(v.get<std::int64_t>());
      }
      maximal.push_back(std::move(face));
    }
    return simplicial_from_maximal_faces(maximal);
  }
  std::vector<Cell> cells;
  for (const auto& c : array_at(j, "cells")) {
    require_keys(c, "cell", {"id", "dim"});
    if (!c.contains("id") || !c.contains("dim")) throw InputError("cells need 'id' and 'dim'");
    if (!c.at("dim").is_number_integer()) throw InputError("cell dimension must be an integer");
    cells.push_back({string_of(c.at("id"), "cell id"), c.at("dim").get<int>(), std::nullopt});
  }
  std::vector<NamedPair> faces;
  if (j.contains("faces"))
    for (const auto& p : array_at(j, "faces")) {
      auto pair = strings_of(p, "face pair");
      if (pair.size() != 2) throw InputError("face pairs must have two entries");
      faces.emplace_back(pair[0], pair[1]);
    }
  return CombinatorialComplex(std::move(cells), faces);
}

ScalarField parse_mesh(const Json& j) {
  require_keys(j, "mesh", {"vertices", "triangles", "values"});
  if (!j.contains("vertices")) throw InputError("missing key 'vertices'");
  const auto n = index_of(j.at("vertices"), "'vertices'");
  std::vector<std::array<std::size_t, 3>> triangles;
  for (const auto& t : array_at(j, "triangles")) {
    if (!t.is_array() || t.size() != 3) throw InputError("triangles must have three vertices");
    triangles.push_back({index_of(t[0], "triangle vertex"), index_of(t[1], "triangle vertex"),
                         index_of(t[2], "triangle vertex")});
  }
  std::vector<double> values;
  for (const auto& v : array_at(j, "values")) {
    if (!v.is_number()) throw InputError("values must be numbers");
    values.push_back(v.get<double>());
  }
  return ScalarField::from_triangles(n, triangles, std::move(values));
}

Json set_json(const FiniteSpace& space, const PointSet& a) {
  Json out = Json::array();
  for (auto x : members(a)) out.push_back(space.name(x));
  return out;
}

Json partition_json(const FiniteSpace& space, const Partition& p) {
  Json out = Json::array();
  for (const auto& b : p.blocks) out.push_back(set_json(space, b));
  return out;
}

Json space_json(const FiniteSpace& space) {
  Json order = Json::array();
  for (const auto& [x, y] : space.relation_pairs()) order.push_back({space.name(x), space.name(y)});
  return {{"points", space.names()}, {"order", order}};
}

Json mesh_json(const ScalarField& field) {
  Json triangles = Json::array();
  for (const auto& t : field.triangles()) triangles.push_back({t[0], t[1], t[2]});
  return {{"vertices", field.vertex_count()}, {"triangles", triangles}, {"values", field.values()}};
}

Json classification_json(const FiniteSpace& space, const PointClassification& c) {
  return {{"closed", set_json(space, c.closed)},
          {"proper_nonclosed", set_json(space, c.proper_nonclosed)},
          {"nonproper", set_json(space, c.nonproper)},
          {"recurrent", set_json(space, c.recurrent)},
          {"quasi_recurrent", set_json(space, c.quasi_recurrent)},
          {"maximal", set_json(space, c.maximal)}};
}

Json elements_json(const FiniteSpace& space, const ElementPartition& e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    out.push_back({{"members", set_json(space, e.blocks.blocks[i])},
                   {"kind", std::string(to_string(e.kinds[i]))}});
  return out;
}

Json hypergraph_json(const FiniteSpace& space, const MorseHyperGraph& hg) {
  Json vertices = Json::array();
  for (const auto& v : hg.vertices) vertices.push_back(set_json(space, v));
  Json edges = Json::array();
  for (const auto& [index, m] : hg.hyper_edges)
    edges.push_back({{"index_set", index}, {"members", set_json(space, m)}});
  return {{"vertices", vertices}, {"edges", edges}};
}

Json multigraph_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"vertex_count", g.vertex_count}, {"edges", edges}};
}

Json quotient_check_json(const QuotientCheck& check) {
  Json parts = Json::array();
  for (const auto& p : check.assignment) {
    switch (p.kind) {
      case GraphPart::Kind::vertex:
        parts.push_back({{"vertex", p.vertex}});
        break;
      case GraphPart::Kind::hyper_edge:
        parts.push_back({{"hyper_edge", p.index_set}});
        break;
      case GraphPart::Kind::split:
        parts.push_back({{"split", true}});
        break;
    }
  }
  return {{"ok", check.ok}, {"assignment", parts}};
}

Json reeb_graph_json(const ReebGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes)
    nodes.push_back({{"vertex", n.vertex}, {"value", n.value}, {"component", n.component}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}, {"betti1", betti1(g)}};
}

Json verify_json(const VerifyReport& report) {
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) {
      Json entry{{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}};
      if (c.first_failure) entry["first_failure"] = *c.first_failure;
      checks.push_back(std::move(entry));
    }
    Json stats = Json::object();
    for (const auto& [k, v] : s.stats) stats[k] = v;
    suites.push_back({{"name", s.name},
                      {"samples", s.samples},
                      {"passed", s.passed()},
                      {"checks", checks},
                      {"stats", stats}});
  }
  return {{"command", "verify"},
          {"seed", report.seed},
          {"trials", report.trials},
          {"generator", "mt19937_64 seeded per trial with splitmix64(splitmix64(seed) ^ stream)"},
          {"passed", report.passed()},
          {"suites", suites}};
}

Json saturation_analog_json(const SaturationAnalog& a) {
  const auto& s = a.decomposition.space();
  Json out{{"space", space_json(s)},
           {"blocks", partition_json(s, a.decomposition.partition())},
           {"invariant", a.invariance.invariant}};
  if (a.invariance.witness_point)
    out["invariance_witness"] = {{"point", s.name(*a.invariance.witness_point)},
                                 {"minimal_open", set_json(s, *a.invariance.witness_open)},
                                 {"saturation", set_json(s, *a.invariance.witness_saturation)}};
  Json family = Json::array();
  for (const auto& u : a.family.sets) family.push_back(set_json(s, u));
  out["saturated_opens"] = family;
  out["saturated_opens_form_topology"] = a.family.is_topology;
  out["saturated_opens_within_topology"] = a.family.within_topology;
  if (a.family.non_open_witness) out["non_open_witness"] = set_json(s, *a.family.non_open_witness);
  if (a.family.intersection_witness)
    out["intersection_witness"] = {set_json(s, a.family.intersection_witness->first),
                                   set_json(s, a.family.intersection_witness->second)};
  out["projection_matches_quotient_topology"] = a.projection_matches_quotient;
  return out;
}

Json leaf_square_json(const LeafSquareAnalog& a) {
  const auto& s = a.space;
  Json out{{"cells", s.size()},
           {"band", set_json(s, a.band)},
           {"element_count", a.elements.blocks.size()},
           {"classification", classification_json(s, a.classification)},
           {"hypergraph", hypergraph_json(s, a.hypergraph)}};
  Json family = Json::array();
  for (const auto& m : a.closure_family) family.push_back(set_json(s, m));
  out["closure_family"] = family;
  if (a.closure_hypergraph.ok())
    out["closure_hypergraph"] = hypergraph_json(s, *a.closure_hypergraph.graph);
  out["quotient_of_elements"] = a.elements_check.ok;
  out["claimed_elements"] = partition_json(s, a.claimed_elements);
  out["quotient_of_claimed_elements"] = a.claimed_check.ok;
  out["divergent"] = a.divergent;
  out["note"] = a.note;
  return out;
}

std::string hypergraph_dot(const FiniteSpace& space, const MorseHyperGraph& hg) {
  std::ostringstream out;
  out << "graph morse {\n";
  for (std::size_t i = 0; i < hg.vertices.size(); ++i)
    out << "  v" << i << " [shape=box, label=\"X" << i << " "
        << escape_dot(set_label(space, hg.vertices[i])) << "\"];\n";
  std::size_t h = 0;
  for (const auto& [index, m] : hg.hyper_edges) {
    std::string name = "H{";
    for (std::size_t k = 0; k < index.size(); ++k) name += (k ? "," : "") + std::to_string(index[k]);
    out << "  h" << h << " [shape=diamond, label=\"" << name << "} "
        << escape_dot(set_label(space, m)) << "\"];\n";
    for (auto i : index) out << "  h" << h << " -- v" << i << ";\n";
    ++h;
  }
  out << "}\n";
  return out.str();
}

std::string space_dot(const FiniteSpace& space) {
  const auto q = t0_quotient(space);
  const auto& t = q.target;
  std::ostringstream out;
  out << "digraph space {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < t.size(); ++x)
    out << "  p" << x << " [label=\"" << escape_dot(t.name(x)) << "\"];\n";
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (x == y || !t.leq(x, y)) continue;
      bool covers = true;
      for (std::size_t z = 0; z < t.size() && covers; ++z)
        if (z != x && z != y && t.leq(x, z) && t.leq(z, y)) covers = false;
      if (covers) out << "  p" << x << " -> p" << y << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string reeb_dot(const ReebGraph& g) {
  std::ostringstream out;
  out << "graph reeb {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  n" << i << " [label=\"v" << g.nodes[i].vertex << "@"
        << format_double(g.nodes[i].value) << "\"];\n";
  for (const auto& [a, b] : g.edges) out << "  n" << a << " -- n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace fintop
