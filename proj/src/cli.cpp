#include "fintop/cli.hpp"

#include <fstream>
#include <ostream>

#include "fintop/error.hpp"
#include "fintop/io.hpp"

namespace fintop {

namespace {

struct Outcome {
  Json report;
  bool ok = true;
  std::optional<std::string> dot;
  /// Raised after the report is written.
  std::optional<NotInvariant> deferred;
};

std::string default_format(const std::string& sub) {
  if (sub == "decomp") return "decomp";
  if (sub == "cell") return "complex";
  if (sub == "reeb") return "mesh";
  return "space";
}

Json load_input(const RunConfig& config) {
  if (!config.input) throw InputError(config.subcommand + " needs --input");
  return read_json_file(*config.input);
}

Outcome run_space_command(const RunConfig& config) {
  const auto space = parse_space(load_input(config));
  Outcome o;
  o.report = {{"command", config.subcommand}, {"space", space_json(space)}};
  if (config.subcommand == "classify") {
    o.report["classification"] = classification_json(space, classify_points(space));
    o.dot = space_dot(space);
  } else if (config.subcommand == "elements") {
    const auto elements = abstract_elements(space);
    const auto q = quotient_space(space, elements.blocks);
    o.report["elements"] = elements_json(space, elements);
    o.report["element_space"] = space_json(q.target);
    o.dot = space_dot(q.target);
  } else {
    const auto hg = morse_hypergraph(space);
    const auto check = quotient_check(hg, abstract_elements(space));
    o.report["hypergraph"] = hypergraph_json(space, hg);
    o.report["associated_graph"] = multigraph_json(associated_graph(hg));
    o.report["quotient_check"] = quotient_check_json(check);
    o.ok = check.ok;
    o.dot = hypergraph_dot(space, hg);
  }
  return o;
}

Outcome run_decomp(const RunConfig& config) {
  const auto f = parse_decomposition(load_input(config));
  const auto& s = f.space();
  Outcome o;
  auto& r = o.report;
  r = {{"command", "decomp"},
       {"space", space_json(s)},
       {"blocks", partition_json(s, f.partition())}};

  const auto inv = is_invariant(f);
  r["invariant"] = inv.invariant;
  if (!inv.invariant)
    r["invariance_witness"] = {{"point", s.name(*inv.witness_point)},
                               {"minimal_open", set_json(s, *inv.witness_open)},
                               {"saturation", set_json(s, *inv.witness_saturation)}};
  const auto eq = invariance_equivalence_check(f);
  r["invariance_equivalence"] = {{"closures_of_saturated_sets_saturated", eq.closures_saturated},
                                 {"agrees", eq.agrees()},
                                 {"exhaustive", eq.exhaustive},
                                 {"unions_checked", eq.unions_checked}};
  if (eq.witness) r["invariance_equivalence"]["witness"] = set_json(s, *eq.witness);
  const auto family = saturated_family(f);
  Json sets = Json::array();
  for (const auto& u : family.sets) sets.push_back(set_json(s, u));
  r["saturated_opens"] = {{"sets", sets},
                          {"is_topology", family.is_topology},
                          {"within_topology", family.within_topology}};
  r["class_decomposition"] = partition_json(s, class_decomposition(f).partition());
  const auto ds = decomposition_space(f);
  r["decomposition_space"] = space_json(ds.quotient.target);
  const auto c = classify_elements(f);
  r["classification"] = {{"closed", set_json(s, c.closed)},
                         {"proper_nonclosed", set_json(s, c.proper_nonclosed)},
                         {"nonproper", set_json(s, c.nonproper)},
                         {"recurrent", set_json(s, c.recurrent)},
                         {"quasi_recurrent", set_json(s, c.quasi_recurrent)},
                         {"maximal", set_json(s, c.maximal)}};
  o.ok = eq.agrees();

  if (!inv.invariant) {
    try {
      require_invariant(f);
    } catch (const NotInvariant& e) {
      o.deferred = e;
    }
    return o;
  }
  r["canonical_bijection"] = {{"holds", *ds.bijection_holds},
                              {"saturated_opens", ds.saturated_open_count},
                              {"quotient_opens", ds.quotient_open_count}};
  auto element_json = [&](const WeakElementPartition& w) {
    Json out = Json::array();
    for (std::size_t i = 0; i < w.blocks.size(); ++i)
      out.push_back({{"members", set_json(s, w.blocks.blocks[i])},
                     {"kind", std::string(to_string(w.kinds[i]))}});
    return out;
  };
  r["elements"] = element_json(abstract_elements_decomp(f));
  r["weak_elements"] = element_json(abstract_weak_elements(f));
  const auto hg = morse_hypergraph_decomp(f);
  r["hypergraph"] = hypergraph_json(s, hg);
  r["associated_graph"] = multigraph_json(associated_graph(hg));
  const auto theorem = theorem_quotient_check_decomp(f);
  r["quotient_check"] = {{"strong", theorem.strong_ok}, {"weak", theorem.weak_ok}};
  o.ok = o.ok && *ds.bijection_holds && theorem.ok();
  o.dot = hypergraph_dot(s, hg);
  return o;
}

Outcome run_cell(const RunConfig& config) {
  const auto k = parse_complex(load_input(config));
  const auto report = verify_prop_cell(k);
  Json prec = Json::array();
  for (const auto& [x, y] : report.complex.prec) prec.push_back({x, y});
  Outcome o;
  o.report = {{"command", "cell"},
              {"cells", k.size()},
              {"euler_characteristic", euler_characteristic(k)},
              {"abstract_cell_complex",
               {{"cells", report.complex.cells}, {"prec", prec}, {"dim", report.complex.dim}}},
              {"singleton_elements", report.singleton_elements},
              {"axiom_holds", report.axiom_holds},
              {"heights_match_dims", report.heights_match_dims
                                         ? Json(*report.heights_match_dims)
                                         : Json(nullptr)},
              {"passed", report.passed()}};
  o.ok = report.passed();
  o.dot = space_dot(face_space(k));
  return o;
}

Outcome run_reeb(const RunConfig& config, const std::string& format) {
  const auto input = load_input(config);
  std::optional<ScalarField> parsed;
  if (format == "mesh") {
    parsed = parse_mesh(input);
  } else {
    if (!input.is_object() || !input.contains("values"))
      throw InputError("a complex used as a scalar field needs 'values'");
    std::vector<double> values;
    for (const auto& v : input.at("values")) {
      if (!v.is_number()) throw InputError("values must be numbers");
      values.push_back(v.get<double>());
    }
    parsed = ScalarField::from_complex(parse_complex(input), std::move(values));
  }
  const auto& field = *parsed;
  const auto graph = reeb_graph(field);
  const bool agrees = same_reeb_graph(graph, reeb_bruteforce(field));
  const auto weak = reeb_weak_elements(field);

  Json atoms = Json::array();
  for (const auto& a : weak.atoms) {
    Json atom{{"at_vertex", a.at_vertex}, {"level", a.level}, {"label", a.label}};
    if (a.vertex) atom["vertex"] = *a.vertex;
    atoms.push_back(std::move(atom));
  }
  Outcome o;
  o.report = {{"command", "reeb"},
              {"reeb_graph", reeb_graph_json(graph)},
              {"bruteforce_agrees", agrees},
              {"weak_elements",
               {{"atoms", atoms},
                {"groups", weak.groups},
                {"node_groups", weak.node_groups},
                {"edge_groups", weak.edge_groups},
                {"passed", weak.passed}}}};
  o.ok = agrees && weak.passed;
  o.dot = reeb_dot(graph);
  return o;
}

Outcome run_verify(const RunConfig& config) {
  if (config.input) throw InputError("verify does not read an input file");
  if (config.trials == 0) throw InputError("--trials must be positive");
  const auto report = verify_all({config.seed, config.trials, config.workers});
  Outcome o;
  o.report = verify_json(report);
  o.report["analogs"] = {{"chain3", saturation_analog_json(chain3_saturation_analog())},
                         {"two_chains", saturation_analog_json(two_chain_saturation_analog())},
                         {"leaf_square", leaf_square_json(leaf_square_analog())}};
  o.ok = report.passed();
  return o;
}

Outcome dispatch(const RunConfig& config) {
  const auto& sub = config.subcommand;
  const auto format = config.format.value_or(default_format(sub));
  if (format != "space" && format != "decomp" && format != "complex" && format != "mesh")
    throw InputError("unknown format '" + format + "'");
  const bool fits = sub == "verify" || (sub == "reeb" && (format == "mesh" || format == "complex")) ||
                    format == default_format(sub);
  if (!fits) throw InputError(sub + " does not read format '" + format + "'");

  if (sub == "classify" || sub == "elements" || sub == "morse") return run_space_command(config);
  if (sub == "decomp") return run_decomp(config);
  if (sub == "cell") return run_cell(config);
  if (sub == "reeb") return run_reeb(config, format);
  if (sub == "verify") return run_verify(config);
  throw InputError("unknown subcommand '" + sub + "'");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write '" + path + "'");
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    auto o = dispatch(config);
    if (config.dot_path) {
      if (!o.dot) throw InputError(config.subcommand + " has no graph to export");
      write_file(*config.dot_path, *o.dot);
    }
    const auto text = o.report.dump(2) + "\n";
    if (config.json_path)
      write_file(*config.json_path, text);
    else
      out << text;
    if (o.deferred) throw *o.deferred;
    return o.ok ? 0 : 1;
  } catch (const InternalError& e) {
    err << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << one_line(e.what()) << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: input: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return 1;
  }
}

}  // namespace fintop
