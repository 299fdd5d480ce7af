#include "fintop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <thread>

#include "fintop/analogs.hpp"
#include "fintop/cellcomplex.hpp"
#include "fintop/decomp.hpp"
#include "fintop/error.hpp"
#include "fintop/generate.hpp"
#include "fintop/random.hpp"
#include "fintop/recurrence.hpp"
#include "fintop/reeb.hpp"

namespace fintop {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckTally& c) { return c.failed == 0; });
}

const CheckTally* SuiteReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::size_t SuiteReport::stat(const std::string& name) const {
  for (const auto& [key, value] : stats)
    if (key == name) return value;
  return 0;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
}

namespace {

/// Outcomes of one trial, in the order they were recorded.
class Recorder {
public:
  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    entries_.push_back({name, ok, detail, false});
  }
  void count(const std::string& stat, std::size_t n = 1) {
    entries_.push_back({stat, true, {}, true, n});
  }

  struct Entry {
    std::string name;
    bool ok;
    std::string detail;
    bool is_stat;
    std::size_t amount = 0;
  };
  const std::vector<Entry>& entries() const { return entries_; }

private:
  std::vector<Entry> entries_;
};

using Trial = std::function<void(Rng&, Recorder&, std::size_t)>;

void merge(SuiteReport& report, const Recorder& rec, const std::string& where) {
  for (const auto& e : rec.entries()) {
    if (e.is_stat) {
      auto it = std::find_if(report.stats.begin(), report.stats.end(),
                             [&](const auto& s) { return s.first == e.name; });
      if (it == report.stats.end())
        report.stats.emplace_back(e.name, e.amount);
      else
        it->second += e.amount;
      continue;
    }
    auto it = std::find_if(report.checks.begin(), report.checks.end(),
                           [&](const CheckTally& c) { return c.name == e.name; });
    if (it == report.checks.end()) {
      report.checks.push_back({e.name, 0, 0, std::nullopt});
      it = std::prev(report.checks.end());
    }
    ++it->checked;
    if (!e.ok) {
      ++it->failed;
      if (!it->first_failure)
        it->first_failure = where + (e.detail.empty() ? "" : ": " + e.detail);
    }
  }
}

SuiteReport run_suite(const std::string& name, std::uint64_t suite_id, std::uint64_t seed,
                      std::size_t samples, unsigned workers, const Trial& trial) {
  std::vector<Recorder> results(samples);
  auto run_one = [&](std::size_t t) {
    Rng rng(derive_seed(seed, suite_id << 32 | t));
    try {
      trial(rng, results[t], t);
    } catch (const Error& e) {
      results[t].check("no_error", false, std::string(e.kind()) + ": " + e.what());
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(samples, 1))));
  if (workers == 1) {
    for (std::size_t t = 0; t < samples; ++t) run_one(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < samples; t += workers) run_one(t);
      });
    for (auto& th : pool) th.join();
  }

  SuiteReport report;
  report.name = name;
  report.samples = samples;
  for (std::size_t t = 0; t < samples; ++t) merge(report, results[t], "trial " + std::to_string(t));
  return report;
}

bool saturated_by(const Partition& p, const PointSet& a) {
  for (const auto& b : p.blocks)
    if (b.intersects(a) && !b.is_subset_of(a)) return false;
  return true;
}

// Longest strict chain ending at each point of a poset, by plain recursion.
int chain_height(const FiniteSpace& s, std::size_t x, std::vector<int>& memo) {
  if (memo[x] >= 0) return memo[x];
  int best = 0;
  for (std::size_t y = 0; y < s.size(); ++y)
    if (y != x && s.leq(y, x) && !s.leq(x, y)) best = std::max(best, chain_height(s, y, memo) + 1);
  return memo[x] = best;
}

bool valid_homeomorphism(const FiniteSpace& a, const FiniteSpace& b,
                         const std::vector<std::size_t>& map) {
  if (map.size() != a.size() || a.size() != b.size()) return false;
  std::vector<bool> hit(b.size());
  for (auto m : map) {
    if (m >= b.size() || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(map[x], map[y])) return false;
  return true;
}

PointSet random_subset(Rng& rng, std::size_t n) {
  PointSet s(n);
  for (std::size_t x = 0; x < n; ++x)
    if (rng.chance(0.5)) s.set(x);
  return s;
}

void finspace_trial(Rng& rng, Recorder& rec, std::size_t) {
  const auto s = random_space(rng, 8);
  const auto n = s.size();

  rec.check("open_sets_round_trip", space_from_open_sets(open_family(s)) == s);

  bool kuratowski = s.closure(s.empty_set()).none();
  for (int i = 0; i < 3; ++i) {
    auto a = random_subset(rng, n), b = random_subset(rng, n);
    auto ca = s.closure(a);
    kuratowski = kuratowski && a.is_subset_of(ca) && s.closure(ca) == ca &&
                 s.closure(a | b) == (ca | s.closure(b));
  }
  rec.check("closure_kuratowski", kuratowski);

  const auto t0 = t0_quotient(s);
  bool trivial = true;
  for (std::size_t x = 0; x < t0.target.size(); ++x)
    trivial = trivial && point_class(t0.target, x).count() == 1;
  const auto t0_again = t0_quotient(t0.target);
  rec.check("t0_quotient", trivial && t0_again.target.size() == t0.target.size() &&
                               is_homeomorphic(t0_again.target, t0.target));

  const auto q = quotient_space(s, random_partition(rng, n));
  bool preimages = true;
  const auto m = q.target.size();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    PointSet v(m);
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) v.set(i);
    preimages = preimages && q.target.is_open(v) == s.is_open(q.preimage(v));
  }
  rec.check("quotient_preimage", preimages);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<IndexPair> pairs;
  for (const auto& [x, y] : s.relation_pairs()) pairs.emplace_back(perm[x], perm[y]);
  const auto relabeled = FiniteSpace::from_relation(n, pairs);
  const auto witness = find_homeomorphism(s, relabeled);
  rec.check("homeomorphism_relabel", witness && valid_homeomorphism(s, relabeled, *witness) &&
                                         is_homeomorphic(relabeled, s) && is_homeomorphic(s, s));

  const auto other = random_space(rng, 8);
  const auto maybe = find_homeomorphism(s, other);
  rec.check("homeomorphism_witness_valid", !maybe || valid_homeomorphism(s, other, *maybe));

  std::vector<int> memo(t0.target.size(), -1);
  const auto ht = heights(s);
  bool heights_ok = true;
  for (std::size_t x = 0; x < n; ++x)
    heights_ok = heights_ok && ht[x] == chain_height(t0.target, t0.assignment[x], memo);
  rec.check("heights_longest_chain", heights_ok);
}

void topology_trial(Rng& rng, Recorder& rec, std::size_t) {
  const auto s = random_space(rng, 10);
  const auto n = s.size();
  const auto c = classify_points(s);

  rec.check("cl_p_r_partition", (c.closed & c.proper_nonclosed).none() &&
                                    (c.closed & c.nonproper).none() &&
                                    (c.proper_nonclosed & c.nonproper).none() &&
                                    (c.closed | c.proper_nonclosed | c.nonproper).all() &&
                                    c.recurrent == (c.closed | c.nonproper));

  const auto lemma = abstract_elements(s);
  rec.check("element_forms_agree", lemma == abstract_elements_by_definition(s));

  bool blocks_ok = true;
  for (std::size_t i = 0; i < lemma.blocks.size(); ++i) {
    const auto& b = lemma.blocks.blocks[i];
    const auto& part = lemma.kinds[i] == ElementKind::closed   ? c.closed
                       : lemma.kinds[i] == ElementKind::proper ? c.proper_nonclosed
                                                               : c.nonproper;
    blocks_ok = blocks_ok && is_connected(s, b) && b.is_subset_of(part);
  }
  rec.check("elements_connected_and_typed", blocks_ok);

  PointSet lhs = c.recurrent;
  for (std::size_t x = 0; x < n; ++x) lhs |= derived_set(s, x) & c.proper_nonclosed;
  rec.check("clause1_inclusion", lhs.is_subset_of(c.quasi_recurrent));
  if (lhs != c.quasi_recurrent) rec.count("clause1_strict");

  rec.check("clause2_complement", (~c.quasi_recurrent).is_subset_of(c.proper_nonclosed & c.maximal));
  rec.check("clause3_invariant", saturated_by(point_classes(s), c.quasi_recurrent));

  const auto q_components = connected_components(s, c.quasi_recurrent);
  bool clause4 = true;
  for (auto x : members(c.proper_nonclosed & c.maximal))
    for (const auto& comp : connected_components(s, derived_set(s, x)).blocks)
      clause4 = clause4 && s.is_closed(comp) &&
                std::any_of(q_components.blocks.begin(), q_components.blocks.end(),
                            [&](const PointSet& qc) { return comp.is_subset_of(qc); });
  rec.check("clause4_components", clause4);

  rec.check("quasi_recurrent_closed", s.is_closed(c.quasi_recurrent));

  const auto hg = morse_hypergraph(s);
  hg.check_partition();
  rec.check("hypergraph_partition", true);
  const auto family = morse_hypergraph_of_family(s, q_components.blocks);
  rec.check("family_reproduces_hypergraph", family.ok() && *family.graph == hg);
  rec.check("theorem_quotient", quotient_check(hg, lemma).ok);

  if (c.nonproper.any()) rec.count("spaces_with_nonproper_points");
  if (!hg.hyper_edges.empty()) rec.count("spaces_with_hyper_edges");
}

void decomposition_trial(Rng& rng, Recorder& rec, std::size_t) {
  const auto f = rng.chance(0.8) ? random_invariant_decomposition(rng, 10)
                                 : random_decomposition(rng, 10);
  const auto& s = f.space();
  const bool invariant = is_invariant(f).invariant;
  const auto equivalence = invariance_equivalence_check(f);
  rec.check("invariance_equivalence", equivalence.agrees() && equivalence.exhaustive);
  if (!invariant) {
    rec.count("non_invariant");
    rec.check("non_invariant_witness", equivalence.witness.has_value());
    return;
  }
  rec.count("invariant");
  if (f.block_count() < s.size()) rec.count("invariant_with_merged_blocks");

  const auto family = saturated_family(f);
  rec.check("saturated_family_topology", family.is_topology && family.within_topology);
  const auto space = decomposition_space(f);
  rec.check("canonical_bijection", space.bijection_holds == true &&
                                       space.saturated_open_count == space.quotient_open_count);

  const auto hat = class_decomposition(f).partition();
  const auto c = classify_elements(f);
  rec.check("cl_p_r_class_invariant", saturated_by(hat, c.closed) &&
                                          saturated_by(hat, c.proper_nonclosed) &&
                                          saturated_by(hat, c.nonproper));

  PointSet lhs = c.recurrent;
  for (const auto& block : f.blocks()) lhs |= (s.closure(block) - block) & c.proper_nonclosed;
  rec.check("clause1_inclusion", lhs.is_subset_of(c.quasi_recurrent));
  if (lhs != c.quasi_recurrent) rec.count("clause1_strict");
  rec.check("clause2_complement", (~c.quasi_recurrent).is_subset_of(c.proper_nonclosed & c.maximal));
  rec.check("clause3_class_invariant",
            saturated_by(hat, c.quasi_recurrent) && saturated_by(hat, ~c.maximal));
  bool clause4 = true;
  for (const auto& block : f.blocks()) {
    if (!block.is_subset_of(c.proper_nonclosed & c.maximal)) continue;
    const auto derived = s.closure(block) - block;
    clause4 = clause4 && s.is_closed(derived) && saturated_by(hat, derived) &&
              derived.is_subset_of(c.quasi_recurrent);
  }
  rec.check("clause4_derived", clause4);

  const auto hg = morse_hypergraph_decomp(f);
  rec.check("hypergraph_exists", true);

  const auto q = quotient_space(s, f.partition());
  std::vector<PointSet> closure_family;
  for (const auto& comp : connected_components(q.target, q.image(s.closure(c.quasi_recurrent))).blocks)
    closure_family.push_back(q.preimage(comp));
  rec.check("closure_family_hypergraph", morse_hypergraph_of_M(f, closure_family).ok());

  const auto strong = abstract_elements_decomp(f);
  const auto weak = abstract_weak_elements(f);
  rec.check("theorem_strong", quotient_check(hg, strong.blocks).ok);
  rec.check("theorem_weak", quotient_check(hg, weak.blocks).ok);

  bool refines = true;
  for (const auto& w : weak.blocks.blocks)
    refines = refines && std::any_of(strong.blocks.blocks.begin(), strong.blocks.blocks.end(),
                                     [&](const PointSet& b) { return w.is_subset_of(b); });
  rec.check("weak_refines_strong", refines);

  bool saturated_connected = true;
  for (const auto* part : {&strong.blocks, &weak.blocks})
    for (const auto& b : part->blocks)
      saturated_connected = saturated_connected && is_saturated(f, b) &&
                            is_connected(q.target, q.image(b));
  rec.check("elements_saturated_connected", saturated_connected);

  bool homeomorphic = true;
  for (const auto& w : weak.blocks.blocks) {
    std::optional<FiniteSpace> first;
    for (const auto& block : f.blocks()) {
      if (!block.is_subset_of(w)) continue;
      auto sub = subspace(s, block);
      if (!first)
        first = std::move(sub);
      else
        homeomorphic = homeomorphic && is_homeomorphic(*first, sub);
    }
  }
  rec.check("weak_blocks_homeomorphic", homeomorphic);
  if (weak.blocks.size() > strong.blocks.size()) rec.count("weak_strictly_finer");
}

void identity_trial(Rng& rng, Recorder& rec, std::size_t) {
  const auto s = random_space(rng, 10);
  const auto f = Decomposition::identity(s);
  const auto c = classify_points(s);
  const auto d = classify_elements(f);
  rec.check("classification_matches",
            c.closed == d.closed && c.proper_nonclosed == d.proper_nonclosed &&
                c.nonproper == d.nonproper && c.recurrent == d.recurrent &&
                c.quasi_recurrent == d.quasi_recurrent && c.maximal == d.maximal);
  const auto e = abstract_elements(s);
  const auto de = abstract_elements_decomp(f);
  rec.check("elements_match", e.blocks == de.blocks && e.kinds == de.kinds);
  rec.check("quasi_recurrent_matches", quasi_recurrent_set(s) == quasi_recurrent_set_decomp(f));
  rec.check("hypergraph_matches", morse_hypergraph(s) == morse_hypergraph_decomp(f));
}

void cells_trial(Rng& rng, Recorder& rec, std::size_t) {
  const auto k = random_simplicial_complex(rng, 6);
  const auto report = verify_prop_cell(k);
  rec.check("prop_cell", report.passed());
  rec.check("heights_equal_dims", report.heights_match_dims == true);
  rec.check("singleton_elements", report.singleton_elements);
  const auto s = face_space(k);
  bool t0 = true;
  for (std::size_t x = 0; x < s.size(); ++x) t0 = t0 && point_class(s, x).count() == 1;
  rec.check("face_space_t0", t0);
  rec.count("cells", k.size());
}

long mesh_euler(const ScalarField& f) {
  return static_cast<long>(f.vertex_count()) - static_cast<long>(f.edges().size()) +
         static_cast<long>(f.triangles().size());
}

// Minima, maxima and saddles of a Reeb graph, by node degree.
long critical_alternating_sum(const ReebGraph& g) {
  std::vector<int> down(g.nodes.size()), up(g.nodes.size());
  for (const auto& [a, b] : g.edges) {
    ++up[a];
    ++down[b];
  }
  long sum = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) sum += (down[i] == 0 || up[i] == 0) ? 1 : -1;
  return sum;
}

void reeb_trial(const ScalarField& mesh, std::size_t genus, Rng& rng, Recorder& rec) {
  const auto field = mesh.with_values(random_values(rng, mesh.vertex_count()));
  const auto sweep = reeb_graph(field);
  rec.check("sweep_matches_bruteforce", same_reeb_graph(sweep, reeb_bruteforce(field)));
  rec.check("betti1_at_most_genus", betti1(sweep) <= genus);
  if (is_pl_morse(field)) {
    rec.count("pl_morse_fields");
    rec.check("betti1_equals_genus", betti1(sweep) == genus);
    rec.check("critical_count_euler", critical_alternating_sum(sweep) == mesh_euler(field));
  } else {
    rec.count("multi_saddle_fields");
  }

  auto values = field.values();
  for (auto& v : values) v = 3.0 * std::exp(v) - 1.0;
  const auto relabeled = reeb_graph(field.with_values(values));
  bool same = relabeled.edges == sweep.edges && relabeled.nodes.size() == sweep.nodes.size();
  for (std::size_t i = 0; same && i < sweep.nodes.size(); ++i)
    same = relabeled.nodes[i].vertex == sweep.nodes[i].vertex;
  rec.check("monotone_relabel_invariant", same);
}

}  // namespace

SuiteReport verify_finspace(std::uint64_t seed, std::size_t samples, unsigned workers) {
  return run_suite("finspace", 1, seed, samples, workers, finspace_trial);
}

SuiteReport verify_topology(std::uint64_t seed, std::size_t samples, unsigned workers) {
  return run_suite("topology", 2, seed, samples, workers, topology_trial);
}

SuiteReport verify_decomposition(std::uint64_t seed, std::size_t samples, unsigned workers) {
  return run_suite("decomposition", 3, seed, samples, workers, decomposition_trial);
}

SuiteReport verify_identity(std::uint64_t seed, std::size_t samples, unsigned workers) {
  return run_suite("identity", 4, seed, samples, workers, identity_trial);
}

SuiteReport verify_cells(std::uint64_t seed, std::size_t samples, unsigned workers) {
  return run_suite("cells", 5, seed, samples, workers, cells_trial);
}

SuiteReport verify_reeb(std::uint64_t seed, std::size_t samples, unsigned workers) {
  const auto sphere = octahedron_field();
  const auto torus = torus_field();
  // The first `samples` trials use the sphere, the rest the torus.
  auto report = run_suite("reeb", 6, seed, 2 * samples, workers,
                          [&](Rng& rng, Recorder& rec, std::size_t t) {
                            if (t < samples)
                              reeb_trial(sphere, 0, rng, rec);
                            else
                              reeb_trial(torus, 1, rng, rec);
                          });

  Recorder fixtures;
  const auto sphere_graph = reeb_graph(sphere);
  fixtures.check("fixture_sphere_path", sphere_graph.nodes.size() == 2 &&
                                            sphere_graph.edges.size() == 1 && betti1(sphere_graph) == 0);
  const auto torus_graph = reeb_graph(torus);
  fixtures.check("fixture_torus_shape",
                 torus_graph.nodes.size() == 4 && betti1(torus_graph) == 1 &&
                     std::count(torus_graph.edges.begin(), torus_graph.edges.end(),
                                IndexPair{1, 2}) == 2);
  for (const auto* mesh : {&sphere, &torus})
    fixtures.check("fixture_critical_euler", is_pl_morse(*mesh) &&
                   critical_alternating_sum(reeb_graph(*mesh)) == mesh_euler(*mesh));
  for (const auto& field : {sphere, torus, triangle_field()})
    fixtures.check("fixture_weak_elements", reeb_weak_elements(field).passed);
  merge(report, fixtures, "fixtures");
  return report;
}

SuiteReport verify_analogs() {
  Recorder rec;
  const auto chain3 = chain3_saturation_analog();
  rec.check("chain3_not_invariant", !chain3.invariance.invariant);
  rec.check("chain3_saturation_not_open", chain3.family.non_open_witness.has_value());
  rec.check("chain3_projection_differs", !chain3.projection_matches_quotient);
  const auto chains = two_chain_saturation_analog();
  rec.check("two_chain_not_topology",
            !chains.family.is_topology && chains.family.intersection_witness.has_value());
  const auto square = leaf_square_analog();
  rec.check("leaf_square_report", square.elements.blocks.size() > 0 && !square.note.empty());
  rec.check("leaf_square_theorem", square.closure_hypergraph.ok() && square.elements_check.ok);
  if (square.divergent) rec.count("leaf_square_divergent");

  SuiteReport report;
  report.name = "analogs";
  report.samples = 1;
  merge(report, rec, "analogs");
  return report;
}

VerifyReport verify_all(const VerifyOptions& options) {
  const auto t = options.trials;
  const auto fifth = std::max<std::size_t>(1, t / 5);
  const auto tenth = std::max<std::size_t>(1, t / 10);
  VerifyReport report{options.seed, t, {}};
  report.suites.push_back(verify_finspace(options.seed, fifth, options.workers));
  report.suites.push_back(verify_topology(options.seed, t, options.workers));
  report.suites.push_back(verify_decomposition(options.seed, t, options.workers));
  report.suites.push_back(verify_identity(options.seed, fifth, options.workers));
  report.suites.push_back(verify_cells(options.seed, fifth, options.workers));
  report.suites.push_back(verify_reeb(options.seed, tenth, options.workers));
  report.suites.push_back(verify_analogs());
  return report;
}

}  // namespace fintop
