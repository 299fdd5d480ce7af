#include "fintop/analogs.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace fintop {

namespace {

SaturationAnalog saturation_analog(Decomposition f) {
  SaturationAnalog out{f, is_invariant(f), saturated_family(f), {}, {}, false};
  const auto q = quotient_space(f.space(), f.partition());
  out.quotient_opens = open_sets(q.target);
  std::set<PointSet> projected;
  for (const auto& u : out.family.sets) projected.insert(q.image(u));
  out.projected_family.assign(projected.begin(), projected.end());
  out.projection_matches_quotient =
      projected == std::set<PointSet>(out.quotient_opens.begin(), out.quotient_opens.end());
  return out;
}

std::string decimal(double v) {
  auto s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

SaturationAnalog chain3_saturation_analog() {
  auto space = FiniteSpace::from_preorder({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Partition blocks{{make_set(3, {0, 2}), make_set(3, {1})}};
  return saturation_analog(Decomposition(std::move(space), std::move(blocks)));
}

SaturationAnalog two_chain_saturation_analog() {
  auto space = FiniteSpace::from_preorder({"u", "v", "p", "r"}, {{"u", "p"}, {"v", "r"}});
  Partition blocks{{make_set(4, {0, 1}), make_set(4, {2}), make_set(4, {3})}};
  return saturation_analog(Decomposition(std::move(space), std::move(blocks)));
}

LeafSquareAnalog leaf_square_analog() {
  const std::vector<double> xs{0, 1, 2, 3};
  const std::vector<double> ys{0, 1, 1.5, 2, 3};
  std::vector<Cell> cells;
  std::vector<NamedPair> faces;
  auto vertex = [&](std::size_t i, std::size_t j) {
    return "v(" + decimal(xs[i]) + "," + decimal(ys[j]) + ")";
  };
  auto hedge = [&](std::size_t i, std::size_t j) {
    return "h(" + decimal(xs[i]) + "-" + decimal(xs[i + 1]) + "," + decimal(ys[j]) + ")";
  };
  auto vedge = [&](std::size_t i, std::size_t j) {
    return "e(" + decimal(xs[i]) + "," + decimal(ys[j]) + "-" + decimal(ys[j + 1]) + ")";
  };
  auto face = [&](std::size_t i, std::size_t j) {
    return "f(" + decimal(xs[i]) + "-" + decimal(xs[i + 1]) + "," + decimal(ys[j]) + "-" +
           decimal(ys[j + 1]) + ")";
  };
  std::set<std::string> band_ids;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) cells.push_back({vertex(i, j), 0, std::nullopt});
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      cells.push_back({hedge(i, j), 1, std::nullopt});
      faces.emplace_back(vertex(i, j), hedge(i, j));
      faces.emplace_back(vertex(i + 1, j), hedge(i, j));
      if (xs[i] == 1 && ys[j] >= 1 && ys[j] <= 2) band_ids.insert(hedge(i, j));
    }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      cells.push_back({vedge(i, j), 1, std::nullopt});
      faces.emplace_back(vertex(i, j), vedge(i, j));
      faces.emplace_back(vertex(i, j + 1), vedge(i, j));
    }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
      cells.push_back({face(i, j), 2, std::nullopt});
      for (auto f : {hedge(i, j), hedge(i, j + 1), vedge(i, j), vedge(i + 1, j)})
        faces.emplace_back(f, face(i, j));
      faces.emplace_back(vertex(i, j), face(i, j));
      faces.emplace_back(vertex(i + 1, j), face(i, j));
      faces.emplace_back(vertex(i, j + 1), face(i, j));
      faces.emplace_back(vertex(i + 1, j + 1), face(i, j));
      if (xs[i] == 1 && ys[j] >= 1 && ys[j + 1] <= 2) band_ids.insert(face(i, j));
    }

  CombinatorialComplex complex(cells, faces);
  auto space = face_space(complex);
  PointSet band(space.size());
  for (const auto& id : band_ids) band.set(space.index_of(id));

  auto elements = abstract_elements(space);
  auto classification = classify_points(space);
  auto hypergraph = morse_hypergraph(space);
  auto closure_family =
      connected_components(space, space.closure(classification.quasi_recurrent)).blocks;
  auto closure_hypergraph = morse_hypergraph_of_family(space, closure_family);

  LeafSquareAnalog out{std::move(complex),
                       space,
                       band,
                       elements,
                       classification,
                       hypergraph,
                       closure_family,
                       closure_hypergraph,
                       {},
                       Partition{{space.carrier() - band, band}},
                       {},
                       false,
                       {}};
  if (out.closure_hypergraph.ok()) {
    out.elements_check = quotient_check(*out.closure_hypergraph.graph, elements);
    out.claimed_check = quotient_check(*out.closure_hypergraph.graph, out.claimed_elements);
  }
  out.divergent = elements.blocks.canonical() != out.claimed_elements.canonical();
  out.note =
      "Evaluated verbatim, the abstract elements of the face poset are " +
      std::to_string(elements.blocks.size()) +
      " single cells, not the two blocks {complement of band, band}. The hyper-graph of the "
      "components of the closure of the quasi-recurrent set is " +
      std::string(out.elements_check.ok ? "" : "not ") +
      "a quotient of the computed element space and is " +
      std::string(out.claimed_check.ok ? "" : "not ") +
      "a quotient of the two-block partition. The finite model differs from the continuum "
      "square, where the cells off the band are closed points.";
  return out;
}

}  // namespace fintop
