#pragma once

#include <string>

#include "json.hpp"

#include "fintop/analogs.hpp"
#include "fintop/cellcomplex.hpp"
#include "fintop/decomp.hpp"
#include "fintop/finspace.hpp"
#include "fintop/recurrence.hpp"
#include "fintop/reeb.hpp"
#include "fintop/verify.hpp"

namespace fintop {

using Json = nlohmann::ordered_json;

/// Throws InputError when the file is missing or is not valid JSON.
Json read_json_file(const std::string& path);

// Parsers throw InputError on malformed input and NotATopology when an
// open-set family violates the axioms.
FiniteSpace parse_space(const Json& j);
Decomposition parse_decomposition(const Json& j);
CombinatorialComplex parse_complex(const Json& j);
/// {"vertices": n, "triangles": [[i,j,k],...], "values": [...]}
ScalarField parse_mesh(const Json& j);

Json set_json(const FiniteSpace& space, const PointSet& a);
Json partition_json(const FiniteSpace& space, const Partition& p);
/// {"points": [...], "order": [[x, y], ...]} with strict pairs only.
Json space_json(const FiniteSpace& space);
Json mesh_json(const ScalarField& field);

Json classification_json(const FiniteSpace& space, const PointClassification& c);
Json elements_json(const FiniteSpace& space, const ElementPartition& e);
Json hypergraph_json(const FiniteSpace& space, const MorseHyperGraph& hg);
Json multigraph_json(const Multigraph& g);
Json quotient_check_json(const QuotientCheck& check);
Json reeb_graph_json(const ReebGraph& g);
Json verify_json(const VerifyReport& report);
Json saturation_analog_json(const SaturationAnalog& a);
Json leaf_square_json(const LeafSquareAnalog& a);

/// Vertices as boxes, each hyper-edge as a diamond joined to its vertices.
std::string hypergraph_dot(const FiniteSpace& space, const MorseHyperGraph& hg);
/// Hasse diagram of the condensation.
std::string space_dot(const FiniteSpace& space);
/// Nodes labelled v<id>@<value>.
std::string reeb_dot(const ReebGraph& g);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

}  // namespace fintop
