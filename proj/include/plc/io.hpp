#pragma once

// JSON and text formats for states, tuples and reports.
//
// State file (JSON), one of
//   {"d": 2, "generators": ["XX", "ZZ"], "phases": [0, 0]}
//   {"d": 3, "generators": [[1, 0, 0, 1], [0, 1, 1, 0]]}     interleaved (x1, z1, x2, z2, ...)
//   {"d": 3, "n": 4, "edges": [[1, 2], [3, 4, 2]]}           graph state, 1-indexed, optional multiplicity
// or a text edge list: "n=<count>" followed by lines "i j [m]".
//
// Tuple file: {"d": 2, "n": 2, "matrices": [[[0, 1], [1, 0]], [[0, 1], [1, 0]]]}

#include "plc/commutation.hpp"
#include "plc/egs.hpp"
#include "plc/equivalence.hpp"
#include "plc/stabilizer.hpp"

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace plc {

using Json = nlohmann::ordered_json;

/// Malformed input file or document.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json to_json(const Matrix& m);
Json to_json(const StabilizerTableau& t);
Json to_json(const CommutationTuple& c);
Json to_json(const GraphAdjacency& g);
Json to_json(const PartyPartition& p);
Json to_json(const SearchBudget& b);
Json to_json(const CongruenceResult& r);
Json to_json(const SplitResult& r);
Json to_json(const DecompositionReport& r);
Json to_json(const NamedCounts& c);
Json to_json(const TripartiteCounts& c);
Json to_json(const EgsReport& r);
Json to_json(const CosetCheckReport& r);
Json to_json(const SpiralCheck& s);

[[nodiscard]] Matrix matrix_from_json(const Json& j, FieldOrder d);
[[nodiscard]] StabilizerTableau tableau_from_json(const Json& j);
[[nodiscard]] CommutationTuple tuple_from_json(const Json& j);

/// A single "n=<count>" block of the edge-list format.
[[nodiscard]] GraphAdjacency parse_edge_list(std::istream& in, FieldOrder d);

/// Reads a state file in any of the formats above; d applies to edge lists
/// (JSON documents carry their own).
[[nodiscard]] StabilizerTableau load_state(const std::string& path, FieldOrder d);
[[nodiscard]] CommutationTuple load_tuple(const std::string& path);

}  // namespace plc
