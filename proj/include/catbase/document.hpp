#pragma once

// JSON input documents.
//
//   {"n": 2,
//    "regions": [[1], [0, 1]],
//    "operator": {"[]": [], "[0]": [], "[1]": [0, 1], "[0,1]": [0, 1]},
//    "topology": [[], [1], [0, 1]]}
//
// Subsets are strictly ascending element arrays; operator keys are the text
// of such an array. "operator" and "topology" are optional, unknown fields are
// rejected. Errors carry the 1-based line of the offending token.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catbase/core.hpp"
#include "catbase/doperator.hpp"

namespace catbase {

struct InputDocument {
  int n = 0;
  /// As written; duplicates and empty sets are left for validate_base to report.
  std::vector<PointSet> regions;
  std::optional<OperatorTable> op;
  std::optional<std::vector<PointSet>> topology;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws InputError on malformed JSON or content.
InputDocument parse_input(std::string_view text);

/// Parses a bare operator map ({"[]": [], ...}) for a ground set of size n.
OperatorTable parse_operator(int n, std::string_view text);

/// Parses one subset written as a JSON array, e.g. "[0,2]".
PointSet parse_set(int n, std::string_view text);

/// Byte-stable JSON text (sorted keys) that parse_input reads back unchanged.
std::string serialize(const InputDocument& doc);

}  // namespace catbase
