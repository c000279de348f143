#pragma once

#include <string>

#include <json.hpp>

#include "trilink/bounds.hpp"
#include "trilink/complex.hpp"
#include "trilink/diagram.hpp"
#include "trilink/generators.hpp"
#include "trilink/linkset.hpp"
#include "trilink/moves.hpp"
#include "trilink/realize.hpp"
#include "trilink/shelling.hpp"

namespace trilink {

/// Key order is preserved so serialized artifacts are byte-stable.
using Json = nlohmann::ordered_json;

/// {"vertices":[...],"tetrahedra":[[a,b,c,d],...]}, everything ascending.
Json to_json(const Triangulation& t);
/// strict: reject anything not already canonical. Unknown keys (such as an
/// artifact "meta" header) are ignored.
Triangulation triangulation_from_json(const Json& j, bool strict = true);

Json to_json(const ValidationReport& r);

/// {"coords4": {"v": ["p/q", ×4], ...}}
Json coords4_to_json(const Coords4& c);
Coords4 coords4_from_json(const Json& j);

/// {"coords3": {"v": ["p/q", ×3], ...}, "omitted_facet": [a,b,c,d] | null}
Json to_json(const Realization3& r);
Realization3 realization_from_json(const Json& j, const Triangulation& host);

Json to_json(const EdgeLink& l);
/// Returns the raw cycles; pass them through check_link.
std::vector<std::vector<Vertex>> link_cycles_from_json(const Json& j);

Json to_json(const ExpansionSpec& s);
ExpansionSpec expansion_spec_from_json(const Json& j);
Json to_json(const MoveRecord& r);
MoveRecord move_record_from_json(const Json& j);

/// {"order": [[a,b,c,d], ...]}
Json shelling_to_json(const ShellingOrder& o);
ShellingOrder shelling_from_json(const Json& j);

Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

/// Big integers and rationals as decimal strings; 2^(810n²) as
/// {"base","exponent","digits"}.
Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

/// Reads a whole file; throws Error naming the path.
Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace trilink
