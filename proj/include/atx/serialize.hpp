#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "atx/construct.hpp"
#include "atx/orientation.hpp"

namespace atx {

using Json = nlohmann::ordered_json;

Json to_json(const DiffResult& r);
// {"arcs": [[t,h],...], "caps": {"v": f}, "even": .., "odd": .., "diff": ..}
Json to_json(const ATCertificate& cert);
// {"lists": {"v": [..], ...}}
Json to_json(const ListAssignment& lists);
Json to_json(const TraceStep& step);
Json to_json(const ConstructionTrace& trace);

// {"k4minorfree", "mad", "trianglefree", "genuine2", "links"}; genuine2 is null when the
// graph is not connected with minimum degree 2 and some 3+-vertex.
Json structure_report(const Graph& g);

// Arc list as text ("t h" pairs, whitespace separated, or a JSON array of pairs).
std::vector<Arc> parse_arcs(std::string_view text);

std::string orientation_to_dot(const Orientation& d, std::string_view name = "D");

} // namespace atx
