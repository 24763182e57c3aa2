#include "atx/serialize.hpp"

#include <sstream>

#include "atx/mad.hpp"
#include "atx/structure.hpp"

namespace atx {

Json to_json(const DiffResult& r) {
    return Json{{"even", r.even}, {"odd", r.odd}, {"diff", r.diff()}};
}

Json to_json(const ATCertificate& cert) {
    Json arcs = Json::array();
    for (auto a : cert.orientation.arcs()) arcs.push_back({a.tail, a.head});
    Json caps = Json::object();
    for (int v = 0; v < cert.caps.size(); ++v) caps[std::to_string(v)] = cert.caps[v];
    Json j{{"arcs", std::move(arcs)}, {"caps", std::move(caps)}};
    j["even"] = cert.result.even;
    j["odd"] = cert.result.odd;
    j["diff"] = cert.result.diff();
    return j;
}

Json to_json(const ListAssignment& lists) {
    Json l = Json::object();
    for (int v = 0; v < lists.n(); ++v) l[std::to_string(v)] = lists[v];
    return Json{{"lists", std::move(l)}};
}

Json to_json(const TraceStep& step) {
    Json arcs = Json::array();
    for (auto a : step.arcs) arcs.push_back({a.tail, a.head});
    Json j{{"tag", std::string(to_string(step.tag))}, {"vertices", step.vertices}, {"arcs", std::move(arcs)}};
    if (!step.note.empty()) j["note"] = step.note;
    return j;
}

Json to_json(const ConstructionTrace& trace) {
    Json j = Json::array();
    for (const auto& s : trace.steps) j.push_back(to_json(s));
    return j;
}

Json structure_report(const Graph& g) {
    Json j;
    j["k4minorfree"] = is_k4_minor_free(g);
    j["mad"] = g.n() == 0 ? std::string("0/1") : max_average_degree(g).str();
    j["trianglefree"] = is_triangle_free(g);
    const bool eligible = g.n() > 0 && is_connected(g) && g.min_degree() >= 2 && g.max_degree() > 2 &&
                          j["k4minorfree"].get<bool>();
    j["genuine2"] = eligible ? Json(genuine_2_vertices(g)) : Json(nullptr);
    Json links = Json::array();
    for (const auto& l : diamond_link_graph(g).links) links.push_back({l.a, l.b});
    j["links"] = std::move(links);
    return j;
}

std::vector<Arc> parse_arcs(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    std::vector<Arc> arcs;
    if (first != std::string_view::npos && text[first] == '[') {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.byte, "malformed arc array");
        }
        if (!j.is_array()) throw ParseError(first, "arc list must be an array");
        for (const auto& a : j) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
                throw ParseError(first, "each arc must be a pair of integers");
            arcs.push_back({a[0].get<int>(), a[1].get<int>()});
        }
        return arcs;
    }
    std::istringstream in{std::string(text)};
    std::vector<long long> values;
    std::string tok;
    std::size_t offset = 0;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 0) throw ParseError(offset, "expected a vertex id, got '" + tok + "'");
        values.push_back(v);
        offset = static_cast<std::size_t>(in.tellg());
    }
    if (values.size() % 2) throw ParseError(text.size(), "odd number of arc endpoints");
    for (std::size_t i = 0; i < values.size(); i += 2)
        arcs.push_back({static_cast<int>(values[i]), static_cast<int>(values[i + 1])});
    return arcs;
}

std::string orientation_to_dot(const Orientation& d, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
    for (auto a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace atx
