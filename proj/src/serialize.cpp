#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "rigidlab/graph.hpp"

namespace rigidlab {

GraphParseError::GraphParseError(size_t line_number, const std::string& message)
    : std::runtime_error(line_number == 0 ? message
                                          : "line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    out << "v " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

namespace {

bool parse_u32(std::string_view token, uint32_t& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> fields;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

}  // namespace

Graph from_text(std::string_view text) {
    bool have_header = false;
    uint32_t vertex_count = 0;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::set<std::pair<uint32_t, uint32_t>> seen;

    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        auto fields = split_ws(line);
        if (fields.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (!have_header) {
            if (fields.size() != 2 || fields[0] != "v" || !parse_u32(fields[1], vertex_count))
                throw GraphParseError(line_no, "expected 'v <count>'");
            have_header = true;
        } else {
            uint32_t a = 0, b = 0;
            if (fields.size() != 3 || fields[0] != "e" || !parse_u32(fields[1], a) ||
                !parse_u32(fields[2], b))
                throw GraphParseError(line_no, "expected 'e <i> <j>'");
            if (a == b) throw GraphParseError(line_no, "self-loop");
            if (a >= vertex_count || b >= vertex_count)
                throw GraphParseError(line_no, "endpoint out of range");
            std::pair<uint32_t, uint32_t> key{std::min(a, b), std::max(a, b)};
            if (!seen.insert(key).second) throw GraphParseError(line_no, "duplicate edge");
            edges.emplace_back(a, b);
        }
        if (end == text.size()) break;
    }
    if (!have_header) throw GraphParseError(line_no, "missing 'v <count>' header");
    return Graph(vertex_count, std::move(edges));
}

std::string to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["v"] = g.vertex_count();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph from_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphParseError(0, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("v") || !j.contains("edges") ||
        !j["v"].is_number_unsigned() || !j["edges"].is_array())
        throw GraphParseError(0, "expected {\"v\": n, \"edges\": [[i,j],...]}");
    uint32_t vertex_count = j["v"].get<uint32_t>();
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
            !item[1].is_number_unsigned())
            throw GraphParseError(0, "each edge must be a pair of vertex indices");
        edges.emplace_back(item[0].get<uint32_t>(), item[1].get<uint32_t>());
    }
    try {
        return Graph(vertex_count, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw GraphParseError(0, e.what());
    }
}

}  // namespace rigidlab
