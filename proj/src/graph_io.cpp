#include "graphcent/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace graphcent {

namespace {

// Strip a '#' comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

int parse_int(const std::string& token, int line_no, const char* what) {
    try {
        size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw_error(errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                           what + ", got \"" + token + "\"");
    }
}

Graph read_edge_list(std::istream& in) {
    std::string raw;
    int line_no = 0;
    int n = -1;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a;
        if (n < 0) {
            if (fields >> extra) {
                throw_error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": header must be a single vertex count");
            }
            n = parse_int(a, line_no, "vertex count");
            continue;
        }
        if (!(fields >> b) || (fields >> extra)) {
            throw_error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": expected \"i j\"");
        }
        edges.emplace_back(parse_int(a, line_no, "vertex index"),
                           parse_int(b, line_no, "vertex index"));
    }
    if (n < 0) {
        throw_error(errc::parse_error, "empty input: missing vertex-count header");
    }
    return Graph(n, std::move(edges));
}

Graph read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw_error(errc::parse_error, e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
        !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
        throw_error(errc::parse_error, "expected object {\"n\": int, \"edges\": [[i,j],...]}");
    }
    std::vector<Graph::Edge> edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_number_integer()) {
            throw_error(errc::parse_error, "edge entries must be [i, j] integer pairs");
        }
        edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    return Graph(doc["n"].get<int>(), std::move(edges));
}

} // namespace

Graph read_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edge_list ? read_edge_list(in) : read_json(in);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        out << g.vertex_count() << "\n";
        for (auto [i, j] : g.edges()) {
            out << i << " " << j << "\n";
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["n"] = g.vertex_count();
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (auto [i, j] : g.edges()) {
        edges.push_back({i, j});
    }
    out << doc.dump() << "\n";
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw_error(errc::parse_error, "cannot open file: " + path);
    }
    const bool json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
    return read_graph(in, json ? GraphFormat::json : GraphFormat::edge_list);
}

} // namespace graphcent
