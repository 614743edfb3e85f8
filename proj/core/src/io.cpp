#include "msrcert/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace msrcert {

namespace {

using ordered_json = nlohmann::ordered_json;

int parse_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw InputError("");
        return value;
    } catch (const std::exception&) {
        throw InputError(std::string("invalid ") + what + ": '" + token + "'");
    }
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = -1;
    int declared_m = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank
        if (!(fields >> b)) throw InputError("edge list: expected two integers per line");
        if (fields >> extra) throw InputError("edge list: trailing tokens on line '" + line + "'");
        if (n == -1) {
            n = parse_int(a, "vertex count");
            declared_m = parse_int(b, "edge count");
            if (n < 0 || declared_m < 0) throw InputError("edge list: negative header values");
            continue;
        }
        edges.emplace_back(parse_int(a, "endpoint"), parse_int(b, "endpoint"));
    }
    if (n == -1) throw InputError("edge list: empty input");
    if (static_cast<int>(edges.size()) != declared_m)
        throw InputError("edge list: header declares " + std::to_string(declared_m) +
                         " edges, found " + std::to_string(edges.size()));
    try {
        return Graph::from_edges(n, edges);
    } catch (const PreconditionError& e) {
        throw InputError(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph JSON: expected {\"n\": int, \"edges\": [[u,v],...]}");
    if (!j["n"].is_number_integer()) throw InputError("graph JSON: n must be an integer");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("graph JSON: each edge must be [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(j["n"].get<int>(), edges);
    } catch (const PreconditionError& e) {
        throw InputError(std::string("graph JSON: ") + e.what());
    }
}

std::string to_canonical_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph parse_graph(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_edge_list(text);
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw InputError("cannot open '" + file.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& file, std::string_view content) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw InputError("cannot write '" + file.string() + "'");
    out << content;
}

Graph load_graph(const std::filesystem::path& file) {
    return parse_graph(read_file(file));
}

} // namespace msrcert
