#include "twocycle/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

namespace twocycle {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + " at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
}

Z z_from_json(const Json& j) {
    if (j.is_number_integer()) {
        return Z(j.get<long long>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Z(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
        }
    }
    throw std::invalid_argument("integer expected, got " + std::string(j.type_name()));
}

Json z_to_json(const Z& v) { return Json(v.str()); }

Q q_from_string(const std::string& s) {
    if (s.empty()) {
        throw std::invalid_argument("empty rational");
    }
    try {
        Q v(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: \"" + s + "\"");
    }
}

std::string q_to_string(const Q& v) {
    if (denominator(v) == 1) {
        return numerator(v).str();
    }
    return numerator(v).str() + "/" + denominator(v).str();
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("graph document must be an object");
    }
    if (!j.contains("vertices") || !j["vertices"].is_number_integer()) {
        throw std::invalid_argument("graph document needs an integer \"vertices\" field");
    }
    const long long n = j["vertices"].get<long long>();
    if (n < 0 || n > 4096) {
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw std::invalid_argument("graph document needs an \"edges\" array");
    }
    std::vector<Edge> edges;
    for (const Json& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw std::invalid_argument("edge " + std::to_string(edges.size()) +
                                        " must be a [tail, head] integer pair");
        }
        edges.push_back(Edge{item[0].get<int>(), item[1].get<int>()});
    }
    return Graph(static_cast<int>(n), edges);  // endpoint range checked here
}

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        edges.push_back(Json::array({g.edge(e).tail, g.edge(e).head}));
    }
    return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Form2 form_from_json(const Json& j) {
    const Json* triples = nullptr;
    if (j.is_array()) {
        triples = &j;
    } else if (j.is_object() && j.contains("entries") && j["entries"].is_array()) {
        triples = &j["entries"];
    } else {
        throw std::invalid_argument(
            "form document must be {\"entries\": [[e, f, value], ...]} or a bare triple array");
    }
    Form2 d;
    std::set<std::pair<int, int>> seen;
    int index = 0;
    for (const Json& item : *triples) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer()) {
            throw std::invalid_argument("form entry " + std::to_string(index) +
                                        " must be an [e, f, value] triple");
        }
        const int e = item[0].get<int>();
        const int f = item[1].get<int>();
        if (!seen.insert({e, f}).second) {
            throw std::invalid_argument("form entry " + std::to_string(index) +
                                        " repeats the pair (" + std::to_string(e) + ", " +
                                        std::to_string(f) + ")");
        }
        d.set(e, f, z_from_json(item[2]));
        ++index;
    }
    return d;
}

Json form_to_json(const Form2& d) {
    Json triples = Json::array();
    for (const auto& [pair, value] : d.entries) {
        triples.push_back(Json::array({pair.first, pair.second, z_to_json(value)}));
    }
    return Json{{"entries", std::move(triples)}};
}

Drawing drawing_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("positions") || !j["positions"].is_array()) {
        throw std::invalid_argument(
            "drawing document must be {\"positions\": [[x, y], ...]} with rational strings");
    }
    Drawing dr;
    int index = 0;
    for (const Json& item : j["positions"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() ||
            !item[1].is_string()) {
            throw std::invalid_argument("position " + std::to_string(index) +
                                        " must be an [x, y] pair of rational strings");
        }
        dr.position.push_back(
            Point{q_from_string(item[0].get<std::string>()),
                  q_from_string(item[1].get<std::string>())});
        ++index;
    }
    return dr;
}

Json drawing_to_json(const Drawing& dr) {
    Json positions = Json::array();
    for (const Point& p : dr.position) {
        positions.push_back(Json::array({q_to_string(p.x), q_to_string(p.y)}));
    }
    return Json{{"positions", std::move(positions)}};
}

}  // namespace twocycle
