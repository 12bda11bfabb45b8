#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twocycle/graph.hpp"
#include "twocycle/patterns.hpp"

namespace twocycle {

// A witness that a named graph occurs as a minor of a host: branch_sets[i]
// is the connected set of host vertices contracted to vertex i of the member.
struct MinorModel {
    std::string member;  // resolvable by member_graph()
    std::vector<std::vector<int>> branch_sets;
};

// The named graphs minor models may reference ("K6", "Petersen").
// Unknown names throw std::invalid_argument.
Graph member_graph(const std::string& name);

bool validate_minor_model(const Graph& host, const MinorModel& model,
                          std::string* why = nullptr);

// The cycle through a closed vertex sequence. Consecutive vertices (wrapping
// around) must be joined by an edge; parallel edges resolve to the lowest
// index. Throws std::invalid_argument when the sequence is not a simple
// cycle of length >= 3.
OrientedCycle cycle_through(const Graph& g, const std::vector<int>& vertices);

// A face list is a combinatorial planarity certificate: every face is a
// cycle, every edge lies on exactly two faces, the graph is connected, and
// V - E + F = 2.
bool validate_face_list(const Graph& g,
                        const std::vector<std::vector<int>>& faces,
                        std::string* why = nullptr);

struct CatalogEntry {
    std::string name;
    Graph graph;

    bool planar = false;
    // Curated embedding, present on planar entries that carry one.
    std::optional<std::vector<std::vector<int>>> faces;

    // Linkless-embedding metadata: true = the graph has a Petersen-family
    // minor (model attached), false = the graph is linklessly embeddable,
    // absent = no claim. Planar entries never carry this flag.
    std::optional<bool> petersen_family_minor;
    std::optional<MinorModel> petersen_minor_model;

    // The Kuratowski-connectivity flag, either computed from the separation
    // predicate or curated by hand; curated entries say why in the notes.
    bool kuratowski_connected = false;
    bool kuratowski_connected_curated = false;

    std::string notes;
};

// The built-in corpus: eleven base graphs, each immediately followed by its
// deterministic seeded two-edge-subdivision variant ("<name>_sub").
const std::vector<CatalogEntry>& builtin_catalog();

// nullptr when no entry has the name.
const CatalogEntry* find_catalog_entry(const std::string& name);

std::vector<std::string> catalog_names();

// "" when the entry's metadata is internally consistent; otherwise the first
// violated rule. Face lists and minor models are validated against the graph.
std::string catalog_consistency_error(const CatalogEntry& entry);

}  // namespace twocycle
