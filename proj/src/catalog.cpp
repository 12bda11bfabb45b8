#include "twocycle/catalog.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>

namespace twocycle {

namespace {

bool fail(std::string* why, const std::string& message) {
    if (why != nullptr) *why = message;
    return false;
}

Graph cube_graph() {
    return Graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7},
                     {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

Graph prism_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (!(j == i + 1 && i % 2 == 0)) es.push_back({i, j});
    return Graph(6, es);
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph quad_wide_graph() {
    return Graph(10, {{0, 4}, {4, 1}, {0, 5}, {5, 1}, {0, 6}, {6, 1},
                      {2, 7}, {7, 3}, {2, 8}, {8, 3}, {2, 9}, {9, 3},
                      {4, 7}, {5, 8}, {6, 9}});
}

Graph composite_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) es.push_back({i, j});
    for (int i = 5; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) es.push_back({i, j});
    es.push_back({2, 5});
    es.push_back({3, 6});
    es.push_back({4, 7});
    return Graph(10, es);
}

constexpr std::uint64_t kCatalogSeed = 0x2CC0DE5EEDull;

// The "_sub" variant: two distinct seeded-random edges, each split once.
CatalogEntry make_variant(const CatalogEntry& base, int base_index) {
    std::mt19937_64 rng(kCatalogSeed ^ ((static_cast<std::uint64_t>(base_index) + 1) *
                                        0x9E3779B97F4A7C15ull));
    const int m = base.graph.m();
    const int e1 = static_cast<int>(rng() % m);
    int e2 = e1;
    while (e2 == e1) e2 = static_cast<int>(rng() % m);
    std::vector<int> interior(m, 0);
    interior[e1] = 1;
    interior[e2] = 1;
    const SubdivisionResult sub = subdivide_edges(base.graph, interior);

    CatalogEntry v;
    v.name = base.name + "_sub";
    v.graph = sub.subdivided;
    v.planar = base.planar;
    v.petersen_family_minor = base.petersen_family_minor;
    if (base.petersen_minor_model.has_value()) {
        // Interior vertices of a split edge join the branch set of the
        // parent edge's tail, which keeps every branch set connected.
        MinorModel model = *base.petersen_minor_model;
        for (int pe = 0; pe < m; ++pe) {
            int cur = base.graph.edges[pe].tail;
            for (const int ne : sub.arcs[pe]) {
                const Edge ed = sub.subdivided.edges[ne];
                const int next = ed.tail == cur ? ed.head : ed.tail;
                if (sub.parent_vertex[next] == -1)
                    for (auto& set : model.branch_sets)
                        if (std::find(set.begin(), set.end(),
                                      base.graph.edges[pe].tail) != set.end()) {
                            set.push_back(next);
                            break;
                        }
                cur = next;
            }
        }
        v.petersen_minor_model = std::move(model);
    }
    v.kuratowski_connected = base.kuratowski_connected;
    v.kuratowski_connected_curated = base.kuratowski_connected_curated;
    v.notes = "seeded two-edge subdivision variant of " + base.name + ": edges " +
              base.graph.edge_name(e1) + " and " + base.graph.edge_name(e2) +
              " split once";
    if (base.kuratowski_connected_curated)
        v.notes += "; Kuratowski-connected flag curated to false as for the base";
    return v;
}

CatalogEntry entry(std::string name, Graph g, std::string notes) {
    CatalogEntry e;
    e.name = std::move(name);
    e.graph = std::move(g);
    e.notes = std::move(notes);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> bases;

    {
        CatalogEntry e = entry("k4", complete_graph(4),
                               "complete graph on four vertices; planar with its full face "
                               "list; the 2-cycle lattice is trivial");
        e.planar = true;
        e.faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("k5", complete_graph(5),
                               "complete graph on five vertices; linklessly embeddable; the "
                               "lattice exceeds the circuit-pair span by one elementary "
                               "2-cycle");
        e.petersen_family_minor = false;
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("k33", complete_bipartite(3, 3),
                               "complete bipartite graph on parts of three; linklessly "
                               "embeddable; the lattice exceeds the circuit-pair span by one "
                               "elementary 2-cycle");
        e.petersen_family_minor = false;
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("k34", complete_bipartite(3, 4),
                               "complete bipartite graph on parts of three and four; hosts "
                               "width-0 quads; circuit pairs and Kuratowski forms leave a "
                               "rank-2 gap that the quad family closes, so the "
                               "Kuratowski-connected flag is curated to false (the bare "
                               "separation predicate holds only vacuously here)");
        e.kuratowski_connected = false;
        e.kuratowski_connected_curated = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("cube", cube_graph(),
                               "3-cube; planar with its full face list; opposite-face pairs "
                               "form a basis of the lattice");
        e.planar = true;
        e.faces = {{0, 1, 3, 2}, {4, 5, 7, 6}, {0, 1, 5, 4},
                   {2, 3, 7, 6}, {0, 2, 6, 4}, {1, 3, 7, 5}};
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("prism", prism_graph(),
                               "triangular prism; planar with its full face list");
        e.planar = true;
        e.faces = {{0, 1, 2}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {0, 2, 5, 3}};
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("octahedron", octahedron_graph(),
                               "octahedron; planar with its full face list");
        e.planar = true;
        e.faces = {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                   {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}};
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("petersen", petersen(),
                               "Petersen graph; carries its own Petersen-family minor "
                               "model; every Kuratowski form lies in the circuit-pair span");
        e.petersen_family_minor = true;
        MinorModel model;
        model.member = "Petersen";
        for (int i = 0; i < 10; ++i) model.branch_sets.push_back({i});
        e.petersen_minor_model = std::move(model);
        e.kuratowski_connected = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("quad_w0", subdivide_edge(complete_bipartite(3, 4), 0).subdivided,
                               "width-0 quad host: k34 with edge 0-3 subdivided once; all "
                               "three connectors of each quad are single touch vertices; "
                               "Kuratowski-connected flag curated to false as for k34");
        e.kuratowski_connected = false;
        e.kuratowski_connected_curated = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("quad_wide", quad_wide_graph(),
                               "width-positive quad host: two bundles of three paths joined "
                               "by a three-edge matching; its quad has width 3; circuit "
                               "pairs and Kuratowski forms leave a rank-1 gap that the quad "
                               "family closes, so the Kuratowski-connected flag is curated "
                               "to false as for k34");
        e.kuratowski_connected = false;
        e.kuratowski_connected_curated = true;
        bases.push_back(std::move(e));
    }
    {
        CatalogEntry e = entry("composite", composite_graph(),
                               "two K5 blocks joined by a three-edge matching; the order-3 "
                               "separation splits their Kuratowski subgraphs, so the graph "
                               "is not Kuratowski-connected (computed)");
        e.kuratowski_connected = false;
        bases.push_back(std::move(e));
    }

    std::vector<CatalogEntry> out;
    out.reserve(bases.size() * 2);
    for (int i = 0; i < static_cast<int>(bases.size()); ++i) {
        CatalogEntry variant = make_variant(bases[i], i);
        out.push_back(std::move(bases[i]));
        out.push_back(std::move(variant));
    }
    return out;
}

}  // namespace

Graph member_graph(const std::string& name) {
    if (name == "K6") return complete_graph(6);
    if (name == "Petersen") return petersen();
    throw std::invalid_argument("unknown member graph: " + name);
}

bool validate_minor_model(const Graph& host, const MinorModel& model, std::string* why) {
    Graph member;
    try {
        member = member_graph(model.member);
    } catch (const std::invalid_argument& err) {
        return fail(why, err.what());
    }
    if (static_cast<int>(model.branch_sets.size()) != member.n)
        return fail(why, "expected " + std::to_string(member.n) + " branch sets, got " +
                             std::to_string(model.branch_sets.size()));
    std::vector<int> owner(host.n, -1);
    for (int i = 0; i < static_cast<int>(model.branch_sets.size()); ++i) {
        const auto& set = model.branch_sets[i];
        if (set.empty()) return fail(why, "branch set " + std::to_string(i) + " is empty");
        for (const int v : set) {
            if (v < 0 || v >= host.n)
                return fail(why, "branch set " + std::to_string(i) +
                                     " has a vertex out of range");
            if (owner[v] != -1)
                return fail(why, "vertex " + std::to_string(v) +
                                     " lies in two branch sets");
            owner[v] = i;
        }
        // Connectivity of the set inside the host.
        std::vector<int> stack = {set[0]};
        std::vector<bool> seen(host.n, false);
        seen[set[0]] = true;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const int w : host.neighbors(v))
                if (owner[w] == i && !seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != static_cast<int>(set.size()))
            return fail(why, "branch set " + std::to_string(i) + " is not connected");
    }
    for (const Edge me : member.edges) {
        bool found = false;
        for (const Edge he : host.edges) {
            const int a = owner[he.tail], b = owner[he.head];
            if ((a == me.tail && b == me.head) || (a == me.head && b == me.tail)) {
                found = true;
                break;
            }
        }
        if (!found)
            return fail(why, "no host edge realizes member edge " +
                                 std::to_string(me.tail) + "-" + std::to_string(me.head));
    }
    return true;
}

OrientedCycle cycle_through(const Graph& g, const std::vector<int>& vertices) {
    const int k = static_cast<int>(vertices.size());
    if (k < 3) throw std::invalid_argument("cycle_through: need at least three vertices");
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("cycle_through: repeated vertex");
    if (sorted.front() < 0 || sorted.back() >= g.n)
        throw std::invalid_argument("cycle_through: vertex out of range");
    OrientedCycle c;
    c.vertices = vertices;
    for (int i = 0; i < k; ++i) {
        const int u = vertices[i], v = vertices[(i + 1) % k];
        int found = -1;
        for (int e = 0; e < g.m(); ++e) {
            const Edge ed = g.edges[e];
            if ((ed.tail == u && ed.head == v) || (ed.tail == v && ed.head == u)) {
                found = e;
                break;
            }
        }
        if (found < 0)
            throw std::invalid_argument("cycle_through: no edge joins " +
                                        std::to_string(u) + " and " + std::to_string(v));
        c.edges.push_back(found);
    }
    return c;
}

bool validate_face_list(const Graph& g, const std::vector<std::vector<int>>& faces,
                        std::string* why) {
    if (!g.is_connected()) return fail(why, "graph is not connected");
    std::vector<int> cover(g.m(), 0);
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        OrientedCycle c;
        try {
            c = cycle_through(g, faces[i]);
        } catch (const std::invalid_argument& err) {
            return fail(why, "face " + std::to_string(i) + ": " + err.what());
        }
        for (const int e : c.edges) ++cover[e];
    }
    for (int e = 0; e < g.m(); ++e)
        if (cover[e] != 2)
            return fail(why, "edge " + g.edge_name(e) + " lies on " +
                                 std::to_string(cover[e]) + " faces, expected 2");
    const int euler = g.n - g.m() + static_cast<int>(faces.size());
    if (euler != 2)
        return fail(why, "Euler count V - E + F = " + std::to_string(euler) +
                             ", expected 2");
    return true;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : builtin_catalog())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const CatalogEntry& e : builtin_catalog()) names.push_back(e.name);
    return names;
}

std::string catalog_consistency_error(const CatalogEntry& entry) {
    if (entry.name.empty()) return "entry has no name";
    if (entry.graph.n <= 0) return "entry has an empty graph";
    if (entry.planar && entry.petersen_family_minor.has_value())
        return "planar entry carries a Petersen-family flag";
    if (entry.faces.has_value() && !entry.planar)
        return "face list on an entry not flagged planar";
    if (entry.faces.has_value()) {
        std::string why;
        if (!validate_face_list(entry.graph, *entry.faces, &why))
            return "invalid face list: " + why;
    }
    const bool claims_minor = entry.petersen_family_minor.has_value() &&
                              *entry.petersen_family_minor;
    if (entry.petersen_minor_model.has_value() != claims_minor)
        return "minor model presence does not match the Petersen-family flag";
    if (entry.petersen_minor_model.has_value()) {
        std::string why;
        if (!validate_minor_model(entry.graph, *entry.petersen_minor_model, &why))
            return "invalid minor model: " + why;
    }
    return "";
}

}  // namespace twocycle
