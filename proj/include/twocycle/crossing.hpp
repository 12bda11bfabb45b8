#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twocycle/bigint.hpp"
#include "twocycle/caps.hpp"
#include "twocycle/forms.hpp"
#include "twocycle/graph.hpp"

namespace twocycle {

// ---------------------------------------------------------------------------
// Exact straight-line drawings
// ---------------------------------------------------------------------------

struct Point {
    Q x;
    Q y;

    bool operator==(const Point&) const = default;
};

// Straight-line drawing: one exact rational point per vertex; every edge is
// the segment between its endpoint positions, directed tail -> head.
struct Drawing {
    std::vector<Point> position;

    bool operator==(const Drawing&) const = default;
};

// Exact genericity test: all vertex positions distinct, no vertex on the open
// segment of a non-incident edge, no two edges overlapping along a segment,
// and no three edge segments through a common interior point. On failure the
// optional witness names the first violation found.
bool is_generic(const Graph& g, const Drawing& dr, std::string* why = nullptr);

// Signed crossing number of two nonadjacent edges: +1 per transversal
// crossing where (direction of f, direction of g_edge) is a right-handed
// frame, -1 where it is left-handed; 0 when the segments do not cross.
// Straight segments cross at most once, so the value lies in {-1, 0, 1}.
// Adjacent edges are rejected. The drawing must be generic.
int signed_crossing(const Graph& g, const Drawing& dr, int f, int g_edge);

// kr(d) = sum over entries d(f, g) * signed_crossing(f, g). Entries on
// adjacent edge pairs are rejected. Zero for every 2-cycle, independent of
// the drawing.
Z kr_functional(const Graph& g, const Drawing& dr, const Form2& d);

// Deterministic rejection sampling: vertex positions drawn uniformly from the
// 2^20 x 2^20 integer grid using the given seed, resampled until generic.
// Graphs with parallel edges have no generic straight-line drawing and are
// rejected.
Drawing random_generic_drawing(const Graph& g, std::uint64_t seed, int max_attempts = 64);

// ---------------------------------------------------------------------------
// Randomized vanishing trials
// ---------------------------------------------------------------------------

// One batch of trials on a single graph: each trial draws the graph afresh
// and evaluates kr on one 2-cycle (the lattice basis forms first, then random
// integer combinations with coefficients in [-3, 3]). Antisymmetry of
// signed_crossing is checked on every nonadjacent pair of the first drawing.
struct CrossingTrialReport {
    int trials = 0;
    int zero_values = 0;
    bool antisymmetry_ok = false;
    std::string detail;

    bool all_zero() const { return trials > 0 && zero_values == trials; }
    bool pass() const { return all_zero() && antisymmetry_ok; }
};

CrossingTrialReport run_crossing_trials(const Graph& g, std::uint64_t seed, int trials,
                                        const CapConfig& caps = default_caps());

}  // namespace twocycle
