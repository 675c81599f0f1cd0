#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "meshtopo/mesh.hpp"

namespace meshtopo {

/// Counts of cycle-instigating and non-instigating elements per dimension.
/// Each dimension's pair sums to the element count: V = VN + VC, etc.
struct InstigatorPartition {
    int VN = 0, VC = 0;
    int EN = 0, EC = 0;
    int FN = 0, FC = 0;

    friend bool operator==(const InstigatorPartition&, const InstigatorPartition&) = default;
};

struct BettiNumbers {
    int b0 = 0, b1 = 0, b2 = 0;

    friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// Quantitative topology of a mesh. `b` and `g` are absent when the mesh
/// does not support them (boundary tracing failed, or the mesh is not a
/// manifold orientable surface).
struct TopologyReport {
    int V = 0, E = 0, F = 0;
    int s = 0;
    std::optional<int> b;
    int chi = 0;
    std::optional<int> g;
    int s_w = 0;
    InstigatorPartition partition;
    BettiNumbers betti;
};

/// Connected components over vertex-edge adjacency; isolated vertices count.
/// Returns the component count and a label per vertex (labels are assigned
/// in ascending order of each component's lowest vertex).
std::pair<int, std::vector<int>> components(const Mesh& m);

/// Boundary cycles as edge loops. Bow-tie vertices are traced through their
/// face fans; throws NonManifoldBoundary when boundary edges cannot be
/// paired at some vertex.
std::pair<int, std::vector<std::vector<EdgeId>>> boundary_cycles(const Mesh& m);

/// One spanning tree of edges per component; always V - s edges in total.
ElementSet spanning_forest(const Mesh& m);

/// Number of closed components: face-connected components (faces joined
/// across edges with exactly two sides) none of whose edges has an odd
/// face-side count.
int watertight_component_count(const Mesh& m);

/// The six instigator/non-instigator counts: VN=0, VC=V, EN=V-s, EC=E-V+s,
/// FN=F-s_w, FC=s_w.
InstigatorPartition instigator_partition(const Mesh& m);

/// Betti numbers from the partition: (VC-EN, EC-FN, FC).
BettiNumbers betti_closed_form(const Mesh& m);

/// Genus of a manifold orientable surface: g = s - (chi + b) / 2.
/// Throws GenusUndefined when the mesh is not manifold-orientable, boundary
/// cycles cannot be counted, (chi + b) is odd, or the result is negative.
int genus(const Mesh& m);

/// Ordering of all mesh elements where every element appears after its
/// boundary elements.
struct Filtration {
    std::vector<ElementRef> order;
};

/// Seeded-random valid filtration; identical seeds give identical orderings
/// on every platform.
Filtration make_filtration(const Mesh& m, std::uint64_t seed);

/// Incremental Betti computation over a filtration: vertices raise b0;
/// edges either raise b1 (endpoints already connected) or lower b0; faces
/// either raise b2 (their face-connected component becomes closed) or lower
/// b1. Requires an edge-manifold mesh and a valid filtration; the result
/// equals betti_closed_form for every valid filtration.
BettiNumbers betti_incremental(const Mesh& m, const Filtration& filt);

/// Full quantitative report; never throws (b and g become nullopt instead).
TopologyReport topology_report(const Mesh& m);

} // namespace meshtopo
