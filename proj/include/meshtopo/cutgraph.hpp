#pragma once

#include <optional>
#include <vector>

#include "meshtopo/mesh.hpp"

namespace meshtopo {

/// Shortest-path tree over mesh vertices. Spans the root's component;
/// vertices of other components have no parent edge and infinite distance.
struct VertexTree {
    VertexId root = -1;
    std::vector<std::optional<EdgeId>> parent_edge;
    std::vector<double> distance;
    std::vector<char> edge_in_tree;

    bool contains(EdgeId e) const { return edge_in_tree[e]; }
    ElementSet edges() const;
};

/// Spanning tree of the dual graph (faces joined across shared edges),
/// avoiding every primal tree edge.
struct FaceCoTree {
    FaceId root = -1;
    std::vector<std::optional<EdgeId>> parent_edge;
    std::vector<char> edge_in_cotree;

    bool contains(EdgeId e) const { return edge_in_cotree[e]; }
    ElementSet edges() const;
};

/// The generator loops of a closed surface and their union B. For genus 0
/// there are no loops and `puncture_path` holds the two-edge open cut that
/// punctures the sphere (a one-edge slit cannot be represented with edges
/// keyed by vertex pair, so the minimal puncture is a path of two edges).
struct CutGraph {
    std::vector<std::vector<EdgeId>> loops;
    ElementSet b_edges{Dim::edge};
    VertexId root = -1;
    std::vector<EdgeId> puncture_path;

    /// b_edges together with the puncture path; what `cut_mesh` should cut.
    ElementSet cut_edges() const;
};

/// Dijkstra from `root`; weights are Euclidean edge lengths when positions
/// exist, hop counts otherwise. Deterministic: the frontier pops by
/// (distance, vertex id) and equal-distance parents prefer the lowest edge
/// id.
VertexTree shortest_path_tree(const Mesh& m, VertexId root);

/// Breadth-first co-tree growth from `start_face`, adding a dual edge only
/// when the shared edge is not in the vertex tree. Requires a closed,
/// connected, edge-manifold mesh; the co-tree then has F - 1 edges.
FaceCoTree cotree(const Mesh& m, const VertexTree& tree, FaceId start_face);

/// Edges in neither tree; there are exactly beta_1 of them.
ElementSet instigator_edges(const Mesh& m, const VertexTree& tree, const FaceCoTree& ct);

/// Closed loop formed by e plus the tree paths from its endpoints to their
/// lowest common ancestor. Requires e outside the tree.
std::vector<EdgeId> trace_loop(const Mesh& m, EdgeId e, const VertexTree& tree);

/// Full pipeline: shortest-path tree, co-tree, instigator edges, traced
/// loops. Requires a closed, connected, edge-manifold, orientable mesh.
CutGraph build_cut_graph(const Mesh& m, VertexId root);

/// Cut the mesh open along the given edges. Every cut edge becomes two
/// boundary edges and every vertex on d >= 1 cut edges splits into one copy
/// per fan of faces between consecutive cut edges around it.
///
/// Requires a closed edge-manifold mesh. Rejects a cut component consisting
/// of a single edge (DegenerateCut: the two sides of the slit would collapse
/// back onto one vertex pair) and an empty cut on a positive-genus component
/// (EmptyCutOnPositiveGenus).
Mesh cut_mesh(const Mesh& m, const ElementSet& cut);

/// Cut along every edge outside the co-tree. The result always has disc
/// topology, which makes this an independent oracle for cut_mesh.
Mesh cut_all_but_cotree(const Mesh& m, const FaceCoTree& ct);

} // namespace meshtopo
