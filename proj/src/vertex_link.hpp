#pragma once

// Internal helper: the corner structure around one vertex.
//
// Nodes are the incident edges of the vertex; each face corner at the vertex
// joins the two side edges meeting there. An edge's node degree equals its
// face-side count, so boundary edges are degree-1 nodes, interior manifold
// edges degree-2, and non-manifold edges degree >= 3. Components of this
// multigraph are the fans ("wedges") of faces around the vertex.

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "meshtopo/mesh.hpp"

namespace meshtopo::detail {

struct LinkCorner {
    FaceId face = -1;
    int corner = -1; // index into the face's vertex cycle
    int node_prev = -1;
    int node_next = -1;
};

struct VertexLink {
    VertexId vertex = -1;
    std::vector<EdgeId> nodes;          // incident edges, ascending
    std::vector<LinkCorner> corners;    // deterministic (face, corner) order
    std::vector<std::vector<int>> node_corners; // corner indices per node

    int node_of(EdgeId e) const {
        auto it = node_index.find(e);
        return it == node_index.end() ? -1 : it->second;
    }

    int degree(int node) const { return static_cast<int>(node_corners[node].size()); }

    std::unordered_map<EdgeId, int> node_index;
};

VertexLink build_vertex_link(const Mesh& m, VertexId v);

/// Connected components over link nodes; each entry lists node indices.
std::vector<std::vector<int>> link_components(const VertexLink& link);

/// For each boundary edge at the vertex, the boundary edge it pairs with
/// across its fan. Empty optional when some fan containing a boundary edge
/// is not a simple open path (pairing impossible).
std::optional<std::unordered_map<EdgeId, EdgeId>> boundary_pairing(const VertexLink& link,
                                                                   const Mesh& m);

/// Corner groups after removing the given cut-edge nodes: one group per arc
/// between consecutive cut edges, plus one per untouched closed fan. Corner
/// indices refer to link.corners.
std::vector<std::vector<int>> cut_wedges(const VertexLink& link,
                                         const std::vector<char>& node_is_cut);

} // namespace meshtopo::detail
