#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "meshtopo/mesh.hpp"

namespace meshtopo {

struct BowtieVertex {
    VertexId vertex = -1;
    int boundary_edge_count = 0;
    bool acceptable = false;
};

/// Qualitative topology of a mesh: manifoldness, orientability,
/// watertightness, face simplicity, and boundary bow-tie classification.
/// A mesh is manifold iff edge_manifold and vertex_links_connected hold.
struct ValidationReport {
    bool edge_manifold = true;
    std::vector<EdgeId> non_manifold_edges;

    bool vertex_links_connected = true;
    std::vector<VertexId> disconnected_link_vertices;

    bool faces_simple = true;
    std::vector<FaceId> multiple_incidence_faces;

    bool orientable = true;
    std::optional<EdgeId> orientation_witness;
    bool orientability_reliable = true; // false when edge_manifold failed

    bool watertight = true;

    std::vector<BowtieVertex> boundary_bowtie_vertices;
    std::vector<VertexId> isolated_vertices;

    bool manifold() const { return edge_manifold && vertex_links_connected; }
    bool passed() const { return manifold() && orientable; }
};

/// True iff every edge has one or two face-side incidences; offenders listed
/// ascending.
std::pair<bool, std::vector<EdgeId>> check_edge_manifold(const Mesh& m);

/// True iff the edges incident on each vertex form a single class under the
/// transitive "share an incident face" relation.
std::pair<bool, std::vector<VertexId>> check_vertex_links(const Mesh& m);

/// Propagates face orientations across interior edges; false with the first
/// conflicting edge (deterministic traversal: lowest-id start face, neighbor
/// order by side index) when no consistent assignment exists.
/// Throws NotEdgeManifold if some edge has more than two face sides.
std::pair<bool, std::optional<EdgeId>> check_orientable(const Mesh& m);

/// True iff no edge has exactly one face-side incidence.
bool check_watertight(const Mesh& m);

/// Vertices with more than two incident boundary edges, tagged acceptable
/// when every fan of faces around the vertex contributes exactly two of
/// them (the configuration closes to a manifold).
std::vector<BowtieVertex> classify_boundary_vertices(const Mesh& m);

/// All checks in one report. Never throws: on non-edge-manifold meshes the
/// orientability answer is best-effort and flagged unreliable.
ValidationReport validate(const Mesh& m);

} // namespace meshtopo
