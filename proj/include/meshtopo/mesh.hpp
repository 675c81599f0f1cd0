#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "meshtopo/errors.hpp"

namespace meshtopo {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

/// Element dimension: 0 = vertex, 1 = edge, 2 = face.
enum class Dim : int { vertex = 0, edge = 1, face = 2 };

/// One face-side incidence of an edge: face id plus the side index within
/// that face's cyclic vertex list.
struct FaceSide {
    FaceId face = -1;
    int side = -1;

    friend bool operator==(const FaceSide&, const FaceSide&) = default;
};

/// Derived edge record: the unordered vertex pair (stored with a < b) and
/// every face side mapped onto it, in first-occurrence order.
struct EdgeRecord {
    VertexId a = -1;
    VertexId b = -1;
    std::vector<FaceSide> sides;

    VertexId other(VertexId v) const { return v == a ? b : a; }
};

/// Indexed polygon mesh with a derived edge table. Immutable after build;
/// safe to share across threads.
///
/// Edge ids are assigned in first-occurrence order over faces, then side
/// order, so identical face lists always produce identical edge ids. Edges
/// are keyed by unordered vertex pair: two distinct edges between the same
/// pair of vertices are not representable.
class Mesh {
public:
    Mesh() = default;

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<std::vector<VertexId>>& faces() const { return faces_; }
    const std::vector<VertexId>& face(FaceId f) const { return faces_[f]; }
    int face_size(FaceId f) const { return static_cast<int>(faces_[f].size()); }

    const std::vector<EdgeRecord>& edges() const { return edges_; }
    const EdgeRecord& edge(EdgeId e) const { return edges_[e]; }

    /// Edge id of side i of face f (the side from face[i] to face[i+1]).
    EdgeId side_edge(FaceId f, int side) const { return face_edges_[f][side]; }
    const std::vector<EdgeId>& face_side_edges(FaceId f) const { return face_edges_[f]; }

    /// Incident edges of a vertex, ascending edge id.
    const std::vector<EdgeId>& vertex_edges(VertexId v) const { return vertex_edges_[v]; }

    /// Number of face-side incidences of an edge (counts a face twice when
    /// the edge appears on two of its sides).
    int edge_side_count(EdgeId e) const { return static_cast<int>(edges_[e].sides.size()); }

    bool is_boundary_edge(EdgeId e) const { return edge_side_count(e) == 1; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    bool has_positions() const { return positions_.has_value(); }
    const std::vector<Vec3>& positions() const;

    /// Euclidean length when positions are present, 1 otherwise.
    double edge_length(EdgeId e) const;

    bool in_range(VertexId v, Dim d) const;

private:
    friend Mesh build_mesh(int, std::vector<std::vector<VertexId>>, std::optional<std::vector<Vec3>>);

    int vertex_count_ = 0;
    std::vector<std::vector<VertexId>> faces_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<EdgeId>> face_edges_;
    std::vector<std::vector<EdgeId>> vertex_edges_;
    std::optional<std::vector<Vec3>> positions_;
};

/// Build a mesh from an indexed face list.
///
/// Rejects out-of-range indices, faces shorter than 3 vertices, consecutive
/// duplicate vertices (self-loop edges), and a position table whose length
/// does not match vertex_count. Faces that revisit a vertex non-consecutively
/// (multiple incidence) are accepted here and flagged by validation.
Mesh build_mesh(int vertex_count, std::vector<std::vector<VertexId>> faces,
                std::optional<std::vector<Vec3>> positions = std::nullopt);

/// Reference to one mesh element.
struct ElementRef {
    Dim dim = Dim::vertex;
    int id = -1;

    friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

/// Duplicate-free set of mesh elements of a single dimension, kept sorted.
class ElementSet {
public:
    explicit ElementSet(Dim dim) : dim_(dim) {}
    ElementSet(Dim dim, std::vector<int> ids);

    Dim dim() const { return dim_; }
    const std::vector<int>& ids() const { return ids_; }

    bool contains(int id) const;
    void insert(int id);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    Dim dim_;
    std::vector<int> ids_;
};

/// Boundary of a single element: a face maps to the set of its edges, an
/// edge to its two vertices, a vertex to the empty vertex set.
ElementSet boundary(ElementRef e, const Mesh& m);

/// Members of x whose boundary contains eps. Requires dim(eps) == dim(x) - 1.
ElementSet coboundary(const ElementSet& x, ElementRef eps, const Mesh& m);

/// Elements of the union of member boundaries incident on exactly one
/// member of x. Vertex sets have empty boundary.
ElementSet boundary_of_set(const ElementSet& x, const Mesh& m);

/// True iff boundary_of_set(x) is empty. Vertex sets are trivially cycles.
bool is_cycle(const ElementSet& x, const Mesh& m);

/// True iff x is a single connected component and every boundary element of
/// a member is incident on exactly two members. Vertex sets are never simple
/// cycles.
bool is_simple_cycle(const ElementSet& x, const Mesh& m);

} // namespace meshtopo
