#include "meshtopo/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace meshtopo {

const char* errc_name(errc code) {
    switch (code) {
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_loop_edge: return "SelfLoopEdge";
    case errc::degenerate_face: return "DegenerateFace";
    case errc::position_count_mismatch: return "PositionCountMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_edge_manifold: return "NotEdgeManifold";
    case errc::non_manifold_boundary: return "NonManifoldBoundary";
    case errc::genus_undefined: return "GenusUndefined";
    case errc::invalid_filtration: return "InvalidFiltration";
    case errc::mesh_not_closed: return "MeshNotClosed";
    case errc::mesh_not_connected: return "MeshNotConnected";
    case errc::mesh_not_manifold: return "MeshNotManifold";
    case errc::mesh_not_orientable: return "MeshNotOrientable";
    case errc::cut_edge_on_boundary: return "CutEdgeOnBoundary";
    case errc::empty_cut_on_positive_genus: return "EmptyCutOnPositiveGenus";
    case errc::degenerate_cut: return "DegenerateCut";
    case errc::invalid_spec: return "InvalidSpec";
    case errc::parse_error: return "ParseError";
    case errc::missing_positions: return "MissingPositions";
    }
    return "UnknownError";
}

std::optional<EdgeId> Mesh::find_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count_) return std::nullopt;
    for (EdgeId e : vertex_edges_[u]) {
        if (edges_[e].a == u && edges_[e].b == v) return e;
    }
    return std::nullopt;
}

const std::vector<Vec3>& Mesh::positions() const {
    if (!positions_) raise(errc::missing_positions, "mesh has no vertex positions");
    return *positions_;
}

double Mesh::edge_length(EdgeId e) const {
    if (!positions_) return 1.0;
    const Vec3& p = (*positions_)[edges_[e].a];
    const Vec3& q = (*positions_)[edges_[e].b];
    const double dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

bool Mesh::in_range(int id, Dim d) const {
    switch (d) {
    case Dim::vertex: return id >= 0 && id < vertex_count_;
    case Dim::edge: return id >= 0 && id < edge_count();
    case Dim::face: return id >= 0 && id < face_count();
    }
    return false;
}

Mesh build_mesh(int vertex_count, std::vector<std::vector<VertexId>> faces,
                std::optional<std::vector<Vec3>> positions) {
    if (vertex_count < 0) raise(errc::index_out_of_range, "negative vertex count");
    if (positions && static_cast<int>(positions->size()) != vertex_count) {
        raise(errc::position_count_mismatch,
              "got " + std::to_string(positions->size()) + " positions for " +
                  std::to_string(vertex_count) + " vertices");
    }

    Mesh m;
    m.vertex_count_ = vertex_count;
    m.positions_ = std::move(positions);
    m.vertex_edges_.resize(vertex_count);

    std::unordered_map<std::uint64_t, EdgeId> edge_of_pair;
    m.faces_.reserve(faces.size());
    m.face_edges_.reserve(faces.size());

    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& cycle = faces[f];
        const int n = static_cast<int>(cycle.size());
        if (n < 3) {
            raise(errc::degenerate_face,
                  "face " + std::to_string(f) + " has " + std::to_string(n) + " vertices");
        }
        for (int i = 0; i < n; ++i) {
            if (cycle[i] < 0 || cycle[i] >= vertex_count) {
                raise(errc::index_out_of_range,
                      "face " + std::to_string(f) + " references vertex " +
                          std::to_string(cycle[i]));
            }
            if (cycle[i] == cycle[(i + 1) % n]) {
                raise(errc::self_loop_edge,
                      "face " + std::to_string(f) + " repeats vertex " +
                          std::to_string(cycle[i]) + " consecutively");
            }
        }

        std::vector<EdgeId> side_edges(n);
        for (int i = 0; i < n; ++i) {
            VertexId u = cycle[i];
            VertexId v = cycle[(i + 1) % n];
            if (u > v) std::swap(u, v);
            const std::uint64_t key =
                (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
            auto [it, inserted] = edge_of_pair.try_emplace(key, m.edge_count());
            if (inserted) {
                EdgeRecord rec;
                rec.a = u;
                rec.b = v;
                m.edges_.push_back(std::move(rec));
                m.vertex_edges_[u].push_back(it->second);
                m.vertex_edges_[v].push_back(it->second);
            }
            m.edges_[it->second].sides.push_back({static_cast<FaceId>(f), i});
            side_edges[i] = it->second;
        }
        m.face_edges_.push_back(std::move(side_edges));
        m.faces_.push_back(cycle);
    }

    // vertex_edges_ entries were appended in edge-id order already.
    return m;
}

ElementSet::ElementSet(Dim dim, std::vector<int> ids) : dim_(dim), ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ElementSet::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

void ElementSet::insert(int id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

namespace {

void require_ref(ElementRef e, const Mesh& m) {
    if (!m.in_range(e.id, e.dim)) {
        raise(errc::index_out_of_range,
              "element id " + std::to_string(e.id) + " of dimension " +
                  std::to_string(static_cast<int>(e.dim)));
    }
}

// Boundary ids of one element, duplicate-free (a face lists a multiply
// incident edge once: the boundary operator is set-valued).
std::vector<int> boundary_ids(ElementRef e, const Mesh& m) {
    switch (e.dim) {
    case Dim::vertex:
        return {};
    case Dim::edge:
        return {m.edge(e.id).a, m.edge(e.id).b};
    case Dim::face: {
        std::vector<int> ids = m.face_side_edges(e.id);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    }
    }
    return {};
}

} // namespace

ElementSet boundary(ElementRef e, const Mesh& m) {
    require_ref(e, m);
    const Dim out_dim = e.dim == Dim::face  ? Dim::edge
                        : e.dim == Dim::edge ? Dim::vertex
                                             : Dim::vertex;
    return ElementSet(out_dim, boundary_ids(e, m));
}

ElementSet coboundary(const ElementSet& x, ElementRef eps, const Mesh& m) {
    require_ref(eps, m);
    if (x.dim() == Dim::vertex || static_cast<int>(eps.dim) != static_cast<int>(x.dim()) - 1) {
        raise(errc::dimension_mismatch, "coboundary expects dim(eps) == dim(set) - 1");
    }
    ElementSet result(x.dim());
    for (int id : x.ids()) {
        for (int b : boundary_ids({x.dim(), id}, m)) {
            if (b == eps.id) {
                result.insert(id);
                break;
            }
        }
    }
    return result;
}

ElementSet boundary_of_set(const ElementSet& x, const Mesh& m) {
    if (x.dim() == Dim::vertex) return ElementSet(Dim::vertex);
    const Dim out_dim = x.dim() == Dim::face ? Dim::edge : Dim::vertex;
    std::unordered_map<int, int> incidence;
    for (int id : x.ids()) {
        require_ref({x.dim(), id}, m);
        for (int b : boundary_ids({x.dim(), id}, m)) ++incidence[b];
    }
    std::vector<int> once;
    for (const auto& [elem, count] : incidence) {
        if (count == 1) once.push_back(elem);
    }
    return ElementSet(out_dim, std::move(once));
}

bool is_cycle(const ElementSet& x, const Mesh& m) {
    return boundary_of_set(x, m).empty();
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Returns false when already joined.
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

bool is_simple_cycle(const ElementSet& x, const Mesh& m) {
    if (x.dim() == Dim::vertex || x.empty()) return false;

    // |delta_X| == 2 for every boundary element, and members connected
    // through shared boundary elements.
    std::unordered_map<int, std::vector<int>> members_of;
    const auto& ids = x.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (int b : boundary_ids({x.dim(), ids[i]}, m)) {
            members_of[b].push_back(static_cast<int>(i));
        }
    }
    UnionFind uf(static_cast<int>(ids.size()));
    int component_count = static_cast<int>(ids.size());
    for (const auto& [elem, members] : members_of) {
        if (members.size() != 2) return false;
        if (uf.join(members[0], members[1])) --component_count;
    }
    return component_count == 1;
}

} // namespace meshtopo
