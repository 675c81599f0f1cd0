#include "meshtopo/validation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "vertex_link.hpp"

namespace meshtopo {

std::pair<bool, std::vector<EdgeId>> check_edge_manifold(const Mesh& m) {
    std::vector<EdgeId> offenders;
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        const int deg = m.edge_side_count(e);
        if (deg != 1 && deg != 2) offenders.push_back(e);
    }
    return {offenders.empty(), offenders};
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

    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

std::pair<bool, std::vector<VertexId>> check_vertex_links(const Mesh& m) {
    std::vector<VertexId> offenders;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        const auto& incident = m.vertex_edges(v);
        if (incident.size() < 2) continue;

        auto link = detail::build_vertex_link(m, v);
        UnionFind uf(static_cast<int>(link.nodes.size()));
        int classes = static_cast<int>(link.nodes.size());
        // Two incident edges are equivalent when some face contains both;
        // every corner of that face at v ties its two side edges together,
        // and corners of one face tie transitively through the face.
        int prev_face = -1;
        int face_anchor = -1;
        for (const auto& corner : link.corners) {
            if (uf.join(corner.node_prev, corner.node_next)) --classes;
            if (corner.face == prev_face) {
                if (uf.join(face_anchor, corner.node_prev)) --classes;
            } else {
                prev_face = corner.face;
                face_anchor = corner.node_prev;
            }
        }
        if (classes > 1) offenders.push_back(v);
    }
    return {offenders.empty(), offenders};
}

namespace {

// Orientation propagation over face adjacency. Skips edges whose side count
// is not exactly two; with `require_manifold` those edges make the answer
// unreliable rather than wrong.
std::pair<bool, std::optional<EdgeId>> orientability_scan(const Mesh& m) {
    std::vector<int> sign(m.face_count(), 0);
    for (FaceId start = 0; start < m.face_count(); ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::deque<FaceId> queue{start};
        while (!queue.empty()) {
            const FaceId f = queue.front();
            queue.pop_front();
            for (int s = 0; s < m.face_size(f); ++s) {
                const EdgeId e = m.side_edge(f, s);
                const EdgeRecord& rec = m.edge(e);
                if (rec.sides.size() != 2) continue;
                const FaceSide other =
                    rec.sides[0].face == f && rec.sides[0].side == s ? rec.sides[1] : rec.sides[0];
                const int d_here = m.face(f)[s] == rec.a ? 1 : -1;
                const int d_there = m.face(other.face)[other.side] == rec.a ? 1 : -1;
                const int wanted = -sign[f] * d_here * d_there;
                if (sign[other.face] == 0) {
                    sign[other.face] = wanted;
                    queue.push_back(other.face);
                } else if (sign[other.face] != wanted) {
                    return {false, e};
                }
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace

std::pair<bool, std::optional<EdgeId>> check_orientable(const Mesh& m) {
    if (auto [ok, offenders] = check_edge_manifold(m); !ok) {
        raise(errc::not_edge_manifold,
              "orientability needs every edge on at most two faces; edge " +
                  std::to_string(offenders.front()) + " violates this");
    }
    return orientability_scan(m);
}

bool check_watertight(const Mesh& m) {
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        if (m.edge_side_count(e) == 1) return false;
    }
    return true;
}

std::vector<BowtieVertex> classify_boundary_vertices(const Mesh& m) {
    std::vector<BowtieVertex> result;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        int boundary_count = 0;
        for (EdgeId e : m.vertex_edges(v)) {
            if (m.is_boundary_edge(e)) ++boundary_count;
        }
        if (boundary_count <= 2) continue;

        auto link = detail::build_vertex_link(m, v);
        bool acceptable = true;
        for (const auto& comp : detail::link_components(link)) {
            bool has_boundary = false;
            bool clean = true;
            for (int node : comp) {
                has_boundary = has_boundary || m.is_boundary_edge(link.nodes[node]);
                clean = clean && link.degree(node) <= 2;
            }
            // A fan is fine when it is a plain path: exactly two boundary
            // edges cap it. Anything branching near a boundary edge cannot
            // be closed into a manifold.
            if (has_boundary && !clean) acceptable = false;
        }
        result.push_back({v, boundary_count, acceptable});
    }
    return result;
}

ValidationReport validate(const Mesh& m) {
    ValidationReport report;

    std::tie(report.edge_manifold, report.non_manifold_edges) = check_edge_manifold(m);
    std::tie(report.vertex_links_connected, report.disconnected_link_vertices) =
        check_vertex_links(m);

    for (FaceId f = 0; f < m.face_count(); ++f) {
        auto cycle = m.face(f);
        std::sort(cycle.begin(), cycle.end());
        if (std::adjacent_find(cycle.begin(), cycle.end()) != cycle.end()) {
            report.multiple_incidence_faces.push_back(f);
        }
    }
    report.faces_simple = report.multiple_incidence_faces.empty();

    std::tie(report.orientable, report.orientation_witness) = orientability_scan(m);
    report.orientability_reliable = report.edge_manifold;

    report.watertight = check_watertight(m);
    report.boundary_bowtie_vertices = classify_boundary_vertices(m);

    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        if (m.vertex_edges(v).empty()) report.isolated_vertices.push_back(v);
    }
    return report;
}

} // namespace meshtopo
