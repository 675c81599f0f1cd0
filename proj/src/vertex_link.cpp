#include "vertex_link.hpp"

#include <algorithm>

namespace meshtopo::detail {

VertexLink build_vertex_link(const Mesh& m, VertexId v) {
    VertexLink link;
    link.vertex = v;
    link.nodes = m.vertex_edges(v);
    for (std::size_t i = 0; i < link.nodes.size(); ++i) {
        link.node_index[link.nodes[i]] = static_cast<int>(i);
    }

    // Every side of an incident edge contributes one corner at v. A corner
    // may be reached from both of its edges (and twice from one edge when a
    // face folds back on it), so collect and dedupe by (face, corner).
    std::vector<std::pair<FaceId, int>> corner_keys;
    for (EdgeId e : link.nodes) {
        for (const FaceSide& fs : m.edge(e).sides) {
            const auto& cycle = m.face(fs.face);
            const int n = static_cast<int>(cycle.size());
            const int c = cycle[fs.side] == v ? fs.side : (fs.side + 1) % n;
            corner_keys.emplace_back(fs.face, c);
        }
    }
    std::sort(corner_keys.begin(), corner_keys.end());
    corner_keys.erase(std::unique(corner_keys.begin(), corner_keys.end()), corner_keys.end());

    link.node_corners.resize(link.nodes.size());
    for (const auto& [f, c] : corner_keys) {
        const int n = m.face_size(f);
        LinkCorner corner;
        corner.face = f;
        corner.corner = c;
        corner.node_prev = link.node_of(m.side_edge(f, (c + n - 1) % n));
        corner.node_next = link.node_of(m.side_edge(f, c));
        const int id = static_cast<int>(link.corners.size());
        link.corners.push_back(corner);
        link.node_corners[corner.node_prev].push_back(id);
        link.node_corners[corner.node_next].push_back(id);
    }
    return link;
}

std::vector<std::vector<int>> link_components(const VertexLink& link) {
    const int n = static_cast<int>(link.nodes.size());
    std::vector<int> label(n, -1);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < n; ++start) {
        if (label[start] != -1) continue;
        const int comp = static_cast<int>(components.size());
        components.emplace_back();
        std::vector<int> stack{start};
        label[start] = comp;
        while (!stack.empty()) {
            const int node = stack.back();
            stack.pop_back();
            components[comp].push_back(node);
            for (int c : link.node_corners[node]) {
                for (int other : {link.corners[c].node_prev, link.corners[c].node_next}) {
                    if (label[other] == -1) {
                        label[other] = comp;
                        stack.push_back(other);
                    }
                }
            }
        }
        std::sort(components[comp].begin(), components[comp].end());
    }
    return components;
}

std::optional<std::unordered_map<EdgeId, EdgeId>> boundary_pairing(const VertexLink& link,
                                                                   const Mesh& m) {
    std::unordered_map<EdgeId, EdgeId> pairing;
    std::vector<char> done(link.nodes.size(), 0);
    for (std::size_t start = 0; start < link.nodes.size(); ++start) {
        if (done[start] || !m.is_boundary_edge(link.nodes[start])) continue;
        if (link.degree(static_cast<int>(start)) != 1) return std::nullopt;

        // Walk the fan from one boundary edge to the other.
        int node = static_cast<int>(start);
        int corner = link.node_corners[node][0];
        while (true) {
            const LinkCorner& c = link.corners[corner];
            const int next = c.node_prev == node ? c.node_next : c.node_prev;
            if (next == node) return std::nullopt; // folded corner
            const int deg = link.degree(next);
            if (deg == 1) {
                if (!m.is_boundary_edge(link.nodes[next])) return std::nullopt;
                pairing[link.nodes[start]] = link.nodes[next];
                pairing[link.nodes[next]] = link.nodes[start];
                done[start] = done[next] = 1;
                break;
            }
            if (deg != 2) return std::nullopt;
            const auto& cs = link.node_corners[next];
            corner = cs[0] == corner ? cs[1] : cs[0];
            node = next;
        }
    }
    return pairing;
}

std::vector<std::vector<int>> cut_wedges(const VertexLink& link,
                                         const std::vector<char>& node_is_cut) {
    std::vector<std::vector<int>> wedges;
    std::vector<char> corner_used(link.corners.size(), 0);

    for (std::size_t n = 0; n < link.nodes.size(); ++n) {
        if (!node_is_cut[n]) continue;
        for (int c0 : link.node_corners[n]) {
            if (corner_used[c0]) continue;
            std::vector<int> wedge;
            int entered_from = static_cast<int>(n);
            int corner = c0;
            while (true) {
                corner_used[corner] = 1;
                wedge.push_back(corner);
                const LinkCorner& c = link.corners[corner];
                const int exit =
                    c.node_prev == entered_from && c.node_next != entered_from ? c.node_next
                    : c.node_next == entered_from && c.node_prev != entered_from
                        ? c.node_prev
                        : entered_from; // folded corner stays on its node
                if (node_is_cut[exit]) break;
                const auto& cs = link.node_corners[exit];
                int next_corner = -1;
                for (int cand : cs) {
                    if (!corner_used[cand]) {
                        next_corner = cand;
                        break;
                    }
                }
                if (next_corner == -1) break;
                entered_from = exit;
                corner = next_corner;
            }
            wedges.push_back(std::move(wedge));
        }
    }

    // Fans not touching any cut edge keep their corners together.
    auto components = link_components(link);
    for (const auto& comp : components) {
        bool touches_cut = false;
        for (int node : comp) touches_cut = touches_cut || node_is_cut[node];
        if (touches_cut) continue;
        std::vector<int> wedge;
        for (int node : comp) {
            for (int c : link.node_corners[node]) {
                if (!corner_used[c]) {
                    corner_used[c] = 1;
                    wedge.push_back(c);
                }
            }
        }
        if (!wedge.empty()) wedges.push_back(std::move(wedge));
    }
    return wedges;
}

} // namespace meshtopo::detail
