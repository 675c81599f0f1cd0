#include "meshtopo/topology.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <unordered_map>

#include "meshtopo/validation.hpp"
#include "vertex_link.hpp"

namespace meshtopo {

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

std::pair<int, std::vector<int>> components(const Mesh& m) {
    std::vector<int> label(m.vertex_count(), -1);
    int count = 0;
    for (VertexId start = 0; start < m.vertex_count(); ++start) {
        if (label[start] != -1) continue;
        const int comp = count++;
        std::vector<VertexId> stack{start};
        label[start] = comp;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : m.vertex_edges(v)) {
                const VertexId w = m.edge(e).other(v);
                if (label[w] == -1) {
                    label[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    return {count, label};
}

std::pair<int, std::vector<std::vector<EdgeId>>> boundary_cycles(const Mesh& m) {
    std::vector<EdgeId> boundary_edges;
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        if (m.is_boundary_edge(e)) boundary_edges.push_back(e);
    }
    if (boundary_edges.empty()) return {0, {}};

    // Pair boundary edges across the face fan at each boundary vertex.
    std::unordered_map<VertexId, std::unordered_map<EdgeId, EdgeId>> pairing;
    for (EdgeId e : boundary_edges) {
        for (VertexId v : {m.edge(e).a, m.edge(e).b}) {
            if (pairing.count(v)) continue;
            auto link = detail::build_vertex_link(m, v);
            auto pairs = detail::boundary_pairing(link, m);
            if (!pairs) {
                raise(errc::non_manifold_boundary,
                      "boundary edges cannot be paired at vertex " + std::to_string(v));
            }
            pairing.emplace(v, std::move(*pairs));
        }
    }

    std::vector<char> visited(m.edge_count(), 0);
    std::vector<std::vector<EdgeId>> cycles;
    for (EdgeId start : boundary_edges) {
        if (visited[start]) continue;
        std::vector<EdgeId> cycle;
        EdgeId e = start;
        VertexId from = m.edge(start).a;
        do {
            visited[e] = 1;
            cycle.push_back(e);
            const VertexId w = m.edge(e).other(from);
            e = pairing.at(w).at(e);
            from = w;
        } while (e != start);
        cycles.push_back(std::move(cycle));
    }
    return {static_cast<int>(cycles.size()), std::move(cycles)};
}

ElementSet spanning_forest(const Mesh& m) {
    ElementSet forest(Dim::edge);
    std::vector<char> seen(m.vertex_count(), 0);
    for (VertexId start = 0; start < m.vertex_count(); ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        std::vector<VertexId> stack{start};
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : m.vertex_edges(v)) {
                const VertexId w = m.edge(e).other(v);
                if (!seen[w]) {
                    seen[w] = 1;
                    forest.insert(e);
                    stack.push_back(w);
                }
            }
        }
    }
    return forest;
}

int watertight_component_count(const Mesh& m) {
    if (m.face_count() == 0) return 0;
    UnionFind faces(m.face_count());
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        const auto& sides = m.edge(e).sides;
        if (sides.size() == 2) faces.join(sides[0].face, sides[1].face);
    }
    std::vector<char> open(m.face_count(), 0);
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        if (m.edge_side_count(e) % 2 == 0) continue;
        for (const FaceSide& fs : m.edge(e).sides) open[faces.find(fs.face)] = 1;
    }
    int count = 0;
    for (FaceId f = 0; f < m.face_count(); ++f) {
        if (faces.find(f) == f && !open[f]) ++count;
    }
    return count;
}

InstigatorPartition instigator_partition(const Mesh& m) {
    const int s = components(m).first;
    const int s_w = watertight_component_count(m);
    InstigatorPartition p;
    p.VN = 0;
    p.VC = m.vertex_count();
    p.EN = m.vertex_count() - s;
    p.EC = m.edge_count() - p.EN;
    p.FN = m.face_count() - s_w;
    p.FC = s_w;
    return p;
}

BettiNumbers betti_closed_form(const Mesh& m) {
    const InstigatorPartition p = instigator_partition(m);
    return {p.VC - p.EN, p.EC - p.FN, p.FC};
}

int genus(const Mesh& m) {
    if (!check_edge_manifold(m).first || !check_vertex_links(m).first) {
        raise(errc::genus_undefined, "genus requires a manifold mesh");
    }
    if (!check_orientable(m).first) {
        raise(errc::genus_undefined, "genus requires an orientable mesh");
    }
    const int b = boundary_cycles(m).first;
    const int chi = m.vertex_count() - m.edge_count() + m.face_count();
    const int s = components(m).first;
    if ((chi + b) % 2 != 0) {
        raise(errc::genus_undefined, "chi + b is odd");
    }
    const int g = s - (chi + b) / 2;
    if (g < 0) {
        raise(errc::genus_undefined, "negative genus");
    }
    return g;
}

namespace {

// Deterministic across platforms, unlike uniform_int_distribution.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    std::uint64_t r;
    do {
        r = rng() & mask;
    } while (r >= n);
    return r;
}

std::vector<FaceId> distinct_faces(const Mesh& m, EdgeId e) {
    std::vector<FaceId> faces;
    for (const FaceSide& fs : m.edge(e).sides) faces.push_back(fs.face);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return faces;
}

int distinct_edge_count(const Mesh& m, FaceId f) {
    auto edges = m.face_side_edges(f);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return static_cast<int>(edges.size());
}

} // namespace

Filtration make_filtration(const Mesh& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);

    std::vector<int> edge_waiting(m.edge_count(), 2);
    std::vector<int> face_waiting(m.face_count());
    for (FaceId f = 0; f < m.face_count(); ++f) face_waiting[f] = distinct_edge_count(m, f);

    std::vector<ElementRef> pool;
    pool.reserve(m.vertex_count());
    for (VertexId v = 0; v < m.vertex_count(); ++v) pool.push_back({Dim::vertex, v});

    Filtration filt;
    filt.order.reserve(m.vertex_count() + m.edge_count() + m.face_count());
    while (!pool.empty()) {
        const std::size_t pick = bounded_rand(rng, pool.size());
        const ElementRef elem = pool[pick];
        pool[pick] = pool.back();
        pool.pop_back();
        filt.order.push_back(elem);

        if (elem.dim == Dim::vertex) {
            for (EdgeId e : m.vertex_edges(elem.id)) {
                if (--edge_waiting[e] == 0) pool.push_back({Dim::edge, e});
            }
        } else if (elem.dim == Dim::edge) {
            for (FaceId f : distinct_faces(m, elem.id)) {
                if (--face_waiting[f] == 0) pool.push_back({Dim::face, f});
            }
        }
    }
    return filt;
}

BettiNumbers betti_incremental(const Mesh& m, const Filtration& filt) {
    if (!check_edge_manifold(m).first) {
        raise(errc::not_edge_manifold,
              "the incremental face rule needs every edge on at most two faces");
    }
    const std::size_t total = static_cast<std::size_t>(m.vertex_count()) + m.edge_count() +
                              m.face_count();
    if (filt.order.size() != total) {
        raise(errc::invalid_filtration, "filtration does not cover the mesh exactly once");
    }

    std::vector<char> vertex_placed(m.vertex_count(), 0);
    std::vector<char> edge_placed(m.edge_count(), 0);
    std::vector<char> face_placed(m.face_count(), 0);

    UnionFind vertices(m.vertex_count());
    UnionFind faces(std::max(m.face_count(), 1));
    std::vector<int> open_edges(std::max(m.face_count(), 1), 0);
    std::vector<int> side_seen(m.edge_count(), 0);

    BettiNumbers betti;
    for (const ElementRef& elem : filt.order) {
        if (!m.in_range(elem.id, elem.dim)) {
            raise(errc::invalid_filtration, "element out of range");
        }
        switch (elem.dim) {
        case Dim::vertex: {
            if (vertex_placed[elem.id]++) {
                raise(errc::invalid_filtration, "vertex repeated");
            }
            ++betti.b0;
            break;
        }
        case Dim::edge: {
            if (edge_placed[elem.id]++) {
                raise(errc::invalid_filtration, "edge repeated");
            }
            const EdgeRecord& rec = m.edge(elem.id);
            if (!vertex_placed[rec.a] || !vertex_placed[rec.b]) {
                raise(errc::invalid_filtration, "edge precedes an endpoint");
            }
            if (vertices.join(rec.a, rec.b)) {
                --betti.b0;
            } else {
                ++betti.b1;
            }
            break;
        }
        case Dim::face: {
            const FaceId f = elem.id;
            if (face_placed[f]++) {
                raise(errc::invalid_filtration, "face repeated");
            }
            for (EdgeId e : m.face_side_edges(f)) {
                if (!edge_placed[e]) {
                    raise(errc::invalid_filtration, "face precedes one of its edges");
                }
            }
            for (int s = 0; s < m.face_size(f); ++s) {
                const EdgeId e = m.side_edge(f, s);
                if (++side_seen[e] == 2) {
                    // Second side: both user faces are placed now; merge
                    // their components, then the edge closes.
                    const auto& sides = m.edge(e).sides;
                    const FaceId other = sides[0].face == f && sides[0].side == s
                                             ? sides[1].face
                                             : sides[0].face;
                    const int fr = faces.find(f);
                    const int orr = faces.find(other);
                    if (fr != orr) {
                        faces.parent[orr] = fr;
                        open_edges[fr] += open_edges[orr];
                    }
                    --open_edges[faces.find(f)];
                } else {
                    ++open_edges[faces.find(f)];
                }
            }
            if (open_edges[faces.find(f)] == 0) {
                ++betti.b2;
            } else {
                --betti.b1;
            }
            break;
        }
        }
    }
    return betti;
}

TopologyReport topology_report(const Mesh& m) {
    TopologyReport report;
    report.V = m.vertex_count();
    report.E = m.edge_count();
    report.F = m.face_count();
    report.chi = report.V - report.E + report.F;
    report.s = components(m).first;
    report.s_w = watertight_component_count(m);
    report.partition = instigator_partition(m);
    report.betti = betti_closed_form(m);

    try {
        report.b = boundary_cycles(m).first;
    } catch (const MeshError&) {
        report.b = std::nullopt;
    }

    const ValidationReport v = validate(m);
    if (v.manifold() && v.orientable && report.b) {
        const int rhs = report.chi + *report.b;
        if (rhs % 2 == 0 && report.s - rhs / 2 >= 0) {
            report.g = report.s - rhs / 2;
        }
    }
    return report;
}

} // namespace meshtopo
