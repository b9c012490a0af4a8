#include "iqpsim/kasteleyn.h"

#include <queue>
#include <stdexcept>

namespace iqpsim {

namespace {

bool against(const std::vector<uint8_t> &forward, size_t dart) {
    bool dart_forward = (dart & 1) == 0;
    return forward[dart / 2] != dart_forward;
}

}  // namespace

Orientation kasteleyn_orient(const PlanarEmbedding &emb, size_t outer_face) {
    if (!is_planar_embedding(emb)) {
        throw std::invalid_argument("embedding fails the planarity check");
    }
    size_t components = 0;
    component_labels(emb, &components);
    if (components > 1) {
        throw std::invalid_argument("Kasteleyn orientation needs a connected embedding");
    }
    auto faces = trace_faces(emb);
    Orientation out;
    out.forward.assign(emb.edges.size(), 1);
    if (emb.edges.empty()) {
        return out;
    }
    if (outer_face >= faces.size()) {
        throw std::invalid_argument("outer face index out of range");
    }
    out.outer_face = outer_face;

    std::vector<std::vector<size_t>> incident(emb.num_vertices);
    for (size_t e = 0; e < emb.edges.size(); e++) {
        incident[emb.edges[e].u].push_back(e);
        incident[emb.edges[e].v].push_back(e);
    }
    std::vector<uint8_t> in_tree(emb.edges.size(), 0);
    std::vector<uint8_t> reached(emb.num_vertices, 0);
    std::queue<size_t> bfs;
    bfs.push(0);
    reached[0] = 1;
    while (!bfs.empty()) {
        size_t x = bfs.front();
        bfs.pop();
        for (auto e : incident[x]) {
            size_t y = emb.edges[e].u == x ? emb.edges[e].v : emb.edges[e].u;
            if (!reached[y]) {
                reached[y] = 1;
                in_tree[e] = 1;
                out.forward[e] = emb.edges[e].u < emb.edges[e].v;
                bfs.push(y);
            }
        }
    }

    std::vector<size_t> face_of(2 * emb.edges.size());
    for (size_t f = 0; f < faces.size(); f++) {
        for (auto d : faces[f]) {
            face_of[d] = f;
        }
    }
    // dual tree: faces joined by the co-tree edges
    std::vector<std::vector<size_t>> dual(faces.size());
    for (size_t e = 0; e < emb.edges.size(); e++) {
        if (!in_tree[e]) {
            dual[face_of[2 * e]].push_back(e);
            dual[face_of[2 * e + 1]].push_back(e);
        }
    }
    std::vector<size_t> parent_edge(faces.size(), SIZE_MAX);
    std::vector<uint8_t> seen(faces.size(), 0);
    std::vector<size_t> order;
    order.push_back(outer_face);
    seen[outer_face] = 1;
    for (size_t k = 0; k < order.size(); k++) {
        size_t f = order[k];
        for (auto e : dual[f]) {
            size_t g = face_of[2 * e] == f ? face_of[2 * e + 1] : face_of[2 * e];
            if (!seen[g]) {
                seen[g] = 1;
                parent_edge[g] = e;
                order.push_back(g);
            }
        }
    }
    if (order.size() != faces.size()) {
        throw std::logic_error("dual of the co-tree is not spanning");
    }
    for (size_t k = order.size(); k-- > 1;) {
        size_t f = order[k];
        size_t pe = parent_edge[f];
        size_t count = 0;
        size_t parent_dart = SIZE_MAX;
        for (auto d : faces[f]) {
            if (d / 2 == pe) {
                parent_dart = d;
            } else if (against(out.forward, d)) {
                count++;
            }
        }
        bool dart_forward = (parent_dart & 1) == 0;
        // make the parent edge clockwise exactly when the rest is even
        out.forward[pe] = (count % 2 == 0) ? !dart_forward : dart_forward;
    }
    return out;
}

std::vector<size_t> clockwise_counts(const PlanarEmbedding &emb, const std::vector<uint8_t> &forward) {
    auto faces = trace_faces(emb);
    std::vector<size_t> counts(faces.size(), 0);
    for (size_t f = 0; f < faces.size(); f++) {
        for (auto d : faces[f]) {
            counts[f] += against(forward, d);
        }
    }
    return counts;
}

bool is_kasteleyn(const PlanarEmbedding &emb, const Orientation &orientation) {
    auto counts = clockwise_counts(emb, orientation.forward);
    for (size_t f = 0; f < counts.size(); f++) {
        if (f != orientation.outer_face && counts[f] % 2 == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace iqpsim
