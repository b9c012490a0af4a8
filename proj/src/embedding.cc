#include "iqpsim/embedding.h"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <numeric>
#include <stdexcept>
#include <string>

namespace iqpsim {

size_t PlanarEmbedding::dart_tail(const PlanarEmbedding &emb, size_t dart) {
    const auto &e = emb.edges[dart / 2];
    return (dart & 1) ? e.v : e.u;
}

size_t PlanarEmbedding::dart_head(const PlanarEmbedding &emb, size_t dart) {
    const auto &e = emb.edges[dart / 2];
    return (dart & 1) ? e.u : e.v;
}

void check_rotation_system(const PlanarEmbedding &emb) {
    if (emb.rotation.size() != emb.num_vertices) {
        throw std::invalid_argument("rotation system needs one list per vertex");
    }
    std::vector<int> seen_u(emb.edges.size(), 0);
    std::vector<int> seen_v(emb.edges.size(), 0);
    for (size_t e = 0; e < emb.edges.size(); e++) {
        const auto &ed = emb.edges[e];
        if (ed.u >= emb.num_vertices || ed.v >= emb.num_vertices) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
        }
        if (ed.u == ed.v) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
        }
    }
    for (size_t x = 0; x < emb.num_vertices; x++) {
        for (auto e : emb.rotation[x]) {
            if (e >= emb.edges.size()) {
                throw std::invalid_argument("rotation of vertex " + std::to_string(x) + " names a missing edge");
            }
            if (emb.edges[e].u == x) {
                seen_u[e]++;
            } else if (emb.edges[e].v == x) {
                seen_v[e]++;
            } else {
                throw std::invalid_argument(
                    "rotation of vertex " + std::to_string(x) + " lists edge " + std::to_string(e) +
                    " that is not incident to it");
            }
        }
    }
    for (size_t e = 0; e < emb.edges.size(); e++) {
        if (seen_u[e] != 1 || seen_v[e] != 1) {
            throw std::invalid_argument(
                "edge " + std::to_string(e) + " must appear exactly once around each endpoint");
        }
    }
}

std::vector<std::vector<size_t>> trace_faces(const PlanarEmbedding &emb) {
    // position of edge e in the rotation of each endpoint
    std::vector<size_t> pos_u(emb.edges.size()), pos_v(emb.edges.size());
    for (size_t x = 0; x < emb.num_vertices; x++) {
        const auto &rot = emb.rotation[x];
        for (size_t k = 0; k < rot.size(); k++) {
            (emb.edges[rot[k]].u == x ? pos_u : pos_v)[rot[k]] = k;
        }
    }
    auto next_dart = [&](size_t dart) {
        size_t e = dart / 2;
        size_t head = PlanarEmbedding::dart_head(emb, dart);
        const auto &rot = emb.rotation[head];
        size_t k = (emb.edges[e].u == head) ? pos_u[e] : pos_v[e];
        size_t f = rot[(k + 1) % rot.size()];
        return emb.edges[f].u == head ? 2 * f : 2 * f + 1;
    };
    std::vector<std::vector<size_t>> faces;
    std::vector<uint8_t> used(2 * emb.edges.size(), 0);
    for (size_t start = 0; start < used.size(); start++) {
        if (used[start]) {
            continue;
        }
        std::vector<size_t> face;
        size_t d = start;
        while (!used[d]) {
            used[d] = 1;
            face.push_back(d);
            d = next_dart(d);
        }
        faces.push_back(std::move(face));
    }
    return faces;
}

std::vector<size_t> component_labels(const PlanarEmbedding &emb, size_t *num_components) {
    std::vector<size_t> parent(emb.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto &e : emb.edges) {
        parent[find(e.u)] = find(e.v);
    }
    std::vector<size_t> label(emb.num_vertices, SIZE_MAX);
    std::vector<size_t> root_label(emb.num_vertices, SIZE_MAX);
    size_t count = 0;
    for (size_t x = 0; x < emb.num_vertices; x++) {
        size_t r = find(x);
        if (root_label[r] == SIZE_MAX) {
            root_label[r] = count++;
        }
        label[x] = root_label[r];
    }
    if (num_components) {
        *num_components = count;
    }
    return label;
}

bool is_planar_embedding(const PlanarEmbedding &emb) {
    try {
        check_rotation_system(emb);
    } catch (const std::invalid_argument &) {
        return false;
    }
    size_t nc = 0;
    auto label = component_labels(emb, &nc);
    std::vector<long> euler(nc, 0);
    std::vector<uint8_t> has_edges(nc, 0);
    for (size_t x = 0; x < emb.num_vertices; x++) {
        euler[label[x]] += 1;
    }
    for (const auto &e : emb.edges) {
        euler[label[e.u]] -= 1;
        has_edges[label[e.u]] = 1;
    }
    for (const auto &face : trace_faces(emb)) {
        euler[label[PlanarEmbedding::dart_tail(emb, face[0])]] += 1;
    }
    for (size_t c = 0; c < nc; c++) {
        if (has_edges[c] && euler[c] != 2) {
            return false;
        }
    }
    return true;
}

std::optional<PlanarEmbedding> find_planar_embedding(size_t num_vertices, const std::vector<Edge> &edges) {
    using Graph = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::undirectedS, boost::property<boost::vertex_index_t, int>,
        boost::property<boost::edge_index_t, int>>;
    using EdgeDesc = boost::graph_traits<Graph>::edge_descriptor;

    Graph g(num_vertices);
    for (size_t e = 0; e < edges.size(); e++) {
        boost::add_edge(edges[e].u, edges[e].v, static_cast<int>(e), g);
    }
    std::vector<std::vector<EdgeDesc>> storage(num_vertices);
    auto embedding = boost::make_iterator_property_map(storage.begin(), boost::get(boost::vertex_index, g));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = g, boost::boyer_myrvold_params::embedding = embedding);
    if (!planar) {
        return std::nullopt;
    }
    PlanarEmbedding emb;
    emb.num_vertices = num_vertices;
    emb.edges = edges;
    emb.rotation.resize(num_vertices);
    auto edge_index = boost::get(boost::edge_index, g);
    for (size_t x = 0; x < num_vertices; x++) {
        for (const auto &ed : storage[x]) {
            emb.rotation[x].push_back(static_cast<size_t>(edge_index[ed]));
        }
    }
    if (!is_planar_embedding(emb)) {
        throw std::logic_error("planarity test returned an embedding that fails the Euler check");
    }
    return emb;
}

PlanarEmbedding restrict_embedding(
    const PlanarEmbedding &emb, const std::vector<size_t> &vertices, std::vector<size_t> *edge_map) {
    std::vector<size_t> local(emb.num_vertices, SIZE_MAX);
    for (size_t k = 0; k < vertices.size(); k++) {
        local[vertices[k]] = k;
    }
    PlanarEmbedding out;
    out.num_vertices = vertices.size();
    out.rotation.resize(vertices.size());
    std::vector<size_t> new_id(emb.edges.size(), SIZE_MAX);
    std::vector<size_t> kept;
    for (size_t e = 0; e < emb.edges.size(); e++) {
        size_t a = local[emb.edges[e].u];
        size_t b = local[emb.edges[e].v];
        if (a != SIZE_MAX && b != SIZE_MAX) {
            new_id[e] = out.edges.size();
            out.edges.push_back({a, b});
            kept.push_back(e);
        }
    }
    for (size_t k = 0; k < vertices.size(); k++) {
        for (auto e : emb.rotation[vertices[k]]) {
            if (new_id[e] != SIZE_MAX) {
                out.rotation[k].push_back(new_id[e]);
            }
        }
    }
    if (edge_map) {
        *edge_map = std::move(kept);
    }
    return out;
}

}  // namespace iqpsim
