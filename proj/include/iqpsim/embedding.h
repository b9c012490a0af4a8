#ifndef IQPSIM_EMBEDDING_H
#define IQPSIM_EMBEDDING_H

#include <cstddef>
#include <optional>
#include <vector>

namespace iqpsim {

struct Edge {
    size_t u = 0;
    size_t v = 0;

    bool operator==(const Edge &other) const = default;
};

/// Combinatorial embedding: for every vertex, the incident edge ids in
/// counter-clockwise order (a rotation system). Parallel edges are allowed,
/// self-loops are not.
///
/// Darts: dart 2e runs edges[e].u -> edges[e].v, dart 2e+1 the other way.
/// Faces are traced by leaving each vertex along the edge that follows the
/// arriving edge in its rotation, so bounded faces come out counter-clockwise.
struct PlanarEmbedding {
    size_t num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<size_t>> rotation;

    static size_t dart_tail(const PlanarEmbedding &emb, size_t dart);
    static size_t dart_head(const PlanarEmbedding &emb, size_t dart);
};

/// Throws std::invalid_argument unless every edge appears exactly once in the
/// rotation of each endpoint and nowhere else.
void check_rotation_system(const PlanarEmbedding &emb);

/// Faces as dart cycles; every dart belongs to exactly one face.
std::vector<std::vector<size_t>> trace_faces(const PlanarEmbedding &emb);

/// Connected components by vertex (isolated vertices form their own component).
std::vector<size_t> component_labels(const PlanarEmbedding &emb, size_t *num_components = nullptr);

/// Euler check: V - E + F == 2 for every component that has edges.
bool is_planar_embedding(const PlanarEmbedding &emb);

/// Boyer-Myrvold planarity test; the returned rotation system is verified
/// with is_planar_embedding. nullopt when the graph is not planar.
std::optional<PlanarEmbedding> find_planar_embedding(size_t num_vertices, const std::vector<Edge> &edges);

/// The sub-embedding induced by `vertices` (edges with both ends inside),
/// relabelled 0..k-1 in the given order. `edge_map` receives the original id
/// of each kept edge.
PlanarEmbedding restrict_embedding(
    const PlanarEmbedding &emb, const std::vector<size_t> &vertices, std::vector<size_t> *edge_map = nullptr);

}  // namespace iqpsim

#endif
