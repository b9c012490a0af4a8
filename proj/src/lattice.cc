#include "iqpsim/lattice.h"

#include <stdexcept>

namespace iqpsim {

size_t grid_edge_count(size_t rows, size_t cols) {
    if (rows == 0 || cols == 0) {
        return 0;
    }
    return rows * (cols - 1) + (rows - 1) * cols;
}

PlanarEmbedding grid_embedding(size_t rows, size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("grid needs at least one row and one column");
    }
    PlanarEmbedding emb;
    emb.num_vertices = rows * cols;
    std::vector<size_t> right(emb.num_vertices, SIZE_MAX), up(emb.num_vertices, SIZE_MAX);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            size_t v = r * cols + c;
            if (c + 1 < cols) {
                right[v] = emb.edges.size();
                emb.edges.push_back({v, v + 1});
            }
            if (r + 1 < rows) {
                up[v] = emb.edges.size();
                emb.edges.push_back({v, v + cols});
            }
        }
    }
    emb.rotation.resize(emb.num_vertices);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            size_t v = r * cols + c;
            auto &rot = emb.rotation[v];
            if (c + 1 < cols) {
                rot.push_back(right[v]);
            }
            if (r + 1 < rows) {
                rot.push_back(up[v]);
            }
            if (c > 0) {
                rot.push_back(right[v - 1]);
            }
            if (r > 0) {
                rot.push_back(up[v - cols]);
            }
        }
    }
    return emb;
}

IqpCircuit grid_circuit(size_t rows, size_t cols, const std::vector<Angle> &angles) {
    PlanarEmbedding emb = grid_embedding(rows, cols);
    if (angles.size() != emb.edges.size()) {
        throw std::invalid_argument("need one angle per grid edge");
    }
    std::vector<GateTerm> gates;
    gates.reserve(angles.size());
    for (size_t e = 0; e < emb.edges.size(); e++) {
        gates.push_back({{emb.edges[e].u, emb.edges[e].v}, angles[e]});
    }
    return IqpCircuit(rows * cols, std::move(gates));
}

IqpCircuit grid_circuit(size_t rows, size_t cols, const Angle &theta) {
    return grid_circuit(rows, cols, std::vector<Angle>(grid_edge_count(rows, cols), theta));
}

}  // namespace iqpsim
