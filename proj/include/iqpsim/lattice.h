#ifndef IQPSIM_LATTICE_H
#define IQPSIM_LATTICE_H

#include <cstddef>
#include <vector>

#include "iqpsim/angle.h"
#include "iqpsim/circuit.h"
#include "iqpsim/embedding.h"

namespace iqpsim {

/// rows x cols square grid. Vertex (r, c) has id r*cols + c; edges are listed
/// row by row, each vertex contributing its right edge and then its edge to
/// row r+1. Rotations run right, up (r+1), left, down.
PlanarEmbedding grid_embedding(size_t rows, size_t cols);

/// Two-qubit gates on the grid edges; `angles` holds one angle per edge in
/// grid_embedding order. Gate j of the circuit is edge j of the embedding.
IqpCircuit grid_circuit(size_t rows, size_t cols, const std::vector<Angle> &angles);
IqpCircuit grid_circuit(size_t rows, size_t cols, const Angle &theta);

size_t grid_edge_count(size_t rows, size_t cols);

}  // namespace iqpsim

#endif
