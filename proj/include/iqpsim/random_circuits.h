#ifndef IQPSIM_RANDOM_CIRCUITS_H
#define IQPSIM_RANDOM_CIRCUITS_H

#include <cstddef>
#include <random>

#include "iqpsim/circuit.h"

namespace iqpsim {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng);

/// Mostly uniform radians in [0, 2pi); one draw in eight is an exact multiple of pi/8.
Angle random_angle(Rng &rng);

/// `num_gates` gates on random qubit subsets of size 1..min(max_weight, n).
IqpCircuit random_circuit(Rng &rng, size_t n, size_t num_gates, size_t max_weight = 3);

/// Gates with linearly independent incidence columns: IFRB when
/// `num_gates == n`, IB when fewer.
IqpCircuit random_sparse_circuit(Rng &rng, size_t n, size_t num_gates);

/// Connected two-qubit-gate circuit with a planar interaction graph: a random
/// spanning tree plus up to `extra_edges` further edges that keep it planar.
IqpCircuit random_planar_circuit(Rng &rng, size_t n, size_t extra_edges);

}  // namespace iqpsim

#endif
