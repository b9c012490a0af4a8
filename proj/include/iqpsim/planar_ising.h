#ifndef IQPSIM_PLANAR_ISING_H
#define IQPSIM_PLANAR_ISING_H

#include <complex>
#include <cstddef>
#include <vector>

#include "iqpsim/angle.h"
#include "iqpsim/circuit.h"
#include "iqpsim/embedding.h"
#include "iqpsim/pfaffian.h"

namespace iqpsim {

enum class PfaffianMethod { Auto, Dense, Sparse };

struct PlanarOptions {
    PfaffianMethod method = PfaffianMethod::Auto;
    /// Auto switches to the sparse elimination above this matrix dimension.
    size_t dense_limit = 120;
    /// Fault injection for self-tests: negates every Pfaffian.
    bool corrupt_pfaffian_sign = false;
    /// Largest non-planar merged graph that marginals may sum by enumeration.
    size_t brute_force_sites = 24;
};

/// Two-body Ising model on an embedded graph: couplings[e] is the angle of
/// edge e, field_bits[v] == 1 adds the factor sigma_v.
///
///   Z = sum_sigma prod_e exp(i theta_e sigma_u sigma_v) prod_{v: s_v = 1} sigma_v
struct PlanarIsingModel {
    PlanarEmbedding embedding;
    std::vector<Angle> couplings;
    OutcomeString field_bits;
};

/// Z for zero field: vertices of degree > 3 are split into chains of
/// degree-3 nodes, every node is replaced by a clique of corner vertices,
/// every edge by a three-edge path carrying cos(theta) and i sin(theta), and
/// the resulting perfect matchings are summed by a Kasteleyn Pfaffian.
/// Throws std::invalid_argument for a non-planar embedding or weight mismatch.
LogValue planar_zero_field_log(
    const PlanarEmbedding &emb, const std::vector<Angle> &couplings, const PlanarOptions &options = {});

struct Renormalization {
    /// False when some component has odd field parity (Z = 0 exactly).
    bool admissible = true;
    std::vector<Angle> couplings;
    /// Edges whose angle moved by pi/2; Z(s, theta) = (-i)^flipped * Z(0, theta~).
    std::vector<size_t> flipped_edges;
};

/// Pairs the field vertices of each component greedily by BFS distance and
/// shifts every edge crossed an odd number of times by the shortest paths.
Renormalization path_renormalize(
    const PlanarEmbedding &emb, const std::vector<Angle> &couplings, const OutcomeString &field_bits);

/// Per-component field parity test (an isolated vertex with its bit set fails).
bool parity_admissible(const PlanarEmbedding &emb, const OutcomeString &field_bits);

LogValue planar_partition_log(const PlanarIsingModel &model, const PlanarOptions &options = {});
std::complex<double> planar_partition_function(const PlanarIsingModel &model, const PlanarOptions &options = {});

}  // namespace iqpsim

#endif
