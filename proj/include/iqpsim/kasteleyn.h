#ifndef IQPSIM_KASTELEYN_H
#define IQPSIM_KASTELEYN_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "iqpsim/embedding.h"

namespace iqpsim {

/// forward[e] == 1 orients edge e from edges[e].u to edges[e].v.
struct Orientation {
    std::vector<uint8_t> forward;
    /// Index into trace_faces(embedding) of the face left unconstrained.
    size_t outer_face = 0;
};

/// Orients a connected planar embedding so that every face other than
/// `outer_face` has an odd number of edges pointing clockwise (against the
/// counter-clockwise face traversal). A bridge is counted once per traversal.
///
/// Spanning-tree edges are oriented tail = lower endpoint id; the remaining
/// edges form a spanning tree of the dual, which is resolved leaf faces first.
/// Throws std::invalid_argument for disconnected or non-planar embeddings.
Orientation kasteleyn_orient(const PlanarEmbedding &emb, size_t outer_face = 0);

/// Clockwise edge count of every face.
std::vector<size_t> clockwise_counts(const PlanarEmbedding &emb, const std::vector<uint8_t> &forward);

bool is_kasteleyn(const PlanarEmbedding &emb, const Orientation &orientation);

}  // namespace iqpsim

#endif
