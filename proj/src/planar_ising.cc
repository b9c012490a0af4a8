#include "iqpsim/planar_ising.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "iqpsim/kasteleyn.h"

namespace iqpsim {

namespace {

struct SplitEdge {
    size_t node_a, slot_a;
    size_t node_b, slot_b;
    Complex c, w;
};

struct DecoratedEdge {
    size_t u, v;
    Complex weight;
};

struct Decorated {
    PlanarEmbedding embedding;
    std::vector<Complex> weights;
    /// Reference matching: every corner-x and y-corner edge of the edge paths.
    std::vector<std::pair<size_t, size_t>> reference;
    std::vector<size_t> reference_edges;
};

Decorated decorate(const PlanarEmbedding &emb, const std::vector<Angle> &couplings) {
    std::vector<std::vector<size_t>> node_ports;
    std::vector<SplitEdge> split;
    // (node, slot) of each original edge at its u and v end
    std::vector<std::pair<size_t, size_t>> at_u(emb.edges.size()), at_v(emb.edges.size());

    for (size_t x = 0; x < emb.num_vertices; x++) {
        const auto &rot = emb.rotation[x];
        size_t d = rot.size();
        auto place = [&](size_t k, size_t node, size_t slot) {
            size_t e = rot[k];
            (emb.edges[e].u == x ? at_u : at_v)[e] = {node, slot};
        };
        if (d <= 3) {
            size_t node = node_ports.size();
            node_ports.emplace_back(d, SIZE_MAX);
            for (size_t k = 0; k < d; k++) {
                place(k, node, k);
            }
            continue;
        }
        size_t first = node_ports.size();
        size_t chain = d - 2;
        for (size_t i = 0; i < chain; i++) {
            node_ports.emplace_back(3, SIZE_MAX);
        }
        place(0, first, 0);
        place(1, first, 1);
        for (size_t k = 2; k + 2 < d; k++) {
            place(k, first + k - 1, 1);
        }
        place(d - 2, first + chain - 1, 1);
        place(d - 1, first + chain - 1, 2);
        for (size_t i = 0; i + 1 < chain; i++) {
            split.push_back({first + i, 2, first + i + 1, 0, 1.0, 1.0});
        }
    }
    for (size_t e = 0; e < emb.edges.size(); e++) {
        const Angle &t = couplings[e];
        split.push_back(
            {at_u[e].first, at_u[e].second, at_v[e].first, at_v[e].second, t.cos(), Complex(0.0, t.sin())});
    }
    for (size_t i = 0; i < split.size(); i++) {
        node_ports[split[i].node_a][split[i].slot_a] = i;
        node_ports[split[i].node_b][split[i].slot_b] = i;
    }

    std::vector<size_t> corner_base(node_ports.size());
    size_t corners = 0;
    for (size_t n = 0; n < node_ports.size(); n++) {
        corner_base[n] = corners;
        corners += node_ports[n].size();
    }

    Decorated out;
    auto &g = out.embedding;
    g.num_vertices = corners + 2 * split.size();
    g.rotation.resize(g.num_vertices);
    auto add_edge = [&](size_t u, size_t v, Complex w) {
        g.edges.push_back({u, v});
        out.weights.push_back(w);
        return g.edges.size() - 1;
    };

    // edge paths corner_a - x - y - corner_b
    std::vector<size_t> external(corners, SIZE_MAX);
    for (size_t i = 0; i < split.size(); i++) {
        const auto &s = split[i];
        size_t ca = corner_base[s.node_a] + s.slot_a;
        size_t cb = corner_base[s.node_b] + s.slot_b;
        size_t x = corners + 2 * i;
        size_t y = x + 1;
        size_t ea = add_edge(ca, x, s.c);
        size_t exy = add_edge(x, y, s.w);
        size_t eb = add_edge(y, cb, 1.0);
        external[ca] = ea;
        external[cb] = eb;
        g.rotation[x] = {ea, exy};
        g.rotation[y] = {exy, eb};
        out.reference.push_back({ca, x});
        out.reference_edges.push_back(ea);
        out.reference.push_back({y, cb});
        out.reference_edges.push_back(eb);
    }
    for (size_t n = 0; n < node_ports.size(); n++) {
        size_t d = node_ports[n].size();
        size_t b = corner_base[n];
        if (d == 1) {
            g.rotation[b] = {external[b]};
        } else if (d == 2) {
            size_t e = add_edge(b, b + 1, 1.0);
            g.rotation[b] = {external[b], e};
            g.rotation[b + 1] = {external[b + 1], e};
        } else if (d == 3) {
            // internal edge k joins corner k and corner k+1
            size_t first = g.edges.size();
            for (size_t k = 0; k < 3; k++) {
                add_edge(b + k, b + (k + 1) % 3, 1.0);
            }
            for (size_t k = 0; k < 3; k++) {
                g.rotation[b + k] = {external[b + k], first + k, first + (k + 2) % 3};
            }
        }
    }
    return out;
}

LogValue connected_zero_field(const PlanarEmbedding &emb, const std::vector<Angle> &couplings,
                              const PlanarOptions &options) {
    Decorated dec = decorate(emb, couplings);
    Orientation orient = kasteleyn_orient(dec.embedding);
    size_t dim = dec.embedding.num_vertices;

    int sign = matching_permutation_sign(dec.reference, dim);
    for (auto e : dec.reference_edges) {
        if (!orient.forward[e]) {
            sign = -sign;
        }
    }

    bool dense = options.method == PfaffianMethod::Dense ||
                 (options.method == PfaffianMethod::Auto && dim <= options.dense_limit);
    LogValue pf;
    if (dense) {
        SkewMatrix k(dim);
        for (size_t e = 0; e < dec.embedding.edges.size(); e++) {
            const auto &ed = dec.embedding.edges[e];
            Complex w = orient.forward[e] ? dec.weights[e] : -dec.weights[e];
            k.set(ed.u, ed.v, k.get(ed.u, ed.v) + w);
        }
        pf = pfaffian_log(k);
    } else {
        SparseSkewMatrix k(dim);
        for (size_t e = 0; e < dec.embedding.edges.size(); e++) {
            const auto &ed = dec.embedding.edges[e];
            k.add(ed.u, ed.v, orient.forward[e] ? dec.weights[e] : -dec.weights[e]);
        }
        pf = sparse_pfaffian_log(std::move(k));
    }
    if (pf.is_zero()) {
        return pf;
    }
    pf.log_abs += static_cast<double>(emb.num_vertices) * std::log(2.0);
    if (sign < 0) {
        pf.phase = -pf.phase;
    }
    return pf;
}

void check_model(const PlanarEmbedding &emb, size_t num_couplings) {
    check_rotation_system(emb);
    if (num_couplings != emb.edges.size()) {
        throw std::invalid_argument("need exactly one coupling per edge");
    }
    if (!is_planar_embedding(emb)) {
        throw std::invalid_argument("rotation system is not a planar embedding");
    }
}

}  // namespace

LogValue planar_zero_field_log(
    const PlanarEmbedding &emb, const std::vector<Angle> &couplings, const PlanarOptions &options) {
    check_model(emb, couplings.size());
    size_t nc = 0;
    auto label = component_labels(emb, &nc);
    std::vector<std::vector<size_t>> members(nc);
    for (size_t x = 0; x < emb.num_vertices; x++) {
        members[label[x]].push_back(x);
    }
    LogValue total = LogValue::one();
    for (const auto &verts : members) {
        if (verts.size() == 1) {
            total.log_abs += std::log(2.0);
            continue;
        }
        std::vector<size_t> edge_map;
        PlanarEmbedding sub = restrict_embedding(emb, verts, &edge_map);
        std::vector<Angle> sub_couplings;
        sub_couplings.reserve(edge_map.size());
        for (auto e : edge_map) {
            sub_couplings.push_back(couplings[e]);
        }
        total *= connected_zero_field(sub, sub_couplings, options);
        if (total.is_zero()) {
            return total;
        }
    }
    if (options.corrupt_pfaffian_sign) {
        total.phase = -total.phase;
    }
    return total;
}

bool parity_admissible(const PlanarEmbedding &emb, const OutcomeString &field_bits) {
    if (field_bits.size() != emb.num_vertices) {
        throw std::invalid_argument("field bits do not match the vertex count");
    }
    size_t nc = 0;
    auto label = component_labels(emb, &nc);
    std::vector<uint8_t> parity(nc, 0);
    for (size_t x = 0; x < emb.num_vertices; x++) {
        parity[label[x]] ^= field_bits[x];
    }
    return std::none_of(parity.begin(), parity.end(), [](uint8_t p) { return p != 0; });
}

Renormalization path_renormalize(
    const PlanarEmbedding &emb, const std::vector<Angle> &couplings, const OutcomeString &field_bits) {
    if (couplings.size() != emb.edges.size()) {
        throw std::invalid_argument("need exactly one coupling per edge");
    }
    Renormalization out;
    out.couplings = couplings;
    if (!parity_admissible(emb, field_bits)) {
        out.admissible = false;
        return out;
    }
    std::vector<std::vector<std::pair<size_t, size_t>>> adj(emb.num_vertices);
    for (size_t e = 0; e < emb.edges.size(); e++) {
        adj[emb.edges[e].u].push_back({emb.edges[e].v, e});
        adj[emb.edges[e].v].push_back({emb.edges[e].u, e});
    }
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
    }
    std::vector<uint8_t> pending(field_bits.bits());
    std::vector<uint8_t> crossed(emb.edges.size(), 0);
    std::vector<size_t> parent_edge(emb.num_vertices);
    std::vector<size_t> stamp(emb.num_vertices, SIZE_MAX);
    for (size_t a = 0; a < emb.num_vertices; a++) {
        if (!pending[a]) {
            continue;
        }
        pending[a] = 0;
        std::queue<size_t> bfs;
        bfs.push(a);
        stamp[a] = a;
        size_t b = SIZE_MAX;
        while (!bfs.empty() && b == SIZE_MAX) {
            size_t x = bfs.front();
            bfs.pop();
            for (const auto &[y, e] : adj[x]) {
                if (stamp[y] == a) {
                    continue;
                }
                stamp[y] = a;
                parent_edge[y] = e;
                if (pending[y]) {
                    b = y;
                    break;
                }
                bfs.push(y);
            }
        }
        if (b == SIZE_MAX) {
            throw std::logic_error("no partner for a field vertex despite even parity");
        }
        pending[b] = 0;
        for (size_t x = b; x != a;) {
            size_t e = parent_edge[x];
            crossed[e] ^= 1;
            x = emb.edges[e].u == x ? emb.edges[e].v : emb.edges[e].u;
        }
    }
    for (size_t e = 0; e < crossed.size(); e++) {
        if (crossed[e]) {
            out.couplings[e] = out.couplings[e].plus_quarter_turns(1);
            out.flipped_edges.push_back(e);
        }
    }
    return out;
}

LogValue planar_partition_log(const PlanarIsingModel &model, const PlanarOptions &options) {
    check_model(model.embedding, model.couplings.size());
    auto renorm = path_renormalize(model.embedding, model.couplings, model.field_bits);
    if (!renorm.admissible) {
        return LogValue::zero();
    }
    LogValue z = planar_zero_field_log(model.embedding, renorm.couplings, options);
    static const Complex kMinusI[4] = {1.0, Complex(0.0, -1.0), -1.0, Complex(0.0, 1.0)};
    z.phase *= kMinusI[renorm.flipped_edges.size() % 4];
    return z;
}

std::complex<double> planar_partition_function(const PlanarIsingModel &model, const PlanarOptions &options) {
    return planar_partition_log(model, options).value();
}

}  // namespace iqpsim
