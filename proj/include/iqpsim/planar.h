#ifndef IQPSIM_PLANAR_H
#define IQPSIM_PLANAR_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "iqpsim/circuit.h"
#include "iqpsim/embedding.h"
#include "iqpsim/planar_ising.h"

namespace iqpsim {

/// An IQP circuit made only of two-qubit gates, together with a planar
/// embedding of its interaction graph. Edge j of the embedding is gate j.
class PlanarCircuit {
   public:
    /// `rotation[q]` lists the gate ids around qubit q counter-clockwise. With
    /// an empty rotation an embedding is computed. Throws std::invalid_argument
    /// for gates that are not two-qubit and std::domain_error for non-planar input.
    explicit PlanarCircuit(IqpCircuit circuit, std::vector<std::vector<size_t>> rotation = {});

    const IqpCircuit &circuit() const {
        return circuit_;
    }
    const PlanarEmbedding &embedding() const {
        return embedding_;
    }
    size_t num_qubits() const {
        return circuit_.num_qubits();
    }
    std::vector<Angle> couplings() const;

   private:
    IqpCircuit circuit_;
    PlanarEmbedding embedding_;
};

/// True when the gates are all two-qubit and the interaction graph is planar.
bool is_planar_two_body(const IqpCircuit &circuit);

/// False iff some connected component has odd outcome parity (P(s) = 0).
bool parity_admissible(const PlanarCircuit &pc, const OutcomeString &s);

/// Z(s) of the circuit's Ising model.
std::complex<double> planar_partition(const PlanarCircuit &pc, const OutcomeString &s, const PlanarOptions &options = {});

/// 2^{-2n} |Z(s)|^2 through the Pfaffian route.
double planar_joint_probability(const PlanarCircuit &pc, const OutcomeString &s, const PlanarOptions &options = {});

/// Doubled instance whose partition function gives a marginal: the measured
/// qubits M_A, the gates M_B touching them, and the unmeasured endpoints of
/// those gates (the boundary), plus a mirror copy of M_A and M_B with negated
/// angles that shares the boundary vertices.
struct MergedGraph {
    PlanarIsingModel model;
    std::vector<size_t> measured;
    std::vector<size_t> boundary;
    /// Original gate id of each merged edge.
    std::vector<size_t> source_gate;
    /// Number of gates in M_B (each appears twice in the merged graph).
    size_t gate_count = 0;
    /// False when mirroring the rotations did not give a planar embedding.
    bool gluing_was_planar = true;
    /// False when the merged graph has no planar embedding at all; the
    /// rotation system is then the (invalid) mirrored one.
    bool planar = true;
};

/// Merged vertices are ordered: measured copy A, boundary, measured copy B.
/// When the mirrored rotations fail the Euler check a planar embedding is
/// searched for directly. Throws std::invalid_argument on repeated or
/// out-of-range qubits.
MergedGraph merge_for_marginal(
    const PlanarCircuit &pc, const std::vector<size_t> &measured, const std::vector<uint8_t> &values);

/// P(s_M) = 2^{-2|M_A| - |boundary|} |Z(merged)|. Z(merged) comes from the
/// Pfaffian route; a non-planar merged graph is summed exactly when it has at
/// most `brute_force_sites` vertices and throws std::domain_error otherwise.
double marginal_probability(const PlanarCircuit &pc, const std::vector<size_t> &measured,
                            const std::vector<uint8_t> &values, const PlanarOptions &options = {});
/// Natural log of the marginal (-inf when it vanishes).
double marginal_log_probability(const PlanarCircuit &pc, const std::vector<size_t> &measured,
                                const std::vector<uint8_t> &values, const PlanarOptions &options = {});

/// BFS order per connected component, components taken by smallest vertex,
/// neighbours visited in increasing id.
std::vector<size_t> measurement_order(const PlanarCircuit &pc);

/// Draws qubits one at a time in measurement_order, each from its
/// conditional probability given the bits already drawn.
class PlanarSampler {
   public:
    explicit PlanarSampler(PlanarCircuit pc, PlanarOptions options = {});

    template <typename Rng>
    OutcomeString sample(Rng &rng) const {
        return sample_with([&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; });
    }

    const std::vector<size_t> &order() const {
        return order_;
    }

   private:
    template <typename Uniform>
    OutcomeString sample_with(Uniform uniform) const;

    PlanarCircuit pc_;
    PlanarOptions options_;
    std::vector<size_t> order_;
};

/// One sample from std::mt19937_64 seeded with `seed`.
OutcomeString planar_sample(const PlanarCircuit &pc, uint64_t seed, const PlanarOptions &options = {});

template <typename Uniform>
OutcomeString PlanarSampler::sample_with(Uniform uniform) const {
    OutcomeString out(pc_.num_qubits());
    std::vector<size_t> measured;
    std::vector<uint8_t> values;
    double log_prev = 0.0;
    for (auto q : order_) {
        measured.push_back(q);
        values.push_back(0);
        double log_zero = marginal_log_probability(pc_, measured, values, options_);
        double p0 = std::exp(log_zero - log_prev);
        p0 = std::min(1.0, std::max(0.0, p0));
        if (uniform() < p0) {
            log_prev = log_zero;
        } else {
            values.back() = 1;
            out.set(q, true);
            // log(prev - zero) = log_prev + log(1 - p0)
            log_prev = log_prev + std::log1p(-p0);
        }
    }
    return out;
}

}  // namespace iqpsim

#endif
