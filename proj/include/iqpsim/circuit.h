#ifndef IQPSIM_CIRCUIT_H
#define IQPSIM_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "iqpsim/angle.h"

namespace iqpsim {

// Qubits are 0-based everywhere in the library. Circuit files and printed
// outcome strings use the 1-based numbering (qubit 1 leftmost); the shift
// happens only in circuit_file.cc and OutcomeString::str().

/// One commuting gate exp(i * theta * prod_{k in qubits} Z_k).
struct GateTerm {
    std::vector<size_t> qubits;
    Angle theta;

    bool operator==(const GateTerm &other) const = default;
};

/// Length-n bit vector of X-basis outcomes.
class OutcomeString {
   public:
    OutcomeString() = default;
    explicit OutcomeString(size_t n) : bits_(n, 0) {
    }
    explicit OutcomeString(std::vector<uint8_t> bits);

    /// Parses "0110"; character k is qubit k (0-based).
    static OutcomeString parse(const std::string &text);
    /// Bits of `value`, bit k of the integer giving qubit k.
    static OutcomeString from_index(uint64_t value, size_t n);

    size_t size() const {
        return bits_.size();
    }
    uint8_t operator[](size_t k) const {
        return bits_[k];
    }
    void set(size_t k, bool v) {
        bits_[k] = v ? 1 : 0;
    }
    const std::vector<uint8_t> &bits() const {
        return bits_;
    }
    uint64_t to_index() const;
    bool parity() const;
    bool is_zero() const;
    std::string str() const;

    bool operator==(const OutcomeString &other) const = default;
    auto operator<=>(const OutcomeString &other) const = default;

   private:
    std::vector<uint8_t> bits_;
};

/// n qubits in |+> plus a list of commuting Z-diagonal gates.
class IqpCircuit {
   public:
    IqpCircuit() = default;
    /// Throws std::invalid_argument on empty/duplicate/out-of-range qubit sets or n == 0.
    IqpCircuit(size_t num_qubits, std::vector<GateTerm> gates);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<GateTerm> &gates() const {
        return gates_;
    }

    /// Gate indices sorted by (sorted qubit set, angle). Engines iterate in this
    /// order, and any permutation of the gate list gives bit-identical results.
    std::vector<size_t> canonical_order() const;

    /// Qubit mask of gate j (requires n <= 64).
    uint64_t gate_mask(size_t j) const;

    bool all_two_body() const;

    bool operator==(const IqpCircuit &other) const = default;

   private:
    size_t num_qubits_ = 0;
    std::vector<GateTerm> gates_;
};

/// G(V_A u U_B, E): one V_A vertex per qubit, one weighted U_B vertex per gate.
struct BipartiteInteractionGraph {
    size_t num_va = 0;
    std::vector<Angle> ub_weights;
    /// N_{u_j}: the V_A neighbours of each U_B vertex.
    std::vector<std::vector<size_t>> ub_neighbors;

    size_t num_ub() const {
        return ub_weights.size();
    }
    /// N_{v_i}: the U_B neighbours of each V_A vertex, ascending.
    std::vector<std::vector<size_t>> va_neighbors() const;

    bool operator==(const BipartiteInteractionGraph &other) const = default;
};

BipartiteInteractionGraph circuit_to_graph(const IqpCircuit &circuit);
IqpCircuit graph_to_circuit(const BipartiteInteractionGraph &graph);

/// s_i = m_{v_i} xor (xor of m_{u_j} over u_j adjacent to v_i).
OutcomeString mbiqp_to_iqp_outcome(
    const OutcomeString &mv, const std::vector<uint8_t> &mu, const BipartiteInteractionGraph &graph);

struct MbiqpOutcome {
    OutcomeString mv;
    std::vector<uint8_t> mu;
};

/// Inverse transform for a given (normally uniformly random) mu.
MbiqpOutcome iqp_to_mbiqp_outcome(
    const OutcomeString &s, const std::vector<uint8_t> &mu, const BipartiteInteractionGraph &graph);

}  // namespace iqpsim

#endif
