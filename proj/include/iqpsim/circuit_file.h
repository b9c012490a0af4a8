#ifndef IQPSIM_CIRCUIT_FILE_H
#define IQPSIM_CIRCUIT_FILE_H

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqpsim/circuit.h"

namespace iqpsim {

// JSON circuit files:
//
//   {"n": 3,
//    "gates": [{"qubits": [1, 2], "angle": "1*pi/8"}, {"qubits": [2, 3], "angle": 0.25}],
//    "embedding": [[1], [1, 2], [2]]}
//
// Qubits and gates are numbered from 1. An angle is a number of radians or a
// string "k*pi/m". The optional embedding lists, for every qubit, the gates
// touching it in counter-clockwise order.

class CircuitFileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CircuitFile {
    IqpCircuit circuit;
    /// 0-based gate ids per qubit, when the file carries an embedding.
    std::optional<std::vector<std::vector<size_t>>> embedding;
};

/// Throws CircuitFileError on malformed JSON, unknown fields, bad indices or
/// anything IqpCircuit rejects.
CircuitFile parse_circuit_file(const std::string &text);
CircuitFile load_circuit_file(const std::string &path);

/// Pretty-printed JSON; exact angles are written as "k*pi/m" strings.
std::string serialize_circuit_file(const CircuitFile &file);

}  // namespace iqpsim

#endif
