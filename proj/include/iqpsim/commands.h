#ifndef IQPSIM_COMMANDS_H
#define IQPSIM_COMMANDS_H

#include <complex>
#include <cstdint>
#include <string>

#include "iqpsim/circuit_file.h"
#include "iqpsim/planar_ising.h"

namespace iqpsim {

struct CommandOptions {
    bool verify = false;
    bool json = false;
    uint64_t seed = 0;
    size_t count = 1;
    /// Largest site count summed by enumeration.
    size_t cap = 24;
    PlanarOptions planar;
};

/// What a command prints: `out` goes to stdout, `err` to stderr.
struct CommandOutput {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Bad user input (outcome strings, qubit lists, shapes); exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Fixed notation with 12 digits after the point.
std::string format_probability(double p);
/// "re+im i" / "re-im i" with the same precision.
std::string format_complex(std::complex<double> z);

CommandOutput cmd_classify(const CircuitFile &file, const CommandOptions &opts);
CommandOutput cmd_prob(const CircuitFile &file, const std::string &outcome, const CommandOptions &opts);
/// `qubits` is a comma-separated 1-based list, `values` the bits in the same order.
CommandOutput cmd_marginal(
    const CircuitFile &file, const std::string &qubits, const std::string &values, const CommandOptions &opts);
CommandOutput cmd_partition(const CircuitFile &file, const std::string &fields, const CommandOptions &opts);
CommandOutput cmd_sample(const CircuitFile &file, const CommandOptions &opts);
/// `shape` is "RxC"; emits a circuit file with its embedding.
CommandOutput cmd_gen_grid(const std::string &shape, const std::string &theta, const CommandOptions &opts);
/// Reduced-scale version of the acceptance checks.
CommandOutput cmd_selftest(const CommandOptions &opts);

}  // namespace iqpsim

#endif
