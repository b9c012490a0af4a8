#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "iqpsim/commands.h"

using namespace iqpsim;

int main(int argc, char **argv) {
    CLI::App app{"Exact simulation of IQP circuits through imaginary-coupling Ising models"};
    app.require_subcommand(1);

    CommandOptions opts;
    bool corrupt = false;
    std::string path, outcome, qubits, values, kind, shape, theta = "pi/8";

    auto common = [&](CLI::App *sub) {
        sub->add_flag("--json", opts.json, "Print one JSON document");
        sub->add_option("--cap", opts.cap, "Largest site count summed by enumeration")->capture_default_str();
    };

    auto *classify = app.add_subcommand("classify", "Report which fast paths apply");
    classify->add_option("file", path, "Circuit file")->required();
    common(classify);

    auto *prob = app.add_subcommand("prob", "Probability of a full outcome");
    prob->add_option("file", path, "Circuit file")->required();
    prob->add_option("outcome", outcome, "Outcome bits, qubit 1 first")->required();
    prob->add_flag("--verify", opts.verify, "Cross-check with the statevector oracle");
    common(prob);

    auto *marginal = app.add_subcommand("marginal", "Probability of a partial outcome");
    marginal->add_option("file", path, "Circuit file")->required();
    marginal->add_option("qubits", qubits, "Comma-separated 1-based qubits")->required();
    marginal->add_option("values", values, "Bits for those qubits")->required();
    marginal->add_flag("--verify", opts.verify, "Cross-check with the statevector oracle");
    common(marginal);

    auto *partition = app.add_subcommand("partition", "Ising partition function Z(s)");
    partition->add_option("file", path, "Circuit file")->required();
    partition->add_option("fields", outcome, "Field bits, qubit 1 first")->required();
    partition->add_flag("--verify", opts.verify, "Cross-check with brute-force enumeration");
    common(partition);

    auto *sample = app.add_subcommand("sample", "Draw outcomes");
    sample->add_option("file", path, "Circuit file")->required();
    sample->add_option("--count", opts.count, "Number of samples")->capture_default_str();
    sample->add_option("--seed", opts.seed, "Generator seed")->capture_default_str();
    common(sample);

    auto *gen = app.add_subcommand("gen", "Generate lattice circuit files");
    gen->add_option("kind", kind, "Lattice kind")->required()->check(CLI::IsMember({"grid"}));
    gen->add_option("shape", shape, "RxC")->required();
    gen->add_option("--theta", theta, "Angle on every edge (radians or k*pi/m)")->capture_default_str();

    auto *selftest = app.add_subcommand("selftest", "Run the reduced acceptance checks");
    selftest->add_flag("--json", opts.json, "Print one JSON document");
    selftest->add_flag("--corrupt-pfaffian-sign", corrupt, "Fault injection: negate every Pfaffian")
        ->group("");

    CLI11_PARSE(app, argc, argv);
    opts.planar.corrupt_pfaffian_sign = corrupt;

    CommandOutput res;
    try {
        if (*gen) {
            res = cmd_gen_grid(shape, theta, opts);
        } else if (*selftest) {
            res = cmd_selftest(opts);
        } else {
            CircuitFile file = load_circuit_file(path);
            if (*classify) {
                res = cmd_classify(file, opts);
            } else if (*prob) {
                res = cmd_prob(file, outcome, opts);
            } else if (*marginal) {
                res = cmd_marginal(file, qubits, values, opts);
            } else if (*partition) {
                res = cmd_partition(file, outcome, opts);
            } else if (*sample) {
                res = cmd_sample(file, opts);
            }
        }
    } catch (const CircuitFileError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << res.out;
    std::cerr << res.err;
    return res.exit_code;
}
