#include "iqpsim/commands.h"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "iqpsim/ising.h"
#include "iqpsim/lattice.h"
#include "iqpsim/oracle.h"
#include "iqpsim/planar.h"
#include "iqpsim/random_circuits.h"
#include "iqpsim/selftest.h"
#include "iqpsim/sparse.h"
#include "json.hpp"

namespace iqpsim {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kVerifyTolerance = 1e-8;

struct Routes {
    SparseClassification sparse;
    std::optional<PlanarCircuit> planar;
};

Routes route(const CircuitFile &file) {
    Routes r;
    r.sparse = classify(file.circuit);
    bool two_body = file.circuit.all_two_body();
    if (file.embedding) {
        if (!two_body) {
            throw UsageError("an embedding is only meaningful when every gate acts on two qubits");
        }
        try {
            r.planar.emplace(file.circuit, *file.embedding);
        } catch (const std::exception &e) {
            throw UsageError(std::string("bad embedding: ") + e.what());
        }
    } else if (two_body && is_planar_two_body(file.circuit)) {
        r.planar.emplace(file.circuit);
    }
    return r;
}

OutcomeString parse_bits(const std::string &text, size_t n, const std::string &what) {
    if (text.size() != n) {
        throw UsageError(what + " must have " + std::to_string(n) + " bits, got '" + text + "'");
    }
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw UsageError(what + " may contain only 0 and 1, got '" + text + "'");
        }
    }
    return OutcomeString::parse(text);
}

std::vector<size_t> parse_qubit_list(const std::string &text, size_t n) {
    std::vector<size_t> out;
    if (text.empty()) {
        return out;
    }
    std::stringstream in(text);
    std::string item;
    std::vector<uint8_t> seen(n, 0);
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception &) {
            throw UsageError("bad qubit '" + item + "'");
        }
        if (used != item.size() || v < 1 || static_cast<unsigned long long>(v) > n) {
            throw UsageError("qubit '" + item + "' is not in 1.." + std::to_string(n));
        }
        size_t q = static_cast<size_t>(v - 1);
        if (seen[q]) {
            throw UsageError("qubit " + item + " listed twice");
        }
        seen[q] = 1;
        out.push_back(q);
    }
    return out;
}

std::string clean_zero(double x, char *buf, size_t len) {
    if (std::abs(x) < 5e-13) {
        x = 0.0;
    }
    std::snprintf(buf, len, "%.12f", x);
    return buf;
}

std::string finish_json(const Json &doc) {
    return doc.dump() + "\n";
}

struct VerifyResult {
    bool ran = false;
    double reference = 0.0;
    double diff = 0.0;
    bool agree = true;
};

void add_verify(CommandOutput &res, const VerifyResult &v, const std::string &label, const CommandOptions &opts) {
    if (!opts.verify) {
        return;
    }
    if (!v.ran) {
        res.err += "verification skipped: instance exceeds the " + label + " cap\n";
        return;
    }
    if (!v.agree) {
        res.exit_code = 1;
        res.err += "verification failed against " + label + "\n";
    }
}

}  // namespace

std::string format_probability(double p) {
    char buf[64];
    return clean_zero(p, buf, sizeof buf);
}

std::string format_complex(std::complex<double> z) {
    char re[64], im[64];
    std::string r = clean_zero(z.real(), re, sizeof re);
    double imag = std::abs(z.imag()) < 5e-13 ? 0.0 : z.imag();
    std::string i = clean_zero(std::abs(imag), im, sizeof im);
    return r + (imag < 0 ? "-" : "+") + i + "i";
}

CommandOutput cmd_classify(const CircuitFile &file, const CommandOptions &opts) {
    Routes r = route(file);
    std::vector<std::string> classes;
    if (r.sparse.kind != SparseKind::General) {
        classes.push_back(sparse_kind_name(r.sparse.kind));
    }
    if (r.planar) {
        classes.push_back("planar-two-body");
    }
    if (classes.empty()) {
        classes.push_back("general");
    }
    CommandOutput res;
    if (opts.json) {
        Json doc;
        doc["command"] = "classify";
        doc["classes"] = classes;
        doc["padded_gates"] = r.sparse.padded_gate_count;
        res.out = finish_json(doc);
    } else {
        for (const auto &c : classes) {
            res.out += c + "\n";
        }
    }
    return res;
}

CommandOutput cmd_prob(const CircuitFile &file, const std::string &outcome, const CommandOptions &opts) {
    const auto &c = file.circuit;
    OutcomeString s = parse_bits(outcome, c.num_qubits(), "outcome");
    Routes r = route(file);
    double p = 0.0;
    std::string engine;
    if (r.sparse.kind != SparseKind::General) {
        p = sparse_probability(c, s);
        engine = "sparse";
    } else if (r.planar) {
        p = planar_joint_probability(*r.planar, s, opts.planar);
        engine = "planar";
    } else {
        BruteForceLimits lim;
        lim.max_sites = opts.cap;
        p = joint_probability(c, s, lim);
        engine = "bruteforce";
    }
    VerifyResult v;
    if (opts.verify && c.num_qubits() <= kOracleMaxQubits) {
        v.ran = true;
        v.reference = xbasis_probability(simulate_statevector(c), s);
        v.diff = std::abs(v.reference - p);
        v.agree = v.diff <= kVerifyTolerance;
    }
    CommandOutput res;
    if (opts.json) {
        Json doc;
        doc["command"] = "prob";
        doc["outcome"] = outcome;
        doc["probability"] = p;
        doc["engine"] = engine;
        if (v.ran) {
            doc["oracle"] = v.reference;
            doc["agree"] = v.agree;
        }
        res.out = finish_json(doc);
    } else {
        res.out = format_probability(p) + "\n";
        if (v.ran) {
            res.out += "oracle " + format_probability(v.reference) + (v.agree ? " agree" : " MISMATCH") + "\n";
        }
    }
    add_verify(res, v, "oracle", opts);
    return res;
}

CommandOutput cmd_marginal(
    const CircuitFile &file, const std::string &qubits, const std::string &values, const CommandOptions &opts) {
    const auto &c = file.circuit;
    auto measured = parse_qubit_list(qubits, c.num_qubits());
    OutcomeString bits = parse_bits(values, measured.size(), "values");
    Routes r = route(file);
    double p = 0.0;
    std::string engine;
    std::optional<StateVector> state;
    if (r.planar) {
        p = marginal_probability(*r.planar, measured, bits.bits(), opts.planar);
        engine = "planar";
    } else if (c.num_qubits() <= kOracleMaxQubits) {
        state = simulate_statevector(c);
        p = xbasis_marginal(*state, measured, bits.bits());
        engine = "oracle";
    } else {
        throw std::domain_error("marginals need a planar two-qubit circuit or at most " +
                                std::to_string(kOracleMaxQubits) + " qubits");
    }
    VerifyResult v;
    if (opts.verify && c.num_qubits() <= kOracleMaxQubits) {
        if (!state) {
            state = simulate_statevector(c);
        }
        v.ran = true;
        v.reference = xbasis_marginal(*state, measured, bits.bits());
        v.diff = std::abs(v.reference - p);
        v.agree = v.diff <= kVerifyTolerance;
    }
    CommandOutput res;
    if (opts.json) {
        Json doc;
        doc["command"] = "marginal";
        doc["qubits"] = qubits;
        doc["values"] = values;
        doc["probability"] = p;
        doc["engine"] = engine;
        if (v.ran) {
            doc["oracle"] = v.reference;
            doc["agree"] = v.agree;
        }
        res.out = finish_json(doc);
    } else {
        res.out = format_probability(p) + "\n";
        if (v.ran) {
            res.out += "oracle " + format_probability(v.reference) + (v.agree ? " agree" : " MISMATCH") + "\n";
        }
    }
    add_verify(res, v, "oracle", opts);
    return res;
}

CommandOutput cmd_partition(const CircuitFile &file, const std::string &fields, const CommandOptions &opts) {
    const auto &c = file.circuit;
    OutcomeString s = parse_bits(fields, c.num_qubits(), "field bits");
    Routes r = route(file);
    BruteForceLimits lim;
    lim.max_sites = opts.cap;
    auto brute = [&]() { return partition_function_bruteforce(make_ising_instance(circuit_to_graph(c), s), lim).value; };
    std::complex<double> z;
    std::string engine;
    if (r.planar) {
        z = planar_partition(*r.planar, s, opts.planar);
        engine = "pfaffian";
    } else {
        z = brute();
        engine = "bruteforce";
    }
    VerifyResult v;
    std::complex<double> reference;
    if (opts.verify && c.num_qubits() <= opts.cap) {
        reference = brute();
        v.ran = true;
        v.diff = std::abs(reference - z);
        v.agree = v.diff <= kVerifyTolerance * std::max(1.0, std::abs(reference));
    }
    CommandOutput res;
    if (opts.json) {
        Json doc;
        doc["command"] = "partition";
        doc["fields"] = fields;
        doc["re"] = z.real();
        doc["im"] = z.imag();
        doc["engine"] = engine;
        if (v.ran) {
            doc["bruteforce_re"] = reference.real();
            doc["bruteforce_im"] = reference.imag();
            doc["agree"] = v.agree;
        }
        res.out = finish_json(doc);
    } else {
        res.out = format_complex(z) + "\n";
        if (v.ran) {
            res.out += "bruteforce " + format_complex(reference) + (v.agree ? " agree" : " MISMATCH") + "\n";
        }
    }
    add_verify(res, v, "brute-force", opts);
    return res;
}

CommandOutput cmd_sample(const CircuitFile &file, const CommandOptions &opts) {
    const auto &c = file.circuit;
    Routes r = route(file);
    Rng rng(opts.seed);
    std::vector<std::string> lines;
    lines.reserve(opts.count);
    std::string engine;
    if (r.sparse.kind != SparseKind::General) {
        engine = "sparse";
        SparseSampler sampler(c);
        for (size_t k = 0; k < opts.count; k++) {
            lines.push_back(sampler.sample(rng).str());
        }
    } else if (r.planar) {
        engine = "planar";
        PlanarSampler sampler(*r.planar, opts.planar);
        for (size_t k = 0; k < opts.count; k++) {
            lines.push_back(sampler.sample(rng).str());
        }
    } else if (c.num_qubits() <= kOracleMaxQubits) {
        engine = "oracle";
        auto table = xbasis_table(simulate_statevector(c));
        std::vector<double> cumulative(table.size());
        double acc = 0.0;
        for (size_t x = 0; x < table.size(); x++) {
            acc += table[x];
            cumulative[x] = acc;
        }
        for (size_t k = 0; k < opts.count; k++) {
            double u = uniform01(rng) * acc;
            size_t x = static_cast<size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
            x = std::min(x, table.size() - 1);
            lines.push_back(OutcomeString::from_index(x, c.num_qubits()).str());
        }
    } else {
        throw std::domain_error("no sampler applies: circuit is neither sparse nor planar and exceeds the oracle cap");
    }
    CommandOutput res;
    if (opts.json) {
        Json doc;
        doc["command"] = "sample";
        doc["seed"] = opts.seed;
        doc["engine"] = engine;
        doc["samples"] = lines;
        res.out = finish_json(doc);
    } else {
        for (const auto &l : lines) {
            res.out += l + "\n";
        }
    }
    return res;
}

CommandOutput cmd_gen_grid(const std::string &shape, const std::string &theta, const CommandOptions &) {
    auto x = shape.find('x');
    size_t rows = 0, cols = 0;
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument("missing x");
        }
        size_t used = 0;
        rows = std::stoul(shape.substr(0, x), &used);
        if (used != x) {
            throw std::invalid_argument("rows");
        }
        cols = std::stoul(shape.substr(x + 1), &used);
        if (used != shape.size() - x - 1) {
            throw std::invalid_argument("cols");
        }
    } catch (const std::exception &) {
        throw UsageError("grid shape must look like RxC, got '" + shape + "'");
    }
    if (rows == 0 || cols == 0) {
        throw UsageError("grid needs at least one row and one column");
    }
    Angle angle;
    try {
        angle = Angle::parse(theta);
    } catch (const std::exception &e) {
        throw UsageError(e.what());
    }
    CircuitFile file;
    file.circuit = grid_circuit(rows, cols, angle);
    file.embedding = grid_embedding(rows, cols).rotation;
    CommandOutput res;
    res.out = serialize_circuit_file(file);
    return res;
}

CommandOutput cmd_selftest(const CommandOptions &opts) {
    auto results = run_selftest(opts.planar);
    CommandOutput res;
    std::vector<std::string> failed;
    Json checks = Json::array();
    for (const auto &r : results) {
        if (!r.passed) {
            failed.push_back(r.name);
        }
        if (opts.json) {
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            res.err += std::string(r.passed ? "ok   " : "FAIL ") + r.name + ": " + r.detail + "\n";
        }
    }
    std::string summary = "PASS";
    if (!failed.empty()) {
        summary = "FAIL";
        for (const auto &f : failed) {
            summary += " " + f;
        }
        res.exit_code = 1;
    }
    if (opts.json) {
        Json doc;
        doc["command"] = "selftest";
        doc["checks"] = checks;
        doc["summary"] = summary;
        res.out = finish_json(doc);
    } else {
        res.out = summary + "\n";
    }
    return res;
}

}  // namespace iqpsim
