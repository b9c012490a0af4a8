#include "iqpsim/circuit_file.h"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace iqpsim {

namespace {

using nlohmann::json;

void only_fields(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    for (const auto &item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw CircuitFileError("unknown field '" + item.key() + "' in " + where);
        }
    }
}

size_t one_based(const json &v, size_t limit, const std::string &what) {
    if (!v.is_number_integer()) {
        throw CircuitFileError(what + " must be an integer");
    }
    auto k = v.get<int64_t>();
    if (k < 1 || static_cast<uint64_t>(k) > limit) {
        throw CircuitFileError(what + " " + std::to_string(k) + " is out of range 1.." + std::to_string(limit));
    }
    return static_cast<size_t>(k - 1);
}

Angle read_angle(const json &v, size_t gate) {
    std::string where = "gate " + std::to_string(gate + 1);
    if (v.is_number()) {
        return Angle::radians(v.get<double>());
    }
    if (v.is_string()) {
        try {
            return Angle::parse(v.get<std::string>());
        } catch (const std::invalid_argument &e) {
            throw CircuitFileError(where + ": " + e.what());
        }
    }
    throw CircuitFileError(where + ": angle must be a number or a \"k*pi/m\" string");
}

}  // namespace

CircuitFile parse_circuit_file(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw CircuitFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw CircuitFileError("circuit file must be a JSON object");
    }
    only_fields(doc, {"n", "gates", "embedding"}, "circuit file");
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int64_t>() < 1) {
        throw CircuitFileError("field 'n' must be a positive integer");
    }
    size_t n = doc["n"].get<size_t>();
    std::vector<GateTerm> gates;
    if (doc.contains("gates")) {
        if (!doc["gates"].is_array()) {
            throw CircuitFileError("field 'gates' must be a list");
        }
        for (const auto &g : doc["gates"]) {
            size_t j = gates.size();
            std::string where = "gate " + std::to_string(j + 1);
            if (!g.is_object()) {
                throw CircuitFileError(where + " must be an object");
            }
            only_fields(g, {"qubits", "angle"}, where);
            if (!g.contains("qubits") || !g["qubits"].is_array() || !g.contains("angle")) {
                throw CircuitFileError(where + " needs 'qubits' and 'angle'");
            }
            GateTerm term;
            for (const auto &q : g["qubits"]) {
                term.qubits.push_back(one_based(q, n, where + " qubit"));
            }
            term.theta = read_angle(g["angle"], j);
            gates.push_back(std::move(term));
        }
    }
    CircuitFile out;
    try {
        out.circuit = IqpCircuit(n, std::move(gates));
    } catch (const std::invalid_argument &e) {
        throw CircuitFileError(e.what());
    }
    if (doc.contains("embedding")) {
        const auto &emb = doc["embedding"];
        if (!emb.is_array() || emb.size() != n) {
            throw CircuitFileError("field 'embedding' must list one rotation per qubit");
        }
        std::vector<std::vector<size_t>> rotation;
        size_t g = out.circuit.gates().size();
        for (const auto &rot : emb) {
            if (!rot.is_array()) {
                throw CircuitFileError("each embedding entry must be a list of gate ids");
            }
            std::vector<size_t> ids;
            for (const auto &e : rot) {
                ids.push_back(one_based(e, g, "embedding gate id"));
            }
            rotation.push_back(std::move(ids));
        }
        out.embedding = std::move(rotation);
    }
    return out;
}

CircuitFile load_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CircuitFileError("cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_circuit_file(buf.str());
}

std::string serialize_circuit_file(const CircuitFile &file) {
    nlohmann::ordered_json doc;
    doc["n"] = file.circuit.num_qubits();
    doc["gates"] = nlohmann::ordered_json::array();
    for (const auto &g : file.circuit.gates()) {
        nlohmann::ordered_json gate;
        nlohmann::ordered_json qubits = nlohmann::ordered_json::array();
        for (auto q : g.qubits) {
            qubits.push_back(q + 1);
        }
        gate["qubits"] = qubits;
        if (g.theta.exact()) {
            gate["angle"] = g.theta.str();
        } else {
            gate["angle"] = g.theta.value();
        }
        doc["gates"].push_back(gate);
    }
    if (file.embedding) {
        nlohmann::ordered_json emb = nlohmann::ordered_json::array();
        for (const auto &rot : *file.embedding) {
            nlohmann::ordered_json ids = nlohmann::ordered_json::array();
            for (auto e : rot) {
                ids.push_back(e + 1);
            }
            emb.push_back(ids);
        }
        doc["embedding"] = emb;
    }
    return doc.dump(2) + "\n";
}

}  // namespace iqpsim
