#include "ipent/state_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ipent/errors.hpp"
#include "ipent/jsonout.hpp"

namespace ipent {

namespace {

using nlohmann::json;

Statistics parse_statistics(const json& value) {
    if (!value.is_string()) {
        throw ParseError("\"statistics\" must be a string");
    }
    const std::string text = value.get<std::string>();
    if (text == "fermion") return Statistics::Fermion;
    if (text == "boson") return Statistics::Boson;
    throw ParseError("\"statistics\" must be \"fermion\" or \"boson\", got \"" +
                     text + "\"");
}

double parse_number(const json& value, const char* where) {
    if (!value.is_number()) {
        throw ParseError(std::string(where) + " must be a number");
    }
    return value.get<double>();
}

}  // namespace

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

TwoParticleState read_state_file(const std::string& path) {
    const std::string text = read_file_bytes(path);
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("not valid JSON: " + path);
    }
    if (!doc.is_object()) {
        throw ParseError("state file must be a JSON object");
    }
    if (!doc.contains("dim") || !doc.contains("statistics") ||
        !doc.contains("matrix")) {
        throw ParseError(
            "state file needs \"dim\", \"statistics\" and \"matrix\" fields");
    }
    if (!doc["dim"].is_number_integer()) {
        throw ParseError("\"dim\" must be an integer");
    }
    const long long dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > 4096) {
        throw ParseError("\"dim\" out of range");
    }
    const Statistics statistics = parse_statistics(doc["statistics"]);

    const json& rows = doc["matrix"];
    if (!rows.is_array() || static_cast<long long>(rows.size()) != dim) {
        throw ParseError("\"matrix\" must be an array of dim rows");
    }
    ComplexMatrix c(dim, dim);
    for (long long i = 0; i < dim; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != dim) {
            throw ParseError("matrix row " + std::to_string(i) +
                             " must have dim entries");
        }
        for (long long j = 0; j < dim; ++j) {
            const json& entry = row[j];
            if (!entry.is_array() || entry.size() != 2) {
                throw ParseError("matrix entries must be [re, im] pairs");
            }
            c(i, j) = Complex(parse_number(entry[0], "matrix entry"),
                              parse_number(entry[1], "matrix entry"));
        }
    }
    return TwoParticleState::from_matrix(statistics, c);
}

void write_state_file(const std::string& path, const TwoParticleState& psi) {
    const Eigen::Index d = psi.dim();
    const ComplexMatrix& c = psi.coefficients();
    std::string out;
    out += "{\n  \"dim\": " + std::to_string(d) + ",\n";
    out += "  \"statistics\": \"" + to_string(psi.statistics()) + "\",\n";
    out += "  \"matrix\": [\n";
    for (Eigen::Index i = 0; i < d; ++i) {
        out += "    [";
        for (Eigen::Index j = 0; j < d; ++j) {
            if (j) out += ", ";
            out += "[" + JsonValue::format_double(c(i, j).real()) + ", " +
                   JsonValue::format_double(c(i, j).imag()) + "]";
        }
        out += i + 1 < d ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";

    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw ParseError("cannot write file: " + path);
    }
    file << out;
    if (!file.good()) {
        throw ParseError("write failed: " + path);
    }
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        hash ^= b;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace ipent
