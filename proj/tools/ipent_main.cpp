#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ipent/analysis.hpp"
#include "ipent/classify.hpp"
#include "ipent/decomp.hpp"
#include "ipent/errors.hpp"
#include "ipent/jsonout.hpp"
#include "ipent/oracle.hpp"
#include "ipent/properties.hpp"
#include "ipent/rng.hpp"
#include "ipent/state_io.hpp"
#include "ipent/states.hpp"
#include "ipent/version.hpp"

namespace {

using namespace ipent;

// ---------------------------------------------------------------------------
// complex literals: "1", "-2.5", "i", "-i", "2i", "1+2i", "1e-3+2.5e4i"

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    }
    return out;
}

double parse_real_strict(const std::string& num, const std::string& whole) {
    try {
        std::size_t used = 0;
        const double v = std::stod(num, &used);
        if (used != num.size()) {
            throw ParseError("malformed complex literal: " + whole);
        }
        return v;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed complex literal: " + whole);
    } catch (const std::out_of_range&) {
        throw ParseError("complex literal out of range: " + whole);
    }
}

Complex parse_complex_literal(const std::string& raw) {
    const std::string s = strip_spaces(raw);
    if (s.empty()) throw ParseError("empty complex literal");

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw ParseError("malformed complex literal: " + raw);

    double re = 0.0, im = 0.0;
    bool seen_re = false, seen_im = false;
    for (const std::string& term : terms) {
        const bool imaginary = term.back() == 'i' || term.back() == 'I';
        if (imaginary) {
            if (seen_im) throw ParseError("malformed complex literal: " + raw);
            seen_im = true;
            std::string num = term.substr(0, term.size() - 1);
            if (num.empty() || num == "+") {
                im = 1.0;
            } else if (num == "-") {
                im = -1.0;
            } else {
                im = parse_real_strict(num, raw);
            }
        } else {
            if (seen_re) throw ParseError("malformed complex literal: " + raw);
            seen_re = true;
            re = parse_real_strict(term, raw);
        }
    }
    return Complex(re, im);
}

ComplexVector parse_vector_literal(const std::string& raw) {
    std::vector<Complex> entries;
    std::string token;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = raw.find(',', start);
        token = raw.substr(start, comma == std::string::npos ? std::string::npos
                                                             : comma - start);
        entries.push_back(parse_complex_literal(token));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    ComplexVector v(static_cast<Eigen::Index>(entries.size()));
    for (std::size_t k = 0; k < entries.size(); ++k) {
        v(static_cast<Eigen::Index>(k)) = entries[k];
    }
    return v;
}

// ---------------------------------------------------------------------------
// report assembly

JsonValue complex_json(const Complex& z) {
    return JsonValue::array().push(z.real()).push(z.imag());
}

JsonValue vector_json(const ComplexVector& v) {
    JsonValue arr = JsonValue::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push(complex_json(v(i)));
    return arr;
}

JsonValue matrix_json(const ComplexMatrix& m) {
    JsonValue rows = JsonValue::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        JsonValue row = JsonValue::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push(complex_json(m(i, j)));
        rows.push(std::move(row));
    }
    return rows;
}

JsonValue real_vector_json(const RealVector& v) {
    JsonValue arr = JsonValue::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push(v(i));
    return arr;
}

JsonValue report_header(const char* command, const std::string& input_path) {
    JsonValue doc = JsonValue::object();
    doc.set("tool", kToolName);
    doc.set("version", kVersion);
    doc.set("command", command);
    if (!input_path.empty()) {
        doc.set("input", input_path);
        doc.set("input_digest", fnv1a_hex(read_file_bytes(input_path)));
    }
    return doc;
}

void emit(const JsonValue& doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------------------
// commands

JsonValue classify_document(const std::string& path, double eps) {
    const TwoParticleState psi = read_state_file(path);
    const ClassificationReport report = classify(psi, eps);

    JsonValue doc = report_header("classify", path);
    doc.set("statistics", to_string(report.statistics));
    doc.set("dim", static_cast<long long>(psi.dim()));
    doc.set("number", report.number);
    doc.set("entropy", report.entropy);
    doc.set("verdict", to_string(report.verdict));
    doc.set("rule", report.rule);
    doc.set("counting_threshold", eps);
    if (report.factorizing_pair) {
        JsonValue pair = JsonValue::object();
        pair.set("phi", vector_json(report.factorizing_pair->first.amplitudes()));
        pair.set("chi", vector_json(report.factorizing_pair->second.amplitudes()));
        doc.set("factorizing_pair", std::move(pair));
    }
    if (report.overlap) {
        doc.set("overlap", *report.overlap);
    }
    return doc;
}

int cmd_classify(const std::string& path, const std::string& dir, double eps) {
    if (!dir.empty()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(dir)) {
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        }
        std::sort(files.begin(), files.end());
        for (const std::string& file : files) emit(classify_document(file, eps));
        return 0;
    }
    emit(classify_document(path, eps));
    return 0;
}

int cmd_decompose(const std::string& path, double eps) {
    const TwoParticleState psi = read_state_file(path);
    JsonValue doc = report_header("decompose", path);
    doc.set("statistics", to_string(psi.statistics()));
    doc.set("dim", static_cast<long long>(psi.dim()));
    doc.set("counting_threshold", eps);
    if (psi.statistics() == Statistics::Fermion) {
        const SlaterDecomposition dec = slater_decompose(psi, eps);
        doc.set("kind", "slater");
        doc.set("coefficients", real_vector_json(dec.coefficients));
        doc.set("number", dec.slater_number);
        doc.set("basis", matrix_json(dec.pair_basis.matrix()));
    } else {
        const SchmidtDecomposition dec = schmidt_decompose(psi, eps);
        doc.set("kind", "schmidt");
        doc.set("coefficients", real_vector_json(dec.coefficients));
        doc.set("number", dec.schmidt_number);
        doc.set("basis", matrix_json(dec.basis.matrix()));
    }
    emit(doc);
    return 0;
}

int cmd_entropy(const std::string& path) {
    const TwoParticleState psi = read_state_file(path);
    JsonValue doc = report_header("entropy", path);
    doc.set("statistics", to_string(psi.statistics()));
    doc.set("dim", static_cast<long long>(psi.dim()));
    doc.set("entropy", von_neumann_entropy(reduced_density(psi)));
    emit(doc);
    return 0;
}

int cmd_properties(const std::string& path, double tol, int restarts,
                   std::uint64_t seed) {
    const TwoParticleState psi = read_state_file(path);
    const PropertyReport report = find_property_projector(psi, tol, restarts, seed);
    JsonValue doc = report_header("properties", path);
    doc.set("statistics", to_string(psi.statistics()));
    doc.set("dim", static_cast<long long>(psi.dim()));
    doc.set("max_value", report.max_value);
    doc.set("attained", report.attained);
    doc.set("argmax", vector_json(report.argmax.vector.amplitudes()));
    doc.set("restarts_used", report.restarts_used);
    doc.set("tolerance", report.tolerance);
    doc.set("seed", static_cast<unsigned long long>(seed));
    emit(doc);
    return 0;
}

int cmd_verify(const std::string& path, int samples, std::uint64_t seed) {
    const TwoParticleState psi = read_state_file(path);
    std::vector<oracle::VerificationOutcome> checks;

    checks.push_back(oracle::reconstruction_check(psi));

    const double fast_entropy = von_neumann_entropy(reduced_density(psi));
    const double brute = oracle::brute_entropy(psi);
    checks.push_back({"entropy-brute-vs-fast", std::abs(fast_entropy - brute) <= 1e-9,
                      std::abs(fast_entropy - brute), 1e-9});

    double closed = 0.0;
    if (psi.statistics() == Statistics::Fermion) {
        closed = entropy_from_slater(slater_decompose(psi).coefficients);
    } else {
        closed = entropy_from_schmidt(schmidt_decompose(psi).coefficients);
    }
    checks.push_back({"entropy-closed-form", std::abs(closed - fast_entropy) <= 1e-9,
                      std::abs(closed - fast_entropy), 1e-9});

    const double mismatch = oracle::slot_trace_mismatch(psi);
    checks.push_back({"slot-trace", mismatch <= 1e-12, mismatch, 1e-12});

    // Projector functional: closed form against the assembled d^2 x d^2
    // operator, at the density eigenvectors plus seeded random directions.
    {
        const HermitianEigen spectral =
            hermitian_eigen(reduced_density(psi).matrix());
        GaussianSource source(seed);
        double worst = 0.0;
        for (Eigen::Index k = 0; k < psi.dim(); ++k) {
            const ComplexVector p = spectral.eigenvectors.column(k);
            const double fast =
                ep_expectation(psi, Projector{SingleParticleVector::normalized(p)});
            worst = std::max(worst,
                             std::abs(fast - oracle::ep_expectation_brute(psi, p)));
        }
        for (int r = 0; r < 8; ++r) {
            const ComplexVector p = source.unit_vector(psi.dim());
            const double fast =
                ep_expectation(psi, Projector{SingleParticleVector::normalized(p)});
            worst = std::max(worst,
                             std::abs(fast - oracle::ep_expectation_brute(psi, p)));
        }
        checks.push_back({"ep-formula-vs-brute", worst <= 1e-10, worst, 1e-10});
    }

    {
        const PropertyReport search =
            find_property_projector(psi, kDefaultAttainTol, 8, seed);
        const double sampled = oracle::brute_max_ep(psi, samples, seed + 1);
        const double shortfall = std::max(0.0, sampled - search.max_value);
        checks.push_back({"search-dominates-sampling", shortfall <= 1e-9,
                          shortfall, 1e-9});
    }

    bool all_passed = true;
    JsonValue list = JsonValue::array();
    for (const auto& check : checks) {
        all_passed = all_passed && check.passed;
        JsonValue item = JsonValue::object();
        item.set("name", check.check_name);
        item.set("passed", check.passed);
        item.set("measured_error", check.measured_error);
        item.set("tolerance", check.tolerance);
        list.push(std::move(item));
    }
    JsonValue doc = report_header("verify", path);
    doc.set("statistics", to_string(psi.statistics()));
    doc.set("dim", static_cast<long long>(psi.dim()));
    doc.set("samples", samples);
    doc.set("seed", static_cast<unsigned long long>(seed));
    doc.set("checks", std::move(list));
    doc.set("all_passed", all_passed);
    emit(doc);
    return all_passed ? 0 : 4;
}

int write_and_report(const char* command, const TwoParticleState& psi,
                     const std::string& out_path) {
    write_state_file(out_path, psi);
    JsonValue doc = report_header(command, "");
    doc.set("out", out_path);
    doc.set("output_digest", fnv1a_hex(read_file_bytes(out_path)));
    doc.set("statistics", to_string(psi.statistics()));
    doc.set("dim", static_cast<long long>(psi.dim()));
    emit(doc);
    return 0;
}

int cmd_make(const std::string& statistics, const std::string& phi_text,
             const std::string& chi_text, const std::string& out_path) {
    const SingleParticleVector phi =
        SingleParticleVector::normalized(parse_vector_literal(phi_text));
    const SingleParticleVector chi =
        SingleParticleVector::normalized(parse_vector_literal(chi_text));
    const TwoParticleState psi = statistics == "fermion"
                                     ? antisymmetrize(phi, chi)
                                     : symmetrize(phi, chi);
    return write_and_report("make", psi, out_path);
}

int cmd_random(const std::string& statistics, int dim, std::uint64_t seed,
               const std::string& out_path) {
    const Statistics kind =
        statistics == "fermion" ? Statistics::Fermion : Statistics::Boson;
    return write_and_report("random", random_state(dim, kind, seed), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement analysis for pure states of two identical particles"};
    app.require_subcommand(1);

    std::string path, dir, out_path, statistics, phi_text, chi_text;
    double classify_eps = kDefaultCountThreshold;
    double decompose_eps = kDefaultCountThreshold;
    double attain_tol = kDefaultAttainTol;
    int restarts = kDefaultRestarts;
    int samples = 2000;
    int dim = 2;
    std::uint64_t seed = 20260814u;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "Entanglement verdict for a state file");
    CLI::Option* classify_path =
        classify_cmd->add_option("path", path, "state file");
    classify_cmd->add_option("--dir", dir,
                             "classify every file in a directory, one report per line")
        ->excludes(classify_path);
    classify_cmd->add_option("--tol", classify_eps,
                             "coefficient counting threshold");

    CLI::App* decompose_cmd = app.add_subcommand(
        "decompose", "Slater (fermion) or Schmidt (boson) decomposition");
    decompose_cmd->add_option("path", path, "state file")->required();
    decompose_cmd->add_option("--eps-count", decompose_eps,
                              "coefficient counting threshold");

    CLI::App* entropy_cmd = app.add_subcommand(
        "entropy", "von Neumann entropy of the reduced density operator");
    entropy_cmd->add_option("path", path, "state file")->required();

    CLI::App* properties_cmd = app.add_subcommand(
        "properties", "maximize the property-attribution projector functional");
    properties_cmd->add_option("path", path, "state file")->required();
    properties_cmd->add_option("--tol", attain_tol, "attainment tolerance");
    properties_cmd->add_option("--restarts", restarts, "random restarts");
    properties_cmd->add_option("--seed", seed, "restart seed");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run brute-force oracle checks against the fast paths");
    verify_cmd->add_option("path", path, "state file")->required();
    verify_cmd->add_option("--samples", samples, "random projector samples");
    verify_cmd->add_option("--seed", seed, "sampling seed");

    CLI::App* make_cmd = app.add_subcommand(
        "make", "(anti)symmetrize two single-particle vectors into a state file");
    make_cmd->add_option("--statistics", statistics, "fermion or boson")
        ->required()
        ->check(CLI::IsMember({"fermion", "boson"}));
    make_cmd->add_option("--phi", phi_text, "comma-separated complex entries")
        ->required();
    make_cmd->add_option("--chi", chi_text, "comma-separated complex entries")
        ->required();
    make_cmd->add_option("--out", out_path, "output state file")->required();

    CLI::App* random_cmd =
        app.add_subcommand("random", "write a random state file");
    random_cmd->add_option("--statistics", statistics, "fermion or boson")
        ->required()
        ->check(CLI::IsMember({"fermion", "boson"}));
    random_cmd->add_option("--dim", dim, "single-particle dimension")->required();
    random_cmd->add_option("--seed", seed, "generator seed");
    random_cmd->add_option("--out", out_path, "output state file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(classify_cmd)) {
            if (dir.empty() && path.empty()) {
                std::cerr << "error: classify needs a path or --dir\n";
                return 1;
            }
            return cmd_classify(path, dir, classify_eps);
        }
        if (app.got_subcommand(decompose_cmd)) return cmd_decompose(path, decompose_eps);
        if (app.got_subcommand(entropy_cmd)) return cmd_entropy(path);
        if (app.got_subcommand(properties_cmd)) {
            return cmd_properties(path, attain_tol, restarts, seed);
        }
        if (app.got_subcommand(verify_cmd)) return cmd_verify(path, samples, seed);
        if (app.got_subcommand(make_cmd)) {
            return cmd_make(statistics, phi_text, chi_text, out_path);
        }
        if (app.got_subcommand(random_cmd)) {
            if (dim < 2) {
                throw DimensionTooSmall("dimension must be at least 2");
            }
            return cmd_random(statistics, dim, seed, out_path);
        }
        return 1;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        switch (err.kind()) {
            case ErrorKind::Parse: return 2;
            case ErrorKind::Invariant: return 3;
            case ErrorKind::Numerical: return 4;
        }
        return 4;
    } catch (const std::exception& err) {
        std::cerr << "unexpected error: " << err.what() << "\n";
        return 4;
    }
}
