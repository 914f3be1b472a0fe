// spingate: build spin Hamiltonians from two-spin Pauli terms, evolve them
// exactly, check gate semantics, and search coefficient space for
// gate-realizing interactions. JSON on stdout, diagnostics on stderr.
// Exit codes: 0 success/pass, 1 semantic failure, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spingate/errors.hpp"
#include "spingate/gate.hpp"
#include "spingate/hamfile.hpp"
#include "spingate/json_render.hpp"
#include "spingate/linalg.hpp"
#include "spingate/pauli.hpp"
#include "spingate/search.hpp"

namespace {

using namespace spingate;

HamFileDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_file(buffer.str());
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::size_t resolve_site(const SpinSystem& system, const std::string& name) {
    const auto site = system.site_index(name);
    if (!site) throw std::runtime_error("unknown site '" + name + "'");
    return *site;
}

// Gate named on the command line, wired to the given sites. "xor" is the
// parity of the input bits.
GateSpec make_gate(const std::string& gate, const SpinSystem& system, const std::string& inputs,
                   const std::string& output) {
    if (gate != "xor") throw std::runtime_error("unsupported gate '" + gate + "'");
    const std::vector<std::string> input_names = split_list(inputs);
    if (input_names.empty()) throw std::runtime_error("--inputs must name at least one site");
    std::vector<std::size_t> input_sites;
    for (const std::string& name : input_names) input_sites.push_back(resolve_site(system, name));
    const std::size_t output_site = resolve_site(system, output);

    std::vector<int> table(std::size_t{1} << input_sites.size());
    for (std::size_t key = 0; key < table.size(); ++key)
        table[key] = static_cast<int>(std::popcount(key) & 1u);
    return GateSpec(std::move(table), std::move(input_sites), output_site);
}

// "AB" for single-letter site names, or "A-B" in general.
std::pair<std::size_t, std::size_t> parse_pair(const SpinSystem& system, const std::string& text) {
    const std::size_t dash = text.find('-');
    if (dash != std::string::npos)
        return {resolve_site(system, text.substr(0, dash)),
                resolve_site(system, text.substr(dash + 1))};
    for (std::size_t cut = 1; cut < text.size(); ++cut) {
        const auto a = system.site_index(text.substr(0, cut));
        const auto b = system.site_index(text.substr(cut));
        if (a && b) return {*a, *b};
    }
    throw std::runtime_error("cannot parse pair '" + text + "' (use e.g. AB or A-B)");
}

int cmd_assemble(const std::string& file) {
    const HamFileDocument doc = load_document(file);
    std::cout << render_matrix(assemble(doc.to_hamiltonian())) << '\n';
    return 0;
}

void require_finite_time(double time) {
    if (!std::isfinite(time)) throw std::runtime_error("--time must be finite");
}

int cmd_evolve(const std::string& file, double time) {
    require_finite_time(time);
    const HamFileDocument doc = load_document(file);
    std::cout << render_matrix(unitary_exponential(assemble(doc.to_hamiltonian()), time)) << '\n';
    return 0;
}

int cmd_verify(const std::string& file, const std::string& gate, const std::string& inputs,
               const std::string& output, double time, double tol) {
    require_finite_time(time);
    const HamFileDocument doc = load_document(file);
    const GateSpec spec = make_gate(gate, doc.system, inputs, output);
    const ComplexMatrix u = unitary_exponential(assemble(doc.to_hamiltonian()), time);
    const VerificationReport report = verify_gate(u, spec, tol);
    std::cout << render_report(report) << '\n';
    return report.passed ? 0 : 1;
}

int cmd_truth_table(const std::string& file, double time) {
    require_finite_time(time);
    const HamFileDocument doc = load_document(file);
    const ComplexMatrix u = unitary_exponential(assemble(doc.to_hamiltonian()), time);
    std::cout << render_induced_map(induced_map(u, 1e-8)) << '\n';
    return 0;
}

int cmd_eig(const std::string& file) {
    const HamFileDocument doc = load_document(file);
    const EigenDecomposition eig = hermitian_eigen(assemble(doc.to_hamiltonian()));
    std::cout << render_real_vector(eig.eigenvalues) << '\n';
    return 0;
}

int cmd_search(const std::string& spins, const std::string& pairs, const std::string& gate,
               const std::string& inputs, const std::string& output, std::uint64_t seed,
               std::size_t restarts, bool single_site, double tol) {
    SpinSystem system(split_list(spins));
    std::vector<std::pair<std::size_t, std::size_t>> pair_list;
    if (pairs.empty()) {
        for (std::size_t a = 0; a < system.site_count(); ++a)
            for (std::size_t b = a + 1; b < system.site_count(); ++b)
                pair_list.emplace_back(a, b);
    } else {
        for (const std::string& text : split_list(pairs))
            pair_list.push_back(parse_pair(system, text));
    }
    const GateSpec spec = make_gate(gate, system, inputs, output);
    const InteractionTemplate tmpl(system, std::move(pair_list), single_site);

    SearchConfig config;
    config.restarts = restarts;
    config.rng_seed = seed;
    config.success_tol = tol;
    // 18-27 dimensional descents need far more than the library default
    // to polish below typical success tolerances.
    config.max_iterations = 20000;
    const SearchResult result = search(tmpl, spec, config);

    const Hamiltonian found = realize(tmpl, result.best_parameters);
    const std::string ham_text = write_file(HamFileDocument{found.system, found.terms, {}});
    std::cout << render_search_result(result, ham_text) << '\n';
    return result.succeeded ? 0 : 1;
}

int cmd_xor_demo() {
    const Hamiltonian h = xor_hamiltonian();
    const ComplexMatrix hm = assemble(h);
    const ComplexMatrix u = unitary_exponential(hm, 1.0);
    const double deviation = max_abs_difference(u, canonical_xor_unitary());
    const VerificationReport report = verify_gate(u, xor_gate_spec(), 1e-10);

    std::cout << "{\"hamiltonian\":" << render_matrix(hm) << ",\"unitary\":" << render_matrix(u)
              << ",\"max_deviation\":" << json_number(deviation)
              << ",\"report\":" << render_report(report) << "}\n";
    return (deviation <= 1e-10 && report.passed) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-gate Hamiltonian toolkit"};
    app.require_subcommand(1);

    std::string file, gate = "xor", inputs, output, spins = "A,B,C", pairs;
    double time = 1.0, verify_tol = 1e-10, search_tol = 1e-6;
    std::uint64_t seed = 0;
    std::size_t restarts = 0;
    bool single_site = false;

    CLI::App* assemble_cmd = app.add_subcommand("assemble", "print the Hamiltonian matrix");
    assemble_cmd->add_option("file", file, ".ham file")->required();

    CLI::App* evolve_cmd = app.add_subcommand("evolve", "print the evolution unitary");
    evolve_cmd->add_option("file", file, ".ham file")->required();
    evolve_cmd->add_option("--time", time, "evolution duration")->check(CLI::Number);

    CLI::App* verify_cmd = app.add_subcommand("verify", "check gate semantics of the evolution");
    verify_cmd->add_option("file", file, ".ham file")->required();
    verify_cmd->add_option("--gate", gate, "gate name (xor)");
    verify_cmd->add_option("--inputs", inputs, "comma-separated input sites")->required();
    verify_cmd->add_option("--output", output, "output site")->required();
    verify_cmd->add_option("--time", time, "evolution duration");
    verify_cmd->add_option("--tol", verify_tol, "leakage tolerance");

    CLI::App* truth_cmd = app.add_subcommand("truth-table", "print the induced classical map");
    truth_cmd->add_option("file", file, ".ham file")->required();
    truth_cmd->add_option("--time", time, "evolution duration");

    CLI::App* eig_cmd = app.add_subcommand("eig", "print Hamiltonian eigenvalues (ascending)");
    eig_cmd->add_option("file", file, ".ham file")->required();

    CLI::App* search_cmd =
        app.add_subcommand("search", "search coefficient space for a gate-realizing Hamiltonian");
    search_cmd->add_option("--spins", spins, "comma-separated site names");
    search_cmd->add_option("--pairs", pairs, "comma-separated site pairs (default: all)");
    search_cmd->add_option("--gate", gate, "gate name (xor)");
    search_cmd->add_option("--inputs", inputs, "comma-separated input sites")->required();
    search_cmd->add_option("--output", output, "output site")->required();
    search_cmd->add_option("--seed", seed, "rng seed");
    search_cmd->add_option("--restarts", restarts, "number of random restarts")
        ->required()
        ->check(CLI::PositiveNumber);
    search_cmd->add_flag("--single-site", single_site, "also allow single-spin terms");
    search_cmd->add_option("--tol", search_tol, "success tolerance on total leakage");

    CLI::App* demo_cmd =
        app.add_subcommand("xor-demo", "reproduce the built-in three-spin XOR construction");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*assemble_cmd) return cmd_assemble(file);
        if (*evolve_cmd) return cmd_evolve(file, time);
        if (*verify_cmd) return cmd_verify(file, gate, inputs, output, time, verify_tol);
        if (*truth_cmd) return cmd_truth_table(file, time);
        if (*eig_cmd) return cmd_eig(file);
        if (*search_cmd)
            return cmd_search(spins, pairs, gate, inputs, output, seed, restarts, single_site,
                              search_tol);
        if (*demo_cmd) return cmd_xor_demo();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
