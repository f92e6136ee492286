#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "semirel/certificate.hpp"
#include "semirel/completion.hpp"
#include "semirel/srs.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitMaybe = 1;   // limit reached, or certificate rejected
constexpr int kExitInput = 2;   // unreadable or malformed input
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw semirel::parse_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

struct ProveArgs {
    std::string file;
    std::size_t max_steps = semirel::Limits{}.max_steps;
    std::size_t max_states = semirel::Limits{}.max_states;
    std::uint32_t max_height = semirel::Limits{}.max_height;
    std::string emit_cert;
    std::string dot;
    bool stats = false;
    bool progress = false;
    bool full_recompute_check = false;
    bool serial = false;
};

int run_prove(const ProveArgs& args) {
    semirel::Srs srs = semirel::parse_srs(read_file(args.file));
    semirel::Limits limits{args.max_steps, args.max_states, args.max_height};
    semirel::Completion completion(
        srs.alphabet, srs.rules, limits,
        args.serial ? semirel::ExecMode::Serial : semirel::ExecMode::Parallel);

    semirel::RunOptions options;
    options.cross_check = args.full_recompute_check;
    if (args.progress) {
        options.progress = [](const semirel::Progress& p) {
            std::cerr << "step " << p.steps << ": " << p.states << " states, height "
                      << p.max_height << "\n";
        };
    }

    auto started = std::chrono::steady_clock::now();
    semirel::Outcome outcome = completion.run(options);
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    std::cout << "outcome: " << semirel::show_status(outcome.status) << "\n";
    std::cout << "bound: " << outcome.bound << "\n";
    std::cout << "states: " << outcome.stats.states << "\n";
    std::cout << "edges: " << outcome.stats.edges << "\n";
    std::cout << "steps: " << outcome.stats.steps << "\n";
    if (args.stats) {
        std::cout << "rewrite firings: " << outcome.stats.rewrite_firings << "\n";
        std::cout << "transitive edges: " << outcome.stats.transitive_edges << "\n";
        std::cout << "inverse edges: " << outcome.stats.inverse_edges << "\n";
        std::cout << "epsilon rounds: " << outcome.stats.epsilon_rounds << "\n";
        std::cout << "relation multiplications: " << outcome.stats.sweep_total.multiplications
                  << "\n";
        std::cout << "delta entries: " << outcome.stats.sweep_total.delta_entries << "\n";
    }
    std::cout << "time: " << elapsed << " ms\n";

    if (!args.emit_cert.empty() || !args.dot.empty()) {
        semirel::Certificate cert = semirel::make_certificate(completion);
        if (!args.emit_cert.empty()) write_file(args.emit_cert, semirel::export_json(cert));
        if (!args.dot.empty()) write_file(args.dot, semirel::export_dot(cert));
    }
    return outcome.success() ? kExitSuccess : kExitMaybe;
}

int run_verify(const std::string& path) {
    semirel::Certificate cert = semirel::import_json(read_file(path));
    semirel::Verdict verdict = semirel::verify(cert);
    if (verdict.ok()) {
        std::cout << "verification: ok (bound " << cert.bound << ", "
                  << cert.states.size() << " states)\n";
        return kExitSuccess;
    }
    std::cout << "verification: failed\n";
    for (const auto& f : verdict.failures) std::cout << "  " << semirel::describe(f) << "\n";
    return kExitMaybe;
}

int run_chain(const std::string& path) {
    semirel::Srs srs = semirel::parse_srs(read_file(path));
    auto words = semirel::query_words(srs.alphabet.size(), srs.rules);
    semirel::Chain chain = semirel::Chain::build(words);
    std::cout << chain.dump(srs.alphabet);
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"incremental semiring path engine and matchbound prover"};
    app.require_subcommand(1);

    ProveArgs prove_args;
    auto* prove = app.add_subcommand("prove", "run completion on a rewriting system");
    prove->add_option("file", prove_args.file, "rewriting system file")->required();
    prove->add_option("--max-steps", prove_args.max_steps, "rewrite step limit");
    prove->add_option("--max-states", prove_args.max_states, "state count limit");
    prove->add_option("--max-height", prove_args.max_height, "height limit");
    prove->add_option("--emit-cert", prove_args.emit_cert, "write certificate JSON here");
    prove->add_option("--dot", prove_args.dot, "write certificate DOT here");
    prove->add_flag("--stats", prove_args.stats, "print engine statistics");
    prove->add_flag("--progress", prove_args.progress, "report progress per step");
    prove->add_flag("--full-recompute-check", prove_args.full_recompute_check,
                    "cross-check every update against full recomputation (slow)");
    prove->add_flag("--serial", prove_args.serial, "use the serial sweep");

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("file", verify_path, "certificate JSON file")->required();

    std::string chain_path;
    auto* chain = app.add_subcommand("chain", "dump the multiplication chain");
    chain->add_option("file", chain_path, "rewriting system file")->required();

    try {
        app.parse(argc, argv);
        if (prove->parsed()) return run_prove(prove_args);
        if (verify->parsed()) return run_verify(verify_path);
        if (chain->parsed()) return run_chain(chain_path);
        return kExitInput;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitSuccess : kExitInput;
    } catch (const semirel::parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const semirel::engine_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}
