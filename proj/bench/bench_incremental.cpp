// Benchmark comparing the incremental sweep against full recomputation, and
// the serial sweep against the OpenMP one, on a recorded completion trace.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "semirel/completion.hpp"
#include "semirel/srs.hpp"

using namespace semirel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TraceRun {
    std::vector<CompletionBatch> batches;
    Srs srs;
    Outcome outcome;
};

TraceRun record(const std::string& text) {
    TraceRun run;
    run.srs = parse_srs(text);
    Completion completion(run.srs.alphabet, run.srs.rules, Limits{}, ExecMode::Serial);
    RunOptions options;
    options.record_trace = true;
    run.outcome = completion.run(options);
    for (auto& event : run.outcome.trace) run.batches.push_back(std::move(event.batch));
    return run;
}

} // namespace

int main() {
    const std::string system =
        "a a -> a b a\n"
        "b b -> b c b\n"
        "c c -> c d c\n"
        "d d -> d e d\n"
        "e e -> e f e\n"
        "f f -> f g f\n"
        "g g -> g h g\n"
        "h h -> h g h\n"
        "g g -> g f g\n"
        "f f -> f e f\n"
        "e e -> e d e\n"
        "d d -> d c d\n"
        "c c -> c b c\n"
        "b b -> b a b\n";

    std::printf("recording completion trace...\n");
    TraceRun run = record(system);
    std::printf("outcome: %s, bound %u, %zu states, %zu batches\n",
                show_status(run.outcome.status).c_str(), run.outcome.bound,
                run.outcome.stats.states, run.batches.size());

    auto replay_apply = [&run](ExecMode mode) {
        Completion completion(run.srs.alphabet, run.srs.rules, Limits{}, mode);
        auto aut = completion.automaton();
        aut.set_mode(mode);
        auto start = Clock::now();
        for (const auto& batch : run.batches) aut = aut.apply_delta(batch);
        return seconds_since(start);
    };

    auto replay_full = [&run](ExecMode mode) {
        Completion completion(run.srs.alphabet, run.srs.rules, Limits{}, mode);
        auto aut = completion.automaton();
        aut.set_mode(mode);
        auto start = Clock::now();
        for (const auto& batch : run.batches) aut = aut.rebase_full(batch);
        return seconds_since(start);
    };

    double inc_serial = replay_apply(ExecMode::Serial);
    double inc_parallel = replay_apply(ExecMode::Parallel);
    double full_serial = replay_full(ExecMode::Serial);
    double full_parallel = replay_full(ExecMode::Parallel);

    std::printf("\nper-trace totals over %zu update batches:\n", run.batches.size());
    std::printf("  incremental sweep, serial   : %8.3f s\n", inc_serial);
    std::printf("  incremental sweep, OpenMP   : %8.3f s\n", inc_parallel);
    std::printf("  full recompute,    serial   : %8.3f s\n", full_serial);
    std::printf("  full recompute,    OpenMP   : %8.3f s\n", full_parallel);
    std::printf("\n  incremental vs full (serial): %.1fx\n", full_serial / inc_serial);
    std::printf("  serial vs OpenMP (full)     : %.2fx\n", full_serial / full_parallel);
    return 0;
}
