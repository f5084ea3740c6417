#ifndef OPINEQ_RUN_HPP
#define OPINEQ_RUN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opineq {

/// A fully resolved CLI invocation. Round-trips through its JSON
/// serialization unchanged.
struct RunSpec {
    std::string command;  // hh|operator|power|kantorovich|furuta|constants|sweep|verify-map

    std::optional<std::string> matrix;     // file path or inline matrix JSON
    std::optional<std::string> matrix2;    // second operand (furuta)
    std::optional<std::string> map;        // "normalized_trace", "pinching:1,1", path, or JSON
    std::optional<std::string> function;   // "power:-1", "exp", "affine_power:s,c,r", path, or JSON
    std::optional<double> t;
    std::optional<double> interval_m;
    std::optional<double> interval_M;
    std::optional<std::string> mode;       // ratio|unit|custom / ratio|difference
    std::optional<double> alpha;           // custom mode multiplier
    std::optional<double> r;               // power exponent (power/constants)
    std::optional<std::string> quad;       // "gauss_legendre:64", "adaptive_simpson:tol,depth", path, JSON
    std::optional<std::string> chain;      // sweep target chain

    int trials = 100;
    std::vector<int> dims{2, 3, 4, 5, 6};
    std::uint64_t seed = 0;
    int dim = 4;                           // verify-map dimension for trace maps
    std::string format = "json";           // json|csv|pretty
    std::optional<std::string> out;        // output path; stdout when absent

    bool operator==(const RunSpec&) const = default;
};

RunSpec parse_runspec_json(const std::string& text);
std::string runspec_to_json(const RunSpec& spec);

/// Executes the invocation. Reports go to `out` (or spec.out), diagnostics
/// to `diag`. Returns the process exit status:
///   0 success / all chains passed
///   1 a verified inequality failed (chain link, sweep draw, or map check)
///   2 malformed input (flags, files, JSON)
///   3 precondition violation (domain, shape, spectrum, convexity)
int run(const RunSpec& spec, std::ostream& out, std::ostream& diag);

/// Aggregate of a randomized sweep; deterministic for a fixed seed.
struct SweepSummary {
    std::string chain;
    int trials = 0;
    int passed = 0;
    std::uint64_t seed = 0;
    double worst_gap = 0.0;
    double mean_gap_refined = 0.0;   // mean lambda_min(T_last - T_prev)
    double mean_gap_baseline = 0.0;  // mean lambda_min(T_last - T_first_bound)
    std::vector<std::pair<int, double>> failures;  // (trial index, violating gap)
};

SweepSummary run_sweep(const RunSpec& spec);

std::string sweep_to_json(const SweepSummary& s);
std::string sweep_to_csv(const SweepSummary& s);
std::string sweep_to_pretty(const SweepSummary& s);

}  // namespace opineq

#endif
