#include "opineq/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "opineq/chains.hpp"
#include "opineq/json_io.hpp"
#include "opineq/random.hpp"

namespace opineq {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<double> split_numbers(const std::string& s, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError(what + ": cannot parse number \"" + item + "\"");
        }
    }
    if (out.empty()) throw ParseError(what + ": empty list");
    return out;
}

SymMatrix load_matrix(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return parse_matrix_json(spec);
    return parse_matrix_json(read_file(spec));
}

FunctionDescriptor load_function(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return parse_function_json(spec);
    if (spec == "exp") return FunctionDescriptor::exp();
    if (spec.rfind("power:", 0) == 0) {
        const auto v = split_numbers(spec.substr(6), "function exponent");
        if (v.size() != 1) throw ParseError("power takes one exponent");
        return FunctionDescriptor::power(v[0]);
    }
    if (spec.rfind("affine_power:", 0) == 0) {
        const auto v = split_numbers(spec.substr(13), "affine_power parameters");
        if (v.size() != 3) throw ParseError("affine_power takes scale,shift,r");
        try {
            return FunctionDescriptor::affine_of_power(v[0], v[1], v[2]);
        } catch (const InvalidParameterError& e) {
            throw ParseError(e.what());
        }
    }
    return parse_function_json(read_file(spec));
}

MapDescriptor load_map(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return parse_map_json(spec);
    if (spec == "normalized_trace") return MapDescriptor::normalized_trace();
    if (spec.rfind("pinching:", 0) == 0) {
        const auto v = split_numbers(spec.substr(9), "pinching blocks");
        std::vector<int> blocks;
        for (double b : v) {
            if (b != std::floor(b) || b < 1) throw ParseError("pinching blocks must be positive integers");
            blocks.push_back(static_cast<int>(b));
        }
        try {
            return MapDescriptor::pinching(std::move(blocks));
        } catch (const InvalidParameterError& e) {
            throw ParseError(e.what());
        }
    }
    return parse_map_json(read_file(spec));
}

QuadratureConfig load_quad(const std::optional<std::string>& spec) {
    if (!spec) return QuadratureConfig::gauss_legendre();
    const std::string& s = *spec;
    try {
        if (!s.empty() && s.front() == '{') return parse_quad_json(s);
        if (s.rfind("gauss_legendre:", 0) == 0)
            return QuadratureConfig::gauss_legendre(
                static_cast<int>(split_numbers(s.substr(15), "nodes")[0]));
        if (s.rfind("adaptive_simpson:", 0) == 0) {
            const auto v = split_numbers(s.substr(17), "adaptive simpson parameters");
            if (v.size() != 2) throw ParseError("adaptive_simpson takes abs_tol,max_depth");
            return QuadratureConfig::adaptive_simpson(v[0], static_cast<int>(v[1]));
        }
    } catch (const InvalidParameterError& e) {
        throw ParseError(e.what());
    }
    return parse_quad_json(read_file(s));
}

std::optional<Interval> load_interval(const RunSpec& spec) {
    if (!spec.interval_m && !spec.interval_M) return std::nullopt;
    if (!spec.interval_m || !spec.interval_M)
        throw ParseError("interval needs both endpoints m,M");
    try {
        return Interval(*spec.interval_m, *spec.interval_M);
    } catch (const InvalidParameterError& e) {
        throw ParseError(e.what());
    }
}

AlphaMode parse_alpha_mode(const std::optional<std::string>& mode) {
    if (!mode || *mode == "ratio") return AlphaMode::Ratio;
    if (*mode == "unit") return AlphaMode::Unit;
    if (*mode == "custom") return AlphaMode::Custom;
    throw ParseError("unknown mode \"" + *mode + "\" (expected ratio|unit|custom)");
}

void emit(const RunSpec& spec, std::ostream& out, const std::string& text) {
    if (spec.out) {
        std::ofstream f(*spec.out, std::ios::binary);
        if (!f) throw ParseError("cannot write file: " + *spec.out);
        f << text;
    } else {
        out << text;
    }
}

std::string report_text(const RunSpec& spec, const ChainReport& rep) {
    if (spec.format == "csv") return report_to_csv(rep);
    if (spec.format == "pretty") return report_to_pretty(rep);
    if (spec.format == "json") return report_to_json(rep) + "\n";
    throw ParseError("unknown format \"" + spec.format + "\"");
}

}  // namespace

RunSpec parse_runspec_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("malformed run spec JSON");
    try {
        RunSpec s;
        const auto str = [&](const char* key, std::optional<std::string>& field) {
            if (j.contains(key)) field = j[key].get<std::string>();
        };
        const auto num = [&](const char* key, std::optional<double>& field) {
            if (j.contains(key)) field = j[key].get<double>();
        };
        if (!j.contains("command")) throw ParseError("run spec needs \"command\"");
        s.command = j["command"].get<std::string>();
        str("matrix", s.matrix);
        str("matrix2", s.matrix2);
        str("map", s.map);
        str("function", s.function);
        num("t", s.t);
        num("interval_m", s.interval_m);
        num("interval_M", s.interval_M);
        str("mode", s.mode);
        num("alpha", s.alpha);
        num("r", s.r);
        str("quad", s.quad);
        str("chain", s.chain);
        if (j.contains("trials")) s.trials = j["trials"].get<int>();
        if (j.contains("dims")) s.dims = j["dims"].get<std::vector<int>>();
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("dim")) s.dim = j["dim"].get<int>();
        if (j.contains("format")) s.format = j["format"].get<std::string>();
        str("out", s.out);
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("run spec JSON: ") + e.what());
    }
}

std::string runspec_to_json(const RunSpec& s) {
    json j;
    j["command"] = s.command;
    const auto put_str = [&](const char* key, const std::optional<std::string>& v) {
        if (v) j[key] = *v;
    };
    const auto put_num = [&](const char* key, const std::optional<double>& v) {
        if (v) j[key] = *v;
    };
    put_str("matrix", s.matrix);
    put_str("matrix2", s.matrix2);
    put_str("map", s.map);
    put_str("function", s.function);
    put_num("t", s.t);
    put_num("interval_m", s.interval_m);
    put_num("interval_M", s.interval_M);
    put_str("mode", s.mode);
    put_num("alpha", s.alpha);
    put_num("r", s.r);
    put_str("quad", s.quad);
    put_str("chain", s.chain);
    j["trials"] = s.trials;
    j["dims"] = s.dims;
    j["seed"] = s.seed;
    j["dim"] = s.dim;
    j["format"] = s.format;
    put_str("out", s.out);
    return j.dump();
}

// ---------------------------------------------------------------------------
// sweeps

namespace {

struct DrawStats {
    bool ok = true;
    double worst = HUGE_VAL;
    double refined = 0.0;
    double baseline = 0.0;
};

double min_eig_of_difference(const SymMatrix& lo, const SymMatrix& hi) {
    return loewner_leq(lo, hi, 1e-9).min_gap_eigenvalue;
}

DrawStats stats_of(const ChainReport& rep, size_t baseline_index) {
    DrawStats s;
    s.ok = rep.passed;
    s.worst = rep.worst_gap();
    const SymMatrix& last = rep.terms.back();
    s.refined = min_eig_of_difference(rep.terms[rep.terms.size() - 2], last);
    s.baseline = min_eig_of_difference(rep.terms[baseline_index], last);
    return s;
}

// positive spectral window for n = 1 draws (no spread to measure)
Interval widened_window(const SymMatrix& a, bool positive) {
    const double lo = a(0, 0);
    if (positive) return Interval(0.5 * lo, 1.5 * lo + 0.1);
    return Interval(lo - 0.5, lo + 0.5);
}

FunctionDescriptor pick_function(std::mt19937_64& rng) {
    const auto catalog = builtin_catalog();
    std::uniform_int_distribution<size_t> pick(0, catalog.size() - 1);
    return catalog[pick(rng)];
}

PowerTransform pick_transform(const FunctionDescriptor& f, const Interval& j,
                              std::mt19937_64& rng) {
    std::vector<double> ts{0.25, 0.5, 0.75};
    std::shuffle(ts.begin(), ts.end(), rng);
    for (double t : ts)
        if (is_power_convex(f, PowerTransform{t}, j)) return PowerTransform{t};
    // the reciprocal admits every t; reachable only for inadmissible combos
    return PowerTransform{0.5};
}

MapDescriptor pick_map(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 3);
    switch (kind(rng)) {
        case 0: return MapDescriptor::normalized_trace();
        case 1: {
            std::uniform_int_distribution<int> kd(1, n);
            return MapDescriptor::compression(ensembles::isometry(n, kd(rng), rng));
        }
        case 2: {
            std::vector<int> blocks;
            int left = n;
            while (left > 0) {
                std::uniform_int_distribution<int> bd(1, left);
                const int b = bd(rng);
                blocks.push_back(b);
                left -= b;
            }
            return MapDescriptor::pinching(std::move(blocks));
        }
        default: {
            std::uniform_real_distribution<double> w(0.2, 0.8);
            const double w0 = w(rng);
            std::vector<Matrix> us;
            us.push_back(ensembles::orthogonal(n, rng));
            us.push_back(ensembles::orthogonal(n, rng));
            return MapDescriptor::unitary_mixture({w0, 1.0 - w0}, std::move(us));
        }
    }
}

int pick_dim(const std::vector<int>& dims, std::mt19937_64& rng) {
    if (dims.empty()) throw ParseError("sweep needs at least one dimension");
    std::uniform_int_distribution<size_t> pick(0, dims.size() - 1);
    return dims[pick(rng)];
}

DrawStats sweep_operator_draw(const RunSpec& spec, int trial, std::mt19937_64& rng) {
    const int n = pick_dim(spec.dims, rng);
    const FunctionDescriptor f =
        spec.function ? load_function(*spec.function) : pick_function(rng);
    const bool positive = f.kind() != FunctionDescriptor::Kind::Exp;
    std::uniform_real_distribution<double> floor(0.15, 0.6);
    const SymMatrix a = positive ? ensembles::symmetric_with_floor(n, floor(rng), rng)
                                 : ensembles::symmetric(n, rng);
    const Interval j = n == 1 ? widened_window(a, positive) : spectrum_bounds(a);
    ChainParams params{spec.t ? PowerTransform{*spec.t} : pick_transform(f, j, rng),
                       trial % 2 == 0 ? AlphaMode::Ratio : AlphaMode::Unit, 1.0, j};
    if (!is_power_convex(f, params.t, j)) return {};  // inadmissible fixed t; counts as pass
    return stats_of(operator_chain(f, a, pick_map(n, rng), params), 0);
}

DrawStats sweep_hh_draw(const RunSpec& spec, int /*trial*/, std::mt19937_64& rng) {
    const FunctionDescriptor f =
        spec.function ? load_function(*spec.function) : pick_function(rng);
    const bool positive = f.kind() != FunctionDescriptor::Kind::Exp;
    std::uniform_real_distribution<double> lo_d(positive ? 0.2 : -1.5, positive ? 2.0 : 1.5);
    std::uniform_real_distribution<double> width(0.2, 2.5);
    const double lo = lo_d(rng);
    const Interval j(lo, lo + width(rng));
    const PowerTransform t = spec.t ? PowerTransform{*spec.t} : pick_transform(f, j, rng);
    if (!is_power_convex(f, t, j)) return {};
    return stats_of(hh_chain(f, t, j, load_quad(spec.quad)), 1);
}

DrawStats sweep_power_draw(const RunSpec& spec, int trial, std::mt19937_64& rng) {
    const int n = pick_dim(spec.dims, rng);
    const double rs[3] = {-1.0, 2.0, 3.0};
    std::uniform_int_distribution<int> pick_r(0, 2);
    const double r = spec.r ? *spec.r : rs[pick_r(rng)];
    std::uniform_real_distribution<double> floor(0.15, 0.6);
    const SymMatrix a = ensembles::symmetric_with_floor(n, floor(rng), rng);
    const Interval j = n == 1 ? widened_window(a, true) : spectrum_bounds(a);
    const double t = spec.t ? *spec.t : (r > 1.0 ? (trial % 2 ? 0.75 : 1.0 / r + 0.1) : 0.5);
    const PowerChainMode mode =
        trial % 2 == 0 ? PowerChainMode::RatioK : PowerChainMode::DifferenceC;
    return stats_of(power_chain(r, PowerTransform{t}, a, pick_map(n, rng), j, mode), 0);
}

DrawStats sweep_kantorovich_draw(const RunSpec& spec, int /*trial*/, std::mt19937_64& rng) {
    const int n = pick_dim(spec.dims, rng);
    std::uniform_real_distribution<double> floor(0.15, 0.6);
    const SymMatrix a = ensembles::symmetric_with_floor(n, floor(rng), rng);
    const std::optional<Interval> j =
        n == 1 ? std::optional<Interval>(widened_window(a, true)) : std::nullopt;
    return stats_of(kantorovich_integral_chain(a, pick_map(n, rng), j, load_quad(spec.quad)), 0);
}

DrawStats sweep_furuta_draw(const RunSpec& spec, int trial, std::mt19937_64& rng) {
    const int n = std::max(2, pick_dim(spec.dims, rng));
    std::uniform_real_distribution<double> m_d(0.3, 1.2), w_d(0.5, 3.0), u01(0.0, 1.0);
    const double m = m_d(rng);
    const Interval j(m, m + w_d(rng));
    std::vector<double> eigs(n);
    for (double& e : eigs) e = j.m + 0.7 * (j.M - j.m) * u01(rng);
    const SymMatrix a = ensembles::with_spectrum(eigs, rng);
    const SymMatrix bump = ensembles::gram(n, rng);
    const double top_a = eigendecompose(a).eigenvalues.back();
    const double top_bump = std::max(eigendecompose(bump).eigenvalues.back(), 1e-9);
    const SymMatrix b = a + (u01(rng) * (j.M - top_a) / top_bump) * bump;

    const double rs[3] = {-1.0, 2.0, 3.0};
    std::uniform_int_distribution<int> pick_r(0, 2);
    const double r = spec.r ? *spec.r : rs[pick_r(rng)];
    const double t = r > 1.0 ? 0.5 : 0.5;
    const double alpha = trial % 2 == 0 ? kantorovich_k(j, r) : 1.0;
    return stats_of(
        furuta_chain(FunctionDescriptor::power(r), PowerTransform{t}, a, b, j, alpha), 0);
}

}  // namespace

SweepSummary run_sweep(const RunSpec& spec) {
    if (spec.trials < 1) throw PreconditionError("sweep needs trials >= 1");
    const std::string chain = spec.chain.value_or("operator");
    SweepSummary s;
    s.chain = chain;
    s.trials = spec.trials;
    s.seed = spec.seed;
    s.worst_gap = HUGE_VAL;
    double sum_refined = 0.0, sum_baseline = 0.0;

    for (int i = 0; i < spec.trials; ++i) {
        std::mt19937_64 rng = ensembles::draw_rng(spec.seed, static_cast<std::uint64_t>(i));
        DrawStats d;
        if (chain == "operator") d = sweep_operator_draw(spec, i, rng);
        else if (chain == "hh") d = sweep_hh_draw(spec, i, rng);
        else if (chain == "power") d = sweep_power_draw(spec, i, rng);
        else if (chain == "kantorovich") d = sweep_kantorovich_draw(spec, i, rng);
        else if (chain == "furuta") d = sweep_furuta_draw(spec, i, rng);
        else throw ParseError("unknown sweep chain \"" + chain + "\"");

        if (d.ok) ++s.passed;
        else s.failures.emplace_back(i, d.worst);
        if (d.worst < s.worst_gap) s.worst_gap = d.worst;
        sum_refined += d.refined;
        sum_baseline += d.baseline;
    }
    if (!std::isfinite(s.worst_gap)) s.worst_gap = 0.0;
    s.mean_gap_refined = sum_refined / spec.trials;
    s.mean_gap_baseline = sum_baseline / spec.trials;
    return s;
}

std::string sweep_to_json(const SweepSummary& s) {
    std::string out = "{\"chain\":\"" + s.chain + "\",\"trials\":" + std::to_string(s.trials) +
                      ",\"passed\":" + std::to_string(s.passed) +
                      ",\"seed\":" + std::to_string(s.seed) +
                      ",\"worst_gap\":" + format_number(s.worst_gap) +
                      ",\"mean_gap_refined\":" + format_number(s.mean_gap_refined) +
                      ",\"mean_gap_baseline\":" + format_number(s.mean_gap_baseline) +
                      ",\"failures\":[";
    for (size_t i = 0; i < s.failures.size(); ++i) {
        if (i) out += ",";
        out += "{\"trial\":" + std::to_string(s.failures[i].first) +
               ",\"gap\":" + format_number(s.failures[i].second) + "}";
    }
    return out + "]}";
}

std::string sweep_to_csv(const SweepSummary& s) {
    std::ostringstream out;
    out << "section,key,value\n";
    out << "chain,," << s.chain << "\n";
    out << "trials,," << s.trials << "\n";
    out << "passed,," << s.passed << "\n";
    out << "seed,," << s.seed << "\n";
    out << "worst_gap,," << format_number(s.worst_gap) << "\n";
    out << "mean_gap_refined,," << format_number(s.mean_gap_refined) << "\n";
    out << "mean_gap_baseline,," << format_number(s.mean_gap_baseline) << "\n";
    for (const auto& [trial, gap] : s.failures)
        out << "failure," << trial << "," << format_number(gap) << "\n";
    return out.str();
}

std::string sweep_to_pretty(const SweepSummary& s) {
    std::ostringstream out;
    out << s.chain << " sweep: " << s.passed << "/" << s.trials << " passed (seed " << s.seed
        << ")\n";
    out << "  worst gap            " << format_number(s.worst_gap) << "\n";
    out << "  mean refined gap     " << format_number(s.mean_gap_refined) << "\n";
    out << "  mean baseline gap    " << format_number(s.mean_gap_baseline) << "\n";
    for (const auto& [trial, gap] : s.failures)
        out << "  FAILED trial " << trial << " gap " << format_number(gap) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// command dispatch

namespace {

int run_chain_command(const RunSpec& spec, std::ostream& out) {
    ChainReport rep;
    if (spec.command == "hh") {
        if (!spec.function) throw ParseError("hh needs --f");
        const auto j = load_interval(spec);
        if (!j) throw ParseError("hh needs --interval");
        rep = hh_chain(load_function(*spec.function), PowerTransform{spec.t.value_or(0.5)}, *j,
                       load_quad(spec.quad));
    } else if (spec.command == "operator") {
        if (!spec.matrix) throw ParseError("operator needs --matrix");
        if (!spec.function) throw ParseError("operator needs --f");
        ChainParams params{PowerTransform{spec.t.value_or(0.5)},
                           parse_alpha_mode(spec.mode), spec.alpha.value_or(1.0),
                           load_interval(spec)};
        if (params.alpha_mode == AlphaMode::Custom && !spec.alpha)
            throw ParseError("custom mode needs --alpha");
        rep = operator_chain(load_function(*spec.function), load_matrix(*spec.matrix),
                             load_map(spec.map.value_or("normalized_trace")), params);
    } else if (spec.command == "power") {
        if (!spec.matrix) throw ParseError("power needs --matrix");
        if (!spec.r) throw ParseError("power needs --r");
        PowerChainMode mode = PowerChainMode::RatioK;
        if (spec.mode && *spec.mode == "difference") mode = PowerChainMode::DifferenceC;
        else if (spec.mode && *spec.mode != "ratio")
            throw ParseError("power mode must be ratio|difference");
        rep = power_chain(*spec.r, PowerTransform{spec.t.value_or(0.5)},
                          load_matrix(*spec.matrix),
                          load_map(spec.map.value_or("normalized_trace")), load_interval(spec),
                          mode);
    } else if (spec.command == "kantorovich") {
        if (!spec.matrix) throw ParseError("kantorovich needs --matrix");
        rep = kantorovich_integral_chain(load_matrix(*spec.matrix),
                                         load_map(spec.map.value_or("normalized_trace")),
                                         load_interval(spec), load_quad(spec.quad));
    } else if (spec.command == "furuta") {
        if (!spec.matrix || !spec.matrix2) throw ParseError("furuta needs --matrix and --matrix2");
        if (!spec.function) throw ParseError("furuta needs --f");
        const SymMatrix a = load_matrix(*spec.matrix);
        const SymMatrix b = load_matrix(*spec.matrix2);
        const FunctionDescriptor f = load_function(*spec.function);
        const auto window = load_interval(spec);
        const AlphaMode mode = parse_alpha_mode(spec.mode);
        double alpha = 1.0;
        if (mode == AlphaMode::Custom) {
            if (!spec.alpha) throw ParseError("custom mode needs --alpha");
            alpha = *spec.alpha;
        } else if (mode == AlphaMode::Ratio) {
            Interval j = window ? *window
                                : Interval(std::min(spectrum_bounds(a).m, spectrum_bounds(b).m),
                                           std::max(spectrum_bounds(a).M, spectrum_bounds(b).M));
            alpha = ratio_alpha(f, j);
        }
        rep = furuta_chain(f, PowerTransform{spec.t.value_or(0.5)}, a, b, window, alpha);
    } else {
        throw ParseError("unknown command \"" + spec.command + "\"");
    }
    emit(spec, out, report_text(spec, rep));
    return rep.passed ? 0 : 1;
}

int run_constants(const RunSpec& spec, std::ostream& out) {
    const auto j = load_interval(spec);
    if (!j) throw ParseError("constants needs --interval");
    if (!spec.r) throw ParseError("constants needs --r");
    const double k = kantorovich_k(*j, *spec.r);
    const double c = kantorovich_c(*j, *spec.r);
    std::string text;
    if (spec.format == "json")
        text = "{\"K\":" + format_number(k) + ",\"C\":" + format_number(c) + "}\n";
    else if (spec.format == "csv")
        text = "section,value\nK," + format_number(k) + "\nC," + format_number(c) + "\n";
    else if (spec.format == "pretty")
        text = "K(m,M,r) = " + format_number(k) + "\nC(m,M,r) = " + format_number(c) + "\n";
    else
        throw ParseError("unknown format \"" + spec.format + "\"");
    emit(spec, out, text);
    return 0;
}

int run_verify_map(const RunSpec& spec, std::ostream& out) {
    if (!spec.map) throw ParseError("verify-map needs --map");
    if (spec.trials < 1) throw PreconditionError("verify-map needs trials >= 1");
    const MapDescriptor phi = load_map(*spec.map);
    const bool ok = verify_map(phi, spec.trials, spec.seed ^ 0x5eedULL, spec.dim);
    std::string text;
    if (spec.format == "json")
        text = std::string("{\"verified\":") + (ok ? "true" : "false") +
               ",\"trials\":" + std::to_string(spec.trials) + "}\n";
    else if (spec.format == "csv")
        text = "section,value\nverified," + std::to_string(ok ? 1 : 0) + "\ntrials," +
               std::to_string(spec.trials) + "\n";
    else if (spec.format == "pretty")
        text = std::string(ok ? "map verified positive unital" : "map FAILED verification") +
               " (" + std::to_string(spec.trials) + " trials)\n";
    else
        throw ParseError("unknown format \"" + spec.format + "\"");
    emit(spec, out, text);
    return ok ? 0 : 1;
}

int run_sweep_command(const RunSpec& spec, std::ostream& out) {
    const SweepSummary s = run_sweep(spec);
    std::string text;
    if (spec.format == "json") text = sweep_to_json(s) + "\n";
    else if (spec.format == "csv") text = sweep_to_csv(s);
    else if (spec.format == "pretty") text = sweep_to_pretty(s);
    else throw ParseError("unknown format \"" + spec.format + "\"");
    emit(spec, out, text);
    return s.passed == s.trials ? 0 : 1;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& out, std::ostream& diag) {
    try {
        if (spec.command == "constants") return run_constants(spec, out);
        if (spec.command == "verify-map") return run_verify_map(spec, out);
        if (spec.command == "sweep") return run_sweep_command(spec, out);
        return run_chain_command(spec, out);
    } catch (const ParseError& e) {
        diag << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const AccuracyError& e) {
        diag << "accuracy error: " << e.what()
             << " (best estimate " << format_number(e.best_estimate) << ")\n";
        return 3;
    } catch (const std::runtime_error& e) {
        // precondition, domain, shape, spectrum, parameter violations
        diag << "precondition error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace opineq
