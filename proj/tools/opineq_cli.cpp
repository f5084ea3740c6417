// opineq command line front end: builds a RunSpec from flags, hands it to
// the library dispatcher, and maps failures to the documented exit codes
// (0 ok, 1 inequality violated, 2 bad input, 3 precondition).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "opineq/run.hpp"

namespace {

void add_common_output(CLI::App* cmd, opineq::RunSpec& spec, std::string& out_path) {
    cmd->add_option("--format", spec.format, "Output format: json|csv|pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", out_path, "Write the report to this path instead of stdout");
}

void add_interval(CLI::App* cmd, std::pair<double, double>& iv, bool& iv_set) {
    cmd->add_option_function<std::vector<double>>(
           "--interval",
           [&](const std::vector<double>& v) {
               if (v.size() != 2) throw CLI::ValidationError("--interval expects m,M");
               iv = {v[0], v[1]};
               iv_set = true;
           },
           "Spectral window m,M (default: tight spectrum bounds)")
        ->delimiter(',')
        ->expected(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator inequality chains on dense symmetric matrices"};
    app.require_subcommand(1);

    opineq::RunSpec spec;
    std::string out_path;
    std::pair<double, double> iv{0, 0};
    bool iv_set = false;

    std::string matrix, matrix2, map_spec, f_spec, quad_spec, mode, chain;
    double t = 0.5, alpha = 0.0, r = 0.0;
    bool t_set = false, alpha_set = false, r_set = false;

    const auto add_matrix = [&](CLI::App* cmd) {
        cmd->add_option("--matrix", matrix, "Matrix JSON file (or inline JSON)")->required();
    };
    const auto add_f = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--f", f_spec,
                                    "Function: power:R | exp | affine_power:S,C,R | JSON/file");
        if (required) opt->required();
    };
    const auto add_t = [&](CLI::App* cmd) {
        cmd->add_option("--t", t, "Power transform t in (0,1]")->each([&](const std::string&) {
            t_set = true;
        });
    };
    const auto add_map = [&](CLI::App* cmd) {
        cmd->add_option("--map", map_spec,
                        "Map: normalized_trace | pinching:B1,B2,... | JSON/file "
                        "(default normalized_trace)");
    };
    const auto add_quad = [&](CLI::App* cmd) {
        cmd->add_option("--quad", quad_spec,
                        "Quadrature: gauss_legendre:N | adaptive_simpson:TOL,DEPTH | JSON/file");
    };

    auto* hh = app.add_subcommand("hh", "Four-term scalar chain on an interval");
    add_f(hh, true);
    add_t(hh);
    add_interval(hh, iv, iv_set);
    add_quad(hh);
    add_common_output(hh, spec, out_path);

    auto* op = app.add_subcommand("operator", "Three-term operator chain through a map");
    add_matrix(op);
    add_f(op, true);
    add_t(op);
    add_map(op);
    add_interval(op, iv, iv_set);
    op->add_option("--mode", mode, "alpha choice: ratio|unit|custom")
        ->check(CLI::IsMember({"ratio", "unit", "custom"}));
    op->add_option("--alpha", alpha, "multiplier for --mode custom")->each([&](const std::string&) {
        alpha_set = true;
    });
    add_common_output(op, spec, out_path);

    auto* pw = app.add_subcommand("power", "Power chain with Kantorovich constants");
    add_matrix(pw);
    pw->add_option("--r", r, "Exponent r (r > 1 or r < 0)")->required()->each(
        [&](const std::string&) { r_set = true; });
    add_t(pw);
    add_map(pw);
    add_interval(pw, iv, iv_set);
    pw->add_option("--mode", mode, "bound form: ratio|difference")
        ->check(CLI::IsMember({"ratio", "difference"}));
    add_common_output(pw, spec, out_path);

    auto* ka = app.add_subcommand("kantorovich", "Integral refinement chain for the inverse");
    add_matrix(ka);
    add_map(ka);
    add_interval(ka, iv, iv_set);
    add_quad(ka);
    add_common_output(ka, spec, out_path);

    auto* fu = app.add_subcommand("furuta", "Two-operator chain under A <= B");
    add_matrix(fu);
    fu->add_option("--matrix2", matrix2, "Second matrix (B) JSON file or inline JSON")->required();
    add_f(fu, true);
    add_t(fu);
    add_interval(fu, iv, iv_set);
    fu->add_option("--mode", mode, "alpha choice: ratio|unit|custom")
        ->check(CLI::IsMember({"ratio", "unit", "custom"}));
    fu->add_option("--alpha", alpha, "multiplier for --mode custom")->each([&](const std::string&) {
        alpha_set = true;
    });
    add_common_output(fu, spec, out_path);

    auto* co = app.add_subcommand("constants", "Kantorovich constants K and C for a window");
    add_interval(co, iv, iv_set);
    co->add_option("--r", r, "Exponent r (not 0 or 1)")->required()->each(
        [&](const std::string&) { r_set = true; });
    add_common_output(co, spec, out_path);

    auto* sw = app.add_subcommand("sweep", "Randomized property sweep over a chain builder");
    sw->add_option("--chain", chain, "operator|hh|power|kantorovich|furuta (default operator)")
        ->check(CLI::IsMember({"operator", "hh", "power", "kantorovich", "furuta"}));
    sw->add_option("--trials", spec.trials, "Number of random draws");
    sw->add_option("--dims", spec.dims, "Matrix dimensions to sample")->delimiter(',');
    sw->add_option("--seed", spec.seed, "Deterministic seed");
    add_f(sw, false);
    add_t(sw);
    sw->add_option("--r", r, "Fix the power exponent")->each([&](const std::string&) {
        r_set = true;
    });
    add_quad(sw);
    add_common_output(sw, spec, out_path);

    auto* vm = app.add_subcommand("verify-map", "Check positivity, unitality, linearity");
    vm->add_option("--map", map_spec, "Map descriptor (name, inline JSON, or file)")->required();
    vm->add_option("--trials", spec.trials, "Random Gram matrices to test");
    vm->add_option("--dim", spec.dim, "Input dimension for maps that accept any");
    vm->add_option("--seed", spec.seed, "Deterministic seed");
    add_common_output(vm, spec, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, bad flags exit 2
    }

    spec.command = app.get_subcommands().front()->get_name();
    if (!matrix.empty()) spec.matrix = matrix;
    if (!matrix2.empty()) spec.matrix2 = matrix2;
    if (!map_spec.empty()) spec.map = map_spec;
    if (!f_spec.empty()) spec.function = f_spec;
    if (!quad_spec.empty()) spec.quad = quad_spec;
    if (!mode.empty()) spec.mode = mode;
    if (!chain.empty()) spec.chain = chain;
    if (t_set) spec.t = t;
    if (alpha_set) spec.alpha = alpha;
    if (r_set) spec.r = r;
    if (iv_set) {
        spec.interval_m = iv.first;
        spec.interval_M = iv.second;
    }
    if (!out_path.empty()) spec.out = out_path;

    return opineq::run(spec, std::cout, std::cerr);
}
