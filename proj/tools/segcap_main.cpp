// Command-line front end: capacity, Green's function grids, period data,
// and the self-check battery, with JSON/CSV reports that are byte-stable
// across runs.

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "segcap/capacity.hpp"
#include "segcap/jsonio.hpp"
#include "segcap/oracles.hpp"
#include "segcap/verify.hpp"

namespace {

using namespace segcap;

// exit codes: 0 ok, 1 verify failures, 2 invalid input, 3 numerical failure
const std::set<std::string> kInputErrorCodes = {
    errc::odd_endpoint_count, errc::nonincreasing_endpoints,
    errc::separation_too_small, errc::empty_system,
    errc::genus_zero_no_periods, errc::bad_arguments,
    errc::bad_input_json, errc::io_error, errc::bad_divisor_set,
    errc::even_characteristic, errc::grid_overflow, errc::grid_too_small,
    errc::bad_tolerance, errc::bad_characteristic, errc::branch_index_range,
    errc::not_normalized};

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(tok, &pos));
            while (pos < tok.size() &&
                   std::isspace(static_cast<unsigned char>(tok[pos])))
                ++pos;
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(errc::bad_arguments, "cannot parse number '" + tok + "'");
        }
    }
    if (out.empty()) throw Error(errc::bad_arguments, "empty number list");
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (double v : parse_double_list(s)) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw Error(errc::bad_arguments, "expected integers");
        out.push_back(i);
    }
    return out;
}

struct CommonArgs {
    std::string endpoints;
    std::string input;
    std::string divisor;
    std::string out;
    std::string format = "json";
    int nodes = QuadratureConfig{}.nodes_per_interval;
    double theta_tol = QuadratureConfig{}.theta_tol;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool with_divisor = true) {
    cmd->add_option("--endpoints", a.endpoints,
                    "comma-separated endpoint list, e.g. 0,0.25,0.75,1");
    cmd->add_option("--input", a.input,
                    "JSON file with an \"endpoints\" array");
    cmd->add_option("--nodes", a.nodes, "starting quadrature nodes per piece");
    cmd->add_option("--theta-tol", a.theta_tol, "series truncation tolerance");
    if (with_divisor)
        cmd->add_option("--divisor", a.divisor,
                        "override branch divisor indices, e.g. 2,3");
    cmd->add_option("--out", a.out, "write the report to this file");
    cmd->add_option("--format", a.format, "output format: json or csv");
}

SegmentSystem load_system(const CommonArgs& a) {
    const bool has_ep = !a.endpoints.empty();
    const bool has_in = !a.input.empty();
    if (has_ep == has_in)
        throw Error(errc::bad_arguments,
                    "provide exactly one of --endpoints or --input");
    std::vector<double> e =
        has_ep ? parse_double_list(a.endpoints) : read_endpoints_file(a.input);
    return SegmentSystem::create(std::move(e));
}

QuadratureConfig make_cfg(const CommonArgs& a) {
    QuadratureConfig cfg;
    cfg.nodes_per_interval = a.nodes;
    cfg.theta_tol = a.theta_tol;
    return cfg;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(errc::io_error, "cannot open " + out_path);
    f << payload;
    if (!f) throw Error(errc::io_error, "cannot write " + out_path);
}

int run_cap(const CommonArgs& a) {
    if (a.format != "json")
        throw Error(errc::bad_arguments, "cap reports are JSON only");
    SegmentSystem E = load_system(a);
    QuadratureConfig cfg = make_cfg(a);
    std::vector<int> divisor;
    if (!a.divisor.empty()) divisor = parse_int_list(a.divisor);
    CapacityResult r = capacity(E, cfg, divisor);

    JsonNode root = JsonNode::object();
    root.set("capacity", JsonNode::num(r.capacity));
    root.set("genus", JsonNode::integer(r.genus));
    root.set("closed_form", JsonNode::boolean(r.closed_form));
    root.set("divisor_indices", JsonNode::int_array(r.divisor_indices));
    root.set("theta_tol", JsonNode::num(cfg.theta_tol));
    root.set("quadrature_nodes", JsonNode::integer(cfg.nodes_per_interval));
    JsonNode diag = JsonNode::object();
    diag.set("t_odd_u", JsonNode::num(r.diagnostics.t_odd_u));
    diag.set("t_part_u", JsonNode::num(r.diagnostics.t_part_u));
    diag.set("t_odd_2u", JsonNode::num(r.diagnostics.t_odd_2u));
    diag.set("t_part_0", JsonNode::num(r.diagnostics.t_part_0));
    diag.set("scale", JsonNode::num(r.diagnostics.scale));
    root.set("diagnostics", std::move(diag));
    emit(root.dump(), a.out);
    return 0;
}

int run_periods(const CommonArgs& a) {
    if (a.format != "json")
        throw Error(errc::bad_arguments, "period reports are JSON only");
    SegmentSystem E = load_system(a);
    NormalizedSystem ns = normalize(E);
    PeriodData pd = compute_periods(ns.system, make_cfg(a));

    JsonNode root = JsonNode::object();
    root.set("genus", JsonNode::integer(pd.g()));
    root.set("endpoints", JsonNode::num_array(E.endpoints()));
    root.set("endpoints_normalized", JsonNode::num_array(ns.system.endpoints()));
    JsonNode aff = JsonNode::object();
    aff.set("scale", JsonNode::num(ns.to_original.scale));
    aff.set("shift", JsonNode::num(ns.to_original.shift));
    root.set("affine_to_original", std::move(aff));
    root.set("period_matrix_re", JsonNode::num_matrix(pd.rm.Pi().real()));
    root.set("period_matrix_im", JsonNode::num_matrix(pd.rm.Pi().imag()));
    root.set("norm_matrix_re", JsonNode::num_matrix(pd.norm_matrix.real()));
    root.set("norm_matrix_im", JsonNode::num_matrix(pd.norm_matrix.imag()));
    root.set("u_infinity_re",
             JsonNode::num_array(Eigen::VectorXd(pd.u_infinity.real())));
    root.set("u_infinity_im",
             JsonNode::num_array(Eigen::VectorXd(pd.u_infinity.imag())));
    root.set("lambda_min", JsonNode::num(pd.rm.lambda_min()));
    root.set("a_period_residual", JsonNode::num(pd.a_period_residual));
    root.set("u_infinity_imag_residual",
             JsonNode::num(pd.u_infinity_imag_residual));
    emit(root.dump(), a.out);
    return 0;
}

struct GreenArgs {
    CommonArgs common;
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    int nx = 1, ny = 1;
    bool single = false;
    double x = 0.0, y = 0.0;
};

int run_green(const GreenArgs& ga) {
    const CommonArgs& a = ga.common;
    if (a.format != "csv" && a.format != "json")
        throw Error(errc::bad_arguments, "format must be json or csv");
    SegmentSystem E = load_system(a);
    std::vector<int> divisor;
    if (!a.divisor.empty()) divisor = parse_int_list(a.divisor);
    GreenEvaluator ev(E, make_cfg(a), divisor);

    double xmin = ga.xmin, xmax = ga.xmax, ymin = ga.ymin, ymax = ga.ymax;
    int nx = ga.nx, ny = ga.ny;
    if (ga.single) {
        xmin = xmax = ga.x;
        ymin = ymax = ga.y;
        nx = ny = 1;
    }
    if (nx < 1 || ny < 1)
        throw Error(errc::bad_arguments, "grid sizes must be positive");
    if (static_cast<long long>(nx) * ny > 10'000'000LL)
        throw Error(errc::grid_overflow, "grid exceeds 1e7 points");
    if (nx > 1 && !(xmax > xmin))
        throw Error(errc::bad_arguments, "xmax must exceed xmin");
    if (ny > 1 && !(ymax > ymin))
        throw Error(errc::bad_arguments, "ymax must exceed ymin");

    auto grid_value = [&](int i, int n, double lo, double hi) {
        return (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
    };
    auto is_endpoint = [&](double xv) {
        for (double e : E.endpoints())
            if (xv == e) return true;
        return false;
    };

    std::string csv = "x,y,G\n";
    JsonNode rows = JsonNode::array();
    for (int j = 0; j < ny; ++j) {
        const double yv = grid_value(j, ny, ymin, ymax);
        for (int i = 0; i < nx; ++i) {
            const double xv = grid_value(i, nx, xmin, xmax);
            const double G = (yv == 0.0 && is_endpoint(xv))
                                 ? 0.0
                                 : ev.green(cplx(xv, yv));
            if (a.format == "csv") {
                csv += format_double(xv) + "," + format_double(yv) + "," +
                       format_double(G) + "\n";
            } else {
                JsonNode row = JsonNode::array();
                row.push(JsonNode::num(xv));
                row.push(JsonNode::num(yv));
                row.push(JsonNode::num(G));
                rows.push(std::move(row));
            }
        }
    }
    if (a.format == "csv") {
        emit(csv, a.out);
    } else {
        JsonNode root = JsonNode::object();
        root.set("columns", JsonNode::array()
                                .push(JsonNode::str("x"))
                                .push(JsonNode::str("y"))
                                .push(JsonNode::str("G")));
        root.set("rows", std::move(rows));
        emit(root.dump(), a.out);
    }
    return 0;
}

int run_verify_cmd(const CommonArgs& a) {
    VerifyOptions vo;
    vo.cfg = make_cfg(a);
    if (!a.divisor.empty()) vo.divisor = parse_int_list(a.divisor);
    const auto results = run_verify_battery(vo);

    std::string text;
    JsonNode arr = JsonNode::array();
    for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof(line), "%-45s %s  (err %.3e, tol %.3e)\n",
                      r.name.c_str(), r.pass ? "PASS" : "FAIL", r.err,
                      r.tolerance);
        text += line;
        JsonNode row = JsonNode::object();
        row.set("name", JsonNode::str(r.name));
        row.set("pass", JsonNode::boolean(r.pass));
        row.set("err", JsonNode::num(r.err));
        row.set("tol", JsonNode::num(r.tolerance));
        arr.push(std::move(row));
    }
    const bool ok = all_passed(results);
    text += ok ? "verify: all checks passed\n" : "verify: FAILURES present\n";
    if (a.format == "json") {
        JsonNode root = JsonNode::object();
        root.set("pass", JsonNode::boolean(ok));
        root.set("checks", std::move(arr));
        emit(root.dump(), a.out);
    } else {
        emit(text, a.out);
    }
    // progress text goes to stderr so --out stays machine-readable
    std::cerr << text;
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity and Green's function of unions of real segments"};
    app.require_subcommand(1);

    CommonArgs cap_args, per_args, ver_args;
    GreenArgs green_args;

    CLI::App* cap = app.add_subcommand("cap", "logarithmic capacity");
    add_common(cap, cap_args);

    CLI::App* green = app.add_subcommand("green", "Green's function values");
    add_common(green, green_args.common);
    green->get_option("--format")->default_str("csv");
    green_args.common.format = "csv";
    green->add_option("--x", green_args.x, "single-point x");
    green->add_option("--y", green_args.y, "single-point y");
    green->add_option("--xmin", green_args.xmin, "grid x lower bound");
    green->add_option("--xmax", green_args.xmax, "grid x upper bound");
    green->add_option("--ymin", green_args.ymin, "grid y lower bound");
    green->add_option("--ymax", green_args.ymax, "grid y upper bound");
    green->add_option("--nx", green_args.nx, "grid points along x");
    green->add_option("--ny", green_args.ny, "grid points along y");

    CLI::App* per = app.add_subcommand("periods", "period data report");
    add_common(per, per_args, /*with_divisor=*/false);

    CLI::App* ver = app.add_subcommand("verify", "run the self-check battery");
    add_common(ver, ver_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (cap->parsed()) return run_cap(cap_args);
        if (green->parsed()) {
            green_args.single = green->count("--x") > 0;
            if (green_args.single && green->count("--nx") > 0)
                throw segcap::Error(segcap::errc::bad_arguments,
                                    "--x/--y and grid flags are exclusive");
            return run_green(green_args);
        }
        if (per->parsed()) return run_periods(per_args);
        if (ver->parsed()) return run_verify_cmd(ver_args);
    } catch (const segcap::Error& e) {
        segcap::JsonNode err = segcap::JsonNode::object();
        err.set("error", segcap::JsonNode::str(e.code()));
        err.set("message", segcap::JsonNode::str(e.what()));
        std::fputs(err.dump().c_str(), stdout);
        return kInputErrorCodes.count(e.code()) ? 2 : 3;
    } catch (const std::exception& e) {
        segcap::JsonNode err = segcap::JsonNode::object();
        err.set("error", segcap::JsonNode::str("INTERNAL"));
        err.set("message", segcap::JsonNode::str(e.what()));
        std::fputs(err.dump().c_str(), stdout);
        return 3;
    }
    return 0;
}
