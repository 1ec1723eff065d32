#include "cli.hpp"

#include "ratseries/errors.hpp"
#include "ratseries/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ratseries::cli {

namespace {

using io::json;

json load_input(const std::string& input) {
    std::string text;
    if (!input.empty() && (input[0] == '{' || input[0] == '[')) {
        text = input;
    } else {
        std::ifstream in(input);
        if (!in) throw std::invalid_argument("cannot open input file: " + input);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
}

void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CsvTable {
    std::string header;
    std::vector<std::string> rows;

    std::string render() const {
        std::string out = header + "\n";
        for (const auto& r : rows) out += r + "\n";
        return out;
    }
};

// One run = one report. The full resolved configuration rides along so a
// report is reproducible from its own bytes.
struct Reporter {
    json config;
    std::string output = "-";
    std::string csv_path;

    int success(json result, const std::optional<CsvTable>& csv = std::nullopt) const {
        emit(std::move(result), nullptr, csv);
        return 0;
    }
    int failure(const char* type, const std::string& message) const {
        json err{{"type", type}, {"message", message}};
        emit(nullptr, std::move(err), std::nullopt);
        return 1;
    }

private:
    void emit(json result, json error, const std::optional<CsvTable>& csv) const {
        json report;
        report["tool"] = "ratseries";
        report["config"] = config;
        if (!error.is_null()) report["error"] = std::move(error);
        else report["result"] = std::move(result);
        write_text(output, report.dump(2) + "\n");
        if (!csv_path.empty() && csv) write_text(csv_path, csv->render());
    }
};

// ---- subcommand bodies ------------------------------------------------------

int run_kronecker(Reporter& rep, const json& input, std::size_t N, std::size_t n_lo,
                  std::size_t n_hi) {
    IntSeries1D a = io::make_series_1d(input, std::max(N, 2 * n_hi));
    HankelReport hr = kronecker_test(a, n_lo, n_hi);
    CsvTable csv{"n,A_n", {}};
    for (std::size_t i = 0; i < hr.dets.size(); ++i)
        csv.rows.push_back(std::to_string(hr.n_lo + i) + "," + hr.dets[i].str());
    return rep.success(io::to_json(hr), csv);
}

int run_reconstruct(Reporter& rep, const json& input, std::size_t N, std::size_t d) {
    IntSeries1D a = io::make_series_1d(input, std::max(N, 2 * d + 1));
    RationalFn fit = reconstruct_rational(a, d);
    json result;
    result["fit"] = io::to_json(fit);
    result["degree_bound"] = d;
    result["verified_through"] = 2 * d + 1;
    return rep.success(std::move(result));
}

int run_criterion(Reporter& rep, const json& input, std::size_t N, int n, std::size_t m_lo,
                  std::size_t m_hi) {
    BiSeries f = io::make_biseries(input, std::max(N, 2 * m_hi));
    CriterionReport cr = criterion_test(f, n, m_lo, m_hi);
    CsvTable csv{"m,H_m_zero,witness_degree,witness_coeff", {}};
    for (const auto& r : cr.results) {
        csv.rows.push_back(std::to_string(r.m) + "," + (r.zero ? "1" : "0") + "," +
                           (r.zero ? "" : std::to_string(r.witness_degree)) + "," +
                           (r.zero ? "" : r.witness_coeff.str()));
    }
    return rep.success(io::to_json(cr), csv);
}

CsvTable capacity_csv(const CapacityEstimate& est) {
    CsvTable csv{"n,d_n,tau_upper_n", {}};
    for (std::size_t i = 0; i < est.n_values.size(); ++i)
        csv.rows.push_back(std::to_string(est.n_values[i]) + "," + fmt_double(est.d_seq[i]) +
                           "," + fmt_double(est.tau_upper_seq[i]));
    return csv;
}

int run_capacity(Reporter& rep, const json& input, std::size_t n_max, std::uint64_t seed) {
    PointCloud cloud = io::parse_cloud(input);
    DTauReport dt = d_tau_consistency(cloud, n_max, seed);
    json result = io::to_json(dt);
    result["cloud_size"] = cloud.points.size();
    result["label"] = cloud.label;
    return rep.success(std::move(result), capacity_csv(dt.estimate));
}

int run_iota_check(Reporter& rep, const json& input, std::size_t n_max, std::uint64_t seed,
                   double margin, double density) {
    GammaContour g = io::parse_contour(input);
    IotaCheckReport ir = iota_capacity_run(g, n_max, seed, margin, density);
    if (!ir.certified) {
        // partial sequence still lands in the report next to the error
        json err{{"type", "NoCertificate"},
                 {"message", "no d_n below " + fmt_double(1.0 - margin) + " through n = " +
                                 std::to_string(n_max)}};
        json report;
        report["tool"] = "ratseries";
        report["config"] = rep.config;
        report["error"] = std::move(err);
        report["result"] = io::to_json(ir);
        write_text(rep.output, report.dump(2) + "\n");
        if (!rep.csv_path.empty()) write_text(rep.csv_path, capacity_csv(ir.estimate).render());
        return 1;
    }
    return rep.success(io::to_json(ir), capacity_csv(ir.estimate));
}

int run_contour_bound(Reporter& rep, const json* contour, double L, double M, double eta,
                      double rho, std::size_t m_max) {
    if (contour != nullptr) {
        GammaContour g = io::parse_contour(*contour);
        L = contour_length(g);
        eta = min_modulus(g);
    }
    json result;
    result["L"] = L;
    result["M"] = M;
    result["eta"] = eta;
    result["rho"] = rho;
    CsvTable csv{"m,bound", {}};
    json table = json::array();
    for (std::size_t m = 1; m <= m_max; ++m) {
        double b = hankel_bound({L, M, eta, rho, m});
        table.push_back(json{{"m", m}, {"bound", b}});
        csv.rows.push_back(std::to_string(m) + "," + fmt_double(b));
    }
    result["bounds"] = std::move(table);
    std::size_t m0 = find_m0(L, M, eta, rho, m_max);  // throws NoM0 -> exit 1
    result["m0"] = m0;
    return rep.success(std::move(result), csv);
}

int run_dfinite(Reporter& rep, const json& input, std::size_t N, int n, std::size_t m_lo,
                std::size_t m_hi) {
    DFiniteSystem sys = io::parse_dfinite(input);
    if (sys.equations.size() == 1) {
        GeneratedSeries s = dfinite_series(sys, N);
        json result;
        result["series"] = io::to_json(s);
        if (!s.first_non_integer) {
            IntSeries1D a = s.as_int_series();
            auto [lo, hi] = default_kronecker_window(std::nullopt);
            hi = std::min(hi, N / 2);
            if (lo <= hi) result["kronecker"] = io::to_json(kronecker_test(a, lo, hi));
        }
        CsvTable csv{"n,a_n", {}};
        for (std::size_t i = 0; i < s.values.size(); ++i)
            csv.rows.push_back(std::to_string(i) + "," + numerator(s.values[i]).str() +
                               (is_integer(s.values[i])
                                    ? ""
                                    : "/" + denominator(s.values[i]).str()));
        return rep.success(std::move(result), csv);
    }
    PipelineOptions opts;
    opts.n = n;
    opts.N = N;
    opts.m_lo = m_lo;
    opts.m_hi = m_hi;
    PipelineReport pr = bell_chen_pipeline(sys, opts);
    CsvTable csv{"m,H_m_zero", {}};
    for (const auto& r : pr.criterion.results)
        csv.rows.push_back(std::to_string(r.m) + "," + (r.zero ? "1" : "0"));
    return rep.success(io::to_json(pr), csv);
}

int run_symcheck(Reporter& rep, const json& input, std::size_t m, double tol) {
    ComplexFn g = io::parse_complex_fn(input.contains("g") ? input["g"] : input);
    GammaContour gamma = io::parse_contour(
        input.contains("contour") ? input["contour"]
                                  : json::parse(R"({"phi":1.5707963267948966,)"
                                                R"("psi":-1.5707963267948966,)"
                                                R"("s":1.2,"delta":0.1})"));
    QuadratureOptions opts;
    opts.tol = tol;
    double residual = symmetrization_check(g, gamma, m, opts);
    json result;
    result["m"] = m;
    result["residual"] = residual;
    return rep.success(std::move(result));
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{
        "ratseries: rationality analysis of integer power series\n"
        "Hankel determinant testing, bivariate restriction criteria, transfinite\n"
        "diameter estimation, contour bounds, and the D-finite pipeline.\n"
        "\n"
        "CSV columns (--csv): kronecker 'n,A_n'; criterion and dfinite (two\n"
        "variables) 'm,H_m_zero[,witness_degree,witness_coeff]'; capacity and\n"
        "iota-check 'n,d_n,tau_upper_n'; contour-bound 'm,bound'; dfinite (one\n"
        "variable) 'n,a_n'. Exact integers print as decimal strings.\n"};
    app.require_subcommand(1);

    std::string input, output = "-", csv;
    std::size_t N = 32, n_lo = 0, n_hi = 0, m_lo = 1, m_hi = 4, n_max = 16, m_max = 40;
    std::size_t d = 4, m_sym = 1;
    int n_exp = 1;
    std::uint64_t seed = 0;
    double margin = 0.02, density = 512.0, tol = 1e-10;
    double L = 0.0, M = 0.0, eta = 0.0, rho = 0.0;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", input,
                                    "input JSON: a file path or an inline object");
        if (needs_input) opt->required();
        cmd->add_option("--output", output, "report path ('-' = stdout)");
        cmd->add_option("--csv", csv, "also write sequence output as CSV");
    };

    auto* kron = app.add_subcommand(
        "kronecker", "exact Hankel determinants A_n over a window of sizes");
    add_io(kron, true);
    kron->add_option("--N", N, "series truncation order for generated inputs");
    kron->add_option("--n-lo", n_lo, "window start (default from the window policy)");
    kron->add_option("--n-hi", n_hi, "window end");

    auto* rec = app.add_subcommand(
        "reconstruct", "exact rational reconstruction P/Q from series coefficients");
    add_io(rec, true);
    rec->add_option("--N", N, "series truncation order for generated inputs");
    rec->add_option("--d", d, "degree bound for P and Q")->required();

    auto* crit = app.add_subcommand(
        "criterion", "bivariate restriction criterion: exact H_m(w) over an m-window");
    add_io(crit, true);
    crit->add_option("--N", N, "series truncation (total degree)");
    crit->add_option("--n", n_exp, "diagonal exponent in f(z, e^{i theta} z^n)");
    crit->add_option("--m-lo", m_lo, "first Hankel size");
    crit->add_option("--m-hi", m_hi, "last Hankel size");

    auto* cap = app.add_subcommand(
        "capacity", "transfinite diameter and Chebyshev upper bounds of a point cloud");
    add_io(cap, true);
    cap->add_option("--n-max", n_max, "largest Fekete size");
    cap->add_option("--seed", seed, "exchange-order seed (reports are reproducible per seed)");

    auto* iota = app.add_subcommand(
        "iota-check", "capacity certificate d_n(iota(Gamma)) < 1 - margin");
    add_io(iota, true);
    iota->add_option("--n-max", n_max, "largest Fekete size")->default_val(40);
    iota->add_option("--seed", seed, "exchange-order seed");
    iota->add_option("--margin", margin, "certificate margin below 1");
    iota->add_option("--density", density, "contour sampling density (points per unit length)");

    auto* bound = app.add_subcommand(
        "contour-bound", "evaluate the explicit Hankel bound and locate m0");
    add_io(bound, false);
    bound->add_option("--L", L, "curve length (ignored when --input gives a contour)");
    bound->add_option("--eta", eta, "min |z| on the curve (ignored with --input)");
    bound->add_option("--M", M, "sup of |g| on the curve")->required();
    bound->add_option("--rho", rho, "Vandermonde factor bound in (0,1)")->required();
    bound->add_option("--m-max", m_max, "largest Hankel size to scan");

    auto* dfin = app.add_subcommand(
        "dfinite", "coefficients from a D-finite system; full pipeline for two variables");
    add_io(dfin, true);
    dfin->add_option("--N", N, "truncation order / total degree");
    dfin->add_option("--n", n_exp, "diagonal exponent (two-variable pipeline)");
    dfin->add_option("--m-lo", m_lo, "first Hankel size (pipeline)");
    dfin->add_option("--m-hi", m_hi, "last Hankel size (pipeline)");

    auto* sym = app.add_subcommand(
        "symcheck", "symmetrized determinant identity cross-check on a contour");
    add_io(sym, true);
    sym->add_option("--m", m_sym, "Hankel size (1 or 2)");
    sym->add_option("--tol", tol, "quadrature stabilization tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Reporter rep;
    rep.output = output;
    rep.csv_path = csv;

    try {
        if (kron->parsed()) {
            json in = load_input(input);
            if (n_lo == 0 && n_hi == 0)
                std::tie(n_lo, n_hi) = default_kronecker_window(std::nullopt);
            if (n_lo == 0) n_lo = 1;
            if (n_hi == 0) n_hi = n_lo + 11;
            rep.config = {{"subcommand", "kronecker"}, {"input", in},  {"N", N},
                          {"n_lo", n_lo},              {"n_hi", n_hi}};
            return run_kronecker(rep, in, N, n_lo, n_hi);
        }
        if (rec->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "reconstruct"},
                          {"input", in},
                          {"N", N},
                          {"d", d}};
            return run_reconstruct(rep, in, N, d);
        }
        if (crit->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "criterion"}, {"input", in},   {"N", N},
                          {"n", n_exp},                {"m_lo", m_lo},  {"m_hi", m_hi}};
            return run_criterion(rep, in, N, n_exp, m_lo, m_hi);
        }
        if (cap->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "capacity"},
                          {"input", in},
                          {"n_max", n_max},
                          {"seed", seed}};
            return run_capacity(rep, in, n_max, seed);
        }
        if (iota->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "iota-check"}, {"input", in},
                          {"n_max", n_max},             {"seed", seed},
                          {"margin", margin},           {"density", density}};
            return run_iota_check(rep, in, n_max, seed, margin, density);
        }
        if (bound->parsed()) {
            std::optional<json> in;
            if (!input.empty()) in = load_input(input);
            rep.config = {{"subcommand", "contour-bound"},
                          {"input", in ? *in : json(nullptr)},
                          {"L", L},
                          {"M", M},
                          {"eta", eta},
                          {"rho", rho},
                          {"m_max", m_max}};
            return run_contour_bound(rep, in ? &*in : nullptr, L, M, eta, rho, m_max);
        }
        if (dfin->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "dfinite"}, {"input", in},   {"N", N},
                          {"n", n_exp},              {"m_lo", m_lo},  {"m_hi", m_hi}};
            return run_dfinite(rep, in, N, n_exp, m_lo, m_hi);
        }
        if (sym->parsed()) {
            json in = load_input(input);
            rep.config = {{"subcommand", "symcheck"},
                          {"input", in},
                          {"m", m_sym},
                          {"tol", tol}};
            return run_symcheck(rep, in, m_sym, tol);
        }
    } catch (const Error& e) {
        // analysis-level failure: serialize into the report, exit 1
        return rep.failure(e.type_name(), e.what());
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ratseries::cli
