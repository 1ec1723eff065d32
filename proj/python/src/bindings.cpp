#include "ratseries/capacity.hpp"
#include "ratseries/contour.hpp"
#include "ratseries/dfinite.hpp"
#include "ratseries/errors.hpp"
#include "ratseries/hankel.hpp"
#include "ratseries/restriction.hpp"
#include "ratseries/series.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ratseries;

namespace pybind11::detail {

// exact integers cross the boundary as python ints, via decimal strings
template <>
struct type_caster<ratseries::BigInt> {
    PYBIND11_TYPE_CASTER(ratseries::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = ratseries::BigInt(std::string(str(src)));
        return true;
    }
    static handle cast(const ratseries::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using BigVec = std::vector<BigInt>;

GammaContour gamma_from_tuple(const std::tuple<double, double, double, double>& t) {
    return make_gamma(std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t));
}

py::dict hankel_report_dict(const HankelReport& r) {
    py::dict d;
    d["window"] = py::make_tuple(r.n_lo, r.n_hi);
    d["dets"] = r.dets;
    d["verdict"] = verdict_name(r.verdict);
    d["witness_n"] = r.witness_n ? py::object(py::int_(*r.witness_n)) : py::none();
    return d;
}

py::dict criterion_report_dict(const CriterionReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["m_range"] = py::make_tuple(r.m_lo, r.m_hi);
    py::list results;
    for (const auto& e : r.results) {
        py::dict row;
        row["m"] = e.m;
        row["zero"] = e.zero;
        if (!e.zero) {
            row["witness_degree"] = e.witness_degree;
            row["witness_coeff"] = e.witness_coeff;
        }
        results.append(row);
    }
    d["results"] = results;
    d["verdict"] = criterion_verdict_name(r.verdict);
    d["onset_m"] = r.onset_m ? py::object(py::int_(*r.onset_m)) : py::none();
    return d;
}

py::dict estimate_dict(const CapacityEstimate& e) {
    py::dict d;
    d["n_values"] = e.n_values;
    d["d_seq"] = e.d_seq;
    d["tau_upper_seq"] = e.tau_upper_seq;
    d["d_upper"] = e.d_upper;
    d["monotone_violations"] = e.monotone_violations;
    return d;
}

py::dict rational_dict(const RationalFn& r) {
    py::dict d;
    d["numerator"] = r.numerator().coeffs();
    d["denominator"] = r.denominator().coeffs();
    return d;
}

std::function<int(std::size_t)> rule_by_name(const std::string& rule, unsigned base) {
    if (rule == "squares") return lacunary_rule_squares();
    if (rule == "cubes") return lacunary_rule_cubes();
    if (rule == "factorials") return lacunary_rule_factorials();
    if (rule == "powers") return lacunary_rule_powers(base);
    if (rule == "none") return lacunary_rule_none();
    throw std::invalid_argument("unknown lacunary rule: " + rule);
}

BiSeries biseries_from_rows(const std::vector<BigVec>& rows) {
    return BiSeries::from_rows(rows);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rationality analysis of integer power series: exact Hankel testing, "
              "bivariate restriction criteria, transfinite diameter, contour bounds, "
              "and the D-finite pipeline.";

    py::register_exception<Error>(m, "AnalysisError", PyExc_RuntimeError);

    // series-core
    m.def(
        "expand_rational",
        [](const BigVec& num, const BigVec& den, std::size_t N) {
            return expand_rational(RationalFn(IntPoly(num), IntPoly(den)), N).coeffs();
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("N"),
        "Series coefficients of P/Q through index N (exact; |Q(0)| must be 1).");
    m.def(
        "lacunary_series",
        [](const std::string& rule, std::size_t N, unsigned base) {
            return lacunary_series(rule_by_name(rule, base), N).coeffs();
        },
        py::arg("rule"), py::arg("N"), py::arg("base") = 2,
        "Witness-count series for a named exponent rule "
        "(squares | cubes | factorials | powers | none).");

    // hankel
    m.def(
        "hankel_det",
        [](const BigVec& coeffs, std::size_t n) {
            return hankel_det(IntSeries1D(coeffs), n);
        },
        py::arg("coeffs"), py::arg("n"),
        "Exact determinant of the (n+1) x (n+1) Hankel matrix (a_{i+j}).");
    m.def(
        "kronecker_test",
        [](const BigVec& coeffs, std::size_t n_lo, std::size_t n_hi) {
            return hankel_report_dict(kronecker_test(IntSeries1D(coeffs), n_lo, n_hi));
        },
        py::arg("coeffs"), py::arg("n_lo"), py::arg("n_hi"));
    m.def(
        "reconstruct_rational",
        [](const BigVec& coeffs, std::size_t d) {
            return rational_dict(reconstruct_rational(IntSeries1D(coeffs), d));
        },
        py::arg("coeffs"), py::arg("d"),
        "Reduced P/Q with deg <= d matching the series through index 2d+1.");

    // restriction
    m.def(
        "restriction_polys",
        [](const std::vector<BigVec>& rows, int n, int V) {
            RestrictionFamily fam = restriction_polys(biseries_from_rows(rows), n, V);
            std::vector<BigVec> out;
            for (const auto& p : fam.pv) out.push_back(p.coeffs());
            return out;
        },
        py::arg("rows"), py::arg("n"), py::arg("V"),
        "Coefficients of P_v(1, w) for v = 0..V.");
    m.def(
        "hankel_poly",
        [](const std::vector<BigVec>& rows, int n, std::size_t m) {
            RestrictionFamily fam =
                restriction_polys(biseries_from_rows(rows), n, static_cast<int>(2 * m));
            return hankel_poly(fam, m).coeffs();
        },
        py::arg("rows"), py::arg("n"), py::arg("m"),
        "Integer coefficients of H_m(w), exact.");
    m.def(
        "criterion_test",
        [](const std::vector<BigVec>& rows, int n, std::size_t m_lo, std::size_t m_hi) {
            return criterion_report_dict(
                criterion_test(biseries_from_rows(rows), n, m_lo, m_hi));
        },
        py::arg("rows"), py::arg("n"), py::arg("m_lo"), py::arg("m_hi"));
    m.def(
        "coeff_sup_bound",
        [](const BigVec& coeffs) { return coeff_sup_bound(IntPoly(coeffs)); },
        py::arg("coeffs"),
        "Certified upper bound for max |p| on the unit circle.");
    m.def(
        "conclude_zero",
        [](const BigVec& coeffs, double bound) {
            return conclude_zero(IntPoly(coeffs), bound);
        },
        py::arg("coeffs"), py::arg("sup_bound"));
    m.def(
        "slice_coeffs",
        [](const std::vector<BigVec>& rows, int n, double theta, int V) {
            RestrictionFamily fam = restriction_polys(biseries_from_rows(rows), n, V);
            return slice_coeffs(fam, theta, V);
        },
        py::arg("rows"), py::arg("n"), py::arg("theta"), py::arg("V"));

    // capacity
    m.def(
        "fekete_points",
        [](const std::vector<Complex>& points, std::size_t n, std::uint64_t seed) {
            FeketeResult fk = fekete_points(PointCloud(points), n, seed);
            py::dict d;
            d["points"] = fk.points;
            d["indices"] = fk.indices;
            d["log_vandermonde"] = fk.log_vandermonde;
            return d;
        },
        py::arg("points"), py::arg("n"), py::arg("seed") = 0);
    m.def(
        "transfinite_diameter",
        [](const std::vector<Complex>& points, std::size_t n_max, std::uint64_t seed) {
            return estimate_dict(transfinite_diameter(PointCloud(points), n_max, seed));
        },
        py::arg("points"), py::arg("n_max"), py::arg("seed") = 0);
    m.def(
        "chebyshev_upper",
        [](const std::vector<Complex>& points, const std::vector<Complex>& nodes) {
            return chebyshev_upper(PointCloud(points), nodes);
        },
        py::arg("points"), py::arg("nodes"),
        "max over the cloud of |prod (z - node_i)|: upper bound for M_n.");
    m.def(
        "d_tau_consistency",
        [](const std::vector<Complex>& points, std::size_t n_max, std::uint64_t seed) {
            DTauReport r = d_tau_consistency(PointCloud(points), n_max, seed);
            py::dict d = estimate_dict(r.estimate);
            d["d_final"] = r.d_final;
            d["tau_upper_final"] = r.tau_upper_final;
            d["gap"] = r.gap;
            return d;
        },
        py::arg("points"), py::arg("n_max"), py::arg("seed") = 0);

    // contour
    using Gamma = std::tuple<double, double, double, double>;
    m.def(
        "contour_length", [](const Gamma& g) { return contour_length(gamma_from_tuple(g)); },
        py::arg("gamma"), "Length of Gamma given as (phi, psi, s, delta).");
    m.def(
        "min_modulus", [](const Gamma& g) { return min_modulus(gamma_from_tuple(g)); },
        py::arg("gamma"));
    m.def(
        "sample_contour",
        [](const Gamma& g, double density) {
            return sample_contour(gamma_from_tuple(g), density).points;
        },
        py::arg("gamma"), py::arg("density") = 512.0);
    m.def(
        "iota_capacity_check",
        [](const Gamma& g, std::size_t n_max, std::uint64_t seed, double margin,
           double density) {
            IotaCheckReport r = iota_capacity_run(gamma_from_tuple(g), n_max, seed, margin,
                                                  density);
            py::dict d = estimate_dict(r.estimate);
            d["certified"] = r.certified;
            d["certify_n"] = r.certified ? py::object(py::int_(r.certify_n)) : py::none();
            d["certified_d"] =
                r.certified ? py::object(py::float_(r.certified_d)) : py::none();
            return d;
        },
        py::arg("gamma"), py::arg("n_max") = 40, py::arg("seed") = 0,
        py::arg("margin") = 0.02, py::arg("density") = 512.0,
        "Fekete certificate run for d(iota(Gamma)) < 1 - margin; no exception on "
        "failure, inspect 'certified'.");
    m.def(
        "cauchy_coeff",
        [](const BigVec& num, const BigVec& den, const Gamma& g, std::size_t v) {
            IntPoly P(num), Q(den);
            return cauchy_coeff([&](Complex z) { return P.eval(z) / Q.eval(z); },
                                gamma_from_tuple(g), v);
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("gamma"), py::arg("v"),
        "v-th Cauchy coefficient of the rational function P/Q over Gamma.");
    m.def(
        "symmetrization_check",
        [](const BigVec& num, const BigVec& den, const Gamma& g, std::size_t m) {
            IntPoly P(num), Q(den);
            return symmetrization_check([&](Complex z) { return P.eval(z) / Q.eval(z); },
                                        gamma_from_tuple(g), m);
        },
        py::arg("numerator"), py::arg("denominator"), py::arg("gamma"), py::arg("m") = 1);
    m.def(
        "hankel_bound",
        [](double L, double M, double eta, double rho, std::size_t m) {
            return hankel_bound({L, M, eta, rho, m});
        },
        py::arg("L"), py::arg("M"), py::arg("eta"), py::arg("rho"), py::arg("m"));
    m.def("find_m0", &find_m0, py::arg("L"), py::arg("M"), py::arg("eta"), py::arg("rho"),
          py::arg("m_max") = 40);

    // dfinite
    m.def(
        "recurrence_from_ode",
        [](const std::vector<BigVec>& equation) {
            std::vector<IntPoly> p;
            for (const auto& c : equation) p.emplace_back(c);
            PRecurrence rec = recurrence_from_ode(p);
            py::dict d;
            d["shift_min"] = rec.shift_min;
            std::vector<BigVec> coeffs;
            for (const auto& c : rec.coeffs) coeffs.push_back(c.coeffs());
            d["coeffs"] = coeffs;
            d["order"] = rec.order();
            d["offset"] = rec.offset();
            return d;
        },
        py::arg("equation"),
        "P-recursive recurrence satisfied by series solutions of "
        "sum_i p_i(z) f^{(i)} = 0.");
    m.def(
        "dfinite_coeffs",
        [](const std::vector<BigVec>& equation, const BigVec& initials, std::size_t N) {
            DFiniteSystem sys;
            std::vector<IntPoly> p;
            for (const auto& c : equation) p.emplace_back(c);
            sys.equations = {p};
            sys.initials = {initials};
            GeneratedSeries s = dfinite_series(sys, N);
            py::dict d;
            py::list values;
            for (const auto& v : s.values) {
                if (is_integer(v)) values.append(py::cast(numerator(v)));
                else values.append(py::str(numerator(v).str() + "/" + denominator(v).str()));
            }
            d["values"] = values;
            d["first_non_integer"] =
                s.first_non_integer ? py::object(py::int_(*s.first_non_integer)) : py::none();
            return d;
        },
        py::arg("equation"), py::arg("initials"), py::arg("N"),
        "Coefficients a_0..a_N from the ODE, exact rational arithmetic with an "
        "integrality flag.");
    m.def(
        "ode_continue",
        [](const std::vector<std::vector<Complex>>& matrix,
           const std::vector<Complex>& initial, const std::vector<Complex>& path,
           double tol, std::size_t degree) {
            OdeSystem sys = OdeSystem::constant(matrix, initial);
            OdeOptions opts;
            opts.tol = tol;
            opts.taylor_degree = degree;
            OdeResult res = ode_continue(sys, path, opts);
            py::dict d;
            d["value"] = res.value;
            d["residual"] = res.residual_sum;
            d["steps"] = res.steps;
            return d;
        },
        py::arg("matrix"), py::arg("initial"), py::arg("path"), py::arg("tol") = 1e-10,
        py::arg("degree") = 20,
        "Taylor-method continuation of w' = A w for a constant matrix A along a "
        "polyline path.");
    m.def(
        "bell_chen_pipeline",
        [](const std::vector<BigVec>& eq_z, const std::vector<BigVec>& eq_w,
           const std::vector<BigVec>& initials, int n, std::size_t N, std::size_t m_lo,
           std::size_t m_hi) {
            DFiniteSystem sys;
            std::vector<IntPoly> pz, pw;
            for (const auto& c : eq_z) pz.emplace_back(c);
            for (const auto& c : eq_w) pw.emplace_back(c);
            sys.equations = {pz, pw};
            sys.initials = initials;
            PipelineOptions opts;
            opts.n = n;
            opts.N = N;
            opts.m_lo = m_lo;
            opts.m_hi = m_hi;
            PipelineReport rep = bell_chen_pipeline(sys, opts);
            py::dict d;
            d["criterion"] = criterion_report_dict(rep.criterion);
            d["slice0"] = rep.slice0 ? py::object(rational_dict(*rep.slice0)) : py::none();
            d["radius_estimate_z"] = rep.radius_estimate_z;
            d["radius_estimate_w"] = rep.radius_estimate_w;
            d["radius_warning"] = rep.radius_warning;
            d["continuation_ok"] = rep.continuation.ok;
            return d;
        },
        py::arg("eq_z"), py::arg("eq_w"), py::arg("initials"), py::arg("n") = 1,
        py::arg("N") = 30, py::arg("m_lo") = 1, py::arg("m_hi") = 4,
        "Full pipeline: coefficient table from the two ODEs, exact H_m criterion, "
        "slice reconstruction on rational evidence.");
    m.def(
        "bell_chen_pipeline_table",
        [](const std::vector<BigVec>& rows, int n, std::size_t N, std::size_t m_lo,
           std::size_t m_hi) {
            PipelineOptions opts;
            opts.n = n;
            opts.N = N;
            opts.m_lo = m_lo;
            opts.m_hi = m_hi;
            PipelineReport rep = bell_chen_pipeline(biseries_from_rows(rows), opts);
            py::dict d;
            d["criterion"] = criterion_report_dict(rep.criterion);
            d["slice0"] = rep.slice0 ? py::object(rational_dict(*rep.slice0)) : py::none();
            d["radius_warning"] = rep.radius_warning;
            return d;
        },
        py::arg("rows"), py::arg("n") = 1, py::arg("N") = 30, py::arg("m_lo") = 1,
        py::arg("m_hi") = 4);
}
