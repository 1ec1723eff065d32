#include "ratseries/json_io.hpp"

#include "ratseries/errors.hpp"

#include <stdexcept>

namespace ratseries::io {

namespace {

[[noreturn]] void bad_spec(const std::string& msg) {
    throw std::invalid_argument("spec: " + msg);
}

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad_spec(std::string("missing key \"") + key + "\"");
    return *it;
}

double require_number(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number()) bad_spec(std::string("key \"") + key + "\" must be a number");
    return v.get<double>();
}

}  // namespace

BigInt parse_bigint(const json& j) {
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            bad_spec("malformed integer string \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    bad_spec("expected an integer (decimal string or JSON int)");
}

std::vector<BigInt> parse_bigint_list(const json& j) {
    if (!j.is_array()) bad_spec("expected an array of integers");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(parse_bigint(v));
    return out;
}

IntPoly parse_intpoly(const json& j) { return IntPoly(parse_bigint_list(j)); }

RationalFn parse_rational_fn(const json& j) {
    return RationalFn(parse_intpoly(require(j, "numerator")),
                      parse_intpoly(require(j, "denominator")));
}

DFiniteSystem parse_dfinite(const json& j) {
    DFiniteSystem sys;
    const json& eqs = require(j, "equations");
    if (!eqs.is_array() || eqs.empty()) bad_spec("\"equations\" must be a nonempty array");
    if (j.contains("variables")) {
        const json& vars = j["variables"];
        if (!vars.is_array() || vars.size() != eqs.size())
            bad_spec("\"variables\" must list one name per equation");
    }
    for (const auto& eq : eqs) {
        std::vector<IntPoly> polys;
        if (!eq.is_array()) bad_spec("each equation is an array of polynomials");
        for (const auto& p : eq) polys.push_back(parse_intpoly(p));
        sys.equations.push_back(std::move(polys));
    }
    const json& init = require(j, "initials");
    if (!init.is_array()) bad_spec("\"initials\" must be an array");
    if (!init.empty() && init[0].is_array()) {
        for (const auto& row : init) sys.initials.push_back(parse_bigint_list(row));
    } else {
        sys.initials.push_back(parse_bigint_list(init));
    }
    return sys;
}

namespace {

std::function<int(std::size_t)> parse_rule(const json& spec) {
    std::string rule = require(spec, "rule").get<std::string>();
    if (rule == "squares") return lacunary_rule_squares();
    if (rule == "cubes") return lacunary_rule_cubes();
    if (rule == "factorials") return lacunary_rule_factorials();
    if (rule == "none") return lacunary_rule_none();
    if (rule == "powers") {
        auto base = static_cast<unsigned>(require_number(spec, "base"));
        return lacunary_rule_powers(base);
    }
    bad_spec("unknown lacunary rule \"" + rule + "\"");
}

}  // namespace

IntSeries1D make_series_1d(const json& spec, std::size_t N) {
    std::string kind = require(spec, "kind").get<std::string>();
    if (kind == "rational") return expand_rational(parse_rational_fn(spec), N);
    if (kind == "table") return IntSeries1D(parse_bigint_list(require(spec, "coeffs")));
    if (kind == "lacunary") return lacunary_series(parse_rule(spec), N);
    if (kind == "dfinite") {
        DFiniteSystem sys = parse_dfinite(spec);
        return dfinite_series(sys, N).as_int_series();
    }
    bad_spec("unknown univariate series kind \"" + kind + "\"");
}

BiSeries make_biseries(const json& spec, std::size_t N) {
    std::string kind = require(spec, "kind").get<std::string>();
    std::string note = spec.value("convergence_note", std::string{});
    if (kind == "table") {
        const json& rows = require(spec, "rows");
        if (!rows.is_array() || rows.empty()) bad_spec("\"rows\" must be a nonempty array");
        std::vector<std::vector<BigInt>> table;
        for (const auto& row : rows) table.push_back(parse_bigint_list(row));
        return BiSeries::from_rows(table, note);
    }
    if (kind == "product") {
        IntSeries1D g = make_series_1d(require(spec, "g"), N);
        IntSeries1D h = make_series_1d(require(spec, "h"), N);
        return biseries_from_product(g, h, N, note);
    }
    if (kind == "dfinite") {
        DFiniteSystem sys = parse_dfinite(spec);
        return dfinite_table(sys, N);
    }
    bad_spec("unknown bivariate series kind \"" + kind + "\"");
}

PointCloud parse_cloud(const json& spec) {
    if (spec.contains("points")) {
        const json& pts = spec["points"];
        if (!pts.is_array() || pts.empty()) bad_spec("\"points\" must be a nonempty array");
        std::vector<Complex> out;
        for (const auto& p : pts) {
            if (!p.is_array() || p.size() != 2) bad_spec("each point is [re, im]");
            out.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        return PointCloud(std::move(out), spec.value("label", std::string{}));
    }
    std::string gen = require(spec, "generator").get<std::string>();
    if (gen == "circle") {
        double radius = require_number(spec, "radius");
        auto count = static_cast<std::size_t>(spec.value("count", 512));
        return PointCloud::circle(radius, count);
    }
    if (gen == "segment") {
        const json& a = require(spec, "a");
        const json& b = require(spec, "b");
        auto count = static_cast<std::size_t>(spec.value("count", 1024));
        return PointCloud::segment(Complex(a[0].get<double>(), a[1].get<double>()),
                                   Complex(b[0].get<double>(), b[1].get<double>()), count);
    }
    if (gen == "gamma") {
        GammaContour g = parse_contour(spec);
        double density = spec.value("density", 512.0);
        return sample_contour(g, density);
    }
    bad_spec("unknown cloud generator \"" + gen + "\"");
}

GammaContour parse_contour(const json& spec) {
    return make_gamma(require_number(spec, "phi"), require_number(spec, "psi"),
                      require_number(spec, "s"), require_number(spec, "delta"));
}

ComplexFn parse_complex_fn(const json& spec) {
    std::string kind = require(spec, "kind").get<std::string>();
    if (kind == "rational") {
        IntPoly num = parse_intpoly(require(spec, "numerator"));
        IntPoly den = parse_intpoly(require(spec, "denominator"));
        if (den.is_zero()) throw ZeroDenominator("complex fn: denominator is zero");
        return [num, den](Complex z) { return num.eval(z) / den.eval(z); };
    }
    if (kind == "poly") {
        IntPoly p = parse_intpoly(require(spec, "coeffs"));
        return [p](Complex z) { return p.eval(z); };
    }
    bad_spec("unknown function kind \"" + kind + "\"");
}

// ---- serialization ----------------------------------------------------------

namespace {

json bigints_to_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

}  // namespace

json to_json(const IntPoly& p) { return bigints_to_json(p.coeffs()); }

json to_json(const RationalFn& r) {
    return json{{"numerator", to_json(r.numerator())},
                {"denominator", to_json(r.denominator())},
                {"display", r.to_string()}};
}

json to_json(const IntSeries1D& s) { return bigints_to_json(s.coeffs()); }

json to_json(const HankelReport& r) {
    json out;
    out["window"] = json::array({r.n_lo, r.n_hi});
    out["dets"] = bigints_to_json(r.dets);
    out["verdict"] = verdict_name(r.verdict);
    out["witness_n"] = r.witness_n ? json(*r.witness_n) : json(nullptr);
    return out;
}

json to_json(const CriterionReport& r) {
    json out;
    out["n"] = r.n;
    out["m_range"] = json::array({r.m_lo, r.m_hi});
    json results = json::array();
    for (const auto& res : r.results) {
        json e;
        e["m"] = res.m;
        e["zero"] = res.zero;
        if (!res.zero) {
            e["witness_degree"] = res.witness_degree;
            e["witness_coeff"] = res.witness_coeff.str();
        }
        results.push_back(std::move(e));
    }
    out["results"] = std::move(results);
    out["verdict"] = criterion_verdict_name(r.verdict);
    out["onset_m"] = r.onset_m ? json(*r.onset_m) : json(nullptr);
    return out;
}

json to_json(const CapacityEstimate& e) {
    json out;
    out["n_values"] = e.n_values;
    out["d_seq"] = e.d_seq;
    out["tau_upper_seq"] = e.tau_upper_seq;
    out["d_upper"] = e.d_upper;
    out["monotone_violations"] = e.monotone_violations;
    return out;
}

json to_json(const DTauReport& r) {
    json out;
    out["estimate"] = to_json(r.estimate);
    out["d_final"] = r.d_final;
    out["tau_upper_final"] = r.tau_upper_final;
    out["gap"] = r.gap;
    out["tau_undercuts_d"] = r.tau_undercuts_d;
    return out;
}

json to_json(const IotaCheckReport& r) {
    json out;
    out["certified"] = r.certified;
    out["certify_n"] = r.certified ? json(r.certify_n) : json(nullptr);
    out["certified_d"] = r.certified ? json(r.certified_d) : json(nullptr);
    out["margin"] = r.margin;
    out["cloud_size"] = r.cloud_size;
    out["estimate"] = to_json(r.estimate);
    return out;
}

json to_json(const GeneratedSeries& s) {
    json out;
    json values = json::array();
    for (const auto& v : s.values) {
        if (is_integer(v)) values.push_back(numerator(v).str());
        else values.push_back(numerator(v).str() + "/" + denominator(v).str());
    }
    out["values"] = std::move(values);
    out["integral"] = !s.first_non_integer.has_value();
    out["first_non_integer"] =
        s.first_non_integer ? json(*s.first_non_integer) : json(nullptr);
    return out;
}

json to_json(const PipelineReport& r) {
    json out;
    out["criterion"] = to_json(r.criterion);
    out["slice0"] = r.slice0 ? to_json(*r.slice0) : json(nullptr);
    out["slice_degree"] = r.slice_degree ? json(*r.slice_degree) : json(nullptr);
    out["radius_estimate_z"] = r.radius_estimate_z;
    out["radius_estimate_w"] = r.radius_estimate_w;
    out["radius_warning"] = r.radius_warning;
    json cont;
    cont["attempted"] = r.continuation.attempted;
    if (r.continuation.attempted) {
        cont["ok"] = r.continuation.ok;
        cont["z0"] = complex_to_json(r.continuation.z0);
        cont["w_end"] = complex_to_json(r.continuation.w_end);
        cont["path_disagreement"] = r.continuation.path_disagreement;
        cont["residual"] = r.continuation.residual;
        cont["note"] = r.continuation.note;
    }
    out["continuation"] = std::move(cont);
    return out;
}

}  // namespace ratseries::io
