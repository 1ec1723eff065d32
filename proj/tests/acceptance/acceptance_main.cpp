// Acceptance suite: one line per criterion, hard tolerances pinned in code.
// Usage: ratseries_acceptance <cli-binary> <scratch-dir>

#include "ratseries/capacity.hpp"
#include "ratseries/contour.hpp"
#include "ratseries/dfinite.hpp"
#include "ratseries/errors.hpp"
#include "ratseries/hankel.hpp"
#include "ratseries/restriction.hpp"
#include "ratseries/series.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

using namespace ratseries;
namespace fs = std::filesystem;

namespace {

int failures = 0;

class Criterion {
public:
    Criterion(int idx, std::string name, double time_limit_s = 0.0)
        : idx_(idx), name_(std::move(name)), limit_(time_limit_s),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            details_ += (details_.empty() ? "" : "; ") + detail;
        }
    }

    ~Criterion() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                          .count();
        if (limit_ > 0.0 && secs > limit_) {
            ok_ = false;
            details_ += (details_.empty() ? "" : "; ") + std::string("runtime ") +
                        std::to_string(secs) + "s exceeds " + std::to_string(limit_) + "s";
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", ok_ ? "PASS" : "FAIL", idx_,
                    name_.c_str(), secs, details_.empty() ? "" : " -- ", details_.c_str());
        std::fflush(stdout);
        if (!ok_) ++failures;
    }

private:
    int idx_;
    std::string name_;
    double limit_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::string details_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

IntPoly random_poly(std::mt19937& rng, int max_deg, bool unit_const) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    if (unit_const) c[0] = sign(rng) ? 1 : -1;
    return IntPoly(std::move(c));
}

BiSeries remark1_series(int order) {
    IntSeries1D ones = expand_rational(RationalFn(IntPoly({1}), IntPoly({1, -1})), order);
    IntSeries1D fact = lacunary_series(lacunary_rule_factorials(), order);
    return biseries_from_product(ones, fact, order, "T^2 on the boundary of Omega");
}

void criterion_1() {
    Criterion c(1, "Kronecker suite on a randomized rational corpus", 10.0);
    std::mt19937 rng(20240901);
    int done = 0;
    while (done < 20) {
        IntPoly P = random_poly(rng, 5, false);
        IntPoly Q = random_poly(rng, 5, true);
        if (P.is_zero()) continue;
        RationalFn r(P, Q);
        auto p = static_cast<std::size_t>(r.numerator().degree());
        auto q = static_cast<std::size_t>(r.denominator().degree());
        IntSeries1D s = expand_rational(r, 2 * (p + q + 6));
        for (std::size_t n = p + q + 1; n <= p + q + 6; ++n)
            c.expect(hankel_det(s, n) == 0,
                     "A_" + std::to_string(n) + " != 0 for " + r.to_string());
        const std::size_t d = 5;
        RationalFn back = reconstruct_rational(expand_rational(r, 2 * d + 1), d);
        c.expect(back == r, "round-trip mismatch for " + r.to_string());
        ++done;
    }
}

void criterion_2() {
    Criterion c(2, "restriction exactness: all-ones table and the Remark 1 series", 30.0);
    BiSeries ones = BiSeries::generate(8, [](int, int) { return BigInt(1); });
    RestrictionFamily fam = restriction_polys(ones, 1, 8);
    c.expect(hankel_poly(fam, 1) == IntPoly({0, -1}), "H_1 != -w");
    for (std::size_t m = 2; m <= 4; ++m)
        c.expect(hankel_poly(fam, m).is_zero(), "H_" + std::to_string(m) + " != 0");

    BiSeries rem = remark1_series(40);
    RestrictionFamily rf = restriction_polys(rem, 1, 40);
    bool witness = false;
    std::size_t m = 1;
    for (; m <= 6 && !witness; ++m) witness = !hankel_poly(rf, m).is_zero();
    for (; m <= 20 && !witness; ++m) witness = !hankel_poly(rf, m).is_zero();
    c.expect(witness, "no nonzero H_m witness for the Remark 1 series through m = 20");
}

void criterion_3() {
    Criterion c(3, "capacity oracles: circle, segment, scaling", 60.0);
    PointCloud circle = PointCloud::circle(1.0, 512);
    CapacityEstimate ce = transfinite_diameter(circle, 24, 0);
    double d24 = ce.d_seq.back();
    c.expect(d24 >= 1.0 && d24 <= 1.15, "circle d_24 = " + std::to_string(d24));

    PointCloud segment = PointCloud::segment({-1.0, 0.0}, {1.0, 0.0}, 1024);
    CapacityEstimate se = transfinite_diameter(segment, 30, 0);
    double d30 = se.d_seq.back();
    c.expect(d30 >= 0.5 && d30 <= 0.65, "segment d_30 = " + std::to_string(d30));

    for (Complex scale : {Complex(2.0, 0.0), Complex(0.0, -3.0)}) {
        CapacityEstimate ref = transfinite_diameter(circle, 8, 0);
        CapacityEstimate got = transfinite_diameter(circle.scaled(scale), 8, 0);
        for (std::size_t i = 0; i < ref.d_seq.size(); ++i) {
            double want = std::abs(scale) * ref.d_seq[i];
            c.expect(std::abs(got.d_seq[i] - want) <= 1e-9 * want,
                     "scaling failed at n = " + std::to_string(ref.n_values[i]));
        }
    }
}

void criterion_4() {
    Criterion c(4, "Lemma 3 certificate for Gamma(pi/2, -pi/2, 1.2, 0.05)", 60.0);
    GammaContour g = make_gamma(std::numbers::pi / 2, -std::numbers::pi / 2, 1.2, 0.05);
    IotaCheckReport rep = iota_capacity_run(g, 40, 0, 0.02, 512.0);
    c.expect(rep.certified && rep.certified_d < 0.98,
             "no d_n(iota(Gamma)) < 0.98 for n <= 40; min d_n = " +
                 std::to_string(rep.estimate.d_upper) +
                 " (d_n >= capacity ~ 0.958 for this contour; see ledger)");
}

void criterion_5() {
    Criterion c(5, "Cauchy coefficient recovery over Gamma", 60.0);
    GammaContour g = make_gamma(std::numbers::pi / 2, -std::numbers::pi / 2, 1.2, 0.05);
    ComplexFn geo = [](Complex z) { return 1.0 / (1.0 - z / 2.0); };
    for (std::size_t v = 0; v <= 6; ++v) {
        Complex got = cauchy_coeff(geo, g, v);
        double want = std::pow(0.5, static_cast<double>(v));
        c.expect(std::abs(got - want) < 1e-8,
                 "geometric coefficient v = " + std::to_string(v));
    }
    ComplexFn one = [](Complex) { return Complex(1.0, 0.0); };
    c.expect(std::abs(cauchy_coeff(one, g, 0) - 1.0) < 1e-10, "residue of 1/z");
    c.expect(std::abs(cauchy_coeff(one, g, 3)) < 1e-10, "residue of z^{-4}");
}

void criterion_6() {
    Criterion c(6, "symmetrized determinant identity at m = 1", 60.0);
    GammaContour g = make_gamma(std::numbers::pi / 2, -std::numbers::pi / 2, 1.2, 0.05);
    double r1 = symmetrization_check([](Complex z) { return 1.0 / (1.0 - z / 2.0); }, g, 1);
    c.expect(r1 < 1e-6, "residual for 1/(1-z/2) was " + std::to_string(r1));
    double r2 = symmetrization_check([](Complex z) { return z; }, g, 1);
    c.expect(r2 < 1e-6, "residual for g(z) = z was " + std::to_string(r2));
}

void criterion_7() {
    Criterion c(7, "explicit Hankel bound arithmetic and m0 search");
    const double L = 2.1 * std::numbers::pi + 0.6;  // 7.1969...
    c.expect(hankel_bound({L, 2.0, 0.9, 0.8, 1}) > 1.0, "bound(m=1) <= 1");
    c.expect(hankel_bound({L, 2.0, 0.9, 0.8, 2}) < 1.0, "bound(m=2) >= 1");
    c.expect(find_m0(L, 2.0, 0.9, 0.8, 10) == 2, "find_m0 != 2");
}

void criterion_8() {
    Criterion c(8, "holomorphic ODE lemma: closed forms, uniqueness, order");
    OdeSystem expo = OdeSystem::constant({{Complex(1.0, 0.0)}}, {Complex(1.0, 0.0)});
    OdeResult e = ode_continue(expo, {Complex(0.0), Complex(1.0)});
    c.expect(std::abs(e.value[0] - std::exp(1.0)) < 1e-10, "exp(1) drifted");

    OdeSystem rot = OdeSystem::constant(
        {{Complex(0.0), Complex(-1.0)}, {Complex(1.0), Complex(0.0)}},
        {Complex(1.0), Complex(0.0)});
    OdeResult r = ode_continue(rot, {Complex(0.0), Complex(std::numbers::pi / 2, 0.0)});
    c.expect(std::abs(r.value[0]) < 1e-9 && std::abs(r.value[1] - 1.0) < 1e-9,
             "(cos, sin)(pi/2) drifted");

    OdeSystem pole = companion_system({IntPoly({-1}), IntPoly({1, -1})});
    pole.initial = {Complex(1.0, 0.0)};
    Complex target(0.2, 0.6);
    OdeResult direct = ode_continue(pole, {Complex(0.0), target});
    OdeResult detour =
        ode_continue(pole, {Complex(0.0), Complex(-0.4, 0.3), Complex(-0.1, 0.7), target});
    c.expect(std::abs(direct.value[0] - detour.value[0]) < 1e-8, "path dependence");

    OdeOptions opts;
    opts.taylor_degree = 4;
    opts.tol = 1e30;
    double err[2];
    double h = 0.1;
    for (int k = 0; k < 2; ++k, h /= 2) {
        opts.max_step = h;
        OdeResult res = ode_continue(expo, {Complex(0.0), Complex(1.0)}, opts);
        err[k] = std::abs(res.value[0] - std::exp(1.0));
    }
    c.expect(err[0] / err[1] >= 8.0,
             "halving ratio " + std::to_string(err[0] / err[1]) + " < 8");
}

void criterion_9() {
    Criterion c(9, "Bell-Chen pipeline at desk scale", 60.0);
    DFiniteSystem prod;
    prod.equations = {{IntPoly({-1}), IntPoly({1, -1})}, {IntPoly({-1}), IntPoly({1, -1})}};
    prod.initials = {{BigInt(1)}};
    PipelineOptions opts;
    opts.N = 30;
    opts.m_hi = 4;
    PipelineReport p1 = bell_chen_pipeline(prod, opts);
    c.expect(p1.criterion.verdict == CriterionVerdict::RationalEvidence,
             "product fixture not RationalEvidence");
    c.expect(p1.slice0 && *p1.slice0 == RationalFn(IntPoly({1}), IntPoly({1, -2, 1})),
             "product slice is not 1/(1-z)^2");

    BiSeries binom = BiSeries::generate(30, [](int j, int k) {
        BigInt b = 1;
        for (int t = 1; t <= k; ++t) b = b * BigInt(j + t) / BigInt(t);
        return b;
    });
    PipelineReport p2 = bell_chen_pipeline(binom, opts);
    c.expect(p2.criterion.verdict == CriterionVerdict::RationalEvidence,
             "binomial fixture not RationalEvidence");
    c.expect(p2.slice0 && *p2.slice0 == RationalFn(IntPoly({1}), IntPoly({1, -2})),
             "binomial slice is not 1/(1-2z)");

    PipelineOptions ropts;
    ropts.N = 40;
    ropts.m_hi = 6;
    PipelineReport p3 = bell_chen_pipeline(remark1_series(40), ropts);
    c.expect(p3.criterion.verdict == CriterionVerdict::NotRationalEvidence,
             "Remark 1 fixture not NotRationalEvidence");
}

void criterion_10(const std::string& cli, const fs::path& scratch) {
    Criterion c(10, "byte-identical CLI reports for a fixed seed");
    fs::create_directories(scratch);
    struct Run {
        const char* name;
        std::string args;
    } runs[] = {
        {"capacity",
         " capacity --input '{\"generator\":\"circle\",\"radius\":1.0,\"count\":300}'"
         " --n-max 8 --seed 7 --output "},
        {"kronecker",
         " kronecker --input '{\"kind\":\"rational\",\"numerator\":[\"1\"],"
         "\"denominator\":[\"1\",\"-1\",\"-1\"]}' --n-lo 2 --n-hi 8 --output "},
        {"iota",
         " iota-check --input '{\"phi\":1.5707963267948966,\"psi\":-1.5707963267948966,"
         "\"s\":3.0,\"delta\":0.05}' --n-max 20 --seed 3 --density 64 --output "},
    };
    for (const auto& run : runs) {
        fs::path a = scratch / (std::string(run.name) + "_a.json");
        fs::path b = scratch / (std::string(run.name) + "_b.json");
        std::string cmd1 = cli + run.args + a.string() + " > /dev/null 2>&1";
        std::string cmd2 = cli + run.args + b.string() + " > /dev/null 2>&1";
        int rc1 = std::system(cmd1.c_str());
        int rc2 = std::system(cmd2.c_str());
        (void)rc1;
        (void)rc2;
        std::string ta = slurp(a), tb = slurp(b);
        c.expect(!ta.empty() && ta == tb,
                 std::string(run.name) + " reports differ between runs");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: ratseries_acceptance <cli-binary> <scratch-dir>\n";
        return 2;
    }
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10(argv[1], argv[2]);

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion/criteria failed\n", failures);
    return 1;
}
