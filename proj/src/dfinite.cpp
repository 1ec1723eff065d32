#include "ratseries/dfinite.hpp"

#include "ratseries/detail/polyroots.hpp"
#include "ratseries/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace ratseries {

PRecurrence recurrence_from_ode(const std::vector<IntPoly>& p) {
    bool all_zero = true;
    for (const auto& pi : p) all_zero = all_zero && pi.is_zero();
    if (p.empty() || all_zero)
        throw DegenerateEquation("recurrence_from_ode: all coefficient polynomials are zero");

    // coefficient of z^m in z^j f^{(i)} is ff(m+i-j, i) a_{m+i-j} with
    // ff(t, i) = t(t-1)...(t-i+1); terms with m < j vanish through the
    // falling factorial, and negative series indices count as zero
    int shift_min = 0, shift_max = 0;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j <= p[i].degree(); ++j) {
            if (p[i].coeff(j) == 0) continue;
            int sigma = static_cast<int>(i) - j;
            if (first) {
                shift_min = shift_max = sigma;
                first = false;
            } else {
                shift_min = std::min(shift_min, sigma);
                shift_max = std::max(shift_max, sigma);
            }
        }
    }

    PRecurrence rec;
    rec.shift_min = shift_min;
    rec.coeffs.assign(shift_max - shift_min + 1, IntPoly());
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (int j = 0; j <= p[i].degree(); ++j) {
            const BigInt& pij = p[i].coeff(j);
            if (pij == 0) continue;
            int sigma = static_cast<int>(i) - j;
            // ff(m + sigma, i) as a polynomial in m
            IntPoly ff = IntPoly::constant(1);
            for (std::size_t l = 0; l < i; ++l)
                ff = ff * IntPoly({sigma - static_cast<long long>(l), 1});
            rec.coeffs[sigma - shift_min] = rec.coeffs[sigma - shift_min] + ff * pij;
        }
    }
    while (!rec.coeffs.empty() && rec.coeffs.back().is_zero()) rec.coeffs.pop_back();
    while (!rec.coeffs.empty() && rec.coeffs.front().is_zero()) {
        rec.coeffs.erase(rec.coeffs.begin());
        ++rec.shift_min;
    }
    if (rec.coeffs.empty())
        throw DegenerateEquation("recurrence_from_ode: recurrence collapsed to 0 = 0");
    return rec;
}

IntSeries1D GeneratedSeries::as_int_series() const {
    if (first_non_integer)
        throw NonIntegerCoefficient("series has non-integer coefficient at index " +
                                    std::to_string(*first_non_integer));
    std::vector<BigInt> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = numerator(values[i]);
    return IntSeries1D(std::move(out));
}

GeneratedSeries generate_coeffs(const PRecurrence& rec, const std::vector<BigRat>& initials,
                                std::size_t N) {
    const int smax = rec.shift_max();
    if (static_cast<int>(initials.size()) < rec.offset())
        throw std::invalid_argument("generate_coeffs: initials cover " +
                                    std::to_string(initials.size()) +
                                    " indices, recurrence offset is " +
                                    std::to_string(rec.offset()));
    GeneratedSeries out;
    out.values.assign(N + 1, BigRat(0));
    for (std::size_t t = 0; t <= N; ++t) {
        if (t < initials.size()) {
            out.values[t] = initials[t];
        } else {
            const long long m = static_cast<long long>(t) - smax;  // >= 0 here
            BigInt lead = rec.leading().eval_int(BigInt(m));
            if (lead == 0)
                throw SingularIndex("generate_coeffs: leading recurrence coefficient "
                                    "vanishes at index " + std::to_string(t) +
                                    " and no initial value is provided");
            BigRat acc = 0;
            for (int u = 0; u + 1 < static_cast<int>(rec.coeffs.size()); ++u) {
                long long idx = m + rec.shift_min + u;
                if (idx < 0) continue;
                if (rec.coeffs[u].is_zero()) continue;
                acc += BigRat(rec.coeffs[u].eval_int(BigInt(m))) *
                       out.values[static_cast<std::size_t>(idx)];
            }
            out.values[t] = -acc / BigRat(lead);
        }
        if (!out.first_non_integer && !is_integer(out.values[t]))
            out.first_non_integer = t;
    }
    return out;
}

// ---- complex polynomial / rational helpers ---------------------------------

ComplexPoly ComplexPoly::from_intpoly(const IntPoly& p) {
    ComplexPoly out;
    out.c.reserve(p.degree() + 1);
    for (int k = 0; k <= p.degree(); ++k)
        out.c.emplace_back(static_cast<double>(p.coeff(k)), 0.0);
    if (out.c.empty()) out.c.emplace_back(0.0, 0.0);
    return out;
}

ComplexPoly ComplexPoly::constant(Complex v) {
    ComplexPoly out;
    out.c = {v};
    return out;
}

Complex ComplexPoly::eval(Complex z) const {
    Complex acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

std::vector<Complex> ComplexPoly::taylor_at(Complex z0, std::size_t len) const {
    std::vector<Complex> work(c);
    if (work.empty()) work.push_back(0.0);
    // in-place Taylor shift by repeated synthetic division
    const std::size_t d = work.size() - 1;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = d - 1; i + 1 > k; --i) work[i] += z0 * work[i + 1];
    work.resize(std::max<std::size_t>(len, 1), Complex(0.0));
    work.resize(len);
    return work;
}

ComplexRational ComplexRational::constant(Complex v) {
    return {ComplexPoly::constant(v), ComplexPoly::constant(1.0)};
}

Complex ComplexRational::eval(Complex z) const { return num.eval(z) / den.eval(z); }

std::vector<Complex> ComplexRational::taylor_at(Complex z0, std::size_t len) const {
    std::vector<Complex> n = num.taylor_at(z0, len);
    std::vector<Complex> d = den.taylor_at(z0, len);
    if (std::abs(d[0]) == 0.0)
        throw PathOutsideDomain("ComplexRational: expansion point is a pole of a "
                                "coefficient entry");
    std::vector<Complex> q(len);
    for (std::size_t k = 0; k < len; ++k) {
        Complex acc = n[k];
        for (std::size_t j = 1; j <= k; ++j) acc -= d[j] * q[k - j];
        q[k] = acc / d[0];
    }
    return q;
}

double ComplexRational::singularity_distance(Complex z0) const {
    if (den.c.size() <= 1) return std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    for (Complex r : detail::poly_roots(den.c)) best = std::min(best, std::abs(r - z0));
    return best;
}

OdeSystem OdeSystem::constant(const std::vector<std::vector<Complex>>& matrix,
                              std::vector<Complex> initial) {
    OdeSystem sys;
    sys.dim = matrix.size();
    sys.A.resize(sys.dim);
    for (std::size_t i = 0; i < sys.dim; ++i) {
        if (matrix[i].size() != sys.dim)
            throw std::invalid_argument("OdeSystem::constant: matrix not square");
        for (Complex v : matrix[i]) sys.A[i].push_back(ComplexRational::constant(v));
    }
    if (initial.size() != sys.dim)
        throw std::invalid_argument("OdeSystem::constant: initial vector size mismatch");
    sys.initial = std::move(initial);
    return sys;
}

namespace {

double vec_norm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (Complex x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

OdeResult ode_continue(const OdeSystem& sys, const std::vector<Complex>& path,
                       const OdeOptions& opts) {
    if (path.empty()) throw std::invalid_argument("ode_continue: empty path");
    if (sys.dim == 0 || sys.initial.size() != sys.dim)
        throw std::invalid_argument("ode_continue: inconsistent system");
    if (std::abs(path.front() - sys.center) > 1e-12 * (1.0 + std::abs(sys.center)))
        throw std::invalid_argument("ode_continue: path must start at the system center");
    for (Complex p : path)
        if (std::abs(p - sys.center) > sys.radius * (1.0 + 1e-12))
            throw PathOutsideDomain("ode_continue: waypoint outside the declared disc");

    const std::size_t deg = std::max<std::size_t>(3, opts.taylor_degree);
    OdeResult res;
    res.value = sys.initial;

    for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
        const Complex a = path[seg], b = path[seg + 1];
        const double seg_len = std::abs(b - a);
        if (seg_len == 0.0) continue;
        const Complex dir = (b - a) / seg_len;
        double done = 0.0;
        // the tolerance absorbs float residue in the accumulated arc length
        while (seg_len - done > 1e-13 * seg_len) {
            const Complex pos = a + done * dir;

            // Taylor coefficients of every entry at pos
            std::vector<std::vector<std::vector<Complex>>> At(sys.dim);
            double radius = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < sys.dim; ++i) {
                At[i].resize(sys.dim);
                for (std::size_t j = 0; j < sys.dim; ++j) {
                    At[i][j] = sys.A[i][j].taylor_at(pos, deg);
                    radius = std::min(radius, sys.A[i][j].singularity_distance(pos));
                }
            }

            // solution coefficients: (k+1) c_{k+1} = sum_l A_l c_{k-l}
            std::vector<std::vector<Complex>> c(deg + 1,
                                                std::vector<Complex>(sys.dim, Complex(0.0)));
            c[0] = res.value;
            for (std::size_t k = 0; k < deg; ++k) {
                for (std::size_t i = 0; i < sys.dim; ++i) {
                    Complex acc = 0.0;
                    for (std::size_t l = 0; l <= k; ++l)
                        for (std::size_t j = 0; j < sys.dim; ++j)
                            acc += At[i][j][l] * c[k - l][j];
                    c[k + 1][i] = acc / static_cast<double>(k + 1);
                }
            }

            double h = std::min({seg_len - done, opts.max_step, opts.safety * radius});
            const double scale = std::max(1.0, vec_norm(res.value));
            const double tail_hi = vec_norm(c[deg]);
            const double tail_lo = vec_norm(c[deg - 1]);
            double tail = 0.0;
            for (;; h *= 0.5) {
                if (h < 1e-13 * (1.0 + std::abs(pos)))
                    throw StepFailure("ode_continue: step size underflow; local error "
                                      "target " + std::to_string(opts.tol) + " unreachable");
                tail = tail_hi * std::pow(h, static_cast<double>(deg)) +
                       tail_lo * std::pow(h, static_cast<double>(deg - 1));
                if (tail <= opts.tol * scale) break;
            }

            const Complex dz = h * dir;
            std::vector<Complex> next(sys.dim, Complex(0.0));
            for (std::size_t i = 0; i < sys.dim; ++i) {
                Complex acc = 0.0;
                for (std::size_t k = deg + 1; k-- > 0;) acc = acc * dz + c[k][i];
                next[i] = acc;
            }
            res.value = std::move(next);
            res.residual_sum += tail;
            ++res.steps;
            done += h;
        }
    }
    return res;
}

OdeSystem companion_system(const std::vector<IntPoly>& q, Complex center) {
    if (q.size() < 2)
        throw std::invalid_argument("companion_system: need order >= 1 (q_0..q_s, s >= 1)");
    const std::size_t s = q.size() - 1;
    const IntPoly& lead = q.back();
    if (lead.is_zero())
        throw LeadingCoeffVanishes("companion_system: q_s is the zero polynomial");
    if (std::abs(lead.eval(center)) == 0.0)
        throw LeadingCoeffVanishes("companion_system: q_s vanishes at the disc center");

    OdeSystem sys;
    sys.dim = s;
    sys.center = center;
    sys.A.assign(s, std::vector<ComplexRational>(s, ComplexRational::constant(0.0)));
    for (std::size_t l = 0; l + 1 < s; ++l) sys.A[l][l + 1] = ComplexRational::constant(1.0);
    for (std::size_t k = 0; k < s; ++k) {
        ComplexRational entry;
        entry.num = ComplexPoly::from_intpoly(-q[k]);
        entry.den = ComplexPoly::from_intpoly(lead);
        sys.A[s - 1][k] = std::move(entry);
    }
    sys.initial.assign(s, Complex(0.0));
    return sys;
}

// ---- D-finite systems and the pipeline -------------------------------------

namespace {

void validate_system(const DFiniteSystem& sys) {
    if (sys.equations.empty() || sys.equations.size() > 2)
        throw std::invalid_argument("DFiniteSystem: need one or two equations");
    for (const auto& eq : sys.equations) {
        bool all_zero = true;
        for (const auto& c : eq) all_zero = all_zero && c.is_zero();
        if (eq.empty() || all_zero)
            throw DegenerateEquation("DFiniteSystem: an equation has all-zero coefficients");
        if (eq.back().is_zero())
            throw DegenerateEquation("DFiniteSystem: leading coefficient identically zero");
    }
}

}  // namespace

GeneratedSeries dfinite_series(const DFiniteSystem& sys, std::size_t N) {
    validate_system(sys);
    if (sys.equations.size() != 1)
        throw std::invalid_argument("dfinite_series: univariate systems only");
    if (sys.initials.empty())
        throw std::invalid_argument("dfinite_series: no initial coefficients");
    PRecurrence rec = recurrence_from_ode(sys.equations[0]);
    std::vector<BigRat> init;
    for (const auto& v : sys.initials[0]) init.emplace_back(v);
    return generate_coeffs(rec, init, N);
}

BiSeries dfinite_table(const DFiniteSystem& sys, std::size_t N) {
    validate_system(sys);
    if (sys.equations.size() != 2)
        throw std::invalid_argument("dfinite_table: need equations in both variables");
    PRecurrence rec_z = recurrence_from_ode(sys.equations[0]);
    PRecurrence rec_w = recurrence_from_ode(sys.equations[1]);

    const std::size_t seed_rows = sys.initials.size();
    if (static_cast<int>(seed_rows) < rec_z.offset())
        throw std::invalid_argument("dfinite_table: initial block has " +
                                    std::to_string(seed_rows) + " rows, z-recurrence needs " +
                                    std::to_string(rec_z.offset()));
    for (const auto& row : sys.initials)
        if (static_cast<int>(row.size()) < rec_w.offset())
            throw std::invalid_argument("dfinite_table: initial block row shorter than the "
                                        "w-recurrence offset " +
                                        std::to_string(rec_w.offset()));

    // extend the seed rows along w, then every column along z
    std::vector<std::vector<BigRat>> table(N + 1);
    std::optional<std::pair<std::size_t, std::size_t>> non_integer;
    for (std::size_t j = 0; j < std::min<std::size_t>(seed_rows, N + 1); ++j) {
        std::vector<BigRat> row_init;
        for (const auto& v : sys.initials[j]) row_init.emplace_back(v);
        GeneratedSeries row = generate_coeffs(rec_w, row_init, N);
        if (row.first_non_integer && !non_integer)
            non_integer = {j, *row.first_non_integer};
        table[j] = std::move(row.values);
    }
    for (std::size_t j = std::min<std::size_t>(seed_rows, N + 1); j <= N; ++j)
        table[j].assign(N + 1, BigRat(0));
    if (seed_rows <= N) {
        for (std::size_t k = 0; k <= N; ++k) {
            std::vector<BigRat> col_init(seed_rows);
            for (std::size_t j = 0; j < seed_rows; ++j) col_init[j] = table[j][k];
            GeneratedSeries col = generate_coeffs(rec_z, col_init, N);
            if (col.first_non_integer && !non_integer)
                non_integer = {*col.first_non_integer, k};
            for (std::size_t j = seed_rows; j <= N; ++j) table[j][k] = col.values[j];
        }
    }

    for (std::size_t j = 0; j <= N; ++j)
        for (std::size_t k = 0; j + k <= N; ++k)
            if (!is_integer(table[j][k]))
                throw NonIntegerCoefficient(
                    "dfinite_table: non-integer coefficient at (" + std::to_string(j) + "," +
                    std::to_string(k) + "); the integer-coefficient hypothesis fails");

    return BiSeries::generate(static_cast<int>(N), [&](int j, int k) {
        return numerator(table[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    });
}

namespace {

double radius_root_test(const BiSeries& f, bool along_z) {
    const int N = f.truncation_order();
    double worst_slope = 0.0;
    for (int j = std::max(1, N / 2); j <= N; ++j) {
        double best = 0.0;
        bool any = false;
        for (int k = 0; j + k <= N; ++k) {
            const BigInt& a = along_z ? f.coeff(j, k) : f.coeff(k, j);
            if (a == 0) continue;
            any = true;
            BigInt mag = boost::multiprecision::abs(a);
            double dm = mag.convert_to<double>();
            double la = std::isfinite(dm)
                            ? std::log(dm)
                            : static_cast<double>(boost::multiprecision::msb(mag) + 1) *
                                  std::numbers::ln2;
            best = std::max(best, la);
        }
        if (any) worst_slope = std::max(worst_slope, best / j);
    }
    return std::exp(-worst_slope);
}

IntSeries1D theta0_slice(const BiSeries& f, int n, std::size_t N) {
    RestrictionFamily fam = restriction_polys(f, n, static_cast<int>(N));
    std::vector<BigInt> s(N + 1);
    for (std::size_t v = 0; v <= N; ++v) s[v] = fam.pv[v].eval_int(BigInt(1));
    return IntSeries1D(std::move(s));
}

PipelineReport run_pipeline(const BiSeries& f, const PipelineOptions& opts) {
    if (opts.N < 2 * opts.m_hi)
        throw std::invalid_argument("bell_chen_pipeline: N must be at least 2*m_hi");
    PipelineReport rep;
    rep.criterion = criterion_test(f, opts.n, opts.m_lo, opts.m_hi);
    rep.radius_estimate_z = radius_root_test(f, true);
    rep.radius_estimate_w = radius_root_test(f, false);
    rep.radius_warning = rep.radius_estimate_z < 0.98 || rep.radius_estimate_w < 0.98;

    if (rep.criterion.verdict == CriterionVerdict::RationalEvidence) {
        IntSeries1D slice = theta0_slice(f, opts.n, opts.N);
        std::size_t d0 = std::max<std::size_t>(1, rep.criterion.onset_m.value_or(1));
        std::string last_err = "no degree bound attempted";
        for (std::size_t d = d0; d <= d0 + 3 && 2 * d + 1 <= opts.N; ++d) {
            try {
                RationalFn fit = reconstruct_rational(slice, d);
                IntSeries1D re = expand_rational(fit, opts.N);
                bool match = true;
                for (std::size_t v = 0; v <= opts.N; ++v)
                    if (re.coeff(v) != slice.coeff(v)) {
                        match = false;
                        break;
                    }
                if (!match) {
                    last_err = "expansion mismatch beyond the matched window at d = " +
                               std::to_string(d);
                    continue;
                }
                rep.slice0 = std::move(fit);
                rep.slice_degree = d;
                break;
            } catch (const Error& e) {
                last_err = e.what();
            }
        }
        if (!rep.slice0)
            throw NoRationalFit("bell_chen_pipeline: slice reconstruction failed (" +
                                last_err + ")");
    }
    return rep;
}

}  // namespace

PipelineReport bell_chen_pipeline(const BiSeries& f, const PipelineOptions& opts) {
    return run_pipeline(f, opts);
}

PipelineReport bell_chen_pipeline(const DFiniteSystem& sys, const PipelineOptions& opts) {
    BiSeries f = dfinite_table(sys, opts.N);
    PipelineReport rep = run_pipeline(f, opts);

    if (opts.continuation_demo && sys.equations.size() == 2 &&
        sys.equations[1].size() >= 2) {
        // continuation of the w-slice system from an interior anchor to a
        // point just outside the unit circle, along two different paths
        ContinuationDemo& demo = rep.continuation;
        demo.attempted = true;
        demo.z0 = Complex(0.3, 0.0);
        demo.w_end = Complex(0.0, 1.05);
        try {
            OdeSystem ode = companion_system(sys.equations[1], Complex(0.0));
            const std::size_t s = ode.dim;
            // y_l(z0, 0) = (d/dw)^{l-1} f (z0, 0) = sum_j a_{j,l-1} (l-1)! z0^j
            double fact = 1.0;
            for (std::size_t l = 0; l < s; ++l) {
                if (l > 0) fact *= static_cast<double>(l);
                Complex acc = 0.0;
                for (int j = f.truncation_order() - static_cast<int>(l); j >= 0; --j)
                    acc = acc * demo.z0 + static_cast<double>(f.coeff(j, static_cast<int>(l)));
                ode.initial[l] = acc * fact;
            }
            OdeResult direct = ode_continue(ode, {Complex(0.0), demo.w_end});
            OdeResult detour =
                ode_continue(ode, {Complex(0.0), Complex(-0.4, 0.4), demo.w_end});
            demo.path_disagreement = 0.0;
            for (std::size_t l = 0; l < s; ++l)
                demo.path_disagreement =
                    std::max(demo.path_disagreement, std::abs(direct.value[l] - detour.value[l]));
            demo.residual = direct.residual_sum + detour.residual_sum;
            demo.ok = demo.path_disagreement < 1e-8;
            demo.note = "continued across |w| = 1 along two paths";
        } catch (const Error& e) {
            demo.ok = false;
            demo.note = e.what();
        }
    }
    return rep;
}

}  // namespace ratseries
