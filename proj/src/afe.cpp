#include "zetaspiral/afe.hpp"

#include <numeric>

#include "zetaspiral/angle.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/spiral.hpp"

namespace zs {

namespace {

const double kSqrtTwoPi = std::sqrt(kTwoPi);

void check_strip(const StripPoint& s, const char* who)
{
    if (s.sigma < 0.0 || s.sigma > 1.0)
        throw DomainError(std::string(who) + ": sigma must lie in [0, 1]");
    if (s.t < kTwoPi)
        throw UnsupportedRegion(std::string(who) + ": t must be >= 2pi");
}

struct Line {
    double intercept = 0.0;
    double slope = 0.0;
    double rms = 0.0;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    if (n < 2)
        throw FitError("least squares: need at least two points");
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw FitError("least squares: degenerate abscissae");
    Line l;
    l.slope = sxy / sxx;
    l.intercept = my - l.slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (l.intercept + l.slope * x[i]);
        ss += r * r;
    }
    l.rms = std::sqrt(ss / n);
    return l;
}

// Y_n with the chi argument already reduced; a_red = 2 phi_L.
PlaneVector middle_vector_raw(const StripPoint& s, double chi_mod, double a_red, std::uint64_t n)
{
    const double mod = chi_mod * std::exp((s.sigma - 1.0) * log_pair(n).hi);
    return PlaneVector::polar(mod, a_red + phase(s.t, n));
}

double principal_half(double arg_unwrapped)
{
    return wrap_pi(reduce_2pi(0.5 * arg_unwrapped));
}

// Im chi'/chi(s) = Im[(pi/2) cot(pi s/2) - psi(1-s)]
double dargchi_dsigma(const StripPoint& s)
{
    const std::complex<double> z = s.complex();
    const std::complex<double> w = std::exp(std::complex<double>(0.0, kPi) * z);  // e^(2i pi s/2)
    const std::complex<double> cot = std::complex<double>(0.0, 1.0) * (w + 1.0) / (w - 1.0);
    return std::imag(0.5 * kPi * cot - digamma(1.0 - z));
}

}  // namespace

std::complex<double> digamma(std::complex<double> z)
{
    std::complex<double> acc(0.0, 0.0);
    while (std::abs(z) < 20.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    const std::complex<double> z2 = 1.0 / (z * z);
    // B_2k / (2k), k = 1..6
    const double c[] = {1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0,
                        -691.0 / 32760.0};
    std::complex<double> series(0.0, 0.0);
    std::complex<double> p = z2;
    for (double ck : c) {
        series += ck * p;
        p *= z2;
    }
    return acc + std::log(z) - 0.5 / z - series;
}

std::uint64_t afe_m(double t)
{
    if (t < kTwoPi)
        throw UnsupportedRegion("afe_m: t must be >= 2pi");
    auto m = static_cast<std::uint64_t>(std::floor(std::sqrt(t / kTwoPi)));
    while (kTwoPi * static_cast<double>((m + 1) * (m + 1)) <= t)
        ++m;
    while (m > 1 && kTwoPi * static_cast<double>(m * m) > t)
        --m;
    return m;
}

double rs_delta(double t)
{
    const auto m = afe_m(t);
    return std::sqrt(t) - (static_cast<double>(m) + 0.5) * kSqrtTwoPi;
}

double rs_factor(double u)
{
    const double den = std::cos(kSqrtTwoPi * u);
    const double num_arg = u * u + 3.0 * kPi / 8.0;
    if (std::abs(den) < 1e-6)
        return (2.0 * u * std::sin(num_arg)) / (kSqrtTwoPi * std::sin(kSqrtTwoPi * u));
    return std::cos(num_arg) / den;
}

PlaneVector middle_vector(const StripPoint& s, std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("middle_vector: n must be >= 1");
    if (s.t < 100.0)
        throw UnsupportedRegion("middle_vector: t must be >= 100");
    const ChiEval c = chi_model(s);
    const double phi_L = principal_half(c.arg_unwrapped);
    return middle_vector_raw(s, c.modulus, 2.0 * phi_L, n);
}

VectorSystem build_system(const StripPoint& s)
{
    check_strip(s, "build_system");
    VectorSystem sys;
    sys.s = s;
    sys.m = afe_m(s.t);
    const ChiEval c = chi_model(s);
    sys.phi_L = principal_half(c.arg_unwrapped);
    sys.phi_M = wrap_pi(sys.phi_L + 0.5 * kPi);
    const double a_red = 2.0 * sys.phi_L;
    sys.X.reserve(sys.m);
    sys.Y.reserve(sys.m);
    for (std::uint64_t n = 1; n <= sys.m; ++n) {
        sys.X.push_back(term_vector(s, n));
        sys.Y.push_back(middle_vector_raw(s, c.modulus, a_red, n));
    }
    sys.R_leading = remainder_leading(s);
    return sys;
}

Invariants invariants(const VectorSystem& sys)
{
    Invariants inv;
    for (const auto& v : sys.X)
        inv.L1 += v;
    for (const auto& v : sys.Y)
        inv.L2 += v;
    return inv;
}

PlaneVector remainder_leading(const StripPoint& s)
{
    if (s.t < kTwoPi)
        throw UnsupportedRegion("remainder_leading: t must be >= 2pi");
    const auto m = afe_m(s.t);
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^(m-1)
    const double mod = std::pow(s.t / kTwoPi, -0.5 * s.sigma);
    const double F = rs_factor(rs_delta(s.t));
    return PlaneVector::polar(sign * mod * F, -reduce_2pi(theta(s.t)));
}

PlaneVector remainder_empirical(const StripPoint& s)
{
    if (s.t < kTwoPi)
        throw UnsupportedRegion("remainder_empirical: t must be >= 2pi");
    const VectorSystem sys = build_system(s);
    const Invariants inv = invariants(sys);
    return euler_maclaurin_zeta(s).value - inv.L1 - inv.L2;
}

ZetaValue afe_zeta(const StripPoint& s)
{
    const VectorSystem sys = build_system(s);
    const Invariants inv = invariants(sys);
    ZetaValue z;
    z.method = Method::afe;
    z.value = inv.L1 + inv.L2 + sys.R_leading;
    z.est_error = std::pow(s.t / kTwoPi, -0.5 * s.sigma - 0.5);
    return z;
}

Decomposition decompose(const VectorSystem& sys, PlaneVector oracle_zeta)
{
    Decomposition d;
    d.zeta_L = oracle_zeta.project(sys.phi_L);
    d.zeta_M = oracle_zeta.project(sys.phi_M);
    double xm = 0.0, ym = 0.0;
    for (const auto& v : sys.X) {
        d.L1 += v;
        xm += v.project(sys.phi_M);
    }
    for (const auto& v : sys.Y) {
        d.L2 += v;
        ym += v.project(sys.phi_M);
    }
    d.delta_L = xm + ym;
    d.remainder = oracle_zeta - d.L1 - d.L2;
    double dp = wrap_pi(sys.phi_L - d.remainder.arg());
    if (dp > 0.5 * kPi)
        dp -= kPi;
    else if (dp <= -0.5 * kPi)
        dp += kPi;
    d.delta_phi_R = dp;
    d.delta_R = d.remainder.norm() * std::sin(dp);
    return d;
}

SymmetryReport symmetry_report(const StripPoint& s)
{
    if (s.t < 100.0)
        throw UnsupportedRegion("symmetry_report: t must be >= 100");
    const VectorSystem sys = build_system(s);
    SymmetryReport r;
    const double ax = sys.X[0].arg();
    const double ay = sys.Y[0].arg();
    for (std::size_t i = 0; i < sys.m; ++i) {
        const double c = wrap_pi((sys.Y[i].arg() - ay) + (sys.X[i].arg() - ax));
        r.conformal_residual = std::max(r.conformal_residual, std::abs(c));
        const double mm = sys.X[i].project(sys.phi_M) + sys.Y[i].project(sys.phi_M);
        r.mirror_residual = std::max(r.mirror_residual, std::abs(mm));
    }
    const auto z1 = euler_maclaurin_zeta(s).value;
    const auto z2 = euler_maclaurin_zeta(StripPoint(1.0 - s.sigma, s.t)).value;
    const double half = sys.phi_L;
    r.argument_residual = std::abs(wrap_pi((z1.arg() - half) + (z2.arg() - half)));
    return r;
}

double gradient_L2_M(const StripPoint& s, double h)
{
    if (s.t < 100.0)
        throw UnsupportedRegion("gradient_L2_M: t must be >= 100");
    if (h < 1e-7 || h > 1e-3)
        throw PreconditionError("gradient_L2_M: h must lie in [1e-7, 1e-3]");
    const VectorSystem sys = build_system(s);
    auto l2m = [&](double sigma) {
        const StripPoint p(sigma, s.t);
        const ChiEval c = chi_model(p);
        const double a_red = 2.0 * principal_half(c.arg_unwrapped);
        double acc = 0.0;
        for (std::uint64_t n = 1; n <= sys.m; ++n)
            acc += middle_vector_raw(p, c.modulus, a_red, n).project(sys.phi_M);
        return acc;
    };
    return (l2m(s.sigma + h) - l2m(s.sigma - h)) / (2.0 * h);
}

double gradient_L2_M_analytic(const StripPoint& s)
{
    if (s.t < 100.0)
        throw UnsupportedRegion("gradient_L2_M_analytic: t must be >= 100");
    const VectorSystem sys = build_system(s);
    const double dre = -std::log(s.t / kTwoPi);
    const double dim = dargchi_dsigma(s);
    double acc = 0.0;
    for (std::uint64_t n = 1; n <= sys.m; ++n) {
        const std::complex<double> y = sys.Y[n - 1].complex();
        const std::complex<double> dy = y * std::complex<double>(log_pair(n).hi + dre, dim);
        acc += PlaneVector(dy).project(sys.phi_M);
    }
    return acc;
}

double boundary_function(const StripPoint& s, double A)
{
    if (!(A > 0.0))
        throw PreconditionError("boundary_function: A must be > 0");
    if (s.t < kTwoPi)
        throw UnsupportedRegion("boundary_function: t must be >= 2pi");
    const auto m = afe_m(s.t);
    const double chi_mod = std::pow(s.t / kTwoPi, 0.5 - s.sigma);
    double sy = 0.0, sx = 0.0;
    for (std::uint64_t n = 1; n <= m; ++n) {
        const double l = log_pair(n).hi;
        sy += std::exp((s.sigma - 1.0) * l);
        sx += std::exp(-s.sigma * l);
    }
    return A * (chi_mod * sy / sx - 1.0);
}

CesaroWindow center_window(double t, int k)
{
    if (k < 1)
        throw PreconditionError("center_window: k must be >= 1");
    const std::uint64_t width = k == 1 ? 30 : (k == 2 ? 20 : 5);
    const double rp = t / ((2 * k - 1) * kPi);
    const double start = std::round(rp - 0.5 * static_cast<double>(width - 1));
    if (start < 1.0)
        throw FitError("center_window: reverse point too close to the origin");
    return CesaroWindow(static_cast<std::uint64_t>(start), width);
}

std::vector<PlaneVector> spiral_centers(const StripPoint& s, int count)
{
    if (count < 1)
        throw PreconditionError("spiral_centers: count must be >= 1");
    std::vector<CesaroWindow> windows;
    std::uint64_t last = 0;
    for (int k = 1; k <= count; ++k) {
        windows.push_back(center_window(s.t, k));
        last = std::max(last, windows.back().start_index + windows.back().width - 1);
    }
    const std::vector<PlaneVector> sums = partial_sums(s, last);
    std::vector<PlaneVector> centers;
    for (const auto& w : windows) {
        std::span<const PlaneVector> v(sums.data() + (w.start_index - 1), w.width);
        centers.push_back(binomial_average(v));
    }
    return centers;
}

MiddleVectorFit fit_middle_vectors(double t, const std::vector<double>& sigma_grid, int centers)
{
    if (t < 1000.0)
        throw UnsupportedRegion("fit_middle_vectors: t must be >= 1000");
    if (centers < 3 || centers > 8)
        throw FitError("fit_middle_vectors: centers must lie in [3, 8]");
    if (sigma_grid.size() < 2)
        throw FitError("fit_middle_vectors: need at least two sigma values");

    MiddleVectorFit fit;
    std::vector<double> logA;
    for (double sigma : sigma_grid) {
        const auto c = spiral_centers(StripPoint(sigma, t), centers);
        std::vector<double> ln, lm;
        for (int n = 1; n < centers; ++n) {
            ln.push_back(std::log(static_cast<double>(n)));
            lm.push_back(std::log((c[n - 1] - c[n]).norm()));
        }
        const Line l = least_squares(ln, lm);
        fit.per_sigma.push_back({sigma, std::exp(l.intercept), l.slope, l.rms});
        logA.push_back(l.intercept);
    }
    const Line la = least_squares(sigma_grid, logA);
    fit.A = fit.per_sigma.front().A;
    fit.B = fit.per_sigma.front().B;
    fit.C = std::exp(la.intercept);
    fit.D = la.slope;
    fit.E2 = fit.C * fit.C / t;
    fit.rms_A = la.rms;
    return fit;
}

ScaleFit fit_modulus_scale(const std::vector<double>& t_grid)
{
    if (t_grid.size() < 2)
        throw FitError("fit_modulus_scale: need at least two t values");
    std::vector<double> lt, lc;
    double pinned = 0.0;
    for (double t : t_grid) {
        if (t < 1000.0)
            throw UnsupportedRegion("fit_modulus_scale: t must be >= 1000");
        const auto c = spiral_centers(StripPoint(0.0, t), 2);
        const double C = (c[0] - c[1]).norm();
        lt.push_back(std::log(t));
        lc.push_back(std::log(C));
        pinned += std::log(C) - 0.5 * std::log(t);
    }
    const Line l = least_squares(lt, lc);
    ScaleFit f;
    f.E = std::exp(l.intercept);
    f.F = l.slope;
    f.E2 = std::exp(2.0 * pinned / static_cast<double>(t_grid.size()));
    f.rms = l.rms;
    return f;
}

}  // namespace zs
