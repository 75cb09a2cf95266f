#include "zetaspiral/chi.hpp"

#include "zetaspiral/summation.hpp"

namespace zs {

namespace {

double approx_arg(double t)
{
    return -(t * (std::log(t / kTwoPi) - 1.0) - kPi / 4.0);
}

void require_positive_t(double t, const char* who)
{
    if (!(t > 0.0))
        throw DomainError(std::string(who) + ": t must be > 0");
}

}  // namespace

double mu(double t)
{
    require_positive_t(t, "mu");
    const double t2 = t * t;
    return 1.0 / (48.0 * t) + 1.0 / (5760.0 * t * t2) + 1.0 / (80640.0 * t * t2 * t2);
}

double theta(double t)
{
    require_positive_t(t, "theta");
    return 0.5 * t * (std::log(t / kTwoPi) - 1.0) - kPi / 8.0 + mu(t);
}

double Phi(double t)
{
    return 2.0 * theta(t);
}

ChiEval chi_approx(const StripPoint& s)
{
    require_positive_t(s.t, "chi_approx");
    ChiEval c;
    c.modulus = std::pow(s.t / kTwoPi, 0.5 - s.sigma);
    c.arg_unwrapped = approx_arg(s.t);
    c.arg_principal = wrap_pi(c.arg_unwrapped);
    return c;
}

ChiEval chi_from_values(const StripPoint& s, std::complex<double> zeta_s,
                        std::complex<double> zeta_reflected)
{
    require_positive_t(s.t, "chi_exact");
    const std::complex<double> den = std::conj(zeta_reflected);
    if (std::abs(den) < 1e-12)
        throw NearZeroDivision("chi_exact: zeta(1-s) is numerically zero");
    const std::complex<double> q = zeta_s / den;
    ChiEval c;
    c.modulus = std::abs(q);
    c.arg_principal = std::arg(q);
    if (c.arg_principal == -kPi)
        c.arg_principal = kPi;
    const double base = approx_arg(s.t);
    c.arg_unwrapped = base + wrap_pi(c.arg_principal - base);
    return c;
}

ChiEval chi_exact(const StripPoint& s)
{
    require_positive_t(s.t, "chi_exact");
    const auto a = euler_maclaurin_zeta(s).value.complex();
    const auto b = euler_maclaurin_zeta(StripPoint(1.0 - s.sigma, s.t)).value.complex();
    return chi_from_values(s, a, b);
}

ChiComparison chi_compare(const StripPoint& s)
{
    if (s.t < 100.0)
        throw UnsupportedRegion("chi_compare: t must be >= 100");
    const ChiEval ex = chi_exact(s);
    const ChiEval ap = chi_approx(s);
    ChiComparison c;
    c.ratio_modulus = ex.modulus / ap.modulus;
    c.delta_phi = wrap_pi(ex.arg_principal - ap.arg_principal);
    c.lambda = c.delta_phi / mu(s.t);
    return c;
}

double alpha1(const StripPoint& s)
{
    if (s.t < 100.0)
        throw UnsupportedRegion("alpha1: t must be >= 100");
    return -chi_model(s).arg_unwrapped;
}

ChiEval chi_model(const StripPoint& s)
{
    require_positive_t(s.t, "chi_model");
    ChiEval c;
    c.modulus = std::pow(s.t / kTwoPi, 0.5 - s.sigma);
    if (s.sigma == 0.5) {
        c.arg_unwrapped = approx_arg(s.t) - 2.0 * mu(s.t);
    } else {
        // -alpha1 with the measured lambda is exactly Arg chi~ + delta_phi.
        const ChiEval ex = chi_exact(s);
        c.arg_unwrapped = approx_arg(s.t) + wrap_pi(ex.arg_principal - wrap_pi(approx_arg(s.t)));
    }
    c.arg_principal = wrap_pi(c.arg_unwrapped);
    return c;
}

}  // namespace zs
