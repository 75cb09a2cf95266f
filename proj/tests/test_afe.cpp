#include <doctest.h>

#include "zetaspiral/afe.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/spiral.hpp"
#include "zetaspiral/zeros.hpp"

using namespace zs;

namespace {

Decomposition decompose_at(const StripPoint& s)
{
    return decompose(build_system(s), euler_maclaurin_zeta(s).value);
}

double zeta_M(double sigma, double t)
{
    return decompose_at(StripPoint(sigma, t)).zeta_M;
}

double fold_pi(double a)
{
    double r = wrap_pi(a);
    if (r > kPi / 2)
        r -= kPi;
    if (r <= -kPi / 2)
        r += kPi;
    return r;
}

}  // namespace

TEST_CASE("m and the interval law")
{
    CHECK(afe_m(5002.981) == 28);
    CHECK(afe_m(kTwoPi * 81.0) == 9);
    CHECK(afe_m(std::nextafter(kTwoPi * 81.0, 0.0)) == 8);
    CHECK(afe_m(kTwoPi) == 1);
    const VectorSystem sys = build_system(StripPoint(0.3, 5002.981));
    CHECK(sys.m == 28);
    CHECK(sys.X.size() == 28);
    CHECK(sys.Y.size() == 28);
    CHECK_THROWS_AS(build_system(StripPoint(0.5, 6.0)), UnsupportedRegion);
    CHECK_THROWS_AS(build_system(StripPoint(1.5, 600.0)), DomainError);
}

TEST_CASE("remainder factor")
{
    CHECK(rs_delta(5002.981) == doctest::Approx(-0.70715199604842983).epsilon(1e-12));
    const double u0 = std::sqrt(kPi / 8.0);
    CHECK(rs_factor(u0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(rs_factor(-u0) == doctest::Approx(0.5).epsilon(1e-9));
    for (double du : {1e-9, -1e-9, 1e-7, -1e-7, 1e-5, -1e-5})
        CHECK(rs_factor(u0 + du) == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(rs_factor(0.0) == doctest::Approx(std::cos(3.0 * kPi / 8.0)));
    // F(delta) is the classical Psi(p), p = frac(sqrt(t/2pi))
    for (double t : {1000.3, 5002.981, 7777.7}) {
        const double r = std::sqrt(t / kTwoPi);
        const double p = r - std::floor(r);
        const double psi = std::cos(kTwoPi * (p * p - p - 1.0 / 16.0)) / std::cos(kTwoPi * p);
        CHECK(rs_factor(rs_delta(t)) == doctest::Approx(psi).epsilon(1e-9));
    }
}

TEST_CASE("middle vectors")
{
    const StripPoint half(0.5, 4321.0);
    for (std::uint64_t n : {1ull, 2ull, 10ull, 26ull})
        CHECK(middle_vector(half, n).norm() == doctest::Approx(1.0 / std::sqrt(double(n))).epsilon(1e-12));
    CHECK(middle_vector(StripPoint(0.0, 5000.0), 1).norm() == doctest::Approx(28.209479177387814).epsilon(1e-12));

    // angle(Y_n) - angle(Y_1) = +t log n, angle(X_n) - angle(X_1) = -t log n
    const StripPoint s(0.3, 2000.0);
    for (std::uint64_t n = 2; n <= 17; ++n) {
        const double dy = wrap_pi(middle_vector(s, n).arg() - middle_vector(s, 1).arg());
        const double dx = wrap_pi(term_vector(s, n).arg() - term_vector(s, 1).arg());
        const double tl = wrap_pi(s.t * std::log(double(n)));
        CHECK(std::abs(wrap_pi(dy - tl)) < 1e-10);
        CHECK(std::abs(wrap_pi(dx + tl)) < 1e-10);
    }
    CHECK_THROWS_AS(middle_vector(StripPoint(0.5, 50.0), 1), UnsupportedRegion);
    CHECK_THROWS_AS(middle_vector(s, 0), PreconditionError);
}

TEST_CASE("vector system axes")
{
    const VectorSystem sys = build_system(StripPoint(0.7, 3000.0));
    CHECK(std::abs(wrap_pi(sys.phi_M - sys.phi_L - kPi / 2)) < 1e-15);
    const ChiEval c = chi_model(StripPoint(0.7, 3000.0));
    CHECK(std::abs(wrap_pi(2.0 * sys.phi_L - c.arg_unwrapped)) < 1e-10);

    const VectorSystem h = build_system(StripPoint(0.5, 3000.0));
    for (std::size_t i = 0; i < h.m; ++i) {
        CHECK(std::abs(h.X[i].norm() - 1.0 / std::sqrt(double(i + 1))) < 1e-12);
        CHECK(std::abs(h.Y[i].norm() - 1.0 / std::sqrt(double(i + 1))) < 1e-12);
    }
}

TEST_CASE("second approximate equation reproduces zeta")
{
    for (double t : {5002.981, 5050.5, 7000.25}) {
        const StripPoint s(0.5, t);
        const ZetaValue a = afe_zeta(s);
        const PlaneVector z = euler_maclaurin_zeta(s).value;
        CHECK((a.value - z).norm() < 0.05 * std::pow(t / kTwoPi, -0.25));
        CHECK((a.value - z).norm() < 10.0 * a.est_error);
    }
}

TEST_CASE("remainder: leading term, empirical value, half-angle relation")
{
    const StripPoint s(0.5, 5002.981);
    const VectorSystem sys = build_system(s);
    CHECK(std::abs(fold_pi(sys.R_leading.arg() - sys.phi_L)) < 1e-9);

    const double scale = std::pow(5000.0 / kTwoPi, -0.25);
    CHECK(scale == doctest::Approx(0.188).epsilon(0.01));
    int checked = 0;
    for (double t = 5000.0; t < 5100.0; t += 1.37) {
        const StripPoint p(0.5, t);
        const PlaneVector emp = remainder_empirical(p);
        const PlaneVector lead = remainder_leading(p);
        CHECK(emp.norm() < 2.0 * scale);
        const VectorSystem q = build_system(p);
        if (std::abs(rs_factor(rs_delta(t))) > 0.2) {
            ++checked;
            CHECK((emp - lead).norm() / lead.norm() < 0.1);
            CHECK(std::abs(fold_pi(q.phi_L - emp.arg())) < 2e-3);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("decompose on the critical line")
{
    const StripPoint s(0.5, 5002.981);
    const VectorSystem sys = build_system(s);
    const Decomposition d = decompose(sys, euler_maclaurin_zeta(s).value);
    CHECK(std::abs(d.delta_L) < 1e-12 * double(sys.m));
    const double zabs = euler_maclaurin_zeta(s).value.norm();
    CHECK(std::abs(d.zeta_M) < 1e-8 * (1.0 + zabs));
    CHECK(std::abs(d.delta_phi_R) < 2e-3);
    CHECK(d.delta_phi_R > -kPi / 2);
    CHECK(d.delta_phi_R <= kPi / 2);
    // Z is the L projection
    CHECK(d.zeta_L == doctest::Approx(Z(5002.981)).epsilon(1e-10));
}

TEST_CASE("delta_phi_R is linear in sigma")
{
    for (double t : {5000.0, 5005.8024663246}) {
        std::vector<double> x, y;
        for (int i = 0; i <= 10; ++i) {
            x.push_back(0.1 * i);
            y.push_back(decompose_at(StripPoint(0.1 * i, t)).delta_phi_R);
        }
        const double mx = 0.5;
        double my = 0.0;
        for (double v : y)
            my += v / 11.0;
        double sxy = 0, sxx = 0, syy = 0;
        for (int i = 0; i <= 10; ++i) {
            sxy += (x[i] - mx) * (y[i] - my);
            sxx += (x[i] - mx) * (x[i] - mx);
            syy += (y[i] - my) * (y[i] - my);
        }
        const double r2 = sxy * sxy / (sxx * syy);
        CHECK(r2 > 0.99);
        CHECK(std::abs(y[5]) < 1e-6);
    }
}

TEST_CASE("symmetry report")
{
    const SymmetryReport a = symmetry_report(StripPoint(0.5, 5002.981));
    CHECK(a.conformal_residual < 1e-12);
    CHECK(a.mirror_residual < 1e-12);
    const SymmetryReport b = symmetry_report(StripPoint(0.35, 5005.8024855));
    CHECK(b.conformal_residual < 1e-12);
    CHECK(b.argument_residual < 1e-6);
    CHECK_THROWS_AS(symmetry_report(StripPoint(0.5, 50.0)), UnsupportedRegion);
}

TEST_CASE("gradient of L2 along M")
{
    const StripPoint s(0.3, 1234.5);
    const double g4 = gradient_L2_M(s, 1e-4);
    const double g5 = gradient_L2_M(s, 1e-5);
    const double g6 = gradient_L2_M(s, 1e-6);
    CHECK(std::abs(g5 - g4) < 0.01 * std::abs(g4));
    CHECK(std::abs(g6 - g4) < 0.01 * std::abs(g4));
    const double an = gradient_L2_M_analytic(s);
    CHECK(std::abs(g4 - an) < 1e-5 * (1.0 + std::abs(an)));
    CHECK_THROWS_AS(gradient_L2_M(s, 1e-2), PreconditionError);
    CHECK_THROWS_AS(gradient_L2_M(StripPoint(0.3, 50.0), 1e-4), UnsupportedRegion);
}

TEST_CASE("gradient sign is kept at the zeta_M = 0 points for symmetric sigma")
{
    struct Case {
        double t0;
        double sign;
    };
    // near the zeros at 5006.208381106 (positive) and 5001.889773627 (negative)
    for (const Case c : {Case{5006.48, 1.0}, Case{5001.41, -1.0}}) {
        for (double sigma : {0.35, 0.25}) {
            double tm[2];
            const double sg[2] = {sigma, 1.0 - sigma};
            for (int j = 0; j < 2; ++j) {
                const auto r = refine_zero([&](double t) { return zeta_M(sg[j], t); }, c.t0 - 0.05,
                                           c.t0 + 0.05, 1e-10);
                REQUIRE(std::abs(zeta_M(sg[j], r.t)) < 1e-6);
                tm[j] = r.t;
            }
            CHECK(std::abs(tm[0] - tm[1]) < 1e-8);
            const double ga = gradient_L2_M(StripPoint(sg[0], tm[0]), 1e-5);
            const double gb = gradient_L2_M(StripPoint(sg[1], tm[1]), 1e-5);
            CHECK(ga * c.sign > 0.0);
            CHECK(gb * c.sign > 0.0);
        }
    }
}

TEST_CASE("boundary function")
{
    CHECK(boundary_function(StripPoint(0.5, 5000.0), 0.5) == doctest::Approx(0.0));
    for (double sigma : {0.0, 0.2, 0.45})
        CHECK(boundary_function(StripPoint(sigma, 5000.0), 0.5) > 0.0);
    for (double sigma : {0.55, 0.8, 1.0})
        CHECK(boundary_function(StripPoint(sigma, 5000.0), 0.5) < 0.0);
    CHECK_THROWS_AS(boundary_function(StripPoint(0.3, 5000.0), 0.0), PreconditionError);
}

TEST_CASE("boundary function separates delta_L and delta_R at the zeta_L = 0 ordinate")
{
    const auto r = refine_zero([](double t) { return decompose_at(StripPoint(0.35, t)).zeta_L; },
                               5006.1, 5006.3, 1e-10);
    CHECK(r.t == doctest::Approx(5006.186).epsilon(1e-6));
    for (int i = 0; i <= 20; ++i) {
        if (i == 10)
            continue;
        const StripPoint s(0.05 * i, r.t);
        const Decomposition d = decompose_at(s);
        const double F = boundary_function(s, 0.5);
        INFO("sigma=" << s.sigma);
        CHECK(std::abs(d.delta_L) >= std::abs(F));
        CHECK(std::abs(F) >= std::abs(d.delta_R));
    }
}

TEST_CASE("zero condition")
{
    const double t0 = 5006.208381106211;
    const StripPoint s(0.5, t0);
    const VectorSystem sys = build_system(s);
    const Invariants inv = invariants(sys);
    const PlaneVector R = remainder_empirical(s);
    CHECK((inv.L1 + inv.L2 + R).norm() < 1e-9);
    CHECK(std::abs(inv.L1.norm() - inv.L2.norm()) < 1e-12);
}

TEST_CASE("middle vector fit at t = 5000")
{
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i)
        grid.push_back(0.1 * i);
    const MiddleVectorFit f = fit_middle_vectors(5000.0, grid);
    CHECK(std::abs(2.0 * std::log(f.C) - 6.678) < 0.01);
    CHECK(f.C == doctest::Approx(std::sqrt(5000.0 / kTwoPi)).epsilon(1e-3));
    CHECK(std::abs(f.E2 - 1.0 / kTwoPi) < 2e-4);
    CHECK(f.D == doctest::Approx(-std::log(5000.0 / kTwoPi)).epsilon(1e-3));
    for (const auto& p : f.per_sigma)
        CHECK(p.B == doctest::Approx(p.sigma - 1.0).epsilon(0.01));
    CHECK(f.per_sigma.size() == grid.size());

    CHECK_THROWS_AS(fit_middle_vectors(500.0, grid), UnsupportedRegion);
    CHECK_THROWS_AS(fit_middle_vectors(5000.0, grid, 2), FitError);
    CHECK_THROWS_AS(fit_middle_vectors(5000.0, grid, 9), FitError);
    CHECK_THROWS_AS(fit_middle_vectors(5000.0, {0.5}), FitError);
}

TEST_CASE("modulus scale across t identifies E^2 with 1/(2pi)")
{
    const ScaleFit f = fit_modulus_scale({1000, 2000, 3000, 4000, 5000, 6000, 7000, 8000, 9000});
    CHECK(std::abs(f.E2 - 0.1591547) < 1e-4);
    CHECK(std::abs(f.E2 - 1.0 / kTwoPi) < 1e-8);
    CHECK(f.F == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("digamma")
{
    // psi(1) = -gamma, psi(1/2) = -gamma - 2 log 2
    const double g = 0.57721566490153286;
    CHECK(std::abs(digamma({1.0, 0.0}) - std::complex<double>(-g, 0.0)) < 1e-14);
    CHECK(std::abs(digamma({0.5, 0.0}) - std::complex<double>(-g - 2.0 * std::log(2.0), 0.0)) < 1e-14);
    // Im psi(1/2 + iy) = (pi/2) tanh(pi y)
    CHECK(std::imag(digamma({0.5, 2.0})) == doctest::Approx(kPi / 2 * std::tanh(2.0 * kPi)).epsilon(1e-13));
}
