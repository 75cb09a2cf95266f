#pragma once

#include <cstdint>
#include <vector>

#include "zetaspiral/summation.hpp"
#include "zetaspiral/types.hpp"

namespace zs {

struct VectorSystem {
    StripPoint s;
    std::uint64_t m = 0;
    std::vector<PlaneVector> X;
    std::vector<PlaneVector> Y;
    PlaneVector R_leading;
    double phi_L = 0.0;  // Arg chi / 2, principal
    double phi_M = 0.0;  // phi_L + pi/2, principal
};

struct Invariants {
    PlaneVector L1;  // sum X_n
    PlaneVector L2;  // sum Y_n
};

struct Decomposition {
    double zeta_L = 0.0;
    double zeta_M = 0.0;
    PlaneVector L1;
    PlaneVector L2;
    PlaneVector remainder;  // oracle zeta - L1 - L2
    double delta_L = 0.0;
    double delta_R = 0.0;
    double delta_phi_R = 0.0;  // folded into (-pi/2, pi/2]
};

struct SymmetryReport {
    double conformal_residual = 0.0;
    double mirror_residual = 0.0;    // meaningful at sigma = 1/2
    double argument_residual = 0.0;
};

struct PowerFit {
    double sigma = 0.0;
    double A = 0.0;  // |Y_n| ~ A n^B
    double B = 0.0;
    double rms = 0.0;
};

struct MiddleVectorFit {
    std::vector<PowerFit> per_sigma;
    double A = 0.0;  // per_sigma.front()
    double B = 0.0;
    double C = 0.0;  // A(sigma) ~ C e^(D sigma)
    double D = 0.0;
    double E2 = 0.0;  // C^2 / t
    double rms_A = 0.0;
};

struct ScaleFit {
    double E = 0.0;  // C(t) ~ E t^F
    double F = 0.0;
    double E2 = 0.0;  // exp(2 mean(log C - log t / 2)), F pinned to 1/2
    double rms = 0.0;
};

// floor(sqrt(t/2pi)), adjusted so that t lies in [2pi m^2, 2pi (m+1)^2).
std::uint64_t afe_m(double t);

// cos(u^2 + 3pi/8) / cos(sqrt(2pi) u) with the removable singularities filled in.
double rs_factor(double u);

// sqrt(t) - (m + 1/2) sqrt(2pi)
double rs_delta(double t);

PlaneVector middle_vector(const StripPoint& s, std::uint64_t n);

VectorSystem build_system(const StripPoint& s);

Invariants invariants(const VectorSystem& sys);

PlaneVector remainder_leading(const StripPoint& s);

PlaneVector remainder_empirical(const StripPoint& s);

// zeta(s) ~ L1 + L2 + R_leading; est_error is the size of the first
// omitted term, (t/2pi)^(-sigma/2 - 1/2).
ZetaValue afe_zeta(const StripPoint& s);

Decomposition decompose(const VectorSystem& sys, PlaneVector oracle_zeta);

SymmetryReport symmetry_report(const StripPoint& s);

// Central difference of (L2)_M in sigma, M-axis frozen at s.
double gradient_L2_M(const StripPoint& s, double h);

// d/dsigma of Y_n = chi(s) n^(s-1): Y_n (log n - log(t/2pi) + i d Arg chi/dsigma),
// with d Arg chi/dsigma = Im chi'/chi from the digamma function.
double gradient_L2_M_analytic(const StripPoint& s);

double boundary_function(const StripPoint& s, double A);

// Spiral centers at the first `count` reverse points, each a binomial
// average over a window centred on t/((2k-1)pi).  Widths 30, 20, then 5.
std::vector<PlaneVector> spiral_centers(const StripPoint& s, int count);

// Window used for the k-th center (k >= 1).
CesaroWindow center_window(double t, int k);

MiddleVectorFit fit_middle_vectors(double t, const std::vector<double>& sigma_grid,
                                   int centers = 6);

// |Y_1| at sigma = 0 from the first two centers, fitted over t.
ScaleFit fit_modulus_scale(const std::vector<double>& t_grid);

// Complex digamma, asymptotic series after upward recurrence.
std::complex<double> digamma(std::complex<double> z);

}  // namespace zs
