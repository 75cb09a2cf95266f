#pragma once

#include "zetaspiral/types.hpp"

namespace zs {

struct ChiEval {
    double modulus = 1.0;
    double arg_principal = 0.0;  // (-pi, pi]
    double arg_unwrapped = 0.0;
};

struct ChiComparison {
    double ratio_modulus = 1.0;  // |chi| / |chi~|
    double delta_phi = 0.0;      // Arg chi - Arg chi~, unwrapped
    double lambda = 0.0;         // delta_phi / mu(t)
};

// 1/(48t) + 1/(5760t^3) + 1/(80640t^5)
double mu(double t);

// (t/2)(log(t/2pi) - 1) - pi/8 + mu(t), unwrapped.
double theta(double t);

// 2 theta(t): the unwrapped |Arg chi(1/2 + it)|.
double Phi(double t);

ChiEval chi_approx(const StripPoint& s);

// zeta(s) / conj(zeta(1 - sigma + it)), both from the Euler-Maclaurin oracle.
ChiEval chi_exact(const StripPoint& s);

// Same ratio from already computed oracle values.
ChiEval chi_from_values(const StripPoint& s, std::complex<double> zeta_s,
                        std::complex<double> zeta_reflected);

ChiComparison chi_compare(const StripPoint& s);

// t(log(t/2pi) - 1) - pi/4 + lambda mu(t); lambda = 2 on the critical line,
// measured elsewhere.  Note alpha1 = -Arg chi, so the lambda used here is
// the negative of chi_compare's.
double alpha1(const StripPoint& s);

// chi as used by the vector system: closed-form modulus, argument -alpha1.
// No t >= 100 restriction; below that the measured argument is used as is.
ChiEval chi_model(const StripPoint& s);

}  // namespace zs
