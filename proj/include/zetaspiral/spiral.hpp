#pragma once

#include <cstdint>
#include <vector>

#include "zetaspiral/types.hpp"

namespace zs {

struct SpiralProfile {
    std::uint64_t n = 1;
    PlaneVector vector;
    PlaneVector partial_sum;
    double phi = 0.0;               // (t log n) mod 2pi
    double dphi = 0.0;              // (phi_n - phi_{n-1}) mod 2pi; 0 for n = 1
    double curvature_radius = 0.0;  // signed; +-inf when cos(dphi) = +-1
};

struct SingularPoints {
    std::vector<double> reverse;     // t / ((2k-1) pi), k = 1, 2, ...
    std::vector<double> inflection;  // t / (2k pi)
    double count = 0.0;              // sqrt(t/2pi + 1/4)
};

// X_n = n^-s as (n^-sigma cos(t log n), -n^-sigma sin(t log n)).
PlaneVector term_vector(const StripPoint& s, std::uint64_t n);

// X_1 + ... + X_m, accumulated left to right.
PlaneVector partial_sum(const StripPoint& s, std::uint64_t m);

// All partial sums S_1..S_m (S_k = S_{k-1} + X_k, bit-identical to partial_sum).
std::vector<PlaneVector> partial_sums(const StripPoint& s, std::uint64_t m);

// Radius of curvature at vertex n from the vector and the cosine of the
// angle to its predecessor; +-inf at cos = +-1.
double curvature_radius(PlaneVector prev, PlaneVector cur);

std::vector<SpiralProfile> spiral_profile(const StripPoint& s, std::uint64_t n_max);

SingularPoints singular_points(double t);

}  // namespace zs
