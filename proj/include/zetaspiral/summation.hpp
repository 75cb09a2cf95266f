#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "zetaspiral/types.hpp"

namespace zs {

enum class Method { partial_sum, cesaro, euler_maclaurin, afe };

std::string_view method_name(Method m);
Method parse_method(std::string_view name);

struct CesaroWindow {
    std::uint64_t start_index = 1;  // first partial-sum vertex S_start
    std::uint64_t width = 2;        // number of vertices

    CesaroWindow() = default;
    CesaroWindow(std::uint64_t start, std::uint64_t w);

    // start = ceil(t/pi), width = 30 below t = 1000 and 10 above.
    static CesaroWindow automatic(double t);
};

struct ZetaValue {
    PlaneVector value;
    Method method = Method::euler_maclaurin;
    double est_error = 0.0;
};

// Iterated midpoints of consecutive points until one is left.
PlaneVector midpoint_scheme(std::span<const PlaneVector> vertices);

// sum_k C(w-1, k) v_k / 2^(w-1).
PlaneVector binomial_average(std::span<const PlaneVector> vertices);

ZetaValue cesaro_zeta(const StripPoint& s, std::optional<CesaroWindow> window = std::nullopt,
                      bool consult_oracle = false);

ZetaValue partial_sum_zeta(const StripPoint& s, std::uint64_t m);

ZetaValue euler_maclaurin_zeta(const StripPoint& s);

// Same formula with an explicit cutoff N (>= 2); used for self-consistency checks.
ZetaValue euler_maclaurin_zeta(const StripPoint& s, std::uint64_t cutoff);

// zeta at sigma + i t for any real t (negative t through conjugation).
std::complex<double> zeta(double sigma, double t);

// B_k for even k in [2, 24].
double bernoulli(int k);

}  // namespace zs
