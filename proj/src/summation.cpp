#include "zetaspiral/summation.hpp"

#include <array>
#include <string>
#include <vector>

#include "zetaspiral/angle.hpp"
#include "zetaspiral/spiral.hpp"

namespace zs {

namespace {

// B_2 .. B_26; the last entry only feeds the error estimate.
constexpr std::array<double, 13> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

constexpr int kCorrections = 12;  // through B_24

// n^-s with the phase reduced in double-double.
std::complex<double> power_minus_s(const StripPoint& s, std::uint64_t n)
{
    const PlaneVector v = term_vector(s, n);
    return {v.x, v.y};
}

}  // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::partial_sum: return "partial_sum";
    case Method::cesaro: return "cesaro";
    case Method::euler_maclaurin: return "euler_maclaurin";
    case Method::afe: return "afe";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    for (Method m : {Method::partial_sum, Method::cesaro, Method::euler_maclaurin, Method::afe})
        if (method_name(m) == name)
            return m;
    throw PreconditionError("unknown method: " + std::string(name));
}

CesaroWindow::CesaroWindow(std::uint64_t start, std::uint64_t w) : start_index(start), width(w)
{
    if (start < 1)
        throw PreconditionError("CesaroWindow: start_index must be >= 1");
    if (w < 2)
        throw PreconditionError("CesaroWindow: width must be >= 2");
}

CesaroWindow CesaroWindow::automatic(double t)
{
    const auto start = static_cast<std::uint64_t>(std::ceil(t / kPi));
    return CesaroWindow(std::max<std::uint64_t>(start, 1), t < 1000.0 ? 30 : 10);
}

PlaneVector midpoint_scheme(std::span<const PlaneVector> vertices)
{
    if (vertices.size() < 2)
        throw PreconditionError("midpoint_scheme: need at least two vertices");
    std::vector<PlaneVector> v(vertices.begin(), vertices.end());
    for (std::size_t len = v.size(); len > 1; --len)
        for (std::size_t i = 0; i + 1 < len; ++i)
            v[i] = {0.5 * (v[i].x + v[i + 1].x), 0.5 * (v[i].y + v[i + 1].y)};
    return v[0];
}

PlaneVector binomial_average(std::span<const PlaneVector> vertices)
{
    if (vertices.empty())
        throw PreconditionError("binomial_average: empty vertex list");
    const std::size_t n = vertices.size() - 1;
    PlaneVector acc;
    if (n <= 1000) {
        // C(n,0)/2^n, then C(n,k+1) = C(n,k) (n-k)/(k+1).
        double c = std::ldexp(1.0, -static_cast<int>(n));
        for (std::size_t k = 0; k <= n; ++k) {
            acc += c * vertices[k];
            c = c * static_cast<double>(n - k) / static_cast<double>(k + 1);
        }
        return acc;
    }
    const double nn = static_cast<double>(n);
    const double base = std::lgamma(nn + 1.0) - nn * std::log(2.0);
    for (std::size_t k = 0; k <= n; ++k) {
        const double kk = static_cast<double>(k);
        const double w = std::exp(base - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0));
        acc += w * vertices[k];
    }
    return acc;
}

ZetaValue cesaro_zeta(const StripPoint& s, std::optional<CesaroWindow> window, bool consult_oracle)
{
    if (s.sigma < 0.0)
        throw UnsupportedRegion("cesaro_zeta: sigma must be >= 0");
    if (s.t < kTwoPi)
        throw UnsupportedRegion("cesaro_zeta: t must be >= 2pi (no reverse point below)");
    const CesaroWindow w = window ? *window : CesaroWindow::automatic(s.t);

    std::vector<PlaneVector> vertices;
    vertices.reserve(w.width);
    PlaneVector acc;
    const std::uint64_t last = w.start_index + w.width - 1;
    for (std::uint64_t n = 1; n <= last; ++n) {
        acc += term_vector(s, n);
        if (n >= w.start_index)
            vertices.push_back(acc);
    }

    ZetaValue out;
    out.method = Method::cesaro;
    out.value = binomial_average(vertices);
    if (consult_oracle) {
        out.est_error = (out.value - euler_maclaurin_zeta(s).value).norm();
    } else {
        out.est_error = std::ldexp((vertices.back() - vertices.front()).norm(),
                                   -static_cast<int>(std::min<std::uint64_t>(w.width - 1, 1000)));
    }
    return out;
}

ZetaValue partial_sum_zeta(const StripPoint& s, std::uint64_t m)
{
    ZetaValue out;
    out.method = Method::partial_sum;
    out.value = partial_sum(s, m);
    out.est_error = term_vector(s, m).norm();
    return out;
}

ZetaValue euler_maclaurin_zeta(const StripPoint& s, std::uint64_t cutoff)
{
    if (s.sigma == 1.0 && s.t == 0.0)
        throw PoleError("euler_maclaurin_zeta: pole at s = 1");
    if (cutoff < 2)
        throw PreconditionError("euler_maclaurin_zeta: cutoff must be >= 2");

    const std::complex<double> z = s.complex();
    const std::uint64_t N = cutoff;
    const double logN = std::log(static_cast<double>(N));

    std::complex<double> head(0.0, 0.0);
    for (std::uint64_t n = 1; n < N; ++n)
        head += power_minus_s(s, n);

    const std::complex<double> nms = power_minus_s(s, N);  // N^-s
    std::complex<double> tail = nms * (static_cast<double>(N) / (z - 1.0)) + 0.5 * nms;

    // T_j = B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1)
    std::complex<double> rising = z;  // s(s+1)...(s+2j-2)
    double fact = 2.0;                // (2j)!
    double npow = std::exp(-logN);    // N^(-2j+1)
    double omitted = 0.0;
    for (int j = 1; j <= kCorrections + 1; ++j) {
        const std::complex<double> term = kBernoulli[j - 1] / fact * rising * npow * nms;
        if (j <= kCorrections)
            tail += term;
        else
            omitted = std::abs(term);
        rising *= (z + static_cast<double>(2 * j - 1)) * (z + static_cast<double>(2 * j));
        fact *= static_cast<double>(2 * j + 1) * static_cast<double>(2 * j + 2);
        npow *= std::exp(-2.0 * logN);
    }

    ZetaValue out;
    out.method = Method::euler_maclaurin;
    out.value = PlaneVector(head + tail);
    out.est_error = omitted;
    return out;
}

ZetaValue euler_maclaurin_zeta(const StripPoint& s)
{
    const auto N = std::max<std::uint64_t>(50, static_cast<std::uint64_t>(std::ceil(s.t)));
    return euler_maclaurin_zeta(s, N);
}

std::complex<double> zeta(double sigma, double t)
{
    if (t < 0.0)
        return std::conj(euler_maclaurin_zeta(StripPoint(sigma, -t)).value.complex());
    return euler_maclaurin_zeta(StripPoint(sigma, t)).value.complex();
}

double bernoulli(int k)
{
    if (k < 2 || k > 24 || k % 2 != 0)
        throw DomainError("bernoulli: k must be even and in [2, 24]");
    return kBernoulli[k / 2 - 1];
}

}  // namespace zs
