#include "zetaspiral/angle.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace zs {

static_assert(std::numeric_limits<long double>::digits >= 64,
              "log_pair needs an extended long double for the low word");

namespace {

constexpr double kTwoPiHi = 6.283185307179586232e+00;
constexpr double kTwoPiMid = 2.449293598294706414e-16;
constexpr double kTwoPiLo = -5.989539619436679332e-33;
constexpr double kInvTwoPi = 0.15915494309189535;

constexpr std::size_t kTableSize = std::size_t{1} << 17;

LogPair compute_log_pair(std::uint64_t n)
{
    const long double l = std::log(static_cast<long double>(n));
    const double hi = static_cast<double>(l);
    return {hi, static_cast<double>(l - hi)};
}

const std::vector<LogPair>& log_table()
{
    static const std::vector<LogPair> table = [] {
        std::vector<LogPair> v(kTableSize);
        v[0] = {0.0, 0.0};
        for (std::size_t n = 1; n < kTableSize; ++n)
            v[n] = compute_log_pair(n);
        return v;
    }();
    return table;
}

}  // namespace

LogPair log_pair(std::uint64_t n)
{
    if (n < kTableSize)
        return log_table()[n];
    return compute_log_pair(n);
}

double reduce_2pi(double hi, double lo)
{
    const double k = std::nearbyint(hi * kInvTwoPi);
    double r = std::fma(-k, kTwoPiHi, hi);
    r = std::fma(-k, kTwoPiMid, r);
    r += lo - k * kTwoPiLo;
    if (r < 0.0)
        r += kTwoPiHi;
    if (r >= kTwoPiHi)
        r -= kTwoPiHi;
    return r;
}

double phase(double t, std::uint64_t n)
{
    if (n <= 1 || t == 0.0)
        return 0.0;
    const LogPair l = log_pair(n);
    const double p = t * l.hi;
    const double e = std::fma(t, l.hi, -p) + t * l.lo;
    return reduce_2pi(p, e);
}

}  // namespace zs
