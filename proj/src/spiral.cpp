#include "zetaspiral/spiral.hpp"

#include <algorithm>
#include <limits>

#include "zetaspiral/angle.hpp"

namespace zs {

PlaneVector term_vector(const StripPoint& s, std::uint64_t n)
{
    if (n == 0)
        throw PreconditionError("term_vector: n must be >= 1");
    if (n == 1)
        return {1.0, 0.0};
    const double mod = std::exp(-s.sigma * log_pair(n).hi);
    const double a = phase(s.t, n);
    return {mod * std::cos(a), -mod * std::sin(a)};
}

PlaneVector partial_sum(const StripPoint& s, std::uint64_t m)
{
    if (m == 0)
        throw PreconditionError("partial_sum: m must be >= 1");
    PlaneVector acc;
    for (std::uint64_t n = 1; n <= m; ++n)
        acc += term_vector(s, n);
    return acc;
}

std::vector<PlaneVector> partial_sums(const StripPoint& s, std::uint64_t m)
{
    if (m == 0)
        throw PreconditionError("partial_sums: m must be >= 1");
    std::vector<PlaneVector> out;
    out.reserve(m);
    PlaneVector acc;
    for (std::uint64_t n = 1; n <= m; ++n) {
        acc += term_vector(s, n);
        out.push_back(acc);
    }
    return out;
}

double curvature_radius(PlaneVector prev, PlaneVector cur)
{
    const double r = cur.norm();
    double c = prev.dot(cur) / (prev.norm() * r);
    c = std::clamp(c, -1.0, 1.0);
    const double sn = std::sqrt(1.0 - c * c);
    if (sn == 0.0)
        return c > 0 ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity();
    return r * c / sn;
}

std::vector<SpiralProfile> spiral_profile(const StripPoint& s, std::uint64_t n_max)
{
    if (n_max < 2)
        throw PreconditionError("spiral_profile: n_max must be >= 2");
    std::vector<SpiralProfile> out;
    out.reserve(n_max);
    PlaneVector acc;
    PlaneVector prev;
    double prev_phi = 0.0;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        SpiralProfile p;
        p.n = n;
        p.vector = term_vector(s, n);
        acc += p.vector;
        p.partial_sum = acc;
        p.phi = phase(s.t, n);
        if (n == 1) {
            p.dphi = 0.0;
            p.curvature_radius = std::numeric_limits<double>::infinity();
        } else {
            p.dphi = wrap_2pi(p.phi - prev_phi);
            p.curvature_radius = curvature_radius(prev, p.vector);
        }
        prev = p.vector;
        prev_phi = p.phi;
        out.push_back(p);
    }
    return out;
}

SingularPoints singular_points(double t)
{
    if (!(t > 0.0))
        throw DomainError("singular_points: t must be > 0");
    SingularPoints sp;
    for (int k = 1;; ++k) {
        const double v = t / ((2 * k - 1) * kPi);
        if (v < 1.0)
            break;
        sp.reverse.push_back(v);
    }
    for (int k = 1;; ++k) {
        const double v = t / (2 * k * kPi);
        if (v < 1.0)
            break;
        sp.inflection.push_back(v);
    }
    sp.count = std::sqrt(t / kTwoPi + 0.25);
    return sp;
}

}  // namespace zs
