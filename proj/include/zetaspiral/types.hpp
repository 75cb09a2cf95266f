#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zs {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Precondition violated by the caller (bad sizes, bad parameters).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Inside the domain, but outside the region a method supports (t < 2pi, ...).
struct UnsupportedRegion : DomainError {
    using DomainError::DomainError;
};

struct PoleError : DomainError {
    using DomainError::DomainError;
};

struct NearZeroDivision : DomainError {
    using DomainError::DomainError;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// s = sigma + i t.  t is never negative; t = 0 is allowed so that the
// oracle can be evaluated on the real axis (zeta(2) and friends).
struct StripPoint {
    double sigma = 0.5;
    double t = 0.0;

    StripPoint() = default;
    StripPoint(double sigma_, double t_) : sigma(sigma_), t(t_)
    {
        if (!std::isfinite(sigma) || !std::isfinite(t))
            throw DomainError("StripPoint: non-finite coordinate");
        if (t < 0.0)
            throw DomainError("StripPoint: t must be non-negative (use conjugation)");
    }

    std::complex<double> complex() const { return {sigma, t}; }
};

struct PlaneVector {
    double x = 0.0;
    double y = 0.0;

    PlaneVector() = default;
    constexpr PlaneVector(double x_, double y_) : x(x_), y(y_) {}
    explicit PlaneVector(std::complex<double> z) : x(z.real()), y(z.imag()) {}

    static PlaneVector polar(double r, double angle)
    {
        return {r * std::cos(angle), r * std::sin(angle)};
    }

    std::complex<double> complex() const { return {x, y}; }
    double norm() const { return std::hypot(x, y); }
    double arg() const { return std::atan2(y, x); }
    double dot(PlaneVector o) const { return x * o.x + y * o.y; }
    double cross(PlaneVector o) const { return x * o.y - y * o.x; }

    // Component along the unit direction at the given angle.
    double project(double angle) const
    {
        return x * std::cos(angle) + y * std::sin(angle);
    }

    PlaneVector& operator+=(PlaneVector o)
    {
        x += o.x;
        y += o.y;
        return *this;
    }
    PlaneVector& operator-=(PlaneVector o)
    {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    friend PlaneVector operator+(PlaneVector a, PlaneVector b) { return a += b; }
    friend PlaneVector operator-(PlaneVector a, PlaneVector b) { return a -= b; }
    friend PlaneVector operator*(double k, PlaneVector a) { return {k * a.x, k * a.y}; }
    friend bool operator==(PlaneVector a, PlaneVector b) = default;
};

// Wrap an angle into (-pi, pi].
inline double wrap_pi(double a)
{
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi)
        r += kTwoPi;
    return r;
}

// Wrap an angle into [0, 2pi).
inline double wrap_2pi(double a)
{
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi)
        r -= kTwoPi;
    return r;
}

}  // namespace zs
