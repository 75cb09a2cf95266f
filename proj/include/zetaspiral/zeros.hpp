#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "zetaspiral/types.hpp"

namespace zs {

enum class BaseKind { a1, a2 };
enum class IntervalKind { A1, A2, B, C };
enum class ZMethod { oracle, afe };

std::string_view kind_name(BaseKind k);
std::string_view kind_name(IntervalKind k);

// Base points are numbered from 0: Phi(t_k) = (2k + 1) pi, so t_0 ~ 20.65
// and t_4520 ~ 5001.0995.
struct BasePoint {
    std::int64_t k = 0;
    double t = 0.0;
    BaseKind kind = BaseKind::a1;
};

struct ZeroRecord {
    double t = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double residual = 0.0;
};

struct IntervalRecord {
    std::int64_t from_k = 0;
    IntervalKind kind = IntervalKind::A1;
    std::vector<ZeroRecord> zeros;
    bool consistent = true;  // zero count matches 1/1/2/0
};

struct Census {
    double T = 0.0;
    std::int64_t N0 = 0;
    std::int64_t sign_changes = 0;
    std::int64_t base_points = 0;
    double rvm_main = 0.0;
    double s_bound = 0.0;
};

struct RvM {
    double n = 0.0;
    double s_bound = 0.0;
};

double Z(double t, ZMethod method = ZMethod::oracle);

// Root of Phi(t) = target on (2pi, inf), Phi increasing there.
double solve_phi(double target);

BasePoint base_point(std::int64_t k);

// Number of base points t_k <= T.
std::int64_t base_points_below(double T);

// theta(g_n) = (n - 1) pi, n >= 1.
double gram_point(std::int64_t n);

IntervalKind interval_kind(BaseKind left, BaseKind right);
int expected_zeros(IntervalKind k);
bool forbidden_adjacency(IntervalKind left, IntervalKind right);

// Intervals (t_k, t_{k+1}) for k in [k_lo, k_hi).
std::vector<IntervalRecord> classify_intervals(std::int64_t k_lo, std::int64_t k_hi,
                                               double step = 0.01, int threads = 1);

std::int64_t grammar_violations(const std::vector<IntervalRecord>& records);

// Z on the grid t_lo + i*step (last point t_hi), evaluated in parallel.
std::vector<double> sample_Z(double t_lo, double t_hi, double step, int threads = 1,
                             ZMethod method = ZMethod::oracle);

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, double step, int threads = 1);

std::int64_t count_sign_changes(double t_lo, double t_hi, double step, int threads = 1);

// Bisection of a sign change of f on [lo, hi] down to width < tol.
ZeroRecord refine_zero(const std::function<double(double)>& f, double lo, double hi,
                       double tol = 1e-10);

std::int64_t count_zeros_line(double T);

RvM riemann_von_mangoldt(double T);

// Sign changes of Z on (scan_start, T], with the counting formulas alongside.
Census zero_census(double T, double step = 0.05, int threads = 1);

// Lower end of the census scan; Z has no sign change below the first zero.
inline constexpr double kCensusStart = 10.0;

// Call f(i) for i in [0, n) on `threads` workers over contiguous chunks.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f);

}  // namespace zs
