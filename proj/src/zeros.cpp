#include "zetaspiral/zeros.hpp"

#include <algorithm>
#include <thread>

#include "zetaspiral/afe.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/summation.hpp"

namespace zs {

std::string_view kind_name(BaseKind k)
{
    return k == BaseKind::a1 ? "a1" : "a2";
}

std::string_view kind_name(IntervalKind k)
{
    switch (k) {
    case IntervalKind::A1: return "A1";
    case IntervalKind::A2: return "A2";
    case IntervalKind::B: return "B";
    case IntervalKind::C: return "C";
    }
    return "?";
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& f)
{
    const std::size_t workers =
        std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(n, (w + 1) * chunk);
                for (std::size_t i = w * chunk; i < end; ++i)
                    f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

double Z(double t, ZMethod method)
{
    if (method == ZMethod::afe) {
        if (t < kTwoPi)
            throw UnsupportedRegion("Z(afe): t must be >= 2pi");
        const VectorSystem sys = build_system(StripPoint(0.5, t));
        const Invariants inv = invariants(sys);
        return (inv.L1 + inv.L2 + sys.R_leading).project(sys.phi_L);
    }
    if (!(t > 1.0))
        throw DomainError("Z(oracle): t must be > 1");
    const std::complex<double> z = euler_maclaurin_zeta(StripPoint(0.5, t)).value.complex();
    const double th = theta(t);
    return std::real(std::polar(1.0, th) * z);
}

double solve_phi(double target)
{
    double lo = kTwoPi;
    if (Phi(lo) >= target)
        throw DomainError("solve_phi: target below Phi(2pi)");
    double hi = 40.0;
    while (Phi(hi) < target)
        hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (Phi(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return std::abs(Phi(lo) - target) <= std::abs(Phi(hi) - target) ? lo : hi;
}

BasePoint base_point(std::int64_t k)
{
    if (k < 0)
        throw DomainError("base_point: k must be >= 0");
    BasePoint b;
    b.k = k;
    b.t = solve_phi((2.0 * static_cast<double>(k) + 1.0) * kPi);
    const double im = euler_maclaurin_zeta(StripPoint(0.5, b.t)).value.y;
    b.kind = (im < 0.0 && std::abs(im) >= 1e-12) ? BaseKind::a2 : BaseKind::a1;
    return b;
}

std::int64_t base_points_below(double T)
{
    if (T <= kTwoPi)
        return 0;
    const double p = Phi(T) / kPi;
    if (p < 1.0)
        return 0;
    return static_cast<std::int64_t>(std::floor((p - 1.0) / 2.0)) + 1;
}

double gram_point(std::int64_t n)
{
    if (n < 1)
        throw DomainError("gram_point: n must be >= 1");
    return solve_phi(2.0 * static_cast<double>(n - 1) * kPi);
}

IntervalKind interval_kind(BaseKind left, BaseKind right)
{
    if (left == BaseKind::a1)
        return right == BaseKind::a1 ? IntervalKind::A1 : IntervalKind::C;
    return right == BaseKind::a2 ? IntervalKind::A2 : IntervalKind::B;
}

int expected_zeros(IntervalKind k)
{
    switch (k) {
    case IntervalKind::B: return 2;
    case IntervalKind::C: return 0;
    default: return 1;
    }
}

bool forbidden_adjacency(IntervalKind left, IntervalKind right)
{
    using K = IntervalKind;
    return (left == K::A1 && right == K::A2) || (left == K::A2 && right == K::A1) ||
           (left == K::B && right == K::B) || (left == K::C && right == K::C);
}

namespace {

std::vector<double> scan_grid(double t_lo, double t_hi, double step)
{
    const auto n = static_cast<std::size_t>(std::floor((t_hi - t_lo) / step));
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        grid.push_back(t_lo + static_cast<double>(i) * step);
    if (!grid.empty() && t_hi - grid.back() < 1e-3 * step)
        grid.pop_back();
    grid.push_back(t_hi);
    return grid;
}

void check_scan(double t_lo, double t_hi, double step)
{
    if (!(t_lo > kTwoPi) || !(t_hi > t_lo))
        throw DomainError("scan: need 2pi < t_lo < t_hi");
    if (!(step > 0.0) || step > 0.25)
        throw PreconditionError("scan: step must lie in (0, 0.25]");
}

bool negative(double v)
{
    return v < 0.0;
}

}  // namespace

ZeroRecord refine_zero(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo >= tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const double fm = f(mid);
        if (negative(fm) == negative(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    ZeroRecord r;
    r.lo = lo;
    r.hi = hi;
    r.t = 0.5 * (lo + hi);
    r.residual = std::abs(f(r.t));
    return r;
}

std::vector<ZeroRecord> find_zeros(double t_lo, double t_hi, double step, int threads)
{
    check_scan(t_lo, t_hi, step);
    const std::vector<double> grid = scan_grid(t_lo, t_hi, step);
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = Z(grid[i]); });

    std::vector<std::size_t> brackets;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (negative(values[i]) != negative(values[i + 1]))
            brackets.push_back(i);

    std::vector<ZeroRecord> zeros(brackets.size());
    auto f = [](double t) { return Z(t); };
    parallel_for(brackets.size(), threads, [&](std::size_t j) {
        const std::size_t i = brackets[j];
        zeros[j] = refine_zero(f, grid[i], grid[i + 1]);
    });
    return zeros;
}

std::int64_t count_sign_changes(double t_lo, double t_hi, double step, int threads)
{
    check_scan(t_lo, t_hi, step);
    const std::vector<double> grid = scan_grid(t_lo, t_hi, step);
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = Z(grid[i]); });
    std::int64_t count = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        count += negative(values[i]) != negative(values[i + 1]);
    return count;
}

std::vector<double> sample_Z(double t_lo, double t_hi, double step, int threads, ZMethod method)
{
    check_scan(t_lo, t_hi, step);
    const std::vector<double> grid = scan_grid(t_lo, t_hi, step);
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = Z(grid[i], method); });
    return values;
}

std::vector<IntervalRecord> classify_intervals(std::int64_t k_lo, std::int64_t k_hi, double step,
                                               int threads)
{
    if (k_lo < 0 || k_hi <= k_lo)
        throw PreconditionError("classify_intervals: need 0 <= k_lo < k_hi");
    const std::size_t n = static_cast<std::size_t>(k_hi - k_lo) + 1;
    std::vector<BasePoint> bp(n);
    parallel_for(n, threads, [&](std::size_t i) {
        bp[i] = base_point(k_lo + static_cast<std::int64_t>(i));
    });
    std::vector<IntervalRecord> out(n - 1);
    parallel_for(n - 1, threads, [&](std::size_t i) {
        IntervalRecord& r = out[i];
        r.from_k = bp[i].k;
        r.kind = interval_kind(bp[i].kind, bp[i + 1].kind);
        r.zeros = find_zeros(bp[i].t, bp[i + 1].t, step, 1);
        r.consistent = static_cast<int>(r.zeros.size()) == expected_zeros(r.kind);
    });
    return out;
}

std::int64_t grammar_violations(const std::vector<IntervalRecord>& records)
{
    std::int64_t bad = 0;
    for (std::size_t i = 0; i + 1 < records.size(); ++i)
        bad += forbidden_adjacency(records[i].kind, records[i + 1].kind);
    return bad;
}

std::int64_t count_zeros_line(double T)
{
    const double t2 = base_point(1).t;
    if (!(T > t2))
        throw DomainError("count_zeros_line: T must exceed the second base point");
    const double alpha2 = Phi(t2);
    const double x = T / kTwoPi * (std::log(T / kTwoPi) - 1.0) - 0.125 +
                     (2.0 * mu(T) - alpha2) / kTwoPi;
    return static_cast<std::int64_t>(std::floor(std::abs(x))) + 2;
}

RvM riemann_von_mangoldt(double T)
{
    if (!(T > std::exp(1.0)))
        throw DomainError("riemann_von_mangoldt: T must exceed e");
    RvM r;
    r.n = T / kTwoPi * (std::log(T / kTwoPi) - 1.0) + 0.875;
    r.s_bound = 1.998 + 0.17 * std::log(T);
    return r;
}

Census zero_census(double T, double step, int threads)
{
    Census c;
    c.T = T;
    c.N0 = count_zeros_line(T);
    c.sign_changes = count_sign_changes(kCensusStart, T, step, threads);
    c.base_points = base_points_below(T);
    const RvM r = riemann_von_mangoldt(T);
    c.rvm_main = r.n;
    c.s_bound = r.s_bound;
    return c;
}

}  // namespace zs
