#include "figures.hpp"

#include <functional>
#include <map>

#include "zetaspiral/afe.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/cli.hpp"
#include "zetaspiral/spiral.hpp"
#include "zetaspiral/summation.hpp"
#include "zetaspiral/zeros.hpp"

namespace zs::cli {

namespace {

constexpr double kT1 = 279.229250928;
constexpr double kT7 = 959.459168807;
constexpr double kT28 = 5002.981;
constexpr double kTOrdinate = 5006.186;

Series polyline_of(const std::string& name, const std::vector<PlaneVector>& pts, bool from_origin)
{
    Series s;
    s.name = name;
    if (from_origin) {
        s.x.push_back(0.0);
        s.y.push_back(0.0);
    }
    for (const auto& p : pts) {
        s.x.push_back(p.x);
        s.y.push_back(p.y);
    }
    return s;
}

Series point(const std::string& name, PlaneVector v)
{
    Series s;
    s.name = name;
    s.x = {v.x};
    s.y = {v.y};
    s.scatter = true;
    return s;
}

Figure spiral_figure(const std::string& id, double sigma, double t, std::uint64_t count)
{
    const StripPoint s(sigma, t);
    Figure f;
    f.id = id;
    f.title = "Partial sums of n^-s, s = " + num(sigma) + " + " + num(t) + "i";
    f.xlabel = "Re";
    f.ylabel = "Im";
    f.equal_aspect = true;
    f.series.push_back(polyline_of("partial sums", partial_sums(s, count), true));
    f.series.push_back(point("zeta(s)", euler_maclaurin_zeta(s).value));
    return f;
}

Figure profile_figure(const std::string& id, double sigma, double t, int which)
{
    const StripPoint s(sigma, t);
    const auto count = static_cast<std::uint64_t>(std::ceil(t / kPi));
    const auto prof = spiral_profile(s, count);
    Figure f;
    f.id = id;
    f.xlabel = "n";
    Series ser;
    ser.scatter = which == 2;
    for (const auto& p : prof) {
        ser.x.push_back(static_cast<double>(p.n));
        ser.y.push_back(which == 0 ? p.phi : which == 1 ? p.dphi : p.curvature_radius);
    }
    static const char* names[] = {"phi_n", "dphi_n", "r_n"};
    static const char* titles[] = {"Absolute angles", "Relative angles", "Curvature radius"};
    ser.name = names[which];
    f.ylabel = names[which];
    f.title = std::string(titles[which]) + ", s = " + num(sigma) + " + " + num(t) + "i";
    f.series.push_back(std::move(ser));
    return f;
}

Figure average_vectors(double sigma, double t)
{
    const StripPoint s(sigma, t);
    Figure f;
    f.id = "average_vectors";
    f.title = "Spiral centers at reverse points, s = " + num(sigma) + " + " + num(t) + "i";
    f.xlabel = "Re";
    f.ylabel = "Im";
    f.equal_aspect = true;
    const int count = 8;
    const auto w = center_window(t, 1);
    const auto sums = partial_sums(s, w.start_index + w.width - 1);
    std::vector<PlaneVector> tail(sums.begin() + static_cast<std::ptrdiff_t>(center_window(t, count).start_index - 1),
                                  sums.end());
    f.series.push_back(polyline_of("partial sums", tail, false));
    Series c = polyline_of("centers", spiral_centers(s, count), false);
    c.scatter = true;
    f.series.push_back(std::move(c));
    return f;
}

Figure reverse_spiral(double sigma, double t)
{
    const StripPoint s(sigma, t);
    const VectorSystem sys = build_system(s);
    const PlaneVector z = euler_maclaurin_zeta(s).value;
    std::vector<PlaneVector> walk{z};
    PlaneVector cur = z;
    for (const auto& y : sys.Y) {
        cur -= y;
        walk.push_back(cur);
    }
    Figure f;
    f.id = "reverse_spiral";
    f.title = "Inverse spiral zeta(s) - sum Y_n, s = " + num(sigma) + " + " + num(t) + "i";
    f.xlabel = "Re";
    f.ylabel = "Im";
    f.equal_aspect = true;
    f.series.push_back(polyline_of("zeta - Y_1 - ... - Y_k", walk, false));
    Series c = polyline_of("centers", spiral_centers(s, 8), false);
    c.scatter = true;
    f.series.push_back(std::move(c));
    return f;
}

Figure chi_sweep(bool lambda)
{
    Figure f;
    f.id = lambda ? "lambda_func" : "ratio_chi";
    f.title = lambda ? "lambda(sigma) = dphi_chi / mu(t)" : "|chi| / |chi~|";
    f.xlabel = "sigma";
    f.ylabel = lambda ? "lambda" : "modulus ratio";
    for (int ti = 1; ti <= 9; ti += 2) {
        const double t = 1000.0 * ti;
        Series s;
        s.name = "t=" + num(t);
        for (int i = 0; i <= 20; ++i) {
            const double sigma = 0.05 * i;
            const ChiComparison c = chi_compare(StripPoint(sigma, t));
            s.x.push_back(sigma);
            s.y.push_back(lambda ? c.lambda : c.ratio_modulus);
        }
        f.series.push_back(std::move(s));
    }
    return f;
}

Figure projections(double sigma, double from, double to, int threads)
{
    const double step = 0.01;
    const auto n = static_cast<std::size_t>(std::llround((to - from) / step)) + 1;
    std::vector<double> L(n), M(n), T(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const StripPoint s(sigma, from + step * static_cast<double>(i));
        const auto d = decompose(build_system(s), euler_maclaurin_zeta(s).value);
        T[i] = s.t;
        L[i] = d.zeta_L;
        M[i] = d.zeta_M;
    });
    Figure f;
    f.id = "projections";
    f.title = "Projections of zeta on the L and M axes, sigma = " + num(sigma);
    f.xlabel = "t";
    f.ylabel = "projection";
    f.series.push_back({"zeta_L", T, L, false});
    f.series.push_back({"zeta_M", T, M, false});
    return f;
}

Figure delta_varphi_r(double t)
{
    Figure f;
    f.id = "delta_varphi_r";
    f.title = "Remainder angle deviation, t = " + num(t);
    f.xlabel = "sigma";
    f.ylabel = "dphi_R";
    Series s;
    s.name = "dphi_R";
    for (int i = 0; i <= 20; ++i) {
        const StripPoint p(0.05 * i, t);
        s.x.push_back(p.sigma);
        s.y.push_back(decompose(build_system(p), euler_maclaurin_zeta(p).value).delta_phi_R);
    }
    f.series.push_back(std::move(s));
    return f;
}

Figure frac_part(double from, double to)
{
    Figure f;
    f.id = "frac_part";
    f.title = "Fractional part of sqrt(t/2pi)";
    f.xlabel = "t";
    f.ylabel = "frac";
    Series s;
    s.name = "frac(sqrt(t/2pi))";
    const std::size_t n = 2000;
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = from + (to - from) * static_cast<double>(i) / n;
        const double r = std::sqrt(t / kTwoPi);
        s.x.push_back(t);
        s.y.push_back(r - std::floor(r));
    }
    f.series.push_back(std::move(s));
    return f;
}

using Builder = std::function<Figure(const FigureParams&)>;

const std::map<std::string, Builder>& builders()
{
    static const std::map<std::string, Builder> m = {
        {"s1_1", [](const FigureParams& p) {
             return spiral_figure("s1_1", p.sigma.value_or(1.25), p.t.value_or(kT1), 90);
         }},
        {"s3_1", [](const FigureParams& p) {
             return spiral_figure("s3_1", p.sigma.value_or(0.75), p.t.value_or(kT1), 90);
         }},
        {"s7_1", [](const FigureParams& p) {
             const double t = p.t.value_or(kT7);
             return spiral_figure("s7_1", p.sigma.value_or(0.75), t,
                                  static_cast<std::uint64_t>(std::ceil(t / kPi)));
         }},
        {"absolute_angles", [](const FigureParams& p) {
             return profile_figure("absolute_angles", p.sigma.value_or(0.75), p.t.value_or(kT7), 0);
         }},
        {"relative_angles", [](const FigureParams& p) {
             return profile_figure("relative_angles", p.sigma.value_or(0.75), p.t.value_or(kT7), 1);
         }},
        {"curvature_radius", [](const FigureParams& p) {
             return profile_figure("curvature_radius", p.sigma.value_or(0.75), p.t.value_or(kT7), 2);
         }},
        {"average_vectors", [](const FigureParams& p) {
             return average_vectors(p.sigma.value_or(0.25), p.t.value_or(kT28));
         }},
        {"reverse_spiral", [](const FigureParams& p) {
             return reverse_spiral(p.sigma.value_or(0.25), p.t.value_or(kT28));
         }},
        {"ratio_chi", [](const FigureParams&) { return chi_sweep(false); }},
        {"lambda_func", [](const FigureParams&) { return chi_sweep(true); }},
        {"projections", [](const FigureParams& p) {
             return projections(p.sigma.value_or(0.25), p.from.value_or(5000.0),
                                p.to.value_or(5010.0), p.threads);
         }},
        {"delta_varphi_r", [](const FigureParams& p) { return delta_varphi_r(p.t.value_or(kTOrdinate)); }},
        {"frac_part", [](const FigureParams& p) {
             return frac_part(p.from.value_or(5000.0), p.to.value_or(5100.0));
         }},
    };
    return m;
}

}  // namespace

const std::vector<std::string>& figure_ids()
{
    static const std::vector<std::string> ids = {
        "s1_1",        "s3_1",         "s7_1",        "absolute_angles", "relative_angles",
        "curvature_radius", "average_vectors", "reverse_spiral", "ratio_chi", "lambda_func",
        "projections", "delta_varphi_r", "frac_part"};
    return ids;
}

Figure make_figure(const std::string& id, const FigureParams& p)
{
    const auto& b = builders();
    const auto it = b.find(id);
    if (it == b.end())
        throw PreconditionError("unknown figure id: " + id);
    return it->second(p);
}

}  // namespace zs::cli
