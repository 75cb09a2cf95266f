#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "figures.hpp"
#include "output.hpp"
#include "zetaspiral/afe.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/cli.hpp"
#include "zetaspiral/spiral.hpp"
#include "zetaspiral/summation.hpp"
#include "zetaspiral/zeros.hpp"

namespace zs::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double sigma = 0.5;
    double t = 0.0;
    std::string out;
    std::string format;
    std::string config;
    int threads = 1;

    std::string method = "cesaro";
    std::uint64_t count = 0;
    std::uint64_t window_start = 0;
    std::uint64_t window_width = 0;
    bool oracle = false;
    bool grid = false;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
    std::int64_t from_k = 0;
    std::int64_t to_k = 0;
    std::string id;

    // set after parsing
    bool has_sigma = false;
    bool has_t = false;
    bool has_from = false;
    bool has_to = false;
    bool has_count = false;
    bool has_step = false;
};

struct Options {
    CLI::Option* sigma = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* from = nullptr;
    CLI::Option* to = nullptr;
    CLI::Option* count = nullptr;
    CLI::Option* step = nullptr;
};

void add_common(CLI::App* sub, RunConfig& c, Options& o, const std::string& default_format)
{
    o.sigma = sub->add_option("--sigma", c.sigma, "real part of s");
    o.t = sub->add_option("--t", c.t, "imaginary part of s (census: the bound T)");
    sub->add_option("--out", c.out, "output file (default: stdout)");
    sub->add_option("--format", c.format, "csv or svg")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->default_str(default_format);
    sub->add_option("--config", c.config, "key=value file; command-line flags win");
    sub->add_option("--threads", c.threads, "worker threads for scans")->check(CLI::Range(1, 256));
}

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw PreconditionError(what);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool given(const std::vector<std::string>& args, const std::string& key)
{
    const std::string flag = "--" + key;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0)
            return true;
    return false;
}

// Appends --key=value for every config entry not already on the command line.
std::vector<std::string> merge_config(const std::vector<std::string>& args)
{
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        return args;
    std::vector<std::string> merged = args;
    std::istringstream in(read_file(path));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw PreconditionError("config line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "config" || given(args, key))
            continue;
        merged.push_back("--" + key + "=" + value);
    }
    return merged;
}

std::string format_or(const RunConfig& c, const std::string& dflt)
{
    return c.format.empty() ? dflt : c.format;
}

void csv_only(const RunConfig& c)
{
    require(format_or(c, "csv") == "csv", "svg output is only available for the figure command");
}

StripPoint point_of(const RunConfig& c)
{
    require(c.has_sigma && c.has_t, "--sigma and --t are required");
    return StripPoint(c.sigma, c.t);
}

void cmd_eval(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    const StripPoint s = point_of(c);
    const Method m = parse_method(c.method);
    ZetaValue z;
    switch (m) {
    case Method::partial_sum:
        z = partial_sum_zeta(s, c.has_count ? c.count : 10000);
        break;
    case Method::cesaro: {
        std::optional<CesaroWindow> w;
        if (c.window_start || c.window_width) {
            const CesaroWindow a = CesaroWindow::automatic(std::max(s.t, kTwoPi));
            w = CesaroWindow(c.window_start ? c.window_start : a.start_index,
                             c.window_width ? c.window_width : a.width);
        }
        z = cesaro_zeta(s, w, c.oracle);
        break;
    }
    case Method::euler_maclaurin:
        z = euler_maclaurin_zeta(s);
        break;
    case Method::afe:
        z = afe_zeta(s);
        break;
    }
    char err[32];
    std::snprintf(err, sizeof err, "%.3g", z.est_error);
    os << "re=" << num(z.value.x) << " im=" << num(z.value.y) << " est_error=" << err
       << " method=" << method_name(z.method) << '\n';
}

void cmd_spiral(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    const StripPoint s = point_of(c);
    const std::uint64_t n = c.has_count ? c.count
                                        : std::max<std::uint64_t>(
                                              2, static_cast<std::uint64_t>(std::ceil(s.t / kPi)));
    CsvWriter w{os};
    w.header("n,x,y,px,py,phi,dphi,r");
    for (const auto& p : spiral_profile(s, n))
        w.row(p.n, p.vector.x, p.vector.y, p.partial_sum.x, p.partial_sum.y, p.phi, p.dphi,
              p.curvature_radius);
}

void cmd_afe(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    const StripPoint s = point_of(c);
    const VectorSystem sys = build_system(s);
    const Decomposition d = decompose(sys, euler_maclaurin_zeta(s).value);
    CsvWriter w{os};
    w.header("kind,n,x,y");
    for (std::uint64_t n = 1; n <= sys.m; ++n)
        w.row("X", n, sys.X[n - 1].x, sys.X[n - 1].y);
    for (std::uint64_t n = 1; n <= sys.m; ++n)
        w.row("Y", n, sys.Y[n - 1].x, sys.Y[n - 1].y);
    w.row("R", sys.m, sys.R_leading.x, sys.R_leading.y);
    w.header("L1x,L1y,L2x,L2y,phiL,phiM,zetaL,zetaM");
    w.row(d.L1.x, d.L1.y, d.L2.x, d.L2.y, sys.phi_L, sys.phi_M, d.zeta_L, d.zeta_M);
}

void cmd_chi(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    std::vector<StripPoint> pts;
    if (c.grid) {
        for (int ti = 1; ti <= 9; ++ti)
            for (int si = 0; si <= 10; ++si)
                pts.emplace_back(0.1 * si, 1000.0 * ti);
    } else {
        pts.push_back(point_of(c));
    }
    std::vector<ChiComparison> cmp(pts.size());
    std::vector<double> mex(pts.size()), map(pts.size());
    parallel_for(pts.size(), c.threads, [&](std::size_t i) {
        cmp[i] = chi_compare(pts[i]);
        map[i] = chi_approx(pts[i]).modulus;
        mex[i] = cmp[i].ratio_modulus * map[i];
    });
    CsvWriter w{os};
    w.header("sigma,t,mod_exact,mod_approx,dphi,lambda");
    for (std::size_t i = 0; i < pts.size(); ++i)
        w.row(pts[i].sigma, pts[i].t, mex[i], map[i], cmp[i].delta_phi, cmp[i].lambda);
}

void cmd_zeros(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    require(c.has_from && c.has_to, "--from and --to are required");
    const auto zeros = find_zeros(c.from, c.to, c.has_step ? c.step : 0.05, c.threads);
    CsvWriter w{os};
    w.header("t,lo,hi,residual");
    for (const auto& z : zeros)
        w.row(z.t, z.lo, z.hi, z.residual);
}

void cmd_basepoints(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    require(c.from_k >= 0 && c.to_k >= c.from_k, "need 0 <= --from-k <= --to-k");
    const auto recs = classify_intervals(c.from_k, c.to_k + 1, c.has_step ? c.step : 0.01, c.threads);
    std::vector<BasePoint> bps(recs.size());
    parallel_for(recs.size(), c.threads,
                 [&](std::size_t i) { bps[i] = base_point(c.from_k + static_cast<std::int64_t>(i)); });
    CsvWriter w{os};
    w.header("k,t,kind,interval_kind,zeros_in_interval");
    for (std::size_t i = 0; i < recs.size(); ++i)
        w.row(bps[i].k, bps[i].t, std::string(kind_name(bps[i].kind)),
              std::string(kind_name(recs[i].kind)), recs[i].zeros.size());
}

void cmd_census(const RunConfig& c, std::ostream& os)
{
    csv_only(c);
    require(c.has_t, "--t (the bound T) is required");
    const Census cs = zero_census(c.t, c.has_step ? c.step : 0.05, c.threads);
    CsvWriter w{os};
    w.header("T,N0,census_count,rvm_main,s_bound");
    w.row(cs.T, cs.N0, cs.sign_changes, cs.rvm_main, cs.s_bound);
}

void cmd_figure(const RunConfig& c, std::ostream& os)
{
    FigureParams p;
    if (c.has_sigma)
        p.sigma = c.sigma;
    if (c.has_t)
        p.t = c.t;
    if (c.has_from)
        p.from = c.from;
    if (c.has_to)
        p.to = c.to;
    p.threads = c.threads;
    const auto& ids = figure_ids();
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) {
        std::string list;
        for (const auto& id : ids)
            list += (list.empty() ? "" : ", ") + id;
        throw PreconditionError("unknown figure id '" + c.id + "'; valid ids: " + list);
    }
    const Figure f = make_figure(c.id, p);
    if (format_or(c, "svg") == "svg")
        write_svg(os, f);
    else
        write_figure_csv(os, f);
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err)
{
    RunConfig c;
    CLI::App app{"Vector-geometric evaluation of the Riemann zeta function", "zetaspiral"};
    app.require_subcommand(1);

    std::map<CLI::App*, Options> opts;
    std::map<CLI::App*, void (*)(const RunConfig&, std::ostream&)> handlers;
    auto sub = [&](const char* name, const char* help, auto handler, const std::string& fmt = "csv") {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s, c, opts[s], fmt);
        handlers[s] = handler;
        return s;
    };

    auto* eval = sub("eval", "evaluate zeta(s) by one method", cmd_eval);
    eval->add_option("--method", c.method, "partial_sum, cesaro, euler_maclaurin or afe")
        ->check(CLI::IsMember({"partial_sum", "cesaro", "euler_maclaurin", "afe"}));
    opts[eval].count = eval->add_option("--count", c.count, "terms for partial_sum");
    eval->add_option("--window-start", c.window_start, "first Cesaro vertex");
    eval->add_option("--window-width", c.window_width, "number of Cesaro vertices");
    eval->add_flag("--oracle", c.oracle, "cesaro error estimate against the Euler-Maclaurin value");

    auto* spiral = sub("spiral", "term vectors, partial sums, angles, curvature", cmd_spiral);
    opts[spiral].count = spiral->add_option("--count", c.count, "number of terms");

    sub("afe", "vector system X, Y, R and projections", cmd_afe);

    auto* chi = sub("chi", "exact vs approximate chi", cmd_chi);
    chi->add_flag("--grid", c.grid, "sigma 0..1 step 0.1 x t 1000..9000 step 1000");

    auto* zeros = sub("zeros", "critical-line zeros by scan and bisection", cmd_zeros);
    opts[zeros].from = zeros->add_option("--from", c.from, "scan start");
    opts[zeros].to = zeros->add_option("--to", c.to, "scan end");
    opts[zeros].step = zeros->add_option("--step", c.step, "scan step (default 0.05)");

    auto* bp = sub("basepoints", "base points, kinds and interval zero counts", cmd_basepoints);
    bp->add_option("--from-k", c.from_k, "first base point index")->required();
    bp->add_option("--to-k", c.to_k, "last base point index")->required();
    opts[bp].step = bp->add_option("--step", c.step, "scan step inside intervals (default 0.01)");

    auto* census = sub("census", "zero counts up to T", cmd_census);
    opts[census].step = census->add_option("--step", c.step, "scan step (default 0.05)");

    auto* figure = sub("figure", "figure data as SVG or CSV", cmd_figure, "svg");
    figure->add_option("--id", c.id, "figure id")->required();
    opts[figure].from = figure->add_option("--from", c.from, "range start (projections, frac_part)");
    opts[figure].to = figure->add_option("--to", c.to, "range end (projections, frac_part)");

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::reverse(args.begin(), args.end());
        app.parse(args);

        CLI::App* active = app.get_subcommands().front();
        const Options& o = opts[active];
        c.has_sigma = o.sigma->count() > 0;
        c.has_t = o.t->count() > 0;
        c.has_from = o.from && o.from->count() > 0;
        c.has_to = o.to && o.to->count() > 0;
        c.has_count = o.count && o.count->count() > 0;
        c.has_step = o.step && o.step->count() > 0;

        std::ostringstream buf;
        handlers[active](c, buf);
        if (c.out.empty()) {
            out << buf.str();
        } else {
            std::ofstream f(c.out, std::ios::binary);
            if (!f)
                throw IoError("cannot open output file: " + c.out);
            f << buf.str();
            f.flush();
            if (!f)
                throw IoError("write failed: " + c.out);
        }
        return kOk;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIo;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const FitError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace zs::cli
