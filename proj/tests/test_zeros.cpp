#include <doctest.h>

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "zetaspiral/afe.hpp"
#include "zetaspiral/chi.hpp"
#include "zetaspiral/zeros.hpp"

using namespace zs;

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

// 50-digit theta from the same asymptotic series, for root checks
big theta_big(big t)
{
    using boost::multiprecision::log;
    const big pi = boost::math::constants::pi<big>();
    return t / 2 * log(t / (2 * pi)) - t / 2 - pi / 8 + 1 / (48 * t) + 1 / (5760 * t * t * t) +
           1 / (80640 * t * t * t * t * t);
}

}  // namespace

TEST_CASE("Z is real-valued and vanishes at known ordinates")
{
    CHECK(std::abs(Z(5006.208381106)) < 1e-6);
    CHECK(std::abs(Z(14.134725)) < 1e-4);
    // Z(t) = |zeta(1/2+it)| up to sign
    for (double t : {100.0, 1234.5, 5002.981}) {
        const double z = euler_maclaurin_zeta(StripPoint(0.5, t)).value.norm();
        CHECK(std::abs(std::abs(Z(t)) - z) < 1e-10 * (1.0 + z));
    }
    for (double t = 5000.0; t <= 5100.0; t += 0.73)
        CHECK(std::abs(Z(t, ZMethod::afe) - Z(t)) < 5e-3);
    CHECK_THROWS_AS(Z(1.0), DomainError);
    CHECK_THROWS_AS(Z(6.0, ZMethod::afe), UnsupportedRegion);
}

TEST_CASE("base points solve Phi(t) = (2k+1) pi")
{
    const BasePoint b0 = base_point(0);
    CHECK(b0.t == doctest::Approx(20.654045168244554).epsilon(1e-14));
    const BasePoint b1 = base_point(1);
    CHECK(b1.t > 2.0 * kPi * std::exp(1.0));
    CHECK(b1.t < 40.0);
    CHECK(b1.t == doctest::Approx(25.491508304483681).epsilon(1e-14));

    const BasePoint a = base_point(4520);
    CHECK(a.kind == BaseKind::a1);
    CHECK(a.t == doctest::Approx(5001.099487565325).epsilon(1e-14));
    CHECK(std::abs(a.t - 5001.099505) < 5e-5);
    const BasePoint b = base_point(4525);
    CHECK(b.kind == BaseKind::a2);
    CHECK(b.t == doctest::Approx(5005.8024663245815).epsilon(1e-14));
    CHECK(std::abs(b.t - 5005.8024855) < 5e-5);

    for (std::int64_t k : {0, 1, 7, 100, 4520, 4525, 9000}) {
        const BasePoint p = base_point(k);
        CHECK(std::abs(Phi(p.t) - (2.0 * double(k) + 1.0) * kPi) < 1e-9 * (1.0 + double(k)));
        // independent 50-digit evaluation of the phase at the root
        const big resid = 2 * theta_big(big(p.t)) - (2 * k + 1) * boost::math::constants::pi<big>();
        CHECK(std::abs(resid.convert_to<double>()) < 1e-9);
        CHECK(base_point(k + 1).t > p.t);
    }
    CHECK_THROWS_AS(base_point(-1), DomainError);
}

TEST_CASE("base point kind follows the imaginary part of zeta")
{
    for (std::int64_t k = 4518; k <= 4527; ++k) {
        const BasePoint p = base_point(k);
        const double im = euler_maclaurin_zeta(StripPoint(0.5, p.t)).value.y;
        CHECK((p.kind == BaseKind::a2) == (im < 0.0));
        // the first middle vector is horizontal at a base point
        CHECK(std::abs(middle_vector(StripPoint(0.5, p.t), 1).y) < 1e-9);
    }
}

TEST_CASE("gram points interleave with base points")
{
    CHECK(gram_point(1) == doctest::Approx(17.845599892017628).epsilon(1e-14));
    for (std::int64_t n : {1, 2, 50, 4521}) {
        const double g = gram_point(n);
        CHECK(std::abs(theta(g) - double(n - 1) * kPi) < 1e-10 * (1.0 + double(n)));
    }
    for (std::int64_t k = 4510; k <= 4530; ++k) {
        const double t = base_point(k).t;
        CHECK(gram_point(k + 1) < t);
        CHECK(t < gram_point(k + 2));
    }
    CHECK_THROWS_AS(gram_point(0), DomainError);
}

TEST_CASE("interval kinds and grammar")
{
    using K = IntervalKind;
    CHECK(interval_kind(BaseKind::a1, BaseKind::a1) == K::A1);
    CHECK(interval_kind(BaseKind::a2, BaseKind::a2) == K::A2);
    CHECK(interval_kind(BaseKind::a1, BaseKind::a2) == K::C);
    CHECK(interval_kind(BaseKind::a2, BaseKind::a1) == K::B);
    CHECK(expected_zeros(K::A1) == 1);
    CHECK(expected_zeros(K::A2) == 1);
    CHECK(expected_zeros(K::B) == 2);
    CHECK(expected_zeros(K::C) == 0);
    CHECK(forbidden_adjacency(K::A1, K::A2));
    CHECK(forbidden_adjacency(K::A2, K::A1));
    CHECK(forbidden_adjacency(K::B, K::B));
    CHECK(forbidden_adjacency(K::C, K::C));
    CHECK_FALSE(forbidden_adjacency(K::A1, K::C));
    CHECK_FALSE(forbidden_adjacency(K::C, K::A2));
    CHECK_FALSE(forbidden_adjacency(K::B, K::A1));
    CHECK(kind_name(K::B) == "B");
    CHECK(kind_name(BaseKind::a2) == "a2");
}

TEST_CASE("classified intervals carry the expected zero counts")
{
    const auto iv = classify_intervals(4515, 4530);
    REQUIRE(iv.size() == 15);
    std::size_t total = 0;
    for (const auto& r : iv) {
        CHECK(r.consistent);
        CHECK(static_cast<int>(r.zeros.size()) == expected_zeros(r.kind));
        total += r.zeros.size();
    }
    CHECK(grammar_violations(iv) == 0);
    CHECK(iv[10].from_k == 4525);
    CHECK(iv[10].kind == IntervalKind::A2);
    // census equality over the same span
    CHECK(count_sign_changes(base_point(4515).t, base_point(4530).t, 0.01) ==
          static_cast<std::int64_t>(total));
    CHECK_THROWS_AS(classify_intervals(10, 10), PreconditionError);
}

TEST_CASE("zeros in [5000, 5007]")
{
    const double expected[] = {5000.23431693132782, 5000.83438143241261, 5001.8897736271921,
                               5002.85400289185826, 5003.48494437831206, 5005.49590748770825,
                               5006.20838110621131, 5006.788558806101};
    const auto z = find_zeros(5000.0, 5007.0, 0.05);
    REQUIRE(z.size() == 8);
    for (std::size_t i = 0; i < z.size(); ++i) {
        CHECK(std::abs(z[i].t - expected[i]) < 1e-9);
        CHECK(z[i].lo < z[i].t);
        CHECK(z[i].t < z[i].hi);
        CHECK(z[i].hi - z[i].lo < 1e-10);
        CHECK(z[i].residual < 1e-9);
        CHECK((Z(z[i].lo) < 0.0) != (Z(z[i].hi) < 0.0));
    }
    CHECK(std::abs(z[1].t - 5000.834381) < 1e-6);
    CHECK(std::abs(z[2].t - 5001.889773627) < 1e-6);
    CHECK(std::abs(z[6].t - 5006.208381106) < 1e-6);

    const auto first = find_zeros(10.0, 15.0, 0.05);
    REQUIRE(first.size() == 1);
    CHECK(first[0].t == doctest::Approx(14.134725141734693).epsilon(1e-10));
    CHECK(find_zeros(10.0, 100.0, 0.05).size() == 29);

    CHECK_THROWS_AS(find_zeros(5.0, 10.0, 0.05), DomainError);
    CHECK_THROWS_AS(find_zeros(20.0, 10.0, 0.05), DomainError);
    CHECK_THROWS_AS(find_zeros(20.0, 30.0, 0.5), PreconditionError);
}

TEST_CASE("parallel scans are deterministic")
{
    const auto a = find_zeros(5000.0, 5010.0, 0.05, 1);
    const auto b = find_zeros(5000.0, 5010.0, 0.05, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i].t == b[i].t);
    const auto sa = sample_Z(1000.0, 1003.0, 0.01, 1);
    const auto sb = sample_Z(1000.0, 1003.0, 0.01, 4);
    CHECK(sa == sb);
    CHECK(sa.size() == 301);
}

TEST_CASE("parallel_for rethrows worker errors")
{
    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7)
                                         throw DomainError("boom");
                                 }),
                    DomainError);
}

TEST_CASE("count of zeros on the line")
{
    // the offset to the base-point count is constant
    for (double T = 100.0; T <= 5000.0; T += 97.3)
        CHECK(count_zeros_line(T) - base_points_below(T) == 0);
    // one increment per base point
    for (std::int64_t k : {10, 500, 4520, 4525}) {
        const double t = base_point(k).t;
        CHECK(count_zeros_line(t + 1e-6) - count_zeros_line(t - 1e-6) == 1);
        CHECK(base_points_below(t + 1e-6) == k + 1);
    }
    CHECK_THROWS_AS(count_zeros_line(25.0), DomainError);

    const Census c = zero_census(1000.0, 0.05, 2);
    CHECK(std::abs(c.sign_changes - c.N0) <= 2);
    CHECK(c.base_points == c.N0);
}

TEST_CASE("Riemann-von Mangoldt main term")
{
    const RvM a = riemann_von_mangoldt(100.0);
    CHECK(a.n == doctest::Approx(29.002343587325348).epsilon(1e-12));
    CHECK(std::abs(29.0 - a.n) < a.s_bound);
    const RvM b = riemann_von_mangoldt(5000.0);
    CHECK(b.n == doctest::Approx(4520.3311733817771).epsilon(1e-12));
    CHECK(b.s_bound == doctest::Approx(1.998 + 0.17 * std::log(5000.0)));
    CHECK(b.s_bound == doctest::Approx(3.446).epsilon(1e-3));
    CHECK_THROWS_AS(riemann_von_mangoldt(2.0), DomainError);
}

TEST_CASE("zeros of the M projection alternate with zeros of the L projection")
{
    for (double sigma : {0.25, 0.75}) {
        std::vector<int> events;  // 0 = L, 1 = M
        double prev_L = 0.0, prev_M = 0.0, floor_max = 1e300;
        for (int i = 0; i <= 2000; ++i) {
            const StripPoint s(sigma, 5000.0 + 0.01 * i);
            const Decomposition d = decompose(build_system(s), euler_maclaurin_zeta(s).value);
            floor_max = std::min(floor_max, std::max(std::abs(d.zeta_L), std::abs(d.zeta_M)));
            if (i > 0) {
                const bool cl = (prev_L < 0) != (d.zeta_L < 0);
                const bool cm = (prev_M < 0) != (d.zeta_M < 0);
                CHECK_FALSE((cl && cm));
                if (cl)
                    events.push_back(0);
                if (cm)
                    events.push_back(1);
            }
            prev_L = d.zeta_L;
            prev_M = d.zeta_M;
        }
        REQUIRE(events.size() > 20);
        for (std::size_t i = 1; i < events.size(); ++i)
            CHECK(events[i] != events[i - 1]);
        CHECK(floor_max > 1e-3);
    }
}
