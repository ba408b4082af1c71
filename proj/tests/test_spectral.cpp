#include "oracles.hpp"

#include <lcflow/spectral.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace lcflow;
using Catch::Approx;

namespace
{
    double max_coefficient_gap (const SupportFourier &x, const SupportFourier &y)
    {
        double gap = std::abs (x.a0 () - y.a0 ());
        const int K = std::max (x.order (), y.order ());
        for (int k = 1; k <= K; ++k)
        {
            const auto [xa, xb] = x.coefficient (k);
            const auto [ya, yb] = y.coefficient (k);
            gap = std::max ({gap, std::abs (xa - ya), std::abs (xb - yb)});
        }
        return gap;
    }
} // namespace

TEST_CASE ("synthesize samples the series on the uniform grid", "[spectral]")
{
    const GridFunction ones = synthesize (SupportFourier (1.0), 8);
    for (double v : ones.values ())
        CHECK (v == 1.0);

    const GridFunction s2 = synthesize (SupportFourier (0.0, {{2, 0.0, 1.0}}), 8);
    const double expected[] = {0, 1, 0, -1, 0, 1, 0, -1};
    for (std::size_t j = 0; j < 8; ++j)
        CHECK (s2[j] == Approx (expected[j]).margin (1e-15));
}

TEST_CASE ("synthesize and analyze reject aliasing grids", "[spectral]")
{
    const SupportFourier p (0.0, {{4, 1.0, 0.0}});
    CHECK_THROWS_AS (synthesize (p, 8), Error);
    try
    {
        (void)analyze (synthesize (SupportFourier (1.0), 8), 4);
        FAIL ("expected AliasError");
    }
    catch (const Error &e)
    {
        CHECK (e.kind () == ErrorKind::AliasError);
    }
    CHECK_THROWS_AS (GridFunction (std::vector<double> (12, 0.0)), Error);
}

TEST_CASE ("analyze recovers coefficients", "[spectral]")
{
    const SupportFourier c = analyze (synthesize (SupportFourier (3.5), 16), 4);
    CHECK (c.a0 () == Approx (3.5));
    CHECK (c.max_abs_coefficient (1) < 1e-15);

    const GridFunction cos3 = GridFunction::sample (16, [] (double t) { return std::cos (3 * t); });
    const SupportFourier a = analyze (cos3, 4);
    CHECK (std::abs (a.a0 ()) < 1e-15);
    for (int k = 1; k <= 4; ++k)
    {
        const auto [ak, bk] = a.coefficient (k);
        CHECK (ak == Approx (k == 3 ? 1.0 : 0.0).margin (1e-14));
        CHECK (std::abs (bk) < 1e-14);
    }
}

TEST_CASE ("analyze inverts synthesize on random trigonometric polynomials", "[spectral][property]")
{
    std::mt19937_64 rng (7);
    std::uniform_int_distribution<int> order (0, 16);
    for (int trial = 0; trial < 100; ++trial)
    {
        const int K = order (rng);
        const SupportFourier p = oracle::random_series (rng, K);
        const SupportFourier back = analyze (synthesize (p, 64), K);
        REQUIRE (max_coefficient_gap (p, back) < 1e-13);
    }
}

TEST_CASE ("modal derivative", "[spectral]")
{
    const SupportFourier d0 = derivative (SupportFourier (5.0));
    CHECK (d0.a0 () == 0.0);
    CHECK (d0.modes ().empty ());

    // d/dθ sin 2θ = 2 cos 2θ
    const SupportFourier d1 = derivative (SupportFourier (0.0, {{2, 0.0, 1.0}}));
    CHECK (d1.coefficient (2).first == 2.0);
    CHECK (d1.coefficient (2).second == 0.0);

    const SupportFourier d2 = derivative (SupportFourier (0.0, {{3, 1.5, -0.5}}), 2);
    CHECK (d2.coefficient (3).first == Approx (-9 * 1.5));
    CHECK (d2.coefficient (3).second == Approx (-9 * -0.5));

    CHECK_THROWS_AS (derivative (SupportFourier (1.0), 0), Error);
}

TEST_CASE ("synthesized derivative matches finite differences", "[spectral][property]")
{
    std::mt19937_64 rng (11);
    const std::size_t n = 4096;
    const double h = kTwoPi / n;
    for (int trial = 0; trial < 10; ++trial)
    {
        const SupportFourier p = oracle::random_series (rng, 4);
        const GridFunction g = synthesize (p, n);
        const GridFunction dg = synthesize (derivative (p), n);
        // Central-difference truncation is at most (h²/6) Σ k³ (|a_k| + |b_k|).
        double bound = 0.0;
        for (const Mode &m : p.modes ())
            bound += h * h / 6.0 * std::pow (m.k, 3) * (std::abs (m.a) + std::abs (m.b));
        double err = 0.0;
        for (std::size_t j = 0; j < n; ++j)
        {
            const double fd = (g[(j + 1) % n] - g[(j + n - 1) % n]) / (2 * h);
            err = std::max (err, std::abs (fd - dg[j]));
        }
        CHECK (err <= bound + 1e-9);
    }
}

TEST_CASE ("grid_derivative is spectral differentiation of samples", "[spectral]")
{
    const GridFunction g = GridFunction::sample (32, [] (double t) { return std::sin (3 * t) + 0.5 * std::cos (t); });
    const GridFunction dg = grid_derivative (g);
    for (std::size_t j = 0; j < g.size (); ++j)
        CHECK (dg[j] == Approx (3 * std::cos (3 * g.angle (j)) - 0.5 * std::sin (g.angle (j))).margin (1e-13));
}

TEST_CASE ("periodic quadrature", "[spectral]")
{
    CHECK (periodic_quadrature (synthesize (SupportFourier (1.0), 8)) == Approx (kTwoPi));
    const GridFunction c2 = GridFunction::sample (16, [] (double t) { return std::cos (t) * std::cos (t); });
    CHECK (std::abs (periodic_quadrature (c2) - oracle::pi) < 1e-14);
    const GridFunction s3 = GridFunction::sample (16, [] (double t) { return std::sin (3 * t); });
    CHECK (std::abs (periodic_quadrature (s3)) < 1e-14);
}

TEST_CASE ("l2 quantities follow Parseval", "[spectral][property]")
{
    const L2Quantities unit = l2_quantities (SupportFourier (1.0));
    CHECK (unit.int_p2 == Approx (kTwoPi));
    CHECK (unit.int_dp2 == 0.0);

    const L2Quantities s2 = l2_quantities (SupportFourier (0.0, {{2, 0.0, 1.0}}));
    CHECK (s2.int_p2 == Approx (oracle::pi));
    CHECK (s2.int_dp2 == Approx (4 * oracle::pi));

    std::mt19937_64 rng (3);
    for (int trial = 0; trial < 50; ++trial)
    {
        const SupportFourier p = oracle::random_series (rng, 1 + trial % 16);
        const L2Quantities q = l2_quantities (p);
        const double p2 = oracle::integrate ([&] (double t) { return std::pow (oracle::eval (p, t), 2); }, 256);
        const double dp2 = oracle::integrate ([&] (double t) { return std::pow (oracle::eval (p, t, 1), 2); }, 256);
        CHECK (std::abs (q.int_p2 - p2) < 1e-10);
        CHECK (std::abs (q.int_dp2 - dp2) < 1e-10 * std::max (1.0, dp2));
    }
}

TEST_CASE ("default grid size keeps a wide dealiasing margin", "[spectral]")
{
    CHECK (default_grid_size (2) == 256);
    CHECK (default_grid_size (31) == 256);
    CHECK (default_grid_size (40) == 512);
}
