#pragma once
// Independent reference computations for the test suites. Nothing here calls into the library's numerical code:
// series are evaluated by direct trigonometric sums and integrals by brute-force sampling.

#include <lcflow/support_fourier.hpp>

#include <cmath>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace oracle
{
    inline constexpr double pi = std::numbers::pi;

    /// p^{(order)}(θ) by direct differentiation of each trigonometric term.
    inline double eval (const lcflow::SupportFourier &p, double theta, int order = 0)
    {
        double sum = order == 0 ? p.a0 () : 0.0;
        for (const lcflow::Mode &m : p.modes ())
        {
            const double k = m.k;
            // d^n/dθ^n cos(kθ) = k^n cos(kθ + nπ/2), same shift for sin.
            const double shift = order * pi / 2.0;
            sum += std::pow (k, order) * (m.a * std::cos (k * theta + shift) + m.b * std::sin (k * theta + shift));
        }
        return sum;
    }

    inline double beta (const lcflow::SupportFourier &p, double theta) { return eval (p, theta, 0) + eval (p, theta, 2); }

    /// Trapezoid sum of f over [0, 2π) on n points, written out independently of the library.
    inline double integrate (const std::function<double (double)> &f, int n = 1024)
    {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += f (2.0 * pi * j / n);
        return 2.0 * pi * s / n;
    }

    inline double central_diff (const std::function<double (double)> &f, double x, double h)
    {
        return (f (x + h) - f (x - h)) / (2.0 * h);
    }

    inline double second_diff (const std::function<double (double)> &f, double x, double h)
    {
        return (f (x + h) - 2.0 * f (x) + f (x - h)) / (h * h);
    }

    /// Random dense series with coefficients uniform in [−amp, amp], from a standard engine.
    inline lcflow::SupportFourier random_series (std::mt19937_64 &rng, int K, double amp = 1.0)
    {
        std::uniform_real_distribution<double> u (-amp, amp);
        std::vector<lcflow::Mode> modes;
        for (int k = 1; k <= K; ++k)
            modes.push_back ({k, u (rng), u (rng)});
        return lcflow::SupportFourier (u (rng), std::move (modes));
    }

    /// Σ_k weight(k)·(a_k² + b_k²) over modes k ≥ min_k.
    inline double weighted_energy (const lcflow::SupportFourier &p, const std::function<double (double)> &weight, int min_k = 1)
    {
        double s = 0.0;
        for (const lcflow::Mode &m : p.modes ())
            if (m.k >= min_k)
                s += weight (m.k) * (m.a * m.a + m.b * m.b);
        return s;
    }

    inline std::filesystem::path temp_dir (const std::string &name)
    {
        const std::filesystem::path dir = std::filesystem::path (LCFLOW_TEST_TMP) / name;
        std::filesystem::remove_all (dir);
        std::filesystem::create_directories (dir);
        return dir;
    }
} // namespace oracle
