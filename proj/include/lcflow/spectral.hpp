#pragma once
/**
 * @file   spectral.hpp
 * @brief  Modal <-> grid conversions, spectral differentiation and periodic quadrature on uniform grids of S¹.
 *
 * The DFT is evaluated directly in O(N·K). Every planned run uses K ≤ 64, so an FFT buys nothing here.
 */

#include <lcflow/error.hpp>
#include <lcflow/support_fourier.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcflow
{
    /// N uniform samples of a periodic function at θ_j = 2πj/N. N is a power of two ≥ 8.
    class GridFunction
    {
    public:
        explicit GridFunction (std::vector<double> values) : values_ (std::move (values))
        {
            const std::size_t n = values_.size ();
            if (n < 8 || (n & (n - 1)) != 0)
                throw Error (ErrorKind::InvalidArgument, "GridFunction", "grid size must be a power of two >= 8, got " + std::to_string (n));
        }

        [[nodiscard]] std::size_t size () const noexcept { return values_.size (); }
        [[nodiscard]] std::span<const double> values () const noexcept { return values_; }
        [[nodiscard]] double operator[] (std::size_t j) const noexcept { return values_[j]; }
        [[nodiscard]] double angle (std::size_t j) const noexcept { return kTwoPi * static_cast<double> (j) / static_cast<double> (values_.size ()); }

        /// Samples f(θ_j) on an N-point grid.
        template <class F> [[nodiscard]] static GridFunction sample (std::size_t n, F &&f)
        {
            std::vector<double> values (n);
            for (std::size_t j = 0; j < n; ++j)
                values[j] = f (kTwoPi * static_cast<double> (j) / static_cast<double> (n));
            return GridFunction (std::move (values));
        }

    private:
        std::vector<double> values_;
    };

    /// Default diagnostic grid: max(256, 8(K+1)) rounded up to a power of two.
    [[nodiscard]] inline std::size_t default_grid_size (int order)
    {
        std::size_t want = std::max<std::size_t> (256, 8 * static_cast<std::size_t> (order + 1));
        std::size_t n = 8;
        while (n < want)
            n <<= 1;
        return n;
    }

    [[nodiscard]] inline GridFunction synthesize (const SupportFourier &p, std::size_t n)
    {
        if (n < 2 * static_cast<std::size_t> (p.order ()) + 2)
            throw Error (ErrorKind::AliasError, "synthesize", "grid of " + std::to_string (n) + " points cannot resolve mode " + std::to_string (p.order ()));
        return GridFunction::sample (n, [&p] (double theta) { return p.value (theta); });
    }

    /// Discrete Fourier coefficients up to mode K; every mode 1..K is present in the result.
    [[nodiscard]] inline SupportFourier analyze (const GridFunction &g, int order)
    {
        const std::size_t n = g.size ();
        if (order < 0 || 2 * static_cast<std::size_t> (order) + 2 > n)
            throw Error (ErrorKind::AliasError, "analyze", "mode " + std::to_string (order) + " aliases on a " + std::to_string (n) + "-point grid");

        double mean = 0.0;
        for (double v : g.values ())
            mean += v;
        mean /= static_cast<double> (n);

        std::vector<Mode> modes;
        modes.reserve (static_cast<std::size_t> (order));
        const double scale = 2.0 / static_cast<double> (n);
        for (int k = 1; k <= order; ++k)
        {
            double a = 0.0;
            double b = 0.0;
            for (std::size_t j = 0; j < n; ++j)
            {
                // Reduce k·j mod N before scaling so the phase stays exact for large k.
                const double phase = kTwoPi * static_cast<double> ((static_cast<std::size_t> (k) * j) % n) / static_cast<double> (n);
                a += g[j] * std::cos (phase);
                b += g[j] * std::sin (phase);
            }
            modes.push_back ({k, scale * a, scale * b});
        }
        return SupportFourier (mean, std::move (modes));
    }

    /// d^order/dθ^order applied mode by mode: (a_k, b_k) → (k b_k, −k a_k), constant → 0.
    [[nodiscard]] inline SupportFourier derivative (const SupportFourier &p, int order = 1)
    {
        if (order < 1)
            throw Error (ErrorKind::InvalidArgument, "derivative", "order must be >= 1");
        std::vector<Mode> modes (p.modes ().begin (), p.modes ().end ());
        for (Mode &m : modes)
            for (int i = 0; i < order; ++i)
                m = Mode{m.k, m.k * m.b, -m.k * m.a};
        return SupportFourier (0.0, std::move (modes));
    }

    /// Trapezoid rule on the periodic grid; exact for trigonometric polynomials of degree < N.
    [[nodiscard]] inline double periodic_quadrature (const GridFunction &g) noexcept
    {
        double sum = 0.0;
        for (double v : g.values ())
            sum += v;
        return kTwoPi * sum / static_cast<double> (g.size ());
    }

    /// Spectral derivative of grid data (projects onto modes below Nyquist first).
    [[nodiscard]] inline GridFunction grid_derivative (const GridFunction &g, int order = 1)
    {
        const int band = static_cast<int> (g.size () / 2) - 1;
        return synthesize (derivative (analyze (g, band), order), g.size ());
    }

    struct L2Quantities
    {
        double int_p2 = 0.0;  ///< ∫ p² dθ
        double int_dp2 = 0.0; ///< ∫ (p')² dθ
    };

    /// Parseval: ∫p² = 2π a0² + π Σ(a_k² + b_k²), ∫(p')² = π Σ k²(a_k² + b_k²).
    [[nodiscard]] inline L2Quantities l2_quantities (const SupportFourier &p) noexcept
    {
        const double pi = std::numbers::pi;
        L2Quantities out{2.0 * pi * p.a0 () * p.a0 (), 0.0};
        for (const Mode &m : p.modes ())
        {
            const double c = m.a * m.a + m.b * m.b;
            out.int_p2 += pi * c;
            out.int_dp2 += pi * m.k * m.k * c;
        }
        return out;
    }
} // namespace lcflow
