#pragma once
/**
 * @file   curve.hpp
 * @brief  Static geometry of ℓ-convex Legendre curves (ℓ ≡ 1) given by a Fourier support function p(θ).
 *
 * The curve is γ(θ) = p ν + p' μ with ν = (cos θ, sin θ), μ = (−sin θ, cos θ), and γ' = β μ where β = p + p''.
 * Singular points (cusps) are the zeros of β.
 */

#include <lcflow/error.hpp>
#include <lcflow/spectral.hpp>
#include <lcflow/support_fourier.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace lcflow
{
    /// |β| at or below this is treated as a cusp by curvature_at.
    inline constexpr double kSingularityTolerance = 1e-9;
    /// Grid values of β below this are reported as (possibly tangential) zeros.
    inline constexpr double kRootTolerance = 1e-10;
    /// Bisection stops once the bracket is narrower than this.
    inline constexpr double kRootPolish = 1e-12;

    struct CurvaturePairView
    {
        double ell = 1.0;
        SupportFourier beta;
    };

    enum class CurveKind
    {
        Convex,
        EllConvexNonconvex,
        DegeneratePoint,
    };

    [[nodiscard]] constexpr const char *to_string (CurveKind kind) noexcept
    {
        switch (kind)
        {
        case CurveKind::Convex: return "Convex";
        case CurveKind::EllConvexNonconvex: return "EllConvexNonconvex";
        case CurveKind::DegeneratePoint: return "DegeneratePoint";
        }
        return "Unknown";
    }

    struct CurveClass
    {
        CurveKind kind = CurveKind::EllConvexNonconvex;
        double min_beta = 0.0;
        double min_p = 0.0;
    };

    /// γ(θ) = p(θ)(cos θ, sin θ) + p'(θ)(−sin θ, cos θ)
    [[nodiscard]] inline Point2 eval_point (const SupportFourier &p, double theta) noexcept
    {
        const double c = std::cos (theta);
        const double s = std::sin (theta);
        const double v = p.value (theta);
        const double dv = p.slope (theta);
        return {v * c - dv * s, v * s + dv * c};
    }

    /// β = p + p'': a0 is kept, mode k is scaled by 1 − k², so mode 1 vanishes.
    [[nodiscard]] inline CurvaturePairView beta_of (const SupportFourier &p)
    {
        std::vector<Mode> modes;
        modes.reserve (p.modes ().size ());
        for (const Mode &m : p.modes ())
        {
            const double f = 1.0 - static_cast<double> (m.k) * m.k;
            modes.push_back ({m.k, f * m.a, f * m.b});
        }
        return {1.0, SupportFourier (p.a0 (), std::move (modes))};
    }

    [[nodiscard]] inline double beta_value (const SupportFourier &p, double theta) noexcept
    {
        double sum = p.a0 ();
        for (const Mode &m : p.modes ())
        {
            const double phase = m.k * theta;
            sum += (1.0 - static_cast<double> (m.k) * m.k) * (m.a * std::cos (phase) + m.b * std::sin (phase));
        }
        return sum;
    }

    /// L = ∫p dθ = 2π a0
    [[nodiscard]] inline double algebraic_length (const SupportFourier &p) noexcept { return kTwoPi * p.a0 (); }

    /// A = ½∫p(p + p'') dθ = π a0² + (π/2) Σ_{k≥2} (1 − k²)(a_k² + b_k²)
    [[nodiscard]] inline double algebraic_area (const SupportFourier &p) noexcept
    {
        const double pi = std::numbers::pi;
        double sum = 0.0;
        for (const Mode &m : p.modes ())
            if (m.k >= 2)
                sum += (1.0 - static_cast<double> (m.k) * m.k) * (m.a * m.a + m.b * m.b);
        return pi * p.a0 () * p.a0 () + 0.5 * pi * sum;
    }

    /// ∫ (β^{(order)})² dθ from the modal coefficients; order 0 gives ∫β².
    [[nodiscard]] inline double beta_derivative_energy (const SupportFourier &p, int order = 0) noexcept
    {
        const double pi = std::numbers::pi;
        double sum = 0.0;
        for (const Mode &m : p.modes ())
        {
            const double k2 = static_cast<double> (m.k) * m.k;
            const double f = (1.0 - k2) * (1.0 - k2);
            sum += std::pow (k2, order) * f * (m.a * m.a + m.b * m.b);
        }
        const double constant = order == 0 ? 2.0 * pi * p.a0 () * p.a0 () : 0.0;
        return constant + pi * sum;
    }

    [[nodiscard]] inline Point2 steiner_point (const SupportFourier &p) noexcept
    {
        const auto [a1, b1] = p.coefficient (1);
        return {a1, b1};
    }

    /// κ = ℓ/|β| with ℓ ≡ 1.
    [[nodiscard]] inline double curvature_at (const SupportFourier &p, double theta, double tolerance = kSingularityTolerance)
    {
        const double beta = beta_value (p, theta);
        if (!(std::abs (beta) > tolerance))
            throw Error (ErrorKind::SingularPoint, "curvature_at", "|beta| = " + std::to_string (std::abs (beta)) + " at theta = " + std::to_string (theta));
        return 1.0 / std::abs (beta);
    }

    namespace detail
    {
        inline void require_grid (const SupportFourier &p, std::size_t n, const char *op)
        {
            if (n < 4 * static_cast<std::size_t> (p.order () + 1))
                throw Error (ErrorKind::InvalidArgument, op, "grid of " + std::to_string (n) + " points is below 4(K+1) for K = " + std::to_string (p.order ()));
        }
    } // namespace detail

    /// Zeros of β on [0, 2π), ascending. Sign changes on the N-grid are bisected; grid values with |β| < kRootTolerance
    /// are reported as they are, which also catches tangential zeros.
    [[nodiscard]] inline std::vector<double> singular_angles (const SupportFourier &p, std::size_t n)
    {
        detail::require_grid (p, n, "singular_angles");
        const auto angle = [n] (std::size_t j) { return kTwoPi * static_cast<double> (j) / static_cast<double> (n); };

        std::vector<double> beta (n);
        for (std::size_t j = 0; j < n; ++j)
            beta[j] = beta_value (p, angle (j));
        const auto near_zero = [] (double v) { return std::abs (v) < kRootTolerance; };

        std::vector<double> roots;
        for (std::size_t j = 0; j < n; ++j)
        {
            if (near_zero (beta[j]))
            {
                roots.push_back (angle (j));
                continue;
            }
            const std::size_t next = (j + 1) % n;
            if (near_zero (beta[next]) || (beta[j] > 0.0) == (beta[next] > 0.0))
                continue;

            double lo = angle (j);
            double hi = lo + kTwoPi / static_cast<double> (n);
            double f_lo = beta[j];
            while (hi - lo > kRootPolish)
            {
                const double mid = 0.5 * (lo + hi);
                const double f_mid = beta_value (p, mid);
                if (f_mid == 0.0)
                {
                    lo = hi = mid;
                    break;
                }
                if ((f_mid > 0.0) == (f_lo > 0.0))
                {
                    lo = mid;
                    f_lo = f_mid;
                }
                else
                    hi = mid;
            }
            double root = 0.5 * (lo + hi);
            if (root >= kTwoPi)
                root -= kTwoPi;
            roots.push_back (root);
        }
        std::sort (roots.begin (), roots.end ());
        return roots;
    }

    [[nodiscard]] inline CurveClass classify (const SupportFourier &p, std::size_t n)
    {
        detail::require_grid (p, n, "classify");
        CurveClass out;
        out.min_beta = std::numeric_limits<double>::infinity ();
        out.min_p = std::numeric_limits<double>::infinity ();
        for (std::size_t j = 0; j < n; ++j)
        {
            const double theta = kTwoPi * static_cast<double> (j) / static_cast<double> (n);
            out.min_beta = std::min (out.min_beta, beta_value (p, theta));
            out.min_p = std::min (out.min_p, p.value (theta));
        }

        const bool only_low_modes = p.max_abs_coefficient (2) == 0.0;
        if (only_low_modes && p.a0 () == 0.0)
            out.kind = CurveKind::DegeneratePoint;
        else if (out.min_beta > 0.0 && out.min_p > 0.0)
            out.kind = CurveKind::Convex;
        else
            out.kind = CurveKind::EllConvexNonconvex;
        return out;
    }

    /// (∫β cos θ dθ, ∫β sin θ dθ). Both vanish for any β that comes from a support function.
    [[nodiscard]] inline std::pair<double, double> ell_convex_residuals (const GridFunction &beta)
    {
        double c = 0.0;
        double s = 0.0;
        for (std::size_t j = 0; j < beta.size (); ++j)
        {
            c += beta[j] * std::cos (beta.angle (j));
            s += beta[j] * std::sin (beta.angle (j));
        }
        const double h = kTwoPi / static_cast<double> (beta.size ());
        return {h * c, h * s};
    }
} // namespace lcflow
