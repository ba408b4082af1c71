#pragma once
/**
 * @file   inequalities.hpp
 * @brief  Geometric inequalities for ℓ-convex Legendre curves, evaluated from Fourier coefficients.
 *
 * Every checker returns a slack (LHS − RHS). An inequality holds when slack ≥ −kViolationTolerance.
 *
 *   isoperimetric      L² − 4πA ≥ 0
 *   beta2_area         ∫β² − 2A ≥ 0
 *   beta2_family(τ)    ∫β² − 2A − τ(L²/4π − A) ≥ 0,      τ ≤ 8
 *   beta2_zero_length  ∫β² + τA ≥ 0 when L = 0,          τ ≤ 6
 *   grad_family(ξ)     ∫β_θ² − ξ(L²/4π − A) ≥ 0,         ξ ≤ 24
 *   grad_rescaled      (1/12)∫β_θ² − 2(L²/4π − A) ≥ 0
 *   grad_zero_length   ∫β_θ² + ξA ≥ 0 when L = 0,        ξ ≤ 24
 *   green_osher        ∫β² − (L² − 2πA)/π ≥ 0
 *
 * The τ = 8 and ξ = 24 cases are sharp exactly on curves whose modes k ≥ 3 vanish (parallels of astroids).
 */

#include <lcflow/counter_rng.hpp>
#include <lcflow/curve.hpp>
#include <lcflow/error.hpp>
#include <lcflow/spectral.hpp>
#include <lcflow/support_fourier.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lcflow
{
    inline constexpr double kViolationTolerance = 1e-9;
    inline constexpr double kZeroLengthTolerance = 1e-12;

    enum class InequalityId
    {
        Isoperimetric,
        Beta2Area,
        Beta2Family,
        Beta2ZeroLength,
        GradFamily,
        GradRescaled,
        GradZeroLength,
        GreenOsher,
    };

    [[nodiscard]] constexpr const char *to_string (InequalityId id) noexcept
    {
        switch (id)
        {
        case InequalityId::Isoperimetric: return "isoperimetric";
        case InequalityId::Beta2Area: return "beta2_area";
        case InequalityId::Beta2Family: return "beta2_family";
        case InequalityId::Beta2ZeroLength: return "beta2_zero_length";
        case InequalityId::GradFamily: return "grad_family";
        case InequalityId::GradRescaled: return "grad_rescaled";
        case InequalityId::GradZeroLength: return "grad_zero_length";
        case InequalityId::GreenOsher: return "green_osher";
        }
        return "unknown";
    }

    [[nodiscard]] constexpr bool takes_parameter (InequalityId id) noexcept
    {
        return id == InequalityId::Beta2Family || id == InequalityId::Beta2ZeroLength || id == InequalityId::GradFamily || id == InequalityId::GradZeroLength;
    }

    [[nodiscard]] constexpr bool requires_zero_length (InequalityId id) noexcept
    {
        return id == InequalityId::Beta2ZeroLength || id == InequalityId::GradZeroLength;
    }

    struct InequalityReport
    {
        InequalityId id = InequalityId::Isoperimetric;
        std::optional<double> parameter;
        double slack = 0.0;
        bool holds = true;
        bool expected_violable = false; ///< parameter lies beyond the proven range
        SupportFourier witness;
        std::size_t witness_index = 0;
        std::size_t checked = 1;
        std::size_t violations = 0;
    };

    namespace detail
    {
        inline InequalityReport make_report (InequalityId id, std::optional<double> parameter, double slack, const SupportFourier &p, bool violable = false)
        {
            InequalityReport r;
            r.id = id;
            r.parameter = parameter;
            r.slack = slack;
            r.holds = slack >= -kViolationTolerance;
            r.expected_violable = violable;
            r.witness = p;
            r.violations = r.holds ? 0 : 1;
            return r;
        }

        /// L²/4π − A
        inline double area_gap (const SupportFourier &p) noexcept
        {
            const double L = algebraic_length (p);
            return L * L / (4.0 * std::numbers::pi) - algebraic_area (p);
        }

        inline void require_zero_length (const SupportFourier &p, const char *op)
        {
            const double L = algebraic_length (p);
            if (std::abs (L) > kZeroLengthTolerance)
                throw Error (ErrorKind::NotZeroLength, op, "algebraic length is " + std::to_string (L));
        }
    } // namespace detail

    [[nodiscard]] inline double isoperimetric_deficit (const SupportFourier &p) noexcept
    {
        const double L = algebraic_length (p);
        return L * L - 4.0 * std::numbers::pi * algebraic_area (p);
    }

    [[nodiscard]] inline InequalityReport check_isoperimetric (const SupportFourier &p)
    {
        return detail::make_report (InequalityId::Isoperimetric, std::nullopt, isoperimetric_deficit (p), p);
    }

    [[nodiscard]] inline InequalityReport check_beta2_area (const SupportFourier &p)
    {
        return detail::make_report (InequalityId::Beta2Area, std::nullopt, beta_derivative_energy (p, 0) - 2.0 * algebraic_area (p), p);
    }

    [[nodiscard]] inline InequalityReport check_beta2_family (const SupportFourier &p, double tau)
    {
        const double slack = beta_derivative_energy (p, 0) - 2.0 * algebraic_area (p) - tau * detail::area_gap (p);
        return detail::make_report (InequalityId::Beta2Family, tau, slack, p, tau > 8.0);
    }

    [[nodiscard]] inline InequalityReport check_beta2_zero_length (const SupportFourier &p, double tau)
    {
        detail::require_zero_length (p, "check_beta2_zero_length");
        const double slack = beta_derivative_energy (p, 0) + tau * algebraic_area (p);
        return detail::make_report (InequalityId::Beta2ZeroLength, tau, slack, p, tau > 6.0);
    }

    [[nodiscard]] inline InequalityReport check_grad_family (const SupportFourier &p, double xi)
    {
        const double slack = beta_derivative_energy (p, 1) - xi * detail::area_gap (p);
        return detail::make_report (InequalityId::GradFamily, xi, slack, p, xi > 24.0);
    }

    /// (1/12)∫β_θ² − 2(L²/4π − A): the ξ = 24 case divided by 12.
    [[nodiscard]] inline InequalityReport check_grad_rescaled (const SupportFourier &p)
    {
        const double slack = beta_derivative_energy (p, 1) / 12.0 - 2.0 * detail::area_gap (p);
        return detail::make_report (InequalityId::GradRescaled, std::nullopt, slack, p);
    }

    [[nodiscard]] inline InequalityReport check_grad_zero_length (const SupportFourier &p, double xi)
    {
        detail::require_zero_length (p, "check_grad_zero_length");
        const double slack = beta_derivative_energy (p, 1) + xi * algebraic_area (p);
        return detail::make_report (InequalityId::GradZeroLength, xi, slack, p, xi > 24.0);
    }

    /// Green–Osher with F(x) = x²: ∫β² ≥ (L² − 2πA)/π.
    [[nodiscard]] inline InequalityReport green_osher_quadratic (const SupportFourier &p)
    {
        const double L = algebraic_length (p);
        const double pi = std::numbers::pi;
        const double slack = beta_derivative_energy (p, 0) - (L * L - 2.0 * pi * algebraic_area (p)) / pi;
        return detail::make_report (InequalityId::GreenOsher, std::nullopt, slack, p);
    }

    /// Returns (∫(f')², 4∫f²) for a series f that carries no mass on the excluded modes (0 denotes the constant).
    [[nodiscard]] inline std::pair<double, double> wirtinger_gap (const SupportFourier &series, const std::set<int> &excluded_modes = {0, 1})
    {
        constexpr double tol = 1e-12;
        if (excluded_modes.contains (0) && std::abs (series.a0 ()) > tol)
            throw Error (ErrorKind::ModeNotExcluded, "wirtinger_gap", "constant mode carries " + std::to_string (series.a0 ()));
        for (const Mode &m : series.modes ())
            if (excluded_modes.contains (m.k) && (std::abs (m.a) > tol || std::abs (m.b) > tol))
                throw Error (ErrorKind::ModeNotExcluded, "wirtinger_gap", "mode " + std::to_string (m.k) + " is not empty");
        const L2Quantities q = l2_quantities (series);
        return {q.int_dp2, 4.0 * q.int_p2};
    }

    /// p = a0 + a1 cos θ + b1 sin θ + a2 cos 2θ + b2 sin 2θ
    [[nodiscard]] inline SupportFourier equality_family (double a0, double a1, double b1, double a2, double b2)
    {
        return SupportFourier (a0, {{1, a1, b1}, {2, a2, b2}});
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Random ensembles

    enum class CurveConstraint
    {
        None,
        PositiveArea,
        ZeroLength,
        Convex,
    };

    struct CurveEnsembleSpec
    {
        std::uint64_t seed = 1;
        std::size_t count = 1;
        int K = 4;
        double amplitude_decay = 1.0; ///< mode k coefficients are drawn from [−(k+1)^{−s}, (k+1)^{−s}]
        CurveConstraint constraint = CurveConstraint::None;
    };

    inline constexpr int kMaxResamples = 10000;

    /// Curve number `index` of the ensemble. Each coefficient is keyed by (seed, index, attempt, mode, slot).
    [[nodiscard]] inline SupportFourier random_curve (const CurveEnsembleSpec &spec, std::size_t index)
    {
        if (spec.count < 1 || index >= spec.count)
            throw Error (ErrorKind::InvalidArgument, "random_curve", "index " + std::to_string (index) + " outside ensemble of " + std::to_string (spec.count));
        if (spec.K < 0 || !(spec.amplitude_decay >= 0.0))
            throw Error (ErrorKind::InvalidArgument, "random_curve", "K and amplitude_decay must be non-negative");

        const auto draw = [&] (std::uint64_t attempt, int mode, int slot) {
            const double bound = std::pow (static_cast<double> (mode + 1), -spec.amplitude_decay);
            return keyed_uniform (-bound, bound, {spec.seed, static_cast<std::uint64_t> (index), attempt, static_cast<std::uint64_t> (mode), static_cast<std::uint64_t> (slot)});
        };

        for (std::uint64_t attempt = 0; attempt < static_cast<std::uint64_t> (kMaxResamples); ++attempt)
        {
            std::vector<Mode> modes;
            modes.reserve (static_cast<std::size_t> (spec.K));
            for (int k = 1; k <= spec.K; ++k)
                modes.push_back ({k, draw (attempt, k, 0), draw (attempt, k, 1)});
            SupportFourier p (draw (attempt, 0, 0), std::move (modes));

            switch (spec.constraint)
            {
            case CurveConstraint::None: return p;
            case CurveConstraint::ZeroLength: return p.with_a0 (0.0);
            case CurveConstraint::PositiveArea:
                if (algebraic_area (p) > 0.01)
                    return p;
                break;
            case CurveConstraint::Convex:
            {
                // β − a0 and p − a0 do not depend on a0; lift a0 until both minima clear 0.1 on the 4(K+1) grid.
                const std::size_t n = 4 * static_cast<std::size_t> (spec.K + 1);
                const SupportFourier shape = p.with_a0 (0.0);
                double lift = -std::numeric_limits<double>::infinity ();
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double theta = kTwoPi * static_cast<double> (j) / static_cast<double> (n);
                    lift = std::max ({lift, 0.1 - beta_value (shape, theta), 0.1 - shape.value (theta)});
                }
                return p.with_a0 (std::max (p.a0 (), lift + 0.01));
            }
            }
        }
        throw Error (ErrorKind::RejectionExhausted, "random_curve", "no admissible curve after " + std::to_string (kMaxResamples) + " draws");
    }

    struct InequalityCheck
    {
        InequalityId id = InequalityId::Isoperimetric;
        double parameter = 0.0; ///< τ or ξ; ignored by checks without a parameter
    };

    [[nodiscard]] inline InequalityReport apply_check (const InequalityCheck &check, const SupportFourier &p)
    {
        switch (check.id)
        {
        case InequalityId::Isoperimetric: return check_isoperimetric (p);
        case InequalityId::Beta2Area: return check_beta2_area (p);
        case InequalityId::Beta2Family: return check_beta2_family (p, check.parameter);
        case InequalityId::Beta2ZeroLength: return check_beta2_zero_length (p, check.parameter);
        case InequalityId::GradFamily: return check_grad_family (p, check.parameter);
        case InequalityId::GradRescaled: return check_grad_rescaled (p);
        case InequalityId::GradZeroLength: return check_grad_zero_length (p, check.parameter);
        case InequalityId::GreenOsher: return green_osher_quadratic (p);
        }
        throw Error (ErrorKind::InvalidArgument, "apply_check", "unknown inequality");
    }

    /// Applies every check to every curve; each report keeps the minimum slack, its curve and the violation count.
    /// Ties on slack keep the lowest index, so the result does not depend on evaluation order.
    [[nodiscard]] inline std::vector<InequalityReport> run_ensemble (const CurveEnsembleSpec &spec, const std::vector<InequalityCheck> &checks)
    {
        std::vector<InequalityReport> out;
        out.reserve (checks.size ());
        for (const InequalityCheck &c : checks)
        {
            InequalityReport agg;
            agg.id = c.id;
            if (takes_parameter (c.id))
                agg.parameter = c.parameter;
            agg.slack = std::numeric_limits<double>::infinity ();
            agg.checked = 0;
            out.push_back (agg);
        }

        for (std::size_t i = 0; i < spec.count; ++i)
        {
            const SupportFourier p = random_curve (spec, i);
            for (std::size_t c = 0; c < checks.size (); ++c)
            {
                const InequalityReport r = apply_check (checks[c], p);
                InequalityReport &agg = out[c];
                ++agg.checked;
                agg.violations += r.holds ? 0 : 1;
                agg.expected_violable = r.expected_violable;
                if (r.slack < agg.slack)
                {
                    agg.slack = r.slack;
                    agg.witness = p;
                    agg.witness_index = i;
                }
            }
        }
        for (InequalityReport &agg : out)
            agg.holds = agg.violations == 0;
        return out;
    }
} // namespace lcflow
