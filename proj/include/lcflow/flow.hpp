#pragma once
/**
 * @file   flow.hpp
 * @brief  Nonlocal inverse curvature flows ∂p/∂t = β − λ(t) on Fourier support functions.
 *
 * Two choices of the nonlocal term are supported:
 *   - length-preserving: λ = L/2π = a0
 *   - area-preserving:   λ = (1/L)∫β² dθ
 *
 * In Fourier space modes k ≥ 1 decouple and evolve as e^{(1−k²)t}; only a0 feels λ. The ExactModal scheme uses
 * this directly. GridRK4 is a method-of-lines RK4 on grid samples with a band-limited spectral p_θθ and serves as
 * an independent cross-check.
 */

#include <lcflow/curve.hpp>
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
    enum class FlowType
    {
        AreaPreserving,
        LengthPreserving,
    };

    enum class Scheme
    {
        ExactModal,
        GridRK4,
    };

    enum class RunStatus
    {
        Completed,
        Converged,
    };

    [[nodiscard]] constexpr const char *to_string (FlowType t) noexcept
    {
        return t == FlowType::AreaPreserving ? "area" : "length";
    }

    [[nodiscard]] constexpr const char *to_string (Scheme s) noexcept { return s == Scheme::ExactModal ? "exact" : "grid"; }

    struct FlowConfig
    {
        FlowType flow_type = FlowType::LengthPreserving;
        SupportFourier initial;
        double t_final = 6.0;
        double dt = 1e-3;
        Scheme scheme = Scheme::ExactModal;
        std::size_t grid_N = 256;
        int record_every = 1;
        double stop_sup_dev = 0.0; ///< stop once sup|β − L/2π| drops below this; 0 disables
        double lambda_floor = 1e-9;
        int grid_band = 0; ///< GridRK4 only: modes kept in p_θθ; 0 picks the widest band the step size allows
    };

    struct FlowState
    {
        double t = 0.0;
        SupportFourier p;
    };

    struct DiagnosticsRow
    {
        double t = 0.0;
        double L = 0.0;
        double A = 0.0;
        double deficit_U = 0.0; ///< L² − 4πA
        double sup_dev = 0.0;   ///< sup_θ |β − L/2π| on the diagnostic grid
        double Q = 0.0;         ///< L²/2π − ∫β²
        double lambda = 0.0;
        double E1 = 0.0; ///< ∫(β')²
        double E2 = 0.0; ///< ∫(β'')²
        double a0 = 0.0;
        double max_mode = 0.0; ///< max |a_k|, |b_k| over k ≥ 2
        SupportFourier p;
    };

    struct FlowTrace
    {
        FlowConfig config;
        std::vector<DiagnosticsRow> rows;
        FlowState final_state;
        RunStatus status = RunStatus::Completed;
    };

    // ---------------------------------------------------------------------------------------------------------------
    // Nonlocal terms and the modal right-hand side

    [[nodiscard]] inline double lambda_length (const FlowState &state) noexcept { return state.p.a0 (); }

    namespace detail
    {
        inline void require_length (double a0, double lambda_floor, const char *op)
        {
            const double L = kTwoPi * a0;
            if (!(std::abs (L) >= lambda_floor))
                throw Error (ErrorKind::DegenerateLength, op, "|L| = " + std::to_string (std::abs (L)) + " is below the floor " + std::to_string (lambda_floor));
        }

        /// Σ_{k≥2} (k² − 1)² (a_k² + b_k²), the part of ∫β²/π that does not involve a0.
        inline double shape_energy (const SupportFourier &p) noexcept
        {
            double sum = 0.0;
            for (const Mode &m : p.modes ())
            {
                const double f = static_cast<double> (m.k) * m.k - 1.0;
                sum += f * f * (m.a * m.a + m.b * m.b);
            }
            return sum;
        }
    } // namespace detail

    /// λ = (1/L)∫β² dθ = (2π a0² + π Σ (1−k²)²(a_k² + b_k²)) / (2π a0)
    [[nodiscard]] inline double lambda_area (const FlowState &state, double lambda_floor = 1e-9)
    {
        detail::require_length (state.p.a0 (), lambda_floor, "lambda_area");
        return beta_derivative_energy (state.p, 0) / algebraic_length (state.p);
    }

    [[nodiscard]] inline double lambda_of (const FlowState &state, FlowType type, double lambda_floor = 1e-9)
    {
        return type == FlowType::LengthPreserving ? lambda_length (state) : lambda_area (state, lambda_floor);
    }

    /// Time derivative of every coefficient: da0/dt = a0 − λ, d(a_k, b_k)/dt = (1 − k²)(a_k, b_k).
    ///
    /// For the area-preserving flow a0 − λ simplifies to −S/(2 a0) with S = Σ (k²−1)²(a_k² + b_k²); that form is
    /// used because it avoids subtracting two nearly equal numbers.
    [[nodiscard]] inline SupportFourier modal_rhs (const FlowState &state, FlowType type, double lambda_floor = 1e-9)
    {
        double da0 = 0.0;
        if (type == FlowType::AreaPreserving)
        {
            detail::require_length (state.p.a0 (), lambda_floor, "modal_rhs");
            da0 = -detail::shape_energy (state.p) / (2.0 * state.p.a0 ());
        }
        std::vector<Mode> modes (state.p.modes ().begin (), state.p.modes ().end ());
        for (Mode &m : modes)
        {
            const double rate = 1.0 - static_cast<double> (m.k) * m.k;
            m.a *= rate;
            m.b *= rate;
        }
        return SupportFourier (da0, std::move (modes));
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Exact modal stepping

    /// One step of length dt. Modes k ≥ 1 are advanced exactly; for the area-preserving flow a0 is advanced by RK4 on
    /// da0/dt = −S(t)/(2 a0), with S(t) taken from the exactly decayed modes at each stage time.
    [[nodiscard]] inline FlowState step_exact_modal (const FlowState &state, double dt, FlowType type, double lambda_floor = 1e-9)
    {
        if (!(dt > 0.0))
            throw Error (ErrorKind::InvalidArgument, "step_exact_modal", "dt must be positive");

        std::vector<Mode> modes (state.p.modes ().begin (), state.p.modes ().end ());
        for (Mode &m : modes)
        {
            const double factor = std::exp ((1.0 - static_cast<double> (m.k) * m.k) * dt);
            m.a *= factor;
            m.b *= factor;
        }

        double a0 = state.p.a0 ();
        if (type == FlowType::AreaPreserving)
        {
            // S(τ) = Σ (k²−1)² c_k e^{2(1−k²)τ}
            const auto energy_at = [&state] (double tau) {
                double sum = 0.0;
                for (const Mode &m : state.p.modes ())
                {
                    const double f = static_cast<double> (m.k) * m.k - 1.0;
                    sum += f * f * (m.a * m.a + m.b * m.b) * std::exp (-2.0 * f * tau);
                }
                return sum;
            };
            const auto rate = [&] (double tau, double y) {
                detail::require_length (y, lambda_floor, "step_exact_modal");
                return -energy_at (tau) / (2.0 * y);
            };
            const double k1 = rate (0.0, a0);
            const double k2 = rate (0.5 * dt, a0 + 0.5 * dt * k1);
            const double k3 = rate (0.5 * dt, a0 + 0.5 * dt * k2);
            const double k4 = rate (dt, a0 + dt * k3);
            a0 += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            detail::require_length (a0, lambda_floor, "step_exact_modal");
        }
        return {state.t + dt, SupportFourier (a0, std::move (modes))};
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Grid RK4 (method of lines)

    struct GridState
    {
        double t = 0.0;
        GridFunction p;
    };

    /// Largest band K with the explicit stability bound dt ≤ 1/(K² + 1), capped at N/2 − 1.
    [[nodiscard]] inline int stable_band (double dt, std::size_t n)
    {
        const int nyquist = static_cast<int> (n / 2) - 1;
        if (!(dt > 0.0))
            return nyquist;
        const double k = std::floor (std::sqrt (std::max (0.0, 1.0 / dt - 1.0)));
        return static_cast<int> (std::min<double> (nyquist, k));
    }

    /// RK4 integrator for p_t = p_θθ + p − λ(t) on grid samples. p_θθ is spectral, restricted to modes ≤ band.
    class GridRk4Stepper
    {
    public:
        GridRk4Stepper (std::size_t n, int band, FlowType type, double lambda_floor)
            : n_ (n), band_ (band), type_ (type), lambda_floor_ (lambda_floor)
        {
            if (band < 0 || 2 * static_cast<std::size_t> (band) + 2 > n)
                throw Error (ErrorKind::AliasError, "step_grid_rk4", "band " + std::to_string (band) + " does not fit a " + std::to_string (n) + "-point grid");
            cos_.resize (static_cast<std::size_t> (band) * n);
            sin_.resize (static_cast<std::size_t> (band) * n);
            for (int k = 1; k <= band; ++k)
                for (std::size_t j = 0; j < n; ++j)
                {
                    const double phase = kTwoPi * static_cast<double> ((static_cast<std::size_t> (k) * j) % n) / static_cast<double> (n);
                    cos_[index (k, j)] = std::cos (phase);
                    sin_[index (k, j)] = std::sin (phase);
                }
        }

        [[nodiscard]] int band () const noexcept { return band_; }

        [[nodiscard]] GridState step (const GridState &state, double dt) const
        {
            if (!(dt > 0.0))
                throw Error (ErrorKind::InvalidArgument, "step_grid_rk4", "dt must be positive");
            const double bound = 1.0 / (static_cast<double> (band_) * band_ + 1.0);
            if (dt > bound)
                throw Error (ErrorKind::StabilityError, "step_grid_rk4", "dt = " + std::to_string (dt) + " exceeds 1/(K^2+1) = " + std::to_string (bound) + " for K = " + std::to_string (band_));
            if (state.p.size () != n_)
                throw Error (ErrorKind::InvalidArgument, "step_grid_rk4", "grid size mismatch");

            const std::vector<double> y (state.p.values ().begin (), state.p.values ().end ());
            const auto axpy = [] (const std::vector<double> &base, double h, const std::vector<double> &dir) {
                std::vector<double> out (base.size ());
                for (std::size_t j = 0; j < base.size (); ++j)
                    out[j] = base[j] + h * dir[j];
                return out;
            };
            const std::vector<double> k1 = rhs (y);
            const std::vector<double> k2 = rhs (axpy (y, 0.5 * dt, k1));
            const std::vector<double> k3 = rhs (axpy (y, 0.5 * dt, k2));
            const std::vector<double> k4 = rhs (axpy (y, dt, k3));
            std::vector<double> next (n_);
            for (std::size_t j = 0; j < n_; ++j)
                next[j] = y[j] + dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            return {state.t + dt, GridFunction (std::move (next))};
        }

        /// Band-limited modal content of grid data.
        [[nodiscard]] SupportFourier project (const GridFunction &g) const
        {
            std::vector<double> a, b;
            const double mean = transform (g.values (), a, b);
            std::vector<Mode> modes;
            modes.reserve (static_cast<std::size_t> (band_));
            for (int k = 1; k <= band_; ++k)
                modes.push_back ({k, a[static_cast<std::size_t> (k - 1)], b[static_cast<std::size_t> (k - 1)]});
            return SupportFourier (mean, std::move (modes));
        }

    private:
        [[nodiscard]] std::size_t index (int k, std::size_t j) const noexcept { return static_cast<std::size_t> (k - 1) * n_ + j; }

        double transform (std::span<const double> y, std::vector<double> &a, std::vector<double> &b) const
        {
            a.assign (static_cast<std::size_t> (band_), 0.0);
            b.assign (static_cast<std::size_t> (band_), 0.0);
            double mean = 0.0;
            for (double v : y)
                mean += v;
            const double scale = 2.0 / static_cast<double> (n_);
            for (int k = 1; k <= band_; ++k)
            {
                double sa = 0.0;
                double sb = 0.0;
                for (std::size_t j = 0; j < n_; ++j)
                {
                    sa += y[j] * cos_[index (k, j)];
                    sb += y[j] * sin_[index (k, j)];
                }
                a[static_cast<std::size_t> (k - 1)] = scale * sa;
                b[static_cast<std::size_t> (k - 1)] = scale * sb;
            }
            return mean / static_cast<double> (n_);
        }

        [[nodiscard]] std::vector<double> rhs (const std::vector<double> &y) const
        {
            std::vector<double> a, b;
            transform (y, a, b);

            // β = p + p_θθ
            std::vector<double> beta (y);
            for (int k = 1; k <= band_; ++k)
            {
                const double k2 = static_cast<double> (k) * k;
                const double ak = a[static_cast<std::size_t> (k - 1)];
                const double bk = b[static_cast<std::size_t> (k - 1)];
                for (std::size_t j = 0; j < n_; ++j)
                    beta[j] -= k2 * (ak * cos_[index (k, j)] + bk * sin_[index (k, j)]);
            }

            const double h = kTwoPi / static_cast<double> (n_);
            double length = 0.0;
            for (double v : y)
                length += v;
            length *= h;

            double lambda = length / kTwoPi;
            if (type_ == FlowType::AreaPreserving)
            {
                if (!(std::abs (length) >= lambda_floor_))
                    throw Error (ErrorKind::DegenerateLength, "step_grid_rk4", "|L| = " + std::to_string (std::abs (length)) + " is below the floor");
                double beta2 = 0.0;
                for (double v : beta)
                    beta2 += v * v;
                lambda = h * beta2 / length;
            }
            for (double &v : beta)
                v -= lambda;
            return beta;
        }

        std::size_t n_;
        int band_;
        FlowType type_;
        double lambda_floor_;
        std::vector<double> cos_;
        std::vector<double> sin_;
    };

    [[nodiscard]] inline GridState step_grid_rk4 (const GridState &state, double dt, FlowType type, int band, double lambda_floor = 1e-9)
    {
        return GridRk4Stepper (state.p.size (), band, type, lambda_floor).step (state, dt);
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Diagnostics

    [[nodiscard]] inline double sup_deviation (const SupportFourier &p, std::size_t n)
    {
        double out = 0.0;
        for (std::size_t j = 0; j < n; ++j)
        {
            const double theta = kTwoPi * static_cast<double> (j) / static_cast<double> (n);
            out = std::max (out, std::abs (beta_value (p, theta) - p.a0 ()));
        }
        return out;
    }

    [[nodiscard]] inline DiagnosticsRow make_row (double t, const SupportFourier &p, FlowType type, std::size_t grid_n, double lambda_floor)
    {
        DiagnosticsRow row;
        row.t = t;
        row.L = algebraic_length (p);
        row.A = algebraic_area (p);
        row.deficit_U = row.L * row.L - 4.0 * std::numbers::pi * row.A;
        row.sup_dev = sup_deviation (p, grid_n);
        // L²/2π − ∫β² = −π Σ (k²−1)² c_k exactly; the a0 terms cancel identically.
        row.Q = -std::numbers::pi * detail::shape_energy (p);
        row.lambda = lambda_of ({t, p}, type, lambda_floor);
        row.E1 = beta_derivative_energy (p, 1);
        row.E2 = beta_derivative_energy (p, 2);
        row.a0 = p.a0 ();
        row.max_mode = p.max_abs_coefficient (2);
        row.p = p;
        return row;
    }

    struct SpeedIntegrals
    {
        double int_f = 0.0;      ///< ∫ f dθ, equals dL/dt
        double int_beta_f = 0.0; ///< ∫ β f dθ, equals dA/dt
        double int_abs_f = 0.0;
        double int_abs_beta_f = 0.0;
    };

    /// Normal speed f = β − λ integrated on an N-point grid by the trapezoid rule.
    [[nodiscard]] inline SpeedIntegrals speed_integrals (const SupportFourier &p, FlowType type, std::size_t n, double lambda_floor = 1e-9)
    {
        const GridFunction grid = synthesize (p, n);
        const GridFunction pp = synthesize (derivative (p, 2), n);
        const double length = periodic_quadrature (grid);
        std::vector<double> beta (n);
        double beta2 = 0.0;
        for (std::size_t j = 0; j < n; ++j)
        {
            beta[j] = grid[j] + pp[j];
            beta2 += beta[j] * beta[j];
        }
        double lambda = length / kTwoPi;
        if (type == FlowType::AreaPreserving)
        {
            if (!(std::abs (length) >= lambda_floor))
                throw Error (ErrorKind::DegenerateLength, "speed_integrals", "|L| below floor");
            lambda = kTwoPi / static_cast<double> (n) * beta2 / length;
        }
        SpeedIntegrals out;
        const double h = kTwoPi / static_cast<double> (n);
        for (std::size_t j = 0; j < n; ++j)
        {
            const double f = beta[j] - lambda;
            out.int_f += h * f;
            out.int_beta_f += h * beta[j] * f;
            out.int_abs_f += h * std::abs (f);
            out.int_abs_beta_f += h * std::abs (beta[j] * f);
        }
        return out;
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Driver

    namespace detail
    {
        inline void validate (const FlowConfig &config)
        {
            const auto fail = [] (const std::string &what) { throw Error (ErrorKind::InvalidArgument, "run", what); };
            if (!(config.dt > 0.0) || !std::isfinite (config.dt))
                fail ("dt must be positive and finite");
            if (!(config.t_final >= 0.0) || !std::isfinite (config.t_final))
                fail ("t_final must be >= 0");
            if (config.t_final > 0.0 && config.dt > config.t_final)
                fail ("dt exceeds t_final");
            if (config.record_every < 1)
                fail ("record_every must be >= 1");
            if (!(config.stop_sup_dev >= 0.0))
                fail ("stop_sup_dev must be >= 0");
            if (!(config.lambda_floor > 0.0))
                fail ("lambda_floor must be positive");
            const std::size_t n = config.grid_N;
            if (n < 8 || (n & (n - 1)) != 0)
                fail ("grid_N must be a power of two >= 8");
            if (n < 2 * static_cast<std::size_t> (config.initial.order ()) + 2)
                throw Error (ErrorKind::AliasError, "run", "grid_N too small for the initial curve");
            if (config.flow_type == FlowType::AreaPreserving)
            {
                require_length (config.initial.a0 (), config.lambda_floor, "run");
                if (!(algebraic_area (config.initial) > 0.0))
                    throw Error (ErrorKind::NonPositiveArea, "run", "area-preserving flow needs a positive initial algebraic area");
            }
        }

        inline Error at_time (const Error &e, double t)
        {
            return Error (e.kind (), "run", "at t = " + std::to_string (t) + ": " + e.what ());
        }
    } // namespace detail

    /// Integrates the flow to t_final (or until sup_dev < stop_sup_dev), recording a row at t = 0, every
    /// record_every steps and at the final step.
    [[nodiscard]] inline FlowTrace run (const FlowConfig &config)
    {
        detail::validate (config);

        FlowTrace trace;
        trace.config = config;

        const double dt = config.dt;
        const long steps = config.t_final == 0.0 ? 0 : static_cast<long> (std::ceil (config.t_final / dt - 1e-9));
        const auto time_of = [&] (long n) { return n == steps ? config.t_final : std::min (static_cast<double> (n) * dt, config.t_final); };
        const auto record = [&] (double t, const SupportFourier &p) {
            trace.rows.push_back (make_row (t, p, config.flow_type, config.grid_N, config.lambda_floor));
        };

        if (config.scheme == Scheme::ExactModal)
        {
            FlowState state{0.0, config.initial};
            record (0.0, state.p);
            for (long n = 1; n <= steps; ++n)
            {
                const double t_prev = time_of (n - 1);
                const double t = time_of (n);
                try
                {
                    state = step_exact_modal (state, t - t_prev, config.flow_type, config.lambda_floor);
                }
                catch (const Error &e)
                {
                    throw detail::at_time (e, t_prev);
                }
                // Modes k ≥ 1 are taken from t = 0 rather than compounded step by step, which keeps rounding from accumulating.
                std::vector<Mode> modes (config.initial.modes ().begin (), config.initial.modes ().end ());
                for (Mode &m : modes)
                {
                    const double factor = std::exp ((1.0 - static_cast<double> (m.k) * m.k) * t);
                    m.a *= factor;
                    m.b *= factor;
                }
                state = {t, SupportFourier (state.p.a0 (), std::move (modes))};
                const bool converged = config.stop_sup_dev > 0.0 && sup_deviation (state.p, config.grid_N) < config.stop_sup_dev;
                if (n % config.record_every == 0 || n == steps || converged)
                    record (t, state.p);
                if (converged)
                {
                    trace.status = RunStatus::Converged;
                    break;
                }
            }
            trace.final_state = state;
            return trace;
        }

        int band = config.grid_band;
        if (band == 0)
        {
            band = stable_band (dt, config.grid_N);
            if (band < config.initial.order ())
                throw Error (ErrorKind::StabilityError, "run", "dt = " + std::to_string (dt) + " only admits modes up to " + std::to_string (band) + " but the initial curve has mode " + std::to_string (config.initial.order ()));
        }
        else if (band < config.initial.order ())
            throw Error (ErrorKind::InvalidArgument, "run", "grid_band is below the initial curve's order");

        const GridRk4Stepper stepper (config.grid_N, band, config.flow_type, config.lambda_floor);
        GridState state{0.0, synthesize (config.initial, config.grid_N)};
        // Mode 1 is carried exactly by the grid scheme; report it from the projection like every other mode.
        record (0.0, stepper.project (state.p));
        for (long n = 1; n <= steps; ++n)
        {
            const double t_prev = time_of (n - 1);
            const double t = time_of (n);
            try
            {
                state = stepper.step (state, t - t_prev);
            }
            catch (const Error &e)
            {
                throw detail::at_time (e, t_prev);
            }
            state.t = t;
            const bool needs_modes = n % config.record_every == 0 || n == steps || config.stop_sup_dev > 0.0;
            if (!needs_modes)
                continue;
            const SupportFourier p = stepper.project (state.p);
            const bool converged = config.stop_sup_dev > 0.0 && sup_deviation (p, config.grid_N) < config.stop_sup_dev;
            if (n % config.record_every == 0 || n == steps || converged)
                record (t, p);
            if (converged)
            {
                trace.status = RunStatus::Converged;
                break;
            }
        }
        trace.final_state = {state.t, stepper.project (state.p)};
        return trace;
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Post-processing

    enum class DecayField
    {
        SupDev,
        AbsQ,
        E1,
        ModeK,
    };

    struct DecayFit
    {
        double alpha = 0.0; ///< fitted rate: field ≈ C e^{−alpha t}
        double r2 = 0.0;
        std::size_t samples = 0;
    };

    [[nodiscard]] inline double field_value (const DiagnosticsRow &row, DecayField field, int mode_k = 0)
    {
        switch (field)
        {
        case DecayField::SupDev: return row.sup_dev;
        case DecayField::AbsQ: return std::abs (row.Q);
        case DecayField::E1: return row.E1;
        case DecayField::ModeK:
        {
            const auto [a, b] = row.p.coefficient (mode_k);
            return std::hypot (a, b);
        }
        }
        return 0.0;
    }

    /// Least-squares slope of log(field) against t over rows with t in [t_lo, t_hi].
    [[nodiscard]] inline DecayFit fit_decay_rate (const FlowTrace &trace, DecayField field, double t_lo, double t_hi, int mode_k = 0)
    {
        std::vector<std::pair<double, double>> pts;
        for (const DiagnosticsRow &row : trace.rows)
        {
            if (row.t < t_lo || row.t > t_hi)
                continue;
            const double v = field_value (row, field, mode_k);
            if (!(v > 1e-13))
                throw Error (ErrorKind::WindowTooNoisy, "fit_decay_rate", "value " + std::to_string (v) + " at t = " + std::to_string (row.t) + " is at the noise floor");
            pts.emplace_back (row.t, std::log (v));
        }
        if (pts.size () < 3)
            throw Error (ErrorKind::InvalidArgument, "fit_decay_rate", "window holds fewer than 3 rows");

        const double n = static_cast<double> (pts.size ());
        double mx = 0.0, my = 0.0;
        for (const auto &[x, y] : pts)
        {
            mx += x;
            my += y;
        }
        mx /= n;
        my /= n;
        double sxx = 0.0, sxy = 0.0, syy = 0.0;
        for (const auto &[x, y] : pts)
        {
            sxx += (x - mx) * (x - mx);
            sxy += (x - mx) * (y - my);
            syy += (y - my) * (y - my);
        }
        const double slope = sxy / sxx;
        double ss_res = 0.0;
        for (const auto &[x, y] : pts)
        {
            const double r = y - (my + slope * (x - mx));
            ss_res += r * r;
        }
        DecayFit fit{-slope, syy > 0.0 ? 1.0 - ss_res / syy : 1.0, pts.size ()};
        if (fit.r2 < 0.99)
            throw Error (ErrorKind::WindowTooNoisy, "fit_decay_rate", "r2 = " + std::to_string (fit.r2));
        return fit;
    }

    struct LimitCircle
    {
        Point2 center;
        double radius = 0.0;
        double residual = 0.0;
    };

    [[nodiscard]] inline LimitCircle limit_circle (const FlowTrace &trace)
    {
        const SupportFourier &p = trace.final_state.p;
        const double residual = p.max_abs_coefficient (2);
        if (!(residual < 1e-6))
            throw Error (ErrorKind::NotConverged, "limit_circle", "modes k >= 2 still reach " + std::to_string (residual));
        return {steiner_point (p), p.a0 (), residual};
    }
} // namespace lcflow
