#pragma once
/**
 * @file   support_fourier.hpp
 * @brief  Truncated Fourier series on the circle, used for support functions p(θ) and everything derived from them.
 *
 * A series is a0 + Σ_k (a_k cos kθ + b_k sin kθ) over a finite, sparse set of modes k ≥ 1 kept in increasing order.
 */

#include <lcflow/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcflow
{
    inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator== (const Point2 &, const Point2 &) = default;
    };

    /// One Fourier mode k ≥ 1 with cosine coefficient a and sine coefficient b.
    struct Mode
    {
        int k = 1;
        double a = 0.0;
        double b = 0.0;

        friend bool operator== (const Mode &, const Mode &) = default;
    };

    class SupportFourier
    {
    public:
        SupportFourier () = default;

        explicit SupportFourier (double a0, std::vector<Mode> modes = {}) : a0_ (a0), modes_ (std::move (modes))
        {
            std::sort (modes_.begin (), modes_.end (), [] (const Mode &l, const Mode &r) { return l.k < r.k; });
            for (std::size_t i = 0; i < modes_.size (); ++i)
            {
                if (modes_[i].k < 1)
                    throw Error (ErrorKind::InvalidArgument, "SupportFourier", "mode index must be >= 1, got " + std::to_string (modes_[i].k));
                if (i > 0 && modes_[i].k == modes_[i - 1].k)
                    throw Error (ErrorKind::DuplicateMode, "SupportFourier", "mode " + std::to_string (modes_[i].k) + " listed twice");
            }
        }

        [[nodiscard]] static SupportFourier circle (double radius) { return SupportFourier (radius); }

        [[nodiscard]] double a0 () const noexcept { return a0_; }
        [[nodiscard]] std::span<const Mode> modes () const noexcept { return modes_; }

        /// Truncation order K: the largest mode index present, 0 for a constant.
        [[nodiscard]] int order () const noexcept { return modes_.empty () ? 0 : modes_.back ().k; }

        /// (a_k, b_k), zero when the mode is absent.
        [[nodiscard]] std::pair<double, double> coefficient (int k) const noexcept
        {
            const auto it = std::lower_bound (modes_.begin (), modes_.end (), k, [] (const Mode &m, int key) { return m.k < key; });
            if (it == modes_.end () || it->k != k)
                return {0.0, 0.0};
            return {it->a, it->b};
        }

        [[nodiscard]] SupportFourier with_a0 (double a0) const
        {
            SupportFourier out = *this;
            out.a0_ = a0;
            return out;
        }

        /// Copy with mode k replaced (or inserted).
        [[nodiscard]] SupportFourier with_mode (int k, double a, double b) const
        {
            std::vector<Mode> modes;
            modes.reserve (modes_.size () + 1);
            for (const Mode &m : modes_)
                if (m.k != k)
                    modes.push_back (m);
            modes.push_back ({k, a, b});
            return SupportFourier (a0_, std::move (modes));
        }

        /// p(θ)
        [[nodiscard]] double value (double theta) const noexcept
        {
            double sum = a0_;
            for (const Mode &m : modes_)
            {
                const double phase = m.k * theta;
                sum += m.a * std::cos (phase) + m.b * std::sin (phase);
            }
            return sum;
        }

        /// p'(θ)
        [[nodiscard]] double slope (double theta) const noexcept
        {
            double sum = 0.0;
            for (const Mode &m : modes_)
            {
                const double phase = m.k * theta;
                sum += m.k * (m.b * std::cos (phase) - m.a * std::sin (phase));
            }
            return sum;
        }

        /// Largest |a_k|, |b_k| over modes k ≥ min_k.
        [[nodiscard]] double max_abs_coefficient (int min_k) const noexcept
        {
            double out = 0.0;
            for (const Mode &m : modes_)
                if (m.k >= min_k)
                    out = std::max ({out, std::abs (m.a), std::abs (m.b)});
            return out;
        }

        friend bool operator== (const SupportFourier &, const SupportFourier &) = default;

    private:
        double a0_ = 0.0;
        std::vector<Mode> modes_;
    };

    /// p ↦ -p
    [[nodiscard]] inline SupportFourier negate (const SupportFourier &p)
    {
        std::vector<Mode> modes (p.modes ().begin (), p.modes ().end ());
        for (Mode &m : modes)
        {
            m.a = -m.a;
            m.b = -m.b;
        }
        return SupportFourier (-p.a0 (), std::move (modes));
    }
} // namespace lcflow
