#pragma once
/**
 * @file   io.hpp
 * @brief  Curve text files, CSV traces, SVG snapshots and inequality reports.
 *
 * Curve file format (UTF-8, one entry per line, `#` starts a comment, blank lines ignored):
 *
 *     a0 = 2
 *     mode 2 = 0 1      # mode k = a_k b_k
 */

#include <lcflow/curve.hpp>
#include <lcflow/error.hpp>
#include <lcflow/flow.hpp>
#include <lcflow/inequalities.hpp>
#include <lcflow/spectral.hpp>
#include <lcflow/support_fourier.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace lcflow
{
    /// Shortest form that reads back to the same double ("%.17g").
    [[nodiscard]] inline std::string format_double (double v)
    {
        char buf[40];
        std::snprintf (buf, sizeof buf, "%.17g", v);
        return buf;
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Curve files

    namespace detail
    {
        inline std::vector<std::string> tokenize (std::string_view line)
        {
            std::string spaced;
            spaced.reserve (line.size () + 4);
            for (char c : line)
            {
                if (c == '=')
                    spaced += " = ";
                else
                    spaced += c;
            }
            std::istringstream in (spaced);
            std::vector<std::string> out;
            for (std::string tok; in >> tok;)
                out.push_back (tok);
            return out;
        }

        inline double parse_number (const std::string &tok, std::size_t line_no)
        {
            double v = 0.0;
            const char *first = tok.data ();
            const char *last = tok.data () + tok.size ();
            if (!tok.empty () && *first == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars (first, last, v);
            if (ec != std::errc{} || ptr != last || !std::isfinite (v))
                throw Error (ErrorKind::ParseError, "parse_curve_file", "line " + std::to_string (line_no) + ": '" + tok + "' is not a finite number");
            return v;
        }

        inline int parse_mode_index (const std::string &tok, std::size_t line_no)
        {
            int k = 0;
            const auto [ptr, ec] = std::from_chars (tok.data (), tok.data () + tok.size (), k);
            if (ec != std::errc{} || ptr != tok.data () + tok.size () || k < 1)
                throw Error (ErrorKind::ParseError, "parse_curve_file", "line " + std::to_string (line_no) + ": mode index '" + tok + "' must be an integer >= 1");
            return k;
        }
    } // namespace detail

    [[nodiscard]] inline SupportFourier parse_curve_text (std::string_view text)
    {
        double a0 = 0.0;
        bool have_a0 = false;
        std::vector<Mode> modes;

        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size ())
        {
            const std::size_t end = std::min (text.find ('\n', pos), text.size ());
            std::string_view line = text.substr (pos, end - pos);
            pos = end + 1;
            ++line_no;

            if (const std::size_t hash = line.find ('#'); hash != std::string_view::npos)
                line = line.substr (0, hash);
            const std::vector<std::string> tok = detail::tokenize (line);
            if (tok.empty ())
                continue;

            const auto error = [line_no] (const std::string &what) {
                return Error (ErrorKind::ParseError, "parse_curve_file", "line " + std::to_string (line_no) + ": " + what);
            };
            if (tok[0] == "a0")
            {
                if (tok.size () != 3 || tok[1] != "=")
                    throw error ("expected 'a0 = <float>'");
                if (have_a0)
                    throw error ("a0 given twice");
                a0 = detail::parse_number (tok[2], line_no);
                have_a0 = true;
            }
            else if (tok[0] == "mode")
            {
                if (tok.size () != 5 || tok[2] != "=")
                    throw error ("expected 'mode <k> = <a_k> <b_k>'");
                const int k = detail::parse_mode_index (tok[1], line_no);
                if (std::any_of (modes.begin (), modes.end (), [k] (const Mode &m) { return m.k == k; }))
                    throw Error (ErrorKind::DuplicateMode, "parse_curve_file", "line " + std::to_string (line_no) + ": mode " + std::to_string (k) + " listed twice");
                modes.push_back ({k, detail::parse_number (tok[3], line_no), detail::parse_number (tok[4], line_no)});
            }
            else
                throw error ("unknown key '" + tok[0] + "'");
        }
        return SupportFourier (a0, std::move (modes));
    }

    [[nodiscard]] inline std::string read_text_file (const std::filesystem::path &path)
    {
        std::ifstream in (path, std::ios::binary);
        if (!in)
            throw Error (ErrorKind::IoError, "read_text_file", "cannot open " + path.string ());
        std::ostringstream buf;
        buf << in.rdbuf ();
        return buf.str ();
    }

    inline void write_text_file (const std::filesystem::path &path, const std::string &content)
    {
        std::ofstream out (path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error (ErrorKind::IoError, "write_text_file", "cannot open " + path.string () + " for writing");
        out << content;
        if (!out)
            throw Error (ErrorKind::IoError, "write_text_file", "write to " + path.string () + " failed");
    }

    [[nodiscard]] inline SupportFourier parse_curve_file (const std::filesystem::path &path)
    {
        return parse_curve_text (read_text_file (path));
    }

    [[nodiscard]] inline std::string format_curve (const SupportFourier &p, std::string_view comment = {})
    {
        std::string out;
        if (!comment.empty ())
            out += "# " + std::string (comment) + "\n";
        out += "a0 = " + format_double (p.a0 ()) + "\n";
        for (const Mode &m : p.modes ())
            out += "mode " + std::to_string (m.k) + " = " + format_double (m.a) + " " + format_double (m.b) + "\n";
        return out;
    }

    inline void write_curve_file (const SupportFourier &p, const std::filesystem::path &path, std::string_view comment = {})
    {
        write_text_file (path, format_curve (p, comment));
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Curve summary (the `analyze` subcommand)

    struct CurveSummary
    {
        double L = 0.0;
        double A = 0.0;
        double deficit = 0.0;
        CurveClass curve_class;
        Point2 steiner;
        std::vector<double> singular;
    };

    [[nodiscard]] inline CurveSummary summarize_curve (const SupportFourier &p)
    {
        const std::size_t n = default_grid_size (p.order ());
        CurveSummary s;
        s.L = algebraic_length (p);
        s.A = algebraic_area (p);
        s.deficit = s.L * s.L - 4.0 * std::numbers::pi * s.A;
        s.curve_class = classify (p, n);
        s.steiner = steiner_point (p);
        s.singular = singular_angles (p, n);
        return s;
    }

    [[nodiscard]] inline std::string format_summary (const CurveSummary &s)
    {
        std::string out;
        out += "L = " + format_double (s.L) + "\n";
        out += "A = " + format_double (s.A) + "\n";
        out += "deficit = " + format_double (s.deficit) + "\n";
        out += "class = " + std::string (to_string (s.curve_class.kind)) + "\n";
        out += "min_beta = " + format_double (s.curve_class.min_beta) + "\n";
        out += "min_p = " + format_double (s.curve_class.min_p) + "\n";
        out += "steiner = " + format_double (s.steiner.x) + " " + format_double (s.steiner.y) + "\n";
        out += "singular_angles =";
        for (double a : s.singular)
            out += " " + format_double (a);
        out += "\n";
        return out;
    }

    // ---------------------------------------------------------------------------------------------------------------
    // CSV traces

    inline constexpr std::string_view kTraceHeader = "t,L,A,deficit_U,sup_dev,Q,lambda,E1,E2,a0,max_mode";
    inline constexpr std::size_t kTraceColumns = 11;
    using TraceRecord = std::array<double, kTraceColumns>;

    [[nodiscard]] inline std::string format_trace_csv (const FlowTrace &trace)
    {
        const FlowConfig &c = trace.config;
        std::string out;
        out += "# lcflow trace\n";
        out += "# flow = " + std::string (to_string (c.flow_type)) + "\n";
        out += "# scheme = " + std::string (to_string (c.scheme)) + "\n";
        out += "# t_final = " + format_double (c.t_final) + "\n";
        out += "# dt = " + format_double (c.dt) + "\n";
        out += "# grid_N = " + std::to_string (c.grid_N) + "\n";
        out += "# record_every = " + std::to_string (c.record_every) + "\n";
        out += "# stop_sup_dev = " + format_double (c.stop_sup_dev) + "\n";
        out += "# lambda_floor = " + format_double (c.lambda_floor) + "\n";
        out += "# K = " + std::to_string (c.initial.order ()) + "\n";
        out += "# status = " + std::string (trace.status == RunStatus::Converged ? "converged" : "completed") + "\n";
        out += std::string (kTraceHeader) + "\n";
        for (const DiagnosticsRow &r : trace.rows)
        {
            const TraceRecord rec{r.t, r.L, r.A, r.deficit_U, r.sup_dev, r.Q, r.lambda, r.E1, r.E2, r.a0, r.max_mode};
            for (std::size_t i = 0; i < rec.size (); ++i)
            {
                if (i > 0)
                    out += ',';
                out += format_double (rec[i]);
            }
            out += '\n';
        }
        return out;
    }

    inline void write_trace_csv (const FlowTrace &trace, const std::filesystem::path &path)
    {
        write_text_file (path, format_trace_csv (trace));
    }

    /// Reads the numeric rows back; comment lines are skipped and the header is checked.
    [[nodiscard]] inline std::vector<TraceRecord> read_trace_csv (const std::filesystem::path &path)
    {
        const std::string text = read_text_file (path);
        std::istringstream in (text);
        std::vector<TraceRecord> rows;
        bool header = false;
        std::size_t line_no = 0;
        for (std::string line; std::getline (in, line);)
        {
            ++line_no;
            if (line.empty () || line[0] == '#')
                continue;
            if (!header)
            {
                if (line != kTraceHeader)
                    throw Error (ErrorKind::ParseError, "read_trace_csv", "unexpected header at line " + std::to_string (line_no));
                header = true;
                continue;
            }
            TraceRecord rec{};
            std::size_t col = 0;
            std::size_t start = 0;
            while (true)
            {
                const std::size_t comma = line.find (',', start);
                const std::string cell = line.substr (start, comma == std::string::npos ? std::string::npos : comma - start);
                if (col >= kTraceColumns)
                    throw Error (ErrorKind::ParseError, "read_trace_csv", "too many columns at line " + std::to_string (line_no));
                const auto [ptr, ec] = std::from_chars (cell.data (), cell.data () + cell.size (), rec[col]);
                if (ec != std::errc{} || ptr != cell.data () + cell.size ())
                    throw Error (ErrorKind::ParseError, "read_trace_csv", "bad number '" + cell + "' at line " + std::to_string (line_no));
                ++col;
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
            if (col != kTraceColumns)
                throw Error (ErrorKind::ParseError, "read_trace_csv", "too few columns at line " + std::to_string (line_no));
            rows.push_back (rec);
        }
        if (!header)
            throw Error (ErrorKind::ParseError, "read_trace_csv", "missing header");
        return rows;
    }

    // ---------------------------------------------------------------------------------------------------------------
    // SVG snapshots

    [[nodiscard]] inline std::string format_curve_svg (const SupportFourier &p, int samples)
    {
        if (samples < 64)
            throw Error (ErrorKind::InvalidArgument, "write_curve_svg", "need at least 64 samples");

        std::vector<Point2> pts (static_cast<std::size_t> (samples));
        for (int j = 0; j < samples; ++j)
            pts[static_cast<std::size_t> (j)] = eval_point (p, kTwoPi * j / samples);

        double min_x = std::numeric_limits<double>::infinity (), max_x = -min_x;
        double min_y = min_x, max_y = -min_x;
        for (const Point2 &q : pts)
        {
            min_x = std::min (min_x, q.x);
            max_x = std::max (max_x, q.x);
            min_y = std::min (min_y, q.y);
            max_y = std::max (max_y, q.y);
        }
        double extent = std::max (max_x - min_x, max_y - min_y);
        if (!(extent > 1e-12))
            extent = 1.0;
        const double margin = 0.1 * extent;
        const double vx = min_x - margin;
        const double vw = (max_x - min_x) + 2.0 * margin;
        const double vh = (max_y - min_y) + 2.0 * margin;
        // The group flips y, so the viewBox is placed around −y.
        const double vy = -(max_y + margin);

        const auto num = [] (double v) {
            char buf[32];
            std::snprintf (buf, sizeof buf, "%.9g", v);
            return std::string (buf);
        };

        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"" + num (vx) + " " + num (vy) + " " + num (vw) + " " + num (vh) + "\">\n";
        out += "<g transform=\"scale(1,-1)\">\n";
        out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + num (extent / 200.0) + "\" points=\"";
        for (int j = 0; j <= samples; ++j)
        {
            const Point2 &q = pts[static_cast<std::size_t> (j % samples)];
            if (j > 0)
                out += ' ';
            out += num (q.x) + "," + num (q.y);
        }
        out += "\"/>\n";

        const std::size_t grid = std::max<std::size_t> (static_cast<std::size_t> (samples), 4 * static_cast<std::size_t> (p.order () + 1));
        const auto roots = singular_angles (p, grid);
        if (roots.size () < grid)
            for (double theta : roots)
            {
                const Point2 q = eval_point (p, theta);
                out += "<circle class=\"singular\" cx=\"" + num (q.x) + "\" cy=\"" + num (q.y) + "\" r=\"" + num (extent / 80.0) + "\" fill=\"red\"/>\n";
            }
        out += "</g>\n</svg>\n";
        return out;
    }

    inline void write_curve_svg (const SupportFourier &p, const std::filesystem::path &path, int samples = 512)
    {
        write_text_file (path, format_curve_svg (p, samples));
    }

    // ---------------------------------------------------------------------------------------------------------------
    // Inequality reports

    inline constexpr std::string_view kReportHeader = "id,parameter,checked,violations,min_slack,holds,expected_violable,witness_index";

    [[nodiscard]] inline std::string format_inequality_report (const std::vector<InequalityReport> &reports)
    {
        std::string out (kReportHeader);
        out += '\n';
        for (const InequalityReport &r : reports)
        {
            out += to_string (r.id);
            out += ',' + (r.parameter ? format_double (*r.parameter) : std::string ());
            out += ',' + std::to_string (r.checked);
            out += ',' + std::to_string (r.violations);
            out += ',' + format_double (r.slack);
            out += r.holds ? ",true" : ",false";
            out += r.expected_violable ? ",true" : ",false";
            out += ',' + std::to_string (r.witness_index);
            out += '\n';
        }
        return out;
    }
} // namespace lcflow
