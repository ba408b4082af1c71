#include "cli.hpp"

#include <lcflow/lcflow.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace lcflow::cli
{
    namespace
    {
        namespace fs = std::filesystem;

        struct SimulateOptions
        {
            std::string curve;
            std::string flow;
            double t_final = 6.0;
            double dt = 1e-3;
            std::size_t grid_n = 256;
            std::string scheme = "exact";
            int record_every = 1;
            double stop_sup_dev = 0.0;
            double lambda_floor = 1e-9;
            int band = 0;
            std::string out;
            std::string svg_dir;
            int svg_every = 0;
        };

        struct InequalityOptions
        {
            std::uint64_t seed = 42;
            std::size_t count = 1000;
            int K = 8;
            double decay = 1.5;
            std::string constraint = "none";
            std::vector<double> taus{0.0, 4.0, 8.0};
            std::vector<double> xis{0.0, 12.0, 24.0};
            double zero_length_tau = 6.0;
            double zero_length_xi = 24.0;
            std::string out;
        };

        void require_parent_dir (const std::string &path, const char *flag)
        {
            const fs::path parent = fs::path (path).parent_path ();
            if (!parent.empty () && !fs::is_directory (parent))
                throw CLI::ValidationError (flag, "directory " + parent.string () + " does not exist");
        }

        int do_simulate (const SimulateOptions &o, std::ostream &out)
        {
            FlowConfig config;
            config.initial = parse_curve_file (o.curve);
            config.flow_type = o.flow == "area" ? FlowType::AreaPreserving : FlowType::LengthPreserving;
            config.t_final = o.t_final;
            config.dt = o.dt;
            config.grid_N = o.grid_n;
            config.scheme = o.scheme == "grid" ? Scheme::GridRK4 : Scheme::ExactModal;
            config.record_every = o.record_every;
            config.stop_sup_dev = o.stop_sup_dev;
            config.lambda_floor = o.lambda_floor;
            config.grid_band = o.band;

            const FlowTrace trace = run (config);
            write_trace_csv (trace, o.out);

            if (!o.svg_dir.empty () && o.svg_every > 0)
            {
                for (std::size_t i = 0; i < trace.rows.size (); ++i)
                {
                    if (i % static_cast<std::size_t> (o.svg_every) != 0 && i + 1 != trace.rows.size ())
                        continue;
                    char name[48];
                    std::snprintf (name, sizeof name, "snapshot_%05zu.svg", i);
                    write_curve_svg (trace.rows[i].p, fs::path (o.svg_dir) / name);
                }
            }

            const DiagnosticsRow &last = trace.rows.back ();
            out << "status = " << (trace.status == RunStatus::Converged ? "converged" : "completed") << "\n";
            out << "rows = " << trace.rows.size () << "\n";
            out << "t = " << format_double (last.t) << "\n";
            out << "L = " << format_double (last.L) << "\n";
            out << "A = " << format_double (last.A) << "\n";
            out << "max_mode = " << format_double (last.max_mode) << "\n";
            try
            {
                const LimitCircle c = limit_circle (trace);
                out << "limit_center = " << format_double (c.center.x) << " " << format_double (c.center.y) << "\n";
                out << "limit_radius = " << format_double (c.radius) << "\n";
            }
            catch (const Error &)
            {
                out << "limit = not converged\n";
            }
            return kExitOk;
        }

        int do_inequalities (const InequalityOptions &o, std::ostream &out)
        {
            static const std::map<std::string, CurveConstraint> constraints{
                {"none", CurveConstraint::None},
                {"positive-area", CurveConstraint::PositiveArea},
                {"zero-length", CurveConstraint::ZeroLength},
                {"convex", CurveConstraint::Convex},
            };
            CurveEnsembleSpec spec;
            spec.seed = o.seed;
            spec.count = o.count;
            spec.K = o.K;
            spec.amplitude_decay = o.decay;
            spec.constraint = constraints.at (o.constraint);

            std::vector<InequalityCheck> checks{
                {InequalityId::Isoperimetric, 0.0},
                {InequalityId::Beta2Area, 0.0},
                {InequalityId::GradRescaled, 0.0},
                {InequalityId::GreenOsher, 0.0},
            };
            for (double tau : o.taus)
                checks.push_back ({InequalityId::Beta2Family, tau});
            for (double xi : o.xis)
                checks.push_back ({InequalityId::GradFamily, xi});
            if (spec.constraint == CurveConstraint::ZeroLength)
            {
                checks.push_back ({InequalityId::Beta2ZeroLength, o.zero_length_tau});
                checks.push_back ({InequalityId::GradZeroLength, o.zero_length_xi});
            }

            const std::vector<InequalityReport> reports = run_ensemble (spec, checks);
            const std::string text = format_inequality_report (reports);
            if (!o.out.empty ())
                write_text_file (o.out, text);
            out << text;

            bool unexpected = false;
            for (const InequalityReport &r : reports)
                unexpected = unexpected || (!r.holds && !r.expected_violable);
            return unexpected ? kExitDomain : kExitOk;
        }

        int do_analyze (const std::string &curve, std::ostream &out)
        {
            out << format_summary (summarize_curve (parse_curve_file (curve)));
            return kExitOk;
        }

        int do_examples (const std::string &dir, std::ostream &out)
        {
            struct Named
            {
                const char *file;
                const char *comment;
                SupportFourier p;
            };
            const std::vector<Named> curves{
                {"four_cusp_positive_area", "p = 2 + sin 2t", SupportFourier (2.0, {{2, 0.0, 1.0}})},
                {"four_cusp_zero_area", "p = sqrt(3/2) + sin 2t", SupportFourier (std::sqrt (1.5), {{2, 0.0, 1.0}})},
                {"four_cusp_negative_area", "p = 1/2 + sin 2t", SupportFourier (0.5, {{2, 0.0, 1.0}})},
                {"zero_length_astroid", "p = 2 sin 2t", SupportFourier (0.0, {{2, 0.0, 2.0}})},
                {"point", "p = sin t + 2 cos t", SupportFourier (0.0, {{1, 2.0, 1.0}})},
                {"zero_length_negative_area", "p = sin t + 2 cos t + sin 2t + 2 cos 2t", SupportFourier (0.0, {{1, 2.0, 1.0}, {2, 2.0, 1.0}})},
                {"astroid_parallel", "p = 2 + 0.5 cos t - 0.3 sin t + 0.3 cos 2t + 0.1 sin 2t", equality_family (2.0, 0.5, -0.3, 0.3, 0.1)},
            };
            for (const Named &c : curves)
            {
                const fs::path base = fs::path (dir) / c.file;
                write_curve_file (c.p, fs::path (base).replace_extension (".curve"), c.comment);
                write_curve_svg (c.p, fs::path (base).replace_extension (".svg"));
                out << base.string () << ".curve\n";
            }
            return kExitOk;
        }
    } // namespace

    int cli_main (const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        CLI::App app{"Inverse curvature flows and geometric inequalities for l-convex Legendre curves", "lcflow"};
        app.require_subcommand (1);

        SimulateOptions sim;
        CLI::App *simulate = app.add_subcommand ("simulate", "Run a length- or area-preserving flow and write a CSV trace");
        simulate->add_option ("--curve", sim.curve, "Initial curve file")->required ()->check (CLI::ExistingFile);
        simulate->add_option ("--flow", sim.flow, "area | length")->required ()->check (CLI::IsMember ({"area", "length"}));
        simulate->add_option ("--T", sim.t_final, "Final time")->capture_default_str ();
        simulate->add_option ("--dt", sim.dt, "Time step")->capture_default_str ();
        simulate->add_option ("--N", sim.grid_n, "Diagnostic grid size (power of two)")->capture_default_str ();
        simulate->add_option ("--scheme", sim.scheme, "exact | grid")->capture_default_str ()->check (CLI::IsMember ({"exact", "grid"}));
        simulate->add_option ("--record-every", sim.record_every, "Record a row every M steps")->capture_default_str ();
        simulate->add_option ("--stop-sup-dev", sim.stop_sup_dev, "Stop when sup|beta - L/2pi| falls below this (0 = never)")->capture_default_str ();
        simulate->add_option ("--lambda-floor", sim.lambda_floor, "Smallest |L| accepted by the area-preserving flow")->capture_default_str ();
        simulate->add_option ("--band", sim.band, "Grid scheme: modes kept in p_tt (0 = widest stable band)")->capture_default_str ();
        simulate->add_option ("--out", sim.out, "Output CSV path")->required ();
        simulate->add_option ("--svg-dir", sim.svg_dir, "Directory for SVG snapshots")->check (CLI::ExistingDirectory);
        simulate->add_option ("--svg-every", sim.svg_every, "Write an SVG snapshot every M recorded rows")->capture_default_str ();

        InequalityOptions ineq;
        CLI::App *inequalities = app.add_subcommand ("inequalities", "Check the geometric inequalities over a random curve ensemble");
        inequalities->add_option ("--seed", ineq.seed)->capture_default_str ();
        inequalities->add_option ("--count", ineq.count)->capture_default_str ()->check (CLI::PositiveNumber);
        inequalities->add_option ("--K", ineq.K, "Highest Fourier mode")->capture_default_str ()->check (CLI::NonNegativeNumber);
        inequalities->add_option ("--decay", ineq.decay, "Mode amplitude bound (k+1)^-s")->capture_default_str ()->check (CLI::NonNegativeNumber);
        inequalities->add_option ("--constraint", ineq.constraint, "none | positive-area | zero-length | convex")->capture_default_str ()->check (CLI::IsMember ({"none", "positive-area", "zero-length", "convex"}));
        inequalities->add_option ("--tau", ineq.taus, "Parameters for the beta^2 family")->delimiter (',');
        inequalities->add_option ("--xi", ineq.xis, "Parameters for the gradient family")->delimiter (',');
        inequalities->add_option ("--zero-length-tau", ineq.zero_length_tau)->capture_default_str ();
        inequalities->add_option ("--zero-length-xi", ineq.zero_length_xi)->capture_default_str ();
        inequalities->add_option ("--out", ineq.out, "Report CSV path");

        std::string analyze_curve;
        CLI::App *analyze = app.add_subcommand ("analyze", "Print length, area, class, Steiner point and cusps of a curve");
        analyze->add_option ("curve", analyze_curve, "Curve file")->required ()->check (CLI::ExistingFile);

        std::string examples_dir;
        CLI::App *examples = app.add_subcommand ("examples", "Write the reference curve files into a directory");
        examples->add_option ("--out", examples_dir, "Output directory")->required ()->check (CLI::ExistingDirectory);

        std::vector<std::string> storage;
        storage.reserve (args.size () + 1);
        storage.emplace_back ("lcflow");
        storage.insert (storage.end (), args.begin (), args.end ());
        std::vector<char *> argv;
        for (std::string &s : storage)
            argv.push_back (s.data ());

        try
        {
            app.parse (static_cast<int> (argv.size ()), argv.data ());
            if (simulate->parsed ())
            {
                require_parent_dir (sim.out, "--out");
                return do_simulate (sim, out);
            }
            if (inequalities->parsed ())
            {
                if (!ineq.out.empty ())
                    require_parent_dir (ineq.out, "--out");
                return do_inequalities (ineq, out);
            }
            if (analyze->parsed ())
                return do_analyze (analyze_curve, out);
            if (examples->parsed ())
                return do_examples (examples_dir, out);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help ();
            return kExitOk;
        }
        catch (const CLI::ParseError &e)
        {
            err << "usage error: " << e.what () << "\n";
            return kExitUsage;
        }
        catch (const Error &e)
        {
            err << "error: " << e.what () << "\n";
            return kExitDomain;
        }
        err << "usage error: no subcommand\n";
        return kExitUsage;
    }
} // namespace lcflow::cli
