#include "oracles.hpp"

#include <cli.hpp>
#include <lcflow/io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace lcflow;
using Catch::Approx;

namespace
{
    struct Result
    {
        int code = 0;
        std::string out;
        std::string err;
    };

    Result call (const std::vector<std::string> &args)
    {
        std::ostringstream out, err;
        Result r;
        r.code = cli::cli_main (args, out, err);
        r.out = out.str ();
        r.err = err.str ();
        return r;
    }

    std::string value_of (const std::string &text, const std::string &key)
    {
        const std::string tag = key + " = ";
        const std::size_t at = text.find (tag);
        if (at == std::string::npos)
            return {};
        const std::size_t end = text.find ('\n', at);
        return text.substr (at + tag.size (), end - at - tag.size ());
    }
} // namespace

TEST_CASE ("analyze prints the curve summary", "[cli]")
{
    const auto dir = oracle::temp_dir ("cli_analyze");
    write_text_file (dir / "fig.curve", "a0 = 2\nmode 2 = 0 1\n");
    const Result r = call ({"analyze", (dir / "fig.curve").string ()});
    CHECK (r.code == cli::kExitOk);
    CHECK (value_of (r.out, "class") == "EllConvexNonconvex");
    CHECK (std::stod (value_of (r.out, "A")) == Approx (2.5 * oracle::pi));

    write_text_file (dir / "bad.curve", "mode 2 = 1 0\nmode 2 = 0 1\n");
    const Result bad = call ({"analyze", (dir / "bad.curve").string ()});
    CHECK (bad.code == cli::kExitDomain);
    CHECK (bad.err.find ("DuplicateMode") != std::string::npos);
}

TEST_CASE ("simulate writes a trace and reports the limit circle", "[cli]")
{
    const auto dir = oracle::temp_dir ("cli_simulate");
    write_text_file (dir / "c.curve", "a0 = 1\nmode 1 = 2 1\nmode 2 = 0.2 0\n");
    const Result r = call ({"simulate", "--curve", (dir / "c.curve").string (), "--flow", "length", "--T", "8", "--dt", "0.01", "--record-every", "10",
                            "--out", (dir / "trace.csv").string (), "--svg-dir", dir.string (), "--svg-every", "20"});
    REQUIRE (r.code == cli::kExitOk);
    CHECK (value_of (r.out, "status") == "completed");
    CHECK (value_of (r.out, "rows") == "81");
    const std::string center = value_of (r.out, "limit_center");
    REQUIRE_FALSE (center.empty ());
    std::istringstream in (center);
    double cx = 0, cy = 0;
    in >> cx >> cy;
    CHECK (cx == Approx (2.0).margin (1e-9));
    CHECK (cy == Approx (1.0).margin (1e-9));
    CHECK (std::stod (value_of (r.out, "limit_radius")) == Approx (1.0).margin (1e-9));
    CHECK (read_trace_csv (dir / "trace.csv").size () == 81);
    CHECK (std::filesystem::exists (dir / "snapshot_00000.svg"));
    CHECK (std::filesystem::exists (dir / "snapshot_00080.svg"));

    // The same run twice gives the same bytes.
    const Result again = call ({"simulate", "--curve", (dir / "c.curve").string (), "--flow", "length", "--T", "8", "--dt", "0.01", "--record-every", "10",
                                "--out", (dir / "trace2.csv").string ()});
    REQUIRE (again.code == cli::kExitOk);
    CHECK (read_text_file (dir / "trace.csv") == read_text_file (dir / "trace2.csv"));
}

TEST_CASE ("simulate reports domain errors with exit code 1", "[cli]")
{
    const auto dir = oracle::temp_dir ("cli_domain");
    write_text_file (dir / "zero.curve", "mode 1 = 2 1\nmode 2 = 2 1\n");
    const Result r = call ({"simulate", "--curve", (dir / "zero.curve").string (), "--flow", "area", "--out", (dir / "t.csv").string ()});
    CHECK (r.code == cli::kExitDomain);
    CHECK (r.err.find ("DegenerateLength") != std::string::npos);

    const Result grid = call ({"simulate", "--curve", (dir / "zero.curve").string (), "--flow", "length", "--scheme", "grid", "--N", "100", "--out",
                               (dir / "t.csv").string ()});
    CHECK (grid.code == cli::kExitDomain);
}

TEST_CASE ("usage errors exit with code 2", "[cli]")
{
    CHECK (call ({}).code == cli::kExitUsage);
    CHECK (call ({"frobnicate"}).code == cli::kExitUsage);
    CHECK (call ({"simulate", "--flow", "length"}).code == cli::kExitUsage);
    CHECK (call ({"analyze", "/nonexistent/file.curve"}).code == cli::kExitUsage);

    const auto dir = oracle::temp_dir ("cli_usage");
    write_text_file (dir / "c.curve", "a0 = 1\n");
    CHECK (call ({"simulate", "--curve", (dir / "c.curve").string (), "--flow", "sideways", "--out", (dir / "t.csv").string ()}).code == cli::kExitUsage);
    CHECK (call ({"simulate", "--curve", (dir / "c.curve").string (), "--flow", "length", "--out", (dir / "missing" / "t.csv").string ()}).code ==
           cli::kExitUsage);
    CHECK (call ({"simulate", "--curve", (dir / "c.curve").string (), "--flow", "length", "--dt", "abc", "--out", (dir / "t.csv").string ()}).code ==
           cli::kExitUsage);

    const Result help = call ({"--help"});
    CHECK (help.code == cli::kExitOk);
    CHECK (help.out.find ("simulate") != std::string::npos);
}

TEST_CASE ("inequalities subcommand", "[cli]")
{
    const auto dir = oracle::temp_dir ("cli_ineq");
    const Result r = call ({"inequalities", "--count", "200", "--out", (dir / "report.csv").string ()});
    CHECK (r.code == cli::kExitOk);
    CHECK (r.out == read_text_file (dir / "report.csv"));
    CHECK (r.out.rfind (std::string (kReportHeader), 0) == 0);
    CHECK (r.out.find (",false,false,") == std::string::npos);

    const Result again = call ({"inequalities", "--count", "200"});
    CHECK (again.out == r.out);

    const Result zero = call ({"inequalities", "--count", "100", "--constraint", "zero-length"});
    CHECK (zero.code == cli::kExitOk);
    CHECK (zero.out.find ("beta2_zero_length,6,100,0,") != std::string::npos);
    CHECK (zero.out.find ("grad_zero_length,24,100,0,") != std::string::npos);

    // Above the sharp constant the family is expected to fail; that is not an error.
    const Result beyond = call ({"inequalities", "--count", "100", "--K", "2", "--decay", "0", "--tau", "9"});
    CHECK (beyond.code == cli::kExitOk);
    CHECK (beyond.out.find ("beta2_family,9,100,") != std::string::npos);
}

TEST_CASE ("examples subcommand writes the reference curves", "[cli]")
{
    const auto dir = oracle::temp_dir ("cli_examples");
    const Result r = call ({"examples", "--out", dir.string ()});
    REQUIRE (r.code == cli::kExitOk);

    const double pi = oracle::pi;
    CHECK (algebraic_area (parse_curve_file (dir / "four_cusp_positive_area.curve")) == Approx (2.5 * pi));
    CHECK (std::abs (algebraic_area (parse_curve_file (dir / "four_cusp_zero_area.curve"))) < 1e-14);
    CHECK (algebraic_area (parse_curve_file (dir / "four_cusp_negative_area.curve")) == Approx (-1.25 * pi));
    CHECK (algebraic_area (parse_curve_file (dir / "zero_length_astroid.curve")) == Approx (-6 * pi));
    CHECK (algebraic_area (parse_curve_file (dir / "point.curve")) == 0.0);
    CHECK (algebraic_area (parse_curve_file (dir / "zero_length_negative_area.curve")) == Approx (-7.5 * pi));
    CHECK (std::abs (check_beta2_family (parse_curve_file (dir / "astroid_parallel.curve"), 8.0).slack) < 1e-10);
    for (const char *name : {"four_cusp_positive_area", "four_cusp_zero_area", "four_cusp_negative_area", "zero_length_astroid", "point", "zero_length_negative_area", "astroid_parallel"})
        CHECK (std::filesystem::exists (dir / (std::string (name) + ".svg")));

    CHECK (call ({"examples", "--out", (dir / "nope").string ()}).code == cli::kExitUsage);
}
