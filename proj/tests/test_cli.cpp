#include <nhc/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace nhc;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(NHC_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string rendered(const Table& t, OutputFormat f) {
    std::ostringstream os;
    render(t, f, os);
    return os.str();
}

}  // namespace

struct GoldenCase {
    const char* file;
    std::vector<std::string> args;
};

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, MatchesFile) {
    const Result r = run(GetParam().args);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden(GetParam().file));
}

INSTANTIATE_TEST_SUITE_P(
    Commands, CliGolden,
    ::testing::Values(
        GoldenCase{"count_cm_rep.txt", {"count", "--family", "cm-rep", "--height", "cal", "--bound", "1e3"}},
        GoldenCase{"count_all_ncal.json", {"count", "--family", "all", "--height", "ncal", "--bound", "1", "--format", "json"}},
        GoldenCase{"count_j_asymptotic.csv",
                   {"count", "--family", "j", "--j", "-3375", "--height", "cal", "--bound", "259308", "--asymptotic",
                    "--format", "csv"}},
        GoldenCase{"parametrize_163.json",
                   {"parametrize", "--j", "cm:-163", "--height", "cal", "--bound", "1e25", "--format", "json"}},
        GoldenCase{"parametrize_j0.txt", {"parametrize", "--j", "0", "--height", "cal", "--bound", "27"}},
        GoldenCase{"twist.csv", {"twist", "--A", "-240", "--B", "1408", "--format", "csv"}},
        GoldenCase{"cm_counts.csv", {"tables", "--name", "cm-counts", "--height", "cal", "--format", "csv"}},
        GoldenCase{"coefficients.csv", {"tables", "--name", "coefficients", "--height", "cal", "--format", "csv"}},
        GoldenCase{"cm_minimal.json", {"tables", "--name", "cm-minimal", "--height", "cal", "--format", "json"}},
        GoldenCase{"relative_error.txt", {"tables", "--name", "relative-error", "--height", "cal"}},
        GoldenCase{"verify_ncal.csv",
                   {"verify", "--height", "ncal", "--bound", "1e4", "--j", "0,1728,-3375", "--threads", "1", "--format",
                    "csv"}}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
        std::string name = info.param.file;
        for (char& c : name) {
            if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
        }
        return name;
    });

TEST(Cli, CountExamples) {
    EXPECT_NE(run({"count", "--family", "cm-rep", "--height", "cal", "--bound", "1e3"}).out.find(" 24\n"),
              std::string::npos);
    const Result all = run({"count", "--family", "all", "--height", "ncal", "--bound", "1", "--format", "csv"});
    EXPECT_EQ(all.out, "family,height,bound,count\nall,ncal,1,8\n");
    const Result j = run({"count", "--family", "j", "--j", "-3375", "--height", "cal", "--bound", "259308", "--format", "csv"});
    EXPECT_EQ(j.out, "family,height,bound,j,count\nj,cal,259308,-3375/1,2\n");
}

// Each command prints exactly the library result in the chosen format.
TEST(Cli, ThinAdapter) {
    const HeightSpec cal = HeightSpec::calibrated();
    Table t;
    t.columns = {"family", "height", "bound", "count"};
    t.add({Cell::text("rep"), Cell::text("cal"), Cell::text("2.7e10"),
           Cell::integer(count_rep_all(cal, Rational(27) * ipow(Integer(10), 9)))});
    EXPECT_EQ(run({"count", "--family", "rep", "--bound", "2.7e10", "--format", "json"}).out,
              rendered(t, OutputFormat::json));
    EXPECT_NE(t.rows[0][3].value.find("238764310"), std::string::npos);

    Table p;
    p.columns = {"m", "A", "B", "height"};
    for (const auto& row : parametrize(-3375, cal, 1e7)) {
        p.add({Cell::integer(row.m), Cell::text(row.curve.A.get_str()), Cell::text(row.curve.B.get_str()),
               Cell::text(row.height.get_str())});
    }
    EXPECT_EQ(run({"parametrize", "--j", "cm:-7", "--bound", "1e7", "--format", "csv"}).out,
              rendered(p, OutputFormat::csv));
}

TEST(Cli, ParametrizeExamples) {
    const Result r = run({"parametrize", "--j", "cm:-163", "--height", "cal", "--bound", "1e25", "--format", "csv"});
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
    const Result none = run({"parametrize", "--j", "-3375", "--height", "cal", "--bound", "259307", "--format", "csv"});
    EXPECT_EQ(none.out, "m,A,B,height\n");
    const Result sf = run({"parametrize", "--j", "cm:-7", "--bound", "1e10", "--squarefree-only", "--format", "csv"});
    EXPECT_EQ(std::count(sf.out.begin(), sf.out.end(), '\n'), 1 + count_rep_j(-3375, HeightSpec::calibrated(), 1e10).get_si());
}

TEST(Cli, TwistExamples) {
    EXPECT_EQ(run({"twist", "--A", "-240", "--B", "1408", "--format", "csv"}).out, "d,A0,B0\n2,-15,22\n");
    EXPECT_EQ(run({"twist", "--A", "-15", "--B", "22", "--format", "csv"}).out, "d,A0,B0\n1,-15,22\n");
    EXPECT_EQ(run({"twist", "--A", "0", "--B", "64", "--format", "csv"}).out, "d,A0,B0\n2,0,1\n");
}

TEST(Cli, JsonBigIntegersAreStrings) {
    const Result r = run({"tables", "--name", "cm-counts", "--bounds", "1e30", "--format", "json"});
    EXPECT_NE(r.out.find("\"1e30\": 384900179459750"), std::string::npos);
    const Result big = run({"count", "--family", "all", "--bound", "1e40", "--format", "json"});
    EXPECT_NE(big.out.find("\"count\": \""), std::string::npos) << big.out;
    const Result j = run({"tables", "--name", "cm-minimal", "--format", "json"});
    EXPECT_NE(j.out.find("\"j\": \"-262537412640768000\""), std::string::npos);
}

TEST(Cli, TablesToFile) {
    const std::string path = ::testing::TempDir() + "nhc_coefficients.csv";
    const Result r = run({"tables", "--name", "coefficients", "--format", "csv", "--output", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), golden("coefficients.csv"));
    std::remove(path.c_str());
}

TEST(Cli, VerifyPasses) {
    const Result r = run({"verify", "--height", "cal", "--bound", "1e5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("PASS"), std::string::npos);
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::usage);
    EXPECT_EQ(run({"count"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "abc"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "-5"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "10", "--family", "nope"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "10", "--family", "j"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "10", "--family", "all", "--j", "5"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--bound", "10", "--height", "weird"}).code, cli::usage);
    EXPECT_EQ(run({"parametrize", "--j", "cm:-5", "--bound", "10"}).code, cli::usage);
    EXPECT_EQ(run({"tables", "--name", "nope"}).code, cli::usage);
    EXPECT_EQ(run({"count", "--family", "j", "--j", "0", "--force-generic", "--bound", "10"}).code, cli::special_j);
    EXPECT_EQ(run({"count", "--family", "j-rep", "--j", "cm:-4", "--force-generic", "--bound", "10"}).code,
              cli::special_j);
    EXPECT_EQ(run({"count", "--family", "j", "--j", "0", "--bound", "27"}).code, cli::ok);
    EXPECT_EQ(run({"twist", "--A", "-3", "--B", "2"}).code, cli::singular);
    EXPECT_EQ(run({"twist", "--A", "0", "--B", "0"}).code, cli::singular);
    const Result refused = run({"verify", "--height", "cal", "--bound", "1e12"});
    EXPECT_EQ(refused.code, cli::over_budget);
    EXPECT_NE(refused.err.find("4849367699"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, cli::ok);
}

TEST(Parse, Bounds) {
    EXPECT_EQ(parse_bound("1e25"), Rational(ipow(Integer(10), 25)));
    EXPECT_EQ(parse_bound("2.7e10"), Rational(Integer(27) * ipow(Integer(10), 9)));
    EXPECT_EQ(parse_bound("27/10"), make_rational(27, 10));
    EXPECT_EQ(parse_bound("0.5"), make_rational(1, 2));
    EXPECT_EQ(parse_bound("15e-1"), make_rational(3, 2));
    EXPECT_EQ(parse_rational("-3375"), -3375);
    for (const char* bad : {"", "e5", "1e", "1.2.3", "1/0", "abc", "0", "-1", "1e5x"}) {
        EXPECT_THROW(parse_bound(bad), std::invalid_argument) << bad;
    }
}

TEST(Parse, JAliases) {
    EXPECT_EQ(parse_j("cm:-163"), Rational(Integer("-262537412640768000")));
    EXPECT_EQ(parse_j("cm:-3:2"), 54000);
    EXPECT_EQ(parse_j("-35937/4"), make_rational(-35937, 4));
    EXPECT_THROW(parse_j("cm:-5"), std::invalid_argument);
    EXPECT_THROW(parse_j("cm:x"), std::invalid_argument);
}

TEST(Render, BoundLabels) {
    EXPECT_EQ(bound_label(Rational(ipow(Integer(10), 10))), "1e10");
    EXPECT_EQ(bound_label(Rational(Integer(27) * ipow(Integer(10), 9))), "2.7e10");
    EXPECT_EQ(bound_label(100000), "100000");
    EXPECT_EQ(bound_label(make_rational(7, 2)), "7/2");
}

TEST(Render, CsvQuoting) {
    Table t;
    t.columns = {"a", "b"};
    t.add({Cell::text("x,y"), Cell::text("say \"hi\"")});
    EXPECT_EQ(rendered(t, OutputFormat::csv), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}
