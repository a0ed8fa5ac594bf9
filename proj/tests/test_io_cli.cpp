#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "latcol/cli.hpp"
#include "latcol/errors.hpp"
#include "latcol/io.hpp"

using namespace latcol;

namespace {

const std::string kData = LATCOL_TEST_DATA;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string without_timing(const std::string& report) {
    return std::regex_replace(report, std::regex("timing_ms: [0-9.]+\n"), "");
}

}  // namespace

TEST(MatrixFile, ParsesMatrixAndSpectrum) {
    const MatrixFile f = parse_matrix_file("# comment\n2 2\n1/2 i\n0 -3+2i\nspectrum: 1/2, -3+2i\n");
    EXPECT_EQ(f.matrix, (Matrix{{Scalar(Rational(1, 2)), Scalar::i()}, {0, Scalar::parse("-3+2i")}}));
    ASSERT_TRUE(f.spectrum);
    EXPECT_EQ(f.spectrum->size(), 2u);
}

TEST(MatrixFile, RoundTrip) {
    const Matrix m{{Scalar(Rational(1, 2)), Scalar::i()}, {0, Scalar::parse("-3+2i")}};
    const std::vector<Scalar> spectrum{Scalar(1), Scalar::i()};
    const MatrixFile back = parse_matrix_file(format_matrix_file(m, spectrum));
    EXPECT_EQ(back.matrix, m);
    EXPECT_EQ(*back.spectrum, spectrum);
}

TEST(MatrixFile, ErrorsCarryLineAndColumn) {
    auto message = [](const std::string& text) {
        try {
            (void)parse_matrix_file(text, "m.txt");
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_EQ(message("2 2\n1 2\n3 x/4\n").rfind("m.txt:3:3: bad scalar 'x/4'", 0), 0u);
    EXPECT_EQ(message("2 2\n1 2\n3\n").rfind("m.txt:3:", 0), 0u);
    EXPECT_EQ(message("2 2\n1 2\n").rfind("m.txt:3: expected 2 rows", 0), 0u);
    EXPECT_EQ(message("two 2\n").rfind("m.txt:1:1:", 0), 0u);
    EXPECT_EQ(message("1 1\n5\nextra\n").rfind("m.txt:3:1: unexpected content", 0), 0u);
    EXPECT_EQ(message("1 1\n5\nspectrum: 5 q\n").rfind("m.txt:3:13: bad scalar 'q'", 0), 0u);
    EXPECT_EQ(message("").rfind("m.txt:1: empty file", 0), 0u);
}

TEST(MatrixFile, SubspaceRoundTrip) {
    const Subspace s = Subspace::span_of(3, std::vector<Vector>{{1, 2, 0}, {0, 0, 1}});
    EXPECT_EQ(parse_subspace(format_subspace(s)), s);
    EXPECT_EQ(parse_subspace(format_subspace(Subspace(3))), Subspace(3));
}

TEST(Report, FieldOrderAndDigest) {
    Report r("demo");
    r.add_inputs("abc");
    r.add("seed", "0");
    EXPECT_EQ(r.str(), "command: demo\ninput_digest: e71fa2190541574b\nseed: 0\n");
    EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
}

TEST(Cli, CommutantReport) {
    const CliRun r = run({"commutant", data("j2j2.txt")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dim: 8\n"), std::string::npos);
    EXPECT_NE(r.out.find("seed: 0\n"), std::string::npos);
    EXPECT_EQ(r.out.rfind("command: commutant\n", 0), 0u);
}

TEST(Cli, ReportsAreDeterministicApartFromTiming) {
    const CliRun a = run({"colcheck", data("j2j2.txt"), data("diag1112.txt"), "--seed", "3"});
    const CliRun b = run({"colcheck", data("j2j2.txt"), data("diag1112.txt"), "--seed", "3"});
    EXPECT_EQ(without_timing(a.out), without_timing(b.out));
    EXPECT_NE(a.out.find("seed: 3\n"), std::string::npos);
}

TEST(Cli, ColcheckExitCodes) {
    const CliRun member = run({"colcheck", data("j2j2.txt"), data("diag1212.txt")});
    EXPECT_EQ(member.code, 0) << member.out << member.err;
    EXPECT_NE(member.out.find("verdict: MemberExact"), std::string::npos);
    const CliRun refuted = run({"colcheck", data("j2j2.txt"), data("diag1112.txt")});
    EXPECT_EQ(refuted.code, 1);
    EXPECT_NE(refuted.out.find("verdict: NonMember"), std::string::npos);
    EXPECT_NE(refuted.out.find("witness_verified: yes"), std::string::npos);
    const CliRun swap = run({"colcheck", data("diag01.txt"), data("swap2.txt")});
    EXPECT_EQ(swap.code, 0);
    EXPECT_NE(swap.out.find("permutation: [1 0]"), std::string::npos);
}

TEST(Cli, InputAndPreconditionErrors) {
    EXPECT_EQ(run({"commutant", data("bad_scalar.txt")}).code, 2);
    EXPECT_NE(run({"commutant", data("bad_scalar.txt")}).err.find("bad_scalar.txt:3:3"), std::string::npos);
    EXPECT_EQ(run({"commutant", data("missing.txt")}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"alglat", data("identity2.txt")}).code, 3);
    EXPECT_EQ(run({"separator", data("j2.txt")}).code, 3);
    EXPECT_EQ(run({"colcheck", data("upper_j2.txt"), data("identity2.txt")}).code, 2);
    EXPECT_EQ(run({"verify", "99"}).code, 2);
}

TEST(Cli, OtherCommands) {
    EXPECT_EQ(run({"intertwine", data("j2.txt"), data("j3j2.txt")}).code, 0);
    const CliRun al = run({"alglat", data("j2j2.txt")});
    EXPECT_EQ(al.code, 0);
    EXPECT_NE(al.out.find("dim: 12\n"), std::string::npos);
    EXPECT_NE(al.out.find("blockwise_closed_form: equal\n"), std::string::npos);
    const CliRun jd = run({"jordan", data("j3j2.txt")});
    EXPECT_NE(jd.out.find("jordan_type: {3,2}"), std::string::npos);
    const CliRun dc = run({"decompose", data("gaussian_spectrum.txt")});
    EXPECT_EQ(dc.code, 0);
    EXPECT_NE(dc.out.find("components: 2\n"), std::string::npos);
    EXPECT_EQ(run({"decompose", data("gaussian_spectrum.txt"), "--spectrum", "2"}).code, 2);
    const CliRun sep = run({"separator", data("j3j2.txt")});
    EXPECT_EQ(sep.code, 0);
    EXPECT_NE(sep.out.find("verified: yes"), std::string::npos);
    const CliRun w = run({"witness", data("j2j2.txt"), data("diag1112.txt"), data("x0101.txt")});
    EXPECT_EQ(w.code, 1);
    EXPECT_NE(w.out.find("commutant_witness: none"), std::string::npos);
    EXPECT_EQ(run({"witness", data("j2.txt"), data("upper_j2.txt"), "0,1"}).code, 0);
    const CliRun lat = run({"sample-lattice-j2j2", "--grid", "1"});
    EXPECT_EQ(lat.code, 0);
    EXPECT_NE(lat.out.find("count: 91\n"), std::string::npos);
    const CliRun v = run({"verify", "1"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("suite_1: PASS"), std::string::npos);
}
