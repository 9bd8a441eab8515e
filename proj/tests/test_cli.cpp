#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pwb/certifier.hpp"
#include "pwb/cli.hpp"
#include "pwb/errors.hpp"
#include "pwb/json_io.hpp"

using namespace pwb;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "pwb");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "pwb_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

void write(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const fs::path& path) {
    std::ifstream f(path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("polynomial file format") {
    const SparsePolynomial p = parse_polynomial(R"({"terms": [[0, 3, 0], [2, 1.5, -2]]})");
    CHECK(p == SparsePolynomial({{0, 3.0}, {2, {1.5, -2.0}}}));
    CHECK(to_json(build_fejer_family(2)).dump() == R"({"terms":[[0,3,0],[1,2,0],[2,1,0]]})");

    // Round trip.
    const SparsePolynomial q({{1, {0.1, 0.2}}, {4, -7.25}, {9, {0.0, 1e-3}}});
    CHECK(parse_polynomial(to_json(q).dump()) == q);

    auto rejects = [](const char* text, const char* fragment) {
        try {
            parse_polynomial(text);
            return false;
        } catch (const FormatError& e) {
            return std::string(e.what()).find(fragment) != std::string::npos;
        }
    };
    CHECK(rejects(R"({"terms": [[0, 0, 0]]})", "terms[0]: zero coefficient"));
    CHECK(rejects(R"({"terms": [[1, 1, 0], [1, 2, 0]]})", "terms[1][0]: duplicate exponent"));
    CHECK(rejects(R"({"terms": [[2, 1, 0], [1, 2, 0]]})", "terms[1][0]: exponents must be strictly"));
    CHECK(rejects(R"({"terms": [[0.5, 1, 0]]})", "terms[0][0]"));
    CHECK(rejects(R"({"terms": [[0, 1]]})", "terms[0]: expected [k, re, im]"));
    CHECK(rejects(R"({"coeffs": []})", "missing field \"terms\""));
    CHECK(rejects(R"({"terms": [[0, 1, 0]],)", "line 1"));
}

TEST_CASE("cli fejer") {
    const Result r = run({"fejer", "--n", "2"});
    CHECK(r.code == cli::kOk);
    CHECK(parse_polynomial(r.out) == build_fejer_family(2));
    CHECK(json::parse(r.out)["terms"] == json::parse("[[0,3,0],[1,2,0],[2,1,0]]"));

    const fs::path out = scratch("fejer6.json");
    CHECK(run({"fejer", "--n", "6", "--out", out.string()}).code == cli::kOk);
    CHECK(load_polynomial(out) == build_fejer_family(6));
    CHECK_FALSE(fs::exists(fs::path(out.string() + ".tmp")));

    CHECK(run({"fejer", "--n", "1"}).code == cli::kBadInput);
    CHECK(run({"fejer"}).code == cli::kBadInput);
}

TEST_CASE("cli certify") {
    const fs::path f6 = scratch("f6.json");
    run({"fejer", "--n", "6", "--out", f6.string()});
    const Result tight = run({"certify", f6.string()});
    CHECK(tight.code == cli::kOk);
    const json doc = json::parse(tight.out);
    CHECK(doc["verdict"] == "CertifiedTight");
    CHECK(doc["tolerance"] == 1e-9);
    CHECK(doc["per_nu"].size() == 7);
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"verdict", "margin", "tolerance", "per_nu"});

    const Result rejected = run({"certify"}, R"({"terms": [[0,1,0],[1,1,0]]})");
    CHECK(rejected.code == cli::kRejected);
    CHECK(json::parse(rejected.out)["verdict"] == "Rejected");

    CHECK(run({"certify"}, R"({"terms": [[0,2,0],[1,0.5,0]]})").code == cli::kOk);
    CHECK(run({"certify", "--tol", "1e-6"}, R"({"terms": [[0,1,0],[1,0.5,0]]})").code == cli::kOk);

    const Result bad = run({"certify"}, R"({"terms": [[0,1,0],[0,1,0]]})");
    CHECK(bad.code == cli::kBadInput);
    CHECK(bad.err.find("terms[1][0]") != std::string::npos);
    CHECK(run({"certify", "/nonexistent/poly.json"}).code == cli::kBadInput);
    CHECK(run({"certify", "--tol", "-1"}, "{}").code == cli::kBadInput);
}

TEST_CASE("cli output is reproducible") {
    const std::string input = to_json(build_fejer_family(4)).dump();
    const Result a = run({"suite", "--samples", "2000", "--seed", "9"}, input);
    const Result b = run({"suite", "--samples", "2000", "--seed", "9"}, input);
    CHECK(a.out == b.out);
    CHECK(a.code == cli::kOk);
    const json doc = json::parse(a.out);
    CHECK(doc["certificate"]["verdict"] == "CertifiedTight");
    CHECK(doc["verification"]["passed"] == true);
    CHECK(doc["roots"]["roots"].size() == 4);
    CHECK(a.err.find("verdict=CertifiedTight") != std::string::npos);
}

TEST_CASE("cli verify") {
    const std::string fejer = to_json(build_fejer_family(5)).dump();
    const Result ok = run({"verify", "--samples", "5000"}, fejer);
    CHECK(ok.code == cli::kOk);
    const json doc = json::parse(ok.out);
    CHECK(doc["passed"] == true);
    std::vector<std::string> checks;
    for (const auto& r : doc["reports"]) {
        checks.push_back(r["check"]);
        CHECK(r.contains("worst_witness"));
        CHECK(r["worst_witness"].size() == 2);
    }
    CHECK(checks == std::vector<std::string>{"pointwise_bernstein", "circle_bernstein", "strict_interior",
                                             "tail_chain", "aziz", "combined_min", "divided_difference"});

    const Result fail = run({"verify", "--samples", "5000"}, R"({"terms": [[0,1,0],[1,2,0]]})");
    CHECK(fail.code == cli::kRejected);
    const json fdoc = json::parse(fail.out);
    CHECK(fdoc["passed"] == false);
    CHECK(fdoc["not_applicable"].size() >= 2);

    const Result csv = run({"verify", "--samples", "100", "--format", "csv"}, fejer);
    CHECK(csv.code == cli::kOk);
    std::istringstream lines(csv.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "x,y,|zP'|,k_n|P|,ratio");
    int rows = 0;
    for (std::string line; std::getline(lines, line);) ++rows;
    CHECK(rows == 100);
}

TEST_CASE("cli roots") {
    const Result r = run({"roots"}, R"({"terms": [[0,4,0],[1,4,0],[2,1,0]]})");
    CHECK(r.code == cli::kOk);
    const json doc = json::parse(r.out);
    REQUIRE(doc["roots"].size() == 1);
    CHECK(doc["roots"][0]["mult"] == 2);
    CHECK(doc["roots"][0]["re"].get<double>() == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(doc.contains("max_residual"));
    CHECK(doc.contains("iterations"));
    CHECK(run({"roots"}, R"({"terms": [[0,4,0]]})").code == cli::kBadInput);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).code == cli::kBadInput);
    CHECK(run({"bogus"}).code == cli::kBadInput);
    CHECK(run({"certify", "--format", "xml"}, "{}").code == cli::kBadInput);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("cli writes files atomically") {
    const fs::path out = scratch("cert.json");
    write(out, "stale");
    CHECK(run({"certify", "--out", out.string()}, R"({"terms": [[0,1,0]]})").code == cli::kOk);
    CHECK(json::parse(read(out))["verdict"] == "Certified");
}
