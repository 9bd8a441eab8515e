#include "pwb/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pwb/certifier.hpp"
#include "pwb/errors.hpp"
#include "pwb/json_io.hpp"
#include "pwb/roots.hpp"
#include "pwb/verifier.hpp"

namespace pwb::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string input_path;
    double tol = kDefaultTolerance;
    int samples = 100000;
    std::uint64_t seed = 42;
    std::string output;
    std::string format = "json";
    int fejer_n = 0;
};

void add_common(CLI::App* sub, RunConfig& cfg, bool takes_input) {
    if (takes_input)
        sub->add_option("input", cfg.input_path, "Polynomial file (stdin when omitted)");
    sub->add_option("--tol", cfg.tol, "Certification tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--samples", cfg.samples, "Samples per verification check")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    sub->add_option("--out", cfg.output, "Output file (stdout when omitted)");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

SparsePolynomial read_input(const RunConfig& cfg, std::istream& in) {
    if (!cfg.input_path.empty()) return load_polynomial(cfg.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polynomial(buf.str());
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target(cfg.output);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << text;
        if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

int certificate_exit(const Certificate& c) {
    switch (c.verdict) {
        case Verdict::Certified:
        case Verdict::CertifiedTight: return kOk;
        case Verdict::Rejected: return kRejected;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

struct VerifyOutcome {
    json doc;
    int exit = kOk;
};

VerifyOutcome run_verification(const SparsePolynomial& p, const Certificate& cert,
                               const RunConfig& cfg) {
    json reports = json::array();
    json skipped = json::array();
    bool all_passed = true;

    auto attempt = [&](const char* name, auto&& check) {
        try {
            VerificationReport r = check();
            all_passed = all_passed && r.passed;
            reports.push_back(to_json(r));
        } catch (const NotApplicable& e) {
            skipped.push_back({{"check", name}, {"reason", e.what()}});
        }
    };
    auto not_certified = [&](const char* name) {
        skipped.push_back({{"check", name}, {"reason", "polynomial is not certified"}});
    };

    attempt("pointwise_bernstein", [&] { return verify_pointwise_bernstein(p, cfg.samples, cfg.seed); });
    attempt("circle_bernstein", [&] { return verify_circle_bernstein(p, cfg.samples, cfg.seed); });
    if (cert.accepted()) {
        attempt("strict_interior", [&] { return verify_strict_interior(p, cfg.samples, cfg.seed); });
        attempt("tail_chain", [&] { return verify_tail_chain(p, cfg.samples, cfg.seed); });
    } else {
        not_certified("strict_interior");
        not_certified("tail_chain");
    }
    if (p.degree() >= 1) {
        attempt("aziz", [&] { return verify_aziz(p, cfg.samples, cfg.seed); });
        attempt("combined_min", [&] { return verify_combined_min(p, cfg.samples, cfg.seed, &cert); });
        attempt("divided_difference", [&] { return verify_lemma2(p, cfg.samples, cfg.seed); });
    } else {
        attempt("combined_min", [&] { return verify_combined_min(p, cfg.samples, cfg.seed, &cert); });
        skipped.push_back({{"check", "aziz"}, {"reason", "constant polynomial"}});
        skipped.push_back({{"check", "divided_difference"}, {"reason", "constant polynomial"}});
    }

    VerifyOutcome o;
    o.doc = json{{"passed", all_passed}, {"reports", std::move(reports)},
                 {"not_applicable", std::move(skipped)}};
    o.exit = all_passed ? kOk : kRejected;
    return o;
}

int cmd_certify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const SparsePolynomial p = read_input(cfg, in);
    const Certificate c = check_condition(p, cfg.tol);
    emit(cfg, dump(to_json(c)), out);
    return certificate_exit(c);
}

int cmd_verify(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const SparsePolynomial p = read_input(cfg, in);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        const auto rows = pointwise_bernstein_grid(p, cfg.samples, cfg.seed);
        write_grid_csv(csv, rows);
        emit(cfg, csv.str(), out);
        const VerificationReport r = verify_pointwise_bernstein(p, cfg.samples, cfg.seed);
        return r.passed ? kOk : kRejected;
    }
    const Certificate c = check_condition(p, cfg.tol);
    VerifyOutcome v = run_verification(p, c, cfg);
    emit(cfg, dump(v.doc), out);
    return v.exit;
}

int cmd_roots(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    const SparsePolynomial p = read_input(cfg, in);
    if (p.degree() < 1) throw FormatError("roots: polynomial degree must be >= 1");
    emit(cfg, dump(to_json(find_roots(p))), out);
    return kOk;
}

int cmd_fejer(const RunConfig& cfg, std::ostream& out) {
    emit(cfg, dump(to_json(build_fejer_family(cfg.fejer_n))), out);
    return kOk;
}

int cmd_suite(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
    const SparsePolynomial p = read_input(cfg, in);
    const Certificate c = check_condition(p, cfg.tol);
    int exit = certificate_exit(c);

    json roots_doc = nullptr;
    if (p.degree() >= 1) {
        try {
            roots_doc = to_json(find_roots(p));
        } catch (const RootNonConvergence& e) {
            roots_doc = to_json(e.partial());
            roots_doc["converged"] = false;
            exit = std::max(exit, static_cast<int>(kNumerical));
        }
    }

    json verification = nullptr;
    try {
        VerifyOutcome v = run_verification(p, c, cfg);
        exit = std::max(exit, v.exit);
        verification = std::move(v.doc);
    } catch (const NonConvergence& e) {
        verification = json{{"error", e.what()}};
        exit = std::max(exit, static_cast<int>(kNumerical));
    }

    const bool verified = verification.is_object() && verification.value("passed", false);
    const std::string summary = "verdict=" + std::string(to_string(c.verdict)) +
                                " verification=" + (verified ? "passed" : "failed") +
                                " exit=" + std::to_string(exit);
    json doc{{"certificate", to_json(c)},
             {"verification", std::move(verification)},
             {"roots", std::move(roots_doc)},
             {"summary", summary}};
    emit(cfg, dump(doc), out);
    err << summary << "\n";
    return exit;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Certify and verify pointwise Bernstein inequalities for polynomials",
                 args.empty() ? "pwb" : args.front()};
    app.require_subcommand(1, 1);

    CLI::App* certify = app.add_subcommand("certify", "Check the tail condition for every nu");
    CLI::App* verify = app.add_subcommand("verify", "Run all applicable sampled inequality checks");
    CLI::App* roots = app.add_subcommand("roots", "Find zeros with multiplicities");
    CLI::App* fejer = app.add_subcommand("fejer", "Write the polynomial sum (n+1-k) z^k");
    CLI::App* suite = app.add_subcommand("suite", "certify + verify + roots");
    for (CLI::App* sub : {certify, verify, roots, suite}) add_common(sub, cfg, true);
    add_common(fejer, cfg, false);
    fejer->add_option("--n", cfg.fejer_n, "Degree (>= 2)")->required();

    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    }

    try {
        if (certify->parsed()) return cmd_certify(cfg, in, out);
        if (verify->parsed()) return cmd_verify(cfg, in, out);
        if (roots->parsed()) return cmd_roots(cfg, in, out);
        if (fejer->parsed()) return cmd_fejer(cfg, out);
        return cmd_suite(cfg, in, out, err);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

}  // namespace pwb::cli
