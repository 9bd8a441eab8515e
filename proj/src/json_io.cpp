#include "pwb/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "pwb/errors.hpp"

namespace pwb {

namespace {

std::string field(std::size_t i) { return "terms[" + std::to_string(i) + "]"; }

json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

json point(cplx z) { return json::array({z.real(), z.imag()}); }

// Integral values print as integers so that generated files read [[0, 3, 0], ...].
json compact_number(double v) {
    if (std::abs(v) < 9.0e15 && v == std::trunc(v)) return static_cast<long long>(v);
    return v;
}

}  // namespace

SparsePolynomial polynomial_from_json(const json& doc) {
    if (!doc.is_object()) throw FormatError("polynomial: top level must be an object");
    const auto it = doc.find("terms");
    if (it == doc.end()) throw FormatError("polynomial: missing field \"terms\"");
    if (!it->is_array()) throw FormatError("polynomial: \"terms\" must be an array");

    std::vector<Term> terms;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& t = (*it)[i];
        if (!t.is_array() || t.size() != 3)
            throw FormatError(field(i) + ": expected [k, re, im]");
        if (!t[0].is_number_integer() || t[0].get<long long>() < 0)
            throw FormatError(field(i) + "[0]: exponent must be a nonnegative integer");
        if (!t[1].is_number() || !t[2].is_number())
            throw FormatError(field(i) + ": coefficient parts must be numbers");
        const long long k = t[0].get<long long>();
        if (k > 1'000'000) throw FormatError(field(i) + "[0]: exponent too large");
        const cplx a{t[1].get<double>(), t[2].get<double>()};
        if (a == cplx{0.0, 0.0}) throw FormatError(field(i) + ": zero coefficient");
        if (!terms.empty()) {
            if (k == terms.back().exponent)
                throw FormatError(field(i) + "[0]: duplicate exponent " + std::to_string(k));
            if (k < terms.back().exponent)
                throw FormatError(field(i) + "[0]: exponents must be strictly increasing");
        }
        terms.push_back({static_cast<int>(k), a});
    }
    return SparsePolynomial(std::move(terms));
}

SparsePolynomial parse_polynomial(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("polynomial: ") + e.what());
    }
    return polynomial_from_json(doc);
}

SparsePolynomial load_polynomial(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_polynomial(buf.str());
}

json to_json(const SparsePolynomial& p) {
    json terms = json::array();
    for (const Term& t : p.terms())
        terms.push_back(json::array({json(t.exponent), compact_number(t.coefficient.real()),
                                    compact_number(t.coefficient.imag())}));
    return json{{"terms", std::move(terms)}};
}

json to_json(const Certificate& c) {
    json per_nu = json::array();
    for (const NuResult& r : c.per_nu)
        per_nu.push_back({{"nu", r.nu},
                          {"lower_bound", number_or_null(r.min.lower_bound)},
                          {"witness_x", r.min.witness_x},
                          {"witness_value", number_or_null(r.min.witness_value)}});
    return json{{"verdict", std::string(to_string(c.verdict))},
                {"margin", number_or_null(c.margin)},
                {"tolerance", c.tolerance_used},
                {"per_nu", std::move(per_nu)}};
}

json to_json(const RootFindReport& r) {
    json roots = json::array();
    for (const Root& root : r.roots.roots)
        roots.push_back({{"re", root.location.real()},
                         {"im", root.location.imag()},
                         {"mult", root.multiplicity}});
    return json{{"roots", std::move(roots)},
                {"max_residual", r.max_residual},
                {"iterations", r.iterations}};
}

json to_json(const VerificationReport& r) {
    json violations = json::array();
    for (const Violation& v : r.violations)
        violations.push_back({{"z", point(v.z)},
                              {"lhs", number_or_null(v.lhs)},
                              {"rhs", number_or_null(v.rhs)}});
    json out{{"check", r.check_name},
             {"samples", r.samples},
             {"worst_ratio", number_or_null(r.worst_ratio)},
             {"worst_witness", point(r.worst_witness)},
             {"violations", std::move(violations)},
             {"passed", r.passed}};
    if (r.violation_count > static_cast<int>(r.violations.size()))
        out["violation_count"] = r.violation_count;
    if (r.margin) out["margin"] = number_or_null(*r.margin);
    return out;
}

void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows) {
    out << "x,y,|zP'|,k_n|P|,ratio\n";
    std::ostringstream line;
    line.precision(17);
    for (const GridRow& r : rows) {
        line.str("");
        line << r.x << ',' << r.y << ',' << r.lhs << ',' << r.rhs << ',' << r.ratio << '\n';
        out << line.str();
    }
}

}  // namespace pwb
