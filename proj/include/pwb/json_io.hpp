#pragma once

#include <filesystem>
#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pwb/certifier.hpp"
#include "pwb/poly.hpp"
#include "pwb/roots.hpp"
#include "pwb/verifier.hpp"

namespace pwb {

using json = nlohmann::ordered_json;

/// {"terms": [[k, re, im], ...]} with strictly increasing integer k and
/// nonzero coefficients. Throws FormatError naming the offending field.
SparsePolynomial polynomial_from_json(const json& doc);
SparsePolynomial parse_polynomial(std::string_view text);
SparsePolynomial load_polynomial(const std::filesystem::path& path);

json to_json(const SparsePolynomial& p);
json to_json(const Certificate& c);
json to_json(const RootFindReport& r);
json to_json(const VerificationReport& r);

/// Columns x, y, |zP'|, k_n|P|, ratio.
void write_grid_csv(std::ostream& out, const std::vector<GridRow>& rows);

}  // namespace pwb
