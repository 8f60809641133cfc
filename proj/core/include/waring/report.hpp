#pragma once

#include <json.hpp>

#include "waring/bounds.hpp"
#include "waring/cubic.hpp"
#include "waring/decomp.hpp"
#include "waring/limits.hpp"

namespace waring {

// Structured key/value reports, one document per CLI invocation. Every
// reported number carries the provenance string of the bound or theorem it
// came from, and identical inputs always produce byte-identical documents.

using Report = nlohmann::ordered_json;

Report report_flatten_rank(const Poly<Rational>& f);
Report report_binary_rank(const Poly<Rational>& f);
Report report_binary_rank(const Poly<GaussianRational>& f);
Report report_monomial_bounds(const std::vector<int>& exponents);
Report report_detperm_table(int max_n, bool verify_flattenings, int max_verify_n);
Report report_bounds(const Poly<Rational>& f);
Report report_rank_report(const RankReport& r);
Report report_catalog_entry(const CatalogVerification& v);
Report report_limit_monomial(const std::vector<int>& exponents);
Report report_limit_normal_form(const std::string& row_id, int degree);
Report report_cubic_classify(const Poly<Rational>& f, bool with_numeric_aronhold = false,
                             long precision_bits = BigFloat::kDefaultPrecision);
Report report_paper_tables(const std::string& which);

}  // namespace waring
