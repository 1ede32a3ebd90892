#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "s3nf/estimates.hpp"
#include "s3nf/minkowski_bridge.hpp"
#include "s3nf/series.hpp"
#include "s3nf/spectrum.hpp"

namespace s3nf {

using Json = nlohmann::json;

/// {"max_degree": M, "blocks": [{"m": m, "re": [[...]], "im": [[...]]}, ...]}
Json to_json(const SU2Spectrum& s);
/// Throws std::invalid_argument on malformed input.
SU2Spectrum spectrum_from_json(const Json& j);

Json to_json(const EstimateParams& p);
Json to_json(const Admissibility& a);
/// {params, seed, degrees[], trials, ratios[][], sups[], sup, sup_change, ...}
Json to_json(const RatioReport& r);
Json to_json(const SeriesClass& c);
Json to_json(const LambdaProfile& p);
Json to_json(const ForcedEstimate& e);
Json to_json(const CorollaryResult& c);

/// Shortest round-trip representation; nan and inf spelled out.
std::string csv_number(double x);
/// Quotes fields containing separators, quotes or newlines.
std::string csv_escape(const std::string& s);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  /// Header line plus rows, '\n' terminated.
  std::string str(bool with_header = true) const;
};

/// One row per (parameter set, degree, trial).
CsvTable ratio_table(const std::vector<RatioReport>& reports);
/// One row per partial-sum sample.
CsvTable series_table(const std::vector<SeriesClass>& classes);

}  // namespace s3nf
