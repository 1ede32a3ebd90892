#include "s3nf/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace s3nf {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json optional_number(const std::optional<double>& x) { return x ? number_or_null(*x) : Json(nullptr); }

}  // namespace

Json to_json(const SU2Spectrum& s) {
  Json blocks = Json::array();
  for (int m = 0; m <= s.max_degree(); ++m) {
    Json re = Json::array(), im = Json::array();
    for (int r = 0; r <= m; ++r) {
      Json rr = Json::array(), ri = Json::array();
      for (int c = 0; c <= m; ++c) {
        rr.push_back(s[m](r, c).real());
        ri.push_back(s[m](r, c).imag());
      }
      re.push_back(std::move(rr));
      im.push_back(std::move(ri));
    }
    blocks.push_back({{"m", m}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  return {{"max_degree", s.max_degree()}, {"blocks", std::move(blocks)}};
}

SU2Spectrum spectrum_from_json(const Json& j) {
  try {
    const int M = j.at("max_degree").get<int>();
    if (M < 0) throw std::invalid_argument("spectrum: negative max_degree");
    const Json& blocks = j.at("blocks");
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != M + 1)
      throw std::invalid_argument("spectrum: expected max_degree + 1 blocks");
    SU2Spectrum s(M);
    for (const Json& b : blocks) {
      const int m = b.at("m").get<int>();
      if (m < 0 || m > M) throw std::invalid_argument("spectrum: block degree out of range");
      const Json &re = b.at("re"), &im = b.at("im");
      if (re.size() != static_cast<std::size_t>(m + 1) || im.size() != static_cast<std::size_t>(m + 1))
        throw std::invalid_argument("spectrum: block " + std::to_string(m) + " has the wrong shape");
      for (int r = 0; r <= m; ++r) {
        if (re[r].size() != static_cast<std::size_t>(m + 1) || im[r].size() != static_cast<std::size_t>(m + 1))
          throw std::invalid_argument("spectrum: block " + std::to_string(m) + " has the wrong shape");
        for (int c = 0; c <= m; ++c) s[m](r, c) = cplx(re[r][c].get<double>(), im[r][c].get<double>());
      }
    }
    return s;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("spectrum: ") + e.what());
  }
}

Json to_json(const EstimateParams& p) {
  return {{"alpha1", p.alpha1}, {"alpha2", p.alpha2}, {"beta0", p.beta0}, {"betaw", p.betaw}};
}

Json to_json(const Admissibility& a) {
  return {{"admissible", a.admissible}, {"boundary", a.boundary}, {"violated", a.violated}};
}

Json to_json(const RatioReport& r) {
  Json degrees = Json::array(), ratios = Json::array(), sups = Json::array();
  std::size_t trials = 0;
  for (const DegreeRatios& d : r.by_degree) {
    degrees.push_back(d.M);
    Json row = Json::array();
    for (double x : d.ratios) row.push_back(number_or_null(x));
    ratios.push_back(std::move(row));
    sups.push_back(optional_number(d.sup));
    trials = std::max(trials, d.ratios.size());
  }
  return {{"params", to_json(r.params)},
          {"admissibility", to_json(r.admissibility)},
          {"seed", r.config.seed},
          {"sigma", r.config.sigma},
          {"ensemble", r.ensemble},
          {"degrees", std::move(degrees)},
          {"trials", trials},
          {"ratios", std::move(ratios)},
          {"sups", std::move(sups)},
          {"sup", optional_number(r.sup)},
          {"sup_change", optional_number(r.sup_change())}};
}

Json to_json(const SeriesClass& c) {
  Json samples = Json::array();
  for (const auto& [n, s] : c.samples) samples.push_back({{"n", n}, {"S", number_or_null(s)}});
  return {{"beta0", c.triple.beta0},
          {"alpha", c.triple.alpha},
          {"beta", c.triple.beta},
          {"conditions", c.conditions},
          {"predicted_convergent", c.predicted_convergent},
          {"slope", number_or_null(c.slope)},
          {"samples", std::move(samples)}};
}

Json to_json(const LambdaProfile& p) {
  return {{"n", p.n},
          {"beta0", p.beta0},
          {"betaw", p.betaw},
          {"m_star", optional_number(p.m_star)},
          {"min_value", p.min_value},
          {"basic_sign_ok", p.basic_sign_ok},
          {"pp", {{"applicable", p.pp_applicable}, {"expected", p.pp_expected}, {"decreasing", p.pp_decreasing}}},
          {"pm", {{"applicable", p.pm_applicable}, {"expected", p.pm_expected}, {"increasing", p.pm_increasing}}}};
}

Json to_json(const ForcedEstimate& e) {
  return {{"lhs", number_or_null(e.lhs)},       {"lhs_dt", number_or_null(e.lhs_dt)},
          {"rhs", number_or_null(e.rhs)},       {"rhs_l2", number_or_null(e.rhs_l2)},
          {"ratio", number_or_null(e.ratio())}, {"ratio_with_dt", number_or_null(e.ratio_with_dt())},
          {"duhamel_residual", number_or_null(e.duhamel_residual)}};
}

Json to_json(const CorollaryResult& c) {
  return {{"lhs", number_or_null(c.lhs)},
          {"rhs", number_or_null(c.rhs)},
          {"ratio", number_or_null(c.ratio())},
          {"max_residual", number_or_null(c.max_residual)},
          {"nodes", c.nodes}};
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::invalid_argument("csv row width does not match header");
  rows.push_back(std::move(row));
}

std::string CsvTable::str(bool with_header) const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(fields[i]);
    }
    out += '\n';
  };
  if (with_header) line(header);
  for (const auto& r : rows) line(r);
  return out;
}

CsvTable ratio_table(const std::vector<RatioReport>& reports) {
  CsvTable t;
  t.header = {"alpha1", "alpha2", "beta0", "betaw", "admissible", "boundary", "M", "trial", "ratio", "running_sup"};
  for (const RatioReport& r : reports)
    for (const DegreeRatios& d : r.by_degree)
      for (std::size_t k = 0; k < d.ratios.size(); ++k)
        t.add_row({csv_number(r.params.alpha1), csv_number(r.params.alpha2), csv_number(r.params.beta0),
                   csv_number(r.params.betaw), r.admissibility.admissible ? "1" : "0",
                   r.admissibility.boundary ? "1" : "0", std::to_string(d.M), std::to_string(k),
                   csv_number(d.ratios[k]), csv_number(d.running_sup[k])});
  return t;
}

CsvTable series_table(const std::vector<SeriesClass>& classes) {
  CsvTable t;
  t.header = {"beta0", "alpha", "beta", "predicted_convergent", "slope", "n", "S"};
  for (const SeriesClass& c : classes)
    for (const auto& [n, s] : c.samples)
      t.add_row({csv_number(c.triple.beta0), csv_number(c.triple.alpha), csv_number(c.triple.beta),
                 c.predicted_convergent ? "1" : "0", csv_number(c.slope), std::to_string(n), csv_number(s)});
  return t;
}

}  // namespace s3nf
