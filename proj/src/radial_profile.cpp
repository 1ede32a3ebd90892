#include "s3nf/radial_profile.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_interp.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <stdexcept>

namespace s3nf {

namespace {

double param(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_keys(const std::string& name, const std::map<std::string, double>& p, std::set<std::string> allowed) {
  for (const auto& [k, v] : p) {
    if (!allowed.count(k)) throw std::invalid_argument("profile " + name + ": unknown parameter " + k);
    if (!std::isfinite(v)) throw std::invalid_argument("profile " + name + ": parameter " + k + " not finite");
  }
}

bool parse_double(std::string_view s, double& out) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::vector<std::string> profile_names() {
  return {"zero", "gaussian", "bump", "omega_power", "omega_power_cos"};
}

RadialProfile make_profile(const std::string& name, const std::map<std::string, double>& params) {
  RadialProfile out{name, params, {}};
  const double A = param(params, "amplitude", 1.0);
  if (name == "zero") {
    check_keys(name, params, {});
    out.fn = [](double) { return 0.0; };
  } else if (name == "gaussian") {
    check_keys(name, params, {"amplitude", "width"});
    const double w = param(params, "width", 1.0);
    if (!(w > 0.0)) throw std::invalid_argument("profile gaussian: width must be positive");
    out.fn = [A, w](double r) { return A * std::exp(-(r / w) * (r / w)); };
  } else if (name == "bump") {
    check_keys(name, params, {"amplitude", "radius"});
    const double R = param(params, "radius", 1.0);
    if (!(R > 0.0)) throw std::invalid_argument("profile bump: radius must be positive");
    out.fn = [A, R](double r) {
      const double x = r / R;
      return x < 1.0 ? A * std::exp(1.0 - 1.0 / (1.0 - x * x)) : 0.0;
    };
  } else if (name == "omega_power") {
    check_keys(name, params, {"amplitude", "power"});
    const double p = param(params, "power", 1.0);
    out.fn = [A, p](double r) { return A * std::pow(2.0 / (1.0 + r * r), p); };
  } else if (name == "omega_power_cos") {
    check_keys(name, params, {"amplitude", "power"});
    const double p = param(params, "power", 1.0);
    out.fn = [A, p](double r) { return A * std::pow(2.0 / (1.0 + r * r), p) * (1.0 - r * r) / (1.0 + r * r); };
  } else {
    throw std::invalid_argument("unknown profile: " + name);
  }
  return out;
}

RadialProfile profile_from_samples(std::vector<double> r, std::vector<double> values, const std::string& interpolation) {
  const gsl_interp_type* type = nullptr;
  if (interpolation == "linear") type = gsl_interp_linear;
  else if (interpolation == "cubic") type = gsl_interp_cspline;
  else if (interpolation == "steffen") type = gsl_interp_steffen;
  else throw std::invalid_argument("unknown interpolation: " + interpolation);
  if (r.size() != values.size()) throw std::invalid_argument("profile samples: size mismatch");
  if (r.size() < gsl_interp_type_min_size(type))
    throw std::invalid_argument("profile samples: too few points for " + interpolation);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!std::isfinite(r[i]) || !std::isfinite(values[i])) throw std::invalid_argument("profile samples: not finite");
    if (r[i] < 0.0) throw std::invalid_argument("profile samples: negative radius");
    if (i > 0 && !(r[i] > r[i - 1])) throw std::invalid_argument("profile samples: radii must increase strictly");
  }

  struct Table {
    std::vector<double> r, v;
    gsl_interp* interp = nullptr;
    ~Table() { gsl_interp_free(interp); }
  };
  auto tab = std::make_shared<Table>();
  tab->r = std::move(r);
  tab->v = std::move(values);
  tab->interp = gsl_interp_alloc(type, tab->r.size());
  if (gsl_interp_init(tab->interp, tab->r.data(), tab->v.data(), tab->r.size()) != GSL_SUCCESS)
    throw std::invalid_argument("profile samples: interpolation setup failed");

  RadialProfile out;
  out.name = "samples:" + interpolation;
  out.fn = [tab](double x) {
    if (x > tab->r.back()) return 0.0;
    if (x <= tab->r.front()) return tab->v.front();
    // no accelerator, so concurrent evaluation is safe
    return gsl_interp_eval(tab->interp, tab->r.data(), tab->v.data(), x, nullptr);
  };
  return out;
}

RadialProfile profile_from_csv(const std::string& path, const std::string& interpolation) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile file " + path);
  std::vector<double> r, v;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto comma = line.find(',');
    double a = 0.0, b = 0.0;
    const bool ok = comma != std::string::npos && parse_double(std::string_view(line).substr(0, comma), a) &&
                    parse_double(std::string_view(line).substr(comma + 1), b);
    if (!ok) {
      if (r.empty() && lineno == 1) continue;  // header
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'r,value'");
    }
    r.push_back(a);
    v.push_back(b);
  }
  RadialProfile out = profile_from_samples(std::move(r), std::move(v), interpolation);
  out.name = "csv:" + path;
  return out;
}

}  // namespace s3nf
