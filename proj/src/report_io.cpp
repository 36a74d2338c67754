#include "dpqs/report_io.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

namespace dpqs {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string sig(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

void write_bench_csv(std::ostream& os, const std::vector<ValidationRow>& rows) {
  os << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << to_string(r.measure) << ',' << (r.phase ? to_string(*r.phase) : "total") << ','
       << num(r.mean) << ',' << num(r.stderr_) << ',' << opt_num(r.asymptotic) << ',' << opt_num(r.truncated)
       << '\n';
  }
}

namespace {

nlohmann::json coeff_fields(nlohmann::json j, const CoeffSet& c) {
  j["H"] = to_double(c.H);
  j["a_C"] = to_double(c.a_C);
  j["a_S"] = to_double(c.a_S);
  j["a_BC"] = to_double(c.a_BC);
  j["a_SE"] = to_double(c.a_SE);
  j["ratio_C"] = c.ratio_d(CostMeasure::comparisons);
  j["ratio_S"] = c.ratio_d(CostMeasure::swaps);
  j["ratio_BC"] = c.ratio_d(CostMeasure::bytecodes);
  j["ratio_SE"] = c.ratio_d(CostMeasure::scanned);
  return j;
}

}  // namespace

nlohmann::json coeffs_json(const SamplingParam& t, const CoeffSet& c) {
  nlohmann::json j;
  j["t"] = {t.t1, t.t2, t.t3};
  j["k"] = t.k();
  return coeff_fields(std::move(j), c);
}

nlohmann::json coeffs_json(const CqsSamplingParam& t, const CoeffSet& c) {
  nlohmann::json j;
  j["t"] = {t.t1, t.t2};
  j["k"] = t.k();
  return coeff_fields(std::move(j), c);
}

void write_coeffs_text(std::ostream& os, const std::string& label, const CoeffSet& c) {
  os << label << "  H=" << c.H << " (" << sig(to_double(c.H), 8) << ")\n";
  for (CostMeasure m : kCostMeasures) {
    os << "  " << to_string(m) << ": a=" << c.a(m) << "  a/H=" << sig(c.ratio_d(m), 6) << '\n';
  }
}

std::string format_t(const SamplingParam& t) {
  return "(" + std::to_string(t.t1) + "," + std::to_string(t.t2) + "," + std::to_string(t.t3) + ")";
}

std::string format_t(const CqsSamplingParam& t) {
  return "(" + std::to_string(t.t1) + "," + std::to_string(t.t2) + ")";
}

void write_optimum(std::ostream& os, const OptimumReport& r) {
  os << "k=" << r.k << " measure=" << to_string(r.measure) << " t*=" << format_t(r.t)
     << " q=" << sig(r.value_d(), 6) << " exact=" << r.value << '\n';
  if (r.all_optima.size() > 1) {
    os << "ties:";
    for (const auto& t : r.all_optima) os << ' ' << format_t(t);
    os << '\n';
  }
}

void write_tau_optimum(std::ostream& os, const TauOptimum& r) {
  auto fmt = [](const Tau& t) { return "(" + sig(t[0], 6) + "," + sig(t[1], 6) + "," + sig(t[2], 6) + ")"; };
  os << "measure=" << to_string(r.measure) << " tau*=" << fmt(r.tau) << " q=" << sig(r.value, 6) << '\n';
  if (r.all_optima.size() > 1) {
    os << "ties:";
    for (const auto& t : r.all_optima) os << ' ' << fmt(t);
    os << '\n';
  }
}

void write_compare_table(std::ostream& os, const std::vector<CompareRow>& rows) {
  os << "k,measure,cqs_t,yqs_t,cqs,yqs\n";
  for (const auto& r : rows) {
    const std::string k = r.k == 0 ? "none" : std::to_string(r.k);
    if (r.flagged) {
      os << k << ",flagged,,,,\n";
      continue;
    }
    for (std::size_t i = 0; i < kCostMeasures.size(); ++i) {
      char c[32], y[32];
      std::snprintf(c, sizeof c, "%.4f", r.cqs[i]);
      std::snprintf(y, sizeof y, "%.4f", r.yqs[i]);
      os << k << ',' << to_string(kCostMeasures[i]) << ",\"" << format_t(r.cqs_t) << "\",\"" << format_t(r.yqs_t)
         << "\"," << c << ',' << y << '\n';
    }
  }
}

void write_oracle(std::ostream& os, const OracleResult& r) {
  os << "permutations=" << r.permutations << '\n';
  os << "first partition: comparisons=" << r.first_comparisons << " swaps=" << r.first_swaps
     << " scanned=" << r.first_scanned << " bytecodes=" << r.first_bytecodes << '\n';
  for (Phase p : kAllPhases) {
    os << to_string(p) << ':';
    for (Measure m : kAllMeasures) {
      if (m == Measure::cache_misses) continue;
      os << ' ' << to_string(m) << '=' << r.mean[static_cast<std::size_t>(p)][static_cast<std::size_t>(m)];
    }
    os << '\n';
  }
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ConfigError("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("malformed integer list: " + s);
    }
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

SamplingParam parse_sampling(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 3) throw ConfigError("sampling parameter needs three components: " + s);
  SamplingParam t{v[0], v[1], v[2]};
  validate(t);
  return t;
}

CqsSamplingParam parse_cqs_sampling(const std::string& s) {
  auto v = parse_int_list(s);
  if (v.size() != 2) throw ConfigError("classic sampling parameter needs two components: " + s);
  CqsSamplingParam t{v[0], v[1]};
  validate(t);
  return t;
}

std::size_t parse_size(const std::string& s) {
  try {
    if (s.rfind("2^", 0) == 0) {
      int e = std::stoi(s.substr(2));
      if (e < 0 || e > 40) throw ConfigError("");
      return std::size_t{1} << e;
    }
    std::size_t used = 0;
    unsigned long long v = std::stoull(s, &used);
    if (used != s.size()) throw ConfigError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("malformed size: " + s);
  }
}

}  // namespace dpqs
