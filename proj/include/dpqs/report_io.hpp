#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpqs/experiment.hpp"
#include "dpqs/theory.hpp"
#include "dpqs/tuner.hpp"

namespace dpqs {

inline constexpr const char* kBenchCsvHeader = "n,measure,phase,mean,stderr,asymptotic,truncated";

void write_bench_csv(std::ostream& os, const std::vector<ValidationRow>& rows);

nlohmann::json coeffs_json(const SamplingParam& t, const CoeffSet& c);
nlohmann::json coeffs_json(const CqsSamplingParam& t, const CoeffSet& c);
void write_coeffs_text(std::ostream& os, const std::string& label, const CoeffSet& c);

void write_optimum(std::ostream& os, const OptimumReport& r);
void write_tau_optimum(std::ostream& os, const TauOptimum& r);
void write_compare_table(std::ostream& os, const std::vector<CompareRow>& rows);
void write_oracle(std::ostream& os, const OracleResult& r);

std::string format_t(const SamplingParam& t);
std::string format_t(const CqsSamplingParam& t);

// "1,1,1" -> {1,1,1}; throws ConfigError on malformed input
std::vector<int> parse_int_list(const std::string& s);
SamplingParam parse_sampling(const std::string& s);
CqsSamplingParam parse_cqs_sampling(const std::string& s);
// accepts "65536" or "2^16"
std::size_t parse_size(const std::string& s);

}  // namespace dpqs
