#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpqs {

// Thrown before any element is touched.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Pivots are the (t1+1)-st and (t1+t2+2)-nd smallest of k = t1+t2+t3+2 sample elements.
struct SamplingParam {
  int t1 = 0;
  int t2 = 0;
  int t3 = 0;

  constexpr int k() const { return t1 + t2 + t3 + 2; }
  constexpr int operator[](int r) const { return r == 0 ? t1 : (r == 1 ? t2 : t3); }
  constexpr std::array<int, 3> as_array() const { return {t1, t2, t3}; }

  friend constexpr bool operator==(const SamplingParam&, const SamplingParam&) = default;
  friend constexpr auto operator<=>(const SamplingParam&, const SamplingParam&) = default;
};

// Single pivot: the (t1+1)-st smallest of k = t1+t2+1.
struct CqsSamplingParam {
  int t1 = 0;
  int t2 = 0;

  constexpr int k() const { return t1 + t2 + 1; }

  friend constexpr bool operator==(const CqsSamplingParam&, const CqsSamplingParam&) = default;
};

enum class CallType : std::uint8_t { root, left, middle, right };

const char* to_string(CallType type);

// ranges with right - left < threshold go to insertion sort
struct SortConfig {
  SamplingParam sampling{};
  int threshold = 46;
};

struct CqsSortConfig {
  CqsSamplingParam sampling{};
  int threshold = 46;
};

inline void validate(const SamplingParam& t) {
  if (t.t1 < 0 || t.t2 < 0 || t.t3 < 0) {
    throw ConfigError("sampling parameter components must be non-negative");
  }
}

inline void validate(const CqsSamplingParam& t) {
  if (t.t1 < 0 || t.t2 < 0) {
    throw ConfigError("sampling parameter components must be non-negative");
  }
}

inline void validate(const SortConfig& config) {
  validate(config.sampling);
  if (config.threshold < 1) {
    throw ConfigError("insertion sort threshold w must be positive");
  }
  if (config.threshold < config.sampling.k() - 1) {
    throw ConfigError("insertion sort threshold w=" + std::to_string(config.threshold) +
                      " violates w >= k-1 = " + std::to_string(config.sampling.k() - 1));
  }
}

inline void validate(const CqsSortConfig& config) {
  validate(config.sampling);
  if (config.threshold < 1) {
    throw ConfigError("insertion sort threshold w must be positive");
  }
  if (config.threshold < config.sampling.k() - 1) {
    throw ConfigError("insertion sort threshold w=" + std::to_string(config.threshold) +
                      " violates w >= k-1 = " + std::to_string(config.sampling.k() - 1));
  }
}

inline const char* to_string(CallType type) {
  switch (type) {
    case CallType::root: return "root";
    case CallType::left: return "left";
    case CallType::middle: return "middle";
    case CallType::right: return "right";
  }
  return "?";
}

}  // namespace dpqs
