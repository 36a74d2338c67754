#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dpqs {

// Capacity M and block size B, both in array elements.
struct CacheConfig {
  std::size_t M = 0;
  std::size_t B = 1;
};

void validate(const CacheConfig& config);

struct CacheSnapshot {
  std::uint64_t misses = 0;
  std::uint64_t hits = 0;
  std::vector<std::size_t> resident_blocks;  // most recently used first
};

// Fully associative LRU cache over element indices of one block-aligned array.
class LruCache {
 public:
  explicit LruCache(CacheConfig config);

  bool access(std::size_t index);

  std::uint64_t misses() const { return misses_; }
  std::uint64_t hits() const { return hits_; }
  std::size_t resident() const { return used_; }
  std::size_t capacity_blocks() const { return slots_; }
  const CacheConfig& config() const { return config_; }

  CacheSnapshot snapshot() const;
  void reset();

 private:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  void unlink(std::uint32_t slot);
  void push_front(std::uint32_t slot);

  CacheConfig config_;
  std::size_t slots_;
  std::size_t used_ = 0;
  std::uint64_t misses_ = 0;
  std::uint64_t hits_ = 0;
  std::uint32_t head_ = kNone;
  std::uint32_t tail_ = kNone;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint32_t> next_;
  std::vector<std::size_t> block_of_;
  std::vector<std::uint32_t> slot_of_;  // indexed by block number
};

}  // namespace dpqs
