#include "dpqs/cachesim.hpp"

#include "dpqs/sampling.hpp"

namespace dpqs {

void validate(const CacheConfig& config) {
  if (config.B < 1) throw ConfigError("cache block size B must be at least 1");
  if (config.M < config.B) throw ConfigError("cache capacity M must be at least B");
  if (config.M % config.B != 0) throw ConfigError("cache capacity M must be a multiple of B");
}

LruCache::LruCache(CacheConfig config) : config_(config) {
  validate(config_);
  slots_ = config_.M / config_.B;
  prev_.assign(slots_, kNone);
  next_.assign(slots_, kNone);
  block_of_.assign(slots_, 0);
}

void LruCache::reset() {
  used_ = 0;
  misses_ = hits_ = 0;
  head_ = tail_ = kNone;
  slot_of_.clear();
}

void LruCache::unlink(std::uint32_t slot) {
  std::uint32_t p = prev_[slot], n = next_[slot];
  if (p != kNone) next_[p] = n; else head_ = n;
  if (n != kNone) prev_[n] = p; else tail_ = p;
}

void LruCache::push_front(std::uint32_t slot) {
  prev_[slot] = kNone;
  next_[slot] = head_;
  if (head_ != kNone) prev_[head_] = slot;
  head_ = slot;
  if (tail_ == kNone) tail_ = slot;
}

bool LruCache::access(std::size_t index) {
  std::size_t block = index / config_.B;
  if (block >= slot_of_.size()) slot_of_.resize(block + block / 2 + 16, kNone);
  std::uint32_t slot = slot_of_[block];
  if (slot != kNone) {
    ++hits_;
    if (slot != head_) {
      unlink(slot);
      push_front(slot);
    }
    return true;
  }
  ++misses_;
  if (used_ < slots_) {
    slot = static_cast<std::uint32_t>(used_++);
  } else {
    slot = tail_;
    unlink(slot);
    slot_of_[block_of_[slot]] = kNone;
  }
  block_of_[slot] = block;
  slot_of_[block] = slot;
  push_front(slot);
  return false;
}

CacheSnapshot LruCache::snapshot() const {
  CacheSnapshot s;
  s.misses = misses_;
  s.hits = hits_;
  s.resident_blocks.reserve(used_);
  for (std::uint32_t at = head_; at != kNone; at = next_[at]) s.resident_blocks.push_back(block_of_[at]);
  return s;
}

}  // namespace dpqs
