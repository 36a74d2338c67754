#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpqs/meter.hpp"
#include "dpqs/sampling.hpp"

namespace dpqs {

using idx = std::ptrdiff_t;

enum class Direction { from_left, from_right };

struct PartitionResult {
  idx ip;
  idx iq;
  idx k_final;
  idx g_final;
  idx overshoot() const { return k_final - g_final; }
};

namespace detail {

template <class M, class T>
void call_hook(M& m, CallType type, const T* a, idx left, idx right) {
  if constexpr (requires { m.on_call(type, a, left, right); }) m.on_call(type, a, left, right);
}

template <class T>
ElemClass classify(const T& v, const T& P, const T& Q) {
  if (v < P) return ElemClass::small;
  if (Q < v) return ElemClass::large;
  return ElemClass::medium;
}

template <class M>
void note_scan(M& m, idx i) {
  if constexpr (M::active) {
    m.read(static_cast<std::size_t>(i));
    m.scan(ScanRole::insertion, static_cast<std::size_t>(i));
    m.compare();
  }
}

template <class M>
void note_write(M& m, idx i) {
  if constexpr (M::active) m.write(static_cast<std::size_t>(i));
}

// Skips the first s outer iterations; s may exceed the range and the range may be empty.
template <class T, class M>
void insertion_sort_left(T* a, idx left, idx right, idx s, M& m) {
  for (idx i = left + s; i <= right; ++i) {
    idx j = i - 1;
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(i));
      m.scan(ScanRole::insertion, static_cast<std::size_t>(i));
    }
    T v = a[i];
    while (j >= left) {
      note_scan(m, j);
      if (!(v < a[j])) break;
      a[j + 1] = a[j];
      note_write(m, j + 1);
      --j;
    }
    a[j + 1] = v;
    note_write(m, j + 1);
  }
}

template <class T, class M>
void insertion_sort_right(T* a, idx left, idx right, idx s, M& m) {
  for (idx i = right - s; i >= left; --i) {
    idx j = i + 1;
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(i));
      m.scan(ScanRole::insertion, static_cast<std::size_t>(i));
    }
    T v = a[i];
    while (j <= right) {
      note_scan(m, j);
      if (!(a[j] < v)) break;
      a[j - 1] = a[j];
      note_write(m, j - 1);
      ++j;
    }
    a[j - 1] = v;
    note_write(m, j - 1);
  }
}

// Logical sample index i lives at i + offset, offset = n - k past the left block.
struct GapMap {
  idx split;
  idx offset;
  idx operator()(idx i) const { return i > split ? i + offset : i; }
};

inline GapMap gap_map(idx left, idx right, const SamplingParam& t) {
  return {left + t.t1 + t.t2, (right - left + 1) - t.k()};
}

template <class T, class M>
void sample_sort_left(T* a, idx left, idx right, idx s, const SamplingParam& t, M& m) {
  insertion_sort_left(a, left, left + t.t1 + t.t2, s, m);
  const GapMap at = gap_map(left, right, t);
  const idx last = left + t.k() - 1;
  for (idx i = left + t.t1 + t.t2 + 1; i <= last; ++i) {
    idx j = i - 1;
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(at(i)));
      m.scan(ScanRole::insertion, static_cast<std::size_t>(at(i)));
    }
    T v = a[at(i)];
    while (j >= left) {
      note_scan(m, at(j));
      if (!(v < a[at(j)])) break;
      a[at(j + 1)] = a[at(j)];
      note_write(m, at(j + 1));
      --j;
    }
    a[at(j + 1)] = v;
    note_write(m, at(j + 1));
  }
}

template <class T, class M>
void sample_sort_right(T* a, idx left, idx right, idx s, const SamplingParam& t, M& m) {
  insertion_sort_right(a, right - t.t3, right, s, m);
  const GapMap at = gap_map(left, right, t);
  const idx last = left + t.k() - 1;
  for (idx i = left + t.k() - t.t3 - 2; i >= left; --i) {
    idx j = i + 1;
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(at(i)));
      m.scan(ScanRole::insertion, static_cast<std::size_t>(at(i)));
    }
    T v = a[at(i)];
    while (j <= last) {
      note_scan(m, at(j));
      if (!(a[at(j)] < v)) break;
      a[at(j - 1)] = a[at(j)];
      note_write(m, at(j - 1));
      ++j;
    }
    a[at(j - 1)] = v;
    note_write(m, at(j - 1));
  }
}

template <class T, class M>
void swap_at(T* a, idx i, idx j, M& m) {
  std::swap(a[i], a[j]);
  if constexpr (M::active) m.swap(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

template <class T, class M>
PartitionResult partition_dual(T* a, idx left, idx right, const T& P, const T& Q, M& m) {
  idx l = left, g = right, k = l;
  auto su = [](idx i) { return static_cast<std::size_t>(i); };
  while (k <= g) {
    if constexpr (M::active) {
      m.read(su(k));
      m.scan(ScanRole::k, su(k), classify(a[k], P, Q));
      m.compare();
    }
    if (a[k] < P) {
      swap_at(a, k, l, m);
      if constexpr (M::active) {
        m.branch(Branch::line4_swap);
        m.scan(ScanRole::l, su(l));
      }
      ++l;
    } else {
      if constexpr (M::active) m.compare();
      if (!(a[k] < Q)) {
        for (;;) {
          if constexpr (M::active) {
            m.read(su(g));
            m.scan(ScanRole::g, su(g), classify(a[g], P, Q));
            m.compare();
          }
          if (!(Q < a[g]) || !(k < g)) break;
          --g;
        }
        if constexpr (M::active) {
          m.read(su(g));
          m.compare();
        }
        if (!(a[g] < P)) {
          swap_at(a, k, g, m);
          if constexpr (M::active) m.branch(Branch::line12_swap);
        } else {
          swap_at(a, k, g, m);
          swap_at(a, k, l, m);
          if constexpr (M::active) {
            m.branch(Branch::line13_swap);
            m.scan(ScanRole::l, su(l));
          }
          ++l;
        }
        --g;
      }
    }
    ++k;
  }
  return {l - 1, g + 1, k, g};
}

inline idx skip_for(CallType type, int t_r) {
  return type == CallType::root ? 1 : std::max(t_r, 1);
}

// Crossing-pointer partition of [lo, hi] around P; one comparison per array read.
template <class T, class M>
idx partition_cqs(T* a, idx lo, idx hi, const T& P, M& m) {
  idx i = lo, j = hi;
  auto probe = [&](idx at) {
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(at));
      m.scan(ScanRole::cqs, static_cast<std::size_t>(at));
      m.compare();
    }
  };
  for (;;) {
    while (i <= j) {
      probe(i);
      if (!(a[i] < P)) break;
      ++i;
    }
    while (i <= j) {
      probe(j);
      if (!(P < a[j])) break;
      --j;
    }
    if (i >= j) break;
    swap_at(a, i, j, m);
    ++i;
    --j;
  }
  return i - 1;
}

struct Frame {
  idx left;
  idx right;
  CallType type;
};

}  // namespace detail

template <class T, class M>
void insertion_sort_directional(std::span<T> a, idx left, idx right, idx s, Direction dir, M& m) {
  if (left > right || left < 0 || right >= static_cast<idx>(a.size()))
    throw ConfigError("insertion sort: invalid range");
  if (s < 1 || s > right - left + 1) throw ConfigError("insertion sort: s out of range");
  if constexpr (M::active) m.set_phase(Phase::insertion_sort);
  if (dir == Direction::from_left)
    detail::insertion_sort_left(a.data(), left, right, s, m);
  else
    detail::insertion_sort_right(a.data(), left, right, s, m);
}

template <class T>
void insertion_sort_directional(std::span<T> a, idx left, idx right, idx s, Direction dir) {
  NullMeter m;
  insertion_sort_directional(a, left, right, s, dir, m);
}

template <class T, class M>
void sample_sort_directional(std::span<T> a, idx left, idx right, idx s, Direction dir,
                             const SamplingParam& t, M& m) {
  validate(t);
  if (left < 0 || right >= static_cast<idx>(a.size()) || right - left + 1 < t.k())
    throw ConfigError("sample sort: range must hold at least k elements");
  idx smax = dir == Direction::from_left ? t.t1 + t.t2 + 1 : t.t3 + 1;
  if (s < 1 || s > smax) throw ConfigError("sample sort: s out of range");
  if constexpr (M::active) m.set_phase(Phase::sample_sort);
  if (dir == Direction::from_left)
    detail::sample_sort_left(a.data(), left, right, s, t, m);
  else
    detail::sample_sort_right(a.data(), left, right, s, t, m);
}

template <class T>
void sample_sort_directional(std::span<T> a, idx left, idx right, idx s, Direction dir,
                             const SamplingParam& t) {
  NullMeter m;
  sample_sort_directional(a, left, right, s, dir, t, m);
}

// Standalone partitioning step; every element of the range is ordinary.
template <class T, class M>
PartitionResult partition_dual(std::span<T> a, idx left, idx right, const T& P, const T& Q, M& m) {
  if (left > right || left < 0 || right >= static_cast<idx>(a.size()))
    throw ConfigError("partition: invalid range");
  if (Q < P) throw ConfigError("partition: requires P <= Q");
  if constexpr (M::active) m.begin_partition(static_cast<std::uint64_t>(right - left + 1), 0);
  PartitionResult r = detail::partition_dual(a.data(), left, right, P, Q, m);
  if constexpr (M::active) {
    auto I1 = static_cast<std::uint64_t>(r.ip - left + 1);
    auto I3 = static_cast<std::uint64_t>(right - r.iq + 1);
    auto I2 = static_cast<std::uint64_t>(right - left + 1) - I1 - I3;
    m.end_partition(I1, I2, I3, static_cast<std::uint64_t>(r.overshoot()));
  }
  return r;
}

template <class T>
PartitionResult partition_dual(std::span<T> a, idx left, idx right, const T& P, const T& Q) {
  NullMeter m;
  return partition_dual(a, left, right, P, Q, m);
}

template <class T, class M>
void sort_yqs(std::span<T> span, const SortConfig& config, M& m) {
  validate(config);
  if (span.empty()) return;
  const SamplingParam t = config.sampling;
  const idx w = config.threshold;
  const idx k = t.k();
  T* a = span.data();
  std::vector<detail::Frame> stack;
  stack.push_back({0, static_cast<idx>(span.size()) - 1, CallType::root});
  while (!stack.empty()) {
    const detail::Frame f = stack.back();
    stack.pop_back();
    const idx left = f.left, right = f.right;
    detail::call_hook(m, f.type, static_cast<const T*>(a), left, right);
    const int t_r = f.type == CallType::left ? t.t1 : f.type == CallType::middle ? t.t2 : t.t3;
    const idx s = detail::skip_for(f.type, t_r);
    if (right - left < w) {
      if constexpr (M::active) m.set_phase(Phase::insertion_sort);
      if (f.type == CallType::right)
        detail::insertion_sort_right(a, left, right, s, m);
      else
        detail::insertion_sort_left(a, left, right, s, m);
      continue;
    }
    if constexpr (M::active) m.set_phase(Phase::sample_sort);
    if (f.type == CallType::right)
      detail::sample_sort_right(a, left, right, s, t, m);
    else
      detail::sample_sort_left(a, left, right, s, t, m);
    if constexpr (M::active) {
      m.read(static_cast<std::size_t>(left + t.t1));
      m.read(static_cast<std::size_t>(right - t.t3));
    }
    const T p = a[left + t.t1];
    const T q = a[right - t.t3];
    const idx part_left = left + t.t1 + t.t2 + 1;
    const idx part_right = right - t.t3 - 1;
    if constexpr (M::active) m.begin_partition(static_cast<std::uint64_t>(right - left + 1), k);
    const PartitionResult r = detail::partition_dual(a, part_left, part_right, p, q, m);
    if constexpr (M::active) {
      auto I1 = static_cast<std::uint64_t>(r.ip - part_left + 1);
      auto I3 = static_cast<std::uint64_t>(part_right - r.iq + 1);
      auto I2 = static_cast<std::uint64_t>(part_right - part_left + 1) - I1 - I3;
      m.end_partition(I1, I2, I3, static_cast<std::uint64_t>(r.overshoot()));
      m.set_phase(Phase::sample_sort);
    }
    for (idx j = t.t2; j >= 0; --j) detail::swap_at(a, left + t.t1 + j, r.ip - t.t2 + j, m);
    detail::swap_at(a, r.iq, part_right + 1, m);
    stack.push_back({r.iq + 1, right, CallType::right});
    stack.push_back({r.ip - t.t2 + 1, r.iq - 1, CallType::middle});
    stack.push_back({left, r.ip - t.t2 - 1, CallType::left});
  }
}

template <class T>
void sort_yqs(std::span<T> a, const SortConfig& config) {
  NullMeter m;
  sort_yqs(a, config, m);
}

template <class T, class M>
void sort_cqs(std::span<T> span, const CqsSortConfig& config, M& m) {
  validate(config);
  if (span.empty()) return;
  const CqsSamplingParam t = config.sampling;
  const idx w = config.threshold;
  const idx k = t.k();
  T* a = span.data();
  std::vector<detail::Frame> stack;
  stack.push_back({0, static_cast<idx>(span.size()) - 1, CallType::root});
  while (!stack.empty()) {
    const detail::Frame f = stack.back();
    stack.pop_back();
    const idx left = f.left, right = f.right;
    detail::call_hook(m, f.type, static_cast<const T*>(a), left, right);
    const idx s = detail::skip_for(f.type, f.type == CallType::left ? t.t1 : t.t2);
    if (right - left < w) {
      if constexpr (M::active) m.set_phase(Phase::insertion_sort);
      detail::insertion_sort_left(a, left, right, s, m);
      continue;
    }
    if constexpr (M::active) {
      m.set_phase(Phase::sample_sort);
    }
    detail::insertion_sort_left(a, left, left + k - 1, s, m);
    if constexpr (M::active) m.read(static_cast<std::size_t>(left + t.t1));
    const T p = a[left + t.t1];
    if constexpr (M::active) m.begin_partition(static_cast<std::uint64_t>(right - left + 1), k);
    const idx ip = detail::partition_cqs(a, left + k, right, p, m);
    if constexpr (M::active) {
      m.end_cqs_partition(static_cast<std::uint64_t>(ip - (left + k) + 1), static_cast<std::uint64_t>(right - ip));
      m.set_phase(Phase::sample_sort);
    }
    for (idx j = t.t2; j >= 0; --j) detail::swap_at(a, left + t.t1 + j, ip - t.t2 + j, m);
    stack.push_back({ip - t.t2 + 1, right, CallType::right});
    stack.push_back({left, ip - t.t2 - 1, CallType::left});
  }
}

template <class T>
void sort_cqs(std::span<T> a, const CqsSortConfig& config) {
  NullMeter m;
  sort_cqs(a, config, m);
}

}  // namespace dpqs
