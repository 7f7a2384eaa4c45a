// Copyright 2026 The dagraph Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Round-based executor for pull kernels over a statically partitioned graph.
//
// Every round, each of T workers recomputes its owned block of vertices in
// ascending id order and then all workers meet at a barrier where the
// per-worker progress statistics are reduced and the stopping rule is
// evaluated. Three write disciplines are supported:
//
//   Synchronous   reads the previous round's array, writes a second array;
//                 the two are swapped at the barrier.
//   Asynchronous  stores each new value straight into the shared array.
//   Delayed(d)    stages new values in a worker-private buffer of d elements
//                 and copies the buffer into the shared array whenever it
//                 fills up, plus once more after the worker's last vertex.
//
// Shared values are 32-bit and accessed with relaxed atomic loads and stores,
// so readers see either the old or the new word; the barrier orders
// everything else. Each slot has exactly one writer: its owner.

#pragma once

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cassert>
#include <chrono>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "dagraph/graph.hpp"
#include "dagraph/partition.hpp"
#include "dagraph/stopping.hpp"
#include "dagraph/types.hpp"

namespace dagraph {

enum class ModeKind { kSynchronous, kAsynchronous, kDelayed };

class Mode {
 public:
  static Mode synchronous() { return Mode(ModeKind::kSynchronous, 0); }
  static Mode asynchronous() { return Mode(ModeKind::kAsynchronous, 0); }
  /// delta is in 32-bit elements and must be a positive multiple of 16.
  static Mode delayed(std::size_t delta) {
    Mode m(ModeKind::kDelayed, delta);
    m.validate();
    return m;
  }

  ModeKind kind() const { return kind_; }
  std::size_t delta() const { return delta_; }

  void validate() const {
    if (kind_ != ModeKind::kDelayed) return;
    if (delta_ == 0)
      throw InvalidArgument("delayed mode needs delta > 0");
    if (delta_ % kElementsPerCacheLine != 0)
      throw InvalidArgument("delta " + std::to_string(delta_) +
                            " is not a multiple of " +
                            std::to_string(kElementsPerCacheLine) +
                            " elements (one cache line)");
  }

  friend bool operator==(const Mode&, const Mode&) = default;

 private:
  Mode(ModeKind kind, std::size_t delta) : kind_(kind), delta_(delta) {}

  ModeKind kind_;
  std::size_t delta_;
};

inline std::string to_string(const Mode& m) {
  switch (m.kind()) {
    case ModeKind::kSynchronous: return "sync";
    case ModeKind::kAsynchronous: return "async";
    case ModeKind::kDelayed: return "delayed";
  }
  return "?";
}

enum class ReadPolicy {
  kGlobalOnly,
  // Delayed mode only: a worker reads its own staged-but-unflushed values
  // instead of the shared copy. Never looks at another worker's buffer.
  kLocalPreferred,
};

inline std::string to_string(ReadPolicy p) {
  return p == ReadPolicy::kGlobalOnly ? "global" : "local";
}

/// Heap array aligned to a cache line.
template <class T>
class CacheAlignedArray {
  static_assert(std::is_trivially_copyable_v<T>);

 public:
  CacheAlignedArray() = default;
  CacheAlignedArray(std::size_t n, T fill)
      : data_(static_cast<T*>(::operator new(
            std::max<std::size_t>(n, 1) * sizeof(T),
            std::align_val_t{kCacheLineBytes}))),
        size_(n) {
    std::uninitialized_fill_n(data_.get(), n, fill);
  }

  std::size_t size() const { return size_; }
  T* data() { return data_.get(); }
  const T* data() const { return data_.get(); }
  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

 private:
  struct Free {
    void operator()(T* p) const {
      ::operator delete(p, std::align_val_t{kCacheLineBytes});
    }
  };
  std::unique_ptr<T[], Free> data_;
  std::size_t size_ = 0;
};

/// The shared vertex value array. Loads and stores are word-atomic and
/// unordered.
template <class T>
class GlobalValues {
  static_assert(sizeof(T) == 4, "vertex values are 32-bit elements");
  static_assert(std::atomic_ref<T>::is_always_lock_free);

 public:
  GlobalValues() = default;
  GlobalValues(std::size_t n, T fill) : values_(n, fill) {}

  std::size_t size() const { return values_.size(); }

  T load(VertexId v) const {
    return std::atomic_ref<T>(const_cast<T&>(values_[v]))
        .load(std::memory_order_relaxed);
  }
  void store(VertexId v, T value) {
    std::atomic_ref<T>(values_[v]).store(value, std::memory_order_relaxed);
  }

  /// Plain access for phases with no concurrent writer.
  T* data() { return values_.data(); }
  const T* data() const { return values_.data(); }
  std::span<const T> view() const { return {values_.data(), values_.size()}; }
  std::vector<T> snapshot() const { return {view().begin(), view().end()}; }

 private:
  CacheAlignedArray<T> values_;
};

/// A worker's private staging area. Vertices are staged in ascending order,
/// so the buffer always holds the contiguous range [base, base + fill) of the
/// owner's block and a flush is one contiguous copy.
template <class T>
class DelayBuffer {
 public:
  DelayBuffer(std::size_t owner, Block owned, std::size_t delta)
      : owner_(owner),
        owned_(owned),
        delta_(delta),
        slots_(std::min(delta, round_up(owned.size())), T{}),
        base_(owned.begin) {
    assert(delta > 0);
  }

  std::size_t owner() const { return owner_; }
  std::size_t capacity() const { return delta_; }
  VertexId base() const { return base_; }
  std::size_t fill() const { return fill_; }
  bool full() const { return fill_ == delta_; }

  /// Back to the start of the owned block for a new round.
  void rewind() {
    assert(fill_ == 0);
    base_ = owned_.begin;
  }

  void stage(VertexId v, T value) {
    assert(v == base_ + fill_ && owned_.contains(v) && !full());
    slots_[fill_++] = value;
  }

  bool holds(VertexId v) const { return v >= base_ && v - base_ < fill_; }
  T staged(VertexId v) const {
    assert(holds(v));
    return slots_[v - base_];
  }

  /// Copies [base, base + fill) into `gv`, empties the buffer and advances
  /// base past the flushed range. Returns the number of values written; an
  /// empty buffer writes nothing.
  std::size_t flush(GlobalValues<T>& gv) {
    const std::size_t n = fill_;
    assert(n == 0 || (owned_.contains(base_) && owned_.contains(base_ + n - 1)));
    for (std::size_t i = 0; i < n; ++i)
      gv.store(static_cast<VertexId>(base_ + i), slots_[i]);
    base_ += static_cast<VertexId>(n);
    fill_ = 0;
    return n;
  }

 private:
  static std::size_t round_up(std::size_t n) {
    return (n + kElementsPerCacheLine - 1) / kElementsPerCacheLine *
           kElementsPerCacheLine;
  }

  std::size_t owner_;
  Block owned_;
  std::size_t delta_;
  CacheAlignedArray<T> slots_;
  VertexId base_;
  std::size_t fill_ = 0;
};

/// A pull kernel: recomputes one vertex from its in-neighbors' values.
/// `update(v, current, read)` must only call read(u) for in-neighbors u of v
/// (or v itself). `progress(old, new)` feeds the stopping statistic.
template <class K>
concept PullKernel =
    requires(const K& k, VertexId v, typename K::value_type x) {
      typename K::value_type;
      requires sizeof(typename K::value_type) == 4;
      { K::kStopKind } -> std::convertible_to<StopKind>;
      { k.initial_value(v) } -> std::same_as<typename K::value_type>;
      { k.progress(x, x) } -> std::convertible_to<double>;
      {
        k.update(v, x, [](VertexId) { return typename K::value_type{}; })
      } -> std::same_as<typename K::value_type>;
    };

struct RunConfig {
  Mode mode = Mode::synchronous();
  std::size_t num_workers = 1;
  ReadPolicy read_policy = ReadPolicy::kGlobalOnly;
  StoppingRule stop = StoppingRule::pagerank_l1(1e-4);
  std::size_t max_iterations = 1000;
};

template <class T>
struct RunResult {
  std::size_t rounds = 0;
  std::vector<double> per_round_seconds;
  bool converged = false;
  std::vector<T> final_values;
  /// Per worker, over the whole run. Delayed: non-empty buffer flushes.
  /// Synchronous: one per round for a non-empty block. Asynchronous: zero.
  std::vector<std::uint64_t> total_flushes;
  /// Reduced stopping statistic of each round.
  std::vector<double> round_progress;
  Partition partition;
  Mode mode = Mode::synchronous();

  double total_seconds() const {
    double s = 0;
    for (double t : per_round_seconds) s += t;
    return s;
  }
  double avg_round_seconds() const {
    return rounds == 0 ? 0.0 : total_seconds() / static_cast<double>(rounds);
  }
};

/// Called at every barrier with the 1-based round number and the values
/// that round produced. Runs while all workers are parked; time spent here
/// is excluded from round timings.
template <class T>
using RoundObserver = std::function<void(std::size_t, std::span<const T>)>;

namespace detail {

struct alignas(kCacheLineBytes) WorkerSlot {
  double progress = 0;
  std::uint64_t flushes = 0;
};

}  // namespace detail

/// Runs `kernel` on `g` with a caller-supplied partition.
template <PullKernel K>
RunResult<typename K::value_type> run(const Graph& g, const K& kernel,
                                      const RunConfig& cfg,
                                      const Partition& partition,
                                      RoundObserver<typename K::value_type> observer = {}) {
  using T = typename K::value_type;
  using Clock = std::chrono::steady_clock;

  cfg.mode.validate();
  if (cfg.num_workers == 0) throw InvalidArgument("need at least one worker");
  if (cfg.max_iterations == 0)
    throw InvalidArgument("max_iterations must be >= 1");
  if (cfg.stop.kind() != K::kStopKind)
    throw InvalidArgument("stopping rule does not match the kernel");
  if (partition.num_workers() != cfg.num_workers ||
      partition.num_vertices() != g.num_vertices())
    throw InvalidArgument("partition does not match graph/worker count");

  const std::size_t n = g.num_vertices();
  const std::size_t num_workers = cfg.num_workers;
  const ModeKind mode = cfg.mode.kind();
  const bool local_reads = cfg.read_policy == ReadPolicy::kLocalPreferred;

  GlobalValues<T> primary(n, T{});
  for (std::size_t v = 0; v < n; ++v)
    primary.data()[v] = kernel.initial_value(static_cast<VertexId>(v));
  GlobalValues<T> secondary;
  if (mode == ModeKind::kSynchronous) {
    secondary = GlobalValues<T>(n, T{});
    std::copy_n(primary.data(), n, secondary.data());
  }
  // Synchronous mode reads `input` and writes `output`; swapped at barriers.
  T* input = primary.data();
  T* output = mode == ModeKind::kSynchronous ? secondary.data() : primary.data();

  RunResult<T> result;
  result.partition = partition;
  result.mode = cfg.mode;
  std::vector<detail::WorkerSlot> slots(num_workers);

  bool done = false;
  bool started = false;
  Clock::time_point last_exit;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto record_failure = [&](std::exception_ptr e) {
    std::lock_guard lock(failure_mutex);
    if (!failure) failure = e;
  };

  auto on_round_end = [&]() noexcept {
    if (!started) {
      started = true;
      last_exit = Clock::now();
      return;
    }
    const auto now = Clock::now();
    double total = 0;
    for (auto& s : slots) {
      total += s.progress;
      s.progress = 0;
    }
    ++result.rounds;
    result.per_round_seconds.push_back(
        std::chrono::duration<double>(now - last_exit).count());
    result.round_progress.push_back(total);
    if (mode == ModeKind::kSynchronous) std::swap(input, output);
    bool failed;
    {
      std::lock_guard lock(failure_mutex);
      failed = static_cast<bool>(failure);
    }
    if (!failed && observer) {
      try {
        observer(result.rounds, std::span<const T>(input, n));
      } catch (...) {
        record_failure(std::current_exception());
        failed = true;
      }
    }
    if (failed) {
      done = true;
    } else if (cfg.stop.should_stop(total)) {
      result.converged = true;
      done = true;
    } else if (result.rounds >= cfg.max_iterations) {
      done = true;
    }
    last_exit = Clock::now();
  };

  std::barrier round_barrier(static_cast<std::ptrdiff_t>(num_workers),
                             on_round_end);
  std::barrier work_done(static_cast<std::ptrdiff_t>(num_workers));

  auto worker = [&](std::size_t w) {
    const Block block = partition.block(w);
    auto& slot = slots[w];
    std::optional<DelayBuffer<T>> buffer;
    if (mode == ModeKind::kDelayed)
      buffer.emplace(w, block, cfg.mode.delta());

    round_barrier.arrive_and_wait();  // start line
    while (true) {
      double progress = 0;
      try {
        switch (mode) {
          case ModeKind::kSynchronous: {
            const T* in = input;
            T* out = output;
            auto read = [in](VertexId u) { return in[u]; };
            for (VertexId v = block.begin; v < block.end; ++v) {
              const T old = in[v];
              const T next = kernel.update(v, old, read);
              out[v] = next;
              progress += kernel.progress(old, next);
            }
            if (block.size() > 0) ++slot.flushes;
            break;
          }
          case ModeKind::kAsynchronous: {
            auto read = [&primary](VertexId u) { return primary.load(u); };
            for (VertexId v = block.begin; v < block.end; ++v) {
              const T old = primary.load(v);
              const T next = kernel.update(v, old, read);
              assert(block.contains(v));
              primary.store(v, next);
              progress += kernel.progress(old, next);
            }
            break;
          }
          case ModeKind::kDelayed: {
            DelayBuffer<T>& buf = *buffer;
            buf.rewind();
            auto read_global = [&primary](VertexId u) { return primary.load(u); };
            auto read_local = [&primary, &buf](VertexId u) {
              return buf.holds(u) ? buf.staged(u) : primary.load(u);
            };
            for (VertexId v = block.begin; v < block.end; ++v) {
              const T old = primary.load(v);
              const T next = local_reads ? kernel.update(v, old, read_local)
                                         : kernel.update(v, old, read_global);
              buf.stage(v, next);
              progress += kernel.progress(old, next);
              if (buf.full() && buf.flush(primary) > 0) ++slot.flushes;
            }
            break;
          }
        }
      } catch (...) {
        record_failure(std::current_exception());
      }
      slot.progress = progress;
      if (mode == ModeKind::kDelayed) {
        // Everyone has finished reading this round before the end-of-work
        // flushes land, so a fully buffered round sees only last round's
        // values, exactly like the synchronous schedule.
        work_done.arrive_and_wait();
        if (buffer->flush(primary) > 0) ++slot.flushes;
      }
      round_barrier.arrive_and_wait();
      if (done) break;
    }
  };

  {
    std::vector<std::jthread> threads;
    threads.reserve(num_workers);
    for (std::size_t w = 0; w < num_workers; ++w)
      threads.emplace_back(worker, w);
  }
  if (failure) std::rethrow_exception(failure);

  result.final_values.assign(input, input + n);
  result.total_flushes.resize(num_workers);
  for (std::size_t w = 0; w < num_workers; ++w)
    result.total_flushes[w] = slots[w].flushes;
  return result;
}

/// Partitions by in-degree over cfg.num_workers and runs.
template <PullKernel K>
RunResult<typename K::value_type> run(const Graph& g, const K& kernel,
                                      const RunConfig& cfg,
                                      RoundObserver<typename K::value_type> observer = {}) {
  if (cfg.num_workers == 0) throw InvalidArgument("need at least one worker");
  return run(g, kernel, cfg, partition_by_indegree(g, cfg.num_workers),
             std::move(observer));
}

}  // namespace dagraph
