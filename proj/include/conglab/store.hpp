#pragma once

// Shared, thread-safe home for the tables the congruence suite keeps reusing:
// modular zigzag triangles per (p, e), the Eulerian row n = p-2 mod p,
// harmonic tables, odd power sums, and the exact global sequences.  Fills are
// memoized through per-key futures so concurrent workers either find a
// complete table or wait for the single builder; exact tables grow monotonic-
// ally and results never depend on how far a table happens to have grown.
//
// Table lengths for the modular families are pinned by policy functions of
// (p, e) alone — never by which checks requested them — so disk-cache files
// stay valid across configurations and cold/warm runs agree byte-for-byte.

#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "conglab/cache.hpp"
#include "conglab/sequences.hpp"

namespace conglab::seq {

// Highest zigzag index stored mod p^e; covers every in-range congruence that
// reads the table at that exponent (see the check registry).
int zigzag_mod_policy_length(uint64_t p, unsigned e);

class SequenceStore {
public:
  using U64Table = std::vector<uint64_t>;

  SequenceStore() = default;
  SequenceStore(const SequenceStore&) = delete;
  SequenceStore& operator=(const SequenceStore&) = delete;

  void attach_cache(std::shared_ptr<ResidueCache> cache) { cache_ = std::move(cache); }
  const std::shared_ptr<ResidueCache>& cache() const { return cache_; }

  // modular families (policy-sized, disk-cacheable)
  std::shared_ptr<const U64Table> zigzag_table(uint64_t p, unsigned e);
  std::shared_ptr<const U64Table> eulerian_row_table(uint64_t p); // row p-2 mod p
  std::shared_ptr<const HarmonicTable> harmonic(uint64_t p, unsigned e);
  std::shared_ptr<const U64Table> odd_power_sum_table(uint64_t p, unsigned e);

  // exact globals (grow on demand, never disk-cached)
  std::shared_ptr<const std::vector<Int>> zigzag_exact(int min_n);
  std::shared_ptr<const std::vector<Rat>> bernoulli(int min_n);
  // triangle rows 1..min_n; element [n-1] is row n
  std::shared_ptr<const std::vector<std::vector<Int>>> eulerian_rows_exact(int min_n);

private:
  struct Key {
    uint64_t p;
    unsigned e;
    bool operator<(const Key& o) const { return p != o.p ? p < o.p : e < o.e; }
  };

  template <class T>
  using SlotMap = std::map<Key, std::shared_future<std::shared_ptr<const T>>>;

  template <class T, class Fill>
  std::shared_ptr<const T> get_or_build(SlotMap<T>& slots, Key key, Fill fill);

  std::mutex mu_;
  SlotMap<U64Table> zigzag_slots_;
  SlotMap<U64Table> eulerian_row_slots_;
  SlotMap<HarmonicTable> harmonic_slots_;
  SlotMap<U64Table> power_sum_slots_;

  std::mutex exact_mu_;
  std::shared_ptr<const std::vector<Int>> zigzag_exact_;
  std::shared_ptr<const std::vector<Rat>> bernoulli_;
  std::shared_ptr<const std::vector<std::vector<Int>>> eulerian_rows_;

  std::shared_ptr<ResidueCache> cache_;
};

} // namespace conglab::seq
