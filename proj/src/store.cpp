#include "conglab/store.hpp"

#include <algorithm>
#include <utility>

#include "conglab/error.hpp"

namespace conglab::seq {

// Highest zigzag index the suite ever reads mod p^e:
//   e = 1: twice-past-the-prime indices (k = 2 rows of the shifted-index
//          congruences run at every prime), so 2p + 8.
//   e = 2: small primes get a full period p(p-1) + 8 (deep shifted rows);
//          mid-size primes still need the ~2p-4 entries behind the
//          quarter-interval harmonic congruence; past that only the
//          divided-Genocchi sums read the table, which stop below p.
//   e = 3: requested for small primes only (deep rows again); the fallback
//          branch keeps larger requests well-defined.
int zigzag_mod_policy_length(uint64_t p, unsigned e) {
  if (p < 3 || e < 1 || e > 3) fail(ErrorCode::BadArgument, "zigzag policy needs p >= 3, 1 <= e <= 3");
  long n = 0;
  switch (e) {
    case 1: n = 2 * static_cast<long>(p) + 8; break;
    case 2:
      if (p <= 61) n = static_cast<long>(p) * (p - 1) + 8;
      else if (p <= 199) n = 2 * static_cast<long>(p) + 8;
      else n = static_cast<long>(p) + 8;
      break;
    default:
      n = p <= 61 ? static_cast<long>(p) * (p - 1) + 8 : 2 * static_cast<long>(p) + 8;
      break;
  }
  if (n > kMaxZigzagMod) fail(ErrorCode::TooLarge, "zigzag policy length exceeds table cap");
  return static_cast<int>(n);
}

template <class T, class Fill>
std::shared_ptr<const T> SequenceStore::get_or_build(SlotMap<T>& slots, Key key, Fill fill) {
  std::shared_future<std::shared_ptr<const T>> fut;
  std::promise<std::shared_ptr<const T>> prom;
  bool builder = false;
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = slots.find(key);
    if (it == slots.end()) {
      fut = prom.get_future().share();
      slots.emplace(key, fut);
      builder = true;
    } else {
      fut = it->second;
    }
  }
  if (builder) {
    try {
      prom.set_value(fill());
    } catch (...) {
      prom.set_exception(std::current_exception());
      std::lock_guard<std::mutex> lk(mu_);
      slots.erase(key); // waiters still see the exception; later calls retry
    }
  }
  return fut.get();
}

std::shared_ptr<const SequenceStore::U64Table> SequenceStore::zigzag_table(uint64_t p, unsigned e) {
  return get_or_build(zigzag_slots_, Key{p, e}, [this, p, e]() -> std::shared_ptr<const U64Table> {
    const int length = zigzag_mod_policy_length(p, e);
    const size_t count = static_cast<size_t>(length) + 1;
    if (cache_) {
      if (auto hit = cache_->load("zigzag", p, e, count))
        return std::make_shared<U64Table>(std::move(*hit));
    }
    auto table = std::make_shared<U64Table>(zigzag_mod(length, pow_u64_checked(p, e)));
    if (cache_) cache_->store("zigzag", p, e, *table);
    return table;
  });
}

std::shared_ptr<const SequenceStore::U64Table> SequenceStore::eulerian_row_table(uint64_t p) {
  return get_or_build(eulerian_row_slots_, Key{p, 1}, [this, p]() -> std::shared_ptr<const U64Table> {
    if (p < 3) fail(ErrorCode::BadArgument, "eulerian_row_table needs p >= 3");
    const size_t count = static_cast<size_t>(p) - 2; // row p-2 has p-2 entries
    if (cache_) {
      if (auto hit = cache_->load("eulerian_row", p, 1, count))
        return std::make_shared<U64Table>(std::move(*hit));
    }
    auto table = std::make_shared<U64Table>(eulerian_row_mod(p - 2, p));
    if (cache_) cache_->store("eulerian_row", p, 1, *table);
    return table;
  });
}

std::shared_ptr<const HarmonicTable> SequenceStore::harmonic(uint64_t p, unsigned e) {
  return get_or_build(harmonic_slots_, Key{p, e}, [this, p, e]() -> std::shared_ptr<const HarmonicTable> {
    const size_t count = static_cast<size_t>(p) + 1; // H_0..H_{p-1}, then the odd-only sum
    if (cache_) {
      if (auto hit = cache_->load("harmonic", p, e, count)) {
        auto t = std::make_shared<HarmonicTable>();
        t->p = p;
        t->e = e;
        t->modulus = pow_u64_checked(p, e);
        t->Hprime = hit->back();
        hit->pop_back();
        t->H = std::move(*hit);
        return t;
      }
    }
    auto t = std::make_shared<HarmonicTable>(harmonic_table(p, e));
    if (cache_) {
      U64Table flat = t->H;
      flat.push_back(t->Hprime);
      cache_->store("harmonic", p, e, flat);
    }
    return t;
  });
}

std::shared_ptr<const SequenceStore::U64Table> SequenceStore::odd_power_sum_table(uint64_t p, unsigned e) {
  return get_or_build(power_sum_slots_, Key{p, e}, [p, e]() {
    return std::make_shared<U64Table>(odd_power_sums(p, e));
  });
}

std::shared_ptr<const std::vector<Int>> SequenceStore::zigzag_exact(int min_n) {
  std::lock_guard<std::mutex> lk(exact_mu_);
  const int want = std::max(min_n, 400);
  if (!zigzag_exact_ || static_cast<int>(zigzag_exact_->size()) <= want)
    zigzag_exact_ = std::make_shared<const std::vector<Int>>(zigzag(want));
  return zigzag_exact_;
}

std::shared_ptr<const std::vector<Rat>> SequenceStore::bernoulli(int min_n) {
  std::lock_guard<std::mutex> lk(exact_mu_);
  const int want = std::max(min_n, 200);
  if (!bernoulli_ || static_cast<int>(bernoulli_->size()) <= want)
    bernoulli_ = std::make_shared<const std::vector<Rat>>(bernoulli_exact(want));
  return bernoulli_;
}

std::shared_ptr<const std::vector<std::vector<Int>>> SequenceStore::eulerian_rows_exact(int min_n) {
  std::lock_guard<std::mutex> lk(exact_mu_);
  const int want = std::max(min_n, 197);
  if (want > kMaxEulerianRow) fail(ErrorCode::TooLarge, "eulerian_rows_exact past row cap");
  if (!eulerian_rows_ || static_cast<int>(eulerian_rows_->size()) < want) {
    // one incremental triangle fill; rows[n-1] is row n
    auto rows = std::make_shared<std::vector<std::vector<Int>>>();
    rows->reserve(want);
    rows->push_back({Int(1)});
    for (int n = 2; n <= want; ++n) {
      const std::vector<Int>& prev = rows->back();
      std::vector<Int> next(n);
      for (int m = 0; m < n; ++m) {
        Int v = 0;
        if (m >= 1) v += Int(n - m) * prev[m - 1];
        if (m < n - 1) v += Int(m + 1) * prev[m];
        next[m] = v;
      }
      rows->push_back(std::move(next));
    }
    eulerian_rows_ = std::move(rows);
  }
  return eulerian_rows_;
}

} // namespace conglab::seq
