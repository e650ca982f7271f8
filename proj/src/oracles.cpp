#include "conglab/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "conglab/error.hpp"

namespace conglab::oracle {

namespace {

std::vector<int> identity_word(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

int count_ascents(const std::vector<int>& w) {
  int a = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++a;
  return a;
}

} // namespace

std::vector<Int> ascent_distribution(int n) {
  if (n < 1 || n > 10) fail(ErrorCode::TooLarge, "ascent_distribution enumerates n <= 10");
  std::vector<Int> counts(n, 0);
  std::vector<int> w = identity_word(n);
  do {
    ++counts[count_ascents(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return counts; // length n, matching a triangle row
}

Int alternating_count(int n) {
  if (n < 0 || n > 10) fail(ErrorCode::TooLarge, "alternating_count enumerates n <= 10");
  if (n <= 1) return 1;
  Int count = 0;
  std::vector<int> w = identity_word(n);
  do {
    bool ok = true;
    for (int i = 1; i < n && ok; ++i)
      ok = (w[i - 1] > w[i]) == (i % 2 == 1); // descent exactly at odd positions
    if (ok) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

Int dumont_count(int n) {
  if (n < 1 || 2 * n - 1 > 9) fail(ErrorCode::TooLarge, "dumont_count enumerates Sym(9) at most");
  const int len = 2 * n - 1;
  Int count = 0;
  std::vector<int> w = identity_word(len);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < len && ok; ++i)
      ok = (w[i] < w[i + 1]) == (w[i] % 2 == 1); // rise exactly after odd values
    if (ok) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

Int gun_count(int n) {
  if (n < 1 || 2 * n - 2 > 14) fail(ErrorCode::TooLarge, "gun_count enumerates domains up to 14");
  const int len = 2 * n - 2;
  if (len == 0) return 1;
  // odometer over g(1..len): at odd positions g must not drop below its left
  // neighbour and is capped by the block index; at even positions it must not
  // exceed its left neighbour (which already respects the block cap)
  std::vector<int> g(len + 1, 0); // 0 = not yet chosen
  Int count = 0;
  int pos = 1;
  while (pos >= 1) {
    int lo, hi;
    if (pos % 2 == 1) {
      lo = pos == 1 ? 1 : g[pos - 1];
      hi = (pos + 1) / 2;
    } else {
      lo = 1;
      hi = g[pos - 1];
    }
    const int next = g[pos] == 0 ? lo : g[pos] + 1;
    if (next > hi) {
      g[pos] = 0;
      --pos;
      continue;
    }
    g[pos] = next;
    if (pos == len) {
      ++count;
      continue; // try the next value at this position
    }
    ++pos;
  }
  return count;
}

int newcomb_piles(const std::vector<int>& deck) {
  if (deck.empty()) return 0;
  int piles = 1;
  for (size_t t = 1; t < deck.size(); ++t)
    if (deck[t] > deck[t - 1]) ++piles; // not smaller: the card cannot be placed, start a pile
  return piles;
}

std::vector<Int> newcomb_distribution(int n) {
  if (n < 1 || n > 9) fail(ErrorCode::TooLarge, "newcomb_distribution enumerates n <= 9");
  std::vector<Int> counts(n, 0);
  std::vector<int> deck = identity_word(n);
  do {
    ++counts[newcomb_piles(deck) - 1];
  } while (std::next_permutation(deck.begin(), deck.end()));
  return counts;
}

std::vector<Int> multiset_descent_distribution(int n, int i) {
  if (n < 1 || i < 1) fail(ErrorCode::BadArgument, "multiset_descent_distribution needs n, i >= 1");
  // (in)!/(i!)^n distinct words; refuse past 10^6
  Int words = 1;
  for (int k = 2; k <= n; ++k) words *= binomial_exact(Int(k) * i, static_cast<unsigned long>(i));
  if (words > 1000000) fail(ErrorCode::TooLarge, "multiset_descent_distribution enumerates <= 10^6 words");
  std::vector<Int> counts(i * (n - 1) + 1, 0);
  std::vector<int> w;
  for (int v = 1; v <= n; ++v) w.insert(w.end(), i, v);
  do {
    int d = 0;
    for (size_t t = 0; t + 1 < w.size(); ++t)
      if (w[t] > w[t + 1]) ++d;
    ++counts[d];
  } while (std::next_permutation(w.begin(), w.end()));
  return counts;
}

} // namespace conglab::oracle
