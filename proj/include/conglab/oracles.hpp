#pragma once

// Brute-force enumerators used as ground truth for the formula-based sequence
// engines.  Each one counts objects by direct exhaustive generation and is
// deliberately written without reference to the engine it validates — no
// recurrences, no generating functions, just loops over all objects.
//
// All enumerators are pure and cheap enough to run in seconds at their caps;
// past the cap they throw TooLarge rather than silently taking minutes.

#include <vector>

#include "conglab/arith.hpp"

namespace conglab::oracle {

// counts[m] = permutations of [1..n] with exactly m ascents (n <= 10)
std::vector<Int> ascent_distribution(int n);

// permutations of [1..n] whose descent positions are exactly the odd
// integers in [1, n-1]; the empty and singleton permutations count 1 (n <= 10)
Int alternating_count(int n);

// permutations s of [1..2n-1] with s(i) < s(i+1) exactly when s(i) is odd
// (2n-1 <= 9)
Int dumont_count(int n);

// maps g on [1..2n-2] with g(2i-1) <= i, g(2i) <= i, g(2i-1) >= g(2i) and
// g(2i) <= g(2i+1); the empty map counts 1 (2n-2 <= 14)
Int gun_count(int n);

// patience piles: a card goes on the current pile when smaller than its
// predecessor, else starts a new pile; returns the pile count
int newcomb_piles(const std::vector<int>& deck);

// counts[m] = deals of a deck of n distinct cards ending with m+1 piles (n <= 9)
std::vector<Int> newcomb_distribution(int n);

// counts[m] = arrangements of the multiset {1^i, ..., n^i} with m descents;
// capped at 10^6 distinct words
std::vector<Int> multiset_descent_distribution(int n, int i);

} // namespace conglab::oracle
