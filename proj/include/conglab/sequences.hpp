#pragma once

// Sequence engines: the Eulerian triangle and its multiset generalization,
// the boustrophedon (zigzag) family that carries Euler / tangent / secant /
// generalized-Euler / Genocchi numbers, Bernoulli numbers, harmonic residue
// tables and power sums.  Exact carriers are GMP integers/rationals; modular
// mirrors are uint64 vectors over p^e.
//
// One design thread runs through the file: everything zigzag-flavoured comes
// from a single Seidel-Entringer-Arnold triangle fill,
//
//   T(0,0) = 1,  T(n,0) = 0,  T(n,k) = T(n,k-1) + T(n-1,n-k),
//
// whose diagonal T(n,n) is the number of alternating permutations of n
// letters.  Euler numbers are signed even entries, tangent numbers are the
// odd entries, Genocchi numbers follow from the tangent relation
// G_{2m} = (-1)^m m T_{2m-1} / 4^{m-1}, and Bernoulli residues follow from
// G_n = 2(1-2^n) B_n where 1-2^n is a unit.  The fill works verbatim over
// Z/m for any m because it only ever adds.

#include <cstdint>
#include <memory>
#include <vector>

#include "conglab/arith.hpp"

namespace conglab::seq {

inline constexpr int kMaxEulerianRow = 2000;
inline constexpr int kMaxZigzagExact = 5000;
inline constexpr int kMaxZigzagMod = 6000;
inline constexpr int kMaxBernoulli = 400;
inline constexpr long kMaxGeneralizedRowWeight = 10000000; // (in)!/(i!)^n cap

// --- Eulerian triangle ------------------------------------------------------

// Row n (length n): E(n,0) .. E(n,n-1) by the two-term recurrence.
std::vector<Int> eulerian_row(int n);

// Comtet's closed form: sum_{k=0}^{m+1} (-1)^k C(n+1,k) (m+1-k)^n.
Int eulerian_closed(int n, int m);

// Closed form in Z/p^e for huge n; needs m+1 < p so the binomials make sense.
Residue eulerian_mod(const Int& n, uint64_t m, uint64_t p, unsigned e);

// Row n = E(n, 0..n-1) mod an arbitrary modulus, by the recurrence.
std::vector<uint64_t> eulerian_row_mod(uint64_t n, uint64_t modulus);

// Multiset row E^{(i)}(n, 0..i(n-1)) solved from the identity
// C(x,i)^n = sum_m E^{(i)}(n,m) C(x+m, in) evaluated at x = in, in-1, ...:
// the matrix C(x+m, in) is unit-triangular in that order, so plain integer
// back-substitution applies.  Guarded by the row-weight cap.
std::vector<Int> generalized_eulerian_row(int n, int i);

// (in)! / (i!)^n, the total number of multiset words (row sum).
Int multiset_word_count(int n, int i);

// Number of permutations of Sym(n) with an even number of ascents.
Int even_ascent_count(int n);

// --- zigzag family ----------------------------------------------------------

// z_0..z_N exactly: 1, 1, 1, 2, 5, 16, 61, 272, ...
std::vector<Int> zigzag(int N);
// the same fill over Z/modulus
std::vector<uint64_t> zigzag_mod(int N, uint64_t modulus);

Int euler_number(int n);        // 0 at odd n, (-1)^{n/2} z_n at even n
Int generalized_euler(int n);   // E_n at even n, alternating row sum at odd n
Int tangent_number(int n);      // z_n, odd n only (EvenIndex otherwise)
Int secant_number(int n);       // z_n, even n only (EvenIndex otherwise)
Int genocchi_number(int n);     // exact; G_1 = 1, G_{odd>1} = 0

// Signed zigzag-family values read out of a modular table z = zigzag_mod(...).
// These are free functions so suite code can share one table across checks.
uint64_t euler_number_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n);
uint64_t generalized_euler_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n);
uint64_t genocchi_number_mod(const std::vector<uint64_t>& z, uint64_t modulus, long n);

// --- Genocchi / Bernoulli ---------------------------------------------------

Residue divided_genocchi(long k, uint64_t p, unsigned e);   // G_k/k, needs p∤k
Residue divided_bernoulli(long k, uint64_t p, unsigned e);  // B_k/k, needs p∤k

// Exact B_0..B_N by the classical recurrence (deliberately NOT the Genocchi
// route, so the Genocchi relation stays a genuine cross-check).  B_1 = -1/2.
std::vector<Rat> bernoulli_exact(int N);

// B_n mod p^e via G_n·inv(2(1-2^n)); NotInvertible at the 2^n = 1 poles.
Residue bernoulli_mod(long n, uint64_t p, unsigned e);

// --- harmonic / power sums --------------------------------------------------

struct HarmonicTable {
  uint64_t p = 0;
  unsigned e = 0;
  uint64_t modulus = 1;
  std::vector<uint64_t> H; // H[k] = sum_{j<=k} inv(j) mod p^e, k = 0..p-1
  uint64_t Hprime = 0;     // 1 + 1/3 + ... + 1/(p-2) mod p^e
};

HarmonicTable harmonic_table(uint64_t p, unsigned e);

// S_k = sum_{r=1}^{(p-1)/2} r^k mod p^e.
Residue power_sum(uint64_t k, uint64_t p, unsigned e);

// S_k mod p^e for every odd k in [1, p-2], one pass of incremental squares.
std::vector<uint64_t> odd_power_sums(uint64_t p, unsigned e);

} // namespace conglab::seq
