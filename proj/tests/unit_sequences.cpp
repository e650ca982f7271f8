#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "conglab/arith.hpp"
#include "conglab/error.hpp"
#include "conglab/sequences.hpp"

using namespace conglab;
using namespace conglab::seq;

TEST_CASE("triangle rows 1..7 frozen") {
  CHECK(eulerian_row(1) == std::vector<Int>{1});
  CHECK(eulerian_row(2) == std::vector<Int>{1, 1});
  CHECK(eulerian_row(3) == std::vector<Int>{1, 4, 1});
  CHECK(eulerian_row(4) == std::vector<Int>{1, 11, 11, 1});
  CHECK(eulerian_row(5) == std::vector<Int>{1, 26, 66, 26, 1});
  CHECK(eulerian_row(6) == std::vector<Int>{1, 57, 302, 302, 57, 1});
  CHECK(eulerian_row(7) == std::vector<Int>{1, 120, 1191, 2416, 1191, 120, 1});
}

TEST_CASE("triangle rows are symmetric and sum to n!") {
  Int factorial = 1;
  for (int n = 1; n <= 30; ++n) {
    factorial *= n;
    const std::vector<Int> row = eulerian_row(n);
    REQUIRE(row.size() == static_cast<size_t>(n));
    CHECK(std::accumulate(row.begin(), row.end(), Int(0)) == factorial);
    for (size_t m = 0; m < row.size(); ++m) CHECK(row[m] == row[row.size() - 1 - m]);
  }
}

TEST_CASE("closed form matches the recurrence inside the triangle") {
  for (int n = 1; n <= 12; ++n) {
    const std::vector<Int> row = eulerian_row(n);
    for (int m = 0; m < n; ++m) CHECK(eulerian_closed(n, m) == row[m]);
  }
}

TEST_CASE("single-entry residues match full rows") {
  CHECK(eulerian_mod(Int(8), 1, 3, 1).value() == 247 % 3);
  const std::vector<Int> row = eulerian_row(9);
  for (uint64_t m = 0; m + 1 < 7; ++m)
    CHECK(eulerian_mod(Int(9), m, 7, 2) == Residue::reduce(row[m], 49));
  CHECK_THROWS_AS(eulerian_mod(Int(9), 6, 7, 1), Error); // needs m+1 < p
  // a row index too big to expand exactly still reduces fine
  CHECK(eulerian_mod(Int(102), 1, 5, 2) == Residue::reduce(Int((Int(1) << 102) - 103), 25));
}

TEST_CASE("row residues modulo a prime") {
  const std::vector<uint64_t> row = eulerian_row_mod(7, 11);
  const std::vector<Int> exact = eulerian_row(7);
  REQUIRE(row.size() == 7);
  for (size_t m = 0; m < 7; ++m) CHECK(row[m] == Residue::reduce(exact[m], 11).value());
}

TEST_CASE("multiset rows via back-substitution, frozen small shapes") {
  CHECK(generalized_eulerian_row(1, 2) == std::vector<Int>{1});
  CHECK(generalized_eulerian_row(2, 2) == std::vector<Int>{1, 4, 1});
  CHECK(generalized_eulerian_row(3, 2) == std::vector<Int>{1, 20, 48, 20, 1});
  CHECK(generalized_eulerian_row(2, 3) == std::vector<Int>{1, 9, 9, 1});
  // i = 1 collapses to the ordinary triangle
  for (int n = 1; n <= 8; ++n) CHECK(generalized_eulerian_row(n, 1) == eulerian_row(n));
  // row total is the multiset word count
  const std::vector<Int> r = generalized_eulerian_row(4, 2);
  CHECK(std::accumulate(r.begin(), r.end(), Int(0)) == multiset_word_count(4, 2));
  CHECK_THROWS_AS(generalized_eulerian_row(40, 3), Error); // weight cap
}

TEST_CASE("multiset word counts") {
  CHECK(multiset_word_count(2, 2) == 6);
  CHECK(multiset_word_count(3, 2) == 90);
  CHECK(multiset_word_count(1, 9) == 1);
  CHECK(multiset_word_count(4, 1) == 24);
}

TEST_CASE("zigzag numbers: boustrophedon values frozen") {
  const std::vector<Int> z = zigzag(12);
  const long want[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765};
  REQUIRE(z.size() == 13);
  for (int n = 0; n <= 12; ++n) CHECK(z[n] == want[n]);
}

TEST_CASE("zigzag residues match exact values reduced") {
  const uint64_t m = 125;
  const std::vector<uint64_t> zm = zigzag_mod(40, m);
  const std::vector<Int> z = zigzag(40);
  REQUIRE(zm.size() == 41);
  for (int n = 0; n <= 40; ++n) CHECK(zm[n] == Residue::reduce(z[n], m).value());
}

TEST_CASE("Euler, tangent, secant and divided families frozen") {
  const long e[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765};
  for (int n = 0; n <= 12; ++n) CHECK(euler_number(n) == e[n]);
  const long ehat[] = {1, 1, -1, -2, 5, 16, -61, -272, 1385, 7936, -50521, -353792, 2702765};
  for (int n = 0; n <= 12; ++n) CHECK(generalized_euler(n) == ehat[n]);
  CHECK(tangent_number(7) == 272);
  CHECK(secant_number(8) == 1385);
  CHECK_THROWS_AS(tangent_number(6), Error);
  CHECK_THROWS_AS(secant_number(7), Error);
}

TEST_CASE("Genocchi numbers frozen and tied to Bernoulli") {
  const long g[] = {0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073};
  for (int n = 1; n <= 12; ++n) CHECK(genocchi_number(n) == g[n]);
  const std::vector<Rat> b = bernoulli_exact(20);
  for (int n = 2; n <= 20; ++n) {
    const Rat scale = Rat(2) * (Rat(1) - Rat(Int(1) << n));
    CHECK(Rat(genocchi_number(n)) == scale * b[n]);
  }
}

TEST_CASE("Bernoulli numbers frozen") {
  const std::vector<Rat> b = bernoulli_exact(12);
  CHECK(b[0] == Rat(1));
  CHECK(b[1] == Rat(-1, 2));
  CHECK(b[2] == Rat(1, 6));
  CHECK(b[3] == Rat(0));
  CHECK(b[4] == Rat(-1, 30));
  CHECK(b[10] == Rat(5, 66));
  CHECK(b[12] == Rat(-691, 2730));
}

TEST_CASE("modular table readers agree with exact reductions") {
  const uint64_t p = 11, mod = p * p;
  const std::vector<uint64_t> z = zigzag_mod(30, mod);
  for (long n = 0; n <= 30; ++n) {
    CHECK(euler_number_mod(z, mod, n) == Residue::reduce(euler_number(static_cast<int>(n)), mod).value());
    CHECK(generalized_euler_mod(z, mod, n) ==
          Residue::reduce(generalized_euler(static_cast<int>(n)), mod).value());
    if (n >= 1)
      CHECK(genocchi_number_mod(z, mod, n) ==
            Residue::reduce(genocchi_number(static_cast<int>(n)), mod).value());
  }
}

TEST_CASE("bernoulli residues via the Genocchi route") {
  // indices divisible by p-1 are excluded: there 2(1-2^n) and the
  // denominator of B_n are both divisible by p (von Staudt-Clausen)
  const std::vector<Rat> b = bernoulli_exact(12);
  for (long n : {2L, 4L, 8L, 10L})
    CHECK(bernoulli_mod(n, 7, 2) == Residue::reduce(b[n], 49));
  CHECK_THROWS_AS(bernoulli_mod(6, 7, 1), Error); // 2(1-2^6) = -126 is 0 mod 7
}

TEST_CASE("harmonic tables carry prefix sums and the odd reciprocal total") {
  const HarmonicTable h = harmonic_table(7, 1);
  REQUIRE(h.H.size() == 7);
  CHECK(h.H[0] == 0);
  CHECK(h.H[1] == 1);
  CHECK(h.H[6] == 0); // full sum vanishes mod p
  // H' = 1 + 1/3 + 1/5 mod 7: 1 + 5 + 3 = 9 = 2
  CHECK(h.Hprime == 2);
  const HarmonicTable h2 = harmonic_table(5, 2);
  CHECK(h2.modulus == 25);
  CHECK(h2.H[4] == Residue::reduce(Rat(25, 12), 25).value()); // Wolstenholme: 0 mod 25
  CHECK(h2.H[4] == 0);
  CHECK_THROWS_AS(harmonic_table(3, 1), Error);
  CHECK_THROWS_AS(harmonic_table(7, 4), Error);
}

TEST_CASE("half-range power sums") {
  // p=7: r in {1,2,3}; S_2 = 1+4+9 = 14, S_3 = 1+8+27 = 36
  CHECK(power_sum(2, 7, 1).value() == 0);
  CHECK(power_sum(3, 7, 2).value() == 36);
  const std::vector<uint64_t> odd = odd_power_sums(7, 2);
  REQUIRE(odd.size() == 3); // k = 1, 3, 5
  CHECK(odd[0] == 6);       // S_1 = 1+2+3
  CHECK(odd[1] == 36);
  CHECK(odd[2] == power_sum(5, 7, 2).value());
}

TEST_CASE("even-ascent permutation counts") {
  // row 3: entries at even positions 0 and 2 -> 1 + 1 = 2
  CHECK(even_ascent_count(3) == 2);
  CHECK(even_ascent_count(5) == 1 + 66 + 1);
}
