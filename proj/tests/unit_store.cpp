#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "conglab/cache.hpp"
#include "conglab/error.hpp"
#include "conglab/sequences.hpp"
#include "conglab/store.hpp"

using namespace conglab;
using namespace conglab::seq;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("conglab-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(reinterpret_cast<uintptr_t>(this)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("residue table length policy by depth") {
  CHECK(zigzag_mod_policy_length(5, 1) == 18);
  CHECK(zigzag_mod_policy_length(199, 1) == 406);
  CHECK(zigzag_mod_policy_length(61, 2) == 61 * 60 + 8);
  CHECK(zigzag_mod_policy_length(67, 2) == 142);
  CHECK(zigzag_mod_policy_length(199, 2) == 406);
  CHECK(zigzag_mod_policy_length(211, 2) == 219);
  CHECK(zigzag_mod_policy_length(61, 3) == 61 * 60 + 8);
  CHECK(zigzag_mod_policy_length(199, 3) == 406);
  CHECK_THROWS_AS(zigzag_mod_policy_length(5, 4), Error);
}

TEST_CASE("store hands out shared residue tables") {
  SequenceStore store;
  auto z1 = store.zigzag_table(5, 1);
  auto z2 = store.zigzag_table(5, 1);
  CHECK(z1.get() == z2.get()); // one build, shared
  const std::vector<uint64_t> direct = zigzag_mod(zigzag_mod_policy_length(5, 1), 5);
  CHECK(*z1 == direct);

  auto row = store.eulerian_row_table(7);
  CHECK(*row == std::vector<uint64_t>{1, 5, 3, 5, 1}); // row 5 mod 7

  auto h = store.harmonic(7, 1);
  const HarmonicTable direct_h = harmonic_table(7, 1);
  CHECK(h->H == direct_h.H);
  CHECK(h->Hprime == direct_h.Hprime);

  auto s = store.odd_power_sum_table(7, 2);
  CHECK(*s == odd_power_sums(7, 2));
}

TEST_CASE("store grows exact families monotonically") {
  SequenceStore store;
  auto z = store.zigzag_exact(10);
  CHECK(z->size() >= 11);
  CHECK((*z)[10] == 50521);
  auto z_more = store.zigzag_exact(450);
  CHECK(z_more->size() >= 451);
  CHECK((*z_more)[10] == 50521);

  auto b = store.bernoulli(12);
  CHECK((*b)[12] == Rat(-691, 2730));

  auto rows = store.eulerian_rows_exact(7);
  CHECK((*rows)[4] == eulerian_row(5));
  CHECK((*rows)[6] == eulerian_row(7));
}

TEST_CASE("disk cache round-trips residue vectors") {
  TempDir dir;
  ResidueCache cache(dir.path);
  const std::vector<uint64_t> values = {1, 2, 3, 18446744073709551557ull};
  cache.store("zigzag", 13, 2, values);
  auto back = cache.load("zigzag", 13, 2, values.size());
  REQUIRE(back.has_value());
  CHECK(*back == values);
  CHECK_FALSE(cache.load("zigzag", 13, 2, values.size() + 1).has_value()); // length mismatch
  CHECK_FALSE(cache.load("zigzag", 17, 2, 4).has_value());                 // absent
}

TEST_CASE("corrupted cache entries are ignored, not trusted") {
  TempDir dir;
  ResidueCache cache(dir.path);
  cache.store("zigzag", 13, 1, {1, 2, 3});
  {
    std::ofstream out(dir.path / "zigzag" / "13_1.json");
    out << "{not json";
  }
  CHECK_FALSE(cache.load("zigzag", 13, 1, 3).has_value());
}

TEST_CASE("cold and warm stores produce identical tables") {
  TempDir dir;
  std::vector<uint64_t> cold, warm;
  {
    SequenceStore store;
    store.attach_cache(std::make_shared<ResidueCache>(dir.path));
    cold = *store.zigzag_table(11, 2);
    (void)*store.eulerian_row_table(11);
    (void)*store.harmonic(11, 2);
  }
  CHECK(std::filesystem::exists(dir.path / "zigzag" / "11_2.json"));
  {
    SequenceStore store;
    store.attach_cache(std::make_shared<ResidueCache>(dir.path));
    warm = *store.zigzag_table(11, 2);
  }
  CHECK(cold == warm);
  CHECK(cold == zigzag_mod(zigzag_mod_policy_length(11, 2), 121));
}
