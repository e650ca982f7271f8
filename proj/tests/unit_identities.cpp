#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "conglab/error.hpp"
#include "conglab/identities.hpp"

using namespace conglab;
using namespace conglab::seq;

TEST_CASE("the registry lists every identity once, in order") {
  const std::vector<std::string> ids = identity_ids();
  CHECK(ids.size() == 23);
  CHECK(ids.front() == "I01");
  CHECK(ids.back() == "I22");
  CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
  CHECK(std::count(ids.begin(), ids.end(), "I21a") == 1);
  CHECK(std::count(ids.begin(), ids.end(), "I21b") == 1);
  CHECK_THROWS_AS(verify_identity("I99"), Error);
  CHECK_FALSE(identity_title("I10").empty());
}

TEST_CASE("every unflagged identity holds at default caps") {
  for (const std::string& id : identity_ids()) {
    const IdentityResult res = verify_identity(id);
    INFO(id, ": ", res.note, " lhs=", res.lhs, " rhs=", res.rhs);
    if (res.flagged) {
      CHECK_FALSE(res.holds);
    } else {
      CHECK(res.holds);
      CHECK(res.instances > 0);
    }
  }
}

TEST_CASE("exactly two identities are flagged") {
  std::vector<std::string> flagged;
  for (const std::string& id : identity_ids())
    if (verify_identity(id).flagged) flagged.push_back(id);
  CHECK(flagged == std::vector<std::string>{"I15", "I21b"});
}

TEST_CASE("the convolved power-sum identity fails first at i=j=n=1") {
  const IdentityResult res = verify_identity("I15");
  CHECK(res.flagged);
  CHECK(res.lhs == "0");
  CHECK(res.rhs == "4");
  CHECK(res.note.find("i=1,j=1,n=1") != std::string::npos);
}

TEST_CASE("the double binomial sum for Euler numbers fails first at n=1") {
  const IdentityResult res = verify_identity("I21b");
  CHECK(res.flagged);
  CHECK(res.lhs == "-1"); // E_2
  CHECK(res.rhs == "-5"); // what the printed sum evaluates to
  CHECK(res.note.find("n=1") != std::string::npos);
}

TEST_CASE("sweep bounds narrow with max_n and series order") {
  IdentityOptions opt;
  opt.max_n = 5;
  const IdentityResult small = verify_identity("I06", opt);
  CHECK(small.holds);
  CHECK(small.instances == 5);
  const IdentityResult dflt = verify_identity("I06");
  CHECK(dflt.instances == 20);

  IdentityOptions shallow;
  shallow.series_order = 8;
  const IdentityResult gen = verify_identity("I20", shallow);
  CHECK(gen.holds);
  CHECK(gen.instances < verify_identity("I20").instances);
}

TEST_CASE("determinant route to Euler numbers stays exact") {
  const IdentityResult res = verify_identity("I21a");
  CHECK(res.holds);
  CHECK(res.instances == 5); // n = 1..5, determinants up to 10x10
}
