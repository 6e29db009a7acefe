#include "doctest.h"

#include "prop_suites.hpp"

using namespace ccenum;

TEST_CASE("interval arithmetic fuzz") {
  props::Result r = props::interval_fuzz(0x5eedu, 100000);
  CHECK(r.trials == 100000);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("interval Jacobian against finite differences") {
  props::Result r = props::jacobian_fd(0xfdfdu, 1000);
  CHECK(r.trials == 1000);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

TEST_CASE("certificate invariants on a full enumeration") {
  AnisoProblem prob(std::vector<double>(2, 0.5), 0.75, 2.25);
  SearchSettings st;
  EnumerationReport rep = enumerate_aniso(prob, st);
  REQUIRE(!rep.certificates.empty());
  props::Result r = props::certificate_invariants(rep, prob);
  CHECK(r.trials == static_cast<long>(rep.certificates.size()));
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}
