#include <cstdio>

#include "doctest.h"
#include "subdiv/selftest.hpp"

using namespace subdiv;

namespace {

void run(int index) {
  const CriterionResult r = run_criterion(index);
  std::printf("%s %s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
              r.seconds);
  std::fflush(stdout);
  INFO(r.name << ": " << r.detail);
  CHECK(r.passed);
}

}  // namespace

TEST_CASE("the acceptance list is complete") { CHECK(criterion_count() == 12); }

TEST_CASE("criterion 1") { run(1); }
TEST_CASE("criterion 2") { run(2); }
TEST_CASE("criterion 3") { run(3); }
TEST_CASE("criterion 4") { run(4); }
TEST_CASE("criterion 5") { run(5); }
TEST_CASE("criterion 6") { run(6); }
TEST_CASE("criterion 7") { run(7); }
TEST_CASE("criterion 8") { run(8); }
TEST_CASE("criterion 9") { run(9); }
TEST_CASE("criterion 10") { run(10); }
TEST_CASE("criterion 11") { run(11); }
TEST_CASE("criterion 12") { run(12); }
