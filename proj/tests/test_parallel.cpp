#include <catch_amalgamated.hpp>

#include <atomic>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "orbitlattice/parallel.hpp"

using namespace orbitlattice;

namespace {

struct EnvGuard {
  explicit EnvGuard(const char* value) {
    if (value)
      setenv("ORBITLATTICE_THREADS", value, 1);
    else
      unsetenv("ORBITLATTICE_THREADS");
  }
  ~EnvGuard() { unsetenv("ORBITLATTICE_THREADS"); }
};

}  // namespace

TEST_CASE("thread count from the environment") {
  {
    EnvGuard g(nullptr);
    REQUIRE(parallel::thread_count() == 1);
  }
  {
    EnvGuard g("4");
    REQUIRE(parallel::thread_count() == 4);
  }
  {
    EnvGuard g("0");
    REQUIRE(parallel::thread_count() == 1);
  }
  {
    EnvGuard g("not-a-number");
    REQUIRE(parallel::thread_count() == 1);
  }
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (const char* threads : {"1", "3", "7"}) {
    EnvGuard g(threads);
    const std::size_t total = 1000;
    std::vector<std::atomic<int>> hits(total);
    parallel::parallel_for(total, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) REQUIRE(h.load() == 1);
  }
}

TEST_CASE("parallel_for on an empty range") {
  bool called = false;
  parallel::parallel_for(0, [&](std::size_t) { called = true; });
  REQUIRE_FALSE(called);
}
