#include "doctest.h"

#include "braidvar/chart_finder.hpp"
#include "braidvar/parallel.hpp"

using namespace braidvar;

TEST_CASE("parallel map matches the serial reference") {
  auto word = beta_ab(1, 4);
  const int count = 64;
  auto job = [&](std::size_t i) {
    auto p = sample_chart_point(word, i);
    auto w = find_chart(1, 4, p);
    return w.chart ? w.chart->final_point.str() + "|" + std::to_string(w.chart->stages.size())
                   : std::string("stab");
  };
  auto serial = parallel_map<std::string>(count, 1, job);
  auto parallel = parallel_map<std::string>(count, 4, job);
  CHECK(serial == parallel);
}

TEST_CASE("parallel membership batch is deterministic") {
  auto word = beta_ab(2, 4);
  std::vector<RatPoint> points;
  for (uint64_t s = 0; s < 100; ++s) points.push_back(sample_chart_point(word, s));
  auto job = [&](std::size_t i) { return in_braid_variety(word, points[i]); };
  auto a = parallel_map<bool>(points.size(), 1, job);
  auto b = parallel_map<bool>(points.size(), hardware_jobs(), job);
  CHECK(a == b);
  CHECK(std::count(a.begin(), a.end(), true) == 100);
}

TEST_CASE("exceptions surface from worker tasks") {
  auto boom = [&](std::size_t i) {
    if (i == 5) throw NotOnVariety("task five");
  };
  CHECK_THROWS_AS(parallel_for(8, 1, boom), NotOnVariety);
  CHECK_THROWS_AS(parallel_for(8, 4, boom), Error);
}
