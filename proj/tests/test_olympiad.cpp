#include <doctest.h>

#include <chrono>
#include <functional>
#include <random>

#include "grasshopper/errors.hpp"
#include "grasshopper/olympiad.hpp"
#include "grasshopper/route.hpp"

using namespace grasshopper;

namespace {

std::vector<Rational> R(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<std::vector<long>> subsets(const std::vector<long>& pool, std::size_t size) {
  std::vector<std::vector<long>> out;
  std::vector<long> current;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      walk(i + 1);
      current.pop_back();
    }
  };
  walk(0);
  return out;
}

}  // namespace

TEST_CASE("positive order examples") {
  PositiveInstance three(R({1, 2, 3}), R({1, 2}));
  auto route = positive_safe_order(three);
  CHECK(is_valid_positive_route(route, three));
  CHECK(route.prefix_sums.size() == 2);

  PositiveInstance single(R({7}), {});
  auto one = positive_safe_order(single);
  CHECK(one.order == R({7}));
  CHECK(one.prefix_sums.empty());

  PositiveInstance pair(R({1, 2}), R({1}));
  auto two = positive_safe_order(pair);
  CHECK(two.order == R({2, 1}));
  CHECK(two.prefix_sums == R({2}));
  CHECK(two.indices == std::vector<std::size_t>{1, 0});
}

TEST_CASE("padding mines") {
  PositiveInstance empty(R({1, 2, 3}), {});
  auto padded = pad_mines(empty);
  REQUIRE(padded.mines().size() == 2);
  for (const auto& m : padded.mines()) CHECK(m > 6);
  CHECK(padded.mines()[0] != padded.mines()[1]);

  PositiveInstance full(R({1, 2, 3}), R({1, 2}));
  CHECK(pad_mines(full).mines() == full.mines());

  PositiveInstance five_nine(R({5, 9}), R({5}));
  CHECK(pad_mines(five_nine).mines() == R({5}));

  // An existing far mine is kept and the padding skips past it.
  PositiveInstance far(R({1, 2, 3}), R({7}));
  auto p = pad_mines(far);
  REQUIRE(p.mines().size() == 2);
  CHECK(p.mines()[0] == 7);
  CHECK(p.mines()[1] > 7);
}

TEST_CASE("instance validation") {
  CHECK_THROWS_AS(PositiveInstance(R({1, 0}), {}), InputError);
  CHECK_THROWS_AS(PositiveInstance(R({1, -2}), {}), InputError);
  CHECK_THROWS_AS(PositiveInstance(R({3, 3}), {}), InputError);
  CHECK_THROWS_AS(PositiveInstance(R({1, 2}), R({1, 2})), InputError);
  CHECK_THROWS_AS(PositiveInstance({}, {}), InputError);
  // Repeated mines collapse before the count check.
  CHECK_NOTHROW(PositiveInstance(R({1, 2}), R({1, 1})));
  // 2/4 and 1/2 are the same jump.
  CHECK_THROWS_AS(PositiveInstance({Rational(2, 4), Rational(1, 2)}, {}), InputError);
}

TEST_CASE("branch selection") {
  OlympiadTrace trace;

  // a_3 = 3 is a mine.
  PositiveInstance mine_hit(R({1, 2, 3}), R({3, 5}));
  auto r1 = positive_safe_order(mine_hit, &trace);
  CHECK(is_valid_positive_route(r1, mine_hit));
  REQUIRE(trace.steps.size() == 3);
  CHECK(trace.steps[2] == OlympiadStep::kLargestIsMine);
  CHECK(r1.order[1] == 3);

  // a_3 = 3 avoids {1, 2}.
  PositiveInstance miss(R({1, 2, 3}), R({1, 2}));
  positive_safe_order(miss, &trace);
  CHECK(trace.steps[2] == OlympiadStep::kLargestNotMine);

  // 1 + 2 < 4: the largest jump goes last.
  PositiveInstance short_prefix(R({1, 2, 3}), R({4, 5}));
  auto r3 = positive_safe_order(short_prefix, &trace);
  CHECK(trace.steps[2] == OlympiadStep::kShortPrefix);
  CHECK(r3.order.back() == 3);

  positive_safe_order(PositiveInstance(R({4}), {}), &trace);
  CHECK(trace.steps == std::vector<OlympiadStep>{OlympiadStep::kBase});
}

TEST_CASE("every small instance is routed") {
  // All jump sets from {1..6} with n <= 4 and all mine sets of size n-1
  // inside [1, total].
  std::vector<long> values = {1, 2, 3, 4, 5, 6};
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& jumps : subsets(values, n)) {
      long total = 0;
      for (long a : jumps) total += a;
      std::vector<long> range;
      for (long m = 1; m <= total; ++m) range.push_back(m);
      for (const auto& mines : subsets(range, n - 1)) {
        std::vector<Rational> rj(jumps.begin(), jumps.end());
        std::vector<Rational> rm(mines.begin(), mines.end());
        PositiveInstance instance(rj, rm);
        auto route = positive_safe_order(instance);
        CHECK(is_valid_positive_route(route, instance));

        std::vector<std::int64_t> ij(jumps.begin(), jumps.end());
        std::vector<std::int64_t> im(mines.begin(), mines.end());
        CHECK(find_safe_order(JumpMultiset(ij), MineField(im)).has_value());
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("rational jumps and mines") {
  PositiveInstance instance({Rational(1, 2), Rational(1, 3), Rational(5, 4)},
                            {Rational(5, 6), Rational(7, 4)});
  auto route = positive_safe_order(instance);
  CHECK(is_valid_positive_route(route, instance));
  for (const auto& s : route.prefix_sums) {
    CHECK(s != Rational(5, 6));
    CHECK(s != Rational(7, 4));
  }

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    std::vector<Rational> jumps;
    while (jumps.size() < n) {
      Rational a(std::uniform_int_distribution<long>(1, 40)(rng),
                 std::uniform_int_distribution<long>(1, 6)(rng));
      a.canonicalize();
      if (std::find(jumps.begin(), jumps.end(), a) == jumps.end()) jumps.push_back(a);
    }
    // Mines drawn from actual partial sums, which is where they bite.
    std::vector<Rational> mines;
    std::vector<Rational> shuffled = jumps;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    Rational running = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      running += shuffled[i];
      mines.push_back(running);
    }
    PositiveInstance instance(jumps, mines);
    CHECK(is_valid_positive_route(positive_safe_order(instance), instance));
  }
}

TEST_CASE("long instances stay iterative") {
  const long n = 3000;
  std::vector<Rational> jumps;
  std::vector<Rational> mines;
  Rational running = 0;
  for (long i = 1; i <= n; ++i) jumps.emplace_back(i);
  // Mine the ascending-order partial sums, which blocks the naive order.
  for (long i = 1; i < n; ++i) {
    running += i;
    mines.push_back(running);
  }
  PositiveInstance instance(jumps, mines);
  auto start = std::chrono::steady_clock::now();
  auto route = positive_safe_order(instance);
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(is_valid_positive_route(route, instance));
  CHECK(seconds < 60);
}

TEST_CASE("route checker rejects bad routes") {
  PositiveInstance instance(R({1, 2, 3}), R({1, 2}));
  auto route = positive_safe_order(instance);
  auto broken = route;
  broken.order = R({1, 2, 3});
  broken.prefix_sums = R({1, 3});
  broken.indices = {0, 1, 2};
  CHECK_FALSE(is_valid_positive_route(broken, instance));
  auto short_route = route;
  short_route.order.pop_back();
  CHECK_FALSE(is_valid_positive_route(short_route, instance));
}
