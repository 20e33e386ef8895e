#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "laas/rng.hpp"
#include "laas/series.hpp"

using namespace laas;

namespace {

TimeSeries random_series(Xoshiro256pp& rng, std::size_t n) {
  std::vector<double> values(n);
  for (double& v : values) v = rng.uniform() * 10.0 - 5.0;
  return TimeSeries("rnd", std::move(values));
}

}  // namespace

TEST_CASE("time series validation") {
  CHECK_THROWS_AS(TimeSeries("empty", {}), InvalidInput);
  CHECK_THROWS_AS(TimeSeries("nan", {1.0, std::numeric_limits<double>::quiet_NaN()}),
                  InvalidInput);
  CHECK_THROWS_AS(TimeSeries("inf", {std::numeric_limits<double>::infinity()}), InvalidInput);
  CHECK_NOTHROW(TimeSeries("one", {0.0}));
}

TEST_CASE("scale factor validation") {
  CHECK_THROWS_AS(ScaleFactor(0), InvalidParameter);
  CHECK_THROWS_AS(ScaleFactor(-3), InvalidParameter);
  CHECK(ScaleFactor(4).value() == 4);
}

TEST_CASE("select_attention: all") {
  const TimeSeries x("x", {5, 5, 5});
  const auto idx = select_attention(x, AttentionKind::all()).indices;
  CHECK(idx == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("select_attention: peak keeps strict extrema of both polarities") {
  const TimeSeries x("x", {1, 3, 2, 4, 3, 5});
  const auto idx = select_attention(x, AttentionKind::peak()).indices;
  CHECK(idx == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("select_attention: peak errors") {
  CHECK_THROWS_AS(select_attention(TimeSeries("x", {1, 2}), AttentionKind::peak()), TooShort);
  CHECK_THROWS_AS(select_attention(TimeSeries("x", {1, 2, 3, 4}), AttentionKind::peak()),
                  EmptySelection);
  // plateaus are not strict extrema
  CHECK_THROWS_AS(select_attention(TimeSeries("x", {1, 2, 2, 1}), AttentionKind::peak()),
                  EmptySelection);
}

TEST_CASE("select_attention: occurrence picks the modal value") {
  const TimeSeries x("x", {1, 2, 2, 3, 2, 1});
  const auto idx = select_attention(x, AttentionKind::occurrence()).indices;
  CHECK(idx == std::vector<std::size_t>{2, 3, 5});
}

TEST_CASE("select_attention: occurrence count tie breaks to the smallest value") {
  const TimeSeries x("x", {2, 2, 1, 1});
  const auto idx = select_attention(x, AttentionKind::occurrence()).indices;
  CHECK(idx == std::vector<std::size_t>{3, 4});
}

TEST_CASE("select_attention: occurrence with quantization") {
  const TimeSeries x("x", {1.04, 0.96, 2.0});
  const auto idx = select_attention(x, AttentionKind::occurrence(1)).indices;
  CHECK(idx == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(select_attention(x, AttentionKind::occurrence(13)), InvalidParameter);
  CHECK_THROWS_AS(select_attention(x, AttentionKind::median(-1)), InvalidParameter);
}

TEST_CASE("select_attention: median of distinct values") {
  const TimeSeries x("x", {1, 2, 2, 3, 2, 1});
  CHECK(select_attention(x, AttentionKind::median()).indices == std::vector<std::size_t>{2, 3, 5});
  // even distinct count: the lower middle, so the value is attained
  const TimeSeries y("y", {1, 2, 3, 4});
  CHECK(select_attention(y, AttentionKind::median()).indices == std::vector<std::size_t>{2});
}

TEST_CASE("coarse_grain_ms matches the block-mean definition") {
  const TimeSeries x("x", {1, 2, 3, 4, 5, 6});
  const CoarseSeries z = coarse_grain_ms(x, ScaleFactor(2));
  CHECK(z.values == std::vector<double>{1.5, 3.5, 5.5});
  CHECK(z.block_sizes == std::vector<std::size_t>{2, 2, 2});

  const TimeSeries y("y", {7, 8, 9});
  CHECK(coarse_grain_ms(y, ScaleFactor(1)).values == y.values);

  const TimeSeries w("w", {1, 2, 3, 4, 5});
  CHECK(coarse_grain_ms(w, ScaleFactor(2)).values == std::vector<double>{1.5, 3.5});

  CHECK_THROWS_AS(coarse_grain_ms(y, ScaleFactor(4)), EmptyOutput);
}

TEST_CASE("coarse_grain_attention: peak example") {
  const TimeSeries x("x", {1, 3, 2, 4, 3, 5});
  const CoarseSeries z = coarse_grain_attention(x, AttentionKind::peak(), ScaleFactor(2));
  REQUIRE(z.values.size() == 2);
  CHECK(z.values[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(z.values[1] == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(z.block_sizes == std::vector<std::size_t>{3, 2});
}

TEST_CASE("coarse_grain_attention: insufficient attention observations") {
  const TimeSeries x("x", {1, 3, 1, 3, 1});  // peaks at 2,3,4
  CHECK_THROWS_AS(coarse_grain_attention(x, AttentionKind::peak(), ScaleFactor(4)),
                  InsufficientAttention);
}

TEST_CASE("coarse_grain_attention with All reproduces multiscale bit for bit") {
  Xoshiro256pp rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng.next() % 200);
    const TimeSeries x = random_series(rng, n);
    for (int tau = 1; tau <= 16; ++tau) {
      if (static_cast<std::size_t>(tau) > n) break;
      const CoarseSeries ms = coarse_grain_ms(x, ScaleFactor(tau));
      const CoarseSeries att = coarse_grain_attention(x, AttentionKind::all(), ScaleFactor(tau));
      CHECK(ms.values == att.values);
      CHECK(ms.block_sizes == att.block_sizes);
    }
  }
}

TEST_CASE("coarse-graining invariants on random series") {
  Xoshiro256pp rng(11);
  const AttentionKind kinds[] = {AttentionKind::all(), AttentionKind::peak(),
                                 AttentionKind::occurrence(1), AttentionKind::median(1)};
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 8 + static_cast<std::size_t>(rng.next() % 200);
    const TimeSeries x = random_series(rng, n);
    const double lo = *std::min_element(x.values.begin(), x.values.end());
    const double hi = *std::max_element(x.values.begin(), x.values.end());
    for (const AttentionKind& kind : kinds) {
      const std::size_t m = select_attention(x, kind).indices.size();
      for (int tau = 1; tau <= 8; ++tau) {
        if (m < static_cast<std::size_t>(tau)) break;
        const CoarseSeries z = coarse_grain_attention(x, kind, ScaleFactor(tau));

        // length law
        CHECK(z.values.size() == m / static_cast<std::size_t>(tau));
        CHECK(z.block_sizes.size() == z.values.size());

        // range bounds
        for (double v : z.values) {
          CHECK(v >= lo);
          CHECK(v <= hi);
        }

        // mass conservation over the covered prefix
        std::size_t covered = 0;
        double weighted = 0.0;
        for (std::size_t i = 0; i < z.values.size(); ++i) {
          covered += z.block_sizes[i];
          weighted += static_cast<double>(z.block_sizes[i]) * z.values[i];
        }
        CHECK(covered <= n);
        const double prefix =
            std::accumulate(x.values.begin(), x.values.begin() + static_cast<long>(covered), 0.0);
        CHECK(weighted == doctest::Approx(prefix).epsilon(1e-9));

        // determinism
        const CoarseSeries again = coarse_grain_attention(x, kind, ScaleFactor(tau));
        CHECK(z.values == again.values);
      }
    }
  }
}

TEST_CASE("peak selection against a literal recheck of the product condition") {
  Xoshiro256pp rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const TimeSeries x = random_series(rng, 64);
    const auto idx = select_attention(x, AttentionKind::peak()).indices;
    std::size_t cursor = 0;
    for (std::size_t k = 2; k + 1 <= x.size(); ++k) {
      const bool selected = cursor < idx.size() && idx[cursor] == k;
      const double prod =
          (x.values[k - 1] - x.values[k - 2]) * (x.values[k - 1] - x.values[k]);
      CHECK(selected == (prod > 0.0));
      if (selected) ++cursor;
      // endpoints can never be selected
      CHECK((idx.empty() || (idx.front() >= 2 && idx.back() <= x.size() - 1)));
    }
    CHECK(cursor == idx.size());
  }
}

TEST_CASE("method tokens") {
  CHECK(method_name(AttentionKind::all()) == "ms");
  CHECK(method_name(AttentionKind::occurrence()) == "oas");
  CHECK(parse_method("fas") == AttentionSelector::Occurrence);
  CHECK(parse_method("oas") == AttentionSelector::Occurrence);
  CHECK(parse_method("mas") == AttentionSelector::Median);
  CHECK(!parse_method("nope"));
}
