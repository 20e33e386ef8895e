#include <doctest.h>

#include <cmath>
#include <vector>

#include "laas/loss.hpp"
#include "laas/rng.hpp"
#include "oracles.hpp"

using namespace laas;

namespace {

std::vector<double> random_values(Xoshiro256pp& rng, std::size_t n) {
  std::vector<double> values(n);
  for (double& v : values) v = rng.uniform() * 6.0 - 3.0;
  return values;
}

}  // namespace

TEST_CASE("ks statistic worked examples") {
  const std::vector<double> a{1, 2, 3};
  CHECK(ks_statistic(a, a) == 0.0);
  CHECK(ks_statistic(a, std::vector<double>{10, 11, 12}) == 1.0);
  CHECK(ks_statistic(a, std::vector<double>{2, 3, 4}) == 1.0 / 3.0);
}

TEST_CASE("ks statistic is zero iff the ECDFs coincide") {
  // same ECDF from different multiset sizes
  CHECK(ks_statistic(std::vector<double>{1, 2}, std::vector<double>{1, 1, 2, 2}) == 0.0);
  CHECK(ks_statistic(std::vector<double>{1, 2}, std::vector<double>{1, 2, 2}) > 0.0);
}

TEST_CASE("ks statistic properties and oracle equivalence") {
  Xoshiro256pp rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t na = 1 + rng.next() % 120;
    const std::size_t nb = 1 + rng.next() % (200 - na);
    auto a = random_values(rng, na);
    auto b = random_values(rng, nb);
    if (trial % 3 == 0) {
      // force ties across the two samples
      for (double& v : a) v = std::round(v * 2.0) / 2.0;
      for (double& v : b) v = std::round(v * 2.0) / 2.0;
    }
    const double d = ks_statistic(a, b);
    CHECK(d == oracles::ks_brute(a, b));
    CHECK(d == ks_statistic(b, a));
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);

    // invariance under common positive affine maps
    auto a2 = a;
    auto b2 = b;
    for (double& v : a2) v = 2.5 * v + 1.0;
    for (double& v : b2) v = 2.5 * v + 1.0;
    CHECK(ks_statistic(a2, b2) == d);
  }
}

TEST_CASE("complexity loss") {
  const TimeSeries x("x", {1, 2, 3, 4});
  EntropySpec discrete;
  discrete.binning = BinningScheme::discrete();

  SUBCASE("identity coarse-graining gives zero loss") {
    const CoarseSeries z = coarse_grain_ms(x, ScaleFactor(1));
    CHECK(*complexity_loss(x, z, discrete) == 0.0);
    EntropySpec auto_binning;
    CHECK(*complexity_loss(x, z, auto_binning) == 0.0);
  }

  SUBCASE("uniform four values against their tau=2 means") {
    const CoarseSeries z = coarse_grain_ms(x, ScaleFactor(2));
    CHECK(*complexity_loss(x, z, discrete) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
  }

  SUBCASE("degenerate series") {
    const TimeSeries c("c", {1, 1, 1, 1});
    const CoarseSeries z = coarse_grain_ms(c, ScaleFactor(2));
    CHECK(*complexity_loss(c, z, discrete) == 0.0);
  }

  SUBCASE("undefined estimator propagates") {
    EntropySpec sample_spec;
    sample_spec.estimator = EntropySpec::Estimator::Sample;
    sample_spec.embed = 1;
    sample_spec.r = 0.01;
    sample_spec.relative_r = false;
    const TimeSeries spread("spread", {0, 10, 20, 30, 40, 50, 60, 70});
    const CoarseSeries z = coarse_grain_ms(spread, ScaleFactor(2));
    CHECK(!complexity_loss(spread, z, sample_spec).has_value());
  }

  SUBCASE("shared edges differ from independent edges") {
    EntropySpec fixed;
    fixed.binning = BinningScheme::equal_width(4);
    const TimeSeries wide("wide", {0, 1, 2, 3, 4, 5, 6, 7});
    const CoarseSeries z = coarse_grain_ms(wide, ScaleFactor(2));
    const double independent = *complexity_loss(wide, z, fixed, BinEdges::Independent);
    const double shared = *complexity_loss(wide, z, fixed, BinEdges::Shared);
    CHECK(independent != shared);
  }
}

TEST_CASE("analyze_cell and analyze_sweep") {
  EntropySpec spec;

  SUBCASE("sweep completeness with undefined cells kept") {
    const TimeSeries mono("mono", {1, 2, 3, 4, 5, 6, 7, 8});
    const auto records = analyze_sweep(mono, AttentionKind::peak(),
                                       AnalysisKind::ComplexityLoss, 5, spec);
    REQUIRE(records.size() == 5);
    for (const auto& record : records) {
      CHECK(!record.value.has_value());
    }
  }

  SUBCASE("similarity loss worked example") {
    const TimeSeries x("x", {1, 2, 3, 4});
    const auto value = analyze_cell(x, AttentionKind::all(), AnalysisKind::SimilarityLoss, 2, spec);
    // pooled-point ECDF brute force over {1, 1.5, 2, 3, 3.5, 4}
    CHECK(*value == oracles::ks_brute({1, 2, 3, 4}, {1.5, 3.5}));
    CHECK(*value == 0.25);
  }

  SUBCASE("complexity loss at tau=1 is zero") {
    Xoshiro256pp rng(37);
    const TimeSeries x("x", random_values(rng, 64));
    const auto records =
        analyze_sweep(x, AttentionKind::all(), AnalysisKind::ComplexityLoss, 3, spec);
    CHECK(*records[0].value == 0.0);
    CHECK(records[0].tau == 1);
    CHECK(records[2].tau == 3);
  }

  SUBCASE("coarse complexity at tau=1 equals the entropy of the original") {
    Xoshiro256pp rng(41);
    const TimeSeries x("x", random_values(rng, 128));
    const auto value =
        analyze_cell(x, AttentionKind::all(), AnalysisKind::CoarseComplexity, 1, spec);
    CHECK(*value == *evaluate_entropy(x.values, spec));
  }

  SUBCASE("configuration errors are not swallowed") {
    EntropySpec bad;
    bad.estimator = EntropySpec::Estimator::Renyi;
    bad.alpha = 1.0;
    const TimeSeries x("x", {1, 2, 3, 4});
    CHECK_THROWS_AS(analyze_sweep(x, AttentionKind::all(), AnalysisKind::CoarseComplexity, 2, bad),
                    InvalidParameter);
    CHECK_THROWS_AS(analyze_sweep(x, AttentionKind::all(), AnalysisKind::CoarseComplexity, 0, spec),
                    InvalidParameter);
  }
}

TEST_CASE("analysis tokens") {
  CHECK(analysis_name(AnalysisKind::SimilarityLoss) == "sloss");
  CHECK(parse_analysis("closs") == AnalysisKind::ComplexityLoss);
  CHECK(parse_analysis("complexity") == AnalysisKind::CoarseComplexity);
  CHECK(!parse_analysis("x"));
}
