#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laas/errors.hpp"

namespace laas {

// One-dimensional series of finite real observations x_1..x_N.
struct TimeSeries {
  TimeSeries() = default;
  TimeSeries(std::string id, std::vector<double> values);

  std::string id;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Positive integer stride over attention observations.
class ScaleFactor {
 public:
  explicit ScaleFactor(int tau);
  int value() const { return tau_; }

 private:
  int tau_ = 1;
};

enum class AttentionSelector { All, Peak, Occurrence, Median };

// Attention-observation policy. All selects every position (plain multiscale
// coarse-graining); Peak selects strict local extrema; Occurrence selects the
// positions of the modal value; Median selects the positions of the median of
// the distinct values. Occurrence and Median optionally round values to
// `precision` decimal places before comparing for equality; by default values
// are compared exactly.
struct AttentionKind {
  AttentionSelector selector = AttentionSelector::All;
  std::optional<int> precision;  // 0..12 decimal places when set

  static AttentionKind all() { return {AttentionSelector::All, {}}; }
  static AttentionKind peak() { return {AttentionSelector::Peak, {}}; }
  static AttentionKind occurrence(std::optional<int> precision = {}) {
    return {AttentionSelector::Occurrence, precision};
  }
  static AttentionKind median(std::optional<int> precision = {}) {
    return {AttentionSelector::Median, precision};
  }
};

// Canonical method token: "ms", "pas", "oas" or "mas".
std::string_view method_name(const AttentionKind& kind);

// Parses a method token; "fas" is accepted as an alias for "oas".
std::optional<AttentionSelector> parse_method(std::string_view name);

// Strictly increasing 1-based positions of the attention observations.
struct AttentionIndexSet {
  std::vector<std::size_t> indices;
};

// Coarse-grained series plus the segmentation that produced it. block_sizes[i]
// is the number of source observations averaged into values[i]; the sum of
// block_sizes never exceeds the source length (the tail past the last segment
// boundary is discarded).
struct CoarseSeries {
  std::vector<double> values;
  std::size_t source_len = 0;
  int tau = 1;
  AttentionKind kind;
  std::vector<std::size_t> block_sizes;
};

// Positions of the attention observations of `x` under `kind`.
//
// Peak keeps every interior position k with
// (x_k - x_{k-1}) * (x_k - x_{k+1}) > 0, i.e. strict local maxima and minima.
// Occurrence keeps every position holding the modal value; count ties are
// broken towards the smallest value. Median keeps every position holding the
// median of the distinct values; for an even number of distinct values the
// lower middle is used so the median is an attained observation.
AttentionIndexSet select_attention(const TimeSeries& x, const AttentionKind& kind);

// Multiscale coarse-graining: means of consecutive non-overlapping blocks of
// length tau. The trailing remainder of length N mod tau is discarded.
CoarseSeries coarse_grain_ms(const TimeSeries& x, ScaleFactor tau);

// Attention-scale coarse-graining: with attention indices I_1 < ... < I_M and
// the convention I_0 = 0, output value i (1 <= i <= floor(M/tau)) is the mean
// of x over positions I_{(i-1)tau}+1 .. I_{i tau}. Observations past the last
// segment boundary are discarded. With kind All this reproduces
// coarse_grain_ms bit for bit.
CoarseSeries coarse_grain_attention(const TimeSeries& x, const AttentionKind& kind,
                                    ScaleFactor tau);

}  // namespace laas
