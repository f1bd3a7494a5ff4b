#pragma once

// LSB-replacement detectors used to compare embedders.
//
// RS: each row is cut into non-overlapping groups of 4 pixels. Smoothness is
// f(G) = sum |x[i+1] - x[i]|. F1 swaps 2k <-> 2k+1, F-1 swaps 2k <-> 2k-1
// (unclipped). The mask [0,1,1,0] flips the two middle pixels; a group is
// regular when f grows after flipping, singular when it shrinks.
//
// WS: each interior pixel is predicted by the mean of its 4 orthogonal
// neighbours and weighted by 1 / (5 + variance of those neighbours).

#include <array>
#include <optional>

#include "fibsteg/image.hpp"

namespace fibsteg {

using RsMask = std::array<int, 4>;
inline constexpr RsMask kDefaultRsMask{0, 1, 1, 0};

struct RsReport {
  double rm = 0.0;
  double sm = 0.0;
  double rm_neg = 0.0;
  double sm_neg = 0.0;
  // nullopt when the length estimator's quadratic is degenerate or has no
  // real root.
  std::optional<double> estimated_payload;
};

struct WsReport {
  double raw_estimate = 0.0;
  double estimated_payload = 0.0;  // raw_estimate clamped to [0, 1]
};

// Flip helpers on a single value. flip_neg may leave [0, 255].
constexpr int flip_pos(int x) noexcept { return x ^ 1; }
constexpr int flip_neg(int x) noexcept { return ((x + 1) ^ 1) - 1; }

// Applies F1 to every pixel.
GrayImage flip_all_lsbs(const GrayImage& img);

// Fills rm, sm, rm_neg, sm_neg. Requires an 8-bit image at least 4 wide.
RsReport rs_statistics(const GrayImage& img, const RsMask& mask = kDefaultRsMask);

// Solves 2(d1 + d0)x^2 + (dn0 - dn1 - d1 - 3 d0)x + (d0 - dn0) = 0, where
// d = RM - SM and dn = RM- - SM- on the image (0) and on its LSB-flipped copy
// (1). Takes the root of smaller magnitude and returns x / (x - 1/2) clamped
// to [0, 1]; nullopt for a degenerate quadratic or complex roots.
std::optional<double> rs_payload_from_differences(double d0, double dn0, double d1, double dn1);

// Payload fraction in [0, 1] from the RS quadratic, or nullopt.
std::optional<double> rs_estimate_length(const GrayImage& img);

// rs_statistics plus the length estimate.
RsReport rs_analyze(const GrayImage& img);

// Requires an 8-bit image of at least 3x3.
WsReport ws_estimate(const GrayImage& img);

}  // namespace fibsteg
