#include "fibsteg/steganalysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fibsteg/errors.hpp"

namespace fibsteg {
namespace {

void require_8bit(const GrayImage& img, const char* who) {
  if (img.depth() != BitDepth::k8) {
    throw InputError(std::string(who) + " is defined for 8-bit images only");
  }
}

int smoothness(const std::array<int, 4>& g) {
  return std::abs(g[1] - g[0]) + std::abs(g[2] - g[1]) + std::abs(g[3] - g[2]);
}

int apply_flip(int x, int m) {
  if (m > 0) return flip_pos(x);
  if (m < 0) return flip_neg(x);
  return x;
}

}  // namespace

GrayImage flip_all_lsbs(const GrayImage& img) {
  GrayImage out = img;
  for (auto& p : out.pixels()) p = static_cast<std::uint16_t>(p ^ 1u);
  return out;
}

RsReport rs_statistics(const GrayImage& img, const RsMask& mask) {
  require_8bit(img, "RS analysis");
  if (img.width() < 4 || img.height() == 0) throw InputError("RS analysis needs images at least 4 pixels wide");

  std::size_t groups = 0, reg = 0, sing = 0, reg_neg = 0, sing_neg = 0;
  std::array<int, 4> g{}, pos{}, neg{};
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 0; x + 4 <= img.width(); x += 4) {
      for (int i = 0; i < 4; ++i) {
        g[i] = img.at(x + static_cast<std::size_t>(i), y);
        pos[i] = apply_flip(g[i], mask[i]);
        neg[i] = apply_flip(g[i], -mask[i]);
      }
      const int f0 = smoothness(g);
      const int fp = smoothness(pos);
      const int fn = smoothness(neg);
      ++groups;
      reg += fp > f0;
      sing += fp < f0;
      reg_neg += fn > f0;
      sing_neg += fn < f0;
    }
  }
  const auto total = static_cast<double>(groups);
  RsReport r;
  r.rm = static_cast<double>(reg) / total;
  r.sm = static_cast<double>(sing) / total;
  r.rm_neg = static_cast<double>(reg_neg) / total;
  r.sm_neg = static_cast<double>(sing_neg) / total;
  return r;
}

std::optional<double> rs_payload_from_differences(double d0, double dn0, double d1, double dn1) {
  const double a = 2.0 * (d1 + d0);
  const double b = dn0 - dn1 - d1 - 3.0 * d0;
  const double c = d0 - dn0;
  if (std::abs(a) < 1e-12) return std::nullopt;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double r1 = (-b + sq) / (2.0 * a);
  const double r2 = (-b - sq) / (2.0 * a);
  const double x = std::abs(r1) <= std::abs(r2) ? r1 : r2;
  if (std::abs(x - 0.5) < 1e-12) return std::nullopt;
  return std::clamp(x / (x - 0.5), 0.0, 1.0);
}

std::optional<double> rs_estimate_length(const GrayImage& img) {
  const RsReport base = rs_statistics(img);
  const RsReport flipped = rs_statistics(flip_all_lsbs(img));
  return rs_payload_from_differences(base.rm - base.sm, base.rm_neg - base.sm_neg, flipped.rm - flipped.sm,
                                     flipped.rm_neg - flipped.sm_neg);
}

RsReport rs_analyze(const GrayImage& img) {
  RsReport r = rs_statistics(img);
  r.estimated_payload = rs_estimate_length(img);
  return r;
}

WsReport ws_estimate(const GrayImage& img) {
  require_8bit(img, "WS analysis");
  if (img.width() < 3 || img.height() < 3) throw InputError("WS analysis needs at least one interior pixel (3x3)");

  double weight_sum = 0.0;
  double acc = 0.0;
  for (std::size_t y = 1; y + 1 < img.height(); ++y) {
    for (std::size_t x = 1; x + 1 < img.width(); ++x) {
      const double n[4] = {static_cast<double>(img.at(x, y - 1)), static_cast<double>(img.at(x, y + 1)),
                           static_cast<double>(img.at(x - 1, y)), static_cast<double>(img.at(x + 1, y))};
      const double pred = (n[0] + n[1] + n[2] + n[3]) / 4.0;
      double var = 0.0;
      for (double v : n) var += (v - pred) * (v - pred);
      var /= 4.0;
      const double w = 1.0 / (5.0 + var);
      const int s = img.at(x, y);
      const double s_minus_flip = (s & 1) ? 1.0 : -1.0;
      acc += w * (s - pred) * s_minus_flip;
      weight_sum += w;
    }
  }
  WsReport r;
  r.raw_estimate = 2.0 * acc / weight_sum;
  r.estimated_payload = std::clamp(r.raw_estimate, 0.0, 1.0);
  return r;
}

}  // namespace fibsteg
