#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "topo/error.hpp"

namespace topo {

struct Vec2 {
  double x = 0;
  double y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

struct RotationIndex {
  int value = 0;
  friend bool operator==(const RotationIndex&, const RotationIndex&) = default;
};

/// Largest accepted turn between consecutive samples; coarser loops are
/// rejected so that the accumulated winding cannot alias.
inline constexpr double kMaxSampleTurn = std::numbers::pi / 2;

/// Degree of the direction map of a closed, counterclockwise loop of samples:
/// the sum of signed turns atan2(cross, dot) between consecutive samples
/// (including last -> first), divided by 2 pi.
inline RotationIndex rotation_index(std::span<const Vec2> samples) {
  const std::size_t n = samples.size();
  if (n < 3) throw InvalidInput("a loop needs at least 3 samples");
  for (std::size_t i = 0; i < n; ++i)
    if (samples[i].x == 0 && samples[i].y == 0) throw SamplingError(i, "zero vector sample");
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = samples[i];
    const Vec2& b = samples[(i + 1) % n];
    double turn = std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y);
    if (std::abs(turn) >= kMaxSampleTurn) throw SamplingError(i, "sampling too coarse; resample the loop");
    total += turn;
  }
  double turns = total / (2 * std::numbers::pi);
  double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) throw InvalidInput("loop does not close");
  return {static_cast<int>(rounded)};
}

/// Field values at n counterclockwise points of the circle of radius r about p.
template <class Field>
std::vector<Vec2> sample_circle(Field&& field, Vec2 p, double radius, std::size_t n) {
  if (radius <= 0) throw InvalidInput("radius must be positive");
  std::vector<Vec2> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    out.push_back(field(Vec2{p.x + radius * std::cos(t), p.y + radius * std::sin(t)}));
  }
  return out;
}

/// Rotation index of `field` around the circle of the given radius about p.
/// The circle must avoid every singular point and enclose only p.
template <class Field>
RotationIndex index_at_point(Field&& field, Vec2 p, double radius, std::size_t n_samples = 256) {
  auto samples = sample_circle(field, p, radius, n_samples);
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (samples[i].x == 0 && samples[i].y == 0) throw SamplingError(i, "field vanishes on the sampling circle");
  return rotation_index(samples);
}

/// Twice the signed area enclosed by a polygon; positive when counterclockwise.
inline double signed_area2(std::span<const Vec2> points) {
  double a = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec2& p = points[i];
    const Vec2& q = points[(i + 1) % points.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

struct PoincareHopfResult {
  bool ok = true;
  long long sum = 0;
  long long discrepancy = 0;  // sum - chi
};

inline PoincareHopfResult poincare_hopf_check(std::span<const int> indices, long long chi) {
  long long sum = 0;
  for (int i : indices) sum += i;
  return {sum == chi, sum, sum - chi};
}

}  // namespace topo
