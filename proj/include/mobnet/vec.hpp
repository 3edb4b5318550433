#pragma once

// Small fixed-capacity real vectors for 2D/3D positions, velocities and
// target estimates, plus the bearing (unit direction) type built on them.

#include <array>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>

namespace mobnet {

/// Distances at or below this are treated as coincident points.
inline constexpr double kCoincidenceEpsilon = 1e-9;

class Vec {
 public:
  static constexpr std::size_t kMaxDim = 3;

  Vec() = default;
  /// Zero vector of the given dimension.
  explicit Vec(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) {
    assert(dim >= 1 && dim <= kMaxDim);
  }
  Vec(std::initializer_list<double> values);

  std::size_t dim() const { return dim_; }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }

  std::span<const double> components() const { return {c_.data(), dim_}; }

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(double s);

  bool is_finite() const;

  friend bool operator==(const Vec& a, const Vec& b);

 private:
  std::array<double, kMaxDim> c_{};
  std::uint8_t dim_ = 0;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(Vec a, double s);
Vec operator*(double s, Vec a);

double dot(const Vec& a, const Vec& b);
double squared_norm(const Vec& v);
double norm(const Vec& v);
double squared_distance(const Vec& a, const Vec& b);

/// A unit-norm direction. Only constructible through the factories below, so
/// holding one means the norm is 1 up to rounding.
class Direction {
 public:
  const Vec& vec() const { return v_; }
  std::size_t dim() const { return v_.dim(); }
  double operator[](std::size_t i) const { return v_[i]; }

  /// Unit vector along the first axis.
  static Direction first_axis(std::size_t dim);

 private:
  explicit Direction(const Vec& v) : v_(v) {}
  friend Direction direction_from_angles(double, double, std::size_t);
  friend std::optional<Direction> direction_toward(const Vec&, const Vec&, double);

  Vec v_;
};

/// Bearing from azimuth/elevation. In 3D: [cos az cos el, sin az cos el, sin el].
/// In 2D the elevation is ignored: [cos az, sin az].
Direction direction_from_angles(double azimuth, double elevation, std::size_t dim);

/// (to - from)/|to - from|, or nullopt when the points are within epsilon.
std::optional<Direction> direction_toward(const Vec& from, const Vec& to,
                                          double epsilon = kCoincidenceEpsilon);

inline double dot(const Direction& u, const Vec& v) { return dot(u.vec(), v); }

}  // namespace mobnet
