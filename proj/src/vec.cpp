#include "mobnet/vec.hpp"

#include <cmath>

namespace mobnet {

Vec::Vec(std::initializer_list<double> values)
    : dim_(static_cast<std::uint8_t>(values.size())) {
  assert(values.size() >= 1 && values.size() <= kMaxDim);
  std::size_t i = 0;
  for (double v : values) c_[i++] = v;
}

Vec& Vec::operator+=(const Vec& o) {
  assert(dim_ == o.dim_);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  assert(dim_ == o.dim_);
  for (std::size_t i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(double s) {
  for (std::size_t i = 0; i < dim_; ++i) c_[i] *= s;
  return *this;
}

bool Vec::is_finite() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!std::isfinite(c_[i])) return false;
  }
  return true;
}

bool operator==(const Vec& a, const Vec& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t i = 0; i < a.dim_; ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }
Vec operator-(Vec a) { return a *= -1.0; }
Vec operator*(Vec a, double s) { return a *= s; }
Vec operator*(double s, Vec a) { return a *= s; }

double dot(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += a[i] * b[i];
  return acc;
}

double squared_norm(const Vec& v) { return dot(v, v); }

double norm(const Vec& v) { return std::sqrt(squared_norm(v)); }

double squared_distance(const Vec& a, const Vec& b) { return squared_norm(b - a); }

Direction Direction::first_axis(std::size_t dim) {
  Vec v(dim);
  v[0] = 1.0;
  return Direction(v);
}

Direction direction_from_angles(double azimuth, double elevation, std::size_t dim) {
  assert(dim == 2 || dim == 3);
  if (dim == 2) return Direction(Vec{std::cos(azimuth), std::sin(azimuth)});
  const double ce = std::cos(elevation);
  return Direction(Vec{std::cos(azimuth) * ce, std::sin(azimuth) * ce, std::sin(elevation)});
}

std::optional<Direction> direction_toward(const Vec& from, const Vec& to, double epsilon) {
  Vec diff = to - from;
  const double len = norm(diff);
  if (!(len > epsilon)) return std::nullopt;
  diff *= 1.0 / len;
  return Direction(diff);
}

}  // namespace mobnet
