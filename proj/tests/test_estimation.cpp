#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "mobnet/estimation.hpp"
#include "mobnet/kernels.hpp"

using namespace mobnet;

namespace {

std::vector<double> row_from(const std::vector<Vec>& pts, std::size_t k) {
  std::vector<double> row;
  for (const auto& p : pts) row.push_back(squared_distance(pts[k], p));
  return row;
}

Measurement noiseless(const Vec& x, const Vec& target) {
  Rng rng = make_substream(0, 0);
  return measure(x, target, 0.0, rng);
}

}  // namespace

TEST_SUITE("estimation") {

TEST_CASE("is_far_field") {
  CHECK(is_far_field(Vec{120.0, 120.0}, Vec{0.0, 0.0}, 400.0));
  CHECK_FALSE(is_far_field(Vec{3.0, 4.0}, Vec{3.0, 4.0}, 1e-6));
  // |(12, 16)|^2 = 400: the boundary itself is not far.
  CHECK_FALSE(is_far_field(Vec{12.0, 16.0}, Vec{0.0, 0.0}, 400.0));
  CHECK(is_far_field(Vec{12.0, 16.0}, Vec{0.0, 0.0}, 399.999));
}

TEST_CASE("update_step_size") {
  StepSizePolicy p;
  p.alpha = 1.2;
  p.mu_max = 1.0;
  p.beta = 0.85;
  p.gamma = 0.001;
  p.mu_min = 0.05;
  CHECK(update_step_size(0.5, true, 0.0, p) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(update_step_size(0.9, true, 0.0, p) == 1.0);
  CHECK(update_step_size(0.5, false, 2.0, p) == doctest::Approx(0.429).epsilon(1e-15));
  p.gamma = 0.0;
  CHECK(update_step_size(0.05, false, 123.0, p) == 0.05);
  SUBCASE("near branch never exceeds mu_max") {
    p.gamma = 0.001;
    CHECK(update_step_size(0.5, false, 163.0, p) == 1.0);
  }
}

TEST_CASE("step-size clamps hold for random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  StepSizePolicy p;
  for (int i = 0; i < 20000; ++i) {
    const double mu_prev = 1e-4 + 3.0 * unit(rng);
    const double e = (unit(rng) - 0.5) * 400.0;
    const double far = update_step_size(mu_prev, true, e, p);
    const double near = update_step_size(mu_prev, false, e, p);
    CHECK(far <= p.mu_max);
    CHECK(near >= p.mu_min);
    CHECK(near <= p.mu_max);
    // Monotone in mu_prev within each branch.
    CHECK(update_step_size(mu_prev * 1.1, true, e, p) >= far);
    CHECK(update_step_size(mu_prev * 1.1, false, e, p) >= near);
  }
}

TEST_CASE("a_priori_error") {
  const auto u = *direction_toward(Vec{0.0, 0.0}, Vec{1.0, 0.0});
  const Vec w{120.0, 120.0};
  CHECK(a_priori_error(dot(u, w), u, w) == 0.0);
  CHECK(a_priori_error(125.0, u, w) == 5.0);
  const Vec target{120.0, 120.0};
  const auto m = noiseless(Vec{3.0, 9.0}, target);
  CHECK(a_priori_error(m.d, m.u, target) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("update_variance_estimate") {
  CHECK(update_variance_estimate(9.0, 3.0, 0.9) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(update_variance_estimate(0.0, 2.0, 0.9) == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("variance tracker converges to the residual variance") {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> residual(0.0, std::sqrt(288.0));
  // One sample of the tracker fluctuates by about 23% at eta = 0.95; its
  // long-run average is unbiased.
  double s2 = 0.0;
  double sum = 0.0;
  for (int i = 0; i < 20000; ++i) {
    s2 = update_variance_estimate(s2, residual(rng), 0.95);
    if (i >= 1000) sum += s2;
  }
  CHECK(std::abs(sum / 19000.0 - 288.0) / 288.0 <= 0.03);
}

TEST_CASE("select_neighbors") {
  // k = 0 at origin; a, b, c inside R = 6, d outside.
  const std::vector<Vec> pts{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {-3.0, 0.0}, {7.0, 0.0}};
  const auto row = row_from(pts, 0);

  SUBCASE("isolated node keeps only itself") {
    const std::vector<Vec> far{{0.0, 0.0}, {10.0, 0.0}, {0.0, -6.5}};
    const std::vector<double> var{1.0, 0.0, 0.0};
    CHECK(select_neighbors(0, row_from(far, 0), var, 6.0) == NeighborSet{0});
  }
  SUBCASE("equal variance is included") {
    const std::vector<double> var{5.0, 5.0, 9.0, 9.0, 0.0};
    CHECK(select_neighbors(0, row, var, 6.0) == NeighborSet{0, 1});
  }
  SUBCASE("variance ranking") {
    const std::vector<double> var{5.0, 4.0, 5.0, 6.0, 0.0};
    CHECK(select_neighbors(0, row, var, 6.0) == NeighborSet{0, 1, 2});
  }
  SUBCASE("candidate limit keeps the nearest before filtering") {
    const std::vector<double> var{5.0, 9.0, 1.0, 1.0, 0.0};
    CHECK(select_neighbors(0, row, var, 6.0, 2) == NeighborSet{0, 2});
    CHECK(select_neighbors(0, row, var, 6.0, 0) == NeighborSet{0, 2, 3});
  }
}

TEST_CASE("knn_neighbors") {
  const std::vector<Vec> lonely{{0.0, 0.0}, {50.0, 0.0}};
  CHECK(knn_neighbors(0, row_from(lonely, 0), 4, 6.0) == NeighborSet{0});

  std::vector<Vec> pts{{0.0, 0.0}};
  for (int j = 1; j <= 10; ++j) pts.push_back({0.5 * j, 0.0});  // 0.5 .. 5.0, all within 6
  CHECK(knn_neighbors(0, row_from(pts, 0), 4, 6.0) == NeighborSet{0, 1, 2, 3, 4});

  // Ids 2 and 3 equidistant and competing for the last slot.
  const std::vector<Vec> tie{{0.0, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {0.0, -2.0}};
  CHECK(knn_neighbors(0, row_from(tie, 0), 2, 6.0) == NeighborSet{0, 1, 2});
}

TEST_CASE("uniform_weights") {
  CHECK(uniform_weights({3}).weights == std::vector<double>{1.0});
  const auto w5 = uniform_weights({0, 1, 2, 3, 4});
  for (double w : w5.weights) CHECK(w == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("adapt") {
  const Vec target{120.0, 120.0};
  const std::vector<Measurement> meas{noiseless(Vec{0.0, 0.0}, target),
                                      noiseless(Vec{200.0, 0.0}, target)};
  const NeighborSet both{0, 1};
  const auto c = uniform_weights(both);
  const Vec w{10.0, -4.0};
  CHECK(adapt(w, 0.0, both, meas, c) == w);
  CHECK(adapt(target, 0.7, both, meas, c)[0] == doctest::Approx(120.0).epsilon(1e-14));

  SUBCASE("single moving node converges on noiseless data") {
    // Node circles the target so the bearing sweeps all directions.
    Vec west{0.0, 0.0};
    for (int i = 0; i < 500; ++i) {
      const double a = 0.37 * i;
      const Vec x = target + Vec{30.0 * std::cos(a), 30.0 * std::sin(a)};
      const std::vector<Measurement> m{noiseless(x, target)};
      west = adapt(west, 0.5, NeighborSet{0}, m, uniform_weights({0}));
    }
    CHECK(norm(west - target) < 1e-3);
  }
}

TEST_CASE("combine") {
  const std::vector<Vec> m{{1.0, 2.0}, {3.0, -2.0}, {5.0, 5.0}};
  CHECK(combine({2}, m, uniform_weights({2})) == m[2]);
  CHECK(combine({0, 1}, m, uniform_weights({0, 1})) == Vec{2.0, 0.0});
  const std::vector<Vec> same(4, Vec{7.25, -1.5});
  const auto c = combine({0, 1, 2, 3}, same, uniform_weights({0, 1, 2, 3}));
  CHECK(c == same[0]);
}

TEST_CASE("three-node static network matches centralized LMS") {
  // Oracle: plain gradient descent on (1/3) sum_k (d_k - u_k . w)^2, written
  // with raw arrays and its own bearings.
  const std::array<std::array<double, 2>, 3> pos{{{0.0, 0.0}, {240.0, 0.0}, {120.0, 260.0}}};
  const std::array<double, 2> wo{120.0, 120.0};
  std::array<std::array<double, 2>, 3> ou{};
  std::array<double, 3> od{};
  for (int k = 0; k < 3; ++k) {
    const double dx = wo[0] - pos[k][0];
    const double dy = wo[1] - pos[k][1];
    const double len = std::hypot(dx, dy);
    ou[k] = {dx / len, dy / len};
    od[k] = ou[k][0] * wo[0] + ou[k][1] * wo[1];
  }
  const double mu = 0.1;
  std::array<double, 2> oracle{0.0, 0.0};

  const Vec target{wo[0], wo[1]};
  std::vector<Measurement> meas;
  for (const auto& p : pos) meas.push_back(noiseless(Vec{p[0], p[1]}, target));
  std::vector<Vec> w(3, Vec{0.0, 0.0});
  const NeighborSet all{0, 1, 2};
  const auto c = uniform_weights(all);

  double prev_err = norm(w[0] - target);
  for (int i = 0; i < 100; ++i) {
    std::array<double, 2> g{0.0, 0.0};
    for (int k = 0; k < 3; ++k) {
      const double e = od[k] - (ou[k][0] * oracle[0] + ou[k][1] * oracle[1]);
      g[0] += ou[k][0] * e / 3.0;
      g[1] += ou[k][1] * e / 3.0;
    }
    oracle = {oracle[0] + mu * g[0], oracle[1] + mu * g[1]};

    std::vector<Vec> m(3);
    for (std::size_t k = 0; k < 3; ++k) m[k] = adapt(w[k], mu, all, meas, c);
    for (std::size_t k = 0; k < 3; ++k) w[k] = combine(all, m, c);

    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(std::abs(w[k][0] - oracle[0]) <= 1e-10);
      CHECK(std::abs(w[k][1] - oracle[1]) <= 1e-10);
    }
    // Bearing covariance here is diag(1, 2)/3, so the error contracts by at
    // least 1 - mu/3 per iteration.
    const double err = norm(w[0] - target);
    CHECK(err <= prev_err * (1.0 - mu / 3.0) + 1e-9);
    prev_err = err;
  }
}

TEST_CASE("structural properties over random neighborhoods") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> coord(0.0, 20.0);
  std::uniform_real_distribution<double> var(0.0, 50.0);
  std::uniform_int_distribution<int> count(1, 40);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(count(rng));
    PointSet pts(n, 2);
    std::vector<double> variances(n);
    for (std::size_t j = 0; j < n; ++j) {
      pts.set(j, Vec{coord(rng), coord(rng)});
      variances[j] = var(rng);
    }
    std::vector<double> sq(n * n);
    kernels().pairwise_sq(pts, sq);
    const std::size_t k = rng() % n;
    const std::span<const double> row(sq.data() + k * n, n);

    const auto ball = radius_neighbors(k, row, 6.0);
    for (const auto& set : {select_neighbors(k, row, variances, 6.0),
                            select_neighbors(k, row, variances, 6.0, 4),
                            knn_neighbors(k, row, 4, 6.0), ball}) {
      CHECK(std::binary_search(set.begin(), set.end(), k));
      CHECK(std::includes(ball.begin(), ball.end(), set.begin(), set.end()));
      const auto w = uniform_weights(set);
      double sum = 0.0;
      for (double x : w.weights) sum += x;
      CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
    CHECK(knn_neighbors(k, row, 4, 6.0).size() <= 5);
  }
}

TEST_CASE("combine stays in the convex hull") {
  std::mt19937_64 rng(31415);
  std::uniform_real_distribution<double> coord(-500.0, 500.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<Vec> vals(n);
    NeighborSet all;
    for (std::size_t j = 0; j < n; ++j) {
      vals[j] = Vec{coord(rng), coord(rng), coord(rng)};
      all.push_back(j);
    }
    const Vec out = combine(all, vals, uniform_weights(all));
    for (std::size_t a = 0; a < 3; ++a) {
      double lo = vals[0][a];
      double hi = vals[0][a];
      for (const auto& v : vals) {
        lo = std::min(lo, v[a]);
        hi = std::max(hi, v[a]);
      }
      const double slack = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
      CHECK(out[a] >= lo - slack);
      CHECK(out[a] <= hi + slack);
    }
  }
}

}  // TEST_SUITE
