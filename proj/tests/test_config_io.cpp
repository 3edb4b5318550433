#include <doctest.h>

#include <sstream>
#include <string>

#include "mobnet/config_io.hpp"
#include "mobnet/output.hpp"

using namespace mobnet;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_config(text, "cfg");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("config_io") {

TEST_CASE("empty file yields the defaults") {
  const SimConfig c = parse_config("");
  CHECK(c.mode == Mode::proposed);
  CHECK(c.dim == 2);
  CHECK(c.n_nodes == 50);
  CHECK(c.target == Vec{120.0, 120.0});
  CHECK(c.kappa == 0.01);
  CHECK(c.radius == 6.0);
  CHECK(c.motion_policy.spacing == 2.0);
  CHECK(c.motion_policy.dt == 0.5);
  CHECK(c.motion_policy.delta == 0.5);
  CHECK(c.motion_policy.xi1 == 0.8);
  CHECK(c.motion_policy.xi2 == 0.5);
  CHECK(c.motion_policy.xi3 == 0.8);
  CHECK(c.step_policy.beta == 0.85);
  CHECK(c.step_policy.gamma == 0.001);
  CHECK(c.baseline_mu == 0.5);
  CHECK(c.baseline_k == 4);
  CHECK(c.init_cube_side == 10.0);
  CHECK(c.n_runs == 50);
  CHECK(c.n_iterations == 300);
}

TEST_CASE("values, comments and vectors") {
  const SimConfig c = parse_config(
      "# comment line\n"
      "mode = baseline_atc   # trailing comment\n"
      "dim = 3\n"
      "target = [120, 120, 40]\n"
      "init.w = 1, 2, 3\n"
      "motion.xi3 = 0.25\n"
      "step.far_threshold = 900\n"
      "run.base_seed = 12345678901\n"
      "selection.scope = all_neighbor_uses\n");
  CHECK(c.mode == Mode::baseline_atc);
  CHECK(c.target == Vec{120.0, 120.0, 40.0});
  CHECK(c.w_init == Vec{1.0, 2.0, 3.0});
  CHECK(c.motion_policy.xi3 == 0.25);
  CHECK(c.step_policy.far_threshold == 900.0);
  CHECK(c.base_seed == 12345678901ULL);
  CHECK(c.selective_scope == SelectiveScope::all_neighbor_uses);
}

TEST_CASE("validation and parse errors name their cause") {
  CHECK(error_of("sensing.kappa = -1\n").find("sensing.kappa") != std::string::npos);
  CHECK(error_of("dim = 3\ntarget = 120, 120\n").find("dimension mismatch") != std::string::npos);
  CHECK(error_of("\n\nbogus.key = 1\n").find("cfg:3: unknown key 'bogus.key'") != std::string::npos);
  CHECK(error_of("motion.xi1 = fast\n").find("cfg:1: motion.xi1") != std::string::npos);
  CHECK(error_of("nodes 50\n").find("cfg:1: expected 'key = value'") != std::string::npos);
  CHECK(error_of("nodes = 5\nnodes = 6\n").find("duplicate") != std::string::npos);
  CHECK(error_of("step.alpha = 0.9\n").find("step.alpha") != std::string::npos);
  CHECK(error_of("step.mu_min = 2\n").find("step.mu_max") != std::string::npos);
  CHECK(error_of("variance.eta = 1\n").find("variance.eta") != std::string::npos);
  CHECK(error_of("mode = fastest\n").find("proposed or baseline_atc") != std::string::npos);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_config("/nonexistent/dir/cfg.txt"), IoError);
}

TEST_CASE("format_config output parses back to the same configuration") {
  SimConfig c;
  c.dim = 3;
  c.target = Vec{1.0 / 3.0, -2.5e-7, 1e5};
  c.w_init = Vec{0.1, 0.2, 0.3};
  c.step_policy.alpha = 1.0 + 1e-13;
  c.mode = Mode::baseline_atc;
  c.collision_k = 0;
  const SimConfig back = parse_config(format_config(c));
  CHECK(format_config(back) == format_config(c));
  CHECK(back.target == c.target);
  CHECK(back.step_policy.alpha == c.step_policy.alpha);
}

TEST_CASE("iteration lists") {
  CHECK(parse_iteration_list("1,50,150,300") == std::vector<std::size_t>{1, 50, 150, 300});
  CHECK(parse_iteration_list(" 7 ") == std::vector<std::size_t>{7});
  CHECK(parse_iteration_list("").empty());
  CHECK_THROWS_AS(parse_iteration_list("1,,2"), ConfigError);
  CHECK_THROWS_AS(parse_iteration_list("-3"), ConfigError);
}

TEST_CASE("csv schemas") {
  MetricsFrame f;
  f.iteration = 3;
  f.msd = 1.0 / 3.0;
  f.mean_mu = 0.05;
  f.mean_neighbor_count = 3.5;
  f.mean_distance_to_target = 162.968031234;
  f.nodes = {{Vec{1.0, 2.0}, Vec{0.5, -0.5}, Vec{120.0, 119.5}}};
  std::ostringstream metrics;
  const std::vector<MetricsFrame> frames{f};
  write_metrics_csv(metrics, frames);
  CHECK(metrics.str() ==
        "iteration,msd,mean_mu,mean_neighbor_count,mean_distance_to_target\n"
        "3,0.333333333,0.05,3.5,162.968031\n");

  std::ostringstream snap;
  write_snapshot_csv(snap, f, 2);
  CHECK(snap.str() == "node_id,x0,x1,v0,v1,w0,w1\n0,1,2,0.5,-0.5,120,119.5\n");
}

}  // TEST_SUITE
