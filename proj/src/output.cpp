#include "mobnet/output.hpp"

#include <cstdio>
#include <fstream>

#include "mobnet/config_io.hpp"

namespace mobnet {
namespace {

void put(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  out << buf;
}

void put_vec(std::ostream& out, const Vec& v) {
  for (std::size_t a = 0; a < v.dim(); ++a) {
    out << ',';
    put(out, v[a]);
  }
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  writer(out);
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void write_metrics_csv(std::ostream& out, std::span<const MetricsFrame> frames) {
  out << "iteration,msd,mean_mu,mean_neighbor_count,mean_distance_to_target\n";
  for (const auto& f : frames) {
    out << f.iteration << ',';
    put(out, f.msd);
    out << ',';
    put(out, f.mean_mu);
    out << ',';
    put(out, f.mean_neighbor_count);
    out << ',';
    put(out, f.mean_distance_to_target);
    out << '\n';
  }
}

void write_snapshot_csv(std::ostream& out, const MetricsFrame& frame, std::size_t dim) {
  out << "node_id";
  for (const char* name : {"x", "v", "w"}) {
    for (std::size_t a = 0; a < dim; ++a) out << ',' << name << a;
  }
  out << '\n';
  for (std::size_t k = 0; k < frame.nodes.size(); ++k) {
    const auto& node = frame.nodes[k];
    out << k;
    put_vec(out, node.x);
    put_vec(out, node.v);
    put_vec(out, node.w);
    out << '\n';
  }
}

void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsFrame> frames) {
  write_file(path, [&](std::ostream& out) { write_metrics_csv(out, frames); });
}

void write_snapshot_csv(const std::filesystem::path& path, const MetricsFrame& frame,
                        std::size_t dim) {
  write_file(path, [&](std::ostream& out) { write_snapshot_csv(out, frame, dim); });
}

}  // namespace mobnet
