#pragma once

// CSV emission. Column sets are fixed:
//   metrics:  iteration,msd,mean_mu,mean_neighbor_count,mean_distance_to_target
//   snapshot: node_id,x0,x1[,x2],v0,v1[,v2],w0,w1[,w2]
// Reals are printed with 9 significant digits.

#include <filesystem>
#include <ostream>
#include <span>

#include "mobnet/simulation.hpp"

namespace mobnet {

void write_metrics_csv(std::ostream& out, std::span<const MetricsFrame> frames);
void write_snapshot_csv(std::ostream& out, const MetricsFrame& frame, std::size_t dim);

/// File variants; throw IoError with the path on failure.
void write_metrics_csv(const std::filesystem::path& path, std::span<const MetricsFrame> frames);
void write_snapshot_csv(const std::filesystem::path& path, const MetricsFrame& frame,
                        std::size_t dim);

}  // namespace mobnet
