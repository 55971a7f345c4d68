#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "varpde/conservation.hpp"
#include "varpde/dispersion.hpp"
#include "varpde/grid.hpp"

namespace varpde {

/// Snapshot file: "VARPDE1 <nx> <ny> <t>" then nx*ny values, x fastest,
/// 17 significant digits. 1D fields use ny = 1.
struct Snapshot {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double t = 0.0;
  std::vector<double> values;
};

void write_snapshot(const std::string& path, const Field1D& field, double t);
void write_snapshot(const std::string& path, const Field2D& field, double t);
/// Throws Error(Io) naming the path and the offending line.
Snapshot read_snapshot(const std::string& path);

void write_invariants(const std::string& path, const InvariantSeries1D& series);
void write_invariants(const std::string& path, const InvariantSeries2D& series);

/// Rows "xi,tau,branch" for each real root of the curve (samples without a
/// real root are omitted), then the experimental peaks with branch
/// "experimental".
void write_dispersion(const std::string& path, const DispersionCurve& curve,
                      std::span<const SpectralPeak> peaks = {});

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column by header name, converted to double; throws Error(Io).
  std::vector<double> numeric_column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

/// Text form of v with 17 significant digits.
std::string format_value(double v);

}  // namespace varpde
