#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vnorm/quadratic.hpp"

namespace vnorm {

enum class ScanKind {
  LinearMu,         // x + iy -> ||V + mu I||
  AffineNu,         // x + iy -> ||I + nu V||
  QuadSigmaTau,     // (sigma, tau) -> ||V^2 + sigma V + tau I||
  MonicXiEta,       // (xi, eta) -> ||I + xi V + eta V^2||
  CrouzeixSigmaTau, // (sigma, tau) -> ratio ||p(V)|| / max_W |p|
  CrouzeixRoots,    // real zeros (x1, x2) -> ratio
  CrouzeixConj,     // conjugate zeros a +- ib -> ratio
  FlatRegion,       // (xi, eta) -> 1 inside the flat-norm region else 0
};

enum class ScanFormat { Csv, Ndjson };

struct ScanConfig {
  double x_min = -1.0, x_max = 1.0;
  double y_min = -1.0, y_max = 1.0;
  int nx = 100, ny = 100;
  ScanFormat format = ScanFormat::Csv;
  int jobs = 0;        // <= 0: all hardware threads
  double tol = 1e-12;  // root-solver tolerance for the quadratic kinds
  bool refine = true;  // crouzeix kinds: one level of 10x-finer local refinement
};

struct ScanCell {
  double x = 0.0, y = 0.0, value = 0.0;
  QuadStatus status = QuadStatus::ClosedForm;
};

struct ScanResult {
  ScanKind kind = ScanKind::LinearMu;
  int nx = 0, ny = 0;
  bool has_status = false;
  std::vector<ScanCell> cells;  // row-major: y outer, x inner
  std::size_t min_index = 0, max_index = 0;
  bool refined = false;  // filled for crouzeix kinds when cfg.refine
  double refined_x = 0.0, refined_y = 0.0, refined_value = 0.0;
};

const char* scan_kind_name(ScanKind kind);
std::optional<ScanKind> scan_kind_from_name(const std::string& name);
bool scan_kind_has_status(ScanKind kind);

// Evaluates the grid (inclusive endpoints, x fastest) in parallel; throws
// std::invalid_argument on a malformed config. Output ordering is independent
// of the number of jobs.
ScanResult run_scan(ScanKind kind, const ScanConfig& cfg);

// CSV: header exactly "x,y,value" plus ",status" for the quadratic kinds,
// numbers at 17 significant digits. NDJSON: one object per cell, same keys.
void write_scan(const ScanResult& result, ScanFormat format, std::ostream& os);

// A ready-to-run gnuplot heat-map script for a CSV scan written to data_path.
std::string gnuplot_script(const ScanResult& result, const std::string& data_path);

struct BoundaryRow {
  double t = 0.0;
  const char* branch = "";
  double re = 0.0, im = 0.0;
};

// `samples` points per boundary branch (t equally spaced on [0, 2*pi]) plus
// the two endpoints of the vertical segment.
std::vector<BoundaryRow> boundary_table(int samples);

void write_boundary(const std::vector<BoundaryRow>& rows, ScanFormat format, std::ostream& os);

}  // namespace vnorm
