#include "vnorm/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "vnorm/numrange.hpp"
#include "vnorm/parallel.hpp"

namespace vnorm {

namespace {

struct KindName {
  ScanKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {ScanKind::LinearMu, "linear-mu"},
    {ScanKind::AffineNu, "affine-nu"},
    {ScanKind::QuadSigmaTau, "quad-sigma-tau"},
    {ScanKind::MonicXiEta, "monic-xi-eta"},
    {ScanKind::CrouzeixSigmaTau, "crouzeix-sigma-tau"},
    {ScanKind::CrouzeixRoots, "crouzeix-roots"},
    {ScanKind::CrouzeixConj, "crouzeix-conj"},
    {ScanKind::FlatRegion, "flat-region"},
};

double cell_value(ScanKind kind, double x, double y, double tol, QuadStatus* status) {
  switch (kind) {
    case ScanKind::LinearMu:
      return norm_linear({x, y}).norm;
    case ScanKind::AffineNu:
      return norm_affine({x, y});
    case ScanKind::QuadSigmaTau: {
      QuadSolveOptions opts;
      opts.tol = tol;
      const NormResult r = norm_quadratic({x, y}, opts);
      *status = r.status;
      return r.norm;
    }
    case ScanKind::MonicXiEta: {
      QuadSolveOptions opts;
      opts.tol = tol;
      const NormResult r = norm_monic_quadratic_full({x, y}, opts);
      *status = r.status;
      return r.norm;
    }
    case ScanKind::CrouzeixSigmaTau:
      return crouzeix_ratio({x, y}).ratio;
    case ScanKind::CrouzeixRoots:
      return crouzeix_ratio(roots_to_coeffs(RootsKind::RealPair, x, y)).ratio;
    case ScanKind::CrouzeixConj:
      return crouzeix_ratio(roots_to_coeffs(RootsKind::ConjugatePair, x, y)).ratio;
    case ScanKind::FlatRegion:
      return flat_region_contains({x, y}) ? 1.0 : 0.0;
  }
  return 0.0;
}

bool is_crouzeix(ScanKind kind) {
  return kind == ScanKind::CrouzeixSigmaTau || kind == ScanKind::CrouzeixRoots ||
         kind == ScanKind::CrouzeixConj;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const char* scan_kind_name(ScanKind kind) {
  for (const KindName& k : kKindNames) {
    if (k.kind == kind) return k.name;
  }
  return "unknown";
}

std::optional<ScanKind> scan_kind_from_name(const std::string& name) {
  for (const KindName& k : kKindNames) {
    if (name == k.name) return k.kind;
  }
  return std::nullopt;
}

bool scan_kind_has_status(ScanKind kind) {
  return kind == ScanKind::QuadSigmaTau || kind == ScanKind::MonicXiEta;
}

ScanResult run_scan(ScanKind kind, const ScanConfig& cfg) {
  if (!(cfg.x_min < cfg.x_max) || !(cfg.y_min < cfg.y_max)) {
    throw std::invalid_argument("run_scan: need x_min < x_max and y_min < y_max");
  }
  if (cfg.nx < 2 || cfg.ny < 2) throw std::invalid_argument("run_scan: need nx, ny >= 2");

  ScanResult out;
  out.kind = kind;
  out.nx = cfg.nx;
  out.ny = cfg.ny;
  out.has_status = scan_kind_has_status(kind);
  out.cells.resize(static_cast<std::size_t>(cfg.nx) * cfg.ny);

  const double step_x = (cfg.x_max - cfg.x_min) / (cfg.nx - 1);
  const double step_y = (cfg.y_max - cfg.y_min) / (cfg.ny - 1);
  parallel_for(out.cells.size(), cfg.jobs, [&](std::size_t idx) {
    const int j = static_cast<int>(idx) / cfg.nx;
    const int i = static_cast<int>(idx) % cfg.nx;
    ScanCell& cell = out.cells[idx];
    cell.x = i == cfg.nx - 1 ? cfg.x_max : cfg.x_min + step_x * i;
    cell.y = j == cfg.ny - 1 ? cfg.y_max : cfg.y_min + step_y * j;
    QuadStatus status = QuadStatus::ClosedForm;
    cell.value = cell_value(kind, cell.x, cell.y, cfg.tol, &status);
    cell.status = status;
  });

  for (std::size_t idx = 0; idx < out.cells.size(); ++idx) {
    if (out.cells[idx].value < out.cells[out.min_index].value) out.min_index = idx;
    if (out.cells[idx].value > out.cells[out.max_index].value) out.max_index = idx;
  }

  if (cfg.refine && is_crouzeix(kind)) {
    // One level of local refinement: a 10x finer 21x21 patch centered on the
    // best cell, clamped to the scan box. Refined values are reported
    // alongside the grid, never written into it.
    const ScanCell best = out.cells[out.max_index];
    const double x_lo = std::max(cfg.x_min, best.x - step_x);
    const double x_hi = std::min(cfg.x_max, best.x + step_x);
    const double y_lo = std::max(cfg.y_min, best.y - step_y);
    const double y_hi = std::min(cfg.y_max, best.y + step_y);
    const int fine = 21;
    std::vector<ScanCell> patch(static_cast<std::size_t>(fine) * fine);
    parallel_for(patch.size(), cfg.jobs, [&](std::size_t idx) {
      const int j = static_cast<int>(idx) / fine;
      const int i = static_cast<int>(idx) % fine;
      ScanCell& cell = patch[idx];
      cell.x = x_lo + (x_hi - x_lo) * i / (fine - 1);
      cell.y = y_lo + (y_hi - y_lo) * j / (fine - 1);
      QuadStatus status = QuadStatus::ClosedForm;
      cell.value = cell_value(kind, cell.x, cell.y, cfg.tol, &status);
    });
    const ScanCell* best_fine = &patch[0];
    for (const ScanCell& c : patch) {
      if (c.value > best_fine->value) best_fine = &c;
    }
    out.refined = true;
    out.refined_x = best_fine->x;
    out.refined_y = best_fine->y;
    out.refined_value = std::max(best_fine->value, best.value);
    if (best.value >= best_fine->value) {
      out.refined_x = best.x;
      out.refined_y = best.y;
    }
  }
  return out;
}

void write_scan(const ScanResult& result, ScanFormat format, std::ostream& os) {
  if (format == ScanFormat::Csv) {
    os << (result.has_status ? "x,y,value,status\n" : "x,y,value\n");
    for (const ScanCell& c : result.cells) {
      os << format_double(c.x) << ',' << format_double(c.y) << ',' << format_double(c.value);
      if (result.has_status) os << ',' << quad_status_name(c.status);
      os << '\n';
    }
    return;
  }
  for (const ScanCell& c : result.cells) {
    nlohmann::json j{{"x", c.x}, {"y", c.y}, {"value", c.value}};
    if (result.has_status) j["status"] = quad_status_name(c.status);
    os << j.dump() << '\n';
  }
}

std::string gnuplot_script(const ScanResult& result, const std::string& data_path) {
  std::ostringstream os;
  os << "# heat map of a vnorm scan; run: gnuplot -p this_file\n"
     << "set datafile separator ','\n"
     << "set title '" << scan_kind_name(result.kind) << "'\n"
     << "set xlabel 'x'\n"
     << "set ylabel 'y'\n"
     << "set pm3d map\n"
     << "set dgrid3d " << result.ny << ',' << result.nx << '\n'
     << "splot '" << data_path << "' every ::1 using 1:2:3 notitle with pm3d\n";
  return os.str();
}

std::vector<BoundaryRow> boundary_table(int samples) {
  if (samples < 16) throw std::invalid_argument("boundary_table: need at least 16 samples");
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<BoundaryRow> rows;
  rows.reserve(2 * static_cast<std::size_t>(samples) + 2);
  for (Branch branch : {Branch::Upper, Branch::Lower}) {
    const char* name = branch == Branch::Upper ? "Upper" : "Lower";
    for (int i = 0; i < samples; ++i) {
      const double t = i == samples - 1 ? two_pi : two_pi * i / (samples - 1);
      const ComplexScalar z = boundary_point(t, branch);
      rows.push_back({t, name, z.re, z.im});
    }
  }
  for (double t : {0.0, two_pi}) {
    const ComplexScalar z = boundary_point(t, Branch::Segment);
    rows.push_back({t, "Segment", z.re, z.im});
  }
  return rows;
}

void write_boundary(const std::vector<BoundaryRow>& rows, ScanFormat format, std::ostream& os) {
  if (format == ScanFormat::Csv) {
    os << "t,branch,re,im\n";
    for (const BoundaryRow& r : rows) {
      os << format_double(r.t) << ',' << r.branch << ',' << format_double(r.re) << ','
         << format_double(r.im) << '\n';
    }
    return;
  }
  for (const BoundaryRow& r : rows) {
    nlohmann::json j{{"t", r.t}, {"branch", r.branch}, {"re", r.re}, {"im", r.im}};
    os << j.dump() << '\n';
  }
}

}  // namespace vnorm
