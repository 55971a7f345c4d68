#include "varpde/arakawa.hpp"

#include "varpde/errors.hpp"

namespace varpde {
namespace {

// Node values at the eight neighbours of (j, k), named by compass direction
// with +x = east and +y = north.
struct Stencil {
  double c, e, w, n, s, ne, nw, se, sw;
};

struct Neighbours {
  std::size_t e, w, n, s, ne, nw, se, sw;
};

Stencil gather(std::span<const double> f, std::size_t centre, const Neighbours& nb) {
  return {f[centre], f[nb.e],  f[nb.w],  f[nb.n], f[nb.s],
          f[nb.ne],  f[nb.nw], f[nb.se], f[nb.sw]};
}

double component_pp(const Stencil& p, const Stencil& w) {
  return (p.e - p.w) * (w.n - w.s) - (p.n - p.s) * (w.e - w.w);
}

double component_px(const Stencil& p, const Stencil& w) {
  return p.e * (w.ne - w.se) - p.w * (w.nw - w.sw) - p.n * (w.ne - w.nw) +
         p.s * (w.se - w.sw);
}

double component_xp(const Stencil& p, const Stencil& w) {
  return p.ne * (w.n - w.e) - p.sw * (w.w - w.s) - p.nw * (w.n - w.w) +
         p.se * (w.e - w.s);
}

void check_sizes(const PeriodicGrid2D& grid, std::span<const double> a,
                 std::span<const double> b) {
  if (a.size() != grid.size() || b.size() != grid.size()) {
    throw Error(ErrorKind::GridMismatch, "Arakawa bracket: field size mismatch");
  }
}

}  // namespace

BracketWorkspace::BracketWorkspace(const PeriodicGrid2D& grid) : grid_(grid) {
  const std::size_t nx = grid.nx();
  const std::size_t ny = grid.ny();
  x_plus_.resize(nx);
  x_minus_.resize(nx);
  y_plus_.resize(ny);
  y_minus_.resize(ny);
  for (std::size_t j = 0; j < nx; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    x_plus_[j] = wrap_index(jj + 1, nx);
    x_minus_[j] = wrap_index(jj - 1, nx);
  }
  for (std::size_t k = 0; k < ny; ++k) {
    const auto kk = static_cast<std::ptrdiff_t>(k);
    y_plus_[k] = wrap_index(kk + 1, ny) * nx;
    y_minus_[k] = wrap_index(kk - 1, ny) * nx;
  }
}

void BracketWorkspace::accumulate(std::span<const double> psi,
                                  std::span<const double> omega, double weight,
                                  std::span<double> out) const {
  check_sizes(grid_, psi, omega);
  if (out.size() != grid_.size()) {
    throw Error(ErrorKind::GridMismatch, "Arakawa bracket: output size mismatch");
  }
  const double scale = weight / (12.0 * grid_.hx() * grid_.hy());
  const std::size_t nx = grid_.nx();
  for (std::size_t k = 0; k < grid_.ny(); ++k) {
    const std::size_t row = k * nx;
    const std::size_t up = y_plus_[k];
    const std::size_t down = y_minus_[k];
    for (std::size_t j = 0; j < nx; ++j) {
      const std::size_t jp = x_plus_[j];
      const std::size_t jm = x_minus_[j];
      const Neighbours nb{row + jp, row + jm, up + j,   down + j,
                          up + jp,  up + jm,  down + jp, down + jm};
      const auto p = gather(psi, row + j, nb);
      const auto w = gather(omega, row + j, nb);
      out[row + j] +=
          scale * (component_pp(p, w) + component_px(p, w) + component_xp(p, w));
    }
  }
}

const BracketWorkspace::Components& BracketWorkspace::components(
    std::span<const double> psi, std::span<const double> omega) {
  check_sizes(grid_, psi, omega);
  const std::size_t size = grid_.size();
  scratch_.pp.assign(size, 0.0);
  scratch_.px.assign(size, 0.0);
  scratch_.xp.assign(size, 0.0);
  const double scale = 1.0 / (4.0 * grid_.hx() * grid_.hy());
  const std::size_t nx = grid_.nx();
  for (std::size_t k = 0; k < grid_.ny(); ++k) {
    const std::size_t row = k * nx;
    for (std::size_t j = 0; j < nx; ++j) {
      const std::size_t jp = x_plus_[j];
      const std::size_t jm = x_minus_[j];
      const Neighbours nb{row + jp,       row + jm,       y_plus_[k] + j,
                          y_minus_[k] + j, y_plus_[k] + jp, y_plus_[k] + jm,
                          y_minus_[k] + jp, y_minus_[k] + jm};
      const auto p = gather(psi, row + j, nb);
      const auto w = gather(omega, row + j, nb);
      scratch_.pp[row + j] = scale * component_pp(p, w);
      scratch_.px[row + j] = scale * component_px(p, w);
      scratch_.xp[row + j] = scale * component_xp(p, w);
    }
  }
  return scratch_;
}

namespace {

enum class Which { PP, PX, XP };

Field2D single_component(const Field2D& psi, const Field2D& omega, Which which) {
  require_same_grid(psi, omega, "arakawa component");
  BracketWorkspace ws(psi.grid());
  const auto& c = ws.components(psi.values(), omega.values());
  switch (which) {
    case Which::PP: return Field2D(psi.grid(), c.pp);
    case Which::PX: return Field2D(psi.grid(), c.px);
    case Which::XP: break;
  }
  return Field2D(psi.grid(), c.xp);
}

}  // namespace

Field2D arakawa_pp(const Field2D& psi, const Field2D& omega) {
  return single_component(psi, omega, Which::PP);
}

Field2D arakawa_px(const Field2D& psi, const Field2D& omega) {
  return single_component(psi, omega, Which::PX);
}

Field2D arakawa_xp(const Field2D& psi, const Field2D& omega) {
  return single_component(psi, omega, Which::XP);
}

Field2D arakawa(const Field2D& psi, const Field2D& omega) {
  require_same_grid(psi, omega, "arakawa");
  const BracketWorkspace ws(psi.grid());
  std::vector<double> out(psi.size(), 0.0);
  ws.accumulate(psi.values(), omega.values(), 1.0, out);
  return Field2D(psi.grid(), std::move(out));
}

Field2D bracket_time_avg(const Field2D& psi_prev, const Field2D& psi_curr,
                         const Field2D& omega_prev, const Field2D& omega_curr) {
  require_same_grid(psi_prev, psi_curr, "bracket_time_avg");
  require_same_grid(psi_prev, omega_prev, "bracket_time_avg");
  require_same_grid(psi_prev, omega_curr, "bracket_time_avg");
  const BracketWorkspace ws(psi_prev.grid());
  std::vector<double> out(psi_prev.size(), 0.0);
  ws.accumulate(psi_curr.values(), omega_curr.values(), 0.25, out);
  ws.accumulate(psi_curr.values(), omega_prev.values(), 0.25, out);
  ws.accumulate(psi_prev.values(), omega_curr.values(), 0.25, out);
  ws.accumulate(psi_prev.values(), omega_prev.values(), 0.25, out);
  return Field2D(psi_prev.grid(), std::move(out));
}

}  // namespace varpde
