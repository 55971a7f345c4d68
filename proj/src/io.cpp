#include "varpde/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "varpde/errors.hpp"

namespace varpde {
namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << std::setprecision(17);
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

void write_values(const std::string& path, std::size_t nx, std::size_t ny, double t,
                  std::span<const double> values) {
  auto out = open_out(path);
  out << "VARPDE1 " << nx << ' ' << ny << ' ' << t << '\n';
  for (std::size_t k = 0; k < ny; ++k) {
    for (std::size_t j = 0; j < nx; ++j) {
      if (j > 0) out << ' ';
      out << values[k * nx + j];
    }
    out << '\n';
  }
  finish(out, path);
}

double parse_double(const std::string& text, const std::string& where) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE) {
    throw Error(ErrorKind::Io, where + ": '" + text + "' is not a number");
  }
  return v;
}

}  // namespace

std::string format_value(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

void write_snapshot(const std::string& path, const Field1D& field, double t) {
  write_values(path, field.size(), 1, t, field.values());
}

void write_snapshot(const std::string& path, const Field2D& field, double t) {
  write_values(path, field.grid().nx(), field.grid().ny(), t, field.values());
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::Io, path + ":1: empty file");
  std::istringstream head(line);
  std::string magic;
  Snapshot snap;
  std::string t_text;
  if (!(head >> magic >> snap.nx >> snap.ny >> t_text) || magic != "VARPDE1") {
    throw Error(ErrorKind::Io, path + ":1: expected 'VARPDE1 <nx> <ny> <t>'");
  }
  snap.t = parse_double(t_text, path + ":1");
  snap.values.reserve(snap.nx * snap.ny);
  std::string token;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    std::istringstream row(line);
    while (row >> token) {
      snap.values.push_back(parse_double(token, path + ":" + std::to_string(number)));
    }
  }
  if (snap.values.size() != snap.nx * snap.ny) {
    throw Error(ErrorKind::Io, path + ": expected " + std::to_string(snap.nx * snap.ny) +
                                   " values, found " + std::to_string(snap.values.size()));
  }
  return snap;
}

void write_invariants(const std::string& path, const InvariantSeries1D& series) {
  auto out = open_out(path);
  out << "t,mass,l2,momentum,energy\n";
  for (const auto& r : series) {
    out << r.t << ',' << r.mass << ',' << r.l2 << ',' << r.momentum << ',' << r.energy
        << '\n';
  }
  finish(out, path);
}

void write_invariants(const std::string& path, const InvariantSeries2D& series) {
  auto out = open_out(path);
  out << "t,circulation,enstrophy,energy\n";
  for (const auto& r : series) {
    out << r.t << ',' << r.circulation << ',' << r.enstrophy << ',' << r.energy << '\n';
  }
  finish(out, path);
}

void write_dispersion(const std::string& path, const DispersionCurve& curve,
                      std::span<const SpectralPeak> peaks) {
  auto out = open_out(path);
  out << "xi,tau,branch\n";
  for (const auto& s : curve.samples) {
    if (s.tau) out << s.xi << ',' << *s.tau << ',' << to_string(s.branch) << '\n';
  }
  for (const auto& p : peaks) out << p.xi << ',' << p.tau << ",experimental\n";
  finish(out, path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::Io, path + ":1: missing header");
  table.header = split(line);
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != table.header.size()) {
      throw Error(ErrorKind::Io, path + ":" + std::to_string(number) + ": expected " +
                                     std::to_string(table.header.size()) + " columns");
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  std::size_t col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) col = i;
  }
  if (col == header.size()) throw Error(ErrorKind::Io, "no column '" + name + "'");
  std::vector<double> values;
  values.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    values.push_back(parse_double(rows[r][col], "row " + std::to_string(r + 2)));
  }
  return values;
}

}  // namespace varpde
