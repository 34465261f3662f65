#include "proxcurve/emit.hpp"

#include "proxcurve/bounds.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace proxcurve {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

std::string vertices_csv(const DyadicCurve& curve) {
  std::ostringstream o;
  o << "level,j,denom";
  const auto dim = curve.vertices.empty() ? 0 : curve.vertices.front().size();
  for (Eigen::Index i = 0; i < dim; ++i) o << ",x" << i;
  o << '\n';
  const unsigned long long denom = 1ULL << curve.depth;
  for (std::size_t j = 0; j < curve.vertices.size(); ++j) {
    o << curve.level_of(j) << ',' << j << ',' << denom;
    for (Eigen::Index i = 0; i < dim; ++i) o << ',' << num(curve.vertices[j][i]);
    o << '\n';
  }
  return o.str();
}

std::string levels_jsonl(const DyadicCurve& curve, std::optional<double> mu_val) {
  std::ostringstream o;
  const double delta0 = curve.deltas.empty() ? 0.0 : curve.deltas.front();
  for (std::size_t i = 0; i < curve.deltas.size(); ++i) {
    o << "{\"i\":" << i << ",\"delta\":" << num(curve.deltas[i]) << ",\"decay_bound\":";
    if (mu_val) {
      o << num(delta_decay_bound(*mu_val, delta0, static_cast<int>(i)));
    } else {
      o << "null";
    }
    o << "}\n";
  }
  return o.str();
}

std::string report_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

EmittedFiles emit(const VerificationReport* report, const DyadicCurve& curve,
                  std::optional<double> mu_val, const OutputPaths& paths) {
  namespace fs = std::filesystem;
  const fs::path dir(paths.dir);
  fs::create_directories(dir);
  EmittedFiles files{(dir / paths.vertices).string(), (dir / paths.levels).string(), {}};
  write_file(files.vertices, vertices_csv(curve));
  write_file(files.levels, levels_jsonl(curve, mu_val));
  if (report != nullptr) {
    files.report = (dir / paths.report).string();
    write_file(files.report, report_json(*report));
  }
  return files;
}

}  // namespace proxcurve
