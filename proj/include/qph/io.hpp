#ifndef QPH_IO_HPP
#define QPH_IO_HPP

#include <string>
#include <vector>

#include "qph/analysis.hpp"
#include "qph/config.hpp"

namespace qph {

void write_text_file(const std::string& path, const std::string& contents);

std::string field_csv(const std::vector<double>& x,
                      const std::vector<cplx>& u);
std::string halfguide_csv(const HalfguideField& field);
std::string sweep_csv(const SweepResult& sweep);
std::string dispersion_csv(const std::vector<DispersionPoint>& pts);
std::string bands_csv(const DirichletBands& bands);
std::string classify_csv(const ClassifySweep& sweep);

// Minimal standalone SVG line/scatter plots; the CSVs stay the ground truth.
struct SvgSeries {
  std::vector<double> x, y;
  std::string color = "#1f6fb2";
  bool markers = false;  // scatter instead of a polyline
};

std::string svg_plot(const std::vector<SvgSeries>& series,
                     const std::string& x_label, const std::string& y_label,
                     int width = 860, int height = 520);

// Run record accumulated by the CLI and serialized as JSON.
struct RunRecord {
  std::string command;
  std::string config_path;
  std::string config_snapshot;
  double omega = 0.0;
  double epsilon = 0.0;
  std::string classification;
  bool has_spectral = false;
  cplx lambda0_right, lambda0_left;
  cplx rtr_right, rtr_left;
  std::vector<std::pair<std::string, std::string>> extra;  // key, value
  std::vector<std::string> outputs;
  double elapsed_seconds = 0.0;
  std::string tool_version;

  std::string json() const;
};

}  // namespace qph

#endif
