#include "qph/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qph {

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << contents;
}

std::string field_csv(const std::vector<double>& x,
                      const std::vector<cplx>& u) {
  std::ostringstream os;
  os.precision(17);
  os << "x,re_u,im_u,abs_u\n";
  for (size_t i = 0; i < x.size(); ++i)
    os << x[i] << ',' << u[i].real() << ',' << u[i].imag() << ','
       << std::abs(u[i]) << '\n';
  return os.str();
}

std::string halfguide_csv(const HalfguideField& field) {
  std::ostringstream os;
  os.precision(17);
  os << "y1,y2,re_U,im_U\n";
  for (size_t row = 0; row < field.y2.size(); ++row)
    for (int i = 0; i < field.ny1; ++i) {
      const cplx v = field.values[row * field.ny1 + i];
      os << field.y1[i] << ',' << field.y2[row] << ',' << v.real() << ','
         << v.imag() << '\n';
    }
  return os.str();
}

std::string sweep_csv(const SweepResult& sweep) {
  std::ostringstream os;
  os.precision(17);
  os << "epsilon,rel_H1_error\n";
  for (const auto& r : sweep.rows)
    os << r.epsilon << ',' << r.rel_h1_error << '\n';
  return os.str();
}

std::string dispersion_csv(const std::vector<DispersionPoint>& pts) {
  std::ostringstream os;
  os.precision(17);
  os << "omega,re_lambda0,im_lambda0,k0,Q0,class\n";
  for (const auto& p : pts) {
    if (!p.error.empty()) continue;
    os << p.omega << ',' << p.lambda0.real() << ',' << p.lambda0.imag() << ','
       << p.k0 << ',' << p.Q0 << ','
       << (p.kind ? class_name(*p.kind) : "failed") << '\n';
  }
  return os.str();
}

std::string bands_csv(const DirichletBands& bands) {
  std::ostringstream os;
  os.precision(17);
  os << "s,n,lambda_n\n";
  for (const auto& band : bands.bands)
    for (size_t i = 0; i < band.s_grid.size(); ++i)
      os << band.s_grid[i] << ',' << band.n << ',' << band.lambda_n[i] << '\n';
  return os.str();
}

std::string classify_csv(const ClassifySweep& sweep) {
  std::ostringstream os;
  os.precision(17);
  os << "omega,class\n";
  for (const auto& r : sweep.rows)
    os << r.omega << ',' << (r.kind ? class_name(*r.kind) : "failed") << '\n';
  return os.str();
}

namespace {

void axis_range(const std::vector<SvgSeries>& series, double& lo, double& hi,
                bool use_y) {
  lo = 1e300;
  hi = -1e300;
  for (const auto& s : series)
    for (double v : (use_y ? s.y : s.x)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (lo > hi) {
    lo = 0.0;
    hi = 1.0;
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
}

}  // namespace

std::string svg_plot(const std::vector<SvgSeries>& series,
                     const std::string& x_label, const std::string& y_label,
                     int width, int height) {
  const int ml = 70, mr = 20, mt = 20, mb = 50;
  double x_lo, x_hi, y_lo, y_hi;
  axis_range(series, x_lo, x_hi, false);
  axis_range(series, y_lo, y_hi, true);
  const double sx = (width - ml - mr) / (x_hi - x_lo);
  const double sy = (height - mt - mb) / (y_hi - y_lo);
  auto px = [&](double x) { return ml + (x - x_lo) * sx; };
  auto py = [&](double y) { return height - mb - (y - y_lo) * sy; };

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
     << width - mr << "\" y2=\"" << height - mb
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
     << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  // tick labels at the extremes
  os << "<text x=\"" << ml << "\" y=\"" << height - mb + 18
     << "\" font-size=\"12\">" << x_lo << "</text>\n";
  os << "<text x=\"" << width - mr - 40 << "\" y=\"" << height - mb + 18
     << "\" font-size=\"12\">" << x_hi << "</text>\n";
  os << "<text x=\"8\" y=\"" << height - mb << "\" font-size=\"12\">" << y_lo
     << "</text>\n";
  os << "<text x=\"8\" y=\"" << mt + 12 << "\" font-size=\"12\">" << y_hi
     << "</text>\n";
  os << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 12
     << "\" font-size=\"13\">" << x_label << "</text>\n";
  os << "<text x=\"12\" y=\"" << mt - 4 << "\" font-size=\"13\">" << y_label
     << "</text>\n";

  for (const auto& s : series) {
    if (s.markers) {
      for (size_t i = 0; i < s.x.size(); ++i)
        os << "<circle cx=\"" << px(s.x[i]) << "\" cy=\"" << py(s.y[i])
           << "\" r=\"2.4\" fill=\"" << s.color << "\"/>\n";
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << s.color
         << "\" stroke-width=\"1.2\" points=\"";
      for (size_t i = 0; i < s.x.size(); ++i)
        os << px(s.x[i]) << ',' << py(s.y[i]) << ' ';
      os << "\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string RunRecord::json() const {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["config_path"] = config_path;
  j["omega"] = omega;
  j["epsilon"] = epsilon;
  if (!classification.empty()) j["classification"] = classification;
  if (has_spectral) {
    j["lambda0_right"] = {lambda0_right.real(), lambda0_right.imag()};
    j["lambda0_left"] = {lambda0_left.real(), lambda0_left.imag()};
    j["rtr_right"] = {rtr_right.real(), rtr_right.imag()};
    j["rtr_left"] = {rtr_left.real(), rtr_left.imag()};
  }
  for (const auto& [k, v] : extra) j[k] = v;
  j["outputs"] = outputs;
  j["elapsed_seconds"] = elapsed_seconds;
  j["config_snapshot"] = config_snapshot;
  return j.dump(2) + "\n";
}

}  // namespace qph
