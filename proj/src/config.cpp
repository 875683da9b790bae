#include "qph/config.hpp"

#include <fstream>
#include <sstream>

namespace qph {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "config line " << line << ": " << what;
  throw ValidationError(os.str());
}

double to_double(const std::string& v, int line) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) fail(line, "trailing characters in number '" + v + "'");
    return d;
  } catch (const ValidationError&) {
    throw;
  } catch (...) {
    fail(line, "expected a number, got '" + v + "'");
  }
}

int to_int(const std::string& v, int line) {
  const double d = to_double(v, line);
  const int i = static_cast<int>(d);
  if (d != i) fail(line, "expected an integer, got '" + v + "'");
  return i;
}

TrigKind trig_kind(const std::string& key, int line) {
  if (key == "coscos") return TrigKind::CosCos;
  if (key == "cossin") return TrigKind::CosSin;
  if (key == "sincos") return TrigKind::SinCos;
  if (key == "sinsin") return TrigKind::SinSin;
  fail(line, "unknown coefficient term '" + key + "'");
}

}  // namespace

Config parse_config_text(const std::string& text) {
  Config cfg;
  cfg.raw_text = text;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::istringstream vs(value);

    if (section == "cut") {
      if (key == "theta1")
        cfg.medium.cut.theta1 = to_double(value, line_no);
      else if (key == "theta2")
        cfg.medium.cut.theta2 = to_double(value, line_no);
      else
        fail(line_no, "unknown key '" + key + "' in [cut]");
    } else if (section == "mu" || section == "rho") {
      TrigPoly2D& poly = (section == "mu") ? cfg.medium.mu_p : cfg.medium.rho_p;
      if (key == "constant") {
        poly.constant = to_double(value, line_no);
      } else {
        TrigTerm term;
        term.kind = trig_kind(key, line_no);
        std::string m, n, amp;
        if (!(vs >> m >> n >> amp))
          fail(line_no, "term needs 'm n amplitude'");
        term.m = to_int(m, line_no);
        term.n = to_int(n, line_no);
        term.amplitude = to_double(amp, line_no);
        if (term.m < 0 || term.n < 0) fail(line_no, "term orders must be >= 0");
        poly.terms.push_back(term);
      }
    } else if (section == "interval") {
      if (key == "a_left")
        cfg.medium.a_left = to_double(value, line_no);
      else if (key == "a_right")
        cfg.medium.a_right = to_double(value, line_no);
      else
        fail(line_no, "unknown key '" + key + "' in [interval]");
    } else if (section == "perturbation") {
      if (key != "interval")
        fail(line_no, "unknown key '" + key + "' in [perturbation]");
      PerturbationInterval p;
      std::string lo, hi, mu, rho;
      if (!(vs >> lo >> hi >> mu >> rho))
        fail(line_no, "interval needs 'x_lo x_hi mu_value rho_value'");
      p.x_lo = to_double(lo, line_no);
      p.x_hi = to_double(hi, line_no);
      p.mu_value = to_double(mu, line_no);
      p.rho_value = to_double(rho, line_no);
      cfg.medium.perturbation.push_back(p);
    } else if (section == "source") {
      if (key == "kind") {
        if (value == "bump")
          cfg.medium.source.kind = SourceKind::Bump;
        else if (value == "gaussian")
          cfg.medium.source.kind = SourceKind::Gaussian;
        else if (value == "indicator")
          cfg.medium.source.kind = SourceKind::Indicator;
        else
          fail(line_no, "unknown source kind '" + value + "'");
      } else if (key == "center") {
        cfg.medium.source.center = to_double(value, line_no);
      } else if (key == "halfwidth") {
        cfg.medium.source.halfwidth = to_double(value, line_no);
      } else if (key == "amplitude") {
        cfg.medium.source.amplitude = to_double(value, line_no);
      } else {
        fail(line_no, "unknown key '" + key + "' in [source]");
      }
    } else if (section == "impedance") {
      if (key == "rule") {
        if (value == "omega")
          cfg.medium.impedance.follows_omega = true;
        else
          fail(line_no, "unknown impedance rule '" + value + "'");
      } else if (key == "value") {
        cfg.medium.impedance.follows_omega = false;
        cfg.medium.impedance.fixed_value = to_double(value, line_no);
      } else {
        fail(line_no, "unknown key '" + key + "' in [impedance]");
      }
    } else if (section == "solver") {
      if (key == "k_modes")
        cfg.solver.k_modes = to_int(value, line_no);
      else if (key == "mesh_nodes")
        cfg.solver.mesh_nodes = to_int(value, line_no);
      else if (key == "interior_h")
        cfg.solver.interior_h = to_double(value, line_no);
      else if (key == "tol_circle")
        cfg.solver.tol_circle = to_double(value, line_no);
      else if (key == "tol_flux_rel")
        cfg.solver.tol_flux_rel = to_double(value, line_no);
      else if (key == "n_cells")
        cfg.solver.n_cells = to_int(value, line_no);
      else if (key == "auto_refine_k")
        cfg.solver.auto_refine_k = to_int(value, line_no) != 0;
      else if (key == "max_k_modes")
        cfg.solver.max_k_modes = to_int(value, line_no);
      else
        fail(line_no, "unknown key '" + key + "' in [solver]");
    } else if (section.empty()) {
      fail(line_no, "key outside any section");
    } else {
      fail(line_no, "unknown section [" + section + "]");
    }
  }
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace qph
