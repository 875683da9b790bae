#include "qph/medium.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qph {

std::vector<Convergent> CutVector::convergents(double err_floor,
                                               std::int64_t q_max) const {
  std::vector<Convergent> out;
  const double d = delta();
  double x = d;
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p_cur = static_cast<std::int64_t>(std::floor(x));
  std::int64_t q_cur = 1;
  x -= std::floor(x);
  out.push_back({p_cur, q_cur, std::abs(d - static_cast<double>(p_cur))});
  for (int iter = 0; iter < 60; ++iter) {
    if (x < 1e-15) break;
    x = 1.0 / x;
    double a_f = std::floor(x);
    if (a_f > 9e17) break;
    std::int64_t a = static_cast<std::int64_t>(a_f);
    x -= a_f;
    std::int64_t p_next = a * p_cur + p_prev;
    std::int64_t q_next = a * q_cur + q_prev;
    if (q_next > q_max || q_next <= 0) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    double err =
        std::abs(d - static_cast<double>(p_cur) / static_cast<double>(q_cur));
    out.push_back({p_cur, q_cur, err});
    if (err < err_floor) break;
  }
  return out;
}

double TrigPoly2D::eval(double y1, double y2) const {
  double v = constant;
  for (const auto& t : terms) {
    const double u1 = 2.0 * pi * t.m * y1;
    const double u2 = 2.0 * pi * t.n * y2;
    double f1, f2;
    switch (t.kind) {
      case TrigKind::CosCos: f1 = std::cos(u1); f2 = std::cos(u2); break;
      case TrigKind::CosSin: f1 = std::cos(u1); f2 = std::sin(u2); break;
      case TrigKind::SinCos: f1 = std::sin(u1); f2 = std::cos(u2); break;
      default:               f1 = std::sin(u1); f2 = std::sin(u2); break;
    }
    v += t.amplitude * f1 * f2;
  }
  return v;
}

double TrigPoly2D::amplitude_sum() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.amplitude);
  return s;
}

void TrigPoly2D::sampled_range(int n, double& lo, double& hi) const {
  lo = 1e300;
  hi = -1e300;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = eval(static_cast<double>(i) / n, static_cast<double>(j) / n);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
}

double trace_at(const TrigPoly2D& coef, double s, double x,
                const CutVector& cut) {
  return coef.eval(s + cut.theta1 * x, cut.theta2 * x);
}

double SourceSpec::eval(double x) const {
  const double t = (x - center) / halfwidth;
  switch (kind) {
    case SourceKind::Bump: {
      if (std::abs(t) >= 1.0) return 0.0;
      return amplitude * std::exp(100.0 * (1.0 - 1.0 / (1.0 - t * t)));
    }
    case SourceKind::Gaussian:
      // halfwidth acts as the standard deviation; support treated as
      // [-6,6] sigma for validation purposes.
      return amplitude * std::exp(-0.5 * t * t);
    default:
      return (std::abs(t) < 1.0) ? amplitude : 0.0;
  }
}

void effective_coefficient(const MediumSpec& medium, double x, double& mu,
                           double& rho) {
  for (const auto& p : medium.perturbation) {
    if (x >= p.x_lo && x <= p.x_hi) {
      mu = p.mu_value;
      rho = p.rho_value;
      return;
    }
  }
  mu = trace_at(medium.mu_p, 0.0, x, medium.cut);
  rho = trace_at(medium.rho_p, 0.0, x, medium.cut);
}

namespace {

double snap_endpoint(double a, double theta2, double snap_tol, double noise,
                     const char* name, ValidationReport& rep) {
  const double k = std::round(a * theta2);
  const double residual = std::abs(a * theta2 - k);
  const double snapped = k / theta2;
  if (residual <= noise) return snapped;  // integral up to roundoff
  if (std::abs(a - snapped) <= snap_tol) {
    std::ostringstream msg;
    msg << name << " endpoint " << a << " moved to " << snapped
        << " (nearest multiple of 1/theta2); residual " << residual;
    rep.warnings.push_back(msg.str());
    rep.snap_applied = true;
    return snapped;
  }
  std::ostringstream msg;
  msg << name << " endpoint " << a << ": |a*theta2 - round| = " << residual
      << " exceeds snap tolerance " << snap_tol;
  throw ValidationError(msg.str());
}

}  // namespace

ValidationReport validate(MediumSpec& medium, double snap_tol) {
  ValidationReport rep;
  if (!(medium.cut.theta2 > 0.0) || !std::isfinite(medium.cut.delta()))
    throw ValidationError("cut vector requires theta2 > 0 and finite delta");
  if (snap_tol < 0.0) snap_tol = 0.5001 / medium.cut.theta2;

  medium.mu_p.sampled_range(256, rep.mu_min, rep.mu_max);
  medium.rho_p.sampled_range(256, rep.rho_min, rep.rho_max);
  const double mu_lower_bound =
      medium.mu_p.constant - medium.mu_p.amplitude_sum();
  const double rho_lower_bound =
      medium.rho_p.constant - medium.rho_p.amplitude_sum();
  if (rep.mu_min <= 0.0)
    throw ValidationError("mu_p is not positive on the sample grid");
  if (rep.rho_min <= 0.0)
    throw ValidationError("rho_p is not positive on the sample grid");
  if (mu_lower_bound <= 0.0)
    rep.warnings.push_back(
        "mu_p amplitude bound does not certify positivity; relying on the "
        "sampled minimum");
  if (rho_lower_bound <= 0.0)
    rep.warnings.push_back(
        "rho_p amplitude bound does not certify positivity; relying on the "
        "sampled minimum");

  const double theta2 = medium.cut.theta2;
  rep.residual_left =
      std::abs(medium.a_left * theta2 - std::round(medium.a_left * theta2));
  rep.residual_right =
      std::abs(medium.a_right * theta2 - std::round(medium.a_right * theta2));
  const double noise_l = 1e-9 * std::max(1.0, std::abs(medium.a_left * theta2));
  const double noise_r =
      1e-9 * std::max(1.0, std::abs(medium.a_right * theta2));
  rep.snapped_left =
      snap_endpoint(medium.a_left, theta2, snap_tol, noise_l, "left", rep);
  rep.snapped_right =
      snap_endpoint(medium.a_right, theta2, snap_tol, noise_r, "right", rep);
  medium.a_left = rep.snapped_left;
  medium.a_right = rep.snapped_right;
  if (!(medium.a_left < medium.a_right))
    throw ValidationError("interior interval is empty after snapping");

  for (size_t i = 0; i < medium.perturbation.size(); ++i) {
    const auto& p = medium.perturbation[i];
    if (!(p.x_lo < p.x_hi))
      throw ValidationError("perturbation interval is empty");
    if (p.x_lo < medium.a_left || p.x_hi > medium.a_right)
      throw ValidationError("perturbation interval reaches outside the "
                            "interior interval");
    if (p.mu_value <= 0.0 || p.rho_value <= 0.0)
      throw ValidationError("perturbed coefficient values must be positive");
    for (size_t j = 0; j < i; ++j) {
      const auto& q = medium.perturbation[j];
      if (p.x_lo < q.x_hi && q.x_lo < p.x_hi)
        throw ValidationError("perturbation intervals overlap");
    }
  }

  if (medium.source.support_lo() < medium.a_left ||
      medium.source.support_hi() > medium.a_right)
    throw ValidationError("source support reaches outside the interior "
                          "interval");
  if (!medium.impedance.follows_omega && medium.impedance.fixed_value <= 0.0)
    throw ValidationError("fixed impedance must be positive");

  rep.convergents = medium.cut.convergents();
  for (const auto& c : rep.convergents) {
    if (c.error < 1e-12 && c.q < 1000) {
      std::ostringstream msg;
      msg << "delta is nearly rational: |delta - " << c.p << "/" << c.q
          << "| = " << c.error;
      rep.warnings.push_back(msg.str());
      break;
    }
  }
  return rep;
}

}  // namespace qph
