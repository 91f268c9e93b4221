#include "nsphere/matrix_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nsphere/errors.hpp"

namespace nsphere {

std::array<double, 2> Herm2::eigenvalues() const {
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double radius = std::sqrt(half_diff * half_diff + std::norm(b));
  return {mean - radius, mean + radius};
}

bool Herm2::positive_semidefinite(double tolerance) const {
  return eigenvalues()[0] >= -tolerance;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out;
  out.m[0] = x.m[0] * y.m[0] + x.m[1] * y.m[2];
  out.m[1] = x.m[0] * y.m[1] + x.m[1] * y.m[3];
  out.m[2] = x.m[2] * y.m[0] + x.m[3] * y.m[2];
  out.m[3] = x.m[2] * y.m[1] + x.m[3] * y.m[3];
  return out;
}

Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = x.m[i] + y.m[i];
  return out;
}

Mat2 operator-(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int i = 0; i < 4; ++i) out.m[i] = x.m[i] - y.m[i];
  return out;
}

double Mat2::frobenius() const {
  double s = 0.0;
  for (const auto& v : m) s += std::norm(v);
  return std::sqrt(s);
}

Mat2 Mat2::identity() {
  Mat2 out;
  out.m[0] = 1.0;
  out.m[3] = 1.0;
  return out;
}

ModelParams ModelParams::defaults() {
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  ModelParams p;
  p.p = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  p.q = p.p;
  p.a = {Complex(0.1), 0.1 * omega, 0.1 * std::conj(omega)};
  return p;
}

Herm2 psd_sqrt(const Herm2& y) {
  const double det = std::max(0.0, y.det());
  const double s = std::sqrt(det);
  const double t = std::sqrt(y.trace() + 2.0 * s);
  if (t == 0.0) return {};
  return {(y.a + s) / t, y.b / t, (y.d + s) / t};
}

Model build_model(const ModelParams& params) {
  double sp = 0.0;
  double sq = 0.0;
  Complex sa{};
  for (int i = 0; i < 3; ++i) {
    sp += params.p[i];
    sq += params.q[i];
    sa += params.a[i];
    if (params.p[i] <= 0.0 || params.q[i] <= 0.0)
      throw InvalidInput("model parameters p_i, q_i must be positive");
  }
  if (std::fabs(sp - 1.0) > 1e-15 || std::fabs(sq - 1.0) > 1e-15)
    throw InvalidInput("model parameters must satisfy sum p = sum q = 1");
  if (std::abs(sa) > 1e-15) throw InvalidInput("model parameters must satisfy sum a = 0");

  Model m;
  for (int i = 0; i < 3; ++i) {
    m.y[i] = Herm2{params.p[i], params.a[i], params.q[i]};
    if (m.y[i].det() < 0.0 || m.y[i].trace() < 0.0) {
      throw NotPositive("Y_" + std::to_string(i + 1) + " has a negative eigenvalue (|a_" +
                        std::to_string(i + 1) + "| too large)");
    }
    m.x[i] = psd_sqrt(m.y[i]);
  }
  return m;
}

RelationsReport verify_spherical_relations(const std::array<Herm2, 3>& x, double tolerance) {
  RelationsReport r;
  r.all_psd = true;
  Mat2 sum;
  for (int i = 0; i < 3; ++i) {
    r.eigenvalues[i] = x[i].eigenvalues();
    r.all_psd = r.all_psd && x[i].positive_semidefinite(tolerance);
    const Mat2 xi(x[i]);
    sum = sum + xi * xi;
  }
  r.sum_of_squares_residual = (sum - Mat2::identity()).frobenius();
  r.pass = r.all_psd && r.sum_of_squares_residual <= tolerance;
  return r;
}

double noncommutativity_witness(const std::array<Herm2, 3>& y) {
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const Mat2 a(y[i]);
      const Mat2 b(y[j]);
      best = std::max(best, (a * b - b * a).frobenius());
    }
  }
  return best;
}

}  // namespace nsphere
