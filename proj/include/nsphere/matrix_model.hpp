#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace nsphere {

using Complex = std::complex<double>;

/// 2x2 Hermitian matrix [[a, b], [conj(b), d]] with a, d real.
struct Herm2 {
  double a = 0.0;
  Complex b{};
  double d = 0.0;

  static Herm2 diagonal(double top, double bottom) { return {top, {}, bottom}; }
  static Herm2 scalar(double s) { return {s, {}, s}; }

  double trace() const { return a + d; }
  double det() const { return a * d - std::norm(b); }
  /// Ascending eigenvalues.
  std::array<double, 2> eigenvalues() const;
  bool positive_semidefinite(double tolerance = 0.0) const;
};

/// Full complex 2x2 matrix for products that leave the Hermitian set.
struct Mat2 {
  std::array<Complex, 4> m{};  // row-major

  Mat2() = default;
  Mat2(const Herm2& h) : m{Complex(h.a), h.b, std::conj(h.b), Complex(h.d)} {}

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend Mat2 operator+(const Mat2& x, const Mat2& y);
  friend Mat2 operator-(const Mat2& x, const Mat2& y);
  double frobenius() const;
  static Mat2 identity();
};

struct ModelParams {
  std::array<double, 3> p{};
  std::array<double, 3> q{};
  std::array<Complex, 3> a{};

  /// p = q = (1/3, 1/3, 1/3), a = 0.1 (1, w, conj(w)) with w = exp(2 pi i / 3).
  static ModelParams defaults();
};

struct Model {
  std::array<Herm2, 3> y;
  std::array<Herm2, 3> x;
};

/// Y_i = [[p_i, a_i], [conj(a_i), q_i]], X_i = sqrt(Y_i). Throws InvalidInput
/// when the sums are off (p, q to 1e-15, a to 0), NotPositive when some Y_i
/// has a negative eigenvalue.
Model build_model(const ModelParams& params);

/// Unique PSD square root, closed form: (Y + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
Herm2 psd_sqrt(const Herm2& y);

struct RelationsReport {
  bool all_psd = false;
  double sum_of_squares_residual = 0.0;  // ||sum X_i^2 - I||_F
  std::array<std::array<double, 2>, 3> eigenvalues{};
  bool pass = false;
};

RelationsReport verify_spherical_relations(const std::array<Herm2, 3>& x, double tolerance = 1e-12);

/// max over i < j of ||Y_i Y_j - Y_j Y_i||_F.
double noncommutativity_witness(const std::array<Herm2, 3>& y);

}  // namespace nsphere
