#include <cmath>

#include "doctest.h"
#include "nsphere/errors.hpp"
#include "nsphere/matrix_model.hpp"

using namespace nsphere;

TEST_CASE("psd square root squares back") {
  const Herm2 y{0.5, Complex(0.1, 0.2), 0.3};
  const Mat2 x(psd_sqrt(y));
  CHECK(((x * x) - Mat2(y)).frobenius() < 1e-14);
  CHECK(psd_sqrt(Herm2::scalar(4.0)).a == doctest::Approx(2.0));
  CHECK(psd_sqrt(Herm2{}).trace() == 0.0);
}

TEST_CASE("default model satisfies the spherical relations") {
  const auto m = build_model(ModelParams::defaults());
  const auto r = verify_spherical_relations(m.x);
  CHECK(r.all_psd);
  CHECK(r.pass);
  CHECK(r.sum_of_squares_residual < 1e-12);
  for (const auto& ev : r.eigenvalues) CHECK(ev[0] >= 0.0);
  const double w = noncommutativity_witness(m.y);
  CHECK(w > 0.02);
  CHECK(w == doctest::Approx(0.0245).epsilon(0.01));
}

TEST_CASE("commuting diagonal choice has zero witness") {
  ModelParams p = ModelParams::defaults();
  p.a = {};
  const auto m = build_model(p);
  CHECK(noncommutativity_witness(m.y) == 0.0);
  CHECK(verify_spherical_relations(m.x).pass);
}

TEST_CASE("parameter validation") {
  ModelParams p = ModelParams::defaults();
  p.p[0] = 0.5;
  CHECK_THROWS_AS(build_model(p), InvalidInput);
  p = ModelParams::defaults();
  p.a[0] += 0.01;
  CHECK_THROWS_AS(build_model(p), InvalidInput);
  p = ModelParams::defaults();
  const Complex big = 0.5;
  const Complex omega = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  p.a = {big, big * omega, big * std::conj(omega)};
  CHECK_THROWS_AS(build_model(p), NotPositive);
}

TEST_CASE("relations fail for a non-PSD input") {
  std::array<Herm2, 3> x{Herm2::diagonal(-1.0, 1.0), Herm2{}, Herm2{}};
  CHECK_FALSE(verify_spherical_relations(x).pass);
}
