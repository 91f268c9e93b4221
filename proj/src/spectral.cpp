#include "nsphere/spectral.hpp"

#include <cmath>

#include "nsphere/closed_forms.hpp"
#include "nsphere/errors.hpp"
#include "nsphere/kernels.hpp"

namespace nsphere {

WordBasisLevel WordBasisLevel::build(int n, std::size_t max_len) {
  if (n < 1) throw InvalidInput("dimension n must be positive");
  return {n, max_len, words_up_to(n, max_len)};
}

std::size_t WordBasisLevel::prefix(std::size_t len) const {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t r = 0; r <= len; ++r) {
    total += level;
    level *= static_cast<std::size_t>(n);
  }
  return total;
}

RationalMatrix word_gram_matrix(std::size_t max_len, int n, PairingCategory category,
                                const WeingartenEngine& engine) {
  const auto basis = WordBasisLevel::build(n, max_len);
  return kernels::omp::word_gram(basis.words, basis.words, Word{}, [&](const Word& w) {
    return engine.integrate_word(w, n, category);
  });
}

FiltrationReport filtration_dimensions(std::size_t max_len, int n, PairingCategory category,
                                       const WeingartenEngine& engine) {
  const auto basis = WordBasisLevel::build(n, max_len);
  const RationalMatrix gram = word_gram_matrix(max_len, n, category, engine);
  FiltrationReport report;
  report.category = category;
  report.n = n;
  report.max_len = max_len;
  for (std::size_t k = 0; k <= max_len; ++k) {
    const std::size_t m = basis.prefix(k);
    report.ranks.push_back(rank(gram.top_left(m, m)));
    report.e_dims.push_back(report.ranks[k] - (k ? report.ranks[k - 1] : 0));
  }
  return report;
}

double dirac_map_f(double s, int n) {
  if (s < 0) throw DomainError("dirac_map_f needs s >= 0");
  const double nd = n;
  return 1.0 - nd / 2.0 + 0.5 * std::sqrt(4.0 * s * s + (nd - 2.0) * (nd - 2.0));
}

namespace {

struct OrthoVector {
  std::size_t level = 0;
  std::vector<BigRational> coeffs;  // in the word basis
  std::vector<BigRational> image;   // gram * coeffs
  BigRational norm2;
};

std::vector<BigRational> mat_vec(const RationalMatrix& m, const std::vector<BigRational>& v) {
  std::vector<BigRational> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (v[c] != 0) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

BigRational dot(const std::vector<BigRational>& a, const std::vector<BigRational>& b) {
  BigRational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace

FiltrationReport multiplication_block_profile(int i, std::size_t max_len, int n,
                                              PairingCategory category,
                                              const WeingartenEngine& engine) {
  if (i < 1 || i > n) throw InvalidInput("coordinate index outside {1..n}");
  const auto basis = WordBasisLevel::build(n, max_len);
  const std::size_t size = basis.words.size();
  const RationalMatrix gram = word_gram_matrix(max_len, n, category, engine);

  std::vector<OrthoVector> ortho;
  for (std::size_t w = 0; w < size; ++w) {
    OrthoVector u;
    u.level = basis.words[w].size();
    u.coeffs.assign(size, 0);
    u.coeffs[w] = 1;
    for (const auto& b : ortho) {
      // <b, e_w> = (G b)[w]
      const BigRational& overlap = b.image[w];
      if (overlap == 0) continue;
      const BigRational f = overlap / b.norm2;
      for (std::size_t c = 0; c < size; ++c) {
        if (b.coeffs[c] != 0) u.coeffs[c] -= f * b.coeffs[c];
      }
    }
    u.image = mat_vec(gram, u.coeffs);
    u.norm2 = dot(u.coeffs, u.image);
    if (u.norm2 == 0) continue;  // null in the GNS quotient
    ortho.push_back(std::move(u));
  }

  FiltrationReport report;
  report.category = category;
  report.n = n;
  report.max_len = max_len;
  report.e_dims.assign(max_len + 1, 0);
  for (const auto& u : ortho) ++report.e_dims[u.level];
  std::size_t running = 0;
  for (auto d : report.e_dims) report.ranks.push_back(running += d);

  const RationalMatrix shifted =
      kernels::omp::word_gram(basis.words, basis.words, Word{i}, [&](const Word& w) {
        return engine.integrate_word(w, n, category);
      });
  for (const auto& f : ortho) {
    const auto image = mat_vec(shifted, f.coeffs);  // <e_v, x_i f> for every word v
    for (const auto& e : ortho) {
      const auto gap = e.level > f.level ? e.level - f.level : f.level - e.level;
      if (gap < 2) continue;
      ++report.block_elements_checked;
      if (dot(e.coeffs, image) != 0) ++report.block_violations;
    }
  }
  return report;
}

std::size_t spherical_harmonics_dimension(int n, std::size_t k) {
  const auto nn = static_cast<unsigned>(n);
  const auto kk = static_cast<unsigned>(k);
  BigInteger d = binomial(nn + kk - 1, kk);
  if (kk >= 2) d -= binomial(nn + kk - 3, kk - 2);
  return static_cast<std::size_t>(d.get_ui());
}

}  // namespace nsphere
