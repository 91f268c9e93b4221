#include "nsphere/kernels.hpp"

namespace nsphere::kernels::serial {

RationalMatrix gram(std::span<const Pairing> basis, int n) {
  const std::size_t m = basis.size();
  RationalMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = BigRational(int_pow(n, static_cast<unsigned>(join_loops(basis[i], basis[j]))));
    }
  }
  return out;
}

RationalMatrix word_gram(std::span<const Word> rows, std::span<const Word> cols,
                         const Word& middle, const WordFunctional& f) {
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const Word left = rows[a].reversed() + middle;
    for (std::size_t b = 0; b < cols.size(); ++b) out(a, b) = f(left + cols[b]);
  }
  return out;
}

std::vector<BigRational> integrate_batch(std::span<const Word> words, const WordFunctional& f) {
  std::vector<BigRational> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = f(words[i]);
  return out;
}

std::vector<BigRational> leading_minors(const RationalMatrix& m) {
  std::vector<BigRational> out(m.rows());
  for (std::size_t order = 1; order <= m.rows(); ++order) {
    out[order - 1] = determinant(m.top_left(order, order));
  }
  return out;
}

}  // namespace nsphere::kernels::serial
