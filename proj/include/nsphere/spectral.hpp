#pragma once

#include <cstddef>
#include <vector>

#include "nsphere/matrix.hpp"
#include "nsphere/pairing.hpp"
#include "nsphere/weingarten.hpp"
#include "nsphere/word.hpp"

namespace nsphere {

/// Words of length <= max_len over {1..n}, by length then lexicographic.
/// They span H_{max_len} inside L^2(A, tr).
struct WordBasisLevel {
  int n = 0;
  std::size_t max_len = 0;
  std::vector<Word> words;

  static WordBasisLevel build(int n, std::size_t max_len);
  /// Number of words of length <= len (prefix size of level len).
  std::size_t prefix(std::size_t len) const;
};

struct FiltrationReport {
  PairingCategory category = PairingCategory::classical;
  int n = 0;
  std::size_t max_len = 0;
  /// ranks[k] = dim H_k in the GNS quotient.
  std::vector<std::size_t> ranks;
  /// e_dims[k] = dim E_k = ranks[k] - ranks[k-1].
  std::vector<std::size_t> e_dims;
  /// Nonzero <e, x_i f> with e in E_j, f in E_k, |j - k| >= 2.
  std::size_t block_violations = 0;
  std::size_t block_elements_checked = 0;
};

/// <v, w> = tr(v* w) = integrate_word(reverse(v) + w).
RationalMatrix word_gram_matrix(std::size_t max_len, int n, PairingCategory category,
                                const WeingartenEngine& engine = default_engine());

/// dim E_k from ranks of the nested word Gram matrices.
FiltrationReport filtration_dimensions(std::size_t max_len, int n, PairingCategory category,
                                       const WeingartenEngine& engine = default_engine());

/// f(s) = 1 - n/2 + sqrt(4 s^2 + (n-2)^2) / 2. Sends sqrt(k(k+n-2)) to k.
double dirac_map_f(double s, int n);

/// Exact Gram-Schmidt of the word basis (unnormalized, null vectors dropped)
/// gives orthogonal bases of each E_k; then every matrix element of left
/// multiplication by x_i between E_j and E_k with |j - k| >= 2 is evaluated
/// exactly and counted if nonzero. e_dims here come from the Gram-Schmidt
/// counts; ranks are their partial sums.
FiltrationReport multiplication_block_profile(int i, std::size_t max_len, int n,
                                              PairingCategory category,
                                              const WeingartenEngine& engine = default_engine());

/// Degree-k spherical harmonics on S^{n-1}: C(n+k-1, k) - C(n+k-3, k-2).
std::size_t spherical_harmonics_dimension(int n, std::size_t k);

}  // namespace nsphere
