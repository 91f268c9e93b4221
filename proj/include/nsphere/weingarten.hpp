#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "nsphere/matrix.hpp"
#include "nsphere/pairing.hpp"
#include "nsphere/rational.hpp"
#include "nsphere/word.hpp"

namespace nsphere {

/// What to do when G_{kn} is singular.
///
/// reject: throw SingularGram; W exists only as G^{-1}.
/// pseudo_inverse: use the exact Moore-Penrose inverse G^+. The projection
///   onto span{xi_p} is sum_{p,q} xi_p G^+(p,q) xi_q^* for any spanning
///   family, so integrals stay exact. Identical to G^{-1} when G is invertible.
enum class SingularPolicy { reject, pseudo_inverse };

/// Largest k for which tables are built unless `enforce` is off.
struct SizeCaps {
  std::size_t classical_half = 8;
  std::size_t free = 12;
  bool enforce = true;

  std::size_t cap_for(PairingCategory category) const {
    return category == PairingCategory::free ? free : classical_half;
  }
};

struct WeingartenTable {
  std::size_t k = 0;
  int n = 0;
  PairingCategory category = PairingCategory::classical;
  std::vector<Pairing> basis;
  RationalMatrix gram;
  /// G^{-1}, or G^+ when `pseudo` is set.
  RationalMatrix wg;
  bool pseudo = false;
  /// sum_q wg(p, q) for every p; integrate_word only needs these.
  std::vector<BigRational> row_sums;
};

/// G_{kn}(p, q) = n^{loops(p v q)} over enumerate_pairings(k, category).
RationalMatrix gram_matrix(std::size_t k, int n, PairingCategory category);

/// det G_{kn}. Nonzero iff the Weingarten matrix exists.
BigRational meander_determinant(std::size_t k, int n, PairingCategory category);

/// Builds and caches Weingarten tables keyed by (k, n, category). Each key
/// is built once; concurrent callers for the same key wait for the builder.
/// Built tables are immutable and may be read from any thread.
class WeingartenEngine {
 public:
  struct Options {
    SingularPolicy singular = SingularPolicy::reject;
    SizeCaps caps{};
  };

  WeingartenEngine() = default;
  explicit WeingartenEngine(Options options) : options_(options) {}

  WeingartenEngine(const WeingartenEngine&) = delete;
  WeingartenEngine& operator=(const WeingartenEngine&) = delete;

  const Options& options() const { return options_; }

  /// Throws SingularGram (reject policy) or InvalidInput (odd k, k = 0,
  /// n < 1, cap exceeded).
  std::shared_ptr<const WeingartenTable> table(std::size_t k, int n,
                                               PairingCategory category) const;

  /// tr(x_{i1} ... x_{ik}) = sum_{p,q} delta_p(i) W(p,q).
  BigRational integrate_word(const Word& word, int n, PairingCategory category) const;

  /// Haar integral of u_{i1 j1} ... u_{ik jk}.
  BigRational integrate_haar_monomial(const Word& rows, const Word& cols, int n,
                                      PairingCategory category) const;

  std::size_t cached_tables() const;

 private:
  using Key = std::tuple<std::size_t, int, PairingCategory>;
  struct Slot;

  Options options_{};
  mutable std::mutex mutex_;
  mutable std::map<Key, std::shared_ptr<Slot>> cache_;
};

/// Uncached build honoring the policy.
WeingartenTable build_weingarten_table(std::size_t k, int n, PairingCategory category,
                                       SingularPolicy policy = SingularPolicy::reject);

/// Strict W = G^{-1} through a process-wide cache. Throws SingularGram.
std::shared_ptr<const WeingartenTable> weingarten_matrix(std::size_t k, int n,
                                                         PairingCategory category);

/// Process-wide strict engine used by the free-function shortcuts.
const WeingartenEngine& default_engine();

BigRational integrate_word(const Word& word, int n, PairingCategory category);

BigRational integrate_haar_monomial(const Word& rows, const Word& cols, int n,
                                    PairingCategory category);

/// True when some letter occurs an odd number of times (integral is 0).
bool has_odd_letter(const Word& word);

}  // namespace nsphere
