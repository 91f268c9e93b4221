#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nsphere/pairing.hpp"
#include "nsphere/rational.hpp"
#include "nsphere/weingarten.hpp"
#include "nsphere/word.hpp"

namespace nsphere {

/// How the entries of an OccurrenceProfile were counted.
///  total_occurrence: l_a = occurrences of a in the word (classical).
///  per_parity: l_a = occurrences of a at odd positions, which equals the
///  count at even positions (half-liberated).
enum class ProfileSemantics { total_occurrence, per_parity };

struct OccurrenceProfile {
  std::vector<unsigned> counts;  // counts[a-1] = l_a, size n
  ProfileSemantics semantics = ProfileSemantics::total_occurrence;

  int n() const { return static_cast<int>(counts.size()); }
  unsigned total() const;
};

/// m!! = (m-1)(m-3)(m-5)... down to 1 or 2, empty product 1. So 2!! = 1,
/// 4!! = 3, 6!! = 15, 8!! = 105. This is the convention the classical
/// moment formula needs: with it the integral of x_1^2 is 1/n.
BigInteger double_factorial(unsigned m);

BigInteger catalan(unsigned l);

BigInteger binomial(unsigned top, unsigned bottom);

/// Total occurrence counts of each letter in {1..n}.
OccurrenceProfile classical_profile(const Word& word, int n);

/// (n-1)!! l_1!! ... l_n!! / (n + sum l - 1)!!; 0 if some count is odd.
BigRational classical_moment(const OccurrenceProfile& profile);

/// 4^{sum l} (2n-1)! l_1! ... l_n! / (2n + sum l - 1)!, as printed.
BigRational halflib_moment_printed(const OccurrenceProfile& profile);

/// (n-1)! l_1! ... l_n! / (n + sum l - 1)!, the complex-sphere integral of
/// |z_1|^{2 l_1} ... |z_n|^{2 l_n}.
BigRational halflib_moment_derived(const OccurrenceProfile& profile);

/// Per-parity profile, or nullopt when the multisets of letters at odd and
/// at even positions differ (the half-liberated integral vanishes).
std::optional<OccurrenceProfile> halflib_word_reduce(const Word& word, int n);

/// q in (-1, 0) with q + 1/q = -n, n >= 3.
struct FreeQParam {
  int n = 3;
  double q = 0.0;

  /// Throws DomainError for n < 3.
  static FreeQParam for_dimension(int n);
};

/// The q-series for the free moment of x_1^{2l}, evaluated as printed, with
/// the removable r = 0 term taken as 0. Throws DomainError for n < 3.
double free_even_moment_qseries(unsigned l, int n);

/// Moment of order 2l of the n -> infinity law of sqrt(n) x_1: Gaussian
/// (2l-1)!!, symmetrized Rayleigh l!, semicircle Catalan(l).
BigRational limit_moment(PairingCategory category, unsigned l);

/// Any order; odd orders are 0.
BigRational limit_moment_of_order(PairingCategory category, unsigned order);

struct ConvergenceRow {
  int n = 0;
  BigRational moment;  // exact integral of x_1^{2l}
  BigRational scaled;  // n^l * moment
  BigRational limit;
  double relative_gap = 0.0;
};

struct ConvergenceReport {
  PairingCategory category = PairingCategory::classical;
  unsigned l = 0;
  std::vector<ConvergenceRow> rows;
  /// Gaps are non-increasing along increasing n.
  bool shrinking = true;
};

/// Classical and half use the closed forms; free uses the engine.
ConvergenceReport convergence_report(PairingCategory category, unsigned l,
                                     std::span<const int> n_list,
                                     const WeingartenEngine& engine = default_engine());

struct IndependenceReport {
  PairingCategory category = PairingCategory::classical;
  unsigned l_a = 0;
  unsigned l_b = 0;
  int n = 0;
  BigRational mixed;
  BigRational product;
  double relative_gap = 0.0;
  /// Same quantities at 2n for the ratio test.
  double relative_gap_doubled = 0.0;
  /// gap(n) / gap(2n) >= 1.5, or both gaps are 0.
  bool decays_like_one_over_n = false;
};

/// Mixed moment with profile {a: l_a, b: l_b} against the product of the
/// single-letter moments (a != b). Classical counts are total occurrences,
/// half counts are per-parity. Only classical and half are accepted.
IndependenceReport independence_check(PairingCategory category, unsigned l_a, unsigned l_b, int n);

enum class Verdict { exact_match, match, mismatch, undefined };

std::string_view name(Verdict verdict);

struct AuditRow {
  Word word;
  PairingCategory category = PairingCategory::classical;
  int n = 0;
  BigRational oracle;
  std::string formula;
  /// Exact rational text, or a real printed to 12 significant digits.
  std::string formula_value;
  Verdict verdict = Verdict::undefined;
  double abs_gap = 0.0;
};

struct AuditOptions {
  std::size_t k_max = 6;
  std::vector<int> n_set{2, 3, 4, 5};
  std::vector<PairingCategory> categories{kSphereCategories.begin(), kSphereCategories.end()};
  double real_tolerance = 1e-9;
};

/// Weingarten oracle against every closed form that applies:
///  classical      -> classical_moment on every word
///  half           -> halflib_derived and halflib_printed on every word
///  free           -> free_qseries on constant words x_1^{2l}
///  even-crossings -> halflib_derived on every word
/// Rows come out in (category, n, word, formula) order.
std::vector<AuditRow> closed_form_audit(const AuditOptions& options,
                                        const WeingartenEngine& engine = default_engine());

/// Printed real value, 12 significant digits.
std::string format_real(double value);

}  // namespace nsphere
