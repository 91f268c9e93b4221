#include "nsphere/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nsphere/errors.hpp"
#include "nsphere/kernels.hpp"

namespace nsphere {

unsigned OccurrenceProfile::total() const {
  unsigned s = 0;
  for (auto c : counts) s += c;
  return s;
}

BigInteger double_factorial(unsigned m) {
  BigInteger out = 1;
  for (long f = static_cast<long>(m) - 1; f > 1; f -= 2) out *= f;
  return out;
}

BigInteger catalan(unsigned l) { return binomial(2 * l, l) / (l + 1); }

BigInteger binomial(unsigned top, unsigned bottom) {
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

OccurrenceProfile classical_profile(const Word& word, int n) {
  word.check_alphabet(n);
  OccurrenceProfile p;
  p.counts.assign(static_cast<std::size_t>(n), 0);
  p.semantics = ProfileSemantics::total_occurrence;
  for (int l : word.letters) ++p.counts[static_cast<std::size_t>(l - 1)];
  return p;
}

BigRational classical_moment(const OccurrenceProfile& profile) {
  const int n = profile.n();
  if (n < 1) throw InvalidInput("classical_moment: empty profile");
  BigInteger num = double_factorial(static_cast<unsigned>(n - 1));
  for (auto l : profile.counts) {
    if (l % 2 != 0) return 0;
    num *= double_factorial(l);
  }
  BigRational out(num, double_factorial(static_cast<unsigned>(n) + profile.total() - 1));
  out.canonicalize();
  return out;
}

BigRational halflib_moment_printed(const OccurrenceProfile& profile) {
  const int n = profile.n();
  if (n < 1) throw InvalidInput("halflib_moment_printed: empty profile");
  const unsigned sum = profile.total();
  BigInteger num = int_pow(4, sum) * factorial(2 * static_cast<unsigned>(n) - 1);
  for (auto l : profile.counts) num *= factorial(l);
  BigRational out(num, factorial(2 * static_cast<unsigned>(n) + sum - 1));
  out.canonicalize();
  return out;
}

BigRational halflib_moment_derived(const OccurrenceProfile& profile) {
  const int n = profile.n();
  if (n < 1) throw InvalidInput("halflib_moment_derived: empty profile");
  BigInteger num = factorial(static_cast<unsigned>(n - 1));
  for (auto l : profile.counts) num *= factorial(l);
  BigRational out(num, factorial(static_cast<unsigned>(n) + profile.total() - 1));
  out.canonicalize();
  return out;
}

std::optional<OccurrenceProfile> halflib_word_reduce(const Word& word, int n) {
  word.check_alphabet(n);
  std::vector<int> odd(static_cast<std::size_t>(n), 0);
  std::vector<int> even(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    // Positions are 1-based: index 0 is position 1 (odd).
    auto& bucket = (i % 2 == 0) ? odd : even;
    ++bucket[static_cast<std::size_t>(word.letters[i] - 1)];
  }
  if (odd != even) return std::nullopt;
  OccurrenceProfile p;
  p.semantics = ProfileSemantics::per_parity;
  p.counts.assign(odd.begin(), odd.end());
  return p;
}

FreeQParam FreeQParam::for_dimension(int n) {
  if (n < 3) {
    throw DomainError("the q-series needs n >= 3 (n = 2 gives q = -1); got n = " +
                      std::to_string(n));
  }
  const double nd = n;
  return {n, (-nd + std::sqrt(nd * nd - 4.0)) / 2.0};
}

double free_even_moment_qseries(unsigned l, int n) {
  const double q = FreeQParam::for_dimension(n).q;
  const int lim = static_cast<int>(l) + 1;
  double sum = 0.0;
  for (int r = -lim; r <= lim; ++r) {
    if (r == 0) continue;
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    const double c = binomial(2 * l + 2, static_cast<unsigned>(static_cast<int>(l) + r + 1)).get_d();
    sum += sign * c * r / (1.0 + std::pow(q, r));
  }
  return 1.0 / std::pow(n + 1.0, static_cast<double>(l)) * (q + 1.0) / (q - 1.0) / (l + 1.0) * sum;
}

BigRational limit_moment(PairingCategory category, unsigned l) {
  switch (category) {
    case PairingCategory::classical:
      return BigRational(double_factorial(2 * l));
    case PairingCategory::half:
      return BigRational(factorial(l));
    case PairingCategory::free:
      return BigRational(catalan(l));
    case PairingCategory::even_crossings:
      break;
  }
  throw InvalidInput("no limit law for category " + std::string(name(category)));
}

BigRational limit_moment_of_order(PairingCategory category, unsigned order) {
  if (order % 2 != 0) return 0;
  return limit_moment(category, order / 2);
}

namespace {

BigRational single_letter_moment(PairingCategory category, unsigned l, int n,
                                 const WeingartenEngine& engine) {
  switch (category) {
    case PairingCategory::classical: {
      OccurrenceProfile p{std::vector<unsigned>(static_cast<std::size_t>(n), 0u),
                          ProfileSemantics::total_occurrence};
      p.counts[0] = 2 * l;
      return classical_moment(p);
    }
    case PairingCategory::half: {
      OccurrenceProfile p{std::vector<unsigned>(static_cast<std::size_t>(n), 0u),
                          ProfileSemantics::per_parity};
      p.counts[0] = l;
      return halflib_moment_derived(p);
    }
    case PairingCategory::free:
      return engine.integrate_word(constant_word(2 * l, 1), n, category);
    case PairingCategory::even_crossings:
      break;
  }
  throw InvalidInput("convergence is defined for classical, half and free only");
}

double relative_gap(const BigRational& value, const BigRational& reference) {
  if (reference == 0) return to_double(abs(value));
  return to_double(abs(value - reference) / abs(reference));
}

}  // namespace

ConvergenceReport convergence_report(PairingCategory category, unsigned l,
                                     std::span<const int> n_list,
                                     const WeingartenEngine& engine) {
  ConvergenceReport report;
  report.category = category;
  report.l = l;
  const BigRational limit = limit_moment(category, l);
  std::vector<int> ns(n_list.begin(), n_list.end());
  std::sort(ns.begin(), ns.end());
  for (int n : ns) {
    if (n < 1) throw InvalidInput("dimension n must be positive");
    ConvergenceRow row;
    row.n = n;
    row.moment = single_letter_moment(category, l, n, engine);
    row.scaled = row.moment * BigRational(int_pow(n, l));
    row.limit = limit;
    row.relative_gap = relative_gap(row.scaled, limit);
    if (!report.rows.empty() && row.relative_gap > report.rows.back().relative_gap) {
      report.shrinking = false;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

IndependenceReport independence_check(PairingCategory category, unsigned l_a, unsigned l_b,
                                      int n) {
  if (category != PairingCategory::classical && category != PairingCategory::half) {
    throw InvalidInput("independence_check applies to classical and half only");
  }
  if (n < 2) throw InvalidInput("independence_check needs two coordinates (n >= 2)");
  const auto semantics = category == PairingCategory::classical
                             ? ProfileSemantics::total_occurrence
                             : ProfileSemantics::per_parity;
  auto evaluate = [&](const OccurrenceProfile& p) {
    return category == PairingCategory::classical ? classical_moment(p)
                                                  : halflib_moment_derived(p);
  };
  auto gaps = [&](int dim, BigRational* mixed_out, BigRational* product_out) {
    OccurrenceProfile mixed{std::vector<unsigned>(static_cast<std::size_t>(dim), 0u), semantics};
    mixed.counts[0] = l_a;
    mixed.counts[1] = l_b;
    OccurrenceProfile only_a = mixed;
    only_a.counts[1] = 0;
    OccurrenceProfile only_b = mixed;
    only_b.counts[0] = 0;
    const BigRational m = evaluate(mixed);
    const BigRational prod = evaluate(only_a) * evaluate(only_b);
    if (mixed_out) *mixed_out = m;
    if (product_out) *product_out = prod;
    return relative_gap(m, prod);
  };
  IndependenceReport r;
  r.category = category;
  r.l_a = l_a;
  r.l_b = l_b;
  r.n = n;
  r.relative_gap = gaps(n, &r.mixed, &r.product);
  r.relative_gap_doubled = gaps(2 * n, nullptr, nullptr);
  r.decays_like_one_over_n =
      (r.relative_gap == 0.0 && r.relative_gap_doubled == 0.0) ||
      (r.relative_gap_doubled > 0.0 && r.relative_gap / r.relative_gap_doubled >= 1.5);
  return r;
}

std::string_view name(Verdict verdict) {
  switch (verdict) {
    case Verdict::exact_match:
      return "EXACT-MATCH";
    case Verdict::match:
      return "MATCH";
    case Verdict::mismatch:
      return "MISMATCH";
    case Verdict::undefined:
      return "UNDEFINED";
  }
  return "?";
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

AuditRow exact_row(const Word& w, PairingCategory c, int n, const BigRational& oracle,
                   std::string formula, const BigRational& value) {
  AuditRow row{w, c, n, oracle, std::move(formula), to_string(value), Verdict::mismatch, 0.0};
  row.verdict = (value == oracle) ? Verdict::exact_match : Verdict::mismatch;
  row.abs_gap = to_double(abs(value - oracle));
  return row;
}

bool is_constant(const Word& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [&](int l) { return l == w.letters.front(); });
}

}  // namespace

std::vector<AuditRow> closed_form_audit(const AuditOptions& options,
                                        const WeingartenEngine& engine) {
  std::vector<AuditRow> rows;
  for (PairingCategory category : options.categories) {
    for (int n : options.n_set) {
      if (n < 1) throw InvalidInput("dimension n must be positive");
      std::vector<Word> words = words_up_to(n, options.k_max);
      if (category == PairingCategory::free) {
        // The series only covers x_1^{2l}.
        std::erase_if(words, [](const Word& w) {
          return w.size() % 2 != 0 || !is_constant(w) || (!w.empty() && w.letters.front() != 1);
        });
      }
      const auto oracle = kernels::omp::integrate_batch(
          words, [&](const Word& w) { return engine.integrate_word(w, n, category); });

      for (std::size_t i = 0; i < words.size(); ++i) {
        const Word& w = words[i];
        switch (category) {
          case PairingCategory::classical:
            rows.push_back(exact_row(w, category, n, oracle[i], "classical_moment",
                                     classical_moment(classical_profile(w, n))));
            break;
          case PairingCategory::half:
          case PairingCategory::even_crossings: {
            const auto profile = halflib_word_reduce(w, n);
            const BigRational derived = profile ? halflib_moment_derived(*profile) : 0;
            rows.push_back(exact_row(w, category, n, oracle[i], "halflib_derived", derived));
            if (category == PairingCategory::half) {
              const BigRational printed = profile ? halflib_moment_printed(*profile) : 0;
              rows.push_back(exact_row(w, category, n, oracle[i], "halflib_printed", printed));
            }
            break;
          }
          case PairingCategory::free: {
            AuditRow row{w, category, n, oracle[i], "free_qseries", "-", Verdict::undefined, 0.0};
            if (n >= 3) {
              const double series = free_even_moment_qseries(static_cast<unsigned>(w.size() / 2), n);
              row.formula_value = format_real(series);
              row.abs_gap = std::fabs(series - to_double(oracle[i]));
              row.verdict = row.abs_gap <= options.real_tolerance ? Verdict::match : Verdict::mismatch;
            }
            rows.push_back(std::move(row));
            break;
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace nsphere
