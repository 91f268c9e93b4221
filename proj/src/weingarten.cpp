#include "nsphere/weingarten.hpp"

#include <future>
#include <unordered_map>

#include "nsphere/errors.hpp"
#include "nsphere/kernels.hpp"

namespace nsphere {

namespace {

void check_degree(std::size_t k, int n) {
  if (k == 0 || k % 2 != 0) {
    throw InvalidInput("Gram matrices need an even k >= 2; got k = " + std::to_string(k));
  }
  if (n < 1) throw InvalidInput("dimension n must be positive; got " + std::to_string(n));
}

std::string describe(std::size_t k, int n, PairingCategory category) {
  return "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ", category=" +
         std::string(name(category));
}

}  // namespace

RationalMatrix gram_matrix(std::size_t k, int n, PairingCategory category) {
  check_degree(k, n);
  const auto basis = enumerate_pairings(k, category);
  return kernels::omp::gram(basis, n);
}

BigRational meander_determinant(std::size_t k, int n, PairingCategory category) {
  if (k == 0) return 1;
  if (k % 2 != 0) throw InvalidInput("meander determinant needs even k");
  return determinant(gram_matrix(k, n, category));
}

WeingartenTable build_weingarten_table(std::size_t k, int n, PairingCategory category,
                                       SingularPolicy policy) {
  check_degree(k, n);
  WeingartenTable t;
  t.k = k;
  t.n = n;
  t.category = category;
  t.basis = enumerate_pairings(k, category);
  t.gram = kernels::omp::gram(t.basis, n);
  try {
    t.wg = invert(t.gram);
  } catch (const SingularMatrix&) {
    if (policy == SingularPolicy::reject) {
      throw SingularGram("Gram matrix is singular (" + describe(k, n, category) +
                         "); the Weingarten matrix does not exist");
    }
    t.wg = pseudo_inverse(t.gram);
    t.pseudo = true;
  }
  t.row_sums.assign(t.basis.size(), 0);
  for (std::size_t p = 0; p < t.basis.size(); ++p) {
    for (const auto& v : t.wg.row(p)) t.row_sums[p] += v;
  }
  return t;
}

struct WeingartenEngine::Slot {
  std::shared_future<std::shared_ptr<const WeingartenTable>> ready;
};

std::shared_ptr<const WeingartenTable> WeingartenEngine::table(std::size_t k, int n,
                                                               PairingCategory category) const {
  check_degree(k, n);
  if (options_.caps.enforce && k > options_.caps.cap_for(category)) {
    throw InvalidInput("k = " + std::to_string(k) + " exceeds the " +
                       std::string(name(category)) + " cap of " +
                       std::to_string(options_.caps.cap_for(category)) +
                       " (use the cap override)");
  }
  const Key key{k, n, category};
  std::promise<std::shared_ptr<const WeingartenTable>> promise;
  std::shared_ptr<Slot> slot;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto& entry = cache_[key];
    if (!entry) {
      entry = std::make_shared<Slot>();
      entry->ready = promise.get_future().share();
      owner = true;
    }
    slot = entry;
  }
  if (owner) {
    try {
      promise.set_value(std::make_shared<const WeingartenTable>(
          build_weingarten_table(k, n, category, options_.singular)));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return slot->ready.get();
}

std::size_t WeingartenEngine::cached_tables() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

bool has_odd_letter(const Word& word) {
  std::unordered_map<int, int> counts;
  for (int l : word.letters) counts[l] ^= 1;
  for (const auto& [letter, parity] : counts)
    if (parity) return true;
  return false;
}

BigRational WeingartenEngine::integrate_word(const Word& word, int n,
                                             PairingCategory category) const {
  if (n < 1) throw InvalidInput("dimension n must be positive");
  word.check_alphabet(n);
  if (word.empty()) return 1;
  if (word.size() % 2 != 0 || has_odd_letter(word)) return 0;
  const auto t = table(word.size(), n, category);
  BigRational sum = 0;
  for (std::size_t p = 0; p < t->basis.size(); ++p) {
    if (delta_kernel(t->basis[p], word.span())) sum += t->row_sums[p];
  }
  return sum;
}

BigRational WeingartenEngine::integrate_haar_monomial(const Word& rows, const Word& cols, int n,
                                                      PairingCategory category) const {
  if (rows.size() != cols.size()) throw InvalidInput("row and column words differ in length");
  if (n < 1) throw InvalidInput("dimension n must be positive");
  rows.check_alphabet(n);
  cols.check_alphabet(n);
  if (rows.empty()) return 1;
  if (rows.size() % 2 != 0) return 0;
  const auto t = table(rows.size(), n, category);
  std::vector<std::size_t> row_hits;
  std::vector<std::size_t> col_hits;
  for (std::size_t p = 0; p < t->basis.size(); ++p) {
    if (delta_kernel(t->basis[p], rows.span())) row_hits.push_back(p);
    if (delta_kernel(t->basis[p], cols.span())) col_hits.push_back(p);
  }
  BigRational sum = 0;
  for (auto p : row_hits)
    for (auto q : col_hits) sum += t->wg(p, q);
  return sum;
}

const WeingartenEngine& default_engine() {
  static const WeingartenEngine engine;
  return engine;
}

std::shared_ptr<const WeingartenTable> weingarten_matrix(std::size_t k, int n,
                                                         PairingCategory category) {
  return default_engine().table(k, n, category);
}

BigRational integrate_word(const Word& word, int n, PairingCategory category) {
  return default_engine().integrate_word(word, n, category);
}

BigRational integrate_haar_monomial(const Word& rows, const Word& cols, int n,
                                    PairingCategory category) {
  return default_engine().integrate_haar_monomial(rows, cols, n, category);
}

}  // namespace nsphere
