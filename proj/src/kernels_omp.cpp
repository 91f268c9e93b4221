#include <omp.h>

#include <exception>
#include <mutex>

#include "nsphere/kernels.hpp"

namespace nsphere::kernels {

namespace {

// Exceptions may not leave an OpenMP region; the first one is parked here
// and rethrown after the join.
class FirstError {
 public:
  template <typename Fn>
  void run(Fn&& fn) noexcept {
    try {
      fn();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

int max_threads() { return omp_get_max_threads(); }

namespace omp {

RationalMatrix gram(std::span<const Pairing> basis, int n) {
  const auto m = static_cast<std::ptrdiff_t>(basis.size());
  RationalMatrix out(basis.size(), basis.size());
  // Symmetric: fill the upper triangle, mirror below.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    for (std::ptrdiff_t j = i; j < m; ++j) {
      const auto loops = join_loops(basis[static_cast<std::size_t>(i)],
                                    basis[static_cast<std::size_t>(j)]);
      BigRational v(int_pow(n, static_cast<unsigned>(loops)));
      out(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(v);
    }
  }
  return out;
}

RationalMatrix word_gram(std::span<const Word> rows, std::span<const Word> cols,
                         const Word& middle, const WordFunctional& f) {
  RationalMatrix out(rows.size(), cols.size());
  const auto total = static_cast<std::ptrdiff_t>(rows.size() * cols.size());
  FirstError errors;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto a = static_cast<std::size_t>(idx) / cols.size();
    const auto b = static_cast<std::size_t>(idx) % cols.size();
    errors.run([&] { out(a, b) = f(rows[a].reversed() + middle + cols[b]); });
  }
  errors.rethrow();
  return out;
}

std::vector<BigRational> integrate_batch(std::span<const Word> words, const WordFunctional& f) {
  std::vector<BigRational> out(words.size());
  const auto total = static_cast<std::ptrdiff_t>(words.size());
  FirstError errors;
#pragma omp parallel for schedule(dynamic, 32)
  for (std::ptrdiff_t i = 0; i < total; ++i) {
    errors.run([&] { out[static_cast<std::size_t>(i)] = f(words[static_cast<std::size_t>(i)]); });
  }
  errors.rethrow();
  return out;
}

std::vector<BigRational> leading_minors(const RationalMatrix& m) {
  std::vector<BigRational> out(m.rows());
  const auto size = static_cast<std::ptrdiff_t>(m.rows());
  FirstError errors;
  // Larger orders cost more; dynamic scheduling from the top keeps threads busy.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = size; i >= 1; --i) {
    const auto order = static_cast<std::size_t>(i);
    errors.run([&] { out[order - 1] = determinant(m.top_left(order, order)); });
  }
  errors.rethrow();
  return out;
}

}  // namespace omp

}  // namespace nsphere::kernels
