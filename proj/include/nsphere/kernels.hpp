#pragma once

// Data-parallel kernels. Each kernel exists twice: a plain serial loop kept
// as the reference, and an OpenMP version used by the library. Tests assert
// the two agree exactly; bench/ times them against each other.

#include <functional>
#include <span>
#include <vector>

#include "nsphere/matrix.hpp"
#include "nsphere/pairing.hpp"
#include "nsphere/rational.hpp"
#include "nsphere/word.hpp"

namespace nsphere::kernels {

/// Maps a word to its exact integral. Must be safe to call concurrently.
using WordFunctional = std::function<BigRational(const Word&)>;

namespace serial {

/// G(p, q) = n^{loops(p v q)} over the basis.
RationalMatrix gram(std::span<const Pairing> basis, int n);

/// M(a, b) = f(reverse(rows[a]) + middle + cols[b]).
RationalMatrix word_gram(std::span<const Word> rows, std::span<const Word> cols,
                         const Word& middle, const WordFunctional& f);

std::vector<BigRational> integrate_batch(std::span<const Word> words, const WordFunctional& f);

/// det of every leading principal submatrix, orders 1..size.
std::vector<BigRational> leading_minors(const RationalMatrix& m);

}  // namespace serial

namespace omp {

RationalMatrix gram(std::span<const Pairing> basis, int n);

RationalMatrix word_gram(std::span<const Word> rows, std::span<const Word> cols,
                         const Word& middle, const WordFunctional& f);

std::vector<BigRational> integrate_batch(std::span<const Word> words, const WordFunctional& f);

std::vector<BigRational> leading_minors(const RationalMatrix& m);

}  // namespace omp

/// Threads OpenMP will use for the parallel kernels.
int max_threads();

}  // namespace nsphere::kernels
