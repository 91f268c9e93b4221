#include <thread>

#include "doctest.h"
#include "nsphere/closed_forms.hpp"
#include "nsphere/errors.hpp"
#include "nsphere/weingarten.hpp"
#include "oracle.hpp"

using namespace nsphere;
using oracle::Factor;

namespace {

const WeingartenEngine& pinv_engine() {
  static const WeingartenEngine e(WeingartenEngine::Options{SingularPolicy::pseudo_inverse, {}});
  return e;
}

BigRational Q(long p, long q) {
  BigRational r(p, q);
  r.canonicalize();
  return r;
}

constexpr auto C = PairingCategory::classical;
constexpr auto H = PairingCategory::half;
constexpr auto F = PairingCategory::free;
constexpr auto E = PairingCategory::even_crossings;

}  // namespace

TEST_CASE("k = 2 and k = 4 by hand") {
  for (auto c : {C, H, F, E}) {
    CHECK(integrate_word(Word{1, 1}, 3, c) == Q(1, 3));
    CHECK(integrate_word(Word{}, 3, c) == 1);
    CHECK(integrate_word(Word{1}, 3, c) == 0);
    CHECK(integrate_word(Word{1, 1, 1, 2}, 3, c) == 0);
  }
  CHECK(integrate_word(Word{1, 1, 1, 1}, 3, C) == Q(1, 5));
  CHECK(integrate_word(Word{1, 1, 1, 1}, 3, F) == Q(1, 6));
  CHECK(integrate_word(Word{1, 1, 1, 1}, 3, H) == Q(1, 6));
  CHECK(gram_matrix(4, 3, F) == RationalMatrix{{9, 3}, {3, 9}});
}

TEST_CASE("frozen values at n = 3 for the three letters patterns") {
  const Word w1{2, 1, 2, 1}, w2{1, 1, 2, 2}, w3{1, 2, 2, 1};
  CHECK(integrate_word(w1, 3, C) == Q(1, 15));
  CHECK(integrate_word(w2, 3, C) == Q(1, 15));
  CHECK(integrate_word(w3, 3, C) == Q(1, 15));
  CHECK(integrate_word(w1, 3, H) == 0);
  CHECK(integrate_word(w2, 3, H) == Q(1, 12));
  CHECK(integrate_word(w3, 3, H) == Q(1, 12));
  CHECK(integrate_word(w1, 3, F) == 0);
  CHECK(integrate_word(w2, 3, F) == Q(1, 12));
  CHECK(integrate_word(w3, 3, F) == Q(1, 12));
}

TEST_CASE("frozen free moments") {
  const Word x6 = constant_word(6, 1), x8 = constant_word(8, 1);
  CHECK(integrate_word(x6, 3, F) == Q(2, 21));
  CHECK(integrate_word(x6, 4, F) == Q(13, 280));
  CHECK(integrate_word(x6, 5, F) == Q(3, 115));
  CHECK(integrate_word(x8, 3, F) == Q(9, 154));
  CHECK(integrate_word(x8, 4, F) == Q(31, 1330));
  CHECK(integrate_word(x8, 5, F) == Q(37, 3335));
  CHECK(integrate_word(Word{1, 1, 2, 2, 3, 3}, 3, F) == Q(1, 84));
  CHECK(integrate_word(Word{1, 2, 1, 2, 3, 3}, 3, F) == 0);
}

TEST_CASE("half: balanced pairings reproduce the complex-sphere moments") {
  CHECK(integrate_word(constant_word(6, 1), 3, H) == Q(1, 10));
  CHECK(integrate_word(constant_word(6, 1), 4, H) == Q(1, 20));
  // the literal even-crossings set does not
  CHECK(integrate_word(constant_word(6, 1), 3, E) == Q(2, 15));
  CHECK(integrate_word(constant_word(6, 1), 4, E) == Q(17, 248));
  CHECK(integrate_word(Word{1, 2, 1, 2}, 3, H) == 0);
}

TEST_CASE("meander determinants against factored polynomials") {
  struct Case {
    std::size_t k;
    PairingCategory c;
    std::vector<Factor> f;
  };
  const std::vector<Case> cases{
      {4, F, {{{0, 1}, 2}, {{-1, 1}, 1}, {{1, 1}, 1}}},
      {4, H, {{{0, 1}, 2}, {{-1, 1}, 1}, {{1, 1}, 1}}},
      {4, C, {{{0, 1}, 3}, {{-1, 1}, 2}, {{2, 1}, 1}}},
      {6, F, {{{0, 1}, 5}, {{-1, 1}, 4}, {{1, 1}, 4}, {{-2, 0, 1}, 1}}},
      {6, H, {{{0, 1}, 6}, {{-2, 1}, 1}, {{-1, 1}, 5}, {{1, 1}, 5}, {{2, 1}, 1}}},
      {6, C, {{{0, 1}, 15}, {{-2, 1}, 5}, {{-1, 1}, 14}, {{2, 1}, 10}, {{4, 1}, 1}}},
      {6, E, {{{0, 1}, 10}, {{-1, 1}, 7}, {{1, 1}, 1}, {{2, 1}, 3}, {{-6, 1, 0, 1}, 1}}},
      {8, H,
       {{{0, 1}, 28}, {{-3, 1}, 1}, {{-2, 1}, 10}, {{-1, 1}, 23}, {{1, 1}, 23}, {{2, 1}, 10},
        {{3, 1}, 1}}},
      {8, F,
       {{{0, 1}, 14}, {{-1, 1}, 13}, {{1, 1}, 13}, {{-2, 0, 1}, 6}, {{-1, -1, 1}, 1},
        {{-1, 1, 1}, 1}}},
  };
  for (const auto& c : cases) {
    for (long n = 1; n <= 6; ++n) {
      CAPTURE(c.k);
      CAPTURE(name(c.c));
      CAPTURE(n);
      CHECK(meander_determinant(c.k, static_cast<int>(n), c.c) == oracle::eval_factored(c.f, n));
    }
  }
  CHECK(meander_determinant(6, 3, F) == 6967296);
  CHECK(meander_determinant(0, 3, C) == 1);
}

TEST_CASE("W G = I on invertible tables and Penrose identities on singular ones") {
  for (auto c : {C, H, F, E}) {
    for (std::size_t k = 2; k <= 6; k += 2) {
      for (int n = 1; n <= 4; ++n) {
        const auto t = build_weingarten_table(k, n, c, SingularPolicy::pseudo_inverse);
        const bool singular = meander_determinant(k, n, c) == 0;
        CHECK(t.pseudo == singular);
        if (!singular) {
          CHECK((t.gram * t.wg).is_identity());
          CHECK_NOTHROW(build_weingarten_table(k, n, c));
        } else {
          CHECK(t.gram * t.wg * t.gram == t.gram);
          CHECK(t.wg * t.gram * t.wg == t.wg);
          CHECK_THROWS_AS(build_weingarten_table(k, n, c), SingularGram);
        }
        CHECK(t.wg.symmetric());
      }
    }
  }
}

TEST_CASE("singular points and the pseudo-inverse engine") {
  CHECK_THROWS_AS(integrate_word(constant_word(6, 1), 2, C), SingularGram);
  CHECK_THROWS_AS(integrate_word(constant_word(4, 1), 1, F), SingularGram);
  // with the pseudo-inverse the classical n = 2 answers agree with the circle
  CHECK(pinv_engine().integrate_word(constant_word(6, 1), 2, C) == Q(5, 16));
  CHECK(pinv_engine().integrate_word(Word{1, 1, 1, 1, 2, 2}, 2, C) == Q(1, 16));
  for (auto c : {C, H, F})
    for (std::size_t k = 2; k <= 8; k += 2)
      CHECK(pinv_engine().integrate_word(constant_word(k, 1), 1, c) == 1);
}

TEST_CASE("guards and caps") {
  WeingartenEngine e;
  CHECK_THROWS_AS(e.table(3, 3, C), InvalidInput);
  CHECK_THROWS_AS(e.table(0, 3, C), InvalidInput);
  CHECK_THROWS_AS(e.table(4, 0, C), InvalidInput);
  CHECK_THROWS_AS(e.table(10, 3, C), InvalidInput);
  CHECK_THROWS_AS(e.integrate_word(Word{1, 4}, 3, C), InvalidInput);
  WeingartenEngine open(WeingartenEngine::Options{SingularPolicy::reject, {8, 12, false}});
  CHECK(open.table(10, 5, H)->basis.size() == 120);
  // balanced half k = 10 stays singular up to n = 4
  CHECK_THROWS_AS(open.table(10, 4, H), SingularGram);
}

TEST_CASE("engine cache builds each key once, also under concurrency") {
  WeingartenEngine e;
  std::vector<std::thread> pool;
  std::vector<std::shared_ptr<const WeingartenTable>> got(4);
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&, t] { got[static_cast<std::size_t>(t)] = e.table(6, 3, F); });
  for (auto& t : pool) t.join();
  for (const auto& g : got) CHECK(g == got[0]);
  CHECK(e.cached_tables() == 1);
  CHECK_THROWS_AS(e.table(6, 2, C), SingularGram);
  CHECK_THROWS_AS(e.table(6, 2, C), SingularGram);
}

TEST_CASE("property: traciality, reversal, relabeling") {
  const auto& e = pinv_engine();
  for (auto c : {C, H, F}) {
    for (int n = 2; n <= 3; ++n) {
      for (std::size_t len : {4u, 6u}) {
        for (const auto& w : words_of_length(n, len)) {
          const auto v = e.integrate_word(w, n, c);
          CHECK(e.integrate_word(w.rotated(2), n, c) == v);
          CHECK(e.integrate_word(w.reversed(), n, c) == v);
          std::vector<int> perm(static_cast<std::size_t>(n));
          for (int a = 0; a < n; ++a) perm[static_cast<std::size_t>(a)] = n - a;
          CHECK(e.integrate_word(w.relabeled(perm), n, c) == v);
        }
      }
    }
  }
}

TEST_CASE("property: classical integrals are commutative") {
  for (const auto& w : words_of_length(3, 4)) {
    CHECK(integrate_word(w, 3, C) == integrate_word(w.rotated(1), 3, C));
    auto sorted = w.letters;
    std::sort(sorted.begin(), sorted.end());
    CHECK(integrate_word(w, 3, C) == integrate_word(Word(sorted), 3, C));
  }
}

TEST_CASE("property: sum rule sum_i tr(u x_i x_i v) = tr(u v)") {
  const auto& e = pinv_engine();
  for (auto c : {C, H, F}) {
    for (int n = 2; n <= 3; ++n) {
      for (std::size_t len = 0; len <= 4; len += 2) {
        for (const auto& w : words_of_length(n, len)) {
          for (std::size_t cut = 0; cut <= len; ++cut) {
            Word u(std::vector<int>(w.letters.begin(), w.letters.begin() + static_cast<long>(cut)));
            Word v(std::vector<int>(w.letters.begin() + static_cast<long>(cut), w.letters.end()));
            BigRational s = 0;
            for (int i = 1; i <= n; ++i) s += e.integrate_word(u + Word{i, i} + v, n, c);
            CHECK(s == e.integrate_word(w, n, c));
          }
        }
      }
    }
  }
}

TEST_CASE("even-crossings breaks the sum rule") {
  const auto& e = pinv_engine();
  BigRational s = 0;
  for (int i = 1; i <= 3; ++i) s += e.integrate_word(Word{1, 1, 1, 1, i, i}, 3, E);
  CHECK(s != e.integrate_word(Word{1, 1, 1, 1}, 3, E));
}

TEST_CASE("haar monomials") {
  // u_11 u_11 integrates to 1/n on each category
  for (auto c : {C, H, F}) CHECK(integrate_haar_monomial(Word{1, 1}, Word{1, 1}, 3, c) == Q(1, 3));
  CHECK(integrate_haar_monomial(Word{1, 2}, Word{1, 1}, 3, C) == 0);
  // W is symmetric, so swapping the row and column indices changes nothing
  for (auto c : {C, H, F})
    for (const auto& cols : words_of_length(2, 4))
      CHECK(integrate_haar_monomial(Word{1, 2, 2, 1}, cols, 3, c) ==
            integrate_haar_monomial(cols, Word{1, 2, 2, 1}, 3, c));
  CHECK(integrate_haar_monomial(Word{1, 1, 2, 2}, Word{1, 1, 1, 1}, 3, F) == Q(1, 12));
  CHECK_THROWS_AS(integrate_haar_monomial(Word{1, 1}, Word{1}, 3, C), InvalidInput);
}

TEST_CASE("first row of the Haar monomials gives the word integrals") {
  for (auto c : {C, H, F})
    for (const auto& w : words_of_length(3, 4))
      CHECK(integrate_haar_monomial(constant_word(4, 1), w, 3, c) == integrate_word(w, 3, c));
}

TEST_CASE("has_odd_letter") {
  CHECK(has_odd_letter(Word{1, 2, 1}));
  CHECK_FALSE(has_odd_letter(Word{1, 2, 2, 1}));
}
