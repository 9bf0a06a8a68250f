#include <doctest.h>

#include "cubedist/automorphism.hpp"
#include "cubedist/error.hpp"
#include "oracles.hpp"

using namespace cubedist;

namespace {

// phi^n by repeated letterwise substitution with naive reduction.
Word naive_iter(const Automorphism& a, Word w, int n) {
  for (int i = 0; i < n; ++i) w = oracle::substitute_letters(w, [&](GenId g) { return a.images[g]; });
  return w;
}

Word a_power(int i, int n) { return Word(static_cast<std::size_t>(n), pos(static_cast<GenId>(i - 1))); }

}  // namespace

TEST_SUITE("automorphism") {
  TEST_CASE("phi images") {
    Automorphism a = phi(2, 2);
    CHECK(format_word(a.alphabet, a.images[0]) == "A1");
    CHECK(format_word(a.alphabet, a.images[1]) == "A1 A2 A1^-1");
    CHECK(format_word(a.alphabet, a.images[2]) == "A1 A2 B1");
    CHECK(format_word(a.alphabet, a.images[3]) == "A1 A2 B1 B2 A1^-1");
    CHECK_THROWS_AS(phi(0, 0), Error);
    CHECK_THROWS_AS(phi(2, 3), Error);
  }

  TEST_CASE("apply_iter agrees with naive iteration and the closed forms") {
    for (int m = 1; m <= 4; ++m) {
      Automorphism a = phi(m, m);
      for (int n = 0; n <= 10; ++n) {
        for (int k = 1; k <= m; ++k) {
          Word got = apply_iter(a, pos(static_cast<GenId>(k - 1)), n);
          CHECK(got == naive_iter(a, Word{pos(static_cast<GenId>(k - 1))}, n));
          CHECK(got == closed_prodA(m, k, n));
        }
        // phi^n(B_1) = A_1^n .. A_m^n B_1
        Word want;
        for (int i = 1; i <= m; ++i) {
          Word p = a_power(i, n);
          want.insert(want.end(), p.begin(), p.end());
        }
        want.push_back(pos(static_cast<GenId>(m)));
        CHECK(apply_iter(a, pos(static_cast<GenId>(m)), n) == want);
      }
    }
  }

  TEST_CASE("linear form of phi^n(B_k)") {
    for (int m = 1; m <= 4; ++m)
      for (int k = 1; k <= m; ++k)
        for (int n = 1; n <= 5; ++n) {
          LinearForm f = verify_linear_form(m, k, n);
          CHECK_MESSAGE(f.ok, "m=" << m << " k=" << k << " n=" << n << ": " << f.reason);
        }
  }

  TEST_CASE("growth rates") {
    for (int n = 4; n <= 40; n += 4) {
      double q = static_cast<double>(growth(phi(2, 2), n)) / (static_cast<double>(n) * n);
      double l = static_cast<double>(growth(phi(2, 1), n)) / n;
      CHECK(q > 0.25);
      CHECK(q < 4.0);
      CHECK(l > 0.5);
      CHECK(l < 8.0);
    }
  }

  TEST_CASE("size limit") {
    try {
      apply_iter(phi(4, 4), pos(7), 200, 1000);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SizeLimit);
    }
  }
}
