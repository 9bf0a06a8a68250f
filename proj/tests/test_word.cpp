#include <doctest.h>

#include <random>

#include "cubedist/error.hpp"
#include "cubedist/word.hpp"
#include "oracles.hpp"

using namespace cubedist;

TEST_SUITE("freegroup") {
  TEST_CASE("parse and format round trip") {
    Alphabet a;
    Word w = parse_word(a, "a b^-1 c^3 a^-2");
    CHECK(w.size() == 7);
    CHECK(a.size() == 3);
    CHECK(format_word(a, w) == "a b^-1 c c c a^-1 a^-1");
    CHECK(parse_word(static_cast<const Alphabet&>(a), format_word(a, w)) == w);
    CHECK(format_word(a, {}) == "");
  }

  TEST_CASE("parse rejects unknown names without autoregister") {
    Alphabet a({"x", "y"});
    CHECK_THROWS_AS(parse_word(static_cast<const Alphabet&>(a), "x z"), Error);
    try {
      parse_word(static_cast<const Alphabet&>(a), "z");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadLetter);
    }
    CHECK_THROWS_AS(parse_word(a, "x^", true), Error);
    CHECK_THROWS_AS(a.intern("bad name"), Error);
  }

  TEST_CASE("reduce matches naive cancellation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
      Word w = oracle::random_word(rng, 3, trial % 40);
      Word r = reduce(w);
      CHECK(r == oracle::naive_reduce(w));
      CHECK(is_reduced(r));
      CHECK(reduce(concat(w, invert(w))).empty());
    }
  }

  TEST_CASE("powers and inverses") {
    Alphabet a;
    Word u = parse_word(a, "a b");
    CHECK(power(u, 0).empty());
    CHECK(format_word(a, power(u, 2)) == "a b a b");
    CHECK(format_word(a, power(u, -1)) == "b^-1 a^-1");
    CHECK(is_positive(u));
    CHECK_FALSE(is_positive(invert(u)));
  }

  TEST_CASE("substitute agrees with letterwise oracle") {
    std::mt19937_64 rng(11);
    std::vector<Word> images;
    for (int g = 0; g < 3; ++g) images.push_back(oracle::random_word(rng, 3, 4));
    for (int trial = 0; trial < 200; ++trial) {
      Word w = oracle::random_word(rng, 3, 12);
      Word got = substitute(w, [&](GenId g) -> const Word& { return images[g]; });
      Word want = oracle::substitute_letters(w, [&](GenId g) { return images[g]; });
      CHECK(got == want);
    }
  }
}
