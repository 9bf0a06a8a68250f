#pragma once

#include <string>

#include "cubedist/slp.hpp"
#include "cubedist/word.hpp"

namespace cubedist {

constexpr std::size_t kDefaultSizeLimit = 10'000'000;

// Endomorphism of a free group given by letter images (indexed by GenId).
struct Automorphism {
  Alphabet alphabet;
  std::vector<Word> images;

  Word apply(const Word& w) const;
};

// phi_{m,k} on A_1..A_m (ids 0..m-1), B_1..B_k (ids m..m+k-1):
//   A_i -> A_1..A_{i-1} A_i Abar_{i-1}..Abar_1
//   B_j -> A_1..A_m B_1..B_j Abar_{j-1}..Abar_1
// k = 0 is accepted (A-letters only) for the G_{m,0} presentation.
Automorphism phi(int m, int k);

// Reduced phi^n(w); reduces after every step and throws SizeLimit past cap letters.
Word apply_iter(const Automorphism& aut, const Word& w, int n, std::size_t cap = kDefaultSizeLimit);
Word apply_iter(const Automorphism& aut, Letter x, int n, std::size_t cap = kDefaultSizeLimit);

// A_1^n..A_{k-1}^n A_k Abar_{k-1}^n..Abar_1^n over the alphabet of phi(m, k').
Word closed_prodA(int m, int k, int n);

struct LinearForm {
  bool ok = false;
  Word u;  // positive middle factor when ok
  std::string reason;
};
// Checks reduce(phi^n(B_k)) = A_1^n..A_m^n . u . B_k . Abar_{k-1}^n..Abar_1^n with u positive.
LinearForm verify_linear_form(int m, int k, int n);

// max over basis letters of |phi^n(letter)|.
BigInt growth(const Automorphism& aut, int n, std::size_t cap = kDefaultSizeLimit);

}  // namespace cubedist
