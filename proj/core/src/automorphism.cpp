#include "cubedist/automorphism.hpp"

#include <algorithm>

#include "cubedist/error.hpp"

namespace cubedist {

Word Automorphism::apply(const Word& w) const {
  return substitute(w, [this](GenId g) -> const Word& { return images.at(g); });
}

Automorphism phi(int m, int k) {
  if (m < 1 || k < 0 || k > m)
    throw Error(ErrorKind::InvalidParam, "phi needs m >= 1 and 0 <= k <= m, got m=" + std::to_string(m) +
                                             " k=" + std::to_string(k));
  Automorphism a;
  for (int i = 1; i <= m; ++i) a.alphabet.intern("A" + std::to_string(i));
  for (int j = 1; j <= k; ++j) a.alphabet.intern("B" + std::to_string(j));
  auto A = [](int i) { return static_cast<GenId>(i - 1); };
  auto B = [m](int j) { return static_cast<GenId>(m + j - 1); };
  for (int i = 1; i <= m; ++i) {
    Word w;
    for (int l = 1; l < i; ++l) w.push_back(pos(A(l)));
    w.push_back(pos(A(i)));
    for (int l = i - 1; l >= 1; --l) w.push_back(neg(A(l)));
    a.images.push_back(w);
  }
  for (int j = 1; j <= k; ++j) {
    Word w;
    for (int l = 1; l <= m; ++l) w.push_back(pos(A(l)));
    for (int l = 1; l <= j; ++l) w.push_back(pos(B(l)));
    for (int l = j - 1; l >= 1; --l) w.push_back(neg(A(l)));
    a.images.push_back(w);
  }
  return a;
}

Word apply_iter(const Automorphism& aut, const Word& w, int n, std::size_t cap) {
  if (n < 0) throw Error(ErrorKind::InvalidParam, "iteration count must be non-negative");
  Word cur = reduce(w);
  for (int step = 0; step < n; ++step) {
    Word next;
    for (Letter x : cur) {
      const Word& img = aut.images.at(x.gen);
      if (x.positive()) {
        for (Letter y : img) push_reduced(next, y);
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(next, it->inverse());
      }
      if (next.size() > cap)
        throw Error(ErrorKind::SizeLimit, "iterate " + std::to_string(step + 1) + " exceeds " +
                                              std::to_string(cap) + " letters");
    }
    cur = std::move(next);
  }
  return cur;
}

Word apply_iter(const Automorphism& aut, Letter x, int n, std::size_t cap) {
  return apply_iter(aut, Word{x}, n, cap);
}

Word closed_prodA(int m, int k, int n) {
  if (m < 1 || k < 1 || k > m || n < 0)
    throw Error(ErrorKind::InvalidParam, "closed_prodA needs 1 <= k <= m and n >= 0");
  Word w;
  for (int l = 1; l < k; ++l)
    for (int r = 0; r < n; ++r) w.push_back(pos(static_cast<GenId>(l - 1)));
  w.push_back(pos(static_cast<GenId>(k - 1)));
  for (int l = k - 1; l >= 1; --l)
    for (int r = 0; r < n; ++r) w.push_back(neg(static_cast<GenId>(l - 1)));
  return w;
}

LinearForm verify_linear_form(int m, int k, int n) {
  if (m < 1 || k < 1 || k > m || n < 0)
    throw Error(ErrorKind::InvalidParam, "verify_linear_form needs 1 <= k <= m and n >= 0");
  Automorphism a = phi(m, k);
  const GenId bk = static_cast<GenId>(m + k - 1);
  Word w = apply_iter(a, pos(bk), n);
  Word prefix, suffix;
  for (int l = 1; l <= m; ++l)
    for (int r = 0; r < n; ++r) prefix.push_back(pos(static_cast<GenId>(l - 1)));
  for (int l = k - 1; l >= 1; --l)
    for (int r = 0; r < n; ++r) suffix.push_back(neg(static_cast<GenId>(l - 1)));
  LinearForm out;
  if (w.size() < prefix.size() + suffix.size() + 1) {
    out.reason = "word shorter than the required prefix and suffix";
    return out;
  }
  if (!std::equal(prefix.begin(), prefix.end(), w.begin())) {
    out.reason = "prefix is not A_1^n..A_m^n";
    return out;
  }
  if (!std::equal(suffix.rbegin(), suffix.rend(), w.rbegin())) {
    out.reason = "suffix is not Abar_{k-1}^n..Abar_1^n";
    return out;
  }
  Word middle(w.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
              w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
  if (middle.empty() || middle.back() != pos(bk)) {
    out.reason = "middle does not end in B_k";
    return out;
  }
  middle.pop_back();
  if (!is_positive(middle)) {
    out.reason = "middle factor is not positive";
    return out;
  }
  out.ok = true;
  out.u = std::move(middle);
  return out;
}

BigInt growth(const Automorphism& aut, int n, std::size_t cap) {
  std::size_t best = 0;
  for (GenId g = 0; g < aut.images.size(); ++g) best = std::max(best, apply_iter(aut, pos(g), n, cap).size());
  return BigInt(best);
}

}  // namespace cubedist
