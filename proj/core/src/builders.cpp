#include "cubedist/automorphism.hpp"
#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"
#include "cubedist/wise.hpp"

namespace cubedist {

namespace {

std::vector<std::string> names(const std::string& prefix, int count, const std::string& suffix = "") {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i) + suffix);
  return out;
}

std::vector<GenId> intern_all(Alphabet& a, const std::vector<std::string>& ns) {
  std::vector<GenId> ids;
  for (const auto& n : ns) ids.push_back(a.intern(n));
  return ids;
}

std::vector<Word> singletons(const std::vector<GenId>& ids) {
  std::vector<Word> out;
  for (GenId g : ids) out.push_back(Word{pos(g)});
  return out;
}

// y x y^-1 W^-1
Word conj_relator(Letter y, Letter x, const Word& w) {
  Word r{y, x, y.inverse()};
  Word wi = invert(w);
  r.insert(r.end(), wi.begin(), wi.end());
  return r;
}

}  // namespace

Presentation build_P_named(int n, const std::vector<std::string>& a_names,
                           const std::vector<std::string>& t_names) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "P_n needs n >= 1, got " + std::to_string(n));
  const std::size_t na = static_cast<std::size_t>(9 * n);
  if (a_names.size() != na || t_names.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::InvalidParam, "P_n needs 9n a-names and n t-names");
  Presentation p;
  p.family = "P";
  auto a = intern_all(p.alphabet, a_names);
  auto t = intern_all(p.alphabet, t_names);
  auto blocks = carve(sigma(a), na * static_cast<std::size_t>(n), 9);
  for (int i = 0; i < n; ++i)
    for (std::size_t j = 0; j < na; ++j)
      p.relators.push_back(conj_relator(pos(t[i]), pos(a[j]), blocks[i * na + j]));
  p.marked["distorted"] = singletons(a);
  p.marked["ultraconvex"] = singletons(t);
  return p;
}

Presentation build_P(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "P_n needs n >= 1, got " + std::to_string(n));
  return build_P_named(n, names("a", 9 * n), names("t", n));
}

namespace {

struct QLetters {
  std::vector<GenId> alpha, beta, c;
};

QLetters q_letters(const Presentation& q, int m) {
  QLetters l;
  for (int i = 1; i <= m; ++i) l.alpha.push_back(q.alphabet.id("alpha" + std::to_string(i)));
  for (int i = 1; i <= m + 1; ++i) l.beta.push_back(q.alphabet.id("beta" + std::to_string(i)));
  for (int j = 1; j <= 36 * m; ++j) l.c.push_back(q.alphabet.id("c" + std::to_string(j)));
  return l;
}

// X Y for diagonal d; see build_Q for the four families.
Word diagonal_path(const QLetters& l, int m, int d) {
  auto al = [&](int i) { return pos(l.alpha.at(i - 1)); };
  auto be = [&](int i) { return pos(l.beta.at(i - 1)); };
  if (d >= 1 && d <= m) {
    int i = d;
    if (i % 2) return Word{al((i + 1) / 2), be((i + 1) / 2)};
    return Word{be((i + 2) / 2).inverse(), al(i / 2).inverse()};
  }
  int k = d - m;
  if (k < 1 || k > m) throw Error(ErrorKind::InvalidParam, "diagonal index out of range");
  if (k % 2) return Word{al((m + k + 1) / 2), be((k + 1) / 2)};
  return Word{be((m + k + 2) / 2).inverse(), al(k / 2).inverse()};
}

void check_q_params(int m) {
  if (m < 2 || m % 2)
    throw Error(ErrorKind::InvalidParam, "Q_m needs an even m >= 2, got " + std::to_string(m));
}

std::vector<Word> q_blocks(const std::vector<GenId>& c, int diagonals) {
  const std::size_t p = c.size();
  if (p * p < 15 * static_cast<std::size_t>(diagonals) * p)
    throw Error(ErrorKind::TooShort, "p^2 >= 15 * diagonals * p fails");
  return carve(sigma(c), static_cast<std::size_t>(diagonals) * p, 15);
}

}  // namespace

Presentation build_Q(int m, bool primed, FourthFamily fourth) {
  check_q_params(m);
  const int p = 36 * m;
  const int diagonals = primed ? 2 * m - 1 : 2 * m;
  Presentation q;
  q.family = primed ? "Qp" : "Q";
  q.vertex_count = 2;
  for (const auto& n : names("alpha", m)) q.alphabet.intern(n);
  for (const auto& n : names("beta", m + 1)) q.alphabet.intern(n);
  for (const auto& n : names("c", p)) q.alphabet.intern(n);
  QLetters l = q_letters(q, m);
  q.tags.assign(q.alphabet.size(), VertexTag{});
  for (GenId g : l.alpha) q.tags[g] = VertexTag{1, 0};
  for (GenId g : l.beta) q.tags[g] = VertexTag{0, 1};
  for (GenId g : l.c) q.tags[g] = VertexTag{1, 1};
  q.tree = {l.beta.front()};

  auto blocks = q_blocks(l.c, diagonals);
  std::vector<Word> paths;
  for (int d = 1; d <= diagonals; ++d) {
    Word path = diagonal_path(l, m, d);
    paths.push_back(path);
    bool verbatim = fourth == FourthFamily::Verbatim && d > m && (d - m) % 2 == 0;
    for (int j = 0; j < p; ++j) {
      const Word& u = blocks[static_cast<std::size_t>((d - 1) * p + j)];
      Word r = path;
      if (verbatim) {
        Word ui = invert(u);
        r.insert(r.end(), ui.begin(), ui.end());
      }
      r.push_back(pos(l.c[j]));
      Word back = invert(path);
      r.insert(r.end(), back.begin(), back.end());
      Word ui = invert(u);
      r.insert(r.end(), ui.begin(), ui.end());
      q.relators.push_back(std::move(r));
    }
  }
  q.marked["distorted"] = singletons(l.c);
  q.marked["ultraconvex"] = paths;
  return q;
}

Word q_diagonal_path(const Presentation& q, int m, int d) { return diagonal_path(q_letters(q, m), m, d); }

Presentation build_Q_diagonal(int m, bool primed) {
  check_q_params(m);
  const int p = 36 * m;
  const int kmax = primed ? m - 1 : m;
  Presentation q;
  q.family = primed ? "Qp-diagonal" : "Q-diagonal";
  auto A = intern_all(q.alphabet, names("A", m));
  auto B = intern_all(q.alphabet, names("B", kmax));
  auto c = intern_all(q.alphabet, names("c", p));
  std::vector<GenId> diag = A;
  diag.insert(diag.end(), B.begin(), B.end());
  auto blocks = q_blocks(c, static_cast<int>(diag.size()));
  for (std::size_t d = 0; d < diag.size(); ++d)
    for (int j = 0; j < p; ++j)
      q.relators.push_back(conj_relator(pos(diag[d]), pos(c[j]), blocks[d * p + j]));
  q.marked["distorted"] = singletons(c);
  q.marked["ultraconvex"] = singletons(diag);
  return q;
}

GPresentations build_G(int m, int k) {
  if (m < 1 || k < 0 || k > m)
    throw Error(ErrorKind::InvalidParam, "G_{m,k} needs m >= 1 and 0 <= k <= m, got m=" + std::to_string(m) +
                                             " k=" + std::to_string(k));
  GPresentations g;
  Presentation& s = g.s_form;
  s.family = "G";
  auto sid = intern_all(s.alphabet, names("s", m + k + 1));
  auto S = [&](int i) { return pos(sid.at(i - 1)); };
  for (int i = 1; i <= m; ++i)
    s.relators.push_back(Word{S(i), S(i + 1), S(i).inverse(), S(i + 1).inverse()});
  for (int j = 1; j <= k; ++j)
    s.relators.push_back(Word{S(m + j + 1).inverse(), S(j), S(m + j + 1), S(m + j).inverse()});
  std::vector<Word> basis;
  for (int i = 1; i <= m; ++i) basis.push_back(Word{S(i + 1).inverse(), S(i)});
  for (int j = 1; j <= k; ++j) basis.push_back(Word{S(m + j + 1).inverse(), S(j)});
  s.marked["distorted"] = basis;

  Automorphism a = phi(m, k);
  Presentation& f = g.fbc_form;
  f.family = "G-fbc";
  f.alphabet = a.alphabet;
  GenId t = f.alphabet.intern("t");
  std::vector<GenId> ab;
  for (GenId x = 0; x < a.images.size(); ++x) {
    ab.push_back(x);
    f.relators.push_back(conj_relator(pos(t), pos(x), a.images[x]));
  }
  f.marked["distorted"] = singletons(ab);
  f.marked["stable"] = {Word{pos(t)}};
  return g;
}

void check_hnn_params(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorKind::InvalidParam, "HNN parameters must be positive");
  const long long N = n, M = m;
  if (9 * M * N > M * M)
    throw Error(ErrorKind::ConstraintViolated, "9mn <= m^2 fails: 9*" + std::to_string(m) + "*" +
                                                   std::to_string(n) + " = " + std::to_string(9 * M * N) +
                                                   " > " + std::to_string(M * M));
  if (9 * M > N * N)
    throw Error(ErrorKind::ConstraintViolated, "9m <= n^2 fails: 9*" + std::to_string(m) + " = " +
                                                   std::to_string(9 * M) + " > " + std::to_string(N * N));
}

Presentation build_hnn(int n, int m) {
  check_hnn_params(n, m);
  const long long N = n, M = m;
  Presentation p;
  p.family = "hnn";
  auto a = intern_all(p.alphabet, names("a", m));
  auto t = intern_all(p.alphabet, names("t", n));
  GenId s = p.alphabet.intern("s");
  auto wa = carve(sigma(a), static_cast<std::size_t>(N * M), 9);
  auto wt = carve(sigma(t), static_cast<std::size_t>(M), 9);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      p.relators.push_back(conj_relator(pos(t[i]), pos(a[j]), wa[static_cast<std::size_t>(i) * M + j]));
  for (int l = 0; l < m; ++l) p.relators.push_back(conj_relator(pos(s), pos(a[l]), wt[l]));
  p.marked["distorted"] = singletons(a);
  p.marked["ultraconvex"] = singletons(t);
  p.marked["stable"] = {Word{pos(s)}};
  return p;
}

}  // namespace cubedist
