#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cubedist/complex.hpp"
#include "cubedist/distortion.hpp"
#include "cubedist/error.hpp"
#include "cubedist/presentation.hpp"
#include "cubedist/stallings.hpp"
#include "cubedist/wise.hpp"

namespace cli {

using namespace cubedist;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidParam, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidParam, "cannot write " + path);
  out << text;
}

std::string big_str(const BigInt& v) { return v.str(); }

FourthFamily fourth_of(const std::string& s) {
  if (s == "parallel") return FourthFamily::Parallel;
  if (s == "verbatim") return FourthFamily::Verbatim;
  throw Error(ErrorKind::InvalidParam, "--fourth-family must be parallel or verbatim, got " + s);
}

json family_params(const FamilyArgs& f) {
  json p{{"family", f.family}};
  if (f.family == "P") p["n"] = f.n;
  if (f.family == "Q" || f.family == "Qp") p.update({{"m", f.m}, {"fourth_family", f.fourth}});
  if (f.family == "G" || f.family == "chain" || f.family == "main") p.update({{"m", f.m}, {"k", f.k}});
  if (f.family == "main") p["primed"] = f.primed;
  if (f.family == "hnn") p.update({{"nt", f.nt}, {"ma", f.ma}});
  return p;
}

Presentation build_family(const FamilyArgs& f, const std::string& form = "s") {
  if (f.family == "P") return build_P(f.n);
  if (f.family == "Q") return build_Q(f.m, false, fourth_of(f.fourth));
  if (f.family == "Qp") return build_Q(f.m, true, fourth_of(f.fourth));
  if (f.family == "G") {
    GPresentations g = build_G(f.m, f.k);
    if (form == "s") return g.s_form;
    if (form == "fbc") return g.fbc_form;
    throw Error(ErrorKind::InvalidParam, "--form must be s or fbc");
  }
  if (f.family == "chain") return materialize(build_chain(f.k, f.m));
  if (f.family == "main") return materialize(build_main_amalgam(f.k, f.m, f.primed));
  if (f.family == "hnn") return build_hnn(f.nt, f.ma);
  throw Error(ErrorKind::InvalidParam, "unknown family " + f.family);
}

std::string cycle_text(const SquareComplex& c, const Cycle& cyc) {
  std::string out;
  for (std::size_t i = 0; i < cyc.nodes.size(); ++i) out += (i ? " " : "") + node_label(c, cyc.nodes[i]);
  return out;
}

std::vector<std::size_t> sub_edges(const SquareComplex& c, const Presentation& p, const std::string& name) {
  std::vector<std::size_t> out;
  for (const auto& w : p.subgroup(name))
    if (w.size() == 1) out.push_back(c.edge(p.alphabet.name(w[0].gen)));
  return out;
}

void large_link(Report& r, const SquareComplex& c, const std::string& what, double budget = 5e8) {
  LinkVerdict v = check_large_link(c, budget);
  json d{{"ok", v.ok}, {"girth_exact", v.girth_exact}};
  if (v.girth) d["girth"] = *v.girth;
  if (v.violation) d["violation"] = cycle_text(c, *v.violation);
  r.details["large_link"][what] = d;
  if (!v.ok) {
    r.violation("large link on " + what + ": cycle " + cycle_text(c, *v.violation));
    return;
  }
  std::string g;
  if (!v.girth_exact)
    g = ">= 4 (exact girth skipped above --girth-budget)";
  else
    g = v.girth ? std::to_string(*v.girth) : "none (links are forests)";
  r.say("large link on " + what + ": OK, girth " + g);
}

// Minimum link distance between ends of alpha/beta edges, using only the squares flagged in keep.
std::optional<int> alpha_beta_separation(const SquareComplex& c, const Presentation& q,
                                         const std::vector<std::size_t>& edge_map, const std::vector<bool>& keep,
                                         int depth) {
  std::vector<std::size_t> nodes;
  for (const auto& name : q.alphabet.names()) {
    if (name.rfind("alpha", 0) != 0 && name.rfind("beta", 0) != 0) continue;
    std::size_t e = edge_map[q.alphabet.id(name)];
    nodes.push_back(end_node(e, false));
    nodes.push_back(end_node(e, true));
  }
  return min_separation(c, corner_graph(c, keep), nodes, depth).min_distance;
}

void emit_link_dot(Report& r, const SquareComplex& c, const std::string& path, int vertex) {
  if (path.empty()) return;
  if (vertex < 0 || vertex >= c.vertex_count())
    throw Error(ErrorKind::InvalidParam, "--dot-vertex out of range");
  write_file(path, to_dot(link(c, vertex)));
  r.say("link of vertex " + std::to_string(vertex) + " written to " + path);
}

std::string fmt_double(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

}  // namespace

Report run_sigma(int m, const std::vector<std::size_t>& carve_args) {
  Report r;
  r.command = "sigma";
  r.params = {{"m", m}};
  Alphabet a;
  std::vector<GenId> ids;
  for (int i = 1; i <= m; ++i) ids.push_back(a.intern("x" + std::to_string(i)));
  Word s = sigma(ids);
  r.details["length"] = s.size();
  r.details["no_repeat"] = !check_no_repeat(s).has_value();
  if (carve_args.empty()) {
    r.say(format_word(a, s));
    r.details["word"] = format_word(a, s);
    return r;
  }
  if (carve_args.size() != 2) throw Error(ErrorKind::InvalidParam, "--carve takes COUNT LEN");
  r.params["carve"] = carve_args;
  json blocks = json::array();
  for (const Word& b : carve(s, carve_args[0], carve_args[1])) {
    r.say(format_word(a, b));
    blocks.push_back(format_word(a, b));
  }
  r.details["blocks"] = blocks;
  return r;
}

Report run_build(const FamilyArgs& f, const std::string& form, const std::string& out) {
  Report r;
  r.command = "build";
  r.params = family_params(f);
  if (f.family == "G") r.params["form"] = form;
  Presentation p = build_family(f, form);
  r.details = {{"generators", p.generator_count()}, {"relators", p.relators.size()}, {"vertices", p.vertex_count}};
  std::string text = to_text(p);
  if (out.empty()) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) r.say(line);
  } else {
    write_file(out, text);
    r.say("wrote " + std::to_string(p.generator_count()) + " generators, " + std::to_string(p.relators.size()) +
          " relators to " + out);
  }
  return r;
}

Report run_verify(const FamilyArgs& f, const std::string& presentation_file, const std::string& dot_path,
                  int dot_vertex, const Limits& lim) {
  Report r;
  r.command = "verify";
  if (!presentation_file.empty()) {
    r.params = {{"presentation", presentation_file}};
    Presentation p = from_text(read_file(presentation_file));
    SquareComplex c = build_complex(p);
    large_link(r, c, "complex", lim.girth_budget);
    emit_link_dot(r, c, dot_path, dot_vertex);
    return r;
  }
  r.params = family_params(f);

  if (f.family == "chain" || f.family == "main") {
    GlueResult g = f.family == "chain" ? chain_complex(f.k, f.m) : main_complex(f.m, f.primed);
    if (f.family == "main" && f.k != 1) r.say("note: the glued complex covers G * Q (k = 1); --k is ignored");
    large_link(r, g.complex, f.family + " complex", lim.girth_budget);
    if (f.family == "main") {
      Presentation q = build_Q(f.m, f.primed);
      std::vector<bool> keep(g.complex.squares().size(), false);
      for (std::size_t i = g.squares_from_a; i < keep.size(); ++i) keep[i] = true;
      auto sep = alpha_beta_separation(g.complex, q, g.edge_from_b, keep, lim.search_depth);
      if (sep) {
        r.details["alpha_beta_separation"] = *sep;
        r.say("alpha/beta separation inside Z: " + std::to_string(*sep) + " quarter turns");
      }
    }
    emit_link_dot(r, g.complex, dot_path, dot_vertex);
    return r;
  }

  Presentation p = build_family(f);
  SquareComplex c = build_complex(p);
  large_link(r, c, f.family + " complex", lim.girth_budget);

  if (f.family == "P" || f.family == "hnn") {
    // In the HNN complex the s-relators make F(t) distorted; the rose is checked inside the
    // P-part, i.e. with the corners of t-relator squares only.
    std::vector<bool> keep(c.squares().size(), true);
    if (f.family == "hnn") {
      const GenId s = p.alphabet.id("s");
      for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = p.relators[c.squares()[i].relator].at(0).gen != s;
    }
    std::vector<std::size_t> rose;
    for (auto e : sub_edges(c, p, "ultraconvex")) {
      rose.push_back(end_node(e, false));
      rose.push_back(end_node(e, true));
    }
    UltraconvexVerdict u = min_separation(c, corner_graph(c, keep), rose, lim.search_depth);
    json d{{"ok", u.ok}};
    if (u.min_distance) d["min_distance"] = *u.min_distance;
    r.details["ultraconvex"] = d;
    if (!u.ok)
      r.violation("ultra-convexity: " + node_label(c, u.node_a) + " and " + node_label(c, u.node_b) + " at distance " +
                  std::to_string(*u.min_distance));
    else
      r.say("ultra-convex rose: OK, min separation " + (u.min_distance ? std::to_string(*u.min_distance) : "none"));

    FlatVerdict fl = check_flat_exclusion(c, p);
    json fd{{"ok", fl.ok}, {"positive", fl.positive}, {"no_repeat", fl.no_repeat}};
    if (fl.four_cycle) fd["four_cycle"] = cycle_text(c, *fl.four_cycle);
    if (!fl.detail.empty()) fd["detail"] = fl.detail;
    r.details["flat_exclusion"] = fd;
    if (fl.ok)
      r.say("flat exclusion: OK");
    else if (fl.four_cycle)
      r.violation("flat exclusion: 4-cycle " + cycle_text(c, *fl.four_cycle) + " at the original vertex");
    else
      r.violation("flat exclusion: " + fl.detail);
  } else if (f.family == "G") {
    FlatVerdict fl = check_flat_exclusion(c, p);
    r.details["flats"] = fl.four_cycle.has_value();
    if (fl.four_cycle) r.say("flat found (expected for commuting squares): " + cycle_text(c, *fl.four_cycle));
  } else if (f.family == "Q" || f.family == "Qp") {
    std::vector<std::size_t> ids(p.generator_count());
    for (GenId g = 0; g < p.generator_count(); ++g) ids[g] = c.edge(p.alphabet.name(g));
    auto sep = alpha_beta_separation(c, p, ids, std::vector<bool>(c.squares().size(), true), lim.search_depth);
    if (sep) {
      r.details["alpha_beta_separation"] = *sep;
      r.say("alpha/beta separation: " + std::to_string(*sep) + " quarter turns");
    }
  }
  emit_link_dot(r, c, dot_path, dot_vertex);
  return r;
}

Report run_fold(const std::string& alphabet, const std::string& words_file, const std::vector<std::string>& members,
                const std::string& dot_path, const Limits& lim) {
  Report r;
  r.command = "fold";
  r.params = {{"alphabet", alphabet}, {"words", words_file}, {"seed", lim.seed}};
  Alphabet a;
  std::istringstream names(alphabet);
  for (std::string n; names >> n;) a.intern(n);
  std::vector<Word> words;
  std::istringstream in(read_file(words_file));
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    words.push_back(parse_word(static_cast<const Alphabet&>(a), line));
  }
  SubgroupGraph g = build_subgroup(words, lim.seed ? std::optional<std::uint64_t>(lim.seed) : std::nullopt);
  r.details = {{"vertices", g.vertex_count()}, {"edges", g.edges().size()}, {"rank", g.rank()},
               {"canonical", g.canonical()}};
  r.say("folded graph: " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edges().size()) +
        " edges, rank " + std::to_string(g.rank()));
  json mem = json::object();
  for (const auto& m : members) {
    bool yes = g.member(reduce(parse_word(static_cast<const Alphabet&>(a), m)));
    mem[m] = yes;
    r.say("member " + m + ": " + (yes ? "yes" : "no"));
  }
  if (!members.empty()) r.details["member"] = mem;
  if (!dot_path.empty()) {
    write_file(dot_path, g.to_dot(a));
    r.say("graph written to " + dot_path);
  }
  return r;
}

Report run_aut(int m, int k, const std::string& apply, int n, bool length_only, const Limits& lim) {
  Report r;
  r.command = "aut";
  r.params = {{"m", m}, {"k", k}, {"apply", apply}, {"n", n}};
  if (n < 0) throw Error(ErrorKind::InvalidParam, "--n must be >= 0");
  Automorphism a = phi(m, k);
  Word w = parse_word(static_cast<const Alphabet&>(a.alphabet), apply);
  Word img = apply_iter(a, w, n, lim.size_limit);
  r.details["length"] = img.size();
  if (length_only) {
    r.say(std::to_string(img.size()));
  } else {
    r.details["word"] = format_word(a.alphabet, img);
    r.say(format_word(a.alphabet, img));
  }
  return r;
}

Report run_distort(const FamilyArgs& f, int nmin, int nmax, const std::string& csv, const Limits& lim) {
  Report r;
  r.command = "distort";
  r.params = family_params(f);
  r.params.update({{"nmin", nmin}, {"nmax", nmax}});
  if (f.family == "chain" || f.family == "main") r.params["k"] = f.k;
  if (f.family == "Gmm") r.params["m"] = f.m;
  if (nmin < 0 || nmax < nmin) throw Error(ErrorKind::InvalidParam, "need 0 <= nmin <= nmax");

  auto sample = [&](int n) -> WitnessSample {
    if (f.family == "P") return witness_P(f.n, n, false);
    if (f.family == "chain") return witness_chain(f.k, f.m, n, false);
    if (f.family == "Gmm") return witness_Gmm(f.m, n, lim.size_limit);
    if (f.family == "main") return witness_main(f.k, f.m, n, false);
    if (f.family == "hnn") return witness_hnn(f.nt, f.ma, n, false);
    throw Error(ErrorKind::InvalidParam, "distort families are P, chain, Gmm, main, hnn; got " + f.family);
  };

  std::ostringstream table;
  table << "n,ambient_len,subgroup_len,log_iterates\n";
  std::vector<DistortionSample> samples;
  json rows = json::array();
  for (int n = nmin; n <= nmax; ++n) {
    WitnessSample s = sample(n);
    std::string logs;
    for (int k = 1; k <= 3; ++k) logs += (k > 1 ? ";" : "") + fmt_double(s.subgroup_len.iterated_log(k));
    const std::string len = s.subgroup_len.str(lim.print_digits);
    table << n << "," << big_str(s.ambient_len) << "," << len << "," << logs << "\n";
    rows.push_back({{"n", n}, {"ambient_len", big_str(s.ambient_len)}, {"subgroup_len", len}, {"log_iterates", logs}});
    if (n >= 1) samples.push_back(s.sample());
  }
  r.details["rows"] = rows;
  if (csv.empty()) {
    std::istringstream in(table.str());
    for (std::string line; std::getline(in, line);) r.say(line);
  } else {
    write_file(csv, table.str());
    r.say("wrote " + std::to_string(rows.size()) + " rows to " + csv);
  }
  if (samples.size() >= 5) {
    GrowthClass g = classify_growth(samples);
    r.details["growth"] = {{"tower_height", g.tower_height}, {"degree", g.degree}};
    r.say("growth ~ exp^" + std::to_string(g.tower_height) + "(n^" + fmt_double(g.degree) + ")");
  }
  return r;
}

Report run_report(const std::string& csv) {
  Report r;
  r.command = "report";
  r.params = {{"csv", csv}};
  std::istringstream in(read_file(csv));
  std::vector<DistortionSample> samples;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cols.push_back(c);
    if (cols.size() < 3) throw Error(ErrorKind::Parse, "row needs n, ambient_len, subgroup_len: " + line);
    DistortionSample s;
    try {
      s.n = std::stoll(cols[0]);
      s.ambient_len = BigInt(cols[1]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad number in row: " + line);
    }
    s.subgroup_len = TowerInt::parse(cols[2]);
    if (s.n >= 1) samples.push_back(std::move(s));
  }
  GrowthClass g = classify_growth(samples);
  r.details = {{"samples", samples.size()}, {"tower_height", g.tower_height}, {"degree", g.degree}};
  r.say("samples: " + std::to_string(samples.size()));
  r.say("tower height: " + std::to_string(g.tower_height));
  r.say("degree: " + fmt_double(g.degree));
  r.say("growth ~ exp^" + std::to_string(g.tower_height) + "(n^" + fmt_double(g.degree) + ")");
  return r;
}

Report run_glue(const FamilyArgs& f, const std::string& left, const std::string& right,
                const std::vector<std::string>& labels, const std::string& dot_path) {
  Report r;
  r.command = "glue";
  GlueResult g;
  if (!left.empty() || !right.empty()) {
    if (left.empty() || right.empty() || labels.empty())
      throw Error(ErrorKind::InvalidParam, "--left, --right and --labels go together");
    r.params = {{"left", left}, {"right", right}, {"labels", labels}};
    SquareComplex a = build_complex(from_text(read_file(left)));
    SquareComplex b = build_complex(from_text(read_file(right)));
    g = glue(a, b, pairs_by_label(a, b, labels));
  } else if (f.family == "chain") {
    r.params = family_params(f);
    g = chain_complex(f.k, f.m);
  } else if (f.family == "main") {
    r.params = family_params(f);
    g = main_complex(f.m, f.primed);
  } else {
    throw Error(ErrorKind::InvalidParam, "glue needs --family chain|main or --left/--right/--labels");
  }
  const SquareComplex& c = g.complex;
  r.details = {{"vertices", c.vertex_count()}, {"edges", c.edges().size()}, {"squares", c.squares().size()}};
  r.say("glued complex: " + std::to_string(c.vertex_count()) + " vertices, " + std::to_string(c.edges().size()) +
        " edges, " + std::to_string(c.squares().size()) + " squares");
  large_link(r, c, "glued complex");
  if (!dot_path.empty()) {
    write_file(dot_path, to_dot(c));
    r.say("complex written to " + dot_path);
  }
  return r;
}

}  // namespace cli
