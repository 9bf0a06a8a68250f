#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"
#include "cubedist/error.hpp"

namespace {

constexpr int kJsonVersion = 1;

void add_family_options(CLI::App* sub, cli::FamilyArgs& f, const std::vector<std::string>& families) {
  sub->add_option("--family", f.family, "Group family")->required()->check(CLI::IsMember(families));
  sub->add_option("--n", f.n, "P_n block size")->capture_default_str();
  sub->add_option("--m", f.m, "m parameter (Q, G, chain, main, Gmm)")->capture_default_str();
  sub->add_option("--k", f.k, "k parameter (G, chain, main)")->capture_default_str();
  sub->add_option("--nt", f.nt, "HNN: number of t letters")->capture_default_str();
  sub->add_option("--ma", f.ma, "HNN: number of a letters")->capture_default_str();
  sub->add_flag("--primed", f.primed, "main: use G_{m,m-1} and Q'_m");
  sub->add_option("--fourth-family", f.fourth, "Q: reading of the fourth relator family")
      ->check(CLI::IsMember({"parallel", "verbatim"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square complexes, Stallings folding and distortion witnesses for free-by-cyclic style groups"};
  app.require_subcommand(1);
  bool as_json = false;
  cli::Limits lim;
  app.add_flag("--json", as_json, "Print a JSON verdict instead of text");
  app.add_option("--seed", lim.seed, "Seed for randomized orders (0 keeps the natural order)")->capture_default_str();
  app.add_option("--size-limit", lim.size_limit, "Largest explicit word built while iterating automorphisms")
      ->capture_default_str();
  app.add_option("--print-digits", lim.print_digits, "Exact lengths with more digits print in tower form")
      ->capture_default_str();
  app.add_option("--girth-budget", lim.girth_budget, "Exact link girth is computed while nodes*corners stays below this")
      ->capture_default_str();
  app.add_option("--search-depth", lim.search_depth, "BFS depth for link separation searches")->capture_default_str();

  std::function<cli::Report()> run;

  int sigma_m = 3;
  std::vector<std::size_t> carve_args;
  auto* sigma = app.add_subcommand("sigma", "Print the Wise word over m letters, or carve it into blocks");
  sigma->add_option("--m", sigma_m, "Number of letters")->required();
  sigma->add_option("--carve", carve_args, "COUNT LEN")->expected(2);
  sigma->callback([&] { run = [&] { return cli::run_sigma(sigma_m, carve_args); }; });

  cli::FamilyArgs build_f;
  std::string form = "s", out;
  auto* build = app.add_subcommand("build", "Write a presentation in text form");
  add_family_options(build, build_f, {"P", "Q", "Qp", "G", "chain", "main", "hnn"});
  build->add_option("--form", form, "G: s-generator or free-by-cyclic form")
      ->check(CLI::IsMember({"s", "fbc"}))
      ->capture_default_str();
  build->add_option("--out", out, "Output file (stdout if absent)");
  build->callback([&] { run = [&] { return cli::run_build(build_f, form, out); }; });

  cli::FamilyArgs verify_f;
  std::string verify_file, verify_dot;
  int dot_vertex = 0;
  auto* verify = app.add_subcommand("verify", "Run the link, ultra-convexity and flat checks for a family");
  verify->add_option("--family", verify_f.family, "Group family")
      ->check(CLI::IsMember({"P", "Q", "Qp", "G", "chain", "main", "hnn"}));
  verify->add_option("--n", verify_f.n)->capture_default_str();
  verify->add_option("--m", verify_f.m)->capture_default_str();
  verify->add_option("--k", verify_f.k)->capture_default_str();
  verify->add_option("--nt", verify_f.nt)->capture_default_str();
  verify->add_option("--ma", verify_f.ma)->capture_default_str();
  verify->add_flag("--primed", verify_f.primed);
  verify->add_option("--fourth-family", verify_f.fourth)->check(CLI::IsMember({"parallel", "verbatim"}));
  verify->add_option("--presentation", verify_file, "Verify a presentation file instead of a family");
  verify->add_option("--emit-dot", verify_dot, "Write the link of --dot-vertex as DOT");
  verify->add_option("--dot-vertex", dot_vertex, "Vertex whose link is exported")->capture_default_str();
  verify->callback([&] {
    if (verify_f.family.empty() == verify_file.empty())
      throw CLI::ValidationError("verify", "give exactly one of --family and --presentation");
    run = [&] { return cli::run_verify(verify_f, verify_file, verify_dot, dot_vertex, lim); };
  });

  std::string alphabet, words_file, fold_dot;
  std::vector<std::string> members;
  auto* fold = app.add_subcommand("fold", "Stallings graph of a finitely generated subgroup");
  fold->add_option("--alphabet", alphabet, "Generator names, space separated")->required();
  fold->add_option("--words", words_file, "File with one generator word per line")->required();
  fold->add_option("--member", members, "Words to test for membership");
  fold->add_option("--emit-dot", fold_dot, "Write the folded graph as DOT");
  fold->callback([&] { run = [&] { return cli::run_fold(alphabet, words_file, members, fold_dot, lim); }; });

  int aut_m = 2, aut_k = 2, aut_n = 1;
  std::string apply;
  bool length_only = false;
  auto* aut = app.add_subcommand("aut", "Iterate phi_{m,k} on a word");
  aut->add_option("--m", aut_m)->required();
  aut->add_option("--k", aut_k)->required();
  aut->add_option("--apply", apply, "Letter or word over A1.., B1..")->required();
  aut->add_option("--n", aut_n, "Number of iterations")->capture_default_str();
  aut->add_flag("--length", length_only, "Print only the length");
  aut->callback([&] { run = [&] { return cli::run_aut(aut_m, aut_k, apply, aut_n, length_only, lim); }; });

  cli::FamilyArgs distort_f;
  int nmin = 1, nmax = 10;
  std::string csv;
  auto* distort = app.add_subcommand("distort", "Tabulate witness lengths for a distortion family");
  add_family_options(distort, distort_f, {"P", "chain", "Gmm", "main", "hnn"});
  distort->add_option("--nmin", nmin)->capture_default_str();
  distort->add_option("--nmax", nmax)->capture_default_str();
  distort->add_option("--csv", csv, "Write the table to this file");
  distort->callback([&] { run = [&] { return cli::run_distort(distort_f, nmin, nmax, csv, lim); }; });

  std::string report_csv;
  auto* report = app.add_subcommand("report", "Classify the growth of a distort CSV");
  report->add_option("--csv", report_csv)->required();
  report->callback([&] { run = [&] { return cli::run_report(report_csv); }; });

  cli::FamilyArgs glue_f;
  std::string left, right, glue_dot;
  std::vector<std::string> labels;
  auto* glue = app.add_subcommand("glue", "Glue square complexes and re-check links");
  glue->add_option("--family", glue_f.family, "chain or main")->check(CLI::IsMember({"chain", "main"}));
  glue->add_option("--m", glue_f.m)->capture_default_str();
  glue->add_option("--k", glue_f.k)->capture_default_str();
  glue->add_flag("--primed", glue_f.primed);
  glue->add_option("--left", left, "Presentation file of the first complex");
  glue->add_option("--right", right, "Presentation file of the second complex");
  glue->add_option("--labels", labels, "Generator labels to identify");
  glue->add_option("--emit-dot", glue_dot, "Write the glued complex as DOT");
  glue->callback([&] { run = [&] { return cli::run_glue(glue_f, left, right, labels, glue_dot); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  cli::Report r;
  std::string error;
  try {
    r = run();
  } catch (const cubedist::Error& e) {
    error = e.what();
  }
  if (as_json) {
    cli::json j{{"version", kJsonVersion}, {"command", r.command.empty() ? app.get_subcommands().front()->get_name() : r.command},
                {"params", r.params}, {"verdict", error.empty() ? r.verdict : "ERROR"}, {"details", r.details}};
    if (!error.empty()) j["details"] = {{"error", error}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) std::cout << line << "\n";
    if (!error.empty()) std::cerr << "error: " << error << "\n";
  }
  return error.empty() ? r.exit : cli::kUsage;
}
