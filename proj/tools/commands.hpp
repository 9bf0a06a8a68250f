#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cubedist/automorphism.hpp"

namespace cli {

using json = nlohmann::json;

// Exit codes shared by every subcommand.
enum Exit { kOk = 0, kViolation = 1, kUsage = 2 };

// What a subcommand produced: human text for stdout plus the machine-readable verdict.
struct Report {
  std::string command;
  json params = json::object();
  std::string verdict = "OK";
  json details = json::object();
  std::vector<std::string> lines;
  int exit = kOk;

  void say(std::string line) { lines.push_back(std::move(line)); }
  void violation(const std::string& what) {
    verdict = "VIOLATION";
    exit = kViolation;
    say("VIOLATION " + what);
  }
};

struct Limits {
  std::size_t size_limit = cubedist::kDefaultSizeLimit;
  std::size_t expand_cap = 1'000'000;
  std::size_t print_digits = 80;
  int search_depth = 12;
  double girth_budget = 5e8;  // nodes * corners above which only girth >= 4 is established
  std::uint64_t seed = 0;
};

struct FamilyArgs {
  std::string family;
  int n = 1, m = 2, k = 1, nt = 81, ma = 729;
  bool primed = false;
  std::string fourth = "parallel";
};

Report run_sigma(int m, const std::vector<std::size_t>& carve);
Report run_build(const FamilyArgs& f, const std::string& form, const std::string& out);
Report run_verify(const FamilyArgs& f, const std::string& presentation_file, const std::string& dot_path,
                  int dot_vertex, const Limits& lim);
Report run_fold(const std::string& alphabet, const std::string& words_file, const std::vector<std::string>& members,
                const std::string& dot_path, const Limits& lim);
Report run_aut(int m, int k, const std::string& apply, int n, bool length_only, const Limits& lim);
Report run_distort(const FamilyArgs& f, int nmin, int nmax, const std::string& csv, const Limits& lim);
Report run_report(const std::string& csv);
Report run_glue(const FamilyArgs& f, const std::string& left, const std::string& right,
                const std::vector<std::string>& labels, const std::string& dot_path);

}  // namespace cli
