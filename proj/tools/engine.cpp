#include <unistd.h>

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bousfield/cli/evaluator.hpp"
#include "bousfield/cli/format.hpp"
#include "bousfield/cli/parser.hpp"
#include "bousfield/lawcheck.hpp"
#include "bousfield/wire.hpp"

namespace {

using namespace bousfield;

constexpr const char* kHelp = R"HELP(Expressions:
  t(q, T)  j(m, S)  k(U)       elements; q in N u {inf}, m in N u {w, inf}
  x + y   x * y                join, smash
  x <= y  x == y               order, equality
  @NAME  @NAME(n)              catalog entries (see "catalog()")
  neg(x) heyting(x, z) comp(x) idem(x) bool(x) sigma(x) tail(x) head(x)
  proj(eps, a)  sup(x, ...)  reconstruct(S1, S2, S3)  classify(S)
  theta(A; q|none; empty|unbounded|m)
Sets:
  {0, 2, inf}  [a,b]  [a,inf]  N  per(start, period, {residues}[, inf])
  ~S  S & T  S | T
)HELP";

int run_line(const std::string& line, cli::Mode mode) {
  try {
    std::cout << cli::format(cli::evaluate(line), mode) << '\n';
    return 0;
  } catch (const cli::PositionedError& e) {
    std::cerr << cli::format_error(e, line) << '\n';
    return 1;
  }
}

bool skip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

int run_stream(std::istream& in, cli::Mode mode, bool prompt) {
  int status = 0;
  std::string line;
  for (;;) {
    if (prompt) std::cout << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (skip(line)) continue;
    if (prompt && (line == "help" || line == "?")) {
      std::cout << kHelp;
      continue;
    }
    if (prompt && (line == "quit" || line == "exit")) break;
    if (run_line(line, mode) != 0) status = 1;
  }
  if (prompt) std::cout << '\n';
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluator for the ordered semiring of Bousfield class models"};
  app.footer(kHelp);
  app.fallthrough();

  bool json = false;
  std::string expr;
  std::string file;
  app.add_flag("--json", json, "Emit JSON wire forms");
  app.add_option("--eval,-e", expr, "Evaluate one expression");
  app.add_option("file", file, "Evaluate each line of a file")->check(CLI::ExistingFile);

  auto* catalog = app.add_subcommand("catalog", "List the catalog");

  auto* selftest = app.add_subcommand("selftest", "Run the law checker");
  std::string grid_name = "small";
  std::uint64_t seed = 0;
  std::uint64_t samples = CheckOptions{}.samples;
  std::vector<std::string> suites;
  selftest->add_option("--grid", grid_name, "Grid size")->check(CLI::IsMember({"small", "full"}));
  selftest->add_option("--seed", seed, "Random seed");
  selftest->add_option("--samples", samples, "Random samples per randomized law");
  selftest->add_option("--suite", suites, "Restrict to these suites")
      ->check(CLI::IsMember(all_suites()));

  CLI11_PARSE(app, argc, argv);
  const cli::Mode mode = json ? cli::Mode::Json : cli::Mode::Text;

  if (*catalog) {
    if (json)
      std::cout << wire::encode_catalog().dump(2) << '\n';
    else
      std::cout << cli::format(cli::CatalogListing{list_names()}, mode) << '\n';
    return 0;
  }

  if (*selftest) {
    const GridConfig cfg = grid_name == "full" ? GridConfig::full() : GridConfig::small();
    CheckOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    opts.suites.insert(suites.begin(), suites.end());
    const LawReport report = check_laws(enumerate_grid(cfg), opts);
    if (json)
      std::cout << report.to_json().dump(2) << '\n';
    else
      std::cout << report.to_text();
    return report.ok() ? 0 : 2;
  }

  if (!expr.empty()) return run_line(expr, mode);
  if (!file.empty()) {
    std::ifstream in(file);
    return run_stream(in, mode, false);
  }
  return run_stream(std::cin, mode, isatty(STDIN_FILENO) != 0);
}
