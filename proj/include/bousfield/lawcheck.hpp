#ifndef BOUSFIELD_LAWCHECK_HPP
#define BOUSFIELD_LAWCHECK_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bousfield/element.hpp"
#include "bousfield/ext_nat.hpp"
#include "bousfield/index_set.hpp"
#include "bousfield/wire.hpp"

namespace bousfield {

/// Grid of test elements: every valid element whose head index comes from the
/// lists and whose tail is a union of atoms.
struct GridConfig {
  std::vector<ExtNat> head_qs;
  std::vector<OmegaNat> head_ms;
  std::vector<IndexSet> tail_atoms;
  std::size_t size_cap = 4096;

  /// q in {0,1,2,3,inf}, m in {0,1,2,3,w,inf}, atoms {}, {0}, {1}, {inf}, [2,inf]
  /// and the even numbers from 2 on.
  static GridConfig small();
  /// Heads 0..5 and two more periodic atoms (multiples of 3, odd numbers from 3).
  static GridConfig full();
};

/// Deterministic: simplest elements first. Always contains 0 and 1.
std::vector<Element> enumerate_grid(const GridConfig& cfg);

/// A complexity measure used to pick the simplest counterexample.
std::uint64_t weight(const IndexSet& s);
std::uint64_t weight(const Element& x);

struct Counterexample {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
  std::uint64_t weight = 0;
};

struct LawResult {
  std::string suite;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> counterexample;  // the lightest one seen
  /// Wall time of the pass that checked this law; laws checked in one pass share it.
  double elapsed_ms = 0;
};

struct LawReport {
  std::vector<LawResult> laws;

  std::uint64_t violations() const;
  bool ok() const { return violations() == 0; }
  const LawResult* find(const std::string& name) const;

  std::string to_text(bool with_timing = true) const;
  wire::Json to_json(bool with_timing = true) const;
};

struct CheckOptions {
  /// Suites to run; empty means all of all_suites().
  std::set<std::string> suites;
  std::uint64_t seed = 0;
  /// Random draws for the randomized extension and for sampled triple laws.
  std::uint64_t samples = 20000;
  /// Ideal summaries drawn for the complete-distributivity suite.
  std::uint64_t summary_samples = 1000;
  /// Triple-quantified laws run exhaustively when grid size cubed is at most this,
  /// otherwise on `samples` random triples.
  std::uint64_t exhaustive_limit = 300000;
};

const std::vector<std::string>& all_suites();

/// Runs the selected suites. Violations are reported, never thrown.
LawReport check_laws(const std::vector<Element>& grid, const CheckOptions& opts = {});

}  // namespace bousfield

#endif
