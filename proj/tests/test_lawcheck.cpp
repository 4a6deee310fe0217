#include "bousfield/lawcheck.hpp"
#include "doctest.h"

using namespace bousfield;

TEST_SUITE("lawcheck") {
  TEST_CASE("grid") {
    const auto g = enumerate_grid(GridConfig::small());
    CHECK(g.size() >= 50);
    CHECK(g.size() <= 80);
    CHECK(std::find(g.begin(), g.end(), Element::zero()) != g.end());
    CHECK(std::find(g.begin(), g.end(), Element::one()) != g.end());
    CHECK(g == enumerate_grid(GridConfig::small()));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(weight(g[i - 1]) <= weight(g[i]));
    const auto full = enumerate_grid(GridConfig::full());
    CHECK(full.size() > g.size());
  }

  TEST_CASE("small grid passes every suite") {
    const auto g = enumerate_grid(GridConfig::small());
    CheckOptions opts;
    opts.samples = 2000;
    opts.summary_samples = 200;
    const LawReport r = check_laws(g, opts);
    INFO(r.to_text());
    CHECK(r.ok());
    for (const std::string& suite : all_suites()) {
      const bool present = std::any_of(r.laws.begin(), r.laws.end(),
                                       [&](const LawResult& l) { return l.suite == suite; });
      CHECK_MESSAGE(present, suite);
    }
    for (const LawResult& l : r.laws) CHECK_MESSAGE(l.cases > 0, l.name);
  }

  TEST_CASE("reports are deterministic apart from timing") {
    const auto g = enumerate_grid(GridConfig::small());
    CheckOptions opts;
    opts.suites = {"random", "distributive"};
    opts.seed = 42;
    opts.samples = 500;
    opts.summary_samples = 100;
    const LawReport a = check_laws(g, opts), b = check_laws(g, opts);
    CHECK(a.to_text(false) == b.to_text(false));
    CHECK(a.to_json(false) == b.to_json(false));
  }

  TEST_CASE("suite selection") {
    CheckOptions opts;
    opts.suites = {"sigma"};
    const LawReport r = check_laws(enumerate_grid(GridConfig::small()), opts);
    REQUIRE(r.laws.size() == 2);
    CHECK(r.find("sigma-injective") != nullptr);
    CHECK(r.find("join-identity") == nullptr);
  }
}
