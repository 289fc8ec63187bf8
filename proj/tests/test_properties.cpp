#include <catch_amalgamated.hpp>

#include "property_suites.hpp"

using namespace tvbrep;

namespace {

void require_all(const std::vector<props::SuiteResult>& results) {
  for (const auto& r : results) {
    INFO(r.name << " after " << r.cases << " cases: " << r.counterexample);
    CHECK(r.passed);
    CHECK(r.cases > 0);
  }
}

}  // namespace

TEST_CASE("scalar ring axioms", "[props]") {
  for (std::uint64_t seed : {1, 2}) require_all(props::scalar_suites(seed, 300));
}

TEST_CASE("matrix identities", "[props]") {
  for (std::uint64_t seed : {1, 2}) require_all(props::matrix_suites(seed, 100));
}

TEST_CASE("evaluation is a monoid homomorphism", "[props]") {
  require_all({props::evaluate_homomorphism(1), props::evaluate_homomorphism(5)});
}

TEST_CASE("classify after instantiate returns the family", "[props]") {
  require_all({props::classifier_round_trips(1, 20)});
}

TEST_CASE("mutated representations are rejected", "[props]") {
  int by_relations = 0;
  auto r = props::mutation_trials(1, 100, &by_relations);
  require_all({r});
  // most mutants already break a defining relation
  CHECK(by_relations >= 80);
}
