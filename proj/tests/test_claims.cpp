#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "revq/claims.hpp"

using namespace revq;

TEST_CASE("registry covers the published claim inventory") {
  const std::set<std::string> required{
      "tritri-tables", "and-decomposition", "order-7",  "demorgan",
      "count-2160",    "balanced-10",       "symmetric-2", "fanout",
      "x3-laws",       "toffoli-projector", "luklog-unbalanced",
      "embed-roundtrip", "quantum-classical-agreement"};
  std::set<std::string> present;
  for (const auto& claim : claim_registry()) present.insert(claim.id);
  for (const auto& id : required) {
    INFO("claim " << id);
    CHECK(present.count(id) == 1);
  }
  CHECK(present.size() == claim_registry().size());  // ids unique
}

TEST_CASE("every registered claim has a wired check that passes") {
  for (const auto& claim : claim_registry()) {
    REQUIRE(claim.run != nullptr);
    const ClaimResult result = claim.run();
    INFO("claim " << claim.id << ": " << result.detail);
    CHECK(result.pass);
    CHECK_FALSE(result.detail.empty());
  }
}

TEST_CASE("claim lookup") {
  REQUIRE(find_claim("order-7") != nullptr);
  CHECK(find_claim("order-7")->id == "order-7");
  CHECK(find_claim("no-such-claim") == nullptr);
}
