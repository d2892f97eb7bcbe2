// Relation-library spot checks: worked instances, the corrupt-relation
// failure path, and small full-family sweeps. The exhaustive presentation
// suites live in the acceptance binary.

#include "twyst/suite.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace twyst;

namespace {

SuiteSummary run_all(const TwistedCtx& t, const Shape& mu, int bound, int serre_bound,
                     const std::vector<std::string>& fams) {
  RelationLibrary lib(t, mu);
  auto real = get_realization(t, mu, RelationLibrary::cutoff_needed(bound, serre_bound));
  YangianImages img(real);
  return run_relation_families(lib, img, fams, bound, serre_bound, 4);
}

}  // namespace

TEST_CASE("pr6 forces the odd Z vanishing at mu=(1,1)") {
  TwistedCtx t(SignType::AI, 2);
  Shape mu({1, 1});
  RelationLibrary lib(t, mu);
  auto real = get_realization(t, mu, 6);
  YangianImages img(real);

  // pr6 with i=j=k=l=1, r=s=1: both sides computed in Y(gl_2); the RHS
  // reduces to -Z^(1), so the instance passing means Z^(1) = 0.
  RelPair p = lib.build("pr6", {{"a", 1}, {"i", 1}, {"j", 1}, {"k", 1}, {"l", 1},
                                {"r", 1}, {"s", 1}});
  CHECK(eval_formal(p.lhs, img) == eval_formal(p.rhs, img));
  CHECK(eval_formal(lib.formal().Z(1, 1, 1, 1, 1, 1), img).is_zero());
  CHECK(eval_formal(lib.formal().Z(1, 1, 1, 1, 1, 3), img).is_zero());

  // pr2 at r=0 reads delta = delta
  RelPair p2 = lib.build("pr2", {{"a", 1}, {"i", 1}, {"j", 1}, {"r", 0}});
  CHECK(eval_formal(p2.lhs, img) == eval_formal(p2.rhs, img));
  CHECK(eval_formal(p2.rhs, img) == t.yangian()->one());
}

TEST_CASE("small AI sweeps at N=2") {
  TwistedCtx t(SignType::AI, 2);
  auto s = run_all(t, Shape({1, 1}), 4, 4,
                   {"pr1", "pr2", "pr3", "pr4", "pr5", "pr6", "pr7", "pr-1", "pr-2",
                    "pr-1-2-better", "Zs"});
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
  // n = 2: pr7 and the Serre families are vacuous and must be reported as
  // skipped, never passed. (pr5 is vacuous too: adjacent needs i != l.)
  int skipped_families = 0;
  for (auto& r : s.reports)
    if (r.status == "skipped") ++skipped_families;
  CHECK(skipped_families == 5);

  auto s2 = run_all(t, Shape({2}), 4, 4, {"pr1", "pr2", "pr3"});
  CHECK(s2.failed == 0);
}

TEST_CASE("small AII sweep at N=2") {
  TwistedCtx t(SignType::AII, 2);
  auto s = run_all(t, Shape({2}), 4, 4, {"pr1", "pr2", "pr3"});
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
}

TEST_CASE("the corrupted pr6 fixture fails with a witness") {
  TwistedCtx t(SignType::AI, 2);
  Shape mu({1, 1});
  RelationLibrary lib(t, mu);
  auto real = get_realization(t, mu, 6);
  YangianImages img(real);
  auto s = run_relation_families(lib, img, {"pr6"}, 3, 3, 2, /*corrupt_pr6=*/true);
  CHECK(s.failed > 0);
  bool witnessed = false;
  for (auto& r : s.reports)
    if (r.status == "fail" && r.witness && !r.witness->is_zero()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("drinfeld-map relations at N=2, levels <= 2") {
  TwistedCtx t(SignType::AI, 2);
  Shape mu({1, 1});
  RelationLibrary lib(t, mu);
  auto real = get_realization(t, mu, 10);
  YangianImages img(real);
  auto s = run_relation_families(lib, img, {"drs1", "drs2", "drs3", "drs4", "drs5"}, 2, 2, 4);
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
  int skipped = 0;
  for (auto& r : s.reports)
    if (r.status == "skipped") ++skipped;
  CHECK(skipped == 2);  // drs4 and drs5 are vacuous at N=2
}

TEST_CASE("embedding suite runner") {
  TwistedCtx t(SignType::AII, 2);
  auto s = run_embedding_suite(t, 3, 4);
  CHECK(s.failed == 0);
  CHECK(s.passed > 0);
}
