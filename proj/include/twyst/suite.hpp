#pragma once

// Suite runner: enumerates relation instances, evaluates both sides through
// an image table on a worker pool, and aggregates pass/fail/skipped reports
// with witnesses. Instances are independent pure computations; the image
// tables and oracle caches are safe for concurrent use.

#include "io.hpp"
#include "relations.hpp"
#include "twisted.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <thread>

namespace twyst {

struct Report {
  std::string relation;
  Assignment assignment;
  std::string status;  // pass | fail | skipped
  std::optional<NCPoly> witness;
  double ms = 0.0;

  Json to_json(bool with_times) const {
    Json as = Json::object();
    for (auto& [k, v] : assignment) as[k] = v;
    Json j{{"relation", relation},
           {"assignment", as},
           {"status", status},
           {"witness", witness ? poly_to_json(*witness) : Json(nullptr)}};
    if (with_times) j["ms"] = ms;
    return j;
  }
};

struct SuiteSummary {
  int passed = 0, failed = 0, skipped = 0;
  std::vector<Report> reports;

  void add(Report r) {
    if (r.status == "pass") ++passed;
    else if (r.status == "fail") ++failed;
    else ++skipped;
    reports.push_back(std::move(r));
  }
  void merge(SuiteSummary other) {
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    for (auto& r : other.reports) reports.push_back(std::move(r));
  }
  bool ok() const { return failed == 0; }
};

// Runs `items` through `work` on `jobs` threads, preserving item order.
template <typename Item>
std::vector<Report> parallel_map(const std::vector<Item>& items,
                                 const std::function<Report(const Item&)>& work, int jobs) {
  std::vector<Report> out(items.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto body = [&]() {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= items.size()) break;
      out[k] = work(items[k]);
    }
  };
  if (jobs == 1 || items.size() <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(body);
    for (auto& th : pool) th.join();
  }
  return out;
}

// Formal relation families checked through an image table. A sign flip can
// be injected into the pr6 right-hand side to exercise the failure path.
inline SuiteSummary run_relation_families(const RelationLibrary& lib, const SymbolImages& images,
                                          const std::vector<std::string>& families, int bound,
                                          int serre_bound, int jobs, bool corrupt_pr6 = false) {
  SuiteSummary summary;
  for (const std::string& rel : families) {
    std::vector<Assignment> instances = lib.enumerate(rel, bound, serre_bound);
    if (instances.empty()) {
      summary.add({rel, {}, "skipped", std::nullopt, 0.0});
      continue;
    }
    auto work = [&](const Assignment& as) -> Report {
      auto start = std::chrono::steady_clock::now();
      RelPair pair = lib.build(rel, as);
      if (corrupt_pr6 && rel == "pr6") pair.rhs.scale(rat(-1));
      NCPoly lhs = eval_formal(pair.lhs, images);
      NCPoly rhs = eval_formal(pair.rhs, images);
      NCPoly witness = lhs - rhs;
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
      if (witness.is_zero()) return {rel, as, "pass", std::nullopt, ms};
      return {rel, as, "fail", std::move(witness), ms};
    };
    auto reports = parallel_map<Assignment>(instances, work, jobs);
    for (auto& r : reports) summary.add(std::move(r));
  }
  return summary;
}

// Embedding soundness: quaternary + symmetry, all indices, r+s <= bound.
inline SuiteSummary run_embedding_suite(const TwistedCtx& t, int bound, int jobs) {
  struct Inst {
    bool qua;
    int i, j, k, l, r, s;
  };
  std::vector<Inst> items;
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j) {
      for (int k = 1; k <= t.N; ++k)
        for (int l = 1; l <= t.N; ++l)
          for (int r = 0; r <= bound; ++r)
            for (int s = 0; r + s <= bound; ++s) items.push_back({true, i, j, k, l, r, s});
      for (int R = 0; R <= bound + 1; ++R) items.push_back({false, i, j, 0, 0, R, 0});
    }
  // prime the embedding cache before fanning out
  for (int i = 1; i <= t.N; ++i)
    for (int j = 1; j <= t.N; ++j)
      for (int r = 0; r <= bound + 2; ++r) embed_s_cached(i, j, r, t);

  auto work = [&](const Inst& in) -> Report {
    auto start = std::chrono::steady_clock::now();
    CheckResult res = in.qua ? check_quaternary(in.i, in.j, in.k, in.l, in.r, in.s, t)
                             : check_symmetry(in.i, in.j, in.r, t);
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    Assignment as = in.qua ? Assignment{{"i", in.i}, {"j", in.j}, {"k", in.k},
                                        {"l", in.l}, {"r", in.r}, {"s", in.s}}
                           : Assignment{{"i", in.i}, {"j", in.j}, {"r", in.r}};
    std::string rel = in.qua ? "qua" : "sym";
    if (res.pass) return {rel, as, "pass", std::nullopt, ms};
    return {rel, as, "fail", res.witness, ms};
  };
  SuiteSummary summary;
  for (auto& r : parallel_map<Inst>(items, work, jobs)) summary.add(std::move(r));
  return summary;
}

inline Json summary_to_json(const SuiteSummary& s, const Json& config, bool with_times = true,
                            bool with_instances = true) {
  Json j;
  j["config"] = config;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  if (with_instances) {
    Json rows = Json::array();
    for (auto& r : s.reports) rows.push_back(r.to_json(with_times));
    j["instances"] = rows;
  } else {
    Json rows = Json::array();
    for (auto& r : s.reports)
      if (r.status != "pass") rows.push_back(r.to_json(with_times));
    j["exceptions"] = rows;
  }
  return j;
}

}  // namespace twyst
