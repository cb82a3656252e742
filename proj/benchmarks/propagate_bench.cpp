// Times the propagation fixpoint with and without OpenMP on a branching
// plant: one source root, transports fanning out below it, a High state at
// the root cascading to every leaf.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mfm/dsl.hpp"
#include "mfm/propagate.hpp"
#include "mfm/translate.hpp"

namespace {

mfm::MfmModel fanout_model(int depth, int branch) {
  mfm::MfmModel m;
  m.name = "Bench";
  m.vertices.push_back({"V0", mfm::FunctionType("source"),
                        mfm::StateLabel("High")});
  std::vector<int> frontier{0};
  int next = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<int> grown;
    for (int parent : frontier)
      for (int b = 0; b < branch; ++b) {
        int id = next++;
        m.vertices.push_back(
            {"V" + std::to_string(id), mfm::FunctionType("transport"),
             std::nullopt});
        m.edges.push_back({"V" + std::to_string(parent),
                           "V" + std::to_string(id),
                           mfm::RelationType("influencer"), true});
        grown.push_back(id);
      }
    frontier = std::move(grown);
  }
  return m;
}

const char* kRules = R"(
rule src_high { pattern { vertex x: source; vertex y: transport; edge x -> y: influencer flow; } cause hold(x, High); effect hold(y, High); }
rule tr_high { pattern { vertex x: transport; vertex y: transport; edge x -> y: influencer flow; } cause hold(x, High); effect hold(y, High); }
)";

double run_ms(const mfm::FactBase& facts, const std::vector<mfm::HornRule>& rules,
              bool parallel, std::size_t& derived) {
  auto t0 = std::chrono::steady_clock::now();
  mfm::PropagationResult r = mfm::forward_propagate(facts, rules, {parallel});
  auto t1 = std::chrono::steady_clock::now();
  derived = r.derived.size();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%8s %8s %12s %12s %8s\n", "vertices", "derived", "serial_ms",
              "parallel_ms", "speedup");

  std::vector<mfm::RuleSource> sources = mfm::parse_rules(kRules);
  std::vector<mfm::HornRule> rules;
  for (const mfm::RuleSource& r : sources)
    for (mfm::HornRule& h : mfm::translate_rule(r)) rules.push_back(std::move(h));

  for (auto [depth, branch] : {std::pair{6, 2}, {8, 2}, {9, 2}}) {
    mfm::MfmModel model = fanout_model(depth, branch);
    mfm::FactBase facts = mfm::translate_model(model);
    std::size_t derived_s = 0, derived_p = 0;
    double serial = run_ms(facts, rules, false, derived_s);
    double parallel = run_ms(facts, rules, true, derived_p);
    mfm::PropagationResult a = mfm::forward_propagate(facts, rules, {false});
    mfm::PropagationResult b = mfm::forward_propagate(facts, rules, {true});
    if (a.derived != b.derived || a.trace != b.trace ||
        a.conflicts != b.conflicts) {
      std::fprintf(stderr, "parallel and serial results differ\n");
      return 1;
    }
    std::printf("%8zu %8zu %12.2f %12.2f %8.2f\n", model.vertices.size(),
                derived_s, serial, parallel, serial / parallel);
  }
  return 0;
}
