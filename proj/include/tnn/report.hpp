#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tnn/rational.hpp"

namespace tnn {

// Deterministic stream of small positive rationals p/q with p, q in [1, 20];
// identical seeds give identical streams on every platform (mt19937_64 output
// is specified by the standard).
class ParamRng {
 public:
  explicit ParamRng(std::uint64_t seed) : eng_(seed) {}
  Rat positive_rational() {
    std::uint64_t r = eng_();
    long long p = static_cast<long long>(r % 20) + 1;
    long long q = static_cast<long long>((r / 20) % 20) + 1;
    return Rat(p, q);
  }
  std::uint64_t uniform(std::uint64_t bound) { return eng_() % bound; }

 private:
  std::mt19937_64 eng_;
};

std::string sha1_hex(const std::string& data);

// Number of worker threads: TNNFLAG_THREADS when set (min 1), else hardware
// concurrency.
int thread_budget();

// Runs fn(i) for i in [0, n); fans out over the thread budget.  fn must be
// safe to run concurrently on distinct indices.
void parallel_for(int n, const std::function<void(int)>& fn);

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when passing
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  std::uint64_t seed = 0;
  std::string config_hash;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, pass ? "" : witness});
  }
};

// Versioned machine-readable report ("schema": 1), deterministic for a fixed
// (config, seed).
std::string report_to_json(const std::vector<SuiteReport>& reports);

}  // namespace tnn
