#pragma once

#include <string>
#include <utility>
#include <vector>

namespace catlaw {

// Outcome of one named law/axiom check.  A check passes iff it produced no
// witnesses.  Witness strings are capped so reports stay readable; the cap
// marker records how many were dropped.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
  std::string note;
};

constexpr std::size_t kWitnessCap = 8;

struct Report {
  std::vector<CheckResult> results;
  std::vector<std::string> malformed;  // dangling references etc., distinct from law failures

  bool ok() const {
    if (!malformed.empty()) return false;
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }

  void add(std::string name, std::vector<std::string> witnesses = {},
           std::string note = "") {
    CheckResult r;
    r.name = std::move(name);
    r.passed = witnesses.empty();
    if (witnesses.size() > kWitnessCap) {
      std::size_t extra = witnesses.size() - kWitnessCap;
      witnesses.resize(kWitnessCap);
      witnesses.push_back("(+" + std::to_string(extra) + " more)");
    }
    r.witnesses = std::move(witnesses);
    r.note = std::move(note);
    results.push_back(std::move(r));
  }

  void add_malformed(std::string msg) { malformed.push_back(std::move(msg)); }

  // Splice another report in, prefixing its check names ("monad-s." etc.).
  void merge_prefixed(const Report& other, const std::string& prefix) {
    for (const auto& r : other.results) {
      CheckResult c = r;
      c.name = prefix + c.name;
      results.push_back(std::move(c));
    }
    for (const auto& m : other.malformed) malformed.push_back(prefix + m);
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& r : results)
      if (r.name == name) return &r;
    return nullptr;
  }
};

}  // namespace catlaw
