#pragma once

#include <cstddef>
#include <deque>
#include <ostream>
#include <string>
#include <utility>

namespace idem {

/// Outcome of one named law checked over many cases. Only the first failing
/// case is kept as the witness.
struct Check {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness{};

  /// Counts a case; on the first failure stores `describe()` as the witness.
  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && passed) {
      passed = false;
      witness = std::forward<Describe>(describe)();
    }
    return ok;
  }
};

class Report {
 public:
  Check& check(std::string name) {
    auto& c = checks_.emplace_back();
    c.name = std::move(name);
    return c;
  }

  void add(Check c) { checks_.push_back(std::move(c)); }

  bool passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  const std::deque<Check>& checks() const noexcept { return checks_; }

 private:
  std::deque<Check> checks_;  // stable references for check()
};

inline std::ostream& operator<<(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks()) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
    if (!c.passed) os << "  witness: " << c.witness;
    os << '\n';
  }
  return os;
}

}  // namespace idem
