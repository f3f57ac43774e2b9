#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace idem {

/// The two-element semifield {0, 1} with ⊕ = or and ⊙ = and. It is already
/// a complete lattice, so its top coincides with its unit.
struct Boolean {
  bool value = false;

  friend bool operator==(Boolean, Boolean) = default;
  friend auto operator<=>(Boolean, Boolean) = default;
};

inline Boolean oplus(Boolean a, Boolean b) { return {a.value || b.value}; }
inline Boolean otimes(Boolean a, Boolean b) { return {a.value && b.value}; }
inline Boolean meet(Boolean a, Boolean b) { return {a.value && b.value}; }
inline bool leq(Boolean a, Boolean b) { return !a.value || b.value; }

// y = 1, x = 0 admits no k; the empty infimum is the top, 1.
inline Boolean cover_coefficient(Boolean y, Boolean /*x*/) { return y; }

inline Boolean fit_coefficient(Boolean y, Boolean w) { return w.value ? y : Boolean{true}; }

inline std::string to_string(Boolean a) { return a.value ? "1" : "0"; }
inline std::ostream& operator<<(std::ostream& os, Boolean a) { return os << to_string(a); }

}  // namespace idem
