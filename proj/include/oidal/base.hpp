#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace oidal {

using Id = std::string;

/// Input or precondition problems: malformed fixtures, boundary mismatches,
/// size-cap refusals. These map to CLI exit code 2.
struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundaryError : EngineError {
  using EngineError::EngineError;
};

struct InputError : EngineError {
  using EngineError::EngineError;
};

struct CapExceeded : EngineError {
  using EngineError::EngineError;
};

/// Raised when a pointwise coequalizer required by the vertical action does
/// not exist; the message names the offending algebra.
struct CoequalizerMissing : EngineError {
  using EngineError::EngineError;
};

/// Raised when factoring through a supposedly universal cocone fails; this
/// always signals inconsistent input data, not a legitimate outcome.
struct FactorError : EngineError {
  using EngineError::EngineError;
};

// ---------------------------------------------------------------------------
// Size cap

std::size_t size_cap();
void set_size_cap(std::size_t cap);
void require_under_cap(std::size_t morphism_count, const std::string& what);

// ---------------------------------------------------------------------------
// Canonical tuple names.
//
// Generated names use a flat tuple syntax "(a,b,c)" with the empty tuple "()"
// for the monoidal unit.  Single-component tuples collapse to the bare name,
// which makes the monoidal product strictly unital on stored data.  User ids
// must be tuple-free (the loader enforces the reserved-character rules).

bool is_tuple_name(const std::string& s);
std::vector<std::string> name_components(const std::string& s);
std::string make_tuple_name(const std::vector<std::string>& parts);
std::string pair_name(const std::string& a, const std::string& b);

/// Checks a user-supplied identifier against the reserved-character rules:
/// nonempty, no byte below '-' (0x2D), no '|', and none of the bracket
/// sequences the engine generates itself.
bool valid_user_id(const std::string& s);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

// ---------------------------------------------------------------------------
// Validation reports

struct Violation {
  std::string law;      // short axiom id, e.g. "associativity"
  std::string witness;  // concrete offending tuple, human-readable
};

struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(const std::string& law, const std::string& witness) {
    violations.push_back({law, witness});
  }
  void merge(const ValidationReport& other) {
    for (const auto& v : other.violations) {
      violations.push_back(
          {other.subject.empty() ? v.law : other.subject + "/" + v.law, v.witness});
    }
  }
  std::string summary() const;
};

/// Throws InputError when the report is non-empty.
void require_valid(const ValidationReport& report);

// ---------------------------------------------------------------------------
// Law-suite reports

enum class LawStatus { Exact, UptoIso, Fail };

std::string to_string(LawStatus s);

struct LawEntry {
  std::string claim;
  LawStatus status;
  std::string detail;
};

struct LawReport {
  std::string suite;
  std::vector<LawEntry> entries;

  void exact(const std::string& claim, const std::string& detail = "") {
    entries.push_back({claim, LawStatus::Exact, detail});
  }
  void upto(const std::string& claim, const std::string& detail = "") {
    entries.push_back({claim, LawStatus::UptoIso, detail});
  }
  void fail(const std::string& claim, const std::string& detail) {
    entries.push_back({claim, LawStatus::Fail, detail});
  }
  void check(const std::string& claim, bool ok, const std::string& witness) {
    if (ok)
      exact(claim);
    else
      fail(claim, witness);
  }
  bool passed(bool strict_iso) const {
    for (const auto& e : entries) {
      if (e.status == LawStatus::Fail) return false;
      if (strict_iso && e.status != LawStatus::Exact) return false;
    }
    return true;
  }
};

}  // namespace oidal
