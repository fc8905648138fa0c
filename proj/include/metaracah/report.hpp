#pragma once

#include <string>
#include <vector>

#include "metaracah/matrix.hpp"

namespace metaracah {

enum class CheckStatus { kPass, kFail, kSkippedDegenerate };

std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string ref;  // the identity being checked, in words
  CheckStatus status = CheckStatus::kPass;
  std::string detail;  // first failing index/entry; empty on pass

  bool passed() const { return status == CheckStatus::kPass; }
};

/// Structured pass/fail record, one entry per identity.
struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;

  void add(std::string id, std::string ref, bool ok, std::string detail = {});
  void add_skipped(std::string id, std::string ref, std::string detail);
  /// Pass iff `residual` is the zero matrix; detail names the first nonzero entry.
  void add_zero(std::string id, std::string ref, const RationalMatrix& residual);
  /// Pass iff lhs == rhs entrywise.
  void add_equal(std::string id, std::string ref, const RationalMatrix& lhs, const RationalMatrix& rhs);
  void append(const VerificationReport& other, const std::string& id_prefix = {});

  bool all_passed() const;
  int failures() const;
  const Check* find(const std::string& id) const;
  /// Sorts checks by id so serialized output is order-stable.
  void sort();
};

}  // namespace metaracah
