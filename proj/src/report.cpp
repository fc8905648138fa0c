#include "metaracah/report.hpp"

#include <algorithm>

namespace metaracah {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkippedDegenerate:
      return "skipped-degenerate";
  }
  return "fail";
}

void VerificationReport::add(std::string id, std::string ref, bool ok, std::string detail) {
  checks.push_back(Check{std::move(id), std::move(ref), ok ? CheckStatus::kPass : CheckStatus::kFail,
                         ok ? std::string{} : std::move(detail)});
}

void VerificationReport::add_skipped(std::string id, std::string ref, std::string detail) {
  checks.push_back(Check{std::move(id), std::move(ref), CheckStatus::kSkippedDegenerate, std::move(detail)});
}

void VerificationReport::add_zero(std::string id, std::string ref, const RationalMatrix& residual) {
  const auto nz = residual.first_nonzero();
  std::string detail;
  if (nz) {
    detail = "entry (" + std::to_string(nz->row) + "," + std::to_string(nz->col) +
             ") = " + residual(nz->row, nz->col).str();
  }
  add(std::move(id), std::move(ref), !nz.has_value(), std::move(detail));
}

void VerificationReport::add_equal(std::string id, std::string ref, const RationalMatrix& lhs,
                                   const RationalMatrix& rhs) {
  const bool ok = lhs == rhs;
  add(std::move(id), std::move(ref), ok, ok ? std::string{} : describe_first_difference(lhs, rhs));
}

void VerificationReport::append(const VerificationReport& other, const std::string& id_prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.id = id_prefix + copy.id;
    checks.push_back(std::move(copy));
  }
}

bool VerificationReport::all_passed() const { return failures() == 0; }

int VerificationReport::failures() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::kFail; }));
}

const Check* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
}

}  // namespace metaracah
