#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace metaracah {

/// Raised when a parameter combination makes some denominator vanish.
/// `offenders()` lists the failing expressions with the index at which
/// they vanish, e.g. "(-alpha)_{n+1} @ n=1".
class DegenerateParameters : public std::runtime_error {
 public:
  explicit DegenerateParameters(std::vector<std::string> offenders);

  const std::vector<std::string>& offenders() const noexcept { return offenders_; }

 private:
  std::vector<std::string> offenders_;
};

class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The eigenvalue oracle found a nullspace whose dimension is not one.
class NondegenerateSpectrumViolated : public std::runtime_error {
 public:
  NondegenerateSpectrumViolated(std::string what, int nullity)
      : std::runtime_error(std::move(what)), nullity_(nullity) {}

  int nullity() const noexcept { return nullity_; }

 private:
  int nullity_;
};

}  // namespace metaracah
