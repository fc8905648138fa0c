#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "metaracah/algebra.hpp"

namespace metaracah {

/// Names accepted by run_suite, in execution order; "all" expands to these.
const std::vector<std::string>& suite_names();

/// Runs one named suite at (p, rho). Check ids are prefixed with the suite
/// name. Throws DegenerateParameters if the parameters are not generic and
/// PreconditionViolated for an unknown name.
VerificationReport run_suite(const std::string& name, const Params& p, const Rational& rho);

/// Deterministic random parameters k/q with q from {3,5,7,11,13,17,19,23}
/// and k in [-40, 40] \ {0}. Integers are mapped with plain modulo so the
/// stream is identical across standard libraries.
class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  Rational next_rational();

  struct Draw {
    Params params;
    Rational rho;
    int resamples = 0;
    bool degenerate = false;  // no generic draw within the attempt budget
  };

  /// Draws (alpha, beta, zeta, rho) until validate_params restricted to
  /// `needs` passes, at most `max_attempts` times.
  Draw next(int N, Needs needs = Needs::kAll, int max_attempts = 100);

 private:
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  std::mt19937_64 rng_;
};

}  // namespace metaracah
