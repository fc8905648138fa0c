// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "metaracah/algebra.hpp"
#include "metaracah/cli.hpp"
#include "metaracah/diffmodel.hpp"
#include "metaracah/eigenbases.hpp"
#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"
#include "metaracah/matrixreps.hpp"
#include "metaracah/racahpoly.hpp"
#include "metaracah/rationalfns.hpp"
#include "metaracah/suites.hpp"

using namespace metaracah;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void require(const VerificationReport& r, const std::string& where) {
    for (const auto& c : r.checks) {
      if (!c.passed()) {
        fail(where + ": " + c.id + " " + c.detail);
        return;
      }
    }
  }
};

struct Sample {
  Params params;
  Rational rho;
};

Params defaults(int N) { return Params{N, Rational(1, 3), Rational(1, 5), Rational(1, 7)}; }

std::string describe(const Sample& s) {
  return "N=" + std::to_string(s.params.N) + " (" + s.params.alpha.str() + ", " + s.params.beta.str() + ", " +
         s.params.zeta.str() + ", " + s.rho.str() + ")";
}

// `per_n` generic draws for each N in [lo, hi], plus the default point at hi.
std::vector<Sample> samples(std::uint64_t seed, int lo, int hi, int per_n) {
  ParamSampler sampler(seed);
  std::vector<Sample> out;
  for (int N = lo; N <= hi; ++N) {
    for (int k = 0; k < per_n; ++k) {
      const auto d = sampler.next(N);
      if (!d.degenerate) out.push_back({d.params, d.rho});
    }
  }
  out.push_back({defaults(hi), Rational(1, 13)});
  return out;
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

int run_cli_quiet(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o;
  std::ostringstream e;
  const int code = run_cli(args, o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;  // 0: no runtime target
  std::function<Outcome(std::string&)> body;  // fills a short summary
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "defining relations", 5.0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(101, 1, 12, 5);
         for (const auto& s : ss) o.require(check_defining_relations(s.params), describe(s));
         summary = std::to_string(ss.size()) + " parameter sets, N=1..12";
         return o;
       }},
      {2, "Casimir centrality", 5.0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(101, 1, 12, 5);
         for (const auto& s : ss) {
           const auto g = build_generators(s.params);
           const auto C = casimir(s.params);
           if (!commutator(C, g.X).is_zero() || !commutator(C, g.V).is_zero() || !commutator(C, g.Z).is_zero()) {
             o.fail(describe(s));
           }
         }
         summary = std::to_string(ss.size()) + " parameter sets, N=1..12";
         return o;
       }},
      {3, "Hahn, Racah and Borel subalgebras", 0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(103, 1, 8, 3);
         for (const auto& s : ss) o.require(check_subalgebras(s.params, s.rho), describe(s));
         summary = std::to_string(ss.size()) + " parameter sets, N=1..8";
         return o;
       }},
      {4, "Heun operator bidiagonality", 0,
       [](std::string& summary) {
         Outcome o;
         ParamSampler hs(104);
         int triples = 0;
         for (int N = 1; N <= 8; ++N) {
           const Params p = defaults(N);
           for (int i = 0; i < 24; ++i, ++triples) {
             const Rational h0 = hs.next_rational(), h1 = hs.next_rational(), h4 = hs.next_rational();
             if (!heun_bidiagonal(p, h0, h1, h4).bidiagonal) {
               o.fail("N=" + std::to_string(N) + " h=(" + h0.str() + ", " + h1.str() + ", " + h4.str() + ")");
             }
           }
           // h2 != -h4 leaves the V superdiagonal in place
           const auto H = heun_operator(p, Rational(1), Rational(1), Rational(1, 2), Rational(0), Rational(1, 3));
           if (is_lower_bidiagonal(H) || H(0, 1).is_zero()) o.fail("negative control stayed bidiagonal at N=" + std::to_string(N));
         }
         summary = std::to_string(triples) + " triples, negative control fills the superdiagonal";
         return o;
       }},
      {5, "eigenbasis closed forms vs nullspace oracle", 30.0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(105, 1, 10, 2);
         for (const auto& s : ss) {
           const auto r = check_eigenbases(s.params, s.rho);
           for (BasisLabel l : all_basis_labels()) {
             const Check* c = r.find("oracle." + to_string(l));
             if (c == nullptr || !c->passed()) o.fail(describe(s) + " " + to_string(l));
           }
           o.require(r, describe(s));
         }
         summary = std::to_string(ss.size()) + " parameter sets, N=1..10, 8 families";
         return o;
       }},
      {6, "orthogonality and completeness", 0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(106, 1, 10, 2);
         for (const auto& s : ss) o.require(check_orthogonality(s.params, s.rho), describe(s));
         summary = std::to_string(ss.size()) + " parameter sets, 4 Grams and 2 resolutions";
         return o;
       }},
      {7, "coefficient formulas vs conjugation", 0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(107, 1, 8, 3);
         for (const auto& s : ss) o.require(check_coefficients(s.params, s.rho), describe(s));
         summary = std::to_string(ss.size()) + " parameter sets, N=1..8";
         return o;
       }},
      {8, "lower reduced Leonard trio", 0,
       [](std::string& summary) {
         Outcome o;
         o.require(verify_leonard_trio(defaults(6)), "defaults N=6");
         const Params bad{4, Rational(1, 3), Rational(-1, 3), Rational(1, 7)};
         const auto r = verify_leonard_trio(bad);
         const Check* c = r.find("trio.ii.Z");
         if (c == nullptr || c->passed() || c->detail.empty()) {
           o.fail("degenerate instance not reported");
         } else {
           summary = "defaults pass; degenerate instance: " + c->detail;
         }
         return o;
       }},
      {9, "Racah polynomial identification", 0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(109, 1, 8, 2);
         for (const auto& s : ss) o.require(check_racah(s.params, s.rho), describe(s));
         summary = std::to_string(ss.size()) + " parameter sets, full grid N=1..8";
         return o;
       }},
      {10, "biorthogonal rational functions", 60.0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(110, 1, 8, 2);
         for (const auto& s : ss) {
           o.require(check_rational_identification(s.params), describe(s));
           o.require(biorthogonality(s.params), describe(s));
           o.require(check_rational_relations(s.params), describe(s));
         }
         summary = std::to_string(ss.size()) + " parameter sets, full grid N=1..8";
         return o;
       }},
      {11, "Hahn limit", 0,
       [](std::string& summary) {
         Outcome o;
         const std::vector<Rational> ts = {Rational(1000), Rational(10000), Rational(100000)};
         const auto res = hahn_limit(1, 1, Rational(1, 3), Rational(1, 5), 5, ts, Rational(1, 1000));
         if (!res.last_below_threshold) o.fail("deviation at t=1e5 not below 1e-3");
         if (!res.improved) o.fail("deviation at t=1e5 not below deviation at t=1e3");
         summary = "deviations " + res.deviations.front().to_decimal(8) + " (t=1e3), " +
                   res.deviations.back().to_decimal(8) + " (t=1e5)";
         return o;
       }},
      {12, "differential model", 0,
       [](std::string& summary) {
         Outcome o;
         const auto ss = samples(112, 1, 6, 2);
         for (const auto& s : ss) {
           o.require(check_model(s.params, s.rho), describe(s));
           o.require(model_orthogonality(s.params, s.rho), describe(s));
           o.require(integral_representations(s.params, s.rho), describe(s));
           o.require(model_transposes(s.params), describe(s));
         }
         summary = std::to_string(ss.size()) + " parameter sets, N=1..6";
         return o;
       }},
      {13, "Whipple transformation", 0,
       [](std::string& summary) {
         Outcome o;
         ParamSampler ws(113);
         std::mt19937_64 degrees(113);
         int instances = 0;
         int attempts = 0;
         while (instances < 200 && attempts < 10000) {
           ++attempts;
           const int n = static_cast<int>(degrees() % 9);
           const Rational a = ws.next_rational(), b = ws.next_rational(), c = ws.next_rational();
           const Rational d = ws.next_rational(), e = ws.next_rational();
           const Rational f = Rational(1 - n) + a + b + c - d - e;
           try {
             if (!whipple_check(n, a, b, c, d, e, f)) o.fail("n=" + std::to_string(n) + " a=" + a.str());
             ++instances;
           } catch (const DegenerateParameters&) {
           }
         }
         if (instances < 200) o.fail("only " + std::to_string(instances) + " nondegenerate instances");
         summary = std::to_string(instances) + " balanced instances, n<=8";
         return o;
       }},
      {14, "CLI determinism and exit codes", 0,
       [](std::string& summary) {
         Outcome o;
         const std::vector<std::string> args = {"verify", "--suite", "all", "--seed", "2024", "--sweeps", "3"};
         std::string first;
         std::string second;
         if (run_cli_quiet(args, &first) != kExitPass) o.fail("verify with sweeps did not pass");
         run_cli_quiet(args, &second);
         if (first != second) o.fail("reports differ between identical runs");
         std::string csv1;
         std::string csv2;
         run_cli_quiet({"table", "--which", "Utilde", "--format", "csv", "--exact"}, &csv1);
         run_cli_quiet({"table", "--which", "Utilde", "--format", "csv", "--exact"}, &csv2);
         if (csv1 != csv2 || csv1.empty()) o.fail("table output not reproducible");
         if (run_cli_quiet({"verify", "--suite", "algebra", "--inject-fault"}) != kExitFail) o.fail("fault: exit != 1");
         if (run_cli_quiet({"verify", "--N", "3", "--alpha", "1"}) != kExitDegenerate) o.fail("degenerate: exit != 2");
         if (run_cli_quiet({"verify", "--suite", "bogus"}) != kExitUsage) o.fail("usage: exit != 3");
         summary = "byte-identical reports (" + std::to_string(first.size()) + " bytes), exit codes 0/1/2/3";
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::string summary;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.body(summary);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt_seconds(secs);
    if (c.budget_seconds > 0) {
      char target[32];
      std::snprintf(target, sizeof target, ", target < %g s", c.budget_seconds);
      timing += target;
      if (secs >= c.budget_seconds) o.fail("runtime " + fmt_seconds(secs) + " over target");
    }
    char label[8];
    std::snprintf(label, sizeof label, "AC%02d", c.number);
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << label << ' ' << c.name << ": "
              << (o.ok ? summary : o.detail) << " (" << timing << ")\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed == 0 ? "all 14 acceptance criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
