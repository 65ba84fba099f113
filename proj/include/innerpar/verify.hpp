#pragma once

#include "innerpar/functionals.hpp"
#include "innerpar/polytope.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace innerpar::verify {

enum class Suite { Inequality, Concavity, Quotient, EqualityCases, Derivative, Levelset, Mixed, Inradius, Euclidean, All };

std::optional<Suite> parse_suite(std::string_view name);

struct Config {
  std::uint64_t seed = 1;
  int grid_points = 65;
  double tol_geom = 1e-9;
  double tol_check = 1e-7;
  int dim = 0;  // 0 runs both 2D and 3D
  int pairs_2d = 200;
  int pairs_3d = 50;
  // Test hook: multiplies every sampled perimeter by this factor.
  double perimeter_fault = 1.0;
  bool parallel = true;
};

struct Pair {
  std::string name;
  Body omega;
  Body k;  // origin interior
  bool builtin = false;
};

struct Entry {
  Pair pair;
  CurveFamily family;
};

struct Corpus {
  std::vector<Entry> entries;
};

/// Closed-form cases: triangle/square, square/diamond, square/square,
/// rectangle/square and their 3D analogues.
std::vector<Pair> builtin_pairs(int dim);

/// Random omega and centered K; deterministic in (dim, seed, index).
Pair random_pair(int dim, std::uint64_t seed, int index);

/// Built-in plus random pairs with their curve families. Pairs are evaluated
/// in parallel when config.parallel is set; order is by pair index either way.
Corpus build_corpus(const Config& config);

struct Check {
  std::string name;
  double worst = 0.0;
  double limit = 0.0;
  std::string where;  // offending pair and λ, for reproduction

  bool passed() const { return worst <= limit; }
};

struct Report {
  std::string header;  // run parameters, needed to reproduce a failure
  std::vector<Check> checks;

  bool passed() const;
  /// The header as a '#' line, one line per check, then PASS or FAIL.
  void print(std::ostream& out) const;
};

std::vector<Check> check_inequality(const Corpus& corpus, const Config& config);
std::vector<Check> check_concavity(const Corpus& corpus, const Config& config);
std::vector<Check> check_quotient(const Corpus& corpus, const Config& config);
std::vector<Check> check_equality_cases(const Corpus& corpus, const Config& config);
std::vector<Check> check_derivative(const Corpus& corpus, const Config& config);
std::vector<Check> check_levelset(const Corpus& corpus, const Config& config);
std::vector<Check> check_mixed(const Corpus& corpus, const Config& config);
std::vector<Check> check_inradius(const Corpus& corpus, const Config& config);
std::vector<Check> check_euclidean(const Config& config);

Report run(Suite suite, const Config& config);
Report run(Suite suite, const Corpus& corpus, const Config& config);

}  // namespace innerpar::verify
