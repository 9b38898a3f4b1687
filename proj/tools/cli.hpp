#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "drkernel/report.hpp"

namespace drkernel::cli {

enum class ThetaMode { Infinity, Random, Fixed };
enum class OutputFormat { Json, Csv };

struct RunConfig {
  AlgebraDescriptor algebra{1, 1};
  std::uint64_t seed = 0;
  int points = 100;
  ThetaMode theta_mode = ThetaMode::Random;
  std::string theta_text = "random";  ///< as given on the command line
  double coordinate_scale = 2.0;      ///< box for V, Y, v, y components
  double a_min = 0.2;
  double a_max = 5.0;
  oracle::FDConfig fd;
  std::string output;                 ///< empty writes to stdout
  OutputFormat format = OutputFormat::Json;
  int threads = 0;                    ///< 0 picks hardware concurrency

  /// Throws Error on invalid settings, including unsupported algebras.
  void validate() const;
};

/// "m,mult", e.g. "3,1".
AlgebraDescriptor parse_algebra(std::string_view text);

/// "infinity", "random" (returns nullopt-like Random mode) or "v=..;y=..".
/// Fixed coordinates must match the algebra's k and m.
ThetaMode parse_theta_mode(std::string_view text);
BoundaryPoint parse_fixed_theta(const Algebra& alg, std::string_view text);

/// "V=..;Y=..;a=.." with omitted parts defaulting to 0 and a = 1.
GroupPoint parse_point(const Algebra& alg, std::string_view text);

struct SampledPair {
  GroupPoint x;
  BoundaryPoint theta = BoundaryPoint::infinity();
};

/// Deterministic in (seed, config). In random mode about 10% of theta are
/// infinity.
std::vector<SampledPair> sample_pairs(const Algebra& alg, const RunConfig& cfg);

struct VerifyResult {
  std::vector<HessianReport> records;  ///< in point-id order
  IdentityReport identities;
  GroupAxiomReport axioms;
  bool identities_pass = false;
  bool axioms_pass = false;
  bool pass = false;
};

/// Sample count for the algebra-level identity and group-axiom suites.
inline constexpr int kAlgebraSuiteTrials = 200;
inline constexpr double kAlgebraSuiteTol = 1e-12;

VerifyResult run_verification(const RunConfig& cfg);

std::string render_json(const RunConfig& cfg, const VerifyResult& result);
std::string render_csv(const VerifyResult& result);

/// Exit codes: 0 all checks pass, 1 some check failed, 2 invalid config or I/O error.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, const std::string& point_text, std::ostream& out, std::ostream& err);
int cmd_algebras(std::ostream& out);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drkernel::cli
