#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singspec/equiv_class.hpp"
#include "singspec/fracpoly.hpp"
#include "singspec/snc_model.hpp"
#include "singspec/spectrum.hpp"

namespace singspec {

/// Result of the polynomial-to-spectrum pipeline.
struct SpectrumSection {
  std::string input;
  std::vector<std::string> variables;
  std::vector<Rational> weights;
  std::int64_t milnor_number = 0;
  std::vector<std::string> basis;  // standard monomials, rendered
  FracPoly spectrum;
  bool symmetric = false;
  EigenMultiset eigenvalues_gamma_c;
  EigenMultiset eigenvalues_geometric;
  std::string char_poly;

  friend bool operator==(const SpectrumSection&, const SpectrumSection&) = default;
};

/// Result of evaluating an SNC model file.
struct NearbySection {
  std::string model;
  std::string variant;  // "total", "open" or "local"
  std::int64_t dim = 0;
  EquivClass nearby_class;
  std::int64_t euler = 0;
  FracPoly sp_prime;
  FracPoly sp;
  std::vector<std::string> missing_components;

  friend bool operator==(const NearbySection&, const NearbySection&) = default;
};

/// One invariant of the built-in cross-validation corpus.
struct CheckLine {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t total = 0;
  std::vector<std::string> failures;  // case labels, capped

  bool ok() const { return passed == total; }
  friend bool operator==(const CheckLine&, const CheckLine&) = default;
};

struct CheckSection {
  std::int64_t corpus_size = 0;
  std::vector<CheckLine> lines;

  bool ok() const;
  friend bool operator==(const CheckSection&, const CheckSection&) = default;
};

struct Report {
  std::string command;  // "sp", "nearby" or "check"
  std::optional<SpectrumSection> spectrum;
  std::optional<NearbySection> nearby;
  std::optional<CheckSection> check;

  /// Deterministic JSON; every rational is a string "u/v".
  std::string to_json() const;
  static Report from_json(const std::string& text);
  /// Human-readable rendering.
  std::string to_text() const;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Parses f over `variables`, checks that the singularity at 0 is isolated,
/// determines weights (inferred unless supplied), then computes the
/// spectrum by the basis route and by the product formula. Throws
/// ConsistencyFailure if the routes disagree; other Errors for bad input.
SpectrumSection run_sp(const std::string& polynomial, const std::vector<std::string>& variables,
                       const std::optional<WeightVector>& weights = std::nullopt);

/// Variant "total", "open" or "local". `dim` overrides the model's n.
/// "total" and "open" report sp_prime_of_class of the nearby class. "local"
/// treats the strata as lying over a singular point, evaluates the
/// total-space sum, and reports the Milnor-fiber Sp' of the reduced class
/// with the sign (-1)^{n-1}.
NearbySection run_nearby(const SncModel& model, const std::string& model_label, const std::string& variant,
                         std::optional<std::int64_t> dim = std::nullopt);

/// Runs the built-in corpus. Deterministic.
CheckSection run_check();

/// Embedded fixture documents (identical to tests/fixtures/*.json).
const std::string& fixture_i2_model();
const std::string& fixture_cusp_model();

}  // namespace singspec
