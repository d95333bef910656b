#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "singspec/equiv_class.hpp"

namespace singspec {

/// A weighted-homogeneous isolated singularity of the built-in corpus.
struct CorpusCase {
  std::string label;
  std::string polynomial;
  std::vector<std::string> variables;
};

/// Brieskorn-Pham polynomials x_1^{a_1} + ... + x_n^{a_n} with
/// 2 <= a_i <= max_exponent and 1 <= n <= max_vars, in lexicographic order
/// of (n, a).
std::vector<CorpusCase> brieskorn_pham_grid(std::uint32_t max_exponent = 6, std::uint32_t max_vars = 4);

/// Non-diagonal weighted-homogeneous examples (ADE, cubic and quartic cones).
std::vector<CorpusCase> named_cases();

/// Deterministic random class generator: draws straight from the engine
/// (no std distributions) so the sequence is identical on every platform.
class ClassGenerator {
 public:
  explicit ClassGenerator(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  EquivClass next();

 private:
  std::mt19937_64 engine_;
};

}  // namespace singspec
