#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "singspec/equiv_class.hpp"

namespace singspec {

enum class ComponentKind { kVertical, kHorizontal };

/// An irreducible component of Y (vertical, with multiplicity m_i in the
/// special fiber) or of the horizontal divisor D.
struct SncComponent {
  std::string id;
  std::int64_t multiplicity = 1;
  ComponentKind kind = ComponentKind::kVertical;

  friend bool operator==(const SncComponent&, const SncComponent&) = default;
};

/// A stratum E_I with the class of the compactly supported cohomology of
/// its cyclic cover, graded by the semisimple monodromy T_s. T_s is the
/// local-system monodromy: on the cover w^m = u of E_I° it is the pullback
/// along the deck transformation w -> exp(2 pi i / m) w.
struct Stratum {
  std::vector<std::string> ids;
  EquivClass cover_class;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// Combinatorial data of an SNC degeneration.
class SncModel {
 public:
  SncModel(std::int64_t n, std::vector<SncComponent> components, std::vector<Stratum> strata);

  std::int64_t dimension() const { return n_; }
  const std::vector<SncComponent>& components() const { return components_; }
  const std::vector<Stratum>& strata() const { return strata_; }

  /// Throws ModelError for unknown ids.
  const SncComponent& component(const std::string& id) const;

  /// Components that appear in no stratum.
  std::vector<std::string> missing_strata() const;

  friend bool operator==(const SncModel&, const SncModel&) = default;

 private:
  std::int64_t n_;
  std::vector<SncComponent> components_;
  std::vector<Stratum> strata_;
};

/// Reads a model document. Unknown keys, wrong types, unknown component ids,
/// repeated stratum id-sets and models without vertical components are
/// rejected with a SchemaError carrying a JSON-pointer location.
SncModel parse_model(std::string_view json_text);
SncModel load_model(const std::string& path);

/// Canonical JSON text (two-space indent, trailing newline).
/// parse_model(write_model(m)) == m and write_model is a fixed point.
std::string write_model(const SncModel& model);

enum class NearbyVariant {
  kTotalSpace,     // sum over I meeting Y, weight (1 - L)^{|I ∩ vertical| - 1}
  kOpenComplement  // sum over I inside Y, weight (1 - L)^{|I| - 1}
};

/// Motivic nearby-fiber class evaluated in the Grothendieck group of Hodge
/// structures with finite-order action. Sums over the supplied strata only;
/// selecting strata (e.g. those over a point for a local Milnor fiber) is
/// the caller's job.
EquivClass nearby_fiber_class(const SncModel& model, NearbyVariant variant);

/// GCD(m_i : i in ids). Throws HorizontalComponent or ModelError.
std::int64_t covering_degree(const std::vector<std::string>& ids, const SncModel& model);

/// GCD(m_i : i in ids ∪ {adjacent}): the number of connected components of
/// the cover of E_I° = C* when E_I = P^1 meets the vertical components
/// `adjacent` and one other component. (The index letter in the printed
/// formula is read as i.)
std::int64_t component_count_cstar(const std::vector<std::string>& ids, const std::string& adjacent,
                                   const SncModel& model);

}  // namespace singspec
