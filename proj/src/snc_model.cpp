#include "singspec/snc_model.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "singspec/error.hpp"

namespace singspec {

using ojson = nlohmann::ordered_json;

SncModel::SncModel(std::int64_t n, std::vector<SncComponent> components, std::vector<Stratum> strata)
    : n_(n), components_(std::move(components)), strata_(std::move(strata)) {
  std::set<std::string> ids;
  for (const auto& c : components_) {
    if (!ids.insert(c.id).second) throw ModelError("duplicate component id '" + c.id + "'");
    if (c.multiplicity <= 0) throw ModelError("component '" + c.id + "' has nonpositive multiplicity");
  }
  if (std::none_of(components_.begin(), components_.end(),
                   [](const auto& c) { return c.kind == ComponentKind::kVertical; })) {
    throw ModelError("model has no vertical component");
  }
  std::set<std::set<std::string>> seen;
  for (const auto& s : strata_) {
    if (s.ids.empty()) throw ModelError("stratum with empty id set");
    std::set<std::string> key(s.ids.begin(), s.ids.end());
    if (key.size() != s.ids.size()) throw ModelError("stratum lists a component twice");
    for (const auto& id : s.ids) {
      if (!ids.count(id)) throw ModelError("stratum refers to unknown component '" + id + "'");
    }
    if (!seen.insert(std::move(key)).second) throw ModelError("repeated stratum id set");
  }
}

const SncComponent& SncModel::component(const std::string& id) const {
  for (const auto& c : components_) {
    if (c.id == id) return c;
  }
  throw ModelError("unknown component '" + id + "'");
}

std::vector<std::string> SncModel::missing_strata() const {
  std::set<std::string> used;
  for (const auto& s : strata_) used.insert(s.ids.begin(), s.ids.end());
  std::vector<std::string> out;
  for (const auto& c : components_) {
    if (!used.count(c.id)) out.push_back(c.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

void check_keys(const ojson& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw SchemaError(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; });
    if (!ok) throw SchemaError(ptr(where, it.key()), "unknown key");
  }
  for (const char* k : allowed) {
    if (!obj.contains(k)) throw SchemaError(ptr(where, k), "missing required key");
  }
}

std::int64_t get_int(const ojson& v, const std::string& where) {
  if (!v.is_number_integer()) throw SchemaError(where, "expected an integer");
  return v.get<std::int64_t>();
}

std::string get_string(const ojson& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where, "expected a string");
  return v.get<std::string>();
}

const ojson& get_array(const ojson& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError(where, "expected an array");
  return v;
}

}  // namespace

SncModel parse_model(std::string_view json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  check_keys(doc, "", {"n", "components", "strata"});
  const std::int64_t n = get_int(doc["n"], "/n");
  if (n < 1) throw SchemaError("/n", "dimension must be positive");

  std::vector<SncComponent> components;
  std::set<std::string> ids;
  const auto& comps = get_array(doc["components"], "/components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string at = ptr("/components", i);
    check_keys(comps[i], at, {"id", "multiplicity", "kind"});
    SncComponent c;
    c.id = get_string(comps[i]["id"], ptr(at, "id"));
    if (c.id.empty()) throw SchemaError(ptr(at, "id"), "empty id");
    if (!ids.insert(c.id).second) throw SchemaError(ptr(at, "id"), "duplicate component id '" + c.id + "'");
    c.multiplicity = get_int(comps[i]["multiplicity"], ptr(at, "multiplicity"));
    if (c.multiplicity <= 0) throw SchemaError(ptr(at, "multiplicity"), "must be a positive integer");
    const std::string kind = get_string(comps[i]["kind"], ptr(at, "kind"));
    if (kind == "vertical") {
      c.kind = ComponentKind::kVertical;
    } else if (kind == "horizontal") {
      c.kind = ComponentKind::kHorizontal;
    } else {
      throw SchemaError(ptr(at, "kind"), "expected \"vertical\" or \"horizontal\"");
    }
    components.push_back(std::move(c));
  }
  if (std::none_of(components.begin(), components.end(),
                   [](const auto& c) { return c.kind == ComponentKind::kVertical; })) {
    throw SchemaError("/components", "at least one vertical component is required");
  }

  std::vector<Stratum> strata;
  std::set<std::set<std::string>> seen;
  const auto& strs = get_array(doc["strata"], "/strata");
  for (std::size_t i = 0; i < strs.size(); ++i) {
    const std::string at = ptr("/strata", i);
    check_keys(strs[i], at, {"ids", "cover_class"});
    Stratum s;
    const auto& sids = get_array(strs[i]["ids"], ptr(at, "ids"));
    if (sids.empty()) throw SchemaError(ptr(at, "ids"), "stratum needs at least one component");
    std::set<std::string> key;
    for (std::size_t j = 0; j < sids.size(); ++j) {
      const std::string where = ptr(ptr(at, "ids"), j);
      std::string id = get_string(sids[j], where);
      if (!ids.count(id)) throw SchemaError(where, "unknown component '" + id + "'");
      if (!key.insert(id).second) throw SchemaError(where, "component listed twice");
      s.ids.push_back(std::move(id));
    }
    if (!seen.insert(key).second) throw SchemaError(ptr(at, "ids"), "repeated stratum id set");

    const std::string cc_at = ptr(at, "cover_class");
    const auto& entries = get_array(strs[i]["cover_class"], cc_at);
    std::set<HodgeKey> keys;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const std::string where = ptr(cc_at, j);
      const auto& e = get_array(entries[j], where);
      if (e.size() != 4) throw SchemaError(where, "expected [p, q, \"u/v\", multiplicity]");
      const auto p = get_int(e[0], ptr(where, 0));
      const auto q = get_int(e[1], ptr(where, 1));
      if (p < -1000 || p > 1000 || q < -1000 || q > 1000) throw SchemaError(where, "Hodge degree out of range");
      const std::string angle_text = get_string(e[2], ptr(where, 2));
      Rational angle;
      try {
        angle = Rational::parse(angle_text);
      } catch (const std::invalid_argument& ex) {
        throw SchemaError(ptr(where, 2), ex.what());
      }
      if (angle.sign() < 0 || angle >= Rational(1)) throw SchemaError(ptr(where, 2), "angle must lie in [0,1)");
      const auto mult = get_int(e[3], ptr(where, 3));
      if (mult == 0) throw SchemaError(ptr(where, 3), "zero multiplicity");
      HodgeKey hk{static_cast<std::int32_t>(p), static_cast<std::int32_t>(q), angle};
      if (!keys.insert(hk).second) throw SchemaError(where, "repeated (p, q, angle) entry");
      s.cover_class.add(hk.p, hk.q, hk.angle, mult);
    }
    strata.push_back(std::move(s));
  }
  return SncModel(n, std::move(components), std::move(strata));
}

SncModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("", "cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string write_model(const SncModel& model) {
  ojson doc;
  doc["n"] = model.dimension();
  doc["components"] = ojson::array();
  for (const auto& c : model.components()) {
    ojson jc;
    jc["id"] = c.id;
    jc["multiplicity"] = c.multiplicity;
    jc["kind"] = c.kind == ComponentKind::kVertical ? "vertical" : "horizontal";
    doc["components"].push_back(std::move(jc));
  }
  doc["strata"] = ojson::array();
  for (const auto& s : model.strata()) {
    ojson js;
    js["ids"] = s.ids;
    js["cover_class"] = ojson::array();
    for (const auto& [k, m] : s.cover_class.entries()) {
      js["cover_class"].push_back(ojson::array({k.p, k.q, k.angle.str(), m}));
    }
    doc["strata"].push_back(std::move(js));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Evaluation

EquivClass nearby_fiber_class(const SncModel& model, NearbyVariant variant) {
  const EquivClass one_minus_l = EquivClass::unit() - EquivClass::lefschetz();
  EquivClass total;
  for (const auto& s : model.strata()) {
    std::uint32_t vertical = 0;
    for (const auto& id : s.ids) {
      if (model.component(id).kind == ComponentKind::kVertical) ++vertical;
    }
    std::uint32_t exponent = 0;
    if (variant == NearbyVariant::kTotalSpace) {
      if (vertical == 0) continue;
      exponent = vertical - 1;
    } else {
      if (vertical != s.ids.size()) continue;
      exponent = static_cast<std::uint32_t>(s.ids.size()) - 1;
    }
    total += s.cover_class * one_minus_l.pow(exponent);
  }
  return total;
}

namespace {

std::int64_t vertical_multiplicity(const std::string& id, const SncModel& model) {
  const auto& c = model.component(id);
  if (c.kind != ComponentKind::kVertical) {
    throw HorizontalComponent("component '" + id + "' is horizontal; covering data needs vertical components");
  }
  return c.multiplicity;
}

}  // namespace

std::int64_t covering_degree(const std::vector<std::string>& ids, const SncModel& model) {
  if (ids.empty()) throw ModelError("covering degree of an empty index set");
  std::int64_t g = 0;
  for (const auto& id : ids) g = std::gcd(g, vertical_multiplicity(id, model));
  return g;
}

std::int64_t component_count_cstar(const std::vector<std::string>& ids, const std::string& adjacent,
                                   const SncModel& model) {
  return std::gcd(covering_degree(ids, model), vertical_multiplicity(adjacent, model));
}

}  // namespace singspec
