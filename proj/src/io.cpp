#include "dseries/io.hpp"

namespace dseries {

namespace {

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& value) {
  j[key] = value ? Json(*value) : Json(nullptr);
}

template <class T>
void get_optional(const Json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) {
    out.reset();
  } else {
    out = j.at(key).get<T>();
  }
}

}  // namespace

std::string family_key(const UnipotentFamily& f) {
  const std::string ab = std::to_string(f.a()) + "," + std::to_string(f.b());
  const std::string n = std::to_string(f.rank());
  switch (f.kind()) {
    case FamilyKind::B: return "B:" + ab;
    case FamilyKind::CEven: return "C_even:" + n;
    case FamilyKind::COdd: return "C_odd:" + n;
    case FamilyKind::DEven: return "D_even:" + ab;
    case FamilyKind::DOdd: return "D_odd:" + ab;
    case FamilyKind::ATrivialInduced: return "A:" + ab;
    case FamilyKind::SpinB: return "SpinB:" + n;
    case FamilyKind::SpinDPlus: return "SpinD+:" + n;
    case FamilyKind::SpinDMinus: return "SpinD-:" + n;
  }
  return "?";
}

void to_json(Json& j, const Weight& w) { j = w.str(); }
void from_json(const Json& j, Weight& w) { w = Weight::parse(j.get<std::string>()); }

void to_json(Json& j, const TensorTerm& t) {
  j = {{"hw", t.highest}, {"mult", t.multiplicity}, {"dim", t.dimension}};
}
void from_json(const Json& j, TensorTerm& t) {
  j.at("hw").get_to(t.highest);
  j.at("mult").get_to(t.multiplicity);
  j.at("dim").get_to(t.dimension);
}

void to_json(Json& j, const SpinLkt& s) {
  j = {{"ktype", s.ktype}, {"multiplicity", s.multiplicity}, {"delta", s.delta}, {"spin_norm_x4", s.spin_norm_x4}};
}
void from_json(const Json& j, SpinLkt& s) {
  j.at("ktype").get_to(s.ktype);
  j.at("multiplicity").get_to(s.multiplicity);
  j.at("delta").get_to(s.delta);
  j.at("spin_norm_x4").get_to(s.spin_norm_x4);
}

void to_json(Json& j, const DiracChecks& c) {
  j = {{"target_norm_x4", c.target_norm_x4}, {"min_spin_norm_x4", c.min_spin_norm_x4},
       {"search_bound", c.search_bound},     {"scanned", c.scanned},
       {"by_count", c.by_count},             {"by_tensor", c.by_tensor}};
  put_optional(j, "full_tensor_sum", c.full_tensor_sum);
}
void from_json(const Json& j, DiracChecks& c) {
  j.at("target_norm_x4").get_to(c.target_norm_x4);
  j.at("min_spin_norm_x4").get_to(c.min_spin_norm_x4);
  j.at("search_bound").get_to(c.search_bound);
  j.at("scanned").get_to(c.scanned);
  j.at("by_count").get_to(c.by_count);
  j.at("by_tensor").get_to(c.by_tensor);
  get_optional(j, "full_tensor_sum", c.full_tensor_sum);
}

void to_json(Json& j, const DiracResult& r) {
  j = {{"label", r.label},         {"two_lambda", r.two_lambda}, {"nonzero", r.nonzero},
       {"spin_lkts", r.spin_lkts}, {"checks", r.checks}};
  put_optional(j, "tau", r.tau);
  put_optional(j, "tau_extremal", r.tau_extremal);
  put_optional(j, "multiplicity", r.multiplicity);
}
void from_json(const Json& j, DiracResult& r) {
  j.at("label").get_to(r.label);
  j.at("two_lambda").get_to(r.two_lambda);
  j.at("nonzero").get_to(r.nonzero);
  j.at("spin_lkts").get_to(r.spin_lkts);
  j.at("checks").get_to(r.checks);
  get_optional(j, "tau", r.tau);
  get_optional(j, "tau_extremal", r.tau_extremal);
  get_optional(j, "multiplicity", r.multiplicity);
}

void to_json(Json& j, const GlBlock& b) { j = {{"size", b.size}, {"xi", format_half(b.xi_twice)}}; }
void from_json(const Json& j, GlBlock& b) {
  j.at("size").get_to(b.size);
  b.xi_twice = parse_half(j.at("xi").get<std::string>());
}

void to_json(Json& j, const InductionData& d) {
  j = {{"group", family_name(d.group)}, {"blocks", d.blocks}, {"core_rank", d.core_rank}, {"describe", d.describe()}};
  put_optional(j, "core", d.core);
}
void from_json(const Json& j, InductionData& d) {
  d.group = parse_family(j.at("group").get<std::string>());
  j.at("blocks").get_to(d.blocks);
  j.at("core_rank").get_to(d.core_rank);
  get_optional(j, "core", d.core);
}

void to_json(Json& j, const CoordinateString& s) {
  j = {{"low", format_half(s.low_twice)}, {"high", format_half(s.high_twice)}};
}
void from_json(const Json& j, CoordinateString& s) {
  s.low_twice = parse_half(j.at("low").get<std::string>());
  s.high_twice = parse_half(j.at("high").get<std::string>());
}

void to_json(Json& j, const StringDecomp& d) {
  j = {{"kappa0_len", d.kappa0_length}, {"sigma0_len", d.sigma0_length}, {"kappa", d.kappa},
       {"sigma", d.sigma},              {"nested", d.nested}};
}
void from_json(const Json& j, StringDecomp& d) {
  j.at("kappa0_len").get_to(d.kappa0_length);
  j.at("sigma0_len").get_to(d.sigma0_length);
  j.at("kappa").get_to(d.kappa);
  j.at("sigma").get_to(d.sigma);
  j.at("nested").get_to(d.nested);
}

void to_json(Json& j, const UnitarityVerdict& v) {
  j = {{"status", v.unitary ? "Unitary" : "NonUnitary"}, {"case", v.case_tag}};
  if (v.unitary) {
    j["certificate"] = *v.certificate;
    j["orbit"] = v.orbit;
  } else {
    j["witness"] = v.witness;
  }
}
void from_json(const Json& j, UnitarityVerdict& v) {
  const auto status = j.at("status").get<std::string>();
  require(status == "Unitary" || status == "NonUnitary", "unknown unitarity status '" + status + "'");
  v = UnitarityVerdict{};
  v.unitary = status == "Unitary";
  j.at("case").get_to(v.case_tag);
  if (v.unitary) {
    v.certificate = j.at("certificate").get<InductionData>();
    j.at("orbit").get_to(v.orbit);
  } else {
    j.at("witness").get_to(v.witness);
  }
}

void to_json(Json& j, const UnipotentParameter& p) { j = {{"left", p.left}, {"right", p.right}, {"eta", p.eta}}; }
void from_json(const Json& j, UnipotentParameter& p) {
  j.at("left").get_to(p.left);
  j.at("right").get_to(p.right);
  j.at("eta").get_to(p.eta);
}

void to_json(Json& j, const PositivityReport& r) {
  j = {{"delta", r.delta}, {"constituents", r.constituents}, {"violations", r.violations}};
}
void from_json(const Json& j, PositivityReport& r) {
  j.at("delta").get_to(r.delta);
  j.at("constituents").get_to(r.constituents);
  j.at("violations").get_to(r.violations);
}

}  // namespace dseries
