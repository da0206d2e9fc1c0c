#include "alcomb/json_io.hpp"

namespace alcomb {

void to_json(json& j, const Weight& w) { j = w.coords; }

void from_json(const json& j, Weight& w) {
  w.coords = j.get<std::vector<Int>>();
}

void to_json(json& j, const Chain& ch) {
  j = json{{"domain", to_string(ch.domain)}, {"weights", ch.weights}};
}

void from_json(const json& j, Chain& ch) {
  std::string dom = j.at("domain").get<std::string>();
  ch.domain = dom == "X" ? Domain::X : Domain::Xplus;
  ch.weights = j.at("weights").get<std::vector<Weight>>();
}

void to_json(json& j, const ModuleLabel& l) {
  j = json{{"family", to_string(l.family)}, {"weight", l.weight}};
}

void from_json(const json& j, ModuleLabel& l) {
  l.family = family_from_string(j.at("family").get<std::string>());
  l.weight = j.at("weight").get<Weight>();
}

void to_json(json& j, const DimReport& r) {
  j = json{{"label", r.label},
           {"invariant", r.invariant},
           {"value", r.value},
           {"status", to_string(r.status)}};
}

void from_json(const json& j, DimReport& r) {
  r.label = j.at("label").get<ModuleLabel>();
  r.invariant = j.at("invariant").get<std::string>();
  r.value = j.at("value").get<Int>();
  r.status = status_from_string(j.at("status").get<std::string>());
}

void to_json(json& j, const ExtDegree& e) {
  j = json{{"degree", e.degree},
           {"multiplicity", e.multiplicity},
           {"vanishing_above", e.vanishing_above},
           {"quantum_caveat", e.quantum_caveat}};
}

void from_json(const json& j, ExtDegree& e) {
  e.degree = j.at("degree").get<Int>();
  e.multiplicity = j.at("multiplicity").get<Int>();
  e.vanishing_above = j.at("vanishing_above").get<Int>();
  e.quantum_caveat = j.at("quantum_caveat").get<bool>();
}

void to_json(json& j, const BlockDimRow& r) {
  if (r.out_of_scope) {
    j = json{{"mu", r.mu}, {"status", "out_of_scope"}};
    return;
  }
  j = json{{"mu", r.mu},
           {"inj_L", r.inj_L},
           {"proj_L", r.proj_L},
           {"inj_delta", r.inj_delta},
           {"proj_nabla", r.proj_nabla},
           {"inj_nabla", r.inj_nabla},
           {"proj_delta", r.proj_delta},
           {"status", r.quantum_caveat ? "caveat_quantum" : "exact"}};
}

void from_json(const json& j, BlockDimRow& r) {
  r.mu = j.at("mu").get<Weight>();
  std::string status = j.at("status").get<std::string>();
  if (status == "out_of_scope") {
    r.out_of_scope = true;
    return;
  }
  r.out_of_scope = false;
  r.quantum_caveat = status == "caveat_quantum";
  r.inj_L = j.at("inj_L").get<Int>();
  r.proj_L = j.at("proj_L").get<Int>();
  r.inj_delta = j.at("inj_delta").get<Int>();
  r.proj_nabla = j.at("proj_nabla").get<Int>();
  r.inj_nabla = j.at("inj_nabla").get<Int>();
  r.proj_delta = j.at("proj_delta").get<Int>();
}

void to_json(json& j, const CategoryODims& d) {
  j = json{{"gfd_verma", d.gfd_verma},
           {"proj_verma", d.proj_verma},
           {"proj_simple_upper", d.proj_simple_upper},
           {"glob_O", d.glob_O}};
}

void from_json(const json& j, CategoryODims& d) {
  d.gfd_verma = j.at("gfd_verma").get<Int>();
  d.proj_verma = j.at("proj_verma").get<Int>();
  d.proj_simple_upper = j.at("proj_simple_upper").get<Int>();
  d.glob_O = j.at("glob_O").get<Int>();
}

void to_json(json& j, const SchurDimResult& r) {
  j = json{{"n", r.n},
           {"r", r.r},
           {"c", r.c},
           {"mode", to_string(r.mode)},
           {"wfd", r.wfd},
           {"glob", r.glob},
           {"status", to_string(r.status)}};
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
}

void from_json(const json& j, SchurDimResult& r) {
  r.n = j.at("n").get<int>();
  r.r = j.at("r").get<Int>();
  r.c = j.at("c").get<Int>();
  r.mode = mode_from_string(j.at("mode").get<std::string>());
  r.wfd = j.at("wfd").get<Int>();
  r.glob = j.at("glob").get<Int>();
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.at("witness").is_null())
    r.witness.reset();
  else
    r.witness = j.at("witness").get<Weight>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"subject", r.subject},
           {"expected", r.expected},
           {"observed", r.observed},
           {"ok", r.ok}};
  if (r.witness)
    j["witness"] = *r.witness;
  else
    j["witness"] = nullptr;
}

void from_json(const json& j, VerificationReport& r) {
  r.subject = j.at("subject").get<std::string>();
  r.expected = j.at("expected").get<Int>();
  r.observed = j.at("observed").get<Int>();
  r.ok = j.at("ok").get<bool>();
  if (j.at("witness").is_null())
    r.witness.reset();
  else
    r.witness = j.at("witness").get<Chain>();
}

void to_json(json& j, const PieriReport& r) {
  json cons = json::array();
  for (const auto& [w, mult] : r.constituents)
    cons.push_back(json{{"weight", w}, {"multiplicity", mult}});
  j = json{{"m", r.m},
           {"j", r.j},
           {"n", r.n},
           {"c", r.c},
           {"lhs", "h_" + std::to_string(r.m * r.c - r.j) + "*e_" +
                       std::to_string(r.j)},
           {"lower_hook", r.lower_hook},
           {"upper_hook", r.upper_hook},
           {"constituents", cons},
           {"ok", r.ok}};
}

void from_json(const json& j, PieriReport& r) {
  r.m = j.at("m").get<Int>();
  r.j = j.at("j").get<Int>();
  r.n = j.at("n").get<int>();
  r.c = j.at("c").get<Int>();
  r.lower_hook = j.at("lower_hook").get<Weight>();
  r.upper_hook = j.at("upper_hook").get<Weight>();
  r.constituents.clear();
  for (const auto& item : j.at("constituents"))
    r.constituents[item.at("weight").get<Weight>()] =
        item.at("multiplicity").get<Int>();
  r.ok = j.at("ok").get<bool>();
}

void to_json(json& j, const SaturatedSet& s) {
  j = json{{"top", s.top}, {"members", s.members}};
}

void from_json(const json& j, SaturatedSet& s) {
  s.top = j.at("top").get<Weight>();
  s.members = j.at("members").get<std::vector<Weight>>();
}

void to_json(json& j, const RegularMax& m) {
  j = json{{"value", m.value}, {"argmax", m.argmax}};
}

void from_json(const json& j, RegularMax& m) {
  m.value = j.at("value").get<Int>();
  m.argmax = j.at("argmax").get<std::vector<Weight>>();
}

}  // namespace alcomb
