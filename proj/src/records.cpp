#include "hspsim/records.hpp"

#include <cstdio>

namespace hspsim {

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", p);
  return buf;
}

Json element_to_json(const GroupElement& g) { return Json(g.coords); }

Json subgroup_to_json(const Subgroup& subgroup) {
  Json gens = Json::array();
  for (const auto& g : subgroup.generators()) gens.push_back(g.coords);
  return Json{{"generators", gens},
              {"order", subgroup.order()},
              {"index", subgroup.index_in_parent()}};
}

Json quotient_to_json(const QuotientType& type) {
  return Json{{"cyclic_factors", type.cyclic_factors},
              {"is_cyclic", type.is_cyclic}};
}

Json state_to_json(const StateVector& psi) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < psi.dim(); ++i)
    amps.push_back({psi.amplitudes()[i].real(), psi.amplitudes()[i].imag()});
  Json record{{"basis", psi.mode() == BasisMode::Element ? "element" : "character"},
              {"group", psi.group().spec_string()},
              {"amplitudes", amps}};
  if (psi.has_alphabet()) record["alphabet"] = psi.alphabet_size();
  return record;
}

StateVector state_from_json(const Json& record) {
  const Group group = parse_group_spec(record.at("group").get<std::string>());
  const BasisMode mode = record.at("basis").get<std::string>() == "element"
                             ? BasisMode::Element
                             : BasisMode::Character;
  const auto& amps = record.at("amplitudes");
  Eigen::VectorXcd v(amps.size());
  for (size_t i = 0; i < amps.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = {amps[i][0].get<double>(),
                                       amps[i][1].get<double>()};
  if (record.contains("alphabet"))
    return StateVector::joint_from_amplitudes(group, record["alphabet"].get<int>(),
                                              mode, std::move(v));
  return StateVector::from_amplitudes(group, mode, std::move(v));
}

Json hiding_function_to_json(const HidingFunction& f) {
  Json gens = Json::array();
  for (const auto& g : f.hidden_subgroup().generators()) gens.push_back(g.coords);
  return Json{{"group", f.domain().spec_string()},
              {"subgroup_generators", gens},
              {"labeling", f.labeling()},
              {"alphabet", f.alphabet_size()}};
}

HidingFunction hiding_function_from_json(const Json& record) {
  const Group group = parse_group_spec(record.at("group").get<std::string>());
  std::vector<GroupElement> gens;
  for (const auto& coords : record.at("subgroup_generators"))
    gens.push_back(GroupElement{coords.get<std::vector<int>>()});
  return HidingFunction(group, subgroup_closure(group, gens),
                        record.at("labeling").get<std::vector<int>>(),
                        record.at("alphabet").get<int>());
}

Json distribution_to_json(const StateVector& reference_basis,
                          const std::vector<double>& probs) {
  Json labels = Json::array();
  Json values = Json::array();
  for (size_t i = 0; i < probs.size(); ++i) {
    labels.push_back(reference_basis.basis_label(static_cast<Eigen::Index>(i)));
    values.push_back(format_probability(probs[i]));
  }
  return Json{{"labels", labels}, {"probs", values}};
}

Json decision_to_json(const DecisionResult& result) {
  Json probs = Json::array();
  for (double p : result.final_distribution) probs.push_back(format_probability(p));
  return Json{{"verdict", result.verdict == DecisionResult::Verdict::Constant
                              ? "constant"
                              : "balanced"},
              {"queries", result.queries_used},
              {"distribution", probs}};
}

Json identification_to_json(const IdentificationResult& result) {
  Json probs = Json::array();
  for (double p : result.final_distribution) probs.push_back(format_probability(p));
  return Json{{"measured_character", format_character(result.measured_character)},
              {"recovered_subgroup", subgroup_to_json(result.recovered_subgroup)},
              {"success_certain", result.success_certain},
              {"queries", result.queries_used},
              {"distribution", probs}};
}

Json sk_sample_to_json(const SKSample& sample) {
  return Json{{"character", format_character(sample.character)},
              {"kernel", subgroup_to_json(sample.kernel)}};
}

Json scan_row_to_json(const LabelingScanRow& row) {
  Json record{{"labeling", row.labeling},
              {"success_probability", format_probability(row.success_probability)}};
  if (row.affine)
    record["affine"] = Json{{"alpha", row.affine->alpha}, {"beta", row.affine->beta}};
  else
    record["affine"] = nullptr;
  return record;
}

}  // namespace hspsim
