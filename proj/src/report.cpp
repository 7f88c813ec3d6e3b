#include "pogroup/report.hpp"

#include <cstdio>

namespace pogroup {

std::string input_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json report_envelope(const std::string& command, const std::string& hash, Json result,
                     std::vector<std::string> caveats) {
  Json j;
  j["tool_version"] = kToolVersion;
  j["input_hash"] = hash;
  j["command"] = command;
  j["result"] = std::move(result);
  j["caveats"] = caveats;
  return j;
}

namespace {

Json subgroup_json(const Subgroup& s) {
  Json j = Json::array();
  for (auto& g : s.gens) j.push_back(elem_str(g));
  return j;
}

Json values_json(const std::vector<AlgNum>& values) {
  Json j = Json::array();
  for (auto& v : values) j.push_back(v.str());
  return j;
}

}  // namespace

Json census_json(const OrderCensus& census) {
  Json j;
  j["group"] = census.group->name;
  j["bounds"] = {{"max_gens", census.bounds.max_gens}, {"max_exp", census.bounds.max_exp}};
  j["completeness"] = census.completeness_note;
  j["entry_count"] = census.entries.size();
  Json entries = Json::array();
  for (auto& e : census.entries) {
    Json je;
    je["p_gens"] = subgroup_json(e.p);
    je["center_rank"] = e.center_rank;
    je["iota_family"] = e.iota_family;
    je["sample_iota"] = values_json(e.sample_iota);
    je["from_abelianization"] = e.from_abelianization;
    je["total"] = e.total;
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json sigma_json(const SigmaVerdict& verdict) {
  Json j;
  j["order"] = verdict.order_desc;
  Json gens = Json::array();
  for (auto& g : verdict.gen_set) gens.push_back(elem_str(g));
  j["generating_set"] = std::move(gens);
  j["schedule"] = {{"radii", verdict.schedule.radii}, {"slacks", verdict.schedule.slacks}};
  Json kernels = Json::array();
  for (auto& k : verdict.kernels) {
    Json jk;
    jk["kernel"] = k.kernel_desc;
    Json cells = Json::array();
    for (auto& c : k.cells) {
      Json jc;
      jc["radius"] = c.radius;
      jc["slack"] = c.slack;
      jc["status"] = conn_status_name(c.status);
      jc["components"] = c.components;
      if (c.witness) {
        jc["witness"] = {elem_str(c.witness->first), elem_str(c.witness->second)};
      }
      cells.push_back(std::move(jc));
    }
    jk["cells"] = std::move(cells);
    jk["outcome"] = conn_status_name(k.outcome);
    if (k.outcome != ConnStatus::Inconclusive) {
      jk["outcome_radius"] = k.outcome_radius;
      jk["outcome_slack"] = k.outcome_slack;
    }
    if (k.witness) jk["witness"] = {elem_str(k.witness->first), elem_str(k.witness->second)};
    kernels.push_back(std::move(jk));
  }
  j["kernels"] = std::move(kernels);
  j["outcome"] = conn_status_name(verdict.outcome);
  return j;
}

Json theorem_a_json(const TheoremAReport& report) {
  Json j;
  j["hom"] = report.hom_desc;
  j["kernel_fg"] = report.kernel_fg;
  j["kernel_fg_source"] = report.kernel_fg_source;
  if (report.kernel_gens) j["kernel_gens"] = subgroup_json(*report.kernel_gens);
  Json orders = Json::array();
  for (auto& o : report.orders) {
    Json jo;
    jo["order"] = o.order_desc;
    jo["outcome"] = conn_status_name(o.verdict.outcome);
    jo["detail"] = sigma_json(o.verdict);
    orders.push_back(std::move(jo));
  }
  j["orders"] = std::move(orders);
  j["inconclusive_count"] = report.inconclusive_count;
  if (report.predicted_fg)
    j["predicted_fg"] = *report.predicted_fg;
  else
    j["predicted_fg"] = nullptr;
  j["agreement"] = report.agreement;
  return j;
}

Json comparison_json(const Element& a, const Element& b, Comparison c) {
  Json j;
  j["lhs"] = elem_str(a);
  j["rhs"] = elem_str(b);
  j["comparison"] = comparison_name(c);
  return j;
}

}  // namespace pogroup
