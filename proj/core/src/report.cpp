#include "pgfr/report.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace pgfr {

namespace {

Json int_to_json(const Int& x) {
  // Keep exact integers exact: values beyond int64 are emitted as strings.
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

Json cyclo_to_json(const Cyclo& x) {
  Json j;
  j["order"] = x.order();
  Json coeffs = Json::array();
  for (const Rational& c : x.coefficients()) coeffs.push_back(format_rational(c));
  j["coeffs"] = std::move(coeffs);
  j["float"] = x.to_double();
  return j;
}

}  // namespace

std::string format_float(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << rational_numerator(q) << "/" << rational_denominator(q);
  return os.str();
}

Json report_skeleton(const AnalysisRequest& request) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
  Json req;
  req["command"] = request.command;
  req["n"] = request.n;
  req["s1"] = request.s1;
  req["include_ab_coset"] = request.include_ab_coset;
  if (request.pair)
    req["pair"] = Json::array({request.pair->first, request.pair->second});
  req["epsilon"] = request.epsilon;
  req["t_max"] = request.t_max;
  req["bound"] = request.bound;
  if (request.seed) req["seed"] = *request.seed;
  req["format"] = request.format;
  j["request"] = std::move(req);
  return j;
}

Json to_json(const SpectrumTable& table) {
  Json j;
  j["n"] = table.n;
  j["field_order"] = table.field_order;
  Json entries = Json::array();
  for (const SpectrumEntry& e : table.entries) {
    Json je;
    je["label"] = e.label.name();
    je["multiplicity"] = e.multiplicity;
    je["value"] = e.value;
    je["exact"] = cyclo_to_json(e.exact);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const RelationLattice& lattice) {
  Json j;
  j["variables"] = lattice.variable_names;
  Json gaps = Json::array();
  for (const Cyclo& g : lattice.gaps) gaps.push_back(cyclo_to_json(g));
  j["gaps"] = std::move(gaps);
  Json basis = Json::array();
  for (const IntVector& b : lattice.basis) {
    Json row = Json::array();
    for (const Int& x : b) row.push_back(int_to_json(x));
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  return j;
}

Json to_json(const TheoremCheck& check) {
  Json j;
  j["family"] = family_name(check.family);
  j["applies"] = check.applies;
  if (check.applies) {
    switch (check.prediction) {
      case TheoremCheck::Prediction::Admits: j["prediction"] = "admits"; break;
      case TheoremCheck::Prediction::Denies: j["prediction"] = "denies"; break;
      case TheoremCheck::Prediction::Pgst: j["prediction"] = "pgst"; break;
    }
    j["detail"] = check.detail;
  }
  return j;
}

Json to_json(const RevivalParameters& params) {
  Json j;
  j["functional_gcd"] = params.functional_gcd;
  j["revival_possible"] = params.revival_possible;
  j["pgst_achievable"] = params.pgst_achievable;
  j["thetas"] = params.thetas;
  j["description"] = params.description;
  return j;
}

Json to_json(const PgfrVerdict& verdict) {
  Json j;
  j["n"] = verdict.n;
  j["vertex_pair_rule"] = verdict.vertex_pair_rule;
  j["admits_pgfr"] = verdict.admits_pgfr;
  j["functional_gcd"] = verdict.functional_gcd;
  j["params"] = to_json(verdict.params);
  j["lattice"] = to_json(verdict.lattice);
  Json fast = Json::array();
  for (const TheoremCheck& c : verdict.fast_paths) fast.push_back(to_json(c));
  j["fast_paths"] = std::move(fast);
  return j;
}

Json to_json(const OracleResult& oracle) {
  Json j;
  j["bound"] = oracle.bound;
  j["complete"] = oracle.complete;
  j["nodes_visited"] = oracle.nodes_visited;
  j["functional_gcd"] = oracle.functional_gcd;
  j["relation_count"] = oracle.relations.size();
  Json rels = Json::array();
  for (const IntVector& r : oracle.relations) {
    Json row = Json::array();
    for (const Int& x : r) row.push_back(int_to_json(x));
    rels.push_back(std::move(row));
  }
  j["relations"] = std::move(rels);
  return j;
}

Json to_json(const FidelitySample& sample) {
  Json j;
  j["t"] = sample.t;
  j["alpha"] = Json::array({sample.alpha_est.real(), sample.alpha_est.imag()});
  j["beta"] = Json::array({sample.beta_est.real(), sample.beta_est.imag()});
  j["fidelity"] = sample.revival_fidelity;
  j["leak"] = sample.leak;
  return j;
}

Json to_json(const SearchReport& search) {
  Json j;
  j["u"] = search.u.value;
  j["v"] = search.v.value;
  j["periodicity_mode"] = search.periodicity_mode;
  j["best_time"] = search.best_time;
  j["best_fidelity"] = search.best_fidelity;
  j["best"] = to_json(search.best);
  if (search.phase_estimates) {
    j["phases"] = Json{{"delta1", search.phase_estimates->delta1},
                       {"delta2", search.phase_estimates->delta2},
                       {"split", search.phase_estimates->split()}};
  }
  if (search.target_params) j["target_params"] = to_json(*search.target_params);
  Json trace = Json::array();
  for (const FidelitySample& s : search.trace) trace.push_back(to_json(s));
  j["trace"] = std::move(trace);
  j["evaluated_count"] = search.evaluated.size();
  j["target_reached"] = search.target_reached;
  j["budget_exhausted"] = search.budget_exhausted;
  return j;
}

std::string serialize_structured(const Json& report) { return report.dump(2) + "\n"; }

Json parse_structured(const std::string& text) { return Json::parse(text); }

namespace {

void render_node(std::ostream& os, const Json& node, const std::string& indent) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || value.is_array()) {
        os << indent << key << ":\n";
        render_node(os, value, indent + "  ");
      } else {
        os << indent << key << ": ";
        render_node(os, value, "");
        os << "\n";
      }
    }
  } else if (node.is_array()) {
    bool scalars_only = true;
    for (const auto& item : node)
      if (item.is_object() || item.is_array()) scalars_only = false;
    if (scalars_only) {
      os << indent << "[";
      bool first = true;
      for (const auto& item : node) {
        if (!first) os << ", ";
        first = false;
        render_node(os, item, "");
      }
      os << "]\n";
    } else {
      std::size_t i = 0;
      for (const auto& item : node) {
        os << indent << "- [" << i++ << "]\n";
        render_node(os, item, indent + "  ");
      }
    }
  } else if (node.is_number_float()) {
    os << format_float(node.get<double>());
  } else if (node.is_string()) {
    os << node.get<std::string>();
  } else {
    os << node.dump();
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_node(os, report, "");
  return os.str();
}

}  // namespace pgfr
