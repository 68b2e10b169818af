#include "specker/json_io.hpp"

namespace specker {

Json rational_to_json(const Rat& r) { return to_string(r); }

Rat rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw ParseError(where + ": malformed rational '" + j.get<std::string>() + "'");
    return *r;
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) {
    auto r = snap_to_rational(j.get<double>());
    if (!r) {
      throw ParseError(where + ": float is not within 1e-9 of a fraction with denominator <= 10^6");
    }
    return *r;
  }
  throw ParseError(where + ": expected a rational (string \"p/q\" or number)");
}

Json to_json(const CorrelationVector& cv) {
  Json pairs;
  for (Pair p : kPairs) {
    Json arr = Json::array();
    for (int idx = 0; idx < 4; ++idx) arr.push_back(rational_to_json(cv.table(p)[idx]));
    pairs[pair_label(p)] = arr;
  }
  return Json{{"pairs", pairs}};
}

Json to_json(const SixParams& s) {
  return Json{{"six",
               {{"w12", rational_to_json(s.w12)},
                {"w23", rational_to_json(s.w23)},
                {"w13", rational_to_json(s.w13)},
                {"p1", rational_to_json(s.p1)},
                {"p2", rational_to_json(s.p2)},
                {"p3", rational_to_json(s.p3)}}}};
}

Json to_json(const ValidationReport& report) {
  Json arr = Json::array();
  for (const auto& issue : report.issues) arr.push_back(issue.describe());
  return Json{{"ok", report.ok()}, {"violations", arr}};
}

Json to_json(const RValues& r) {
  return Json{{"R0", rational_to_json(r.r0)},
              {"R1", rational_to_json(r.r1)},
              {"R2", rational_to_json(r.r2)},
              {"R3", rational_to_json(r.r3)}};
}

Json to_json(const Vertex& v) {
  Json j;
  j["id"] = v.id;
  j["kind"] = v.kind == Vertex::Kind::Deterministic ? "deterministic" : "indeterministic";
  j.update(to_json(v.cv));
  return j;
}

Json to_json(const ConvexDecomposition& d) {
  Json arr = Json::array();
  for (const Rat& w : d.weights) arr.push_back(rational_to_json(w));
  return Json{{"weights", arr}};
}

Json to_json(const MarginalScenario& sc) {
  Json ms = Json::array();
  for (const auto& m : sc.measurements) {
    ms.push_back(Json{{"name", m.name}, {"outcomes", m.outcomes}});
  }
  return Json{{"measurements", ms}, {"contexts", sc.contexts}};
}

Json to_json(const ScenarioStats& stats) {
  Json out;
  for (size_t c = 0; c < stats.dists.size(); ++c) {
    Json arr = Json::array();
    for (const Rat& q : stats.dists[c]) arr.push_back(rational_to_json(q));
    out[std::to_string(c)] = arr;
  }
  return out;
}

Json to_json(const JointDistribution& joint, const MarginalScenario& sc) {
  Json out;
  for (long long idx = 0; idx < sc.joint_size(); ++idx) {
    auto tuple = sc.joint_outcome(idx);
    std::string key;
    for (int x : tuple) key += std::to_string(x);
    out[key] = rational_to_json(joint.p[idx]);
  }
  return out;
}

Json to_json(const FiniteOntologicalModel& model) {
  Json states = Json::array();
  for (const auto& st : model.states) {
    Json responses;
    for (int m = 0; m < model.scenario.n_measurements(); ++m) {
      Json arr = Json::array();
      for (const Rat& q : st.responses[m]) arr.push_back(rational_to_json(q));
      responses[model.scenario.measurements[m].name] = arr;
    }
    Json jr;
    for (const auto& [c, dist] : st.joint_responses) {
      Json arr = Json::array();
      for (const Rat& q : dist) arr.push_back(rational_to_json(q));
      jr[std::to_string(c)] = arr;
    }
    states.push_back(Json{{"weight", rational_to_json(st.weight)},
                          {"responses", responses},
                          {"joint_responses", jr}});
  }
  return Json{{"scenario", to_json(model.scenario)},
              {"states", states},
              {"deterministic", model.deterministic},
              {"factorizable", model.factorizable}};
}

CorrelationVector correlation_from_json(const Json& j) {
  if (j.contains("six")) return from_six_params(six_from_json(j));
  if (!j.contains("pairs")) throw ParseError("expected a 'pairs' or 'six' object");
  const Json& pairs = j.at("pairs");
  CorrelationVector cv;
  for (Pair p : kPairs) {
    std::string key = pair_label(p);
    if (!pairs.contains(key)) throw ParseError("missing pair '" + key + "'");
    const Json& arr = pairs.at(key);
    if (!arr.is_array() || arr.size() != 4) {
      throw ParseError("pair '" + key + "' must be an array of 4 probabilities");
    }
    for (int idx = 0; idx < 4; ++idx) {
      cv.table(p)[idx] = rational_from_json(arr[idx], "pairs." + key + "[" + std::to_string(idx) + "]");
    }
  }
  return cv;
}

SixParams six_from_json(const Json& j) {
  const Json& six = j.contains("six") ? j.at("six") : j;
  SixParams s;
  auto get = [&](const char* key) {
    if (!six.contains(key)) throw ParseError(std::string("missing six-parameter field '") + key + "'");
    return rational_from_json(six.at(key), std::string("six.") + key);
  };
  s.w12 = get("w12");
  s.w23 = get("w23");
  s.w13 = get("w13");
  s.p1 = get("p1");
  s.p2 = get("p2");
  s.p3 = get("p3");
  return s;
}

MarginalScenario scenario_from_json(const Json& j) {
  MarginalScenario sc;
  if (!j.contains("measurements") || !j.contains("contexts")) {
    throw ParseError("scenario requires 'measurements' and 'contexts'");
  }
  for (const auto& m : j.at("measurements")) {
    Measurement meas;
    meas.name = m.value("name", "M" + std::to_string(sc.measurements.size() + 1));
    meas.outcomes = m.value("outcomes", 2);
    sc.measurements.push_back(meas);
  }
  for (const auto& c : j.at("contexts")) {
    sc.contexts.push_back(c.get<std::vector<int>>());
  }
  return sc;
}

ScenarioStats stats_from_json(const Json& j, const MarginalScenario& sc) {
  ScenarioStats stats;
  stats.dists.resize(sc.n_contexts());
  for (int c = 0; c < sc.n_contexts(); ++c) {
    std::string key = std::to_string(c);
    if (!j.contains(key)) throw ParseError("stats missing distribution for context " + key);
    const Json& arr = j.at(key);
    if (static_cast<long long>(arr.size()) != sc.context_size(c)) {
      throw ParseError("stats for context " + key + " has wrong length");
    }
    for (const auto& q : arr) {
      stats.dists[c].push_back(rational_from_json(q, "stats." + key));
    }
  }
  return stats;
}

FiniteOntologicalModel model_from_json(const Json& j) {
  FiniteOntologicalModel model;
  model.scenario = j.contains("scenario") ? scenario_from_json(j.at("scenario")) : specker_scenario();
  if (!j.contains("states")) throw ParseError("model requires a 'states' array");
  for (const auto& sj : j.at("states")) {
    OnticState st;
    st.weight = rational_from_json(sj.at("weight"), "state.weight");
    st.responses.resize(model.scenario.n_measurements());
    const Json& resp = sj.at("responses");
    for (int m = 0; m < model.scenario.n_measurements(); ++m) {
      const std::string& name = model.scenario.measurements[m].name;
      if (!resp.contains(name)) throw ParseError("state missing response for " + name);
      for (const auto& q : resp.at(name)) {
        st.responses[m].push_back(rational_from_json(q, "responses." + name));
      }
    }
    if (sj.contains("joint_responses")) {
      for (const auto& [key, arr] : sj.at("joint_responses").items()) {
        std::vector<Rat> dist;
        for (const auto& q : arr) dist.push_back(rational_from_json(q, "joint_responses." + key));
        st.joint_responses[std::stoi(key)] = std::move(dist);
      }
    }
    model.states.push_back(std::move(st));
  }
  model.deterministic = j.value("deterministic", is_deterministic(model));
  model.factorizable = j.value("factorizable", factorizability_check(model));
  return model;
}

}  // namespace specker
