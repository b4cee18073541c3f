#include "kforest/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace kforest {

Json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("rational_from_json: expected \"num/den\" or integer");
}

Json coloring_to_json(const Coloring& c) { return Json(c.raw()); }

Coloring coloring_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("coloring_from_json: expected array");
  return Coloring(j.get<std::vector<int>>());
}

Json lists_to_json(const ListAssignment& lists) { return Json(lists.lists); }

ListAssignment lists_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("lists_from_json: expected array");
  ListAssignment out;
  out.lists = j.get<std::vector<std::vector<int>>>();
  return out;
}

Json configuration_to_json(const Configuration& cfg) {
  Json j;
  j["kind"] = config_kind_name(cfg.kind());
  if (auto* c = std::get_if<ConfigC1>(&cfg.match)) {
    j["v"] = c->v;
    j["u"] = c->u;
  } else if (auto* c2 = std::get_if<ConfigC2>(&cfg.match)) {
    j["v"] = c2->v;
    j["u"] = c2->u;
    j["w"] = c2->w;
  } else if (auto* c3 = std::get_if<ConfigC3>(&cfg.match)) {
    j["v"] = c3->v;
    j["u"] = c3->u;
    j["w"] = c3->w;
  } else if (auto* c4 = std::get_if<ConfigC4>(&cfg.match)) {
    j["v"] = c4->v;
    j["x"] = c4->x;
    j["y"] = c4->y;
    j["z"] = c4->z;
    j["w"] = c4->w;
    j["xp"] = c4->xp;
    j["yp"] = c4->yp;
    j["zp"] = c4->zp;
  } else if (auto* c5 = std::get_if<ConfigC5>(&cfg.match)) {
    j["v"] = c5->v;
    j["x"] = c5->x;
    j["xp"] = c5->xp;
  }
  return j;
}

Configuration configuration_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  auto num = [&](const char* key) { return j.at(key).get<int>(); };
  if (kind == "C1") return {ConfigC1{num("v"), num("u")}};
  if (kind == "C2") return {ConfigC2{num("v"), num("u"), num("w")}};
  if (kind == "C3") return {ConfigC3{num("v"), num("u"), num("w")}};
  if (kind == "C4")
    return {ConfigC4{num("v"), num("x"), num("y"), num("z"), num("w"), num("xp"),
                     num("yp"), num("zp")}};
  if (kind == "C5") {
    ConfigC5 c;
    c.v = num("v");
    auto x = j.at("x").get<std::vector<int>>();
    auto xp = j.at("xp").get<std::vector<int>>();
    if (x.size() != 5 || xp.size() != 5)
      throw std::invalid_argument("configuration_from_json: C5 needs five neighbors");
    std::copy(x.begin(), x.end(), c.x.begin());
    std::copy(xp.begin(), xp.end(), c.xp.begin());
    return {c};
  }
  throw std::invalid_argument("configuration_from_json: unknown kind '" + kind + "'");
}

Json report_to_json(const VerificationReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["improper_edges"] = Json::array();
  for (const auto& e : report.improper_edges)
    j["improper_edges"].push_back({{"u", e.u}, {"v", e.v}});
  j["frugality_violations"] = Json::array();
  for (const auto& f : report.frugality_violations)
    j["frugality_violations"].push_back({{"v", f.v}, {"color", f.color}, {"count", f.count}});
  j["bicolored_cycles"] = Json::array();
  for (const auto& c : report.bicolored_cycles)
    j["bicolored_cycles"].push_back(
        {{"color_a", c.color_a}, {"color_b", c.color_b}, {"cycle", c.cycle}});
  return j;
}

Json trace_to_json(const ExtensionTrace& trace) {
  Json j;
  j["steps"] = Json::array();
  for (const auto& s : trace.steps)
    j["steps"].push_back({{"config", s.config},
                          {"vertex", s.vertex},
                          {"forbidden", s.forbidden},
                          {"chosen", s.chosen}});
  j["fallbacks"] = Json::array();
  for (const auto& f : trace.fallbacks)
    j["fallbacks"].push_back({{"reason", f.reason},
                              {"remaining_vertices", f.remaining_vertices},
                              {"mad_hypothesis_violated", f.mad_hypothesis_violated}});
  return j;
}

Json charge_state_to_json(const ChargeState& state) {
  Json j = Json::array();
  for (std::size_t v = 0; v < state.w.size(); ++v)
    j.push_back({{"vertex", static_cast<int>(v)},
                 {"initial", rational_to_json(state.w[v])},
                 {"final", rational_to_json(state.w_star[v])}});
  return j;
}

}  // namespace kforest
