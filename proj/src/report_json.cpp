#include "tandel/report_json.hpp"

namespace tandel {

ordered_json to_json(cplx z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

ordered_json to_json(const SpherePoint& z) { return z.is_infinity() ? ordered_json(nullptr) : to_json(z.value()); }

ordered_json to_json(const ParamReport& r) {
  ordered_json j;
  j["alpha"] = to_json(r.alpha);
  j["membership"] = r.membership.in_set() ? "InT" : "NotInT";
  j["period"] = r.cycle ? ordered_json(r.cycle->period) : ordered_json(nullptr);
  j["tentative"] = r.membership.tentative;
  j["escape_step"] = r.membership.in_set() ? ordered_json(nullptr) : ordered_json(r.membership.escape_step);
  j["fate"] = to_string(r.fate.kind);
  j["steps"] = r.fate.steps;
  if (r.cycle) {
    j["cycle"] = {{"period", r.cycle->period},
                  {"representative", to_json(r.cycle->representative)},
                  {"multiplier", to_json(r.cycle->multiplier)},
                  {"multiplier_abs", std::abs(r.cycle->multiplier)}};
  } else {
    j["cycle"] = nullptr;
  }
  j["symmetry_residual"] = to_json(r.symmetry_residual);
  ordered_json poles = ordered_json::array();
  for (const cplx p : r.nearest_poles) poles.push_back(to_json(p));
  j["nearest_poles"] = std::move(poles);
  return j;
}

ordered_json to_json(const ModelConstants& c) {
  return ordered_json{{"p_star", c.p_star},
                      {"t", c.t},
                      {"C", c.C},
                      {"p_star_residual", pstar_objective(c.p_star) - 0.125}};
}

}  // namespace tandel
