#include "frechet3/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace frechet3 {

using nlohmann::json;

json copula_to_json(const CopulaSpec2& c) {
  return std::visit(
      [](const auto& fam) -> json {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, PiFamily>) {
          return {{"family", "pi"}};
        } else if constexpr (std::is_same_v<T, MFamily>) {
          return {{"family", "m"}};
        } else if constexpr (std::is_same_v<T, WFamily>) {
          return {{"family", "w"}};
        } else if constexpr (std::is_same_v<T, FgmFamily>) {
          return {{"family", "fgm"}, {"theta", fam.theta}};
        } else if constexpr (std::is_same_v<T, ClaytonFamily>) {
          return {{"family", "clayton"}, {"alpha", fam.alpha}};
        } else if constexpr (std::is_same_v<T, CheckerboardFamily>) {
          return {{"family", "checkerboard"}, {"weights", fam.weights}};
        } else {
          return {{"family", "transpose"}, {"inner", copula_to_json(*fam.inner)}};
        }
      },
      c.node());
}

CopulaSpec2 copula_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family"))
    throw InvalidSpecError("copula json: missing \"family\"");
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "pi") return CopulaSpec2::pi();
  if (fam == "m") return CopulaSpec2::m();
  if (fam == "w") return CopulaSpec2::w();
  if (fam == "fgm") return CopulaSpec2::fgm(j.at("theta").get<double>());
  if (fam == "clayton") return CopulaSpec2::clayton(j.at("alpha").get<double>());
  if (fam == "checkerboard")
    return CopulaSpec2::checkerboard(
        j.at("weights").get<std::vector<std::vector<double>>>());
  if (fam == "transpose")
    return CopulaSpec2::transpose(copula_from_json(j.at("inner")));
  throw InvalidSpecError("copula json: unknown family \"" + fam + "\"");
}

json path_to_json(const FamilyPath& p) {
  json pieces = json::array();
  for (const auto& c : p.pieces()) pieces.push_back(copula_to_json(c));
  return {{"breakpoints", p.breakpoints()}, {"pieces", pieces}};
}

FamilyPath path_from_json(const json& j) {
  if (j.is_object() && j.contains("family"))  // bare copula = constant family
    return FamilyPath::constant(copula_from_json(j));
  std::vector<CopulaSpec2> pieces;
  for (const auto& pj : j.at("pieces")) pieces.push_back(copula_from_json(pj));
  return FamilyPath(j.at("breakpoints").get<std::vector<double>>(),
                    std::move(pieces));
}

json quad_to_json(const QuadratureConfig& q) {
  return {{"nodes", q.nodes}, {"panels", q.panels}, {"tol", q.tol}};
}

QuadratureConfig quad_from_json(const json& j) {
  QuadratureConfig q;
  if (j.contains("nodes")) q.nodes = j.at("nodes").get<int>();
  if (j.contains("panels")) q.panels = j.at("panels").get<int>();
  if (j.contains("tol")) q.tol = j.at("tol").get<double>();
  q.validate();
  return q;
}

json lift_to_json(const LiftedCopula3& l) {
  return {{"a", copula_to_json(l.a)},
          {"b", copula_to_json(l.b)},
          {"fam", path_to_json(l.fam)},
          {"quad", quad_to_json(l.quad)}};
}

LiftedCopula3 lift_from_json(const json& j) {
  QuadratureConfig q;
  if (j.contains("quad")) q = quad_from_json(j.at("quad"));
  return LiftedCopula3(copula_from_json(j.at("a")), copula_from_json(j.at("b")),
                       path_from_json(j.at("fam")), q);
}

Triple triple_from_json(const json& j) {
  return Triple{copula_from_json(j.at("c12")), copula_from_json(j.at("c13")),
                copula_from_json(j.at("c23"))};
}

json witness_to_json(const Witness& w, bool pairwise) {
  json p = pairwise ? json::array({w.u1, w.u3})
                    : json::array({w.u1, w.u2, w.u3});
  return {{"point", p},
          {"value", w.value},
          {"lower", w.lower},
          {"upper", w.upper}};
}

json verdict_to_json(const CompatVerdict& v) {
  json j = {{"status", v.refuted() ? "Refuted" : "NotRefuted"},
            {"grid_points", v.grid_points},
            {"tol", v.tol}};
  if (v.witness) j["witness"] = witness_to_json(*v.witness, /*pairwise=*/true);
  return j;
}

std::string format_value(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string batch_to_csv(const SampleBatch& batch) {
  std::ostringstream os;
  os << "u1,u2,u3\n";
  for (const auto& r : batch.rows)
    os << format_value(r[0]) << ',' << format_value(r[1]) << ','
       << format_value(r[2]) << '\n';
  return os.str();
}

std::string report_to_csv(const BoundsReport& rep) {
  std::ostringstream os;
  os << "u1,u2,u3,FL,CL,CU,FU\n";
  for (const auto& r : rep.records)
    os << format_value(r.u1) << ',' << format_value(r.u2) << ','
       << format_value(r.u3) << ',' << format_value(r.fl) << ','
       << format_value(r.cl) << ',' << format_value(r.cu) << ','
       << format_value(r.fu) << '\n';
  return os.str();
}

json report_summary_json(const BoundsReport& rep) {
  return {{"max_gap_lower", rep.max_gap_lower},
          {"max_gap_upper", rep.max_gap_upper},
          {"violations", rep.violations.size()},
          {"cl_min_box_volume", rep.cl_min_box_volume},
          {"cu_min_box_volume", rep.cu_min_box_volume}};
}

std::uint64_t parse_seed(const std::string& s) {
  if (s.empty()) throw InvalidSpecError("seed: empty string");
  char* end = nullptr;
  const int base = (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
                       ? 16
                       : 10;
  const unsigned long long v = std::strtoull(s.c_str(), &end, base);
  if (end == nullptr || *end != '\0')
    throw InvalidSpecError("seed: not a decimal or 0x-hex integer: " + s);
  return static_cast<std::uint64_t>(v);
}

}  // namespace frechet3
