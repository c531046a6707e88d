#include "report.hpp"

#include "qes/error.hpp"

namespace qes::cli {

using json = nlohmann::ordered_json;

json complex_to_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

namespace {

template <class T, class F>
json optional_to_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const json& j, const char* key, F&& f) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return f(j.at(key));
}

json fd_to_json(const FdReport& f) {
  return json{{"refined_energy", complex_to_json(f.refined)},
              {"defect", f.defect},
              {"defect_half_step", f.defect_half_step},
              {"ratio", optional_to_json(f.ratio, [](double x) { return json(x); })}};
}

FdReport fd_from_json(const json& j) {
  return {complex_from_json(j.at("refined_energy")), j.at("defect").get<double>(),
          j.at("defect_half_step").get<double>(),
          optional_from_json<double>(j, "ratio", [](const json& x) { return x.get<double>(); })};
}

json level_to_json(const LevelReport& l) {
  json phi = json::array();
  for (const auto& c : l.phi) phi.push_back(complex_to_json(c));
  return json{{"energy_base", complex_to_json(l.energy_base)},
              {"energy_shifted", complex_to_json(l.energy_shifted)},
              {"phi", std::move(phi)},
              {"multiplicity", l.multiplicity},
              {"eigvec_residual", l.eigvec_residual},
              {"residual_sup", l.residual_sup},
              {"fd", optional_to_json(l.fd, fd_to_json)},
              {"norm_squared", optional_to_json(l.norm_squared, [](double x) { return json(x); })}};
}

LevelReport level_from_json(const json& j) {
  LevelReport l;
  l.energy_base = complex_from_json(j.at("energy_base"));
  l.energy_shifted = complex_from_json(j.at("energy_shifted"));
  for (const auto& c : j.at("phi")) l.phi.push_back(complex_from_json(c));
  l.multiplicity = j.at("multiplicity").get<int>();
  l.eigvec_residual = j.at("eigvec_residual").get<double>();
  l.residual_sup = j.at("residual_sup").get<double>();
  l.fd = optional_from_json<FdReport>(j, "fd", fd_from_json);
  l.norm_squared = optional_from_json<double>(j, "norm_squared", [](const json& x) { return x.get<double>(); });
  return l;
}

json form_to_json(const PublishedForm& p) {
  return json{{"quantity", p.quantity},
              {"published", p.published},
              {"published_value", optional_to_json(p.published_value, complex_to_json)},
              {"computed_value", optional_to_json(p.computed_value, complex_to_json)},
              {"agrees", p.agrees},
              {"note", p.note}};
}

PublishedForm form_from_json(const json& j) {
  PublishedForm p;
  p.quantity = j.at("quantity").get<std::string>();
  p.published = j.at("published").get<std::string>();
  p.published_value = optional_from_json<Complex>(j, "published_value", complex_from_json);
  p.computed_value = optional_from_json<Complex>(j, "computed_value", complex_from_json);
  p.agrees = j.at("agrees").get<bool>();
  p.note = j.at("note").get<std::string>();
  return p;
}

json verification_to_json(const VerificationReport& v) {
  return json{{"passed", v.passed},
              {"grid", {{"x_min", v.grid.x_min}, {"x_max", v.grid.x_max}, {"n_points", v.grid.n_points}}},
              {"failures", v.failures}};
}

VerificationReport verification_from_json(const json& j) {
  VerificationReport v;
  v.passed = j.at("passed").get<bool>();
  const auto& g = j.at("grid");
  v.grid = {g.at("x_min").get<double>(), g.at("x_max").get<double>(), g.at("n_points").get<int>()};
  v.failures = j.at("failures").get<std::vector<std::string>>();
  return v;
}

}  // namespace

void to_json(json& j, const RunReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) levels.push_back(level_to_json(l));
  json forms = json::array();
  for (const auto& p : r.published_forms) forms.push_back(form_to_json(p));

  j = json{{"schema_version", 1},
           {"command", r.command},
           {"family", r.family},
           {"sector", optional_to_json(r.sector, [](const std::string& s) { return json(s); })},
           {"mu", optional_to_json(r.mu, [](double x) { return json(x); })},
           {"parameters",
            {{"a", complex_to_json(r.a)},
             {"b", optional_to_json(r.b, complex_to_json)},
             {"d", optional_to_json(r.d, complex_to_json)}}},
           {"two_j", r.two_j},
           {"shift", complex_to_json(r.shift)},
           {"common_shift_found", r.common_shift_found},
           {"imag_spread", r.imag_spread},
           {"levels", std::move(levels)},
           {"residual_sup", r.residual_sup},
           {"fd_defect", optional_to_json(r.fd_defect, [](double x) { return json(x); })},
           {"pt_symmetric", r.pt_symmetric},
           {"published_forms", std::move(forms)},
           {"verification", optional_to_json(r.verification, verification_to_json)}};
}

void from_json(const json& j, RunReport& r) {
  if (j.at("schema_version").get<int>() != 1) throw ValidationError("unsupported report schema_version");
  r = RunReport{};
  r.command = j.at("command").get<std::string>();
  r.family = j.at("family").get<std::string>();
  r.sector = optional_from_json<std::string>(j, "sector", [](const json& x) { return x.get<std::string>(); });
  r.mu = optional_from_json<double>(j, "mu", [](const json& x) { return x.get<double>(); });
  const auto& p = j.at("parameters");
  r.a = complex_from_json(p.at("a"));
  r.b = optional_from_json<Complex>(p, "b", complex_from_json);
  r.d = optional_from_json<Complex>(p, "d", complex_from_json);
  r.two_j = j.at("two_j").get<int>();
  r.shift = complex_from_json(j.at("shift"));
  r.common_shift_found = j.at("common_shift_found").get<bool>();
  r.imag_spread = j.at("imag_spread").get<double>();
  for (const auto& l : j.at("levels")) r.levels.push_back(level_from_json(l));
  r.residual_sup = j.at("residual_sup").get<double>();
  r.fd_defect = optional_from_json<double>(j, "fd_defect", [](const json& x) { return x.get<double>(); });
  r.pt_symmetric = j.at("pt_symmetric").get<bool>();
  for (const auto& f : j.at("published_forms")) r.published_forms.push_back(form_from_json(f));
  r.verification = optional_from_json<VerificationReport>(j, "verification", verification_from_json);
}

std::string serialize(const RunReport& r) { return json(r).dump(2) + "\n"; }

RunReport parse_report(const std::string& text) {
  try {
    return json::parse(text).get<RunReport>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace qes::cli
