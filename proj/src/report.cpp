#include "holocrit/report.hpp"

#include <charconv>
#include <sstream>

namespace holocrit {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const CountReport& r) {
  Json per_q = Json::object(), floats = Json::object();
  for (const auto& [q, v] : r.per_q) per_q[std::to_string(q)] = v.str();
  for (const auto& [q, v] : r.float_view) floats[std::to_string(q)] = v;
  return Json{{"m", r.m},          {"N", r.N},
              {"per_q", per_q},    {"total", r.total.str()},
              {"signed", r.signed_sum.str()}, {"float_view", floats}};
}

Json to_json(const LeadingReport& r) {
  Json j{{"m", r.m}};
  for (const auto& [q, v] : r.n_q) j["n_" + std::to_string(q)] = v.str();
  j["n"] = r.n_total.str();
  Json floats = Json::object();
  for (const auto& [q, v] : r.float_view) floats["n_" + std::to_string(q)] = v;
  floats["n"] = r.n_total.to_double();
  j["float_view"] = floats;
  return j;
}

Json to_json(const B0qEstimate& e) {
  return Json{{"m", e.m},
              {"q", e.q},
              {"samples", e.samples},
              {"estimate", e.estimate},
              {"stderr", e.std_error},
              {"excluded", e.excluded},
              {"seed", e.seed},
              {"n_q_estimate", e.leading_estimate()},
              {"n_q_stderr", e.leading_stderr()}};
}

Json to_json(const EnsembleStats& e) {
  return Json{{"N", e.N},
              {"trials", e.trials},
              {"seed", e.seed},
              {"mean_q1", e.mean_q1},
              {"stderr_q1", e.stderr_q1},
              {"mean_q2", e.mean_q2},
              {"stderr_q2", e.stderr_q2},
              {"failure_rate", e.failure_rate},
              {"excluded", e.excluded},
              {"identity_violations", e.identity_violations},
              {"unreliable", e.unreliable}};
}

Json selberg_json(const SelbergParams& p, bool exponential, const SelbergValue& v) {
  Json j{{"n", p.n}, {"alpha", p.alpha.str()}};
  if (!exponential) j["beta"] = p.beta.str();
  j["gamma"] = p.gamma.str();
  j["form"] = exponential ? "exponential" : "finite";
  j["exact"] = v.is_exact();
  if (v.exact) {
    j["coeff"] = v.exact->coeff.str();
    j["pi_half_exponent"] = v.exact->pi_half_exponent;
  }
  j["float"] = v.approx;
  return j;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += csv_field(fields[i]);
  }
  return row + "\r\n";
}

std::string to_csv(const CountReport& r) {
  std::string out = csv_row({"m", "N", "q", "exact", "float"});
  const auto m = std::to_string(r.m), N = std::to_string(r.N);
  for (const auto& [q, v] : r.per_q)
    out += csv_row({m, N, std::to_string(q), v.str(), format_double(r.float_view.at(q))});
  out += csv_row({m, N, "total", r.total.str(), format_double(r.total.to_double())});
  out += csv_row({m, N, "signed", r.signed_sum.str(), format_double(r.signed_sum.to_double())});
  return out;
}

std::string to_csv(const LeadingReport& r) {
  std::string out = csv_row({"m", "q", "exact", "float"});
  const auto m = std::to_string(r.m);
  for (const auto& [q, v] : r.n_q)
    out += csv_row({m, std::to_string(q), v.str(), format_double(r.float_view.at(q))});
  out += csv_row({m, "total", r.n_total.str(), format_double(r.n_total.to_double())});
  return out;
}

std::string to_csv(const B0qEstimate& e) {
  return csv_row({"m", "q", "samples", "estimate", "stderr", "excluded", "seed"}) +
         csv_row({std::to_string(e.m), std::to_string(e.q), std::to_string(e.samples),
                  format_double(e.estimate), format_double(e.std_error), std::to_string(e.excluded),
                  std::to_string(e.seed)});
}

std::string to_csv(const EnsembleStats& e) {
  return csv_row({"N", "trials", "seed", "mean_q1", "stderr_q1", "mean_q2", "stderr_q2",
                  "failure_rate", "excluded"}) +
         csv_row({std::to_string(e.N), std::to_string(e.trials), std::to_string(e.seed),
                  format_double(e.mean_q1), format_double(e.stderr_q1), format_double(e.mean_q2),
                  format_double(e.stderr_q2), format_double(e.failure_rate),
                  std::to_string(e.excluded)});
}

std::string selberg_csv(const SelbergParams& p, bool exponential, const SelbergValue& v) {
  return csv_row({"n", "alpha", "beta", "gamma", "form", "exact", "coeff", "pi_half_exponent", "float"}) +
         csv_row({std::to_string(p.n), p.alpha.str(), exponential ? "" : p.beta.str(), p.gamma.str(),
                  exponential ? "exponential" : "finite", v.is_exact() ? "true" : "false",
                  v.exact ? v.exact->coeff.str() : "",
                  v.exact ? std::to_string(v.exact->pi_half_exponent) : "", format_double(v.approx)});
}

std::string trials_csv(const EnsembleStats& e) {
  std::string out =
      csv_row({"trial", "count_q1", "count_q2", "solver_ok", "degenerate", "marginal", "identity_ok"});
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  for (std::size_t i = 0; i < e.per_trial.size(); ++i) {
    const auto& t = e.per_trial[i];
    out += csv_row({std::to_string(i), std::to_string(t.counts[0]), std::to_string(t.counts[1]),
                    flag(t.solver_ok), flag(t.degenerate), flag(t.marginal), flag(t.identity_ok)});
  }
  return out;
}

}  // namespace holocrit
