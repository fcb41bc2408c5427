#include "report.hpp"

#include <cstdio>

namespace sdist::report {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string bounds_tsv(const std::vector<BoundsReport>& rows) {
  std::string out = "n\ts\tgerzon\tdgs\thegedus\tbarg_musin\tdm\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + '\t' + std::to_string(r.s) + '\t' + to_string(r.gerzon) + '\t' + to_string(r.dgs) +
           '\t' + to_string(r.hegedus) + '\t' + to_string(r.barg_musin) + '\t' + to_string(r.dm) + '\n';
  }
  return out;
}

json bounds_json(const std::vector<BoundsReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json notes = json::object();
    for (const auto& note : r.applicability_notes) notes[note.bound] = note.condition;
    // Bound values are strings: they outgrow 64-bit integers.
    arr.push_back({{"n", r.n},
                   {"s", r.s},
                   {"gerzon", to_string(r.gerzon)},
                   {"dgs", to_string(r.dgs)},
                   {"hegedus", to_string(r.hegedus)},
                   {"barg_musin", to_string(r.barg_musin)},
                   {"dm", to_string(r.dm)},
                   {"applicability", notes}});
  }
  return arr;
}

namespace {

std::string mode_text(const PointConfiguration& config) {
  return config.is_exact() ? "exact" : "float (tol " + format_double(config.tolerance()) + ")";
}

std::string value_text(const InnerProductProfile& prof, std::size_t k) {
  return prof.mode == ScalarMode::exact ? to_string(prof.exact_values[k]) : format_double(prof.values[k]);
}

std::string sum_text(const InnerProductProfile& prof) {
  return prof.exact_sum ? to_string(*prof.exact_sum) : format_double(prof.sum);
}

std::string bound_lines(const std::vector<BoundCheck>& checks) {
  std::string out;
  for (const auto& b : checks) {
    out += "  " + b.name + ": ";
    if (b.applies)
      out += std::string(b.respected ? "applies, respected" : "applies, VIOLATED") + " (bound " + b.value + ")";
    else
      out += "hypothesis fails (" + b.hypothesis + ")";
    out += '\n';
  }
  return out;
}

json bound_checks_json(const std::vector<BoundCheck>& checks) {
  json arr = json::array();
  for (const auto& b : checks)
    arr.push_back(
        {{"name", b.name}, {"hypothesis", b.hypothesis}, {"applies", b.applies}, {"value", b.value},
         {"respected", b.respected}});
  return arr;
}

std::string theorem_line(const CheckReport& r) {
  const std::string m = std::to_string(r.m), dm = to_string(r.dm);
  switch (r.theorem_bound) {
    case BoundStatus::attained: return "bound: attained (" + m + " = " + dm + ")";
    case BoundStatus::strict: return "bound: strict (" + m + " < " + dm + ")";
    case BoundStatus::violated: return "bound: VIOLATED (" + m + " > " + dm + ") severity=critical";
    case BoundStatus::not_applicable: return "bound: not applicable (inner products do not sum to zero; dm = " + dm + ")";
  }
  return {};
}

const char* pass(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

std::string profile_text(const PointConfiguration& config, const InnerProductProfile& prof) {
  std::string out;
  out += "points: " + std::to_string(config.size()) + "\n";
  out += "dimension: " + std::to_string(config.dimension()) + "\n";
  out += "mode: " + mode_text(config) + "\n";
  out += "s: " + std::to_string(prof.s) + "\n";
  out += "inner products:";
  for (std::size_t k = 0; k < prof.s; ++k)
    out += " " + value_text(prof, k) + " (x" + std::to_string(prof.multiplicities[k]) + ")";
  out += "\ndistances:";
  for (std::size_t k = 0; k < prof.s; ++k) {
    out += " " + format_double(prof.distances[k]);
    if (prof.mode == ScalarMode::exact) out += " (sq " + to_string(prof.exact_squared_distances[k]) + ")";
  }
  out += "\nsum: " + sum_text(prof) + "\n";
  out += std::string("sum_zero: ") + (prof.sum_zero ? "yes" : "no") + "\n";
  out += std::string("symmetric_pm: ") + (prof.symmetric_pm ? "yes" : "no") + "\n";
  const BoundsReport b = compute_bounds(static_cast<long>(config.dimension()), static_cast<long>(prof.s));
  out += "hypotheses:\n";
  out += "  dm: " +
         std::string(prof.sum_zero ? (Integer(static_cast<unsigned long>(config.size())) <= b.dm ? "applies, respected"
                                                                                                 : "applies, VIOLATED")
                                   : "hypothesis fails (t_1 + ... + t_s = 0)") +
         (prof.sum_zero ? " (bound " + to_string(b.dm) + ")" : "") + "\n";
  out += bound_lines(classical_bounds(prof, config.dimension(), config.size()));
  return out;
}

json profile_json(const PointConfiguration& config, const InnerProductProfile& prof) {
  json values = json::array();
  for (std::size_t k = 0; k < prof.s; ++k) values.push_back(value_text(prof, k));
  return {{"points", config.size()},
          {"dimension", config.dimension()},
          {"mode", config.is_exact() ? "exact" : "float"},
          {"tolerance", config.tolerance()},
          {"s", prof.s},
          {"values", values},
          {"multiplicities", prof.multiplicities},
          {"distances", prof.distances},
          {"sum", sum_text(prof)},
          {"sum_zero", prof.sum_zero},
          {"symmetric_pm", prof.symmetric_pm},
          {"bounds", bound_checks_json(classical_bounds(prof, config.dimension(), config.size()))}};
}

std::string certificate_text(const Certificate& cert, const CheckReport& r) {
  std::string out;
  out += "certificate: " + std::to_string(r.m) + " points in dimension " + std::to_string(r.n) + ", " +
         mode_text(cert.config) + "\n";
  out += "inner products:";
  for (std::size_t k = 0; k < cert.profile.s; ++k) out += " " + value_text(cert.profile, k);
  out += "\ns: " + std::to_string(r.s) + "\n";
  out += "sum: " + sum_text(cert.profile) + (r.sum_zero ? " (zero)" : " (nonzero)") + "\n";
  out += "c: " +
         (cert.is_exact() ? to_string(cert.exact_rows().c) : format_double(cert.float_rows().c)) + "\n";
  out += "basis: " + std::to_string(cert.basis.size()) + " monomials of degree <= " + std::to_string(r.s) + "\n";
  out += std::string("delta: ") + pass(r.delta);
  if (!r.exact) out += " (max error " + format_double(r.delta_max_error) + ")";
  out += "\n";
  if (r.degree_gap) {
    out += std::string("degree_gap: ") + pass(*r.degree_gap);
    if (!r.exact) out += " (max residual " + format_double(r.degree_gap_max_residual) + ")";
    out += "\n";
  } else {
    out += "degree_gap: not applicable\n";
  }
  out += "rank: " + std::to_string(r.rank) + " of " + std::to_string(r.m) + "\n";
  out += std::string("independent: ") + pass(r.independent) + "\n";
  if (r.dimension_inequality)
    out += std::string("dimension_count: ") + pass(*r.dimension_inequality) + "\n";
  else
    out += "dimension_count: not applicable\n";
  out += theorem_line(r) + "\n";
  out += "other bounds:\n" + bound_lines(r.other_bounds);
  out += std::string("result: ") + (r.all_passed() ? "pass" : "FAIL") + "\n";
  return out;
}

json certificate_json(const Certificate& cert, const CheckReport& r) {
  auto optional_bool = [](const std::optional<bool>& b) -> json { return b ? json(*b) : json(nullptr); };
  json values = json::array();
  for (std::size_t k = 0; k < cert.profile.s; ++k) values.push_back(value_text(cert.profile, k));
  return {{"n", r.n},
          {"s", r.s},
          {"m", r.m},
          {"mode", r.exact ? "exact" : "float"},
          {"values", values},
          {"sum", sum_text(cert.profile)},
          {"sum_zero", r.sum_zero},
          {"c", cert.is_exact() ? to_string(cert.exact_rows().c) : format_double(cert.float_rows().c)},
          {"basis_size", cert.basis.size()},
          {"delta", r.delta},
          {"delta_max_error", r.delta_max_error},
          {"degree_gap", optional_bool(r.degree_gap)},
          {"degree_gap_max_residual", r.degree_gap_max_residual},
          {"rank", r.rank},
          {"independent", r.independent},
          {"dimension_count", optional_bool(r.dimension_inequality)},
          {"dm", to_string(r.dm)},
          {"bound", to_string(r.theorem_bound)},
          {"severe", r.severe},
          {"other_bounds", bound_checks_json(r.other_bounds)},
          {"passed", r.all_passed()}};
}

std::string search_text(const SearchResult& r) {
  std::string out;
  out += "search: n=" + std::to_string(r.best.dimension()) + " s=" + std::to_string(r.s) +
         " m=" + std::to_string(r.m) + " seed=" + std::to_string(r.seed) + "\n";
  out += "targets:";
  for (double t : r.targets) out += " " + format_double(t);
  out += "\npenalty: " + format_double(r.penalty) + (r.reached ? " (reached)" : " (not reached)") + "\n";
  out += "achieved_s: " + (r.achieved_s ? std::to_string(*r.achieved_s) : std::string("ambiguous")) + "\n";
  out += "target_bound: " + to_string(r.target_bound) + "\n";
  if (r.exceeds_bound) out += "note: m exceeds the sum-zero bound; success is impossible, result is best effort\n";
  out += "best_restart: " + std::to_string(r.best_restart) + " of " + std::to_string(r.restarts_used) + "\n";
  out += "iterations: " + std::to_string(r.iterations) + "\n";
  out += "empirical result only\n";
  return out;
}

}  // namespace sdist::report
