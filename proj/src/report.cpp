#include "arrfiber/report.hpp"

#include <sstream>

#include "arrfiber/surface.hpp"

namespace arrfiber {

namespace {

using nlohmann::json;

const mpz_class& json_safe_limit() {
  static const mpz_class limit = mpz_class(1) << 53;
  return limit;
}

std::string render(const json& value) { return value.is_string() ? value.get<std::string>() : value.dump(); }

}  // namespace

json integer_json(const mpz_class& value) {
  if (abs(value) <= json_safe_limit()) return json(value.get_si());
  return json(value.get_str());
}

json rational_json(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  return json(v.get_str());
}

json invariants_report(const ReportInput& input) {
  const Profile& p = input.profile;
  const GlobalInvariants inv = global_invariants(p);
  const Verdict v = verdict(p);

  json t = json::object();
  for (const auto& [r, count] : p.counts()) t[std::to_string(r)] = count;

  json report;
  report["input"] = {{"source", input.source},
                     {"d", p.d()},
                     {"t", t},
                     {"q", input.q ? json(*input.q) : json(nullptr)}};
  report["k2_bar"] = integer_json(inv.k2_bar);
  report["chi_bar"] = integer_json(inv.chi_bar);
  report["my_bar"] = integer_json(inv.my_bar);
  report["c1_sq"] = integer_json(inv.c1sq);
  report["c2"] = integer_json(inv.c2);
  report["my_tilde"] = integer_json(inv.my_tilde);
  report["chern_ratio"] = inv.chern_ratio ? rational_json(*inv.chern_ratio) : json(nullptr);
  if (inv.chern_ratio) {
    const ChernRatioAnalysis analysis = chern_ratio_analysis(p);
    if (analysis.nodes_triples_form) {
      report["nodes_triples_form"] = {{"numer", integer_json(analysis.nodes_triples_form->numer)},
                                      {"denom", integer_json(analysis.nodes_triples_form->denom)}};
    }
  }

  json local = json::array();
  for (const auto& term : local_table(p)) {
    local.push_back({{"r", term.r},
                     {"t_r", term.count},
                     {"dci", integer_json(term.local.dci)},
                     {"dcii", integer_json(term.local.dcii)},
                     {"dmy", integer_json(term.local.dmy)},
                     {"e", integer_json(term.local.e)}});
  }
  report["local"] = local;

  report["verdict"] = {{"pencil", v.pencil},
                       {"my_sign", v.my_sign},
                       {"ball_quotient_possible", v.ball_quotient_possible},
                       {"general_type", std::string(general_type_name(v.general_type))},
                       {"reason", v.reason}};

  const HirzebruchDiagnostic h = hirzebruch_diagnostic(p);
  report["hirzebruch"] = {{"applicable", h.applicable}};
  if (h.applicable) {
    report["hirzebruch"]["lhs"] = rational_json(h.lhs);
    report["hirzebruch"]["rhs"] = rational_json(h.rhs);
    report["hirzebruch"]["holds"] = h.holds;
  }

  if (input.q) {
    const HodgeDiamond hd = hodge_diamond(p, *input.q);
    json diamond = json::array();
    for (int level = 0; level <= 4; ++level) {
      json row = json::array();
      for (int pp = std::max(0, level - 2); pp <= std::min(2, level); ++pp) row.push_back(integer_json(hd.h(pp, level - pp)));
      diamond.push_back(row);
    }
    report["hodge"] = {{"q", integer_json(hd.q)}, {"pg", integer_json(hd.pg)}, {"h11", integer_json(hd.h11)},
                       {"diamond", diamond}};
  }
  report["version"] = std::string(kVersion);
  return report;
}

std::string invariants_table(const json& report) {
  std::ostringstream out;
  const json& in = report.at("input");
  out << "source        " << in.at("source").get<std::string>() << "\n";
  out << "d             " << in.at("d").dump() << "\n";
  out << "profile       ";
  bool first = true;
  for (const auto& [r, count] : in.at("t").items()) {
    out << (first ? "" : ", ") << "t_" << r << "=" << count.dump();
    first = false;
  }
  out << "\n\n";
  out << "K_bar^2       " << render(report.at("k2_bar")) << "\n";
  out << "chi_bar       " << render(report.at("chi_bar")) << "\n";
  out << "MY_bar        " << render(report.at("my_bar")) << "\n";
  out << "c1^2          " << render(report.at("c1_sq")) << "\n";
  out << "c2            " << render(report.at("c2")) << "\n";
  out << "MY            " << render(report.at("my_tilde")) << "\n";
  out << "c1^2/c2       " << (report.at("chern_ratio").is_null() ? "undefined" : render(report.at("chern_ratio")))
      << "\n\n";

  out << "   r        t_r          DCI         DCII          DMY            E\n";
  for (const auto& row : report.at("local")) {
    out.width(4);
    out << row.at("r").dump();
    for (const char* key : {"t_r", "dci", "dcii", "dmy", "e"}) {
      out << " ";
      out.width(12);
      out << render(row.at(key));
    }
    out << "\n";
  }
  out << "\n";

  const json& v = report.at("verdict");
  out << "pencil        " << (v.at("pencil").get<bool>() ? "yes" : "no") << "\n";
  out << "MY sign       " << v.at("my_sign").dump() << "\n";
  out << "ball quotient " << (v.at("ball_quotient_possible").get<bool>() ? "possible" : "no") << "\n";
  out << "general type  " << v.at("general_type").get<std::string>() << " (" << v.at("reason").get<std::string>()
      << ")\n";

  if (report.contains("hodge")) {
    const json& h = report.at("hodge");
    out << "\nHodge diamond (q=" << render(h.at("q")) << ", pg=" << render(h.at("pg")) << ", h11=" << render(h.at("h11"))
        << ")\n";
    for (const auto& row : h.at("diamond")) {
      out << std::string(2 * (3 - row.size()), ' ');
      for (const auto& x : row) {
        out.width(6);
        out << render(x);
      }
      out << "\n";
    }
  } else {
    out << "\nHodge diamond requires q (pass --q)\n";
  }
  return out.str();
}

json local_report(std::int64_t r, std::int64_t d) {
  const LocalInvariants inv = local_invariants(r, d);
  const CanonicalCoefficients coeffs = canonical_coefficients(r, d);
  return {{"r", r},
          {"d", d},
          {"shape", std::string(shape_name(coeffs.shape))},
          {"dci", integer_json(inv.dci)},
          {"dcii", integer_json(inv.dcii)},
          {"dmy", integer_json(inv.dmy)},
          {"e", integer_json(inv.e)},
          {"coefficients", coeffs.a}};
}

json graph_report(const ResolutionGraph& graph) {
  json out = {{"r", graph.r()},
              {"d", graph.d()},
              {"shape", std::string(shape_name(graph.shape()))},
              {"lambda", graph.lambda()},
              {"arms", graph.arm_count()},
              {"arm_weights", graph.arm_weights()},
              {"vertices", graph.vertex_count()},
              {"minimal", graph.minimal()}};
  if (graph.has_central()) {
    out["central"] = {{"weight", graph.central_weight()}, {"genus", graph.central_genus()}};
  }
  return out;
}

json oracle_report_json(const OracleReport& report) {
  return {{"r", report.r},
          {"d", report.d},
          {"coefficients_match", report.coefficients_match},
          {"dci_match", report.dci_match},
          {"dcii_match", report.dcii_match},
          {"oracle_dci", integer_json(report.oracle_dci)},
          {"oracle_dcii", integer_json(report.oracle_dcii)},
          {"closed_dci", integer_json(report.closed_dci)},
          {"closed_dcii", integer_json(report.closed_dcii)}};
}

}  // namespace arrfiber
