#include "arrfiber/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "arrfiber/arrangement.hpp"
#include "arrfiber/errors.hpp"
#include "arrfiber/report.hpp"
#include "arrfiber/resolution.hpp"
#include "arrfiber/verify.hpp"

namespace arrfiber {

namespace {

using nlohmann::json;

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorKind::BadParameter, std::string(what) + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::BadParameter, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct InvariantsArgs {
  std::string input;
  bool profile = false;
  std::string catalog;
  std::optional<std::int64_t> d, m, n, q;
  std::vector<std::string> t;
  std::string format = "table";
};

int cmd_invariants(const InvariantsArgs& args, std::ostream& out, std::ostream& err) {
  const int sources = int(!args.input.empty()) + int(args.profile) + int(!args.catalog.empty());
  if (sources != 1) {
    err << "error: usage: give exactly one of --input FILE, --profile, --catalog NAME\n";
    return kExitUsage;
  }

  std::optional<ReportInput> input;
  if (!args.input.empty()) {
    const Profile p = profile_of(parse_arrangement(read_file(args.input)));
    input = ReportInput{"file:" + args.input, p, args.q};
  } else if (args.profile) {
    if (!args.d) {
      err << "error: usage: --profile needs --d\n";
      return kExitUsage;
    }
    Profile::Counts t;
    for (const auto& item : args.t) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorKind::BadParameter, "--t expects r=count, got '" + item + "'");
      t[parse_int(std::string_view(item).substr(0, eq), "--t multiplicity")] +=
          parse_int(std::string_view(item).substr(eq + 1), "--t count");
    }
    input = ReportInput{"profile", validate_profile(*args.d, t), args.q};
  } else {
    const int params = int(args.m.has_value()) + int(args.n.has_value()) + int(args.d.has_value());
    if (params > 1) {
      err << "error: usage: give at most one of --m, --n, --d with --catalog\n";
      return kExitUsage;
    }
    const std::optional<std::int64_t> param = args.m ? args.m : args.n ? args.n : args.d;
    CatalogEntry entry = param ? catalog_profile(args.catalog, param) : catalog_lookup(args.catalog);
    std::optional<std::int64_t> q = entry.q;
    if (args.q) {
      if (entry.q) err << "warning: --q " << *args.q << " overrides catalog q=" << *entry.q << "\n";
      q = args.q;
    }
    input = ReportInput{"catalog:" + entry.name, entry.profile, q};
  }

  const json report = invariants_report(*input);
  if (args.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << invariants_table(report);
  }
  return kExitOk;
}

int cmd_graph(std::int64_t r, std::int64_t d, const std::string& dot_path, bool as_json, std::ostream& out) {
  const ResolutionGraph graph = build_resolution_graph(r, d);
  const bool definite = check_negative_definite(intersection_matrix(graph));
  if (as_json) {
    json report = graph_report(graph);
    report["negative_definite"] = definite;
    out << report.dump(2) << "\n";
  } else {
    out << "r=" << r << " d=" << d << "\n";
    out << "shape         " << shape_name(graph.shape()) << "\n";
    if (graph.has_central()) {
      out << "central       b=" << graph.central_weight() << " genus=" << graph.central_genus() << "\n";
    }
    out << "arms          " << graph.arm_count() << "\n";
    out << "lambda        " << graph.lambda() << "\n";
    out << "arm weights   [";
    for (std::size_t i = 0; i < graph.arm_weights().size(); ++i) out << (i ? ", " : "") << graph.arm_weights()[i];
    out << "]\n";
    out << "vertices      " << graph.vertex_count() << "\n";
    out << "neg. definite " << (definite ? "yes" : "no") << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) fail(ErrorKind::BadParameter, "cannot write '" + dot_path + "'");
    dot << to_dot(graph);
  }
  return kExitOk;
}

int cmd_verify(std::int64_t r_max, std::int64_t d_max, bool as_json, std::ostream& out) {
  const auto reports = sweep_verify(r_max, d_max);
  const bool ok = all_match(reports);
  if (as_json) {
    json records = json::array();
    for (const auto& rep : reports) records.push_back(oracle_report_json(rep));
    out << json{{"all_match", ok}, {"pairs", reports.size()}, {"reports", records}}.dump(2) << "\n";
  } else {
    std::size_t mismatches = 0;
    for (const auto& rep : reports) {
      if (rep.matches()) continue;
      if (mismatches++ == 0) out << "   r    d  coeffs  DCI(oracle/closed)  DCII(oracle/closed)\n";
      out << "  " << rep.r << "  " << rep.d << "  " << (rep.coefficients_match ? "ok" : "DIFF") << "  "
          << rep.oracle_dci.get_str() << "/" << rep.closed_dci.get_str() << "  " << rep.oracle_dcii.get_str() << "/"
          << rep.closed_dcii.get_str() << "\n";
    }
    out << "checked " << reports.size() << " pairs (r <= " << r_max << ", d <= " << d_max << "): "
        << (ok ? "all match" : std::to_string(mismatches) + " mismatches") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_catalog(bool as_json, std::ostream& out) {
  if (as_json) {
    json entries = json::array();
    for (const auto& info : catalog_listing()) {
      entries.push_back({{"name", info.name}, {"parameter", info.parameter}, {"description", info.description}});
    }
    out << entries.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& info : catalog_listing()) {
    std::string head = info.name + (info.parameter.empty() ? "" : " (" + info.parameter + ")");
    head.resize(std::max<std::size_t>(head.size() + 2, 22), ' ');
    out << head << info.description << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of surfaces attached to complex line arrangements", "arrfiber"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  InvariantsArgs inv;
  auto* invariants = app.add_subcommand("invariants", "Chern numbers, verdicts and Hodge numbers of an arrangement");
  invariants->add_option("--input", inv.input, "line-list file");
  invariants->add_flag("--profile", inv.profile, "read the profile from --d and --t");
  invariants->add_option("--catalog", inv.catalog, "catalog entry, e.g. hesse or ceva(3)");
  invariants->add_option("--d", inv.d, "line count (profile) or catalog parameter");
  invariants->add_option("--m", inv.m, "catalog parameter m");
  invariants->add_option("--n", inv.n, "catalog parameter n");
  invariants->add_option("--t", inv.t, "multiplicity count r=k (repeatable)");
  invariants->add_option("--q", inv.q, "irregularity, enables the Hodge diamond");
  invariants->add_option("--format", inv.format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::int64_t r = 0, d = 0;
  std::string dot_path;
  bool graph_json = false;
  auto* graph = app.add_subcommand("graph", "Minimal resolution graph of G_r + t^d");
  graph->add_option("--r", r, "multiplicity")->required();
  graph->add_option("--d", d, "line count")->required();
  graph->add_option("--dot", dot_path, "write Graphviz to FILE");
  graph->add_flag("--json", graph_json);

  auto* local = app.add_subcommand("local", "Local invariants and canonical coefficients as JSON");
  local->add_option("--r", r, "multiplicity")->required();
  local->add_option("--d", d, "line count")->required();

  std::int64_t r_max = 0, d_max = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the intersection-matrix oracle");
  verify->add_option("--r-max", r_max)->required();
  verify->add_option("--d-max", d_max)->required();
  verify->add_flag("--json", verify_json);

  bool catalog_json = false;
  auto* catalog = app.add_subcommand("catalog", "List catalog entries");
  catalog->add_flag("--json", catalog_json);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("arrfiber");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*invariants) return cmd_invariants(inv, out, err);
    if (*graph) return cmd_graph(r, d, dot_path, graph_json, out);
    if (*local) {
      out << local_report(r, d).dump(2) << "\n";
      return kExitOk;
    }
    if (*verify) {
      if (r_max < 2 || d_max < r_max) {
        err << "error: BadParameter: need --r-max >= 2 and --d-max >= --r-max\n";
        return kExitUsage;
      }
      return cmd_verify(r_max, d_max, verify_json, out);
    }
    if (*catalog) return cmd_catalog(catalog_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace arrfiber
