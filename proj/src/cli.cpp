#include "agcolor/cli.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "agcolor/bounds.hpp"
#include "agcolor/coloring.hpp"
#include "agcolor/oracle.hpp"
#include "agcolor/structures.hpp"
#include "agcolor/verify.hpp"
#include "construction_util.hpp"

#ifndef AGCOLOR_VERSION
#define AGCOLOR_VERSION "0.0.0"
#endif

namespace agcolor::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::uint64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string part;
  auto number = [&](const std::string& s) -> std::uint64_t {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw UsageError(std::string("bad ") + what + " list entry '" + s + "'");
    return v;
  };
  while (std::getline(ss, part, ',')) {
    if (auto dots = part.find(".."); dots != std::string::npos) {
      const auto lo = number(part.substr(0, dots)), hi = number(part.substr(dots + 2));
      if (lo > hi) throw UsageError(std::string("empty ") + what + " range '" + part + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(number(part));
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what + " list");
  return out;
}

Json big_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

Json opt_json(const std::optional<BigInt>& x) { return x ? big_json(*x) : Json(nullptr); }

Json row_json(const BoundsRow& r) {
  Json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["v"] = big_json(r.v);
  j["lines"] = big_json(r.lines);
  j["chromatic"] = big_json(r.chromatic);
  j["psi_lower"] = opt_json(r.psi_lower);
  j["alpha_lower"] = opt_json(r.alpha_lower);
  j["psi_upper_exact"] = big_json(r.psi_upper_exact);
  j["psi_upper_simplified"] = big_json(r.psi_upper_simplified);
  j["plane_exact_psi"] = opt_json(r.plane_exact_psi);
  j["plane_exact_alpha"] = opt_json(r.plane_exact_alpha);
  if (r.psi_lower) {
    // Six decimals by integer division, so the table stays bit-exact.
    const BigInt scaled = *r.psi_lower * 1000000 / r.psi_upper_exact;
    std::string digits = scaled.str();
    if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
    j["psi_lower_over_upper"] = digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  }
  j["consistent"] = r.consistent();
  return j;
}

Json spread_json(const Spread& s, const Field& f) {
  Json j;
  j["structure"] = "spread";
  j["field"] = field_to_json(f);
  j["k"] = s.k;
  j["ambient_dimension"] = s.ambient.dimension();
  Json members = Json::array();
  for (const auto& m : s.members) members.push_back(detail::subspace_json(m));
  j["members"] = std::move(members);
  return j;
}

Json good_partition_json(const GoodPartition& g, const Field& f) {
  Json j;
  j["structure"] = "good-partition";
  j["field"] = field_to_json(f);
  j["k"] = g.k;
  j["ambient_dimension"] = g.ambient.dimension();
  j["Q"] = detail::vec_json(g.ambient.point(g.q_point));
  auto side = [&](const std::vector<PointId>& pts) {
    Json out = Json::array();
    for (auto p : pts)
      out.push_back({{"point", detail::vec_json(g.ambient.point(p))}, {"subspace", detail::subspace_json(g.assigned[p])}});
    return out;
  };
  j["A"] = side(g.a);
  j["B"] = side(g.b);
  return j;
}

Json difference_set_json(const DifferenceSet& d, const Field& f) {
  Json j;
  j["structure"] = "difference-set";
  j["field"] = field_to_json(f);
  j["v"] = d.v;
  j["d"] = d.d;
  j["multiplier"] = d.multiplier;
  j["translation"] = d.translation;
  Json pts = Json::array();
  for (const auto& p : d.points) pts.push_back(detail::vec_json(p));
  j["points"] = std::move(pts);
  return j;
}

class Session {
 public:
  Session(std::vector<std::string> args, std::ostream& out) : args_(std::move(args)), out_(out) {}

  void emit(const std::string& command, const std::string& text, const std::string& path, const Json& field) {
    if (path.empty()) {
      out_ << text;
      return;
    }
    write(path, text);
    Json manifest;
    manifest["command"] = command;
    manifest["arguments"] = args_;
    manifest["field"] = field;
    manifest["version"] = AGCOLOR_VERSION;
    manifest["outputs"] = Json::array({{{"path", path}, {"sha256", sha256_hex(text)}}});
    write(path + ".manifest.json", manifest.dump(2) + "\n");
  }

 private:
  static void write(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
  }

  std::vector<std::string> args_;
  std::ostream& out_;
};

Field field_for(std::uint64_t q) {
  if (q > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("q is too large");
  return field_of_order(static_cast<std::uint32_t>(q));
}

double default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kBudgetEnv) + " must be a positive number of seconds");
  }
  return 60.0;
}

std::string describe_witnesses(const VerificationReport& r, const Coloring& c) {
  std::string out;
  const auto& space = *c.space;
  if (!r.partition.ok)
    out += "partition: " + std::to_string(r.partition.missing.size()) + " missing, " +
           std::to_string(r.partition.duplicated.size()) + " duplicated, " +
           std::to_string(r.partition.empty_classes.size()) + " empty classes\n";
  if (r.proper.witness) {
    const auto& w = *r.proper.witness;
    out += "not proper: class " + c.classes[w.class_index].id + " has " + space.line_key(w.first) + " and " +
           space.line_key(w.second) + " meeting\n";
  }
  if (r.complete.witness)
    out += "not complete: classes " + c.classes[r.complete.witness->first].id + " and " +
           c.classes[r.complete.witness->second].id + " share no point\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line colorings of finite affine spaces AG(n,q)", "agcolor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", AGCOLOR_VERSION);

  int n = 0;
  std::uint64_t q = 0;
  std::string method, out_path, format = "json", checks = "partition,complete", index, input, n_list = "2..6", q_list,
                      kind;
  double budget = 0;
  int k = 0;

  auto* construct = app.add_subcommand("construct", "Build a coloring with one of the constructions");
  construct->add_option("--n", n, "Dimension")->required();
  construct->add_option("--q", q, "Field order (a prime power)")->required();
  construct->add_option("--method", method, "Construction method")
      ->required()
      ->check(CLI::IsMember({"chromatic", "plane-achromatic", "plane-pseudo", "even-pseudo", "odd-pseudo",
                             "even-achromatic", "ag3-achromatic"}));
  construct->add_option("--out", out_path, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file");
  verify_cmd->add_option("file", input, "Coloring JSON")->required();
  verify_cmd->add_option("--check", checks, "Comma list of partition, proper, complete")
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path, "Report file (default: stdout)");

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds for one space");
  bounds_cmd->add_option("--n", n, "Dimension")->required();
  bounds_cmd->add_option("--q", q, "Field order")->required();
  bounds_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bounds_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* table_cmd = app.add_subcommand("table", "Bounds for a grid of spaces");
  table_cmd->add_option("--n", n_list, "Dimensions, e.g. 2..6 or 2,4")->capture_default_str();
  table_cmd->add_option("--q", q_list, "Field orders, e.g. 2,3")->required();
  table_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact index by exhaustive search (tiny inputs only)");
  auto* on = oracle_cmd->add_option("--n", n, "Dimension");
  auto* oq = oracle_cmd->add_option("--q", q, "Field order");
  auto* oi = oracle_cmd->add_option("--input", input, "JSON list of point-id lists");
  on->needs(oq);
  oq->needs(on);
  oi->excludes(on)->excludes(oq);
  oracle_cmd->add_option("--index", index, "chi, alpha or psi")
      ->required()
      ->check(CLI::IsMember({"chi", "alpha", "psi"}));
  oracle_cmd->add_option("--budget", budget, "Seconds before reporting an interval")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  auto* structure_cmd = app.add_subcommand("structure", "Dump a spread, good partition or difference set");
  structure_cmd->add_option("--kind", kind, "spread, good-partition or difference-set")
      ->required()
      ->check(CLI::IsMember({"spread", "good-partition", "difference-set"}));
  structure_cmd->add_option("--k", k, "Parameter k (spread of PG(2k-1,q), partition of PG(2k,q))");
  structure_cmd->add_option("--q", q, "Field order")->required();
  structure_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  std::vector<const char*> argv{"agcolor"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Session session(args, out);
  try {
    if (*construct) {
      const Method m = parse_method(method);
      if (auto why = method_constraint_violation(m, n); !why.empty()) throw UsageError(why);
      const Field f = field_for(q);
      const Coloring c = agcolor::construct(m, n, f);
      session.emit("construct", coloring_to_json(c).dump(2) + "\n", out_path, field_to_json(f));
      return kOk;
    }

    if (*verify_cmd) {
      bool want_partition = false, want_proper = false, want_complete = false;
      std::stringstream ss(checks);
      for (std::string c; std::getline(ss, c, ',');) {
        if (c == "partition") want_partition = true;
        else if (c == "proper") want_proper = true;
        else if (c == "complete") want_complete = true;
        else throw UsageError("unknown check '" + c + "' (expected partition, proper, complete)");
      }
      const Coloring c = coloring_from_json(parse_json_file(input));
      const auto report = agcolor::verify(c);
      bool passed = true;
      Json requested = Json::object();
      if (want_partition) passed &= (requested["partition"] = report.partition.ok).get<bool>();
      if (want_proper) passed &= (requested["proper"] = report.proper.proper).get<bool>();
      if (want_complete) passed &= (requested["complete"] = report.complete.complete).get<bool>();
      Json j = report_to_json(report, c);
      j["requested"] = std::move(requested);
      j["passed"] = passed;
      session.emit("verify", j.dump(2) + "\n", out_path, field_to_json(c.space->field()));
      if (!passed) err << describe_witnesses(report, c);
      return passed ? kOk : kCheckFailed;
    }

    if (*bounds_cmd) {
      const Field f = field_for(q);
      const auto row = bounds_row(n, q);
      const std::string text =
          format == "csv" ? bounds_csv_header() + "\n" + bounds_csv_line(row) + "\n" : row_json(row).dump(2) + "\n";
      session.emit("bounds", text, out_path, field_to_json(f));
      return kOk;
    }

    if (*table_cmd) {
      std::vector<int> ns;
      for (auto v : parse_list(n_list, "n")) ns.push_back(static_cast<int>(std::min<std::uint64_t>(v, 1u << 20)));
      const auto rows = bounds_table(ns, parse_list(q_list, "q"));
      std::string text;
      if (table_cmd->count("--format") == 0 || format == "csv") {
        text = bounds_csv_header() + "\n";
        for (const auto& r : rows) text += bounds_csv_line(r) + "\n";
      } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(row_json(r));
        text = arr.dump(2) + "\n";
      }
      session.emit("table", text, out_path, nullptr);
      return kOk;
    }

    if (*oracle_cmd) {
      if (input.empty() && oracle_cmd->count("--n") == 0) throw UsageError("oracle needs --n/--q or --input");
      OracleOptions opt;
      opt.budget_seconds = oracle_cmd->count("--budget") ? budget : default_budget();
      Json field = nullptr, source;
      std::optional<IntersectionGraph> graph;
      if (!input.empty()) {
        graph.emplace(graph_from_json(parse_json_file(input)));
        source = {{"input", input}};
      } else {
        const Field f = field_for(q);
        graph.emplace(IntersectionGraph::of_space(AffineSpace(f, n)));
        field = field_to_json(f);
        source = {{"kind", "affine"}, {"n", n}, {"field", field}};
      }
      const auto r = run_oracle(parse_index(index), *graph, opt);
      Json j;
      j["source"] = std::move(source);
      j["lines"] = graph->size();
      j.update(oracle_result_to_json(r));
      session.emit("oracle", j.dump(2) + "\n", out_path, field);
      if (!r.exact) {
        err << "budget exhausted: " << index << " lies in [" << r.lower << ", " << r.upper << "]\n";
        return kBudgetExceeded;
      }
      return kOk;
    }

    if (*structure_cmd) {
      const Field f = field_for(q);
      Json j;
      if (kind == "difference-set") {
        j = difference_set_json(singer_difference_set(f), f);
      } else {
        if (structure_cmd->count("--k") == 0) throw UsageError(kind + " needs --k");
        j = kind == "spread" ? spread_json(build_spread(k, f), f) : good_partition_json(build_good_partition(k, f), f);
      }
      session.emit("structure", j.dump(2) + "\n", out_path, field_to_json(f));
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace agcolor::cli
