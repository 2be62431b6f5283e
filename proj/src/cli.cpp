#include "catbase/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "catbase/axioms.hpp"
#include "catbase/classify.hpp"
#include "catbase/document.hpp"
#include "catbase/doperator.hpp"
#include "catbase/equiv.hpp"
#include "catbase/search.hpp"
#include "catbase/topology.hpp"
#include "json.hpp"
#include "json_format.hpp"

namespace catbase::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input = "-";
  std::string op;
  std::string set;
  bool paranoid = false;
  bool text = false;
  bool all_witnesses = false;
  std::uint64_t budget = kDefaultFamilyBudget;
  // sweep
  int n = kDefaultSearchPoints;
  bool exhaustive = false;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  bool canonical = false;
  unsigned operators = 0;
  unsigned workers = 1;
  bool hunt = false;
  bool large = false;
  bool timing = false;
  std::size_t max_listed = 50;
};

json set_json(const PointSet& s) { return json(s.elements()); }

template <typename Range>
json sets_json(const Range& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

json violation_json(const AxiomViolation& v) {
  json out = {{"kind", std::string(to_string(v.kind))}};
  if (v.witness_region) out["region"] = set_json(*v.witness_region);
  if (v.witness_family) out["family"] = sets_json(*v.witness_family);
  if (v.witness_point) out["point"] = *v.witness_point;
  return out;
}

json operator_violation_json(const OperatorViolation& v) {
  json out = {{"kind", std::string(to_string(v.kind))}, {"set", set_json(v.s)}};
  if (v.t) out["with"] = set_json(*v.t);
  return out;
}

// "key: value" lines with keys padded per object, arrays inline.
void write_text(const json& value, std::string& out, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  std::size_t width = 0;
  for (auto it = value.begin(); it != value.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = value.begin(); it != value.end(); ++it) {
    const auto& v = it.value();
    std::string key = it.key() + ":";
    key.resize(width + 2, ' ');
    if (v.is_object()) {
      out += indent + it.key() + ":\n";
      write_text(v, out, depth + 1);
    } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_object(); })) {
      out += indent + it.key() + ":\n";
      std::size_t i = 0;
      for (const auto& e : v) {
        out += indent + "  - #" + std::to_string(i++) + "\n";
        if (e.is_object()) {
          write_text(e, out, depth + 2);
        } else {
          out += indent + "    " + e.dump() + "\n";
        }
      }
    } else if (v.is_string()) {
      out += indent + key + v.get<std::string>() + "\n";
    } else {
      out += indent + key + v.dump() + "\n";
    }
  }
}

std::string render(const json& report, const Options& opts) {
  if (!opts.text) return detail::pretty_json(report);
  std::string out;
  write_text(report, out, 0);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(const Options& opts, const std::function<std::string()>& read_stdin) : opts_(opts), read_stdin_(read_stdin) {}

  RunResult dispatch(const std::string& command) {
    if (command == "validate") return validate();
    if (command == "classify") return classify();
    if (command == "topology") return topology();
    if (command == "equiv") return equiv();
    if (command == "sweep") return run_sweep();
    if (command == "witness") return witness();
    throw InputError("unknown command \"" + command + "\"");
  }

 private:
  InputDocument load() {
    const std::string text = opts_.input == "-" ? read_stdin_() : read_file(opts_.input);
    return parse_input(text);
  }

  RunResult emit(const json& report, int code) { return {code, render(report, opts_), {}}; }

  // Returns the validated base, or fills `failure` with the violation report.
  std::optional<CategoryBase> base_of(const InputDocument& doc, const std::string& command,
                                      std::optional<RunResult>& failure) {
    auto result = validate_base(doc.n, std::span<const PointSet>(doc.regions), {opts_.budget, true});
    if (result.valid()) return std::move(*result.base);
    json report = {{"command", command}, {"n", doc.n}, {"valid", false}};
    json list = json::array();
    for (const auto& v : result.violations) list.push_back(violation_json(v));
    report["violations"] = std::move(list);
    failure = emit(report, kExitCheckFailed);
    return std::nullopt;
  }

  // --operator beats the document's table; the cluster operator is the default.
  std::pair<OperatorTable, std::string> operator_for(const CategoryBase& base, const InputDocument& doc) {
    if (opts_.op == "cluster") return {cluster_operator(base), "cluster"};
    if (!opts_.op.empty()) return {parse_operator(base.n(), read_file(opts_.op)), opts_.op};
    if (doc.op) return {*doc.op, "document"};
    return {cluster_operator(base), "cluster"};
  }

  std::optional<RunResult> reject_operator(const CategoryBase& base, const OperatorTable& d,
                                           const std::string& source, const std::string& command) {
    const auto violations = validate_operator(base, d, opts_.paranoid);
    if (violations.empty()) return std::nullopt;
    json list = json::array();
    for (const auto& v : violations) list.push_back(operator_violation_json(v));
    json report = {{"command", command},
                   {"operator", source},
                   {"operator_valid", false},
                   {"operator_violations", std::move(list)}};
    return emit(report, kExitCheckFailed);
  }

  RunResult validate() {
    const auto doc = load();
    auto result = validate_base(doc.n, std::span<const PointSet>(doc.regions), {opts_.budget, true});
    json report = {{"command", "validate"}, {"n", doc.n}, {"valid", result.valid()}};
    json list = json::array();
    for (const auto& v : result.violations) list.push_back(violation_json(v));
    report["violations"] = std::move(list);
    bool ok = result.valid();
    if (result.valid()) report["degenerate"] = result.base->degenerate();
    if (doc.topology) {
      auto t = validate_topology(doc.n, SetFamily(doc.n, *doc.topology));
      json tj = {{"valid", t.valid()}};
      if (t.violation) {
        tj["kind"] = std::string(to_string(t.violation->kind));
        if (t.violation->first) tj["first"] = set_json(*t.violation->first);
        if (t.violation->second) tj["second"] = set_json(*t.violation->second);
      }
      report["topology"] = std::move(tj);
      ok = ok && t.valid();
    }
    return emit(report, ok ? kExitOk : kExitCheckFailed);
  }

  RunResult classify() {
    const auto doc = load();
    std::optional<RunResult> failure;
    auto base = base_of(doc, "classify", failure);
    if (!base) return *failure;
    const auto classes = classify_all(*base);
    json sets = json::array();
    for (const auto s : power_set_iter(base->n())) {
      sets.push_back({{"set", set_json(s)},
                      {"singular", classes.singular(s)},
                      {"meager", classes.meager(s)},
                      {"baire", classes.baire(s)}});
    }
    json report = {{"command", "classify"},
                   {"n", base->n()},
                   {"valid", true},
                   {"degenerate", base->degenerate()},
                   {"singular_points", set_json(PointSet(base->n(), classes.singular_points()))},
                   {"meager_class", sets_json(classes.meager_class())},
                   {"baire_class", sets_json(classes.baire_class())},
                   {"sets", std::move(sets)}};
    return emit(report, kExitOk);
  }

  RunResult topology() {
    const auto doc = load();
    std::optional<RunResult> failure;
    auto base = base_of(doc, "topology", failure);
    if (!base) return *failure;
    auto [d, source] = operator_for(*base, doc);
    if (auto rejected = reject_operator(*base, d, source, "topology")) return *rejected;
    const auto t = d_topology(*base, d);
    json report = {{"command", "topology"}, {"operator", source}, {"opens", sets_json(t.opens())}};
    return emit(report, kExitOk);
  }

  RunResult equiv() {
    const auto doc = load();
    std::optional<RunResult> failure;
    auto base = base_of(doc, "equiv", failure);
    if (!base) return *failure;
    auto [d, source] = operator_for(*base, doc);
    if (auto rejected = reject_operator(*base, d, source, "equiv")) return *rejected;
    const auto r = check_equivalence(*base, d, opts_.all_witnesses ? 0 : kDefaultWitnessCap);
    json mismatches = json::object();
    for (std::size_t k = 0; k < r.mismatch_counts.size(); ++k) {
      const auto dir = static_cast<MismatchDirection>(k);
      json sets = json::array();
      for (const auto& m : r.mismatches) {
        if (m.direction == dir) sets.push_back(set_json(m.set));
      }
      mismatches[std::string(to_string(dir))] = {{"count", r.mismatch_counts[k]}, {"witnesses", std::move(sets)}};
    }
    json report = {{"command", "equiv"},
                   {"operator", source},
                   {"meager_equal", r.meager_equal},
                   {"baire_equal", r.baire_equal},
                   {"hypothesis_holds", r.hypothesis_holds},
                   {"minimal_regions_ok", r.minimal_regions_ok},
                   {"open_sets_abundant_baire", r.open_sets_abundant_baire},
                   {"open_set_witness", r.open_set_witness ? set_json(*r.open_set_witness) : json(nullptr)},
                   {"degenerate_base", r.degenerate_base},
                   {"topology", sets_json(r.topology)},
                   {"mismatches", std::move(mismatches)}};
    return emit(report, r.all_checks_pass() ? kExitOk : kExitCheckFailed);
  }

  RunResult witness() {
    const auto doc = load();
    std::optional<RunResult> failure;
    auto base = base_of(doc, "witness", failure);
    if (!base) return *failure;
    if (opts_.set.empty()) throw InputError("witness needs --set, e.g. --set \"[0]\"");
    const PointSet s = parse_set(base->n(), opts_.set);
    const auto classes = classify_all(*base);

    json report = {{"command", "witness"},
                   {"set", set_json(s)},
                   {"meager", classes.meager(s)},
                   {"baire", classes.baire(s)}};
    const auto fundamental = fundamental_witness(*base, s);
    report["fundamental_witness"] = fundamental ? set_json(*fundamental) : json(nullptr);
    if (!classes.meager(s) && classes.baire(s)) {
      report["comeager_region"] = set_json(comeager_region(*base, s));
    } else {
      report["comeager_region"] = nullptr;
    }

    std::optional<Topology> t;
    std::string source;
    if (doc.topology && opts_.op.empty()) {
      auto checked = validate_topology(doc.n, SetFamily(doc.n, *doc.topology));
      if (!checked.valid()) {
        return emit({{"command", "witness"}, {"topology_valid", false}, {"kind", std::string(to_string(checked.violation->kind))}},
                    kExitCheckFailed);
      }
      t = std::move(checked.topology);
      source = "document";
    } else {
      auto [d, op_source] = operator_for(*base, doc);
      if (auto rejected = reject_operator(*base, d, op_source, "witness")) return *rejected;
      t = d_topology(*base, d);
      source = "tau(" + op_source + ")";
    }
    report["topology"] = source;
    if (auto dec = has_baire_property(*t, s)) {
      report["baire_decomposition"] = {{"h", set_json(dec->h)},
                                       {"q", set_json(dec->q)},
                                       {"r", set_json(dec->r)},
                                       {"degenerate", dec->degenerate()}};
    } else {
      report["baire_decomposition"] = nullptr;
    }
    return emit(report, kExitOk);
  }

  RunResult run_sweep() {
    SweepConfig cfg;
    cfg.n = opts_.n;
    cfg.mode = opts_.exhaustive ? SweepMode::Exhaustive : SweepMode::Random;
    cfg.sample_count = opts_.samples;
    cfg.seed = opts_.seed;
    cfg.canonicalize = opts_.canonical;
    cfg.budget = opts_.budget;
    cfg.operators_per_base = opts_.operators;
    cfg.hunt = opts_.hunt;
    cfg.allow_large = opts_.large;
    cfg.workers = opts_.workers;
    const auto report = sweep(cfg);

    auto counts_json = [](const SweepCounts& c) {
      return json{{"candidates", c.candidates},
                  {"valid_bases", c.valid_bases},
                  {"degenerate_bases", c.degenerate_bases},
                  {"truncated", c.truncated},
                  {"hypothesis_true", c.hypothesis_true},
                  {"equivalence_true", c.equivalence_true},
                  {"minimal_regions_ok", c.minimal_regions_ok},
                  {"operators_checked", c.operators_checked},
                  {"operator_hypothesis_true", c.operator_hypothesis_true},
                  {"operator_equivalence_true", c.operator_equivalence_true},
                  {"operator_open_set_failures", c.operator_open_set_failures},
                  {"operator_failures_open_sets_ok", c.operator_failures_open_sets_ok},
                  {"no_equivalent_topology", c.no_equivalent_topology}};
    };
    json config = {{"n", cfg.n},
                   {"mode", opts_.exhaustive ? "exhaustive" : "random"},
                   {"seed", cfg.seed},
                   {"canonical", cfg.canonicalize},
                   {"budget", cfg.budget},
                   {"operators_per_base", cfg.operators_per_base},
                   {"hunt", cfg.hunt}};
    if (!opts_.exhaustive) config["samples"] = cfg.sample_count;
    json violations = json::array();
    for (std::size_t i = 0; i < report.violations.size() && i < opts_.max_listed; ++i) {
      const auto& v = report.violations[i];
      violations.push_back({{"job", v.job},
                            {"theorem", v.theorem},
                            {"operator", v.op},
                            {"regions", sets_json(v.regions)},
                            {"witness", sets_json(v.witness)},
                            {"detail", v.detail}});
    }
    json out = {{"command", "sweep"},
                {"config", std::move(config)},
                {"counts", counts_json(report.counts)},
                {"passed", report.passed()},
                {"truncated", report.truncated()},
                {"violation_count", report.violations.size()},
                {"violations", std::move(violations)}};
    if (report.weighted) out["weighted_counts"] = counts_json(*report.weighted);
    if (opts_.timing) out["elapsed_seconds"] = report.elapsed_seconds;

    RunResult result = emit(out, kExitOk);
    std::ostringstream err;
    err << "elapsed: " << std::fixed << std::setprecision(3) << report.elapsed_seconds << " s\n";
    result.err = err.str();
    if (!report.violations.empty()) {
      result.exit_code = kExitCheckFailed;
    } else if (report.truncated()) {
      result.exit_code = kExitCapacity;
    }
    return result;
  }

  const Options& opts_;
  const std::function<std::string()>& read_stdin_;
};

std::uint64_t default_budget() {
  const char* env = std::getenv("CATBASE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultFamilyBudget;
  std::uint64_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("CATBASE_BUDGET must be a non-negative integer, got \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace

RunResult run(const std::vector<std::string>& args, std::string_view stdin_text) {
  return run(args, [stdin_text] { return std::string(stdin_text); });
}

RunResult run(const std::vector<std::string>& args, const std::function<std::string()>& read_stdin) {
  Options opts;
  try {
    opts.budget = default_budget();
  } catch (const InputError& e) {
    return {kExitInputError, {}, std::string("error: ") + e.what() + "\n"};
  }

  CLI::App app{"Finite category-base workbench", "catbase"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", [&](std::int64_t) { opts.text = false; }, "JSON report (default)");
    sub->add_flag("--text", opts.text, "Aligned text report");
    sub->add_option("--budget", opts.budget, "Disjoint-subfamily budget for axiom checking");
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "Input document (- for stdin)");
    add_common(sub);
  };
  auto add_operator = [&](CLI::App* sub) {
    sub->add_option("--operator", opts.op, "Operator table file, or 'cluster'");
    sub->add_flag("--paranoid", opts.paranoid, "Check additivity on every pair of subsets");
  };

  auto* validate = app.add_subcommand("validate", "Check the category-base axioms");
  add_input(validate);
  auto* classify = app.add_subcommand("classify", "Singular, meager and Baire verdicts for every subset");
  add_input(classify);
  auto* topology = app.add_subcommand("topology", "The D-topology (basic topology by default)");
  add_input(topology);
  add_operator(topology);
  auto* equiv = app.add_subcommand("equiv", "Compare meager/Baire classes with the D-topology");
  add_input(equiv);
  add_operator(equiv);
  equiv->add_flag("--all-witnesses", opts.all_witnesses, "List every mismatching set");
  auto* witness = app.add_subcommand("witness", "Theorem witnesses for one set");
  add_input(witness);
  add_operator(witness);
  witness->add_option("--set", opts.set, "Subset as a JSON array, e.g. [0,2]");
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustive or randomized theorem sweep");
  add_common(sweep_cmd);
  sweep_cmd->add_option("--n", opts.n, "Ground-set size");
  sweep_cmd->add_flag("--exhaustive", opts.exhaustive, "Enumerate every candidate family");
  sweep_cmd->add_flag("--random", [&](std::int64_t) { opts.exhaustive = false; }, "Sample random candidates (default)");
  sweep_cmd->add_option("--samples", opts.samples, "Random candidates to draw");
  sweep_cmd->add_option("--seed", opts.seed, "RNG seed");
  sweep_cmd->add_flag("--canonical", opts.canonical, "One base per point-permutation orbit");
  sweep_cmd->add_option("--operators", opts.operators, "Random operator tables per valid base");
  sweep_cmd->add_option("--workers", opts.workers, "Worker threads");
  sweep_cmd->add_flag("--hunt", opts.hunt, "Look for bases equivalent to no topology");
  sweep_cmd->add_flag("--large", opts.large, "Allow exhaustive enumeration at n = 4");
  sweep_cmd->add_flag("--timing", opts.timing, "Include elapsed time in the report");
  sweep_cmd->add_option("--max-listed", opts.max_listed, "Violations listed in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitInputError, out.str(), err.str()};
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Session session(opts, read_stdin);
  try {
    return session.dispatch(command);
  } catch (const CapacityError& e) {
    return {kExitCapacity, {}, std::string("capacity: ") + e.what() + "\n"};
  } catch (const TheoremViolation& e) {
    json report = {{"command", command}, {"theorem_violation", e.theorem()}, {"detail", e.what()}};
    return {kExitCheckFailed, render(report, opts), std::string("theorem violation: ") + e.what() + "\n"};
  } catch (const InputError& e) {
    return {kExitInputError, {}, std::string("input error: ") + e.what() + "\n"};
  }
}

}  // namespace catbase::cli
