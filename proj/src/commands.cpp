#include "vnumlab/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "vnumlab/errors.hpp"
#include "vnumlab/golden.hpp"

namespace vnumlab {

namespace {

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) out += (out.empty() ? "" : ",") + csv_field(f);
  return out + "\n";
}

CommandResult cmd_ass(const ProblemDocument& doc) {
  const auto a = ass(doc.module());
  CommandResult r{to_json(*doc.ring, a), {}, kExitOk};
  std::string csv = "prime\n";
  for (const auto& p : a) csv += csv_row({prime_label(*doc.ring, p)});
  r.csv = csv;
  return r;
}

CommandResult cmd_vnumber(const ProblemDocument& doc) {
  const auto report = v_number(doc.module());
  CommandResult r{to_json(*doc.ring, report), {}, kExitOk};
  std::string csv = "prime,v_p,witness\n";
  for (const auto& [p, d] : report.per_prime) {
    csv += csv_row({prime_label(*doc.ring, p), std::to_string(d),
                    format_monomial(*doc.ring, report.witnesses.at(p))});
  }
  r.csv = csv;
  return r;
}

CommandResult cmd_indeg(const ProblemDocument& doc) {
  const auto q = doc.module();
  Json j = {{"indeg", to_json(indeg(q))}, {"artinian", is_artinian(q)}, {"end", nullptr}};
  if (is_artinian(q)) j["end"] = to_json(end_artinian(q));
  return {j, {}, kExitOk};
}

CommandResult cmd_family(const ProblemDocument& doc, const RunOptions& run) {
  const auto spec = doc.family_spec();
  const auto series = run.cache_dir ? cached_series(doc, *run.cache_dir).series : evaluate_series(spec);
  const auto window = doc.options.window;
  Json j = to_json(*doc.ring, series);
  j["indeg_law"] = to_json(fit_eventual_linear(series.indeg_values(), window));
  j["v_law"] = to_json(fit_eventual_linear(series.v_values(), window));
  j["eventually_zero"] = eventually_infinite(series.v_values(), window);
  return {j, series_csv(*doc.ring, series), kExitOk};
}

CommandResult cmd_probe(const ProblemDocument& doc) {
  return {to_json(*doc.ring, delta_probe(doc.family_spec(), doc.options.s_max)), {}, kExitOk};
}

CommandResult cmd_oracle(const ProblemDocument& doc) {
  const auto q = doc.module();
  const auto bound = doc.options.degree_bound.value_or(default_oracle_bound(q));
  const auto a = ass(q);
  const auto oracle_ass = ass_oracle(q, bound);
  bool agree = a == oracle_ass;
  Json per = Json::object();
  for (const auto& p : a) {
    const auto formula = v_at_prime(q, p, a);
    const auto hit = v_oracle(q, p, bound);
    Json entry = {{"formula", formula}, {"oracle", nullptr}};
    if (hit) entry["oracle"] = hit->degree;
    if (!hit || hit->degree != formula) agree = false;
    per[p.key(*doc.ring)] = entry;
  }
  Json j = {{"degree_bound", bound},
            {"ass", to_json(*doc.ring, a)},
            {"ass_oracle", to_json(*doc.ring, oracle_ass)},
            {"per_prime", per},
            {"agree", agree}};
  return {j, {}, agree ? kExitOk : kExitVerificationFailure};
}

CommandResult cmd_reduction(const ProblemDocument& doc) {
  if (!doc.family || !doc.family->J) throw Error("missing-family", "reduction-check needs family.I and family.J");
  const auto found = reduction_check(doc.ideal(*doc.family->J), doc.ideal(doc.family->I), doc.family->n_max);
  Json j = {{"is_reduction", found.has_value()}, {"reduction_number", nullptr}, {"n_probe", doc.family->n_max}};
  if (found) j["reduction_number"] = *found;
  return {j, {}, found ? kExitOk : kExitVerificationFailure};
}

CommandResult cmd_check(const ProblemDocument& doc) {
  const auto report = check_theorems(doc.family_spec(), {doc.options.window, doc.options.s_max});
  std::string csv = "item,verdict,title,detail\n";
  for (const auto& i : report.items) {
    csv += csv_row({std::string(1, i.id), std::string(verdict_name(i.verdict)), i.title, i.detail});
  }
  return {to_json(*doc.ring, report), csv, report.ok() ? kExitOk : kExitVerificationFailure};
}

CommandResult cmd_ideal(const ProblemDocument& doc) {
  if (!doc.operation) throw Error("missing-operation", "the ideal command needs an operation section");
  const auto& op = *doc.operation;
  const auto a = doc.ideal(op.args.at(0));
  MonomialIdeal result = a;
  if (op.op == "power") {
    result = power(a, op.exponent);
  } else {
    const auto b = doc.ideal(op.args.at(1));
    if (op.op == "sum") result = sum(a, b);
    if (op.op == "product") result = product(a, b);
    if (op.op == "intersect") result = intersect(a, b);
    if (op.op == "colon") result = colon_ideal(a, b);
    if (op.op == "saturate") result = saturate(a, b);
  }
  std::string csv = "generator\n";
  for (const auto& g : result.to_strings()) csv += csv_row({g});
  return {{{"op", op.op}, {"result", result.to_strings()}}, csv, kExitOk};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"ass",   "vnumber",       "indeg",           "family",
                                              "probe", "oracle",        "verify-golden",   "reduction-check",
                                              "check", "ideal"};
  return names;
}

CommandResult run_verify_golden() {
  const auto assertions = verify_golden();
  Json list = Json::array();
  int failed = 0;
  std::string csv = "suite,name,pass,detail\n";
  for (const auto& a : assertions) {
    if (!a.pass) ++failed;
    list.push_back({{"suite", a.suite}, {"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    csv += csv_row({a.suite, a.name, a.pass ? "true" : "false", a.detail});
  }
  Json j = {{"passed", static_cast<int>(assertions.size()) - failed}, {"failed", failed}, {"assertions", list}};
  return {j, csv, failed == 0 ? kExitOk : kExitVerificationFailure};
}

CommandResult run_command(const ProblemDocument& doc, std::string_view command, const RunOptions& run) {
  if (command == "ass") return cmd_ass(doc);
  if (command == "vnumber") return cmd_vnumber(doc);
  if (command == "indeg") return cmd_indeg(doc);
  if (command == "family") return cmd_family(doc, run);
  if (command == "probe") return cmd_probe(doc);
  if (command == "oracle") return cmd_oracle(doc);
  if (command == "verify-golden") return run_verify_golden();
  if (command == "reduction-check") return cmd_reduction(doc);
  if (command == "check") return cmd_check(doc);
  if (command == "ideal") return cmd_ideal(doc);
  throw Error("unknown-command", "unknown command \"" + std::string(command) + "\"");
}

std::string render(const CommandResult& result, std::string_view format) {
  if (format == "json") return result.json.dump(2) + "\n";
  if (format == "csv") {
    if (!result.csv) throw Error("unsupported-format", "this command has no CSV form");
    return *result.csv;
  }
  throw Error("unsupported-format", "format must be json or csv");
}

}  // namespace vnumlab
