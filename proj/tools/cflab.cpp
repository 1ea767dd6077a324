#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/hfun.hpp"
#include "cflab/parser.hpp"
#include "cflab/petkovsek.hpp"
#include "cflab/registry.hpp"
#include "cflab/verify.hpp"

using namespace cflab;

namespace {

int run_verify(const std::vector<std::string>& ids, bool all, int digits, const std::string& json_path,
               bool keep_going, int parallel, const std::string& registry_path) {
  std::vector<ConjectureEntry> entries = builtin_registry();
  if (!registry_path.empty()) entries = merge_registry(entries, load_registry_file(registry_path));
  std::vector<ConjectureEntry> chosen;
  if (all) {
    chosen = entries;
  } else {
    for (const auto& id : ids) {
      const ConjectureEntry* e = find_entry(entries, id);
      if (!e) {
        std::cerr << "error: unknown id '" << id << "'\n";
        return 2;
      }
      chosen.push_back(*e);
    }
  }
  if (chosen.empty()) {
    std::cerr << "error: pass --id ID or --all\n";
    return 2;
  }
  VerifyOptions opts;
  opts.keep_going = keep_going;
  std::vector<VerificationReport> reports = verify_all(chosen, digits, parallel, opts);
  for (const auto& r : reports) {
    std::cout << r.id << "  " << (r.pass ? "PASS" : "FAIL") << "  matched=" << r.matched_digits << "  methods=";
    for (std::size_t i = 0; i < r.methods_used.size(); ++i) std::cout << (i ? "," : "") << r.methods_used[i];
    std::cout << "\n";
    if (r.cf_value) std::cout << "    cf  = " << r.cf_value->value.to_decimal(digits + 2) << "\n";
    if (r.rhs_value) std::cout << "    rhs = " << r.rhs_value->value.to_decimal(digits + 2) << "\n";
    for (const auto& a : r.anomalies) std::cout << "    anomaly: " << a << "\n";
    if (!r.error.empty()) std::cout << "    error: " << r.error << "\n";
  }
  VerifySummary s = summarize(reports);
  std::cout << "summary: " << s.passed << "/" << s.total << " passed, " << s.with_anomalies << " with anomalies\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << reports_to_json(reports, digits).dump(2) << "\n";
  }
  return s.failed == 0 ? 0 : 1;
}

int run_eval(const std::string& a, const std::string& b, int digits, long max_iter) {
  CFSpec cf{parse_poly(a), parse_poly(b)};
  CFEvaluation ev = eval_cf(cf, digits, max_iter);
  std::cout << "a(n) = " << cf.a.render() << "\n";
  std::cout << "b(n) = " << cf.b.render() << "\n";
  std::cout << "value = " << ev.value.value.to_decimal(digits) << "\n";
  std::cout << "error_bound = " << ev.value.error.to_decimal(3) << "\n";
  std::cout << "iterations = " << ev.iterations << "\n";
  if (ev.finite) std::cout << "finite = true\n";
  if (!cf.degree_regime()) std::cout << "note: deg b != 2 deg a\n";
  return 0;
}

int run_h(const std::string& alpha, const std::string& beta, const std::string& gamma, int digits) {
  HParams p{parse_rational(alpha), parse_rational(beta), parse_rational(gamma)};
  std::cout << "params = " << p.render() << "\n";
  std::cout << "series = " << to_string(series_convergence_class(p)) << "\n";
  HEvaluation h = h_anywhere(p, digits);
  std::cout << "H = " << h.value.value.to_decimal(digits) << "\n";
  std::cout << "error_bound = " << h.value.error.to_decimal(3) << "\n";
  std::cout << "method = " << h.method << "\n";
  if (h.path.size() > 1) {
    std::cout << "path =";
    for (const auto& q : h.path) std::cout << " " << q.render();
    std::cout << "\n";
  }
  FloatApprox cf = FloatApprox::exact(1, h.value.precision()) / h.value;
  std::cout << "CF = 1/H = " << cf.value.to_decimal(digits) << "\n";
  return 0;
}

int run_hyper(const std::string& a, const std::string& b) {
  CFSpec cf{parse_poly(a), parse_poly(b)};
  Recurrence2 rec = Recurrence2::from_cf(cf);
  std::cout << "recurrence: (" << rec.p2.render() << ") y(n+2) + (" << rec.p1.render() << ") y(n+1) + ("
            << rec.p0.render() << ") y(n) = 0\n";
  auto terms = hyper_solve(rec);
  if (terms.empty()) std::cout << "no hypergeometric solutions\n";
  for (const auto& t : terms) {
    std::cout << "ratio: " << t.ratio.render() << "  first_valid_index=" << t.first_valid_index
              << "  certified=" << (certify(rec, t) ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_constants(int digits) {
  for (BaseConstant c : all_base_constants()) {
    FloatApprox v = const_value(c, digits);
    std::cout << constant_name(c) << " = " << v.value.to_decimal(digits) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cflab: polynomial continued fractions to arbitrary precision"};
  app.require_subcommand(1);

  std::vector<std::string> ids;
  bool all = false, keep_going = false;
  int digits = 20, parallel = 1;
  std::string json_path, registry_path;
  auto* verify_cmd = app.add_subcommand("verify", "verify catalogued identities");
  auto* id_opt = verify_cmd->add_option("--id", ids, "entry id (repeatable)");
  verify_cmd->add_flag("--all", all, "verify every entry")->excludes(id_opt);
  verify_cmd->add_option("--digits", digits, "required matching digits")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--json", json_path, "write a JSON report");
  verify_cmd->add_flag("--keep-going", keep_going, "record errors in the report and continue");
  verify_cmd->add_option("--parallel", parallel, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--registry", registry_path, "JSON file extending or overriding the built-in entries");

  std::string a_text, b_text;
  long max_iter = 100000;
  int eval_digits = 20;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate CF[a, b]");
  eval_cmd->add_option("--a", a_text, "a(n)")->required();
  eval_cmd->add_option("--b", b_text, "b(n)")->required();
  eval_cmd->add_option("--digits", eval_digits, "target digits")->check(CLI::PositiveNumber);
  eval_cmd->add_option("--max-iter", max_iter, "iteration budget")->check(CLI::PositiveNumber);

  std::string alpha, beta, gamma;
  int h_digits = 20;
  auto* h_cmd = app.add_subcommand("h", "evaluate H(alpha, beta; gamma)");
  h_cmd->add_option("--alpha", alpha, "rational p/q")->required();
  h_cmd->add_option("--beta", beta, "rational p/q")->required();
  h_cmd->add_option("--gamma", gamma, "rational p/q")->required();
  h_cmd->add_option("--digits", h_digits, "target digits")->check(CLI::PositiveNumber);

  std::string ha, hb;
  auto* hyper_cmd = app.add_subcommand("hyper", "hypergeometric solutions of y(n+1) = a(n)y(n) + b(n)y(n-1)");
  hyper_cmd->add_option("--a", ha, "a(n)")->required();
  hyper_cmd->add_option("--b", hb, "b(n)")->required();

  int c_digits = 30;
  auto* const_cmd = app.add_subcommand("constants", "print the base constants");
  const_cmd->add_option("--digits", c_digits, "digits")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return run_verify(ids, all, digits, json_path, keep_going, parallel, registry_path);
    if (*eval_cmd) return run_eval(a_text, b_text, eval_digits, max_iter);
    if (*h_cmd) return run_h(alpha, beta, gamma, h_digits);
    if (*hyper_cmd) return run_hyper(ha, hb);
    if (*const_cmd) return run_constants(c_digits);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
