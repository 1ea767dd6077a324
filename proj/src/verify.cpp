#include "cflab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "cflab/errors.hpp"
#include "cflab/hfun.hpp"
#include "cflab/solution_series.hpp"

namespace cflab {

namespace {

constexpr int kInternalMargin = 6;

std::string digits_note(int d) { return std::to_string(d) + " digits"; }

void cross_check(VerificationReport& rep, const std::string& method, const FloatApprox& value, int digits) {
  rep.methods_used.push_back(method);
  int agree = agree_digits(*rep.cf_value, value);
  if (agree < digits) {
    rep.anomalies.push_back(method + " disagrees with eval_cf: " + digits_note(agree) + " agree, value " +
                            value.value.to_decimal(digits + kInternalMargin));
    rep.pass = false;
  }
}

}  // namespace

VerificationReport verify(const ConjectureEntry& entry, int digits, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.id = entry.id;
  try {
    if (digits < 1) throw DomainError("digits must be at least 1");
    if (digits > kMaxVerifyDigits)
      throw BudgetError("digits " + std::to_string(digits) + " exceeds the limit of " +
                        std::to_string(kMaxVerifyDigits));
    const int internal = digits + kInternalMargin;
    rep.rhs_value = eval_closed_form(entry.rhs, internal);

    CFEvaluation ev = eval_cf(entry.cf, internal, opts.max_cf_iter);
    rep.cf_value = ev.value;
    rep.cf_iterations = ev.iterations;
    rep.cf_precision = ev.value.precision();
    rep.methods_used.push_back("eval_cf");
    if (ev.finite) rep.anomalies.push_back("continued fraction terminates at index " + std::to_string(ev.iterations));

    int matched = agree_digits(*rep.cf_value, *rep.rhs_value);
    rep.matched_digits = matched;
    rep.pass = matched >= digits;

    if (entry.alternate_rhs) {
      FloatApprox alt = eval_closed_form(*entry.alternate_rhs, internal);
      int alt_matched = agree_digits(*rep.cf_value, alt);
      bool main_ok = matched >= digits, alt_ok = alt_matched >= digits;
      std::string main_s = entry.rhs.render(), alt_s = entry.alternate_rhs->render();
      if (main_ok && !alt_ok) {
        rep.anomalies.push_back("variant check: registry value " + main_s + " matches (" + digits_note(matched) +
                                "); alternate " + alt_s + " does not (" + digits_note(alt_matched) + ")");
        rep.pass = true;
      } else if (alt_ok && !main_ok) {
        rep.anomalies.push_back("variant check: alternate " + alt_s + " matches (" + digits_note(alt_matched) +
                                "); registry value " + main_s + " does not (" + digits_note(matched) + ")");
        rep.rhs_value = alt;
        rep.matched_digits = alt_matched;
        rep.pass = true;
      } else if (main_ok && alt_ok) {
        rep.anomalies.push_back("variant check: both " + main_s + " and " + alt_s + " match; cannot adjudicate");
        rep.pass = false;
      } else {
        rep.anomalies.push_back("variant check: neither " + main_s + " (" + digits_note(matched) + ") nor " + alt_s +
                                " (" + digits_note(alt_matched) + ") matches");
        rep.pass = false;
      }
    }

    if (entry.h_params) {
      try {
        HEvaluation h = h_anywhere(*entry.h_params, internal, HRoute::ladder);
        FloatApprox lhs = FloatApprox::exact(1, h.value.precision()) / h.value;
        cross_check(rep, "h_anywhere", lhs, digits);
      } catch (const Error& e) {
        rep.methods_used.push_back("h_anywhere");
        rep.anomalies.push_back(std::string("h_anywhere failed: ") + e.what());
        rep.pass = false;
      }
    }
    if (entry.solution) {
      try {
        Lemma31Evaluation s = cf_from_solution(entry.cf, entry.solution->term, internal, opts.max_series_terms);
        cross_check(rep, "cf_from_solution", s.value, digits);
      } catch (const Error& e) {
        rep.methods_used.push_back("cf_from_solution");
        rep.anomalies.push_back(std::string("cf_from_solution failed: ") + e.what());
        rep.pass = false;
      }
    }
  } catch (const Error& e) {
    if (!opts.keep_going) throw;
    rep.error = e.what();
    rep.pass = false;
  }
  return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<ConjectureEntry>& entries, int digits,
                                           int parallelism, const VerifyOptions& opts) {
  std::vector<const ConjectureEntry*> order;
  for (const auto& e : entries) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) { return id_less(a->id, b->id); });

  std::vector<VerificationReport> out(order.size());
  std::vector<std::exception_ptr> errors(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      try {
        out[i] = verify(*order[i], digits, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (parallelism <= 0) parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  parallelism = std::min<int>(parallelism, static_cast<int>(std::max<std::size_t>(order.size(), 1)));
  if (parallelism == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < parallelism; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
  VerifySummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.pass)
      ++s.passed;
    else
      ++s.failed;
    if (!r.anomalies.empty()) ++s.with_anomalies;
  }
  return s;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports, int digits) {
  using nlohmann::json;
  json arr = json::array();
  const int shown = digits + kInternalMargin;
  for (const auto& r : reports) {
    json o;
    o["id"] = r.id;
    o["cf_value"] = r.cf_value ? json(r.cf_value->value.to_decimal(shown)) : json(nullptr);
    o["cf_error_bound"] = r.cf_value ? json(r.cf_value->error.to_decimal(3)) : json(nullptr);
    o["rhs_value"] = r.rhs_value ? json(r.rhs_value->value.to_decimal(shown)) : json(nullptr);
    o["matched_digits"] = r.matched_digits;
    o["methods_used"] = r.methods_used;
    o["pass"] = r.pass;
    o["anomalies"] = r.anomalies;
    o["cf_iterations"] = r.cf_iterations;
    if (!r.error.empty()) o["error"] = r.error;
    arr.push_back(std::move(o));
  }
  VerifySummary s = summarize(reports);
  json summary = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"with_anomalies", s.with_anomalies}};
  return {{"digits", digits}, {"reports", arr}, {"summary", summary}};
}

}  // namespace cflab
