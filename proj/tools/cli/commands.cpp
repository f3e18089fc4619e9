#include "cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "sfrey/errors.hpp"

namespace sfrey::cli {

using io::Json;
using io::to_json;

namespace {

bool looks_like_json(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t\n");
  return pos != std::string::npos && (s[pos] == '{' || s[pos] == '[');
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::invalid_argument, path + ": " + e.what());
  }
}

}  // namespace

Json coerce_flag(const std::string& text) {
  if (looks_like_json(text)) {
    try {
      return Json::parse(text);
    } catch (const Json::exception& e) {
      throw Error(Errc::invalid_argument, std::string("malformed JSON argument: ") + e.what());
    }
  }
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) return read_json_file(text);
  if (text.find(',') != std::string::npos) {
    Json arr = Json::array();
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) arr.push_back(item);
    return arr;
  }
  return text;
}

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"field", "form",  "point",      "z",      "height", "class_bound",
                                          "l",     "q",     "curve1",     "curve2", "p",      "norm_bound",
                                          "avoid", "workers", "resume", "out"};
  return keys;
}

long long_in_range(const Json& j, const char* name, long lo, long hi) {
  const Int v = io::int_from_json(j);
  if (v < lo || v > hi) {
    throw Error(Errc::invalid_argument,
                std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v.get_si();
}

std::vector<PrimeIdeal> primes_from_json(const QuadField& k, const Json& j) {
  std::vector<PrimeIdeal> out;
  auto add_item = [&](const Json& item) {
    if (item.is_array()) {
      out.push_back(prime_from_hnf(k, io::ideal_from_json(k, item)));
      return;
    }
    const Int p = io::int_from_json(item);
    if (p < 2 || !is_prime(p)) throw Error(Errc::invalid_argument, "not a prime: " + to_string(p));
    for (const auto& [prime, e] : factor_rational_prime(k, p)) out.push_back(prime);
  };
  if (j.is_array()) {
    for (const Json& item : j) add_item(item);
  } else {
    add_item(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimeIdeal q_from_json(const JobConfig& job, const Json& j) {
  if (j.is_array()) return prime_from_hnf(job.field, io::ideal_from_json(job.field, j));
  const Int p = io::int_from_json(j);
  if (p < 2 || !is_prime(p)) throw Error(Errc::invalid_argument, "q must be a prime or an HNF triple");
  std::vector<PrimeIdeal> over;
  for (const auto& [prime, e] : factor_rational_prime(job.field, p)) over.push_back(prime);
  if (over.size() > 1 && job.form) {
    const std::vector<PrimeIdeal> hyp = theorem_hypothesis(job.field, *job.form);
    std::vector<PrimeIdeal> keep;
    for (const PrimeIdeal& prime : over) {
      if (std::find(hyp.begin(), hyp.end(), prime) != hyp.end()) keep.push_back(prime);
    }
    if (!keep.empty()) over = keep;
  }
  if (over.size() != 1) throw Error(Errc::invalid_argument, "q is ambiguous; give its HNF triple");
  return over.front();
}

void require(bool present, const std::string& command, const char* what) {
  if (!present) throw Error(Errc::invalid_argument, command + " needs --" + std::string(what));
}

}  // namespace

JobConfig load_job(const std::string& command, const RawConfig& raw) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw Error(Errc::invalid_argument, "unknown command '" + command + "'");
  }
  if (!raw.is_object()) throw Error(Errc::invalid_argument, "configuration must be a JSON object");
  for (const auto& [key, value] : raw.items()) {
    if (!known_keys().contains(key)) throw Error(Errc::invalid_argument, "unknown parameter '" + key + "'");
  }
  auto get = [&](const char* key) -> const Json* {
    auto it = raw.find(key);
    return it == raw.end() || it->is_null() ? nullptr : &*it;
  };

  JobConfig job;
  job.command = command;
  if (const Json* v = get("field")) job.field = io::field_from_json(*v);
  if (const Json* v = get("form")) job.form = io::form_from_json(job.field, *v);
  if (const Json* v = get("point")) {
    if (!v->is_array() || v->size() != 2) throw Error(Errc::invalid_argument, "point must be x,y");
    job.point = Pair{io::element_from_json(job.field, (*v)[0]), io::element_from_json(job.field, (*v)[1])};
  }
  if (const Json* v = get("z")) job.z = io::element_from_json(job.field, *v);
  if (const Json* v = get("height")) job.height = long_in_range(*v, "height", 1, 100000);
  if (const Json* v = get("class_bound")) {
    job.class_bound = static_cast<std::uint64_t>(long_in_range(*v, "class_bound", 1, 100000000));
  }
  if (const Json* v = get("l")) {
    job.l = long_in_range(*v, "l", 5, 1000000000);
    if (!is_prime(Int(job.l))) throw Error(Errc::invalid_argument, "l must be prime");
  }
  if (const Json* v = get("curve1")) job.curve1 = io::curve_from_json(job.field, *v);
  if (const Json* v = get("curve2")) job.curve2 = io::curve_from_json(job.field, *v);
  if (const Json* v = get("p")) {
    job.p = io::int_from_json(*v);
    if (job.p < 2 || !is_prime(job.p)) throw Error(Errc::invalid_argument, "p must be a prime");
  }
  if (const Json* v = get("norm_bound")) {
    job.norm_bound = static_cast<std::uint64_t>(long_in_range(*v, "norm_bound", 1, static_cast<long>(kPointCountCap)));
  }
  if (const Json* v = get("avoid")) job.avoid = primes_from_json(job.field, *v);
  if (const Json* v = get("workers")) job.workers = static_cast<unsigned>(long_in_range(*v, "workers", 1, 256));
  if (const Json* v = get("resume")) job.resume = v->get<std::string>();
  if (const Json* v = get("out")) job.out = v->get<std::string>();
  if (const Json* v = get("q")) job.q = q_from_json(job, *v);

  if (command == "distinguish") {
    require(job.curve1.has_value(), command, "curve1");
    require(job.curve2.has_value(), command, "curve2");
  } else {
    require(job.form.has_value(), command, "form");
  }
  if (command == "frey" || command == "audit") require(job.point.has_value(), command, "point");
  if (command == "audit") {
    require(job.z.has_value(), command, "z");
    require(job.l != 0, command, "l");
    require(job.q.has_value(), command, "q");
  }
  return job;
}

namespace {

Json check(const std::string& name, const Json& expected, const Json& actual, bool pass) {
  return Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}};
}

Json header(const JobConfig& job) {
  Json r;
  r["schema"] = 1;
  r["command"] = job.command;
  r["field"] = to_json(job.field);
  if (job.form) r["form"] = to_json(*job.form);
  return r;
}

bool all_pass(const Json& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("pass").get<bool>(); });
}

void write_atomically(const std::string& path, const Json& doc) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(Errc::invalid_argument, "cannot write checkpoint " + path);
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Json> read_checkpoint(const std::optional<std::string>& path) {
  std::error_code ec;
  if (!path || !std::filesystem::is_regular_file(*path, ec)) return std::nullopt;
  return read_json_file(*path);
}

Json ideal_list(const std::vector<PrimeIdeal>& primes) {
  Json arr = Json::array();
  for (const PrimeIdeal& p : primes) arr.push_back(to_json(p.hnf));
  return arr;
}

CommandResult cmd_covariants(const JobConfig& job) {
  const BinaryCubic& f = *job.form;
  const CovariantTriple cov = covariants(f);
  const AlgInt res = resultant_HF(f);
  const BinaryForm syz = syzygy_residual(f);
  Json r = header(job);
  r["hessian"] = to_json(cov.H);
  r["covariant_G"] = to_json(cov.G);
  r["discriminant"] = to_json(cov.discF);
  r["resultant_HF"] = to_json(res);
  r["syzygy_residual"] = to_json(syz);
  r["degenerate"] = cov.discF.is_zero();
  r["irreducible"] = is_irreducible(f, job.field);
  Json checks = Json::array();
  checks.push_back(check("syzygy", "0", syz.is_zero() ? "0" : "nonzero", syz.is_zero()));
  const AlgInt expected = -(cov.discF * cov.discF);
  checks.push_back(check("resultant_equals_minus_disc_squared", to_json(expected), to_json(res), expected == res));
  const bool ok = all_pass(checks);
  r["checks"] = checks;
  r["status"] = ok ? "PASS" : "FAIL";
  return {r, ok ? kOk : kViolation};
}

CommandResult cmd_frey(const JobConfig& job) {
  const auto& [x, y] = *job.point;
  const WeierstrassCurve e = frey_curve(job.field, *job.form, x, y);
  const CurveInvariants closed = frey_invariants(job.field, *job.form, x, y);
  const CurveInvariants standard = invariants_standard(job.field, e);
  Json r = header(job);
  r["point"] = Json::array({to_json(x), to_json(y)});
  r["curve"] = to_json(e);
  r["invariants"] = to_json(closed);
  r["two_torsion_irreducible"] = two_torsion_irreducible(e, job.field);
  Json reduction = Json::array();
  for (const PrimeIdeal& prime : prime_divisors(job.field, closed.delta)) {
    reduction.push_back(
        Json{{"prime", to_json(prime.hnf)}, {"type", reduction_type_name(reduction_type(job.field, e, prime))}});
  }
  r["bad_primes_of_model"] = reduction;
  Json checks = Json::array();
  const bool same = closed.c4 == standard.c4 && closed.c6 == standard.c6 && closed.delta == standard.delta &&
                    closed.j == standard.j;
  checks.push_back(check("closed_formulas_match_standard", true, same, same));
  const AlgInt lhs = closed.c4 * closed.c4 * closed.c4 - closed.c6 * closed.c6;
  const AlgInt rhs = AlgInt(1728) * closed.delta;
  checks.push_back(check("c4^3 - c6^2 = 1728 delta", to_json(rhs), to_json(lhs), lhs == rhs));
  const bool ok = all_pass(checks);
  r["checks"] = checks;
  r["status"] = ok ? "PASS" : "FAIL";
  return {r, ok ? kOk : kViolation};
}

Json class_info(const QuadField& k) {
  if (k.is_rationals()) return Json{{"h", 1}};
  const IdealClassGroup g = class_group(k);
  Json reps = Json::array();
  for (const IdealHNF& rep : g.representatives) reps.push_back(to_json(rep));
  return Json{{"h", g.h}, {"representatives", reps}};
}

CommandResult cmd_sf(const JobConfig& job) {
  const ExceptionalSet s = build_SF(job.field, *job.form, job.class_bound);
  Json r = header(job);
  r["class_group"] = class_info(job.field);
  r["exceptional_set"] = to_json(s);
  Int levels = 1;
  for (const PrimeIdeal& prime : s.finite_primes) levels *= conductor_exponent_bound(job.field, prime) + 1;
  r["serre_level_candidate_count"] = to_json(levels);
  Json checks = Json::array();
  const auto two = factor_rational_prime(job.field, 2);
  const bool over_two = std::all_of(two.begin(), two.end(), [&](const auto& pe) { return s.contains(pe.first); });
  checks.push_back(check("contains_primes_over_2", true, over_two, over_two));
  r["checks"] = checks;
  r["status"] = "PASS";
  return {r, kOk};
}

CommandResult cmd_hypotheses(const JobConfig& job) {
  const BinaryCubic& f = *job.form;
  const AlgInt disc = discriminant(f);
  Json r = header(job);
  r["discriminant"] = to_json(disc);
  if (disc.is_zero()) throw Error(Errc::singular, "form has zero discriminant");
  const bool irreducible = is_irreducible(f, job.field);
  const std::vector<PrimeIdeal> hyp = theorem_hypothesis(job.field, f);
  r["irreducible"] = irreducible;
  Json qs = Json::array();
  for (const PrimeIdeal& q : hyp) qs.push_back(to_json(q));
  r["hypothesis_primes"] = qs;
  Json checks = Json::array();
  checks.push_back(check("irreducible", true, irreducible, irreducible));
  checks.push_back(check("prime_exactly_dividing_disc_not_dividing_2a0", true, !hyp.empty(), !hyp.empty()));
  const bool ok = all_pass(checks);
  r["checks"] = checks;
  r["status"] = ok ? "HOLDS" : "FAILS";
  return {r, ok ? kOk : kViolation};
}

CommandResult cmd_tm_search(const JobConfig& job, std::ostream& log) {
  const QuadField& k = job.field;
  const BinaryCubic& f = *job.form;
  const ExceptionalSet s = build_SF(k, f, job.class_bound);
  const Json identity{{"field", to_json(k)}, {"form", to_json(f)}, {"finite_primes", ideal_list(s.finite_primes)}};

  std::set<Pair> reps;
  long start = 1;
  if (auto cp = read_checkpoint(job.resume)) {
    if (cp->value("command", "") != "tm-search" || cp->at("identity") != identity) {
      throw Error(Errc::invalid_argument, "checkpoint belongs to a different search");
    }
    for (const Json& pr : cp->at("pairs")) {
      reps.insert(Pair{io::element_from_json(k, pr[0]), io::element_from_json(k, pr[1])});
    }
    start = cp->at("completed_height").get<long>() + 1;
    log << "tm-search: resuming after height " << start - 1 << '\n';
  }

  const SupportSet support(k, s.finite_primes);
  for (long h = start; h <= job.height; ++h) {
    for (Pair& pr : tm_search_shell(k, f, support, h, job.workers)) reps.insert(std::move(pr));
    log << "tm-search: height " << h << " complete, " << reps.size() << " orbit(s)\n";
    if (job.resume) {
      Json pairs = Json::array();
      for (const Pair& pr : reps) pairs.push_back(Json::array({to_json(pr.first), to_json(pr.second)}));
      write_atomically(*job.resume, Json{{"schema", 1},
                                         {"command", "tm-search"},
                                         {"identity", identity},
                                         {"completed_height", h},
                                         {"pairs", pairs}});
    }
  }

  std::vector<TMSolution> sols;
  for (const Pair& pr : reps) sols.push_back(make_tm_solution(k, f, s, pr));
  sort_solutions(sols);

  Json r = header(job);
  r["height"] = job.height;
  r["exceptional_set"] = to_json(s);
  Json arr = Json::array();
  for (const TMSolution& sol : sols) arr.push_back(to_json(sol));
  r["solutions"] = arr;
  r["count"] = sols.size();
  if (sols.empty()) r["note"] = "no solution up to height " + std::to_string(job.height);
  r["checks"] = Json::array({check("solutions_found", ">= 1", sols.size(), !sols.empty())});
  r["status"] = sols.empty() ? "NONE_FOUND" : "FOUND";
  return {r, sols.empty() ? kViolation : kOk};
}

CommandResult cmd_audit(const JobConfig& job) {
  const QuadField& k = job.field;
  const ExceptionalSet s = build_SF(k, *job.form, job.class_bound);
  const auto& [x0, y0] = *job.point;
  const AuditReport a = audit_solution(k, *job.form, x0, y0, *job.z, job.l, *job.q, s);
  Json r = header(job);
  r["solution"] = Json{{"x0", to_json(x0)}, {"y0", to_json(y0)}, {"z0", to_json(*job.z)}, {"l", job.l}};
  r["q"] = to_json(*job.q);
  r["exceptional_set"] = to_json(s);
  r["audit"] = to_json(a);
  Json checks = Json::array();
  checks.push_back(check("equation_holds", true, a.equation_holds, a.equation_holds));
  checks.push_back(check("gcd_support_ok", true, a.gcd_support_ok, a.gcd_support_ok));
  checks.push_back(check("q_not_dividing_z", true, a.q_not_dividing_z, a.q_not_dividing_z));
  checks.push_back(check("j_valuation", -1, a.j_valuation ? Json(*a.j_valuation) : Json(nullptr), a.j_valuation_ok));
  checks.push_back(check("semistable_outside", true, a.semistable_outside, a.semistable_outside));
  checks.push_back(check("finite_flat_congruences", true, a.finite_flat_ok, a.finite_flat_ok));
  checks.push_back(check("fake_curve_excluded", true, a.fake_curve_excluded, a.fake_curve_excluded));
  r["checks"] = checks;
  r["status"] = a.consistent() ? "CONSISTENT" : "VIOLATION";
  return {r, a.consistent() ? kOk : kViolation};
}

CommandResult cmd_distinguish(const JobConfig& job, std::ostream& log) {
  const QuadField& k = job.field;
  const Json identity{{"field", to_json(k)},          {"curve1", to_json(*job.curve1)},
                      {"curve2", to_json(*job.curve2)}, {"p", to_json(job.p)},
                      {"avoid", ideal_list(job.avoid)}};
  std::uint64_t done = 0;
  if (auto cp = read_checkpoint(job.resume)) {
    if (cp->value("command", "") != "distinguish" || cp->at("identity") != identity) {
      throw Error(Errc::invalid_argument, "checkpoint belongs to a different search");
    }
    done = cp->at("completed_norm").get<std::uint64_t>();
    log << "distinguish: resuming after norm " << done << '\n';
  }
  const std::uint64_t slice = std::max<std::uint64_t>(100, job.norm_bound / 20);
  std::optional<DistinguishingResult> hit;
  while (!hit && done < job.norm_bound) {
    const std::uint64_t hi = std::min(job.norm_bound, done + slice);
    hit = distinguishing_prime_in_range(k, *job.curve1, *job.curve2, job.p, job.avoid, done, hi, job.workers);
    if (hit) break;
    done = hi;
    log << "distinguish: norms <= " << done << " scanned\n";
    if (job.resume) {
      write_atomically(*job.resume,
                       Json{{"schema", 1}, {"command", "distinguish"}, {"identity", identity}, {"completed_norm", done}});
    }
  }
  Json r;
  r["schema"] = 1;
  r["command"] = job.command;
  r["field"] = to_json(k);
  r["curve1"] = to_json(*job.curve1);
  r["curve2"] = to_json(*job.curve2);
  r["p"] = to_json(job.p);
  r["avoid"] = ideal_list(job.avoid);
  r["norm_bound"] = job.norm_bound;
  if (hit) {
    r["prime"] = to_json(hit->prime);
    r["trace1"] = to_json(hit->trace1);
    r["trace2"] = to_json(hit->trace2);
    r["checks"] = Json::array({check("trace_mismatch_mod_p", "nonzero", to_json(mod(hit->trace1 - hit->trace2, job.p)),
                                     true)});
    r["status"] = "FOUND";
    return {r, kOk};
  }
  r["prime"] = nullptr;
  r["note"] = "no distinguishing prime of norm <= " + std::to_string(job.norm_bound);
  r["checks"] = Json::array({check("trace_mismatch_mod_p", "nonzero", "0", false)});
  r["status"] = "NOT_FOUND";
  return {r, kViolation};
}

}  // namespace

CommandResult run_job(const JobConfig& job, std::ostream& log) {
  if (job.command == "covariants") return cmd_covariants(job);
  if (job.command == "frey") return cmd_frey(job);
  if (job.command == "sf-set") return cmd_sf(job);
  if (job.command == "check-hypotheses") return cmd_hypotheses(job);
  if (job.command == "tm-search") return cmd_tm_search(job, log);
  if (job.command == "audit") return cmd_audit(job);
  if (job.command == "distinguish") return cmd_distinguish(job, log);
  throw Error(Errc::invalid_argument, "unknown command '" + job.command + "'");
}

CommandResult execute(const std::string& command, const RawConfig& raw, std::ostream& log) {
  auto failure = [&](const std::string& code, const std::string& message, int exit_code) {
    log << "error: " << message << '\n';
    Json r;
    r["schema"] = 1;
    r["command"] = command;
    r["status"] = exit_code == kViolation ? "NOT_FOUND" : "ERROR";
    r["error"] = Json{{"code", code}, {"message", message}};
    return CommandResult{r, exit_code};
  };
  try {
    return run_job(load_job(command, raw), log);
  } catch (const Error& e) {
    return failure(errc_name(e.code()), e.what(), e.code() == Errc::not_found ? kViolation : kInputError);
  } catch (const Json::exception& e) {
    return failure("INVALID_ARGUMENT", e.what(), kInputError);
  }
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace sfrey::cli
