#include "cli/serialize.hpp"

#include "sfrey/errors.hpp"

namespace sfrey::io {

Json to_json(const Int& v) { return v.get_str(); }

Json to_json(const AlgInt& x) { return Json::array({to_json(x.a()), to_json(x.b())}); }

Json to_json(const QuadField& k) {
  Json j;
  if (k.is_rationals()) {
    j["d"] = "Q";
  } else {
    j["d"] = k.d();
  }
  j["disc"] = to_json(k.disc());
  return j;
}

Json to_json(const IdealHNF& ideal) {
  return Json::array({to_json(ideal.n00), to_json(ideal.n01), to_json(ideal.n11)});
}

Json to_json(const PrimeIdeal& prime) {
  Json j;
  j["p"] = to_json(prime.p);
  j["norm"] = to_json(prime.norm());
  j["residue_degree"] = prime.residue_degree;
  j["ramified"] = prime.ramified();
  j["hnf"] = to_json(prime.hnf);
  return j;
}

namespace {

Json coeff_list(const std::vector<AlgInt>& cs) {
  Json arr = Json::array();
  for (const AlgInt& c : cs) arr.push_back(to_json(c));
  return Json{{"coeffs", arr}};
}

}  // namespace

Json to_json(const BinaryCubic& f) { return coeff_list({f.a.begin(), f.a.end()}); }
Json to_json(const BinaryQuadratic& h) { return coeff_list({h.q.begin(), h.q.end()}); }
Json to_json(const BinaryForm& f) { return coeff_list(f.coeffs()); }

Json to_json(const WeierstrassCurve& e) {
  return Json{{"a2", to_json(e.a2)}, {"a4", to_json(e.a4)}, {"a6", to_json(e.a6)}};
}

Json to_json(const KFraction& x) { return Json{{"num", to_json(x.num)}, {"den", to_json(x.den)}}; }

Json to_json(const CurveInvariants& inv) {
  Json j{{"c4", to_json(inv.c4)}, {"c6", to_json(inv.c6)}, {"delta", to_json(inv.delta)}};
  j["j"] = inv.j ? to_json(*inv.j) : Json(nullptr);
  j["singular"] = inv.singular();
  return j;
}

Json to_json(const ExceptionalSet& s) {
  Json primes = Json::array();
  for (const PrimeIdeal& p : s.finite_primes) primes.push_back(to_json(p));
  Json hk = Json::array();
  for (const HkMember& m : s.hk_members) hk.push_back(Json{{"class", m.class_index}, {"prime", to_json(m.prime)}});
  return Json{{"finite_primes", primes}, {"real_places", s.real_places}, {"hk_members", hk}};
}

Json to_json(const TMSolution& sol) {
  Json support = Json::array();
  for (const PrimeIdeal& p : sol.support) support.push_back(to_json(p.hnf));
  return Json{{"x", to_json(sol.x)}, {"y", to_json(sol.y)}, {"value", to_json(sol.value)}, {"support", support}};
}

namespace {

Json opt_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const AuditReport& r) {
  Json flat = Json::array();
  for (const FiniteFlatEntry& e : r.finite_flat) {
    flat.push_back(Json{{"prime", to_json(e.prime.hnf)}, {"v_delta", opt_long(e.v_delta)}, {"pass", e.pass}});
  }
  Json bad = Json::array();
  for (const PrimeIdeal& p : r.non_semistable_primes) bad.push_back(to_json(p.hnf));
  Json j;
  j["equation_holds"] = r.equation_holds;
  j["gcd_support_ok"] = r.gcd_support_ok;
  j["q_not_dividing_z"] = r.q_not_dividing_z;
  j["j_valuation"] = opt_long(r.j_valuation);
  j["h_valuation"] = opt_long(r.h_valuation);
  j["semistable_outside"] = r.semistable_outside;
  j["non_semistable_primes"] = bad;
  j["finite_flat_congruences"] = flat;
  j["fake_curve_excluded"] = r.fake_curve_excluded;
  Json v = Json::array();
  for (const auto& s : r.violations) v.push_back(s);
  j["verdict"] = r.consistent() ? Json("CONSISTENT") : Json{{"VIOLATION", v}};
  return j;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(std::to_string(j.get<std::uint64_t>())) : from_i64(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw Error(Errc::invalid_argument, "not an integer: '" + s + "'");
    return v;
  }
  throw Error(Errc::invalid_argument, "expected an integer, got " + j.dump());
}

AlgInt element_from_json(const QuadField& k, const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw Error(Errc::invalid_argument, "element must be an [a, b] pair");
    const Int b = int_from_json(j[1]);
    if (k.is_rationals() && b != 0) throw Error(Errc::invalid_argument, "element of Q must have b = 0");
    return k.elem(int_from_json(j[0]), b);
  }
  return k.elem(int_from_json(j));
}

QuadField field_from_json(const Json& j) {
  const Json& d = j.is_object() ? j.at("d") : j;
  if (d.is_string() && (d.get<std::string>() == "Q" || d.get<std::string>() == "RATIONALS")) {
    return QuadField::rationals();
  }
  const Int v = int_from_json(d);
  if (!fits_i64(v)) throw Error(Errc::invalid_argument, "field parameter out of range");
  return QuadField::make(to_i64(v));
}

IdealHNF ideal_from_json(const QuadField& k, const Json& j) {
  if (!j.is_array() || j.size() != 3) throw Error(Errc::invalid_argument, "ideal must be [n00, n01, n11]");
  return make_ideal(k, int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
}

BinaryCubic form_from_json(const QuadField& k, const Json& j) {
  const Json& cs = j.is_object() ? j.at("coeffs") : j;
  if (!cs.is_array() || cs.size() != 4) throw Error(Errc::invalid_argument, "a cubic form needs exactly 4 coefficients");
  BinaryCubic f;
  for (std::size_t i = 0; i < 4; ++i) f.a[i] = element_from_json(k, cs[i]);
  return f;
}

WeierstrassCurve curve_from_json(const QuadField& k, const Json& j) {
  if (j.is_array()) {
    if (j.size() != 3) throw Error(Errc::invalid_argument, "curve needs [a2, a4, a6]");
    return WeierstrassCurve{element_from_json(k, j[0]), element_from_json(k, j[1]), element_from_json(k, j[2])};
  }
  return WeierstrassCurve{element_from_json(k, j.at("a2")), element_from_json(k, j.at("a4")),
                          element_from_json(k, j.at("a6"))};
}

}  // namespace sfrey::io
