#include "bdcoh/report.hpp"

#include <sstream>

#include "bdcoh/random.hpp"

namespace bdcoh {

json to_json(const Rational& x) { return {{"a", x.str()}, {"b", "0"}, {"d", 0}}; }

json to_json(const QuadRational& x) { return {{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.d()}}; }

json to_json(const AdmissibleTriple& t) {
  json tau = json::array();
  for (const auto& [i, j] : t.tau) tau.push_back({i, j});
  return {{"spec", format_triple(t)}, {"n", t.n}, {"gamma1", t.gamma1}, {"gamma2", t.gamma2}, {"tau", tau}};
}

json to_json(const RMatrix& r) { return {{"n", r.n}, {"triple", to_json(r.triple)}, {"terms", to_json(r.tensor)}}; }

json to_json(const SquareClass& c) {
  if (c.field == FieldKind::Laurent) return c.label();
  return c.rep.get_si();
}

namespace {

json vector_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

json strings_json(const AdmissibleTriple& t) {
  json out = json::array();
  for (const auto& s : string_decomposition(t).strings)
    out.push_back({{"roots", s.roots}, {"symmetric", s.symmetric}, {"middlepoint", s.has_middlepoint}});
  return out;
}

std::string vector_text(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string matrix_text(const std::vector<std::vector<ScalarRecord>>& m) {
  auto entry = [](const ScalarRecord& e) {
    if (e.b == "0") return e.a;
    const std::string root = e.d == "hbar" ? "sqrt(hbar)" : "sqrt(" + e.d + ")";
    const std::string irr = (e.b == "1" ? "" : e.b == "-1" ? "-" : e.b + "*") + root;
    if (e.a == "0") return irr;
    return e.a + (irr[0] == '-' ? "" : "+") + irr;
  };
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    s += i ? "; " : "";
    for (size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + entry(m[i][j]);
  }
  return s + "]";
}

}  // namespace

json to_json(const CohomologyReport& rep) {
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json matrix = json::array();
    for (const auto& row : c.representative_matrix) {
      json r = json::array();
      for (const auto& e : row) {
        json d = e.d;
        if (e.d != "hbar") d = std::stol(e.d);
        r.push_back({{"a", e.a}, {"b", e.b}, {"d", d}});
      }
      matrix.push_back(r);
    }
    classes.push_back({{"vector", vector_json(c.vector)},
                       {"representative_matrix", matrix},
                       {"verified", c.cocycle_verified && c.class_rederived}});
  }
  json group = {{"description", rep.group.description},
                {"order", rep.group.order ? json(*rep.group.order) : json("infinite")},
                {"representatives", vector_json(rep.group.representatives)}};
  return {{"triple", to_json(rep.triple)},
          {"field", rep.field},
          {"d", to_json(rep.d)},
          {"twistable", rep.twistable},
          {"str", rep.str},
          {"group", group},
          {"class_count", rep.class_count ? json(*rep.class_count) : json("infinite")},
          {"classes", classes}};
}

json to_json(const BrauerClassDescriptor& desc) {
  json places = json::array();
  for (const auto& p : desc.bad_places) {
    if (p.is_infinite()) places.push_back("inf");
    else places.push_back(p.prime.get_si());
  }
  return {{"d", to_json(desc.d)}, {"b", to_json(desc.b)}, {"split", desc.split}, {"bad_places", places}};
}

void Report::claim(const std::string& what, const std::string& check, bool passed) {
  verification.push_back({{"claim", what}, {"check", check}, {"passed", passed}});
  if (!passed && exit_code == kExitOk) exit_code = kExitVerification;
}

std::string Report::render(OutputFormat format) const {
  if (format == OutputFormat::Json) {
    json out = {{"request", request}, {"result", result}, {"verification", verification}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << text;
  if (!verification.empty()) {
    os << "verification:\n";
    for (const auto& v : verification)
      os << "  [" << (v["passed"].get<bool>() ? "PASS" : "FAIL") << "] " << v["claim"].get<std::string>() << " ("
         << v["check"].get<std::string>() << ")\n";
  }
  return os.str();
}

namespace {

json request_json(const CommandRequest& q) {
  json j = {{"subcommand", q.subcommand}};
  if (q.subcommand == "triples") {
    j["n"] = q.n;
    j["twistable"] = q.twistable_only;
  } else if (q.subcommand == "rmatrix") {
    j["triple"] = q.triple;
    j["verify"] = q.verify;
    j["seed"] = q.seed;
  } else if (q.subcommand == "cohomology") {
    j["triple"] = q.triple;
    j["field"] = q.field;
    j["d"] = q.d;
    j["classes"] = q.classes;
    j["seed"] = q.seed;
  } else if (q.subcommand == "total") {
    j["triple"] = q.triple;
    j["field"] = q.field;
    j["d_bound"] = q.d_bound;
    j["classes"] = q.classes;
  } else if (q.subcommand == "brauer") {
    j["field"] = q.field;
    j["d"] = q.d;
    j["b"] = q.b;
    if (q.compare) j["compare"] = {q.compare->first, q.compare->second};
  }
  return j;
}

void run_triples(const CommandRequest& q, Report& rep) {
  if (q.n < 2) throw Error(ErrorKind::UsageError, "--n must be at least 2");
  json list = json::array();
  std::ostringstream os;
  int shown = 0;
  bool all_valid = true;
  for (const auto& t : enumerate_triples(q.n)) {
    const bool tw = twistability_check(t);
    if (q.twistable_only && !tw) continue;
    const auto dec = string_decomposition(t);
    all_valid = all_valid && validate_triple(t).valid;
    json entry = to_json(t);
    entry["twistable"] = tw;
    entry["strings"] = strings_json(t);
    entry["str"] = dec.str_count;
    list.push_back(entry);
    os << format_triple(t) << "  strings=" << dec.strings.size() << " twistable=" << (tw ? "yes" : "no");
    if (tw) os << " str=" << dec.str_count;
    os << "\n";
    ++shown;
  }
  rep.result = {{"n", q.n}, {"count", shown}, {"triples", list}};
  rep.text = std::to_string(shown) + (q.twistable_only ? " twistable" : "") + " triple" + (shown == 1 ? "" : "s") +
             " for sl(" + std::to_string(q.n) + ")\n" + os.str();
  rep.claim("every listed triple is admissible", "validate_triple", all_valid);
}

void run_rmatrix(const CommandRequest& q, Report& rep) {
  const AdmissibleTriple t = parse_triple(q.triple);
  const RMatrix r = build_bd_rmatrix(t);
  rep.result = to_json(r);
  rep.result["wedge_terms"] = wedge_terms(t).size();
  std::ostringstream os;
  os << "Belavin-Drinfeld r-matrix for " << format_triple(t) << ": " << r.tensor.terms().size() << " nonzero terms, "
     << wedge_terms(t).size() << " wedge terms\n";
  for (const auto& [k, c] : r.tensor.terms())
    os << "  " << c.str() << " e" << k[0] << k[1] << " (x) e" << k[2] << k[3] << "\n";
  rep.text = os.str();
  if (q.verify) {
    const auto v = verify_rmatrix(r);
    rep.result["verification_failure"] = v.failure;
    rep.claim("r + r21 = Omega", "exact tensor comparison" + (v.symmetric_part_ok ? std::string() : ": " + v.failure),
              v.symmetric_part_ok);
    rep.claim("CYB(r) = 0", "exact evaluation in U(gl_n)^3" + (v.cyb_ok ? std::string() : ": " + v.failure), v.cyb_ok);
    const auto u = untwisted_report(t, q.seed);
    rep.claim("identity is an untwisted cocycle", "gauge by I fixes r", u.identity_cocycle_ok);
    rep.claim("gauge by a random Q in GL(n,Q) is again an r-matrix",
              "seed " + std::to_string(q.seed) + ", verify_tensor on (Ad_Q x Ad_Q)(r)", u.sampled_gauge_ok);
  }
}

FieldElement parse_d(const CommandRequest& q, const FieldPreset& preset) {
  if (preset.kind() == FieldKind::Laurent && q.d.empty()) return LaurentElement{1};
  if (q.d.empty()) throw Error(ErrorKind::UsageError, "--d is required for field " + preset.name());
  return preset.parse_element(q.d);
}

template <class Ctx>
bool sampled_gauge_invariance(const CohomologyReport& c, const Ctx& ctx, const FieldPreset& preset, unsigned seed) {
  using S = typename Ctx::Scalar;
  Rng rng(seed);
  for (const auto& cls : c.classes) {
    std::vector<S> assignment;
    for (const auto& x : cls.vector) assignment.emplace_back(Rational(x));
    const auto X = representative_cocycle(c.triple, ctx, assignment);
    const Matrix<S> Q = matrix_cast<S>(random_invertible(rng, c.triple.n));
    const auto moved = factored(Matrix<S>(Q * X.X), ctx);
    if (!(cocycle_class(c.triple, ctx, preset, c.d, moved).vector == cls.vector)) return false;
  }
  return true;
}

void add_cohomology_claims(const CohomologyReport& c, Report& rep, const std::string& prefix) {
  if (!c.twistable) {
    rep.claim(prefix + "twisted cohomology is empty", "s(Gamma1) = Gamma2 and s tau = tau^-1 s fails", true);
    return;
  }
  for (const auto& cls : c.classes) {
    const std::string v = vector_text(cls.vector);
    rep.claim(prefix + "representative of " + v + " is a twisted cocycle",
              "(Ad_M x Ad_M)(r) = r21 for M = X^-1 conj(X)", cls.cocycle_verified);
    rep.claim(prefix + "class of " + v + " is recovered from X", "reduce_to_J then norm classes per string",
              cls.class_rederived);
  }
  rep.claim(prefix + "listed classes are pairwise inequivalent", "are_equivalent on all pairs",
            c.distinct_classes_verified);
}

std::string cohomology_text(const CohomologyReport& c) {
  std::ostringstream os;
  os << "triple " << format_triple(c.triple) << ", field " << c.field << ", d = " << c.d.label() << "\n";
  if (!c.twistable) {
    os << "not twistable: twisted cohomology is empty\n";
    return os.str();
  }
  os << "str = " << c.str << "; H^1 = " << c.summary << "\n";
  for (const auto& cls : c.classes)
    os << "  class " << vector_text(cls.vector) << ": X = " << matrix_text(cls.representative_matrix) << "\n";
  return os.str();
}

void run_cohomology(const CommandRequest& q, Report& rep) {
  const AdmissibleTriple t = parse_triple(q.triple);
  const FieldPreset preset = FieldPreset::parse(q.field);
  const FieldElement d = parse_d(q, preset);
  if (q.classes < 1) throw Error(ErrorKind::UsageError, "--classes must be positive");
  const auto c = twisted_cohomology(t, preset, d, q.classes);
  rep.result = to_json(c);
  rep.text = cohomology_text(c);
  add_cohomology_claims(c, rep, "");
  if (c.twistable) {
    const bool ok = preset.kind() == FieldKind::Laurent
                        ? sampled_gauge_invariance(c, LaurentContext{}, preset, q.seed)
                        : sampled_gauge_invariance(c, QuadContext{c.d.rep.get_si()}, preset, q.seed);
    rep.claim("class vectors are invariant under X -> QX", "random Q in GL(n,F), seed " + std::to_string(q.seed), ok);
  }
}

void run_total(const CommandRequest& q, Report& rep) {
  const AdmissibleTriple t = parse_triple(q.triple);
  const FieldPreset preset = FieldPreset::parse(q.field);
  if (q.d_bound < 2 && preset.kind() == FieldKind::Rationals) throw Error(ErrorKind::UsageError, "--d-bound must be at least 2");
  const auto entries = total_twisted_cohomology(t, preset, q.d_bound, q.classes);
  json list = json::array();
  std::ostringstream os;
  os << "total twisted cohomology of " << format_triple(t) << " over " << preset.name() << ": " << entries.size()
     << " square class" << (entries.size() == 1 ? "" : "es") << "\n";
  for (const auto& e : entries) {
    list.push_back({{"d", to_json(e.d)}, {"cohomology", to_json(e.report)}});
    os << "  d = " << e.d.label() << ": ";
    if (!e.report.twistable) os << "empty\n";
    else os << "str = " << e.report.str << ", " << e.report.summary << "\n";
    add_cohomology_claims(e.report, rep, "d=" + e.d.label() + ": ");
  }
  rep.result = {{"triple", to_json(t)}, {"field", preset.name()}, {"entries", list}};
  rep.text = os.str();
}

void run_brauer(const CommandRequest& q, Report& rep) {
  const FieldPreset preset = FieldPreset::parse(q.field);
  if (q.d.empty() || q.b.empty()) throw Error(ErrorKind::UsageError, "--d and --b are required");
  const FieldElement d = preset.parse_element(q.d);
  const FieldElement b = preset.parse_element(q.b);
  const auto desc = brauer_map(d, b, preset);
  rep.result = to_json(desc);
  std::ostringstream os;
  os << "quaternion algebra (" << desc.d.label() << "," << desc.b.label() << ") over " << preset.name() << ": "
     << (desc.split ? "split (trivial Brauer class)" : "non-split (nontrivial Brauer class)");
  if (!desc.bad_places.empty()) {
    os << ", bad places {";
    for (size_t i = 0; i < desc.bad_places.size(); ++i) os << (i ? "," : "") << desc.bad_places[i].str();
    os << "}";
  }
  os << "\n";
  if (preset.kind() == FieldKind::Rationals) {
    rep.claim("bad places come in an even number", "Hilbert product formula", desc.bad_places.size() % 2 == 0);
    const auto& dr = std::get<Rational>(d);
    const auto& br = std::get<Rational>(b);
    if (dr.is_integer() && br.is_integer() && abs(dr.num()) < 1000000 && abs(br.num()) < 1000000) {
      const auto w = zero_divisor_search(dr.num().get_si(), br.num().get_si(), 20);
      rep.result["zero_divisor"] = w ? json(*w) : json(nullptr);
      if (w) os << "zero divisor of norm 0: (" << (*w)[0] << "," << (*w)[1] << "," << (*w)[2] << "," << (*w)[3] << ")\n";
      rep.claim("zero-divisor search agrees", "integer search with |coordinates| <= 20", w ? desc.split : true);
    }
  }
  if (q.compare) {
    const FieldElement m = preset.parse_element(q.compare->first);
    const FieldElement k = preset.parse_element(q.compare->second);
    const auto other = brauer_map(m, k, preset);
    const bool same = brauer_equal({d, b}, {m, k}, preset);
    rep.result["compare"] = {{"other", to_json(other)}, {"same_class", same}};
    os << "(" << other.d.label() << "," << other.b.label() << "): " << (same ? "same Brauer class" : "different Brauer class")
       << "\n";
  }
  rep.text = os.str();
}

}  // namespace

Report run(const CommandRequest& q) {
  Report rep;
  rep.request = request_json(q);
  if (q.subcommand == "triples") run_triples(q, rep);
  else if (q.subcommand == "rmatrix") run_rmatrix(q, rep);
  else if (q.subcommand == "cohomology") run_cohomology(q, rep);
  else if (q.subcommand == "total") run_total(q, rep);
  else if (q.subcommand == "brauer") run_brauer(q, rep);
  else throw Error(ErrorKind::UsageError, "unknown subcommand '" + q.subcommand + "'");
  return rep;
}

}  // namespace bdcoh
