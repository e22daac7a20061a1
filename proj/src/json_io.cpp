#include "regent/json_io.hpp"

#include <limits>

namespace regent {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& object, const char* key, const char* where) {
  if (!object.is_object()) bad(std::string(where) + ": expected an object");
  auto it = object.find(key);
  if (it == object.end()) bad(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

std::string string_field(const Json& object, const char* key, const char* where) {
  const Json& v = field(object, key, where);
  if (!v.is_string()) bad(std::string(where) + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

unsigned depth_from_json(const Json& j) {
  const Int v = int_from_json(j);
  if (v < 0 || v > std::numeric_limits<unsigned>::max()) bad("chain depth out of range");
  return static_cast<unsigned>(v);
}

Json depths_json(const std::vector<unsigned>& ks) {
  Json out = Json::array();
  for (unsigned k : ks) out.push_back(k);
  return out;
}

std::vector<unsigned> depths_from_json(const Json& j) {
  if (!j.is_array()) bad("depth list must be an array");
  std::vector<unsigned> out;
  for (const auto& k : j) out.push_back(depth_from_json(k));
  return out;
}

Json int_list(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_to_json(x));
  return out;
}

std::vector<Int> int_list_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer list");
  std::vector<Int> out;
  for (const auto& x : j) out.push_back(int_from_json(x));
  return out;
}

Json element_list(const std::vector<GroupElement>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(element_to_json(x));
  return out;
}

Json header(const char* type, const GroupDescriptor& g, const std::string& system) {
  Json j;
  j["type"] = type;
  j["group"] = group_to_json(g);
  if (!system.empty()) j["base_system"] = system;
  return j;
}

}  // namespace

Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(to_string(v));
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(std::string("bad integer: ") + e.what());
    }
  }
  bad("expected an integer, got " + j.dump());
}

Json group_to_json(const GroupDescriptor& g) {
  Json j;
  switch (g.kind()) {
    case GroupKind::cone: {
      j["kind"] = "cone";
      j["d"] = g.rank();
      Json p = Json::array();
      for (const auto& gen : g.generators()) p.push_back(int_list(std::vector<Int>(gen.begin(), gen.end())));
      j["P"] = p;
      break;
    }
    case GroupKind::discrete:
      j["kind"] = "discrete";
      j["d"] = g.rank();
      break;
    case GroupKind::divisibility: {
      j["kind"] = "divisibility";
      const auto poly = g.field().polynomial();
      j["poly"] = int_list(std::vector<Int>(poly.begin(), poly.end()));
      break;
    }
  }
  return j;
}

GroupDescriptor group_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind", "group");
  auto rank = [&]() -> std::size_t {
    const Int d = int_from_json(field(j, "d", "group"));
    if (d < 1 || d > 64) bad("group: d must be between 1 and 64");
    return static_cast<std::size_t>(d);
  };
  try {
    if (kind == "cone") {
      require_keys(j, {"kind", "d", "P"}, "group");
      const std::size_t d = rank();
      const Json& p = field(j, "P", "group");
      if (!p.is_array() || p.empty()) bad("group: P must be a nonempty list");
      std::vector<IntVector> gens;
      for (const auto& gen : p) {
        const auto coords = gen.is_array() ? int_list_from_json(gen) : std::vector<Int>{int_from_json(gen)};
        if (coords.size() != d) bad("group: generator of wrong dimension");
        gens.emplace_back(coords.begin(), coords.end());
      }
      return GroupDescriptor::cone(d, std::move(gens));
    }
    if (kind == "discrete") {
      require_keys(j, {"kind", "d"}, "group");
      return GroupDescriptor::discrete(rank());
    }
    if (kind == "divisibility") {
      require_keys(j, {"kind", "poly"}, "group");
      const auto poly = int_list_from_json(field(j, "poly", "group"));
      if (poly.size() != 4 || poly[3] != 1) bad("group: poly must be 4 coefficients of a monic cubic, low to high");
      return GroupDescriptor::divisibility(CubicField(poly[0], poly[1], poly[2]));
    }
  } catch (const std::invalid_argument& e) {
    bad(std::string("group: ") + e.what());
  }
  bad("group: unknown kind \"" + kind + "\"");
}

Json element_to_json(const GroupElement& e) {
  if (e.is_field()) {
    Json out = Json::array();
    for (const auto& c : e.field_element().coefficients()) out.push_back(to_string(c));
    return out;
  }
  const auto& v = e.vector();
  if (v.size() == 1) return int_to_json(v[0]);
  return int_list(std::vector<Int>(v.begin(), v.end()));
}

GroupElement element_from_json(const GroupDescriptor& g, const Json& j) {
  if (g.kind() == GroupKind::divisibility) {
    if (!j.is_array() || j.size() != 3) bad("field element must be three rationals");
    std::array<Rational, 3> c;
    for (std::size_t i = 0; i < 3; ++i) {
      try {
        if (j[i].is_string()) {
          c[i] = parse_rational(j[i].get<std::string>());
        } else {
          c[i] = Rational(int_from_json(j[i]));
        }
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception& e) {
        bad(std::string("bad rational: ") + e.what());
      }
    }
    FieldElement f(c[0], c[1], c[2]);
    if (f.is_zero()) bad("the divisibility group has no zero element");
    return GroupElement(std::move(f));
  }
  std::vector<Int> coords;
  if (j.is_array()) {
    coords = int_list_from_json(j);
  } else {
    coords.push_back(int_from_json(j));
  }
  if (coords.size() != g.rank()) bad("element " + j.dump() + " has the wrong dimension");
  return GroupElement(IntVector(coords.begin(), coords.end()));
}

Json subset_to_json(const FinSubset& s) { return element_list(s.elements()); }

std::vector<GroupElement> elements_from_json(const GroupDescriptor& g, const Json& j) {
  if (!j.is_array()) bad("expected a list of elements");
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(element_from_json(g, e));
  return out;
}

FinSubset subset_from_json(const GroupDescriptor& g, const Json& j) {
  auto elems = elements_from_json(g, j);
  if (elems.empty()) bad("finite subsets must be nonempty");
  return FinSubset(std::move(elems));
}

void require_keys(const Json& object, std::initializer_list<const char*> allowed, const char* where) {
  if (!object.is_object()) bad(std::string(where) + ": expected an object");
  for (const auto& [key, value] : object.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) bad(std::string(where) + ": unknown field \"" + key + "\"");
  }
}

// ---------------------------------------------------------------------------

Json t_certificate_json(const GroupDescriptor& g, const std::string& system, const FinSubset& a,
                        const ChainCertificate& cert) {
  Json j = header("T", g, system);
  j["a"] = subset_to_json(a);
  j["targets"] = subset_to_json(cert.targets);
  if (cert.xs.size() == 1) {
    j["x"] = element_to_json(cert.xs[0]);
    j["k"] = cert.ks[0];
  } else {
    j["xs"] = element_list(cert.xs);
    j["ks"] = depths_json(cert.ks);
  }
  j["chain"] = subset_to_json(cert.chain);
  return j;
}

Json u_certificate_json(const GroupDescriptor& g, const std::string& system, const FinSubset& a, const GroupElement& x,
                        const UCertificate& cert) {
  Json j = header("U", g, system);
  j["a"] = subset_to_json(a);
  j["targets"] = subset_to_json(cert.positive.targets);
  j["x"] = element_to_json(x);
  j["k"] = Json::array({cert.positive.ks[0], cert.negative.ks[0]});
  j["chain"] = Json::array({subset_to_json(cert.positive.chain), subset_to_json(cert.negative.chain)});
  return j;
}

Json lorenzen_certificate_json(const GroupDescriptor& g, const std::string& system, const LorenzenCertificate& cert) {
  Json j = header("lorenzen", g, system);
  j["a"] = subset_to_json(cert.a);
  j["b"] = element_to_json(cert.b);
  j["xs"] = element_list(cert.xs);
  Json branches = Json::array();
  for (const auto& br : cert.branches) {
    Json signs = Json::array();
    for (int s : br.signs) signs.push_back(s);
    branches.push_back({{"signs", signs}, {"ks", depths_json(br.ks)}});
  }
  j["branches"] = branches;
  return j;
}

Json prufer_certificate_json(const GroupDescriptor& g, const std::string& system, const PruferCertificate& cert) {
  Json j = header("prufer", g, system);
  j["a"] = subset_to_json(cert.a);
  j["B"] = subset_to_json(cert.witness);
  return j;
}

Json cone_certificate_json(const GroupDescriptor& g, const FinSubset& a, const ConeDecision& d) {
  Json j = header(d.positive ? "cone" : "cone-refutation", g, "");
  j["a"] = subset_to_json(a);
  if (d.positive) {
    j["n"] = int_list(d.n);
    j["m"] = int_list(d.m);
  } else {
    j["lambda"] = int_list(d.functional);
  }
  return j;
}

Json with_claim(Json certificate, const FinSubset& a, const FinSubset& b) {
  certificate["claim"] = {{"A", subset_to_json(a)}, {"B", subset_to_json(b)}};
  return certificate;
}

namespace {

SystemPtr system_from(const Json& j, const GroupDescriptor& g) {
  const std::string name = string_field(j, "base_system", "certificate");
  try {
    return make_system(name, g);
  } catch (const std::invalid_argument& e) {
    bad(std::string("certificate: ") + e.what());
  }
}

VerifyResult invalid(std::string why) { return {false, std::move(why)}; }
VerifyResult valid(std::string what) { return {true, std::move(what)}; }

// If a claim A |- B is attached, the certified set must be A - B (and the
// target 0 where there is one).
std::optional<VerifyResult> check_claim(const Json& j, const GroupDescriptor& g, const FinSubset& a) {
  auto it = j.find("claim");
  if (it == j.end()) return std::nullopt;
  require_keys(*it, {"A", "B"}, "claim");
  const FinSubset lhs = subset_from_json(g, field(*it, "A", "claim"));
  const FinSubset rhs = subset_from_json(g, field(*it, "B", "claim"));
  if (!(difference_set(g, lhs, rhs) == a)) return invalid("claim: certified set is not A - B");
  return std::nullopt;
}

}  // namespace

VerifyResult verify_certificate(const Json& j) {
  if (!j.is_object()) bad("certificate: expected a JSON object");
  const std::string type = string_field(j, "type", "certificate");
  const GroupDescriptor g = group_from_json(field(j, "group", "certificate"));

  try {
    if (type == "T") {
      require_keys(j, {"type", "group", "base_system", "a", "targets", "x", "k", "xs", "ks", "chain", "claim"},
                   "certificate");
      auto s = system_from(j, g);
      const FinSubset a = subset_from_json(g, field(j, "a", "certificate"));
      std::vector<GroupElement> xs;
      std::vector<unsigned> ks;
      if (j.contains("x")) {
        xs = {element_from_json(g, j["x"])};
        ks = {depth_from_json(field(j, "k", "certificate"))};
      } else {
        xs = elements_from_json(g, field(j, "xs", "certificate"));
        ks = depths_from_json(field(j, "ks", "certificate"));
      }
      ChainCertificate cert{std::move(xs), std::move(ks), subset_from_json(g, field(j, "chain", "certificate")),
                            subset_from_json(g, field(j, "targets", "certificate")), true};
      if (cert.xs.empty() || cert.xs.size() != cert.ks.size()) return invalid("one depth per forcing element required");
      if (!(chain_expand(g, a, cert.xs, cert.ks) == cert.chain)) return invalid("chain does not match a, x and k");
      for (const auto& t : cert.targets) {
        if (!s->holds(cert.chain, t)) return invalid("base system does not relate the chain to " + to_string(t));
      }
      return valid("T certificate replays");
    }

    if (type == "U") {
      require_keys(j, {"type", "group", "base_system", "a", "targets", "x", "k", "chain", "claim"}, "certificate");
      auto s = system_from(j, g);
      const FinSubset a = subset_from_json(g, field(j, "a", "certificate"));
      const FinSubset targets = subset_from_json(g, field(j, "targets", "certificate"));
      const GroupElement x = element_from_json(g, field(j, "x", "certificate"));
      const auto ks = depths_from_json(field(j, "k", "certificate"));
      const Json& chains = field(j, "chain", "certificate");
      if (ks.size() != 2 || !chains.is_array() || chains.size() != 2) return invalid("U certificates have two branches");
      const GroupElement forced[2] = {x, g.neg(x)};
      const char* names[2] = {"T_x", "T_-x"};
      for (int i = 0; i < 2; ++i) {
        const FinSubset chain = subset_from_json(g, chains[i]);
        if (!(chain_expand(g, a, forced[i], ks[i]) == chain)) return invalid(std::string(names[i]) + " branch: chain mismatch");
        if (!meet_leq(*s, chain, targets)) return invalid(std::string(names[i]) + " branch does not replay");
      }
      return valid("U certificate replays");
    }

    if (type == "lorenzen") {
      require_keys(j, {"type", "group", "base_system", "a", "b", "xs", "branches", "claim"}, "certificate");
      auto s = system_from(j, g);
      LorenzenCertificate cert{subset_from_json(g, field(j, "a", "certificate")),
                               element_from_json(g, field(j, "b", "certificate")),
                               elements_from_json(g, field(j, "xs", "certificate")),
                               {}};
      const Json& branches = field(j, "branches", "certificate");
      if (!branches.is_array()) bad("certificate: branches must be a list");
      for (const auto& br : branches) {
        require_keys(br, {"signs", "ks"}, "branch");
        LorenzenBranch b;
        const Json& signs = field(br, "signs", "branch");
        if (!signs.is_array()) bad("branch: signs must be a list");
        for (const auto& sgn : signs) {
          if (!sgn.is_number_integer()) bad("branch: signs must be +1 or -1");
          b.signs.push_back(sgn.get<int>());
        }
        b.ks = depths_from_json(field(br, "ks", "branch"));
        cert.branches.push_back(std::move(b));
      }
      if (cert.b == g.zero()) {
        if (auto r = check_claim(j, g, cert.a)) return *r;
      } else if (j.contains("claim")) {
        return invalid("claim: only certificates with b = 0 carry an entailment claim");
      }
      std::string why;
      if (!replay(*s, cert, &why)) return invalid(why);
      return valid("all " + std::to_string(cert.branches.size()) + " branches replay");
    }

    if (type == "prufer") {
      require_keys(j, {"type", "group", "base_system", "a", "B", "claim"}, "certificate");
      auto s = system_from(j, g);
      const FinSubset a = subset_from_json(g, field(j, "a", "certificate"));
      if (auto r = check_claim(j, g, a)) return *r;
      const FinSubset b = subset_from_json(g, field(j, "B", "certificate"));
      if (!prufer_check(*s, a, b)) return invalid("A + B <= B fails");
      return valid("A + B <= B replays");
    }

    if (type == "cone" || type == "cone-refutation") {
      require_keys(j, {"type", "group", "a", "n", "m", "lambda", "claim"}, "certificate");
      if (g.kind() == GroupKind::divisibility) return invalid("cone certificates need a Z^d group");
      const FinSubset a = subset_from_json(g, field(j, "a", "certificate"));
      if (auto r = check_claim(j, g, a)) return *r;
      ConeDecision d;
      d.positive = type == "cone";
      if (d.positive) {
        d.n = int_list_from_json(field(j, "n", "certificate"));
        d.m = int_list_from_json(field(j, "m", "certificate"));
      } else {
        d.functional = int_list_from_json(field(j, "lambda", "certificate"));
      }
      std::string why;
      if (!check_cone_decision(g, a, d, &why)) return invalid(why);
      return valid(d.positive ? "n a + m p = 0 replays" : "separating functional replays");
    }
  } catch (const std::invalid_argument& e) {
    return invalid(e.what());
  }
  bad("certificate: unknown type \"" + type + "\"");
}

}  // namespace regent
