#include "regent/cli.hpp"

#include "regent/instances.hpp"
#include "regent/lgroup.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace regent::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20180601;

struct Options {
  unsigned budget_k = 128;
  unsigned budget_n = 2;
  std::string pool;  // JSON list of extra forcing elements
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 500;
  bool json = false;
  bool k_set = false, n_set = false;
};

int status_code(Status s) {
  switch (s) {
    case Status::holds:
      return kHolds;
    case Status::refuted:
      return kRefuted;
    case Status::unknown:
      return kUnknown;
  }
  return kUnknown;
}

Json read_json_text(const std::string& text, const std::string& origin) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw ParseError(origin + " is empty");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Json read_json_source(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return read_json_text(buffer.str(), path == "-" ? "stdin" : path);
}

void emit(std::ostream& out, const Json& j, bool pretty = true) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

std::string system_for(const GroupDescriptor& g, const std::string& requested) {
  if (!requested.empty()) return requested;
  return g.kind() == GroupKind::divisibility ? "dedekind" : "sm";
}

std::string backend_for(const GroupDescriptor& g, const std::string& system, const std::string& requested) {
  if (!requested.empty()) return requested;
  if (system == "sm" && g.kind() != GroupKind::divisibility) return "cone";
  return "lorenzen";
}

// Entailment verdict plus its certificate document.
Json entailment_result(const RegularEntailment& e, const std::string& system, const FinSubset& a, const FinSubset& b) {
  const GroupDescriptor& g = e.group();
  const FinSubset d = difference_set(g, a, b);
  auto v = e.regular(d);
  Json out;
  out["kind"] = "entails";
  out["backend"] = e.name();
  out["A"] = subset_to_json(a);
  out["B"] = subset_to_json(b);
  out["status"] = std::string(to_string(v.status));
  if (v.certificate) {
    if (const auto* cone = std::get_if<ConeDecision>(&*v.certificate)) {
      out["certificate"] = with_claim(cone_certificate_json(g, d, *cone), a, b);
    } else if (const auto* lor = std::get_if<LorenzenCertificate>(&*v.certificate)) {
      out["certificate"] = with_claim(lorenzen_certificate_json(g, system, *lor), a, b);
    }
  }
  return out;
}

std::vector<GroupElement> pool_extras(const GroupDescriptor& g, const Options& opt, const Json* budget) {
  std::vector<GroupElement> extras;
  if (budget && budget->contains("poolExtras")) extras = elements_from_json(g, (*budget)["poolExtras"]);
  if (!opt.pool.empty()) {
    for (auto& e : elements_from_json(g, read_json_text(opt.pool, "--pool"))) extras.push_back(std::move(e));
  }
  return extras;
}

const Json& need(const Json& object, const char* key, const char* where) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(std::string(where) + ": missing \"" + key + "\"");
  return *it;
}

// ---------------------------------------------------------------------------
// query

int run_query(const Json& doc, const Options& opt, const std::string& cert_out, std::ostream& out) {
  require_keys(doc, {"group", "system", "query", "budget"}, "query file");
  const GroupDescriptor g = group_from_json(need(doc, "group", "query file"));
  std::string system_name;
  if (doc.contains("system")) {
    if (!doc["system"].is_string()) throw ParseError("query file: \"system\" must be a string");
    system_name = doc["system"].get<std::string>();
  }
  system_name = system_for(g, system_name);

  RegularisationBudget budget;
  const Json* budget_json = nullptr;
  if (doc.contains("budget")) {
    budget_json = &doc["budget"];
    require_keys(*budget_json, {"kMax", "nMax", "poolExtras"}, "budget");
    if (budget_json->contains("kMax")) budget.k_max = static_cast<unsigned>(int_from_json((*budget_json)["kMax"]));
    if (budget_json->contains("nMax")) budget.n_max = static_cast<unsigned>(int_from_json((*budget_json)["nMax"]));
  }
  if (opt.k_set) budget.k_max = opt.budget_k;
  if (opt.n_set) budget.n_max = opt.budget_n;
  const auto extras = pool_extras(g, opt, budget_json);

  const Json& q = need(doc, "query", "query file");
  if (!q.is_object()) throw ParseError("query: expected an object");
  const std::string kind = need(q, "kind", "query").is_string() ? q["kind"].get<std::string>() : "";

  SystemPtr system;
  try {
    system = std::make_shared<MemoizedSystem>(make_system(system_name, g));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }

  Json result;
  Status status = Status::unknown;

  if (kind == "entails") {
    require_keys(q, {"kind", "A", "B", "backend"}, "query");
    const FinSubset a = subset_from_json(g, need(q, "A", "query"));
    const FinSubset b = subset_from_json(g, need(q, "B", "query"));
    const std::string backend = backend_for(g, system_name, q.contains("backend") ? q["backend"].get<std::string>() : "");
    EntailmentPtr e;
    try {
      e = make_entailment(backend, g, system_name, budget, extras);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
    result = entailment_result(*e, system_name, a, b);
    status = entails_status(*e, a, b);
  } else if (kind == "force") {
    require_keys(q, {"kind", "op", "x", "xs", "A", "b", "B"}, "query");
    const std::string op = q.contains("op") ? q["op"].get<std::string>() : "T";
    const FinSubset a = subset_from_json(g, need(q, "A", "query"));
    FinSubset targets = q.contains("B") ? subset_from_json(g, q["B"]) : FinSubset{element_from_json(g, need(q, "b", "query"))};
    result["kind"] = "force";
    result["op"] = op;
    if (op == "T") {
      std::vector<GroupElement> xs =
          q.contains("xs") ? elements_from_json(g, q["xs"]) : std::vector<GroupElement>{element_from_json(g, need(q, "x", "query"))};
      if (xs.empty()) throw ParseError("query: xs must be nonempty");
      auto v = t_compose_holds(*system, xs, a, targets, Budget{budget.k_max});
      status = v.status;
      if (v.holds()) {
        result["k"] = xs.size() == 1 ? Json(v.certificate->ks[0]) : Json(v.certificate->ks);
        result["certificate"] = t_certificate_json(g, system_name, a, *v.certificate);
      }
    } else if (op == "U") {
      const GroupElement x = element_from_json(g, need(q, "x", "query"));
      auto v = u_force_holds(*system, x, a, targets, Budget{budget.k_max});
      status = v.status;
      if (v.holds()) {
        result["k"] = Json::array({v.certificate->positive.ks[0], v.certificate->negative.ks[0]});
        result["certificate"] = u_certificate_json(g, system_name, a, x, *v.certificate);
      }
    } else {
      throw ParseError("query: op must be \"T\" or \"U\"");
    }
    result["status"] = std::string(to_string(status));
  } else if (kind == "regularise") {
    require_keys(q, {"kind", "A", "b", "pool"}, "query");
    const FinSubset a = subset_from_json(g, need(q, "A", "query"));
    const GroupElement b = element_from_json(g, need(q, "b", "query"));
    std::vector<GroupElement> pool = q.contains("pool") ? elements_from_json(g, q["pool"]) : default_pool(g, a, b, extras);
    if (q.contains("pool")) {
      for (const auto& x : extras) pool.push_back(x);
    }
    auto v = l_holds(*system, a, b, pool, budget);
    status = v.status;
    result["kind"] = "regularise";
    result["status"] = std::string(to_string(status));
    if (v.holds()) result["certificate"] = lorenzen_certificate_json(g, system_name, *v.certificate);
  } else if (kind == "prufer-check") {
    require_keys(q, {"kind", "A", "B"}, "query");
    const FinSubset a = subset_from_json(g, need(q, "A", "query"));
    const FinSubset b = subset_from_json(g, need(q, "B", "query"));
    status = prufer_check(*system, a, b) ? Status::holds : Status::refuted;
    result["kind"] = "prufer-check";
    result["status"] = std::string(to_string(status));
    if (status == Status::holds) result["certificate"] = prufer_certificate_json(g, system_name, PruferCertificate{a, b});
  } else if (kind == "lcd") {
    require_keys(q, {"kind", "A"}, "query");
    const FinSubset a = subset_from_json(g, need(q, "A", "query"));
    if (g.kind() == GroupKind::divisibility) throw ParseError("query: lcd needs a Z^d group");
    const ConeDecision d = lcd_decide(g, a);
    status = d.positive ? Status::holds : Status::refuted;
    result["kind"] = "lcd";
    result["status"] = std::string(to_string(status));
    result["certificate"] = cone_certificate_json(g, a, d);
  } else {
    throw ParseError("query: unknown kind \"" + kind + "\"");
  }

  result["budget"] = {{"kMax", budget.k_max}, {"nMax", budget.n_max}};
  if (!cert_out.empty() && result.contains("certificate")) {
    std::ofstream file(cert_out);
    if (!file) throw ParseError("cannot write " + cert_out);
    file << result["certificate"].dump(2) << '\n';
  }
  emit(out, result, !opt.json);
  return status_code(status);
}

// ---------------------------------------------------------------------------
// lgroup expressions: phi(<element>) | zero | neg(e) | add(e,e) | sub(e,e)
// | meet(e,e) | join(e,e)

class ExprParser {
 public:
  ExprParser(const GroupDescriptor& g, std::string text) : g_(g), s_(std::move(text)) {}

  LGroupElement parse() {
    LGroupElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("expression: " + why + " at position " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an operation name");
    return s_.substr(start, pos_ - start);
  }
  LGroupElement expr() {
    const std::string name = ident();
    if (name == "zero") return lg_zero(g_);
    expect('(');
    if (name == "phi") {
      // the argument runs to the matching ')'
      skip();
      int depth = 0;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && !(depth == 0 && s_[pos_] == ')')) {
        if (s_[pos_] == '[') ++depth;
        if (s_[pos_] == ']') --depth;
        ++pos_;
      }
      const GroupElement a = element_from_json(g_, read_json_text(s_.substr(start, pos_ - start), "phi argument"));
      expect(')');
      return phi(g_, a);
    }
    if (name == "neg") {
      LGroupElement x = expr();
      expect(')');
      return lg_neg(x);
    }
    LGroupElement x = expr();
    expect(',');
    LGroupElement y = expr();
    expect(')');
    if (name == "add") return lg_add(g_, x, y);
    if (name == "sub") return lg_sub(g_, x, y);
    if (name == "meet") return lg_meet(g_, x, y);
    if (name == "join") return lg_join(g_, x, y);
    fail("unknown operation '" + name + "'");
  }

  const GroupDescriptor& g_;
  std::string s_;
  std::size_t pos_ = 0;
};

Json lgroup_json(const GroupDescriptor& g, const LGroupElement& e) {
  Json j{{"plus", subset_to_json(e.plus)}, {"minus", subset_to_json(e.minus)}};
  if (g == GroupDescriptor::discrete(1)) {
    auto [m, n] = to_pair(g, e);
    j["pair"] = Json::array({int_to_json(m), int_to_json(n)});
  }
  return j;
}

Json report_json(const AxiomReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["passed"] = r.passed();
  j["nontrivial"] = r.nontrivial;
  j["unresolved"] = r.unresolved;
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) ce.push_back({{"axiom", c.axiom}, {"detail", c.detail}});
  j["counterexamples"] = ce;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"regular entailment relations, regularisation and Lorenzen l-groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-k", opt.budget_k, "chain depth bound per forcing level")->each([&](const std::string&) { opt.k_set = true; });
    sub->add_option("--budget-n", opt.budget_n, "forcing elements per regularisation certificate")->each([&](const std::string&) { opt.n_set = true; });
    sub->add_option("--pool", opt.pool, "extra forcing elements, as a JSON list");
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", opt.samples, "number of samples")->capture_default_str();
  };

  std::string example_name;
  auto* example = app.add_subcommand("example", "run the scripted checks of a shipped example");
  example->add_option("name", example_name, "exa1 | exa2 | exa3")->required();
  example->add_flag("--json", opt.json, "print the full JSON report");

  std::string query_file, cert_out;
  auto* query = app.add_subcommand("query", "run a JSON query file ('-' for stdin)");
  query->add_option("file", query_file)->required();
  query->add_option("--out", cert_out, "write the certificate to this file");
  query->add_flag("--json", opt.json, "compact JSON output");
  add_budget(query);

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "replay a certificate file ('-' for stdin)");
  verify->add_option("file", verify_file)->required();
  verify->add_flag("--json", opt.json, "JSON output");

  std::string instance = "exa1", backend, system, set_a, set_b;
  auto* ent = app.add_subcommand("entails", "decide or search A |- B on a shipped instance");
  ent->add_option("A", set_a, "JSON list, e.g. '[0]'")->required();
  ent->add_option("B", set_b, "JSON list")->required();
  ent->add_option("--instance", instance)->capture_default_str();
  ent->add_option("--backend", backend, "cone | interval | lorenzen | raw");
  ent->add_option("--system", system, "sm | dedekind");
  ent->add_flag("--json", opt.json, "compact JSON output");
  add_budget(ent);

  std::string suite = "regular";
  auto* axioms = app.add_subcommand("axioms", "sampled axiom checks");
  axioms->add_option("--instance", instance)->capture_default_str();
  axioms->add_option("--suite", suite, "systems | regular | lemmas | cancel | lgroup")->capture_default_str();
  axioms->add_option("--backend", backend, "cone | interval | lorenzen | raw");
  axioms->add_option("--system", system, "sm | dedekind");
  axioms->add_flag("--json", opt.json, "compact JSON output");
  add_budget(axioms);
  add_sampling(axioms);

  std::string op, expr1, expr2;
  auto* lg = app.add_subcommand("lgroup", "evaluate l-group expressions over phi(...)");
  lg->add_option("op", op, "eval | leq | equiv")->required();
  lg->add_option("expr", expr1, "e.g. 'meet(phi(1), phi(4))'")->required();
  lg->add_option("other", expr2, "second expression for leq / equiv");
  lg->add_option("--instance", instance)->capture_default_str();
  lg->add_option("--backend", backend, "cone | interval | lorenzen | raw");
  lg->add_option("--system", system, "sm | dedekind");
  lg->add_flag("--json", opt.json, "compact JSON output");
  add_budget(lg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  RegularisationBudget budget{opt.budget_k, opt.budget_n};

  try {
    if (*example) {
      SuiteReport r;
      try {
        r = run_example(example_name);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
      }
      if (opt.json) {
        emit(out, r.to_json());
      } else {
        for (const auto& c : r.claims) out << (c.passed ? "PASS " : "FAIL ") << r.name << '/' << c.id << "  " << c.statement << '\n';
        out << r.name << ": " << (r.passed() ? "all claims hold" : "some claims fail") << '\n';
      }
      return r.passed() ? kHolds : kRefuted;
    }

    if (*query) return run_query(read_json_source(query_file, in), opt, cert_out, out);

    if (*verify) {
      const Json cert = read_json_source(verify_file, in);
      const VerifyResult v = verify_certificate(cert);
      if (opt.json) {
        emit(out, Json{{"valid", v.valid}, {"message", v.message}}, false);
      } else {
        out << (v.valid ? "valid: " : "invalid: ") << v.message << '\n';
      }
      return v.valid ? kHolds : kRefuted;
    }

    GroupDescriptor g = [&] {
      try {
        return named_instance(instance);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }();
    const std::string sys = system_for(g, system);
    auto make = [&](const std::string& requested) {
      try {
        return make_entailment(backend_for(g, sys, requested), g, sys, budget, pool_extras(g, opt, nullptr));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    };

    if (*ent) {
      const FinSubset a = subset_from_json(g, read_json_text(set_a, "A"));
      const FinSubset b = subset_from_json(g, read_json_text(set_b, "B"));
      auto e = make(backend);
      Json result = entailment_result(*e, sys, a, b);
      emit(out, result, !opt.json);
      return status_code(entails_status(*e, a, b));
    }

    if (*axioms) {
      const Sampler sampler = default_sampler(instance);
      AxiomReport r;
      if (suite == "systems") {
        auto s = make_system(sys, g);
        r = check_system_axioms(*s, sampler, opt.samples, opt.seed);
      } else {
        auto e = make(backend);
        if (suite == "regular") {
          r = check_regular_axioms(*e, sampler, opt.samples, opt.seed);
        } else if (suite == "lemmas") {
          r = check_derived_lemmas(*e, sampler, opt.samples, opt.seed);
        } else if (suite == "cancel") {
          r = check_cancellative(*e, sampler, opt.samples, opt.seed);
        } else if (suite == "lgroup") {
          r = check_lgroup_laws(*e, sampler, opt.samples, opt.seed);
        } else {
          throw ParseError("unknown suite '" + suite + "'");
        }
      }
      Json j = report_json(r);
      j["suite"] = suite;
      j["instance"] = instance;
      emit(out, j, !opt.json);
      return r.passed() ? kHolds : kRefuted;
    }

    if (*lg) {
      auto e = make(backend);
      const LGroupElement x = ExprParser(g, expr1).parse();
      if (op == "eval") {
        if (!expr2.empty()) throw ParseError("eval takes one expression");
        emit(out, lgroup_json(g, x), !opt.json);
        return kHolds;
      }
      if (op != "leq" && op != "equiv") throw ParseError("lgroup: unknown operation '" + op + "'");
      if (expr2.empty()) throw ParseError(op + " needs two expressions");
      const LGroupElement y = ExprParser(g, expr2).parse();
      const Status s = op == "leq" ? lg_leq(*e, x, y) : lg_equiv(*e, x, y);
      emit(out, Json{{"op", op}, {"left", lgroup_json(g, x)}, {"right", lgroup_json(g, y)}, {"status", std::string(to_string(s))}},
           !opt.json);
      return status_code(s);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace regent::cli
