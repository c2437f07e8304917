#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metabelian/errors.hpp"
#include "metabelian/invariants.hpp"
#include "metabelian/lie_expr.hpp"
#include "metabelian/parse.hpp"
#include "metabelian/symmetric.hpp"
#include "metabelian/wreath.hpp"

namespace metabelian::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::size_t n = 2;
  bool json = false;
  std::string input;
  std::string perm;
  std::size_t i = 1;
  std::size_t j = 2;
  std::size_t degree = 1;
  std::size_t max_degree = 12;
};

json envelope(const std::string& command, std::size_t n) {
  return json{{"schema", kSchemaVersion}, {"command", command}, {"n", n}};
}

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& q : values) out.push_back(to_string(q));
  return out;
}

json lie_json(const LieElement& f) {
  json terms = json::array();
  for (const auto& [b, c] : f.commutators()) {
    terms.push_back({{"i1", b.i1}, {"i2", b.i2}, {"tail", b.tail}, {"c", to_string(c)}});
  }
  return json{{"text", to_string(f)}, {"linear", rationals_json(f.linear())}, {"commutators", terms}};
}

json wreath_json(const WreathElement& w) {
  json u = json::array();
  for (const auto& p : w.upart()) u.push_back(to_string(p));
  return json{{"u", u}, {"v", rationals_json(w.vpart())}};
}

json edecomposition_json(const EDecomposition& d) {
  json q = json::array();
  for (const auto& [a, c] : d.terms()) {
    std::vector<unsigned> exps(a.exponents().begin(), a.exponents().end());
    q.push_back({{"a", exps}, {"c", to_string(c)}});
  }
  return q;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

LieElement read_lie(const Options& o) {
  return normal_form(parse_lie_expr(o.input, o.n), o.n);
}

int cmd_normal_form(const Options& o, std::ostream& out) {
  LieElement f = read_lie(o);
  if (!o.perm.empty()) f = apply_perm_lie(parse_cycle_notation(o.perm, o.n), f);
  if (o.json) {
    json doc = envelope("normal-form", o.n);
    doc["result"] = lie_json(f);
    emit(out, doc);
  } else {
    out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_embed(const Options& o, std::ostream& out) {
  WreathElement w = embed(read_lie(o));
  if (!o.perm.empty()) w = apply_perm_wreath(parse_cycle_notation(o.perm, o.n), w);
  if (o.json) {
    json doc = envelope("embed", o.n);
    doc.update(wreath_json(w));
    doc["in_commutator_image"] = in_commutator_image(w);
    emit(out, doc);
  } else {
    out << to_string(w) << '\n';
  }
  return kExitOk;
}

int cmd_preimage(const Options& o, std::ostream& out) {
  const WreathElement w = parse_wreath(o.input, o.n);
  const LieElement f = preimage(w);
  if (embed(f) != w) throw ConsistencyError("preimage does not embed back to its input");
  if (o.json) {
    json doc = envelope("preimage", o.n);
    doc["input"] = wreath_json(w);
    doc["result"] = lie_json(f);
    emit(out, doc);
  } else {
    out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_is_invariant(const Options& o, std::ostream& out) {
  const LieElement f = read_lie(o);
  const auto violation = invariance_violation(f);
  if (o.json) {
    json doc = envelope("is-invariant", o.n);
    doc["invariant"] = !violation.has_value();
    doc["violated_by"] = violation ? json(to_cycle_string(*violation)) : json(nullptr);
    emit(out, doc);
  } else if (violation) {
    out << "false, violated by " << to_cycle_string(*violation) << '\n';
  } else {
    out << "true\n";
  }
  return kExitOk;
}

int cmd_reynolds(const Options& o, std::ostream& out) {
  const LieElement f = reynolds_lie(read_lie(o));
  if (o.json) {
    json doc = envelope("reynolds", o.n);
    doc["result"] = lie_json(f);
    emit(out, doc);
  } else {
    out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_generators(const Options& o, std::ostream& out) {
  json list = json::array();
  for (std::size_t i = 1; i <= o.n; ++i) {
    for (std::size_t j = i + 1; j <= o.n; ++j) {
      const WreathElement h = generator_h(o.n, i, j);
      const std::string name = "h_" + std::to_string(i) + std::to_string(j);
      if (o.json) {
        json item{{"i", i}, {"j", j}, {"koszul", to_koszul_string(h)}};
        item.update(wreath_json(h));
        list.push_back(item);
      } else {
        out << name << " = " << to_koszul_string(h) << '\n';
      }
    }
  }
  if (o.json) {
    json doc = envelope("generators", o.n);
    doc["generators"] = list;
    emit(out, doc);
  }
  return kExitOk;
}

int cmd_generator_lie(const Options& o, std::ostream& out) {
  const LieElement f = generator_h_lie(o.n, o.i, o.j);
  if (o.json) {
    json doc = envelope("generator-lie", o.n);
    doc["i"] = o.i;
    doc["j"] = o.j;
    doc["result"] = lie_json(f);
    emit(out, doc);
  } else {
    out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const LieElement f = read_lie(o);
  if (f.degree() > o.max_degree) {
    throw ResourceError("input degree " + std::to_string(f.degree()) + " exceeds --max-degree " +
                        std::to_string(o.max_degree));
  }
  const InvariantDecomposition d = decompose_invariant(f);
  const bool verified = verify_decomposition(d, f);
  if (o.json) {
    json doc = envelope("decompose", o.n);
    doc["f1"] = to_string(d.f1);
    json parts = json::array();
    for (const auto& [ij, q] : d.parts) {
      parts.push_back({{"i", ij.first}, {"j", ij.second}, {"q", edecomposition_json(q)}});
    }
    doc["parts"] = parts;
    doc["verified"] = verified;
    emit(out, doc);
  } else {
    out << "f1=" << to_string(d.f1);
    for (const auto& [ij, q] : d.parts) {
      out << "; q_{" << ij.first << ij.second << "} = " << to_string(q);
    }
    out << '\n' << "verified: " << (verified ? "true" : "false") << '\n';
  }
  if (!verified) throw ConsistencyError("decomposition failed re-verification");
  return kExitOk;
}

int cmd_symmetrize_poly(const Options& o, std::ostream& out) {
  const Polynomial p = parse_polynomial(o.input, o.n);
  const Polynomial sym = reynolds_poly(p);
  const EDecomposition e = decompose_in_elementary(sym);
  const bool verified = e.expand() == sym;
  if (o.json) {
    json doc = envelope("symmetrize-poly", o.n);
    doc["symmetric"] = to_string(sym);
    doc["elementary"] = edecomposition_json(e);
    doc["elementary_text"] = to_string(e);
    doc["verified"] = verified;
    emit(out, doc);
  } else {
    out << "symmetric: " << to_string(sym) << '\n' << "elementary: " << to_string(e) << '\n';
  }
  if (!verified) throw ConsistencyError("elementary decomposition failed re-verification");
  return kExitOk;
}

int cmd_invariant_basis(const Options& o, std::ostream& out) {
  if (o.degree > o.max_degree) {
    throw ResourceError("degree " + std::to_string(o.degree) + " exceeds --max-degree " +
                        std::to_string(o.max_degree));
  }
  const auto basis = invariant_space_basis(o.n, o.degree);
  if (o.json) {
    json doc = envelope("invariant-basis", o.n);
    doc["degree"] = o.degree;
    doc["dimension"] = basis.size();
    json items = json::array();
    for (const auto& f : basis) items.push_back(lie_json(f));
    doc["basis"] = items;
    emit(out, doc);
  } else {
    out << "dimension: " << basis.size() << '\n';
    for (const auto& f : basis) out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_verify_relations(const Options& o, std::ostream& out) {
  std::size_t total = 0;
  json failures = json::array();
  std::ostringstream failed_text;
  for (std::size_t i = 1; i <= o.n; ++i) {
    for (std::size_t j = i + 1; j <= o.n; ++j) {
      for (std::size_t k = j + 1; k <= o.n; ++k) {
        ++total;
        if (!verify_module_relation(o.n, i, j, k)) {
          failures.push_back({i, j, k});
          failed_text << "relation fails for (" << i << "," << j << "," << k << ")\n";
        }
      }
    }
  }
  if (o.json) {
    json doc = envelope("verify-relations", o.n);
    doc["relations"] = total;
    doc["failures"] = failures;
    doc["all_hold"] = failures.empty();
    emit(out, doc);
  } else if (failures.empty()) {
    out << "all " << total << " relations hold\n";
  } else {
    out << failed_text.str();
  }
  return failures.empty() ? kExitOk : kExitDomain;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  struct Check {
    std::string name;
    std::function<bool()> run;
  };
  auto lie = [](const std::string& text, std::size_t n) {
    return normal_form(parse_lie_expr(text, n), n);
  };
  const std::vector<Check> checks{
      {"n=2: f_12 = [x2,x1](ad x2 - ad x1)",
       [&] { return generator_h_lie(2, 1, 2) == lie("[x2,x1,x2] - [x2,x1,x1]", 2); }},
      {"n=2: h_12 = (u1*x2 - u2*x1)*(x1 - x2)",
       [&] { return generator_h(2, 1, 2) == parse_wreath("(u1*x2 - u2*x1)*(x1 - x2)", 2); }},
      {"n=3: f_12",
       [&] {
         return generator_h_lie(3, 1, 2) ==
                lie("[x2,x1,x2-x1]+[x3,x1,x3-x1]+[x3,x2,x3-x2]", 3);
       }},
      {"n=3: f_13",
       [&] {
         return generator_h_lie(3, 1, 3) ==
                lie("[x2,x1,x2-x1,x3]+[x3,x1,x3-x1,x2]+[x3,x2,x3-x2,x1]", 3);
       }},
      // The variant with ad(x_a + x_b) factors is f_13*e_1 - f_23; the
      // preimage of h_23 carries ad x_c twice instead.
      {"n=3: f_23 = [x2,x1,x2-x1,x3,x3] + [x3,x1,x3-x1,x2,x2] + [x3,x2,x3-x2,x1,x1]",
       [&] {
         return generator_h_lie(3, 2, 3) ==
                lie("[x2,x1,x2-x1,x3,x3]+[x3,x1,x3-x1,x2,x2]+[x3,x2,x3-x2,x1,x1]", 3);
       }},
      {"n=3: [x2,x1,x2-x1,x1+x2,x3] + ... = f_13*e_1 - f_23",
       [&] {
         const LieElement printed =
             lie("[x2,x1,x2-x1,x1+x2,x3]+[x3,x1,x3-x1,x1+x3,x2]+[x3,x2,x3-x2,x2+x3,x1]", 3);
         return printed == ad_action(generator_h_lie(3, 1, 3), elementary_symmetric(3, 1)) -
                               generator_h_lie(3, 2, 3);
       }},
      {"n=3: relation 3*h_12*e_3 - 2*h_13*e_2 + h_23*e_1 = 0",
       [&] { return verify_module_relation(3, 1, 2, 3); }},
  };
  bool all = true;
  json results = json::array();
  for (const auto& check : checks) {
    const bool ok = check.run();
    all = all && ok;
    if (o.json) {
      results.push_back({{"name", check.name}, {"ok", ok}});
    } else {
      out << (ok ? "ok   " : "FAIL ") << check.name << '\n';
    }
  }
  if (o.json) {
    json doc{{"schema", kSchemaVersion}, {"command", "selftest"}, {"checks", results}, {"ok", all}};
    emit(out, doc);
  }
  return all ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic computation in free metabelian Lie algebras", "metabelian"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--n", o.n, "rank (number of generators)")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    sub->add_flag("--json", o.json, "emit JSON");
    commands.emplace_back(sub, handler);
    return sub;
  };
  auto with_input = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", o.input, what)->required();
    return sub;
  };

  auto* nf = with_input(add("normal-form", "canonical basis form of a Lie expression", cmd_normal_form),
                        "Lie expression");
  nf->add_option("--perm", o.perm, "apply a permutation in cycle notation, e.g. \"(1 2)\"");
  auto* em = with_input(add("embed", "image in the abelian wreath product", cmd_embed),
                        "Lie expression");
  em->add_option("--perm", o.perm, "apply a permutation in cycle notation");
  with_input(add("preimage", "Lie element with a given wreath image", cmd_preimage),
             "wreath element, e.g. \"u2*(x1) - u1*(x2)\"");
  with_input(add("is-invariant", "test S_n-invariance", cmd_is_invariant), "Lie expression");
  with_input(add("reynolds", "average over S_n", cmd_reynolds), "Lie expression");
  add("generators", "module generators h_ij in the wreath product", cmd_generators);
  auto* gl = add("generator-lie", "h_ij as an element of F_n", cmd_generator_lie);
  gl->add_option("--i", o.i, "first index")->required();
  gl->add_option("--j", o.j, "second index")->required();
  auto* dec = with_input(add("decompose", "decompose an invariant over the h_ij", cmd_decompose),
                         "Lie expression");
  dec->add_option("--max-degree", o.max_degree, "refuse inputs above this degree");
  with_input(add("symmetrize-poly", "symmetrize a polynomial and expand it in e_1..e_n",
                 cmd_symmetrize_poly),
             "polynomial");
  auto* ib = add("invariant-basis", "basis of a homogeneous component of F_n^{S_n}",
                 cmd_invariant_basis);
  ib->add_option("--degree", o.degree, "homogeneous degree")
      ->required()
      ->check(CLI::PositiveNumber);
  ib->add_option("--max-degree", o.max_degree, "refuse degrees above this bound");
  add("verify-relations", "check k*h_ij*e_k - j*h_ik*e_j + i*h_jk*e_i = 0", cmd_verify_relations);
  add("selftest", "check the known n=2 and n=3 generators", cmd_selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(o, out);
    }
  } catch (const metabelian::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvarianceError& e) {
    err << "not invariant: " << e.what() << '\n';
    return kExitDomain;
  } catch (const MembershipError& e) {
    err << "not in image: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace metabelian::cli
