#include "colorlie/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "colorlie/deformation.hpp"
#include "colorlie/io.hpp"
#include "colorlie/parallel.hpp"
#include "colorlie/poisson_star.hpp"
#include "json.hpp"

namespace colorlie::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  bool json = false;
  bool no_verify = false;
  int truncation = 2;
  int filtration = 4;
  std::string module = "adjoint";
  int threads = 1;
};

Json report_to_json(const VerificationReport& r) {
  Json out;
  out["ok"] = r.ok();
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back(Json{{"check", v.check}, {"location", v.location}, {"detail", v.detail}});
  out["violations"] = std::move(violations);
  out["notes"] = r.notes;
  return out;
}

std::string check_line(const VerificationReport& r) {
  if (r.ok()) return "valid";
  std::string out = std::to_string(r.violations.size()) + " violation(s)";
  for (const auto& v : r.violations)
    out += "\n  [" + v.check + "] at " + v.location + ": " + v.detail;
  return out;
}

/// "(a,b) -> value; (c,d) -> value" for a 2-cochain with module rendering.
std::string cochain2_str(const ColorLieAlgebra& L, const Cochain& f, bool trivial_module) {
  if (f.values.empty()) return "0";
  std::string out;
  for (const auto& [tuple, value] : f.values) {
    if (!out.empty()) out += "; ";
    out += "(" + L.name(tuple[0]) + "," + L.name(tuple[1]) + ") -> ";
    if (trivial_module)
      out += value.empty() ? "0" : value.begin()->second.str();
    else
      out += L.vector_str(value);
  }
  return out;
}

// ---- tiny expression grammar: sums of '*'-joined factors; a factor is a
// ---- rational literal or a basis name with an optional ^power.

struct Term {
  Scalar coeff = Scalar(1);
  std::vector<int> letters;
};

std::vector<Term> parse_terms_expr(const ColorLieAlgebra& L, const std::string& text) {
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
  skip();
  if (pos == text.size()) throw Error("empty expression");
  int sign = 1;
  while (pos < text.size()) {
    skip();
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    }
    Term term;
    term.coeff = Scalar(sign);
    sign = 1;
    bool expect_factor = true;
    while (expect_factor) {
      skip();
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                   text[pos] == '_' || text[pos] == '/'))
        ++pos;
      if (pos == start) throw Error("expression syntax error near '" + text.substr(start) + "'");
      std::string tok = text.substr(start, pos - start);
      if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
        term.coeff *= Scalar::parse(tok, 1);
      } else {
        long power = 1;
        skip();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          skip();
          std::size_t ps = pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (ps == pos) throw Error("expression syntax error: missing exponent");
          power = std::stol(text.substr(ps, pos - ps));
        }
        int idx = L.index(tok);
        for (long k = 0; k < power; ++k) term.letters.push_back(idx);
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    terms.push_back(std::move(term));
    skip();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
      throw Error("expression syntax error near '" + text.substr(pos) + "'");
  }
  return terms;
}

UElement parse_u_expression(const ColorLieAlgebra& L, const EnvelopingAlgebra& U,
                            const std::string& text) {
  UElement out;
  ScalarRing ring;
  for (const auto& term : parse_terms_expr(L, text))
    u_axpy(ring, out, Scalar(1), U.normal_form(term.letters, term.coeff));
  return out;
}

SymElement parse_sym_expression(const ColorLieAlgebra& L, const std::string& text) {
  SymElement out;
  for (const auto& term : parse_terms_expr(L, text)) {
    SymElement m;
    m.terms.emplace(PBWMonomial(), term.coeff);
    for (int letter : term.letters) {
      SymElement next;
      next.terms.emplace(PBWMonomial({letter}), Scalar(1));
      m = sym_multiply(L, m, next);
    }
    sym_axpy(out, Scalar(1), m);
  }
  return out;
}

struct LoadResult {
  AlgebraDefinition def;
  int exit_code = 0;  // nonzero: already reported
};

LoadResult load_checked(const Options& opt, std::ostream& out) {
  LoadResult r{load_definition(opt.file), 0};
  if (opt.no_verify) return r;
  const auto& L = r.def.algebra;
  VerificationReport combined;
  combined.merge(L.bicharacter().verify());
  combined.merge(L.verify_antisymmetry());
  combined.merge(L.verify_jacobi(opt.threads));
  combined.notes.clear();
  if (!combined.ok()) {
    if (opt.json) {
      Json j;
      j["error"] = "validation";
      j["algebra"] = r.def.name;
      j["report"] = report_to_json(combined);
      out << j.dump(2) << "\n";
    } else {
      out << "algebra failed validation:\n" << combined.str() << "\n";
    }
    r.exit_code = 1;
  }
  return r;
}

std::string algebra_header(const AlgebraDefinition& def) {
  return "algebra: " + def.name + " (dim " + std::to_string(def.algebra.dim()) + ")";
}

int cmd_verify(const Options& opt, std::ostream& out) {
  auto def = load_definition(opt.file);
  const auto& L = def.algebra;
  auto bc = L.bicharacter().verify();
  auto anti = L.verify_antisymmetry();
  auto jac = L.verify_jacobi(opt.threads);
  bool valid = bc.ok() && anti.ok() && jac.ok();
  if (opt.json) {
    Json j;
    j["command"] = "verify";
    j["algebra"] = def.name;
    j["dim"] = L.dim();
    j["checks"] = Json{{"bicharacter", report_to_json(bc)},
                       {"antisymmetry", report_to_json(anti)},
                       {"jacobi", report_to_json(jac)}};
    j["valid"] = valid;
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(def) << "\n";
    out << "bicharacter: " << check_line(bc) << "\n";
    out << "antisymmetry: " << check_line(anti) << "\n";
    out << "jacobi: " << check_line(jac) << "\n";
    out << "result: " << (valid ? "valid" : "invalid") << "\n";
  }
  return valid ? 0 : 1;
}

int cmd_cohomology(const Options& opt, int arity, const std::string& gamma_text,
                   std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  Module M = opt.module == "trivial" ? Module::trivial(L) : Module::adjoint(L);

  std::vector<GroupElement> degrees;
  if (gamma_text == "all")
    degrees = occurring_degrees(L, M, arity);
  else
    degrees.push_back(L.group().parse(gamma_text));

  std::vector<CohomologyDims> rows(degrees.size());
  parallel_for(degrees.size(), opt.threads,
               [&](std::size_t i) { rows[i] = cohomology_dims(L, M, arity, degrees[i]); });

  if (opt.json) {
    Json j;
    j["command"] = "cohomology";
    j["algebra"] = loaded.def.name;
    j["module"] = opt.module;
    Json table = Json::array();
    for (std::size_t i = 0; i < degrees.size(); ++i)
      table.push_back(Json{{"n", arity},
                           {"gamma", L.group().str(degrees[i])},
                           {"dim_cochains", rows[i].dim_cochains},
                           {"dim_cocycles", rows[i].dim_cocycles},
                           {"dim_coboundaries", rows[i].dim_coboundaries},
                           {"dim_cohomology", rows[i].dim_cohomology}});
    j["rows"] = std::move(table);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "module: " << opt.module << "\n";
    out << "n gamma dimC dimZ dimB dimH\n";
    for (std::size_t i = 0; i < degrees.size(); ++i)
      out << arity << " " << L.group().str(degrees[i]) << " " << rows[i].dim_cochains << " "
          << rows[i].dim_cocycles << " " << rows[i].dim_coboundaries << " "
          << rows[i].dim_cohomology << "\n";
  }
  return 0;
}

int cmd_rigid(const Options& opt, std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  auto result = is_graded_rigid(L);
  if (opt.json) {
    Json j;
    j["command"] = "rigid";
    j["algebra"] = loaded.def.name;
    j["dim_h2"] = static_cast<long>(result.witnesses.size());
    j["rigid"] = result.rigid;
    Json ws = Json::array();
    for (const auto& w : result.witnesses) ws.push_back(cochain2_str(L, w, false));
    j["witnesses"] = std::move(ws);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "dim H^2(L,L)_e = " << result.witnesses.size() << "\n";
    out << "rigid: " << (result.rigid ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < result.witnesses.size(); ++i)
      out << "witness " << i + 1 << ": " << cochain2_str(L, result.witnesses[i], false) << "\n";
  }
  return 0;
}

int cmd_pbw_normalize(const Options& opt, const std::string& word, std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  EnvelopingAlgebra U(L, ScalarRing{});
  UElement nf = parse_u_expression(L, U, word);
  if (opt.json) {
    Json j;
    j["command"] = "pbw-normalize";
    j["algebra"] = loaded.def.name;
    j["input"] = word;
    j["normal_form"] = u_str(L, nf);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "word: " << word << "\n";
    out << "normal form: " << u_str(L, nf) << "\n";
  }
  return 0;
}

int cmd_multiply(const Options& opt, const std::string& left, const std::string& right,
                 std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  EnvelopingAlgebra U(L, ScalarRing{});
  UElement u = parse_u_expression(L, U, left);
  UElement v = parse_u_expression(L, U, right);
  UElement product = U.multiply(u, v);
  if (opt.json) {
    Json j;
    j["command"] = "multiply";
    j["algebra"] = loaded.def.name;
    j["left"] = u_str(L, u);
    j["right"] = u_str(L, v);
    j["product"] = u_str(L, product);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "left: " << u_str(L, u) << "\n";
    out << "right: " << u_str(L, v) << "\n";
    out << "product: " << u_str(L, product) << "\n";
  }
  return 0;
}

Json pi_tables_json(const ColorLieAlgebra& L, const DeformedMultiplication& dm) {
  Json tables = Json::array();
  for (int r = 1; r <= dm.trunc(); ++r) {
    Json entries = Json::array();
    HCochain layer = dm.pi_as_hcochain(r);
    for (const auto& [tuple, value] : layer.values)
      entries.push_back(Json{{"left", monomial_str(L, tuple[0])},
                             {"right", monomial_str(L, tuple[1])},
                             {"value", u_str(L, value)}});
    tables.push_back(Json{{"order", r}, {"entries", std::move(entries)}});
  }
  return tables;
}

int cmd_central_extend(const Options& opt, std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  if (!loaded.def.cocycle) throw Error("definition has no cocycle section");
  const Cochain& omega = *loaded.def.cocycle;

  auto ext = central_extension(L, omega);
  auto everify = ext.algebra.verify_antisymmetry();
  everify.merge(ext.algebra.verify_jacobi(opt.threads));

  Module triv = Module::trivial(L);
  bool class_zero = true;
  for (const auto& c : class_coordinates(L, triv, omega))
    if (!c.is_zero()) class_zero = false;

  auto dm = central_extension_deformation(L, omega, opt.filtration, opt.truncation);
  bool identity_ok = central_identity_defects(dm, omega).empty();
  bool assoc_ok = order_associativity_defects(dm).empty();
  TruncatedUView view(L, opt.filtration);
  bool cocycle_ok = hochschild_cocycle_defects(view, dm.pi_as_hcochain(1)).empty();
  bool trivial1 = order1_trivial(view, dm);
  bool ok = everify.ok() && identity_ok && assoc_ok && cocycle_ok;

  if (opt.json) {
    Json j;
    j["command"] = "central-extend";
    j["algebra"] = loaded.def.name;
    j["cocycle"] = cochain2_str(L, omega, true);
    j["cocycle_class_zero"] = class_zero;
    j["extension_dim"] = ext.algebra.dim();
    j["central_element"] = ext.c_name;
    j["extension_valid"] = everify.ok();
    j["filtration"] = opt.filtration;
    j["truncation"] = opt.truncation;
    j["identity_holds"] = identity_ok;
    j["associativity_exact"] = assoc_ok;
    j["pi1_hochschild_cocycle"] = cocycle_ok;
    j["order1_trivial"] = trivial1;
    j["pi"] = pi_tables_json(L, dm);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "cocycle: " << cochain2_str(L, omega, true) << "\n";
    out << "cocycle class: " << (class_zero ? "zero (deformation may be trivial)" : "nonzero")
        << "\n";
    out << "extension: dim " << ext.algebra.dim() << " with central " << ext.c_name << "\n";
    out << "extension verify: " << check_line(everify) << "\n";
    out << "pipeline (filtration " << opt.filtration << ", truncation " << opt.truncation
        << "):\n";
    out << "identity omega(X,Y)*1 = pi_1(X,Y) - eps(X,Y)*pi_1(Y,X): "
        << (identity_ok ? "holds" : "fails") << "\n";
    out << "order-by-order associativity: " << (assoc_ok ? "exact" : "defective") << "\n";
    out << "pi_1 is a hochschild 2-cocycle: " << (cocycle_ok ? "true" : "false") << "\n";
    out << "order-1 trivial: " << (trivial1 ? "true" : "false") << "\n";
    out << "result: " << (ok ? "ok" : "failed") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_deform(const Options& opt, std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  if (loaded.def.deformation.empty()) throw Error("definition has no deformation section");

  auto mu = make_deformed_bracket(L, opt.truncation, loaded.def.deformation);
  auto defects = deformation_jacobi_defects(L, mu);
  if (!defects.empty()) {
    if (opt.json) {
      Json j;
      j["command"] = "deform";
      j["algebra"] = loaded.def.name;
      Json ds = Json::array();
      for (const auto& d : defects) {
        std::string loc = "(";
        for (std::size_t t = 0; t < d.triple.size(); ++t)
          loc += (t ? "," : "") + L.name(d.triple[t]);
        ds.push_back(Json{{"order", d.order},
                          {"triple", loc + ")"},
                          {"defect", L.vector_str(d.defect)}});
      }
      j["jacobi_defects"] = std::move(ds);
      out << j.dump(2) << "\n";
    } else {
      out << algebra_header(loaded.def) << "\n";
      out << "jacobi defects mod t^" << opt.truncation + 1 << ": " << defects.size() << "\n";
      for (const auto& d : defects) {
        out << "  order " << d.order << " at (";
        for (std::size_t t = 0; t < d.triple.size(); ++t)
          out << (t ? "," : "") << L.name(d.triple[t]);
        out << "): " << L.vector_str(d.defect) << "\n";
      }
      out << "result: failed\n";
    }
    return 1;
  }

  auto dm = extend_deformation_to_u(L, mu, opt.filtration, opt.truncation);
  EnvelopingAlgebra U(L, ScalarRing{});
  bool pi0_ok = true;
  for (const auto& a : dm.basis()) {
    for (const auto& b : dm.basis()) {
      if (a.length() + b.length() > dm.cutoff()) continue;
      std::vector<int> word = a.letters();
      word.insert(word.end(), b.letters().begin(), b.letters().end());
      if (dm.pi(0, a, b) != U.normal_form(word, Scalar(1))) pi0_ok = false;
    }
  }
  bool assoc_ok = order_associativity_defects(dm).empty();
  bool identity_ok = antisymmetrization_defects(dm, mu.mu[1]).empty();
  TruncatedUView view(L, opt.filtration);
  bool cocycle_ok = hochschild_cocycle_defects(view, dm.pi_as_hcochain(1)).empty();
  bool trivial1 = order1_trivial(view, dm);
  bool ok = pi0_ok && assoc_ok && identity_ok && cocycle_ok;

  if (opt.json) {
    Json j;
    j["command"] = "deform";
    j["algebra"] = loaded.def.name;
    j["jacobi_defects"] = Json::array();
    j["filtration"] = opt.filtration;
    j["truncation"] = opt.truncation;
    j["pi0_undeformed"] = pi0_ok;
    j["associativity_exact"] = assoc_ok;
    j["identity_holds"] = identity_ok;
    j["pi1_hochschild_cocycle"] = cocycle_ok;
    j["order1_trivial"] = trivial1;
    j["pi"] = pi_tables_json(L, dm);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "jacobi defects mod t^" << opt.truncation + 1 << ": none\n";
    out << "pipeline (filtration " << opt.filtration << ", truncation " << opt.truncation
        << "):\n";
    out << "pi_0 equals the undeformed product: " << (pi0_ok ? "true" : "false") << "\n";
    out << "order-by-order associativity: " << (assoc_ok ? "exact" : "defective") << "\n";
    out << "identity mu_1(X,Y) = pi_1(X,Y) - eps(X,Y)*pi_1(Y,X): "
        << (identity_ok ? "holds" : "fails") << "\n";
    out << "pi_1 is a hochschild 2-cocycle: " << (cocycle_ok ? "true" : "false") << "\n";
    out << "order-1 trivial: " << (trivial1 ? "true" : "false") << "\n";
    out << "result: " << (ok ? "ok" : "failed") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_star(const Options& opt, const std::string& left, const std::string& right, int trunc,
             std::ostream& out) {
  auto loaded = load_checked(opt, out);
  if (loaded.exit_code) return loaded.exit_code;
  const auto& L = loaded.def.algebra;
  SymElement u = parse_sym_expression(L, left);
  SymElement v = parse_sym_expression(L, right);
  StarSeries series = star_product(L, u, v, trunc);
  if (opt.json) {
    Json j;
    j["command"] = "star";
    j["algebra"] = loaded.def.name;
    j["u"] = sym_str(L, u);
    j["v"] = sym_str(L, v);
    j["truncation"] = trunc;
    j["series"] = star_series_str(L, series);
    Json comps = Json::array();
    for (int n = 0; n <= trunc; ++n) comps.push_back(sym_str(L, series.at(n)));
    j["components"] = std::move(comps);
    out << j.dump(2) << "\n";
  } else {
    out << algebra_header(loaded.def) << "\n";
    out << "u: " << sym_str(L, u) << "\n";
    out << "v: " << sym_str(L, v) << "\n";
    out << "u * v = " << star_series_str(L, series) << "\n";
    for (int n = 0; n <= trunc; ++n) out << "t^" << n << ": " << sym_str(L, series.at(n)) << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for color Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough(true);

  Options opt;
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_flag("--no-verify", opt.no_verify, "skip axiom validation on load");
  app.add_option("--truncation", opt.truncation, "t-series truncation order N")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--filtration", opt.filtration, "PBW filtration cutoff d")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--module", opt.module, "coefficient module")
      ->check(CLI::IsMember({"adjoint", "trivial"}));
  app.add_option("--threads", opt.threads, "worker threads for parallel sections")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the color Lie axioms");
  verify->add_option("file", opt.file, "algebra definition")->required();

  int arity = 2;
  std::string gamma = "e";
  auto* cohomology = app.add_subcommand("cohomology", "graded cohomology dimensions");
  cohomology->add_option("n", arity, "cochain arity")->required();
  cohomology->add_option("gamma", gamma, "degree slice or 'all'")->required();
  cohomology->add_option("file", opt.file, "algebra definition")->required();

  auto* rigid = app.add_subcommand("rigid", "graded rigidity via H^2(L,L)_e");
  rigid->add_option("file", opt.file, "algebra definition")->required();

  std::string word, left, right;
  auto* pbw = app.add_subcommand("pbw-normalize", "PBW normal form of a word");
  pbw->add_option("file", opt.file, "algebra definition")->required();
  pbw->add_option("word", word, "word, e.g. \"f*e\" or \"y*x^2\"")->required();

  auto* multiply = app.add_subcommand("multiply", "product in U(g)");
  multiply->add_option("file", opt.file, "algebra definition")->required();
  multiply->add_option("u", left, "left factor expression")->required();
  multiply->add_option("v", right, "right factor expression")->required();

  auto* extend = app.add_subcommand("central-extend",
                                    "central extension and its U(g) deformation");
  extend->add_option("file", opt.file, "algebra definition with a cocycle section")->required();

  auto* deform = app.add_subcommand("deform", "extend a bracket deformation to U(g)");
  deform->add_option("file", opt.file, "algebra definition with a deformation section")
      ->required();
  deform->add_option("N", opt.truncation, "truncation order");
  deform->add_option("d", opt.filtration, "filtration cutoff");

  int star_trunc = 2;
  auto* star = app.add_subcommand("star", "PBW star product on gr U(g)");
  star->add_option("file", opt.file, "algebra definition")->required();
  star->add_option("u", left, "left gr element")->required();
  star->add_option("v", right, "right gr element")->required();
  star->add_option("N", star_trunc, "truncation order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out);
    if (cohomology->parsed()) return cmd_cohomology(opt, arity, gamma, out);
    if (rigid->parsed()) return cmd_rigid(opt, out);
    if (pbw->parsed()) return cmd_pbw_normalize(opt, word, out);
    if (multiply->parsed()) return cmd_multiply(opt, left, right, out);
    if (extend->parsed()) return cmd_central_extend(opt, out);
    if (deform->parsed()) return cmd_deform(opt, out);
    if (star->parsed()) return cmd_star(opt, left, right, star_trunc, out);
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace colorlie::cli
