// Acceptance suite: one PASS/FAIL line per criterion, with its sub-items.
//
// Usage: homconf_acceptance [--known-failures N,M,...]
// Without the flag the exit code is 0 only if every criterion passes. With it,
// the exit code is 0 only if the failing criteria are exactly the listed ones.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../../tools/cli.hpp"
#include "fixtures.hpp"
#include "homconf/deformation.hpp"
#include "homconf/errors.hpp"
#include "homconf/workspace.hpp"

using namespace homconf;
using namespace homconf::testing;

namespace {

struct Item {
  std::string what;
  bool ok;
  std::string note;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Item> items;

  bool passed() const {
    for (const auto& i : items) {
      if (!i.ok) return false;
    }
    return !items.empty();
  }
  void add(std::string what, bool ok, std::string note = {}) {
    items.push_back({std::move(what), ok, std::move(note)});
  }
};

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HOMCONF_TEST_DATA_DIR) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Cochain skew(Rng& rng, unsigned degree, std::size_t srank, std::size_t trank, CochainKind kind,
             unsigned max_deg) {
  return antisymmetrize(random_cochain(rng, degree, srank, trank, kind, max_deg));
}

std::string pair_note(unsigned a, unsigned b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// ---- 1

Criterion axioms() {
  Criterion c{1, "axioms of the fixtures and of the mutated fixtures", {}};
  c.add("Vir passes", check_hom_lie(vir()).passed());
  Rng rng(1001);
  bool ab_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    ab_ok = ab_ok && check_hom_lie(ab(n)).passed();
    ab_ok = ab_ok && check_hom_lie(ab(n, random_map(rng, n, n, 1))).passed();
  }
  c.add("Ab(n) passes for n <= 3", ab_ok);

  const Workspace cb = parse_workspace(read_data("const_bracket.hlc"));
  const Report bad = check_hom_lie(cb.algebra("bad"));
  c.add("constant bracket fails skew with witness 2e",
        !bad.passed() && first_witness(bad, "skew") == "(2)*e", first_witness(bad, "skew"));

  const Workspace sq = parse_workspace(read_data("square_action.hlc"));
  const Report rep = check_representation(sq.algebra("vir"), sq.module("B"));
  const Check* rc = rep.find("rep");
  const bool witness = rc != nullptr && !rc->witnesses.empty() &&
                       rc->witnesses.front().value == PolyVector{P("(l1 - l2)*(l1 + l2)^2")};
  c.add("action l^2 f fails with witness (l1 - l2)(l1 + l2)^2 f", !rep.passed() && witness,
        first_witness(rep, "rep"));
  return c;
}

// ---- 2

Criterion representations() {
  Criterion c{2, "representation family M(delta, c)", {}};
  const std::vector<std::pair<mpq_class, mpq_class>> params{
      {0, 0}, {1, 0}, {1, mpq_class(1, 2)}, {2, -3}};
  for (const auto& [delta, k] : params) {
    c.add("M(" + delta.get_str() + ", " + k.get_str() + ")",
          check_representation(vir(), module_m(delta, k)).passed());
  }
  return c;
}

// ---- 3

/// A random rank <= 2 algebra and module, perturbed half of the time.
std::pair<HomLieConformalAlgebra, Representation> perturbed(Rng& rng, int trial) {
  HomLieConformalAlgebra a = vir();
  Representation r = module_m(random_rational(rng), random_rational(rng));
  if (trial % 3 == 2) {
    DMatrix alpha(2, 2, {Q(1), Q(0), Q(0), Poly(random_rational(rng) + 2)});
    a = ab(2, alpha);
    r = trivial(a, 2, DMatrix::identity(2));
  }
  if (trial % 2 == 1) {
    const bool on_bracket = (trial / 2) % 2 == 0;
    const Poly bump = random_poly(rng, 1, 2, true) + Poly::variable(Var::l, 2);
    if (on_bracket) {
      a.bracket.at(0, 0)[0] += bump;
    } else {
      r.action.at(0, 0)[0] += bump;
    }
  }
  return {a, r};
}

Criterion maurer_cartan() {
  Criterion c{3, "Maurer-Cartan condition against the axioms", {}};
  Rng rng(1003);
  std::size_t agree = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::string note;
  const int trials = 24;
  for (int trial = 0; trial < trials; ++trial) {
    const auto [a, r] = perturbed(rng, trial);
    const bool axioms = check_hom_lie(a).passed() && check_representation(a, r).passed();
    const bool mc = mc_check(a, r).passed();
    if (axioms == mc) {
      ++agree;
    } else if (note.empty()) {
      note = "trial " + std::to_string(trial);
    }
    (axioms ? pass : fail) += 1;
  }
  c.add("agreement on " + std::to_string(trials) + " perturbations", agree == trials, note);
  c.add("both directions exercised", pass > 0 && fail > 0,
        std::to_string(pass) + " valid, " + std::to_string(fail) + " invalid");
  return c;
}

// ---- 4

Criterion coboundary_square() {
  Criterion c{4, "coboundary squares to zero", {}};
  Rng rng(1004);
  for (unsigned p = 0; p <= 1; ++p) {
    bool ok = true;
    for (const mpq_class k : {mpq_class(0), mpq_class(1)}) {
      const auto r = module_m(1, k);
      for (int trial = 0; trial < 20; ++trial) {
        const Cochain f = skew(rng, p, 1, 1, CochainKind::l_to_m, 2);
        ok = ok && coboundary(vir(), r, coboundary(vir(), r, f)).is_zero();
      }
    }
    c.add("degree " + std::to_string(p) + " to " + std::to_string(p + 2), ok);
  }
  return c;
}

// ---- 5

Criterion nr_suite() {
  Criterion c{5, "Nijenhuis-Richardson bracket", {}};
  const auto v = vir();
  const Cochain m = Cochain::from_table(v.bracket, CochainKind::l_to_l);
  c.add("[m_c, m_c] = 0", nr_bracket(m, m, v.alpha).is_zero());

  // The rank one algebra makes most brackets vanish; the rank two algebra
  // Vir + M(1, 1) keeps every identity below nontrivial.
  const std::vector<HomLieConformalAlgebra> algebras{vir(), vir_m()};
  Rng rng(1005);
  bool dm = true;
  std::size_t nonzero = 0;
  for (const auto& a : algebras) {
    const auto ad = adjoint_rep(a, 0);
    const Cochain ma = Cochain::from_table(a.bracket, CochainKind::l_to_l);
    for (unsigned n = 1; n <= 2; ++n) {
      for (int trial = 0; trial < 4; ++trial) {
        const Cochain f = skew(rng, n, a.rank(), a.rank(), CochainKind::l_to_l, 1);
        const mpq_class sign = n % 2 == 0 ? -1 : 1;
        const Cochain df = coboundary(a, ad, f);
        dm = dm && nr_bracket(ma, f, a.alpha) == sign * df;
        nonzero += df.is_zero() ? 0 : 1;
      }
    }
  }
  c.add("d_{m_c}(f) = (-1)^(1+n) delta(f), n in {1, 2}", dm && nonzero > 0,
        std::to_string(nonzero) + " nonzero");

  bool anti = true;
  nonzero = 0;
  for (const std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    const auto alpha = DMatrix::identity(n);
    for (unsigned p = 1; p <= 2; ++p) {
      for (unsigned q = 1; q <= 2; ++q) {
        const Cochain f = skew(rng, p, n, n, CochainKind::l_to_l, 1);
        const Cochain g = skew(rng, q, n, n, CochainKind::l_to_l, 1);
        const mpq_class sign = ((p - 1) * (q - 1)) % 2 == 0 ? -1 : 1;
        const Cochain fg = nr_bracket(f, g, alpha);
        anti = anti && fg == sign * nr_bracket(g, f, alpha);
        nonzero += fg.is_zero() ? 0 : 1;
      }
    }
  }
  c.add("graded antisymmetry", anti && nonzero > 0, std::to_string(nonzero) + " nonzero");

  // (-1)^(l-1) [delta f, g] + [f, delta g] = (-1)^(n+l) delta[f, g]
  std::string failing;
  nonzero = 0;
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned l = 1; l <= 2; ++l) {
      bool ok = true;
      for (const auto& a : algebras) {
        const auto ad = adjoint_rep(a, 0);
        for (int trial = 0; trial < 2; ++trial) {
          const Cochain f = skew(rng, n, a.rank(), a.rank(), CochainKind::l_to_l, 1);
          const Cochain g = skew(rng, l, a.rank(), a.rank(), CochainKind::l_to_l, 1);
          const mpq_class s_left = (l - 1) % 2 == 0 ? 1 : -1;
          const mpq_class s_right = (n + l) % 2 == 0 ? 1 : -1;
          const Cochain lhs = s_left * nr_bracket(coboundary(a, ad, f), g, a.alpha) +
                              nr_bracket(f, coboundary(a, ad, g), a.alpha);
          const Cochain rhs = s_right * coboundary(a, ad, nr_bracket(f, g, a.alpha));
          ok = ok && lhs == rhs;
          nonzero += rhs.is_zero() ? 0 : 1;
        }
      }
      if (!ok) failing += (failing.empty() ? "fails at (n, l) = " : ", ") + pair_note(n, l);
    }
  }
  c.add("compatibility of delta with the bracket, n, l <= 2", failing.empty() && nonzero > 0,
        failing.empty() ? std::to_string(nonzero) + " nonzero" : failing);
  return c;
}

// ---- 6

struct Context {
  HomLieConformalAlgebra a;
  Representation r;
};

std::array<bool, 4> predicates(const Context& ctx, const ModuleMap& t) {
  const Report rep = check_ooperator(ctx.a, ctx.r, t);
  const bool commutes = check_ok(rep, "commutes");
  const bool identity = commutes && check_ok(rep, "identity");
  const bool mc =
      commutes && graded_bracket(ctx.a, ctx.r, as_cochain(t), as_cochain(t)).is_zero();
  const bool graph = check_ok(rep, "graph");
  const bool nij = nijenhuis_check(semidirect(ctx.a, ctx.r), n_from_T(ctx.a, ctx.r, t)).passed();
  return {identity, mc, graph, nij};
}

Criterion characterization() {
  Criterion c{6, "O-operator characterizations agree", {}};
  Rng rng(1006);
  const std::vector<Context> contexts{{vir(), module_m(1, 0)}, {ab(2), trivial(ab(2), 2)}};
  for (const auto& ctx : contexts) {
    bool agree = true;
    std::size_t pass = 0;
    for (int trial = 0; trial < 20; ++trial) {
      ModuleMap t = random_map(rng, ctx.a.rank(), ctx.r.rank(), 1);
      if (ctx.a.rank() == 1 && trial % 4 == 0) t = scalar_map(random_rational(rng));
      const auto p = predicates(ctx, t);
      agree = agree && p[0] == p[1] && p[0] == p[2] && p[0] == p[3];
      pass += p[0] ? 1 : 0;
    }
    c.add("20 random maps over " + ctx.a.name + " on " + ctx.r.name, agree,
          std::to_string(pass) + " passing");
  }
  const auto t1p = predicates(contexts.front(), t1());
  c.add("T1 satisfies all four", t1p[0] && t1p[1] && t1p[2] && t1p[3]);
  const Context adj{vir(), adjoint_rep(vir(), 0)};
  bool negative = true;
  for (const long k : {1L, 2L, -3L}) {
    const auto p = predicates(adj, scalar_map(k));
    negative = negative && !p[0] && !p[1] && !p[2] && !p[3];
  }
  c.add("k id on the adjoint module fails all four", negative);
  return c;
}

// ---- 7

Criterion induced() {
  Criterion c{7, "structures induced by T1", {}};
  const auto a = vir();
  bool pre = true;
  bool sub = true;
  bool rho = true;
  for (const mpq_class k : {mpq_class(0), mpq_class(1), mpq_class(-1, 2)}) {
    const auto r = module_m(1, k);
    const auto p = pre_lie_from(a, r, t1());
    pre = pre && check_hom_pre_lie(p).passed();
    const auto s = subadjacent(p);
    sub = sub && s.bracket.at(0, 0) == V({"d + 2*l"}) && check_hom_lie(s).passed();
    const auto rt = rho_T(a, r, t1());
    rho = rho && rt.action.at(0, 0) == PolyVector{P("d + l") + Poly(k)} &&
          check_representation(s, rt).passed();
  }
  c.add("pre-Lie axioms", pre);
  c.add("sub-adjacent bracket (d + 2l) f", sub);
  c.add("rho_T = (d + l + c) e", rho);

  // {{T, P}} = (-1)^p modified_coboundary(P), over T1 and over f1, f2 -> e, 2e
  Rng rng(1007);
  std::string failing;
  std::size_t nonzero = 0;
  for (unsigned p = 1; p <= 2; ++p) {
    bool ok = true;
    for (int trial = 0; trial < 6; ++trial) {
      const bool wide = trial % 2 == 1;
      const auto r = wide ? module_mm(random_rational(rng)) : module_m(1, random_rational(rng));
      const ModuleMap t = wide ? t12() : t1();
      const Cochain f = skew(rng, p, r.rank(), 1, CochainKind::m_to_l, 2);
      const mpq_class sign = p % 2 == 0 ? 1 : -1;
      const Cochain tp = graded_bracket(a, r, as_cochain(t), f);
      ok = ok && tp == sign * modified_coboundary(a, r, t, f);
      nonzero += tp.is_zero() ? 0 : 1;
    }
    if (!ok) failing += (failing.empty() ? "fails at p = " : ", ") + std::to_string(p);
  }
  c.add("{{T, P}} = (-1)^p modified coboundary, p in {1, 2}", failing.empty() && nonzero > 0,
        failing.empty() ? std::to_string(nonzero) + " nonzero" : failing);

  bool square = true;
  for (const mpq_class k : {mpq_class(0), mpq_class(1)}) {
    const auto r = module_m(1, k);
    for (unsigned p = 0; p <= 1; ++p) {
      for (int trial = 0; trial < 5; ++trial) {
        const Cochain f = skew(rng, p, 1, 1, CochainKind::m_to_l, 2);
        square = square && delta_T(a, r, t1(), delta_T(a, r, t1(), f)).is_zero();
      }
    }
  }
  c.add("delta_T delta_T = 0", square);
  return c;
}

// ---- 8

Criterion deformations() {
  Criterion c{8, "deformations", {}};
  const auto a = vir();
  const auto r = module_m(1, 0);
  const DeformationSequence s{"S", {t1(), t1()}};
  const auto x = extend_order(a, r, s, 1);
  c.add("(T1, T1) passes through order 2", check_order_k(a, r, s, 2).passed());
  c.add("its obstruction is 0", obstruction(a, r, s).is_zero());
  c.add("extension returns 0", x.has_value() && x->is_zero());

  const Report d = check_linear_deformation(a, r, t1(), DMatrix(1, 1, {P("d")}));
  const Check* sq = d.find("square");
  c.add("D(f) = d e fails with witness -l(d + l)(d + 2l) e",
        sq != nullptr && !sq->witnesses.empty() &&
            sq->witnesses.front().value == PolyVector{P("-l*(d + l)*(d + 2*l)")},
        first_witness(d, "square"));

  Rng rng(1008);
  bool cocycle = true;
  std::size_t passing = 0;
  for (const mpq_class k : {mpq_class(0), mpq_class(2)}) {
    const auto rk = module_m(1, k);
    for (int trial = 0; trial < 10; ++trial) {
      const ModuleMap dm = trial % 2 == 0 ? random_cocycle_map(rng, a, rk, t1(), 1)
                                          : random_map(rng, 1, 1, 1);
      if (!check_linear_deformation(a, rk, t1(), dm).passed()) continue;
      ++passing;
      cocycle = cocycle && delta_T(a, rk, t1(), as_cochain(dm)).is_zero();
    }
  }
  c.add("passing linear deformations are cocycles", cocycle && passing > 0,
        std::to_string(passing) + " passing");

  bool ob = true;
  std::size_t nonzero = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const bool wide = trial % 2 == 1;
    const auto rk = wide ? module_mm(random_rational(rng)) : module_m(1, random_rational(rng));
    const ModuleMap t = random_rational(rng) * (wide ? t12() : t1());
    const DeformationSequence seq{"R", {t, random_cocycle_map(rng, a, rk, t, 2)}};
    const Cochain o = obstruction(a, rk, seq);
    ob = ob && delta_T(a, rk, t, o).is_zero();
    nonzero += o.is_zero() ? 0 : 1;
  }
  c.add("obstructions of random order 1 sequences are cocycles", ob && nonzero > 0,
        std::to_string(nonzero) + " nonzero");
  return c;
}

// ---- 9

Criterion search() {
  Criterion c{9, "bounded search", {}};
  const auto start = std::chrono::steady_clock::now();
  const std::vector<mpq_class> coeffs{-1, 0, mpq_class(1, 2), 1, 2};
  const SearchResult one = search_ooperators(vir(), module_m(1, 0), 0, coeffs);
  const SearchResult two = search_ooperators(vir(), module_m(2, 0), 0, coeffs);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.add("M(1, 0) gives 5 operators", one.maps.size() == 5,
        std::to_string(one.maps.size()) + " found");
  c.add("M(2, 0) gives only 0", two.maps.size() == 1 && two.maps.front().is_zero(),
        std::to_string(two.maps.size()) + " found");
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f s", seconds);
  c.add("runtime under 5 s", seconds < 5.0, buffer);
  return c;
}

// ---- 10

cli::Command words(std::vector<std::string> w) {
  cli::Command c;
  c.words = std::move(w);
  return c;
}

Criterion command_line() {
  Criterion c{10, "command-line reports", {}};
  const std::string corpus = read_data("corpus.hlc");
  struct Case {
    std::string file;
    cli::Command command;
    int exit;
  };
  std::vector<Case> cases{
      {"corpus.hlc", words({"check", "algebra", "vir"}), 0},
      {"corpus.hlc", words({"check", "rep", "Mc"}), 0},
      {"corpus.hlc", words({"check", "oop", "T1"}), 0},
      {"corpus.hlc", words({"check", "oop", "K"}), 1},
      {"corpus.hlc", words({"check", "cochain", "sym"}), 1},
      {"corpus.hlc", words({"cobound", "c1"}), 0},
      {"corpus.hlc", words({"mc", "M"}), 0},
      {"corpus.hlc", words({"gbracket", "p1", "p2"}), 0},
      {"corpus.hlc", words({"deform", "obstruct", "SD"}), 0},
      {"corpus.hlc", words({"cobound", "nope"}), 2},
      {"vir_m1.hlc", words({"check", "oop", "T1"}), 0},
      {"const_bracket.hlc", words({"check", "algebra", "bad"}), 1},
      {"square_action.hlc", words({"check", "rep", "B"}), 1},
      {"undefined_algebra.hlc", words({"check", "algebra", "vir"}), 2},
      {"bad_length.hlc", words({"check", "algebra", "vir"}), 2},
      {"bad_syntax.hlc", words({"check", "algebra", "vir"}), 2},
  };
  cli::Command m2 = words({"check", "oop", "T1"});
  m2.module = "M2";
  cases.push_back({"corpus.hlc", m2, 1});
  cli::Command through = words({"deform", "check", "SD"});
  through.through = 2;
  cases.push_back({"corpus.hlc", through, 1});

  bool deterministic = true;
  bool exits = true;
  bool agree = true;
  std::string exit_note;
  for (const auto& k : cases) {
    const std::string text = k.file == "corpus.hlc" ? corpus : read_data(k.file);
    const cli::ReportDocument doc = cli::run(k.command, text);
    const cli::ReportDocument again = cli::run(k.command, text);
    for (const auto format : {cli::Format::text, cli::Format::json}) {
      deterministic = deterministic && cli::render(doc, format, true) ==
                                           cli::render(again, format, true);
    }
    if (doc.exit_code() != k.exit) {
      exits = false;
      if (exit_note.empty()) exit_note = k.command.echo();
    }
    const auto json = nlohmann::json::parse(cli::render_json(doc, true));
    const std::string text_report = cli::render_text(doc, true);
    agree = agree && text_report.find("overall: " + json["overall"].get<std::string>() + "\n") !=
                         std::string::npos;
    if (!doc.error) {
      for (const auto& check : json["checks"]) {
        const std::string line = "check " + check["id"].get<std::string>() + ": " +
                                 check["status"].get<std::string>() + " ";
        agree = agree && text_report.find(line) != std::string::npos;
      }
    }
  }
  c.add("byte-identical repeated reports", deterministic);
  c.add("exit codes 0/1/2 over the corpus", exits, exit_note);
  c.add("JSON and text statuses agree", agree);
  return c;
}

std::set<int> parse_known(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) != "--known-failures" || i + 1 >= argc) continue;
    std::stringstream list(argv[++i]);
    std::string item;
    while (std::getline(list, item, ',')) {
      if (!item.empty()) known.insert(std::stoi(item));
    }
  }
  return known;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> known = parse_known(argc, argv);
  const std::vector<std::function<Criterion()>> suite{
      axioms, representations, maurer_cartan, coboundary_square, nr_suite,
      characterization, induced, deformations, search, command_line};

  const auto start = std::chrono::steady_clock::now();
  std::set<int> failed;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), "(aborted)", {}};
    try {
      c = suite[i]();
    } catch (const std::exception& e) {
      c.add("completed without an exception", false, e.what());
    }
    std::printf("criterion %d: %s  %s\n", c.number, c.passed() ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& item : c.items) {
      std::printf("  [%s] %s%s%s\n", item.ok ? "ok" : "FAIL", item.what.c_str(),
                  item.note.empty() ? "" : ": ", item.note.c_str());
    }
    if (!c.passed()) failed.insert(c.number);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string list;
  for (const int n : failed) list += (list.empty() ? "" : ",") + std::to_string(n);
  std::printf("failed criteria: %s\n", list.empty() ? "none" : list.c_str());
  std::printf("total time: %.2f s\n", seconds);
  if (failed == known) return EXIT_SUCCESS;
  std::string expected;
  for (const int n : known) expected += (expected.empty() ? "" : ",") + std::to_string(n);
  std::printf("expected failures: %s\n", expected.empty() ? "none" : expected.c_str());
  return EXIT_FAILURE;
}
