#include "cli.hpp"

#include <functional>
#include <map>

#include "homconf/complex.hpp"
#include "homconf/deformation.hpp"
#include "homconf/errors.hpp"
#include "homconf/operator.hpp"

namespace homconf::cli {

std::string version() { return HOMCONF_VERSION; }

std::string Command::echo() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  if (module) out += " --module " + *module;
  if (p) out += " --p " + std::to_string(*p);
  if (q) out += " --q " + rational_to_string(*q);
  if (through) out += " --through " + std::to_string(*through);
  if (max_deg) out += " --max-deg " + std::to_string(*max_deg);
  if (!coeffs.empty()) {
    out += " --coeffs ";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) out += ',';
      out += rational_to_string(coeffs[i]);
    }
  }
  return out;
}

bool ReportDocument::passed() const {
  if (error) return false;
  for (const auto& c : checks) {
    if (c.status() == Status::fail) return false;
  }
  return true;
}

int ReportDocument::exit_code() const {
  if (error) return 2;
  return passed() ? 0 : 1;
}

ReportDocument input_error(const Command& command, const std::string& message) {
  ReportDocument doc;
  doc.version = version();
  doc.command = command.echo();
  doc.error = message;
  return doc;
}

namespace {

/// The algebra, module and source/target bases a named cochain lives on.
struct CochainContext {
  const HomLieConformalAlgebra* algebra;
  Representation module;
  std::vector<std::string> source_basis;
  std::vector<std::string> target_basis;
  Space source;
  Space target;
};

CochainContext context_of(const Workspace& ws, const NamedCochain& c) {
  CochainContext ctx;
  switch (c.value.kind()) {
    case CochainKind::l_to_l:
      ctx.algebra = &ws.algebra(c.source);
      ctx.module = adjoint_rep(*ctx.algebra, 0);
      ctx.source = space_of(*ctx.algebra);
      ctx.target = ctx.source;
      break;
    case CochainKind::l_to_m:
      ctx.algebra = &ws.algebra(c.source);
      ctx.module = ws.module(c.target);
      ctx.source = space_of(*ctx.algebra);
      ctx.target = space_of(ctx.module);
      break;
    case CochainKind::m_to_l:
      ctx.algebra = &ws.algebra(c.target);
      ctx.module = ws.module(c.source);
      ctx.source = space_of(ctx.module);
      ctx.target = space_of(*ctx.algebra);
      break;
    case CochainKind::v_to_v:
      throw KindMismatch("cochain '" + c.name + "' has an unsupported kind");
  }
  ctx.source_basis = ctx.source.basis;
  ctx.target_basis = ctx.target.basis;
  return ctx;
}

Result cochain_result(const std::string& title, const Cochain& c,
                      const std::vector<std::string>& source,
                      const std::vector<std::string>& target) {
  Result r;
  r.title = title;
  r.facts.emplace_back("degree", std::to_string(c.degree()));
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    ResultEntry e;
    for (std::size_t k : c.tuple_of(flat)) e.tuple.push_back(source[k]);
    for (const auto& p : c.entry(flat)) e.value.push_back(p.to_string());
    e.rendered = format_vector(c.entry(flat), target);
    r.entries.push_back(std::move(e));
  }
  return r;
}

Result map_result(const std::string& title, const DMatrix& m,
                  const std::vector<std::string>& source, const std::vector<std::string>& target) {
  return cochain_result(title, Cochain::from_map(m, CochainKind::m_to_l), source, target);
}

void take(ReportDocument& doc, Report report) {
  doc.subject = std::move(report.subject);
  for (auto& c : report.checks) doc.checks.push_back(std::move(c));
}

void append(ReportDocument& doc, const Report& report, const std::string& prefix) {
  for (const auto& c : report.checks) {
    Check copy = c;
    copy.id = prefix + copy.id;
    doc.checks.push_back(std::move(copy));
  }
}

void expect_args(const Command& cmd, std::size_t n) {
  if (cmd.words.size() != n) {
    throw Error("command '" + cmd.words.front() + "' takes " + std::to_string(n - 1) +
                " argument(s)");
  }
}

const NamedMap& endomorphism(const Workspace& ws, const std::string& name) {
  const NamedMap& m = ws.map(name);
  if (!m.is_endomorphism()) throw KindMismatch("map '" + name + "' is not an endomorphism");
  return m;
}

/// The module a map is checked against, honouring --module.
Representation module_for(const Workspace& ws, const NamedMap& m, const Command& cmd) {
  if (!cmd.module) return ws.source_module(m);
  const Representation& r = ws.module(*cmd.module);
  if (r.algebra != m.target) {
    throw KindMismatch("module '" + r.name + "' is not over '" + m.target + "'");
  }
  if (r.rank() != m.matrix.cols()) {
    throw RankMismatch("map '" + m.name + "' does not fit module '" + r.name + "'");
  }
  return r;
}

std::string map_subject(const NamedMap& m, const Representation& r) {
  return m.name + " : " + r.name + " -> " + m.target;
}

ReportDocument dispatch(const Command& cmd, const Workspace& ws) {
  ReportDocument doc;
  doc.version = version();
  doc.command = cmd.echo();
  if (cmd.words.empty()) throw Error("no command given");
  const std::string& head = cmd.words[0];

  if (head == "check") {
    if (cmd.words.size() < 2) throw Error("'check' needs a subject kind");
    const std::string& what = cmd.words[1];
    expect_args(cmd, 3);
    const std::string& name = cmd.words[2];
    if (what == "algebra") {
      take(doc, check_hom_lie(ws.algebra(name)));
    } else if (what == "rep") {
      const Representation& r = ws.module(name);
      take(doc, check_representation(ws.algebra(r.algebra), r));
    } else if (what == "oop") {
      const NamedMap& m = ws.map(name);
      const Representation r = module_for(ws, m, cmd);
      take(doc, check_ooperator(ws.target_algebra(m), r, m.matrix));
      doc.subject = "O-operator " + map_subject(m, r);
    } else if (what == "rotabaxter") {
      if (!cmd.p || !cmd.q) throw Error("'check rotabaxter' needs --p and --q");
      const NamedMap& m = endomorphism(ws, name);
      take(doc, check_rota_baxter(ws.target_algebra(m), m.matrix, *cmd.p, *cmd.q));
    } else if (what == "nijenhuis") {
      const NamedMap& m = endomorphism(ws, name);
      take(doc, nijenhuis_check(ws.target_algebra(m), m.matrix));
    } else if (what == "cochain") {
      const NamedCochain& c = ws.cochain(name);
      const CochainContext ctx = context_of(ws, c);
      take(doc, check_cochain(c.value, ctx.source, ctx.target));
    } else {
      throw Error("unknown check kind '" + what + "'");
    }
  } else if (head == "cobound") {
    expect_args(cmd, 2);
    const NamedCochain& c = ws.cochain(cmd.words[1]);
    if (c.value.kind() == CochainKind::m_to_l) {
      throw KindMismatch("cochain '" + c.name + "' starts at a module; use deltaT");
    }
    const CochainContext ctx = context_of(ws, c);
    doc.subject = "coboundary of " + c.name;
    doc.results.push_back(cochain_result("d(" + c.name + ")",
                                         coboundary(*ctx.algebra, ctx.module, c.value),
                                         ctx.source_basis, ctx.target_basis));
  } else if (head == "circle" || head == "nrbracket") {
    expect_args(cmd, 3);
    const NamedCochain& f = ws.cochain(cmd.words[1]);
    const NamedCochain& g = ws.cochain(cmd.words[2]);
    if (f.value.kind() != CochainKind::l_to_l || g.value.kind() != CochainKind::l_to_l ||
        f.source != g.source) {
      throw KindMismatch("both cochains must be endo-cochains of one algebra");
    }
    const HomLieConformalAlgebra& a = ws.algebra(f.source);
    const bool is_circle = head == "circle";
    const Cochain value =
        is_circle ? circle(f.value, g.value, a.alpha) : nr_bracket(f.value, g.value, a.alpha);
    doc.subject = (is_circle ? "circle product " : "Nijenhuis-Richardson bracket ") + f.name +
                  ", " + g.name;
    const std::string title =
        is_circle ? f.name + " o " + g.name : "[" + f.name + ", " + g.name + "]";
    doc.results.push_back(cochain_result(title, value, a.basis, a.basis));
  } else if (head == "mc") {
    expect_args(cmd, 2);
    const Representation& r = ws.module(cmd.words[1]);
    take(doc, mc_check(ws.algebra(r.algebra), r));
  } else if (head == "gbracket") {
    expect_args(cmd, 3);
    const NamedCochain& f = ws.cochain(cmd.words[1]);
    const NamedCochain& g = ws.cochain(cmd.words[2]);
    if (f.value.kind() != CochainKind::m_to_l || g.value.kind() != CochainKind::m_to_l ||
        f.source != g.source) {
      throw KindMismatch("both cochains must run from one module to its algebra");
    }
    const CochainContext ctx = context_of(ws, f);
    doc.subject = "graded bracket " + f.name + ", " + g.name;
    doc.results.push_back(cochain_result("{{" + f.name + ", " + g.name + "}}",
                                         graded_bracket(*ctx.algebra, ctx.module, f.value, g.value),
                                         ctx.source_basis, ctx.target_basis));
  } else if (head == "deltaT") {
    expect_args(cmd, 3);
    const NamedMap& m = ws.map(cmd.words[1]);
    const NamedCochain& c = ws.cochain(cmd.words[2]);
    if (c.value.kind() != CochainKind::m_to_l || c.source != m.source || c.target != m.target) {
      throw KindMismatch("cochain '" + c.name + "' does not match map '" + m.name + "'");
    }
    const Representation r = ws.source_module(m);
    const auto& a = ws.target_algebra(m);
    doc.subject = "delta_T for " + map_subject(m, r);
    doc.results.push_back(cochain_result("delta_T(" + c.name + ")",
                                         delta_T(a, r, m.matrix, c.value), r.basis, a.basis));
  } else if (head == "prelie") {
    expect_args(cmd, 2);
    const NamedMap& m = ws.map(cmd.words[1]);
    const Representation r = ws.source_module(m);
    const auto& a = ws.target_algebra(m);
    if (!check_ooperator(a, r, m.matrix).passed()) {
      throw PreconditionFailed("map '" + m.name + "' is not an O-operator");
    }
    const HomPreLieConformalAlgebra p = pre_lie_from(a, r, m.matrix);
    take(doc, check_hom_pre_lie(p));
    append(doc, check_hom_lie(subadjacent(p)), "sub-");
    doc.results.push_back(cochain_result("product", Cochain::from_table(p.product,
                                                                         CochainKind::l_to_l),
                                         p.basis, p.basis));
  } else if (head == "deform") {
    if (cmd.words.size() < 2) throw Error("'deform' needs an action");
    const std::string& what = cmd.words[1];
    expect_args(cmd, 3);
    const NamedDeformation& d = ws.deformation(cmd.words[2]);
    const DeformationSequence s = ws.sequence(d.name);
    const NamedMap& base = ws.map(d.maps.front());
    const Representation r = ws.source_module(base);
    const auto& a = ws.target_algebra(base);
    if (what == "check") {
      take(doc, check_order_k(a, r, s, cmd.through));
    } else if (what == "obstruct") {
      const Cochain ob = obstruction(a, r, s);
      doc.subject = "obstruction of " + s.name;
      Check cocycle;
      cocycle.id = "cocycle";
      cocycle.description = "delta_T(Ob) = 0";
      const Cochain d_ob = delta_T(a, r, s.maps.front(), ob);
      for (std::size_t flat = 0; flat < d_ob.size(); ++flat) {
        std::vector<std::string> names;
        for (std::size_t k : d_ob.tuple_of(flat)) names.push_back(r.basis[k]);
        cocycle.record(std::move(names), d_ob.entry(flat), a.basis);
      }
      doc.checks.push_back(std::move(cocycle));
      doc.results.push_back(cochain_result("Ob", ob, r.basis, a.basis));
    } else if (what == "extend") {
      const unsigned max_deg = cmd.max_deg.value_or(2);
      const auto next = extend_order(a, r, s, max_deg);
      doc.subject = "extension of " + s.name;
      Check found;
      found.id = "extendable";
      found.description =
          "delta_T(X) = Ob has a solution of d-degree <= " + std::to_string(max_deg);
      found.record_flag({s.name}, next.has_value());
      doc.checks.push_back(std::move(found));
      if (next) {
        doc.results.push_back(
            map_result("T" + std::to_string(s.order() + 1), *next, r.basis, a.basis));
      }
    } else {
      throw Error("unknown deform action '" + what + "'");
    }
  } else if (head == "search-oop") {
    expect_args(cmd, 2);
    const Representation& r = ws.module(cmd.words[1]);
    const auto& a = ws.algebra(r.algebra);
    const SearchResult found = search_ooperators(a, r, cmd.max_deg.value_or(0), cmd.coeffs);
    doc.subject = "O-operators " + r.name + " -> " + a.name;
    Result summary;
    summary.title = "search";
    summary.facts.emplace_back("candidates", std::to_string(found.candidates));
    summary.facts.emplace_back("found", std::to_string(found.maps.size()));
    for (const auto& e : found.constraints.equations) {
      summary.entries.push_back({{}, {}, e.to_string(found.constraints.unknowns)});
    }
    doc.results.push_back(std::move(summary));
    for (std::size_t i = 0; i < found.maps.size(); ++i) {
      doc.results.push_back(
          map_result("solution " + std::to_string(i + 1), found.maps[i], r.basis, a.basis));
    }
  } else {
    throw Error("unknown command '" + head + "'");
  }
  return doc;
}

}  // namespace

ReportDocument run(const Command& command, const Workspace& ws) {
  try {
    return dispatch(command, ws);
  } catch (const Error& e) {
    return input_error(command, e.what());
  }
}

ReportDocument run(const Command& command, std::string_view workspace_text) {
  Workspace ws;
  try {
    ws = parse_workspace(workspace_text);
  } catch (const Error& e) {
    return input_error(command, e.what());
  }
  return run(command, ws);
}

}  // namespace homconf::cli
