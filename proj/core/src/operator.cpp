#include "homconf/operator.hpp"

#include "homconf/errors.hpp"

namespace homconf {

namespace {

void require_map_shape(const HomLieConformalAlgebra& a, const Representation& r,
                       const ModuleMap& t) {
  validate_shape(a, r);
  if (t.rows() != a.rank() || t.cols() != r.rank()) {
    throw RankMismatch("map must be " + std::to_string(a.rank()) + "x" +
                       std::to_string(r.rank()) + " to send " + r.name + " to " + a.name);
  }
}

void require_ooperator(const HomLieConformalAlgebra& a, const Representation& r,
                       const ModuleMap& t) {
  if (!check_ooperator(a, r, t).passed()) {
    throw PreconditionFailed("the map is not an O-operator on " + a.name + " with respect to " +
                             r.name);
  }
}

const Poly& lam() {
  static const Poly l = Poly::variable(Var::l);
  return l;
}

}  // namespace

Cochain as_cochain(const ModuleMap& t) { return Cochain::from_map(t, CochainKind::m_to_l); }

BilinearTable ooperator_defect(const HomLieConformalAlgebra& a, const Representation& r,
                               const ModuleMap& x, const ModuleMap& y) {
  require_map_shape(a, r, x);
  require_map_shape(a, r, y);
  const std::size_t m = r.rank();
  const Poly dual = minus_d_minus_l();
  BilinearTable out(m, m, a.rank());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      PolyVector lhs = a.bracket.pair(x.column(i), y.column(j), lam());
      PolyVector inner = r.action.pair(y.column(i), PolyVector::unit(m, j), lam()) -
                         r.action.pair(y.column(j), PolyVector::unit(m, i), dual);
      out.at(i, j) = lhs - x.apply(inner);
    }
  }
  return out;
}

PolyVector commutation_defect(const HomLieConformalAlgebra& a, const Representation& r,
                              const ModuleMap& t, std::size_t column) {
  return a.alpha.apply(t.column(column)) - t.apply(r.beta.column(column));
}

Report check_ooperator(const HomLieConformalAlgebra& a, const Representation& r,
                       const ModuleMap& t) {
  require_map_shape(a, r, t);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  Report report;
  report.subject = "O-operator " + r.name + " -> " + a.name;
  Check& commutes = report.add("commutes", "alpha T = T beta");
  Check& identity = report.add(
      "identity", "[T(m)_l T(n)] - T(rho(T(m))_l n - rho(T(n))_{-d-l} m) = 0");
  Check& graph = report.add("graph", "graph of T is closed under the semidirect bracket and twist");
  Check& agreement = report.add("graph-agreement", "identity and graph criteria agree");

  for (std::size_t c = 0; c < m; ++c) {
    commutes.record({r.basis[c]}, commutation_defect(a, r, t, c), a.basis);
  }
  const BilinearTable defect = ooperator_defect(a, r, t, t);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      identity.record({r.basis[i], r.basis[j]}, defect.at(i, j), a.basis);
    }
  }

  // Graph criterion, computed directly in L + M.
  const HomLieConformalAlgebra v = semidirect_bracket(a, r);
  auto graph_point = [&](const PolyVector& mv) {
    PolyVector w(n + m);
    PolyVector tm = t.apply(mv);
    for (std::size_t k = 0; k < n; ++k) w[k] = tm[k];
    for (std::size_t k = 0; k < m; ++k) w[n + k] = mv[k];
    return w;
  };
  auto off_graph = [&](const PolyVector& w) {
    PolyVector l_part(n);
    PolyVector m_part(m);
    for (std::size_t k = 0; k < n; ++k) l_part[k] = w[k];
    for (std::size_t k = 0; k < m; ++k) m_part[k] = w[n + k];
    return l_part - t.apply(m_part);
  };
  for (std::size_t i = 0; i < m; ++i) {
    const PolyVector gi = graph_point(PolyVector::unit(m, i));
    graph.record({r.basis[i], "twist"}, off_graph(v.alpha.apply(gi)), a.basis);
    for (std::size_t j = 0; j < m; ++j) {
      const PolyVector gj = graph_point(PolyVector::unit(m, j));
      graph.record({r.basis[i], r.basis[j]}, off_graph(v.bracket.pair(gi, gj, lam())), a.basis);
    }
  }
  const bool identity_side = commutes.failures == 0 && identity.failures == 0;
  agreement.record_flag({}, identity_side == (graph.failures == 0));
  return report;
}

Report check_rota_baxter(const HomLieConformalAlgebra& a, const ModuleMap& op, unsigned p,
                         const mpq_class& q) {
  validate_shape(a);
  const std::size_t n = a.rank();
  if (op.rows() != n || op.cols() != n) throw RankMismatch("Rota-Baxter operator must be square");
  Report report;
  report.subject = "Rota-Baxter operator on " + a.name;
  Check& commutes = report.add("commutes", "R alpha = alpha R");
  Check& identity = report.add(
      "identity", "[R(x)_l R(y)] - R([a^p(R(x))_l y] + [x_l a^p(R(y))] + q[x_l y]) = 0");
  const DMatrix ap = a.alpha.pow(static_cast<int>(p));
  for (std::size_t c = 0; c < n; ++c) {
    commutes.record({a.basis[c]}, a.alpha.apply(op.column(c)) - op.apply(a.alpha.column(c)),
                    a.basis);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PolyVector ei = PolyVector::unit(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVector ej = PolyVector::unit(n, j);
      PolyVector lhs = a.bracket.pair(op.column(i), op.column(j), lam());
      PolyVector inner = a.bracket.pair(ap.apply(op.column(i)), ej, lam()) +
                         a.bracket.pair(ei, ap.apply(op.column(j)), lam()) +
                         Poly(q) * a.bracket.at(i, j);
      identity.record({a.basis[i], a.basis[j]}, lhs - op.apply(inner), a.basis);
    }
  }
  return report;
}

Cochain graded_bracket(const HomLieConformalAlgebra& a, const Representation& r,
                       const Cochain& f, const Cochain& g) {
  validate_shape(a, r);
  for (const Cochain* c : {&f, &g}) {
    if (c->kind() != CochainKind::m_to_l) {
      throw KindMismatch("graded bracket expects cochains from M to L, got " +
                         std::string(kind_name(c->kind())));
    }
    if (c->source_rank() != r.rank() || c->target_rank() != a.rank()) {
      throw RankMismatch("cochain ranks do not match " + r.name + " -> " + a.name);
    }
    if (c->degree() == 0) throw PreconditionFailed("graded bracket needs degrees at least 1");
  }
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  const HomLieConformalAlgebra v = semidirect_bracket(a, r);
  const Cochain theta = Cochain::from_table(v.bracket, CochainKind::v_to_v);
  const Cochain inner = nr_bracket(theta, lift(f, n, m), v.alpha);
  Cochain outer = nr_bracket(inner, lift(g, n, m), v.alpha);
  if (g.degree() % 2 == 1) outer = -outer;
  return project(outer, n, m);
}

Cochain delta_T(const HomLieConformalAlgebra& a, const Representation& r, const ModuleMap& t,
                const Cochain& p) {
  require_ooperator(a, r, t);
  if (p.degree() == 0) {
    if (p.element().size() != a.rank()) throw RankMismatch("element length does not match L");
    if (!(a.alpha.apply(p.element()) == p.element())) {
      throw PreconditionFailed("delta_T on an element x requires alpha(x) = x");
    }
    Cochain x = Cochain::from_element(p.element(), r.rank(), CochainKind::m_to_l);
    return modified_coboundary(a, r, t, x);
  }
  return graded_bracket(a, r, as_cochain(t), p);
}

HomPreLieConformalAlgebra pre_lie_from(const HomLieConformalAlgebra& a, const Representation& r,
                                       const ModuleMap& t) {
  require_ooperator(a, r, t);
  const std::size_t m = r.rank();
  HomPreLieConformalAlgebra p;
  p.name = "prelie(" + r.name + ")";
  p.basis = r.basis;
  p.beta = r.beta;
  p.product = BilinearTable(m, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      p.product.at(i, j) = r.action.pair(t.column(i), PolyVector::unit(m, j), lam());
    }
  }
  return p;
}

Report check_hom_pre_lie(const HomPreLieConformalAlgebra& p) {
  const std::size_t m = p.rank();
  if (p.product.left() != m || p.product.right() != m || p.product.out() != m ||
      p.beta.rows() != m || p.beta.cols() != m) {
    throw RankMismatch("pre-Lie table does not match its rank");
  }
  const Poly l1 = Poly::variable(Var::l1);
  const Poly l2 = Poly::variable(Var::l2);
  const BilinearTable& t = p.product;
  Report report;
  report.subject = "Hom-pre-Lie algebra " + p.name;
  Check& mult = report.add("mult", "b(m *_l n) = b(m) *_l b(n)");
  Check& identity = report.add(
      "identity",
      "(m *_l1 n) *_{l1+l2} b(r) - b(m) *_l1 (n *_l2 r) = (n *_l2 m) *_{l1+l2} b(r) - b(n) *_l2 (m *_l1 r)");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      mult.record({p.basis[i], p.basis[j]},
                  p.beta.apply(t.at(i, j)) - t.pair(p.beta.column(i), p.beta.column(j), lam()),
                  p.basis);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const PolyVector ei = PolyVector::unit(m, i);
    for (std::size_t j = 0; j < m; ++j) {
      const PolyVector ej = PolyVector::unit(m, j);
      const PolyVector mn = t.pair(ei, ej, l1);
      const PolyVector nm = t.pair(ej, ei, l2);
      for (std::size_t k = 0; k < m; ++k) {
        const PolyVector ek = PolyVector::unit(m, k);
        const PolyVector br = p.beta.column(k);
        PolyVector value = t.pair(mn, br, l1 + l2) - t.pair(p.beta.column(i), t.pair(ej, ek, l2), l1);
        value -= t.pair(nm, br, l1 + l2);
        value += t.pair(p.beta.column(j), t.pair(ei, ek, l1), l2);
        identity.record({p.basis[i], p.basis[j], p.basis[k]}, value, p.basis);
      }
    }
  }
  return report;
}

HomLieConformalAlgebra subadjacent(const HomPreLieConformalAlgebra& p) {
  const std::size_t m = p.rank();
  HomLieConformalAlgebra out;
  out.name = "sub(" + p.name + ")";
  out.basis = p.basis;
  out.alpha = p.beta;
  out.bracket = BilinearTable(m, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out.bracket.at(i, j) =
          p.product.at(i, j) - eval_lambda(p.product.at(j, i), Var::l, minus_d_minus_l());
    }
  }
  return out;
}

Representation rho_T(const HomLieConformalAlgebra& a, const Representation& r,
                     const ModuleMap& t) {
  require_ooperator(a, r, t);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  Representation out;
  out.name = "rhoT(" + a.name + ")";
  out.algebra = "sub(prelie(" + r.name + "))";
  out.basis = a.basis;
  out.beta = a.alpha;
  out.action = BilinearTable(m, n, n);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      PolyVector bracket = a.bracket.pair(t.column(c), PolyVector::unit(n, i), lam());
      PolyVector moved = eval_lambda(r.action.at(i, c), Var::l, minus_d_minus_l());
      out.action.at(c, i) = bracket + t.apply(moved);
    }
  }
  return out;
}

Cochain modified_coboundary(const HomLieConformalAlgebra& a, const Representation& r,
                            const ModuleMap& t, const Cochain& f) {
  const HomLieConformalAlgebra sub = subadjacent(pre_lie_from(a, r, t));
  const Representation rep = rho_T(a, r, t);
  return coboundary(sub.bracket, sub.alpha, rep.action, f);
}

Report nijenhuis_check(const HomLieConformalAlgebra& a, const ModuleMap& nmap) {
  validate_shape(a);
  const std::size_t n = a.rank();
  if (nmap.rows() != n || nmap.cols() != n) throw RankMismatch("Nijenhuis operator must be square");
  Report report;
  report.subject = "Nijenhuis operator on " + a.name;
  Check& commutes = report.add("commutes", "alpha N = N alpha");
  Check& identity = report.add(
      "identity", "[N(x)_l N(y)] - N([N(x)_l y] - [N(y)_{-d-l} x] - N([x_l y])) = 0");
  const Poly dual = minus_d_minus_l();
  for (std::size_t c = 0; c < n; ++c) {
    commutes.record({a.basis[c]}, a.alpha.apply(nmap.column(c)) - nmap.apply(a.alpha.column(c)),
                    a.basis);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PolyVector ei = PolyVector::unit(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVector ej = PolyVector::unit(n, j);
      PolyVector lhs = a.bracket.pair(nmap.column(i), nmap.column(j), lam());
      PolyVector inner = a.bracket.pair(nmap.column(i), ej, lam()) -
                         a.bracket.pair(nmap.column(j), ei, dual) -
                         nmap.apply(a.bracket.at(i, j));
      identity.record({a.basis[i], a.basis[j]}, lhs - nmap.apply(inner), a.basis);
    }
  }
  return report;
}

ModuleMap n_from_T(const HomLieConformalAlgebra& a, const Representation& r, const ModuleMap& t) {
  require_map_shape(a, r, t);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  DMatrix out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) out(i, n + c) = t(i, c);
  }
  return out;
}

}  // namespace homconf
