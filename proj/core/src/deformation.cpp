#include "homconf/deformation.hpp"

#include <algorithm>

#include "homconf/errors.hpp"
#include "homconf/linsolve.hpp"

namespace homconf {

namespace {

void require_ooperator(const HomLieConformalAlgebra& a, const Representation& r,
                       const ModuleMap& t) {
  if (!check_ooperator(a, r, t).passed()) {
    throw PreconditionFailed("the base map is not an O-operator");
  }
}

void record_table(Check& check, const BilinearTable& table, const Representation& r,
                  const HomLieConformalAlgebra& a) {
  for (std::size_t i = 0; i < table.left(); ++i) {
    for (std::size_t j = 0; j < table.right(); ++j) {
      check.record({r.basis[i], r.basis[j]}, table.at(i, j), a.basis);
    }
  }
}

BilinearTable add_tables(BilinearTable acc, const BilinearTable& other) {
  for (std::size_t i = 0; i < acc.left(); ++i) {
    for (std::size_t j = 0; j < acc.right(); ++j) acc.at(i, j) += other.at(i, j);
  }
  return acc;
}

void record_cochain(Check& check, const Cochain& c, const std::vector<std::string>& source,
                    const std::vector<std::string>& target) {
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    std::vector<std::string> names;
    for (std::size_t k : c.tuple_of(flat)) names.push_back(source[k]);
    check.record(std::move(names), c.entry(flat), target);
  }
}

const Poly& lam() {
  static const Poly l = Poly::variable(Var::l);
  return l;
}

}  // namespace

Report check_linear_deformation(const HomLieConformalAlgebra& a, const Representation& r,
                                const ModuleMap& t, const ModuleMap& d) {
  require_ooperator(a, r, t);
  Report report;
  report.subject = "linear deformation of an O-operator " + r.name + " -> " + a.name;
  Check& commutes = report.add("commutes", "D beta = alpha D");
  Check& square = report.add(
      "square", "[D(m)_l D(n)] - D(rho(D(m))_l n - rho(D(n))_{-d-l} m) = 0");
  Check& mixed = report.add("mixed", "[T(m)_l D(n)] + [D(m)_l T(n)] = D(rho(T(m))_l n - "
                                     "rho(T(n))_{-d-l} m) + T(rho(D(m))_l n - rho(D(n))_{-d-l} m)");
  Check& cocycle = report.add("cocycle", "delta_T(D) = 0", false);

  for (std::size_t c = 0; c < r.rank(); ++c) {
    commutes.record({r.basis[c]}, commutation_defect(a, r, d, c), a.basis);
  }
  record_table(square, ooperator_defect(a, r, d, d), r, a);
  record_table(mixed, add_tables(ooperator_defect(a, r, t, d), ooperator_defect(a, r, d, t)), r,
               a);
  record_cochain(cocycle, delta_T(a, r, t, as_cochain(d)), r.basis, a.basis);
  return report;
}

Report nijenhuis_element_check(const HomLieConformalAlgebra& a, const Representation& r,
                               const ModuleMap& t, const PolyVector& x) {
  require_ooperator(a, r, t);
  if (x.size() != a.rank()) throw RankMismatch("element length does not match " + a.name);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  const Poly l1 = Poly::variable(Var::l1);
  const Poly l2 = Poly::variable(Var::l2);

  Report report;
  report.subject = "Nijenhuis element for an O-operator " + r.name + " -> " + a.name;
  Check& fixed = report.add("fixed", "alpha(x) = x");
  Check& bracket_sq = report.add("bracket-square", "[[x_l1 y]_l2 [x_l1 z]] = 0");
  Check& action_sq = report.add("action-square", "rho([x_l1 y])_{l1+l2} rho(x)_l1 m = 0");
  Check& mixed = report.add("mixed", "[x_l delta_T(x)(m)] = 0");

  const bool is_fixed = a.alpha.apply(x) == x;
  fixed.record({"x"}, a.alpha.apply(x) - x, a.basis);
  for (std::size_t j = 0; j < n; ++j) {
    const PolyVector xy = a.bracket.pair(x, PolyVector::unit(n, j), l1);
    for (std::size_t k = 0; k < n; ++k) {
      const PolyVector xz = a.bracket.pair(x, PolyVector::unit(n, k), l1);
      bracket_sq.record({a.basis[j], a.basis[k]}, a.bracket.pair(xy, xz, l2), a.basis);
    }
    for (std::size_t c = 0; c < m; ++c) {
      const PolyVector xm = r.action.pair(x, PolyVector::unit(m, c), l1);
      action_sq.record({a.basis[j], r.basis[c]}, r.action.pair(xy, xm, l1 + l2), r.basis);
    }
  }
  if (is_fixed) {
    const DMatrix gen = trivial_generator(a, r, t, x);
    for (std::size_t c = 0; c < m; ++c) {
      mixed.record({r.basis[c]}, a.bracket.pair(x, gen.column(c), lam()), a.basis);
    }
  } else {
    mixed.record_flag({"x not fixed by alpha"}, false);
  }
  return report;
}

ModuleMap trivial_generator(const HomLieConformalAlgebra& a, const Representation& r,
                            const ModuleMap& t, const PolyVector& x) {
  return delta_T(a, r, t, Cochain::from_element(x, r.rank(), CochainKind::m_to_l)).to_map();
}

Report check_order_k(const HomLieConformalAlgebra& a, const Representation& r,
                     const DeformationSequence& s, std::optional<unsigned> through) {
  if (s.maps.empty()) throw PreconditionFailed("deformation sequence has no base map");
  const unsigned last = through.value_or(s.order());
  Report report;
  report.subject = "order " + std::to_string(last) + " deformation " + s.name;
  Check& commutes = report.add("commutes", "T_i beta = alpha T_i for every i");
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    for (std::size_t c = 0; c < r.rank(); ++c) {
      commutes.record({"T" + std::to_string(i), r.basis[c]}, commutation_defect(a, r, s.maps[i], c),
                      a.basis);
    }
  }
  for (unsigned w = 0; w <= last; ++w) {
    Check& order = report.add(
        "order-" + std::to_string(w),
        "sum_{i+j=" + std::to_string(w) +
            "} [T_i(m)_l T_j(n)] - T_i(rho(T_j(m))_l n - rho(T_j(n))_{-d-l} m) = 0");
    BilinearTable total(r.rank(), r.rank(), a.rank());
    for (unsigned i = 0; i <= w; ++i) {
      const unsigned j = w - i;
      if (i >= s.maps.size() || j >= s.maps.size()) continue;
      total = add_tables(std::move(total), ooperator_defect(a, r, s.maps[i], s.maps[j]));
    }
    record_table(order, total, r, a);
  }
  return report;
}

Cochain obstruction(const HomLieConformalAlgebra& a, const Representation& r,
                    const DeformationSequence& s, ObstructionRange range) {
  if (!check_order_k(a, r, s).passed()) {
    throw PreconditionFailed("deformation " + s.name + " fails its order equations");
  }
  const unsigned k = s.order();
  const unsigned lowest = range == ObstructionRange::strict ? 2 : 1;
  Cochain sum(2, r.rank(), a.rank(), CochainKind::m_to_l);
  for (unsigned i = lowest; i <= k; ++i) {
    const unsigned j = k + 1 - i;
    if (j < lowest || j > k) continue;
    sum += graded_bracket(a, r, as_cochain(s.maps[i]), as_cochain(s.maps[j]));
  }
  sum *= mpq_class(-1, 2);
  return sum;
}

namespace {

std::vector<Poly> flatten(const Cochain& c) {
  std::vector<Poly> out;
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    for (const auto& p : c.entry(flat)) out.push_back(p);
  }
  return out;
}

void append(std::vector<Poly>& dst, const PolyVector& v) {
  for (const auto& p : v) dst.push_back(p);
}

DMatrix unit_map(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c, unsigned e) {
  DMatrix u(rows, cols);
  u(r, c) = Poly::variable(Var::d, e);
  return u;
}

}  // namespace

std::optional<ModuleMap> extend_order(const HomLieConformalAlgebra& a, const Representation& r,
                                      const DeformationSequence& s, unsigned max_deg) {
  const Cochain ob = obstruction(a, r, s);
  const ModuleMap& t = s.maps.front();
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();

  std::vector<Poly> rhs = flatten(ob);
  rhs.resize(rhs.size() + n * m);  // commutation equations are homogeneous

  for (unsigned deg = 0; deg <= max_deg; ++deg) {
    std::vector<DMatrix> units;
    std::vector<std::vector<Poly>> images;
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t col = 0; col < m; ++col) {
        for (unsigned e = 0; e <= deg; ++e) {
          DMatrix u = unit_map(n, m, row, col, e);
          std::vector<Poly> image = flatten(delta_T(a, r, t, as_cochain(u)));
          for (std::size_t c = 0; c < m; ++c) append(image, commutation_defect(a, r, u, c));
          units.push_back(std::move(u));
          images.push_back(std::move(image));
        }
      }
    }
    const PolyLinearSystem sys = coefficient_equations(images, rhs);
    const auto x = solve(sys.matrix, sys.rhs, units.size());
    if (!x) continue;
    DMatrix result(n, m);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if ((*x)[u] != 0) result += (*x)[u] * units[u];
    }
    return result;
  }
  return std::nullopt;
}

Report equivalence_check_linear(const HomLieConformalAlgebra& a, const Representation& r,
                                const ModuleMap& t, const ModuleMap& d1, const ModuleMap& d2,
                                const PolyVector& x) {
  require_ooperator(a, r, t);
  if (x.size() != a.rank()) throw RankMismatch("element length does not match " + a.name);
  const DMatrix alpha_inv = invert_structure_map(a.alpha);
  const DMatrix beta_inv = invert_structure_map(r.beta);
  (void)alpha_inv;
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  const Poly l1 = Poly::variable(Var::l1);
  const Poly l2 = Poly::variable(Var::l2);

  Report report;
  report.subject = "equivalence of linear deformations";
  Check& first = report.add("deformation-1", "T + t D1 is a linear deformation");
  Check& second = report.add("deformation-2", "T + t D2 is a linear deformation");
  Check& fixed = report.add("fixed", "alpha(x) = x");
  Check& bracket_sq = report.add("bracket-square", "[[x_l1 y]_l2 [x_l1 z]] = 0");
  Check& difference = report.add("difference", "D2 - D1 = delta_T(x)");
  Check& intertwine =
      report.add("intertwine", "D1(rho(x)_l b^-1 m) = [x_l D2(b^-1 m)]");
  Check& commutator = report.add(
      "rep-commutator", "rho(x)_l1 rho(y)_l2 m - rho(y)_l2 rho(x)_l1 m = rho([x_l1 y])_{l1+l2} m");
  Check& action_sq = report.add("action-square", "rho([x_l1 y])_{l1+l2} rho(x)_l1 m = 0");

  first.record_flag({"D1"}, check_linear_deformation(a, r, t, d1).passed());
  second.record_flag({"D2"}, check_linear_deformation(a, r, t, d2).passed());
  const bool is_fixed = a.alpha.apply(x) == x;
  fixed.record({"x"}, a.alpha.apply(x) - x, a.basis);

  for (std::size_t j = 0; j < n; ++j) {
    const PolyVector ej = PolyVector::unit(n, j);
    const PolyVector xy = a.bracket.pair(x, ej, l1);
    for (std::size_t k = 0; k < n; ++k) {
      const PolyVector xz = a.bracket.pair(x, PolyVector::unit(n, k), l1);
      bracket_sq.record({a.basis[j], a.basis[k]}, a.bracket.pair(xy, xz, l2), a.basis);
    }
    for (std::size_t c = 0; c < m; ++c) {
      const PolyVector fc = PolyVector::unit(m, c);
      const PolyVector xm = r.action.pair(x, fc, l1);
      const PolyVector ym = r.action.pair(ej, fc, l2);
      PolyVector comm = r.action.pair(x, ym, l1) - r.action.pair(ej, xm, l2);
      comm -= r.action.pair(xy, fc, l1 + l2);
      commutator.record({a.basis[j], r.basis[c]}, comm, r.basis);
      action_sq.record({a.basis[j], r.basis[c]}, r.action.pair(xy, xm, l1 + l2), r.basis);
    }
  }

  if (is_fixed) {
    const DMatrix gen = trivial_generator(a, r, t, x);
    const DMatrix diff = d2 - d1 - gen;
    for (std::size_t c = 0; c < m; ++c) difference.record({r.basis[c]}, diff.column(c), a.basis);
  } else {
    difference.record_flag({"x not fixed by alpha"}, false);
  }
  for (std::size_t c = 0; c < m; ++c) {
    const PolyVector pre = beta_inv.column(c);
    PolyVector lhs = d1.apply(r.action.pair(x, pre, lam()));
    PolyVector rhs = a.bracket.pair(x, d2.apply(pre), lam());
    intertwine.record({r.basis[c]}, lhs - rhs, a.basis);
  }
  return report;
}

std::string QuadraticEquation::to_string(const std::vector<std::string>& names) const {
  std::vector<std::pair<std::string, mpq_class>> terms;
  for (const auto& [uv, c] : quadratic) {
    const std::string mono = uv.first == uv.second
                                 ? names[uv.first] + "^2"
                                 : names[uv.first] + "*" + names[uv.second];
    terms.emplace_back(mono, c);
  }
  for (const auto& [u, c] : linear) terms.emplace_back(names[u], c);
  std::string out;
  for (const auto& [mono, c] : terms) {
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    mpq_class mag = abs(c);
    out += mag.get_str() + "*" + mono;
  }
  return (out.empty() ? "0" : out) + " = 0";
}

namespace {

/// Groups sum_k coeff_k * (monomial_k of poly) by (position, monomial).
using EquationKey = std::pair<std::size_t, Poly::Exponents>;

void accumulate_quadratic(std::map<EquationKey, QuadraticEquation>& eqs, std::size_t offset,
                          const BilinearTable& table, std::size_t u, std::size_t v) {
  std::size_t pos = offset;
  for (std::size_t i = 0; i < table.left(); ++i) {
    for (std::size_t j = 0; j < table.right(); ++j) {
      for (const auto& p : table.at(i, j)) {
        for (const auto& [e, c] : p.terms()) {
          eqs[{pos, e}].quadratic[{std::min(u, v), std::max(u, v)}] += c;
        }
        ++pos;
      }
    }
  }
}

}  // namespace

SearchResult search_ooperators(const HomLieConformalAlgebra& a, const Representation& r,
                               unsigned max_deg, std::vector<mpq_class> coeffs) {
  validate_shape(a, r);
  for (auto& c : coeffs) c = canonical(c);
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();

  SearchResult result;
  std::vector<DMatrix> units;
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      for (unsigned e = 0; e <= max_deg; ++e) {
        units.push_back(unit_map(n, m, row, col, e));
        result.constraints.unknowns.push_back("c_" + std::to_string(row + 1) + "_" +
                                              std::to_string(col + 1) + "_" + std::to_string(e));
      }
    }
  }

  // Quadratic part: the O-operator identity is bilinear in (X, Y).
  std::map<EquationKey, QuadraticEquation> eqs;
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t v = 0; v < units.size(); ++v) {
      accumulate_quadratic(eqs, 0, ooperator_defect(a, r, units[u], units[v]), u, v);
    }
  }
  const std::size_t offset = m * m * n;
  for (std::size_t u = 0; u < units.size(); ++u) {
    for (std::size_t c = 0; c < m; ++c) {
      const PolyVector col = commutation_defect(a, r, units[u], c);
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& [e, coef] : col[k].terms()) {
          eqs[{offset + c * n + k, e}].linear[u] += coef;
        }
      }
    }
  }
  for (auto& [key, eq] : eqs) {
    for (auto it = eq.quadratic.begin(); it != eq.quadratic.end();) {
      it = it->second == 0 ? eq.quadratic.erase(it) : std::next(it);
    }
    for (auto it = eq.linear.begin(); it != eq.linear.end();) {
      it = it->second == 0 ? eq.linear.erase(it) : std::next(it);
    }
    if (!eq.quadratic.empty() || !eq.linear.empty()) result.constraints.equations.push_back(eq);
  }

  if (coeffs.empty()) return result;
  std::vector<std::size_t> digits(units.size(), 0);
  while (true) {
    DMatrix candidate(n, m);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (coeffs[digits[u]] != 0) candidate += coeffs[digits[u]] * units[u];
    }
    ++result.candidates;
    if (check_ooperator(a, r, candidate).passed()) result.maps.push_back(std::move(candidate));

    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < coeffs.size()) break;
      digits[pos] = 0;
      if (pos == 0) return result;
    }
    if (digits.empty()) return result;
  }
}

}  // namespace homconf
