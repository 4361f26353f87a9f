#pragma once

// Shared fixtures and seeded random generators for the test suites.

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "homconf/complex.hpp"
#include "homconf/linsolve.hpp"
#include "homconf/operator.hpp"
#include "homconf/poly.hpp"
#include "homconf/structures.hpp"

namespace homconf {

// Readable values in test failure messages.
inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const PolyVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " | " : "") << v[i].to_string();
  return os << ']';
}

}  // namespace homconf

namespace homconf::testing {

/// The first witness of a check rendered over its basis, or "" if none.
inline std::string first_witness(const Report& r, std::string_view id) {
  const Check* c = r.find(id);
  if (c == nullptr || c->witnesses.empty()) return "";
  return c->witnesses.front().value_string();
}

inline bool check_ok(const Report& r, std::string_view id) {
  const Check* c = r.find(id);
  return c != nullptr && c->failures == 0;
}

inline Poly P(const std::string& text) { return parse_poly(text); }

inline PolyVector V(std::initializer_list<const char*> slots) {
  std::vector<Poly> out;
  for (const char* s : slots) out.push_back(parse_poly(s));
  return PolyVector(std::move(out));
}

inline Poly Q(long num, long den = 1) { return Poly(mpq_class(num, den)); }

inline HomLieConformalAlgebra vir() {
  HomLieConformalAlgebra a{"vir", {"e"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
  a.bracket.at(0, 0) = V({"d + 2*l"});
  return a;
}

/// M(delta, c): rho(e)_l f = (d + delta*l + c) f.
inline Representation module_m(const mpq_class& delta, const mpq_class& c) {
  Representation r{"M", "vir", {"f"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
  r.action.at(0, 0) = PolyVector{Poly::variable(Var::d) + Poly(delta) * Poly::variable(Var::l) +
                                 Poly(c)};
  return r;
}

inline ModuleMap t1() { return DMatrix(1, 1, {Poly(1)}); }

/// M(1, c) + M(1, c) with basis f1, f2.
inline Representation module_mm(const mpq_class& c) {
  Representation r{"MM", "vir", {"f1", "f2"}, BilinearTable(1, 2, 2), DMatrix::identity(2)};
  const Poly weight = Poly::variable(Var::d) + Poly::variable(Var::l) + Poly(c);
  r.action.at(0, 0) = PolyVector{weight, Poly(0)};
  r.action.at(0, 1) = PolyVector{Poly(0), weight};
  return r;
}

/// f1 -> e, f2 -> 2e on module_mm.
inline ModuleMap t12() { return DMatrix(1, 2, {Poly(1), Poly(2)}); }

/// The rank two algebra Vir + M(1, 1).
inline HomLieConformalAlgebra vir_m() {
  auto v = semidirect(vir(), module_m(1, 1));
  v.name = "virm";
  return v;
}

inline ModuleMap scalar_map(const mpq_class& k, std::size_t n = 1) {
  return k * DMatrix::identity(n);
}

/// Zero bracket with the given twist (identity by default).
inline HomLieConformalAlgebra ab(std::size_t n, DMatrix alpha = {}) {
  HomLieConformalAlgebra a{"ab" + std::to_string(n), default_basis("e", n),
                           BilinearTable(n, n, n),
                           alpha.rows() == 0 ? DMatrix::identity(n) : std::move(alpha)};
  return a;
}

/// The zero action of an algebra on a rank-m module.
inline Representation trivial(const HomLieConformalAlgebra& a, std::size_t m,
                              DMatrix beta = {}) {
  return Representation{"triv", a.name, default_basis("f", m), BilinearTable(a.rank(), m, m),
                        beta.rows() == 0 ? DMatrix::identity(m) : std::move(beta)};
}

/// Vir with the bad action rho(e)_l f = l^2 f.
inline Representation square_action() {
  Representation r{"bad", "vir", {"f"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
  r.action.at(0, 0) = V({"l^2"});
  return r;
}

// ---- random generators (all seeded by the caller)

using Rng = std::mt19937_64;

inline mpq_class random_rational(Rng& rng, int bound = 3) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 2);
  return canonical(mpq_class(num(rng), den(rng)));
}

/// A polynomial in d and lambdas l1..l(count) of total degree <= max_deg with
/// about half of the monomials present.
inline Poly random_poly(Rng& rng, unsigned lambdas, unsigned max_deg, bool single_l = false) {
  std::vector<Var> vars{Var::d};
  if (single_l) {
    vars.push_back(Var::l);
  } else {
    for (unsigned i = 1; i <= lambdas; ++i) vars.push_back(lambda(i));
  }
  Poly out;
  std::bernoulli_distribution keep(0.5);
  std::vector<unsigned> exps(vars.size(), 0);
  // enumerate exponent vectors with total degree <= max_deg
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t k, unsigned left) {
    if (k == vars.size()) {
      if (!keep(rng)) return;
      Poly mono(random_rational(rng));
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exps[i] > 0) mono *= Poly::variable(vars[i], exps[i]);
      }
      out += mono;
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[k] = e;
      walk(k + 1, left - e);
    }
    exps[k] = 0;
  };
  walk(0, max_deg);
  return out;
}

inline Cochain random_cochain(Rng& rng, unsigned degree, std::size_t srank, std::size_t trank,
                              CochainKind kind, unsigned max_deg = 2) {
  Cochain c(degree, srank, trank, kind);
  const unsigned lambdas = degree == 0 ? 0 : degree - 1;
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    for (std::size_t k = 0; k < trank; ++k) c.entry(flat)[k] = random_poly(rng, lambdas, max_deg);
  }
  return c;
}

inline DMatrix random_map(Rng& rng, std::size_t rows, std::size_t cols, unsigned max_deg) {
  DMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_poly(rng, 0, max_deg);
  }
  return m;
}

/// A random vector of the space of maps X with X beta = alpha X and
/// delta_T(X) = 0 whose entries have d-degree <= max_deg.
inline DMatrix random_cocycle_map(Rng& rng, const HomLieConformalAlgebra& a,
                                  const Representation& r, const ModuleMap& t, unsigned max_deg) {
  std::vector<DMatrix> units;
  std::vector<std::vector<Poly>> images;
  for (std::size_t row = 0; row < a.rank(); ++row) {
    for (std::size_t col = 0; col < r.rank(); ++col) {
      for (unsigned e = 0; e <= max_deg; ++e) {
        DMatrix u(a.rank(), r.rank());
        u(row, col) = Poly::variable(Var::d, e);
        std::vector<Poly> image;
        const Cochain dx = delta_T(a, r, t, as_cochain(u));
        for (std::size_t f = 0; f < dx.size(); ++f) {
          for (const auto& p : dx.entry(f)) image.push_back(p);
        }
        for (std::size_t c = 0; c < r.rank(); ++c) {
          for (const auto& p : commutation_defect(a, r, u, c)) image.push_back(p);
        }
        units.push_back(std::move(u));
        images.push_back(std::move(image));
      }
    }
  }
  const auto sys = coefficient_equations(images, std::vector<Poly>(images.front().size()));
  const RationalMatrix basis = nullspace(sys.matrix, units.size());
  DMatrix out(a.rank(), r.rank());
  for (const auto& v : basis) {
    const mpq_class k = random_rational(rng);
    for (std::size_t u = 0; u < units.size(); ++u) {
      if (v[u] != 0) out += (k * v[u]) * units[u];
    }
  }
  return out;
}

}  // namespace homconf::testing
