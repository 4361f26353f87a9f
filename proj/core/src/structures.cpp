#include "homconf/structures.hpp"

#include "homconf/errors.hpp"

namespace homconf {

// ---------------------------------------------------------------------------
// DMatrix

DMatrix::DMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DMatrix::DMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw RankMismatch("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                       std::to_string(rows * cols));
  }
}

DMatrix DMatrix::identity(std::size_t n) {
  DMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(1);
  return m;
}

DMatrix DMatrix::direct_sum(const DMatrix& a, const DMatrix& b) {
  DMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  }
  return m;
}

PolyVector DMatrix::column(std::size_t c) const {
  PolyVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

PolyVector DMatrix::apply(const PolyVector& v) const {
  if (v.size() != cols_) {
    throw RankMismatch("cannot apply a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                       " matrix to a vector of length " + std::to_string(v.size()));
  }
  PolyVector out(rows_);
  for (std::size_t s = 0; s < cols_; ++s) {
    if (v[s].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Poly& e = (*this)(r, s);
      if (!e.is_zero()) out[r] += e * v[s];
    }
  }
  return out;
}

bool DMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool DMatrix::is_identity() const { return is_square() && *this == identity(rows_); }

unsigned DMatrix::d_degree() const {
  unsigned deg = 0;
  for (const auto& e : entries_) deg = std::max(deg, e.degree(Var::d));
  return deg;
}

DMatrix& DMatrix::operator+=(const DMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw RankMismatch("matrix shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

DMatrix& DMatrix::operator-=(const DMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw RankMismatch("matrix shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

DMatrix& DMatrix::operator*=(const mpq_class& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

DMatrix operator*(const DMatrix& a, const DMatrix& b) {
  if (a.cols() != b.rows()) throw RankMismatch("matrix product shape mismatch");
  DMatrix m(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) m(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return m;
}

namespace {

DMatrix minor_of(const DMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  DMatrix out(n - 1, n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == skip_col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

Poly DMatrix::determinant() const {
  if (!is_square()) throw RankMismatch("determinant of a non-square matrix");
  if (rows_ == 0) return Poly(1);
  if (rows_ == 1) return entries_[0];
  Poly det;
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(0, c).is_zero()) continue;
    Poly term = (*this)(0, c) * minor_of(*this, 0, c).determinant();
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

bool DMatrix::regular() const {
  if (!is_square()) return false;
  Poly det = determinant();
  return !det.is_zero() && det.is_constant();
}

DMatrix DMatrix::pow(int exponent) const {
  if (!is_square()) throw RankMismatch("power of a non-square matrix");
  if (exponent < 0) return invert_structure_map(*this).pow(-exponent);
  DMatrix result = identity(rows_);
  DMatrix base = *this;
  auto e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

StructureMap invert_structure_map(const StructureMap& s) {
  if (!s.is_square()) throw RankMismatch("structure map is not square");
  Poly det = s.determinant();
  if (det.is_zero() || !det.is_constant()) {
    throw NotRegular("determinant " + det.to_string() + " is not a unit of Q[d]");
  }
  const mpq_class inv_det = 1 / det.constant_term();
  const std::size_t n = s.rows();
  DMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = Poly(inv_det);
    return inv;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Poly cof = minor_of(s, c, r).determinant() * inv_det;
      inv(r, c) = (r + c) % 2 == 0 ? cof : -cof;
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// BilinearTable

BilinearTable::BilinearTable(std::size_t left, std::size_t right, std::size_t out)
    : left_(left), right_(right), out_(out), cells_(left * right, PolyVector(out)) {}

PolyVector BilinearTable::pair(const PolyVector& a, const PolyVector& b, const Poly& nu) const {
  if (a.size() != left_ || b.size() != right_) {
    throw RankMismatch("pairing arguments of length " + std::to_string(a.size()) + ", " +
                       std::to_string(b.size()) + " against a " + std::to_string(left_) + "x" +
                       std::to_string(right_) + " table");
  }
  const Substitution left_sub(Var::d, -nu);
  const Substitution right_sub(Var::d, Poly::variable(Var::d) + nu);
  const Substitution cell_sub(Var::l, nu);

  std::vector<Poly> shifted_b(right_);
  for (std::size_t j = 0; j < right_; ++j) {
    if (!b[j].is_zero()) shifted_b[j] = substitute(b[j], right_sub);
  }

  PolyVector out(out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (a[i].is_zero()) continue;
    const Poly ai = substitute(a[i], left_sub);
    for (std::size_t j = 0; j < right_; ++j) {
      if (shifted_b[j].is_zero() || at(i, j).is_zero()) continue;
      out += (ai * shifted_b[j]) * substitute(at(i, j), cell_sub);
    }
  }
  return out;
}

bool BilinearTable::is_zero() const {
  for (const auto& c : cells_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Algebras and representations

std::vector<std::string> default_basis(const std::string& prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

namespace {

const VarSet kBracketVars{Var::d, Var::l};
const VarSet kMatrixVars{Var::d};

void validate_table(const BilinearTable& t, std::size_t left, std::size_t right, std::size_t out,
                    const std::string& what) {
  if (t.left() != left || t.right() != right || t.out() != out) {
    throw RankMismatch(what + " table has shape " + std::to_string(t.left()) + "x" +
                       std::to_string(t.right()) + "->" + std::to_string(t.out()) +
                       ", expected " + std::to_string(left) + "x" + std::to_string(right) +
                       "->" + std::to_string(out));
  }
  for (std::size_t i = 0; i < left; ++i) {
    for (std::size_t j = 0; j < right; ++j) {
      if (t.at(i, j).size() != out) {
        throw RankMismatch(what + " entry (" + std::to_string(i + 1) + ", " +
                           std::to_string(j + 1) + ") has length " +
                           std::to_string(t.at(i, j).size()) + ", expected " +
                           std::to_string(out));
      }
      if (!t.at(i, j).uses_only(kBracketVars)) {
        throw Error(what + " entries may only use the variables d and l");
      }
    }
  }
}

void validate_matrix(const DMatrix& m, std::size_t n, const std::string& what) {
  if (m.rows() != n || m.cols() != n) {
    throw RankMismatch(what + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (const auto& e : m.entries()) {
    if (!e.uses_only(kMatrixVars)) throw Error(what + " entries may only use the variable d");
  }
}

}  // namespace

void validate_shape(const HomLieConformalAlgebra& a) {
  validate_table(a.bracket, a.rank(), a.rank(), a.rank(), "bracket");
  validate_matrix(a.alpha, a.rank(), "alpha");
}

void validate_shape(const HomLieConformalAlgebra& a, const Representation& r) {
  validate_shape(a);
  validate_table(r.action, a.rank(), r.rank(), r.rank(), "action");
  validate_matrix(r.beta, r.rank(), "beta");
}

PolyVector extend_bracket(const HomLieConformalAlgebra& a, const PolyVector& x,
                          const PolyVector& y) {
  return a.bracket.pair(x, y, Poly::variable(Var::l));
}

PolyVector extend_action(const Representation& r, const PolyVector& x, const PolyVector& m) {
  return r.action.pair(x, m, Poly::variable(Var::l));
}

PolyVector eval_lambda(const PolyVector& v, Var lvar, const Poly& value) {
  return substitute(v, Substitution(lvar, value));
}

Poly minus_d_minus_l() { return -Poly::variable(Var::d) - Poly::variable(Var::l); }

Report check_hom_lie(const HomLieConformalAlgebra& a) {
  validate_shape(a);
  const std::size_t n = a.rank();
  const Poly l = Poly::variable(Var::l);
  const Poly l1 = Poly::variable(Var::l1);
  const Poly l2 = Poly::variable(Var::l2);
  const BilinearTable& b = a.bracket;

  Report report;
  report.subject = "algebra " + a.name;
  Check& skew = report.add("skew", "[x_l y] + [y_{-d-l} x] = 0");
  Check& jacobi = report.add(
      "jacobi", "[a(x)_l1 [y_l2 z]] - [[x_l1 y]_{l1+l2} a(z)] - [a(y)_l2 [x_l1 z]] = 0");
  Check& mult = report.add("mult", "a([x_l y]) = [a(x)_l a(y)]", false);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      skew.record({a.basis[i], a.basis[j]},
                  b.at(i, j) + eval_lambda(b.at(j, i), Var::l, minus_d_minus_l()), a.basis);
      PolyVector lhs = a.alpha.apply(b.at(i, j));
      PolyVector rhs = b.pair(a.alpha.column(i), a.alpha.column(j), l);
      mult.record({a.basis[i], a.basis[j]}, lhs - rhs, a.basis);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PolyVector ei = PolyVector::unit(n, i);
    const PolyVector ai = a.alpha.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVector ej = PolyVector::unit(n, j);
      const PolyVector aj = a.alpha.column(j);
      const PolyVector xy = b.pair(ei, ej, l1);
      for (std::size_t k = 0; k < n; ++k) {
        const PolyVector ek = PolyVector::unit(n, k);
        PolyVector value = b.pair(ai, b.pair(ej, ek, l2), l1);
        value -= b.pair(xy, a.alpha.column(k), l1 + l2);
        value -= b.pair(aj, b.pair(ei, ek, l1), l2);
        jacobi.record({a.basis[i], a.basis[j], a.basis[k]}, value, a.basis);
      }
    }
  }
  return report;
}

Report check_representation(const HomLieConformalAlgebra& a, const Representation& r) {
  validate_shape(a, r);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  const Poly l1 = Poly::variable(Var::l1);
  const Poly l2 = Poly::variable(Var::l2);
  const BilinearTable& act = r.action;

  Report report;
  report.subject = "module " + r.name + " over " + a.name;
  Check& dcompat = report.add("d-compat", "rho(x)_l d = (d + l) rho(x)_l (structural)");
  Check& dsesqui = report.add("d-sesqui", "rho(d x)_l = -l rho(x)_l (structural)");
  Check& twisted = report.add(
      "rep", "rho([x_l1 y])_{l1+l2} b(m) = rho(a(x))_l1 rho(y)_l2 m - rho(a(y))_l2 rho(x)_l1 m");
  Check& untwisted = report.add(
      "rep-untwisted", "rho(x)_l1 rho(y)_l2 m - rho(y)_l2 rho(x)_l1 m = rho([x_l1 y])_{l1+l2} m",
      false);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      dcompat.record_flag({a.basis[i], r.basis[c]}, true);
      dsesqui.record_flag({a.basis[i], r.basis[c]}, true);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const PolyVector ei = PolyVector::unit(n, i);
    const PolyVector ai = a.alpha.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const PolyVector ej = PolyVector::unit(n, j);
      const PolyVector aj = a.alpha.column(j);
      const PolyVector xy = a.bracket.pair(ei, ej, l1);
      for (std::size_t c = 0; c < m; ++c) {
        const PolyVector fc = PolyVector::unit(m, c);
        const PolyVector y_m = act.pair(ej, fc, l2);
        const PolyVector x_m = act.pair(ei, fc, l1);
        PolyVector value = act.pair(xy, r.beta.column(c), l1 + l2);
        value -= act.pair(ai, y_m, l1);
        value += act.pair(aj, x_m, l2);
        twisted.record({a.basis[i], a.basis[j], r.basis[c]}, value, r.basis);

        PolyVector plain = act.pair(ei, y_m, l1) - act.pair(ej, x_m, l2);
        plain -= act.pair(xy, fc, l1 + l2);
        untwisted.record({a.basis[i], a.basis[j], r.basis[c]}, plain, r.basis);
      }
    }
  }
  return report;
}

HomLieConformalAlgebra semidirect_bracket(const HomLieConformalAlgebra& a,
                                          const Representation& r) {
  validate_shape(a, r);
  const std::size_t n = a.rank();
  const std::size_t m = r.rank();
  HomLieConformalAlgebra out;
  out.name = a.name + "+" + r.name;
  out.basis = a.basis;
  out.basis.insert(out.basis.end(), r.basis.begin(), r.basis.end());
  out.alpha = DMatrix::direct_sum(a.alpha, r.beta);
  out.bracket = BilinearTable(n + m, n + m, n + m);

  auto embed = [&](const PolyVector& v, std::size_t offset) {
    PolyVector w(n + m);
    for (std::size_t k = 0; k < v.size(); ++k) w[offset + k] = v[k];
    return w;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.bracket.at(i, j) = embed(a.bracket.at(i, j), 0);
    for (std::size_t c = 0; c < m; ++c) {
      out.bracket.at(i, n + c) = embed(r.action.at(i, c), n);
      out.bracket.at(n + c, i) =
          embed(-eval_lambda(r.action.at(i, c), Var::l, minus_d_minus_l()), n);
    }
  }
  return out;
}

HomLieConformalAlgebra semidirect(const HomLieConformalAlgebra& a, const Representation& r) {
  if (!check_hom_lie(a).passed()) {
    throw PreconditionFailed("algebra " + a.name + " fails its axioms");
  }
  if (!check_representation(a, r).passed()) {
    throw PreconditionFailed("module " + r.name + " fails the representation axioms");
  }
  return semidirect_bracket(a, r);
}

Representation adjoint_rep(const HomLieConformalAlgebra& a, unsigned p) {
  validate_shape(a);
  const std::size_t n = a.rank();
  Representation r;
  r.name = "ad" + std::to_string(p) + "(" + a.name + ")";
  r.algebra = a.name;
  r.basis = a.basis;
  r.beta = a.alpha;
  r.action = BilinearTable(n, n, n);
  const DMatrix ap = a.alpha.pow(static_cast<int>(p));
  const Poly l = Poly::variable(Var::l);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.action.at(i, j) = a.bracket.pair(ap.column(i), PolyVector::unit(n, j), l);
    }
  }
  return r;
}

}  // namespace homconf
