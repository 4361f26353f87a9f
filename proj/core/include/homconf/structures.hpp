#pragma once

// Hom-Lie conformal algebras and their representations on free C[d]-modules
// of finite rank, together with the matrices over C[d] that act on them.

#include <cstddef>
#include <string>
#include <vector>

#include "homconf/poly.hpp"
#include "homconf/report.hpp"

namespace homconf {

/// Rectangular matrix with entries in Q[d]. Acts on coordinate vectors by
/// (M v)_r = sum_s M(r,s) v_s, where d is read as the outermost translation.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(std::size_t rows, std::size_t cols);
  DMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static DMatrix identity(std::size_t n);
  static DMatrix zero(std::size_t rows, std::size_t cols) { return DMatrix(rows, cols); }
  /// Block diagonal matrix diag(a, b).
  static DMatrix direct_sum(const DMatrix& a, const DMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Poly& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<Poly>& entries() const { return entries_; }

  /// Column c as a coordinate vector: the image of the c-th basis vector.
  PolyVector column(std::size_t c) const;
  PolyVector apply(const PolyVector& v) const;

  bool is_zero() const;
  bool is_identity() const;
  unsigned d_degree() const;

  DMatrix& operator+=(const DMatrix& other);
  DMatrix& operator-=(const DMatrix& other);
  DMatrix& operator*=(const mpq_class& scalar);
  friend DMatrix operator+(DMatrix a, const DMatrix& b) { return a += b; }
  friend DMatrix operator-(DMatrix a, const DMatrix& b) { return a -= b; }
  friend DMatrix operator*(const mpq_class& s, DMatrix a) { return a *= s; }
  friend DMatrix operator*(const DMatrix& a, const DMatrix& b);
  friend bool operator==(const DMatrix& a, const DMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Poly determinant() const;
  /// True iff the determinant is a nonzero rational, i.e. a unit of Q[d].
  bool regular() const;
  /// Non-negative powers; negative powers require regular().
  DMatrix pow(int exponent) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

using StructureMap = DMatrix;
using ModuleMap = DMatrix;

StructureMap invert_structure_map(const StructureMap& s);

/// Values of a conformal pairing X x Y -> Z[l] on basis pairs.
class BilinearTable {
 public:
  BilinearTable() = default;
  BilinearTable(std::size_t left, std::size_t right, std::size_t out);

  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }
  std::size_t out() const { return out_; }

  const PolyVector& at(std::size_t i, std::size_t j) const { return cells_[i * right_ + j]; }
  PolyVector& at(std::size_t i, std::size_t j) { return cells_[i * right_ + j]; }

  /// The pairing of a and b at parameter nu, extended by sesquilinearity:
  /// sum_{i,j} a_i(d := -nu) b_j(d := d + nu) T_ij(l := nu).
  PolyVector pair(const PolyVector& a, const PolyVector& b, const Poly& nu) const;

  bool is_zero() const;
  friend bool operator==(const BilinearTable& a, const BilinearTable& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ &&
           a.cells_ == b.cells_;
  }

 private:
  std::size_t left_ = 0;
  std::size_t right_ = 0;
  std::size_t out_ = 0;
  std::vector<PolyVector> cells_;
};

struct HomLieConformalAlgebra {
  std::string name;
  std::vector<std::string> basis;
  BilinearTable bracket;
  StructureMap alpha;

  std::size_t rank() const { return basis.size(); }
};

struct Representation {
  std::string name;
  std::string algebra;
  std::vector<std::string> basis;
  /// action.at(i, a) = rho(e_i)_l f_a.
  BilinearTable action;
  StructureMap beta;

  std::size_t rank() const { return basis.size(); }
};

/// Default basis names: prefix1, prefix2, ... (or just "e" style single names
/// are supplied by callers).
std::vector<std::string> default_basis(const std::string& prefix, std::size_t n);

/// Throws RankMismatch unless the tables and maps have consistent shapes.
void validate_shape(const HomLieConformalAlgebra& a);
void validate_shape(const HomLieConformalAlgebra& a, const Representation& r);

PolyVector extend_bracket(const HomLieConformalAlgebra& a, const PolyVector& x,
                          const PolyVector& y);
PolyVector extend_action(const Representation& r, const PolyVector& x, const PolyVector& m);
PolyVector eval_lambda(const PolyVector& v, Var lvar, const Poly& value);

/// The dependent parameter -d - l.
Poly minus_d_minus_l();

Report check_hom_lie(const HomLieConformalAlgebra& a);
Report check_representation(const HomLieConformalAlgebra& a, const Representation& r);

/// The bracket of L + M without validating the inputs.
HomLieConformalAlgebra semidirect_bracket(const HomLieConformalAlgebra& a,
                                          const Representation& r);
/// As semidirect_bracket, but throws PreconditionFailed unless both inputs pass
/// their checks.
HomLieConformalAlgebra semidirect(const HomLieConformalAlgebra& a, const Representation& r);

Representation adjoint_rep(const HomLieConformalAlgebra& a, unsigned p);

}  // namespace homconf
