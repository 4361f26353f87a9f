#pragma once

// Cochains of a Hom-Lie conformal algebra with coefficients in a module, the
// coboundary operator, and the circle product / Nijenhuis-Richardson bracket.
//
// A degree-p cochain is stored by its values on basis p-tuples. Each value is
// a vector over Q[d, l1, ..., l(p-1)]: the parameter of the last argument is
// not free but equals -(l1 + ... + l(p-1)) - d.

#include <cstddef>
#include <string>
#include <vector>

#include "homconf/poly.hpp"
#include "homconf/report.hpp"
#include "homconf/structures.hpp"

namespace homconf {

enum class CochainKind { l_to_l, l_to_m, m_to_l, v_to_v };

std::string_view kind_name(CochainKind k);

using Tuple = std::vector<std::size_t>;

class Cochain {
 public:
  Cochain() = default;
  /// The zero cochain.
  Cochain(unsigned degree, std::size_t source_rank, std::size_t target_rank,
          CochainKind kind = CochainKind::l_to_m);

  /// Degree 1 cochain whose value on the c-th basis vector is column c.
  static Cochain from_map(const DMatrix& m, CochainKind kind);
  /// Degree 2 cochain from a pairing table, renaming l to l1.
  static Cochain from_table(const BilinearTable& t, CochainKind kind);
  static Cochain from_element(const PolyVector& x, std::size_t source_rank, CochainKind kind);

  unsigned degree() const { return degree_; }
  std::size_t source_rank() const { return source_rank_; }
  std::size_t target_rank() const { return target_rank_; }
  CochainKind kind() const { return kind_; }
  void set_kind(CochainKind k) { kind_ = k; }

  /// Number of basis tuples, source_rank^degree.
  std::size_t size() const { return values_.size(); }
  const PolyVector& entry(std::size_t flat) const { return values_[flat]; }
  PolyVector& entry(std::size_t flat) { return values_[flat]; }
  const PolyVector& at(const Tuple& t) const { return values_[index_of(t)]; }
  PolyVector& at(const Tuple& t) { return values_[index_of(t)]; }
  Tuple tuple_of(std::size_t flat) const;
  std::size_t index_of(const Tuple& t) const;

  DMatrix to_map() const;
  const PolyVector& element() const;

  bool is_zero() const;
  unsigned d_degree() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const mpq_class& scalar);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const mpq_class& s, Cochain a) { return a *= s; }
  Cochain operator-() const;
  /// Equal degree, ranks and values; the kind tag is ignored.
  friend bool operator==(const Cochain& a, const Cochain& b);

 private:
  void require_same_shape(const Cochain& other) const;

  unsigned degree_ = 0;
  std::size_t source_rank_ = 0;
  std::size_t target_rank_ = 0;
  CochainKind kind_ = CochainKind::l_to_m;
  std::vector<PolyVector> values_;
};

/// A free module with its basis names and twist.
struct Space {
  std::vector<std::string> basis;
  StructureMap twist;

  std::size_t rank() const { return basis.size(); }
};

Space space_of(const HomLieConformalAlgebra& a);
Space space_of(const Representation& r);

/// The value of f on arguments v_1..v_p (vectors over Q[d, l...]) with
/// parameters nu_1..nu_(p-1); nu_p is left implicit.
PolyVector evaluate(const Cochain& f, const std::vector<PolyVector>& args,
                    const std::vector<Poly>& labels);

/// Substitutes l_n := -(l1 + ... + l(n-1)) - d.
PolyVector close_last_lambda(const PolyVector& v, unsigned n);
Poly dependent_lambda(unsigned n);

/// Permutes arguments and parameters together: the value at (b_1..b_p) is
/// f at (b_tau(1)..b_tau(p)) with l_k := l_tau(k). Indices are 0-based.
Cochain permuted(const Cochain& f, const std::vector<unsigned>& tau);
int permutation_sign(const std::vector<unsigned>& tau);
/// (1/p!) sum_tau sign(tau) tau.f, the skew-symmetric part of f.
Cochain antisymmetrize(const Cochain& f);

Report check_cochain(const Cochain& f, const Space& source, const Space& target);

/// The coboundary of f for the pairing `bracket` on the source (twist alpha)
/// acting on the target through `action`.
Cochain coboundary(const BilinearTable& bracket, const StructureMap& alpha,
                   const BilinearTable& action, const Cochain& f);
Cochain coboundary(const HomLieConformalAlgebra& a, const Representation& r, const Cochain& f);

Cochain circle(const Cochain& f, const Cochain& g, const StructureMap& twist);
Cochain nr_bracket(const Cochain& f, const Cochain& g, const StructureMap& twist);

/// A cochain M^p -> L as a cochain on L + M supported on M-tuples with values
/// in the L block.
Cochain lift(const Cochain& f, std::size_t l_rank, std::size_t m_rank);
/// The semidirect bracket of L + M as a degree 2 cochain.
Cochain theta_hat(const HomLieConformalAlgebra& a, const Representation& r);
/// Restriction of a cochain on L + M to M-tuples and the L block. Throws
/// ConsistencyError if any other component is nonzero.
Cochain project(const Cochain& f, std::size_t l_rank, std::size_t m_rank);

Report mc_check(const HomLieConformalAlgebra& a, const Representation& r);

}  // namespace homconf
