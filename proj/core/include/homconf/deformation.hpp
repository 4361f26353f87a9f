#pragma once

// Linear and order-k deformations T_t = T_0 + t T_1 + ... of an O-operator.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homconf/complex.hpp"
#include "homconf/operator.hpp"
#include "homconf/report.hpp"

namespace homconf {

struct DeformationSequence {
  std::string name;
  /// maps[0] is the base operator; maps[i] is the coefficient of t^i.
  std::vector<ModuleMap> maps;

  unsigned order() const { return maps.empty() ? 0 : static_cast<unsigned>(maps.size() - 1); }
};

Report check_linear_deformation(const HomLieConformalAlgebra& a, const Representation& r,
                                const ModuleMap& t, const ModuleMap& d);

Report nijenhuis_element_check(const HomLieConformalAlgebra& a, const Representation& r,
                               const ModuleMap& t, const PolyVector& x);

/// delta_T(x) as a map M -> L.
ModuleMap trivial_generator(const HomLieConformalAlgebra& a, const Representation& r,
                            const ModuleMap& t, const PolyVector& x);

/// The order-w equations for w = 0..through (default: the order of s), with
/// maps beyond the end of s taken as zero.
Report check_order_k(const HomLieConformalAlgebra& a, const Representation& r,
                     const DeformationSequence& s, std::optional<unsigned> through = std::nullopt);

enum class ObstructionRange {
  /// i + j = k + 1 with i, j >= 1.
  nonzero_indices,
  /// i + j = k + 1 with i, j >= 2.
  strict,
};

Cochain obstruction(const HomLieConformalAlgebra& a, const Representation& r,
                    const DeformationSequence& s,
                    ObstructionRange range = ObstructionRange::nonzero_indices);

/// A map X with X beta = alpha X and delta_T(X) = Ob whose entries have
/// d-degree at most max_deg, of the least degree that admits one; free
/// coefficients are set to zero.
std::optional<ModuleMap> extend_order(const HomLieConformalAlgebra& a, const Representation& r,
                                      const DeformationSequence& s, unsigned max_deg);

Report equivalence_check_linear(const HomLieConformalAlgebra& a, const Representation& r,
                                const ModuleMap& t, const ModuleMap& d1, const ModuleMap& d2,
                                const PolyVector& x);

/// sum quadratic[(u, v)] x_u x_v + sum linear[u] x_u = 0, with u <= v.
struct QuadraticEquation {
  std::map<std::pair<std::size_t, std::size_t>, mpq_class> quadratic;
  std::map<std::size_t, mpq_class> linear;

  std::string to_string(const std::vector<std::string>& names) const;
};

struct ConstraintSystem {
  std::vector<std::string> unknowns;
  std::vector<QuadraticEquation> equations;
};

struct SearchResult {
  std::vector<ModuleMap> maps;
  std::size_t candidates = 0;
  ConstraintSystem constraints;
};

/// Every map with entries sum_e c_e d^e (e <= max_deg, c_e in coeffs) that
/// passes check_ooperator, in lexicographic order of coefficient tuples.
SearchResult search_ooperators(const HomLieConformalAlgebra& a, const Representation& r,
                               unsigned max_deg, std::vector<mpq_class> coeffs);

}  // namespace homconf
