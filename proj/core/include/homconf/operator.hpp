#pragma once

// O-operators T: M -> L and the structures they induce.

#include <string>
#include <vector>

#include "homconf/complex.hpp"
#include "homconf/report.hpp"
#include "homconf/structures.hpp"

namespace homconf {

struct HomPreLieConformalAlgebra {
  std::string name;
  std::vector<std::string> basis;
  /// product.at(a, b) = f_a *_l f_b.
  BilinearTable product;
  StructureMap beta;

  std::size_t rank() const { return basis.size(); }
};

/// A map M -> L as a degree 1 cochain.
Cochain as_cochain(const ModuleMap& t);

/// The table (a, b) -> [X f_a _l Y f_b] - X(rho(Y f_a)_l f_b - rho(Y f_b)_{-d-l} f_a).
/// X = Y = T gives the defect of the O-operator identity.
BilinearTable ooperator_defect(const HomLieConformalAlgebra& a, const Representation& r,
                               const ModuleMap& x, const ModuleMap& y);

/// alpha T - T beta, column by column.
PolyVector commutation_defect(const HomLieConformalAlgebra& a, const Representation& r,
                              const ModuleMap& t, std::size_t column);

Report check_ooperator(const HomLieConformalAlgebra& a, const Representation& r,
                       const ModuleMap& t);
Report check_rota_baxter(const HomLieConformalAlgebra& a, const ModuleMap& op, unsigned p,
                         const mpq_class& q);

/// {{f, g}} = (-1)^p [[theta, f^], g^] restricted to M-tuples and L-values,
/// for f of degree q >= 1 and g of degree p >= 1.
Cochain graded_bracket(const HomLieConformalAlgebra& a, const Representation& r,
                       const Cochain& f, const Cochain& g);

/// delta_T(P) = {{T, P}} for p >= 1. A degree 0 cochain is an element x of L
/// with alpha(x) = x, sent to m -> rho_T(beta^-1 m)_l x at l = -d.
Cochain delta_T(const HomLieConformalAlgebra& a, const Representation& r, const ModuleMap& t,
                const Cochain& p);

HomPreLieConformalAlgebra pre_lie_from(const HomLieConformalAlgebra& a, const Representation& r,
                                       const ModuleMap& t);
Report check_hom_pre_lie(const HomPreLieConformalAlgebra& p);
HomLieConformalAlgebra subadjacent(const HomPreLieConformalAlgebra& p);
/// rho_T(m)_l x = [T(m)_l x] + T(rho(x)_{-d-l} m), a representation of the
/// sub-adjacent algebra on L with twist alpha.
Representation rho_T(const HomLieConformalAlgebra& a, const Representation& r,
                     const ModuleMap& t);
/// The coboundary of the sub-adjacent algebra with coefficients in rho_T.
Cochain modified_coboundary(const HomLieConformalAlgebra& a, const Representation& r,
                            const ModuleMap& t, const Cochain& f);

Report nijenhuis_check(const HomLieConformalAlgebra& a, const ModuleMap& n);
/// The block matrix [[0, T], [0, 0]] on L + M.
ModuleMap n_from_T(const HomLieConformalAlgebra& a, const Representation& r, const ModuleMap& t);

}  // namespace homconf
