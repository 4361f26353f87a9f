#include <doctest.h>

#include "fixtures.hpp"
#include "homconf/errors.hpp"

using namespace homconf;
using namespace homconf::testing;

TEST_CASE("extend_bracket: sesquilinearity on Vir") {
  const auto a = vir();
  CHECK(extend_bracket(a, V({"d"}), V({"1"})) == V({"-l*(d + 2*l)"}));
  CHECK(extend_bracket(a, V({"1"}), V({"d"})) == V({"(d + l)*(d + 2*l)"}));
  const auto z = ab(2);
  CHECK(extend_bracket(z, V({"d", "1"}), V({"3", "d^2"})).is_zero());
}

TEST_CASE("extend_action: sesquilinearity on M(delta, c)") {
  CHECK(extend_action(module_m(1, 0), V({"1"}), V({"d"})) == V({"(d + l)*(d + l)"}));
  CHECK(extend_action(module_m(2, -3), V({"d"}), V({"1"})) == V({"-l*(d + 2*l - 3)"}));
  const auto z = ab(2);
  CHECK(extend_action(trivial(z, 2), V({"1", "d"}), V({"d", "1"})).is_zero());
}

TEST_CASE("property: extend_bracket is bilinear and sesquilinear") {
  Rng rng(21);
  const auto a = vir();
  const Poly d = Poly::variable(Var::d);
  const Poly l = Poly::variable(Var::l);
  for (int trial = 0; trial < 25; ++trial) {
    const PolyVector x{random_poly(rng, 0, 2)};
    const PolyVector y{random_poly(rng, 0, 2)};
    const PolyVector z{random_poly(rng, 0, 2)};
    const mpq_class k = random_rational(rng);
    CHECK(extend_bracket(a, x + Poly(k) * z, y) ==
          extend_bracket(a, x, y) + Poly(k) * extend_bracket(a, z, y));
    CHECK(extend_bracket(a, d * x, y) == -l * extend_bracket(a, x, y));
    CHECK(extend_bracket(a, x, d * y) == (d + l) * extend_bracket(a, x, y));
  }
}

TEST_CASE("eval_lambda") {
  CHECK(eval_lambda(V({"d + 2*l"}), Var::l, minus_d_minus_l()) == V({"-d - 2*l"}));
  CHECK(eval_lambda(V({"d + 2*l"}), Var::l, Poly(0)) == V({"d"}));
  CHECK(-eval_lambda(V({"d + 2*l"}), Var::l, minus_d_minus_l()) == vir().bracket.at(0, 0));
}

TEST_CASE("check_hom_lie") {
  SUBCASE("Vir passes") { CHECK(check_hom_lie(vir()).passed()); }
  SUBCASE("constant bracket fails skew with witness 2e") {
    HomLieConformalAlgebra a{"bad", {"e"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
    a.bracket.at(0, 0) = V({"1"});
    const Report r = check_hom_lie(a);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(check_ok(r, "skew"));
    CHECK(first_witness(r, "skew") == "(2)*e");
  }
  SUBCASE("Ab(3) with an arbitrary twist passes") {
    DMatrix alpha(3, 3, {P("d"), Q(1), Q(0), Q(2), P("d^2"), Q(0), Q(0), Q(0), Q(-1)});
    CHECK(check_hom_lie(ab(3, alpha)).passed());
  }
  SUBCASE("multiplicativity is advisory") {
    auto a = vir();
    a.alpha = scalar_map(2);
    const Report r = check_hom_lie(a);
    CHECK(r.find("mult")->status() == Status::advisory);
    CHECK_FALSE(r.find("mult")->required);
  }
}

TEST_CASE("check_representation") {
  const auto a = vir();
  for (auto [delta, c] : std::vector<std::pair<mpq_class, mpq_class>>{
           {0, 0}, {1, 0}, {mpq_class(1), mpq_class(1, 2)}, {2, -3}}) {
    CAPTURE(delta.get_str());
    CAPTURE(c.get_str());
    CHECK(check_representation(a, module_m(delta, c)).passed());
  }
  const Report bad = check_representation(a, square_action());
  CHECK_FALSE(bad.passed());
  CHECK(first_witness(bad, "rep") == "(1*l1^3 + 1*l1^2*l2 - 1*l1*l2^2 - 1*l2^3)*f");
  CHECK((P("l1^3 + l1^2*l2 - l1*l2^2 - l2^3") == P("(l1 - l2)*(l1 + l2)^2")));
  CHECK(check_representation(ab(1), trivial(ab(1), 1)).passed());
}

TEST_CASE("semidirect product") {
  const auto v = semidirect(vir(), module_m(1, 0));
  REQUIRE(v.rank() == 2);
  CHECK(v.basis == std::vector<std::string>{"e", "f"});
  CHECK(v.bracket.at(0, 0) == V({"d + 2*l", "0"}));
  CHECK(v.bracket.at(0, 1) == V({"0", "d + l"}));
  CHECK(v.bracket.at(1, 0) == V({"0", "l"}));
  CHECK(v.bracket.at(1, 1).is_zero());
  CHECK(check_hom_lie(v).passed());

  const auto z = semidirect(ab(1), trivial(ab(1), 1));
  CHECK(z.bracket.is_zero());
  CHECK(z.alpha.is_identity());
  CHECK_THROWS_AS(semidirect(vir(), square_action()), PreconditionFailed);
}

TEST_CASE("property: semidirect products of passing data pass") {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const mpq_class delta = random_rational(rng);
    const mpq_class c = random_rational(rng);
    CHECK(check_hom_lie(semidirect(vir(), module_m(delta, c))).passed());
  }
  DMatrix alpha(2, 2, {Q(1), P("d"), Q(0), Q(1)});
  CHECK(check_hom_lie(semidirect(ab(2, alpha), trivial(ab(2, alpha), 2))).passed());
}

TEST_CASE("adjoint representation") {
  const auto a = vir();
  const auto ad0 = adjoint_rep(a, 0);
  CHECK(ad0.action == a.bracket);
  CHECK(adjoint_rep(a, 3).action == ad0.action);
  CHECK(adjoint_rep(ab(2), 2).action.is_zero());
  CHECK(check_representation(a, ad0).passed());
}

TEST_CASE("structure maps") {
  CHECK(invert_structure_map(DMatrix::identity(2)).is_identity());
  CHECK(invert_structure_map(scalar_map(2)) == scalar_map(mpq_class(1, 2)));
  CHECK_THROWS_AS(invert_structure_map(DMatrix(1, 1, {P("d")})), NotRegular);
  const DMatrix m(2, 2, {Q(1), P("d"), Q(0), Q(3)});
  CHECK(m.regular());
  CHECK((m * invert_structure_map(m)).is_identity());
  CHECK(m.pow(-1) == invert_structure_map(m));
  CHECK(m.determinant() == Q(3));
  CHECK(m.d_degree() == 1);
}

TEST_CASE("shape validation") {
  auto a = vir();
  a.bracket.at(0, 0) = V({"d", "l"});
  CHECK_THROWS_AS(validate_shape(a), RankMismatch);
  auto r = module_m(1, 0);
  r.beta = DMatrix::identity(2);
  CHECK_THROWS_AS(validate_shape(vir(), r), RankMismatch);
}
