#include <benchmark/benchmark.h>

#include "homconf/complex.hpp"
#include "homconf/deformation.hpp"
#include "homconf/operator.hpp"
#include "homconf/workspace.hpp"

namespace {

using namespace homconf;

HomLieConformalAlgebra virasoro() {
  HomLieConformalAlgebra a{"vir", {"e"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
  a.bracket.at(0, 0) = PolyVector{parse_poly("d + 2*l")};
  return a;
}

Representation module_m(const std::string& delta, const std::string& c) {
  Representation r{"M", "vir", {"f"}, BilinearTable(1, 1, 1), DMatrix::identity(1)};
  r.action.at(0, 0) = PolyVector{parse_poly("d + " + delta + "*l + " + c)};
  return r;
}

Cochain sample_cochain(unsigned degree) {
  Cochain c(degree, 1, 1, CochainKind::l_to_m);
  c.entry(0) = PolyVector{
      parse_poly(degree >= 2 ? "d^2 - 3*d*l1 + 1/2*l1^2 + 2" : "d^2 - 3*d + 1/2")};
  return c;
}

constexpr const char* kWorkspace = R"(algebra vir
rank 1
bracket 1 1 : d + 2*l
module M over vir
rank 1
action 1 1 : d + l
map T1 : M -> vir
matrix 1
cochain c degree 2 : vir -> M
value 1 1 : d^2 - 3*d*l1 + 2
deformation S : T1 + T1
)";

void BM_PolyProduct(benchmark::State& state) {
  const Poly a = parse_poly("d^3 + 2*d^2*l1 - l1*l2 + 3*l2^2 - 7");
  const Poly b = parse_poly("d*l1 - l2^3 + 1/3*d^2 + l1");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyProduct);

void BM_ParsePoly(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_poly("1/2*d^3*l1 - 3*l1^2*l2 + 4*d - 5/7"));
  }
}
BENCHMARK(BM_ParsePoly);

void BM_Coboundary(benchmark::State& state) {
  const auto a = virasoro();
  const auto r = module_m("1", "1");
  const Cochain f = sample_cochain(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(a, r, f));
}
BENCHMARK(BM_Coboundary)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

void BM_NrBracket(benchmark::State& state) {
  const auto a = virasoro();
  const Cochain m = Cochain::from_table(a.bracket, CochainKind::l_to_l);
  for (auto _ : state) benchmark::DoNotOptimize(nr_bracket(m, m, a.alpha));
}
BENCHMARK(BM_NrBracket);

void BM_CheckHomLie(benchmark::State& state) {
  const auto a = virasoro();
  for (auto _ : state) benchmark::DoNotOptimize(check_hom_lie(a));
}
BENCHMARK(BM_CheckHomLie);

void BM_CheckOOperator(benchmark::State& state) {
  const auto a = virasoro();
  const auto r = module_m("1", "0");
  const DMatrix t(1, 1, {Poly(1)});
  for (auto _ : state) benchmark::DoNotOptimize(check_ooperator(a, r, t));
}
BENCHMARK(BM_CheckOOperator);

void BM_McCheck(benchmark::State& state) {
  const auto a = virasoro();
  const auto r = module_m("1", "1/2");
  for (auto _ : state) benchmark::DoNotOptimize(mc_check(a, r));
}
BENCHMARK(BM_McCheck);

void BM_SearchOOperators(benchmark::State& state) {
  const auto a = virasoro();
  const auto r = module_m("1", "0");
  const std::vector<mpq_class> coeffs{-1, 0, mpq_class(1, 2), 1, 2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_ooperators(a, r, static_cast<unsigned>(state.range(0)), coeffs));
  }
}
BENCHMARK(BM_SearchOOperators)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ParseWorkspace(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_workspace(kWorkspace));
}
BENCHMARK(BM_ParseWorkspace);

}  // namespace

BENCHMARK_MAIN();
