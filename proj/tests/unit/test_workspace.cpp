#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "homconf/errors.hpp"
#include "homconf/workspace.hpp"

using namespace homconf;
using namespace homconf::testing;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(HOMCONF_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

template <class E>
E parse_error(const std::string& text) {
  try {
    parse_workspace(text);
  } catch (const E& e) {
    return e;
  }
  FAIL("expected an error");
  throw;
}

Workspace random_workspace(Rng& rng) {
  Workspace ws;
  const std::size_t n = 1 + rng() % 2;
  const std::size_t m = 1 + rng() % 2;
  HomLieConformalAlgebra a{"A", default_basis("e", n), BilinearTable(n, n, n),
                           random_map(rng, n, n, 1)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) a.bracket.at(i, j)[k] = random_poly(rng, 1, 2, true);
    }
  }
  Representation r{"R", "A", {"u", "w"}, BilinearTable(n, m, m), random_map(rng, m, m, 1)};
  r.basis.resize(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) r.action.at(i, j)[k] = random_poly(rng, 1, 2, true);
    }
  }
  ws.algebras.push_back(a);
  ws.modules.push_back(r);
  ws.maps.push_back({"T", "R", "A", random_map(rng, n, m, 2)});
  ws.maps.push_back({"U", "R", "A", random_map(rng, n, m, 1)});
  ws.maps.push_back({"N", "A", "A", random_map(rng, n, n, 1)});
  ws.cochains.push_back(
      {"c", "R", "A", random_cochain(rng, 2, m, n, CochainKind::m_to_l, 2)});
  ws.cochains.push_back(
      {"x", "A", "R", random_cochain(rng, 0, n, m, CochainKind::l_to_m, 2)});
  ws.deformations.push_back({"S", {"T", "U", "T"}});
  return ws;
}

}  // namespace

TEST_CASE("parse the single-operator fixture") {
  const Workspace ws = parse_workspace(read_data("vir_m1.hlc"));
  CHECK(ws.algebras.size() == 1);
  CHECK(ws.modules.size() == 1);
  CHECK(ws.maps.size() == 1);
  const auto& a = ws.algebra("vir");
  CHECK(a.bracket.at(0, 0) == vir().bracket.at(0, 0));
  CHECK(a.alpha.is_identity());
  const auto& r = ws.module("M");
  CHECK(r.algebra == "vir");
  CHECK(r.action.at(0, 0) == module_m(1, 0).action.at(0, 0));
  CHECK(ws.map("T1").matrix == t1());
}

TEST_CASE("parse the corpus") {
  const Workspace ws = parse_workspace(read_data("corpus.hlc"));
  CHECK(ws.algebras.size() == 2);
  CHECK(ws.modules.size() == 4);
  CHECK(ws.maps.size() == 5);
  CHECK(ws.cochains.size() == 7);
  CHECK(ws.deformations.size() == 2);

  const auto& ab2 = ws.algebra("ab2");
  CHECK(ab2.basis == std::vector<std::string>{"e1", "e2"});
  CHECK(ab2.alpha == DMatrix(2, 2, {Q(2), Q(0), Q(0), Q(1)}));
  CHECK(ab2.bracket.is_zero());

  const auto& k = ws.map("K");
  CHECK(k.is_endomorphism());
  CHECK(ws.source_module(k).action == vir().bracket);
  CHECK(&ws.target_algebra(ws.map("Z")) == &ab2);

  CHECK(ws.cochain("c0").value.kind() == CochainKind::l_to_m);
  CHECK(ws.cochain("p2").value.kind() == CochainKind::m_to_l);
  CHECK(ws.cochain("p2").value.at({0, 0}) == V({"l1 - 3"}));
  CHECK(ws.cochain("mvir").value.kind() == CochainKind::l_to_l);

  const DeformationSequence s = ws.sequence("SD");
  REQUIRE(s.maps.size() == 2);
  CHECK(s.maps[1] == DMatrix(1, 1, {P("d")}));

  CHECK(ws.find_map("missing") == nullptr);
  CHECK_THROWS_AS(ws.cochain("missing"), UnresolvedReference);
}

TEST_CASE("undefined algebra is an unresolved reference") {
  const auto e = parse_error<UnresolvedReference>(read_data("undefined_algebra.hlc"));
  CHECK(e.name() == "vir2");
}

TEST_CASE("wrong table length names the line") {
  const auto e = parse_error<RankMismatch>(read_data("bad_length.hlc"));
  CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
}

TEST_CASE("syntax errors carry line and column") {
  const auto e = parse_error<ParseError>(read_data("bad_syntax.hlc"));
  CHECK(e.line() == 3);
  CHECK(e.column() == 19);

  const auto k = parse_error<ParseError>("algebra a\nrank 1\nfrobnicate 2\n");
  CHECK(k.line() == 3);
  CHECK(k.column() == 1);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nalgebra a\nrank 1\n"), DuplicateName);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nmodule a over a\nrank 1\n"),
                  DuplicateName);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nbracket 2 1 : d\n"), RankMismatch);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nbracket 1 1 : q\n"), Error);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 2\nalpha 1, 0\n"), RankMismatch);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nmap T : M -> a\nmatrix 1\n"),
                  UnresolvedReference);
  CHECK_THROWS_AS(parse_workspace("algebra a\nrank 1\nmodule M over a\nrank 1\n"
                                  "deformation S : T + T\n"),
                  UnresolvedReference);
}

TEST_CASE("comments and blank lines are ignored") {
  const Workspace ws = parse_workspace("# header\n\nalgebra a  # trailing\nrank 1\n\n");
  REQUIRE(ws.algebras.size() == 1);
  CHECK(ws.algebra("a").bracket.is_zero());
}

TEST_CASE("serialize round-trips the corpus") {
  const Workspace ws = parse_workspace(read_data("corpus.hlc"));
  const std::string text = serialize(ws);
  const Workspace again = parse_workspace(text);
  CHECK(again == ws);
  CHECK(serialize(again) == text);
}

TEST_CASE("property: serialize round-trips random workspaces") {
  Rng rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const Workspace ws = random_workspace(rng);
    const std::string text = serialize(ws);
    const Workspace again = parse_workspace(text);
    CHECK(again == ws);
    CHECK(serialize(again) == text);
  }
}
