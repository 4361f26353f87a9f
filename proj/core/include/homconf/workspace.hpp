#pragma once

// Line-oriented workspace files: named algebras, modules, maps, cochains and
// deformation sequences.

#include <string>
#include <string_view>
#include <vector>

#include "homconf/complex.hpp"
#include "homconf/deformation.hpp"
#include "homconf/structures.hpp"

namespace homconf {

struct NamedMap {
  std::string name;
  /// A module name, or the target algebra's name for an endomorphism.
  std::string source;
  std::string target;
  ModuleMap matrix;

  bool is_endomorphism() const { return source == target; }
  friend bool operator==(const NamedMap&, const NamedMap&) = default;
};

struct NamedCochain {
  std::string name;
  std::string source;
  std::string target;
  Cochain value;

  friend bool operator==(const NamedCochain&, const NamedCochain&) = default;
};

struct NamedDeformation {
  std::string name;
  std::vector<std::string> maps;

  friend bool operator==(const NamedDeformation&, const NamedDeformation&) = default;
};

class Workspace {
 public:
  std::vector<HomLieConformalAlgebra> algebras;
  std::vector<Representation> modules;
  std::vector<NamedMap> maps;
  std::vector<NamedCochain> cochains;
  std::vector<NamedDeformation> deformations;

  const HomLieConformalAlgebra* find_algebra(std::string_view name) const;
  const Representation* find_module(std::string_view name) const;
  const NamedMap* find_map(std::string_view name) const;
  const NamedCochain* find_cochain(std::string_view name) const;
  const NamedDeformation* find_deformation(std::string_view name) const;

  /// Lookups that throw UnresolvedReference.
  const HomLieConformalAlgebra& algebra(std::string_view name) const;
  const Representation& module(std::string_view name) const;
  const NamedMap& map(std::string_view name) const;
  const NamedCochain& cochain(std::string_view name) const;
  const NamedDeformation& deformation(std::string_view name) const;

  /// The algebra a map lands in and the module it starts from; an
  /// endomorphism starts from the adjoint module of its algebra.
  const HomLieConformalAlgebra& target_algebra(const NamedMap& m) const;
  Representation source_module(const NamedMap& m) const;

  DeformationSequence sequence(std::string_view name) const;

  friend bool operator==(const Workspace& a, const Workspace& b);
};

Workspace parse_workspace(std::string_view text);
std::string serialize(const Workspace& ws);

}  // namespace homconf
