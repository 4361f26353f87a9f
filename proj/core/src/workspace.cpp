#include "homconf/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "homconf/errors.hpp"

namespace homconf {

namespace {

template <typename T>
const T* find_named(const std::vector<T>& items, std::string_view name) {
  auto it = std::find_if(items.begin(), items.end(), [&](const T& x) { return x.name == name; });
  return it == items.end() ? nullptr : &*it;
}

template <typename T>
const T& require_named(const std::vector<T>& items, std::string_view name) {
  const T* found = find_named(items, name);
  if (found == nullptr) throw UnresolvedReference(std::string(name));
  return *found;
}

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> split_words(std::string_view line, std::size_t base_column = 1) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), base_column + start});
  }
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '(' || c == ')' || c == '\'';
  });
}

enum class Block { none, algebra, module, map, cochain };

class WorkspaceParser {
 public:
  explicit WorkspaceParser(std::string_view text) : text_(text) {}

  Workspace parse() {
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t end = text_.find('\n', start);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no_;
      std::string_view line = text_.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      handle_line(line);
      if (end == text_.size()) break;
      start = end + 1;
    }
    finish_block();
    return std::move(ws_);
  }

 private:
  [[noreturn]] void syntax(const std::string& message, std::size_t column) const {
    throw ParseError("line " + std::to_string(line_no_) + ", column " + std::to_string(column) +
                         ": " + message,
                     line_no_, column);
  }

  std::string at_line(const std::string& message) const {
    return "line " + std::to_string(line_no_) + ": " + message;
  }

  void handle_line(std::string_view line) {
    const auto words = split_words(line);
    if (words.empty()) return;
    const std::string& key = words[0].text;
    if (key == "algebra") return start_algebra(words);
    if (key == "module") return start_module(words);
    if (key == "map") return start_map(words);
    if (key == "cochain") return start_cochain(words);
    if (key == "deformation") return add_deformation(words);
    if (key == "rank") return set_rank(words);
    if (key == "basis") return set_basis(words);
    if (key == "alpha") return set_twist(line, words, Block::algebra);
    if (key == "beta") return set_twist(line, words, Block::module);
    if (key == "bracket") return set_pairing(line, words, Block::algebra);
    if (key == "action") return set_pairing(line, words, Block::module);
    if (key == "matrix") return set_matrix(line, words);
    if (key == "value") return set_value(line, words);
    syntax("unknown keyword '" + key + "'", words[0].column);
  }

  // ---- names and references

  void claim_name(const Token& t, std::vector<std::string>& taken) {
    if (!valid_name(t.text)) syntax("invalid name '" + t.text + "'", t.column);
    if (std::find(taken.begin(), taken.end(), t.text) != taken.end()) {
      throw DuplicateName(at_line("duplicate name '" + t.text + "'"));
    }
    taken.push_back(t.text);
  }

  const HomLieConformalAlgebra& algebra_ref(const std::string& name) const {
    const auto* a = find_named(ws_.algebras, name);
    if (a == nullptr) throw UnresolvedReference(name);
    return *a;
  }

  /// An algebra or module name, with its rank.
  std::pair<bool, std::size_t> space_ref(const std::string& name) const {
    if (const auto* a = find_named(ws_.algebras, name)) return {true, a->rank()};
    if (const auto* r = find_named(ws_.modules, name)) return {false, r->rank()};
    throw UnresolvedReference(name);
  }

  void expect_count(const std::vector<Token>& words, std::size_t n, const std::string& shape) {
    if (words.size() != n) {
      const std::size_t col = words.size() > n ? words[n].column : words.back().column;
      syntax("expected '" + shape + "'", col);
    }
  }

  void expect_word(const Token& t, std::string_view word) {
    if (t.text != word) syntax("expected '" + std::string(word) + "'", t.column);
  }

  std::size_t parse_index(const Token& t, std::size_t bound) {
    std::size_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) syntax("expected an index", t.column);
    if (v < 1 || v > bound) {
      throw RankMismatch(at_line("index " + t.text + " out of range 1.." + std::to_string(bound)));
    }
    return v - 1;
  }

  std::size_t parse_count(const Token& t) {
    std::size_t v = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v == 0) syntax("expected a positive rank", t.column);
    return v;
  }

  // ---- polynomial payloads

  Poly parse_poly_at(std::string_view text, std::size_t column, const VarSet& allowed) {
    const std::size_t lead = text.find_first_not_of(" \t");
    if (lead == std::string_view::npos) syntax("expected a polynomial", column);
    try {
      return parse_poly(text, allowed);
    } catch (const ParseError& e) {
      std::string_view what = e.what();
      const auto sep = what.find(": ");
      syntax(std::string(sep == std::string_view::npos ? what : what.substr(sep + 2)),
             column + e.column() - 1);
    } catch (const UnknownVariable& e) {
      syntax(e.what(), column + lead);
    }
  }

  /// The text after the first ':' in the line, with its column.
  std::pair<std::string_view, std::size_t> after_colon(std::string_view line,
                                                       const std::vector<Token>& words) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) syntax("expected ':'", words.back().column);
    return {line.substr(colon + 1), colon + 2};
  }

  PolyVector parse_slots(std::string_view text, std::size_t column, std::size_t expected,
                         const VarSet& allowed) {
    std::vector<Poly> slots;
    std::size_t start = 0;
    while (true) {
      const auto bar = text.find('|', start);
      const auto piece = text.substr(start, bar == std::string_view::npos ? bar : bar - start);
      slots.push_back(parse_poly_at(piece, column + start, allowed));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (slots.size() != expected) {
      throw RankMismatch(at_line("expected " + std::to_string(expected) + " slots, found " +
                                 std::to_string(slots.size())));
    }
    return PolyVector(std::move(slots));
  }

  DMatrix parse_matrix(std::string_view text, std::size_t column, std::size_t rows,
                       std::size_t cols, const VarSet& allowed) {
    std::vector<Poly> entries;
    std::size_t row_count = 0;
    std::size_t start = 0;
    while (true) {
      const auto semi = text.find(';', start);
      const auto row = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
      std::size_t cstart = 0;
      std::size_t in_row = 0;
      while (true) {
        const auto comma = row.find(',', cstart);
        const auto cell =
            row.substr(cstart, comma == std::string_view::npos ? comma : comma - cstart);
        entries.push_back(parse_poly_at(cell, column + start + cstart, allowed));
        ++in_row;
        if (comma == std::string_view::npos) break;
        cstart = comma + 1;
      }
      if (in_row != cols) {
        throw RankMismatch(at_line("expected " + std::to_string(cols) + " columns, found " +
                                   std::to_string(in_row)));
      }
      ++row_count;
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
    if (row_count != rows) {
      throw RankMismatch(at_line("expected " + std::to_string(rows) + " rows, found " +
                                 std::to_string(row_count)));
    }
    return DMatrix(rows, cols, std::move(entries));
  }

  // ---- block headers

  void finish_block() {
    if (block_ == Block::algebra) {
      require_rank();
      ws_.algebras.push_back(std::move(algebra_));
    } else if (block_ == Block::module) {
      require_rank();
      ws_.modules.push_back(std::move(module_));
    } else if (block_ == Block::map) {
      if (!have_payload_) throw RankMismatch(at_line("map '" + map_.name + "' has no matrix"));
      ws_.maps.push_back(std::move(map_));
    } else if (block_ == Block::cochain) {
      ws_.cochains.push_back(std::move(cochain_));
    }
    block_ = Block::none;
    rank_ = 0;
    have_payload_ = false;
  }

  void require_rank() {
    if (rank_ == 0) throw RankMismatch("block ending before line " + std::to_string(line_no_) +
                                       " has no rank");
  }

  void start_algebra(const std::vector<Token>& words) {
    finish_block();
    expect_count(words, 2, "algebra <name>");
    claim_name(words[1], algebra_names_);
    algebra_ = HomLieConformalAlgebra{};
    algebra_.name = words[1].text;
    block_ = Block::algebra;
  }

  void start_module(const std::vector<Token>& words) {
    finish_block();
    expect_count(words, 4, "module <name> over <algebra>");
    expect_word(words[2], "over");
    algebra_ref(words[3].text);
    claim_name(words[1], algebra_names_);
    module_ = Representation{};
    module_.name = words[1].text;
    module_.algebra = words[3].text;
    block_ = Block::module;
  }

  void start_map(const std::vector<Token>& words) {
    finish_block();
    expect_count(words, 6, "map <name> : <module> -> <algebra>");
    expect_word(words[2], ":");
    expect_word(words[4], "->");
    const auto& target = algebra_ref(words[5].text);
    std::size_t source_rank = target.rank();
    if (words[3].text != words[5].text) {
      const auto* r = find_named(ws_.modules, words[3].text);
      if (r == nullptr) throw UnresolvedReference(words[3].text);
      if (r->algebra != target.name) {
        throw RankMismatch(at_line("module '" + r->name + "' is not over '" + target.name + "'"));
      }
      source_rank = r->rank();
    }
    claim_name(words[1], map_names_);
    map_ = NamedMap{words[1].text, words[3].text, words[5].text,
                    DMatrix(target.rank(), source_rank)};
    block_ = Block::map;
  }

  void start_cochain(const std::vector<Token>& words) {
    finish_block();
    expect_count(words, 8, "cochain <name> degree <p> : <source> -> <target>");
    expect_word(words[2], "degree");
    expect_word(words[4], ":");
    expect_word(words[6], "->");
    unsigned degree = 0;
    {
      const auto& t = words[3].text;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), degree);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        syntax("expected a degree", words[3].column);
      }
      if (degree > 9) syntax("degree above 9 is not supported", words[3].column);
    }
    const auto [src_alg, src_rank] = space_ref(words[5].text);
    const auto [dst_alg, dst_rank] = space_ref(words[7].text);
    CochainKind kind;
    if (src_alg && dst_alg) {
      if (words[5].text != words[7].text) {
        throw RankMismatch(at_line("a cochain between two algebras must be an endo-cochain"));
      }
      kind = CochainKind::l_to_l;
    } else if (src_alg) {
      if (ws_.module(words[7].text).algebra != words[5].text) {
        throw RankMismatch(at_line("module '" + words[7].text + "' is not over '" +
                                   words[5].text + "'"));
      }
      kind = CochainKind::l_to_m;
    } else if (dst_alg) {
      if (ws_.module(words[5].text).algebra != words[7].text) {
        throw RankMismatch(at_line("module '" + words[5].text + "' is not over '" +
                                   words[7].text + "'"));
      }
      kind = CochainKind::m_to_l;
    } else {
      throw RankMismatch(at_line("a cochain must start or end at an algebra"));
    }
    claim_name(words[1], cochain_names_);
    cochain_ = NamedCochain{words[1].text, words[5].text, words[7].text,
                            Cochain(degree, src_rank, dst_rank, kind)};
    block_ = Block::cochain;
  }

  void add_deformation(const std::vector<Token>& words) {
    finish_block();
    if (words.size() < 4 || words.size() % 2 != 0) {
      syntax("expected 'deformation <name> : <map> + <map> ...'", words.back().column);
    }
    expect_word(words[2], ":");
    NamedDeformation def{words[1].text, {}};
    const NamedMap* first = nullptr;
    for (std::size_t i = 3; i < words.size(); i += 2) {
      if (i > 3) expect_word(words[i - 1], "+");
      const auto* m = find_named(ws_.maps, words[i].text);
      if (m == nullptr) throw UnresolvedReference(words[i].text);
      if (first == nullptr) {
        first = m;
      } else if (m->source != first->source || m->target != first->target) {
        throw RankMismatch(at_line("map '" + m->name + "' has a different source or target"));
      }
      def.maps.push_back(m->name);
    }
    claim_name(words[1], deformation_names_);
    ws_.deformations.push_back(std::move(def));
  }

  // ---- block contents

  void require_block(Block b, const Token& t) {
    if (block_ != b) syntax("'" + t.text + "' is not valid here", t.column);
  }

  void set_rank(const std::vector<Token>& words) {
    if (block_ != Block::algebra && block_ != Block::module) {
      syntax("'rank' is not valid here", words[0].column);
    }
    expect_count(words, 2, "rank <n>");
    if (rank_ != 0) syntax("rank given twice", words[0].column);
    rank_ = parse_count(words[1]);
    if (block_ == Block::algebra) {
      algebra_.basis = rank_ == 1 ? std::vector<std::string>{"e"} : default_basis("e", rank_);
      algebra_.bracket = BilinearTable(rank_, rank_, rank_);
      algebra_.alpha = DMatrix::identity(rank_);
    } else {
      const auto& a = algebra_ref(module_.algebra);
      module_.basis = rank_ == 1 ? std::vector<std::string>{"f"} : default_basis("f", rank_);
      module_.action = BilinearTable(a.rank(), rank_, rank_);
      module_.beta = DMatrix::identity(rank_);
    }
  }

  void require_rank_at(const Token& t) {
    if (rank_ == 0) syntax("'" + t.text + "' before 'rank'", t.column);
  }

  void set_basis(const std::vector<Token>& words) {
    if (block_ != Block::algebra && block_ != Block::module) {
      syntax("'basis' is not valid here", words[0].column);
    }
    require_rank_at(words[0]);
    if (words.size() - 1 != rank_) {
      throw RankMismatch(at_line("expected " + std::to_string(rank_) + " basis names"));
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i < words.size(); ++i) {
      if (!valid_name(words[i].text)) syntax("invalid basis name", words[i].column);
      if (std::find(names.begin(), names.end(), words[i].text) != names.end()) {
        throw DuplicateName(at_line("duplicate basis name '" + words[i].text + "'"));
      }
      names.push_back(words[i].text);
    }
    (block_ == Block::algebra ? algebra_.basis : module_.basis) = std::move(names);
  }

  void set_twist(std::string_view line, const std::vector<Token>& words, Block b) {
    require_block(b, words[0]);
    require_rank_at(words[0]);
    if (words.size() < 2) syntax("expected a matrix", words[0].column);
    const std::size_t offset = words[1].column - 1;
    DMatrix m = parse_matrix(line.substr(offset), offset + 1, rank_, rank_, VarSet{Var::d});
    (b == Block::algebra ? algebra_.alpha : module_.beta) = std::move(m);
  }

  void set_pairing(std::string_view line, const std::vector<Token>& words, Block b) {
    require_block(b, words[0]);
    require_rank_at(words[0]);
    if (words.size() < 4) syntax("expected '<i> <j> : <poly> | ...'", words.back().column);
    expect_word(words[3], ":");
    const VarSet vars{Var::d, Var::l};
    auto [payload, column] = after_colon(line, words);
    if (b == Block::algebra) {
      const std::size_t i = parse_index(words[1], rank_);
      const std::size_t j = parse_index(words[2], rank_);
      algebra_.bracket.at(i, j) = parse_slots(payload, column, rank_, vars);
    } else {
      const std::size_t i = parse_index(words[1], module_.action.left());
      const std::size_t a = parse_index(words[2], rank_);
      module_.action.at(i, a) = parse_slots(payload, column, rank_, vars);
    }
  }

  void set_matrix(std::string_view line, const std::vector<Token>& words) {
    require_block(Block::map, words[0]);
    if (words.size() < 2) syntax("expected a matrix", words[0].column);
    if (have_payload_) syntax("matrix given twice", words[0].column);
    const std::size_t offset = words[1].column - 1;
    map_.matrix = parse_matrix(line.substr(offset), offset + 1, map_.matrix.rows(),
                               map_.matrix.cols(), VarSet{Var::d});
    have_payload_ = true;
  }

  void set_value(std::string_view line, const std::vector<Token>& words) {
    require_block(Block::cochain, words[0]);
    Cochain& c = cochain_.value;
    const std::size_t p = c.degree();
    if (words.size() < p + 2) syntax("expected " + std::to_string(p) + " indices and ':'",
                                     words.back().column);
    expect_word(words[p + 1], ":");
    Tuple tuple;
    for (std::size_t k = 0; k < p; ++k) tuple.push_back(parse_index(words[k + 1], c.source_rank()));
    auto [payload, column] = after_colon(line, words);
    const VarSet vars = VarSet::d_and_lambdas(p == 0 ? 0 : static_cast<unsigned>(p - 1));
    c.at(tuple) = parse_slots(payload, column, c.target_rank(), vars);
  }

  std::string_view text_;
  std::size_t line_no_ = 0;
  Workspace ws_;

  Block block_ = Block::none;
  std::size_t rank_ = 0;
  bool have_payload_ = false;
  HomLieConformalAlgebra algebra_;
  Representation module_;
  NamedMap map_;
  NamedCochain cochain_;

  // algebras and modules share one namespace so cochain endpoints are unambiguous
  std::vector<std::string> algebra_names_;
  std::vector<std::string> map_names_;
  std::vector<std::string> cochain_names_;
  std::vector<std::string> deformation_names_;
};

std::string join_slots(const PolyVector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) out += " | ";
    out += v[k].to_string();
  }
  return out;
}

std::string join_matrix(const DMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) out += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += m(r, c).to_string();
    }
  }
  return out;
}

bool same_algebra(const HomLieConformalAlgebra& a, const HomLieConformalAlgebra& b) {
  return a.name == b.name && a.basis == b.basis && a.bracket == b.bracket && a.alpha == b.alpha;
}

bool same_module(const Representation& a, const Representation& b) {
  return a.name == b.name && a.algebra == b.algebra && a.basis == b.basis &&
         a.action == b.action && a.beta == b.beta;
}

}  // namespace

const HomLieConformalAlgebra* Workspace::find_algebra(std::string_view name) const {
  return find_named(algebras, name);
}
const Representation* Workspace::find_module(std::string_view name) const {
  return find_named(modules, name);
}
const NamedMap* Workspace::find_map(std::string_view name) const { return find_named(maps, name); }
const NamedCochain* Workspace::find_cochain(std::string_view name) const {
  return find_named(cochains, name);
}
const NamedDeformation* Workspace::find_deformation(std::string_view name) const {
  return find_named(deformations, name);
}

const HomLieConformalAlgebra& Workspace::algebra(std::string_view name) const {
  return require_named(algebras, name);
}
const Representation& Workspace::module(std::string_view name) const {
  return require_named(modules, name);
}
const NamedMap& Workspace::map(std::string_view name) const { return require_named(maps, name); }
const NamedCochain& Workspace::cochain(std::string_view name) const {
  return require_named(cochains, name);
}
const NamedDeformation& Workspace::deformation(std::string_view name) const {
  return require_named(deformations, name);
}

const HomLieConformalAlgebra& Workspace::target_algebra(const NamedMap& m) const {
  return algebra(m.target);
}

Representation Workspace::source_module(const NamedMap& m) const {
  if (m.is_endomorphism()) return adjoint_rep(algebra(m.target), 0);
  return module(m.source);
}

DeformationSequence Workspace::sequence(std::string_view name) const {
  const NamedDeformation& d = deformation(name);
  DeformationSequence s{d.name, {}};
  for (const auto& m : d.maps) s.maps.push_back(map(m).matrix);
  return s;
}

bool operator==(const Workspace& a, const Workspace& b) {
  return std::equal(a.algebras.begin(), a.algebras.end(), b.algebras.begin(), b.algebras.end(),
                    same_algebra) &&
         std::equal(a.modules.begin(), a.modules.end(), b.modules.begin(), b.modules.end(),
                    same_module) &&
         a.maps == b.maps && a.cochains == b.cochains && a.deformations == b.deformations &&
         std::equal(a.cochains.begin(), a.cochains.end(), b.cochains.begin(), b.cochains.end(),
                    [](const NamedCochain& x, const NamedCochain& y) {
                      return x.value.kind() == y.value.kind();
                    });
}

Workspace parse_workspace(std::string_view text) { return WorkspaceParser(text).parse(); }

std::string serialize(const Workspace& ws) {
  std::ostringstream out;
  auto basis_line = [&](const std::vector<std::string>& basis) {
    out << "basis";
    for (const auto& b : basis) out << ' ' << b;
    out << '\n';
  };
  for (const auto& a : ws.algebras) {
    out << "algebra " << a.name << '\n' << "rank " << a.rank() << '\n';
    basis_line(a.basis);
    out << "alpha " << join_matrix(a.alpha) << '\n';
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = 0; j < a.rank(); ++j) {
        if (a.bracket.at(i, j).is_zero()) continue;
        out << "bracket " << i + 1 << ' ' << j + 1 << " : " << join_slots(a.bracket.at(i, j))
            << '\n';
      }
    }
    out << '\n';
  }
  for (const auto& r : ws.modules) {
    out << "module " << r.name << " over " << r.algebra << '\n' << "rank " << r.rank() << '\n';
    basis_line(r.basis);
    out << "beta " << join_matrix(r.beta) << '\n';
    for (std::size_t i = 0; i < r.action.left(); ++i) {
      for (std::size_t j = 0; j < r.rank(); ++j) {
        if (r.action.at(i, j).is_zero()) continue;
        out << "action " << i + 1 << ' ' << j + 1 << " : " << join_slots(r.action.at(i, j))
            << '\n';
      }
    }
    out << '\n';
  }
  for (const auto& m : ws.maps) {
    out << "map " << m.name << " : " << m.source << " -> " << m.target << '\n'
        << "matrix " << join_matrix(m.matrix) << "\n\n";
  }
  for (const auto& c : ws.cochains) {
    out << "cochain " << c.name << " degree " << c.value.degree() << " : " << c.source << " -> "
        << c.target << '\n';
    for (std::size_t flat = 0; flat < c.value.size(); ++flat) {
      if (c.value.entry(flat).is_zero()) continue;
      out << "value";
      for (std::size_t k : c.value.tuple_of(flat)) out << ' ' << k + 1;
      out << " : " << join_slots(c.value.entry(flat)) << '\n';
    }
    out << '\n';
  }
  for (const auto& d : ws.deformations) {
    out << "deformation " << d.name << " :";
    for (std::size_t i = 0; i < d.maps.size(); ++i) out << (i == 0 ? " " : " + ") << d.maps[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace homconf
