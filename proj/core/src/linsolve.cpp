#include "homconf/linsolve.hpp"

#include <map>
#include <set>

#include "homconf/errors.hpp"

namespace homconf {

Echelon row_reduce(RationalMatrix m, std::size_t cols) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const mpq_class inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const mpq_class factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    e.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  e.rows = std::move(m);
  return e;
}

std::size_t rank_of(const RationalMatrix& m, std::size_t cols) {
  return row_reduce(m, cols).pivots.size();
}

std::optional<RationalRow> solve(const RationalMatrix& a, const RationalRow& b, std::size_t cols) {
  if (a.size() != b.size()) throw RankMismatch("right-hand side length differs from row count");
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (aug[r].size() != cols) throw RankMismatch("matrix row has the wrong length");
    aug[r].push_back(b[r]);
  }
  const Echelon e = row_reduce(std::move(aug), cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  RationalRow x(cols, mpq_class(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.rows[r][cols];
  return x;
}

RationalMatrix nullspace(const RationalMatrix& a, std::size_t cols) {
  const Echelon e = row_reduce(a, cols);
  std::set<std::size_t> pivot_set(e.pivots.begin(), e.pivots.end());
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_set.count(free)) continue;
    RationalRow v(cols, mpq_class(0));
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

PolyLinearSystem coefficient_equations(const std::vector<std::vector<Poly>>& images,
                                       const std::vector<Poly>& rhs) {
  const std::size_t unknowns = images.size();
  PolyLinearSystem sys;
  for (std::size_t pos = 0; pos < rhs.size(); ++pos) {
    std::map<Poly::Exponents, RationalRow, std::greater<>> rows;
    auto row_for = [&](const Poly::Exponents& e) -> RationalRow& {
      auto it = rows.find(e);
      if (it == rows.end()) it = rows.emplace(e, RationalRow(unknowns + 1, mpq_class(0))).first;
      return it->second;
    };
    for (std::size_t u = 0; u < unknowns; ++u) {
      if (images[u].size() != rhs.size()) throw RankMismatch("image length mismatch");
      for (const auto& [e, c] : images[u][pos].terms()) row_for(e)[u] += c;
    }
    for (const auto& [e, c] : rhs[pos].terms()) row_for(e)[unknowns] += c;
    for (auto& [e, row] : rows) {
      sys.rhs.push_back(row.back());
      row.pop_back();
      sys.matrix.push_back(std::move(row));
    }
  }
  return sys;
}

}  // namespace homconf
