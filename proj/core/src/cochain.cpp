#include <algorithm>
#include <numeric>

#include "homconf/complex.hpp"
#include "homconf/errors.hpp"

namespace homconf {

std::string_view kind_name(CochainKind k) {
  switch (k) {
    case CochainKind::l_to_l:
      return "L->L";
    case CochainKind::l_to_m:
      return "L->M";
    case CochainKind::m_to_l:
      return "M->L";
    case CochainKind::v_to_v:
      return "V->V";
  }
  return "?";
}

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Cochain::Cochain(unsigned degree, std::size_t source_rank, std::size_t target_rank,
                 CochainKind kind)
    : degree_(degree), source_rank_(source_rank), target_rank_(target_rank), kind_(kind) {
  if (degree > kMaxLambdaIndex) {
    throw Error("cochain degree " + std::to_string(degree) + " exceeds the limit of 9");
  }
  values_.assign(ipow(source_rank, degree), PolyVector(target_rank));
}

Cochain Cochain::from_map(const DMatrix& m, CochainKind kind) {
  Cochain f(1, m.cols(), m.rows(), kind);
  for (std::size_t c = 0; c < m.cols(); ++c) f.values_[c] = m.column(c);
  return f;
}

Cochain Cochain::from_table(const BilinearTable& t, CochainKind kind) {
  if (t.left() != t.right()) throw RankMismatch("pairing table is not square");
  Cochain f(2, t.left(), t.out(), kind);
  const Substitution rename(Var::l, Poly::variable(Var::l1));
  for (std::size_t i = 0; i < t.left(); ++i) {
    for (std::size_t j = 0; j < t.right(); ++j) f.at({i, j}) = substitute(t.at(i, j), rename);
  }
  return f;
}

Cochain Cochain::from_element(const PolyVector& x, std::size_t source_rank, CochainKind kind) {
  Cochain f(0, source_rank, x.size(), kind);
  f.values_[0] = x;
  return f;
}

Tuple Cochain::tuple_of(std::size_t flat) const {
  Tuple t(degree_);
  for (unsigned k = degree_; k-- > 0;) {
    t[k] = flat % source_rank_;
    flat /= source_rank_;
  }
  return t;
}

std::size_t Cochain::index_of(const Tuple& t) const {
  if (t.size() != degree_) throw RankMismatch("tuple length does not match the cochain degree");
  std::size_t flat = 0;
  for (std::size_t k : t) {
    if (k >= source_rank_) throw RankMismatch("tuple index out of range");
    flat = flat * source_rank_ + k;
  }
  return flat;
}

DMatrix Cochain::to_map() const {
  if (degree_ != 1) throw KindMismatch("only degree 1 cochains are module maps");
  DMatrix m(target_rank_, source_rank_);
  for (std::size_t c = 0; c < source_rank_; ++c) {
    for (std::size_t r = 0; r < target_rank_; ++r) m(r, c) = values_[c][r];
  }
  return m;
}

const PolyVector& Cochain::element() const {
  if (degree_ != 0) throw KindMismatch("only degree 0 cochains are elements");
  return values_[0];
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const PolyVector& v) { return v.is_zero(); });
}

unsigned Cochain::d_degree() const {
  unsigned deg = 0;
  for (const auto& v : values_) {
    for (const auto& p : v) deg = std::max(deg, p.degree(Var::d));
  }
  return deg;
}

void Cochain::require_same_shape(const Cochain& other) const {
  if (degree_ != other.degree_ || source_rank_ != other.source_rank_ ||
      target_rank_ != other.target_rank_) {
    throw RankMismatch("cochains of different shapes");
  }
}

Cochain& Cochain::operator+=(const Cochain& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  require_same_shape(other);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

Cochain& Cochain::operator*=(const mpq_class& scalar) {
  for (auto& v : values_) v *= Poly(scalar);
  return *this;
}

Cochain Cochain::operator-() const {
  Cochain out = *this;
  for (auto& v : out.values_) v = -v;
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.degree_ == b.degree_ && a.source_rank_ == b.source_rank_ &&
         a.target_rank_ == b.target_rank_ && a.values_ == b.values_;
}

Space space_of(const HomLieConformalAlgebra& a) { return Space{a.basis, a.alpha}; }
Space space_of(const Representation& r) { return Space{r.basis, r.beta}; }

// ---------------------------------------------------------------------------
// Evaluation

Poly dependent_lambda(unsigned n) {
  Poly p = -Poly::variable(Var::d);
  for (unsigned k = 1; k < n; ++k) p -= Poly::variable(lambda(k));
  return p;
}

PolyVector close_last_lambda(const PolyVector& v, unsigned n) {
  return substitute(v, Substitution(lambda(n), dependent_lambda(n)));
}

PolyVector evaluate(const Cochain& f, const std::vector<PolyVector>& args,
                    const std::vector<Poly>& labels) {
  const unsigned p = f.degree();
  if (p == 0) {
    if (!args.empty()) throw RankMismatch("a degree 0 cochain takes no arguments");
    return f.element();
  }
  if (args.size() != p || labels.size() != p - 1) {
    throw RankMismatch("evaluating a degree " + std::to_string(p) + " cochain on " +
                       std::to_string(args.size()) + " arguments");
  }
  for (const auto& a : args) {
    if (a.size() != f.source_rank()) throw RankMismatch("argument length mismatch");
  }

  // Coordinates of each argument after moving its d into the parameter slot.
  Poly total;
  for (const auto& nu : labels) total += nu;
  std::vector<std::vector<Poly>> coords(p);
  for (unsigned i = 0; i < p; ++i) {
    const Substitution s =
        i + 1 < p ? Substitution(Var::d, -labels[i])
                  : Substitution(Var::d, Poly::variable(Var::d) + total);
    coords[i].resize(f.source_rank());
    for (std::size_t a = 0; a < f.source_rank(); ++a) {
      if (!args[i][a].is_zero()) coords[i][a] = substitute(args[i][a], s);
    }
  }
  Substitution relabel;
  for (unsigned k = 0; k + 1 < p; ++k) relabel.set(lambda(k + 1), labels[k]);

  PolyVector out(f.target_rank());
  Tuple t(p, 0);
  std::vector<Poly> prefix(p + 1);
  prefix[0] = Poly(1);
  // Depth-first walk over tuples with nonzero coordinate products.
  std::function<void(unsigned)> walk = [&](unsigned depth) {
    if (depth == p) {
      const PolyVector& value = f.at(t);
      if (value.is_zero()) return;
      out += prefix[p] * substitute(value, relabel);
      return;
    }
    for (std::size_t a = 0; a < f.source_rank(); ++a) {
      if (coords[depth][a].is_zero()) continue;
      t[depth] = a;
      prefix[depth + 1] = prefix[depth] * coords[depth][a];
      walk(depth + 1);
    }
  };
  walk(0);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric group action

int permutation_sign(const std::vector<unsigned>& tau) {
  int sign = 1;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    for (std::size_t j = i + 1; j < tau.size(); ++j) {
      if (tau[i] > tau[j]) sign = -sign;
    }
  }
  return sign;
}

Cochain permuted(const Cochain& f, const std::vector<unsigned>& tau) {
  const unsigned p = f.degree();
  if (tau.size() != p) throw RankMismatch("permutation length does not match the degree");
  Cochain out(p, f.source_rank(), f.target_rank(), f.kind());
  if (p == 0) return f;

  auto param = [&](unsigned k) {
    return k + 1 < p ? Poly::variable(lambda(k + 1)) : dependent_lambda(p);
  };
  Substitution s;
  for (unsigned k = 0; k + 1 < p; ++k) s.set(lambda(k + 1), param(tau[k]));

  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Tuple b = out.tuple_of(flat);
    Tuple src(p);
    for (unsigned k = 0; k < p; ++k) src[k] = b[tau[k]];
    out.entry(flat) = substitute(f.at(src), s);
  }
  return out;
}

Cochain antisymmetrize(const Cochain& f) {
  const unsigned p = f.degree();
  Cochain out(p, f.source_rank(), f.target_rank(), f.kind());
  if (p <= 1) return f;
  std::vector<unsigned> tau(p);
  std::iota(tau.begin(), tau.end(), 0U);
  mpq_class count = 0;
  do {
    Cochain term = permuted(f, tau);
    if (permutation_sign(tau) > 0) {
      out += term;
    } else {
      out -= term;
    }
    count += 1;
  } while (std::next_permutation(tau.begin(), tau.end()));
  out *= 1 / count;
  return out;
}

Report check_cochain(const Cochain& f, const Space& source, const Space& target) {
  if (f.source_rank() != source.rank() || f.target_rank() != target.rank()) {
    throw RankMismatch("cochain shape does not match its source and target");
  }
  const unsigned p = f.degree();
  Report report;
  report.subject = "cochain of degree " + std::to_string(p);
  Check& twist = report.add("twist", "target twist of f = f on twisted arguments");
  Check& skew = report.add("skew", "f + (adjacent transposition).f = 0");

  auto names = [&](const Tuple& t) {
    std::vector<std::string> out;
    for (std::size_t k : t) out.push_back(source.basis[k]);
    return out;
  };

  std::vector<Poly> labels;
  for (unsigned k = 1; k < p; ++k) labels.push_back(Poly::variable(lambda(k)));
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    const Tuple t = f.tuple_of(flat);
    std::vector<PolyVector> args;
    for (std::size_t k : t) args.push_back(source.twist.column(k));
    PolyVector value = target.twist.apply(f.entry(flat)) - evaluate(f, args, labels);
    twist.record(names(t), value, target.basis);
  }

  for (unsigned k = 0; k + 1 < p; ++k) {
    std::vector<unsigned> tau(p);
    std::iota(tau.begin(), tau.end(), 0U);
    std::swap(tau[k], tau[k + 1]);
    const Cochain swapped = permuted(f, tau);
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      std::vector<std::string> tuple = names(f.tuple_of(flat));
      tuple.push_back("swap " + std::to_string(k + 1) + "," + std::to_string(k + 2));
      skew.record(std::move(tuple), f.entry(flat) + swapped.entry(flat), target.basis);
    }
  }
  return report;
}

}  // namespace homconf
