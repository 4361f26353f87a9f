#include <algorithm>
#include <numeric>

#include "homconf/complex.hpp"
#include "homconf/errors.hpp"

namespace homconf {

namespace {

std::vector<Poly> formal_labels(unsigned n) {
  std::vector<Poly> labels;
  for (unsigned k = 1; k <= n; ++k) labels.push_back(Poly::variable(lambda(k)));
  return labels;
}

/// Drops the parameter of the last argument.
std::vector<Poly> free_part(std::vector<Poly> labels) {
  if (!labels.empty()) labels.pop_back();
  return labels;
}

void require_degree_room(unsigned needed) {
  if (needed > kMaxLambdaIndex) {
    throw Error("result would need parameter l" + std::to_string(needed) +
                "; at most l9 is available");
  }
}

}  // namespace

Cochain coboundary(const BilinearTable& bracket, const StructureMap& alpha,
                   const BilinearTable& action, const Cochain& f) {
  const std::size_t n = bracket.left();
  if (f.source_rank() != n || action.left() != n || action.right() != f.target_rank() ||
      action.out() != f.target_rank() || alpha.rows() != n) {
    throw RankMismatch("cochain does not match the algebra and module ranks");
  }
  const unsigned p = f.degree();
  require_degree_room(p + 1);
  Cochain out(p + 1, n, f.target_rank(), f.kind());

  if (p == 0) {
    const DMatrix inv = invert_structure_map(alpha);
    for (std::size_t i = 0; i < n; ++i) {
      PolyVector v = action.pair(inv.column(i), f.element(), Poly::variable(Var::l1));
      out.at({i}) = substitute(v, Substitution(Var::l1, -Poly::variable(Var::d)));
    }
    return out;
  }

  const DMatrix twist_p = alpha.pow(static_cast<int>(p) - 1);
  const std::vector<Poly> labels = formal_labels(p + 1);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Tuple b = out.tuple_of(flat);
    PolyVector total(f.target_rank());

    for (unsigned i = 0; i <= p; ++i) {
      std::vector<PolyVector> args;
      std::vector<Poly> labs;
      for (unsigned k = 0; k <= p; ++k) {
        if (k == i) continue;
        args.push_back(PolyVector::unit(n, b[k]));
        labs.push_back(labels[k]);
      }
      PolyVector inner = evaluate(f, args, free_part(labs));
      PolyVector term = action.pair(twist_p.column(b[i]), inner, labels[i]);
      if (i % 2 == 0) {
        total += term;
      } else {
        total -= term;
      }
    }

    for (unsigned i = 0; i <= p; ++i) {
      for (unsigned j = i + 1; j <= p; ++j) {
        std::vector<PolyVector> args{
            bracket.pair(PolyVector::unit(n, b[i]), PolyVector::unit(n, b[j]), labels[i])};
        std::vector<Poly> labs{labels[i] + labels[j]};
        for (unsigned k = 0; k <= p; ++k) {
          if (k == i || k == j) continue;
          args.push_back(alpha.column(b[k]));
          labs.push_back(labels[k]);
        }
        PolyVector term = evaluate(f, args, free_part(labs));
        if ((i + j) % 2 == 0) {
          total += term;
        } else {
          total -= term;
        }
      }
    }
    out.entry(flat) = close_last_lambda(total, p + 1);
  }
  return out;
}

Cochain coboundary(const HomLieConformalAlgebra& a, const Representation& r, const Cochain& f) {
  validate_shape(a, r);
  return coboundary(a.bracket, a.alpha, r.action, f);
}

Cochain circle(const Cochain& f, const Cochain& g, const StructureMap& twist) {
  if (f.kind() != g.kind() ||
      (f.kind() != CochainKind::l_to_l && f.kind() != CochainKind::v_to_v)) {
    throw KindMismatch(std::string("circle product needs two endomorphism cochains of one kind, got ") +
                       std::string(kind_name(f.kind())) + " and " +
                       std::string(kind_name(g.kind())));
  }
  const std::size_t n = f.source_rank();
  if (f.target_rank() != n || g.source_rank() != n || g.target_rank() != n ||
      twist.rows() != n || twist.cols() != n) {
    throw RankMismatch("circle product operands have different ranks");
  }
  const unsigned m = f.degree();
  const unsigned k = g.degree();
  if (m == 0 || k == 0) throw PreconditionFailed("circle product needs degrees at least 1");
  const unsigned total_degree = m + k - 1;
  require_degree_room(total_degree);

  const DMatrix spectator = twist.pow(static_cast<int>(k) - 1);
  const std::vector<Poly> labels = formal_labels(total_degree);
  Cochain out(total_degree, n, n, f.kind());

  // Shuffles: the first k positions of `order` increase, as do the rest.
  std::vector<std::vector<unsigned>> shuffles;
  std::vector<bool> chosen(total_degree, false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    std::vector<unsigned> order;
    for (unsigned i = 0; i < total_degree; ++i) {
      if (chosen[i]) order.push_back(i);
    }
    for (unsigned i = 0; i < total_degree; ++i) {
      if (!chosen[i]) order.push_back(i);
    }
    shuffles.push_back(std::move(order));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));

  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Tuple b = out.tuple_of(flat);
    PolyVector sum(n);
    for (const auto& tau : shuffles) {
      std::vector<PolyVector> inner_args;
      std::vector<Poly> inner_labels;
      Poly combined;
      for (unsigned i = 0; i < k; ++i) {
        inner_args.push_back(PolyVector::unit(n, b[tau[i]]));
        inner_labels.push_back(labels[tau[i]]);
        combined += labels[tau[i]];
      }
      std::vector<PolyVector> outer_args{evaluate(g, inner_args, free_part(inner_labels))};
      std::vector<Poly> outer_labels{combined};
      for (unsigned i = k; i < total_degree; ++i) {
        outer_args.push_back(spectator.column(b[tau[i]]));
        outer_labels.push_back(labels[tau[i]]);
      }
      PolyVector term = evaluate(f, outer_args, free_part(outer_labels));
      if (permutation_sign(tau) > 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.entry(flat) = close_last_lambda(sum, total_degree);
  }
  return out;
}

Cochain nr_bracket(const Cochain& f, const Cochain& g, const StructureMap& twist) {
  Cochain out = circle(f, g, twist);
  Cochain back = circle(g, f, twist);
  if ((f.degree() - 1) * (g.degree() - 1) % 2 == 0) {
    out -= back;
  } else {
    out += back;
  }
  return out;
}

Cochain lift(const Cochain& f, std::size_t l_rank, std::size_t m_rank) {
  if (f.source_rank() != m_rank || f.target_rank() != l_rank) {
    throw RankMismatch("lift expects a cochain from M to L");
  }
  const std::size_t v_rank = l_rank + m_rank;
  Cochain out(f.degree(), v_rank, v_rank, CochainKind::v_to_v);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    Tuple t = f.tuple_of(flat);
    for (auto& k : t) k += l_rank;
    PolyVector v(v_rank);
    for (std::size_t r = 0; r < l_rank; ++r) v[r] = f.entry(flat)[r];
    out.at(t) = std::move(v);
  }
  return out;
}

Cochain theta_hat(const HomLieConformalAlgebra& a, const Representation& r) {
  return Cochain::from_table(semidirect_bracket(a, r).bracket, CochainKind::v_to_v);
}

Cochain project(const Cochain& f, std::size_t l_rank, std::size_t m_rank) {
  const std::size_t v_rank = l_rank + m_rank;
  if (f.source_rank() != v_rank || f.target_rank() != v_rank) {
    throw RankMismatch("projection expects a cochain on L + M");
  }
  Cochain out(f.degree(), m_rank, l_rank, CochainKind::m_to_l);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    const Tuple t = f.tuple_of(flat);
    const PolyVector& v = f.entry(flat);
    const bool m_tuple = std::all_of(t.begin(), t.end(), [&](std::size_t k) { return k >= l_rank; });
    for (std::size_t r = 0; r < v_rank; ++r) {
      if (v[r].is_zero()) continue;
      if (!m_tuple || r >= l_rank) {
        throw ConsistencyError("bracket has a nonzero component outside the M -> L block: " +
                               v[r].to_string());
      }
    }
    if (!m_tuple) continue;
    Tuple src = t;
    for (auto& k : src) k -= l_rank;
    PolyVector w(l_rank);
    for (std::size_t r = 0; r < l_rank; ++r) w[r] = v[r];
    out.at(src) = std::move(w);
  }
  return out;
}

Report mc_check(const HomLieConformalAlgebra& a, const Representation& r) {
  const HomLieConformalAlgebra v = semidirect_bracket(a, r);
  const Cochain theta = Cochain::from_table(v.bracket, CochainKind::v_to_v);
  const Space space = space_of(v);

  Report report;
  report.subject = "Maurer-Cartan element for " + a.name + " and " + r.name;
  Report shape = check_cochain(theta, space, space);
  Check skew = *shape.find("skew");
  skew.id = "theta-skew";
  report.checks.push_back(skew);
  Check twist = *shape.find("twist");
  twist.id = "theta-twist";
  twist.required = false;
  report.checks.push_back(twist);

  Check& mc = report.add("mc", "[theta, theta] = 0");
  const Cochain sq = nr_bracket(theta, theta, v.alpha);
  for (std::size_t flat = 0; flat < sq.size(); ++flat) {
    std::vector<std::string> names;
    for (std::size_t k : sq.tuple_of(flat)) names.push_back(v.basis[k]);
    mc.record(std::move(names), sq.entry(flat), v.basis);
  }
  return report;
}

}  // namespace homconf
