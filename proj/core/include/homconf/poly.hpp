#pragma once

// Exact multivariate polynomials over Q in the fixed variable universe
// {d, l, l1, ..., l9}. The variable d stands for the translation operator
// and the l's for the formal lambda parameters of conformal brackets.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homconf {

enum class Var : std::uint8_t { d = 0, l, l1, l2, l3, l4, l5, l6, l7, l8, l9 };

inline constexpr std::size_t kVarCount = 11;
inline constexpr unsigned kMaxLambdaIndex = 9;

/// The variable l<i> for 1 <= i <= 9.
Var lambda(unsigned i);
std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// A set of variables, used to restrict what a parser accepts.
class VarSet {
 public:
  constexpr VarSet() = default;
  VarSet(std::initializer_list<Var> vars);

  static VarSet all();
  /// {d, l1, ..., l<count>}.
  static VarSet d_and_lambdas(unsigned count);

  bool contains(Var v) const { return (bits_ >> static_cast<unsigned>(v)) & 1U; }
  VarSet& insert(Var v) {
    bits_ |= 1U << static_cast<unsigned>(v);
    return *this;
  }

 private:
  std::uint32_t bits_ = 0;
};

class Poly {
 public:
  using Exponents = std::array<std::uint16_t, kVarCount>;
  // Descending lexicographic order on (d, l, l1, ..., l9): the print order.
  using TermMap = std::map<Exponents, mpq_class, std::greater<Exponents>>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  Poly(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  static Poly variable(Var v, unsigned power = 1);
  static Poly monomial(const Exponents& exponents, const mpq_class& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant coefficient (zero if absent).
  mpq_class constant_term() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  unsigned degree(Var v) const;
  unsigned total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }
  /// True iff every variable occurring is in `allowed`.
  bool uses_only(const VarSet& allowed) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const mpq_class& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const mpq_class& s) { return a *= s; }
  friend Poly operator*(const mpq_class& s, Poly a) { return a *= s; }
  Poly operator-() const;

  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Canonical text form, parseable by parse_poly.
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const mpq_class& c);

  TermMap terms_;
};

/// Parses the polynomial grammar
///   expr := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
///   factor := base ('^' uint)? ; base := rational | variable | '(' expr ')'
/// with an optional leading sign on an expression. Throws ParseError with the
/// 0-based column of the offending character, or UnknownVariable.
Poly parse_poly(std::string_view text, const VarSet& allowed = VarSet::all());

/// A simultaneous substitution of polynomials for variables.
class Substitution {
 public:
  Substitution() = default;
  Substitution(Var v, Poly value) { set(v, std::move(value)); }

  Substitution& set(Var v, Poly value);
  const std::optional<Poly>& operator[](Var v) const {
    return values_[static_cast<std::size_t>(v)];
  }
  bool empty() const;

 private:
  std::array<std::optional<Poly>, kVarCount> values_{};
};

Poly substitute(const Poly& p, const Substitution& s);
/// Ring homomorphism fixing every variable except `v`, which maps to `value`.
Poly poly_substitute(const Poly& p, Var v, const Poly& value);
inline bool poly_equal_zero(const Poly& p) { return p.is_zero(); }

/// Fixed-length vector of polynomials: an element of a free module with
/// polynomial coefficients in a chosen basis.
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(std::size_t size) : entries_(size) {}
  PolyVector(std::initializer_list<Poly> entries) : entries_(entries) {}
  explicit PolyVector(std::vector<Poly> entries) : entries_(std::move(entries)) {}

  /// The i-th standard basis vector of length `size`.
  static PolyVector unit(std::size_t size, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Poly& operator[](std::size_t i) const { return entries_[i]; }
  Poly& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Poly>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  bool uses_only(const VarSet& allowed) const;

  PolyVector& operator+=(const PolyVector& other);
  PolyVector& operator-=(const PolyVector& other);
  PolyVector& operator*=(const Poly& scalar);

  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  friend PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
  friend PolyVector operator*(const Poly& s, PolyVector a) { return a *= s; }
  PolyVector operator-() const;

  friend bool operator==(const PolyVector& a, const PolyVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Poly> entries_;
};

PolyVector substitute(const PolyVector& v, const Substitution& s);

/// Parses a rational constant such as "-3/4".
mpq_class parse_rational(std::string_view text);
/// A copy in lowest terms with a positive denominator.
mpq_class canonical(mpq_class q);
std::string rational_to_string(const mpq_class& q);

}  // namespace homconf
