#include "homconf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "homconf/errors.hpp"

namespace homconf {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "d", "l", "l1", "l2", "l3", "l4", "l5", "l6", "l7", "l8", "l9"};

}  // namespace

Var lambda(unsigned i) {
  if (i < 1 || i > kMaxLambdaIndex) {
    throw Error("lambda index " + std::to_string(i) + " out of range 1..9");
  }
  return static_cast<Var>(static_cast<unsigned>(Var::l1) + i - 1);
}

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

VarSet::VarSet(std::initializer_list<Var> vars) {
  for (Var v : vars) insert(v);
}

VarSet VarSet::all() {
  VarSet s;
  for (std::size_t i = 0; i < kVarCount; ++i) s.insert(static_cast<Var>(i));
  return s;
}

VarSet VarSet::d_and_lambdas(unsigned count) {
  VarSet s{Var::d};
  for (unsigned i = 1; i <= count; ++i) s.insert(lambda(i));
  return s;
}

// ---------------------------------------------------------------------------
// Poly

mpq_class canonical(mpq_class q) {
  q.canonicalize();
  return q;
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Exponents{}, mpq_class(value));
}

Poly::Poly(const mpq_class& value) {
  if (value != 0) terms_.emplace(Exponents{}, canonical(value));
}

Poly Poly::variable(Var v, unsigned power) {
  Exponents e{};
  e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exponents& exponents, const mpq_class& coeff) {
  Poly p;
  if (coeff != 0) p.terms_.emplace(exponents, canonical(coeff));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

mpq_class Poly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

unsigned Poly::degree(Var v) const {
  unsigned deg = 0;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) deg = std::max<unsigned>(deg, e[idx]);
  return deg;
}

unsigned Poly::total_degree() const {
  unsigned deg = 0;
  for (const auto& [e, c] : terms_) {
    unsigned t = 0;
    for (auto x : e) t += x;
    deg = std::max(deg, t);
  }
  return deg;
}

bool Poly::uses_only(const VarSet& allowed) const {
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (!allowed.contains(static_cast<Var>(i)) && depends_on(static_cast<Var>(i))) {
      return false;
    }
  }
  return true;
}

void Poly::add_term(const Exponents& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, canonical(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  Poly::Exponents e;
  mpq_class c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < kVarCount; ++i) {
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      }
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const mpq_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    const mpq_class k = canonical(scalar);
    for (auto& [e, c] : terms_) c *= k;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string rational_to_string(const mpq_class& q) { return canonical(q).get_str(); }

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    out += magnitude.get_str();
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      out += "*";
      out += kVarNames[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VarSet& allowed) : text_(text), allowed_(allowed) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("syntax error at column " + std::to_string(pos_ + 1) + ": " + message, 0,
                     pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Poly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent after '^'");
      if (digits.size() > 4) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    bool negative = false;
    if ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      negative = c == '-';
      c = text_[++pos_];
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(read_digits());
      if (negative) num = -num;
      mpz_class den(1);
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string d = read_digits();
        if (d.empty()) fail("expected denominator after '/'");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return Poly(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto v = var_from_name(name);
      if (!v || !allowed_.contains(*v)) throw UnknownVariable(name);
      return Poly::variable(*v);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarSet allowed_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarSet& allowed) {
  return PolyParser(text, allowed).parse();
}

mpq_class parse_rational(std::string_view text) {
  Poly p = parse_poly(text, VarSet{});
  return p.constant_term();
}

// ---------------------------------------------------------------------------
// Substitution

Substitution& Substitution::set(Var v, Poly value) {
  values_[static_cast<std::size_t>(v)] = std::move(value);
  return *this;
}

bool Substitution::empty() const {
  return std::none_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
}

Poly substitute(const Poly& p, const Substitution& s) {
  if (s.empty() || p.is_zero()) return p;
  // powers[v][k] = s[v]^k, filled lazily
  std::array<std::vector<Poly>, kVarCount> powers;
  auto power_of = [&](std::size_t v, unsigned k) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= k) cache.push_back(cache.back() * *s[static_cast<Var>(v)]);
    return cache[k];
  };

  Poly out;
  for (const auto& [e, c] : p.terms()) {
    Poly::Exponents kept = e;
    Poly term;
    bool have_term = false;
    for (std::size_t v = 0; v < kVarCount; ++v) {
      if (e[v] == 0 || !s[static_cast<Var>(v)]) continue;
      kept[v] = 0;
      const Poly& pw = power_of(v, e[v]);
      if (!have_term) {
        term = pw;
        have_term = true;
      } else {
        term *= pw;
      }
    }
    Poly mono = Poly::monomial(kept, c);
    out += have_term ? mono * term : mono;
  }
  return out;
}

Poly poly_substitute(const Poly& p, Var v, const Poly& value) {
  return substitute(p, Substitution(v, value));
}

// ---------------------------------------------------------------------------
// PolyVector

PolyVector PolyVector::unit(std::size_t size, std::size_t i) {
  PolyVector v(size);
  v.entries_.at(i) = Poly(1);
  return v;
}

bool PolyVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyVector::uses_only(const VarSet& allowed) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const Poly& p) { return p.uses_only(allowed); });
}

PolyVector& PolyVector::operator+=(const PolyVector& other) {
  if (other.size() != size()) throw RankMismatch("vector length mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& other) {
  if (other.size() != size()) throw RankMismatch("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

PolyVector& PolyVector::operator*=(const Poly& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

PolyVector PolyVector::operator-() const {
  PolyVector out(size());
  for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

PolyVector substitute(const PolyVector& v, const Substitution& s) {
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(substitute(p, s));
  return PolyVector(std::move(out));
}

}  // namespace homconf
