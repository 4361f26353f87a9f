#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "homconf/poly.hpp"

namespace homconf {

enum class Status { pass, fail, advisory };

std::string_view status_name(Status s);

/// A nonvanishing value found while checking an identity at a basis tuple.
struct Witness {
  std::vector<std::string> tuple;
  PolyVector value;
  std::vector<std::string> components;

  std::string tuple_string() const;
  std::string value_string() const;
};

/// Renders sum_k v_k * name_k, e.g. "(-1*d - 2*l)*e"; zero renders as "0".
std::string format_vector(const PolyVector& v, const std::vector<std::string>& names);

struct Check {
  std::string id;
  std::string description;
  bool required = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<Witness> witnesses;

  /// Counts one case; a nonzero value is a failure and is kept as a witness.
  void record(std::vector<std::string> tuple, const PolyVector& value,
              const std::vector<std::string>& components);
  void record_flag(std::vector<std::string> tuple, bool ok);

  Status status() const;
};

struct Report {
  std::string subject;
  // deque: references returned by add() stay valid.
  std::deque<Check> checks;

  Check& add(std::string id, std::string description, bool required = true);
  const Check* find(std::string_view id) const;
  bool check_passed(std::string_view id) const;
  /// No required check has failures.
  bool passed() const;
  /// Appends the checks of another report, prefixing their ids.
  void merge(const Report& other, const std::string& prefix);
};

}  // namespace homconf
