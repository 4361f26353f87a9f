#include "homconf/report.hpp"

#include <algorithm>

namespace homconf {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::advisory:
      return "advisory";
  }
  return "fail";
}

std::string format_vector(const PolyVector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string& name = k < names.size() ? names[k] : "#" + std::to_string(k + 1);
    if (v[k] == Poly(1)) {
      out += name;
    } else {
      out += "(" + v[k].to_string() + ")*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string Witness::tuple_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i];
  }
  return out + ")";
}

std::string Witness::value_string() const { return format_vector(value, components); }

void Check::record(std::vector<std::string> tuple, const PolyVector& value,
                   const std::vector<std::string>& components) {
  ++cases;
  if (value.is_zero()) return;
  ++failures;
  witnesses.push_back(Witness{std::move(tuple), value, components});
}

void Check::record_flag(std::vector<std::string> tuple, bool ok) {
  ++cases;
  if (ok) return;
  ++failures;
  witnesses.push_back(Witness{std::move(tuple), PolyVector{}, {}});
}

Status Check::status() const {
  if (failures == 0) return Status::pass;
  return required ? Status::fail : Status::advisory;
}

Check& Report::add(std::string id, std::string description, bool required) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.required = required;
  checks.push_back(std::move(c));
  return checks.back();
}

const Check* Report::find(std::string_view id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

bool Report::check_passed(std::string_view id) const {
  const Check* c = find(id);
  return c != nullptr && c->failures == 0;
}

bool Report::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status() == Status::fail; });
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.id = prefix + c.id;
    checks.push_back(std::move(c));
  }
}

}  // namespace homconf
