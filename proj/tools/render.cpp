#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace homconf::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string status_label(Status s) { return std::string(status_name(s)); }

std::string overall_label(const ReportDocument& doc) {
  if (doc.error) return "error";
  return doc.passed() ? "pass" : "fail";
}

std::size_t shown_witnesses(const Check& c, bool all) {
  return all ? c.witnesses.size() : std::min<std::size_t>(c.witnesses.size(), 1);
}

}  // namespace

std::string render_text(const ReportDocument& doc, bool all_witnesses) {
  std::ostringstream out;
  out << "homconf " << doc.version << '\n';
  out << "command: " << doc.command << '\n';
  if (doc.error) {
    out << "error: " << *doc.error << '\n';
    out << "overall: error\n";
    return out.str();
  }
  if (!doc.subject.empty()) out << "subject: " << doc.subject << '\n';
  for (const auto& c : doc.checks) {
    out << "check " << c.id << ": " << status_label(c.status());
    out << " (" << c.failures << " of " << c.cases << " cases nonzero)";
    if (!c.required) out << " [advisory]";
    out << '\n';
    for (std::size_t w = 0; w < shown_witnesses(c, all_witnesses); ++w) {
      const Witness& wit = c.witnesses[w];
      out << "  witness " << wit.tuple_string();
      if (wit.value.size() > 0) out << ": " << wit.value_string();
      out << '\n';
    }
  }
  for (const auto& r : doc.results) {
    out << "result " << r.title << ":\n";
    for (const auto& [key, value] : r.facts) out << "  " << key << " = " << value << '\n';
    for (const auto& e : r.entries) {
      out << "  ";
      if (!e.tuple.empty() || !e.value.empty()) {
        out << '(';
        for (std::size_t i = 0; i < e.tuple.size(); ++i) out << (i ? ", " : "") << e.tuple[i];
        out << ") -> ";
      }
      out << e.rendered << '\n';
    }
  }
  out << "overall: " << overall_label(doc) << '\n';
  return out.str();
}

std::string render_json(const ReportDocument& doc, bool all_witnesses) {
  Json j;
  j["tool"] = "homconf";
  j["version"] = doc.version;
  j["command"] = doc.command;
  if (doc.error) {
    j["error"] = *doc.error;
    j["overall"] = "error";
    return j.dump(2) + '\n';
  }
  j["subject"] = doc.subject;
  Json checks = Json::array();
  for (const auto& c : doc.checks) {
    Json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["status"] = status_label(c.status());
    jc["required"] = c.required;
    jc["cases"] = c.cases;
    jc["failures"] = c.failures;
    Json ws = Json::array();
    for (std::size_t w = 0; w < shown_witnesses(c, all_witnesses); ++w) {
      const Witness& wit = c.witnesses[w];
      Json jw;
      jw["tuple"] = wit.tuple;
      if (wit.value.size() > 0) {
        jw["value"] = wit.value_string();
        Json comps = Json::array();
        for (const auto& p : wit.value) comps.push_back(p.to_string());
        jw["components"] = comps;
      }
      ws.push_back(std::move(jw));
    }
    jc["witnesses"] = std::move(ws);
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  Json results = Json::array();
  for (const auto& r : doc.results) {
    Json jr;
    jr["title"] = r.title;
    Json facts = Json::object();
    for (const auto& [key, value] : r.facts) facts[key] = value;
    jr["facts"] = std::move(facts);
    Json entries = Json::array();
    for (const auto& e : r.entries) {
      Json je;
      je["tuple"] = e.tuple;
      je["value"] = e.value;
      je["rendered"] = e.rendered;
      entries.push_back(std::move(je));
    }
    jr["entries"] = std::move(entries);
    results.push_back(std::move(jr));
  }
  j["results"] = std::move(results);
  j["overall"] = overall_label(doc);
  return j.dump(2) + '\n';
}

std::string render(const ReportDocument& doc, Format format, bool all_witnesses) {
  return format == Format::json ? render_json(doc, all_witnesses)
                                : render_text(doc, all_witnesses);
}

}  // namespace homconf::cli
