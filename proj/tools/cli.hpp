#pragma once

// Command dispatch and report documents for the homconf tool.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "homconf/report.hpp"
#include "homconf/workspace.hpp"

namespace homconf::cli {

enum class Format { text, json };

struct Command {
  /// e.g. {"check", "oop", "T1"} or {"cobound", "c1"}.
  std::vector<std::string> words;
  std::optional<std::string> module;
  std::optional<unsigned> p;
  std::optional<mpq_class> q;
  std::optional<unsigned> through;
  std::optional<unsigned> max_deg;
  std::vector<mpq_class> coeffs;

  /// Canonical echo of the command line.
  std::string echo() const;
};

struct ResultEntry {
  std::vector<std::string> tuple;
  std::vector<std::string> value;  // one polynomial per target basis vector
  std::string rendered;
};

/// A computed object: a cochain, a map or a list of maps.
struct Result {
  std::string title;
  std::vector<ResultEntry> entries;
  std::vector<std::pair<std::string, std::string>> facts;
};

struct ReportDocument {
  std::string version;
  std::string command;
  std::string subject;
  std::vector<Check> checks;
  std::vector<Result> results;
  std::optional<std::string> error;

  bool passed() const;
  int exit_code() const;
};

/// Runs one command against a workspace. Input errors become a document with
/// `error` set and exit code 2.
ReportDocument run(const Command& command, const Workspace& ws);
/// Parses the workspace text first; parse errors are input errors.
ReportDocument run(const Command& command, std::string_view workspace_text);

ReportDocument input_error(const Command& command, const std::string& message);

std::string render_text(const ReportDocument& doc, bool all_witnesses);
std::string render_json(const ReportDocument& doc, bool all_witnesses);
std::string render(const ReportDocument& doc, Format format, bool all_witnesses);

std::string version();

}  // namespace homconf::cli
