#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "homconf/errors.hpp"

namespace {

std::vector<mpq_class> parse_coeffs(const std::string& list) {
  std::vector<mpq_class> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(homconf::parse_rational(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks and computations for Hom-Lie conformal algebras and O-operators",
               "homconf"};
  app.set_version_flag("--version", homconf::cli::version());

  std::string workspace_path;
  std::string format = "text";
  bool all_witnesses = false;
  homconf::cli::Command cmd;
  std::string q_text;
  std::string coeff_text;
  unsigned p = 0;
  unsigned through = 0;
  unsigned max_deg = 0;

  app.add_option("-w,--workspace", workspace_path, "Workspace definition file")->required();
  app.add_option("--report", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--all-witnesses", all_witnesses, "Print every nonvanishing case");
  app.add_option("command", cmd.words, "Command and its arguments, e.g. 'check algebra vir'")
      ->required();
  auto* module_opt = app.add_option("--module", "Module to check a map against");
  auto* p_opt = app.add_option("--p", p, "Twist exponent for Rota-Baxter checks");
  auto* q_opt = app.add_option("--q", q_text, "Weight for Rota-Baxter checks");
  auto* through_opt = app.add_option("--through", through, "Highest order to check");
  auto* deg_opt = app.add_option("--max-deg", max_deg, "Largest d-degree of map entries");
  auto* coeff_opt = app.add_option("--coeffs", coeff_text, "Comma-separated rationals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto fmt = format == "json" ? homconf::cli::Format::json : homconf::cli::Format::text;
  try {
    if (*module_opt) cmd.module = module_opt->as<std::string>();
    if (*p_opt) cmd.p = p;
    if (*q_opt) cmd.q = homconf::parse_rational(q_text);
    if (*through_opt) cmd.through = through;
    if (*deg_opt) cmd.max_deg = max_deg;
    if (*coeff_opt) cmd.coeffs = parse_coeffs(coeff_text);
  } catch (const homconf::Error& e) {
    std::cout << homconf::cli::render(homconf::cli::input_error(cmd, e.what()), fmt, false);
    return 2;
  }

  std::ifstream file(workspace_path);
  if (!file) {
    const auto doc = homconf::cli::input_error(cmd, "cannot open '" + workspace_path + "'");
    std::cout << homconf::cli::render(doc, fmt, false);
    return 2;
  }
  std::ostringstream text;
  text << file.rdbuf();

  const auto doc = homconf::cli::run(cmd, text.str());
  std::cout << homconf::cli::render(doc, fmt, all_witnesses);
  return doc.exit_code();
}
