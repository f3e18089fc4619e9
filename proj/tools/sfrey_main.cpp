#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using sfrey::cli::coerce_flag;
  CLI::App app{"Frey curve, class group and Thue-Mahler toolkit for binary cubic forms"};
  app.set_help_all_flag("--help-all");

  std::string command;
  app.add_option("command", command, "covariants | frey | sf-set | check-hypotheses | tm-search | audit | distinguish")
      ->required()
      ->check(CLI::IsMember(sfrey::cli::command_names()));

  std::string config_path;
  app.add_option("--config", config_path, "JSON job file; flags override its entries");

  // flag name -> config key; values are coerced (JSON, file or comma list)
  const std::vector<std::pair<std::string, std::string>> coerced{
      {"--field", "field"},   {"--form", "form"},     {"--point", "point"},           {"--z", "z"},
      {"--height", "height"}, {"--l", "l"},           {"--q", "q"},                   {"--curve1", "curve1"},
      {"--curve2", "curve2"}, {"--p", "p"},           {"--norm-bound", "norm_bound"}, {"--avoid", "avoid"},
      {"--workers", "workers"}, {"--class-bound", "class_bound"}};
  std::map<std::string, std::string> values;
  for (const auto& [flag, key] : coerced) {
    app.add_option(flag, values[key]);
  }
  std::string resume;
  std::string out;
  app.add_option("--resume", resume, "checkpoint file for tm-search and distinguish");
  app.add_option("--out", out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  sfrey::io::Json raw = sfrey::io::Json::object();
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read " + config_path);
      raw = sfrey::io::Json::parse(in);
      if (!raw.is_object()) throw std::runtime_error("config must be a JSON object");
    }
    for (const auto& [flag, key] : coerced) {
      if (app.count(flag) > 0) raw[key] = coerce_flag(values[key]);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sfrey::cli::kInputError;
  }
  if (!resume.empty()) raw["resume"] = resume;
  if (!out.empty()) raw["out"] = out;

  const sfrey::cli::CommandResult result = sfrey::cli::execute(command, raw, std::cerr);
  const std::string text = sfrey::cli::render(result.report);
  const std::string out_path = raw.value("out", std::string{});
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out_path, std::ios::trunc);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return sfrey::cli::kInputError;
    }
    file << text;
  }
  return result.exit_code;
}
