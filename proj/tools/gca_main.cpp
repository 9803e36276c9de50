#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "gca/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Graded conformal algebra checker"};
  gca::JobSpec job;
  std::string command;
  std::string format = "human";
  std::optional<unsigned> bound;

  std::vector<std::string> names;
  for (auto c : {gca::Command::Validate, gca::Command::CheckAxioms, gca::Command::ConstructCur, gca::Command::CendAssoc,
                 gca::Command::Trivialize, gca::Command::Decompose, gca::Command::Recover, gca::Command::Simplicity})
    names.emplace_back(gca::to_string(c));

  app.add_option("--input", job.input, "Model file (JSON)")->required();
  app.add_option("--command", command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--degree-bound", bound, "Monomial degree bound for cend-assoc");
  app.add_option("--seed", job.seed, "Seed for the randomized fallback search");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--timing", job.timing, "Append wall-clock timing (breaks byte-identical reports)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : gca::kInputError;
  }
  job.command = *gca::parse_command(command);
  job.degree_bound = bound;
  job.format = format == "machine" ? gca::Format::Machine : gca::Format::Human;
  return gca::run(job, std::cout);
}
