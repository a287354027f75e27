#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "oidal/engine.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-category engine for monoidal monad liftings"};
  app.require_subcommand(1);

  oidal::RunOptions opts;
  std::string out_file;
  std::size_t max_size = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--fixture", opts.fixture_dir, "fixture directory")
        ->capture_default_str();
    sub->add_option("--max-size", max_size, "morphism-count cap for constructions");
    sub->add_option("--out", out_file, "write the JSON report to a file");
    sub->add_flag("--strict-iso", opts.strict_iso,
                  "demand on-the-nose equality everywhere");
  };

  CLI::App* check = app.add_subcommand("check", "validate every fixture");
  add_common(check);

  CLI::App* em = app.add_subcommand("em", "Eilenberg-Moore data for monads");
  add_common(em);
  em->add_option("--monad", opts.target, "restrict to one monad");

  CLI::App* lift = app.add_subcommand("lift", "lift structure to the EM category");
  add_common(lift);
  lift->add_option("--mode", opts.mode, "u | f | duoidal")->required();
  lift->add_option("--monad", opts.target, "restrict to one structured monad");

  CLI::App* laws = app.add_subcommand("laws", "run a law suite");
  add_common(laws);
  laws->add_option("--suite", opts.suite, "sqr | mnd | K | adjunction")->required();

  CLI::App* coeq = app.add_subcommand("coeq", "ad-hoc coequalizer query");
  add_common(coeq);
  coeq->add_option("--category", opts.target, "category fixture name")->required();
  coeq->add_option("--left", opts.left, "first morphism")->required();
  coeq->add_option("--right", opts.right, "second morphism")->required();

  CLI::App* report = app.add_subcommand("report", "validators plus all law suites");
  add_common(report);

  CLI11_PARSE(app, argc, argv);

  opts.max_size = max_size;
  std::string command = app.get_subcommands().front()->get_name();
  oidal::RunResult res;
  try {
    res = oidal::run_command(command, opts);
  } catch (const std::exception& e) {
    res.report = nlohmann::ordered_json{{"error", e.what()}};
    res.exit_code = 2;
  }

  std::string text = res.report.dump(2);
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << text << "\n";
  } else {
    std::cout << text << "\n";
  }
  return res.exit_code;
}
