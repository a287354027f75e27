#pragma once

#include "json.hpp"
#include "oidal/fixtures.hpp"

namespace oidal {

struct RunOptions {
  std::string fixture_dir = "fixtures";
  std::string mode;   // lift: u | f | duoidal
  std::string suite;  // laws: sqr | mnd | K | adjunction
  std::string target; // em/lift/coeq: fixture name
  std::string left, right;  // coeq morphism names
  bool strict_iso = false;
  std::size_t max_size = 0;  // 0: keep current cap
};

struct RunResult {
  int exit_code = 0;  // 0 pass, 1 law failure, 2 input error
  nlohmann::ordered_json report;
};

/// command: check | em | lift | laws | coeq | report
RunResult run_command(const std::string& command, const RunOptions& opts);

LawReport sqr_suite(EmContext& ctx, const FixtureSet& fs);
LawReport mnd_suite(EmContext& ctx, const FixtureSet& fs);
LawReport k_suite(EmContext& ctx, const FixtureSet& fs);
LawReport adjunction_suite(EmContext& ctx, const FixtureSet& fs);

nlohmann::ordered_json law_report_json(const LawReport& rep, bool strict_iso);
nlohmann::ordered_json validation_json(const ValidationReport& rep);
nlohmann::ordered_json em_report_json(EmContext& ctx, const std::string& name,
                                      const Monad& m);

/// All structure 1-cells of the fixture set's oidal monads, for the suites.
struct DerivedCells {
  std::vector<MonadMorH> hmors;
  std::vector<MonadMorV> vmors;
  std::vector<MndSquare> squares;
};
DerivedCells derive_cells(const FixtureSet& fs);

}  // namespace oidal
