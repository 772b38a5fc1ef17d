#pragma once

#include "hycause/dsl.hpp"
#include "hycause/evaluator.hpp"

#include <memory>
#include <string>

namespace support {

std::string fixture_path(const std::string& name);
std::string data_path(const std::string& name);
std::string slurp(const std::string& path);

/// A parsed theory with its evaluator; aborts the test binary on parse errors.
struct World {
  std::unique_ptr<hycause::HybridTheory> theory;
  std::unique_ptr<hycause::Evaluator> ev;

  hycause::Scenario scenario(const std::string& text) const;
  hycause::Scenario scenario_file(const std::string& fixture) const;
  hycause::TemporalEffect temporal(const std::string& text) const;
  hycause::Formula formula(const std::string& text) const;
  hycause::ActionTerm action(const std::string& text) const;
};

World world_from_text(const std::string& text);
World world(const std::string& fixture);

}  // namespace support
