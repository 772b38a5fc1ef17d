#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace support {

std::string fixture_path(const std::string& name) { return std::string(HYCAUSE_FIXTURE_DIR) + "/" + name; }

std::string data_path(const std::string& name) { return std::string(HYCAUSE_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

template <class T>
T unwrap(hycause::Parsed<T> p, const std::string& what) {
  if (!p.ok()) {
    std::string msg = "cannot parse " + what + ":";
    for (const auto& d : p.diagnostics) msg += "\n  " + hycause::to_string(d);
    throw std::runtime_error(msg);
  }
  return std::move(*p.value);
}

}  // namespace

World world_from_text(const std::string& text) {
  World w;
  w.theory = std::make_unique<hycause::HybridTheory>(unwrap(hycause::parse_theory(text), "theory"));
  w.ev = std::make_unique<hycause::Evaluator>(*w.theory);
  return w;
}

World world(const std::string& fixture) { return world_from_text(slurp(fixture_path(fixture))); }

hycause::Scenario World::scenario(const std::string& text) const {
  return unwrap(hycause::parse_scenario(text, *theory), text);
}

hycause::Scenario World::scenario_file(const std::string& fixture) const {
  return scenario(slurp(fixture_path(fixture)));
}

hycause::TemporalEffect World::temporal(const std::string& text) const {
  return std::get<hycause::TemporalEffect>(unwrap(hycause::parse_effect(text, *theory), text));
}

hycause::Formula World::formula(const std::string& text) const {
  return std::get<hycause::Formula>(unwrap(hycause::parse_effect(text, *theory), text));
}

hycause::ActionTerm World::action(const std::string& text) const { return scenario(text).action_at(0); }

}  // namespace support
