#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "jagg/bridge.hpp"

namespace jagg {

struct GeneratorConfig {
  enum class Kind { Formula, Extensional, Preference, Mixed };

  std::uint64_t seed = 1;
  Kind kind = Kind::Mixed;
  std::size_t min_issues = 2, max_issues = 4;
  std::size_t min_atoms = 2, max_atoms = 4;
  std::size_t min_voters = 1, max_voters = 7;
  std::size_t min_rational = 2, max_rational = 16;
  std::size_t min_alternatives = 3, max_alternatives = 4;
  unsigned constraint_percent = 50;  // chance of a non-trivial constraint
  unsigned unanimity_percent = 0;    // chance a profile is drawn around one shared literal
};

struct Instance {
  std::shared_ptr<const Agenda> agenda;
  Profile profile;
};

// Seeded instance stream. Draws use only the mt19937_64 output sequence, so
// a seed reproduces the same stream on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(GeneratorConfig config);

  const GeneratorConfig& config() const { return config_; }

  std::uint64_t below(std::uint64_t bound);
  std::size_t between(std::size_t lo, std::size_t hi);  // inclusive

  Formula formula(const std::vector<std::string>& atoms, int depth);
  std::shared_ptr<const Agenda> agenda();
  std::shared_ptr<const Agenda> formula_agenda();
  std::shared_ptr<const Agenda> extensional_agenda();
  std::shared_ptr<const Agenda> preference_agenda();

  Profile profile(const std::shared_ptr<const Agenda>& a);
  Profile profile(const std::shared_ptr<const Agenda>& a, std::size_t voters);
  Instance next();

 private:
  GeneratorConfig config_;
  std::mt19937_64 rng_;
};

}  // namespace jagg
