#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jagg/io.hpp"

namespace jagg {

struct FixtureFile {
  std::string name;  // e.g. "running-17.profile"
  std::string text;
};

struct Fixture {
  std::string id;
  std::string description;
  std::vector<FixtureFile> files;  // agenda first, then profiles
};

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

struct FixtureReport {
  std::string id;
  std::string description;
  std::vector<CheckLine> checks;
  double seconds = 0;
  std::string error;  // set when the fixture threw

  bool passed() const;
};

const std::vector<Fixture>& fixtures();
std::vector<std::string> list_fixtures();
const Fixture& find_fixture(const std::string& id);  // InputError on unknown ids

const FixtureFile& fixture_file(const Fixture& f, const std::string& name);
std::shared_ptr<const Agenda> fixture_agenda(const Fixture& f);
// A named profile of the fixture; the first one when name is empty.
Profile fixture_profile(const Fixture& f, const std::string& name = "");
std::vector<std::string> fixture_profile_names(const Fixture& f);

FixtureReport run_fixture(const std::string& id);

// Writes every fixture as <dir>/<id>/<file>.
void export_fixtures(const std::filesystem::path& dir);

}  // namespace jagg
