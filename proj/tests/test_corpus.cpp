#include <doctest.h>

#include <filesystem>
#include <set>
#include <unistd.h>

#include "jagg/corpus.hpp"
#include "jagg/errors.hpp"

using namespace jagg;
namespace fs = std::filesystem;

TEST_CASE("every fixture passes its checks") {
  const auto ids = list_fixtures();
  CHECK(ids.size() == 15);
  for (const std::string& id : ids) {
    CAPTURE(id);
    const FixtureReport r = run_fixture(id);
    CHECK(r.error.empty());
    CHECK_FALSE(r.checks.empty());
    for (const CheckLine& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.expected);
      CAPTURE(c.actual);
      CHECK(c.passed);
    }
    CHECK(r.passed());
  }
}

TEST_CASE("fixture lookup") {
  CHECK_THROWS_AS(find_fixture("no-such-fixture"), InputError);
  const Fixture& f = find_fixture("running-17");
  CHECK(fixture_profile(f).size() == 17);
  CHECK(fixture_profile_names(f) == std::vector<std::string>{"running-17.profile"});
  CHECK_THROWS_AS(fixture_profile(f, "other.profile"), InputError);
  // Profiles of one fixture share its agenda.
  const Fixture& m = find_fixture("mpc-monotonicity");
  CHECK(&fixture_profile(m, "mpc-monotonicity.profile").agenda() ==
        &fixture_profile(m, "mpc-monotonicity-improved.profile").agenda());
}

TEST_CASE("fixture files are well formed") {
  std::set<std::string> ids;
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.id);
    CHECK(ids.insert(f.id).second);
    REQUIRE_FALSE(f.files.empty());
    CHECK(f.files.front().name.ends_with(".agenda"));
    CHECK_FALSE(fixture_profile_names(f).empty());
    for (const std::string& name : fixture_profile_names(f)) CHECK_NOTHROW(fixture_profile(f, name));
    CHECK_FALSE(f.description.empty());
  }
}

TEST_CASE("exported fixtures reload to the same profiles") {
  const fs::path dir = fs::temp_directory_path() / ("jagg-corpus-" + std::to_string(::getpid()));
  export_fixtures(dir);
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.id);
    for (const FixtureFile& file : f.files) REQUIRE(read_file(dir / f.id / file.name) == file.text);
    for (const std::string& name : fixture_profile_names(f)) {
      const Profile p = load_profile(dir / f.id / name);
      const Profile q = fixture_profile(f, name);
      CHECK(p.voters() == q.voters());
      CHECK(write_agenda(p.agenda()) == write_agenda(q.agenda()));
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("the checked-in fixture directory matches the built-in corpus") {
  const fs::path dir = JAGG_DATA_DIR;
  for (const Fixture& f : fixtures()) {
    CAPTURE(f.id);
    for (const FixtureFile& file : f.files) CHECK(read_file(dir / f.id / file.name) == file.text);
  }
}
