#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jagg/bridge.hpp"

namespace jagg {

// Agenda file:
//   # comment
//   constraint: <formula>      or   extensional
//   <issue formula>            one per line
//   sets:                      extensional only, followed by sign rows
std::shared_ptr<const Agenda> parse_agenda(std::string_view text, const AgendaLimits& limits = {});
std::string write_agenda(const Agenda& a);

// Profile file:
//   agenda: <path relative to this file>
//   + - + x3                   one row per voter, optional multiplicity
struct ProfileText {
  std::string agenda_ref;
  std::vector<JudgmentSet> voters;
};
ProfileText parse_profile_text(std::string_view text);
Profile make_profile(const ProfileText& t, std::shared_ptr<const Agenda> agenda);
std::string write_profile(const Profile& p, const std::string& agenda_ref);

// Preference file:
//   alternatives: a b c
//   a > b > c x2
PreferenceProfile parse_preferences(std::string_view text);
std::string write_preferences(const PreferenceProfile& v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

std::shared_ptr<const Agenda> load_agenda(const std::filesystem::path& path, const AgendaLimits& limits = {});
Profile load_profile(const std::filesystem::path& path, const AgendaLimits& limits = {});
PreferenceProfile load_preferences(const std::filesystem::path& path);

}  // namespace jagg
