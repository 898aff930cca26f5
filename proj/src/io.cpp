#include "jagg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jagg/errors.hpp"

namespace jagg {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Nonempty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& l, const std::string& msg) {
  throw InputError("line " + std::to_string(l.number) + ": " + msg);
}

bool starts_with_key(const std::string& s, std::string_view key, std::string& rest) {
  if (s.size() < key.size() || s.compare(0, key.size(), key) != 0) return false;
  rest = trim(std::string_view(s).substr(key.size()));
  return true;
}

// Splits a trailing " xK" multiplicity off a row.
std::size_t take_multiplicity(const Line& l, std::string& row) {
  const auto sp = row.find_last_of(" \t");
  if (sp == std::string::npos) return 1;
  const std::string last = row.substr(sp + 1);
  if (last.size() < 2 || last[0] != 'x' ||
      !std::all_of(last.begin() + 1, last.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return 1;
  const std::size_t k = std::stoul(last.substr(1));
  if (k == 0) fail(l, "multiplicity must be positive");
  row = trim(row.substr(0, sp));
  return k;
}

Formula parse_at(const Line& l, const std::string& text) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    fail(l, e.what());
  }
}

JudgmentSet signs_at(const Line& l, const std::string& text) {
  try {
    return JudgmentSet::from_signs(text);
  } catch (const Error& e) {
    fail(l, e.what());
  }
}

std::string spaced(const JudgmentSet& j) {
  std::string out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ' ';
    out += j.sign(i);
  }
  return out;
}

template <class T, class F>
void write_runs(std::ostringstream& os, const std::vector<T>& rows, F render) {
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t k = i + 1;
    while (k < rows.size() && rows[k] == rows[i]) ++k;
    os << render(rows[i]);
    if (k - i > 1) os << " x" << (k - i);
    os << '\n';
    i = k;
  }
}

}  // namespace

std::shared_ptr<const Agenda> parse_agenda(std::string_view text, const AgendaLimits& limits) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("agenda file is empty");
  std::string rest;
  const Line& head = lines[0];
  std::vector<Formula> issues;
  if (starts_with_key(head.text, "constraint:", rest)) {
    if (rest.empty()) fail(head, "constraint line has no formula");
    Formula gamma = parse_at(head, rest);
    for (std::size_t k = 1; k < lines.size(); ++k) {
      if (lines[k].text == "sets:") fail(lines[k], "a constraint agenda has no sets block");
      issues.push_back(parse_at(lines[k], lines[k].text));
    }
    return Agenda::with_constraint(std::move(issues), std::move(gamma), limits);
  }
  if (head.text != "extensional") fail(head, "expected 'constraint: <formula>' or 'extensional'");
  std::size_t k = 1;
  for (; k < lines.size() && lines[k].text != "sets:"; ++k) issues.push_back(parse_at(lines[k], lines[k].text));
  if (k == lines.size()) throw InputError("extensional agenda has no 'sets:' block");
  std::vector<JudgmentSet> sets;
  for (++k; k < lines.size(); ++k) {
    JudgmentSet j = signs_at(lines[k], lines[k].text);
    if (j.size() != issues.size())
      fail(lines[k], "row has " + std::to_string(j.size()) + " signs, expected " + std::to_string(issues.size()));
    sets.push_back(j);
  }
  return Agenda::extensional(std::move(issues), std::move(sets), limits);
}

std::string write_agenda(const Agenda& a) {
  std::ostringstream os;
  if (a.mode() == Agenda::Mode::Constraint) os << "constraint: " << a.constraint().to_string() << '\n';
  else os << "extensional\n";
  for (const Formula& f : a.issues()) os << f.to_string() << '\n';
  if (a.mode() == Agenda::Mode::Extensional) {
    os << "sets:\n";
    for (const JudgmentSet& j : a.rational_sets()) os << spaced(j) << '\n';
  }
  return os.str();
}

ProfileText parse_profile_text(std::string_view text) {
  const auto lines = content_lines(text);
  ProfileText out;
  std::string rest;
  std::size_t k = 0;
  if (!lines.empty() && starts_with_key(lines[0].text, "agenda:", rest)) {
    if (rest.empty()) fail(lines[0], "agenda line has no path");
    out.agenda_ref = rest;
    k = 1;
  }
  for (; k < lines.size(); ++k) {
    std::string row = lines[k].text;
    const std::size_t mult = take_multiplicity(lines[k], row);
    const JudgmentSet j = signs_at(lines[k], row);
    if (!j.is_complete()) fail(lines[k], "voter rows must decide every issue with + or -");
    for (std::size_t r = 0; r < mult; ++r) out.voters.push_back(j);
  }
  if (out.voters.empty()) throw InputError("profile lists no voters");
  return out;
}

Profile make_profile(const ProfileText& t, std::shared_ptr<const Agenda> agenda) {
  for (const JudgmentSet& j : t.voters)
    if (j.size() != agenda->size())
      throw InputError("voter row " + j.to_string() + " does not match the agenda's " +
                       std::to_string(agenda->size()) + " issues");
  return Profile(std::move(agenda), t.voters);
}

std::string write_profile(const Profile& p, const std::string& agenda_ref) {
  std::ostringstream os;
  os << "agenda: " << agenda_ref << '\n';
  write_runs(os, p.voters(), spaced);
  return os.str();
}

PreferenceProfile parse_preferences(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("preference file is empty");
  PreferenceProfile v;
  std::string rest;
  if (!starts_with_key(lines[0].text, "alternatives:", rest)) fail(lines[0], "expected 'alternatives: ...'");
  std::istringstream names(rest);
  for (std::string s; names >> s;) v.alternatives.push_back(s);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::string row = lines[k].text;
    const std::size_t mult = take_multiplicity(lines[k], row);
    Order o;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      auto gt = row.find('>', pos);
      if (gt == std::string::npos) gt = row.size();
      const std::string name = trim(std::string_view(row).substr(pos, gt - pos));
      auto it = std::find(v.alternatives.begin(), v.alternatives.end(), name);
      if (it == v.alternatives.end()) fail(lines[k], "unknown alternative '" + name + "'");
      o.push_back(static_cast<std::size_t>(it - v.alternatives.begin()));
      pos = gt + 1;
    }
    if (o.size() != v.alternatives.size()) fail(lines[k], "an order must rank every alternative");
    for (std::size_t r = 0; r < mult; ++r) v.orders.push_back(o);
  }
  try {
    validate_preferences(v);
  } catch (const InputError& e) {
    throw InputError(std::string("preference file: ") + e.what());
  }
  return v;
}

std::string write_preferences(const PreferenceProfile& v) {
  std::ostringstream os;
  os << "alternatives:";
  for (const std::string& a : v.alternatives) os << ' ' << a;
  os << '\n';
  write_runs(os, v.orders, [&](const Order& o) {
    std::string s;
    for (std::size_t r = 0; r < o.size(); ++r) {
      if (r) s += " > ";
      s += v.alternatives[o[r]];
    }
    return s;
  });
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
}

std::shared_ptr<const Agenda> load_agenda(const std::filesystem::path& path, const AgendaLimits& limits) {
  try {
    return parse_agenda(read_file(path), limits);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Profile load_profile(const std::filesystem::path& path, const AgendaLimits& limits) {
  ProfileText t;
  try {
    t = parse_profile_text(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  if (t.agenda_ref.empty()) throw InputError(path.string() + ": profile has no 'agenda:' line");
  auto agenda = load_agenda(path.parent_path() / t.agenda_ref, limits);
  try {
    return make_profile(t, agenda);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

PreferenceProfile load_preferences(const std::filesystem::path& path) {
  try {
    return parse_preferences(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace jagg
