#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jagg/logic.hpp"

namespace jagg {

// One element of an agenda: issue i taken positively (phi_i) or negated.
struct Literal {
  std::uint8_t issue = 0;
  bool positive = true;

  Literal negation() const { return {issue, !positive}; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// A subset of an agenda over m issues. Bit i of accepted() means phi_i is in the
// set, bit i of rejected() means !phi_i is in it. Both bits may be set, which
// makes the set trivially inconsistent; neither bit means the issue is open.
class JudgmentSet {
 public:
  static constexpr std::size_t kMaxIssues = 32;

  JudgmentSet() = default;
  explicit JudgmentSet(std::size_t size);  // every issue undecided
  JudgmentSet(std::size_t size, std::uint32_t accepted, std::uint32_t rejected);

  static JudgmentSet complete(std::size_t size, std::uint32_t accepted);

  // Parses a sign row such as "+-?+" or "+ - ? +"; `*` marks an issue held
  // both ways.
  static JudgmentSet from_signs(std::string_view row);

  std::size_t size() const { return size_; }
  std::uint32_t accepted() const { return accepted_; }
  std::uint32_t rejected() const { return rejected_; }
  std::uint32_t full_mask() const;

  bool contains(Literal l) const;
  JudgmentSet with(Literal l) const;
  JudgmentSet without(Literal l) const;

  bool is_complete() const;       // exactly one literal per issue
  bool is_contradictory() const;  // some issue held both ways
  std::size_t cardinality() const;

  bool subset_of(const JudgmentSet& other) const;
  bool strict_subset_of(const JudgmentSet& other) const;
  JudgmentSet intersect(const JudgmentSet& other) const;
  JudgmentSet unite(const JudgmentSet& other) const;

  char sign(std::size_t issue) const;  // '+', '-', '?' or '*'
  std::string to_string() const;

  friend bool operator==(const JudgmentSet&, const JudgmentSet&) = default;
  // Row-lexicographic, issue 0 first, with + < - < ? < *.
  friend std::strong_ordering operator<=>(const JudgmentSet& a, const JudgmentSet& b);

 private:
  std::uint32_t accepted_ = 0;
  std::uint32_t rejected_ = 0;
  std::uint8_t size_ = 0;
};

struct AgendaLimits {
  std::size_t max_atoms = 24;
  std::size_t max_issues = 20;
  std::size_t max_geodesic_sets = 4096;
};

// An agenda: an ordered pre-agenda of m issue formulas plus a notion of
// consistency, given either by an integrity constraint or by listing the
// rational judgment sets outright. Instances are immutable and shared.
class Agenda {
 public:
  enum class Mode { Constraint, Extensional };

  static std::shared_ptr<const Agenda> with_constraint(std::vector<Formula> issues,
                                                       Formula constraint,
                                                       const AgendaLimits& limits = {});
  static std::shared_ptr<const Agenda> extensional(std::vector<Formula> issues,
                                                   std::vector<JudgmentSet> rational,
                                                   const AgendaLimits& limits = {});

  Agenda(const Agenda&) = delete;
  Agenda& operator=(const Agenda&) = delete;

  Mode mode() const { return mode_; }
  std::size_t size() const { return issues_.size(); }
  const std::vector<Formula>& issues() const { return issues_; }
  const Formula& issue(std::size_t i) const { return issues_.at(i); }
  const Formula& constraint() const { return constraint_; }
  const AgendaLimits& limits() const { return limits_; }

  // All rational judgment sets, in row-lexicographic order.
  std::span<const JudgmentSet> rational_sets() const { return rational_; }
  std::optional<std::size_t> index_of(const JudgmentSet& j) const;

  bool is_consistent(const JudgmentSet& j) const;
  bool is_rational(const JudgmentSet& j) const;

  // Rational completions of a consistent set; InputError otherwise.
  std::vector<JudgmentSet> extensions(const JudgmentSet& s) const;

  std::vector<JudgmentSet> max_consistent_subsets(const JudgmentSet& s) const;
  std::vector<JudgmentSet> maxcard_consistent_subsets(const JudgmentSet& s) const;

  // Shortest-path lengths in the betweenness graph over rational sets, indexed
  // like rational_sets(). Built once on first use.
  const std::vector<std::vector<int>>& geodesic_matrix() const;
  int geodesic_distance(const JudgmentSet& a, const JudgmentSet& b) const;

  std::string literal_name(Literal l) const;
  // Accepts an issue formula or its negation, in any spelling that parses to it.
  std::optional<Literal> find_literal(const Formula& f) const;

 private:
  explicit Agenda(Mode mode, std::vector<Formula> issues, Formula constraint, AgendaLimits limits);
  void validate_issues() const;

  Mode mode_;
  std::vector<Formula> issues_;
  Formula constraint_;
  AgendaLimits limits_;
  std::vector<JudgmentSet> rational_;
  std::vector<std::uint32_t> sorted_accepts_;  // sorted accepted() masks
  std::vector<std::uint32_t> sorted_index_;    // position in rational_ per sorted mask

  mutable std::once_flag geodesic_once_;
  mutable std::vector<std::vector<int>> geodesic_;
};

// Consistency decided directly by model enumeration over the selected
// formulas and the constraint. Constraint-mode agendas only.
bool consistent_by_satisfiability(const Agenda& a, const JudgmentSet& j);

}  // namespace jagg
