#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "jagg/agenda.hpp"

namespace jagg {

// An ordered sequence of rational judgment sets over one agenda.
class Profile {
 public:
  Profile(std::shared_ptr<const Agenda> agenda, std::vector<JudgmentSet> voters);

  const Agenda& agenda() const { return *agenda_; }
  const std::shared_ptr<const Agenda>& agenda_ptr() const { return agenda_; }
  std::size_t size() const { return voters_.size(); }
  const std::vector<JudgmentSet>& voters() const { return voters_; }
  const JudgmentSet& voter(std::size_t i) const { return voters_.at(i); }

  std::size_t support(Literal l) const;
  // N(P, phi_i) for every issue i.
  std::vector<std::size_t> positive_support() const;

  JudgmentSet majoritarian_set() const;
  bool is_majority_consistent() const;

  Profile concat(const Profile& other) const;  // P + Q
  Profile replicate(std::size_t k) const;      // kP
  Profile with_voter(std::size_t i, const JudgmentSet& j) const;
  Profile without_voters(const std::vector<std::size_t>& removed) const;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.agenda_ == b.agenda_ && a.voters_ == b.voters_;
  }

 private:
  std::shared_ptr<const Agenda> agenda_;
  std::vector<JudgmentSet> voters_;
};

// Majoritarian set built directly from positive support counts.
JudgmentSet majority_from_counts(std::size_t issues, const std::vector<std::size_t>& pos, std::size_t n);

int hamming(const JudgmentSet& a, const JudgmentSet& b);
int hamming_profiles(const Profile& p, const Profile& q);
int hamming_set_profile(const JudgmentSet& j, const Profile& p);

}  // namespace jagg
