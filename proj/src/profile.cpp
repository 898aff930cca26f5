#include "jagg/profile.hpp"

#include <algorithm>
#include <bit>

#include "jagg/errors.hpp"

namespace jagg {

Profile::Profile(std::shared_ptr<const Agenda> agenda, std::vector<JudgmentSet> voters)
    : agenda_(std::move(agenda)), voters_(std::move(voters)) {
  if (!agenda_) throw InputError("profile has no agenda");
  if (voters_.empty()) throw InputError("a profile needs at least one voter");
  for (std::size_t i = 0; i < voters_.size(); ++i)
    if (!agenda_->is_rational(voters_[i]))
      throw InputError("voter " + std::to_string(i + 1) + " (" + voters_[i].to_string() +
                       ") is not a rational judgment set");
}

std::size_t Profile::support(Literal l) const {
  if (l.issue >= agenda_->size()) throw InputError("literal is not on the agenda");
  std::size_t n = 0;
  for (const JudgmentSet& j : voters_) n += j.contains(l) ? 1 : 0;
  return n;
}

std::vector<std::size_t> Profile::positive_support() const {
  std::vector<std::size_t> out(agenda_->size(), 0);
  for (const JudgmentSet& j : voters_)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += (j.accepted() >> i) & 1u;
  return out;
}

JudgmentSet majority_from_counts(std::size_t issues, const std::vector<std::size_t>& pos, std::size_t n) {
  std::uint32_t acc = 0, rej = 0;
  for (std::size_t i = 0; i < issues; ++i) {
    if (2 * pos[i] > n) acc |= 1u << i;
    if (2 * (n - pos[i]) > n) rej |= 1u << i;
  }
  return JudgmentSet(issues, acc, rej);
}

JudgmentSet Profile::majoritarian_set() const {
  return majority_from_counts(agenda_->size(), positive_support(), voters_.size());
}

bool Profile::is_majority_consistent() const { return agenda_->is_consistent(majoritarian_set()); }

Profile Profile::concat(const Profile& other) const {
  if (other.agenda_ != agenda_) throw InputError("profiles are over different agendas");
  std::vector<JudgmentSet> v = voters_;
  v.insert(v.end(), other.voters_.begin(), other.voters_.end());
  return Profile(agenda_, std::move(v));
}

Profile Profile::replicate(std::size_t k) const {
  if (k == 0) throw InputError("replication factor must be positive");
  std::vector<JudgmentSet> v;
  v.reserve(voters_.size() * k);
  for (std::size_t r = 0; r < k; ++r) v.insert(v.end(), voters_.begin(), voters_.end());
  return Profile(agenda_, std::move(v));
}

Profile Profile::with_voter(std::size_t i, const JudgmentSet& j) const {
  std::vector<JudgmentSet> v = voters_;
  v.at(i) = j;
  return Profile(agenda_, std::move(v));
}

Profile Profile::without_voters(const std::vector<std::size_t>& removed) const {
  std::vector<JudgmentSet> v;
  for (std::size_t i = 0; i < voters_.size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) v.push_back(voters_[i]);
  return Profile(agenda_, std::move(v));
}

int hamming(const JudgmentSet& a, const JudgmentSet& b) {
  if (!a.is_complete() || !b.is_complete() || a.size() != b.size())
    throw InputError("Hamming distance needs two complete sets of equal size");
  return std::popcount(a.accepted() ^ b.accepted());
}

int hamming_profiles(const Profile& p, const Profile& q) {
  if (p.size() != q.size()) throw InputError("profiles differ in length");
  int d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += hamming(p.voter(i), q.voter(i));
  return d;
}

int hamming_set_profile(const JudgmentSet& j, const Profile& p) {
  int d = 0;
  for (const JudgmentSet& v : p.voters()) d += hamming(j, v);
  return d;
}

}  // namespace jagg
