#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jagg/profile.hpp"

namespace jagg {

using Order = std::vector<std::size_t>;  // alternative indices, best first

struct PreferenceProfile {
  std::vector<std::string> alternatives;
  std::vector<Order> orders;
};

enum class PreferenceConstraint { Transitivity, Nondominated };

// Issue order: (0,1), (0,2), ..., (0,q-1), (1,2), ... for pairs x_i P x_j with i < j.
std::size_t pair_issue(std::size_t q, std::size_t i, std::size_t j);
std::string pair_atom(const std::vector<std::string>& alternatives, std::size_t i, std::size_t j);

Formula transitivity_constraint(const std::vector<std::string>& alternatives);
Formula nondominated_constraint(const std::vector<std::string>& alternatives);

std::shared_ptr<const Agenda> build_preference_agenda(const std::vector<std::string>& alternatives,
                                                      PreferenceConstraint c,
                                                      std::size_t max_alternatives = 5,
                                                      const AgendaLimits& limits = {});

void validate_preferences(const PreferenceProfile& v);
JudgmentSet encode_order(std::size_t q, const Order& order);
Profile encode(const PreferenceProfile& v, std::shared_ptr<const Agenda> agenda);

// The linear order a judgment set describes, or empty if it is not one.
Order decode_order(const JudgmentSet& j, std::size_t q);
std::vector<std::size_t> nondominated(const JudgmentSet& j, std::size_t q);
std::vector<std::size_t> decode_winners(const std::vector<JudgmentSet>& winners, std::size_t q);

// Every linear order over q alternatives, lexicographically.
std::vector<Order> all_orders(std::size_t q);

// n_V(x, y): voters ranking x above y.
std::vector<std::vector<std::size_t>> pairwise_tally(const PreferenceProfile& v);

// Reference voting rules by exhaustive search. Order sets are sorted.
std::vector<Order> kemeny_orders(const PreferenceProfile& v);
std::vector<Order> slater_orders(const PreferenceProfile& v);
std::vector<Order> ranked_pairs_orders(const PreferenceProfile& v);
std::vector<std::size_t> copeland_winners(const PreferenceProfile& v);
std::vector<std::size_t> top_cycle(const PreferenceProfile& v);
std::vector<std::size_t> condorcet_or_all(const PreferenceProfile& v);
std::vector<std::size_t> maximin_winners(const PreferenceProfile& v);
std::vector<std::size_t> young_winners(const PreferenceProfile& v);

std::vector<std::size_t> tops(const std::vector<Order>& orders);

}  // namespace jagg
