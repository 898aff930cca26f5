#include "jagg/bridge.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "jagg/errors.hpp"

namespace jagg {

std::size_t pair_issue(std::size_t q, std::size_t i, std::size_t j) {
  if (i >= j || j >= q) throw InputError("pair issue needs i < j < q");
  // Pairs before row i: (q-1) + (q-2) + ... + (q-i).
  return i * (2 * q - i - 1) / 2 + (j - i - 1);
}

std::string pair_atom(const std::vector<std::string>& alternatives, std::size_t i, std::size_t j) {
  return alternatives.at(i) + "P" + alternatives.at(j);
}

namespace {

// x_a P x_b, written as the negated issue when a > b.
Formula prefers(const std::vector<std::string>& alts, std::size_t a, std::size_t b) {
  if (a < b) return Formula::atom(pair_atom(alts, a, b));
  return Formula::negate(Formula::atom(pair_atom(alts, b, a)));
}

void check_alternatives(const std::vector<std::string>& alts) {
  if (alts.size() < 2) throw InputError("a preference agenda needs at least two alternatives");
  std::set<std::string> seen;
  for (const std::string& a : alts) {
    if (a.empty() || !(std::isalpha(static_cast<unsigned char>(a[0])) || a[0] == '_'))
      throw InputError("alternative name '" + a + "' is not an identifier");
    for (char c : a)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw InputError("alternative name '" + a + "' is not an identifier");
    if (!seen.insert(a).second) throw InputError("duplicate alternative " + a);
  }
}

}  // namespace

Formula transitivity_constraint(const std::vector<std::string>& alts) {
  std::vector<Formula> parts;
  const std::size_t q = alts.size();
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k) {
        if (i == j || j == k || i == k) continue;
        parts.push_back(Formula::implies(Formula::conj(prefers(alts, i, j), prefers(alts, j, k)),
                                         prefers(alts, i, k)));
      }
  return Formula::all_of(parts);
}

Formula nondominated_constraint(const std::vector<std::string>& alts) {
  std::vector<Formula> options;
  const std::size_t q = alts.size();
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<Formula> beats;
    for (std::size_t j = 0; j < q; ++j)
      if (j != i) beats.push_back(prefers(alts, i, j));
    options.push_back(Formula::all_of(beats));
  }
  return Formula::any_of(options);
}

std::shared_ptr<const Agenda> build_preference_agenda(const std::vector<std::string>& alts,
                                                      PreferenceConstraint c,
                                                      std::size_t max_alternatives,
                                                      const AgendaLimits& limits) {
  check_alternatives(alts);
  if (alts.size() > max_alternatives)
    throw BudgetError(std::to_string(alts.size()) + " alternatives exceed the limit of " +
                      std::to_string(max_alternatives));
  std::vector<Formula> issues;
  for (std::size_t i = 0; i < alts.size(); ++i)
    for (std::size_t j = i + 1; j < alts.size(); ++j) issues.push_back(Formula::atom(pair_atom(alts, i, j)));
  Formula gamma = c == PreferenceConstraint::Transitivity ? transitivity_constraint(alts)
                                                          : nondominated_constraint(alts);
  return Agenda::with_constraint(std::move(issues), std::move(gamma), limits);
}

void validate_preferences(const PreferenceProfile& v) {
  check_alternatives(v.alternatives);
  if (v.orders.empty()) throw InputError("a preference profile needs at least one voter");
  for (const Order& o : v.orders) {
    Order sorted = o;
    std::sort(sorted.begin(), sorted.end());
    Order expect(v.alternatives.size());
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) throw InputError("a preference order must rank every alternative exactly once");
  }
}

JudgmentSet encode_order(std::size_t q, const Order& order) {
  std::vector<std::size_t> rank(q);
  for (std::size_t r = 0; r < order.size(); ++r) rank.at(order[r]) = r;
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (rank[i] < rank[j]) acc |= 1u << pair_issue(q, i, j);
  return JudgmentSet::complete(q * (q - 1) / 2, acc);
}

Profile encode(const PreferenceProfile& v, std::shared_ptr<const Agenda> agenda) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  if (agenda->size() != q * (q - 1) / 2) throw InputError("agenda does not match the alternatives");
  std::vector<JudgmentSet> voters;
  for (const Order& o : v.orders) voters.push_back(encode_order(q, o));
  return Profile(std::move(agenda), std::move(voters));
}

namespace {

bool holds(const JudgmentSet& j, std::size_t q, std::size_t a, std::size_t b) {
  if (a < b) return j.sign(pair_issue(q, a, b)) == '+';
  return j.sign(pair_issue(q, b, a)) == '-';
}

}  // namespace

Order decode_order(const JudgmentSet& j, std::size_t q) {
  std::vector<std::pair<std::size_t, std::size_t>> wins;
  for (std::size_t x = 0; x < q; ++x) {
    std::size_t w = 0;
    for (std::size_t y = 0; y < q; ++y)
      if (y != x && holds(j, q, x, y)) ++w;
    wins.emplace_back(q - 1 - w, x);
  }
  std::sort(wins.begin(), wins.end());
  Order o;
  for (auto [loss, x] : wins) o.push_back(x);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (!holds(j, q, o[a], o[b])) return {};
  return o;
}

std::vector<std::size_t> nondominated(const JudgmentSet& j, std::size_t q) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < q; ++x) {
    bool top = true;
    for (std::size_t y = 0; y < q && top; ++y)
      if (y != x && !holds(j, q, x, y)) top = false;
    if (top) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> decode_winners(const std::vector<JudgmentSet>& winners, std::size_t q) {
  std::set<std::size_t> out;
  for (const JudgmentSet& j : winners)
    for (std::size_t x : nondominated(j, q)) out.insert(x);
  return {out.begin(), out.end()};
}

std::vector<Order> all_orders(std::size_t q) {
  Order o(q);
  std::iota(o.begin(), o.end(), 0);
  std::vector<Order> out;
  do out.push_back(o);
  while (std::next_permutation(o.begin(), o.end()));
  return out;
}

std::vector<std::vector<std::size_t>> pairwise_tally(const PreferenceProfile& v) {
  const std::size_t q = v.alternatives.size();
  std::vector<std::vector<std::size_t>> t(q, std::vector<std::size_t>(q, 0));
  for (const Order& o : v.orders)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = a + 1; b < q; ++b) ++t[o[a]][o[b]];
  return t;
}

namespace {

template <class F>
std::vector<Order> best_orders(const PreferenceProfile& v, F score) {
  std::vector<Order> out;
  long best = 0;
  for (const Order& o : all_orders(v.alternatives.size())) {
    const long s = score(o);
    if (out.empty() || s > best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(o);
  }
  return out;
}

template <class F>
std::vector<std::size_t> best_alternatives(std::size_t q, F score) {
  std::vector<std::size_t> out;
  long best = 0;
  for (std::size_t x = 0; x < q; ++x) {
    const long s = score(x);
    if (out.empty() || s > best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<Order> kemeny_orders(const PreferenceProfile& v) {
  validate_preferences(v);
  const auto t = pairwise_tally(v);
  return best_orders(v, [&](const Order& o) {
    long s = 0;
    for (std::size_t a = 0; a < o.size(); ++a)
      for (std::size_t b = a + 1; b < o.size(); ++b) s += static_cast<long>(t[o[a]][o[b]]);
    return s;
  });
}

std::vector<Order> slater_orders(const PreferenceProfile& v) {
  validate_preferences(v);
  const auto t = pairwise_tally(v);
  return best_orders(v, [&](const Order& o) {
    long agree = 0;
    for (std::size_t a = 0; a < o.size(); ++a)
      for (std::size_t b = a + 1; b < o.size(); ++b)
        if (t[o[a]][o[b]] < t[o[b]][o[a]]) --agree;
    return agree;
  });
}

std::vector<Order> ranked_pairs_orders(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const auto t = pairwise_tally(v);
  // Ordered pairs grouped by support, strongest first.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(v.orders.size() + 1);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      if (x != y) groups[v.orders.size() - t[x][y]].emplace_back(x, y);
  // A locked graph is a q*q adjacency bitmask.
  using Locked = std::uint32_t;
  auto edge = [q](std::size_t x, std::size_t y) { return Locked{1} << (x * q + y); };
  auto reaches = [&](Locked g, std::size_t from, std::size_t to) {
    std::uint32_t seen = 0;
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      if (u == to) return true;
      if ((seen >> u) & 1u) continue;
      seen |= 1u << u;
      for (std::size_t w = 0; w < q; ++w)
        if (g & edge(u, w)) stack.push_back(w);
    }
    return false;
  };
  std::set<Locked> states{0};
  for (const auto& group : groups) {
    if (group.empty()) continue;
    // Every processing order of the tie group, explored as a memoised search
    // over (locked graph, pairs still to process).
    std::set<Locked> next;
    std::set<std::pair<Locked, std::uint32_t>> visited;
    std::function<void(Locked, std::uint32_t)> go = [&](Locked g, std::uint32_t left) {
      if (!visited.insert({g, left}).second) return;
      if (left == 0) {
        next.insert(g);
        return;
      }
      for (std::size_t k = 0; k < group.size(); ++k) {
        if (!((left >> k) & 1u)) continue;
        auto [x, y] = group[k];
        go(reaches(g, y, x) ? g : (g | edge(x, y)), left & ~(1u << k));
      }
    };
    for (Locked s : states) go(s, (1u << group.size()) - 1);
    states = std::move(next);
  }
  std::set<Order> out;
  for (Locked g : states) {
    Order o(q);
    std::iota(o.begin(), o.end(), 0);
    std::sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return (g & edge(a, b)) != 0; });
    out.insert(o);
  }
  return {out.begin(), out.end()};
}

std::vector<std::size_t> copeland_winners(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const auto t = pairwise_tally(v);
  return best_alternatives(q, [&](std::size_t x) {
    long s = 0;
    for (std::size_t y = 0; y < q; ++y) {
      if (y == x) continue;
      if (t[x][y] > t[y][x]) s += 2;
      else if (t[x][y] == t[y][x]) s += 1;
    }
    return s;
  });
}

std::vector<std::size_t> top_cycle(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const auto t = pairwise_tally(v);
  std::vector<std::size_t> best;
  for (std::uint32_t mask = 1; mask < (1u << q); ++mask) {
    bool dominant = true;
    for (std::size_t x = 0; x < q && dominant; ++x)
      for (std::size_t y = 0; y < q && dominant; ++y)
        if (((mask >> x) & 1u) && !((mask >> y) & 1u) && t[x][y] <= t[y][x]) dominant = false;
    if (!dominant) continue;
    std::vector<std::size_t> set;
    for (std::size_t x = 0; x < q; ++x)
      if ((mask >> x) & 1u) set.push_back(x);
    if (best.empty() || set.size() < best.size()) best = set;
  }
  return best;
}

std::vector<std::size_t> condorcet_or_all(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const auto t = pairwise_tally(v);
  for (std::size_t x = 0; x < q; ++x) {
    bool wins = true;
    for (std::size_t y = 0; y < q && wins; ++y)
      if (y != x && t[x][y] <= t[y][x]) wins = false;
    if (wins) return {x};
  }
  std::vector<std::size_t> all(q);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<std::size_t> maximin_winners(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const auto t = pairwise_tally(v);
  return best_alternatives(q, [&](std::size_t x) {
    long worst = static_cast<long>(v.orders.size());
    for (std::size_t y = 0; y < q; ++y)
      if (y != x) worst = std::min(worst, static_cast<long>(t[x][y]));
    return worst;
  });
}

std::vector<std::size_t> young_winners(const PreferenceProfile& v) {
  validate_preferences(v);
  const std::size_t q = v.alternatives.size();
  const std::size_t n = v.orders.size();
  if (n > 20) throw BudgetError("Young reference rule is limited to 20 voters");
  // Fewest removals that make x a weak Condorcet winner, over all kept subsets.
  std::vector<long> removals(q, static_cast<long>(n));
  for (std::uint32_t keep = 1; keep < (1u << n); ++keep) {
    PreferenceProfile sub{v.alternatives, {}};
    for (std::size_t i = 0; i < n; ++i)
      if ((keep >> i) & 1u) sub.orders.push_back(v.orders[i]);
    const auto t = pairwise_tally(sub);
    const long removed = static_cast<long>(n - sub.orders.size());
    for (std::size_t x = 0; x < q; ++x) {
      if (removed >= removals[x]) continue;
      bool weak = true;
      for (std::size_t y = 0; y < q && weak; ++y)
        if (y != x && t[x][y] < t[y][x]) weak = false;
      if (weak) removals[x] = removed;
    }
  }
  return best_alternatives(q, [&](std::size_t x) { return -removals[x]; });
}

std::vector<std::size_t> tops(const std::vector<Order>& orders) {
  std::set<std::size_t> out;
  for (const Order& o : orders) out.insert(o.front());
  return {out.begin(), out.end()};
}

}  // namespace jagg
