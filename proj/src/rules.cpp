#include "jagg/rules.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include <boost/functional/hash.hpp>

#include "jagg/errors.hpp"

namespace jagg {

std::string score_to_string(const Score& s) {
  if (s.denominator() == 1) return std::to_string(s.numerator());
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

namespace {

std::vector<JudgmentSet> sorted_unique(std::vector<JudgmentSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Keeps the rational sets whose score is extremal; rational_sets() is
// already sorted, so the output is too.
template <class F>
RuleOutcome extremal(const Agenda& a, F score, bool maximise) {
  RuleOutcome out;
  std::optional<Score> best;
  for (const JudgmentSet& r : a.rational_sets()) {
    const Score s = score(r);
    if (!best || (maximise ? s > *best : s < *best)) {
      best = s;
      out.winners.clear();
      out.scores.clear();
    }
    if (s == *best) {
      out.winners.push_back(r);
      out.scores.push_back(s);
    }
  }
  return out;
}

std::vector<JudgmentSet> union_of_extensions(const Agenda& a, const std::vector<JudgmentSet>& subsets) {
  std::vector<JudgmentSet> all;
  for (const JudgmentSet& s : subsets) {
    auto ext = a.extensions(s);
    all.insert(all.end(), ext.begin(), ext.end());
  }
  return sorted_unique(std::move(all));
}

// Literals of the agenda grouped by support, highest support first.
std::vector<std::vector<Literal>> support_levels(const Profile& p) {
  const std::size_t n = p.size();
  const auto pos = p.positive_support();
  std::vector<std::vector<Literal>> levels(n + 1);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    levels[n - pos[i]].push_back({static_cast<std::uint8_t>(i), true});
    levels[n - (n - pos[i])].push_back({static_cast<std::uint8_t>(i), false});
  }
  std::erase_if(levels, [](const auto& l) { return l.empty(); });
  return levels;
}

JudgmentSet level_mask(std::size_t m, const std::vector<Literal>& lits) {
  JudgmentSet s(m);
  for (Literal l : lits) s = s.with(l);
  return s;
}

}  // namespace

RuleOutcome rule_mc(const Profile& p) {
  const Agenda& a = p.agenda();
  const JudgmentSet maj = p.majoritarian_set();
  const auto mc = a.max_consistent_subsets(maj);
  RuleOutcome out;
  for (const JudgmentSet& r : a.rational_sets()) {
    const JudgmentSet trace = maj.intersect(r);
    if (std::binary_search(mc.begin(), mc.end(), trace)) {
      out.winners.push_back(r);
      out.subsets.push_back(trace);
    }
  }
  return out;
}

RuleOutcome rule_mcc(const Profile& p) {
  const JudgmentSet maj = p.majoritarian_set();
  RuleOutcome out = extremal(
      p.agenda(), [&](const JudgmentSet& r) { return Score(static_cast<std::int64_t>(maj.intersect(r).cardinality())); },
      true);
  out.scores.clear();
  for (const JudgmentSet& w : out.winners) out.subsets.push_back(maj.intersect(w));
  return out;
}

RuleOutcome rule_med(const Profile& p) {
  const auto pos = p.positive_support();
  const std::size_t n = p.size();
  return extremal(
      p.agenda(),
      [&](const JudgmentSet& r) {
        std::int64_t w = 0;
        for (std::size_t i = 0; i < pos.size(); ++i)
          w += static_cast<std::int64_t>((r.accepted() >> i) & 1u ? pos[i] : n - pos[i]);
        return Score(w);
      },
      true);
}

RuleOutcome rule_dist_sum_hamming(const Profile& p) {
  return extremal(
      p.agenda(), [&](const JudgmentSet& r) { return Score(hamming_set_profile(r, p)); }, false);
}

RuleOutcome rule_ra(const Profile& p) {
  const Agenda& a = p.agenda();
  const std::size_t m = a.size();
  std::vector<JudgmentSet> levels;
  for (const auto& lv : support_levels(p)) levels.push_back(level_mask(m, lv));
  auto dominates = [&](const JudgmentSet& x, const JudgmentSet& y) {
    for (const JudgmentSet& lv : levels) {
      const JudgmentSet xs = x.intersect(lv);
      const JudgmentSet ys = y.intersect(lv);
      if (xs == ys) continue;
      return ys.strict_subset_of(xs);
    }
    return false;
  };
  RuleOutcome out;
  const auto rs = a.rational_sets();
  for (const JudgmentSet& j : rs) {
    bool undominated = true;
    for (const JudgmentSet& k : rs)
      if (dominates(k, j)) {
        undominated = false;
        break;
      }
    if (undominated) out.winners.push_back(j);
  }
  return out;
}

RuleOutcome rule_ra_permutation(const Profile& p, std::size_t group_limit) {
  const Agenda& a = p.agenda();
  std::set<JudgmentSet> states{JudgmentSet(a.size())};
  for (auto group : support_levels(p)) {
    if (group.size() > group_limit)
      throw BudgetError("tie group of " + std::to_string(group.size()) +
                        " literals exceeds the permutation limit");
    std::set<JudgmentSet> next;
    for (const JudgmentSet& s : states) {
      std::sort(group.begin(), group.end());
      do {
        JudgmentSet cur = s;
        for (Literal l : group) {
          const JudgmentSet cand = cur.with(l);
          if (a.is_consistent(cand)) cur = cand;
        }
        next.insert(cur);
      } while (std::next_permutation(group.begin(), group.end()));
    }
    states = std::move(next);
  }
  RuleOutcome out;
  out.winners.assign(states.begin(), states.end());
  for (const JudgmentSet& w : out.winners)
    if (!a.is_rational(w)) throw Error("permutation procedure produced a non-rational set");
  return out;
}

RuleOutcome rule_leximax(const Profile& p) {
  const std::size_t n = p.size();
  const std::size_t m = p.agenda().size();
  const auto pos = p.positive_support();
  RuleOutcome out;
  std::optional<std::vector<std::size_t>> best;
  for (const JudgmentSet& r : p.agenda().rational_sets()) {
    // s_k(J) for k = n down to ceil(n/2).
    std::vector<std::size_t> key(n - (n + 1) / 2 + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = (r.accepted() >> i) & 1u ? pos[i] : n - pos[i];
      if (2 * k >= n) ++key[n - k];
    }
    if (!best || key > *best) {
      best = key;
      out.winners.clear();
    }
    if (key == *best) out.winners.push_back(r);
  }
  return out;
}

RuleOutcome rule_young(const Profile& p) {
  const Agenda& a = p.agenda();
  const std::size_t n = p.size();
  const std::size_t m = a.size();
  // Identical voters form groups; only how many of each are removed matters.
  std::vector<JudgmentSet> sets;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(sets.begin(), sets.end(), p.voter(i));
    if (it == sets.end()) {
      sets.push_back(p.voter(i));
      members.push_back({i});
    } else {
      members[static_cast<std::size_t>(it - sets.begin())].push_back(i);
    }
  }
  const auto pos = p.positive_support();
  const std::size_t g = sets.size();

  std::map<JudgmentSet, std::vector<std::size_t>> found;
  std::vector<std::size_t> take(g, 0);
  std::vector<std::size_t> counts(m);
  for (std::size_t r = 0; r < n; ++r) {
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t left) {
      if (k == g) {
        if (left != 0) return;
        for (std::size_t i = 0; i < m; ++i) {
          std::size_t c = pos[i];
          for (std::size_t h = 0; h < g; ++h)
            if ((sets[h].accepted() >> i) & 1u) c -= take[h];
          counts[i] = c;
        }
        const JudgmentSet maj = majority_from_counts(m, counts, n - r);
        if (found.count(maj) || !a.is_consistent(maj)) return;
        std::vector<std::size_t> removed;
        for (std::size_t h = 0; h < g; ++h)
          for (std::size_t t = 0; t < take[h]; ++t) removed.push_back(members[h][t]);
        std::sort(removed.begin(), removed.end());
        found.emplace(maj, std::move(removed));
        return;
      }
      const std::size_t cap = std::min(left, members[k].size());
      for (std::size_t x = 0; x <= cap; ++x) {
        take[k] = x;
        rec(k + 1, left - x);
      }
      take[k] = 0;
    };
    rec(0, r);
    if (!found.empty()) {
      RuleOutcome out;
      out.optimum = static_cast<std::int64_t>(r);
      for (auto& [maj, removed] : found) {
        out.subsets.push_back(maj);
        out.removed.push_back(removed);
      }
      out.winners = union_of_extensions(a, out.subsets);
      return out;
    }
  }
  throw Error("no majority-consistent subprofile found");
}

namespace {

using State = std::vector<std::uint16_t>;

struct StateHash {
  std::size_t operator()(const State& s) const { return boost::hash_range(s.begin(), s.end()); }
};

struct Node {
  State counts;  // positive support with processed voters replaced
  int cost;
  std::int32_t parent;
  std::uint32_t choice;  // index into rational_sets()
};

}  // namespace

RuleOutcome rule_mpc(const Profile& p, int max_budget) {
  const Agenda& a = p.agenda();
  const std::size_t n = p.size();
  const std::size_t m = a.size();
  const auto rs = a.rational_sets();
  const std::size_t half = n / 2;

  // Voters sorted so identical sets are adjacent; menus are shared per set.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return p.voter(x) < p.voter(y); });
  std::map<JudgmentSet, std::vector<std::pair<int, std::uint32_t>>> menus;
  for (const JudgmentSet& v : p.voters()) {
    auto& menu = menus[v];
    if (!menu.empty()) continue;
    for (std::size_t k = 0; k < rs.size(); ++k)
      menu.emplace_back(hamming(v, rs[k]), static_cast<std::uint32_t>(k));
    std::sort(menu.begin(), menu.end());
  }

  // suffix[t][i]: voters order[t..] holding phi_i.
  std::vector<std::vector<std::uint16_t>> suffix(n + 1, std::vector<std::uint16_t>(m, 0));
  for (std::size_t t = n; t-- > 0;)
    for (std::size_t i = 0; i < m; ++i)
      suffix[t][i] = static_cast<std::uint16_t>(suffix[t + 1][i] + ((p.voter(order[t]).accepted() >> i) & 1u));

  // Least number of issue flips among the untouched voters order[t..] that
  // could bring the majority in line with some rational set; -1 if none can.
  auto lower_bound = [&](const State& s, std::size_t t) {
    int best = -1;
    const std::size_t fixed_n = n;
    for (const JudgmentSet& r : rs) {
      int need = 0;
      bool ok = true;
      for (std::size_t i = 0; i < m && ok; ++i) {
        const bool acc = (r.accepted() >> i) & 1u;
        // Supporters of !R_i are the voters not holding R_i.
        const std::size_t against = acc ? fixed_n - s[i] : s[i];
        if (against <= half) continue;
        const std::size_t excess = against - half;
        const std::size_t movable = acc ? (n - t) - suffix[t][i] : suffix[t][i];
        if (excess > movable) ok = false;
        need += static_cast<int>(excess);
      }
      if (ok && (best < 0 || need < best)) best = need;
    }
    return best;
  };

  State start(m);
  {
    const auto pos = p.positive_support();
    for (std::size_t i = 0; i < m; ++i) start[i] = static_cast<std::uint16_t>(pos[i]);
  }

  for (int budget = 0; budget <= max_budget; ++budget) {
    std::vector<std::vector<Node>> layers(n + 1);
    const int lb0 = lower_bound(start, 0);
    if (lb0 < 0 || lb0 > budget) continue;
    layers[0].push_back({start, 0, -1, 0});
    for (std::size_t t = 0; t < n; ++t) {
      const JudgmentSet& orig = p.voter(order[t]);
      const auto& menu = menus.at(orig);
      std::unordered_map<State, std::size_t, StateHash> seen;
      auto& next = layers[t + 1];
      for (std::size_t k = 0; k < layers[t].size(); ++k) {
        const Node& node = layers[t][k];
        for (auto [d, idx] : menu) {
          const int cost = node.cost + d;
          if (cost > budget) break;
          State s = node.counts;
          const std::uint32_t diff = orig.accepted() ^ rs[idx].accepted();
          for (std::size_t i = 0; i < m; ++i)
            if ((diff >> i) & 1u) s[i] = static_cast<std::uint16_t>((rs[idx].accepted() >> i) & 1u ? s[i] + 1 : s[i] - 1);
          auto it = seen.find(s);
          if (it != seen.end()) {
            Node& prev = next[it->second];
            if (cost < prev.cost) {
              prev.cost = cost;
              prev.parent = static_cast<std::int32_t>(k);
              prev.choice = idx;
            }
            continue;
          }
          const int lb = lower_bound(s, t + 1);
          if (lb < 0 || cost + lb > budget) continue;
          seen.emplace(s, next.size());
          next.push_back({std::move(s), cost, static_cast<std::int32_t>(k), idx});
        }
      }
      if (next.empty()) break;
    }
    std::map<JudgmentSet, std::size_t> finals;
    for (std::size_t k = 0; k < layers[n].size(); ++k) {
      const Node& node = layers[n][k];
      std::vector<std::size_t> c(node.counts.begin(), node.counts.end());
      const JudgmentSet maj = majority_from_counts(m, c, n);
      if (a.is_consistent(maj)) finals.emplace(maj, k);
    }
    if (finals.empty()) continue;
    RuleOutcome out;
    out.optimum = budget;
    for (auto& [maj, k] : finals) {
      std::vector<JudgmentSet> q(n, JudgmentSet());
      std::size_t idx = k;
      for (std::size_t t = n; t > 0; --t) {
        const Node& node = layers[t][idx];
        q[order[t - 1]] = rs[node.choice];
        idx = static_cast<std::size_t>(node.parent);
      }
      out.subsets.push_back(maj);
      out.repairs.push_back(std::move(q));
    }
    out.winners = union_of_extensions(a, out.subsets);
    return out;
  }
  throw BudgetError("MPC search exceeded the budget of " + std::to_string(max_budget) + " reversals");
}

RuleOutcome rule_dist_agg(const Profile& p, const DistanceSpec& d, Aggregator agg) {
  const Agenda& a = p.agenda();
  const auto rs = a.rational_sets();
  if (d.kind == DistanceKind::Custom) {
    if (d.table.size() != rs.size())
      throw InputError("custom distance table must have one row per rational set");
    for (std::size_t x = 0; x < rs.size(); ++x) {
      if (d.table[x].size() != rs.size())
        throw InputError("custom distance table must be square");
      for (std::size_t y = 0; y < rs.size(); ++y) {
        if (d.table[x][y] != d.table[y][x]) throw InputError("custom distance table is not symmetric");
        if ((d.table[x][y] == Score(0)) != (x == y) || d.table[x][y] < Score(0))
          throw InputError("custom distance must be positive off the diagonal and zero on it");
      }
    }
  }
  std::vector<std::size_t> voter_idx;
  for (const JudgmentSet& v : p.voters()) voter_idx.push_back(*a.index_of(v));
  const std::vector<std::vector<int>>* geo = d.kind == DistanceKind::Geodesic ? &a.geodesic_matrix() : nullptr;
  std::size_t cand = 0;
  return extremal(
      a,
      [&](const JudgmentSet& r) {
        const std::size_t c = cand++;
        Score total = 0;
        for (std::size_t k = 0; k < voter_idx.size(); ++k) {
          Score dist;
          switch (d.kind) {
            case DistanceKind::Hamming: dist = hamming(r, p.voter(k)); break;
            case DistanceKind::Geodesic: dist = (*geo)[c][voter_idx[k]]; break;
            case DistanceKind::Custom: dist = d.table[c][voter_idx[k]]; break;
          }
          total = agg == Aggregator::Sum ? total + dist : std::max(total, dist);
        }
        return total;
      },
      false);
}

int reversal_score(const Agenda& a, const JudgmentSet& j, Literal l) {
  if (!j.contains(l)) return 0;
  std::optional<int> best;
  for (const JudgmentSet& r : a.rational_sets())
    if (!r.contains(l)) {
      const int d = hamming(j, r);
      if (!best || d < *best) best = d;
    }
  return best.value_or(0);
}

RuleOutcome rule_scoring(const Profile& p, const ScoringSpec& spec) {
  const Agenda& a = p.agenda();
  const std::size_t m = a.size();
  if (spec.kind == ScoringSpec::Kind::Custom && !spec.custom)
    throw InputError("custom scoring rule has no score function");
  // total[2i] and total[2i+1]: summed score of phi_i and !phi_i over voters.
  std::vector<Score> total(2 * m, Score(0));
  std::map<JudgmentSet, std::vector<Score>> memo;
  for (const JudgmentSet& v : p.voters()) {
    auto [it, fresh] = memo.try_emplace(v);
    if (fresh) {
      it->second.resize(2 * m);
      for (std::size_t i = 0; i < m; ++i)
        for (int s = 0; s < 2; ++s) {
          const Literal l{static_cast<std::uint8_t>(i), s == 0};
          Score val;
          switch (spec.kind) {
            case ScoringSpec::Kind::Reversal: val = reversal_score(a, v, l); break;
            case ScoringSpec::Kind::Simple: val = v.contains(l) ? 1 : 0; break;
            case ScoringSpec::Kind::Custom: val = spec.custom(v, l); break;
          }
          it->second[2 * i + static_cast<std::size_t>(s)] = val;
        }
    }
    for (std::size_t k = 0; k < 2 * m; ++k) total[k] += it->second[k];
  }
  return extremal(
      a,
      [&](const JudgmentSet& r) {
        Score s = 0;
        for (std::size_t i = 0; i < m; ++i) s += total[2 * i + ((r.accepted() >> i) & 1u ? 0 : 1)];
        return s;
      },
      true);
}

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids = {
      "mc",           "mcc", "med", "ra", "leximax", "young", "mpc", "dmax-hamming",
      "dsum-geodesic", "frev"};
  return ids;
}

namespace {

std::optional<std::pair<DistanceSpec, Aggregator>> parse_dist_id(std::string_view id) {
  if (id == "dmax-hamming") return std::pair{DistanceSpec{DistanceKind::Hamming, {}}, Aggregator::Max};
  if (id == "dsum-hamming") return std::pair{DistanceSpec{DistanceKind::Hamming, {}}, Aggregator::Sum};
  if (id == "dsum-geodesic") return std::pair{DistanceSpec{DistanceKind::Geodesic, {}}, Aggregator::Sum};
  if (id == "dmax-geodesic") return std::pair{DistanceSpec{DistanceKind::Geodesic, {}}, Aggregator::Max};
  if (!id.starts_with("dist:")) return std::nullopt;
  const std::string_view rest = id.substr(5);
  const auto colon = rest.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view dist = rest.substr(0, colon);
  const std::string_view agg = rest.substr(colon + 1);
  DistanceSpec d;
  if (dist == "hamming") d.kind = DistanceKind::Hamming;
  else if (dist == "geodesic") d.kind = DistanceKind::Geodesic;
  else return std::nullopt;
  if (agg == "sum") return std::pair{d, Aggregator::Sum};
  if (agg == "max") return std::pair{d, Aggregator::Max};
  return std::nullopt;
}

}  // namespace

bool is_known_rule(std::string_view id) {
  if (std::find(rule_ids().begin(), rule_ids().end(), id) != rule_ids().end()) return true;
  return parse_dist_id(id).has_value() || id == "score:rev" || id == "score:simple";
}

RuleOutcome run_rule(std::string_view id, const Profile& p, const RuleOptions& opts) {
  if (id == "mc") return rule_mc(p);
  if (id == "mcc") return rule_mcc(p);
  if (id == "med") return rule_med(p);
  if (id == "ra") return rule_ra(p);
  if (id == "leximax") return rule_leximax(p);
  if (id == "young") return rule_young(p);
  if (id == "mpc") return rule_mpc(p, opts.mpc_budget);
  if (id == "frev" || id == "score:rev") return rule_scoring(p, {ScoringSpec::Kind::Reversal, {}});
  if (id == "score:simple") return rule_scoring(p, {ScoringSpec::Kind::Simple, {}});
  if (auto d = parse_dist_id(id)) {
    if (id == "dsum-hamming") return rule_dist_sum_hamming(p);
    return rule_dist_agg(p, d->first, d->second);
  }
  throw InputError("unknown rule id '" + std::string(id) + "'");
}

}  // namespace jagg
