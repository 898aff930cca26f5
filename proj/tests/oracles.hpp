#pragma once

// Brute-force reference implementations, written directly from the rule
// definitions and sharing no code with the library beyond its data types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "jagg/profile.hpp"

namespace oracle {

using jagg::Agenda;
using jagg::JudgmentSet;
using jagg::Literal;
using jagg::Profile;

inline std::vector<JudgmentSet> rational(const Agenda& a) { return {a.rational_sets().begin(), a.rational_sets().end()}; }

inline int dh(const JudgmentSet& x, const JudgmentSet& y) { return __builtin_popcount(x.accepted() ^ y.accepted()); }

inline bool consistent(const Agenda& a, const JudgmentSet& s) {
  for (const JudgmentSet& r : a.rational_sets())
    if (s.subset_of(r)) return true;
  return false;
}

inline std::vector<JudgmentSet> ext(const Agenda& a, const JudgmentSet& s) {
  std::vector<JudgmentSet> out;
  for (const JudgmentSet& r : a.rational_sets())
    if (s.subset_of(r)) out.push_back(r);
  return out;
}

inline std::vector<JudgmentSet> unique_sorted(std::vector<JudgmentSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::size_t support(const Profile& p, std::size_t issue, bool positive) {
  std::size_t n = 0;
  for (const JudgmentSet& v : p.voters()) n += v.sign(issue) == (positive ? '+' : '-') ? 1 : 0;
  return n;
}

inline JudgmentSet majority(const Profile& p) {
  const std::size_t m = p.agenda().size(), n = p.size();
  std::uint32_t acc = 0, rej = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (2 * support(p, i, true) > n) acc |= 1u << i;
    if (2 * support(p, i, false) > n) rej |= 1u << i;
  }
  return JudgmentSet(m, acc, rej);
}

// Inclusion-maximal consistent subsets of s, by walking its powerset.
inline std::vector<JudgmentSet> maximal_consistent(const Agenda& a, const JudgmentSet& s, bool by_cardinality) {
  std::vector<JudgmentSet> cons;
  const std::uint32_t A = s.accepted(), R = s.rejected();
  for (std::uint32_t sa = A;; sa = (sa - 1) & A) {
    for (std::uint32_t sr = R;; sr = (sr - 1) & R) {
      JudgmentSet t(s.size(), sa, sr);
      if (consistent(a, t)) cons.push_back(t);
      if (sr == 0) break;
    }
    if (sa == 0) break;
  }
  std::vector<JudgmentSet> out;
  std::size_t best = 0;
  for (auto& t : cons) best = std::max(best, t.cardinality());
  for (auto& t : cons) {
    const bool maximal = std::none_of(cons.begin(), cons.end(), [&](auto& u) { return t.strict_subset_of(u); });
    if (maximal && (!by_cardinality || t.cardinality() == best)) out.push_back(t);
  }
  return out;
}

inline std::vector<JudgmentSet> mc(const Profile& p, bool by_cardinality = false) {
  std::vector<JudgmentSet> out;
  for (const JudgmentSet& s : maximal_consistent(p.agenda(), majority(p), by_cardinality))
    for (const JudgmentSet& r : ext(p.agenda(), s)) out.push_back(r);
  return unique_sorted(out);
}

template <class Score>
std::vector<JudgmentSet> argbest(const Agenda& a, std::function<Score(const JudgmentSet&)> f, bool maximise) {
  std::optional<Score> best;
  std::vector<JudgmentSet> out;
  for (const JudgmentSet& r : a.rational_sets()) {
    const Score s = f(r);
    if (!best || (maximise ? s > *best : s < *best)) {
      best = s;
      out.clear();
    }
    if (s == *best) out.push_back(r);
  }
  return out;
}

inline long weight(const Profile& p, const JudgmentSet& r) {
  long w = 0;
  for (std::size_t i = 0; i < r.size(); ++i) w += static_cast<long>(support(p, i, r.sign(i) == '+'));
  return w;
}

inline std::vector<JudgmentSet> med(const Profile& p) {
  return argbest<long>(p.agenda(), [&](const JudgmentSet& r) { return weight(p, r); }, true);
}

inline std::vector<JudgmentSet> dist(const Profile& p, std::function<int(const JudgmentSet&, const JudgmentSet&)> d,
                                     bool sum) {
  return argbest<long>(
      p.agenda(),
      [&](const JudgmentSet& r) {
        long acc = 0;
        for (const JudgmentSet& v : p.voters()) acc = sum ? acc + d(r, v) : std::max<long>(acc, d(r, v));
        return acc;
      },
      false);
}

// Greedy insertion over every order of all literals that never puts a
// lower-support literal before a higher-support one. Orders are built by
// permuting each block of equal support independently.
inline std::vector<JudgmentSet> ra(const Profile& p) {
  const Agenda& a = p.agenda();
  const std::size_t m = a.size();
  std::map<std::size_t, std::vector<Literal>, std::greater<>> blocks;
  for (std::size_t i = 0; i < m; ++i)
    for (bool pos : {true, false}) blocks[support(p, i, pos)].push_back({static_cast<std::uint8_t>(i), pos});
  std::vector<std::vector<Literal>> bs;
  for (auto& [k, v] : blocks) {
    std::sort(v.begin(), v.end());
    bs.push_back(v);
  }
  std::set<JudgmentSet> out;
  std::function<void(std::size_t, std::vector<Literal>&)> walk = [&](std::size_t b, std::vector<Literal>& order) {
    if (b == bs.size()) {
      JudgmentSet cur(m);
      for (Literal l : order) {
        const JudgmentSet cand = cur.with(l);
        if (consistent(a, cand)) cur = cand;
      }
      out.insert(cur);
      return;
    }
    std::vector<Literal> block = bs[b];
    do {
      const std::size_t mark = order.size();
      order.insert(order.end(), block.begin(), block.end());
      walk(b + 1, order);
      order.resize(mark);
    } while (std::next_permutation(block.begin(), block.end()));
  };
  std::vector<Literal> order;
  walk(0, order);
  return {out.begin(), out.end()};
}

// Supports of the literals in r, sorted in decreasing order, compared
// lexicographically.
inline std::vector<JudgmentSet> leximax(const Profile& p) {
  return argbest<std::vector<std::size_t>>(
      p.agenda(),
      [&](const JudgmentSet& r) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < r.size(); ++i) s.push_back(support(p, i, r.sign(i) == '+'));
        std::sort(s.rbegin(), s.rend());
        return s;
      },
      true);
}

// Fewest voters whose removal leaves a majority-consistent profile.
inline std::pair<std::size_t, std::vector<JudgmentSet>> young(const Profile& p) {
  const std::size_t n = p.size();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<JudgmentSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != r) continue;
      std::vector<JudgmentSet> kept;
      for (std::size_t i = 0; i < n; ++i)
        if (!((mask >> i) & 1u)) kept.push_back(p.voter(i));
      const Profile q(p.agenda_ptr(), kept);
      const JudgmentSet mq = majority(q);
      if (consistent(p.agenda(), mq))
        for (auto& j : ext(p.agenda(), mq)) out.push_back(j);
    }
    if (!out.empty()) return {r, unique_sorted(out)};
  }
  return {n, {}};
}

// Nearest majority-consistent profiles over the rational sets, by full
// enumeration; only for tiny n and small agendas.
inline std::pair<int, std::vector<JudgmentSet>> mpc(const Profile& p) {
  const auto rs = rational(p.agenda());
  const std::size_t n = p.size();
  std::vector<std::size_t> idx(n, 0);
  int best = 1 << 30;
  std::vector<JudgmentSet> out;
  while (true) {
    std::vector<JudgmentSet> q;
    int d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      q.push_back(rs[idx[i]]);
      d += dh(rs[idx[i]], p.voter(i));
    }
    if (d <= best) {
      const JudgmentSet mq = majority(Profile(p.agenda_ptr(), q));
      if (consistent(p.agenda(), mq)) {
        if (d < best) out.clear();
        best = d;
        for (auto& j : ext(p.agenda(), mq)) out.push_back(j);
      }
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == rs.size()) idx[k++] = 0;
    if (k == n) break;
  }
  return {best, unique_sorted(out)};
}

inline int rev(const Agenda& a, const JudgmentSet& j, std::size_t issue, bool positive) {
  if (j.sign(issue) != (positive ? '+' : '-')) return 0;
  int best = -1;
  for (const JudgmentSet& r : a.rational_sets())
    if (r.sign(issue) != (positive ? '+' : '-')) best = best < 0 ? dh(j, r) : std::min(best, dh(j, r));
  return std::max(best, 0);
}

inline std::vector<JudgmentSet> frev(const Profile& p) {
  return argbest<long>(
      p.agenda(),
      [&](const JudgmentSet& r) {
        long s = 0;
        for (const JudgmentSet& v : p.voters())
          for (std::size_t i = 0; i < r.size(); ++i) s += rev(p.agenda(), v, i, r.sign(i) == '+');
        return s;
      },
      true);
}

}  // namespace oracle
