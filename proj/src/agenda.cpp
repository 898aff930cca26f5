#include "jagg/agenda.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "jagg/errors.hpp"

namespace jagg {

namespace {

std::uint32_t mask_for(std::size_t size) {
  return size >= 32 ? ~0u : (1u << size) - 1u;
}

int sign_rank(char c) {
  switch (c) {
    case '+': return 0;
    case '-': return 1;
    case '?': return 2;
    default: return 3;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// JudgmentSet

JudgmentSet::JudgmentSet(std::size_t size) : JudgmentSet(size, 0, 0) {}

JudgmentSet::JudgmentSet(std::size_t size, std::uint32_t accepted, std::uint32_t rejected)
    : accepted_(accepted), rejected_(rejected), size_(static_cast<std::uint8_t>(size)) {
  if (size > kMaxIssues) throw InputError("judgment sets hold at most 32 issues");
  const std::uint32_t full = mask_for(size);
  if ((accepted & ~full) != 0 || (rejected & ~full) != 0)
    throw InputError("judgment set mask exceeds its issue count");
}

JudgmentSet JudgmentSet::complete(std::size_t size, std::uint32_t accepted) {
  return JudgmentSet(size, accepted, ~accepted & mask_for(size));
}

JudgmentSet JudgmentSet::from_signs(std::string_view row) {
  std::uint32_t acc = 0;
  std::uint32_t rej = 0;
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < row.size(); ++pos) {
    const char c = row[pos];
    if (c == ' ' || c == '\t') continue;
    if (n >= kMaxIssues) throw ParseError("sign row longer than 32 issues", pos);
    switch (c) {
      case '+': acc |= 1u << n; break;
      case '-': rej |= 1u << n; break;
      case '?': break;
      case '*':
        acc |= 1u << n;
        rej |= 1u << n;
        break;
      default: throw ParseError(std::string("unexpected sign '") + c + "'", pos);
    }
    ++n;
  }
  return JudgmentSet(n, acc, rej);
}

std::uint32_t JudgmentSet::full_mask() const { return mask_for(size_); }

bool JudgmentSet::contains(Literal l) const {
  const std::uint32_t bit = 1u << l.issue;
  return ((l.positive ? accepted_ : rejected_) & bit) != 0;
}

JudgmentSet JudgmentSet::with(Literal l) const {
  JudgmentSet out = *this;
  (l.positive ? out.accepted_ : out.rejected_) |= 1u << l.issue;
  return out;
}

JudgmentSet JudgmentSet::without(Literal l) const {
  JudgmentSet out = *this;
  (l.positive ? out.accepted_ : out.rejected_) &= ~(1u << l.issue);
  return out;
}

bool JudgmentSet::is_complete() const {
  return (accepted_ | rejected_) == full_mask() && (accepted_ & rejected_) == 0;
}

bool JudgmentSet::is_contradictory() const { return (accepted_ & rejected_) != 0; }

std::size_t JudgmentSet::cardinality() const {
  return static_cast<std::size_t>(std::popcount(accepted_) + std::popcount(rejected_));
}

bool JudgmentSet::subset_of(const JudgmentSet& other) const {
  return (accepted_ & ~other.accepted_) == 0 && (rejected_ & ~other.rejected_) == 0;
}

bool JudgmentSet::strict_subset_of(const JudgmentSet& other) const {
  return subset_of(other) && *this != other;
}

JudgmentSet JudgmentSet::intersect(const JudgmentSet& other) const {
  JudgmentSet out = *this;
  out.accepted_ &= other.accepted_;
  out.rejected_ &= other.rejected_;
  return out;
}

JudgmentSet JudgmentSet::unite(const JudgmentSet& other) const {
  JudgmentSet out = *this;
  out.accepted_ |= other.accepted_;
  out.rejected_ |= other.rejected_;
  return out;
}

char JudgmentSet::sign(std::size_t issue) const {
  const bool a = (accepted_ >> issue) & 1u;
  const bool r = (rejected_ >> issue) & 1u;
  return a && r ? '*' : a ? '+' : r ? '-' : '?';
}

std::string JudgmentSet::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out += sign(i);
  return out;
}

std::strong_ordering operator<=>(const JudgmentSet& a, const JudgmentSet& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    const int ra = sign_rank(a.sign(i));
    const int rb = sign_rank(b.sign(i));
    if (ra != rb) return ra <=> rb;
  }
  return a.size() <=> b.size();
}

// ---------------------------------------------------------------------------
// Agenda

Agenda::Agenda(Mode mode, std::vector<Formula> issues, Formula constraint, AgendaLimits limits)
    : mode_(mode), issues_(std::move(issues)), constraint_(std::move(constraint)), limits_(limits) {}

void Agenda::validate_issues() const {
  if (issues_.empty()) throw InputError("an agenda needs at least one issue");
  if (issues_.size() > limits_.max_issues || issues_.size() > JudgmentSet::kMaxIssues)
    throw BudgetError("agenda has " + std::to_string(issues_.size()) +
                      " issues; the limit is " + std::to_string(limits_.max_issues));
  LogicLimits logic{limits_.max_atoms};
  for (std::size_t i = 0; i < issues_.size(); ++i) {
    const Formula& f = issues_[i];
    if (f.kind() == Formula::Kind::Not)
      throw InputError("issue " + std::to_string(i + 1) + " (" + f.to_string() +
                       ") is negated; list the positive formula");
    for (std::size_t k = 0; k < i; ++k)
      if (issues_[k] == f) throw InputError("duplicate issue " + f.to_string());
    const Formula pos[] = {f};
    const Formula neg[] = {Formula::negate(f)};
    if (!is_satisfiable(pos, logic))
      throw InputError("issue " + f.to_string() + " is a contradiction");
    if (!is_satisfiable(neg, logic))
      throw InputError("issue " + f.to_string() + " is a tautology");
  }
}

std::shared_ptr<const Agenda> Agenda::with_constraint(std::vector<Formula> issues,
                                                      Formula constraint,
                                                      const AgendaLimits& limits) {
  std::shared_ptr<Agenda> a(
      new Agenda(Mode::Constraint, std::move(issues), std::move(constraint), limits));
  a->validate_issues();

  std::set<std::string> names;
  for (const Formula& f : a->issues_) {
    auto at = f.atoms();
    names.insert(at.begin(), at.end());
  }
  {
    auto at = a->constraint_.atoms();
    names.insert(at.begin(), at.end());
  }
  if (names.size() > limits.max_atoms)
    throw BudgetError("agenda mentions " + std::to_string(names.size()) +
                      " atoms; the limit is " + std::to_string(limits.max_atoms));
  const std::vector<std::string> order(names.begin(), names.end());
  std::vector<CompiledFormula> compiled;
  for (const Formula& f : a->issues_) compiled.emplace_back(f, order);
  const CompiledFormula gamma(a->constraint_, order);

  const std::uint64_t total = 1ull << order.size();
  const std::uint64_t valid = total >= 64 ? ~0ull : (1ull << total) - 1;
  std::vector<std::uint64_t> issue_words(compiled.size());
  std::vector<std::uint32_t> accepts;
  for (std::uint64_t base = 0; base < total; base += 64) {
    std::uint64_t models = gamma.eval_block(base) & valid;
    if (models == 0) continue;
    for (std::size_t i = 0; i < compiled.size(); ++i) issue_words[i] = compiled[i].eval_block(base);
    while (models != 0) {
      const int j = std::countr_zero(models);
      models &= models - 1;
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < compiled.size(); ++i)
        acc |= static_cast<std::uint32_t>((issue_words[i] >> j) & 1u) << i;
      accepts.push_back(acc);
    }
    if (accepts.size() > (1u << 16)) {
      std::sort(accepts.begin(), accepts.end());
      accepts.erase(std::unique(accepts.begin(), accepts.end()), accepts.end());
    }
  }
  std::sort(accepts.begin(), accepts.end());
  accepts.erase(std::unique(accepts.begin(), accepts.end()), accepts.end());
  if (accepts.empty()) throw InputError("integrity constraint is contradictory");

  const std::size_t m = a->issues_.size();
  for (std::uint32_t acc : accepts) a->rational_.push_back(JudgmentSet::complete(m, acc));
  std::sort(a->rational_.begin(), a->rational_.end());
  a->sorted_accepts_ = accepts;
  a->sorted_index_.resize(accepts.size());
  for (std::size_t k = 0; k < a->rational_.size(); ++k) {
    auto it = std::lower_bound(accepts.begin(), accepts.end(), a->rational_[k].accepted());
    a->sorted_index_[static_cast<std::size_t>(it - accepts.begin())] = static_cast<std::uint32_t>(k);
  }
  return a;
}

std::shared_ptr<const Agenda> Agenda::extensional(std::vector<Formula> issues,
                                                  std::vector<JudgmentSet> rational,
                                                  const AgendaLimits& limits) {
  std::shared_ptr<Agenda> a(
      new Agenda(Mode::Extensional, std::move(issues), Formula::top(), limits));
  a->validate_issues();
  const std::size_t m = a->issues_.size();
  if (rational.empty()) throw InputError("extensional agenda lists no rational sets");
  LogicLimits logic{limits.max_atoms};
  for (const JudgmentSet& j : rational) {
    if (j.size() != m)
      throw InputError("rational set " + j.to_string() + " does not have " + std::to_string(m) +
                       " signs");
    if (!j.is_complete()) throw InputError("rational set " + j.to_string() + " is not complete");
    std::vector<Formula> chosen;
    for (std::size_t i = 0; i < m; ++i)
      chosen.push_back((j.accepted() >> i) & 1u ? a->issues_[i] : Formula::negate(a->issues_[i]));
    if (!is_satisfiable(chosen, logic))
      throw InputError("rational set " + j.to_string() + " is not logically consistent");
  }
  std::vector<std::uint32_t> accepts;
  for (const JudgmentSet& j : rational) accepts.push_back(j.accepted());
  std::sort(accepts.begin(), accepts.end());
  if (std::adjacent_find(accepts.begin(), accepts.end()) != accepts.end())
    throw InputError("extensional agenda lists a rational set twice");

  a->rational_ = std::move(rational);
  std::sort(a->rational_.begin(), a->rational_.end());
  a->sorted_accepts_ = accepts;
  a->sorted_index_.resize(accepts.size());
  for (std::size_t k = 0; k < a->rational_.size(); ++k) {
    auto it = std::lower_bound(accepts.begin(), accepts.end(), a->rational_[k].accepted());
    a->sorted_index_[static_cast<std::size_t>(it - accepts.begin())] = static_cast<std::uint32_t>(k);
  }
  return a;
}

std::optional<std::size_t> Agenda::index_of(const JudgmentSet& j) const {
  if (j.size() != size() || !j.is_complete()) return std::nullopt;
  auto it = std::lower_bound(sorted_accepts_.begin(), sorted_accepts_.end(), j.accepted());
  if (it == sorted_accepts_.end() || *it != j.accepted()) return std::nullopt;
  return sorted_index_[static_cast<std::size_t>(it - sorted_accepts_.begin())];
}

bool Agenda::is_consistent(const JudgmentSet& j) const {
  if (j.size() != size()) throw InputError("judgment set size does not match the agenda");
  if (j.is_contradictory()) return false;
  for (std::uint32_t r : sorted_accepts_)
    if ((j.accepted() & ~r) == 0 && (j.rejected() & r) == 0) return true;
  return false;
}

bool Agenda::is_rational(const JudgmentSet& j) const { return index_of(j).has_value(); }

std::vector<JudgmentSet> Agenda::extensions(const JudgmentSet& s) const {
  if (s.size() != size()) throw InputError("judgment set size does not match the agenda");
  std::vector<JudgmentSet> out;
  for (const JudgmentSet& r : rational_)
    if (s.subset_of(r)) out.push_back(r);
  if (out.empty()) throw InputError("set " + s.to_string() + " is inconsistent; it has no extension");
  return out;
}

std::vector<JudgmentSet> Agenda::max_consistent_subsets(const JudgmentSet& s) const {
  if (s.size() != size()) throw InputError("judgment set size does not match the agenda");
  // Every consistent subset of s lies inside s ∩ R for some rational R, so the
  // maximal ones are the inclusion-maximal traces.
  std::vector<JudgmentSet> traces;
  for (const JudgmentSet& r : rational_) traces.push_back(s.intersect(r));
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  std::vector<JudgmentSet> out;
  for (const JudgmentSet& t : traces) {
    bool dominated = false;
    for (const JudgmentSet& u : traces)
      if (t.strict_subset_of(u)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(t);
  }
  return out;
}

std::vector<JudgmentSet> Agenda::maxcard_consistent_subsets(const JudgmentSet& s) const {
  std::vector<JudgmentSet> mc = max_consistent_subsets(s);
  std::size_t best = 0;
  for (const JudgmentSet& t : mc) best = std::max(best, t.cardinality());
  std::erase_if(mc, [best](const JudgmentSet& t) { return t.cardinality() != best; });
  return mc;
}

const std::vector<std::vector<int>>& Agenda::geodesic_matrix() const {
  std::call_once(geodesic_once_, [this] {
    const std::size_t n = rational_.size();
    if (n > limits_.max_geodesic_sets)
      throw BudgetError("geodesic distance over " + std::to_string(n) +
                        " rational sets exceeds the limit of " +
                        std::to_string(limits_.max_geodesic_sets));
    const std::uint32_t full = mask_for(size());
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::uint32_t ra = rational_[a].accepted();
      for (std::size_t b = a + 1; b < n; ++b) {
        const std::uint32_t rb = rational_[b].accepted();
        const std::uint32_t agree = ~(ra ^ rb) & full;
        bool between = false;
        for (std::size_t c = 0; c < n && !between; ++c) {
          if (c == a || c == b) continue;
          between = ((rational_[c].accepted() ^ ra) & agree) == 0;
        }
        if (!between) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
      }
    }
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (std::size_t s = 0; s < n; ++s) {
      std::deque<std::size_t> queue{s};
      dist[s][s] = 0;
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v : adj[u])
          if (dist[s][v] < 0) {
            dist[s][v] = dist[s][u] + 1;
            queue.push_back(v);
          }
      }
      for (std::size_t v = 0; v < n; ++v)
        if (dist[s][v] < 0) throw Error("betweenness graph over the rational sets is disconnected");
    }
    geodesic_ = std::move(dist);
  });
  return geodesic_;
}

int Agenda::geodesic_distance(const JudgmentSet& a, const JudgmentSet& b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  if (!ia || !ib) throw InputError("geodesic distance needs two rational judgment sets");
  return geodesic_matrix()[*ia][*ib];
}

std::string Agenda::literal_name(Literal l) const {
  const Formula& f = issue(l.issue);
  return l.positive ? f.to_string() : Formula::negate(f).to_string();
}

std::optional<Literal> Agenda::find_literal(const Formula& f) const {
  for (std::size_t i = 0; i < issues_.size(); ++i) {
    if (issues_[i] == f) return Literal{static_cast<std::uint8_t>(i), true};
    if (f.kind() == Formula::Kind::Not && issues_[i] == f.operand())
      return Literal{static_cast<std::uint8_t>(i), false};
  }
  return std::nullopt;
}

bool consistent_by_satisfiability(const Agenda& a, const JudgmentSet& j) {
  if (a.mode() != Agenda::Mode::Constraint)
    throw InputError("satisfiability-based consistency needs a constraint agenda");
  std::vector<Formula> fs{a.constraint()};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Literal pos{static_cast<std::uint8_t>(i), true};
    if (j.contains(pos)) fs.push_back(a.issue(i));
    if (j.contains(pos.negation())) fs.push_back(Formula::negate(a.issue(i)));
  }
  return is_satisfiable(fs, LogicLimits{a.limits().max_atoms});
}

}  // namespace jagg
