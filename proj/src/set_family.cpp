// Copyright 2026 The minimax-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minimax/set_family.hpp"

#include <algorithm>
#include <set>

#include "minimax/core.hpp"
#include "minimax/errors.hpp"

namespace minimax {

struct SetFamily::Impl {
  std::string name;
  bool downward_closed = false;
  bool is_explicit = false;
  std::vector<IndexSet> sets;
  Predicate contains;
  std::function<bool(Index)> enumerable;
  std::function<std::vector<IndexSet>(Index)> members;
  HeaviestFn heaviest;
};

SetFamily::SetFamily(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

namespace {

// Lexicographic DFS over subsets of {1..ground}. With prune set, a rejected
// set has no accepted superset.
void enumerate_subsets(Index ground, const SetFamily::Predicate& member, bool prune,
                       IndexSet& current, std::vector<IndexSet>& out) {
  const bool accepted = member(current);
  if (accepted) out.push_back(current);
  if (prune && !accepted) return;
  const Index start = current.empty() ? 1 : current.back() + 1;
  for (Index e = start; e <= ground; ++e) {
    current.push_back(e);
    enumerate_subsets(ground, member, prune, current, out);
    current.pop_back();
  }
}

void require_nonnegative(std::span<const Rational> weights) {
  if (weights.empty()) throw DomainError("heaviest_member needs a non-empty weight vector");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw DomainError("negative weight at index " + std::to_string(i + 1));
  }
}

IndexSet range_step(Index first, Index last, Index step) {
  IndexSet s;
  for (Index i = first; i <= last; i += step) s.push_back(i);
  return s;
}

// For each m, the best member with minimum m is {m} plus the m-1 heaviest
// elements above m. Sweeping m downward keeps those in an ordered set.
IndexSet min_family_heaviest(std::span<const Rational> w) {
  require_nonnegative(w);
  const Index horizon = w.size();
  // Strict total order: heavier first, then smaller index.
  using Entry = std::pair<Rational, Index>;
  auto better = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  };
  std::set<Entry, decltype(better)> selected(better);
  Rational selected_sum = 0;
  Rational best = -1;
  Index best_m = horizon;
  for (Index m = horizon; m >= 1; --m) {
    if (m < horizon) {
      Entry e{w[m], m + 1};
      selected_sum += e.first;
      selected.insert(std::move(e));
      while (selected.size() > m - 1) {
        auto worst = std::prev(selected.end());
        selected_sum -= worst->first;
        selected.erase(worst);
      }
    }
    const Rational total = w[m - 1] + selected_sum;
    if (total >= best) {
      best = total;
      best_m = m;
    }
  }
  std::vector<Entry> above;
  for (Index i = best_m + 1; i <= horizon; ++i) above.emplace_back(w[i - 1], i);
  std::sort(above.begin(), above.end(), better);
  IndexSet out{best_m};
  for (std::size_t k = 0; k + 1 < best_m && k < above.size(); ++k) {
    if (above[k].first > 0) out.push_back(above[k].second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Rational set_weight(const IndexSet& set, std::span<const Rational> weights) {
  Rational total = 0;
  for (Index i : set) {
    if (i == 0 || i > weights.size()) {
      throw DomainError("element " + std::to_string(i) + " outside the weight horizon " +
                        std::to_string(weights.size()));
    }
    total += weights[i - 1];
  }
  return total;
}

SetFamily SetFamily::explicit_sets(std::vector<IndexSet> sets, bool downward_closed,
                                   std::string name) {
  for (auto& s : sets) s = normalize_index_set(std::move(s));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  if (downward_closed) {
    std::set<IndexSet> have(sets.begin(), sets.end());
    for (const auto& s : sets) {
      // Closure under single-element removal implies closure under subsets.
      for (std::size_t k = 0; k < s.size(); ++k) {
        IndexSet smaller = s;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
        if (!smaller.empty() && !have.count(smaller)) {
          throw DomainError("family flagged downward closed but a subset of a member is missing");
        }
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->downward_closed = downward_closed;
  impl->is_explicit = true;
  impl->sets = std::move(sets);
  auto members = std::make_shared<std::set<IndexSet>>(impl->sets.begin(), impl->sets.end());
  impl->contains = [members](const IndexSet& s) { return members->count(s) > 0; };
  impl->enumerable = [](Index) { return true; };
  const auto* raw = impl.get();
  impl->members = [raw](Index horizon) {
    std::vector<IndexSet> out;
    for (const auto& s : raw->sets) {
      if (s.empty() || s.back() <= horizon) out.push_back(s);
    }
    return out;
  };
  return SetFamily(std::move(impl));
}

SetFamily SetFamily::downward_closure(const std::vector<IndexSet>& sets, std::string name) {
  std::set<IndexSet> closure;
  for (const auto& raw : sets) {
    const IndexSet s = normalize_index_set(raw);
    if (s.size() > kEnumerationBound) {
      throw ResourceError("downward closure of a set with " + std::to_string(s.size()) +
                          " elements");
    }
    const std::size_t n = s.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      IndexSet sub;
      for (std::size_t k = 0; k < n; ++k) {
        if (mask >> k & 1) sub.push_back(s[k]);
      }
      closure.insert(std::move(sub));
    }
  }
  return explicit_sets({closure.begin(), closure.end()}, true, std::move(name));
}

SetFamily SetFamily::from_predicate(Predicate member, Index ground_bound, bool downward_closed,
                                    std::string name) {
  if (!member) throw DomainError("predicate family without a predicate");
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->downward_closed = downward_closed;
  impl->contains = member;
  impl->enumerable = [ground_bound](Index horizon) {
    return std::min(ground_bound, horizon) <= kEnumerationBound;
  };
  impl->members = [member, ground_bound, downward_closed](Index horizon) {
    const Index ground = std::min(ground_bound, horizon);
    if (ground > kEnumerationBound) {
      throw ResourceError("predicate family enumeration over a ground set of " +
                          std::to_string(ground) + " elements exceeds the budget of " +
                          std::to_string(kEnumerationBound));
    }
    std::vector<IndexSet> out;
    IndexSet current;
    enumerate_subsets(ground, member, downward_closed, current, out);
    return out;
  };
  return SetFamily(std::move(impl));
}

SetFamily SetFamily::initial_segments() {
  auto impl = std::make_shared<Impl>();
  impl->name = "initial-segments";
  impl->contains = [](const IndexSet& s) {
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != k + 1) return false;
    }
    return !s.empty();
  };
  impl->enumerable = [](Index) { return true; };
  impl->members = [](Index horizon) {
    std::vector<IndexSet> out;
    for (Index k = 1; k <= horizon; ++k) out.push_back(range_step(1, k, 1));
    return out;
  };
  impl->heaviest = [](std::span<const Rational> w) {
    require_nonnegative(w);
    return range_step(1, w.size(), 1);
  };
  return SetFamily(std::move(impl));
}

SetFamily SetFamily::even_odd_segments() {
  auto impl = std::make_shared<Impl>();
  impl->name = "even-odd-segments";
  impl->contains = [](const IndexSet& s) {
    if (s.empty()) return false;
    const Index first = s.front() % 2 == 0 ? 2 : 1;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] != first + 2 * k) return false;
    }
    return true;
  };
  impl->enumerable = [](Index) { return true; };
  impl->members = [](Index horizon) {
    std::vector<IndexSet> out;
    for (Index k = 1; k <= horizon; k += 2) out.push_back(range_step(1, k, 2));
    for (Index k = 2; k <= horizon; k += 2) out.push_back(range_step(2, k, 2));
    return out;
  };
  impl->heaviest = [](std::span<const Rational> w) {
    require_nonnegative(w);
    IndexSet odd = range_step(1, w.size(), 2);
    IndexSet even = range_step(2, w.size(), 2);
    if (even.empty() || set_weight(odd, w) >= set_weight(even, w)) return odd;
    return even;
  };
  return SetFamily(std::move(impl));
}

SetFamily SetFamily::min_family() {
  auto impl = std::make_shared<Impl>();
  impl->name = "min-family";
  impl->downward_closed = true;
  Predicate member = [](const IndexSet& s) { return !s.empty() && s.size() <= s.front(); };
  impl->contains = member;
  impl->enumerable = [](Index horizon) { return horizon <= kEnumerationBound; };
  impl->members = [member](Index horizon) {
    if (horizon > kEnumerationBound) {
      throw ResourceError("min-family enumeration beyond horizon " +
                          std::to_string(kEnumerationBound));
    }
    std::vector<IndexSet> out;
    // The empty set is rejected by the predicate but must not prune.
    for (Index first = 1; first <= horizon; ++first) {
      IndexSet current{first};
      enumerate_subsets(horizon, member, true, current, out);
    }
    return out;
  };
  impl->heaviest = min_family_heaviest;
  return SetFamily(std::move(impl));
}

SetFamily SetFamily::by_name(const std::string& name) {
  if (name == "initial-segments") return initial_segments();
  if (name == "even-odd-segments") return even_odd_segments();
  if (name == "min-family") return min_family();
  throw DomainError("unknown family \"" + name +
                    "\" (known: initial-segments, even-odd-segments, min-family)");
}

const std::string& SetFamily::name() const { return impl_->name; }
bool SetFamily::downward_closed() const { return impl_->downward_closed; }
bool SetFamily::is_explicit() const { return impl_->is_explicit; }
bool SetFamily::contains(const IndexSet& set) const { return impl_->contains(set); }
bool SetFamily::enumerable(Index horizon) const { return impl_->enumerable(horizon); }
std::vector<IndexSet> SetFamily::members(Index horizon) const { return impl_->members(horizon); }

const std::vector<IndexSet>& SetFamily::explicit_members() const {
  if (!impl_->is_explicit) throw UnsupportedCapability("explicit member list of " + impl_->name);
  return impl_->sets;
}

bool SetFamily::has_heaviest() const { return static_cast<bool>(impl_->heaviest); }

IndexSet SetFamily::heaviest_member(std::span<const Rational> weights) const {
  if (impl_->heaviest) return impl_->heaviest(weights);
  require_nonnegative(weights);
  const auto all = members(weights.size());
  if (all.empty()) throw DomainError("family " + impl_->name + " has no member within horizon");
  const IndexSet* best = &all.front();
  Rational best_weight = set_weight(*best, weights);
  for (const auto& s : all) {
    Rational w = set_weight(s, weights);
    if (w > best_weight) {
      best_weight = std::move(w);
      best = &s;
    }
  }
  return *best;
}

}  // namespace minimax
