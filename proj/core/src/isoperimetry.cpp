// Copyright 2026 The isocert Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isocert/isoperimetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "isocert/calculus.hpp"
#include "isocert/errors.hpp"
#include "isocert/parallel.hpp"
#include "isocert/random.hpp"

namespace isocert {

const ProfileEntry* IsoProfile::find(std::size_t k) const {
  for (const auto& e : entries) {
    if (e.k == k) return &e;
  }
  return nullptr;
}

bool IsoProfile::all_exact() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.exact; });
}

std::vector<VertexId> profile_candidates(const ExploredBall& ball, Regime convention) {
  if (convention == Regime::Compact && !ball.complete) {
    throw PreconditionError("the compact convention needs a complete finite graph");
  }
  return ball.interior_vertices();
}

// Knuth's Algorithm R (revolving-door combinations), 1-based.
RevolvingDoor::RevolvingDoor(std::size_t n, std::size_t t) : n_(n), t_(t) {
  if (t > n) throw PreconditionError("subset size exceeds the ground set");
  c_.assign(t + 2, 0);
  for (std::size_t j = 1; j <= t; ++j) c_[j] = j - 1;
  c_[t + 1] = n;
  refresh_sorted();
  done_ = (t == 0 || t == n);
}

void RevolvingDoor::refresh_sorted() { sorted_.assign(c_.begin() + 1, c_.begin() + 1 + t_); }

bool RevolvingDoor::next(std::size_t& removed, std::size_t& inserted) {
  if (done_) return false;
  previous_.assign(sorted_.begin(), sorted_.end());
  const auto& before = previous_;
  auto& c = c_;
  const std::size_t t = t_;
  std::size_t j = 2;
  bool advanced = false;
  bool r4 = false;

  if (t % 2 == 1) {
    if (c[1] + 1 < c[2]) {
      ++c[1];
      advanced = true;
    } else {
      r4 = true;
    }
  } else {
    if (c[1] > 0) {
      --c[1];
      advanced = true;
    }
  }
  while (!advanced) {
    if (j > t) {
      done_ = true;
      return false;
    }
    if (r4) {
      if (c[j] >= j) {
        c[j] = c[j - 1];
        c[j - 1] = j - 2;
        advanced = true;
        break;
      }
      ++j;
      r4 = false;
      continue;
    }
    if (c[j] + 1 < c[j + 1]) {
      c[j - 1] = c[j];
      ++c[j];
      advanced = true;
      break;
    }
    ++j;
    r4 = true;
  }

  refresh_sorted();
  // The indices stay increasing, so the swap is the symmetric difference.
  std::size_t i = 0, k = 0;
  bool got_out = false, got_in = false;
  while (i < t || k < t) {
    if (k == t || (i < t && before[i] < sorted_[k])) {
      removed = before[i++];
      got_out = true;
    } else if (i == t || sorted_[k] < before[i]) {
      inserted = sorted_[k++];
      got_in = true;
    } else {
      ++i;
      ++k;
    }
  }
  if (!got_out || !got_in) throw Error("revolving door produced a non-swap step");
  return true;
}

std::uint64_t subset_count(std::size_t n, std::size_t kmax) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  // C(n, k) as a long double guards the saturation test; exact below 2^64.
  long double binom = 1.0L;
  std::uint64_t exact = 1;
  bool overflow = false;
  for (std::size_t k = 1; k <= std::min(kmax, n); ++k) {
    binom = binom * static_cast<long double>(n - k + 1) / static_cast<long double>(k);
    if (binom > 1.8e19L) overflow = true;
    if (!overflow) {
      // exact * (n - k + 1) / k is integral; split to avoid overflow.
      const std::uint64_t num = n - k + 1;
      const std::uint64_t g = std::gcd(exact, static_cast<std::uint64_t>(k));
      exact = (exact / g) * (num / (k / g));
    }
    if (overflow || total > cap - exact) return cap;
    total += exact;
  }
  return total;
}

namespace {

struct Best {
  std::uint64_t perimeter = std::numeric_limits<std::uint64_t>::max();
  std::vector<VertexId> witness;

  void offer(std::uint64_t p, const std::vector<VertexId>& w) {
    if (p < perimeter || (p == perimeter && w < witness)) {
      perimeter = p;
      witness = w;
    }
  }
  void merge(const Best& o) {
    if (!o.witness.empty()) offer(o.perimeter, o.witness);
  }
};

// Cut edges between `member` and its complement, with the current number of
// members adjacent to each vertex.
class CutTracker {
 public:
  explicit CutTracker(const ExploredBall& ball)
      : ball_(ball), member_(ball.size(), 0), inside_(ball.size(), 0) {}

  bool contains(VertexId v) const { return member_[v] != 0; }
  std::uint32_t inside(VertexId v) const { return inside_[v]; }
  std::uint64_t cut() const { return cut_; }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(ball_.adjacency[v].size());
  }

  void add(VertexId v) {
    member_[v] = 1;
    cut_ += degree(v);
    cut_ -= 2 * static_cast<std::uint64_t>(inside_[v]);
    for (auto u : ball_.adjacency[v]) ++inside_[u];
  }
  void remove(VertexId v) {
    member_[v] = 0;
    cut_ += 2 * static_cast<std::uint64_t>(inside_[v]);
    cut_ -= degree(v);
    for (auto u : ball_.adjacency[v]) --inside_[u];
  }
  bool adjacent(VertexId a, VertexId b) const {
    const auto& adj = ball_.adjacency[a];
    return std::binary_search(adj.begin(), adj.end(), b);
  }
  /// Change in cut edges when swapping member `out` for non-member `in`.
  std::int64_t swap_delta(VertexId out, VertexId in) const {
    const std::int64_t link = adjacent(out, in) ? 1 : 0;
    const std::int64_t d_out = 2 * std::int64_t(inside_[out]) - degree(out);
    const std::int64_t in_after = std::int64_t(inside_[in]) - link;
    const std::int64_t d_in = std::int64_t(degree(in)) - 2 * in_after;
    return d_out + d_in;
  }

 private:
  const ExploredBall& ball_;
  std::vector<char> member_;
  std::vector<std::uint32_t> inside_;
  std::uint64_t cut_ = 0;
};

Best enumerate_task(const ExploredBall& ball, const std::vector<VertexId>& cand, std::size_t k,
                    std::size_t lead) {
  Best best;
  const std::size_t rest = cand.size() - lead - 1;
  const std::size_t t = k - 1;
  if (t > rest) return best;
  CutTracker tracker(ball);
  tracker.add(cand[lead]);
  RevolvingDoor door(rest, t);
  const auto vertex = [&](std::size_t i) { return cand[lead + 1 + i]; };
  for (auto i : door.current()) tracker.add(vertex(i));

  std::vector<VertexId> witness(k);
  const auto record = [&] {
    const std::uint64_t p = 2 * tracker.cut();
    if (p > best.perimeter) return;
    witness[0] = cand[lead];
    const auto& cur = door.current();
    for (std::size_t i = 0; i < t; ++i) witness[i + 1] = vertex(cur[i]);
    best.offer(p, witness);
  };
  record();
  std::size_t out = 0, in = 0;
  while (door.next(out, in)) {
    tracker.remove(vertex(out));
    tracker.add(vertex(in));
    record();
  }
  return best;
}

}  // namespace

IsoProfile exact_profile(const ExploredBall& ball, std::size_t kmax, Regime convention,
                         const EnumerationOptions& options) {
  const auto cand = profile_candidates(ball, convention);
  if (convention == Regime::Compact) kmax = std::min(kmax, ball.size() / 2);
  if (kmax > cand.size()) {
    throw PreconditionError("k = " + std::to_string(kmax) + " exceeds the " +
                            std::to_string(cand.size()) + " admissible vertices");
  }
  const auto work = subset_count(cand.size(), kmax);
  if (work > options.work_cap) {
    throw ResourceError("exhaustive enumeration needs " + std::to_string(work) +
                        " subsets (cap " + std::to_string(options.work_cap) +
                        "); use heuristic_profile instead");
  }

  // One task per (k, smallest element) pair.
  struct Task {
    std::size_t k;
    std::size_t lead;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 1; k <= kmax; ++k) {
    for (std::size_t lead = 0; lead + k <= cand.size(); ++lead) tasks.push_back({k, lead});
  }
  std::vector<Best> results(tasks.size());
  parallel_for(tasks.size(), options.workers, [&](std::size_t i) {
    results[i] = enumerate_task(ball, cand, tasks[i].k, tasks[i].lead);
  });

  IsoProfile profile;
  profile.convention = convention;
  std::vector<Best> per_k(kmax + 1);
  for (std::size_t i = 0; i < tasks.size(); ++i) per_k[tasks[i].k].merge(results[i]);
  for (std::size_t k = 1; k <= kmax; ++k) {
    profile.entries.push_back({k, per_k[k].perimeter, per_k[k].witness, true});
  }
  return profile;
}

namespace {

// Vector with O(1) insert, erase and uniform draw.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t universe) : pos_(universe, npos) {}
  bool contains(VertexId v) const { return pos_[v] != npos; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  VertexId at(std::size_t i) const { return items_[i]; }
  const std::vector<VertexId>& items() const { return items_; }
  void insert(VertexId v) {
    if (contains(v)) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }
  void erase(VertexId v) {
    if (!contains(v)) return;
    const std::size_t i = pos_[v];
    items_[i] = items_.back();
    pos_[items_[i]] = i;
    items_.pop_back();
    pos_[v] = npos;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos_;
  std::vector<VertexId> items_;
};

constexpr double kBoundaryBias = 0.8;
constexpr double kCooling = 0.97;
constexpr int kCalibrationSwaps = 100;

Best anneal_chain(const ExploredBall& ball, const std::vector<VertexId>& cand,
                  const std::vector<char>& allowed, std::size_t k, std::uint64_t budget,
                  std::uint64_t seed) {
  Rng rng(seed);
  CutTracker tracker(ball);
  IndexedSet members(ball.size()), outside(ball.size()), boundary(ball.size());

  std::vector<VertexId> pool = cand;
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (i < k) {
      members.insert(pool[i]);
      tracker.add(pool[i]);
    } else {
      outside.insert(pool[i]);
    }
  }
  for (auto v : outside.items()) {
    if (tracker.inside(v) > 0) boundary.insert(v);
  }

  Best best;
  const auto snapshot = [&] {
    auto w = members.items();
    std::sort(w.begin(), w.end());
    best.offer(2 * tracker.cut(), w);
  };
  snapshot();
  if (outside.empty() || budget == 0) return best;

  const auto propose = [&](VertexId& out, VertexId& in) {
    out = members.at(rng.below(members.size()));
    if (!boundary.empty() && rng.uniform() < kBoundaryBias) {
      in = boundary.at(rng.below(boundary.size()));
    } else {
      in = outside.at(rng.below(outside.size()));
    }
  };

  double temperature = 0.0;
  for (int i = 0; i < kCalibrationSwaps; ++i) {
    VertexId out, in;
    propose(out, in);
    temperature += std::fabs(static_cast<double>(tracker.swap_delta(out, in)));
  }
  temperature /= kCalibrationSwaps;
  if (temperature <= 0.0) temperature = 1.0;

  const auto refresh = [&](VertexId v) {
    for (auto u : ball.adjacency[v]) {
      if (!allowed[u] || members.contains(u)) continue;
      if (tracker.inside(u) > 0) {
        boundary.insert(u);
      } else {
        boundary.erase(u);
      }
    }
  };

  for (std::uint64_t step = 0; step < budget; ++step) {
    VertexId out, in;
    propose(out, in);
    const auto delta = tracker.swap_delta(out, in);
    if (delta <= 0 || rng.uniform() < std::exp(-static_cast<double>(delta) / temperature)) {
      tracker.remove(out);
      tracker.add(in);
      members.erase(out);
      members.insert(in);
      outside.erase(in);
      outside.insert(out);
      boundary.erase(in);
      if (tracker.inside(out) > 0) boundary.insert(out);
      refresh(out);
      refresh(in);
      if (delta < 0 || 2 * tracker.cut() <= best.perimeter) snapshot();
    }
    if ((step + 1) % k == 0) temperature *= kCooling;
  }
  return best;
}

}  // namespace

IsoProfile heuristic_profile(const ExploredBall& ball, std::span<const std::size_t> ks,
                             Regime convention, const AnnealingOptions& options) {
  const auto cand = profile_candidates(ball, convention);
  std::vector<char> allowed(ball.size(), 0);
  for (auto v : cand) allowed[v] = 1;
  const std::size_t limit = convention == Regime::Compact ? ball.size() / 2 : cand.size();
  for (auto k : ks) {
    if (k == 0 || k > limit) {
      throw PreconditionError("k = " + std::to_string(k) + " is outside 1.." +
                              std::to_string(limit));
    }
  }
  const unsigned restarts = std::max(1u, options.restarts);
  std::vector<Best> results(ks.size() * restarts);
  parallel_for(results.size(), options.workers, [&](std::size_t i) {
    const std::size_t k = ks[i / restarts];
    const std::uint64_t seed = derive_seed(options.seed, k, i % restarts);
    results[i] = anneal_chain(ball, cand, allowed, k, options.budget, seed);
  });

  IsoProfile profile;
  profile.convention = convention;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    Best best;
    for (unsigned r = 0; r < restarts; ++r) best.merge(results[j * restarts + r]);
    profile.entries.push_back({ks[j], best.perimeter, best.witness, false});
  }
  std::sort(profile.entries.begin(), profile.entries.end(),
            [](const auto& a, const auto& b) { return a.k < b.k; });
  return profile;
}

IsoConstantEstimate isoperimetric_constant(const IsoProfile& profile, const GrowthTable& table,
                                           Regime convention) {
  if (profile.convention != convention) {
    throw PreconditionError("profile convention does not match the requested convention");
  }
  if (convention == Regime::Infinite && table.complete) {
    throw PreconditionError("the infinite convention does not apply to a finite graph");
  }
  if (convention == Regime::Compact && !table.complete) {
    throw PreconditionError("the compact convention needs a complete finite graph");
  }
  IsoConstantEstimate est;
  est.convention = convention;
  est.exact = profile.all_exact();
  bool any = false;
  for (const auto& e : profile.entries) {
    if (convention == Regime::Compact && 2 * e.k > *table.total) continue;
    if (e.perimeter == 0) {
      throw PreconditionError("zero perimeter at k = " + std::to_string(e.k) +
                              "; the graph is disconnected");
    }
    const int r = convention == Regime::Infinite ? table.radius_for(e.k)
                                                 : table.half_radius_for(e.k);
    const Rational value(Integer(e.k), Integer(r) * Integer(e.perimeter));
    if (!any || value > est.value) {
      est.value = value;
      est.k = e.k;
      est.radius = r;
      est.perimeter = e.perimeter;
      est.witness = e.witness;
      any = true;
    }
  }
  if (!any) throw PreconditionError("profile has no usable entries");
  return est;
}

DecoupledCheck decoupled_check(const ExploredBall& ball, std::span<const VertexId> a,
                               std::span<const VertexId> e, const GrowthTable& table,
                               const Rational& constant, Regime convention) {
  if (convention == Regime::Infinite && ball.complete) {
    throw PreconditionError("the infinite convention does not apply to a finite graph");
  }
  if (convention == Regime::Compact) {
    if (!ball.complete) throw PreconditionError("the compact convention needs a complete graph");
    if (2 * a.size() > ball.size()) throw PreconditionError("compact form needs |A| <= |V| / 2");
  }
  std::vector<char> in_a(ball.size(), 0), in_e(ball.size(), 0);
  for (auto v : a) {
    if (v >= ball.size()) throw PreconditionError("A has a vertex outside the ball");
    in_a[v] = 1;
  }
  std::size_t e_size = 0, overlap = 0;
  for (auto v : e) {
    if (v >= ball.size()) throw PreconditionError("E has a vertex outside the ball");
    if (in_e[v]) continue;
    in_e[v] = 1;
    ++e_size;
    if (in_a[v]) ++overlap;
  }
  DecoupledCheck out;
  out.perimeter = edge_perimeter(ball, in_a);
  out.radius = table.radius_for(e_size);
  out.lhs = Rational(static_cast<long long>(overlap));
  out.bound = constant * out.radius * Rational(Integer(out.perimeter));
  out.pass = out.lhs <= out.bound;
  return out;
}

DoubleCountingCheck double_counting_check(const FiniteGroup& group,
                                          std::span<const FiniteGroup::Index> a,
                                          std::span<const FiniteGroup::Index> b) {
  const std::size_t n = group.order();
  std::vector<char> in_a(n, 0), in_b(n, 0);
  std::size_t na = 0, nb = 0;
  for (auto x : a) {
    if (x >= n) throw PreconditionError("A has an element outside the group");
    if (!in_a[x]) ++na;
    in_a[x] = 1;
  }
  for (auto x : b) {
    if (x >= n) throw PreconditionError("B has an element outside the group");
    if (!in_b[x]) ++nb;
    in_b[x] = 1;
  }
  if (nb == 0) throw PreconditionError("B must be non-empty");
  if (2 * na > nb) throw PreconditionError("double counting needs |A| <= |B| / 2");

  std::uint64_t total = 0;
  for (FiniteGroup::Index y = 0; y < n; ++y) {
    if (!in_b[y]) continue;
    for (FiniteGroup::Index x = 0; x < n; ++x) {
      if (in_a[x] && !in_a[group.multiply(x, y)]) ++total;
    }
  }
  DoubleCountingCheck out;
  out.average = Rational(Integer(total), Integer(nb));
  out.threshold = Rational(Integer(na), Integer(2));
  out.pass = out.average >= out.threshold;
  return out;
}

bool action_preserves_adjacency(const Space& space, const ExploredBall& ball) {
  if (!ball.complete) throw PreconditionError("adjacency invariance needs a complete graph");
  for (const auto& g : space.generators()) {
    std::vector<VertexId> image(ball.size());
    for (VertexId v = 0; v < ball.size(); ++v) {
      const auto w = ball.find(space.act(g, ball.vertices[v]));
      if (!w) return false;
      image[v] = *w;
    }
    for (VertexId v = 0; v < ball.size(); ++v) {
      for (auto u : ball.adjacency[v]) {
        const auto& adj = ball.adjacency[image[v]];
        if (!std::binary_search(adj.begin(), adj.end(), image[u])) return false;
      }
    }
  }
  return true;
}

TranslationCheck translation_gradient_check(const Space& space, const ExploredBall& ball,
                                            const FiniteGroup& group, const ExactField& f,
                                            const Element& x) {
  if (!ball.complete) throw PreconditionError("translation check needs a complete finite graph");
  if (f.size() != ball.size()) throw PreconditionError("field/ball size mismatch");
  if (!action_preserves_adjacency(space, ball)) {
    throw PreconditionError(
        "the group does not act by graph automorphisms; use a conjugation-closed "
        "generating set or an abelian group");
  }
  const auto xi = group.index_of(x);

  std::vector<VertexId> orbit(group.order());
  TranslationCheck out;
  for (FiniteGroup::Index y = 0; y < group.order(); ++y) {
    const auto v = ball.find(space.act(group.element(y), space.basepoint()));
    if (!v) throw PreconditionError("orbit point outside the graph");
    orbit[y] = *v;
    if (*v == 0) ++out.stabilizer;
  }
  Rational sum = 0;
  for (FiniteGroup::Index y = 0; y < group.order(); ++y) {
    sum += abs(f[orbit[group.multiply(y, xi)]] - f[orbit[y]]);
  }
  out.lhs = sum / static_cast<long long>(out.stabilizer);
  out.distance = ball.dist[orbit[xi]];
  out.bound = Rational(out.distance) * l1_norm(gradient_modulus(ball, f));
  out.pass = out.lhs <= out.bound;
  return out;
}

}  // namespace isocert
