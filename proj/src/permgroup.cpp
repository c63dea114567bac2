#include "hallrad/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace hallrad {

uint64_t element_cap() {
  static uint64_t cap = [] {
    if (const char* env = std::getenv("HALLRAD_CAP")) {
      uint64_t v = std::strtoull(env, nullptr, 10);
      if (v > 0) return v;
    }
    return uint64_t{100000};
  }();
  return cap;
}

namespace {

uint64_t gens_digest(size_t degree, const std::vector<Perm>& gens) {
  uint64_t h = 1469598103934665603ull ^ degree;
  for (const Perm& g : gens) {
    h ^= perm_hash(g);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

PermGroup::PermGroup() : degree_(1), seed_(gens_digest(1, {})) {}

PermGroup::PermGroup(size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)), seed_(gens_digest(degree, gens_)) {
  if (degree_ == 0) throw error("degree must be positive");
  for (const Perm& g : gens_)
    if (g.degree() != degree_) throw error("generator degree mismatch");
}

const StabilizerChain& PermGroup::chain() const {
  if (!chain_)
    chain_ = std::make_shared<const StabilizerChain>(
        StabilizerChain::build(degree_, gens_, {}, seed_));
  return *chain_;
}

const StabilizerChain& PermGroup::chain_with_prefix(std::span<const Point> pts) const {
  std::vector<Point> pref(pts.begin(), pts.end());
  if (stab_chain_ && stab_prefix_ == pref) return *stab_chain_;
  stab_chain_ = std::make_shared<const StabilizerChain>(
      StabilizerChain::build(degree_, gens_, pref, seed_));
  stab_prefix_ = std::move(pref);
  return *stab_chain_;
}

bool PermGroup::contains(const Perm& x) const {
  if (x.degree() != degree_) throw error("degree mismatch in membership test");
  return chain().contains(x);
}

std::vector<Point> PermGroup::orbit(Point p) const {
  if (p >= degree_) throw error("point out of range");
  std::vector<Point> orb{p};
  std::vector<bool> seen(degree_, false);
  seen[p] = true;
  for (size_t i = 0; i < orb.size(); ++i)
    for (const Perm& g : gens_) {
      Point q = g[orb[i]];
      if (!seen[q]) {
        seen[q] = true;
        orb.push_back(q);
      }
    }
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p]) continue;
    auto orb = orbit(p);
    for (Point q : orb) seen[q] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

namespace {

// Size of the minimal block containing {0, beta} (Atkinson's merge scheme).
size_t minimal_block_size(const std::vector<Perm>& gens, size_t degree, Point beta) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  // unite; returns the losing representative, if a merge happened
  auto unite = [&](Point a, Point b) -> std::optional<Point> {
    Point ra = find(a), rb = find(b);
    if (ra == rb) return std::nullopt;
    parent[rb] = ra;
    return rb;
  };

  std::deque<Point> queue;
  if (auto l = unite(0, beta)) queue.push_back(*l);
  while (!queue.empty()) {
    Point gamma = queue.front();
    queue.pop_front();
    Point delta = find(gamma);
    for (const Perm& g : gens)
      if (auto l = unite(g[gamma], g[delta])) queue.push_back(*l);
  }

  Point r0 = find(0);
  size_t size = 0;
  for (Point p = 0; p < degree; ++p)
    if (find(p) == r0) ++size;
  return size;
}

}  // namespace

bool PermGroup::is_primitive() const {
  if (!is_transitive()) throw error("primitivity requires a transitive group");
  if (degree_ <= 2) return true;
  for (Point beta = 1; beta < degree_; ++beta) {
    size_t b = minimal_block_size(gens_, degree_, beta);
    if (b > 1 && b < degree_) return false;
  }
  return true;
}

PermGroup PermGroup::point_stabilizer(Point p) const {
  if (p >= degree_) throw error("point out of range");
  std::vector<Point> pts{p};
  auto gens = chain_with_prefix(pts).strong_gens_fixing(pts);
  return PermGroup(degree_, std::move(gens));
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> pts) const {
  auto gens = chain_with_prefix(pts).strong_gens_fixing(pts);
  return PermGroup(degree_, std::move(gens));
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const Perm& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& g) const {
  return degree_ == g.degree() && order() == g.order() && is_subgroup_of(g);
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  return chain().random_element(rng);
}

PermGroup PermGroup::normal_closure(const std::vector<Perm>& seed) const {
  for (const Perm& s : seed)
    if (!contains(s)) throw error("normal closure seed not in the group");

  std::vector<Perm> cls;
  std::deque<Perm> work;
  for (const Perm& s : seed)
    if (!s.is_identity()) work.push_back(s);

  PermGroup n(degree_, {});
  while (!work.empty()) {
    // batch: absorb every pending element not yet in the closure, then rebuild
    std::vector<Perm> added;
    while (!work.empty()) {
      Perm x = std::move(work.front());
      work.pop_front();
      bool known = n.contains(x);
      if (!known)
        for (const Perm& a : added)
          if (a == x) {
            known = true;
            break;
          }
      if (!known) added.push_back(std::move(x));
    }
    if (added.empty()) break;
    std::vector<Perm> ng = cls;
    ng.insert(ng.end(), added.begin(), added.end());
    cls = ng;
    n = PermGroup(degree_, std::move(ng));
    for (const Perm& a : added)
      for (const Perm& g : gens_) {
        Perm c = hallrad::conjugate(a, g);
        if (!n.contains(c)) work.push_back(std::move(c));
      }
  }
  return n;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Perm> comms;
  for (const Perm& a : gens_)
    for (const Perm& b : gens_) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(comms);
}

std::vector<PermGroup> PermGroup::derived_series() const {
  std::vector<PermGroup> series{*this};
  while (true) {
    PermGroup d = series.back().derived_subgroup();
    if (d.order() == series.back().order()) break;
    bool trivial = d.is_trivial();
    series.push_back(std::move(d));
    if (trivial) break;
  }
  return series;
}

bool PermGroup::is_solvable() const { return derived_series().back().is_trivial(); }

std::vector<Perm> conjugacy_class_reps(const PermGroup& g, uint64_t cap) {
  auto elems = g.elements(cap);
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> reps;
  for (const Perm& e : elems) {
    if (seen.count(e)) continue;
    reps.push_back(e);
    std::deque<Perm> bfs{e};
    seen.insert(e);
    while (!bfs.empty()) {
      Perm x = std::move(bfs.front());
      bfs.pop_front();
      for (const Perm& s : g.generators()) {
        Perm c = conjugate(x, s);
        if (seen.insert(c).second) bfs.push_back(std::move(c));
      }
    }
  }
  return reps;
}

namespace {

// Prime-order powers of x: x^(o/r) for each prime r dividing o.
std::vector<Perm> prime_order_parts(const Perm& x) {
  std::vector<Perm> out;
  uint64_t o = x.order();
  if (o <= 1) return out;
  uint64_t rest = o;
  for (uint64_t r = 2; r * r <= rest; ++r)
    if (rest % r == 0) {
      out.push_back(power(x, o / r));
      while (rest % r == 0) rest /= r;
    }
  if (rest > 1) out.push_back(power(x, o / rest));
  return out;
}

}  // namespace

MinimalNormalResult minimal_normal_subgroups(const PermGroup& g, uint64_t cap) {
  MinimalNormalResult res;
  if (g.order() == 1) return res;

  std::vector<Perm> candidates;
  if (g.order() <= static_cast<Order>(cap)) {
    candidates = conjugacy_class_reps(g, cap);
  } else {
    res.probabilistic = true;
    std::mt19937_64 rng(g.seed());
    candidates = g.generators();
    for (int i = 0; i < 150; ++i) candidates.push_back(g.random_element(rng));
  }

  std::vector<PermGroup> closures;
  for (const Perm& x : candidates)
    for (const Perm& y : prime_order_parts(x)) {
      if (y.is_identity()) continue;
      bool dup = false;
      PermGroup n = g.normal_closure({y});
      for (const PermGroup& c : closures)
        if (c.same_group(n)) {
          dup = true;
          break;
        }
      if (!dup) closures.push_back(std::move(n));
    }

  for (size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (size_t j = 0; j < closures.size(); ++j)
      if (j != i && closures[j].order() < closures[i].order() &&
          closures[j].is_subgroup_of(closures[i])) {
        minimal = false;
        break;
      }
    if (minimal) res.subgroups.push_back(closures[i]);
  }
  return res;
}

SocleResult socle(const PermGroup& g, uint64_t cap) {
  auto mns = minimal_normal_subgroups(g, cap);
  PermGroup s(g.degree(), {});
  for (const PermGroup& n : mns.subgroups) s = join(s, n);
  return {std::move(s), mns.probabilistic};
}

std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& h1,
                                        const PermGroup& h2, uint64_t cap) {
  if (h1.order() != h2.order()) return std::nullopt;
  if (h1.same_group(h2)) return Perm::identity(g.degree());
  if (g.order() > static_cast<Order>(cap))
    throw cap_exceeded("conjugacy search cap exceeded");
  for (const Perm& x : g.elements(cap)) {
    bool ok = true;
    for (const Perm& s : h1.generators())
      if (!h2.contains(conjugate(s, x))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw error("degree mismatch in join");
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

bool is_normal_in(const PermGroup& sub, const PermGroup& g) {
  for (const Perm& s : sub.generators())
    for (const Perm& x : g.generators())
      if (!sub.contains(conjugate(s, x))) return false;
  return true;
}

}  // namespace hallrad
