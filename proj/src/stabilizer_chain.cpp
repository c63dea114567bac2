#include "hallrad/stabilizer_chain.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace hallrad {

Point StabilizerChain::pick_base_point(const Perm& g,
                                       const std::vector<Point>& base_pref) const {
  for (Point p : base_pref)
    if (g[p] != p) return p;
  for (Point p = 0; p < g.degree(); ++p)
    if (g[p] != p) return p;
  throw error("cannot pick base point for identity");
}

void StabilizerChain::recompute_orbit(size_t lvl) {
  Level& L = levels_[lvl];
  L.orbit.clear();
  L.orbit_pos.assign(degree_, -1);
  L.transversal.clear();

  L.orbit.push_back(L.base_point);
  L.orbit_pos[L.base_point] = 0;
  L.transversal.push_back(Perm::identity(degree_));

  for (size_t i = 0; i < L.orbit.size(); ++i) {
    Point p = L.orbit[i];
    for (const Perm& s : L.gens) {
      Point q = s[p];
      if (L.orbit_pos[q] < 0) {
        L.orbit_pos[q] = static_cast<int32_t>(L.orbit.size());
        L.orbit.push_back(q);
        L.transversal.push_back(L.transversal[i] * s);
      }
    }
  }
}

// Adds g to every level whose preceding base points it fixes; returns the
// deepest level touched. May append a new level.
void StabilizerChain::insert_generator(const Perm& g, size_t /*lvl*/,
                                       const std::vector<Point>& base_pref) {
  size_t j = 0;
  while (true) {
    if (j == levels_.size()) {
      Level L;
      L.base_point = pick_base_point(g, base_pref);
      levels_.push_back(std::move(L));
    }
    levels_[j].gens.push_back(g);
    recompute_orbit(j);
    if (g[levels_[j].base_point] != levels_[j].base_point) break;
    ++j;
  }
}

std::pair<Perm, size_t> StabilizerChain::sift(const Perm& p, size_t from) const {
  Perm r = p;
  for (size_t j = from; j < levels_.size(); ++j) {
    if (r.is_identity()) return {r, j};
    const Level& L = levels_[j];
    Point beta = r[L.base_point];
    int32_t pos = L.orbit_pos[beta];
    if (pos < 0) return {r, j};
    r = r * L.transversal[static_cast<size_t>(pos)].inverse();
  }
  return {r, levels_.size()};
}

Perm StabilizerChain::sift_upto(const Perm& p, size_t upto) const {
  Perm r = p;
  for (size_t j = 0; j < upto && j < levels_.size(); ++j) {
    const Level& L = levels_[j];
    Point beta = r[L.base_point];
    int32_t pos = L.orbit_pos[beta];
    if (pos < 0) throw error("sift left the fundamental orbit");
    if (pos > 0) r = r * L.transversal[static_cast<size_t>(pos)].inverse();
  }
  return r;
}

StabilizerChain StabilizerChain::build(size_t degree, std::vector<Perm> gens,
                                       std::vector<Point> base_pref, uint64_t seed,
                                       bool force_pref_levels) {
  if (degree == 0) throw error("degree must be positive");
  StabilizerChain c;
  c.degree_ = degree;

  if (force_pref_levels)
    for (Point p : base_pref) {
      Level L;
      L.base_point = p;
      c.levels_.push_back(std::move(L));
      c.recompute_orbit(c.levels_.size() - 1);
    }

  std::vector<Perm> work;
  for (Perm& g : gens) {
    if (g.degree() != degree) throw error("generator degree mismatch");
    if (!g.is_identity()) work.push_back(std::move(g));
  }
  if (work.empty()) return c;

  for (const Perm& g : work) {
    auto [r, l] = c.sift(g);
    if (!r.is_identity()) c.insert_generator(r, l, base_pref);
  }

  // Randomized warm-up: sift random words in the input generators so most
  // strong generators are in place before the verification pass.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int round = 0; round < 32; ++round) {
    Perm w = work[rng() % work.size()];
    size_t len = 2 + rng() % 6;
    for (size_t i = 0; i < len; ++i) w = w * work[rng() % work.size()];
    auto [r, l] = c.sift(w);
    if (!r.is_identity()) c.insert_generator(r, l, base_pref);
  }

  // Deterministic verification: every Schreier generator must sift to the
  // identity. Failures become new strong generators and the affected levels
  // are re-verified, so the final chain is exact.
  size_t i = c.levels_.size();
  while (i > 0) {
    --i;
    const Level& L = c.levels_[i];
    bool dirty = false;
    for (size_t oi = 0; !dirty && oi < L.orbit.size(); ++oi) {
      Point beta = L.orbit[oi];
      const Perm& u = L.transversal[oi];
      for (const Perm& s : L.gens) {
        Point target = s[beta];
        const Perm& v = L.transversal[static_cast<size_t>(L.orbit_pos[target])];
        Perm schreier = (u * s) * v.inverse();
        if (schreier.is_identity()) continue;
        auto [r, l] = c.sift(schreier, i + 1);
        if (!r.is_identity()) {
          c.insert_generator(r, l, base_pref);
          i = std::min(l + 1, c.levels_.size());  // re-verify from level l down
          dirty = true;
          break;
        }
      }
    }
  }
  return c;
}

Order StabilizerChain::order() const {
  Order n = 1;
  for (const Level& L : levels_) n *= static_cast<Order>(L.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_) throw error("degree mismatch in membership test");
  auto [r, l] = sift(p);
  (void)l;
  return r.is_identity();
}

std::vector<Perm> StabilizerChain::strong_gens_fixing(std::span<const Point> pts) const {
  std::vector<Perm> out;
  auto fixes_all = [&](const Perm& g) {
    for (Point p : pts)
      if (g[p] != p) return false;
    return true;
  };
  for (const Level& L : levels_)
    for (const Perm& g : L.gens)
      if (fixes_all(g) && std::find(out.begin(), out.end(), g) == out.end())
        out.push_back(g);
  return out;
}

Perm StabilizerChain::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(degree_);
  for (size_t j = levels_.size(); j > 0; --j) {
    const Level& L = levels_[j - 1];
    g = g * L.transversal[rng() % L.transversal.size()];
  }
  return g;
}

std::vector<Perm> StabilizerChain::elements(uint64_t cap) const {
  if (order() > static_cast<Order>(cap))
    throw cap_exceeded("element enumeration cap exceeded");
  std::vector<Perm> acc{Perm::identity(degree_)};
  for (size_t j = levels_.size(); j > 0; --j) {
    const Level& L = levels_[j - 1];
    std::vector<Perm> next;
    next.reserve(acc.size() * L.transversal.size());
    for (const Perm& e : acc)
      for (const Perm& t : L.transversal) next.push_back(e * t);
    acc = std::move(next);
  }
  return acc;
}

const Perm& StabilizerChain::transversal_element(size_t level, Point p) const {
  const Level& L = levels_[level];
  int32_t pos = L.orbit_pos[p];
  if (pos < 0) throw error("point not in fundamental orbit");
  return L.transversal[static_cast<size_t>(pos)];
}

}  // namespace hallrad
