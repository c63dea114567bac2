#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hallrad/perm.hpp"

namespace hallrad {

/// Base and strong generating set for a permutation group.
///
/// Built by randomized Schreier-Sims followed by a deterministic
/// verification pass that sifts every Schreier generator, so the
/// resulting chain is certified exact.
class StabilizerChain {
public:
  struct Level {
    Point base_point = 0;
    std::vector<Perm> gens;        // generators of the stabilizer of the previous base points
    std::vector<Point> orbit;      // fundamental orbit of base_point
    std::vector<int32_t> orbit_pos;  // point -> index into orbit, or -1
    std::vector<Perm> transversal;   // indexed by orbit position; t[beta -> point]
  };

  /// base_pref lists points to prefer (in order) when choosing base points;
  /// used for point/pointwise stabilizers and kernel extraction. With
  /// force_pref_levels every preferred point becomes a chain level up front,
  /// so the preferred points form a strict base prefix.
  static StabilizerChain build(size_t degree, std::vector<Perm> gens,
                               std::vector<Point> base_pref = {},
                               uint64_t seed = 0, bool force_pref_levels = false);

  size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  Order order() const;
  bool contains(const Perm& p) const;

  /// Residue of p after sifting through levels [from, end); identity residue
  /// means full strip. Second member is the level where sifting stopped.
  std::pair<Perm, size_t> sift(const Perm& p, size_t from = 0) const;

  /// Sift through levels [0, upto) only.
  Perm sift_upto(const Perm& p, size_t upto) const;

  /// Strong generators fixing every point in pts; generates the pointwise
  /// stabilizer when pts is a prefix of the base preference.
  std::vector<Perm> strong_gens_fixing(std::span<const Point> pts) const;

  /// Uniformly random element.
  Perm random_element(std::mt19937_64& rng) const;

  /// All elements; throws cap_exceeded when the order exceeds cap.
  std::vector<Perm> elements(uint64_t cap) const;

  const Perm& transversal_element(size_t level, Point p) const;

private:
  size_t degree_ = 0;
  std::vector<Level> levels_;

  void recompute_orbit(size_t lvl);
  void insert_generator(const Perm& g, size_t lvl, const std::vector<Point>& base_pref);
  Point pick_base_point(const Perm& g, const std::vector<Point>& base_pref) const;
  bool verify_level(size_t lvl, Perm& bad, size_t& bad_level);
};

}  // namespace hallrad
