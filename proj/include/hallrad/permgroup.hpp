#pragma once

#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hallrad/perm.hpp"
#include "hallrad/stabilizer_chain.hpp"

namespace hallrad {

/// Element-processing cap for exhaustive sweeps; HALLRAD_CAP overrides.
uint64_t element_cap();

/// A permutation group given by generators, with a lazily built stabilizer
/// chain. Immutable once the chain exists; build the chain eagerly (any
/// query does) before sharing across threads.
class PermGroup {
public:
  PermGroup();  // trivial group on one point
  PermGroup(size_t degree, std::vector<Perm> gens);

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t seed() const { return seed_; }

  const StabilizerChain& chain() const;

  Order order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }
  bool contains(const Perm& x) const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  /// Transitive and without a nontrivial proper block system.
  bool is_primitive() const;

  PermGroup point_stabilizer(Point p) const;
  PermGroup pointwise_stabilizer(std::span<const Point> pts) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& g) const;

  Perm random_element(std::mt19937_64& rng) const;
  std::vector<Perm> elements(uint64_t cap) const { return chain().elements(cap); }

  /// Smallest normal subgroup of *this containing seed.
  PermGroup normal_closure(const std::vector<Perm>& seed) const;
  PermGroup derived_subgroup() const;
  /// Strictly decreasing until stabilization; last entry is the perfect residual.
  std::vector<PermGroup> derived_series() const;
  bool is_solvable() const;

private:
  size_t degree_;
  std::vector<Perm> gens_;
  uint64_t seed_;
  mutable std::shared_ptr<const StabilizerChain> chain_;
  mutable std::shared_ptr<const StabilizerChain> stab_chain_;  // last prefix query
  mutable std::vector<Point> stab_prefix_;

  const StabilizerChain& chain_with_prefix(std::span<const Point> pts) const;
};

/// One representative per conjugacy class; throws cap_exceeded above cap.
std::vector<Perm> conjugacy_class_reps(const PermGroup& g, uint64_t cap);

struct MinimalNormalResult {
  std::vector<PermGroup> subgroups;
  bool probabilistic = false;
};

/// Complete list of minimal normal subgroups when |g| is within cap;
/// randomized (flagged) beyond it.
MinimalNormalResult minimal_normal_subgroups(const PermGroup& g, uint64_t cap);

struct SocleResult {
  PermGroup socle;
  bool probabilistic = false;
};

SocleResult socle(const PermGroup& g, uint64_t cap);

/// Conjugating element with h1^g = h2, if one exists. Exhaustive over the
/// elements of g; throws cap_exceeded when |g| > cap.
std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& h1,
                                        const PermGroup& h2, uint64_t cap);

/// Subgroup generated by the union of generator sets.
PermGroup join(const PermGroup& a, const PermGroup& b);

bool is_normal_in(const PermGroup& sub, const PermGroup& g);

}  // namespace hallrad
