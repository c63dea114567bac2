#pragma once

#include "hallrad/permgroup.hpp"

namespace hallrad {

/// Group homomorphism given on generators, realized internally as the
/// "graph" group acting on the disjoint union of source and image points.
class Homomorphism {
public:
  Homomorphism(PermGroup source, PermGroup image, std::vector<Perm> gen_images);

  const PermGroup& source() const { return source_; }
  const PermGroup& image() const { return image_; }
  const std::vector<Perm>& generator_images() const { return gen_images_; }

  Perm apply(const Perm& x) const;
  /// Some preimage of y; throws if y is not in the image.
  Perm preimage(const Perm& y) const;
  PermGroup kernel() const;
  /// Full preimage of a subgroup of the image.
  PermGroup preimage_group(const PermGroup& sub) const;

  static Homomorphism identity(const PermGroup& g);

private:
  PermGroup source_;
  PermGroup image_;
  std::vector<Perm> gen_images_;
  mutable std::shared_ptr<const StabilizerChain> fwd_chain_;  // base prefers source block
  mutable std::shared_ptr<const StabilizerChain> bwd_chain_;  // base prefers image block

  std::vector<Perm> graph_gens() const;
  const StabilizerChain& fwd_chain() const;
  const StabilizerChain& bwd_chain() const;
};

/// Default cap on the coset index for coset actions.
uint64_t coset_index_cap();

/// Action of g on the right cosets of h; image is transitive of degree |g:h|,
/// kernel is the core of h in g.
Homomorphism coset_action(const PermGroup& g, const PermGroup& h);

/// Largest normal subgroup of g contained in h.
PermGroup core(const PermGroup& g, const PermGroup& h);

/// G-action on its own orbits (one point per orbit).
Homomorphism orbit_action(const PermGroup& g);

/// Restriction of an intransitive group to an invariant point set.
Homomorphism restriction_to(const PermGroup& g, const std::vector<Point>& block);

/// Smallest faithful quotient representation of g/n this library can find
/// cheaply: the action on n-orbits when faithful, otherwise the action on
/// the cosets of n. Requires n normal in g.
Homomorphism quotient_action(const PermGroup& g, const PermGroup& n);

}  // namespace hallrad
