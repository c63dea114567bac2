#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hallrad {

using Point = uint32_t;

/// Wide integer for group orders; wreath products overflow 64 bits quickly.
using Order = unsigned __int128;

std::string order_to_string(Order n);

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct cap_exceeded : error {
  using error::error;
};

/// A permutation of {0, ..., degree-1}, stored as a full image array.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);
  static Perm identity(size_t degree);
  /// Parses cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(size_t degree, const std::string& cycles);

  size_t degree() const { return img_.size(); }
  Point operator[](Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  uint64_t order() const;
  std::string cycle_string() const;

  bool operator==(const Perm&) const = default;

private:
  std::vector<Point> img_;
};

/// Apply a, then b: (a*b)(x) = b(a(x)).
Perm operator*(const Perm& a, const Perm& b);

/// Conjugate g^{-1} h g.
Perm conjugate(const Perm& h, const Perm& g);

Perm power(const Perm& p, uint64_t e);

uint64_t perm_hash(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const { return static_cast<size_t>(perm_hash(p)); }
};

}  // namespace hallrad
