#include "hallrad/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hallrad {

std::string order_to_string(Order n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point p : img_) {
    if (p >= img_.size() || seen[p])
      throw error("image array is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::identity(size_t degree) {
  Perm p;
  p.img_.resize(degree);
  std::iota(p.img_.begin(), p.img_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(size_t degree, const std::string& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[i]))) ++i;
  };
  skip_ws();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw error("malformed cycle: expected '('");
    ++i;
    std::vector<Point> cyc;
    skip_ws();
    while (i < cycles.size() && cycles[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(cycles[i])))
        throw error("malformed cycle: expected point");
      uint64_t v = 0;
      while (i < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[i]))) {
        v = v * 10 + static_cast<uint64_t>(cycles[i] - '0');
        ++i;
      }
      if (v >= degree) throw error("point out of range");
      if (used[v]) throw error("point repeated in cycles");
      used[v] = true;
      cyc.push_back(static_cast<Point>(v));
      skip_ws();
    }
    if (i >= cycles.size()) throw error("malformed cycle: missing ')'");
    ++i;  // ')'
    for (size_t j = 0; j + 1 < cyc.size(); ++j) img[cyc[j]] = cyc[j + 1];
    if (cyc.size() > 1) img[cyc.back()] = cyc.front();
    skip_ws();
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Point p = 0; p < img_.size(); ++p)
    if (img_[p] != p) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point p = 0; p < img_.size(); ++p) inv[img_[p]] = p;
  Perm r;
  r.img_ = std::move(inv);
  return r;
}

uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  uint64_t ord = 1;
  for (Point p = 0; p < img_.size(); ++p) {
    if (seen[p]) continue;
    uint64_t len = 0;
    Point q = p;
    while (!seen[q]) {
      seen[q] = true;
      q = img_[q];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (Point p = 0; p < img_.size(); ++p) {
    if (seen[p] || img_[p] == p) {
      seen[p] = true;
      continue;
    }
    any = true;
    out << '(';
    Point q = p;
    bool first = true;
    while (!seen[q]) {
      seen[q] = true;
      if (!first) out << ' ';
      out << q;
      first = false;
      q = img_[q];
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw error("degree mismatch in composition");
  std::vector<Point> img(a.degree());
  for (Point p = 0; p < a.degree(); ++p) img[p] = b[a[p]];
  return Perm(std::move(img));
}

Perm conjugate(const Perm& h, const Perm& g) {
  if (h.degree() != g.degree()) throw error("degree mismatch in conjugation");
  std::vector<Point> img(h.degree());
  for (Point p = 0; p < h.degree(); ++p) img[g[p]] = g[h[p]];
  return Perm(std::move(img));
}

Perm power(const Perm& p, uint64_t e) {
  Perm acc = Perm::identity(p.degree());
  Perm base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

uint64_t perm_hash(const Perm& p) {
  uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hallrad
