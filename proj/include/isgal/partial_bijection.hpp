#ifndef ISGAL_PARTIAL_BIJECTION_HPP
#define ISGAL_PARTIAL_BIJECTION_HPP

#include <string>
#include <vector>

#include "isgal/scalar.hpp"

namespace isgal {

/// Injective partial map on the ground set {1..m}. Points are 1-based in the
/// public interface; undefined points map to 0.
class PartialBijection {
 public:
  explicit PartialBijection(int ground_size);
  PartialBijection(int ground_size, const std::vector<std::pair<int, int>>& graph);

  static PartialBijection identity_on(int ground_size, const std::vector<int>& points);

  int ground_size() const { return static_cast<int>(img_.size()); }
  bool defined_at(int x) const { return img_[x - 1] != 0; }
  int image_of(int x) const { return img_[x - 1]; }  // 0 when undefined

  std::vector<int> domain() const;
  std::vector<int> range() const;
  int rank() const;
  bool is_identity_map() const;  // identity on its domain

  /// Graph as sorted (x, f(x)) pairs; the canonical identity of the map.
  std::vector<std::pair<int, int>> graph() const;

  bool operator==(const PartialBijection&) const = default;
  bool operator<(const PartialBijection& o) const { return img_ < o.img_; }

  std::string str() const;

 private:
  void map_point(int x, int y);

  std::vector<int> img_;  // img_[x-1] = f(x), 0 = undefined
};

/// (f o g)(x) = f(g(x)). Throws on ground-size mismatch.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);
PartialBijection invert(const PartialBijection& f);

}  // namespace isgal

#endif
