#pragma once

#include <cstddef>
#include <vector>

namespace graphreg {

/// A mapping of vertex indices: map()[i] is the image of vertex i.
///
/// Used as a bijection for isomorphism and automorphism questions and as
/// an injection (into a larger vertex set) for subgraph embedding.
class VertexMapping {
public:
  VertexMapping() = default;
  explicit VertexMapping(std::vector<int> images) : images_(std::move(images)) {}

  static VertexMapping identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& map() const { return images_; }

  /// All images distinct and inside 0..codomain_size-1.
  bool is_injective(int codomain_size) const;
  /// Injective with codomain of the same size, hence a permutation.
  bool is_bijection(int n) const { return size() == n && is_injective(n); }

  /// Inverse of a bijection (undefined for non-bijections).
  VertexMapping inverse() const;
  /// Composition: result(v) = outer(inner(v)).
  static VertexMapping compose(const VertexMapping& outer, const VertexMapping& inner);

  friend bool operator==(const VertexMapping&, const VertexMapping&) = default;

private:
  std::vector<int> images_;
};

}  // namespace graphreg
