#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tangent_poset/poset.hpp"

namespace tp {

using Vertex = std::uint32_t;
/// Sorted vertex indices.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// All faces of a complex grouped by dimension; faces[d] is sorted
/// lexicographically and contains every d-face exactly once.
struct FaceTable {
  std::vector<std::vector<Simplex>> faces;

  std::size_t count(int d) const { return d >= 0 && d < static_cast<int>(faces.size()) ? faces[d].size() : 0; }
  /// Position of a face within faces[dim], or npos.
  std::size_t find(const Simplex& s) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Finite abstract simplicial complex given by its facets.
///
/// Vertices are dense indices with string labels; every labelled vertex lies
/// in some facet. The complex whose only face is the empty simplex is
/// distinct from the void complex: the former has one (empty) facet.
class SimplicialComplex {
public:
  SimplicialComplex();

  /// Sorts and dedupes simplices, drops non-maximal ones and unused vertices
  /// (remaining vertices keep their relative order).
  static SimplicialComplex from_facets(std::vector<std::string> labels, std::vector<Simplex> simplices);
  /// Vertices are created in first-appearance order.
  static SimplicialComplex from_named(const std::vector<std::vector<std::string>>& simplices);
  /// Vertex i gets label std::to_string(i).
  static SimplicialComplex from_indexed(std::vector<Simplex> simplices);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  const std::string& label(Vertex v) const { return labels_.at(v); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const Simplex> facets() const noexcept { return facets_; }
  std::size_t num_facets() const noexcept { return facets_.size(); }

  /// Largest facet size minus one; -1 when there are no vertices.
  int dimension() const noexcept;
  bool has_no_vertices() const noexcept { return labels_.empty(); }
  bool is_pure() const noexcept;

  /// Computed once and shared between copies.
  const FaceTable& faces() const;
  std::vector<std::size_t> f_vector() const;
  std::size_t num_faces() const;
  bool contains(const Simplex& face) const;

  /// Facets that contain `face`.
  std::vector<Simplex> cofacets(const Simplex& face) const;
  /// lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}, keeping this complex's labels.
  SimplicialComplex link(const Simplex& face) const;
  /// Closed star of a face.
  SimplicialComplex closed_star(const Simplex& face) const;
  /// Faces of dimension <= d.
  SimplicialComplex skeleton(int d) const;

  /// Facets as sorted label lists, sorted.
  std::vector<std::vector<std::string>> canonical_facets() const;

  /// Equal as sets of labelled simplices (vertex order is irrelevant).
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.canonical_facets() == b.canonical_facets();
  }

private:
  std::vector<std::string> labels_;
  std::vector<Simplex> facets_;
  struct FaceCache;
  std::shared_ptr<FaceCache> cache_;
};

/// Connected components of the 1-skeleton, as a component id per vertex.
std::vector<std::size_t> vertex_components(const SimplicialComplex& k, std::size_t* count = nullptr);

/// Complex of chains; vertex labels are the poset identifiers.
SimplicialComplex order_complex(const Poset& p);

/// Number of nonempty chains, by dynamic programming over the order.
std::uint64_t count_chains(const Poset& p);

/// Identifier of the face with the given vertex labels: the single label for
/// a vertex, otherwise labels joined by '_' (or "{a|b}" when some label is
/// not a plain token).
std::string face_id(std::span<const std::string> labels);

/// Nonempty faces ordered by inclusion.
Poset face_poset(const SimplicialComplex& k);

}  // namespace tp
