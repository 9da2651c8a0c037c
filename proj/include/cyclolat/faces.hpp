// Copyright 2026 The cyclolat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "cyclolat/hull.hpp"

namespace cyclolat {

struct Face {
  VertexSet vertices;
  int dim = 0;
  /// Indices (into FaceLattice::faces) of the facets of this face.
  std::vector<std::size_t> children;
};

/// Nonempty proper faces of a polytope, each the intersection of the
/// facets containing it.
class FaceLattice {
 public:
  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Indices of the faces of dimension k, in ascending vertex-set order.
  const std::vector<std::size_t>& of_dim(int k) const { return by_dim_.at(static_cast<std::size_t>(k)); }
  /// Index of the face with exactly these vertices, or -1.
  long find(VertexSet s) const;

 private:
  friend FaceLattice build_face_lattice(const IntMatrix&, const std::vector<Facet>&, const Budgets&);
  std::size_t dim_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Faces of conv(points) from its complete facet list. Throws BudgetExceeded
/// past budget.max_faces.
FaceLattice build_face_lattice(const IntMatrix& points, const std::vector<Facet>& facets,
                               const Budgets& budget = {});

/// (f_{-1}, f_0, ..., f_{d-1}) as BigInts.
std::vector<BigInt> f_vector(const FaceLattice& lattice);

/// h_j = sum_{k<=j} (-1)^{j-k} C(d-k, j-k) f_{k-1}; f has length d+1.
IntPolynomial h_from_f(std::span<const BigInt> f, std::size_t d);

/// Affine dimension of the given vertices of a face (which lies on a
/// hyperplane missing the origin, so this is linear rank minus one).
int face_dimension(const IntMatrix& points, VertexSet s);

/// Facets of a face G of dimension `dim_g`, computed from the polytope facets.
std::vector<VertexSet> facets_of_face(const IntMatrix& points, const std::vector<Facet>& facets,
                                      VertexSet g, int dim_g);

struct Triangulation {
  /// Boundary cells (dim vertices each). The full triangulation is each
  /// cell coned at the origin, which sits at index `apex` in the extended
  /// point set (polytope vertices followed by the origin).
  std::vector<VertexSet> cells;
  int apex = 0;
  bool unimodular = false;

  /// Cell vertex indices with the apex appended.
  std::vector<std::vector<int>> simplices() const;
};

/// Pulling triangulation of the boundary, coned at the origin. A face that
/// is a simplex is kept; otherwise its earliest vertex in `vertex_order` is
/// coned over the pulled facets of the face that miss it. Faces are computed
/// on demand, so simplicial polytopes need no face lattice.
/// An empty `vertex_order` means column order.
Triangulation pulling_triangulation(const IntMatrix& points, const std::vector<Facet>& facets,
                                    std::span<const int> vertex_order = {});

struct BoundaryHPolynomial {
  IntPolynomial h;
  bool certified = false;  // the triangulation was unimodular
};

/// h-polynomial of the boundary complex of `tri` (all faces of all cells).
BoundaryHPolynomial boundary_h_polynomial(const Triangulation& tri, std::size_t dim);

}  // namespace cyclolat
