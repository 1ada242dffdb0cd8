#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

using VertexSet = std::vector<std::size_t>;  // strictly increasing

// Abstract simplicial complex given by its maximal faces.
struct SimplicialComplex {
  std::size_t num_vertices = 0;  // vertex set {0, ..., num_vertices-1}
  std::vector<VertexSet> facets;

  // All faces, the empty face excluded.
  std::set<VertexSet> faces() const;
  bool is_face(const VertexSet& s) const;
  // Largest face size.
  std::size_t dimension_plus_one() const;
};

// Nonempty faces under reverse inclusion; models the poset of closed
// positive-codimension strata of the orbit space.
struct FacePoset {
  std::vector<VertexSet> elements;

  std::size_t size() const { return elements.size(); }
  // a below b iff the face of a strictly contains the face of b.
  bool below(std::size_t a, std::size_t b) const;
  // Number of elements whose face has k vertices (codimension-k strata).
  std::size_t count_codim(std::size_t k) const;
};

struct Classification {
  bool elliptic = false;
  std::vector<VertexSet> blocks;       // partition of the vertex set
  std::vector<std::size_t> block_dims; // n_i = |B_i| - 1
  std::string reason;                  // diagnostic when not elliptic
};

// Facets = ray sets of the maximal cones.
SimplicialComplex underlying_complex(const ValidatedFan& vf);

FacePoset face_poset(const SimplicialComplex& c);

// f[0] = f_{-1} = 1, f[k+1] = number of k-dimensional faces.
std::vector<long long> f_vector(const SimplicialComplex& c);

// h_j = sum_i (-1)^{j-i} C(d-i, j-i) f_{i-1}, d = max face size.
std::vector<long long> h_vector(const SimplicialComplex& c);

// Even Betti numbers b_{2i} = h_i of the underlying complex (complete
// simplicial fans only; odd Betti numbers vanish). Throws NotComplete.
std::vector<long long> betti_numbers(const ValidatedFan& vf);

// Inclusion-minimal vertex sets that are not faces.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c);

// Blocks B_i such that c is the join of boundary complexes of simplices on
// the B_i; nullopt when no such decomposition exists.
std::optional<std::vector<VertexSet>> join_decomposition(
    const SimplicialComplex& c);

// Rational ellipticity of the toric orbifold: the underlying complex is a
// join of simplex boundaries. Requires a complete, simply connected fan.
Classification classify(const ValidatedFan& vf);

}  // namespace toric
