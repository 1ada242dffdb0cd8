#include "toric/complex.hpp"

#include <algorithm>
#include <sstream>

namespace toric {

namespace {

std::string set_str(const VertexSet& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

std::set<VertexSet> SimplicialComplex::faces() const {
  std::set<VertexSet> out;
  for (const VertexSet& facet : facets) {
    // All nonempty subsets of the facet.
    std::size_t k = facet.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
      VertexSet f;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t(1) << b)) f.push_back(facet[b]);
      out.insert(std::move(f));
    }
  }
  return out;
}

bool SimplicialComplex::is_face(const VertexSet& s) const {
  if (s.empty()) return true;
  for (const VertexSet& facet : facets)
    if (std::includes(facet.begin(), facet.end(), s.begin(), s.end()))
      return true;
  return false;
}

std::size_t SimplicialComplex::dimension_plus_one() const {
  std::size_t d = 0;
  for (const VertexSet& f : facets) d = std::max(d, f.size());
  return d;
}

SimplicialComplex underlying_complex(const ValidatedFan& vf) {
  SimplicialComplex c;
  c.num_vertices = vf.num_rays();
  c.facets = vf.fan().max_cones;
  return c;
}

FacePoset face_poset(const SimplicialComplex& c) {
  FacePoset p;
  auto faces = c.faces();
  p.elements.assign(faces.begin(), faces.end());
  return p;
}

bool FacePoset::below(std::size_t a, std::size_t b) const {
  const VertexSet& fa = elements[a];
  const VertexSet& fb = elements[b];
  return fa.size() > fb.size() &&
         std::includes(fa.begin(), fa.end(), fb.begin(), fb.end());
}

std::size_t FacePoset::count_codim(std::size_t k) const {
  return std::count_if(elements.begin(), elements.end(),
                       [k](const VertexSet& f) { return f.size() == k; });
}

std::vector<long long> f_vector(const SimplicialComplex& c) {
  std::size_t d = c.dimension_plus_one();
  std::vector<long long> f(d + 1, 0);
  f[0] = 1;
  for (const VertexSet& face : c.faces()) ++f[face.size()];
  return f;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<long long> h_vector(const SimplicialComplex& c) {
  auto f = f_vector(c);
  long long d = static_cast<long long>(c.dimension_plus_one());
  std::vector<long long> h(d + 1, 0);
  for (long long j = 0; j <= d; ++j)
    for (long long i = 0; i <= j; ++i) {
      long long term = binom(d - i, j - i) * f[i];
      h[j] += ((j - i) % 2 == 0) ? term : -term;
    }
  return h;
}

std::vector<long long> betti_numbers(const ValidatedFan& vf) {
  if (!vf.is_complete())
    throw ToricError(ErrorKind::NotComplete,
                     "Betti numbers require a complete fan");
  return h_vector(underlying_complex(vf));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& c) {
  // A minimal non-face N is a non-face all of whose maximal proper subsets
  // are faces; for |N| >= 2 it is (face sigma) + (vertex v). Grow every face
  // by one vertex and keep the candidates whose other facets are faces too.
  std::set<VertexSet> result;
  for (std::size_t v = 0; v < c.num_vertices; ++v)
    if (!c.is_face({v})) result.insert({v});

  auto faces = c.faces();
  faces.insert(VertexSet{});
  for (const VertexSet& sigma : faces) {
    for (std::size_t v = 0; v < c.num_vertices; ++v) {
      if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
      if (!c.is_face({v})) continue;
      VertexSet cand = sigma;
      cand.insert(std::upper_bound(cand.begin(), cand.end(), v), v);
      if (c.is_face(cand)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
        VertexSet sub;
        for (std::size_t k = 0; k < cand.size(); ++k)
          if (k != drop) sub.push_back(cand[k]);
        minimal = c.is_face(sub);
      }
      if (minimal) result.insert(std::move(cand));
    }
  }
  return {result.begin(), result.end()};
}

std::optional<std::vector<VertexSet>> join_decomposition(
    const SimplicialComplex& c) {
  auto nonfaces = minimal_nonfaces(c);
  std::vector<bool> covered(c.num_vertices, false);
  for (const VertexSet& nf : nonfaces) {
    if (nf.size() < 2) return std::nullopt;
    for (std::size_t v : nf) {
      if (covered[v]) return std::nullopt;  // overlapping non-faces
      covered[v] = true;
    }
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
    return std::nullopt;

  // Re-verify by reconstruction: the join of simplex boundaries on the
  // blocks has exactly the facets obtained by dropping one vertex per block.
  std::size_t expected_facets = 1;
  std::size_t expected_size = c.num_vertices - nonfaces.size();
  for (const VertexSet& b : nonfaces) expected_facets *= b.size();
  if (c.facets.size() != expected_facets) return std::nullopt;
  for (const VertexSet& facet : c.facets) {
    if (facet.size() != expected_size) return std::nullopt;
    for (const VertexSet& b : nonfaces) {
      std::size_t present = std::count_if(
          b.begin(), b.end(), [&](std::size_t v) {
            return std::binary_search(facet.begin(), facet.end(), v);
          });
      if (present != b.size() - 1) return std::nullopt;
    }
  }
  return nonfaces;
}

Classification classify(const ValidatedFan& vf) {
  if (!vf.is_complete())
    throw ToricError(ErrorKind::PreconditionFailed,
                     "classify requires a complete fan (is_complete failed)");
  if (!vf.is_simply_connected())
    throw ToricError(
        ErrorKind::PreconditionFailed,
        "classify requires rays generating the lattice (is_simply_connected "
        "failed)");

  Classification cls;
  auto complex = underlying_complex(vf);
  auto blocks = join_decomposition(complex);
  if (blocks) {
    cls.elliptic = true;
    cls.blocks = *blocks;
    for (const VertexSet& b : cls.blocks)
      cls.block_dims.push_back(b.size() - 1);
  } else {
    cls.elliptic = false;
    std::ostringstream os;
    os << "underlying complex is not a join of simplex boundaries "
          "(suspension factors cannot occur for toric orbifolds); "
          "minimal non-faces:";
    for (const VertexSet& nf : minimal_nonfaces(complex))
      os << " " << set_str(nf);
    os << " are not a partition of the vertex set (overlapping or "
          "non-covering minimal non-faces)";
    cls.reason = os.str();
  }
  return cls;
}

}  // namespace toric
