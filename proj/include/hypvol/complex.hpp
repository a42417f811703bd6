#ifndef HYPVOL_COMPLEX_HPP
#define HYPVOL_COMPLEX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypvol/errors.hpp"

namespace hypvol {

// Abstract simplicial complex of a (possibly end-compactified) manifold,
// given as top simplices over a global vertex-id set plus face pairings that
// glue facets through group words. Faces with equal vertex-id sets are the
// same face; every further identification goes through a pairing.

enum class VertexKind { interior, cusp };

struct VertexRecord {
  int id = -1;
  VertexKind kind = VertexKind::interior;
  int end = -1;  // end index for cusp vertices
};

struct TopSimplex {
  std::vector<int> verts;  // dim+1 distinct vertex ids
  int orient = 1;          // +1 or -1
};

struct FacetSlot {
  int simplex = -1;
  int opposite = -1;  // facet = all tuple positions except this one

  bool operator==(const FacetSlot& o) const { return simplex == o.simplex && opposite == o.opposite; }
};

// Identification of facet a with facet b. map[i] is the id on side b matched
// with the i-th id (in tuple order) of facet a. The base lifts satisfy
// pos(x) = eval(word) . pos(partner of x); an empty word is a direct-style
// gluing under a different vertex labelling.
struct FacePairing {
  FacetSlot a, b;
  std::vector<int> map;
  std::vector<int> word;  // signed 1-based generator indices
};

inline std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> r(w.rbegin(), w.rend());
  for (int& g : r) g = -g;
  return r;
}

inline std::vector<int> concat_words(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline std::vector<int> free_reduce(const std::vector<int>& word) {
  std::vector<int> r;
  for (int g : word) {
    if (!r.empty() && r.back() == -g)
      r.pop_back();
    else
      r.push_back(g);
  }
  return r;
}

struct FaceClass {
  int index = -1;
  int dim = -1;
  std::vector<int> rep_ids;  // lexicographically smallest member key
  int instance_count = 0;
  bool cusp_point = false;  // 0-face at a cusp vertex (member of K_infinity)
  int end = -1;
};

// One realization of a face class inside a top simplex.
struct FaceInstance {
  int simplex = -1;
  std::vector<int> positions;  // ascending
};

// Transport word from the class representative vertex: pos(v) = eval(word) . pos(rep).
struct VertexTransport {
  int rep_id = -1;
  std::vector<int> word;
};

class Complex {
 public:
  Complex(int dim, int ends, std::vector<VertexRecord> vertices, std::vector<TopSimplex> top,
          std::vector<FacePairing> pairings);

  int dim() const { return dim_; }
  int ends() const { return ends_; }
  const std::vector<VertexRecord>& vertices() const { return vertices_; }
  const std::vector<TopSimplex>& top() const { return top_; }
  const std::vector<FacePairing>& pairings() const { return pairings_; }

  bool has_vertex(int id) const { return id_index_.count(id) > 0; }
  const VertexRecord& vertex(int id) const;

  int num_face_classes() const { return static_cast<int>(classes_.size()); }
  const FaceClass& face_class(int idx) const { return classes_.at(idx); }
  // Class containing the face with these vertex ids; -1 when absent.
  int face_class_of(std::vector<int> ids) const;
  const std::vector<FaceInstance>& face_instances(int class_idx) const {
    return instances_.at(class_idx);
  }

  const VertexTransport& vertex_transport(int id) const;
  // Representative ids of the vertex classes, ascending.
  std::vector<int> vertex_class_reps() const;

  // Partner of a facet slot: returns true and fills `other` plus the id
  // correspondence (this-side id, other-side id) and the word to append when
  // crossing out of `slot`. False for boundary facets.
  bool facet_partner(const FacetSlot& slot, FacetSlot& other,
                     std::vector<std::pair<int, int>>& id_pairs, std::vector<int>& word) const;

  // Validation bookkeeping filled at construction.
  const std::vector<FacetSlot>& boundary_facets() const { return boundary_; }
  const std::vector<std::string>& structural_notes() const { return notes_; }

 private:
  void build_slot_table();
  void build_face_classes();
  void build_vertex_transport();

  int dim_;
  int ends_;
  std::vector<VertexRecord> vertices_;
  std::vector<TopSimplex> top_;
  std::vector<FacePairing> pairings_;

  std::map<int, int> id_index_;

  struct Partner {
    enum Kind { none, direct, pairing_ab, pairing_ba } kind = none;
    int index = -1;  // other simplex (direct) or pairing index
    int other_opposite = -1;
  };
  std::vector<std::vector<Partner>> partners_;  // [simplex][opposite]
  std::vector<FacetSlot> boundary_;
  std::vector<std::string> notes_;  // over-shared facets etc., reported by validate

  std::vector<FaceClass> classes_;
  std::vector<std::vector<FaceInstance>> instances_;
  std::map<std::vector<int>, int> key_class_;
  std::map<int, VertexTransport> transport_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<FacetSlot> boundary;  // open facets (allowed for cone complexes)

  bool closed() const { return violations.empty() && boundary.empty(); }
  bool ok_with_boundary() const { return violations.empty(); }
};

ValidationReport validate(const Complex& k);

long euler_characteristic(const Complex& k);

// ---- stars -----------------------------------------------------------------

struct Incidence {
  int simplex = -1;
  // positions[j] = tuple position of the j-th reference vertex of the lifted
  // face inside this lift
  std::vector<int> positions;
  std::vector<int> word;  // lift = eval(word) . base lift of `simplex`
};

struct StarCrossing {
  int from_inc = -1, to_inc = -1;
  int from_opposite = -1, to_opposite = -1;
  std::vector<std::pair<int, int>> id_pairs;  // (from-side id, to-side id)
  std::vector<int> word;                      // appended to from-word when crossing
};

struct Star {
  int face_class = -1;
  std::vector<int> tau_ref_ids;  // reference ordering of the face's vertices (root instance)
  std::vector<Incidence> incidences;
  std::vector<StarCrossing> crossings;
  bool closed = false;  // no open facet slots around the face
};

// Develops the star of a face class by breadth-first traversal of facet
// gluings, accumulating words. Throws non_manifold_star when the traversal
// does not close up over the class combinatorially.
Star star_incidences(const Complex& k, int face_class, int root_instance = 0);

// Freely reduced words of the cycles closed by the traversal (one per
// non-tree crossing; empty words dropped). The stabilizer constraint on a
// cusp image is that the evaluated cycle words fix it.
std::vector<std::vector<int>> closing_cycle_words(const Star& star);

// ---- links -----------------------------------------------------------------

struct LinkComplex {
  Complex complex;  // dim = k.dim - face.dim - 1; raw-slot vertex ids
  bool closed = false;
  bool sphere_verified = false;
  long chi = 0;
};

LinkComplex link_sphere(const Complex& k, int face_class, int root_instance = 0);

// ---- cones -----------------------------------------------------------------

// Geodesic-cone combinatorics over a closed cross-section: one cusp vertex
// joined to every simplex, pairings inherited.
Complex build_cone_complex(const Complex& cross_section, int end_index);

}  // namespace hypvol

#endif
