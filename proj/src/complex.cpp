#include "hypvol/complex.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace hypvol {

namespace {

std::vector<int> facet_ids(const TopSimplex& s, int opposite) {
  std::vector<int> ids;
  ids.reserve(s.verts.size() - 1);
  for (int p = 0; p < static_cast<int>(s.verts.size()); ++p)
    if (p != opposite) ids.push_back(s.verts[p]);
  return ids;
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string slot_str(const FacetSlot& s) {
  std::ostringstream os;
  os << "(simplex " << s.simplex << ", opposite " << s.opposite << ")";
  return os.str();
}

int perm_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Complex::Complex(int dim, int ends, std::vector<VertexRecord> vertices, std::vector<TopSimplex> top,
                 std::vector<FacePairing> pairings)
    : dim_(dim), ends_(ends), vertices_(std::move(vertices)), top_(std::move(top)),
      pairings_(std::move(pairings)) {
  if (dim_ < 0 || dim_ > 4) fail(ErrorCode::bad_input, "Complex: dimension out of range");
  if (ends_ < 0) fail(ErrorCode::bad_input, "Complex: negative end count");
  for (size_t i = 0; i < vertices_.size(); ++i) {
    if (!id_index_.emplace(vertices_[i].id, static_cast<int>(i)).second)
      fail(ErrorCode::bad_input, "Complex: duplicate vertex id");
  }
  for (const TopSimplex& s : top_) {
    if (static_cast<int>(s.verts.size()) != dim_ + 1)
      fail(ErrorCode::bad_input, "Complex: top simplex arity != dim+1");
    if (s.orient != 1 && s.orient != -1) fail(ErrorCode::bad_input, "Complex: orientation must be +-1");
    std::set<int> seen;
    for (int v : s.verts) {
      if (!id_index_.count(v)) fail(ErrorCode::bad_input, "Complex: unknown vertex id in simplex");
      if (!seen.insert(v).second)
        fail(ErrorCode::bad_input, "Complex: repeated vertex id within a top simplex");
    }
  }
  for (const FacePairing& p : pairings_) {
    auto slot_ok = [&](const FacetSlot& s) {
      return s.simplex >= 0 && s.simplex < static_cast<int>(top_.size()) && s.opposite >= 0 &&
             s.opposite <= dim_;
    };
    if (!slot_ok(p.a) || !slot_ok(p.b)) fail(ErrorCode::bad_input, "Complex: pairing slot out of range");
    if (p.a == p.b) fail(ErrorCode::bad_input, "Complex: facet paired with itself");
    if (static_cast<int>(p.map.size()) != dim_)
      fail(ErrorCode::bad_input, "Complex: pairing map arity != dim");
    std::vector<int> fb = sorted_copy(facet_ids(top_[p.b.simplex], p.b.opposite));
    if (sorted_copy(p.map) != fb)
      fail(ErrorCode::bad_input, "Complex: pairing map is not a bijection onto the partner facet");
  }
  build_slot_table();
  build_face_classes();
  build_vertex_transport();
}

const VertexRecord& Complex::vertex(int id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) fail(ErrorCode::bad_input, "Complex: unknown vertex id");
  return vertices_[it->second];
}

void Complex::build_slot_table() {
  int n = dim_ + 1;
  partners_.assign(top_.size(), std::vector<Partner>(n));
  if (dim_ == 0) return;  // points have no facets

  std::map<std::vector<int>, std::vector<FacetSlot>> by_key;
  for (int s = 0; s < static_cast<int>(top_.size()); ++s)
    for (int q = 0; q < n; ++q) by_key[sorted_copy(facet_ids(top_[s], q))].push_back({s, q});

  // candidate partners per slot
  std::vector<std::vector<Partner>> cands(top_.size() * n);
  auto slot_idx = [n](const FacetSlot& s) { return s.simplex * n + s.opposite; };
  for (const auto& [key, slots] : by_key) {
    for (size_t i = 0; i < slots.size(); ++i)
      for (size_t j = 0; j < slots.size(); ++j) {
        if (i == j) continue;
        Partner p;
        p.kind = Partner::direct;
        p.index = slots[j].simplex;
        p.other_opposite = slots[j].opposite;
        cands[slot_idx(slots[i])].push_back(p);
      }
  }
  for (int pi = 0; pi < static_cast<int>(pairings_.size()); ++pi) {
    const FacePairing& p = pairings_[pi];
    Partner fa;
    fa.kind = Partner::pairing_ab;
    fa.index = pi;
    fa.other_opposite = p.b.opposite;
    cands[slot_idx(p.a)].push_back(fa);
    Partner fb;
    fb.kind = Partner::pairing_ba;
    fb.index = pi;
    fb.other_opposite = p.a.opposite;
    cands[slot_idx(p.b)].push_back(fb);
  }

  for (int s = 0; s < static_cast<int>(top_.size()); ++s)
    for (int q = 0; q < n; ++q) {
      auto& c = cands[s * n + q];
      if (c.empty()) {
        boundary_.push_back({s, q});
      } else if (c.size() == 1) {
        partners_[s][q] = c[0];
      } else {
        std::ostringstream os;
        os << "facet " << slot_str({s, q}) << " is shared by more than two facet slots";
        notes_.push_back(os.str());
      }
    }
}

void Complex::build_face_classes() {
  int n = dim_ + 1;
  std::map<std::vector<int>, int> key_node;
  std::vector<std::vector<int>> node_key;
  std::vector<std::vector<FaceInstance>> node_instances;

  auto node_of = [&](const std::vector<int>& key) {
    auto it = key_node.find(key);
    if (it != key_node.end()) return it->second;
    int id = static_cast<int>(node_key.size());
    key_node.emplace(key, id);
    node_key.push_back(key);
    node_instances.emplace_back();
    return id;
  };

  for (int s = 0; s < static_cast<int>(top_.size()); ++s) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> positions, ids;
      for (int p = 0; p < n; ++p)
        if (mask & (1u << p)) {
          positions.push_back(p);
          ids.push_back(top_[s].verts[p]);
        }
      int node = node_of(sorted_copy(ids));
      node_instances[node].push_back({s, positions});
    }
  }

  UnionFind uf(static_cast<int>(node_key.size()));
  for (const FacePairing& p : pairings_) {
    std::vector<int> fa = facet_ids(top_[p.a.simplex], p.a.opposite);
    int m = dim_;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> ka, kb;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) {
          ka.push_back(fa[i]);
          kb.push_back(p.map[i]);
        }
      auto ita = key_node.find(sorted_copy(ka));
      auto itb = key_node.find(sorted_copy(kb));
      if (ita == key_node.end() || itb == key_node.end()) continue;  // validate() reports
      uf.unite(ita->second, itb->second);
    }
  }

  std::map<int, std::vector<int>> groups;  // root -> nodes
  for (int i = 0; i < static_cast<int>(node_key.size()); ++i) groups[uf.find(i)].push_back(i);

  std::vector<FaceClass> classes;
  std::vector<std::vector<FaceInstance>> instances;
  for (auto& [root, nodes] : groups) {
    FaceClass fc;
    fc.dim = static_cast<int>(node_key[nodes[0]].size()) - 1;
    fc.rep_ids = node_key[nodes[0]];
    std::vector<FaceInstance> inst;
    for (int nd : nodes) {
      fc.rep_ids = std::min(fc.rep_ids, node_key[nd]);
      inst.insert(inst.end(), node_instances[nd].begin(), node_instances[nd].end());
    }
    std::sort(inst.begin(), inst.end(), [](const FaceInstance& a, const FaceInstance& b) {
      if (a.simplex != b.simplex) return a.simplex < b.simplex;
      return a.positions < b.positions;
    });
    fc.instance_count = static_cast<int>(inst.size());
    if (fc.dim == 0) {
      const VertexRecord& vr = vertex(fc.rep_ids[0]);
      if (vr.kind == VertexKind::cusp) {
        fc.cusp_point = true;
        fc.end = vr.end;
      }
    }
    classes.push_back(std::move(fc));
    instances.push_back(std::move(inst));
  }

  std::vector<int> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (classes[a].dim != classes[b].dim) return classes[a].dim < classes[b].dim;
    return classes[a].rep_ids < classes[b].rep_ids;
  });
  classes_.clear();
  instances_.clear();
  for (int idx : order) {
    FaceClass fc = classes[idx];
    fc.index = static_cast<int>(classes_.size());
    classes_.push_back(fc);
    instances_.push_back(instances[idx]);
  }
  // key -> class index
  for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci)
    for (const FaceInstance& fi : instances_[ci]) {
      std::vector<int> ids;
      for (int p : fi.positions) ids.push_back(top_[fi.simplex].verts[p]);
      key_class_[sorted_copy(ids)] = ci;
    }
}

void Complex::build_vertex_transport() {
  struct Edge {
    int from, to;             // pos(to) = eval(word) . pos(from)
    std::vector<int> word;
  };
  std::map<int, std::vector<Edge>> adj;
  for (const FacePairing& p : pairings_) {
    std::vector<int> fa = facet_ids(top_[p.a.simplex], p.a.opposite);
    for (int i = 0; i < dim_; ++i) {
      int x = fa[i], y = p.map[i];
      // pos(x) = eval(p.word) . pos(y)
      adj[y].push_back({y, x, p.word});
      adj[x].push_back({x, y, inverse_word(p.word)});
    }
  }
  // classes over ids come from the 0-dimensional face classes
  for (const FaceClass& fc : classes_) {
    if (fc.dim != 0) continue;
    // gather member ids of this class
    std::vector<int> members;
    for (const FaceInstance& fi : instances_[fc.index])
      members.push_back(top_[fi.simplex].verts[fi.positions[0]]);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int rep = members[0];
    transport_[rep] = {rep, {}};
    std::deque<int> queue{rep};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Edge& e : adj[v]) {
        if (transport_.count(e.to)) continue;
        transport_[e.to] = {rep, concat_words(e.word, transport_[v].word)};
        queue.push_back(e.to);
      }
    }
    for (int v : members)
      if (!transport_.count(v)) transport_[v] = {v, {}};  // disconnected: validate() reports
  }
  // vertices that appear in no simplex
  for (const VertexRecord& vr : vertices_)
    if (!transport_.count(vr.id)) transport_[vr.id] = {vr.id, {}};
}

int Complex::face_class_of(std::vector<int> ids) const {
  std::sort(ids.begin(), ids.end());
  auto it = key_class_.find(ids);
  return it == key_class_.end() ? -1 : it->second;
}

const VertexTransport& Complex::vertex_transport(int id) const {
  auto it = transport_.find(id);
  if (it == transport_.end()) fail(ErrorCode::bad_input, "vertex_transport: unknown id");
  return it->second;
}

std::vector<int> Complex::vertex_class_reps() const {
  std::set<int> reps;
  for (const auto& [id, tr] : transport_) reps.insert(tr.rep_id);
  return std::vector<int>(reps.begin(), reps.end());
}

bool Complex::facet_partner(const FacetSlot& slot, FacetSlot& other,
                            std::vector<std::pair<int, int>>& id_pairs,
                            std::vector<int>& word) const {
  const Partner& p = partners_.at(slot.simplex).at(slot.opposite);
  id_pairs.clear();
  word.clear();
  switch (p.kind) {
    case Partner::none:
      return false;
    case Partner::direct: {
      other = {p.index, p.other_opposite};
      for (int id : facet_ids(top_[slot.simplex], slot.opposite)) id_pairs.emplace_back(id, id);
      return true;
    }
    case Partner::pairing_ab: {
      const FacePairing& fp = pairings_[p.index];
      other = fp.b;
      std::vector<int> fa = facet_ids(top_[fp.a.simplex], fp.a.opposite);
      for (int i = 0; i < dim_; ++i) id_pairs.emplace_back(fa[i], fp.map[i]);
      word = fp.word;
      return true;
    }
    case Partner::pairing_ba: {
      const FacePairing& fp = pairings_[p.index];
      other = fp.a;
      std::vector<int> fa = facet_ids(top_[fp.a.simplex], fp.a.opposite);
      for (int i = 0; i < dim_; ++i) id_pairs.emplace_back(fp.map[i], fa[i]);
      word = inverse_word(fp.word);
      return true;
    }
  }
  return false;
}

ValidationReport validate(const Complex& k) {
  ValidationReport rep;
  rep.violations = k.structural_notes();
  rep.boundary = k.boundary_facets();

  // cusp ends in range; cusp classes not shared between ends or with interior
  for (const VertexRecord& vr : k.vertices()) {
    if (vr.kind == VertexKind::cusp && (vr.end < 0 || vr.end >= std::max(1, k.ends())))
      rep.violations.push_back("cusp vertex " + std::to_string(vr.id) + " has end index out of range");
  }
  std::map<int, std::vector<int>> class_members;  // rep -> ids
  for (const VertexRecord& vr : k.vertices())
    class_members[k.vertex_transport(vr.id).rep_id].push_back(vr.id);
  for (const auto& [rep_id, members] : class_members) {
    bool any_cusp = false, any_interior = false;
    std::set<int> ends;
    for (int id : members) {
      const VertexRecord& vr = k.vertex(id);
      if (vr.kind == VertexKind::cusp) {
        any_cusp = true;
        ends.insert(vr.end);
      } else {
        any_interior = true;
      }
    }
    if (any_cusp && any_interior)
      rep.violations.push_back("vertex class of " + std::to_string(rep_id) +
                               " mixes cusp and interior vertices");
    if (ends.size() > 1)
      rep.violations.push_back("cusp class of " + std::to_string(rep_id) +
                               " is shared between distinct ends");
  }

  // orientation coherence: matched facets induce opposite orientations
  if (k.dim() >= 1) {
    std::set<std::pair<int, int>> done;
    int n = k.dim() + 1;
    for (int s = 0; s < static_cast<int>(k.top().size()); ++s)
      for (int q = 0; q < n; ++q) {
        if (done.count({s, q})) continue;
        FacetSlot other;
        std::vector<std::pair<int, int>> id_pairs;
        std::vector<int> word;
        if (!k.facet_partner({s, q}, other, id_pairs, word)) continue;
        done.insert({s, q});
        done.insert({other.simplex, other.opposite});

        const TopSimplex& sa = k.top()[s];
        const TopSimplex& sb = k.top()[other.simplex];
        // permutation taking the a-side facet tuple to the b-side facet tuple
        std::vector<int> perm;
        bool ok = true;
        for (int p = 0; p < n; ++p) {
          if (p == q) continue;
          int x = sa.verts[p];
          int y = -1;
          for (const auto& [from, to] : id_pairs)
            if (from == x) y = to;
          int pos = -1;
          for (int pb = 0; pb < n; ++pb)
            if (pb != other.opposite && sb.verts[pb] == y) pos = pb < other.opposite ? pb : pb - 1;
          if (pos < 0) {
            ok = false;
            break;
          }
          perm.push_back(pos);
        }
        if (!ok) {
          rep.violations.push_back("pairing correspondence broken at facet " + slot_str({s, q}));
          continue;
        }
        int induced_a = sa.orient * ((q % 2 == 0) ? 1 : -1);
        int induced_b = sb.orient * ((other.opposite % 2 == 0) ? 1 : -1);
        if (perm_sign(perm) * induced_a != -induced_b)
          rep.violations.push_back("orientation incoherence across facet " + slot_str({s, q}) +
                                   " / " + slot_str(other));
      }
  }
  return rep;
}

long euler_characteristic(const Complex& k) {
  long chi = 0;
  for (int i = 0; i < k.num_face_classes(); ++i)
    chi += (k.face_class(i).dim % 2 == 0) ? 1 : -1;
  return chi;
}

Star star_incidences(const Complex& k, int face_class, int root_instance) {
  if (face_class < 0 || face_class >= k.num_face_classes())
    fail(ErrorCode::bad_input, "star_incidences: face class out of range");
  const auto& instances = k.face_instances(face_class);
  if (root_instance < 0 || root_instance >= static_cast<int>(instances.size()))
    fail(ErrorCode::bad_input, "star_incidences: root instance out of range");

  int n = k.dim() + 1;
  Star star;
  star.face_class = face_class;
  star.closed = true;

  const FaceInstance& root = instances[root_instance];
  for (int p : root.positions) star.tau_ref_ids.push_back(k.top()[root.simplex].verts[p]);

  std::map<std::pair<int, std::vector<int>>, int> state;  // (simplex, sorted positions) -> incidence
  auto add_incidence = [&](int simplex, std::vector<int> positions, std::vector<int> word) {
    int idx = static_cast<int>(star.incidences.size());
    state[{simplex, sorted_copy(positions)}] = idx;
    star.incidences.push_back({simplex, std::move(positions), std::move(word)});
    return idx;
  };
  add_incidence(root.simplex, root.positions, {});

  // Facet gluings are recorded once per incidence pair, keyed by
  // (incidence, local facet): distinct lifts of one simplex cross the same
  // underlying slot independently.
  std::set<std::pair<int, int>> handled;
  for (int i = 0; i < static_cast<int>(star.incidences.size()); ++i) {
    // incidences grows during the loop; take copies of what we iterate on
    std::vector<int> positions = star.incidences[i].positions;
    std::vector<int> word = star.incidences[i].word;
    int simplex = star.incidences[i].simplex;
    std::set<int> posset(positions.begin(), positions.end());
    for (int q = 0; q < n; ++q) {
      if (posset.count(q)) continue;
      if (handled.count({i, q})) continue;
      FacetSlot other;
      std::vector<std::pair<int, int>> id_pairs;
      std::vector<int> cross_word;
      if (!k.facet_partner({simplex, q}, other, id_pairs, cross_word)) {
        star.closed = false;
        handled.insert({i, q});
        continue;
      }
      handled.insert({i, q});

      // transport the reference vertices through the facet correspondence
      const TopSimplex& sb = k.top()[other.simplex];
      std::vector<int> new_positions;
      new_positions.reserve(positions.size());
      bool ok = true;
      for (int pos : positions) {
        int x = k.top()[simplex].verts[pos];
        int y = -1;
        for (const auto& [from, to] : id_pairs)
          if (from == x) y = to;
        int npos = -1;
        for (int pb = 0; pb < n; ++pb)
          if (sb.verts[pb] == y) npos = pb;
        if (npos < 0) {
          ok = false;
          break;
        }
        new_positions.push_back(npos);
      }
      if (!ok)
        fail(ErrorCode::non_manifold_star, "star_incidences: face does not persist across gluing");

      auto it = state.find({other.simplex, sorted_copy(new_positions)});
      int target;
      if (it == state.end()) {
        target = add_incidence(other.simplex, new_positions, concat_words(word, cross_word));
      } else {
        target = it->second;
        if (star.incidences[target].positions != new_positions)
          fail(ErrorCode::non_manifold_star,
               "star_incidences: holonomy around the face permutes its vertices");
      }
      handled.insert({target, other.opposite});
      star.crossings.push_back({i, target, q, other.opposite, id_pairs, cross_word});
    }
  }

  if (star.incidences.size() != instances.size())
    fail(ErrorCode::non_manifold_star, "star_incidences: star of the face is disconnected");
  return star;
}

std::vector<std::vector<int>> closing_cycle_words(const Star& star) {
  std::vector<std::vector<int>> cycles;
  for (const StarCrossing& c : star.crossings) {
    std::vector<int> w = concat_words(star.incidences[c.from_inc].word, c.word);
    w = concat_words(w, inverse_word(star.incidences[c.to_inc].word));
    w = free_reduce(w);
    if (!w.empty()) cycles.push_back(std::move(w));
  }
  return cycles;
}

LinkComplex link_sphere(const Complex& k, int face_class, int root_instance) {
  const FaceClass& fc = k.face_class(face_class);
  int link_dim = k.dim() - fc.dim - 1;
  if (link_dim < 0) fail(ErrorCode::bad_input, "link_sphere: top faces have an empty link");

  Star star = star_incidences(k, face_class, root_instance);
  int n = k.dim() + 1;

  auto raw_id = [n](int inc, int pos) { return inc * n + pos; };

  std::vector<VertexRecord> lverts;
  std::vector<TopSimplex> lpieces;
  std::vector<std::vector<int>> link_positions(star.incidences.size());
  for (int i = 0; i < static_cast<int>(star.incidences.size()); ++i) {
    const Incidence& inc = star.incidences[i];
    std::set<int> posset(inc.positions.begin(), inc.positions.end());
    TopSimplex piece;
    std::vector<int> seq = inc.positions;  // reference order, then link positions ascending
    for (int p = 0; p < n; ++p) {
      if (posset.count(p)) continue;
      link_positions[i].push_back(p);
      lverts.push_back({raw_id(i, p), VertexKind::interior, -1});
      piece.verts.push_back(raw_id(i, p));
      seq.push_back(p);
    }
    piece.orient = k.top()[inc.simplex].orient * perm_sign(seq);
    lpieces.push_back(std::move(piece));
  }

  std::vector<FacePairing> lpairings;
  if (link_dim >= 1) {
    for (const StarCrossing& c : star.crossings) {
      FacePairing lp;
      const auto& la = link_positions[c.from_inc];
      const auto& lb = link_positions[c.to_inc];
      int oa = -1, ob = -1;
      for (int j = 0; j < static_cast<int>(la.size()); ++j)
        if (la[j] == c.from_opposite) oa = j;
      for (int j = 0; j < static_cast<int>(lb.size()); ++j)
        if (lb[j] == c.to_opposite) ob = j;
      lp.a = {c.from_inc, oa};
      lp.b = {c.to_inc, ob};
      const TopSimplex& sa = k.top()[star.incidences[c.from_inc].simplex];
      const TopSimplex& sb = k.top()[star.incidences[c.to_inc].simplex];
      for (int p : la) {
        if (p == c.from_opposite) continue;
        int x = sa.verts[p];
        int y = -1;
        for (const auto& [from, to] : c.id_pairs)
          if (from == x) y = to;
        int pb = -1;
        for (int pp : lb)
          if (sb.verts[pp] == y) pb = pp;
        if (pb < 0) fail(ErrorCode::non_manifold_star, "link_sphere: crossing correspondence broken");
        lp.map.push_back(raw_id(c.to_inc, pb));
      }
      lpairings.push_back(std::move(lp));
    }
  }

  LinkComplex out{Complex(link_dim, 0, std::move(lverts), std::move(lpieces), std::move(lpairings)),
                  star.closed, false, 0};
  // the induced orientations must cancel along every interior gluing of the
  // link (integer boundary of the inherited fundamental chain vanishes)
  if (!validate(out.complex).ok_with_boundary())
    fail(ErrorCode::non_manifold_star, "link_sphere: induced link orientations are incoherent");
  out.chi = euler_characteristic(out.complex);

  // exact sphere recognition where decidable
  const Complex& L = out.complex;
  auto connected = [&]() {
    if (L.top().empty()) return false;
    std::vector<int> seen(L.top().size(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int s = q.front();
      q.pop_front();
      for (int opp = 0; opp <= L.dim(); ++opp) {
        FacetSlot other;
        std::vector<std::pair<int, int>> idp;
        std::vector<int> w;
        if (!L.facet_partner({s, opp}, other, idp, w)) continue;
        if (!seen[other.simplex]) {
          seen[other.simplex] = 1;
          ++count;
          q.push_back(other.simplex);
        }
      }
    }
    return count == static_cast<int>(L.top().size());
  };
  int vertex_classes = 0;
  for (int i = 0; i < L.num_face_classes(); ++i)
    if (L.face_class(i).dim == 0) ++vertex_classes;

  if (out.closed) {
    if (link_dim == 0) {
      out.sphere_verified = (L.top().size() == 2 && vertex_classes == 2);
    } else if (link_dim == 1) {
      out.sphere_verified = connected() && out.chi == 0;
    } else if (link_dim == 2) {
      out.sphere_verified = connected() && out.chi == 2;
    }
    if (!out.sphere_verified && vertex_classes == link_dim + 2 &&
        static_cast<int>(L.top().size()) == link_dim + 2) {
      // boundary-of-simplex pattern: every (link_dim+1)-subset of the
      // vertex classes appears exactly once as a piece
      std::set<std::vector<int>> piece_sets;
      bool ok = true;
      for (const TopSimplex& piece : L.top()) {
        std::vector<int> cls;
        for (int v : piece.verts) cls.push_back(L.face_class_of({v}));
        std::sort(cls.begin(), cls.end());
        if (std::unique(cls.begin(), cls.end()) != cls.end()) ok = false;
        if (!piece_sets.insert(cls).second) ok = false;
      }
      out.sphere_verified = ok && static_cast<int>(piece_sets.size()) == link_dim + 2;
    }
  }
  return out;
}

Complex build_cone_complex(const Complex& cross_section, int end_index) {
  if (cross_section.dim() < 1 || cross_section.dim() > 3)
    fail(ErrorCode::bad_input, "build_cone_complex: cross-section dimension must be 1..3");
  if (end_index < 0) fail(ErrorCode::bad_input, "build_cone_complex: bad end index");
  int cusp_id = 0;
  for (const VertexRecord& vr : cross_section.vertices()) {
    if (vr.kind == VertexKind::cusp)
      fail(ErrorCode::bad_input, "build_cone_complex: cross-section already has cusp vertices");
    cusp_id = std::max(cusp_id, vr.id + 1);
  }
  std::vector<VertexRecord> verts = cross_section.vertices();
  verts.push_back({cusp_id, VertexKind::cusp, end_index});

  std::vector<TopSimplex> tops;
  for (const TopSimplex& s : cross_section.top()) {
    TopSimplex cone;
    cone.verts.push_back(cusp_id);
    cone.verts.insert(cone.verts.end(), s.verts.begin(), s.verts.end());
    cone.orient = s.orient;
    tops.push_back(std::move(cone));
  }
  std::vector<FacePairing> pairings;
  for (const FacePairing& p : cross_section.pairings()) {
    FacePairing cp;
    cp.a = {p.a.simplex, p.a.opposite + 1};
    cp.b = {p.b.simplex, p.b.opposite + 1};
    cp.map.push_back(cusp_id);
    cp.map.insert(cp.map.end(), p.map.begin(), p.map.end());
    cp.word = p.word;
    pairings.push_back(std::move(cp));
  }
  return Complex(cross_section.dim() + 1, std::max(cross_section.ends(), end_index + 1),
                 std::move(verts), std::move(tops), std::move(pairings));
}

}  // namespace hypvol
