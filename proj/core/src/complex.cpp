#include "simpcx/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>

namespace simpcx {

namespace {

std::vector<VertexMask> maximal_only(std::vector<VertexMask> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<VertexMask> by_size = masks;
  std::stable_sort(by_size.begin(), by_size.end(), [](VertexMask a, VertexMask b) {
    return std::popcount(a) > std::popcount(b);
  });
  std::vector<VertexMask> kept;
  for (VertexMask m : by_size) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [m](VertexMask k) { return (m & ~k) == 0; });
    if (!covered) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Union-find over small index sets.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) { parent[find(a)] = find(b); }
};

void require_pure(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error("not pure");
}

}  // namespace

long long FaceVector::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  return chi;
}

std::string FaceVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

SimplicialComplex SimplicialComplex::from_masks(const std::vector<Label>& table,
                                                std::vector<VertexMask> masks,
                                                bool keep_maximal_only) {
  VertexMask used = 0;
  for (VertexMask m : masks) used |= m;
  if (table.size() < kMaxVertices && (used >> table.size()) != 0) {
    throw Error("facet mask refers to a vertex outside the table");
  }
  SimplicialComplex out;
  std::vector<int> remap(table.size(), -1);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (used >> i & 1U) {
      remap[i] = static_cast<int>(out.vertices_.size());
      out.vertices_.push_back(table[i]);
    }
  }
  for (VertexMask& m : masks) {
    VertexMask r = 0;
    for (VertexMask rest = m; rest; rest &= rest - 1) {
      r |= VertexMask{1} << remap[std::countr_zero(rest)];
    }
    m = r;
  }
  if (keep_maximal_only) {
    out.facets_ = maximal_only(std::move(masks));
  } else {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    for (VertexMask a : masks) {
      for (VertexMask b : masks) {
        if (a != b && (a & ~b) == 0) {
          throw Error("not a facet set: " + out.simplex_of(a).str() + " is contained in " +
                      out.simplex_of(b).str());
        }
      }
    }
    out.facets_ = std::move(masks);
  }
  return out;
}

namespace {

SimplicialComplex build_from_simplices(std::vector<Simplex> simplices, bool keep_maximal_only) {
  std::vector<Label> table;
  for (const auto& s : simplices) table.insert(table.end(), s.begin(), s.end());
  std::sort(table.begin(), table.end());
  table.erase(std::unique(table.begin(), table.end()), table.end());
  if (table.size() > kMaxVertices) throw Error("too many vertices (limit 64)");
  std::vector<VertexMask> masks;
  masks.reserve(simplices.size());
  for (const auto& s : simplices) {
    VertexMask m = 0;
    for (const auto& l : s) {
      m |= VertexMask{1} << (std::lower_bound(table.begin(), table.end(), l) - table.begin());
    }
    masks.push_back(m);
  }
  return SimplicialComplex::from_masks(table, std::move(masks), keep_maximal_only);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  return build_from_simplices(std::move(facets), false);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Simplex> faces) {
  return build_from_simplices(std::move(faces), true);
}

SimplicialComplex SimplicialComplex::empty_simplex() {
  SimplicialComplex out;
  out.facets_.push_back(0);
  return out;
}

SimplicialComplex SimplicialComplex::closure(const Simplex& s) { return from_facets({s}); }

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  out.reserve(facets_.size());
  for (VertexMask m : facets_) out.push_back(simplex_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (VertexMask m : facets_) d = std::max(d, std::popcount(m) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const int p = std::popcount(facets_.front());
  return std::all_of(facets_.begin(), facets_.end(),
                     [p](VertexMask m) { return std::popcount(m) == p; });
}

bool SimplicialComplex::contains_mask(VertexMask m) const {
  return std::any_of(facets_.begin(), facets_.end(), [m](VertexMask f) { return (m & ~f) == 0; });
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto m = mask_of(s);
  return m && contains_mask(*m);
}

bool SimplicialComplex::has_facet(const Simplex& s) const {
  const auto m = mask_of(s);
  return m && std::binary_search(facets_.begin(), facets_.end(), *m);
}

std::vector<VertexMask> SimplicialComplex::face_masks(int d) const {
  std::vector<VertexMask> out;
  if (d < -1 || facets_.empty()) return out;
  if (d == -1) return {0};
  for (VertexMask f : facets_) {
    if (std::popcount(f) < d + 1) continue;
    // Enumerate the submasks of f with d + 1 bits.
    for (VertexMask sub = f;; sub = (sub - 1) & f) {
      if (std::popcount(sub) == d + 1) out.push_back(sub);
      if (sub == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Simplex> SimplicialComplex::faces(int d) const {
  std::vector<Simplex> out;
  for (VertexMask m : face_masks(d)) out.push_back(simplex_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

FaceVector SimplicialComplex::f_vector() const {
  FaceVector fv;
  for (int d = 0; d <= dim(); ++d) fv.counts.push_back(static_cast<long long>(face_masks(d).size()));
  return fv;
}

int SimplicialComplex::index_of(const Label& l) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), l);
  if (it == vertices_.end() || *it != l) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<VertexMask> SimplicialComplex::mask_of(const Simplex& s) const {
  VertexMask m = 0;
  for (const auto& l : s) {
    const int i = index_of(l);
    if (i < 0) return std::nullopt;
    m |= VertexMask{1} << i;
  }
  return m;
}

Simplex SimplicialComplex::simplex_of(VertexMask m) const {
  std::vector<Label> labels;
  for (; m; m &= m - 1) labels.push_back(vertices_[std::countr_zero(m)]);
  return Simplex(std::move(labels));
}

std::string to_string(const SimplicialComplex& k) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& f : k.facets()) {
    if (!first) os << ", ";
    first = false;
    os << f.str();
  }
  os << "}";
  return os.str();
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
  const auto m = k.mask_of(s);
  if (!m || !k.contains_mask(*m)) throw Error("not a face: " + s.str());
  std::vector<VertexMask> out;
  for (VertexMask f : k.facet_masks()) {
    if ((*m & ~f) == 0) out.push_back(f & ~*m);
  }
  return SimplicialComplex::from_masks(k.vertices(), std::move(out), false);
}

SimplicialComplex star(const SimplicialComplex& k, const Simplex& s) {
  const auto m = k.mask_of(s);
  if (!m || !k.contains_mask(*m)) throw Error("not a face: " + s.str());
  std::vector<VertexMask> out;
  for (VertexMask f : k.facet_masks()) {
    if ((*m & ~f) == 0) out.push_back(f);
  }
  return SimplicialComplex::from_masks(k.vertices(), std::move(out), false);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& l : a.vertices()) {
    if (b.index_of(l) >= 0) throw Error("join: vertex sets overlap at " + l.str());
  }
  std::vector<Simplex> out;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) out.push_back(fa.united(fb));
  }
  if (out.empty()) return {};
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Label>& w) {
  VertexMask wm = 0;
  for (const auto& l : w) {
    const int i = k.index_of(l);
    if (i >= 0) wm |= VertexMask{1} << i;
  }
  std::vector<VertexMask> out;
  for (VertexMask f : k.facet_masks()) out.push_back(f & wm);
  return SimplicialComplex::from_masks(k.vertices(), std::move(out), true);
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  auto fa = a.facets();
  auto fb = b.facets();
  fa.insert(fa.end(), fb.begin(), fb.end());
  if (fa.empty()) return {};
  return SimplicialComplex::from_faces(std::move(fa));
}

namespace {

void require_distinct(const std::vector<Label>& v, std::size_t min_size, const char* what) {
  if (v.size() < min_size) {
    throw Error(std::string(what) + ": too few vertices (need at least " + std::to_string(min_size) +
                ")");
  }
  std::vector<Label> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(std::string(what) + ": repeated vertex");
  }
}

}  // namespace

SimplicialComplex standard_sphere(const std::vector<Label>& v) {
  require_distinct(v, 2, "standard_sphere");
  std::vector<Simplex> out;
  const Simplex all(v);
  for (const auto& l : all) out.push_back(all.without(l));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex standard_ball(const std::vector<Label>& v) {
  require_distinct(v, 2, "standard_ball");
  return SimplicialComplex::closure(Simplex(v));
}

SimplicialComplex cycle(const std::vector<Label>& v) {
  require_distinct(v, 3, "cycle");
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(Simplex{v[i], v[(i + 1) % v.size()]});
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex boundary(const SimplicialComplex& k) {
  require_pure(k);
  std::map<VertexMask, int> ridge_count;
  for (VertexMask f : k.facet_masks()) {
    for (VertexMask rest = f; rest; rest &= rest - 1) ++ridge_count[f & ~(rest & -rest)];
  }
  std::vector<VertexMask> out;
  for (const auto& [r, c] : ridge_count) {
    if (c == 1) out.push_back(r);
  }
  if (out.empty()) return {};
  return SimplicialComplex::from_masks(k.vertices(), std::move(out), true);
}

bool is_weak_pseudomanifold(const SimplicialComplex& k) {
  require_pure(k);
  std::map<VertexMask, int> ridge_count;
  for (VertexMask f : k.facet_masks()) {
    for (VertexMask rest = f; rest; rest &= rest - 1) ++ridge_count[f & ~(rest & -rest)];
  }
  return std::all_of(ridge_count.begin(), ridge_count.end(),
                     [](const auto& rc) { return rc.second == 2; });
}

std::vector<SimplicialComplex> strong_components(const SimplicialComplex& k) {
  require_pure(k);
  const auto& facets = k.facet_masks();
  Dsu dsu(facets.size());
  std::map<VertexMask, int> first_owner;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const VertexMask f = facets[i];
    for (VertexMask rest = f; rest; rest &= rest - 1) {
      const VertexMask ridge = f & ~(rest & -rest);
      auto [it, inserted] = first_owner.emplace(ridge, static_cast<int>(i));
      if (!inserted) dsu.merge(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::vector<VertexMask>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) groups[dsu.find(static_cast<int>(i))].push_back(facets[i]);
  std::vector<SimplicialComplex> out;
  for (auto& [root, masks] : groups) {
    out.push_back(SimplicialComplex::from_masks(k.vertices(), std::move(masks), false));
  }
  std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets() < b.facets();
  });
  return out;
}

int connected_components(const SimplicialComplex& k) {
  Dsu dsu(k.num_vertices());
  for (VertexMask f : k.facet_masks()) {
    if (f == 0) continue;
    const int root = std::countr_zero(f);
    for (VertexMask rest = f; rest; rest &= rest - 1) dsu.merge(std::countr_zero(rest), root);
  }
  int count = 0;
  for (std::size_t i = 0; i < k.num_vertices(); ++i) {
    if (dsu.find(static_cast<int>(i)) == static_cast<int>(i)) ++count;
  }
  return count;
}

int neighborliness(const SimplicialComplex& k) {
  const auto n = static_cast<long long>(k.num_vertices());
  int best = 0;
  long long binom = 1;  // C(n, size)
  for (int size = 1; size <= n; ++size) {
    binom = binom * (n - size + 1) / size;
    if (static_cast<long long>(k.face_masks(size - 1).size()) != binom) break;
    best = size;
  }
  return best;
}

int face_degree(const SimplicialComplex& k, const Simplex& s) {
  return static_cast<int>(link(k, s).num_vertices());
}

}  // namespace simpcx
