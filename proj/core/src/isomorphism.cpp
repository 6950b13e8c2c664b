#include "simpcx/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace simpcx {

namespace {

struct VertexSignature {
  int degree = 0;
  FaceVector link_f;
  std::vector<int> edge_degrees;

  bool operator==(const VertexSignature&) const = default;
};

std::vector<VertexSignature> signatures(const SimplicialComplex& k) {
  std::vector<VertexSignature> out;
  for (const auto& v : k.vertices()) {
    VertexSignature sig;
    const auto lk = link(k, Simplex{v});
    sig.degree = static_cast<int>(lk.num_vertices());
    sig.link_f = lk.f_vector();
    for (const auto& u : lk.vertices()) sig.edge_degrees.push_back(face_degree(k, Simplex{v, u}));
    std::sort(sig.edge_degrees.begin(), sig.edge_degrees.end());
    out.push_back(std::move(sig));
  }
  return out;
}

std::unordered_set<VertexMask> all_faces(const SimplicialComplex& k) {
  std::unordered_set<VertexMask> out;
  for (int d = -1; d <= k.dim(); ++d) {
    for (VertexMask m : k.face_masks(d)) out.insert(m);
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const SimplicialComplex& a, const SimplicialComplex& b, bool find_all)
      : a_(a), b_(b), find_all_(find_all) {}

  std::vector<VertexMap> run() {
    const std::size_t n = a_.num_vertices();
    if (n != b_.num_vertices() || a_.num_facets() != b_.num_facets() || a_.f_vector() != b_.f_vector()) {
      return {};
    }
    if (n == 0) {
      if (a_ == b_) results_.emplace_back();
      return results_;
    }
    sig_a_ = signatures(a_);
    sig_b_ = signatures(b_);
    faces_b_ = all_faces(b_);
    facets_b_ = {b_.facet_masks().begin(), b_.facet_masks().end()};
    choose_order();
    image_.assign(n, -1);
    used_.assign(n, false);
    extend(0, 0);
    return results_;
  }

 private:
  // Vertices in breadth-first order over the 1-skeleton so that adjacency
  // constraints bind as early as possible.
  void choose_order() {
    const std::size_t n = a_.num_vertices();
    std::vector<VertexMask> nbr(n, 0);
    for (VertexMask f : a_.facet_masks()) {
      for (VertexMask r = f; r; r &= r - 1) nbr[std::countr_zero(r)] |= f;
    }
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      order_.push_back(static_cast<int>(s));
      for (std::size_t q = order_.size() - 1; q < order_.size(); ++q) {
        for (VertexMask r = nbr[order_[q]]; r; r &= r - 1) {
          const int u = std::countr_zero(r);
          if (!seen[u]) {
            seen[u] = true;
            order_.push_back(u);
          }
        }
      }
    }
    facets_by_vertex_.assign(n, {});
    for (VertexMask f : a_.facet_masks()) {
      for (VertexMask r = f; r; r &= r - 1) facets_by_vertex_[std::countr_zero(r)].push_back(f);
    }
  }

  VertexMask map_mask(VertexMask m) const {
    VertexMask out = 0;
    for (; m; m &= m - 1) out |= VertexMask{1} << image_[std::countr_zero(m)];
    return out;
  }

  bool consistent(int v) const {
    for (VertexMask f : facets_by_vertex_[v]) {
      if (!faces_b_.count(map_mask(f & assigned_))) return false;
    }
    return true;
  }

  bool extend(std::size_t depth, VertexMask assigned) {
    if (depth == order_.size()) {
      for (VertexMask f : a_.facet_masks()) {
        if (!facets_b_.count(map_mask(f))) return false;
      }
      std::map<Label, Label> m;
      for (std::size_t i = 0; i < image_.size(); ++i) m[a_.vertices()[i]] = b_.vertices()[image_[i]];
      results_.emplace_back(m);
      return !find_all_;
    }
    const int v = order_[depth];
    for (std::size_t w = 0; w < b_.num_vertices(); ++w) {
      if (used_[w] || !(sig_a_[v] == sig_b_[w])) continue;
      image_[v] = static_cast<int>(w);
      used_[w] = true;
      assigned_ = assigned | (VertexMask{1} << v);
      if (consistent(v) && extend(depth + 1, assigned_)) return true;
      used_[w] = false;
      image_[v] = -1;
    }
    assigned_ = assigned;
    return false;
  }

  const SimplicialComplex& a_;
  const SimplicialComplex& b_;
  bool find_all_;
  std::vector<VertexSignature> sig_a_, sig_b_;
  std::unordered_set<VertexMask> faces_b_, facets_b_;
  std::vector<int> order_;
  std::vector<std::vector<VertexMask>> facets_by_vertex_;
  std::vector<int> image_;
  std::vector<bool> used_;
  VertexMask assigned_ = 0;
  std::vector<VertexMap> results_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  auto found = IsoSearch(k1, k2, false).run();
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<VertexMap> all_isomorphisms(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  return IsoSearch(k1, k2, true).run();
}

bool are_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  return find_isomorphism(k1, k2).has_value();
}

PermGroup automorphism_group(const SimplicialComplex& k) {
  std::vector<Permutation> elements;
  for (const auto& m : all_isomorphisms(k, k)) {
    std::map<Label, Label> images;
    for (std::size_t i = 0; i < m.domain().size(); ++i) images[m.domain()[i]] = m.images()[i];
    elements.push_back(Permutation::from_map(images));
  }
  if (elements.empty()) return PermGroup::trivial(k.vertices());
  auto g = PermGroup::from_elements(std::move(elements));
  return g;
}

}  // namespace simpcx
