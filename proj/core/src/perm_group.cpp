#include "simpcx/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace simpcx {

PermGroup PermGroup::generate(std::vector<Permutation> generators) {
  if (generators.empty()) throw Error("generate_group: no generators");
  for (const auto& g : generators) {
    if (g.domain() != generators.front().domain()) throw Error("generate_group: generators act on different domains");
  }
  PermGroup out;
  out.generators_ = generators;
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(generators.front().domain());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation next = g * cur;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

PermGroup PermGroup::trivial(std::vector<Label> domain) {
  PermGroup out;
  out.elements_.push_back(Permutation::identity(std::move(domain)));
  out.generators_ = out.elements_;
  return out;
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw Error("group: empty element list");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup out;
  out.elements_ = std::move(elements);
  for (const auto& a : out.elements_) {
    if (!out.contains(a.inverse())) throw Error("group: element list not closed under inverse");
    for (const auto& b : out.elements_) {
      if (!out.contains(a * b)) throw Error("group: element list not closed under composition");
    }
  }
  out.generators_ = out.elements_;
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&other](const Permutation& p) { return other.contains(p); });
}

std::vector<int> PermGroup::element_order_profile() const {
  std::vector<int> out;
  out.reserve(elements_.size());
  for (const auto& p : elements_) out.push_back(p.order());
  std::sort(out.begin(), out.end());
  return out;
}

int PermGroup::max_element_order() const {
  int best = 1;
  for (const auto& p : elements_) best = std::max(best, p.order());
  return best;
}

std::vector<Permutation> PermGroup::center() const {
  std::vector<Permutation> out;
  for (const auto& z : elements_) {
    const bool central = std::all_of(elements_.begin(), elements_.end(),
                                     [&z](const Permutation& g) { return z * g == g * z; });
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<Permutation> PermGroup::stabilizer(const Simplex& s) const {
  std::vector<Permutation> out;
  for (const auto& g : elements_) {
    if (g(s) == s) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<Label>> PermGroup::vertex_orbits() const {
  std::vector<std::vector<Label>> out;
  std::set<Label> done;
  for (const auto& l : domain()) {
    if (done.count(l)) continue;
    std::set<Label> orb;
    for (const auto& g : elements_) orb.insert(g(l));
    done.insert(orb.begin(), orb.end());
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

std::vector<Simplex> orbit(const Simplex& s, const std::vector<Permutation>& generators) {
  std::vector<Simplex> out{s};
  std::set<Simplex> seen{s};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : generators) {
      Simplex next = g(out[i]);
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

GeneratedComplex generate_complex(const std::vector<Permutation>& generators,
                                  const std::vector<Simplex>& basic) {
  GeneratedComplex out;
  std::set<Simplex> all;
  for (const auto& b : basic) {
    const auto orb = orbit(b, generators);
    out.orbit_sizes.push_back(orb.size());
    all.insert(orb.begin(), orb.end());
  }
  try {
    out.complex = SimplicialComplex::from_facets({all.begin(), all.end()});
  } catch (const Error& e) {
    throw Error(std::string("orbit closure not a facet set (") + e.what() + ")");
  }
  return out;
}

std::vector<std::vector<Simplex>> orbits_on_faces(const SimplicialComplex& k, const PermGroup& g, int d) {
  std::vector<std::vector<Simplex>> out;
  std::set<Simplex> done;
  for (const auto& f : k.faces(d)) {
    if (done.count(f)) continue;
    std::set<Simplex> orb;
    for (const auto& p : g.elements()) orb.insert(p(f));
    done.insert(orb.begin(), orb.end());
    out.emplace_back(orb.begin(), orb.end());
  }
  return out;
}

std::vector<Simplex> basic_facets(const SimplicialComplex& k, const PermGroup& g) {
  std::vector<Simplex> out;
  for (const auto& orb : orbits_on_faces(k, g, k.dim())) {
    // Only maximal faces count; in a pure complex every top face is a facet.
    if (k.has_facet(orb.front())) out.push_back(orb.front());
  }
  return out;
}

bool is_automorphism(const SimplicialComplex& k, const Permutation& p) {
  for (const auto& l : k.vertices()) {
    if (!std::binary_search(p.domain().begin(), p.domain().end(), l)) return false;
  }
  return p(k) == k;
}

std::string GroupActionReport::str() const {
  if (is_pure) return "pure";
  std::string orb;
  for (const auto& l : orbit) orb += (orb.empty() ? "" : " ") + l.compact();
  return "not pure: condition (" + condition + ") fails at " + witness.str() + " for orbit {" + orb + "}";
}

GroupActionReport is_pure_action(const SimplicialComplex& k, const PermGroup& g) {
  for (const auto& p : g.generators()) {
    if (!is_automorphism(k, p)) throw Error("group does not act by automorphisms: " + p.cycle_notation());
  }
  GroupActionReport report;
  std::vector<std::vector<Label>> orbits;
  for (const auto& orb : g.vertex_orbits()) {
    std::vector<Label> inside;
    for (const auto& l : orb) {
      if (k.index_of(l) >= 0) inside.push_back(l);
    }
    if (!inside.empty()) orbits.push_back(std::move(inside));
  }
  for (const auto& orb : orbits) {
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (std::size_t j = i + 1; j < orb.size(); ++j) {
        const Simplex e{orb[i], orb[j]};
        if (k.contains(e)) return {false, "a", orb, e};
      }
    }
  }
  for (int d = -1; d <= k.dim(); ++d) {
    for (const auto& alpha : k.faces(d)) {
      const auto stab = g.stabilizer(alpha);
      const auto lk_vertices = link(k, alpha).vertices();
      for (const auto& orb : orbits) {
        std::vector<Label> target;
        for (const auto& l : orb) {
          if (std::binary_search(lk_vertices.begin(), lk_vertices.end(), l)) target.push_back(l);
        }
        if (target.size() < 2) continue;
        std::set<Label> reached;
        for (const auto& s : stab) reached.insert(s(target.front()));
        const bool transitive = std::all_of(target.begin(), target.end(),
                                            [&reached](const Label& l) { return reached.count(l) > 0; });
        if (!transitive) return {false, "b", orb, alpha};
      }
    }
  }
  return report;
}

SimplicialComplex quotient_complex(const SimplicialComplex& k, const PermGroup& g) {
  const auto report = is_pure_action(k, g);
  if (!report.is_pure) throw Error("quotient: action " + report.str());
  std::map<Label, Label> rep;
  for (const auto& orb : g.vertex_orbits()) {
    for (const auto& l : orb) rep[l] = orb.front();
  }
  std::vector<Simplex> images;
  for (const auto& f : k.facets()) {
    std::vector<Label> q;
    for (const auto& l : f) q.push_back(rep.count(l) ? rep[l] : l);
    images.emplace_back(std::move(q));
  }
  return SimplicialComplex::from_faces(std::move(images));
}

}  // namespace simpcx
