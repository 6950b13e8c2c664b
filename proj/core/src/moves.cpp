#include "simpcx/moves.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "json_util.hpp"
#include "simpcx/homology.hpp"

namespace simpcx {

std::string BistellarMove::str() const { return a.str() + " -> " + b.str(); }

SimplicialComplex simplex_boundary(const Simplex& b) {
  if (b.empty()) throw Error("boundary of the empty simplex");
  if (b.size() == 1) return SimplicialComplex::empty_simplex();
  return standard_sphere(b.labels());
}

SimplicialComplex apply_bistellar(const SimplicialComplex& k, const Simplex& a, const Simplex& b) {
  if (a.empty() || b.empty()) throw Error("invalid move: empty core");
  if (a.intersects(b)) throw Error("invalid move: A and B share a vertex");
  if (!k.contains(a)) throw Error("invalid move: A not a face");
  if (link(k, a) != simplex_boundary(b)) throw Error("invalid move: link");
  if (k.contains(b)) throw Error("invalid move: B present");
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) {
    if (!a.is_subset_of(f)) out.push_back(f);
  }
  for (const auto& v : a) out.push_back(b.united(a.without(v)));
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex apply_bistellar(const SimplicialComplex& k, const BistellarMove& m) {
  return apply_bistellar(k, m.a, m.b);
}

SimplicialComplex star_vertex(const SimplicialComplex& k, const Simplex& c, const Label& x) {
  if (k.index_of(x) >= 0) throw Error("starring: vertex " + x.str() + " already present");
  if (c.empty() || !k.contains(c)) throw Error("starring: " + c.str() + " not a face");
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) {
    if (!c.is_subset_of(f)) {
      out.push_back(f);
      continue;
    }
    for (const auto& v : c) out.push_back(f.without(v).with(x));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

std::string ball_plausibility_failure(const SimplicialComplex& d) {
  if (d.is_void() || d.dim() < 0) return "empty";
  if (!d.is_pure()) return "not pure";
  if (strong_components(d).size() != 1) return "not strongly connected";
  std::map<VertexMask, int> ridges;
  for (VertexMask f : d.facet_masks()) {
    for (VertexMask r = f; r; r &= r - 1) ++ridges[f & ~(r & -r)];
  }
  for (const auto& [r, c] : ridges) {
    if (c > 2) return "ridge " + d.simplex_of(r).str() + " in more than two facets";
  }
  if (!is_acyclic(d)) return "nontrivial homology";
  if (d.dim() >= 1 && !is_homology_sphere(boundary(d), d.dim() - 1)) return "boundary not a homology sphere";
  return "";
}

SimplicialComplex apply_gbm(const SimplicialComplex& k, const SimplicialComplex& d, const SimplicialComplex& dhat) {
  const int dim = k.dim();
  if (!d.is_pure() || d.dim() != dim) throw Error("invalid gbm: D is not pure of dimension " + std::to_string(dim));
  for (const auto& f : d.facets()) {
    if (!k.contains(f)) throw Error("invalid gbm: D not contained in K (" + f.str() + ")");
  }
  if (auto why = ball_plausibility_failure(d); !why.empty()) throw Error("invalid gbm: D not a ball: " + why);
  if (auto why = ball_plausibility_failure(dhat); !why.empty()) throw Error("invalid gbm: Dhat not a ball: " + why);
  const auto bd = boundary(d);
  if (bd != boundary(dhat)) throw Error("invalid gbm: boundaries of D and Dhat differ");
  for (int i = 0; i <= dhat.dim(); ++i) {
    for (const auto& s : dhat.faces(i)) {
      if (k.contains(s) != bd.contains(s)) {
        throw Error("invalid gbm: Dhat meets K outside the common boundary at " + s.str());
      }
    }
  }
  const auto removed = d.facets();
  std::vector<Simplex> out;
  for (const auto& f : k.facets()) {
    if (!std::binary_search(removed.begin(), removed.end(), f)) out.push_back(f);
  }
  for (const auto& f : dhat.facets()) out.push_back(f);
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<BistellarMove> find_proper_moves(const SimplicialComplex& k) {
  std::vector<BistellarMove> out;
  if (k.is_void()) return out;
  if (!k.is_pure()) throw Error("not pure");
  const int d = k.dim();
  const auto& facets = k.facet_masks();
  for (int dim_a = 0; dim_a < d; ++dim_a) {
    for (VertexMask a : k.face_masks(dim_a)) {
      int count = 0;
      VertexMask u = 0;
      for (VertexMask f : facets) {
        if ((a & ~f) == 0) {
          ++count;
          u |= f;
        }
      }
      // lk(A) has facets of size d - dim A, all inside U \ A; d - dim A + 1 of
      // them on a (d - dim A + 1)-set means lk(A) = ∂(U \ A).
      const VertexMask b = u & ~a;
      if (count != d - dim_a + 1 || std::popcount(b) != d - dim_a + 1) continue;
      if (k.contains_mask(b)) continue;
      out.push_back({k.simplex_of(a), k.simplex_of(b)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BistellarMove> vertex_deletion_flips(const Label& u, const Simplex& xyz, const std::vector<Label>& abc) {
  if (abc.size() != 3 || xyz.size() != 3) throw Error("vertex_deletion_flips: need three plus three vertices");
  const Label& a = abc[0];
  const Label& b = abc[1];
  const Label& c = abc[2];
  return {
      {Simplex{u, a, b}, xyz},
      {Simplex{u, a}, xyz.with(c)},
      {Simplex{u}, xyz.with(b).with(c)},
  };
}

std::string MoveStep::str() const {
  switch (kind) {
    case Kind::flip: return a.str() + " -> " + b.str();
    case Kind::star: return "star " + x.compact() + " in " + c.str();
    default: return "gbm " + to_string(d) + " -> " + to_string(dhat);
  }
}

namespace {

using nlohmann::json;

Simplex simplex_from_json(const json& j) {
  std::vector<Label> v;
  for (const auto& l : j) v.push_back(Label::parse(l.get<std::string>()));
  return Simplex(std::move(v));
}

json simplex_to_json(const Simplex& s) {
  json out = json::array();
  for (const auto& l : s) out.push_back(l.compact());
  return out;
}

SimplicialComplex complex_from_json(const json& j) {
  std::vector<Simplex> f;
  for (const auto& s : j) f.push_back(simplex_from_json(s));
  return SimplicialComplex::from_facets(std::move(f));
}

json complex_to_json(const SimplicialComplex& k) {
  json out = json::array();
  for (const auto& f : k.facets()) out.push_back(simplex_to_json(f));
  return out;
}

}  // namespace

MoveScript parse_script(std::string_view text) {
  const json j = parse_json_document(text);
  MoveScript s;
  try {
    s.name = j.value("name", "");
    for (const auto& st : j.at("steps")) {
      MoveStep step;
      const auto kind = st.at("kind").get<std::string>();
      if (kind == "flip") {
        step.kind = MoveStep::Kind::flip;
        step.a = simplex_from_json(st.at("A"));
        step.b = simplex_from_json(st.at("B"));
      } else if (kind == "star") {
        step.kind = MoveStep::Kind::star;
        step.c = simplex_from_json(st.at("C"));
        step.x = Label::parse(st.at("x").get<std::string>());
      } else if (kind == "gbm") {
        step.kind = MoveStep::Kind::gbm;
        step.d = complex_from_json(st.at("D_facets"));
        step.dhat = complex_from_json(st.at("Dhat_facets"));
      } else {
        throw Error("script: unknown step kind '" + kind + "'");
      }
      s.steps.push_back(std::move(step));
    }
  } catch (const json::exception& e) {
    throw Error(std::string("script: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("script: ") + e.what());
  }
  return s;
}

std::string script_to_json(const MoveScript& s) {
  json j;
  j["name"] = s.name;
  j["steps"] = json::array();
  for (const auto& st : s.steps) {
    json o;
    switch (st.kind) {
      case MoveStep::Kind::flip:
        o["kind"] = "flip";
        o["A"] = simplex_to_json(st.a);
        o["B"] = simplex_to_json(st.b);
        break;
      case MoveStep::Kind::star:
        o["kind"] = "star";
        o["C"] = simplex_to_json(st.c);
        o["x"] = st.x.compact();
        break;
      case MoveStep::Kind::gbm:
        o["kind"] = "gbm";
        o["D_facets"] = complex_to_json(st.d);
        o["Dhat_facets"] = complex_to_json(st.dhat);
        break;
    }
    j["steps"].push_back(std::move(o));
  }
  return j.dump(2);
}

SimplicialComplex apply_script(const SimplicialComplex& k, const MoveScript& s, std::vector<SimplicialComplex>* trace) {
  SimplicialComplex cur = k;
  for (std::size_t i = 0; i < s.steps.size(); ++i) {
    const auto& st = s.steps[i];
    try {
      switch (st.kind) {
        case MoveStep::Kind::flip: cur = apply_bistellar(cur, st.a, st.b); break;
        case MoveStep::Kind::star: cur = star_vertex(cur, st.c, st.x); break;
        case MoveStep::Kind::gbm: cur = apply_gbm(cur, st.d, st.dhat); break;
      }
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + " (" + st.str() + "): " + e.what());
    }
    if (trace) trace->push_back(cur);
  }
  return cur;
}

}  // namespace simpcx
