#include "simpcx/product_subdivision.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace simpcx {

namespace {

std::vector<std::vector<int>> proper_subsets() {
  std::vector<std::vector<int>> out;
  for (unsigned m = 1; m < 15; ++m) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i) {
      if (m & (1u << i)) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Rows v_k - v_0 of the chart images of `points`.
std::vector<std::vector<Rational>> difference_rows(const ProductCell& c, const std::vector<Label>& points) {
  const auto base = ProductCellComplex::chart(c, points.front());
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 1; k < points.size(); ++k) {
    auto row = ProductCellComplex::chart(c, points[k]);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] -= base[i];
    rows.push_back(std::move(row));
  }
  return rows;
}

Permutation transpose_permutation() {
  return Permutation::from_function(all_pair_labels(),
                                    [](const Label& l) { return Label::pair(l.second(), l.first()); });
}

// Union of the fills of the codimension-one faces of c.
SimplicialComplex cell_boundary(const ProductCell& c, const std::map<ProductCell, SimplicialComplex>& fills) {
  std::vector<Simplex> faces;
  for (const auto& [cell, fill] : fills) {
    if (cell.dim() != c.dim() - 1 || !cell.is_face_of(c)) continue;
    for (const auto& f : fill.facets()) faces.push_back(f);
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace

std::vector<Label> ProductCell::vertices() const {
  std::vector<Label> out;
  for (int i : a) {
    for (int j : b) out.push_back(Label::pair(i, j));
  }
  return out;
}

bool ProductCell::is_face_of(const ProductCell& other) const {
  return std::includes(other.a.begin(), other.a.end(), a.begin(), a.end()) &&
         std::includes(other.b.begin(), other.b.end(), b.begin(), b.end());
}

std::string ProductCell::str() const {
  std::string out;
  for (int i : a) out += std::to_string(i);
  out += "x";
  for (int j : b) out += std::to_string(j);
  return out;
}

RationalPoint realize(const Label& l) {
  if (l.kind() != Label::Kind::pair) throw Error("realize: not a pair label: " + l.str());
  RationalPoint p;
  p.fill(0);
  if (l.first() > 1) p[static_cast<std::size_t>(l.first() - 2)] = 1;
  if (l.second() > 1) p[static_cast<std::size_t>(l.second() + 1)] = 1;
  return p;
}

std::vector<ProductCell> ProductCellComplex::cells(int d) const {
  std::vector<ProductCell> out;
  for (const auto& c : cells_) {
    if (c.dim() == d) out.push_back(c);
  }
  return out;
}

FaceVector ProductCellComplex::counts() const {
  std::vector<long long> n(5, 0);
  for (const auto& c : cells_) ++n[static_cast<std::size_t>(c.dim())];
  return FaceVector(std::move(n));
}

std::optional<ProductCell> ProductCellComplex::minimal_cell(const Simplex& s) {
  if (s.empty()) return std::nullopt;
  std::set<int> rows, cols;
  for (const auto& l : s) {
    if (l.kind() != Label::Kind::pair) return std::nullopt;
    rows.insert(l.first());
    cols.insert(l.second());
  }
  if (rows.size() == 4 || cols.size() == 4) return std::nullopt;
  return ProductCell{{rows.begin(), rows.end()}, {cols.begin(), cols.end()}};
}

std::vector<Rational> ProductCellComplex::chart(const ProductCell& c, const Label& l) {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < c.a.size(); ++k) out.emplace_back(l.first() == c.a[k] ? 1 : 0);
  for (std::size_t k = 1; k < c.b.size(); ++k) out.emplace_back(l.second() == c.b[k] ? 1 : 0);
  return out;
}

Rational ProductCellComplex::cell_volume(const ProductCell& c) {
  return 1 / (factorial(static_cast<int>(c.a.size()) - 1) * factorial(static_cast<int>(c.b.size()) - 1));
}

Rational ProductCellComplex::simplex_volume(const ProductCell& c, const Simplex& s) {
  if (static_cast<int>(s.size()) != c.dim() + 1) return 0;
  if (c.dim() == 0) return 1;
  const Rational det = determinant(difference_rows(c, s.labels()));
  return abs(det) / factorial(c.dim());
}

int ProductCellComplex::side(const ProductCell& c, const Simplex& ridge, const Label& apex) {
  auto points = ridge.labels();
  points.push_back(apex);
  if (static_cast<int>(points.size()) != c.dim() + 1) throw Error("side: ridge has the wrong size for " + c.str());
  const Rational det = determinant(difference_rows(c, points));
  return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

ProductCellComplex build_product_cell_complex() {
  ProductCellComplex p;
  const auto subsets = proper_subsets();
  for (const auto& a : subsets) {
    for (const auto& b : subsets) p.cells_.push_back({a, b});
  }
  std::sort(p.cells_.begin(), p.cells_.end(), [](const ProductCell& x, const ProductCell& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    return x < y;
  });
  return p;
}

std::string SubdivisionReport::str() const {
  std::ostringstream out;
  if (certified) {
    out << "certified: " << tilings.size() << " cells tiled with exact volumes";
  } else {
    out << "not a subdivision";
    for (const auto& f : failures) out << "\n  " << f;
  }
  return out.str();
}

SubdivisionReport verify_subdivision(const SimplicialComplex& k, const ProductCellComplex& p) {
  SubdivisionReport report;
  constexpr std::size_t kMaxFailures = 10;
  auto fail = [&report](std::string msg) {
    if (report.failures.size() < kMaxFailures) report.failures.push_back(std::move(msg));
  };
  if (k.vertices() != all_pair_labels()) {
    fail("vertex set differs from the 16 vertices x_ij of the cell complex");
    return report;
  }

  std::map<ProductCell, std::vector<Simplex>> tiles;
  for (int d = 1; d <= k.dim(); ++d) {
    for (const auto& f : k.faces(d)) {
      const auto cell = ProductCellComplex::minimal_cell(f);
      if (!cell) {
        fail("face spans no cell: " + f.str());
      } else if (f.dim() > cell->dim()) {
        fail("face " + f.str() + " is degenerate in cell " + cell->str());
      } else if (f.dim() == cell->dim()) {
        tiles[*cell].push_back(f);
      }
    }
  }

  for (const auto& c : p.cells()) {
    if (c.dim() == 0) continue;
    CellTiling t{c, 0, 0, ProductCellComplex::cell_volume(c)};
    std::map<Simplex, std::vector<int>> ridge_sides;
    bool ok = true;
    for (const auto& s : tiles[c]) {
      const Rational v = ProductCellComplex::simplex_volume(c, s);
      if (v == 0) {
        fail("cell " + c.str() + " not tiled: degenerate simplex " + s.str());
        ok = false;
      }
      t.volume += v;
      ++t.tiles;
      for (const auto& apex : s) {
        const Simplex ridge = s.without(apex);
        ridge_sides[ridge].push_back(ProductCellComplex::side(c, ridge, apex));
      }
    }
    if (t.volume != t.expected) {
      fail("cell " + c.str() + " not tiled: volume " + t.volume.str() + " of " + t.expected.str());
      ok = false;
    }
    for (const auto& [ridge, sides] : ridge_sides) {
      if (!ok) break;
      const bool interior = ProductCellComplex::minimal_cell(ridge) == c;
      const bool good = interior ? (sides.size() == 2 && sides[0] == -sides[1]) : sides.size() == 1;
      if (!good) {
        fail("cell " + c.str() + " not tiled: ridge " + ridge.str() + " meets " + std::to_string(sides.size()) +
             " tiles");
        ok = false;
      }
    }
    report.tilings.push_back(std::move(t));
  }
  report.certified = report.failures.empty();
  return report;
}

std::vector<Simplex> staircase(const ProductCell& c, const std::vector<int>& order_a, const std::vector<int>& order_b) {
  std::vector<Simplex> out;
  std::vector<Label> path{Label::pair(order_a[0], order_b[0])};
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t r, std::size_t s) {
    if (r + 1 == order_a.size() && s + 1 == order_b.size()) {
      out.emplace_back(path);
      return;
    }
    if (r + 1 < order_a.size()) {
      path.push_back(Label::pair(order_a[r + 1], order_b[s]));
      walk(r + 1, s);
      path.pop_back();
    }
    if (s + 1 < order_b.size()) {
      path.push_back(Label::pair(order_a[r], order_b[s + 1]));
      walk(r, s + 1);
      path.pop_back();
    }
  };
  (void)c;
  walk(0, 0);
  return out;
}

std::vector<SimplicialComplex> staircase_triangulations(const ProductCell& c) {
  std::set<std::vector<VertexMask>> seen;
  std::vector<SimplicialComplex> out;
  auto oa = c.a;
  do {
    auto ob = c.b;
    do {
      auto t = SimplicialComplex::from_facets(staircase(c, oa, ob));
      if (seen.insert(t.facet_masks()).second) out.push_back(std::move(t));
    } while (std::next_permutation(ob.begin(), ob.end()));
  } while (std::next_permutation(oa.begin(), oa.end()));
  return out;
}

std::vector<SimplicialComplex> prism_fills(const ProductCell& prism, const SimplicialComplex& bd) {
  if (prism.dim() != 3 || std::min(prism.a.size(), prism.b.size()) != 2) {
    throw Error("prism_fills: " + prism.str() + " is not a triangle x edge cell");
  }
  std::vector<SimplicialComplex> out;
  for (auto& t : staircase_triangulations(prism)) {
    if (boundary(t) == bd) out.push_back(std::move(t));
  }
  return out;
}

std::vector<SimplicialComplex> cell_fills(const ProductCell& c, const SimplicialComplex& bd) {
  using Mask = std::uint32_t;
  const auto verts = c.vertices();
  const int m = c.dim();
  const int n = static_cast<int>(verts.size());
  auto to_simplex = [&verts](Mask mask) {
    std::vector<Label> ls;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
      if (mask & (1u << i)) ls.push_back(verts[static_cast<std::size_t>(i)]);
    }
    return Simplex(std::move(ls));
  };
  auto to_mask = [&verts](const Simplex& s) -> std::optional<Mask> {
    Mask mask = 0;
    for (const auto& l : s) {
      const auto it = std::lower_bound(verts.begin(), verts.end(), l);
      if (it == verts.end() || *it != l) return std::nullopt;
      mask |= 1u << (it - verts.begin());
    }
    return mask;
  };

  std::set<Mask> required;
  for (const auto& f : bd.facets()) {
    const auto mask = to_mask(f);
    if (!mask || f.dim() != m - 1) return {};
    required.insert(*mask);
  }

  struct Candidate {
    Mask mask;
    std::vector<std::pair<Mask, int>> ridges;  // ridge, side of the apex
  };
  std::vector<Candidate> cands;
  std::map<Mask, std::vector<std::size_t>> by_ridge;
  std::map<Mask, bool> interior;
  for (Mask mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m + 1) continue;
    const Simplex s = to_simplex(mask);
    if (ProductCellComplex::simplex_volume(c, s) == 0) continue;
    Candidate cand{mask, {}};
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      const Mask r = mask & ~(1u << i);
      const Simplex rs = to_simplex(r);
      cand.ridges.emplace_back(r, ProductCellComplex::side(c, rs, verts[static_cast<std::size_t>(i)]));
      if (!interior.count(r)) interior[r] = ProductCellComplex::minimal_cell(rs) == c;
      by_ridge[r].push_back(cands.size());
    }
    cands.push_back(std::move(cand));
  }

  std::map<Mask, std::pair<int, int>> used;  // ridge -> (count, side of the first tile)
  std::vector<Mask> chosen;
  std::set<std::vector<Mask>> found;

  auto fits = [&](const Candidate& cand) {
    for (const auto& [r, sd] : cand.ridges) {
      const auto it = used.find(r);
      const int count = it == used.end() ? 0 : it->second.first;
      if (interior.at(r)) {
        if (count >= 2 || (count == 1 && it->second.second == sd)) return false;
      } else if (!required.count(r) || count > 0) {
        return false;
      }
    }
    return true;
  };

  std::function<void()> search = [&]() {
    std::optional<Mask> open;
    for (Mask r : required) {
      if (!used.count(r)) {
        open = r;
        break;
      }
    }
    if (!open) {
      for (const auto& [r, st] : used) {
        if (interior.at(r) && st.first == 1) {
          open = r;
          break;
        }
      }
    }
    if (!open) {
      auto sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      found.insert(std::move(sorted));
      return;
    }
    const auto it = by_ridge.find(*open);
    if (it == by_ridge.end()) return;
    for (std::size_t idx : it->second) {
      const auto& cand = cands[idx];
      if (!fits(cand)) continue;
      for (const auto& [r, sd] : cand.ridges) {
        auto& st = used[r];
        if (st.first++ == 0) st.second = sd;
      }
      chosen.push_back(cand.mask);
      search();
      chosen.pop_back();
      for (const auto& [r, sd] : cand.ridges) {
        auto st = used.find(r);
        if (--st->second.first == 0) used.erase(st);
      }
    }
  };
  search();

  std::vector<SimplicialComplex> out;
  for (const auto& masks : found) {
    std::vector<Simplex> facets;
    for (Mask mask : masks) facets.push_back(to_simplex(mask));
    out.push_back(SimplicialComplex::from_facets(std::move(facets)));
  }
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& x, const SimplicialComplex& y) { return x.facets() < y.facets(); });
  return out;
}

Simplex Square::diagonal(bool main) const {
  if (main) return Simplex{Label::pair(cell.a[0], cell.b[0]), Label::pair(cell.a[1], cell.b[1])};
  return Simplex{Label::pair(cell.a[0], cell.b[1]), Label::pair(cell.a[1], cell.b[0])};
}

std::vector<Square> squares() {
  std::vector<Square> out;
  for (const auto& c : build_product_cell_complex().cells(2)) {
    if (c.a.size() == 2) out.push_back({c});
  }
  return out;
}

SubdivisionSearch search_equivariant_pure_subdivisions() {
  SubdivisionSearch out;
  const auto p = build_product_cell_complex();
  const auto sq = squares();
  const auto labels = all_pair_labels();
  auto index = [](const Label& l) { return (l.first() - 1) * 4 + (l.second() - 1); };

  // One variable per tau-orbit of squares; `partner[v]` is the image square
  // (equal for E x E). tau preserves the main/anti type of a diagonal.
  std::vector<std::size_t> rep, partner;
  for (std::size_t s = 0; s < sq.size(); ++s) {
    const auto t = sq[s].cell.transposed();
    const auto it = std::find_if(sq.begin(), sq.end(), [&t](const Square& q) { return q.cell == t; });
    const auto ti = static_cast<std::size_t>(it - sq.begin());
    if (s <= ti) {
      rep.push_back(s);
      partner.push_back(ti);
    }
  }
  out.diagonal_patterns = std::size_t{1} << rep.size();

  // 1-skeleton: the 1-cells plus the chosen diagonals. Cells of dimension 3
  // and 4 add no edges since every edge between their vertices lies in a
  // square or a 1-cell.
  std::array<std::uint16_t, 16> base{};
  for (const auto& c : p.cells(1)) {
    const auto v = c.vertices();
    base[static_cast<std::size_t>(index(v[0]))] |= static_cast<std::uint16_t>(1u << index(v[1]));
    base[static_cast<std::size_t>(index(v[1]))] |= static_cast<std::uint16_t>(1u << index(v[0]));
  }
  auto adj = base;
  // A vertex off the diagonal has trivial stabilizer, so its neighbours may
  // hold at most one label of each orbit {x_kl, x_lk}; no edge joins such a pair.
  auto vertex_ok = [&](int v) {
    const int i = v / 4, j = v % 4;
    if (i == j) return true;
    for (int k = 0; k < 4; ++k) {
      for (int l = k + 1; l < 4; ++l) {
        const int u = k * 4 + l, w = l * 4 + k;
        if ((adj[static_cast<std::size_t>(v)] >> u & 1) && (adj[static_cast<std::size_t>(v)] >> w & 1)) return false;
        if ((v == u && (adj[static_cast<std::size_t>(v)] >> w & 1))) return false;
      }
    }
    return true;
  };

  const Permutation tau = transpose_permutation();
  const PermGroup group = PermGroup::generate({tau});
  std::vector<bool> choice(sq.size());
  std::set<std::vector<VertexMask>> results;

  auto complete = [&]() {
    ++out.edge_pure;
    std::map<ProductCell, SimplicialComplex> fills;
    for (const auto& c : p.cells(2)) {
      std::vector<Simplex> tris;
      if (c.a.size() == 2 && c.b.size() == 2) {
        const auto s = std::find_if(sq.begin(), sq.end(), [&c](const Square& q) { return q.cell == c; });
        const Simplex d = s->diagonal(choice[static_cast<std::size_t>(s - sq.begin())]);
        for (const auto& l : c.vertices()) {
          if (!d.contains(l)) tris.push_back(d.with(l));
        }
      } else {
        tris.emplace_back(c.vertices());
      }
      fills[c] = SimplicialComplex::from_facets(std::move(tris));
    }
    for (const auto& c : p.cells(3)) {
      auto f = prism_fills(c, cell_boundary(c, fills));
      if (f.empty()) return;
      fills[c] = std::move(f.front());
    }
    ++out.prisms_filled;

    // 4-cells come in tau-orbits: T x T alone, T x T' with T' x T.
    std::vector<std::vector<std::vector<Simplex>>> options;
    for (const auto& c : p.cells(4)) {
      const auto t = c.transposed();
      if (t < c) continue;
      std::vector<std::vector<Simplex>> opts;
      for (const auto& f : cell_fills(c, cell_boundary(c, fills))) {
        const auto image = tau(f);
        if (t == c && image != f) continue;
        auto facets = f.facets();
        if (t != c) {
          const auto more = image.facets();
          facets.insert(facets.end(), more.begin(), more.end());
        }
        opts.push_back(std::move(facets));
      }
      if (opts.empty()) return;
      options.push_back(std::move(opts));
    }
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      ++out.candidates;
      std::vector<Simplex> facets;
      for (std::size_t o = 0; o < options.size(); ++o) {
        const auto& f = options[o][pick[o]];
        facets.insert(facets.end(), f.begin(), f.end());
      }
      auto k = SimplicialComplex::from_facets(std::move(facets));
      if (is_automorphism(k, tau) && is_pure_action(k, group).is_pure && verify_subdivision(k, p).certified) {
        results.insert(k.facet_masks());
      }
      std::size_t o = 0;
      while (o < pick.size() && ++pick[o] == options[o].size()) pick[o++] = 0;
      if (o == pick.size()) break;
    }
  };

  std::function<void(std::size_t)> assign = [&](std::size_t v) {
    if (v == rep.size()) {
      complete();
      return;
    }
    for (bool main : {true, false}) {
      const auto saved = adj;
      bool ok = true;
      for (std::size_t s : {rep[v], partner[v]}) {
        choice[s] = main;
        const Simplex d = sq[s].diagonal(main);
        const int x = index(d[0]), y = index(d[1]);
        adj[static_cast<std::size_t>(x)] |= static_cast<std::uint16_t>(1u << y);
        adj[static_cast<std::size_t>(y)] |= static_cast<std::uint16_t>(1u << x);
      }
      for (std::size_t s : {rep[v], partner[v]}) {
        const Simplex d = sq[s].diagonal(main);
        // Only the endpoints of a new edge gain neighbours.
        ok = ok && vertex_ok(index(d[0])) && vertex_ok(index(d[1]));
      }
      if (ok) assign(v + 1);
      adj = saved;
    }
  };
  assign(0);

  for (const auto& masks : results) out.results.push_back(SimplicialComplex::from_masks(labels, masks));
  std::sort(out.results.begin(), out.results.end(),
            [](const SimplicialComplex& x, const SimplicialComplex& y) { return x.facets() < y.facets(); });
  return out;
}

std::vector<SimplicialComplex> enumerate_equivariant_pure_subdivisions() {
  return search_equivariant_pure_subdivisions().results;
}

long long QuotientCellCensus::total() const {
  long long t = 0;
  for (long long c : counts.counts) t += c;
  return t;
}

long long QuotientCellCensus::alternating_sum() const { return counts.euler_characteristic(); }

QuotientCellCensus cw_quotient_census() {
  QuotientCellCensus out;
  const auto p = build_product_cell_complex();
  std::vector<long long> n(5, 0);
  for (const auto& c : p.cells()) {
    const auto t = c.transposed();
    if (t < c) continue;
    const bool fixed = t == c;
    const auto d = static_cast<std::size_t>(c.dim());
    if (d == 2 && fixed) {
      // E x E folds onto half of itself, which lies inside the image of a 3-cell.
      out.folded_2cells.push_back(c);
      continue;
    }
    ++n[d];
    if (d == 4) ++(fixed ? out.regular_4cells : out.singular_4cells);
  }
  out.counts = FaceVector(std::move(n));
  return out;
}

bool quotient_refines_cells(const SimplicialComplex& k, const SimplicialComplex& quotient) {
  std::set<Simplex> images;
  for (const auto& f : k.facets()) {
    const auto cell = ProductCellComplex::minimal_cell(f);
    if (!cell || cell->dim() != 4) continue;
    std::vector<Label> img;
    for (const auto& l : f) img.push_back(Label::pair(std::min(l.first(), l.second()), std::max(l.first(), l.second())));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() == f.size()) images.emplace(std::move(img));
  }
  const auto facets = quotient.facets();
  return !facets.empty() && std::all_of(facets.begin(), facets.end(),
                                        [&images](const Simplex& f) { return images.count(f) > 0; });
}

}  // namespace simpcx
