#include "simpcx/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace simpcx {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("IntMatrix: ragged rows");
    for (long long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("IntMatrix: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& v = (*this)(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += v * rhs(k, j);
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const BigInt& v) { return v.is_zero(); });
}

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

// Moves the smallest nonzero |entry| of the block [t.., t..] to (t, t).
bool bring_min_pivot(IntMatrix& a, std::size_t t) {
  std::size_t br = 0, bc = 0;
  BigInt best = 0;
  for (std::size_t r = t; r < a.rows(); ++r) {
    for (std::size_t c = t; c < a.cols(); ++c) {
      const BigInt& v = a(r, c);
      if (v.is_zero()) continue;
      BigInt av = abs(v);
      if (best.is_zero() || av < best) {
        best = av;
        br = r;
        bc = c;
        if (best == 1) goto found;
      }
    }
  }
  if (best.is_zero()) return false;
found:
  swap_rows(a, t, br);
  swap_cols(a, t, bc);
  return true;
}

SmithForm snf_min_pivot(IntMatrix a) {
  SmithForm out;
  const std::size_t n = std::min(a.rows(), a.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    if (!bring_min_pivot(a, t)) break;
    for (;;) {
      bool clean = true;
      std::vector<std::size_t> nz_cols;
      for (std::size_t c = t; c < a.cols(); ++c) {
        if (!a(t, c).is_zero()) nz_cols.push_back(c);
      }
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t).is_zero()) continue;
        const BigInt q = a(r, t) / a(t, t);
        for (std::size_t c : nz_cols) a(r, c) -= q * a(t, c);
        if (!a(r, t).is_zero()) clean = false;
      }
      std::vector<std::size_t> nz_rows;
      for (std::size_t r = t; r < a.rows(); ++r) {
        if (!a(r, t).is_zero()) nz_rows.push_back(r);
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c).is_zero()) continue;
        const BigInt q = a(t, c) / a(t, t);
        for (std::size_t r : nz_rows) a(r, c) -= q * a(r, t);
        if (!a(t, c).is_zero()) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move the smallest entry of
        // row t / column t into the pivot position and repeat.
        std::size_t br = t, bc = t;
        BigInt best = abs(a(t, t));
        for (std::size_t r = t + 1; r < a.rows(); ++r) {
          if (!a(r, t).is_zero() && abs(a(r, t)) < best) best = abs(a(r, t)), br = r, bc = t;
        }
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!a(t, c).is_zero() && abs(a(t, c)) < best) best = abs(a(t, c)), br = t, bc = c;
        }
        swap_rows(a, t, br);
        swap_cols(a, t, bc);
        continue;
      }
      // Row t and column t are clear; enforce divisibility of the rest.
      bool divides = true;
      for (std::size_t r = t + 1; r < a.rows() && divides; ++r) {
        for (std::size_t c = t + 1; c < a.cols(); ++c) {
          if (!a(r, c).is_zero() && BigInt(a(r, c) % a(t, t)) != 0) {
            for (std::size_t cc = t; cc < a.cols(); ++cc) a(t, cc) += a(r, cc);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs(a(i, i)));
  out.rank = t;
  return out;
}

struct Bezout {
  BigInt g, x, y;
};

// g = x*a + y*b = gcd(a, b) >= 0, with y = 0 whenever a divides b.
Bezout ext_gcd(const BigInt& a, const BigInt& b) {
  if (!a.is_zero() && BigInt(b % a) == 0) return {abs(a), a < 0 ? BigInt(-1) : BigInt(1), BigInt(0)};
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    const BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void bezout_row_echelon(IntMatrix& a) {
  std::size_t p = 0;
  for (std::size_t c = 0; c < a.cols() && p < a.rows(); ++c) {
    std::size_t r0 = p;
    while (r0 < a.rows() && a(r0, c).is_zero()) ++r0;
    if (r0 == a.rows()) continue;
    swap_rows(a, p, r0);
    for (std::size_t r = p + 1; r < a.rows(); ++r) {
      if (a(r, c).is_zero()) continue;
      const BigInt pa = a(p, c), rb = a(r, c);
      const Bezout e = ext_gcd(pa, rb);
      const BigInt u = pa / e.g, v = rb / e.g;
      for (std::size_t cc = c; cc < a.cols(); ++cc) {
        const BigInt top = a(p, cc), bot = a(r, cc);
        a(p, cc) = e.x * top + e.y * bot;
        a(r, cc) = u * bot - v * top;
      }
    }
    ++p;
  }
}

bool is_diagonal(const IntMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c && !a(r, c).is_zero()) return false;
    }
  }
  return true;
}

SmithForm snf_bezout(IntMatrix a) {
  while (!is_diagonal(a)) {
    bezout_row_echelon(a);
    if (is_diagonal(a)) break;
    a = a.transposed();
  }
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) {
    if (!a(i, i).is_zero()) d.push_back(abs(a(i, i)));
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const BigInt g = gcd(d[i], d[j]);
      const BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  SmithForm out;
  out.rank = d.size();
  out.invariant_factors = std::move(d);
  return out;
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m, SnfMethod method) {
  return method == SnfMethod::min_pivot ? snf_min_pivot(std::move(m)) : snf_bezout(std::move(m));
}

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  const auto cols = k.faces(d);
  const auto rows = d >= 1 ? k.faces(d - 1) : std::vector<Simplex>{};
  IntMatrix out(rows.size(), cols.size());
  if (rows.empty()) return out;
  std::unordered_map<VertexMask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[*k.mask_of(rows[i])] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const VertexMask m = *k.mask_of(cols[j]);
    int pos = 0;
    // Vertex table order agrees with label order, so bit order is position order.
    for (VertexMask rest = m; rest; rest &= rest - 1, ++pos) {
      const VertexMask face = m & ~(rest & -rest);
      out(row_index.at(face), j) = pos % 2 == 0 ? 1 : -1;
    }
  }
  return out;
}

std::string HomologyGroup::str() const {
  std::string out;
  if (betti == 1) out = "Z";
  if (betti > 1) out = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) out += (out.empty() ? "Z/" : " + Z/") + t.str();
  return out.empty() ? "0" : out;
}

std::vector<long long> HomologyGroups::betti() const {
  std::vector<long long> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

long long HomologyGroups::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * groups[i].betti;
  return chi;
}

std::string HomologyGroups::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (i) out += ", ";
    out += groups[i].str();
  }
  return out + ")";
}

HomologyGroups homology(const SimplicialComplex& k, SnfMethod method) {
  HomologyGroups out;
  const int top = k.dim();
  if (top < 0) return out;
  std::vector<SmithForm> snf(top + 2);  // snf[d] for the boundary map out of dimension d
  for (int d = 1; d <= top; ++d) snf[d] = smith_normal_form(boundary_matrix(k, d), method);
  const auto f = k.f_vector();
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.betti = f.counts[d] - static_cast<long long>(snf[d].rank) - static_cast<long long>(snf[d + 1].rank);
    for (const auto& t : snf[d + 1].invariant_factors) {
      if (t > 1) g.torsion.push_back(t);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

long long euler_characteristic(const SimplicialComplex& k) { return k.f_vector().euler_characteristic(); }

bool is_homology_sphere(const SimplicialComplex& k, int d) {
  if (d < -1) return false;
  if (d == -1) return k == SimplicialComplex::empty_simplex();
  if (k.dim() != d) return false;
  const auto h = homology(k);
  for (int i = 0; i <= d; ++i) {
    const auto& g = h.groups[i];
    if (!g.torsion.empty()) return false;
    long long want = 0;
    if (d == 0) want = 2;
    else if (i == 0 || i == d) want = 1;
    if (g.betti != want) return false;
  }
  return true;
}

bool is_acyclic(const SimplicialComplex& k) {
  if (k.dim() < 0) return false;
  const auto h = homology(k);
  for (std::size_t i = 0; i < h.groups.size(); ++i) {
    if (!h.groups[i].torsion.empty() || h.groups[i].betti != (i == 0 ? 1 : 0)) return false;
  }
  return true;
}

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    default: return "undetermined";
  }
}

bool ManifoldReport::all_links_homology_spheres() const {
  return std::all_of(links.begin(), links.end(), [](const auto& l) { return l.link_is_homology_sphere; });
}

bool ManifoldReport::all_links_reduced() const {
  return std::all_of(links.begin(), links.end(),
                     [](const auto& l) { return l.reduced_to_boundary_simplex == Tristate::yes; });
}

}  // namespace simpcx
