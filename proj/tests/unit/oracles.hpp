#pragma once

// Brute-force reference computations that share no code with the library
// beyond reading labels out of facets.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "simpcx/complex.hpp"
#include "simpcx/homology.hpp"

namespace oracle {

using Face = std::vector<std::string>;

inline std::vector<Face> facet_strings(const simpcx::SimplicialComplex& k) {
  std::vector<Face> out;
  for (const auto& f : k.facets()) {
    Face s;
    for (const auto& l : f) s.push_back(l.str());
    out.push_back(s);
  }
  return out;
}

// Every nonempty subset of every facet.
inline std::set<Face> all_faces(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const auto& f : facets) {
    const unsigned n = static_cast<unsigned>(f.size());
    for (unsigned m = 1; m < (1u << n); ++m) {
      Face s;
      for (unsigned i = 0; i < n; ++i) {
        if (m >> i & 1) s.push_back(f[i]);
      }
      out.insert(s);
    }
  }
  return out;
}

inline std::vector<long long> f_vector(const simpcx::SimplicialComplex& k) {
  std::vector<long long> out;
  for (const auto& f : all_faces(facet_strings(k))) {
    if (out.size() < f.size()) out.resize(f.size(), 0);
    ++out[f.size() - 1];
  }
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// f-vector of a join from the factors: with f_{-1} = 1 on both sides,
// f_k(X * Y) = sum_{i + j = k - 1} f_i(X) f_j(Y).
inline std::vector<long long> join_f_vector(const std::vector<long long>& x, const std::vector<long long>& y) {
  std::vector<long long> a{1}, b{1};
  a.insert(a.end(), x.begin(), x.end());
  b.insert(b.end(), y.begin(), y.end());
  std::vector<long long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return {c.begin() + 1, c.end()};
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k
// minors, s_k = d_k / d_{k-1}. Exponential; only for tiny matrices.
inline long long det(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    out += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<long long> invariant_factors(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<long long>> sub;
        for (auto r : rs) {
          std::vector<long long> row;
          for (auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::abs(det(sub)));
      }
    }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
