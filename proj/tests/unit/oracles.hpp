#pragma once

// Slow reference implementations on plain vectors. None of these call into
// the library, so agreement with it is meaningful.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Adj = std::vector<std::vector<bool>>;
using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
using Lists = std::vector<std::vector<std::size_t>>;

inline Adj adjacency(std::size_t n, const Edges& edges) {
  Adj a(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = true;
  return a;
}

constexpr int kInf = 1 << 20;

inline std::vector<std::vector<int>> floyd(const Adj& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Rounds needed to burn everything with this sequence, sources placed first,
// fire spreading from the previous round's burned set; -1 if some source is
// already burned or the sequence runs out first.
inline int burn_rounds(const Adj& a, const std::vector<std::size_t>& seq) {
  const std::size_t n = a.size();
  std::vector<bool> burned(n, false);
  for (std::size_t t = 0; t < seq.size(); ++t) {
    std::vector<bool> next = burned;
    if (burned[seq[t]]) return -1;
    next[seq[t]] = true;
    for (std::size_t u = 0; u < n; ++u)
      if (burned[u])
        for (std::size_t v = 0; v < n; ++v)
          if (a[u][v]) next[v] = true;
    burned = next;
    if (std::all_of(burned.begin(), burned.end(), [](bool b) { return b; }))
      return static_cast<int>(t + 1);
  }
  return -1;
}

inline bool any_sequence(const Adj& a, std::size_t k, std::vector<std::size_t>& seq) {
  if (seq.size() == k) return burn_rounds(a, seq) == static_cast<int>(k);
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
    seq.push_back(v);
    const bool ok = any_sequence(a, k, seq);
    seq.pop_back();
    if (ok) return true;
  }
  return false;
}

// Smallest k such that some sequence of k distinct sources burns the graph in
// exactly k rounds.
inline std::size_t burning_number(const Adj& a) {
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> seq;
    if (any_sequence(a, k, seq)) return k;
  }
}

// Lazy burning closure from a bitmask. vacuous: any hyperedge fires; strict:
// only hyperedges with at least two members.
inline std::uint64_t lazy_closure(std::size_t n, const Lists& edges, std::uint64_t burned,
                                  bool vacuous) {
  (void)n;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : edges) {
      if (!vacuous && e.size() < 2) continue;
      std::size_t open = 0;
      std::size_t last = 0;
      for (std::size_t v : e)
        if (!((burned >> v) & 1U)) {
          ++open;
          last = v;
        }
      if (open == 1) {
        burned |= std::uint64_t{1} << last;
        changed = true;
      }
    }
  }
  return burned;
}

inline std::uint64_t full(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline std::size_t popcount(std::uint64_t x) { return static_cast<std::size_t>(__builtin_popcountll(x)); }

inline std::size_t lazy_number(std::size_t n, const Lists& edges, bool vacuous) {
  std::size_t best = n;
  for (std::uint64_t s = 0; s <= full(n); ++s)
    if (popcount(s) < best && lazy_closure(n, edges, s, vacuous) == full(n)) best = popcount(s);
  return best;
}

inline std::uint64_t force_closure(const Adj& a, std::uint64_t blue) {
  const std::size_t n = a.size();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!((blue >> u) & 1U)) continue;
      std::size_t white = 0;
      std::size_t last = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][v] && !((blue >> v) & 1U)) {
          ++white;
          last = v;
        }
      if (white == 1) {
        blue |= std::uint64_t{1} << last;
        changed = true;
      }
    }
  }
  return blue;
}

inline std::size_t zero_forcing_number(const Adj& a) {
  const std::size_t n = a.size();
  std::size_t best = n;
  for (std::uint64_t s = 0; s <= full(n); ++s)
    if (popcount(s) < best && force_closure(a, s) == full(n)) best = popcount(s);
  return best;
}

// Fraction-free Gaussian elimination (Bareiss) on a square integer matrix.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  __int128 sign = 1;
  __int128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// det(xI - A) for a 0/1 adjacency matrix.
inline __int128 char_value(const Adj& a, long long x) {
  const std::size_t n = a.size();
  std::vector<std::vector<__int128>> m(n, std::vector<__int128>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? x : 0) - (a[i][j] ? 1 : 0);
  return bareiss_det(m);
}

}  // namespace oracle
