#include "infgraph/gallai.hpp"

#include <algorithm>

namespace infgraph {

GallaiPartition gallai_partition(const Multigraph& h) {
  const std::size_t n = h.node_count;
  // Augmented matrix rows over GF(2); column n is the right-hand side.
  std::vector<std::vector<char>> rows(n, std::vector<char>(n + 1, 0));
  for (const auto& l : h.links) {
    if (l.a == l.b) continue;
    rows[l.a][l.a] ^= 1;
    rows[l.b][l.b] ^= 1;
    rows[l.a][l.b] ^= 1;
    rows[l.b][l.a] ^= 1;
    rows[l.a][n] ^= 1;
    rows[l.b][n] ^= 1;
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(), [c](const auto& row) { return row[c]; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && rows[i][c])
        for (std::size_t j = c; j <= n; ++j) rows[i][j] ^= rows[r][j];
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (rows[i][n]) throw GraphError("Gallai system is inconsistent");

  GallaiPartition out;
  out.side.assign(n, false);
  for (std::size_t i = 0; i < r; ++i) out.side[pivot_col[i]] = rows[i][n] != 0;
  for (const auto& l : h.links) {
    if (out.side[l.a] != out.side[l.b])
      out.cut.insert(l.edge);
    else
      out.even.insert(l.edge);
  }
  return out;
}

GallaiPartition gallai_partition(const FiniteGraph& h) {
  Multigraph m;
  m.node_count = static_cast<std::size_t>(*h.vertex_count());
  for (const auto& e : h.edges()) m.links.push_back({static_cast<std::size_t>(e.lo.index), static_cast<std::size_t>(e.hi.index), e});
  return gallai_partition(m);
}

}  // namespace infgraph
