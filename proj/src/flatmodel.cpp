#include "hypcolor/flatmodel.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypcolor {

namespace {

// Counter-clockwise neighbor orders from the oriented triangles: in triangle
// (a, b, c) the neighbor c follows b around a.
std::vector<std::vector<int>> rotations(std::size_t vertexCount, const std::vector<std::array<int, 3>>& tris) {
  std::vector<std::map<int, int>> next(vertexCount);
  for (const auto& t : tris) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)];
      const int b = t[static_cast<std::size_t>((k + 1) % 3)];
      const int c = t[static_cast<std::size_t>((k + 2) % 3)];
      next[static_cast<std::size_t>(a)][b] = c;
    }
  }
  std::vector<std::vector<int>> out(vertexCount);
  for (std::size_t v = 0; v < vertexCount; ++v) {
    const auto& nx = next[v];
    if (nx.empty()) continue;
    // Open fans start at the neighbor nobody points to.
    int start = nx.begin()->first;
    std::map<int, int> indeg;
    for (const auto& [b, c] : nx) indeg[c]++;
    for (const auto& [b, c] : nx) {
      if (!indeg.count(b)) {
        start = b;
        break;
      }
    }
    int cur = start;
    do {
      out[v].push_back(cur);
      const auto it = nx.find(cur);
      if (it == nx.end()) break;
      cur = it->second;
    } while (cur != start);
  }
  return out;
}

}  // namespace

int FlatComplex::position(int v, int u) const {
  const auto& r = rotation[static_cast<std::size_t>(v)];
  const auto it = std::find(r.begin(), r.end(), u);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

std::vector<std::size_t> FlatComplex::ring_sizes() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(depth + 1), 0);
  for (int r : ring) out[static_cast<std::size_t>(r)]++;
  return out;
}

std::vector<std::size_t> flat_ring_sizes(int n, int depth) {
  std::vector<std::size_t> a{1};
  if (depth >= 1) a.push_back(static_cast<std::size_t>(n));
  if (depth >= 2) a.push_back(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 4));
  for (int k = 3; k <= depth; ++k) {
    const auto m = static_cast<std::size_t>(n - 4);
    a.push_back(m * a[static_cast<std::size_t>(k - 1)] - a[static_cast<std::size_t>(k - 2)]);
  }
  return a;
}

FlatComplex build_flat_patch(int n, int depth, std::size_t vertexCap) {
  if (n < 6) throw std::invalid_argument("build_flat_patch: n must be >= 6");
  if (depth < 0 || depth > 6) throw std::invalid_argument("build_flat_patch: depth must be in [0, 6]");
  const auto expected = flat_ring_sizes(n, depth);
  std::size_t total = 0;
  for (auto s : expected) total += s;
  if (total > vertexCap) {
    throw std::length_error("build_flat_patch: " + std::to_string(total) + " vertices exceed the cap");
  }

  FlatComplex fc;
  fc.n = n;
  fc.depth = depth;
  fc.ring.push_back(0);
  std::vector<int> triCount{0};
  auto add_vertex = [&](int r) {
    fc.ring.push_back(r);
    triCount.push_back(0);
    return static_cast<int>(fc.ring.size() - 1);
  };
  auto add_triangle = [&](int a, int b, int c) {
    fc.triangles.push_back({a, b, c});
    for (int v : {a, b, c}) triCount[static_cast<std::size_t>(v)]++;
  };

  std::vector<int> cycle;
  if (depth >= 1) {
    for (int k = 0; k < n; ++k) cycle.push_back(add_vertex(1));
    for (int k = 0; k < n; ++k) add_triangle(0, cycle[static_cast<std::size_t>(k)], cycle[static_cast<std::size_t>((k + 1) % n)]);
  }

  for (int r = 1; r < depth; ++r) {
    // Outside the ring cycle x_1..x_L: one triangle on every ring edge, and a
    // fan of n - t - 3 fresh vertices at each x, where t is its current
    // triangle count. The next ring reads own(x_1), apex(x_1 x_2), own(x_2), ...
    const std::size_t len = cycle.size();
    std::vector<std::vector<int>> own(len);
    std::vector<int> apex(len);
    std::vector<int> next;
    for (std::size_t i = 0; i < len; ++i) {
      const int extra = n - triCount[static_cast<std::size_t>(cycle[i])] - 3;
      if (extra < 0) throw std::logic_error("build_flat_patch: ring vertex already over-full");
      for (int e = 0; e < extra; ++e) {
        own[i].push_back(add_vertex(r + 1));
        next.push_back(own[i].back());
      }
      apex[i] = add_vertex(r + 1);
      next.push_back(apex[i]);
    }
    for (std::size_t i = 0; i < len; ++i) {
      const int x = cycle[i];
      add_triangle(cycle[(i + 1) % len], x, apex[i]);
      std::vector<int> fan{apex[(i + len - 1) % len]};
      fan.insert(fan.end(), own[i].begin(), own[i].end());
      fan.push_back(apex[i]);
      for (std::size_t j = 0; j + 1 < fan.size(); ++j) add_triangle(x, fan[j], fan[j + 1]);
    }
    cycle = std::move(next);
  }

  fc.rotation = rotations(fc.ring.size(), fc.triangles);
  for (std::size_t v = 0; v < fc.ring.size(); ++v) {
    if (fc.complete(static_cast<int>(v)) && (triCount[v] != n || fc.rotation[v].size() != static_cast<std::size_t>(n))) {
      throw std::logic_error("build_flat_patch: interior vertex without full valence");
    }
  }
  return fc;
}

EmbeddingMap embed_tree(int q, int n, int depth) {
  if (q < 2) throw std::invalid_argument("embed_tree: q must be >= 2");
  if (n < 6) throw std::invalid_argument("embed_tree: n must be >= 6");
  if (q > n / 3) {
    throw std::invalid_argument("embed_tree: q = " + std::to_string(q) + " exceeds floor(n/3) = " + std::to_string(n / 3));
  }
  if (depth < 0) throw std::invalid_argument("embed_tree: depth must be >= 0");

  EmbeddingMap m;
  m.q = q;
  m.n = n;
  m.depth = depth;
  // The image of a tree vertex at depth k lies within k steps of the base,
  // so a patch of the same depth has every vertex we branch from complete.
  m.complex = build_flat_patch(n, std::max(depth, 1));
  const int s = n / q;
  const auto& rot = m.complex.rotation;

  m.parent.push_back(-1);
  m.treeDepth.push_back(0);
  m.image.push_back(0);
  for (std::size_t t = 0; t < m.image.size(); ++t) {
    if (m.treeDepth[t] >= depth) continue;
    const int v = m.image[t];
    const auto& r = rot[static_cast<std::size_t>(v)];
    std::vector<int> slots;
    if (m.parent[t] < 0) {
      for (int j = 0; j < q; ++j) slots.push_back(s * j);
    } else {
      const int back = m.complex.position(v, m.image[static_cast<std::size_t>(m.parent[t])]);
      for (int j = 1; j < q; ++j) slots.push_back((back + s * j) % n);
    }
    for (int pos : slots) {
      m.parent.push_back(static_cast<int>(t));
      m.treeDepth.push_back(m.treeDepth[t] + 1);
      m.image.push_back(r[static_cast<std::size_t>(pos)]);
    }
  }
  return m;
}

CertificateResult check_angle_certificate(const EmbeddingMap& map) {
  CertificateResult res;
  res.ok = true;
  res.minGap = map.n;
  const std::size_t count = map.image.size();

  std::vector<std::vector<int>> treeNbrs(count);
  for (std::size_t t = 1; t < count; ++t) {
    const int p = map.parent[t];
    treeNbrs[t].push_back(p);
    treeNbrs[static_cast<std::size_t>(p)].push_back(static_cast<int>(t));
  }

  std::vector<int> sorted(map.image);
  std::sort(sorted.begin(), sorted.end());
  res.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  for (std::size_t t = 0; t < count && res.ok; ++t) {
    const int v = map.image[t];
    std::vector<int> positions;
    for (int u : treeNbrs[t]) {
      const int pos = map.complex.position(v, map.image[static_cast<std::size_t>(u)]);
      if (pos < 0) {
        res.ok = false;
        res.witness = static_cast<int>(t);
        break;
      }
      positions.push_back(pos);
    }
    if (!res.ok || map.treeDepth[t] >= map.depth || positions.size() < 2) continue;
    std::sort(positions.begin(), positions.end());
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const int a = positions[k];
      const int b = k + 1 < positions.size() ? positions[k + 1] : positions[0] + map.n;
      const int gap = b - a - 1;
      res.minGap = std::min(res.minGap, gap);
      if (gap < 2) {
        res.ok = false;
        res.witness = static_cast<int>(t);
        break;
      }
    }
  }
  res.ok = res.ok && res.injective;
  return res;
}

void write_embedding(const EmbeddingMap& map, std::ostream& out) {
  out << "treeVertex,complexVertex\n";
  for (std::size_t t = 0; t < map.image.size(); ++t) out << t << ',' << map.image[t] << '\n';
}

}  // namespace hypcolor
