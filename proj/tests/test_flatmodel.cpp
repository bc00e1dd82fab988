#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "hypcolor/flatmodel.hpp"

using namespace hypcolor;

namespace {

std::vector<std::set<int>> skeleton(const FlatComplex& fc) {
  std::vector<std::set<int>> adj(fc.vertex_count());
  for (const auto& t : fc.triangles) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)], b = t[static_cast<std::size_t>((k + 1) % 3)];
      adj[static_cast<std::size_t>(a)].insert(b);
      adj[static_cast<std::size_t>(b)].insert(a);
    }
  }
  return adj;
}

}  // namespace

TEST_SUITE("flatmodel") {

TEST_CASE("ring recurrence values") {
  CHECK(flat_ring_sizes(6, 4) == std::vector<std::size_t>{1, 6, 12, 18, 24});
  CHECK(flat_ring_sizes(7, 5) == std::vector<std::size_t>{1, 7, 21, 56, 147, 385});
  CHECK(flat_ring_sizes(9, 3) == std::vector<std::size_t>{1, 9, 45, 216});
}

TEST_CASE("patch rings, distances and Euler characteristic") {
  for (auto [n, depth] : {std::pair{6, 5}, std::pair{7, 5}, std::pair{8, 4}, std::pair{9, 4}, std::pair{12, 3}}) {
    CAPTURE(n);
    CAPTURE(depth);
    const FlatComplex fc = build_flat_patch(n, depth);
    CHECK(fc.ring_sizes() == flat_ring_sizes(n, depth));
    const auto adj = skeleton(fc);
    // Ring label equals graph distance from the base vertex.
    std::vector<int> dist(fc.vertex_count(), -1);
    std::vector<int> queue{0};
    dist[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int u : adj[static_cast<std::size_t>(queue[h])]) {
        if (dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(queue[h])] + 1;
          queue.push_back(u);
        }
      }
    }
    CHECK(dist == fc.ring);
    // A triangulated disk: V - E + F = 1, and each oriented edge occurs once.
    std::size_t edges = 0;
    for (const auto& s : adj) edges += s.size();
    edges /= 2;
    const auto v = static_cast<long long>(fc.vertex_count());
    CHECK(v - static_cast<long long>(edges) + static_cast<long long>(fc.triangles.size()) == 1);
    std::set<std::pair<int, int>> directed;
    for (const auto& t : fc.triangles) {
      for (int k = 0; k < 3; ++k) {
        CHECK(directed.insert({t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % 3)]}).second);
      }
    }
    // Complete vertices: n neighbours, consecutive ones adjacent, cyclic.
    for (std::size_t x = 0; x < fc.vertex_count(); ++x) {
      if (!fc.complete(static_cast<int>(x))) continue;
      const auto& rot = fc.rotation[x];
      REQUIRE(rot.size() == static_cast<std::size_t>(n));
      CHECK(std::set<int>(rot.begin(), rot.end()) == adj[x]);
      for (std::size_t k = 0; k < rot.size(); ++k) {
        CHECK(directed.count({rot[k], rot[(k + 1) % rot.size()]}) == 1);
      }
    }
  }
}

TEST_CASE("patch argument checks") {
  CHECK_THROWS_AS(build_flat_patch(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_flat_patch(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(build_flat_patch(12, 6, 1000), std::length_error);
  CHECK(build_flat_patch(7, 0).vertex_count() == 1);
}

TEST_CASE("certificates for admissible parameters") {
  for (auto [q, n] : {std::pair{3, 9}, std::pair{3, 12}, std::pair{4, 12}, std::pair{2, 6}, std::pair{3, 10}}) {
    CAPTURE(q);
    CAPTURE(n);
    const EmbeddingMap m = embed_tree(q, n, 3);
    // q (q-1)^k tree vertices at depth k >= 1.
    std::size_t expected = 1, layer = static_cast<std::size_t>(q);
    for (int k = 1; k <= 3; ++k, layer *= static_cast<std::size_t>(q - 1)) expected += layer;
    CHECK(m.image.size() == expected);
    const CertificateResult cert = check_angle_certificate(m);
    CHECK(cert.ok);
    CHECK(cert.injective);
    CHECK(cert.minGap >= 2);
    // Depth of the image equals depth in the tree.
    for (std::size_t t = 0; t < m.image.size(); ++t) {
      CHECK(m.complex.ring[static_cast<std::size_t>(m.image[t])] == m.treeDepth[t]);
    }
  }
  CHECK_THROWS_AS(embed_tree(4, 9, 3), std::invalid_argument);
  CHECK_THROWS_AS(embed_tree(1, 9, 3), std::invalid_argument);
}

TEST_CASE("mutations fail the certificate") {
  SUBCASE("adjacent image edges") {
    EmbeddingMap m = embed_tree(3, 9, 2);
    // Move the root's second child onto the rotation slot next to the first.
    const auto& rot = m.complex.rotation[0];
    m.image[2] = rot[static_cast<std::size_t>((m.complex.position(0, m.image[1]) + 1) % 9)];
    const CertificateResult cert = check_angle_certificate(m);
    CHECK_FALSE(cert.ok);
    CHECK(cert.minGap < 2);
  }
  SUBCASE("non-edge") {
    EmbeddingMap m = embed_tree(3, 9, 2);
    m.image.back() = m.image[1];
    const CertificateResult cert = check_angle_certificate(m);
    CHECK_FALSE(cert.ok);
  }
  SUBCASE("collision") {
    EmbeddingMap m = embed_tree(3, 12, 3);
    // Two leaves sharing an image while keeping their own edges valid is
    // impossible here, so collide a leaf with a vertex of its own edge.
    const int leaf = static_cast<int>(m.image.size()) - 1;
    m.image[static_cast<std::size_t>(leaf - 1)] = m.image[static_cast<std::size_t>(leaf)];
    const CertificateResult cert = check_angle_certificate(m);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.injective);
  }
}

TEST_CASE("embedding csv") {
  const EmbeddingMap m = embed_tree(3, 9, 1);
  std::ostringstream out;
  write_embedding(m, out);
  CHECK(out.str() == "treeVertex,complexVertex\n0,0\n1," + std::to_string(m.image[1]) + "\n2," +
                         std::to_string(m.image[2]) + "\n3," + std::to_string(m.image[3]) + "\n");
}

}  // TEST_SUITE
