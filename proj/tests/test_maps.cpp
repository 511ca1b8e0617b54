#include <doctest.h>

#include "combstat/maps.hpp"

using namespace combstat;

namespace {

BinaryTree L() { return BinaryTree::leaf(); }
BinaryTree N(const BinaryTree& a, const BinaryTree& b) { return BinaryTree::node(a, b); }

BinaryTree two_sided_example() { return N(N(N(L(), L()), N(L(), L())), N(L(), L())); }

}  // namespace

TEST_CASE("plane tree to dyck path") {
  PlaneTree t = PlaneTree::from_degrees({3, 0, 1, 0, 2, 0, 0});
  DyckPath p = plane_to_dyck(t);
  CHECK(p.steps() == "UDUUDDUUDUDD");
  CHECK(dyck_to_plane(p) == t);
  CHECK(returns(p) == t.root_degree());
  CHECK(initial_run(p) == 1);
}

TEST_CASE("binary tree to dyck path along right and left edges") {
  BinaryTree t = two_sided_example();
  DyckPath fr = binary_to_dyck(t, true);
  DyckPath fl = binary_to_dyck(t, false);
  CHECK(fr.steps() == "UDUUDDUUDD");
  CHECK(fl.steps() == "UUUDDUDDUD");
  CHECK(dyck_to_binary(fr, true) == t);
  CHECK(dyck_to_binary(fl, false) == t);
  // leftmost leaf depth is 3
  CHECK(statistic_vector(t, StatisticId::BinaryLeafDepth).values.front() == 3);
  CHECK(initial_run(fl) == 3);
}

TEST_CASE("increasing tree and permutation") {
  Permutation w{7, 8, 2, 3, 6, 1, 5, 4};
  IncreasingBinaryTree t = permutation_to_increasing(w);
  CHECK(t.labels() == std::vector<int>{1, 2, 7, 8, 3, 6, 4, 5});
  CHECK(t.shape() == N(N(N(L(), N(L(), L())), N(L(), N(L(), L()))), N(N(L(), L()), L())));
  CHECK(increasing_to_permutation(t) == w);
  CHECK(encode_image(apply_bijection(BijectionId::IncreasingToPermutation, t)) == "78236154");
  CHECK_THROWS(permutation_to_increasing({1, 1, 2}));
}

TEST_CASE("triangulation of a small tree") {
  MapImage img = apply_bijection(BijectionId::BinaryToTriangulation, N(N(L(), L()), L()));
  const auto& s = std::get<PolygonSubdivision>(std::get<CombObject>(img));
  CHECK(s.vertex_count() == 4);
  CHECK(s.diagonals().size() == 1);
  CHECK(std::get<BinaryTree>(invert_bijection(BijectionId::BinaryToTriangulation, img)) == N(N(L(), L()), L()));
}

TEST_CASE("registry lookups and domain checks") {
  CHECK(parse_bijection("binary-to-dyck-fl") == BijectionId::BinaryToDyckFL);
  CHECK_THROWS(parse_bijection("dyck-to-binary"));
  CHECK_THROWS_AS(apply_bijection(BijectionId::PlaneToDyck, DyckPath("UD")), FamilyMismatch);
  CHECK_THROWS_AS(invert_bijection(BijectionId::PlaneToDyck, MapImage(Permutation{1})), FamilyMismatch);
  CHECK(find_correspondence("root-degree/returns").bijection == BijectionId::PlaneToDyck);
  CHECK_THROWS(find_correspondence("nothing"));
}

TEST_CASE("roundtrips and bijectivity for small sizes") {
  for (const auto& b : all_bijections()) {
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(b.name);
      CAPTURE(n);
      CHECK(roundtrip_check(b.id, n).passed);
      CHECK(bijectivity_check(b.id, n).passed);
    }
  }
}

TEST_CASE("statistics transport through the bijections") {
  for (const auto& c : all_correspondences()) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(c.id);
      CAPTURE(n);
      MapReport r = transport_check(c, n);
      CHECK(r.passed);
      CHECK(r.objects > 0);
    }
  }
}

TEST_CASE("permutations") {
  CHECK(all_permutations(4).size() == 24);
  CHECK(all_permutations(0).size() == 1);
}
