#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "combstat/objects.hpp"

namespace combstat {

enum class BijectionId {
  PlaneToDyck,
  BinaryToDyckFR,
  BinaryToDyckFL,
  BinaryToTriangulation,
  SchroederToDissection,
  IncreasingToPermutation,
};

// Codomain of a bijection: a family object or a permutation.
using MapImage = std::variant<CombObject, Permutation>;

struct BijectionInfo {
  BijectionId id;
  std::string_view name;
  Family domain;
  std::optional<Family> codomain;  // nullopt for permutations
};

const std::vector<BijectionInfo>& all_bijections();
const BijectionInfo& bijection_info(BijectionId id);
BijectionId parse_bijection(std::string_view name);

MapImage apply_bijection(BijectionId bij, const CombObject& obj);
CombObject invert_bijection(BijectionId bij, const MapImage& img);

DyckPath plane_to_dyck(const PlaneTree& t);
PlaneTree dyck_to_plane(const DyckPath& p);
// Preorder edge walk emitting U/D only on edges towards the given side.
DyckPath binary_to_dyck(const BinaryTree& t, bool right_edges);
BinaryTree dyck_to_binary(const DyckPath& p, bool right_edges);
Permutation increasing_to_permutation(const IncreasingBinaryTree& t);
IncreasingBinaryTree permutation_to_increasing(const Permutation& w);

std::string encode_image(const MapImage& img);

// Path statistics used by the transports.
int initial_run(const DyckPath& p);
int returns(const DyckPath& p);

struct Correspondence {
  std::string_view id;
  BijectionId bijection;
  std::string_view description;
  std::function<std::vector<int>(const CombObject&)> source;
  std::function<std::vector<int>(const MapImage&)> target;
};

const std::vector<Correspondence>& all_correspondences();
const Correspondence& find_correspondence(std::string_view id);

struct MapReport {
  std::string check;
  int n = 0;
  long objects = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

MapReport transport_check(const Correspondence& c, int n, const Budgets& budgets = {});
MapReport roundtrip_check(BijectionId bij, int n, const Budgets& budgets = {});
// Sorted images equal the sorted codomain enumeration.
MapReport bijectivity_check(BijectionId bij, int n, const Budgets& budgets = {});

std::vector<Permutation> all_permutations(int n);

}  // namespace combstat
