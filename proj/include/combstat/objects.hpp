#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "combstat/exact.hpp"

namespace combstat {

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FamilyMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { Binary, Plane, Schroeder, Dyck, Noncrossing, Increasing, Triangulation, Dissection };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

// Preorder code: 1 for an internal node, 0 for a leaf.
class BinaryTree {
 public:
  BinaryTree() : code_{0} {}
  static BinaryTree leaf() { return {}; }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  static BinaryTree from_code(std::vector<std::uint8_t> code);

  int size() const { return static_cast<int>(code_.size() / 2); }
  bool is_leaf() const { return code_.size() == 1; }
  BinaryTree left() const;
  BinaryTree right() const;
  const std::vector<std::uint8_t>& code() const { return code_; }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::size_t left_end() const;
  std::vector<std::uint8_t> code_;
};

// Preorder sequence of child counts.
class PlaneTree {
 public:
  PlaneTree() : degrees_{0} {}
  static PlaneTree node(const std::vector<PlaneTree>& children);
  static PlaneTree from_degrees(std::vector<int> degrees);

  int size() const { return static_cast<int>(degrees_.size()) - 1; }
  int leaf_count() const;
  int root_degree() const { return degrees_.front(); }
  std::vector<PlaneTree> children() const;
  const std::vector<int>& degrees() const { return degrees_; }
  bool has_unary_node() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend auto operator<=>(const PlaneTree&, const PlaneTree&) = default;

 private:
  std::vector<int> degrees_;
};

// Plane tree without unary nodes; its index n is the leaf count minus one.
class SchroederTree {
 public:
  SchroederTree() = default;
  explicit SchroederTree(PlaneTree t);
  const PlaneTree& tree() const { return tree_; }
  int size() const { return tree_.leaf_count() - 1; }

  friend bool operator==(const SchroederTree&, const SchroederTree&) = default;
  friend auto operator<=>(const SchroederTree&, const SchroederTree&) = default;

 private:
  PlaneTree tree_;
};

class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(std::string steps);
  int size() const { return static_cast<int>(steps_.size() / 2); }
  const std::string& steps() const { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  std::string steps_;
};

using Edge = std::pair<int, int>;

bool chords_cross(const Edge& a, const Edge& b);

// Tree on the vertices 0..n of a circle with straight noncrossing edges.
class NoncrossingTree {
 public:
  NoncrossingTree() = default;
  NoncrossingTree(int n, std::vector<Edge> edges);
  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const NoncrossingTree&, const NoncrossingTree&) = default;
  friend auto operator<=>(const NoncrossingTree&, const NoncrossingTree&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Binary tree shape with the labels of the internal nodes listed in preorder.
class IncreasingBinaryTree {
 public:
  IncreasingBinaryTree() = default;
  IncreasingBinaryTree(BinaryTree shape, std::vector<int> labels);
  int size() const { return shape_.size(); }
  const BinaryTree& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<int> inorder_labels() const;

  friend bool operator==(const IncreasingBinaryTree&, const IncreasingBinaryTree&) = default;
  friend auto operator<=>(const IncreasingBinaryTree&, const IncreasingBinaryTree&) = default;

 private:
  BinaryTree shape_;
  std::vector<int> labels_;
};

enum class SubdivisionKind { Triangulation, Dissection };

// Polygon with vertices 0..n+1 counterclockwise; side k joins k and k+1, side 0 is the root side.
class PolygonSubdivision {
 public:
  PolygonSubdivision() = default;
  PolygonSubdivision(int n, std::vector<Edge> diagonals, SubdivisionKind kind);
  int size() const { return n_; }
  int vertex_count() const { return n_ + 2; }
  const std::vector<Edge>& diagonals() const { return diagonals_; }
  SubdivisionKind kind() const { return kind_; }

  friend bool operator==(const PolygonSubdivision&, const PolygonSubdivision&) = default;
  friend auto operator<=>(const PolygonSubdivision&, const PolygonSubdivision&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> diagonals_;
  SubdivisionKind kind_ = SubdivisionKind::Triangulation;
};

using Permutation = std::vector<int>;

using CombObject =
    std::variant<BinaryTree, PlaneTree, SchroederTree, DyckPath, NoncrossingTree, IncreasingBinaryTree, PolygonSubdivision>;

Family family_of(const CombObject& obj);
int object_size(const CombObject& obj);

// Default enumeration limits on n, overridable per family.
struct Budgets {
  std::map<Family, int> limits{{Family::Binary, 11},     {Family::Plane, 11},       {Family::Dyck, 11},
                               {Family::Schroeder, 9},   {Family::Noncrossing, 8},  {Family::Increasing, 8},
                               {Family::Triangulation, 11}, {Family::Dissection, 9}};
  int limit(Family f) const { return limits.at(f); }
  void check(Family f, int n) const;
};

std::vector<BinaryTree> all_binary_trees(int n);
std::vector<PlaneTree> all_plane_trees(int n);
std::vector<SchroederTree> all_schroeder_trees(int n);  // n+1 leaves
std::vector<DyckPath> all_dyck_paths(int n);
std::vector<NoncrossingTree> all_noncrossing_trees(int n);              // butterfly decomposition
std::vector<NoncrossingTree> all_noncrossing_trees_by_search(int n);    // spanning trees with crossing filter
std::vector<IncreasingBinaryTree> all_increasing_trees(int n);
std::vector<PolygonSubdivision> all_subdivisions(int n, SubdivisionKind kind);            // through the tree bijections
std::vector<PolygonSubdivision> all_subdivisions_by_search(int n, SubdivisionKind kind);  // direct diagonal search

std::vector<CombObject> generate_all(Family f, int n, const Budgets& budgets = {});

// Tree <-> subdivision correspondence shared with the bijection registry.
PolygonSubdivision binary_to_triangulation(const BinaryTree& t);
BinaryTree triangulation_to_binary(const PolygonSubdivision& s);
PolygonSubdivision schroeder_to_dissection(const SchroederTree& t);
SchroederTree dissection_to_schroeder(const PolygonSubdivision& s);

enum class StatisticId {
  BinaryLeafDepth,
  BinaryLeafAbscissa,
  PlaneLeafDepth,
  PlaneNodeDepthPreorder,
  SchroederLeafDepth,
  DyckVertexHeight,
  DyckUpstepHeight,
  DyckDownstepHeight,
  NoncrossingNodeDepth,
  IncreasingLeafDepth,
  IncreasingInternalDepthInorder,
  SeparatingDiagonalsTriangulation,
  SeparatingDiagonalsDissection,
};

struct StatisticInfo {
  StatisticId id;
  Family family;
  std::string_view name;      // CLI name
  std::string_view ident;     // enum-style identifier
  int first_index;            // 0 or 1
};

const std::vector<StatisticInfo>& all_statistics();
const StatisticInfo& statistic_info(StatisticId id);
StatisticId find_statistic(Family f, std::string_view cli_name);
// Last valid position index for objects of size n; nullopt when it varies per object.
std::optional<int> last_index(StatisticId id, int n);

struct StatVector {
  int first_r = 0;
  std::vector<int> values;
  int last_r() const { return first_r + static_cast<int>(values.size()) - 1; }
  int at(int r) const { return values.at(static_cast<std::size_t>(r - first_r)); }
  friend bool operator==(const StatVector&, const StatVector&) = default;
};

StatVector statistic_vector(const CombObject& obj, StatisticId stat);

// Exact counts per (k, r, d); k is the leaf-count stratum for plane trees and 0 otherwise.
struct DistributionTable {
  Family family = Family::Binary;
  StatisticId statistic = StatisticId::BinaryLeafDepth;
  int n = 0;
  bool stratified = false;
  BigInt object_count = 0;
  std::map<std::tuple<int, int, int>, BigInt> counts;
  std::map<std::pair<int, int>, BigInt> totals;  // (k, r) -> objects having position r

  BigInt count(int r, int d, int k = 0) const;
  BigInt total(int r, int k = 0) const;
  std::vector<int> strata() const;
  std::vector<int> positions(int k = 0) const;
  std::map<int, BigInt> column(int r, int k = 0) const;
  bool totals_vary() const;

  std::string csv(bool header = true) const;
  friend bool operator==(const DistributionTable& a, const DistributionTable& b) {
    return a.family == b.family && a.statistic == b.statistic && a.n == b.n && a.stratified == b.stratified &&
           a.counts == b.counts && a.totals == b.totals;
  }
};

struct TableOptions {
  bool stratify_plane = true;
  int workers = 1;
  Budgets budgets{};
};

DistributionTable distribution_table(Family f, StatisticId stat, int n, const TableOptions& opts = {});
DistributionTable tabulate(const std::vector<CombObject>& objs, Family f, StatisticId stat, int n,
                           const TableOptions& opts = {});

// Compact text codec.
std::string encode(const CombObject& obj);
CombObject decode(Family f, std::string_view text);
std::string encode_permutation(const Permutation& p);
Permutation decode_permutation(std::string_view text);

}  // namespace combstat
