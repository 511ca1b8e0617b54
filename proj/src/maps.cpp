#include "combstat/maps.hpp"

#include <algorithm>
#include <numeric>

namespace combstat {

namespace {

void plane_walk(const PlaneTree& t, std::string& out) {
  for (const auto& c : t.children()) {
    out += 'U';
    plane_walk(c, out);
    out += 'D';
  }
}

void binary_walk(const BinaryTree& t, bool right_edges, std::string& out) {
  if (t.is_leaf()) return;
  BinaryTree l = t.left(), r = t.right();
  if (!right_edges) out += 'U';
  binary_walk(l, right_edges, out);
  if (!right_edges) out += 'D';
  if (right_edges) out += 'U';
  binary_walk(r, right_edges, out);
  if (right_edges) out += 'D';
}

// Split a path into its primitive factors U w D.
std::vector<std::string> primitive_factors(std::string_view steps) {
  std::vector<std::string> out;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += steps[i] == 'U' ? 1 : -1;
    if (h == 0) {
      out.emplace_back(steps.substr(start + 1, i - start - 1));
      start = i + 1;
    }
  }
  return out;
}

BinaryTree binary_from_factors(std::string_view steps, bool right_edges) {
  if (steps.empty()) return BinaryTree::leaf();
  auto f = primitive_factors(steps);
  if (right_edges) {
    // f_R(node(L, R)) = f_R(L) U f_R(R) D
    std::string inner = f.back();
    std::size_t prefix_len = steps.size() - inner.size() - 2;
    return BinaryTree::node(binary_from_factors(steps.substr(0, prefix_len), true),
                            binary_from_factors(inner, true));
  }
  // f_L(node(L, R)) = U f_L(L) D f_L(R)
  std::string inner = f.front();
  return BinaryTree::node(binary_from_factors(inner, false), binary_from_factors(steps.substr(inner.size() + 2), false));
}

PlaneTree plane_from_steps(std::string_view steps) {
  std::vector<PlaneTree> kids;
  for (const auto& f : primitive_factors(steps)) kids.push_back(plane_from_steps(f));
  return PlaneTree::node(kids);
}

std::string describe(const CombObject& obj) {
  return std::string(family_name(family_of(obj))) + " " + encode(obj);
}

std::string vec_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

int leftmost_leaf_depth(const CombObject& obj) {
  auto sv = statistic_vector(obj, family_of(obj) == Family::Binary ? StatisticId::BinaryLeafDepth
                                                                  : StatisticId::PlaneLeafDepth);
  return sv.values.front();
}

const DyckPath& as_path(const MapImage& img) { return std::get<DyckPath>(std::get<CombObject>(img)); }

std::vector<int> drop_first(std::vector<int> v) {
  if (!v.empty()) v.erase(v.begin());
  return v;
}

std::vector<int> plus_one(std::vector<int> v) {
  for (auto& x : v) ++x;
  return v;
}

}  // namespace

const std::vector<BijectionInfo>& all_bijections() {
  static const std::vector<BijectionInfo> infos = {
      {BijectionId::PlaneToDyck, "plane-to-dyck", Family::Plane, Family::Dyck},
      {BijectionId::BinaryToDyckFR, "binary-to-dyck-fr", Family::Binary, Family::Dyck},
      {BijectionId::BinaryToDyckFL, "binary-to-dyck-fl", Family::Binary, Family::Dyck},
      {BijectionId::BinaryToTriangulation, "binary-to-triangulation", Family::Binary, Family::Triangulation},
      {BijectionId::SchroederToDissection, "schroeder-to-dissection", Family::Schroeder, Family::Dissection},
      {BijectionId::IncreasingToPermutation, "increasing-to-permutation", Family::Increasing, std::nullopt},
  };
  return infos;
}

const BijectionInfo& bijection_info(BijectionId id) {
  for (const auto& b : all_bijections())
    if (b.id == id) return b;
  throw std::invalid_argument("unknown bijection id");
}

BijectionId parse_bijection(std::string_view name) {
  for (const auto& b : all_bijections())
    if (b.name == name) return b.id;
  throw std::invalid_argument("unknown bijection: " + std::string(name));
}

DyckPath plane_to_dyck(const PlaneTree& t) {
  std::string s;
  plane_walk(t, s);
  return DyckPath(std::move(s));
}

PlaneTree dyck_to_plane(const DyckPath& p) { return plane_from_steps(p.steps()); }

DyckPath binary_to_dyck(const BinaryTree& t, bool right_edges) {
  std::string s;
  binary_walk(t, right_edges, s);
  return DyckPath(std::move(s));
}

BinaryTree dyck_to_binary(const DyckPath& p, bool right_edges) { return binary_from_factors(p.steps(), right_edges); }

Permutation increasing_to_permutation(const IncreasingBinaryTree& t) { return t.inorder_labels(); }

IncreasingBinaryTree permutation_to_increasing(const Permutation& w) {
  decode_permutation(encode_permutation(w));  // validates
  struct Raw {
    BinaryTree shape;
    std::vector<int> labels;
  };
  std::function<Raw(std::size_t, std::size_t)> rec = [&](std::size_t lo, std::size_t hi) -> Raw {
    if (lo == hi) return {BinaryTree::leaf(), {}};
    auto m = static_cast<std::size_t>(std::min_element(w.begin() + static_cast<long>(lo), w.begin() + static_cast<long>(hi)) - w.begin());
    Raw l = rec(lo, m), r = rec(m + 1, hi);
    Raw out{BinaryTree::node(l.shape, r.shape), {w[m]}};
    out.labels.insert(out.labels.end(), l.labels.begin(), l.labels.end());
    out.labels.insert(out.labels.end(), r.labels.begin(), r.labels.end());
    return out;
  };
  Raw t = rec(0, w.size());
  return IncreasingBinaryTree(std::move(t.shape), std::move(t.labels));
}

MapImage apply_bijection(BijectionId bij, const CombObject& obj) {
  const auto& info = bijection_info(bij);
  if (family_of(obj) != info.domain)
    throw FamilyMismatch(std::string(info.name) + " expects a " + std::string(family_name(info.domain)) +
                         " object, got " + std::string(family_name(family_of(obj))));
  switch (bij) {
    case BijectionId::PlaneToDyck: return CombObject(plane_to_dyck(std::get<PlaneTree>(obj)));
    case BijectionId::BinaryToDyckFR: return CombObject(binary_to_dyck(std::get<BinaryTree>(obj), true));
    case BijectionId::BinaryToDyckFL: return CombObject(binary_to_dyck(std::get<BinaryTree>(obj), false));
    case BijectionId::BinaryToTriangulation: return CombObject(binary_to_triangulation(std::get<BinaryTree>(obj)));
    case BijectionId::SchroederToDissection:
      return CombObject(schroeder_to_dissection(std::get<SchroederTree>(obj)));
    case BijectionId::IncreasingToPermutation:
      return increasing_to_permutation(std::get<IncreasingBinaryTree>(obj));
  }
  throw std::invalid_argument("unknown bijection id");
}

CombObject invert_bijection(BijectionId bij, const MapImage& img) {
  const auto& info = bijection_info(bij);
  if (!info.codomain) {
    const auto* w = std::get_if<Permutation>(&img);
    if (!w) throw FamilyMismatch(std::string(info.name) + " inverse expects a permutation");
    return permutation_to_increasing(*w);
  }
  const auto* obj = std::get_if<CombObject>(&img);
  if (!obj || family_of(*obj) != *info.codomain)
    throw FamilyMismatch(std::string(info.name) + " inverse expects a " + std::string(family_name(*info.codomain)) +
                         " object");
  switch (bij) {
    case BijectionId::PlaneToDyck: return dyck_to_plane(std::get<DyckPath>(*obj));
    case BijectionId::BinaryToDyckFR: return dyck_to_binary(std::get<DyckPath>(*obj), true);
    case BijectionId::BinaryToDyckFL: return dyck_to_binary(std::get<DyckPath>(*obj), false);
    case BijectionId::BinaryToTriangulation: return triangulation_to_binary(std::get<PolygonSubdivision>(*obj));
    case BijectionId::SchroederToDissection: return dissection_to_schroeder(std::get<PolygonSubdivision>(*obj));
    case BijectionId::IncreasingToPermutation: break;
  }
  throw std::invalid_argument("unknown bijection id");
}

std::string encode_image(const MapImage& img) {
  if (const auto* w = std::get_if<Permutation>(&img)) return encode_permutation(*w);
  return encode(std::get<CombObject>(img));
}

int initial_run(const DyckPath& p) {
  const auto& s = p.steps();
  return static_cast<int>(std::find(s.begin(), s.end(), 'D') - s.begin());
}

int returns(const DyckPath& p) { return static_cast<int>(primitive_factors(p.steps()).size()); }

const std::vector<Correspondence>& all_correspondences() {
  static const std::vector<Correspondence> cs = {
      {"preorder-depth/upstep-height", BijectionId::PlaneToDyck,
       "depth of node r in preorder (r >= 1) equals the height of up-step r",
       [](const CombObject& o) { return drop_first(statistic_vector(o, StatisticId::PlaneNodeDepthPreorder).values); },
       [](const MapImage& m) {
         return statistic_vector(std::get<CombObject>(m), StatisticId::DyckUpstepHeight).values;
       }},
      {"plane-leftmost-leaf/initial-run", BijectionId::PlaneToDyck,
       "depth of the leftmost leaf equals the initial run of up-steps",
       [](const CombObject& o) { return std::vector<int>{leftmost_leaf_depth(o)}; },
       [](const MapImage& m) { return std::vector<int>{initial_run(as_path(m))}; }},
      {"root-degree/returns", BijectionId::PlaneToDyck, "number of children of the root equals the number of returns",
       [](const CombObject& o) { return std::vector<int>{std::get<PlaneTree>(o).root_degree()}; },
       [](const MapImage& m) { return std::vector<int>{returns(as_path(m))}; }},
      {"leftmost-leaf/initial-run", BijectionId::BinaryToDyckFL,
       "depth of the leftmost leaf equals the initial run of up-steps under f_L",
       [](const CombObject& o) { return std::vector<int>{leftmost_leaf_depth(o)}; },
       [](const MapImage& m) { return std::vector<int>{initial_run(as_path(m))}; }},
      {"leftmost-leaf/returns", BijectionId::BinaryToDyckFR,
       "depth of the leftmost leaf equals the number of returns under f_R",
       [](const CombObject& o) { return std::vector<int>{leftmost_leaf_depth(o)}; },
       [](const MapImage& m) { return std::vector<int>{returns(as_path(m))}; }},
      {"leaf-depth/separating-diagonals", BijectionId::BinaryToTriangulation,
       "depth of leaf r equals one plus the diagonals separating side r+1 from the root side",
       [](const CombObject& o) { return statistic_vector(o, StatisticId::BinaryLeafDepth).values; },
       [](const MapImage& m) {
         return plus_one(statistic_vector(std::get<CombObject>(m), StatisticId::SeparatingDiagonalsTriangulation).values);
       }},
      {"schroeder-leaf-depth/separating-diagonals", BijectionId::SchroederToDissection,
       "depth of leaf r equals one plus the diagonals separating side r+1 from the root side",
       [](const CombObject& o) { return statistic_vector(o, StatisticId::SchroederLeafDepth).values; },
       [](const MapImage& m) {
         return plus_one(statistic_vector(std::get<CombObject>(m), StatisticId::SeparatingDiagonalsDissection).values);
       }},
      {"inorder-labels/permutation", BijectionId::IncreasingToPermutation,
       "inorder reading of the labels equals the permutation",
       [](const CombObject& o) { return std::get<IncreasingBinaryTree>(o).inorder_labels(); },
       [](const MapImage& m) { return std::get<Permutation>(m); }},
  };
  return cs;
}

const Correspondence& find_correspondence(std::string_view id) {
  for (const auto& c : all_correspondences())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown correspondence: " + std::string(id));
}

MapReport transport_check(const Correspondence& c, int n, const Budgets& budgets) {
  MapReport rep{std::string(c.id), n, 0, true, std::nullopt};
  const Family dom = bijection_info(c.bijection).domain;
  const bool polygon =
      c.bijection == BijectionId::BinaryToTriangulation || c.bijection == BijectionId::SchroederToDissection;
  // the degenerate 2-gon has no side besides the root one
  if (polygon && n == 0) return rep;
  for (const auto& obj : generate_all(dom, n, budgets)) {
    ++rep.objects;
    auto lhs = c.source(obj);
    auto rhs = c.target(apply_bijection(c.bijection, obj));
    if (lhs != rhs) {
      rep.passed = false;
      rep.counterexample = describe(obj) + ": " + vec_text(lhs) + " vs " + vec_text(rhs);
      return rep;
    }
  }
  return rep;
}

MapReport roundtrip_check(BijectionId bij, int n, const Budgets& budgets) {
  MapReport rep{"roundtrip:" + std::string(bijection_info(bij).name), n, 0, true, std::nullopt};
  for (const auto& obj : generate_all(bijection_info(bij).domain, n, budgets)) {
    ++rep.objects;
    MapImage img = apply_bijection(bij, obj);
    CombObject back = invert_bijection(bij, img);
    if (back != obj) {
      rep.passed = false;
      rep.counterexample = describe(obj) + " -> " + encode_image(img) + " -> " + encode(back);
      return rep;
    }
  }
  return rep;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MapReport bijectivity_check(BijectionId bij, int n, const Budgets& budgets) {
  const auto& info = bijection_info(bij);
  MapReport rep{"bijective:" + std::string(info.name), n, 0, true, std::nullopt};
  std::vector<MapImage> images, codomain;
  for (const auto& obj : generate_all(info.domain, n, budgets)) images.push_back(apply_bijection(bij, obj));
  rep.objects = static_cast<long>(images.size());
  if (info.codomain) {
    Budgets wide = budgets;
    wide.limits[*info.codomain] = std::max(wide.limit(*info.codomain), n);
    for (auto& o : generate_all(*info.codomain, n, wide)) codomain.emplace_back(std::move(o));
  } else {
    for (auto& w : all_permutations(n)) codomain.emplace_back(std::move(w));
  }
  std::sort(images.begin(), images.end());
  std::sort(codomain.begin(), codomain.end());
  if (images != codomain) {
    rep.passed = false;
    auto dup = std::adjacent_find(images.begin(), images.end());
    rep.counterexample = dup != images.end() ? "repeated image " + encode_image(*dup)
                                             : "image set differs from the codomain enumeration (" +
                                                   std::to_string(images.size()) + " vs " +
                                                   std::to_string(codomain.size()) + ")";
  }
  return rep;
}

}  // namespace combstat
