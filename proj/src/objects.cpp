#include "combstat/objects.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace combstat {

namespace {

const std::vector<std::pair<Family, std::string_view>> kFamilyNames = {
    {Family::Binary, "binary"},           {Family::Plane, "plane"},
    {Family::Schroeder, "schroeder"},     {Family::Dyck, "dyck"},
    {Family::Noncrossing, "noncrossing"}, {Family::Increasing, "increasing"},
    {Family::Triangulation, "triangulation"}, {Family::Dissection, "dissection"},
};

template <class T>
std::vector<CombObject> wrap(std::vector<T> v) {
  std::vector<CombObject> out;
  out.reserve(v.size());
  for (auto& x : v) out.emplace_back(std::move(x));
  return out;
}

std::vector<Edge> normalized(std::vector<Edge> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Explicit node arrays for a binary tree code; leaves have left = right = -1.
struct BinNodes {
  std::vector<int> left, right;
  std::vector<bool> internal;
};

BinNodes unpack(const BinaryTree& t) {
  BinNodes b;
  const auto& code = t.code();
  b.left.assign(code.size(), -1);
  b.right.assign(code.size(), -1);
  b.internal.assign(code.size(), false);
  std::size_t pos = 0;
  std::function<int()> rec = [&]() -> int {
    int me = static_cast<int>(pos++);
    if (code[static_cast<std::size_t>(me)] == 1) {
      b.internal[static_cast<std::size_t>(me)] = true;
      b.left[static_cast<std::size_t>(me)] = rec();
      b.right[static_cast<std::size_t>(me)] = rec();
    }
    return me;
  };
  rec();
  return b;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw std::invalid_argument("unknown family: " + std::string(name));
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = [] {
    std::vector<Family> v;
    for (const auto& p : kFamilyNames) v.push_back(p.first);
    return v;
  }();
  return fams;
}

// ---- BinaryTree

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  BinaryTree t;
  t.code_.clear();
  t.code_.reserve(left.code_.size() + right.code_.size() + 1);
  t.code_.push_back(1);
  t.code_.insert(t.code_.end(), left.code_.begin(), left.code_.end());
  t.code_.insert(t.code_.end(), right.code_.begin(), right.code_.end());
  return t;
}

BinaryTree BinaryTree::from_code(std::vector<std::uint8_t> code) {
  long need = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (need <= 0 || code[i] > 1) throw std::invalid_argument("malformed binary tree code");
    need += code[i] == 1 ? 1 : -1;
  }
  if (need != 0) throw std::invalid_argument("malformed binary tree code");
  BinaryTree t;
  t.code_ = std::move(code);
  return t;
}

std::size_t BinaryTree::left_end() const {
  long need = 1;
  std::size_t i = 1;
  for (; need > 0; ++i) need += code_[i] == 1 ? 1 : -1;
  return i;
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  BinaryTree t;
  t.code_.assign(code_.begin() + 1, code_.begin() + static_cast<long>(left_end()));
  return t;
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::logic_error("leaf has no children");
  BinaryTree t;
  t.code_.assign(code_.begin() + static_cast<long>(left_end()), code_.end());
  return t;
}

// ---- PlaneTree

PlaneTree PlaneTree::node(const std::vector<PlaneTree>& children) {
  PlaneTree t;
  t.degrees_ = {static_cast<int>(children.size())};
  for (const auto& c : children) t.degrees_.insert(t.degrees_.end(), c.degrees_.begin(), c.degrees_.end());
  return t;
}

PlaneTree PlaneTree::from_degrees(std::vector<int> degrees) {
  long need = 1;
  for (int d : degrees) {
    if (need <= 0 || d < 0) throw std::invalid_argument("malformed plane tree degree sequence");
    need += d - 1;
  }
  if (need != 0) throw std::invalid_argument("malformed plane tree degree sequence");
  PlaneTree t;
  t.degrees_ = std::move(degrees);
  return t;
}

int PlaneTree::leaf_count() const {
  return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), 0));
}

bool PlaneTree::has_unary_node() const {
  return std::find(degrees_.begin(), degrees_.end(), 1) != degrees_.end();
}

std::vector<PlaneTree> PlaneTree::children() const {
  std::vector<PlaneTree> out;
  std::size_t i = 1;
  for (int c = 0; c < degrees_.front(); ++c) {
    std::size_t start = i;
    long need = 1;
    for (; need > 0; ++i) need += degrees_[i] - 1;
    PlaneTree t;
    t.degrees_.assign(degrees_.begin() + static_cast<long>(start), degrees_.begin() + static_cast<long>(i));
    out.push_back(std::move(t));
  }
  return out;
}

SchroederTree::SchroederTree(PlaneTree t) : tree_(std::move(t)) {
  if (tree_.has_unary_node()) throw std::invalid_argument("Schroeder tree with a unary node");
}

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  long h = 0;
  for (char c : steps_) {
    if (c == 'U')
      ++h;
    else if (c == 'D')
      --h;
    else
      throw std::invalid_argument("Dyck path step must be U or D");
    if (h < 0) throw std::invalid_argument("Dyck path goes below the axis");
  }
  if (h != 0) throw std::invalid_argument("Dyck path does not return to the axis");
}

bool chords_cross(const Edge& e, const Edge& f) {
  auto [a, b] = std::minmax(e.first, e.second);
  auto [c, d] = std::minmax(f.first, f.second);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

NoncrossingTree::NoncrossingTree(int n, std::vector<Edge> edges) : n_(n), edges_(normalized(std::move(edges))) {
  if (n < 0) throw std::invalid_argument("negative noncrossing tree size");
  if (static_cast<int>(edges_.size()) != n) throw std::invalid_argument("noncrossing tree needs exactly n edges");
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
  };
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [a, b] = edges_[i];
    if (a < 0 || b > n || a == b) throw std::invalid_argument("noncrossing tree edge out of range");
    int ra = find(a), rb = find(b);
    if (ra == rb) throw std::invalid_argument("noncrossing tree edges contain a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
    for (std::size_t j = 0; j < i; ++j)
      if (chords_cross(edges_[i], edges_[j])) throw std::invalid_argument("noncrossing tree edges cross");
  }
}

IncreasingBinaryTree::IncreasingBinaryTree(BinaryTree shape, std::vector<int> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  if (static_cast<int>(labels_.size()) != shape_.size())
    throw std::invalid_argument("increasing tree needs one label per internal node");
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("labels must be a permutation of 1..n");
  BinNodes b = unpack(shape_);
  std::vector<int> label_at(shape_.code().size(), 0);
  std::size_t li = 0;
  for (std::size_t i = 0; i < shape_.code().size(); ++i)
    if (b.internal[i]) label_at[i] = labels_[li++];
  for (std::size_t i = 0; i < label_at.size(); ++i) {
    if (!b.internal[i]) continue;
    for (int c : {b.left[i], b.right[i]}) {
      if (b.internal[static_cast<std::size_t>(c)] && label_at[static_cast<std::size_t>(c)] < label_at[i])
        throw std::invalid_argument("labels must increase away from the root");
    }
  }
}

std::vector<int> IncreasingBinaryTree::inorder_labels() const {
  BinNodes b = unpack(shape_);
  std::vector<int> label_at(shape_.code().size(), 0);
  std::size_t li = 0;
  for (std::size_t i = 0; i < shape_.code().size(); ++i)
    if (b.internal[i]) label_at[i] = labels_[li++];
  std::vector<int> out;
  std::function<void(int)> walk = [&](int v) {
    if (!b.internal[static_cast<std::size_t>(v)]) return;
    walk(b.left[static_cast<std::size_t>(v)]);
    out.push_back(label_at[static_cast<std::size_t>(v)]);
    walk(b.right[static_cast<std::size_t>(v)]);
  };
  walk(0);
  return out;
}

PolygonSubdivision::PolygonSubdivision(int n, std::vector<Edge> diagonals, SubdivisionKind kind)
    : n_(n), diagonals_(normalized(std::move(diagonals))), kind_(kind) {
  if (n < 0) throw std::invalid_argument("negative polygon size");
  const int m = n + 2;
  for (std::size_t i = 0; i < diagonals_.size(); ++i) {
    auto [a, b] = diagonals_[i];
    if (a < 0 || b >= m || b - a < 2 || (a == 0 && b == m - 1))
      throw std::invalid_argument("not a diagonal of the polygon");
    if (i > 0 && diagonals_[i] == diagonals_[i - 1]) throw std::invalid_argument("repeated diagonal");
    for (std::size_t j = 0; j < i; ++j)
      if (chords_cross(diagonals_[i], diagonals_[j])) throw std::invalid_argument("diagonals cross");
  }
  if (kind == SubdivisionKind::Triangulation && n >= 1 && static_cast<int>(diagonals_.size()) != n - 1)
    throw std::invalid_argument("triangulation needs exactly n-1 diagonals");
}

Family family_of(const CombObject& obj) {
  struct V {
    Family operator()(const BinaryTree&) const { return Family::Binary; }
    Family operator()(const PlaneTree&) const { return Family::Plane; }
    Family operator()(const SchroederTree&) const { return Family::Schroeder; }
    Family operator()(const DyckPath&) const { return Family::Dyck; }
    Family operator()(const NoncrossingTree&) const { return Family::Noncrossing; }
    Family operator()(const IncreasingBinaryTree&) const { return Family::Increasing; }
    Family operator()(const PolygonSubdivision& s) const {
      return s.kind() == SubdivisionKind::Triangulation ? Family::Triangulation : Family::Dissection;
    }
  };
  return std::visit(V{}, obj);
}

int object_size(const CombObject& obj) {
  return std::visit([](const auto& o) { return o.size(); }, obj);
}

void Budgets::check(Family f, int n) const {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  int lim = limit(f);
  if (n > lim)
    throw BudgetError("enumeration budget exceeded: " + std::string(family_name(f)) + " n=" + std::to_string(n) +
                      " exceeds limit " + std::to_string(lim) + " (raise it with --budget " +
                      std::string(family_name(f)) + "=N)");
}

// ---- generators

std::vector<BinaryTree> all_binary_trees(int n) {
  std::vector<std::vector<BinaryTree>> memo(static_cast<std::size_t>(n + 1));
  memo[0] = {BinaryTree::leaf()};
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k < m; ++k)
      for (const auto& l : memo[static_cast<std::size_t>(k)])
        for (const auto& r : memo[static_cast<std::size_t>(m - 1 - k)]) memo[static_cast<std::size_t>(m)].push_back(BinaryTree::node(l, r));
  return memo[static_cast<std::size_t>(n)];
}

std::vector<PlaneTree> all_plane_trees(int n) {
  // forests[m]: ordered forests with m edges in total counting one edge per tree to its parent
  std::vector<std::vector<std::vector<PlaneTree>>> forests(static_cast<std::size_t>(n + 1));
  std::vector<std::vector<PlaneTree>> trees(static_cast<std::size_t>(n + 1));
  forests[0] = {{}};
  trees[0] = {PlaneTree()};
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= m; ++k)
      for (const auto& first : trees[static_cast<std::size_t>(k - 1)])
        for (const auto& rest : forests[static_cast<std::size_t>(m - k)]) {
          std::vector<PlaneTree> f;
          f.reserve(rest.size() + 1);
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          forests[static_cast<std::size_t>(m)].push_back(std::move(f));
        }
    for (const auto& f : forests[static_cast<std::size_t>(m)]) trees[static_cast<std::size_t>(m)].push_back(PlaneTree::node(f));
  }
  return trees[static_cast<std::size_t>(n)];
}

std::vector<SchroederTree> all_schroeder_trees(int n) {
  const auto leaves = static_cast<std::size_t>(n + 1);
  // seqs[m]: nonempty sequences of Schroeder trees with m leaves in total
  std::vector<std::vector<PlaneTree>> trees(leaves + 1);
  std::vector<std::vector<std::vector<PlaneTree>>> seqs(leaves + 1);
  for (std::size_t m = 1; m <= leaves; ++m) {
    std::vector<std::vector<PlaneTree>> longer;
    for (std::size_t a = 1; a < m; ++a)
      for (const auto& t : trees[a])
        for (const auto& rest : seqs[m - a]) {
          std::vector<PlaneTree> v{t};
          v.insert(v.end(), rest.begin(), rest.end());
          longer.push_back(std::move(v));
        }
    if (m == 1) trees[1].push_back(PlaneTree());
    for (const auto& v : longer) trees[m].push_back(PlaneTree::node(v));
    seqs[m] = std::move(longer);
    for (const auto& t : trees[m]) seqs[m].push_back({t});
  }
  std::vector<SchroederTree> out;
  for (const auto& t : trees[leaves]) out.emplace_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DyckPath> all_dyck_paths(int n) {
  std::vector<DyckPath> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int ups, int h) {
    if (static_cast<int>(cur.size()) == 2 * n) {
      out.emplace_back(cur);
      return;
    }
    if (ups < n) {
      cur.push_back('U');
      rec(ups + 1, h + 1);
      cur.pop_back();
    }
    if (h > 0) {
      cur.push_back('D');
      rec(ups, h - 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::vector<NoncrossingTree> all_noncrossing_trees(int n) {
  // left[m]: trees on 0..m rooted at 0, built as a sequence of blocks [p, q] hanging from the root;
  // each block has a child c of the root with a tree on [p, c] rooted at its right end and one on [c, q]
  // rooted at its left end.
  std::vector<std::vector<std::vector<Edge>>> left(static_cast<std::size_t>(n + 1));
  left[0] = {{}};
  auto mirror = [](const std::vector<Edge>& es, int m) {
    std::vector<Edge> out;
    for (auto [a, b] : es) out.emplace_back(m - b, m - a);
    return out;
  };
  for (int m = 1; m <= n; ++m) {
    auto& dst = left[static_cast<std::size_t>(m)];
    for (int q = 1; q <= m; ++q)
      for (int c = 1; c <= q; ++c)
        for (const auto& lr : left[static_cast<std::size_t>(c - 1)]) {
          auto right_rooted = mirror(lr, c - 1);
          for (const auto& rt : left[static_cast<std::size_t>(q - c)])
            for (const auto& rest : left[static_cast<std::size_t>(m - q)]) {
              std::vector<Edge> e;
              e.reserve(static_cast<std::size_t>(m));
              e.emplace_back(0, c);
              for (auto [a, b] : right_rooted) e.emplace_back(a + 1, b + 1);
              for (auto [a, b] : rt) e.emplace_back(a + c, b + c);
              for (auto [a, b] : rest) e.emplace_back(a == 0 ? 0 : a + q, b + q);
              dst.push_back(std::move(e));
            }
        }
  }
  std::vector<NoncrossingTree> out;
  for (auto& e : left[static_cast<std::size_t>(n)]) out.emplace_back(n, std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NoncrossingTree> all_noncrossing_trees_by_search(int n) {
  std::vector<Edge> pairs;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  std::vector<NoncrossingTree> out;
  std::vector<Edge> chosen;
  std::vector<int> comp(static_cast<std::size_t>(n + 1));
  std::iota(comp.begin(), comp.end(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (static_cast<int>(chosen.size()) == n) {
      out.emplace_back(n, chosen);
      return;
    }
    if (pairs.size() - i < static_cast<std::size_t>(n) - chosen.size()) return;
    const Edge& e = pairs[i];
    int ca = comp[static_cast<std::size_t>(e.first)], cb = comp[static_cast<std::size_t>(e.second)];
    bool ok = ca != cb;
    for (const auto& f : chosen)
      if (ok && chords_cross(e, f)) ok = false;
    if (ok) {
      std::vector<int> saved = comp;
      for (auto& c : comp)
        if (c == cb) c = ca;
      chosen.push_back(e);
      rec(i + 1);
      chosen.pop_back();
      comp = std::move(saved);
    }
    rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IncreasingBinaryTree> all_increasing_trees(int n) {
  struct Raw {
    BinaryTree shape;
    std::vector<int> labels;
  };
  std::function<std::vector<Raw>(const std::vector<int>&)> gen = [&](const std::vector<int>& labels) {
    std::vector<Raw> out;
    if (labels.empty()) {
      out.push_back({BinaryTree::leaf(), {}});
      return out;
    }
    std::vector<int> rest(labels.begin() + 1, labels.end());
    const std::size_t k = rest.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> ls, rs;
      for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? ls : rs).push_back(rest[i]);
      auto lt = gen(ls);
      auto rt = gen(rs);
      for (const auto& l : lt)
        for (const auto& r : rt) {
          Raw t{BinaryTree::node(l.shape, r.shape), {labels.front()}};
          t.labels.insert(t.labels.end(), l.labels.begin(), l.labels.end());
          t.labels.insert(t.labels.end(), r.labels.begin(), r.labels.end());
          out.push_back(std::move(t));
        }
    }
    return out;
  };
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<IncreasingBinaryTree> out;
  for (auto& r : gen(labels)) out.emplace_back(std::move(r.shape), std::move(r.labels));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- tree <-> polygon

namespace {

// Vertices 1..n+2 on the chain; vertex n+2 is polygon vertex 0.
Edge polygon_chord(int a, int b, int n) {
  int m = n + 2;
  a %= m;
  b %= m;
  return {std::min(a, b), std::max(a, b)};
}

void binary_chords(const BinaryTree& t, int lo, int hi, bool root, int n, std::vector<Edge>& out) {
  if (t.is_leaf()) return;
  if (!root) out.push_back(polygon_chord(lo, hi, n));
  BinaryTree l = t.left(), r = t.right();
  int apex = lo + l.size() + 1;
  binary_chords(l, lo, apex, false, n, out);
  binary_chords(r, apex, hi, false, n, out);
}

void schroeder_chords(const PlaneTree& t, int lo, int hi, bool root, int n, std::vector<Edge>& out) {
  if (t.root_degree() == 0) return;
  if (!root) out.push_back(polygon_chord(lo, hi, n));
  int at = lo;
  for (const auto& c : t.children()) {
    int next = at + c.leaf_count();
    schroeder_chords(c, at, next, false, n, out);
    at = next;
  }
}

// Chain vertices lo = w0 < w1 < ... < wk = hi of the face sitting on the base (lo, hi).
std::vector<int> face_on_base(const std::set<Edge>& chords, int lo, int hi) {
  std::vector<int> face{lo};
  int at = lo;
  while (at != hi) {
    int next = at + 1;
    for (int v = hi; v > at + 1; --v) {
      if (at == lo && v == hi) continue;
      if (chords.count({at, v})) {
        next = v;
        break;
      }
    }
    face.push_back(next);
    at = next;
  }
  return face;
}

std::set<Edge> chain_chords(const PolygonSubdivision& s) {
  const int n = s.size();
  std::set<Edge> chords;
  for (auto [a, b] : s.diagonals()) {
    // polygon vertex 0 is chain vertex n+2
    if (a == 0)
      chords.insert({b, n + 2});
    else
      chords.insert({a, b});
  }
  return chords;
}

}  // namespace

PolygonSubdivision binary_to_triangulation(const BinaryTree& t) {
  const int n = t.size();
  std::vector<Edge> out;
  binary_chords(t, 1, n + 2, true, n, out);
  return PolygonSubdivision(n, std::move(out), SubdivisionKind::Triangulation);
}

BinaryTree triangulation_to_binary(const PolygonSubdivision& s) {
  if (s.kind() != SubdivisionKind::Triangulation) throw FamilyMismatch("expected a triangulation");
  auto chords = chain_chords(s);
  std::function<BinaryTree(int, int)> rec = [&](int lo, int hi) {
    if (hi == lo + 1) return BinaryTree::leaf();
    auto face = face_on_base(chords, lo, hi);
    if (face.size() != 3) throw std::invalid_argument("subdivision has a non-triangular face");
    return BinaryTree::node(rec(face[0], face[1]), rec(face[1], face[2]));
  };
  return rec(1, s.size() + 2);
}

PolygonSubdivision schroeder_to_dissection(const SchroederTree& t) {
  const int n = t.size();
  std::vector<Edge> out;
  schroeder_chords(t.tree(), 1, n + 2, true, n, out);
  return PolygonSubdivision(n, std::move(out), SubdivisionKind::Dissection);
}

SchroederTree dissection_to_schroeder(const PolygonSubdivision& s) {
  if (s.kind() != SubdivisionKind::Dissection) throw FamilyMismatch("expected a dissection");
  auto chords = chain_chords(s);
  std::function<PlaneTree(int, int)> rec = [&](int lo, int hi) {
    if (hi == lo + 1) return PlaneTree();
    auto face = face_on_base(chords, lo, hi);
    std::vector<PlaneTree> kids;
    for (std::size_t i = 0; i + 1 < face.size(); ++i) kids.push_back(rec(face[i], face[i + 1]));
    return PlaneTree::node(kids);
  };
  return SchroederTree(rec(1, s.size() + 2));
}

std::vector<PolygonSubdivision> all_subdivisions(int n, SubdivisionKind kind) {
  std::vector<PolygonSubdivision> out;
  if (kind == SubdivisionKind::Triangulation) {
    for (const auto& t : all_binary_trees(n)) out.push_back(binary_to_triangulation(t));
  } else {
    for (const auto& t : all_schroeder_trees(n)) out.push_back(schroeder_to_dissection(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PolygonSubdivision> all_subdivisions_by_search(int n, SubdivisionKind kind) {
  const int m = n + 2;
  std::vector<Edge> diags;
  for (int a = 0; a < m; ++a)
    for (int b = a + 2; b < m; ++b)
      if (!(a == 0 && b == m - 1)) diags.emplace_back(a, b);
  std::vector<PolygonSubdivision> out;
  std::vector<Edge> chosen;
  const std::size_t want = n >= 1 ? static_cast<std::size_t>(n - 1) : 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == diags.size()) {
      if (kind == SubdivisionKind::Dissection || chosen.size() == want) out.emplace_back(n, chosen, kind);
      return;
    }
    bool ok = true;
    for (const auto& f : chosen)
      if (chords_cross(diags[i], f)) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(diags[i]);
      rec(i + 1);
      chosen.pop_back();
    }
    rec(i + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CombObject> generate_all(Family f, int n, const Budgets& budgets) {
  budgets.check(f, n);
  switch (f) {
    case Family::Binary: return wrap(all_binary_trees(n));
    case Family::Plane: return wrap(all_plane_trees(n));
    case Family::Schroeder: return wrap(all_schroeder_trees(n));
    case Family::Dyck: return wrap(all_dyck_paths(n));
    case Family::Noncrossing: return wrap(all_noncrossing_trees(n));
    case Family::Increasing: return wrap(all_increasing_trees(n));
    case Family::Triangulation: return wrap(all_subdivisions(n, SubdivisionKind::Triangulation));
    case Family::Dissection: return wrap(all_subdivisions(n, SubdivisionKind::Dissection));
  }
  throw std::invalid_argument("unknown family");
}

// ---- statistics

const std::vector<StatisticInfo>& all_statistics() {
  static const std::vector<StatisticInfo> infos = {
      {StatisticId::BinaryLeafDepth, Family::Binary, "leaf-depth", "BinaryLeafDepth", 0},
      {StatisticId::BinaryLeafAbscissa, Family::Binary, "leaf-abscissa", "BinaryLeafAbscissa", 0},
      {StatisticId::PlaneLeafDepth, Family::Plane, "leaf-depth", "PlaneLeafDepth", 0},
      {StatisticId::PlaneNodeDepthPreorder, Family::Plane, "node-depth", "PlaneNodeDepthPreorder", 0},
      {StatisticId::SchroederLeafDepth, Family::Schroeder, "leaf-depth", "SchroederLeafDepth", 0},
      {StatisticId::DyckVertexHeight, Family::Dyck, "vertex-height", "DyckVertexHeight", 0},
      {StatisticId::DyckUpstepHeight, Family::Dyck, "upstep-height", "DyckUpstepHeight", 1},
      {StatisticId::DyckDownstepHeight, Family::Dyck, "downstep-height", "DyckDownstepHeight", 1},
      {StatisticId::NoncrossingNodeDepth, Family::Noncrossing, "node-depth", "NoncrossingNodeDepth", 0},
      {StatisticId::IncreasingLeafDepth, Family::Increasing, "leaf-depth", "IncreasingLeafDepth", 0},
      {StatisticId::IncreasingInternalDepthInorder, Family::Increasing, "internal-depth",
       "IncreasingInternalDepthInorder", 0},
      {StatisticId::SeparatingDiagonalsTriangulation, Family::Triangulation, "separating-diagonals",
       "SeparatingDiagonals(triangulation)", 0},
      {StatisticId::SeparatingDiagonalsDissection, Family::Dissection, "separating-diagonals",
       "SeparatingDiagonals(dissection)", 0},
  };
  return infos;
}

const StatisticInfo& statistic_info(StatisticId id) {
  for (const auto& s : all_statistics())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown statistic id");
}

StatisticId find_statistic(Family f, std::string_view cli_name) {
  for (const auto& s : all_statistics())
    if (s.family == f && s.name == cli_name) return s.id;
  throw std::invalid_argument("unknown statistic '" + std::string(cli_name) + "' for family " +
                              std::string(family_name(f)));
}

std::optional<int> last_index(StatisticId id, int n) {
  switch (id) {
    case StatisticId::PlaneLeafDepth: return std::nullopt;
    case StatisticId::DyckVertexHeight: return 2 * n;
    case StatisticId::IncreasingInternalDepthInorder: return n - 1;
    default: return n;
  }
}

namespace {

std::vector<int> binary_leaf_values(const BinaryTree& t, bool abscissa) {
  std::vector<int> out;
  std::vector<int> stack{0};
  for (auto c : t.code()) {
    int v = stack.back();
    stack.pop_back();
    if (c == 1) {
      // right child first so that the left child is popped next
      stack.push_back(v + 1);
      stack.push_back(abscissa ? v - 1 : v + 1);
    } else {
      out.push_back(v);
    }
  }
  return out;
}

// Depth of every node in preorder.
std::vector<int> plane_depths(const PlaneTree& t) {
  std::vector<int> depth;
  std::vector<std::pair<int, int>> stack;  // (depth of parent, children still to visit)
  for (int deg : t.degrees()) {
    int d = 0;
    if (!stack.empty()) {
      d = stack.back().first + 1;
      if (--stack.back().second == 0) stack.pop_back();
    }
    depth.push_back(d);
    if (deg > 0) stack.emplace_back(d, deg);
  }
  return depth;
}

std::vector<int> plane_leaf_depths(const PlaneTree& t) {
  auto depth = plane_depths(t);
  std::vector<int> out;
  for (std::size_t i = 0; i < depth.size(); ++i)
    if (t.degrees()[i] == 0) out.push_back(depth[i]);
  return out;
}

std::vector<int> separating_counts(const PolygonSubdivision& s) {
  std::vector<int> out;
  for (int r = 0; r <= s.size(); ++r) {
    int side = r + 1, cnt = 0;
    for (auto [a, b] : s.diagonals())
      if ((a == 0) != (a <= side && side < b)) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

}  // namespace

StatVector statistic_vector(const CombObject& obj, StatisticId stat) {
  const StatisticInfo& info = statistic_info(stat);
  if (family_of(obj) != info.family)
    throw FamilyMismatch("statistic " + std::string(info.ident) + " does not apply to family " +
                         std::string(family_name(family_of(obj))));
  StatVector sv;
  sv.first_r = info.first_index;
  switch (stat) {
    case StatisticId::BinaryLeafDepth: sv.values = binary_leaf_values(std::get<BinaryTree>(obj), false); break;
    case StatisticId::BinaryLeafAbscissa: sv.values = binary_leaf_values(std::get<BinaryTree>(obj), true); break;
    case StatisticId::PlaneLeafDepth: sv.values = plane_leaf_depths(std::get<PlaneTree>(obj)); break;
    case StatisticId::PlaneNodeDepthPreorder: sv.values = plane_depths(std::get<PlaneTree>(obj)); break;
    case StatisticId::SchroederLeafDepth: sv.values = plane_leaf_depths(std::get<SchroederTree>(obj).tree()); break;
    case StatisticId::DyckVertexHeight:
    case StatisticId::DyckUpstepHeight:
    case StatisticId::DyckDownstepHeight: {
      const auto& steps = std::get<DyckPath>(obj).steps();
      int h = 0;
      if (stat == StatisticId::DyckVertexHeight) sv.values.push_back(0);
      for (char c : steps) {
        if (c == 'U') {
          ++h;
          if (stat == StatisticId::DyckUpstepHeight) sv.values.push_back(h);
        } else {
          if (stat == StatisticId::DyckDownstepHeight) sv.values.push_back(h);
          --h;
        }
        if (stat == StatisticId::DyckVertexHeight) sv.values.push_back(h);
      }
      break;
    }
    case StatisticId::NoncrossingNodeDepth: {
      const auto& t = std::get<NoncrossingTree>(obj);
      std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.size() + 1));
      for (auto [a, b] : t.edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
      }
      sv.values.assign(adj.size(), -1);
      std::deque<int> q{0};
      sv.values[0] = 0;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)])
          if (sv.values[static_cast<std::size_t>(w)] < 0) {
            sv.values[static_cast<std::size_t>(w)] = sv.values[static_cast<std::size_t>(v)] + 1;
            q.push_back(w);
          }
      }
      break;
    }
    case StatisticId::IncreasingLeafDepth:
      sv.values = binary_leaf_values(std::get<IncreasingBinaryTree>(obj).shape(), false);
      break;
    case StatisticId::IncreasingInternalDepthInorder: {
      BinNodes b = unpack(std::get<IncreasingBinaryTree>(obj).shape());
      std::function<void(int, int)> walk = [&](int v, int d) {
        if (!b.internal[static_cast<std::size_t>(v)]) return;
        walk(b.left[static_cast<std::size_t>(v)], d + 1);
        sv.values.push_back(d);
        walk(b.right[static_cast<std::size_t>(v)], d + 1);
      };
      walk(0, 0);
      break;
    }
    case StatisticId::SeparatingDiagonalsTriangulation:
    case StatisticId::SeparatingDiagonalsDissection:
      sv.values = separating_counts(std::get<PolygonSubdivision>(obj));
      break;
  }
  return sv;
}

// ---- distribution tables

BigInt DistributionTable::count(int r, int d, int k) const {
  auto it = counts.find({k, r, d});
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt DistributionTable::total(int r, int k) const {
  auto it = totals.find({k, r});
  return it == totals.end() ? BigInt(0) : it->second;
}

std::vector<int> DistributionTable::strata() const {
  std::vector<int> out;
  for (const auto& [key, v] : totals)
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  return out;
}

std::vector<int> DistributionTable::positions(int k) const {
  std::vector<int> out;
  for (const auto& [key, v] : totals)
    if (key.first == k) out.push_back(key.second);
  return out;
}

std::map<int, BigInt> DistributionTable::column(int r, int k) const {
  std::map<int, BigInt> out;
  for (auto it = counts.lower_bound({k, r, std::numeric_limits<int>::min()});
       it != counts.end() && std::get<0>(it->first) == k && std::get<1>(it->first) == r; ++it)
    out[std::get<2>(it->first)] = it->second;
  return out;
}

bool DistributionTable::totals_vary() const {
  for (int k : strata()) {
    std::optional<BigInt> first;
    for (int r : positions(k)) {
      BigInt t = total(r, k);
      if (!first) first = t;
      if (*first != t) return true;
    }
  }
  return false;
}

std::string DistributionTable::csv(bool header) const {
  std::ostringstream os;
  const auto& info = statistic_info(statistic);
  if (header) os << "family,statistic,n," << (stratified ? "k," : "") << "r,d,count,total\n";
  for (const auto& [key, v] : counts) {
    auto [k, r, d] = key;
    os << family_name(family) << ',' << info.name << ',' << n << ',';
    if (stratified) os << k << ',';
    os << r << ',' << d << ',' << v.get_str() << ',' << total(r, k).get_str() << '\n';
  }
  return os.str();
}

DistributionTable tabulate(const std::vector<CombObject>& objs, Family f, StatisticId stat, int n,
                           const TableOptions& opts) {
  const bool stratify = opts.stratify_plane && stat == StatisticId::PlaneLeafDepth;
  using Counts = std::map<std::tuple<int, int, int>, long long>;
  using Totals = std::map<std::pair<int, int>, long long>;
  struct Partial {
    Counts counts;
    Totals totals;
  };
  const std::size_t workers = static_cast<std::size_t>(std::max(1, opts.workers));
  std::vector<Partial> parts(workers);
  auto work = [&](std::size_t w) {
    Partial& p = parts[w];
    const std::size_t lo = objs.size() * w / workers, hi = objs.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) {
      StatVector sv = statistic_vector(objs[i], stat);
      int k = stratify ? std::get<PlaneTree>(objs[i]).leaf_count() : 0;
      for (std::size_t j = 0; j < sv.values.size(); ++j) {
        int r = sv.first_r + static_cast<int>(j);
        ++p.counts[{k, r, sv.values[j]}];
        ++p.totals[{k, r}];
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  DistributionTable table;
  table.family = f;
  table.statistic = stat;
  table.n = n;
  table.stratified = stratify;
  table.object_count = static_cast<unsigned long>(objs.size());
  for (const auto& p : parts) {
    for (const auto& [key, v] : p.counts) table.counts[key] += static_cast<long>(v);
    for (const auto& [key, v] : p.totals) table.totals[key] += static_cast<long>(v);
  }
  return table;
}

DistributionTable distribution_table(Family f, StatisticId stat, int n, const TableOptions& opts) {
  if (statistic_info(stat).family != f)
    throw FamilyMismatch("statistic " + std::string(statistic_info(stat).ident) + " does not apply to family " +
                         std::string(family_name(f)));
  return tabulate(generate_all(f, n, opts.budgets), f, stat, n, opts);
}

// ---- codec

namespace {

void binary_text(const BinaryTree& t, std::string& out) {
  if (t.is_leaf()) return;
  out += '(';
  binary_text(t.left(), out);
  out += ')';
  binary_text(t.right(), out);
}

void plane_text(const PlaneTree& t, std::string& out) {
  out += '(';
  for (const auto& c : t.children()) plane_text(c, out);
  out += ')';
}

std::string edges_text(const std::vector<Edge>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(es[i].first) + '-' + std::to_string(es[i].second);
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed integer: '" + s + "'");
  return v;
}

std::vector<Edge> parse_edges(std::string_view s) {
  std::vector<Edge> out;
  if (s.empty()) return out;
  for (const auto& item : split(s, ',')) {
    auto ab = split(item, '-');
    if (ab.size() != 2) throw std::invalid_argument("malformed edge: '" + item + "'");
    out.emplace_back(parse_int(ab[0]), parse_int(ab[1]));
  }
  return out;
}

BinaryTree parse_binary(std::string_view s) {
  // B := "" | "(" B ")" B
  std::size_t pos = 0;
  std::function<BinaryTree()> rec = [&]() -> BinaryTree {
    if (pos >= s.size() || s[pos] == ')') return BinaryTree::leaf();
    if (s[pos] != '(') throw std::invalid_argument("malformed binary tree text");
    ++pos;
    BinaryTree l = rec();
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("unbalanced binary tree text");
    ++pos;
    BinaryTree r = rec();
    return BinaryTree::node(l, r);
  };
  BinaryTree t = rec();
  if (pos != s.size()) throw std::invalid_argument("trailing characters in binary tree text");
  return t;
}

PlaneTree parse_plane(std::string_view s) {
  std::size_t pos = 0;
  std::function<PlaneTree()> rec = [&]() -> PlaneTree {
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("malformed plane tree text");
    ++pos;
    std::vector<PlaneTree> kids;
    while (pos < s.size() && s[pos] == '(') kids.push_back(rec());
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("unbalanced plane tree text");
    ++pos;
    return PlaneTree::node(kids);
  };
  PlaneTree t = rec();
  if (pos != s.size()) throw std::invalid_argument("trailing characters in plane tree text");
  return t;
}

}  // namespace

std::string encode(const CombObject& obj) {
  struct V {
    std::string operator()(const BinaryTree& t) const {
      std::string s;
      binary_text(t, s);
      return s.empty() ? "." : s;
    }
    std::string operator()(const PlaneTree& t) const {
      std::string s;
      plane_text(t, s);
      return s;
    }
    std::string operator()(const SchroederTree& t) const { return (*this)(t.tree()); }
    std::string operator()(const DyckPath& p) const { return p.steps().empty() ? "." : p.steps(); }
    std::string operator()(const NoncrossingTree& t) const {
      return t.edges().empty() ? "." : edges_text(t.edges());
    }
    std::string operator()(const IncreasingBinaryTree& t) const {
      if (t.size() == 0) return ".";
      std::string s = (*this)(t.shape()) + ":";
      for (std::size_t i = 0; i < t.labels().size(); ++i) s += (i ? "," : "") + std::to_string(t.labels()[i]);
      return s;
    }
    std::string operator()(const PolygonSubdivision& p) const {
      return std::to_string(p.vertex_count()) + "|" + edges_text(p.diagonals());
    }
  };
  return std::visit(V{}, obj);
}

CombObject decode(Family f, std::string_view text) {
  const bool empty = text == ".";
  switch (f) {
    case Family::Binary: return empty ? BinaryTree::leaf() : parse_binary(text);
    case Family::Plane: return parse_plane(text);
    case Family::Schroeder: return SchroederTree(parse_plane(text));
    case Family::Dyck: return DyckPath(empty ? std::string() : std::string(text));
    case Family::Noncrossing: {
      auto edges = empty ? std::vector<Edge>{} : parse_edges(text);
      const int n = static_cast<int>(edges.size());
      return NoncrossingTree(n, std::move(edges));
    }
    case Family::Increasing: {
      if (empty) return IncreasingBinaryTree();
      auto colon = text.find(':');
      if (colon == std::string_view::npos) throw std::invalid_argument("increasing tree text needs shape:labels");
      BinaryTree shape = parse_binary(text.substr(0, colon));
      std::vector<int> labels;
      for (const auto& item : split(text.substr(colon + 1), ',')) labels.push_back(parse_int(item));
      return IncreasingBinaryTree(std::move(shape), std::move(labels));
    }
    case Family::Triangulation:
    case Family::Dissection: {
      auto bar = text.find('|');
      if (bar == std::string_view::npos) throw std::invalid_argument("subdivision text needs vertices|diagonals");
      int m = parse_int(std::string(text.substr(0, bar)));
      return PolygonSubdivision(m - 2, parse_edges(text.substr(bar + 1)),
                                f == Family::Triangulation ? SubdivisionKind::Triangulation
                                                           : SubdivisionKind::Dissection);
    }
  }
  throw std::invalid_argument("unknown family");
}

std::string encode_permutation(const Permutation& p) {
  bool digits = std::all_of(p.begin(), p.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!digits && i) s += ',';
    s += std::to_string(p[i]);
  }
  return s.empty() ? "." : s;
}

Permutation decode_permutation(std::string_view text) {
  Permutation p;
  if (text == "." || text.empty()) return p;
  if (text.find(',') != std::string_view::npos) {
    for (const auto& item : split(text, ',')) p.push_back(parse_int(item));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument("malformed permutation text");
      p.push_back(c - '0');
    }
  }
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1) throw std::invalid_argument("not a permutation of 1..n");
  return p;
}

}  // namespace combstat
