#include "torq/strata.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "torq/env.hpp"
#include "torq/errors.hpp"
#include "torq/inertia.hpp"

namespace torq {

namespace {

char scaling_char(Scaling s) {
  switch (s) {
    case Scaling::zero: return '0';
    case Scaling::finite: return 'f';
    case Scaling::infinite: return 'i';
  }
  return '?';
}

long specials(const ColoredTree& t, int v) {
  // Non-root vertices see their parent edge, the root sees z_0: one extra
  // special point either way.
  return static_cast<long>(t.verts[v].marks.size()) +
         static_cast<long>(t.verts[v].children.size()) + 1;
}

long stability_threshold(Scaling s) { return s == Scaling::finite ? 2 : 3; }

}  // namespace

RatVec ColoredTree::total_degree() const {
  RatVec sum = zero_vec(degree_rank);
  for (const auto& v : verts) sum = add(sum, v.degree);
  return sum;
}

std::vector<int> ColoredTree::mark_labels() const {
  std::vector<int> out;
  for (const auto& v : verts) out.insert(out.end(), v.marks.begin(), v.marks.end());
  std::sort(out.begin(), out.end());
  return out;
}

int ColoredTree::mark_vertex(int label) const {
  for (size_t i = 0; i < verts.size(); ++i)
    for (int m : verts[i].marks)
      if (m == label) return static_cast<int>(i);
  return -1;
}

std::vector<int> ColoredTree::path_to_root(int v) const {
  std::vector<int> path;
  int cur = v;
  int guard = static_cast<int>(verts.size()) + 1;
  while (cur != -1 && guard-- > 0) {
    path.push_back(cur);
    if (cur == root) break;
    cur = verts[cur].parent;
  }
  return path;
}

ColoredTree single_vertex_tree(Scaling s, const RatVec& degree,
                               std::vector<int> marks) {
  ColoredTree t;
  t.degree_rank = static_cast<int>(degree.size());
  t.root = 0;
  TreeVertex v;
  v.scaling = s;
  v.degree = degree;
  std::sort(marks.begin(), marks.end());
  v.marks = std::move(marks);
  t.verts.push_back(std::move(v));
  return t;
}

int add_child(ColoredTree& t, int parent, Scaling s, const RatVec& degree,
              std::vector<int> marks, std::optional<long> twist) {
  TreeVertex v;
  v.scaling = s;
  v.degree = degree;
  std::sort(marks.begin(), marks.end());
  v.marks = std::move(marks);
  v.parent = parent;
  v.twist = twist;
  t.verts.push_back(std::move(v));
  int idx = static_cast<int>(t.verts.size()) - 1;
  t.verts[parent].children.push_back(idx);
  return idx;
}

TreeDiagnostics validate(const ColoredTree& t,
                         const EffectivityPredicate& effective,
                         const WeightSystem* ws) {
  TreeDiagnostics diag;
  auto note = [&](const std::string& s) {
    diag.ok = false;
    diag.notes.push_back(s);
  };

  int size = static_cast<int>(t.verts.size());
  if (size == 0) {
    note("empty tree");
    return diag;
  }
  if (t.root < 0 || t.root >= size || t.verts[t.root].parent != -1) {
    note("root index or root parent is inconsistent");
    return diag;
  }
  for (int v = 0; v < size; ++v) {
    if (v != t.root && (t.verts[v].parent < 0 || t.verts[v].parent >= size)) {
      note("vertex " + std::to_string(v) + " has no parent");
      return diag;
    }
    for (int c : t.verts[v].children)
      if (c < 0 || c >= size || t.verts[c].parent != v) {
        note("parent/child lists disagree at vertex " + std::to_string(v));
        return diag;
      }
  }
  for (int v = 0; v < size; ++v) {
    auto path = t.path_to_root(v);
    if (path.back() != t.root) {
      note("vertex " + std::to_string(v) + " is not attached to the root");
      return diag;
    }
  }

  for (int v = 0; v < size; ++v)
    if (static_cast<int>(t.verts[v].degree.size()) != t.degree_rank)
      note("vertex " + std::to_string(v) + " has a degree of the wrong rank");

  std::vector<int> labels = t.mark_labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1) note("marking labels must be positive");
    if (i > 0 && labels[i] == labels[i - 1])
      note("marking " + std::to_string(labels[i]) + " appears twice");
  }

  for (int v = 0; v < size; ++v)
    if (!t.verts[v].marks.empty() && t.verts[v].scaling == Scaling::infinite)
      note("markings sit on infinite-scaling vertex " + std::to_string(v));

  // Monotonicity along every marking path: exactly one finite level, zero
  // below it, infinite above it.
  for (int v = 0; v < size; ++v) {
    if (t.verts[v].marks.empty()) continue;
    auto path = t.path_to_root(v);
    int finite_at = -1, finite_count = 0;
    for (size_t i = 0; i < path.size(); ++i)
      if (t.verts[path[i]].scaling == Scaling::finite) {
        ++finite_count;
        finite_at = static_cast<int>(i);
      }
    if (finite_count != 1) {
      note("path from the markings at vertex " + std::to_string(v) +
           " crosses " + std::to_string(finite_count) +
           " finite-scaling vertices");
      continue;
    }
    for (size_t i = 0; i < path.size(); ++i) {
      Scaling s = t.verts[path[i]].scaling;
      if (static_cast<int>(i) < finite_at && s != Scaling::zero)
        note("non-zero scaling below the finite level on a marking path");
      if (static_cast<int>(i) > finite_at && s != Scaling::infinite)
        note("non-infinite scaling above the finite level on a marking path");
    }
  }

  for (int v = 0; v < size; ++v) {
    if (!t.verts[v].twist) continue;
    if (v == t.root) {
      note("twist on the root");
      continue;
    }
    if (*t.verts[v].twist < 1) note("twist must be >= 1");
    Scaling a = t.verts[v].scaling, b = t.verts[t.verts[v].parent].scaling;
    bool fin_inf = (a == Scaling::finite && b == Scaling::infinite) ||
                   (a == Scaling::infinite && b == Scaling::finite);
    if (!fin_inf)
      note("twist on an edge that does not join finite and infinite scaling");
    if (ws) {
      if (ws->rank != t.degree_rank) {
        note("weight system rank does not match the degree rank");
      } else {
        RatVec sub_deg = zero_vec(t.degree_rank);
        std::function<void(int)> acc = [&](int u) {
          sub_deg = add(sub_deg, t.verts[u].degree);
          for (int c : t.verts[u].children) acc(c);
        };
        acc(v);
        Int order = TorsionElement::from(sub_deg).order;
        if (order % Int(*t.verts[v].twist) != 0)
          note("twist " + std::to_string(*t.verts[v].twist) +
               " does not divide the sector order " + order.get_str());
      }
    }
  }

  if (effective)
    for (int v = 0; v < size; ++v)
      if (!effective(t.verts[v].degree))
        note("degree label at vertex " + std::to_string(v) + " is not effective");

  for (int v = 0; v < size; ++v) {
    if (!is_zero(t.verts[v].degree)) continue;
    long need = stability_threshold(t.verts[v].scaling);
    if (specials(t, v) < need)
      note("vertex " + std::to_string(v) + " has " +
           std::to_string(specials(t, v)) + " special points, needs " +
           std::to_string(need));
  }
  return diag;
}

namespace {

std::string encode_vertex(const ColoredTree& t, int v) {
  std::ostringstream os;
  os << "(" << scaling_char(t.verts[v].scaling) << "|";
  for (size_t i = 0; i < t.verts[v].degree.size(); ++i) {
    if (i) os << ",";
    os << t.verts[v].degree[i].get_str();
  }
  os << "|";
  for (size_t i = 0; i < t.verts[v].marks.size(); ++i) {
    if (i) os << ",";
    os << t.verts[v].marks[i];
  }
  os << "|";
  if (t.verts[v].twist) os << *t.verts[v].twist;
  os << "|";
  std::vector<std::string> kids;
  for (int c : t.verts[v].children) kids.push_back(encode_vertex(t, c));
  std::sort(kids.begin(), kids.end());
  for (const auto& k : kids) os << k;
  os << ")";
  return os.str();
}

}  // namespace

std::string canonical_encoding(const ColoredTree& t) {
  return encode_vertex(t, t.root);
}

bool isomorphic(const ColoredTree& a, const ColoredTree& b) {
  return canonical_encoding(a) == canonical_encoding(b);
}

long codimension(const ColoredTree& t) {
  bool has_inf = false;
  for (const auto& v : t.verts)
    if (v.scaling == Scaling::infinite) has_inf = true;
  long c = has_inf ? 1 : 0;
  for (int v = 0; v < static_cast<int>(t.verts.size()); ++v) {
    if (v == t.root) continue;
    bool a_inf = t.verts[v].scaling == Scaling::infinite;
    bool b_inf = t.verts[t.verts[v].parent].scaling == Scaling::infinite;
    if (a_inf == b_inf) ++c;
    // finite/infinite edges are absorbed into the single infinite-region unit
  }
  return c;
}

// ---------------------------------------------------------------------------
// Morphisms

namespace {

ColoredTree compact(const ColoredTree& t, const std::vector<int>& keep,
                    int new_root) {
  std::vector<int> index(t.verts.size(), -1);
  for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  ColoredTree out;
  out.degree_rank = t.degree_rank;
  out.root = index[new_root];
  out.verts.resize(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    const TreeVertex& src = t.verts[keep[i]];
    TreeVertex& dst = out.verts[i];
    dst = src;
    dst.parent = (keep[i] == new_root) ? -1 : index[src.parent];
    dst.children.clear();
    for (int c : src.children)
      if (index[c] >= 0) dst.children.push_back(index[c]);
  }
  return out;
}

std::vector<int> subtree_of(const ColoredTree& t, int v) {
  std::vector<int> out;
  std::function<void(int)> rec = [&](int u) {
    out.push_back(u);
    for (int c : t.verts[u].children) rec(c);
  };
  rec(v);
  std::sort(out.begin(), out.end());
  return out;
}

void check_post_collapse(const ColoredTree& out) {
  for (int v = 0; v < static_cast<int>(out.verts.size()); ++v) {
    if (out.verts[v].marks.empty()) continue;
    if (out.verts[v].scaling == Scaling::infinite)
      throw IllegalMergeError(
          "collapse_edge: a marking would land on infinite scaling");
    auto path = out.path_to_root(v);
    int fcount = 0, fat = -1;
    for (size_t i = 0; i < path.size(); ++i)
      if (out.verts[path[i]].scaling == Scaling::finite) {
        ++fcount;
        fat = static_cast<int>(i);
      }
    bool mono = fcount == 1;
    for (size_t i = 0; mono && i < path.size(); ++i) {
      Scaling s = out.verts[path[i]].scaling;
      if (static_cast<int>(i) < fat && s != Scaling::zero) mono = false;
      if (static_cast<int>(i) > fat && s != Scaling::infinite) mono = false;
    }
    if (!mono)
      throw IllegalMergeError("collapse_edge: monotonicity broken at a marking");
  }
}

}  // namespace

ColoredTree collapse_edge(const ColoredTree& t, int child) {
  if (child < 0 || child >= static_cast<int>(t.verts.size()) || child == t.root)
    throw std::invalid_argument("collapse_edge: not an edge");
  int p = t.verts[child].parent;
  Scaling sp = t.verts[p].scaling, sc = t.verts[child].scaling;

  Scaling merged;
  if (sp == sc) {
    merged = sp;
  } else if ((sp == Scaling::finite && sc == Scaling::zero) ||
             (sp == Scaling::zero && sc == Scaling::finite)) {
    merged = Scaling::finite;
  } else if ((sp == Scaling::finite && sc == Scaling::infinite) ||
             (sp == Scaling::infinite && sc == Scaling::finite)) {
    merged = Scaling::infinite;
  } else {
    throw IllegalMergeError(
        "collapse_edge: zero and infinite scaling cannot merge");
  }

  ColoredTree work = t;
  {
    TreeVertex& pv = work.verts[p];
    TreeVertex& cv = work.verts[child];
    pv.scaling = merged;
    pv.degree = add(pv.degree, cv.degree);
    pv.marks.insert(pv.marks.end(), cv.marks.begin(), cv.marks.end());
    std::sort(pv.marks.begin(), pv.marks.end());
    pv.children.erase(std::find(pv.children.begin(), pv.children.end(), child));
    for (int gc : cv.children) {
      work.verts[gc].parent = p;
      pv.children.push_back(gc);
    }
    cv.children.clear();
  }

  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(work.verts.size()); ++v)
    if (v != child) keep.push_back(v);
  ColoredTree out = compact(work, keep, work.root);
  check_post_collapse(out);
  return out;
}

std::pair<ColoredTree, ColoredTree> cut_edge(const ColoredTree& t, int child) {
  if (child < 0 || child >= static_cast<int>(t.verts.size()) || child == t.root)
    throw std::invalid_argument("cut_edge: not an edge");
  int p = t.verts[child].parent;

  std::vector<int> below = subtree_of(t, child);
  ColoredTree piece = compact(t, below, child);
  piece.verts[piece.root].parent = -1;
  piece.verts[piece.root].twist.reset();

  ColoredTree work = t;
  auto& pc = work.verts[p].children;
  pc.erase(std::find(pc.begin(), pc.end(), child));
  std::set<int> below_set(below.begin(), below.end());
  std::vector<int> keep;
  for (int v = 0; v < static_cast<int>(t.verts.size()); ++v)
    if (!below_set.count(v)) keep.push_back(v);
  ColoredTree rest = compact(work, keep, t.root);

  int cut_label = 0;
  for (int m : t.mark_labels()) cut_label = std::max(cut_label, m);
  ++cut_label;
  int p_new = -1;
  for (size_t i = 0; i < keep.size(); ++i)
    if (keep[i] == p) p_new = static_cast<int>(i);
  rest.verts[p_new].marks.push_back(cut_label);
  std::sort(rest.verts[p_new].marks.begin(), rest.verts[p_new].marks.end());
  return {rest, piece};
}

ColoredTree glue_at_mark(const ColoredTree& a, int mark,
                         const ColoredTree& piece, std::optional<long> twist) {
  int at = a.mark_vertex(mark);
  if (at < 0) throw std::invalid_argument("glue_at_mark: no such marking");
  if (a.degree_rank != piece.degree_rank)
    throw std::invalid_argument("glue_at_mark: degree rank mismatch");
  ColoredTree out = a;
  auto& marks = out.verts[at].marks;
  marks.erase(std::find(marks.begin(), marks.end(), mark));

  int offset = static_cast<int>(out.verts.size());
  for (const auto& v : piece.verts) {
    TreeVertex w = v;
    if (w.parent >= 0) w.parent += offset;
    for (int& c : w.children) c += offset;
    out.verts.push_back(std::move(w));
  }
  int piece_root = offset + piece.root;
  out.verts[piece_root].parent = at;
  out.verts[piece_root].twist = twist;
  out.verts[at].children.push_back(piece_root);
  return out;
}

ColoredTree stabilize(const ColoredTree& t) {
  ColoredTree cur = t;
  while (true) {
    int worst = -1;
    size_t worst_depth = 0;
    for (int v = 0; v < static_cast<int>(cur.verts.size()); ++v) {
      if (!is_zero(cur.verts[v].degree)) continue;
      if (specials(cur, v) >= stability_threshold(cur.verts[v].scaling))
        continue;
      size_t d = cur.path_to_root(v).size();
      if (worst < 0 || d > worst_depth) {
        worst_depth = d;
        worst = v;
      }
    }
    if (worst < 0) return cur;

    if (worst == cur.root) {
      TreeVertex& v = cur.verts[worst];
      if (v.children.empty())
        throw UnstabilizableError("stabilize: a single unstable vertex remains");
      if (v.children.size() != 1)
        throw std::logic_error("stabilize: branching root cannot be unstable");
      int c = v.children[0];
      cur.verts[c].marks.insert(cur.verts[c].marks.end(), v.marks.begin(),
                                v.marks.end());
      std::sort(cur.verts[c].marks.begin(), cur.verts[c].marks.end());
      cur.verts[c].parent = -1;
      cur.verts[c].twist.reset();
      std::vector<int> keep;
      for (int u = 0; u < static_cast<int>(cur.verts.size()); ++u)
        if (u != worst) keep.push_back(u);
      cur = compact(cur, keep, c);
      continue;
    }

    int p = cur.verts[worst].parent;
    if (cur.verts[worst].children.empty()) {
      // A contracting bubble leaves its marking at the node.
      cur.verts[p].marks.insert(cur.verts[p].marks.end(),
                                cur.verts[worst].marks.begin(),
                                cur.verts[worst].marks.end());
      std::sort(cur.verts[p].marks.begin(), cur.verts[p].marks.end());
      auto& pc = cur.verts[p].children;
      pc.erase(std::find(pc.begin(), pc.end(), worst));
    } else if (cur.verts[worst].children.size() == 1) {
      int c = cur.verts[worst].children[0];
      cur.verts[c].parent = p;
      cur.verts[c].twist.reset();
      auto& pc = cur.verts[p].children;
      *std::find(pc.begin(), pc.end(), worst) = c;
      cur.verts[worst].children.clear();
    } else {
      throw std::logic_error("stabilize: branching vertex cannot be unstable");
    }
    std::vector<int> keep;
    for (int u = 0; u < static_cast<int>(cur.verts.size()); ++u)
      if (u != worst) keep.push_back(u);
    cur = compact(cur, keep, cur.root);
  }
}

ColoredTree forget_tail(const ColoredTree& t, int mark) {
  int at = t.mark_vertex(mark);
  if (at < 0) throw std::invalid_argument("forget_tail: no such marking");
  ColoredTree out = t;
  auto& marks = out.verts[at].marks;
  marks.erase(std::find(marks.begin(), marks.end(), mark));
  return stabilize(out);
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Types are built bottom-up from canonical subtrees. The scaling rules are
// local: an infinite vertex has infinite or finite children and no markings,
// a finite vertex has zero-scaled children, a zero vertex has zero-scaled
// children, and the root is finite or infinite. Together these force the
// marking-path monotonicity, so generated trees are valid by construction
// once per-vertex stability holds.

namespace {

struct GenNode {
  Scaling scaling = Scaling::finite;
  RatVec degree;
  std::vector<int> marks;
  std::vector<const GenNode*> children;
  RatVec degree_sum;
  int parts_used = 0;  // vertices with nonzero degree
  std::string enc;
};

struct Generator {
  int n = 0;
  int rank = 1;
  bool zero_allowed = false;
  std::vector<RatVec> nonzero;
  int max_parts = 0;
  long budget = 0;
  long used = 0;

  std::vector<std::unique_ptr<GenNode>> arena;
  // (scaling, exact mark set, exact nonzero-degree vertex count) -> subtrees
  std::map<long, std::vector<const GenNode*>> memo;
  std::set<long> in_progress;

  long key(Scaling s, unsigned mask, int u) const {
    return (static_cast<long>(s) * (1L << n) + mask) * (max_parts + 1) + u;
  }

  void charge() {
    if (++used > budget)
      throw BudgetError("type enumeration exceeded the budget of " +
                        std::to_string(budget) + " candidates");
  }

  static std::vector<int> mask_to_marks(unsigned mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) out.push_back(i + 1);
    return out;
  }

  std::vector<Scaling> child_scalings(Scaling s) const {
    switch (s) {
      case Scaling::infinite: return {Scaling::infinite, Scaling::finite};
      case Scaling::finite: return {Scaling::zero};
      case Scaling::zero: return {Scaling::zero};
    }
    return {};
  }

  std::string node_enc(const GenNode& g) const {
    std::ostringstream os;
    os << "(" << scaling_char(g.scaling) << "|";
    for (size_t i = 0; i < g.degree.size(); ++i) {
      if (i) os << ",";
      os << g.degree[i].get_str();
    }
    os << "|";
    for (size_t i = 0; i < g.marks.size(); ++i) {
      if (i) os << ",";
      os << g.marks[i];
    }
    os << "||";
    std::vector<std::string> kids;
    for (const GenNode* c : g.children) kids.push_back(c->enc);
    std::sort(kids.begin(), kids.end());
    for (const auto& k : kids) os << k;
    os << ")";
    return os.str();
  }

  // All subtrees with root scaling s, marks exactly `mask`, and exactly `u`
  // nonzero-degree vertices. A subtree whose construction would need a
  // strict subtree with the same key is an unstable chain, so the
  // in-progress cutoff only drops invalid candidates.
  const std::vector<const GenNode*>& subtrees(Scaling s, unsigned mask, int u) {
    long k = key(s, mask, u);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    if (in_progress.count(k)) {
      static const std::vector<const GenNode*> empty;
      return empty;
    }
    in_progress.insert(k);

    std::vector<const GenNode*> result;
    std::vector<std::pair<RatVec, bool>> degree_choices;  // (delta, is_zero)
    if (zero_allowed) degree_choices.emplace_back(zero_vec(rank), true);
    if (u >= 1)
      for (const auto& d : nonzero) degree_choices.emplace_back(d, false);

    for (const auto& [delta, delta_zero] : degree_choices) {
      int child_parts = u - (delta_zero ? 0 : 1);
      if (child_parts < 0) continue;
      unsigned own = 0;
      while (true) {
        if (s != Scaling::infinite || own == 0)
          grow_children(s, delta, delta_zero, own, mask & ~own, child_parts,
                        result);
        if (own == mask) break;
        own = (own - mask) & mask;  // next submask
      }
    }

    in_progress.erase(k);
    // Different recursion orders can rediscover a multiset; dedup by code.
    std::sort(result.begin(), result.end(),
              [](const GenNode* a, const GenNode* b) { return a->enc < b->enc; });
    result.erase(std::unique(result.begin(), result.end(),
                             [](const GenNode* a, const GenNode* b) {
                               return a->enc == b->enc;
                             }),
                 result.end());
    auto& slot = memo[k];
    slot = std::move(result);
    return slot;
  }

  // Children cover `rest` and consume exactly `parts` nonzero-degree
  // vertices, listed in non-decreasing encoding order.
  void grow_children(Scaling s, const RatVec& delta, bool delta_zero,
                     unsigned own, unsigned rest, int parts,
                     std::vector<const GenNode*>& out) {
    std::vector<const GenNode*> kids;
    std::function<void(unsigned, int, const std::string&)> rec =
        [&](unsigned remaining, int parts_left, const std::string& min_enc) {
          if (remaining == 0 && parts_left == 0) {
            long spec = static_cast<long>(__builtin_popcount(own)) +
                        static_cast<long>(kids.size()) + 1;
            if (!delta_zero || spec >= stability_threshold(s)) {
              charge();
              auto node = std::make_unique<GenNode>();
              node->scaling = s;
              node->degree = delta;
              node->marks = mask_to_marks(own, n);
              node->children = kids;
              node->degree_sum = delta;
              node->parts_used = delta_zero ? 0 : 1;
              for (const GenNode* c : kids) {
                node->degree_sum = add(node->degree_sum, c->degree_sum);
                node->parts_used += c->parts_used;
              }
              node->enc = node_enc(*node);
              out.push_back(node.get());
              arena.push_back(std::move(node));
            }
          }
          for (Scaling cs : child_scalings(s)) {
            unsigned sub = remaining;
            while (true) {
              int min_u = sub == 0 ? 1 : 0;  // a child must consume something
              for (int uc = min_u; uc <= parts_left; ++uc) {
                for (const GenNode* cand : subtrees(cs, sub, uc)) {
                  if (cand->enc < min_enc) continue;
                  kids.push_back(cand);
                  rec(remaining & ~sub, parts_left - uc, cand->enc);
                  kids.pop_back();
                }
              }
              if (sub == 0) break;
              sub = (sub - 1) & remaining;
            }
          }
        };
    rec(rest, parts, "");
  }
};

ColoredTree gen_to_tree(const GenNode& g, int rank) {
  ColoredTree t;
  t.degree_rank = rank;
  std::function<int(const GenNode&, int)> emit = [&](const GenNode& node,
                                                     int parent) {
    TreeVertex v;
    v.scaling = node.scaling;
    v.degree = node.degree;
    v.marks = node.marks;
    v.parent = parent;
    t.verts.push_back(std::move(v));
    int idx = static_cast<int>(t.verts.size()) - 1;
    for (const GenNode* c : node.children) {
      int ci = emit(*c, idx);
      t.verts[idx].children.push_back(ci);
    }
    return idx;
  };
  t.root = emit(g, -1);
  return t;
}

}  // namespace

std::vector<ColoredTree> enumerate_types(
    int n, const std::vector<RatVec>& effective_degrees, const RatVec& total,
    const EnumLimits& limits) {
  if (n < 0) throw std::invalid_argument("enumerate_types: n must be >= 0");
  if (n > 20) throw BudgetError("enumerate_types: too many markings");
  int rank = static_cast<int>(total.size());
  for (const auto& d : effective_degrees)
    if (static_cast<int>(d.size()) != rank)
      throw DimensionMismatchError("enumerate_types: degree rank mismatch");
  if (n == 0 && is_zero(total)) return {};

  Generator gen;
  gen.n = n;
  gen.rank = rank;
  gen.max_parts = limits.max_degree_parts;
  gen.budget = limits.budget > 0 ? limits.budget : enum_budget();
  for (const auto& d : effective_degrees) {
    if (is_zero(d))
      gen.zero_allowed = true;
    else if (std::find(gen.nonzero.begin(), gen.nonzero.end(), d) ==
             gen.nonzero.end())
      gen.nonzero.push_back(d);
  }

  // Only part counts whose nonzero labels can sum to the total are worth
  // exploring; zero labels never change the sum.
  std::vector<int> counts;
  {
    std::vector<RatVec> sums{zero_vec(rank)};
    for (int p = 0; p <= gen.max_parts; ++p) {
      bool hit = false;
      for (const auto& s : sums)
        if (s == total) hit = true;
      if (hit) counts.push_back(p);
      if (p == gen.max_parts) break;
      std::vector<RatVec> next;
      for (const auto& s : sums)
        for (const auto& d : gen.nonzero) {
          RatVec v = add(s, d);
          if (std::find(next.begin(), next.end(), v) == next.end())
            next.push_back(v);
        }
      sums = std::move(next);
      if (static_cast<long>(sums.size()) > gen.budget)
        throw BudgetError("degree-sum exploration exceeded the budget");
    }
  }

  unsigned full = n == 0 ? 0u : ((1u << n) - 1);
  std::map<std::string, ColoredTree> out;
  for (Scaling s : {Scaling::finite, Scaling::infinite})
    for (int u : counts)
      for (const GenNode* g : gen.subtrees(s, full, u)) {
        if (g->degree_sum != total) continue;
        ColoredTree t = gen_to_tree(*g, rank);
        out.emplace(canonical_encoding(t), std::move(t));
      }

  std::vector<ColoredTree> list;
  list.reserve(out.size());
  for (auto& [enc, t] : out) list.push_back(std::move(t));
  return list;
}

std::vector<Splitting> infinite_splittings(
    int n, const RatVec& total, const std::vector<RatVec>& effective_degrees,
    const EnumLimits& limits) {
  if (n < 0) throw std::invalid_argument("infinite_splittings: n must be >= 0");
  int rank = static_cast<int>(total.size());
  long budget = limits.budget > 0 ? limits.budget : enum_budget();
  long used = 0;
  auto charge = [&]() {
    if (++used > budget)
      throw BudgetError("splitting enumeration exceeded the budget");
  };

  std::vector<RatVec> degrees, nonzero;
  for (const auto& d : effective_degrees) {
    if (static_cast<int>(d.size()) != rank)
      throw DimensionMismatchError("infinite_splittings: degree rank mismatch");
    if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
      degrees.push_back(d);
  }
  for (const auto& d : degrees)
    if (!is_zero(d)) nonzero.push_back(d);
  auto in_list = [&](const RatVec& d) {
    return std::find(degrees.begin(), degrees.end(), d) != degrees.end();
  };

  // Set partitions of {1..n} via restricted growth strings; blocks come out
  // ordered by least element.
  std::vector<std::vector<std::vector<int>>> partitions;
  if (n == 0) {
    partitions.push_back({});
  } else {
    std::vector<int> rgs(n, 0);
    while (true) {
      int blocks = 0;
      for (int x : rgs) blocks = std::max(blocks, x + 1);
      std::vector<std::vector<int>> part(blocks);
      for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i + 1);
      partitions.push_back(std::move(part));
      int i = n - 1;
      while (i > 0) {
        int cap = 0;
        for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[j]);
        if (rgs[i] <= cap) break;
        --i;
      }
      if (i == 0) break;
      ++rgs[i];
      for (int j = i + 1; j < n; ++j) rgs[j] = 0;
    }
  }

  std::map<std::string, Splitting> out;
  for (const auto& blocks : partitions) {
    int b = static_cast<int>(blocks.size());
    if (b > 0 && degrees.empty()) continue;
    std::vector<size_t> idx(b, 0);
    while (true) {
      charge();
      RatVec assigned = zero_vec(rank);
      for (int i = 0; i < b; ++i) assigned = add(assigned, degrees[idx[i]]);

      // Append e >= 0 empty parts with nonzero degrees (non-decreasing, so
      // unordered collections come out once).
      std::vector<RatVec> chosen;
      std::function<void(size_t, int, RatVec)> empties = [&](size_t start,
                                                             int left,
                                                             RatVec sum) {
        charge();
        RatVec d0 = sub(total, sum);
        int r = b + static_cast<int>(chosen.size());
        if (r >= 1 && in_list(d0)) {
          Splitting sp;
          sp.parts = blocks;
          for (int i = 0; i < b; ++i) sp.part_degrees.push_back(degrees[idx[i]]);
          for (const auto& e : chosen) {
            sp.parts.push_back({});
            sp.part_degrees.push_back(e);
          }
          sp.principal_degree = d0;
          std::ostringstream key;
          key << std::setw(6) << std::setfill('0') << sp.parts.size() << "#";
          for (size_t i = 0; i < sp.parts.size(); ++i) {
            key << "[";
            for (int mk : sp.parts[i]) key << mk << ",";
            key << ":";
            for (const auto& q : sp.part_degrees[i]) key << q.get_str() << ",";
            key << "]";
          }
          key << "|";
          for (const auto& q : sp.principal_degree) key << q.get_str() << ",";
          out.emplace(key.str(), std::move(sp));
        }
        if (left == 0) return;
        for (size_t j = start; j < nonzero.size(); ++j) {
          chosen.push_back(nonzero[j]);
          empties(j, left - 1, add(sum, nonzero[j]));
          chosen.pop_back();
        }
      };
      empties(0, limits.max_degree_parts, assigned);

      if (b == 0) break;
      int pos = b - 1;
      while (pos >= 0 && idx[pos] + 1 == degrees.size()) {
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[pos];
    }
  }

  std::vector<Splitting> list;
  list.reserve(out.size());
  for (auto& [k, sp] : out) list.push_back(std::move(sp));
  return list;
}

}  // namespace torq
