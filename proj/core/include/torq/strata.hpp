#pragma once

// Combinatorial types of stable scaled curves over the affine line, with
// degree decorations. A type is a rooted tree whose vertices carry a scaling
// state (zero, finite, infinite), a degree label and marked points; the root
// carries the output marking z_0. On the path from any marking to the root
// exactly one vertex has finite nonzero scaling, with zero scaling below it
// and infinite scaling above. Stability asks for three special points on
// degree-zero vertices with degenerate scaling and two on finite ones.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torq/rational.hpp"
#include "torq/weights.hpp"

namespace torq {

enum class Scaling { zero, finite, infinite };

struct TreeVertex {
  Scaling scaling = Scaling::finite;
  RatVec degree;             // length = degree_rank of the tree
  std::vector<int> marks;    // sorted distinct labels >= 1
  int parent = -1;           // -1 at the root
  std::vector<int> children;
  std::optional<long> twist;  // on the edge to the parent; finite/infinite edges
};

struct ColoredTree {
  int degree_rank = 1;
  int root = 0;
  std::vector<TreeVertex> verts;

  RatVec total_degree() const;
  std::vector<int> mark_labels() const;  // sorted
  int mark_vertex(int label) const;      // -1 when absent
  std::vector<int> path_to_root(int v) const;
};

ColoredTree single_vertex_tree(Scaling s, const RatVec& degree,
                               std::vector<int> marks);
// Returns the index of the new vertex.
int add_child(ColoredTree& t, int parent, Scaling s, const RatVec& degree,
              std::vector<int> marks, std::optional<long> twist = {});

struct TreeDiagnostics {
  bool ok = true;
  std::vector<std::string> notes;
};

using EffectivityPredicate = std::function<bool(const RatVec&)>;

// Full validity: structure, marking placement, per-marking monotonicity,
// twist placement (and divisibility against the sector order when a weight
// system is supplied), effectivity of every degree label, and stability.
TreeDiagnostics validate(const ColoredTree& t,
                         const EffectivityPredicate& effective = {},
                         const WeightSystem* ws = nullptr);

// Root- and marking-preserving isomorphism invariant; equal strings iff
// isomorphic types.
std::string canonical_encoding(const ColoredTree& t);
bool isomorphic(const ColoredTree& a, const ColoredTree& b);

// Codimension of the stratum: edges away from the infinite region count
// one each, nodes inside it count one each, and the infinite region itself
// contributes a single unit shared by all its attaching edges.
long codimension(const ColoredTree& t);

struct EnumLimits {
  long budget = 0;           // 0 means TORQ_BUDGET
  int max_degree_parts = 8;  // cap on vertices carrying nonzero degree
};

// All valid types up to isomorphism with marks {1..n} and degree labels
// drawn from the list, summing to total. Throws BudgetError past the
// budget.
std::vector<ColoredTree> enumerate_types(
    int n, const std::vector<RatVec>& effective_degrees, const RatVec& total,
    const EnumLimits& limits = {});

// Edges are named by their child vertex.
ColoredTree collapse_edge(const ColoredTree& t, int child);
std::pair<ColoredTree, ColoredTree> cut_edge(const ColoredTree& t, int child);
// Inverse of cut_edge: consumes the given mark of a and attaches the piece
// there.
ColoredTree glue_at_mark(const ColoredTree& a, int mark,
                         const ColoredTree& piece,
                         std::optional<long> twist = {});
ColoredTree forget_tail(const ColoredTree& t, int mark);

// Collapses unstable degree-zero vertices, deepest first, until the type is
// stable. Idempotent. Throws UnstabilizableError when nothing can absorb
// the last unstable vertex.
ColoredTree stabilize(const ColoredTree& t);

struct Splitting {
  std::vector<std::vector<int>> parts;  // disjoint, union {1..n}
  std::vector<RatVec> part_degrees;     // aligned with parts
  RatVec principal_degree;              // class of the target-space piece
};

// The index set of the infinite-scaling boundary: unordered collections of
// r >= 1 parts covering {1..n}, empty parts allowed only with nonzero
// degree, all degrees from the effective list and summing to total.
std::vector<Splitting> infinite_splittings(
    int n, const RatVec& total, const std::vector<RatVec>& effective_degrees,
    const EnumLimits& limits = {});

}  // namespace torq
