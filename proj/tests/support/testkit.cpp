#include "testkit.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace testkit {

namespace {

// Canonical string of an undecorated rooted shape, for deduplication.
std::string shape_encoding(const std::vector<int>& parent, int v,
                           const std::vector<std::vector<int>>& children) {
  std::vector<std::string> kids;
  for (int c : children[v]) kids.push_back(shape_encoding(parent, c, children));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

std::vector<std::string> brute_type_encodings(int n) {
  std::set<std::string> found;
  int vmax = std::max(1, 2 * n);
  RatVec zero{Rat(0)};

  for (int V = 1; V <= vmax; ++V) {
    // All labeled parent vectors, deduplicated into shapes.
    std::set<std::string> seen_shapes;
    std::vector<std::vector<int>> shapes;
    std::vector<int> parent(V, -1);
    std::function<void(int)> shapes_rec = [&](int v) {
      if (v == V) {
        std::vector<std::vector<int>> children(V);
        for (int i = 1; i < V; ++i) children[parent[i]].push_back(i);
        if (seen_shapes.insert(shape_encoding(parent, 0, children)).second)
          shapes.push_back(parent);
        return;
      }
      for (int p = 0; p < v; ++p) {
        parent[v] = p;
        shapes_rec(v + 1);
      }
    };
    shapes_rec(1);

    for (const auto& par : shapes) {
      std::vector<std::vector<int>> children(V);
      for (int i = 1; i < V; ++i) children[par[i]].push_back(i);

      // marking assignments: mark i+1 sits at vertex assign[i]
      std::vector<int> assign(n, 0);
      while (true) {
        std::vector<std::vector<int>> marks(V);
        for (int i = 0; i < n; ++i) marks[assign[i]].push_back(i + 1);

        // cheap necessary conditions before the scaling scan
        bool hopeless = false;
        std::vector<std::vector<Scaling>> allowed(V);
        for (int v = 0; v < V && !hopeless; ++v) {
          long spec = static_cast<long>(marks[v].size()) +
                      static_cast<long>(children[v].size()) + 1;
          if (spec < 2) {
            hopeless = true;
            break;
          }
          if (spec == 2)
            allowed[v] = {Scaling::finite};
          else if (!marks[v].empty())
            allowed[v] = {Scaling::zero, Scaling::finite};
          else
            allowed[v] = {Scaling::zero, Scaling::finite, Scaling::infinite};
        }

        if (!hopeless) {
          std::vector<Scaling> choice(V, Scaling::finite);
          std::function<void(int)> scalings_rec = [&](int v) {
            if (v == V) {
              ColoredTree t;
              t.degree_rank = 1;
              t.root = 0;
              t.verts.resize(V);
              for (int u = 0; u < V; ++u) {
                t.verts[u].scaling = choice[u];
                t.verts[u].degree = zero;
                t.verts[u].marks = marks[u];
                std::sort(t.verts[u].marks.begin(), t.verts[u].marks.end());
                t.verts[u].parent = par[u];
                t.verts[u].children = children[u];
              }
              if (validate(t).ok) found.insert(canonical_encoding(t));
              return;
            }
            for (Scaling s : allowed[v]) {
              choice[v] = s;
              scalings_rec(v + 1);
            }
          };
          scalings_rec(0);
        }

        int pos = n - 1;
        while (pos >= 0 && assign[pos] + 1 == V) {
          assign[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++assign[pos];
      }
    }
  }
  return {found.begin(), found.end()};
}

ColoredTree random_structural_tree(std::mt19937& rng, int max_extra) {
  std::uniform_int_distribution<int> coin(0, 1);
  ColoredTree t = single_vertex_tree(
      coin(rng) ? Scaling::finite : Scaling::infinite, {Rat(0)}, {});

  std::uniform_int_distribution<int> extra(0, max_extra);
  int grow = extra(rng);
  for (int i = 0; i < grow; ++i) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(t.verts.size()) - 1);
    int p = pick(rng);
    Scaling ps = t.verts[p].scaling;
    Scaling cs;
    if (ps == Scaling::infinite)
      cs = coin(rng) ? Scaling::infinite : Scaling::finite;
    else
      cs = Scaling::zero;
    RatVec deg{Rat(0)};
    if (coin(rng) && coin(rng)) deg[0] = Rat(1 + coin(rng));
    add_child(t, p, cs, deg, {});
  }

  // Occasionally give the root a nonzero class too.
  if (coin(rng) && coin(rng)) t.verts[t.root].degree[0] = 1;

  // Place 1..4 markings on zero- or finite-scaling vertices; those always
  // sit legally under the growth rules above.
  std::uniform_int_distribution<int> nmarks(1, 4);
  int n = nmarks(rng);
  std::vector<int> spots;
  for (int v = 0; v < static_cast<int>(t.verts.size()); ++v)
    if (t.verts[v].scaling != Scaling::infinite) spots.push_back(v);
  int placed = 0;
  for (int label = 1; label <= n && !spots.empty(); ++label) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(spots.size()) - 1);
    int v = spots[pick(rng)];
    t.verts[v].marks.push_back(label);
    std::sort(t.verts[v].marks.begin(), t.verts[v].marks.end());
    ++placed;
  }
  if (placed == 0) t.verts[t.root].degree[0] = 1;
  return t;
}

}  // namespace testkit
