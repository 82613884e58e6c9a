#include "cocirc/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cocirc/combinatorics.hpp"

namespace cocirc {

const char* stage_name(RejectStage stage) {
  switch (stage) {
    case RejectStage::input: return "input";
    case RejectStage::regularity: return "regularity";
    case RejectStage::vertex_count: return "vertex-count";
    case RejectStage::antipodal_candidates: return "antipodal-candidates";
    case RejectStage::antipodal_map: return "antipodal-map";
    case RejectStage::partner_pairing: return "partner-pairing";
    case RejectStage::coline_trace: return "coline-trace";
    case RejectStage::labeling: return "labeling";
    case RejectStage::verification: return "verification";
  }
  return "unknown";
}

std::optional<Parameters> infer_parameters(int vertex_count, int degree) {
  if (degree < 2 || degree % 2 != 0) return std::nullopt;
  if (vertex_count < 4 || vertex_count % 2 != 0) return std::nullopt;
  const int r = degree / 2 + 1;
  const std::int64_t half = vertex_count / 2;
  for (int n = r;; ++n) {
    std::int64_t c;
    try {
      c = binomial(n, r - 1);
    } catch (const std::overflow_error&) {
      return std::nullopt;
    }
    if (c == half) return Parameters{n, r};
    if (c > half) return std::nullopt;
  }
}

std::vector<int> antipodal_candidates(const DistanceMatrix& dist, int v, int antipodal_distance) {
  std::vector<int> result;
  const auto& row = dist[static_cast<std::size_t>(v)];
  for (int w = 0; w < static_cast<int>(row.size()); ++w)
    if (row[static_cast<std::size_t>(w)] == antipodal_distance) result.push_back(w);
  return result;
}

namespace {

int at(const DistanceMatrix& dist, int u, int v) {
  return dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

void set_failure(std::string* failure, std::string text) {
  if (failure) *failure = std::move(text);
}

}  // namespace

std::optional<AntipodalMap> build_antipodal_map(const Graph& g, const DistanceMatrix& dist,
                                                int v, int w, int antipodal_distance,
                                                std::uint64_t* distance_lookups,
                                                std::string* failure) {
  const int count = g.vertex_count;
  std::uint64_t lookups = 0;
  auto fail = [&](std::string text) -> std::optional<AntipodalMap> {
    if (distance_lookups) *distance_lookups = lookups;
    set_failure(failure, std::move(text));
    return std::nullopt;
  };
  if (at(dist, v, w) != antipodal_distance)
    return fail("seed pair is not at the antipodal distance");

  AntipodalMap a(static_cast<std::size_t>(count), -1);
  a[static_cast<std::size_t>(v)] = w;
  a[static_cast<std::size_t>(w)] = v;

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(count));
  std::vector<int> parent(static_cast<std::size_t>(count), -1);
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  std::deque<int> queue{v};
  seen[static_cast<std::size_t>(v)] = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    order.push_back(u);
    for (int x : g.adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = 1;
      parent[static_cast<std::size_t>(x)] = u;
      queue.push_back(x);
    }
  }
  if (static_cast<int>(order.size()) != count) return fail("graph is not connected");

  for (int u : order) {
    if (u == v) continue;
    const int mapped_parent = a[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])];
    int candidate = -1;
    int candidate_count = 0;
    for (int x : g.adj[static_cast<std::size_t>(mapped_parent)]) {
      ++lookups;
      if (at(dist, u, x) == antipodal_distance) {
        ++candidate_count;
        candidate = x;
      }
    }
    if (candidate_count != 1)
      return fail("vertex " + std::to_string(u) + ": " + std::to_string(candidate_count) +
                  " antipode candidates");
    int& slot = a[static_cast<std::size_t>(u)];
    if (slot != -1 && slot != candidate)
      return fail("vertex " + std::to_string(u) + ": propagation conflicts with the seed");
    slot = candidate;
  }

  for (int u = 0; u < count; ++u) {
    const int au = a[static_cast<std::size_t>(u)];
    if (au < 0 || au == u) return fail("vertex " + std::to_string(u) + ": no antipode");
    if (a[static_cast<std::size_t>(au)] != u)
      return fail("vertex " + std::to_string(u) + ": map is not an involution");
  }
  for (auto [x, y] : g.edges())
    if (!g.has_edge(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]))
      return fail("edge " + std::to_string(x) + "-" + std::to_string(y) +
                  ": image is not an edge");

  if (distance_lookups) *distance_lookups = lookups;
  return a;
}

std::optional<NeighborPairing> partner_pairing(const Graph& g, const AntipodalMap& a,
                                               const DistanceMatrix& dist, int n, int r,
                                               std::string* failure) {
  const int target = n - r;
  NeighborPairing pairing;
  pairing.pairs.resize(static_cast<std::size_t>(g.vertex_count));
  for (int x = 0; x < g.vertex_count; ++x) {
    const auto& nb = g.adj[static_cast<std::size_t>(x)];
    const int deg = static_cast<int>(nb.size());
    std::vector<int> partner(static_cast<std::size_t>(deg), -1);
    for (int i = 0; i < deg; ++i) {
      for (int j = i + 1; j < deg; ++j) {
        const int u = nb[static_cast<std::size_t>(i)];
        const int w = nb[static_cast<std::size_t>(j)];
        if (at(dist, w, a[static_cast<std::size_t>(u)]) != target ||
            at(dist, u, a[static_cast<std::size_t>(w)]) != target)
          continue;
        if (partner[static_cast<std::size_t>(i)] != -1 ||
            partner[static_cast<std::size_t>(j)] != -1) {
          set_failure(failure, "vertex " + std::to_string(x) +
                                   ": neighbor pairing is not a perfect matching");
          return std::nullopt;
        }
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
      }
    }
    auto& pairs = pairing.pairs[static_cast<std::size_t>(x)];
    for (int i = 0; i < deg; ++i) {
      const int j = partner[static_cast<std::size_t>(i)];
      if (j == -1) {
        set_failure(failure, "vertex " + std::to_string(x) +
                                 ": neighbor pairing is not a perfect matching");
        return std::nullopt;
      }
      if (j > i)
        pairs.emplace_back(nb[static_cast<std::size_t>(i)], nb[static_cast<std::size_t>(j)]);
    }
  }
  return pairing;
}

namespace {

// Index of the pair at x containing neighbor y, or -1.
int pair_index_at(const NeighborPairing& pairing, int x, int y) {
  const auto& pairs = pairing.pairs[static_cast<std::size_t>(x)];
  for (int k = 0; k < static_cast<int>(pairs.size()); ++k)
    if (pairs[static_cast<std::size_t>(k)].first == y ||
        pairs[static_cast<std::size_t>(k)].second == y)
      return k;
  return -1;
}

// The other member of the pair at x containing neighbor y, or -1.
int partner_at(const NeighborPairing& pairing, int x, int y) {
  for (const auto& [lo, hi] : pairing.pairs[static_cast<std::size_t>(x)]) {
    if (lo == y) return hi;
    if (hi == y) return lo;
  }
  return -1;
}

}  // namespace

std::optional<ColineAtlas> trace_colines(const Graph& g, const NeighborPairing& pairing,
                                         const AntipodalMap& a, int m,
                                         std::string* failure) {
  auto fail = [&](std::string text) -> std::optional<ColineAtlas> {
    set_failure(failure, std::move(text));
    return std::nullopt;
  };
  const int count = g.vertex_count;
  const int cycle_length = 2 * m;

  ColineAtlas atlas;
  atlas.cycle_of_pair.resize(static_cast<std::size_t>(count));
  atlas.antipodal_pair.resize(static_cast<std::size_t>(count));
  for (int x = 0; x < count; ++x) {
    const auto width = pairing.pairs[static_cast<std::size_t>(x)].size();
    atlas.cycle_of_pair[static_cast<std::size_t>(x)].assign(width, -1);
    atlas.antipodal_pair[static_cast<std::size_t>(x)].assign(width, -1);
  }

  for (int x = 0; x < count; ++x) {
    const int ax = a[static_cast<std::size_t>(x)];
    const auto& pairs = pairing.pairs[static_cast<std::size_t>(x)];
    for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
      const auto [lo, hi] = pairs[static_cast<std::size_t>(k)];
      const int alo = a[static_cast<std::size_t>(lo)];
      const int ahi = a[static_cast<std::size_t>(hi)];
      const int image = pair_index_at(pairing, ax, alo);
      if (image < 0 || partner_at(pairing, ax, alo) != ahi)
        return fail("vertex " + std::to_string(x) +
                    ": pairing is not antipodally consistent");
      atlas.antipodal_pair[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = image;
    }
  }

  std::set<std::pair<int, int>> visited;
  for (auto [su, sv] : g.edges()) {
    if (visited.count({su, sv})) continue;
    std::vector<int> cycle;
    int from = su;
    int to = sv;
    while (true) {
      cycle.push_back(from);
      if (static_cast<int>(cycle.size()) > cycle_length)
        return fail("cycle through vertex " + std::to_string(su) + " is longer than " +
                    std::to_string(cycle_length));
      const int next = partner_at(pairing, to, from);
      from = to;
      to = next;
      if (from == su && to == sv) break;
    }
    if (static_cast<int>(cycle.size()) != cycle_length)
      return fail("cycle of length " + std::to_string(cycle.size()) + " (expected " +
                  std::to_string(cycle_length) + ")");

    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail("cycle through vertex " + std::to_string(su) + " revisits a vertex");

    const int cycle_id = static_cast<int>(atlas.cycles.size());
    for (int i = 0; i < cycle_length; ++i) {
      const int z = cycle[static_cast<std::size_t>(i)];
      const int prev = cycle[static_cast<std::size_t>((i + cycle_length - 1) % cycle_length)];
      const int next = cycle[static_cast<std::size_t>((i + 1) % cycle_length)];
      auto key = std::minmax(z, next);
      if (!visited.insert(key).second)
        return fail("edge " + std::to_string(key.first) + "-" + std::to_string(key.second) +
                    " lies on two cycles");
      const int k = pair_index_at(pairing, z, prev);
      int& owner = atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)];
      if (owner != -1 && owner != cycle_id)
        return fail("vertex " + std::to_string(z) + ": neighbor pair lies on two cycles");
      owner = cycle_id;
      if (a[static_cast<std::size_t>(z)] != cycle[static_cast<std::size_t>((i + m) % cycle_length)])
        return fail("cycle " + std::to_string(cycle_id) + ": antipodal map is not a half-turn");
    }
    atlas.cycles.push_back(std::move(cycle));
  }

  for (int x = 0; x < count; ++x)
    for (int owner : atlas.cycle_of_pair[static_cast<std::size_t>(x)])
      if (owner == -1)
        return fail("vertex " + std::to_string(x) + ": neighbor pair lies on no cycle");

  atlas.position_of.assign(atlas.cycles.size(),
                           std::vector<int>(static_cast<std::size_t>(count), -1));
  for (int c = 0; c < static_cast<int>(atlas.cycles.size()); ++c)
    for (int i = 0; i < cycle_length; ++i)
      atlas.position_of[static_cast<std::size_t>(c)]
                       [static_cast<std::size_t>(atlas.cycles[static_cast<std::size_t>(c)]
                                                     [static_cast<std::size_t>(i)])] = i;
  return atlas;
}

namespace {

// ---------------------------------------------------------------------------
// Zero-support reconstruction: a constraint solver over slot variables.
//
// Every vertex has r-1 slots, one per neighbor pair, and the element assigned
// to a slot is one member of the vertex's zero support. Along a cycle, the
// elements NOT in the cycle's own slot form a fixed set T of size r-2 shared
// by all its vertices. Element identity is tracked with a union-find over
// minted tokens so that equalities discovered later can merge names.
// ---------------------------------------------------------------------------

struct Dsu {
  std::vector<int> parent;

  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // The smaller id stays the representative, preserving mint order.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[static_cast<std::size_t>(y)] = x;
    return true;
  }
};

struct ElementSet {
  bool known = false;
  std::vector<int> elems;  // sorted class representatives
};

enum class SweepResult { stable, progressed, contradiction };
enum class SolveStatus { solved, failed, out_of_budget };

struct SlotSolver {
  const Graph& g;
  const AntipodalMap& a;
  const NeighborPairing& pairing;
  const ColineAtlas& atlas;
  int n = 0;
  int r = 0;
  int m = 0;
  long budget = 0;
  std::string failure;

  struct State {
    Dsu dsu;
    std::vector<std::vector<int>> slot;  // [vertex][pair index] token id, -1 unassigned
    std::vector<ElementSet> t_set;       // per cycle
    std::vector<ElementSet> zero_set;    // per vertex
  };
  State state;

  SlotSolver(const Graph& graph, const AntipodalMap& amap, const NeighborPairing& pair,
             const ColineAtlas& at, int ground, int rank, long max_backtrack)
      : g(graph), a(amap), pairing(pair), atlas(at), n(ground), r(rank), m(ground - rank + 2),
        budget(max_backtrack) {
    state.slot.resize(static_cast<std::size_t>(g.vertex_count));
    for (int x = 0; x < g.vertex_count; ++x)
      state.slot[static_cast<std::size_t>(x)].assign(
          pairing.pairs[static_cast<std::size_t>(x)].size(), -1);
    state.t_set.resize(atlas.cycles.size());
    state.zero_set.resize(static_cast<std::size_t>(g.vertex_count));
    if (r == 2)
      for (auto& t : state.t_set) t.known = true;  // empty contraction sets
  }

  void seed() {
    auto& slots = state.slot[0];
    std::vector<int> zero;
    for (int k = 0; k < r - 1; ++k) {
      const int token = state.dsu.add();
      slots[static_cast<std::size_t>(k)] = token;
      zero.push_back(token);
    }
    state.zero_set[0] = ElementSet{true, std::move(zero)};
  }

  std::vector<int> normalized(State& s, const std::vector<int>& elems) const {
    std::vector<int> out;
    out.reserve(elems.size());
    for (int e : elems) out.push_back(s.dsu.find(e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool contradiction(const std::string& text) {
    failure = text;
    return false;
  }

  // Re-express a set through current class representatives; false if distinct
  // members collapsed together.
  bool renormalize_set(State& s, ElementSet& set, std::size_t expected, const char* what) {
    if (!set.known) return true;
    std::vector<int> fresh = normalized(s, set.elems);
    if (fresh.size() != expected)
      return contradiction(std::string(what) + ": repeated element in a constrained set");
    set.elems = std::move(fresh);
    return true;
  }

  // Reconciles two values derived for the same set: equal is fine, a one-element
  // difference on each side merges those two classes, anything else contradicts.
  bool reconcile(State& s, const std::vector<int>& current, const std::vector<int>& derived,
                 bool& changed, const char* what) {
    std::vector<int> only_current;
    std::vector<int> only_derived;
    std::set_difference(current.begin(), current.end(), derived.begin(), derived.end(),
                        std::back_inserter(only_current));
    std::set_difference(derived.begin(), derived.end(), current.begin(), current.end(),
                        std::back_inserter(only_derived));
    if (only_current.empty() && only_derived.empty()) return true;
    if (only_current.size() == 1 && only_derived.size() == 1) {
      s.dsu.unite(only_current[0], only_derived[0]);
      changed = true;
      return true;
    }
    return contradiction(std::string(what) + ": conflicting derivations");
  }

  int assigned_class(State& s, int vertex, int k) const {
    const int token = s.slot[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(k)];
    return token < 0 ? -1 : s.dsu.find(token);
  }

  SweepResult sweep_once(State& s) {
    bool changed = false;

    // Normalize stored sets under the current merges.
    for (std::size_t c = 0; c < s.t_set.size(); ++c)
      if (!renormalize_set(s, s.t_set[c], static_cast<std::size_t>(r - 2), "cycle"))
        return SweepResult::contradiction;
    for (std::size_t z = 0; z < s.zero_set.size(); ++z)
      if (!renormalize_set(s, s.zero_set[z], static_cast<std::size_t>(r - 1), "vertex"))
        return SweepResult::contradiction;

    const int vertex_count = g.vertex_count;
    for (int z = 0; z < vertex_count; ++z) {
      // Distinct elements across the slots of one vertex.
      std::vector<int> classes;
      for (int k = 0; k < r - 1; ++k) {
        const int c = assigned_class(s, z, k);
        if (c >= 0) classes.push_back(c);
      }
      std::sort(classes.begin(), classes.end());
      if (std::adjacent_find(classes.begin(), classes.end()) != classes.end()) {
        contradiction("vertex " + std::to_string(z) + ": repeated zero element");
        return SweepResult::contradiction;
      }

      auto& zero = s.zero_set[static_cast<std::size_t>(z)];
      const int unassigned =
          r - 1 - static_cast<int>(classes.size());

      if (zero.known) {
        // Every assigned slot must sit inside the zero support.
        if (!std::includes(zero.elems.begin(), zero.elems.end(), classes.begin(), classes.end())) {
          contradiction("vertex " + std::to_string(z) + ": slot outside the zero support");
          return SweepResult::contradiction;
        }
        if (unassigned == 1) {
          std::vector<int> missing;
          std::set_difference(zero.elems.begin(), zero.elems.end(), classes.begin(),
                              classes.end(), std::back_inserter(missing));
          for (int k = 0; k < r - 1; ++k)
            if (s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] < 0)
              s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] = missing[0];
          changed = true;
        }
      } else if (unassigned == 0) {
        zero = ElementSet{true, classes};
        changed = true;
      }

      // Slot <-> contraction set exchange through the zero support.
      for (int k = 0; k < r - 1; ++k) {
        const int cycle =
            atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)];
        auto& t = s.t_set[static_cast<std::size_t>(cycle)];
        const int c = assigned_class(s, z, k);
        if (c >= 0 && zero.known) {
          std::vector<int> derived;
          for (int e : zero.elems)
            if (e != c) derived.push_back(e);
          if (!t.known) {
            t = ElementSet{true, std::move(derived)};
            changed = true;
          } else if (!reconcile(s, t.elems, derived, changed, "cycle")) {
            return SweepResult::contradiction;
          }
        } else if (c < 0 && zero.known && t.known) {
          std::vector<int> diff;
          std::set_difference(zero.elems.begin(), zero.elems.end(), t.elems.begin(),
                              t.elems.end(), std::back_inserter(diff));
          if (diff.size() != 1) {
            contradiction("vertex " + std::to_string(z) +
                          ": contraction set does not fit the zero support");
            return SweepResult::contradiction;
          }
          s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] = diff[0];
          changed = true;
        }
      }
    }

    // An assigned slot belongs to the contraction set of every other cycle
    // through its vertex.
    std::vector<std::vector<int>> forced(s.t_set.size());
    for (int z = 0; z < vertex_count; ++z)
      for (int k = 0; k < r - 1; ++k) {
        const int c = assigned_class(s, z, k);
        if (c < 0) continue;
        for (int k2 = 0; k2 < r - 1; ++k2) {
          if (k2 == k) continue;
          const int other =
              atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k2)];
          forced[static_cast<std::size_t>(other)].push_back(c);
        }
      }
    for (std::size_t c = 0; c < s.t_set.size(); ++c) {
      std::vector<int> lb = normalized(s, forced[c]);
      if (static_cast<int>(lb.size()) > r - 2) {
        contradiction("cycle " + std::to_string(c) + ": too many forced contraction elements");
        return SweepResult::contradiction;
      }
      auto& t = s.t_set[c];
      if (t.known) {
        if (!std::includes(t.elems.begin(), t.elems.end(), lb.begin(), lb.end())) {
          contradiction("cycle " + std::to_string(c) +
                        ": forced element outside the contraction set");
          return SweepResult::contradiction;
        }
      } else if (static_cast<int>(lb.size()) == r - 2) {
        t = ElementSet{true, std::move(lb)};
        changed = true;
      }
    }

    // A cycle's contraction set lies inside the zero support of each of its
    // vertices, so the intersection of known zero supports bounds it above.
    for (std::size_t c = 0; c < s.t_set.size(); ++c) {
      if (s.t_set[c].known) continue;
      bool have = false;
      std::vector<int> inter;
      for (int z : atlas.cycles[c]) {
        const auto& zero = s.zero_set[static_cast<std::size_t>(z)];
        if (!zero.known) continue;
        if (!have) {
          inter = zero.elems;
          have = true;
        } else {
          std::vector<int> next;
          std::set_intersection(inter.begin(), inter.end(), zero.elems.begin(),
                                zero.elems.end(), std::back_inserter(next));
          inter = std::move(next);
        }
      }
      if (!have) continue;
      if (static_cast<int>(inter.size()) < r - 2) {
        contradiction("cycle " + std::to_string(c) + ": zero supports leave no contraction set");
        return SweepResult::contradiction;
      }
      if (static_cast<int>(inter.size()) == r - 2) {
        s.t_set[c] = ElementSet{true, std::move(inter)};
        changed = true;
      }
    }

    // Zero-support lower bounds: assigned slots plus every known contraction
    // set through the vertex.
    for (int z = 0; z < vertex_count; ++z) {
      auto& zero = s.zero_set[static_cast<std::size_t>(z)];
      std::vector<int> lb;
      for (int k = 0; k < r - 1; ++k) {
        const int c = assigned_class(s, z, k);
        if (c >= 0) lb.push_back(c);
        const int cycle =
            atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)];
        const auto& t = s.t_set[static_cast<std::size_t>(cycle)];
        if (t.known) lb.insert(lb.end(), t.elems.begin(), t.elems.end());
      }
      lb = normalized(s, lb);
      if (static_cast<int>(lb.size()) > r - 1) {
        contradiction("vertex " + std::to_string(z) + ": too many zero elements");
        return SweepResult::contradiction;
      }
      if (zero.known) {
        if (!std::includes(zero.elems.begin(), zero.elems.end(), lb.begin(), lb.end())) {
          if (!reconcile(s, zero.elems, lb, changed, "vertex")) return SweepResult::contradiction;
        }
      } else if (static_cast<int>(lb.size()) == r - 1) {
        zero = ElementSet{true, std::move(lb)};
        changed = true;
      }
    }

    // Antipodal vertices share slots pairwise and the whole zero support.
    for (int z = 0; z < vertex_count; ++z) {
      const int az = a[static_cast<std::size_t>(z)];
      for (int k = 0; k < r - 1; ++k) {
        const int k2 =
            atlas.antipodal_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)];
        const int c1 = assigned_class(s, z, k);
        const int c2 = assigned_class(s, az, k2);
        if (c1 >= 0 && c2 >= 0) {
          if (c1 != c2) {
            s.dsu.unite(c1, c2);
            changed = true;
          }
        } else if (c1 >= 0) {
          s.slot[static_cast<std::size_t>(az)][static_cast<std::size_t>(k2)] = c1;
          changed = true;
        } else if (c2 >= 0) {
          s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] = c2;
          changed = true;
        }
      }
      if (z >= az) continue;
      auto& zero_z = s.zero_set[static_cast<std::size_t>(z)];
      auto& zero_az = s.zero_set[static_cast<std::size_t>(az)];
      if (zero_z.known && !zero_az.known) {
        zero_az = zero_z;
        changed = true;
      } else if (!zero_z.known && zero_az.known) {
        zero_z = zero_az;
        changed = true;
      } else if (zero_z.known && zero_az.known) {
        if (!reconcile(s, zero_z.elems, zero_az.elems, changed, "antipodal pair"))
          return SweepResult::contradiction;
      }
    }

    // The element a pair shares sits in the support of both pair members, so it
    // cannot lie in their zero supports.
    for (int x = 0; x < vertex_count; ++x)
      for (int k = 0; k < r - 1; ++k) {
        const int c = assigned_class(s, x, k);
        if (c < 0) continue;
        const auto [lo, hi] = pairing.pairs[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
        for (int y : {lo, hi}) {
          const auto& zero = s.zero_set[static_cast<std::size_t>(y)];
          if (zero.known && std::binary_search(zero.elems.begin(), zero.elems.end(), c)) {
            contradiction("edge " + std::to_string(x) + "-" + std::to_string(y) +
                          ": pair element inside the zero support of an endpoint");
            return SweepResult::contradiction;
          }
          for (int ky = 0; ky < r - 1; ++ky)
            if (assigned_class(s, y, ky) == c) {
              contradiction("edge " + std::to_string(x) + "-" + std::to_string(y) +
                            ": pair element assigned on both endpoints");
              return SweepResult::contradiction;
            }
        }
      }

    return changed ? SweepResult::progressed : SweepResult::stable;
  }

  SweepResult sweep_to_fixpoint(State& s) {
    while (true) {
      const SweepResult result = sweep_once(s);
      if (result != SweepResult::progressed) return result;
    }
  }

  bool complete(const State& s) const {
    for (const auto& slots : s.slot)
      for (int token : slots)
        if (token < 0) return false;
    return true;
  }

  int class_count(State& s) const {
    std::vector<int> reps;
    for (int t = 0; t < static_cast<int>(s.dsu.parent.size()); ++t)
      reps.push_back(s.dsu.find(t));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return static_cast<int>(reps.size());
  }

  struct MintSite {
    int vertex = -1;
    int pair = -1;
    int cycle = -1;
  };

  // First unassigned slot along the lowest-numbered cycle with a known
  // contraction set, in stored cycle order.
  std::optional<MintSite> find_mint_site(State& s) const {
    for (int c = 0; c < static_cast<int>(atlas.cycles.size()); ++c) {
      if (!s.t_set[static_cast<std::size_t>(c)].known) continue;
      for (int z : atlas.cycles[static_cast<std::size_t>(c)]) {
        int k = -1;
        for (int j = 0; j < r - 1; ++j)
          if (atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(j)] == c) {
            k = j;
            break;
          }
        if (s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] < 0)
          return MintSite{z, k, c};
      }
    }
    return std::nullopt;
  }

  // Lowest vertex with a known zero support and at least two open slots.
  std::optional<int> find_stalled_vertex(State& s) const {
    for (int z = 0; z < g.vertex_count; ++z) {
      if (!s.zero_set[static_cast<std::size_t>(z)].known) continue;
      int open = 0;
      for (int k = 0; k < r - 1; ++k)
        if (s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] < 0) ++open;
      if (open >= 2) return z;
    }
    return std::nullopt;
  }

  std::vector<int> existing_candidates(State& s, const MintSite& site) {
    std::vector<int> reps;
    for (int t = 0; t < static_cast<int>(s.dsu.parent.size()); ++t) reps.push_back(s.dsu.find(t));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    const auto& t = s.t_set[static_cast<std::size_t>(site.cycle)];
    std::vector<int> blocked = t.elems;
    for (int k = 0; k < r - 1; ++k) {
      const int c = assigned_class(s, site.vertex, k);
      if (c >= 0) blocked.push_back(c);
    }
    const auto [lo, hi] =
        pairing.pairs[static_cast<std::size_t>(site.vertex)][static_cast<std::size_t>(site.pair)];
    for (int y : {lo, hi}) {
      const auto& zero = s.zero_set[static_cast<std::size_t>(y)];
      if (zero.known) blocked.insert(blocked.end(), zero.elems.begin(), zero.elems.end());
      for (int ky = 0; ky < r - 1; ++ky) {
        const int c = assigned_class(s, y, ky);
        if (c >= 0) blocked.push_back(c);
      }
    }
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());

    std::vector<int> out;
    for (int rep : reps)
      if (!std::binary_search(blocked.begin(), blocked.end(), rep)) out.push_back(rep);
    return out;
  }

  SolveStatus solve(State& s) {
    while (true) {
      const SweepResult swept = sweep_to_fixpoint(s);
      if (swept == SweepResult::contradiction) return SolveStatus::failed;
      if (complete(s)) return validate_final(s) ? SolveStatus::solved : SolveStatus::failed;

      if (auto site = find_mint_site(s)) {
        const std::vector<int> candidates = existing_candidates(s, *site);
        const bool may_mint = class_count(s) < n;
        if (may_mint && candidates.empty()) {
          // Forced: the slot names an element no current class can denote.
          s.slot[static_cast<std::size_t>(site->vertex)][static_cast<std::size_t>(site->pair)] =
              s.dsu.add();
          continue;
        }
        if (may_mint) {
          if (--budget < 0) {
            failure = "branch budget exhausted";
            return SolveStatus::out_of_budget;
          }
          State branch = s;
          branch.slot[static_cast<std::size_t>(site->vertex)]
                     [static_cast<std::size_t>(site->pair)] = branch.dsu.add();
          const SolveStatus sub = solve(branch);
          if (sub == SolveStatus::solved) {
            s = std::move(branch);
            return SolveStatus::solved;
          }
          if (sub == SolveStatus::out_of_budget) return SolveStatus::out_of_budget;
        }
        for (int candidate : candidates) {
          if (--budget < 0) {
            failure = "branch budget exhausted";
            return SolveStatus::out_of_budget;
          }
          State branch = s;
          branch.slot[static_cast<std::size_t>(site->vertex)]
                     [static_cast<std::size_t>(site->pair)] = candidate;
          const SolveStatus sub = solve(branch);
          if (sub == SolveStatus::solved) {
            s = std::move(branch);
            return SolveStatus::solved;
          }
          if (sub == SolveStatus::out_of_budget) return SolveStatus::out_of_budget;
        }
        if (failure.empty()) failure = "no viable element for an open slot";
        return SolveStatus::failed;
      }

      if (auto stalled = find_stalled_vertex(s)) {
        const int z = *stalled;
        std::vector<int> open;
        std::vector<int> used;
        for (int k = 0; k < r - 1; ++k) {
          if (s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] < 0)
            open.push_back(k);
          else
            used.push_back(assigned_class(s, z, k));
        }
        std::sort(used.begin(), used.end());
        std::vector<int> remaining;
        const auto& zero = s.zero_set[static_cast<std::size_t>(z)];
        std::set_difference(zero.elems.begin(), zero.elems.end(), used.begin(), used.end(),
                            std::back_inserter(remaining));
        if (remaining.size() != open.size()) {
          failure = "vertex " + std::to_string(z) + ": zero support does not cover its slots";
          return SolveStatus::failed;
        }
        std::sort(remaining.begin(), remaining.end());
        do {
          if (--budget < 0) {
            failure = "branch budget exhausted";
            return SolveStatus::out_of_budget;
          }
          State branch = s;
          for (std::size_t i = 0; i < open.size(); ++i)
            branch.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(open[i])] =
                remaining[i];
          const SolveStatus sub = solve(branch);
          if (sub == SolveStatus::solved) {
            s = std::move(branch);
            return SolveStatus::solved;
          }
          if (sub == SolveStatus::out_of_budget) return SolveStatus::out_of_budget;
        } while (std::next_permutation(remaining.begin(), remaining.end()));
        if (failure.empty()) failure = "no slot arrangement fits vertex " + std::to_string(z);
        return SolveStatus::failed;
      }

      failure = "reconstruction stalled with open slots";
      return SolveStatus::failed;
    }
  }

  bool validate_final(State& s) {
    if (class_count(s) != n)
      return contradiction("labeling uses " + std::to_string(class_count(s)) +
                           " elements (expected " + std::to_string(n) + ")");
    // Along every cycle the cycle-own slots name m distinct elements, each twice
    // at antipodal positions.
    for (int c = 0; c < static_cast<int>(atlas.cycles.size()); ++c) {
      const auto& cycle = atlas.cycles[static_cast<std::size_t>(c)];
      std::vector<int> own(cycle.size(), -1);
      for (int i = 0; i < static_cast<int>(cycle.size()); ++i) {
        const int z = cycle[static_cast<std::size_t>(i)];
        for (int k = 0; k < r - 1; ++k)
          if (atlas.cycle_of_pair[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)] == c)
            own[static_cast<std::size_t>(i)] = assigned_class(s, z, k);
      }
      std::vector<int> window(own.begin(), own.begin() + m);
      std::sort(window.begin(), window.end());
      if (std::adjacent_find(window.begin(), window.end()) != window.end())
        return contradiction("cycle " + std::to_string(c) + ": repeated element in a half-turn");
      for (int i = 0; i < m; ++i)
        if (own[static_cast<std::size_t>(i)] != own[static_cast<std::size_t>(i + m)])
          return contradiction("cycle " + std::to_string(c) +
                               ": antipodal positions name different elements");
    }
    return true;
  }
};

// Relabels solver classes as ground set elements: the base vertex's slots become
// 0..r-2 in pair order, every later class follows in mint order.
std::vector<std::vector<int>> extract_zero_sets(SlotSolver& solver, SlotSolver::State& s,
                                                std::vector<int>& element_of_base_pair) {
  std::vector<int> reps;
  for (int t = 0; t < static_cast<int>(s.dsu.parent.size()); ++t) reps.push_back(s.dsu.find(t));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

  std::vector<int> element_of(s.dsu.parent.size(), -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i)
    element_of[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = i;

  const int count = solver.g.vertex_count;
  std::vector<std::vector<int>> zero_sets(static_cast<std::size_t>(count));
  for (int z = 0; z < count; ++z) {
    for (int k = 0; k < solver.r - 1; ++k) {
      const int rep = s.dsu.find(s.slot[static_cast<std::size_t>(z)][static_cast<std::size_t>(k)]);
      zero_sets[static_cast<std::size_t>(z)].push_back(element_of[static_cast<std::size_t>(rep)]);
    }
    std::sort(zero_sets[static_cast<std::size_t>(z)].begin(),
              zero_sets[static_cast<std::size_t>(z)].end());
  }
  element_of_base_pair.assign(static_cast<std::size_t>(solver.r - 1), -1);
  for (int k = 0; k < solver.r - 1; ++k) {
    const int rep = s.dsu.find(s.slot[0][static_cast<std::size_t>(k)]);
    element_of_base_pair[static_cast<std::size_t>(k)] =
        element_of[static_cast<std::size_t>(rep)];
  }
  return zero_sets;
}

// Signs from component splits: removing the vertices that vanish on an element
// must cut the graph into exactly two halves swapped by the antipodal map. The
// half containing the base vertex is positive; for elements vanishing at the
// base vertex, the half containing the lower support carrier is.
std::optional<SignLabeling> assign_signs(const Graph& g, const AntipodalMap& a,
                                         const std::vector<std::vector<int>>& zero_sets, int n,
                                         int r, const std::vector<std::pair<int, int>>& carriers,
                                         std::string* failure) {
  const int count = g.vertex_count;
  std::vector<std::vector<Sign>> signs(static_cast<std::size_t>(count),
                                       std::vector<Sign>(static_cast<std::size_t>(n), Sign::zero));
  std::vector<char> removed(static_cast<std::size_t>(count));
  std::vector<int> component(static_cast<std::size_t>(count));

  for (int e = 0; e < n; ++e) {
    for (int z = 0; z < count; ++z) {
      const auto& zero = zero_sets[static_cast<std::size_t>(z)];
      removed[static_cast<std::size_t>(z)] =
          std::binary_search(zero.begin(), zero.end(), e) ? 1 : 0;
      component[static_cast<std::size_t>(z)] = -1;
    }
    int components = 0;
    for (int start = 0; start < count; ++start) {
      if (removed[static_cast<std::size_t>(start)] || component[static_cast<std::size_t>(start)] >= 0)
        continue;
      if (components == 2) {
        set_failure(failure, "element " + std::to_string(e) + ": support splits into more than two parts");
        return std::nullopt;
      }
      std::deque<int> queue{start};
      component[static_cast<std::size_t>(start)] = components;
      while (!queue.empty()) {
        const int z = queue.front();
        queue.pop_front();
        for (int y : g.adj[static_cast<std::size_t>(z)]) {
          if (removed[static_cast<std::size_t>(y)] || component[static_cast<std::size_t>(y)] >= 0)
            continue;
          component[static_cast<std::size_t>(y)] = components;
          queue.push_back(y);
        }
      }
      ++components;
    }
    if (components != 2) {
      set_failure(failure, "element " + std::to_string(e) + ": support splits into " +
                               std::to_string(components) + " parts");
      return std::nullopt;
    }
    for (int z = 0; z < count; ++z) {
      if (removed[static_cast<std::size_t>(z)]) {
        if (!removed[static_cast<std::size_t>(a[static_cast<std::size_t>(z)])]) {
          set_failure(failure, "element " + std::to_string(e) +
                                   ": zero supports not antipodally symmetric");
          return std::nullopt;
        }
        continue;
      }
      if (component[static_cast<std::size_t>(z)] ==
          component[static_cast<std::size_t>(a[static_cast<std::size_t>(z)])]) {
        set_failure(failure, "element " + std::to_string(e) +
                                 ": antipodal map does not swap the support halves");
        return std::nullopt;
      }
    }

    int plus_component;
    if (!removed[0]) {
      plus_component = component[0];
    } else {
      const auto [lo, hi] = carriers[static_cast<std::size_t>(e)];
      if (lo < 0 || removed[static_cast<std::size_t>(lo)] ||
          removed[static_cast<std::size_t>(hi)] ||
          component[static_cast<std::size_t>(lo)] == component[static_cast<std::size_t>(hi)]) {
        set_failure(failure, "element " + std::to_string(e) + ": support carriers are unusable");
        return std::nullopt;
      }
      plus_component = component[static_cast<std::size_t>(lo)];
    }
    for (int z = 0; z < count; ++z) {
      if (removed[static_cast<std::size_t>(z)]) continue;
      signs[static_cast<std::size_t>(z)][static_cast<std::size_t>(e)] =
          component[static_cast<std::size_t>(z)] == plus_component ? Sign::plus : Sign::minus;
    }
  }

  SignLabeling labeling;
  labeling.n = n;
  labeling.r = r;
  labeling.label.reserve(static_cast<std::size_t>(count));
  for (auto& row : signs) labeling.label.emplace_back(std::move(row));
  return labeling;
}

// Full reconstruction for n - r >= 2: solve the slot system, then assign signs.
std::optional<SignLabeling> reconstruct_labeling(const Graph& g, const AntipodalMap& a,
                                                 const NeighborPairing& pairing,
                                                 const ColineAtlas& atlas, int n, int r,
                                                 long max_backtrack, std::string* failure) {
  SlotSolver solver(g, a, pairing, atlas, n, r, max_backtrack);
  solver.seed();
  if (solver.solve(solver.state) != SolveStatus::solved) {
    set_failure(failure, solver.failure);
    return std::nullopt;
  }
  std::vector<int> base_pair_element;
  std::vector<std::vector<int>> zero_sets =
      extract_zero_sets(solver, solver.state, base_pair_element);

  std::vector<std::pair<int, int>> carriers(static_cast<std::size_t>(n), {-1, -1});
  for (int k = 0; k < r - 1; ++k)
    carriers[static_cast<std::size_t>(base_pair_element[static_cast<std::size_t>(k)])] =
        pairing.pairs[0][static_cast<std::size_t>(k)];
  return assign_signs(g, a, zero_sets, n, r, carriers, failure);
}

// n = r: the graph must pair every vertex with its unique non-neighbor, which is
// exactly what a complete multipartite graph with parts of size two looks like.
// Each pair carries one singleton-support cocircuit and its negation.
std::optional<SignLabeling> cocktail_labeling(const Graph& g, const AntipodalMap& a, int n,
                                              std::string* failure) {
  const int count = g.vertex_count;
  std::vector<int> pair_of(static_cast<std::size_t>(count), -1);
  std::vector<std::pair<int, int>> pair_list;
  for (int z = 0; z < count; ++z) {
    if (pair_of[static_cast<std::size_t>(z)] >= 0) continue;
    const int partner = a[static_cast<std::size_t>(z)];
    if (g.has_edge(z, partner)) {
      set_failure(failure, "vertex " + std::to_string(z) + ": antipode is adjacent");
      return std::nullopt;
    }
    pair_of[static_cast<std::size_t>(z)] = static_cast<int>(pair_list.size());
    pair_of[static_cast<std::size_t>(partner)] = static_cast<int>(pair_list.size());
    pair_list.emplace_back(z, partner);
  }
  std::vector<std::vector<int>> zero_sets(static_cast<std::size_t>(count));
  for (int z = 0; z < count; ++z)
    for (int e = 0; e < n; ++e)
      if (e != pair_of[static_cast<std::size_t>(z)])
        zero_sets[static_cast<std::size_t>(z)].push_back(e);
  return assign_signs(g, a, zero_sets, n, n, pair_list, failure);
}

// n = r + 1: the coline machinery degenerates, so seed the base vertex and search
// labelings directly. Neighbor labels differ by moving one zero onto the support,
// which leaves a small candidate list per vertex; antipodal partners are labeled
// together and every assignment is checked against all earlier ones.
struct LabelSearch {
  const Graph& g;
  const AntipodalMap& a;
  int n;
  int r;
  long budget;
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<SignVector> label;
  std::vector<char> assigned;
  bool exhausted_budget = false;

  LabelSearch(const Graph& graph, const AntipodalMap& amap, int ground, int rank, long max_nodes)
      : g(graph), a(amap), n(ground), r(rank), budget(max_nodes) {
    const auto count = static_cast<std::size_t>(g.vertex_count);
    parent.assign(count, -1);
    label.assign(count, SignVector());
    assigned.assign(count, 0);
    std::vector<char> seen(count, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int x : g.adj[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(x)]) continue;
        seen[static_cast<std::size_t>(x)] = 1;
        parent[static_cast<std::size_t>(x)] = u;
        queue.push_back(x);
      }
    }
  }

  bool consistent(int u, const SignVector& candidate) const {
    const std::vector<int> candidate_zero = zero_support(candidate);
    for (int z = 0; z < g.vertex_count; ++z) {
      if (!assigned[static_cast<std::size_t>(z)]) continue;
      // A support may carry only one label pair, and that pair is always
      // assigned together, so any zero-support collision is fatal.
      if (zero_support(label[static_cast<std::size_t>(z)]) == candidate_zero) return false;
      if (adjacent_labels(candidate, label[static_cast<std::size_t>(z)]) != g.has_edge(u, z))
        return false;
    }
    return true;
  }

  bool extend(std::size_t index) {
    if (index == order.size()) return true;
    const int u = order[index];
    if (assigned[static_cast<std::size_t>(u)]) return extend(index + 1);

    const SignVector& from = label[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])];
    const int au = a[static_cast<std::size_t>(u)];
    for (int zero_pos : zero_support(from)) {
      for (int support_pos : support(from)) {
        for (Sign sign : {Sign::plus, Sign::minus}) {
          if (--budget < 0) {
            exhausted_budget = true;
            return false;
          }
          std::vector<Sign> raw = from.signs();
          raw[static_cast<std::size_t>(zero_pos)] = sign;
          raw[static_cast<std::size_t>(support_pos)] = Sign::zero;
          SignVector candidate(std::move(raw));
          SignVector negated = negate(candidate);
          if (!consistent(u, candidate) || !consistent(au, negated)) continue;
          label[static_cast<std::size_t>(u)] = candidate;
          label[static_cast<std::size_t>(au)] = negated;
          assigned[static_cast<std::size_t>(u)] = 1;
          assigned[static_cast<std::size_t>(au)] = 1;
          if (extend(index + 1)) return true;
          assigned[static_cast<std::size_t>(u)] = 0;
          assigned[static_cast<std::size_t>(au)] = 0;
          if (exhausted_budget) return false;
        }
      }
    }
    return false;
  }
};

std::optional<SignLabeling> search_labeling(const Graph& g, const AntipodalMap& a, int n, int r,
                                            long max_backtrack, std::string* failure) {
  LabelSearch search(g, a, n, r, max_backtrack);
  std::vector<Sign> seed(static_cast<std::size_t>(n), Sign::plus);
  for (int e = 0; e < r - 1; ++e) seed[static_cast<std::size_t>(e)] = Sign::zero;
  SignVector base(std::move(seed));
  search.label[0] = base;
  search.label[static_cast<std::size_t>(a[0])] = negate(base);
  search.assigned[0] = 1;
  search.assigned[static_cast<std::size_t>(a[0])] = 1;
  if (search.extend(1)) {
    SignLabeling labeling;
    labeling.n = n;
    labeling.r = r;
    labeling.label = std::move(search.label);
    return labeling;
  }
  set_failure(failure, search.exhausted_budget ? "label search budget exhausted"
                                               : "no labeling extends the seed pair");
  return std::nullopt;
}

}  // namespace

RecognitionResult recognize(const Graph& g, const RecognizeOptions& options) {
  RecognitionResult result;
  auto reject = [&](RejectStage stage, std::string witness) {
    result.accepted = false;
    result.reject_stage = stage;
    result.reject_witness = std::move(witness);
    return result;
  };

  if (g.vertex_count < 4)
    return reject(RejectStage::input, "fewer than four vertices");
  if (!is_connected(g)) return reject(RejectStage::input, "graph is not connected");

  const std::optional<int> degree = check_regular(g);
  if (!degree) return reject(RejectStage::regularity, "graph is not regular");
  if (*degree < 2 || *degree % 2 != 0)
    return reject(RejectStage::regularity,
                  "degree " + std::to_string(*degree) + " is not an even positive number");

  const std::optional<Parameters> params = infer_parameters(g.vertex_count, *degree);
  if (!params)
    return reject(RejectStage::vertex_count,
                  "no ground set size matches " + std::to_string(g.vertex_count) + " vertices");
  result.params = *params;
  const int n = params->n;
  const int r = params->r;
  const int m = params->m();

  const DistanceMatrix dist = apsp(g);
  const std::vector<int> candidates = antipodal_candidates(dist, 0, m);
  result.census.candidates = static_cast<int>(candidates.size());
  if (candidates.empty())
    return reject(RejectStage::antipodal_candidates,
                  "no vertex at distance " + std::to_string(m) + " from the base vertex");

  RejectStage deepest = RejectStage::antipodal_candidates;
  std::string deepest_witness = "every antipode candidate failed";
  auto record = [&](RejectStage stage, const std::string& witness) {
    if (static_cast<int>(stage) > static_cast<int>(deepest)) {
      deepest = stage;
      deepest_witness = witness;
    }
  };

  bool succeeded = false;
  for (int w : candidates) {
    std::uint64_t lookups = 0;
    std::string witness;
    const std::optional<AntipodalMap> amap =
        build_antipodal_map(g, dist, 0, w, m, &lookups, &witness);
    result.max_distance_lookups = std::max(result.max_distance_lookups, lookups);
    if (!amap) {
      record(RejectStage::antipodal_map, witness);
      continue;
    }
    ++result.census.stage_a_survivors;

    std::optional<SignLabeling> labeling;
    if (n == r) {
      labeling = cocktail_labeling(g, *amap, n, &witness);
    } else if (n - r == 1) {
      labeling = search_labeling(g, *amap, n, r, options.max_backtrack, &witness);
    } else {
      const std::optional<NeighborPairing> pairing =
          partner_pairing(g, *amap, dist, n, r, &witness);
      if (!pairing) {
        record(RejectStage::partner_pairing, witness);
        continue;
      }
      const std::optional<ColineAtlas> atlas = trace_colines(g, *pairing, *amap, m, &witness);
      if (!atlas) {
        record(RejectStage::coline_trace, witness);
        continue;
      }
      labeling =
          reconstruct_labeling(g, *amap, *pairing, *atlas, n, r, options.max_backtrack, &witness);
    }
    if (!labeling) {
      record(RejectStage::labeling, witness);
      continue;
    }
    if (!is_sign_labeling(g, *labeling)) {
      record(RejectStage::labeling, "reconstructed labels fail the sign labeling check");
      continue;
    }
    ++result.census.stage_b_survivors;

    std::uint64_t comparisons = 0;
    const bool verified = verify_om_labeling(g, *labeling, &comparisons);
    result.max_verify_comparisons = std::max(result.max_verify_comparisons, comparisons);
    if (!verified) {
      record(RejectStage::verification, "a crabbed path is missing for some vertex pair");
      continue;
    }
    ++result.census.verified_labelings;

    if (!succeeded) {
      succeeded = true;
      result.accepted = true;
      result.chosen_antipode = w;
      result.labeling = *labeling;
      result.om = make_oriented_matroid(n, r, labeling->label);
      if (!options.all_candidates) return result;
    }
  }

  if (succeeded) return result;
  return reject(deepest, deepest_witness);
}

}  // namespace cocirc
