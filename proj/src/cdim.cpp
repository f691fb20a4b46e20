#include "polyanti/cdim.hpp"

#include <algorithm>
#include <deque>

#include "polyanti/axioms.hpp"
#include "polyanti/planar.hpp"

namespace polyanti::cdim {

namespace {

void require_poly_antimatroid(const PointSet& s, const char* op) {
  if (auto v = check_poly_antimatroid(s))
    throw invalid_input(std::string(op) + " requires a poly-antimatroid: " + v->message);
}

struct ChainCollector {
  const PointSet& s;
  Point target;
  std::size_t cap;
  std::vector<Chain> chains;
  bool overflowed = false;
  std::vector<Point> path;

  bool dfs(Point p) {  // by value: path reallocation must not invalidate it
    if (p == target) {
      if (chains.size() == cap) {
        overflowed = true;
        return false;
      }
      chains.emplace_back(path);
      return true;
    }
    for (int ax = 0; ax < p.dim(); ++ax) {
      if (p[ax] >= target[ax]) continue;
      Point q = p.bumped(ax, +1);
      if (!s.contains(q)) continue;
      path.push_back(q);
      bool keep_going = dfs(q);
      path.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

ChainEnumeration enumerate_maximal_chains(const PointSet& s, std::size_t cap) {
  if (s.empty()) throw invalid_input("chain enumeration over an empty set");
  Point target = s.max_point();
  if (!s.contains(target))
    throw invalid_input("maximum member " + target.str() + " is not in the set");
  ChainCollector collector{s, target, cap, {}, false, {Point::origin(s.dim())}};
  if (!s.contains(collector.path.front()))
    throw invalid_input("origin is not a member; set is not accessible");
  collector.dfs(collector.path.front());
  return ChainEnumeration{std::move(collector.chains), collector.overflowed};
}

PointSet join_irreducibles(const PointSet& s) {
  require_poly_antimatroid(s, "join_irreducibles");
  PointSet out(s.dim());
  const auto& pts = s.points();
  for (const Point& p : pts) {
    if (p.is_origin()) continue;
    Point acc = Point::origin(s.dim());
    for (const Point& q : pts)
      if (strictly_less(q, p)) acc = join(acc, q);
    if (!(acc == p)) out.insert(p);
  }
  return out;
}

namespace {

// Kuhn augmenting-path matching over the dominance DAG (left copy -> right
// copy, edge i->j iff p_i < p_j), then a König alternating reach to extract
// a maximum antichain of size n - |matching|.
struct DominanceMatching {
  std::vector<std::vector<int>> adj;
  std::vector<int> match_left, match_right;
  std::vector<char> visited;

  explicit DominanceMatching(const std::vector<Point>& pts)
      : adj(pts.size()), match_left(pts.size(), -1), match_right(pts.size(), -1) {
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && strictly_less(pts[i], pts[j])) adj[i].push_back(int(j));
  }

  bool augment(int v) {
    for (int u : adj[v]) {
      if (visited[u]) continue;
      visited[u] = 1;
      if (match_right[u] == -1 || augment(match_right[u])) {
        match_left[v] = u;
        match_right[u] = v;
        return true;
      }
    }
    return false;
  }

  void solve() {
    for (std::size_t v = 0; v < adj.size(); ++v) {
      visited.assign(adj.size(), 0);
      augment(int(v));
    }
  }
};

}  // namespace

AntichainResult max_antichain(const PointSet& points) {
  const auto& pts = points.points();
  if (pts.empty()) return AntichainResult{0, {}};
  DominanceMatching m(pts);
  m.solve();

  std::size_t n = pts.size();
  std::vector<char> in_zl(n, 0), in_zr(n, 0);
  std::deque<int> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (m.match_left[v] == -1) {
      in_zl[v] = 1;
      queue.push_back(int(v));
    }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : m.adj[v]) {
      if (in_zr[u]) continue;
      in_zr[u] = 1;
      int w = m.match_right[u];
      if (w != -1 && !in_zl[w]) {
        in_zl[w] = 1;
        queue.push_back(w);
      }
    }
  }

  AntichainResult out;
  for (std::size_t v = 0; v < n; ++v)
    if (in_zl[v] && !in_zr[v]) out.witness.push_back(pts[v]);
  out.size = out.witness.size();
  return out;
}

std::size_t max_antichain_2d_size(const PointSet& points) {
  if (points.dim() != 2) throw invalid_input("2D antichain shortcut on a non-2D set");
  const auto& pts = points.points();  // x-major: equal x sorted by y ascending
  // longest strictly decreasing subsequence of y
  std::vector<int> tails;  // tails[k] = largest final y of a decreasing subsequence of length k+1
  for (const Point& p : pts) {
    int y = p[1];
    auto it = std::lower_bound(tails.begin(), tails.end(), y,
                               [](int tail, int v) { return tail > v; });
    if (it == tails.end())
      tails.push_back(y);
    else
      *it = y;
  }
  return tails.size();
}

int cdim_lower_bound(const PointSet& s) {
  require_poly_antimatroid(s, "cdim_lower_bound");
  auto r = max_antichain(join_irreducibles(s));
  return std::max<std::size_t>(1, r.size);
}

int CdimResult::value() const {
  if (!exact()) throw invalid_input("convex dimension value requested from a bounds-only result");
  return lower;
}

CdimResult convex_dimension_exact(const PointSet& s, SearchCaps caps) {
  require_poly_antimatroid(s, "convex_dimension_exact");
  CdimResult result{1, std::nullopt, {}, PointSet(s.dim()), false};

  PointSet irr = join_irreducibles(s);
  auto antichain = max_antichain(irr);
  result.irreducible_antichain = PointSet(s.dim(), antichain.witness);
  result.lower = std::max<std::size_t>(1, antichain.size);

  ChainEnumeration enumeration = enumerate_maximal_chains(s, caps.chain_cap);
  const auto& chains = enumeration.chains;
  if (enumeration.overflowed) {
    result.exhausted = true;  // bounds-only: no certified upper bound
    return result;
  }

  // join of the complete chain family must reproduce s (every member lies on
  // some maximal chain); gives the certified upper bound
  if (join_of_chains(chains) != s) {
    result.exhausted = true;
    return result;
  }
  int m = int(chains.size());
  result.upper = m;

  // every join-irreducible equals some pick on a witness chain, so a subset
  // whose chains miss one can never join to s; cheap mask filter before the
  // join computation
  const auto& irr_pts = irr.points();
  std::size_t words = (irr_pts.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> irr_mask(m, std::vector<std::uint64_t>(words, 0));
  for (int c = 0; c < m; ++c)
    for (std::size_t i = 0; i < irr_pts.size(); ++i)
      for (const Point& p : chains[c].points())
        if (p == irr_pts[i]) irr_mask[c][i >> 6] |= 1ull << (i & 63);
  std::vector<std::uint64_t> irr_full(words, 0);
  for (std::size_t i = 0; i < irr_pts.size(); ++i) irr_full[i >> 6] |= 1ull << (i & 63);

  std::size_t budget = caps.subset_cap;
  std::vector<std::uint64_t> covered(words);
  for (int k = result.lower; k <= m; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (budget == 0) {
        result.lower = k;  // every smaller k was fully refuted
        result.exhausted = true;
        return result;
      }
      --budget;
      covered.assign(words, 0);
      for (int i : idx)
        for (std::size_t w = 0; w < words; ++w) covered[w] |= irr_mask[i][w];
      if (covered == irr_full) {
        std::vector<Chain> subset;
        subset.reserve(idx.size());
        for (int i : idx) subset.push_back(chains[i]);
        if (join_of_chains(subset) == s) {
          result.lower = k;
          result.upper = k;
          result.witnesses = std::move(subset);
          return result;
        }
      }
      // next k-combination in lexicographic order
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  // unreachable for a poly-antimatroid: k = m always succeeds
  result.exhausted = true;
  return result;
}

CdimResult cdim_2d(const PointSet& s) {
  if (s.dim() != 2) throw invalid_input("cdim_2d requires a 2-dimensional set");
  if (auto v = planar::check_antimatroidal_2d(s))
    throw invalid_input("cdim_2d requires an antimatroidal set: " + v->message);

  CdimResult result{1, std::nullopt, {}, PointSet(2), false};
  auto antichain = max_antichain(join_irreducibles(s));
  result.irreducible_antichain = PointSet(2, antichain.witness);

  const auto& pts = s.points();
  bool all_comparable = true;
  for (std::size_t i = 0; i + 1 < pts.size() && all_comparable; ++i)
    all_comparable = leq(pts[i], pts[i + 1]);  // sorted: comparable <=> totally ordered
  if (all_comparable) {
    result.lower = 1;
    result.upper = 1;
    result.witnesses.emplace_back(pts);
    return result;
  }
  result.lower = 2;
  result.upper = 2;
  result.witnesses.push_back(planar::trace_lower_boundary(s));
  result.witnesses.push_back(planar::trace_upper_boundary(s));
  return result;
}

}  // namespace polyanti::cdim
