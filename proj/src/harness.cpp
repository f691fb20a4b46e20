#include "polyanti/harness.hpp"

#include <chrono>
#include <fstream>
#include <thread>

#include "polyanti/axioms.hpp"
#include "polyanti/cdim.hpp"
#include "polyanti/report.hpp"
#include "polyanti/rng.hpp"
#include "polyanti/staircase.hpp"

namespace polyanti::harness {

namespace {

void require_3d_box(const Point& box) {
  if (box.dim() != 3) throw invalid_input("search box must be a 3-dimensional point");
}

// Precomputed per-cell tables for one box: row-major cell indices with x
// fastest, predecessor bit masks, and pairwise join/meet cell indices.
struct BoxTables {
  std::array<int, 3> ext;
  int cells;
  std::vector<std::array<int, 3>> coord;
  std::vector<std::uint32_t> pred;
  std::vector<std::vector<std::uint8_t>> join_idx;
  std::vector<std::vector<std::uint8_t>> meet_idx;

  explicit BoxTables(const Point& box) {
    ext = {box[0] + 1, box[1] + 1, box[2] + 1};
    cells = ext[0] * ext[1] * ext[2];
    coord.resize(cells);
    for (int z = 0; z < ext[2]; ++z)
      for (int y = 0; y < ext[1]; ++y)
        for (int x = 0; x < ext[0]; ++x) coord[index_of(x, y, z)] = {x, y, z};

    pred.assign(cells, 0);
    join_idx.assign(cells, std::vector<std::uint8_t>(cells));
    meet_idx.assign(cells, std::vector<std::uint8_t>(cells));
    for (int i = 0; i < cells; ++i) {
      auto [x, y, z] = coord[i];
      if (x > 0) pred[i] |= 1u << index_of(x - 1, y, z);
      if (y > 0) pred[i] |= 1u << index_of(x, y - 1, z);
      if (z > 0) pred[i] |= 1u << index_of(x, y, z - 1);
      for (int j = 0; j < cells; ++j) {
        auto [u, v, w] = coord[j];
        join_idx[i][j] = std::uint8_t(index_of(std::max(x, u), std::max(y, v), std::max(z, w)));
        meet_idx[i][j] = std::uint8_t(index_of(std::min(x, u), std::min(y, v), std::min(z, w)));
      }
    }
  }

  int index_of(int x, int y, int z) const { return x + ext[0] * (y + ext[1] * z); }

  PointSet to_set(std::uint32_t mask) const {
    PointSet s(3);
    for (int i = 0; i < cells; ++i)
      if (mask >> i & 1) s.insert(Point(coord[i][0], coord[i][1], coord[i][2]));
    return s;
  }

  void members(std::uint32_t mask, std::vector<int>& out) const {
    out.clear();
    for (int i = 0; i < cells; ++i)
      if (mask >> i & 1) out.push_back(i);
  }

  bool accessible(const std::vector<int>& bits, std::uint32_t mask) const {
    for (int i : bits)
      if (i != 0 && !(pred[i] & mask)) return false;
    return true;  // cell 0 is the origin and is always set
  }

  bool union_closed(const std::vector<int>& bits, std::uint32_t mask) const {
    for (std::size_t a = 0; a < bits.size(); ++a)
      for (std::size_t b = a + 1; b < bits.size(); ++b)
        if (!(mask >> join_idx[bits[a]][bits[b]] & 1)) return false;
    return true;
  }

  bool intersection_closed(const std::vector<int>& bits, std::uint32_t mask) const {
    for (std::size_t a = 0; a < bits.size(); ++a)
      for (std::size_t b = a + 1; b < bits.size(); ++b)
        if (!(mask >> meet_idx[bits[a]][bits[b]] & 1)) return false;
    return true;
  }
};

BoxTables exhaustive_tables(const Point& box) {
  require_3d_box(box);
  std::size_t n = box_cell_count(box);
  if (n > kExhaustiveCellLimit)
    throw invalid_input("box has " + std::to_string(n) + " cells, over the exhaustive limit of " +
                        std::to_string(kExhaustiveCellLimit) +
                        "; switch to randomized sampling");
  return BoxTables(box);
}

struct ClaimSpec {
  std::string name;  // "staircase" | "cdim"
  int bound = 0;
  PersistOptions persist;
};

struct Slice {
  SearchCounts counts;
  std::vector<Counterexample> counterexamples;
  std::vector<PointSet> indeterminates;
};

// written the moment a counterexample turns up; distinct indices keep
// concurrent workers out of each other's files
void persist_counterexample(const ClaimSpec& claim, const Counterexample& ce,
                            std::uint64_t index) {
  if (claim.persist.counterexample_dir.empty()) return;
  std::string path = claim.persist.counterexample_dir + "/ce_" + claim.name + "_" +
                     std::to_string(index) + ".pts";
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write '" + path + "'");
  out << "# claim: " << ce.claim << "\n" << io::format_point_file(ce.set);
}

void apply_claim(const ClaimSpec& claim, const PointSet& set, std::uint64_t index,
                 Slice& slice) {
  if (set.size() <= 1) {
    ++slice.counts.trivial;
    return;
  }
  if (claim.name == "staircase") {
    auto decision = staircase::is_step_staircase(set);
    switch (decision.verdict) {
      case staircase::StaircaseVerdict::yes:
        ++slice.counts.claim_holds;
        break;
      case staircase::StaircaseVerdict::no:
        slice.counterexamples.push_back({"staircase", set});
        persist_counterexample(claim, slice.counterexamples.back(), index);
        break;
      case staircase::StaircaseVerdict::indeterminate:
        slice.indeterminates.push_back(set);
        break;
    }
  } else {
    auto result = cdim::convex_dimension_exact(set);
    if (!result.exact()) {
      slice.indeterminates.push_back(set);
    } else if (result.value() <= claim.bound) {
      ++slice.counts.claim_holds;
    } else {
      slice.counterexamples.push_back({"cdim<=" + std::to_string(claim.bound), set});
      persist_counterexample(claim, slice.counterexamples.back(), index);
    }
  }
}

// Scans subset indices [k_begin, k_end): subset mask = 2k+1 (origin cell
// always present).
Slice scan_slice(const BoxTables& tables, std::uint64_t k_begin, std::uint64_t k_end,
                 const ClaimSpec* claim) {
  Slice slice;
  std::vector<int> bits;
  bits.reserve(tables.cells);
  for (std::uint64_t k = k_begin; k < k_end; ++k) {
    std::uint32_t mask = std::uint32_t(2 * k + 1);
    ++slice.counts.scanned;
    tables.members(mask, bits);
    bool acc = tables.accessible(bits, mask);
    bool uc = tables.union_closed(bits, mask);
    bool ic = tables.intersection_closed(bits, mask);
    slice.counts.accessible += acc;
    slice.counts.union_closed += uc;
    slice.counts.intersection_closed += ic;
    if (!(acc && uc)) continue;
    ++slice.counts.poly_antimatroids;
    if (!ic) continue;
    ++slice.counts.poset_poly_antimatroids;
    if (claim) apply_claim(*claim, tables.to_set(mask), k, slice);
  }
  return slice;
}

SearchReport run_exhaustive(const Point& box, const ClaimSpec& claim, int workers) {
  auto t0 = std::chrono::steady_clock::now();
  BoxTables tables = exhaustive_tables(box);
  std::uint64_t total = 1ull << (tables.cells - 1);
  if (workers < 1) workers = 1;
  if (std::uint64_t(workers) > total) workers = int(total);

  std::vector<Slice> slices(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = total * w / workers;
    std::uint64_t hi = total * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { slices[w] = scan_slice(tables, lo, hi, &claim); });
  }
  for (auto& t : pool) t.join();

  SearchReport report;
  report.box = box;
  report.claim = claim.name;
  report.bound = claim.bound;
  report.mode = "exhaustive";
  for (const Slice& s : slices) {
    report.counts.scanned += s.counts.scanned;
    report.counts.accessible += s.counts.accessible;
    report.counts.union_closed += s.counts.union_closed;
    report.counts.intersection_closed += s.counts.intersection_closed;
    report.counts.poly_antimatroids += s.counts.poly_antimatroids;
    report.counts.poset_poly_antimatroids += s.counts.poset_poly_antimatroids;
    report.counts.claim_holds += s.counts.claim_holds;
    report.counts.trivial += s.counts.trivial;
    report.counterexamples.insert(report.counterexamples.end(), s.counterexamples.begin(),
                                  s.counterexamples.end());
    report.indeterminates.insert(report.indeterminates.end(), s.indeterminates.begin(),
                                 s.indeterminates.end());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace

std::size_t box_cell_count(const Point& box) {
  require_3d_box(box);
  return std::size_t(box[0] + 1) * std::size_t(box[1] + 1) * std::size_t(box[2] + 1);
}

void enumerate_poly_antimatroids(const Point& box, bool require_intersection_closed,
                                 const std::function<void(const PointSet&)>& emit) {
  BoxTables tables = exhaustive_tables(box);
  std::uint64_t total = 1ull << (tables.cells - 1);
  std::vector<int> bits;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint32_t mask = std::uint32_t(2 * k + 1);
    tables.members(mask, bits);
    if (!tables.accessible(bits, mask) || !tables.union_closed(bits, mask)) continue;
    if (require_intersection_closed && !tables.intersection_closed(bits, mask)) continue;
    emit(tables.to_set(mask));
  }
}

PointSet sample_poly_antimatroid(const Point& box, std::uint64_t seed,
                                 bool require_intersection_closed, std::size_t growth_steps) {
  require_3d_box(box);
  SplitMix64 rng(seed);
  PointSet set(3);
  set.insert(Point(0, 0, 0));

  std::vector<Point> candidates;
  for (std::size_t step = 0; step < growth_steps; ++step) {
    candidates.clear();
    for (int z = 0; z <= box[2]; ++z)
      for (int y = 0; y <= box[1]; ++y)
        for (int x = 0; x <= box[0]; ++x) {
          if (set.contains_coords(x, y, z)) continue;
          bool has_pred = (x > 0 && set.contains_coords(x - 1, y, z)) ||
                          (y > 0 && set.contains_coords(x, y - 1, z)) ||
                          (z > 0 && set.contains_coords(x, y, z - 1));
          if (!has_pred) continue;
          Point p(x, y, z);
          bool closed = true;
          for (const Point& q : set.points()) {
            Point u = join(p, q);
            if (!(u == p) && !set.contains(u)) {
              closed = false;
              break;
            }
            if (require_intersection_closed) {
              Point m = meet(p, q);
              if (!(m == p) && !set.contains(m)) {
                closed = false;
                break;
              }
            }
          }
          if (closed) candidates.push_back(p);
        }
    if (candidates.empty()) break;
    set.insert(candidates[rng.below(candidates.size())]);
  }
  return set;
}

SearchReport test_conjecture_staircase(const Point& box, int workers,
                                       const PersistOptions& persist) {
  return run_exhaustive(box, ClaimSpec{"staircase", 0, persist}, workers);
}

SearchReport test_cdim_bound(const Point& box, int bound, int workers,
                             const PersistOptions& persist) {
  return run_exhaustive(box, ClaimSpec{"cdim", bound, persist}, workers);
}

SearchReport test_claim_random(const Point& box, const std::string& claim, int bound,
                               std::size_t samples, std::uint64_t seed,
                               const PersistOptions& persist) {
  require_3d_box(box);
  if (claim != "staircase" && claim != "cdim") throw invalid_input("unknown claim: " + claim);
  auto t0 = std::chrono::steady_clock::now();
  ClaimSpec spec{claim, bound, persist};
  std::size_t cells = box_cell_count(box);

  SearchReport report;
  report.box = box;
  report.claim = claim;
  report.bound = bound;
  report.mode = "random";
  Slice slice;
  for (std::size_t i = 0; i < samples; ++i) {
    SplitMix64 size_rng(seed ^ (0x9E3779B97F4A7C15ull * (i + 1)));
    std::size_t steps = 1 + std::size_t(size_rng.below(cells));
    PointSet set = sample_poly_antimatroid(box, seed + i, /*require_intersection_closed=*/true, steps);
    ++slice.counts.scanned;
    slice.counts.accessible += is_accessible(set);
    slice.counts.union_closed += is_union_closed(set);
    bool ic = is_intersection_closed(set);
    slice.counts.intersection_closed += ic;
    bool poly = is_poly_antimatroid(set);
    slice.counts.poly_antimatroids += poly;
    if (poly && ic) {
      ++slice.counts.poset_poly_antimatroids;
      apply_claim(spec, set, i, slice);
    }
  }
  report.counts = slice.counts;
  report.counterexamples = std::move(slice.counterexamples);
  report.indeterminates = std::move(slice.indeterminates);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string serialize_report(const SearchReport& report) {
  io::Report out;
  out.add("command", "conjecture");
  out.add("claim", report.claim);
  if (report.claim == "cdim") out.add("bound", (long long)report.bound);
  out.add("box", io::format_point_token(report.box));
  out.add("cells", (long long)box_cell_count(report.box));
  out.add("mode", report.mode);
  out.add("scanned", (long long)report.counts.scanned);
  out.add("accessible", (long long)report.counts.accessible);
  out.add("union_closed", (long long)report.counts.union_closed);
  out.add("intersection_closed", (long long)report.counts.intersection_closed);
  out.add("poly_antimatroids", (long long)report.counts.poly_antimatroids);
  out.add("poset_poly_antimatroids", (long long)report.counts.poset_poly_antimatroids);
  out.add("trivial", (long long)report.counts.trivial);
  out.add("claim_holds", (long long)report.counts.claim_holds);
  out.add("counterexamples", (long long)report.counterexamples.size());
  for (std::size_t i = 0; i < report.counterexamples.size(); ++i)
    out.add("counterexample_" + std::to_string(i + 1),
            report.counterexamples[i].claim + " " +
                io::format_point_sequence(report.counterexamples[i].set.points()));
  out.add("indeterminates", (long long)report.indeterminates.size());
  for (std::size_t i = 0; i < report.indeterminates.size(); ++i)
    out.add("indeterminate_" + std::to_string(i + 1),
            io::format_point_sequence(report.indeterminates[i].points()));
  return out.str();
}

}  // namespace polyanti::harness
