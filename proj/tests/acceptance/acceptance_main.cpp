// Acceptance suite: end-to-end checks of the worked examples and the
// randomized property suites, one PASS/FAIL line per criterion. Exits
// nonzero if any criterion fails or exceeds its time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "testkit.hpp"
#include "torq/cone.hpp"
#include "torq/errors.hpp"
#include "torq/gauged.hpp"
#include "torq/inertia.hpp"
#include "torq/quasimap.hpp"
#include "torq/quotient.hpp"
#include "torq/strata.hpp"

using namespace torq;
using nlohmann::json;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(std::ostream&)> run;  // throws on failure
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

Support sup(std::initializer_list<int> one_based) {
  Support s;
  for (int i : one_based) s.push_back(i - 1);
  std::sort(s.begin(), s.end());
  return s;
}

// ---------------------------------------------------------------------- 1
void crit_two_chambers(std::ostream& log) {
  WeightSystem a = testkit::c4(1, 2), b = testkit::c4(2, 1);

  require(max_unstable_supports(a) ==
              std::vector<Support>{sup({4}), sup({1, 2, 3})},
          "nu=(1,2): maximal unstable supports differ from {{1,2,3},{4}}");
  require(max_unstable_supports(b) ==
              std::vector<Support>{sup({1, 2}), sup({3, 4})},
          "nu=(2,1): maximal unstable supports differ from {{1,2},{3,4}}");
  require(chamber_signature(a) != chamber_signature(b),
          "the two polarizations should land in different chambers");

  for (const WeightSystem* ws : {&a, &b}) {
    QuotientReport r = quotient_report(*ws);
    require(r.proper, "quotient not proper");
    require(r.stable_eq_ss, "stable != semistable");
    require(r.dimension == 2, "quotient dimension != 2");
  }
  QuotientReport r = quotient_report(a);
  require(r.fixed_point_count == 3, "nu=(1,2) should have 3 fixed points");
  for (const auto& fp : r.fixed_points)
    require(fp.isotropy == 1, "fixed-point isotropy should be trivial");
  log << "chambers, unstable loci, fixed points as listed";
}

// ---------------------------------------------------------------------- 2
void crit_section_space(std::ostream& log) {
  DegreeVector d = {Rat(1), Rat(0)};
  WeightSystem big = quasimap_problem(testkit::c4(1, 2), d);
  auto merged = merged_weights(big);
  require(merged.size() == 3, "expected three distinct weights");
  require(merged[0].first == IntVec{Int(0), Int(1)} && merged[0].second == 1,
          "(0,1) should have multiplicity 1");
  require(merged[1].first == IntVec{Int(1), Int(0)} && merged[1].second == 4,
          "(1,0) should have multiplicity 4");
  require(merged[2].first == IntVec{Int(1), Int(1)} && merged[2].second == 2,
          "(1,1) should have multiplicity 2");

  long counts[2] = {0, 0};
  WeightSystem systems[2] = {testkit::c4(1, 2), testkit::c4(2, 1)};
  for (int c = 0; c < 2; ++c) {
    QuotientReport rep = quasimap_report(systems[c], d);
    require(rep.dimension == 5, "section-space quotient dimension != 5");
    counts[c] = rep.fixed_point_count;

    // exhaustive oracle: semistable independent pairs of expanded slots;
    // coordinate pairs inside one slot repeat a weight and never have full
    // rank, so distinct slots carry everything
    WeightSystem ex = quasimap_problem(systems[c], d);
    long brute = 0;
    for (int i = 0; i < ex.count(); ++i)
      for (int j = i + 1; j < ex.count(); ++j) {
        Support s{i, j};
        if (det(weight_matrix(ex, s)) == 0) continue;
        if (!is_ss_support(ex, s)) continue;
        brute += ex.slots[i].multiplicity * ex.slots[j].multiplicity;
      }
    require(counts[c] == brute, "fixed-point count disagrees with the oracle");
  }
  require(counts[0] == 6, "nu=(1,2) section space should have 6 fixed points");
  require(counts[1] == 12, "nu=(2,1) section space should have 12 fixed points");
  log << "multiplicities (0,1)x1 (1,1)x2 (1,0)x4, dim 5, fixed points 6/12";
}

// ---------------------------------------------------------------------- 3
void crit_affine_table(std::ostream& log) {
  WeightSystem ws = testkit::p23();
  auto degs = effective_affine_degrees(ws, 1);
  std::vector<Rat> expect = {Rat(0), Rat(1, 3), Rat(1, 2), Rat(2, 3), Rat(1)};
  require(degs == expect, "effective degree list differs");
  long dims[5] = {1, 2, 3, 4, 6};
  long stabs[5] = {1, 3, 2, 3, 1};
  for (int i = 0; i < 5; ++i) {
    AffineReport rep = affine_report(ws, {degs[i]});
    require(rep.valid, "row should be effective");
    require(rep.dimension == dims[i], "dimension row mismatch");
    require(rep.stabilizer_order == stabs[i], "stabilizer row mismatch");
  }
  log << "degrees {0,1/3,1/2,2/3,1}, dims (1,2,3,4,6), stabilizers (1,3,2,3,1)";
}

// ---------------------------------------------------------------------- 4
void crit_symmetric_product(std::ostream& log) {
  WeightSystem line = testkit::weighted_line({1});
  for (long d = 0; d <= 10; ++d) {
    AffineReport rep = affine_report(line, {Rat(d)});
    require(rep.valid && rep.dimension == d,
            "dimension should equal the class for d=" + std::to_string(d));
  }
  log << "affine dimensions equal the class for d = 0..10";
}

// ---------------------------------------------------------------------- 5
void crit_sectors(std::ostream& log) {
  auto sectors = inertia_sectors(testkit::p23());
  require(sectors.size() == 4, "the orbifold line should have 4 sectors");
  std::vector<std::pair<long, long>> od;
  for (const auto& s : sectors) od.emplace_back(s.element_order.get_si(), s.dimension);
  std::vector<std::pair<long, long>> expect = {{1, 1}, {2, 0}, {3, 0}, {3, 0}};
  require(od == expect, "(order, dim) list mismatch");

  require(inertia_sectors(testkit::c4(1, 2)).size() == 1,
          "the free quotient should have a single sector");

  for (long a = 1; a <= 7; ++a)
    for (long b = a; b <= 7; ++b) {
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
      if (g != 1) continue;
      WeightSystem ws = testkit::weighted_line({a, b});
      long got = static_cast<long>(inertia_sectors(ws).size());
      require(got == a + b - 1, "sector count != a+b-1");

      // brute force over all torsion elements with denominator a*b
      long brute = 0;
      std::set<std::string> seen;
      for (long t = 0; t < a * b; ++t) {
        Rat q(t, a * b);
        q.canonicalize();
        TorsionElement el = TorsionElement::from({q});
        if (!seen.insert(el.representative[0].get_str()).second) continue;
        if (is_ss_support(ws, sector_support(ws, el))) ++brute;
      }
      require(got == brute, "sector count disagrees with the sweep");
    }
  log << "P[2,3] sectors (1,1),(2,0),(3,0),(3,0); counts a+b-1 for a,b <= 7";
}

// ---------------------------------------------------------------------- 6
void crit_cone_properties(std::ostream& log) {
  std::mt19937 rng(20240809);
  std::uniform_int_distribution<int> rd(1, 4), kd(0, 8);
  long checked = 0;
  for (int it = 0; it < 10000; ++it) {
    int r = rd(rng), k = kd(rng);
    std::vector<RatVec> gens;
    for (int j = 0; j < k; ++j)
      gens.push_back(testkit::random_rat_vec(rng, r, -3, 3, 2));
    RatVec target = testkit::random_rat_vec(rng, r, -3, 3, 2);
    ConeDecision dec = cone_member(gens, target);
    require(testkit::witness_checks(gens, target, dec),
            "cone witness failed to verify by substitution");

    // destabilizer exists iff the polarization escapes the cone
    WeightSystem ws;
    ws.rank = r;
    ws.nu = target;
    Support full;
    if (k == 0) {
      ws.slots.push_back({IntVec(r, Int(0)), 1, ""});
    } else {
      for (const auto& g : gens) {
        IntVec mu;
        bool integral = true;
        for (const Rat& q : g) {
          if (!is_integer(q)) integral = false;
          mu.push_back(floor_rat(q));
        }
        if (!integral) continue;
        ws.slots.push_back({mu, 1, ""});
        full.push_back(static_cast<int>(full.size()));
      }
      if (ws.slots.empty()) ws.slots.push_back({IntVec(r, Int(0)), 1, ""});
    }
    if (!full.empty()) {
      bool member =
          cone_member(weights_on(ws, full), ws.nu).member;
      auto cert = destab_certificate(ws, full);
      require(cert.has_value() == !member,
              "destabilizer existence must negate cone membership");
      if (cert) {
        RatVec lam = to_rat_vec(cert->lambda);
        for (int i : full)
          require(dot(ws.slots[i].mu, lam) >= 0, "certificate inadmissible");
        require(dot(ws.nu, lam) < 0, "certificate does not destabilize");
      }
    }
    ++checked;
  }
  log << checked << " random instances verified";
}

// ---------------------------------------------------------------------- 7
void crit_large_rho(std::ostream& log) {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dent(-3, 3), dden(1, 2);
  int instances = 0;
  long positive_thresholds = 0;
  while (instances < 100) {
    WeightSystem ws = testkit::random_chamber_system(rng, 3, 5);
    DegreeVector d;
    for (int j = 0; j < ws.rank; ++j) {
      Rat q(dent(rng), dden(rng));
      q.canonicalize();
      d.push_back(q);
    }
    Rat rho0;
    try {
      rho0 = rho_threshold(ws, d);
    } catch (const WallError&) {
      continue;  // improper direction without a finite threshold
    }
    ++instances;

    auto supports = all_supports(ws);
    auto agrees = [&](const Rat& rho) {
      MundetProblem mp{ws, d, rho, Rat(1)};
      for (const Support& s : supports)
        if (is_gauged_semistable(mp, s) != is_ss_support(ws, s)) return false;
      return true;
    };

    for (int j = 1; j <= 20; ++j) {
      Rat rho = rho0 + Rat(j, 3);
      rho.canonicalize();
      require(agrees(rho), "disagreement above the threshold");
    }
    if (rho0 > 0) {
      ++positive_thresholds;
      bool bad = !agrees(rho0);
      for (int j = 1; j <= 7 && !bad; ++j) {
        Rat rho = rho0 * Rat(j, 8);
        rho.canonicalize();
        bad = !agrees(rho);
      }
      require(bad, "no disagreement at or below a positive threshold");
    }
  }
  log << instances << " instances, " << positive_thresholds
      << " with positive threshold";
}

// ---------------------------------------------------------------------- 8
void crit_trees(std::ostream& log) {
  RatVec zero{Rat(0)};

  for (int n = 1; n <= 4; ++n) {
    auto types = enumerate_types(n, {zero}, zero);
    std::set<std::string> mine;
    for (const auto& t : types) {
      require(validate(t).ok, "enumerated type fails validation");
      mine.insert(canonical_encoding(t));
    }
    auto brute = testkit::brute_type_encodings(n);
    require(mine == std::set<std::string>(brute.begin(), brute.end()),
            "enumeration disagrees with the oracle at n=" + std::to_string(n));
  }

  std::mt19937 rng(4242);
  for (int it = 0; it < 10000; ++it) {
    ColoredTree t = testkit::random_structural_tree(rng);
    ColoredTree once = stabilize(t);
    require(validate(once).ok, "stabilize output fails validation");
    require(isomorphic(stabilize(once), once), "stabilize is not idempotent");
  }

  // two-pass fixture: draining a leaf bubble destabilizes its parent, and
  // the root folds afterwards
  ColoredTree fixture = single_vertex_tree(Scaling::infinite, zero, {});
  add_child(fixture, 0, Scaling::finite, zero, {1});
  int dying = add_child(fixture, 0, Scaling::finite, zero, {});
  add_child(fixture, dying, Scaling::zero, zero, {});
  ColoredTree folded = stabilize(fixture);
  require(validate(folded).ok &&
              isomorphic(folded,
                         single_vertex_tree(Scaling::finite, zero, {1})),
          "multi-pass collapse fixture did not fold to the point type");

  for (int n = 1; n <= 6; ++n) {
    auto sp = infinite_splittings(n, zero, {zero});
    require(static_cast<long>(sp.size()) == testkit::partition_count(n),
            "splitting count != set-partition count at n=" + std::to_string(n));
  }
  log << "oracle n<=4, 10^4 stabilizations, multi-pass fixture, partitions n<=6";
}

// ---------------------------------------------------------------------- 9
std::string run_cli(const std::string& args, const std::string& env) {
  std::string cmd = env + " " + std::string(TORQ_CLI_PATH) + " " + args +
                    " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Failure("cannot launch the CLI");
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int rc = pclose(pipe);
  if (rc != 0) throw Failure("CLI exited with a failure for: " + args);
  return out;
}

std::string slurp(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  if (!f) throw Failure("missing golden file " + path);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), f)) > 0)
    out.append(buf.data(), got);
  fclose(f);
  return out;
}

void crit_cli_determinism(std::ostream& log) {
  const std::string data = TORQ_DATA_DIR;
  struct Run {
    std::string args;
    std::string golden;
  };
  std::vector<Run> runs = {
      {"quotient " + data + "/c4.json", data + "/golden/c4_quotient.json"},
      {"quasimap " + data + "/c4.json --degree 1,0",
       data + "/golden/c4_quasimap.json"},
      {"affine " + data + "/p23.json --sweep 1",
       data + "/golden/p23_affine_sweep.json"},
      // enough weights that the support scan actually splits across threads
      {"quotient " + data + "/fan7.json", data + "/golden/fan7_quotient.json"},
  };
  for (const auto& r : runs) {
    std::string first = run_cli(r.args, "TORQ_THREADS=1");
    std::string second = run_cli(r.args, "TORQ_THREADS=1");
    std::string wide = run_cli(r.args, "TORQ_THREADS=4");
    require(first == second, "two runs differ for: " + r.args);
    require(first == wide, "thread counts change the output for: " + r.args);
    require(first == slurp(r.golden), "output differs from golden: " + r.golden);
    // every emitted report re-parses under the published schema
    json parsed = json::parse(first);
    require(parsed.at("schema") == "torq-report/1" &&
                parsed.contains("version") && parsed.contains("command") &&
                parsed.at("input").contains("digest") &&
                parsed.contains("result"),
            "report does not follow the published schema");
  }
  log << runs.size() << " golden commands stable across runs and threads";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "two-chamber example on C^4", 1.0, crit_two_chambers},
      {2, "degree-(1,0) section space", 1.0, crit_section_space},
      {3, "affine table over the orbifold line", 1.0, crit_affine_table},
      {4, "symmetric-product dimensions", 1.0, crit_symmetric_product},
      {5, "twisted sector counts", 5.0, crit_sectors},
      {6, "cone witness properties", 30.0, crit_cone_properties},
      {7, "large-rho equivalence", 60.0, crit_large_rho},
      {8, "scaled tree suite", 30.0, crit_trees},
      {9, "CLI determinism", 30.0, crit_cli_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    std::string error;
    try {
      c.run(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = error.empty() && secs <= c.limit_seconds;
    if (!ok) ++failures;
    std::printf("[%s] %d: %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), secs, c.limit_seconds,
                error.empty() ? "" : " -- ", error.c_str());
    if (ok && log.str().size()) std::printf("         %s\n", log.str().c_str());
    if (!error.empty() && secs > c.limit_seconds)
      std::printf("         over time budget\n");
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
