// Command-line surface over the torus-quotient library. Every subcommand
// reads one JSON problem file and writes one JSON report to stdout.
// Exit codes: 0 success, 2 malformed input, 3 domain error (wall, infinite
// sector list, budget, invalid degree).

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "problem_io.hpp"
#include "torq/errors.hpp"
#include "torq/gauged.hpp"
#include "torq/inertia.hpp"
#include "torq/quasimap.hpp"
#include "torq/quotient.hpp"
#include "torq/strata.hpp"

namespace {

using namespace torq;
using namespace torq::cli;
using nlohmann::json;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& command, const std::string& path,
          const ProblemFile& pf, json flags, json result) {
  // only the basename goes into the report, so runs from different
  // checkouts stay byte-identical
  std::string base = path;
  if (auto cut = base.find_last_of('/'); cut != std::string::npos)
    base = base.substr(cut + 1);
  json rep = report_envelope(command, base, fnv1a_digest(pf.raw),
                             std::move(flags), std::move(result));
  std::cout << rep.dump(2) << "\n";
}

json run_quotient(const ProblemFile& pf) {
  json out;
  out["report"] = quotient_report_json(quotient_report(pf.ws));
  json unstable = json::array();
  for (const auto& s : max_unstable_supports(pf.ws)) unstable.push_back(support_json(s));
  out["max_unstable_supports"] = unstable;
  return out;
}

json run_chambers(const ProblemFile& pf, const std::string& nu2_csv) {
  WeightSystem other = pf.ws;
  other.nu = parse_rat_list(nu2_csv);
  if (static_cast<int>(other.nu.size()) != other.rank)
    throw ParseFailure("--nu2 must have " + std::to_string(other.rank) +
                       " entries");
  auto sig1 = chamber_signature(pf.ws);
  auto sig2 = chamber_signature(other);
  json out;
  json j1 = json::array(), j2 = json::array();
  for (const auto& s : sig1) j1.push_back(support_json(s));
  for (const auto& s : sig2) j2.push_back(support_json(s));
  out["signature"] = j1;
  out["signature_other"] = j2;
  out["nu"] = rat_vec_json(pf.ws.nu);
  out["nu_other"] = rat_vec_json(other.nu);
  out["same_chamber"] = (sig1 == sig2);
  return out;
}

json run_inertia(const ProblemFile& pf) {
  json out;
  json sectors = json::array();
  for (const auto& s : inertia_sectors(pf.ws)) sectors.push_back(sector_json(s));
  out["sectors"] = sectors;
  out["sector_count"] = sectors.size();
  return out;
}

json run_quasimap(const ProblemFile& pf, const DegreeVector& d) {
  WeightSystem big = quasimap_problem(pf.ws, d);
  json out;
  json slots = json::array();
  for (const auto& slot : big.slots) {
    json s;
    s["mu"] = rat_vec_json(to_rat_vec(slot.mu));
    s["multiplicity"] = slot.multiplicity;
    if (!slot.label.empty()) s["label"] = slot.label;
    slots.push_back(s);
  }
  out["section_space"] = slots;
  json merged = json::array();
  for (const auto& [mu, mult] : merged_weights(big)) {
    json m;
    m["mu"] = rat_vec_json(to_rat_vec(mu));
    m["multiplicity"] = mult;
    merged.push_back(m);
  }
  out["section_space_merged"] = merged;
  out["degree"] = rat_vec_json(d);
  out["report"] = quotient_report_json(quotient_report(big));
  return out;
}

json run_affine(const ProblemFile& pf, const std::optional<DegreeVector>& deg,
                const std::optional<Rat>& sweep) {
  json out;
  if (sweep) {
    json rows = json::array();
    for (const Rat& d : effective_affine_degrees(pf.ws, *sweep)) {
      json row;
      row["degree"] = d.get_str();
      row["report"] = affine_report_json(pf.ws, affine_report(pf.ws, {d}));
      rows.push_back(row);
    }
    out["bound"] = sweep->get_str();
    out["degrees"] = rows;
    return out;
  }
  if (!deg) throw ParseFailure("affine needs --degree or --sweep");
  AffineReport rep = affine_report(pf.ws, *deg);
  if (!rep.valid)
    throw InvalidDegreeError("degree " + to_string(*deg) +
                             " has an unstable leading support " +
                             support_to_string(rep.leading_support));
  out["degree"] = rat_vec_json(*deg);
  out["report"] = affine_report_json(pf.ws, rep);
  return out;
}

json run_mundet(const ProblemFile& pf, const DegreeVector& d, const Rat& rho,
                const Rat& area, bool with_threshold) {
  MundetProblem mp{pf.ws, d, rho, area};
  json out;
  out["degree"] = rat_vec_json(d);
  out["rho"] = rho.get_str();
  out["area"] = area.get_str();
  json disagree = json::array();
  bool all_agree = true;
  for (const auto& s : all_supports(pf.ws)) {
    bool gauged = is_gauged_semistable(mp, s);
    if (gauged != is_ss_support(pf.ws, s)) {
      all_agree = false;
      json dnode;
      dnode["support"] = support_json(s);
      dnode["gauged_semistable"] = gauged;
      disagree.push_back(dnode);
    }
  }
  out["agrees_with_git"] = all_agree;
  out["disagreements"] = disagree;
  if (with_threshold) out["threshold"] = rho_threshold(pf.ws, d, area).get_str();
  return out;
}

json run_strata(const ProblemFile& pf, int n, bool with_splittings) {
  RatVec total = pf.total_degree ? *pf.total_degree : zero_vec(pf.ws.rank);
  std::vector<RatVec> degrees;
  if (pf.effective_degrees) {
    degrees = *pf.effective_degrees;
  } else if (pf.ws.rank == 1 && pf.bound) {
    // default effectivity: the classes with affine gauged maps up to the
    // file's bound
    for (const Rat& d : effective_affine_degrees(pf.ws, *pf.bound))
      degrees.push_back({d});
  } else {
    degrees.push_back(zero_vec(pf.ws.rank));
  }

  json out;
  out["n"] = n;
  out["total_degree"] = rat_vec_json(total);
  json types = json::array();
  for (const auto& t : enumerate_types(n, degrees, total)) {
    json node;
    node["tree"] = tree_json(t);
    node["codimension"] = codimension(t);
    node["encoding"] = canonical_encoding(t);
    types.push_back(node);
  }
  out["types"] = types;
  out["type_count"] = types.size();
  if (with_splittings) {
    json sp = json::array();
    for (const auto& s : infinite_splittings(n, total, degrees))
      sp.push_back(splitting_json(s));
    out["splittings"] = sp;
    out["splitting_count"] = sp.size();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of torus quotients and gauged maps"};
  app.require_subcommand(1);

  std::string path, nu2, degree_csv, rho_str = "1", area_str = "1",
                    sweep_str, bound_str;
  int n_marks = 1;
  bool with_threshold = false, with_splittings = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", path, "problem file (JSON)")->required();
  };

  CLI::App* quotient = app.add_subcommand(
      "quotient", "semistable locus, properness, fixed points");
  add_input(quotient);

  CLI::App* chambers =
      app.add_subcommand("chambers", "chamber signature and comparison");
  add_input(chambers);
  chambers->add_option("--nu2", nu2, "second polarization, e.g. \"2,1\"")
      ->required();

  CLI::App* inertia = app.add_subcommand("inertia", "twisted sector list");
  add_input(inertia);

  CLI::App* quasimap = app.add_subcommand(
      "quasimap", "section space and quotient report for an integral class");
  add_input(quasimap);
  quasimap->add_option("--degree", degree_csv, "class, e.g. \"1,0\"");

  CLI::App* affine = app.add_subcommand(
      "affine", "affine gauged map report for one class or a sweep");
  add_input(affine);
  affine->add_option("--degree", degree_csv, "class, possibly fractional");
  affine->add_option("--sweep", sweep_str, "list all effective classes up to the bound");

  CLI::App* mundet = app.add_subcommand(
      "mundet", "gauged stability at a given rho, optionally the threshold");
  add_input(mundet);
  mundet->add_option("--degree", degree_csv, "bundle class");
  mundet->add_option("--rho", rho_str, "stability parameter (default 1)");
  mundet->add_option("--area", area_str, "domain area (default 1)");
  mundet->add_flag("--threshold", with_threshold, "also compute the threshold");

  CLI::App* strata =
      app.add_subcommand("strata", "stable scaled tree types and splittings");
  add_input(strata);
  strata->add_option("--n", n_marks, "number of markings")->required();
  strata->add_flag("--splittings", with_splittings,
                   "include the infinite-scaling splittings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ProblemFile pf = load_problem(path);

    auto degree_or_file = [&]() -> DegreeVector {
      if (!degree_csv.empty()) {
        RatVec d = parse_rat_list(degree_csv);
        if (static_cast<int>(d.size()) != pf.ws.rank)
          throw ParseFailure("--degree must have " +
                             std::to_string(pf.ws.rank) + " entries");
        return d;
      }
      if (pf.degree) return *pf.degree;
      throw ParseFailure("no degree given (flag --degree or file \"degree\")");
    };

    if (*quotient) {
      emit("quotient", path, pf, json::object(), run_quotient(pf));
    } else if (*chambers) {
      emit("chambers", path, pf, json{{"nu2", nu2}}, run_chambers(pf, nu2));
    } else if (*inertia) {
      emit("inertia", path, pf, json::object(), run_inertia(pf));
    } else if (*quasimap) {
      DegreeVector d = degree_or_file();
      emit("quasimap", path, pf, json{{"degree", rat_vec_json(d)}},
           run_quasimap(pf, d));
    } else if (*affine) {
      std::optional<DegreeVector> d;
      std::optional<Rat> sweep;
      if (!sweep_str.empty())
        sweep = parse_rational(sweep_str);
      else if (pf.bound && degree_csv.empty() && !pf.degree)
        sweep = *pf.bound;
      if (!sweep) d = degree_or_file();
      json flags;
      if (sweep) flags["sweep"] = sweep->get_str();
      if (d) flags["degree"] = rat_vec_json(*d);
      emit("affine", path, pf, flags, run_affine(pf, d, sweep));
    } else if (*mundet) {
      DegreeVector d = degree_or_file();
      Rat rho = pf.rho ? *pf.rho : Rat(1);
      if (rho_str != "1" || !pf.rho) rho = parse_rational(rho_str);
      Rat area = pf.area ? *pf.area : Rat(1);
      if (area_str != "1" || !pf.area) area = parse_rational(area_str);
      json flags{{"degree", rat_vec_json(d)},
                 {"rho", rho.get_str()},
                 {"area", area.get_str()},
                 {"threshold", with_threshold}};
      emit("mundet", path, pf, flags, run_mundet(pf, d, rho, area, with_threshold));
    } else if (*strata) {
      json flags{{"n", n_marks}, {"splittings", with_splittings}};
      emit("strata", path, pf, flags, run_strata(pf, n_marks, with_splittings));
    }
    return 0;
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WallError& e) {
    std::cerr << "domain error (wall): " << e.what() << "\n";
    return 3;
  } catch (const InfiniteInertiaError& e) {
    std::cerr << "domain error (infinite inertia): " << e.what() << "\n";
    return 3;
  } catch (const GroupTooLargeError& e) {
    std::cerr << "domain error (order cap): " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "domain error (budget): " << e.what() << "\n";
    return 3;
  } catch (const InvalidDegreeError& e) {
    std::cerr << "domain error (invalid degree): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
