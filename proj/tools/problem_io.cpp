#include "problem_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace torq::cli {

Rat rat_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  throw std::invalid_argument(
      "expected an integer or a \"p/q\" string, got: " + v.dump());
}

RatVec rat_vec_from_json(const json& v, int expect_rank) {
  if (!v.is_array())
    throw std::invalid_argument("expected an array of rationals, got: " + v.dump());
  RatVec out;
  for (const auto& e : v) out.push_back(rat_from_json(e));
  if (expect_rank >= 0 && static_cast<int>(out.size()) != expect_rank)
    throw std::invalid_argument("expected a vector of length " +
                                std::to_string(expect_rank) + ", got " +
                                std::to_string(out.size()));
  return out;
}

RatVec parse_rat_list(const std::string& csv) {
  RatVec out;
  std::string item;
  std::istringstream is(csv);
  while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

namespace {

IntVec int_vec_from_json(const json& v, int expect_rank) {
  RatVec q = rat_vec_from_json(v, expect_rank);
  IntVec out;
  for (const Rat& x : q) {
    if (!is_integer(x))
      throw std::invalid_argument("weight entries must be integers");
    out.push_back(x.get_num());
  }
  return out;
}

}  // namespace

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  ProblemFile pf;
  pf.raw = buf.str();
  json j = json::parse(pf.raw);

  if (j.contains("schema") && j.at("schema") != "torq-problem/1")
    throw std::invalid_argument("unsupported problem schema: " +
                                j.at("schema").dump());
  if (!j.contains("rank")) throw std::invalid_argument("missing \"rank\"");
  pf.ws.rank = j.at("rank").get<int>();
  if (!j.contains("weights")) throw std::invalid_argument("missing \"weights\"");
  for (const auto& w : j.at("weights")) {
    WeightSlot slot;
    if (w.is_array()) {
      slot.mu = int_vec_from_json(w, pf.ws.rank);
    } else if (w.is_object()) {
      slot.mu = int_vec_from_json(w.at("mu"), pf.ws.rank);
      if (w.contains("multiplicity")) slot.multiplicity = w.at("multiplicity").get<long>();
      if (w.contains("label")) slot.label = w.at("label").get<std::string>();
    } else {
      throw std::invalid_argument("weights must be arrays or objects");
    }
    pf.ws.slots.push_back(std::move(slot));
  }
  if (!j.contains("nu")) throw std::invalid_argument("missing \"nu\"");
  pf.ws.nu = rat_vec_from_json(j.at("nu"), pf.ws.rank);
  pf.ws.check();

  if (j.contains("degree")) pf.degree = rat_vec_from_json(j.at("degree"), pf.ws.rank);
  if (j.contains("rho")) pf.rho = rat_from_json(j.at("rho"));
  if (j.contains("area")) pf.area = rat_from_json(j.at("area"));
  if (j.contains("bound")) pf.bound = rat_from_json(j.at("bound"));
  if (j.contains("total_degree"))
    pf.total_degree = rat_vec_from_json(j.at("total_degree"), pf.ws.rank);
  if (j.contains("effective_degrees")) {
    std::vector<RatVec> list;
    for (const auto& e : j.at("effective_degrees"))
      list.push_back(rat_vec_from_json(e, pf.ws.rank));
    pf.effective_degrees = std::move(list);
  }
  return pf;
}

std::string fnv1a_digest(const std::string& bytes) {
  unsigned long long h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

json support_json(const Support& s) {
  json out = json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

json rat_vec_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& q : v) out.push_back(q.get_str());
  return out;
}

json quotient_report_json(const QuotientReport& r) {
  json out;
  out["nonempty"] = r.nonempty;
  if (r.dimension)
    out["dimension"] = *r.dimension;
  else
    out["dimension"] = nullptr;
  out["proper"] = r.proper;
  out["stable_eq_semistable"] = r.stable_eq_ss;
  json fps = json::array();
  for (const auto& fp : r.fixed_points) {
    json f;
    f["support"] = support_json(fp.support);
    f["isotropy"] = fp.isotropy.get_si();
    f["count"] = fp.count;
    fps.push_back(f);
  }
  out["fixed_points"] = fps;
  out["fixed_point_count"] = r.fixed_point_count;
  if (r.weighted_projective) {
    json wp = json::array();
    for (const Int& a : *r.weighted_projective) wp.push_back(a.get_si());
    out["weighted_projective"] = wp;
  }
  return out;
}

json sector_json(const Sector& s) {
  json out;
  out["element"] = rat_vec_json(s.element.representative);
  out["order"] = s.element_order.get_si();
  out["support"] = support_json(s.support);
  out["dimension"] = s.dimension;
  out["divisor_count"] = s.divisor_count;
  return out;
}

json affine_report_json(const WeightSystem& ws, const AffineReport& r) {
  json out;
  out["valid"] = r.valid;
  out["leading_support"] = support_json(r.leading_support);
  json counts = json::array();
  for (size_t j = 0; j < r.monomial_counts.size(); ++j) {
    json c;
    c["weight"] = rat_vec_json(ws.weight(static_cast<int>(j)));
    c["monomials"] = r.monomial_counts[j];
    counts.push_back(c);
  }
  out["monomial_counts"] = counts;
  out["sector"] = rat_vec_json(r.sector.representative);
  out["sector_order"] = r.sector.order.get_si();
  if (r.dimension) out["dimension"] = *r.dimension;
  if (r.stabilizer_order) out["stabilizer_order"] = r.stabilizer_order->get_si();
  return out;
}

json tree_json(const ColoredTree& t, int v) {
  if (v < 0) v = t.root;
  json out;
  switch (t.verts[v].scaling) {
    case Scaling::zero: out["scaling"] = "zero"; break;
    case Scaling::finite: out["scaling"] = "finite"; break;
    case Scaling::infinite: out["scaling"] = "infinite"; break;
  }
  out["degree"] = rat_vec_json(t.verts[v].degree);
  out["markings"] = t.verts[v].marks;
  if (t.verts[v].twist) out["twist"] = *t.verts[v].twist;
  std::vector<std::string> order;
  std::vector<json> kids;
  for (int c : t.verts[v].children) {
    kids.push_back(tree_json(t, c));
    order.push_back(kids.back().dump());
  }
  // canonical child order so reports are reproducible
  std::vector<size_t> idx(kids.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return order[a] < order[b]; });
  json children = json::array();
  for (size_t i : idx) children.push_back(kids[i]);
  out["components"] = children;
  return out;
}

json splitting_json(const Splitting& s) {
  json out;
  json parts = json::array();
  for (size_t i = 0; i < s.parts.size(); ++i) {
    json p;
    p["markings"] = s.parts[i];
    p["degree"] = rat_vec_json(s.part_degrees[i]);
    parts.push_back(p);
  }
  out["parts"] = parts;
  out["principal_degree"] = rat_vec_json(s.principal_degree);
  return out;
}

json report_envelope(const std::string& command, const std::string& path,
                     const std::string& digest, json flags, json result) {
  json out;
  out["schema"] = "torq-report/1";
  out["version"] = "torq 0.1.0";
  out["command"] = command;
  out["input"] = {{"path", path}, {"digest", digest}};
  out["flags"] = std::move(flags);
  out["result"] = std::move(result);
  return out;
}

}  // namespace torq::cli
