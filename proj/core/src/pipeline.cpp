#include "k3fib/pipeline.hpp"

#include <future>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "k3fib/errors.hpp"
#include "k3fib/graded.hpp"

namespace k3fib {

namespace {

using nlohmann::json;

int tri(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

// Runs fn over the items on the shared thread pool contract: independent
// tasks, results merged back in input order.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, const F& fn)
    -> std::vector<decltype(fn(std::declval<const T&>()))> {
  using R = decltype(fn(std::declval<const T&>()));
  std::vector<std::future<R>> futures;
  futures.reserve(items.size());
  for (const T& item : items) {
    futures.push_back(
        std::async(std::launch::async, [&fn, &item] { return fn(item); }));
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

PointReport point_report(const RAlgebra& r,
                         const std::optional<Rational>& loc,
                         const PipelineConfig& config) {
  PointReport report;
  report.location = loc;
  if (!loc) {
    report.fibre_type = "generic";
  } else {
    report.fibre_type =
        r.base.d6.eval(*loc).is_zero() ? "unigonal" : "hyperelliptic";
  }

  report.ranks_match = true;
  for (int n = 1; n <= config.max_degree; ++n) {
    const ParitySplit split = parity_split(r, n, loc);
    RankRow row;
    row.degree = n;
    row.plus = split.plus;
    row.minus = split.minus;
    row.expected_plus = expected_rank_plus(n);
    row.expected_minus = expected_rank_minus(n);
    row.match =
        row.plus == row.expected_plus && row.minus == row.expected_minus;
    report.ranks_match = report.ranks_match && row.match;
    report.ranks.push_back(row);
  }

  report.dimensions_match = true;
  for (int n = 0; n <= config.max_degree; ++n) {
    const int dim = fibre_dimension(r, n, loc);
    report.dimensions.push_back(dim);
    const int expected = n == 0 ? 1 : n * n + 2;
    report.dimensions_match = report.dimensions_match && dim == expected;
  }

  report.sigma_match = true;
  if (loc) {
    WPoly relation;
    if (!r.base.relations.empty()) {
      relation = r.base.relations.front().eval_t(*loc);
      if (relation.is_zero())
        throw Error(Errc::degenerate_fibre,
                    "relation vanishes identically at t = " + loc->str());
    }
    // The degree-n multiplication map out of the x-monomials is injective
    // away from the special locus.  On a special fibre the relation is a
    // pure x-quadric, so the multiples of that quadric (one per degree-(n-2)
    // monomial) drop out of the image: the rank falls by exactly n(n-1)/2.
    const bool special = r.base.d6.eval(*loc).is_zero();
    const int top = std::min(5, config.max_degree);
    for (int n = 1; n <= top; ++n) {
      const GradedBasis basis = graded_basis(r.base, n, loc);
      const std::vector<Monomial> cols = weighted_monomials(n, false);
      QMatrix mat(basis.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        WPoly image = WPoly::term(cols[c], TPoly(1));
        if (!relation.is_zero()) image = reduce_by_relation(image, relation);
        const auto coords = rational_coordinates(image, basis.monomials);
        for (std::size_t i = 0; i < coords.size(); ++i)
          mat.at(i, c) = coords[i];
      }
      const int rank = static_cast<int>(mat.rank());
      const int expected =
          static_cast<int>(cols.size()) - (special ? n * (n - 1) / 2 : 0);
      report.sigma_ranks.push_back(rank);
      report.sigma_match = report.sigma_match && rank == expected;
    }
  }
  return report;
}

std::string location_name(const std::optional<Rational>& loc) {
  return loc ? "t = " + loc->str() : "generic fibre";
}

}  // namespace

int expected_rank_plus(int n) { return n % 2 == 0 ? tri(n) : tri(n - 3); }
int expected_rank_minus(int n) { return n % 2 == 0 ? tri(n - 3) : tri(n); }

PipelineResult run_pipeline(const FiveTuple& tuple,
                            const PipelineConfig& config) {
  PipelineResult res;
  res.input = tuple;
  const RAlgebra r = build_r(tuple);
  res.base = r.base;
  res.tau = r.tau;
  res.g6 = r.g6;

  std::vector<std::optional<Rational>> locations{std::nullopt};
  for (const Rational& s : config.samples) locations.emplace_back(s);
  for (const TauPoint& p : r.tau.points) {
    bool sampled = false;
    for (const Rational& s : config.samples)
      sampled = sampled || s == p.location;
    if (!sampled) locations.emplace_back(p.location);
  }

  res.points = parallel_map(
      locations, [&](const std::optional<Rational>& loc) {
        return point_report(r, loc, config);
      });

  res.rank_table_match = true;
  res.dimensions_match = true;
  res.sigma_match = true;
  for (const PointReport& p : res.points) {
    res.rank_table_match = res.rank_table_match && p.ranks_match;
    res.dimensions_match = res.dimensions_match && p.dimensions_match;
    res.sigma_match = res.sigma_match && p.sigma_match;
    if (!p.ranks_match) {
      for (const RankRow& row : p.ranks) {
        if (row.match) continue;
        res.invariant_violations.push_back(
            "eigenspace ranks at " + location_name(p.location) + " degree " +
            std::to_string(row.degree) + ": got " + std::to_string(row.plus) +
            "+/" + std::to_string(row.minus) + "-, expected " +
            std::to_string(row.expected_plus) + "+/" +
            std::to_string(row.expected_minus) + "-");
      }
    }
    if (!p.dimensions_match) {
      res.invariant_violations.push_back(
          "graded dimensions at " + location_name(p.location) +
          " deviate from n^2 + 2");
    }
    if (!p.sigma_match) {
      res.invariant_violations.push_back(
          "comparison map drops rank at " + location_name(p.location));
    }
  }

  if (!r.base.has_y) {
    res.torsion_skipped = true;
    res.torsion_match = true;
  } else {
    res.torsion = parallel_map(config.torsion_degrees, [&](const int n) {
      return torsion_decomposition(r, n);
    });
    if (config.inject_torsion_error && !res.torsion.empty()) {
      res.torsion.front().match = false;
      res.invariant_violations.push_back(
          "torsion expectation corrupted by the self-check hook in degree " +
          std::to_string(res.torsion.front().degree_n));
    }
    res.torsion_match = true;
    for (const TorsionReport& report : res.torsion) {
      res.torsion_match = res.torsion_match && report.match;
      if (!report.match) {
        res.invariant_violations.push_back(
            "torsion decomposition mismatch in degree " +
            std::to_string(report.degree_n));
      }
    }
  }

  res.branch = branch_data(r);
  res.admissibility = check_admissibility(r, config);

  if (res.admissibility.verdict != "admissible") {
    res.checks_failed.push_back(
        "condition_i: " + check_status_name(res.admissibility.condition_i));
    res.checks_failed.push_back(
        "condition_ii: " +
        condition_ii_status_name(res.admissibility.condition_ii));
    for (const std::string& note : res.admissibility.notes)
      res.checks_failed.push_back(note);
    res.checks_failed.push_back("verdict: " + res.admissibility.verdict);
  }

  if (!res.invariant_violations.empty()) {
    res.exit_code = 3;
  } else if (!res.checks_failed.empty()) {
    res.exit_code = 1;
  } else {
    res.exit_code = 0;
  }
  return res;
}

namespace {

json rank_row_json(const RankRow& row) {
  json j;
  j["degree"] = row.degree;
  j["plus"] = row.plus;
  j["minus"] = row.minus;
  j["expected_plus"] = row.expected_plus;
  j["expected_minus"] = row.expected_minus;
  j["match"] = row.match;
  return j;
}

json point_json(const PointReport& p) {
  json j;
  j["location"] = p.location ? p.location->str() : "generic";
  j["type"] = p.fibre_type;
  j["ranks"] = json::array();
  for (const RankRow& row : p.ranks) j["ranks"].push_back(rank_row_json(row));
  j["ranks_match"] = p.ranks_match;
  j["dimensions"] = p.dimensions;
  j["dimensions_match"] = p.dimensions_match;
  j["sigma_ranks"] = p.sigma_ranks;
  j["sigma_match"] = p.sigma_match;
  return j;
}

json branch_point_json(const BranchPoint& bp) {
  json j;
  j["location"] = bp.location.str();
  j["multiplicity"] = bp.multiplicity;
  j["cone_value"] = bp.cone_value.str();
  j["cone_ok"] = bp.cone_ok;
  return j;
}

json torsion_json(const TorsionReport& report) {
  json j;
  j["degree"] = report.degree_n;
  json factors = json::array();
  for (const TPoly& d : report.factors) factors.push_back(d.str());
  j["factors"] = factors;
  j["per_point"] = json::array();
  for (const PointTorsion& pt : report.per_point) {
    json p;
    p["location"] = pt.location.str();
    p["multiplicity"] = pt.multiplicity;
    json fs = json::array();
    for (const std::string& s : torsion_factor_strings(pt)) fs.push_back(s);
    p["factors"] = fs;
    json es = json::array();
    for (const int o : pt.expected)
      es.push_back(torsion_factor_string(pt.location, o));
    p["expected"] = es;
    p["match"] = pt.match;
    j["per_point"].push_back(p);
  }
  j["total_degree"] = report.total_degree;
  j["expected_total_degree"] = report.expected_total_degree;
  j["match"] = report.match;
  return j;
}

json admissibility_json(const AdmissibilityReport& a) {
  json j;
  j["condition_i"] = check_status_name(a.condition_i);
  j["condition_ii"] = condition_ii_status_name(a.condition_ii);
  j["cone_points"] = json::array();
  for (const BranchPoint& bp : a.cone_points)
    j["cone_points"].push_back(branch_point_json(bp));
  j["sextics"] = json::array();
  for (const SexticCheck& s : a.sextics) {
    json e;
    e["location"] = s.location.str();
    e["nonzero"] = s.nonzero;
    e["reduced"] = s.reduced;
    j["sextics"].push_back(e);
  }
  j["singularity_types"] = json::array();
  for (const SingularityCheck& s : a.singularities) {
    json e;
    e["location"] = s.location.str();
    e["r"] = s.multiplicity;
    e["type"] = "A_" + std::to_string(s.multiplicity);
    e["model_available"] = s.model_available;
    e["isolated"] = s.isolated;
    e["milnor_number"] = s.milnor;
    e["agrees"] = s.agrees;
    j["singularity_types"].push_back(e);
  }
  j["notes"] = a.notes;
  j["verdict"] = a.verdict;
  return j;
}

std::string json_report(const PipelineResult& res) {
  json j;
  j["schema_version"] = "1";

  json input;
  input["name"] = res.input.name;
  input["e3_twist"] = res.input.e3_twist;
  input["beta"] = res.input.beta.str();
  j["input"] = input;

  json pres;
  pres["generators"] = json::array();
  for (const auto& [name, weight] : res.base.generators)
    pres["generators"].push_back(json::array({name, weight}));
  if (res.base.relations.empty()) {
    pres["relation"] = nullptr;
  } else {
    pres["relation"] = res.base.relations.front().str();
  }
  pres["d6"] = res.base.d6.str();
  pres["branch_sextic"] = res.g6.str();
  j["presentation"] = pres;

  json tau;
  tau["degree"] = res.tau.degree;
  tau["split"] = res.tau.split;
  tau["points"] = json::array();
  for (const TauPoint& p : res.tau.points) {
    json e;
    e["location"] = p.location.str();
    e["multiplicity"] = p.multiplicity;
    tau["points"].push_back(e);
  }
  j["tau"] = tau;

  j["fibres"] = json::array();
  for (const PointReport& p : res.points) j["fibres"].push_back(point_json(p));
  j["paper_rank_table_match"] = res.rank_table_match;
  j["dimensions_match"] = res.dimensions_match;
  j["sigma_match"] = res.sigma_match;

  json torsion;
  torsion["skipped"] = res.torsion_skipped;
  torsion["reports"] = json::array();
  for (const TorsionReport& t : res.torsion)
    torsion["reports"].push_back(torsion_json(t));
  torsion["match"] = res.torsion_match;
  j["torsion"] = torsion;

  json branch;
  branch["points"] = json::array();
  for (const BranchPoint& bp : res.branch.points)
    branch["points"].push_back(branch_point_json(bp));
  branch["disjoint"] = res.branch.disjoint;
  branch["complete"] = res.branch.complete;
  j["branch"] = branch;

  j["admissibility"] = admissibility_json(res.admissibility);
  j["invariant_violations"] = res.invariant_violations;
  j["checks_failed"] = res.checks_failed;
  j["verdict"] = res.admissibility.verdict;
  j["exit_code"] = res.exit_code;
  return j.dump(2) + "\n";
}

const char* ok(bool b) { return b ? "ok" : "MISMATCH"; }

std::string text_report(const PipelineResult& res) {
  std::ostringstream out;
  out << "k3fib check report\n";
  out << "==================\n";
  out << "input: " << (res.input.name.empty() ? "(unnamed)" : res.input.name)
      << "\n";
  out << "e3 twist: " << res.input.e3_twist << "\n";
  if (res.base.relations.empty()) {
    out << "relation: none (the even part is free; y = "
        << res.base.quadric.str() << ")\n";
  } else {
    out << "relation: " << res.base.relations.front().str() << "\n";
  }
  out << "d6: " << res.base.d6.str() << "\n";
  out << "special locus: degree " << res.tau.degree
      << (res.tau.split ? "" : " (irrational part present)");
  if (res.tau.points.empty()) {
    out << ", no rational points\n";
  } else {
    out << ", points:";
    for (const TauPoint& p : res.tau.points)
      out << " t = " << p.location.str() << " (x" << p.multiplicity << ")";
    out << "\n";
  }
  out << "branch sextic: " << res.g6.str() << "\n";

  out << "\nfibre checks\n------------\n";
  for (const PointReport& p : res.points) {
    out << location_name(p.location) << " [" << p.fibre_type << "]\n";
    out << "  eigenspace ranks (degrees 1.."
        << res.points.front().ranks.size() << "): " << ok(p.ranks_match)
        << "\n";
    if (!p.ranks_match) {
      for (const RankRow& row : p.ranks) {
        if (row.match) continue;
        out << "    degree " << row.degree << ": got " << row.plus << "+/"
            << row.minus << "-, expected " << row.expected_plus << "+/"
            << row.expected_minus << "-\n";
      }
    }
    out << "  dimensions:";
    for (const int d : p.dimensions) out << " " << d;
    out << "  " << ok(p.dimensions_match) << "\n";
    if (!p.sigma_ranks.empty()) {
      out << "  comparison map ranks:";
      for (const int k : p.sigma_ranks) out << " " << k;
      out << "  " << ok(p.sigma_match) << "\n";
    }
  }

  out << "\ntorsion\n-------\n";
  if (res.torsion_skipped) {
    out << "no special points: the even part is a free module\n";
  } else {
    for (const TorsionReport& t : res.torsion) {
      out << "degree " << t.degree_n << ": ";
      if (t.factors.empty()) {
        out << "no torsion";
      } else {
        out << "factors";
        for (const TPoly& d : t.factors) out << " " << d.str() << " |";
      }
      out << " total degree " << t.total_degree << " (expected "
          << t.expected_total_degree << ") " << ok(t.match) << "\n";
      for (const PointTorsion& pt : t.per_point) {
        out << "  at t = " << pt.location.str() << ":";
        const auto strings = torsion_factor_strings(pt);
        if (strings.empty()) out << " none";
        for (const std::string& s : strings) out << " " << s;
        out << "  " << ok(pt.match) << "\n";
      }
    }
  }

  out << "\nbranch locus\n------------\n";
  if (res.branch.points.empty()) {
    out << "no special points\n";
  } else {
    for (const BranchPoint& bp : res.branch.points) {
      out << "t = " << bp.location.str() << ": cone value "
          << bp.cone_value.str() << "  "
          << (bp.cone_ok ? "ok" : "VANISHES") << "\n";
    }
    out << "disjoint from cone points: "
        << (res.branch.disjoint ? "yes" : "NO") << "\n";
  }

  out << "\nadmissibility\n-------------\n";
  out << "condition_i: " << check_status_name(res.admissibility.condition_i)
      << "\n";
  out << "condition_ii: "
      << condition_ii_status_name(res.admissibility.condition_ii) << "\n";
  for (const SingularityCheck& s : res.admissibility.singularities) {
    out << "singularity at t = " << s.location.str() << " (claimed A_"
        << s.multiplicity << "): ";
    if (!s.model_available) {
      out << "no transversal slice";
    } else if (!s.isolated) {
      out << "did not stabilize";
    } else {
      out << "milnor number " << s.milnor << " (predicted " << s.expected
          << ") " << (s.agrees ? "ok" : "differs");
    }
    out << "\n";
  }
  for (const std::string& note : res.admissibility.notes)
    out << "note: " << note << "\n";
  out << "verdict: " << res.admissibility.verdict << "\n";

  if (!res.invariant_violations.empty()) {
    out << "\ninvariant violations\n--------------------\n";
    for (const std::string& v : res.invariant_violations) out << v << "\n";
  }
  out << "\nexit: " << res.exit_code << "\n";
  return out.str();
}

}  // namespace

std::string emit_report(const PipelineResult& result,
                        PipelineConfig::Format format) {
  return format == PipelineConfig::Format::json ? json_report(result)
                                                : text_report(result);
}

}  // namespace k3fib
