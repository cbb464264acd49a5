#include "dbm/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dbm/acceptance.hpp"
#include "dbm/applications.hpp"
#include "dbm/axioms.hpp"
#include "dbm/certificate.hpp"
#include "dbm/errors.hpp"
#include "dbm/four_functions.hpp"
#include "dbm/io.hpp"
#include "dbm/random.hpp"

namespace dbm {

namespace {

struct RunConfig {
  std::string op = "meet";
  std::size_t dim = 1;
  std::string decomp = "std";
  bool single_factor = false;
  long long radius = 2;
  std::optional<long long> z_radius;
  std::size_t max_set = 4;
  std::uint64_t seed = kDefaultAcceptanceSeed;
  std::size_t count = 1;
  std::vector<std::string> in;
  std::string out;
  bool validate_only = false;
  bool exhaustive = false;
  std::string monotonicity = "p2";
  std::string z;
  std::vector<int> criteria;
};

class Emitter {
 public:
  Emitter(std::ostream& out, std::string path) : out_(out), path_(std::move(path)) {}

  void emit(const Json& doc) const {
    if (path_.empty()) {
      out_ << doc.dump(2) << '\n';
    } else {
      write_json_file(path_, doc);
    }
  }

 private:
  std::ostream& out_;
  std::string path_;
};

Json generator_header(const RunConfig& c) {
  return {{"algorithm", Rng::kAlgorithm}, {"seed", c.seed}};
}

void check_radii(const RunConfig& c) {
  if (c.radius < 0) throw InvalidArgument("--radius must be >= 0");
  if (c.z_radius && *c.z_radius < 0) throw InvalidArgument("--z-radius must be >= 0");
}

Decomposition decomposition_for(const RunConfig& c, std::size_t dim) {
  if (c.single_factor) return Decomposition::single(dim, LexOrder{});
  return parse_decomposition(c.decomp, dim);
}

// Random supports hold at most 6 points and never more than the box has.
std::size_t max_support(const RunConfig& c) {
  std::size_t cap = 1;
  for (std::size_t i = 0; i < c.dim && cap < 6; ++i) cap *= static_cast<std::size_t>(2 * c.radius + 1);
  return std::min<std::size_t>(cap, 6);
}

std::vector<FourTuple> random_tuples(const RunConfig& c, const PairingOp& op) {
  Rng rng(c.seed);
  std::vector<FourTuple> out;
  for (std::size_t i = 0; i < c.count; ++i) {
    SparseFn f = random_sparse_fn(rng, c.dim, c.radius, 1, max_support(c));
    SparseFn g = random_sparse_fn(rng, c.dim, c.radius, 1, max_support(c));
    auto [h, k] = tight_hk(f, g, op);
    out.emplace_back(std::move(f), std::move(g), std::move(h), std::move(k));
  }
  return out;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  check_radii(c);
  const PairingOp op = parse_pairing_op(c.op);
  TheoremCheckOptions options;
  options.box_radius = c.radius;
  options.shift_radius = c.radius;
  options.max_set_size = c.max_set;
  if (c.monotonicity == "p2prime") {
    options.monotonicity = MonotonicityCheck::ExclusiveP2Prime;
  } else if (c.monotonicity != "p2") {
    throw InvalidArgument("--monotonicity must be p2 or p2prime");
  }

  std::vector<FourTuple> tuples;
  Json doc{{"command", "verify"}, {"op", to_string(op)}};
  if (c.in.empty()) {
    tuples = random_tuples(c, op);
    doc["generator"] = generator_header(c);
  } else {
    for (const auto& path : c.in) tuples.push_back(four_tuple_from_json(read_json_file(path)));
  }

  bool pass = true;
  Json results = Json::array();
  for (const auto& t : tuples) {
    validate(op, t.dim());
    const TheoremVerdict v = verify_theorem(t, op, decomposition_for(c, t.dim()), options);
    Json r = to_json(v);
    if (c.in.empty()) r["tuple"] = to_json(t);
    results.push_back(std::move(r));
    pass = pass && v.pass();
  }
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  Emitter(out, c.out).emit(doc);
  return pass ? kExitPass : kExitFail;
}

Point parse_point_text(const std::string& text, std::size_t dim) {
  std::vector<Integer> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(parse_integer(item));
  if (coords.size() != dim) {
    throw ParseError("--z: expected " + std::to_string(dim) + " comma-separated integers");
  }
  return Point(std::move(coords));
}

int cmd_exclusivity(const RunConfig& c, std::ostream& out) {
  check_radii(c);
  const PairingOp op = parse_pairing_op(c.op);
  validate(op, c.dim);
  Json doc{{"command", "exclusivity"}, {"op", to_string(op)}, {"dimension", c.dim}};

  // A single instance from a point-set file.
  if (!c.in.empty()) {
    if (c.in.size() != 1) throw InvalidArgument("exclusivity takes one --in point-set file");
    std::vector<Point> set;
    for (const auto& p : point_set_from_json(read_json_file(c.in.front()))) {
      if (!p.is_integral()) throw ParseError("points: exclusivity needs integer points");
      set.push_back(p.to_point());
    }
    if (!set.empty() && set.front().dim() != c.dim) throw DimensionMismatch("point set does not match --dim");
    const Point z = c.z.empty() ? Point::zero(c.dim) : parse_point_text(c.z, c.dim);
    const auto report = check_exclusive(as_binary_op(op, c.dim), set, z);
    doc["report"] = to_json(report);
    doc["pass"] = report.verdict == ExclusivityVerdict::ExclusiveOnInstance;
    Emitter(out, c.out).emit(doc);
    return doc["pass"].get<bool>() ? kExitPass : kExitFail;
  }

  const Decomposition d = decomposition_for(c, c.dim);
  doc["decomposition"] = to_string(d);
  bool pass = true;
  if (d.size() == 1) {
    const auto r = exclusivity_search(as_binary_op(op, c.dim), c.radius, c.max_set,
                                      c.z_radius.value_or(c.radius), SearchMode::AllViolations);
    doc["search"] = to_json(r);
    pass = r.pass;
  } else {
    const auto r = check_P2prime(op, d, c.radius, c.max_set, c.z_radius, SearchMode::AllViolations);
    doc["p2prime"] = to_json(r);
    pass = r.pass;
  }
  doc["pass"] = pass;
  Emitter(out, c.out).emit(doc);
  return pass ? kExitPass : kExitFail;
}

std::string certificate_name(std::size_t tuple, std::size_t index) {
  std::ostringstream name;
  name << "certificate-" << std::setw(3) << std::setfill('0') << tuple << "-" << std::setw(4) << index
       << ".json";
  return name.str();
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  if (c.in.empty()) throw InvalidArgument("--validate-only needs at least one --in certificate file");
  bool pass = true;
  Json results = Json::array();
  for (const auto& path : c.in) {
    const CertificateFile file = certificate_file_from_json(read_json_file(path));
    validate(file.op, file.dim);
    const auto v = validate_certificate(file.certificate, as_binary_op(file.op, file.dim), file.fz, file.hz);
    Json r = to_json(v);
    r["file"] = path;
    results.push_back(std::move(r));
    pass = pass && v.valid;
  }
  const Json doc{{"command", "certify"}, {"validate_only", true}, {"results", results}, {"pass", pass}};
  out << doc.dump(2) << '\n';
  return pass ? kExitPass : kExitFail;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  if (c.validate_only) return cmd_validate(c, out);
  check_radii(c);
  const PairingOp op = parse_pairing_op(c.op);
  std::vector<FourTuple> tuples;
  Json doc{{"command", "certify"}, {"op", to_string(op)}};
  if (c.in.empty()) {
    tuples = random_tuples(c, op);
    doc["generator"] = generator_header(c);
  } else {
    for (const auto& path : c.in) tuples.push_back(four_tuple_from_json(read_json_file(path)));
  }
  const std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
  std::filesystem::create_directories(dir);

  bool pass = true;
  Json results = Json::array();
  for (std::size_t ti = 0; ti < tuples.size(); ++ti) {
    const FourTuple& t = tuples[ti];
    validate(op, t.dim());
    Json r;
    try {
      const AggregateReport agg = sum_inequality_to_conclusion(t, op);
      Json files = Json::array();
      for (std::size_t i = 0; i < agg.certificates.size(); ++i) {
        const Certificate& cert = agg.certificates[i];
        const CertificateFile file{op, t.dim(), cert, fz(t.f, t.g, cert.z), fz(t.h, t.k, cert.z)};
        const auto path = dir / certificate_name(ti, i);
        write_json_file(path, to_json(file));
        files.push_back({{"file", path.string()}, {"z", to_json(cert.z)}, {"depth", cert.depth()},
                         {"validation", to_json(agg.validations[i])}});
      }
      r = {{"certificates", files},
           {"all_valid", agg.all_valid},
           {"lhs_total", to_json(agg.lhs_total)},
           {"rhs_certified", to_json(agg.rhs_certified)},
           {"rhs_full", to_json(agg.rhs_full)},
           {"lhs_matches_product", agg.lhs_matches_product},
           {"holds", agg.holds},
           {"conclusion", to_json(agg.conclusion)},
           {"agrees", agg.agrees}};
      const bool ok = agg.all_valid && agg.agrees && agg.holds && agg.lhs_matches_product;
      r["pass"] = ok;
      pass = pass && ok;
    } catch (const NotExclusive& e) {
      r = {{"pass", false}, {"error", "not exclusive"}, {"report", to_json(e.report())}};
      pass = false;
    } catch (const ChainedInequalityFailure& e) {
      r = {{"pass", false},
           {"error", "hypothesis fails"},
           {"x", to_json(e.x())},
           {"y", to_json(e.y())},
           {"lhs", to_json(e.lhs())},
           {"rhs", to_json(e.rhs())}};
      pass = false;
    } catch (const CertificationError& e) {
      r = {{"pass", false}, {"error", e.what()}};
      pass = false;
    }
    results.push_back(std::move(r));
  }
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  out << doc.dump(2) << '\n';
  return pass ? kExitPass : kExitFail;
}

int cmd_midpoints(const RunConfig& c, std::ostream& out) {
  Json doc{{"command", "midpoints"}};
  bool pass = true;
  if (c.exhaustive) {
    const auto r = sweep_hypercube(c.dim);
    doc["sweep"] = to_json(r);
    pass = r.pass();
  } else {
    if (c.in.size() != 2) throw InvalidArgument("midpoints needs two --in files (A and B) or --exhaustive");
    const auto a = hypercube_set_from_json(read_json_file(c.in[0]));
    const auto b = hypercube_set_from_json(read_json_file(c.in[1]));
    const auto r = check_ov(a, b);
    doc["report"] = to_json(r);
    pass = r.holds();
  }
  doc["pass"] = pass;
  Emitter(out, c.out).emit(doc);
  return pass ? kExitPass : kExitFail;
}

int cmd_latticebm(const RunConfig& c, std::ostream& out) {
  check_radii(c);
  Json doc{{"command", "latticebm"}};
  bool pass = true;
  Json results = Json::array();
  auto record = [&](const LatticeChainReport& r) {
    results.push_back(to_json(r));
    pass = pass && r.holds();
  };
  if (c.in.empty()) {
    doc["generator"] = generator_header(c);
    Rng rng(c.seed);
    for (std::size_t i = 0; i < c.count; ++i) {
      auto draw = [&] {
        std::vector<RationalPoint> set;
        for (const auto& p : random_subset(rng, c.dim, c.radius, static_cast<std::size_t>(rng.uniform(1, static_cast<long long>(max_support(c)))))) {
          set.emplace_back(p);
        }
        return set;
      };
      const auto k = draw();
      const auto l = draw();
      record(check_inz(k, l));
    }
  } else {
    if (c.in.size() != 2) throw InvalidArgument("latticebm needs two --in files (K and L)");
    record(check_inz(point_set_from_json(read_json_file(c.in[0])),
                     point_set_from_json(read_json_file(c.in[1]))));
  }
  doc["results"] = std::move(results);
  doc["pass"] = pass;
  Emitter(out, c.out).emit(doc);
  return pass ? kExitPass : kExitFail;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  std::vector<CriterionResult> results;
  auto report = [&](const CriterionResult& r) { out << format_result(r) << std::endl; };
  if (c.criteria.empty()) {
    results = run_acceptance(c.seed, report);
  } else {
    for (int id : c.criteria) {
      results.push_back(run_criterion(id, c.seed));
      report(results.back());
    }
  }
  const auto passed = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  out << passed << "/" << results.size() << " criteria passed (seed " << c.seed << ", " << Rng::kAlgorithm
      << ")" << std::endl;
  return passed == static_cast<long>(results.size()) ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact checks of four functions inequalities and discrete Brunn-Minkowski bounds", "dbm"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--op", c.op, "Pairing operation (meet, join, floormix:p/q, ceilmix:p/q, paritymix, "
                                  "ordermin:<ord>, ordermax:<ord>, perfactor:[d:op|...])");
    sub->add_option("--dim", c.dim, "Dimension n of Z^n")->check(CLI::Range(1, 64));
    sub->add_option("--radius", c.radius, "Box radius for bounded checks and generation");
    sub->add_option("--seed", c.seed, "Seed for generated instances");
    sub->add_option("--count", c.count, "Number of generated instances");
    sub->add_option("--in", c.in, "Input file (repeatable)");
    sub->add_option("--out", c.out, "Output file (certify: output directory)");
  };

  auto* verify = app.add_subcommand("verify", "Check axioms, hypothesis and conclusion for four-tuples");
  add_common(verify);
  verify->add_option("--decomp", c.decomp, "Decomposition: std, single, single:<ord> or d:ord|d:ord");
  verify->add_flag("--single-factor", c.single_factor, "Use Z^n as one lex-ordered factor");
  verify->add_option("--max-set", c.max_set, "Largest set size for the exclusivity check");
  verify->add_option("--monotonicity", c.monotonicity, "p2 (Knothe) or p2prime (exclusive slices)");

  auto* excl = app.add_subcommand("exclusivity", "Bounded search for exclusivity violations");
  add_common(excl);
  excl->add_option("--decomp", c.decomp, "Decomposition: std, single, single:<ord> or d:ord|d:ord");
  excl->add_flag("--single-factor", c.single_factor, "Use Z^n as one lex-ordered factor");
  excl->add_option("--z-radius", c.z_radius, "Radius of the z box (default: --radius)");
  excl->add_option("--max-set", c.max_set, "Largest set size");
  excl->add_option("--z", c.z, "z for a single --in instance, as comma-separated integers");

  auto* certify = app.add_subcommand("certify", "Build and validate sum-inequality certificates");
  add_common(certify);
  certify->add_flag("--validate-only", c.validate_only, "Validate certificate files given by --in");

  auto* midpoints = app.add_subcommand("midpoints", "Hypercube midpoint inequality");
  add_common(midpoints);
  midpoints->add_flag("--exhaustive", c.exhaustive, "Check all subset pairs of {0,1}^dim (dim <= 3)");

  auto* lattice = app.add_subcommand("latticebm", "Lattice point Brunn-Minkowski chain");
  add_common(lattice);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--seed", c.seed, "Seed");
  selftest->add_option("--criterion", c.criteria, "Run only these criteria (repeatable)")
      ->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(c, out);
    if (excl->parsed()) return cmd_exclusivity(c, out);
    if (certify->parsed()) return cmd_certify(c, out);
    if (midpoints->parsed()) return cmd_midpoints(c, out);
    if (lattice->parsed()) return cmd_latticebm(c, out);
    if (selftest->parsed()) return cmd_selftest(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace dbm
