#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "dbm/applications.hpp"
#include "dbm/axioms.hpp"
#include "dbm/certificate.hpp"
#include "dbm/four_functions.hpp"

namespace dbm {

using Json = nlohmann::json;

// All readers throw ParseError whose message names the offending field, e.g.
// "f.entries[2].value: negative value -1/2".

/// Throws ParseError for unreadable files and malformed JSON (with line and
/// column from the parser).
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed, newline terminated. Throws Error if the file cannot be
/// written.
void write_json_file(const std::filesystem::path& path, const Json& doc);

// Rationals are "p/q" strings; integers in points are JSON numbers when they
// fit in 64 bits and decimal strings otherwise.
Json to_json(const Integer& z);
Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const RationalPoint& p);
Json to_json(const std::vector<Point>& points);

Integer integer_from_json(const Json& j, const std::string& field);
Rational rational_from_json(const Json& j, const std::string& field);
Point point_from_json(const Json& j, const std::string& field, std::size_t dim);
std::vector<Point> points_from_json(const Json& j, const std::string& field, std::size_t dim);

/// {"dimension": n, "entries": [{"point": [...], "value": "p/q"}, ...]}.
/// Values must be positive; duplicate points are rejected.
Json to_json(const SparseFn& f);
SparseFn sparse_fn_from_json(const Json& j, const std::string& field);

/// {"dimension": n, "f": ..., "g": ..., "h": ..., "k": ...}; each function
/// may omit its own "dimension".
Json to_json(const FourTuple& t);
FourTuple four_tuple_from_json(const Json& j);

/// {"dimension": n, "points": [["p/q", ...], ...]}. JSON integers are also
/// accepted as coordinates.
Json point_set_to_json(std::size_t dim, const std::vector<RationalPoint>& points);
std::vector<RationalPoint> point_set_from_json(const Json& j);
/// As above, then requires integer coordinates in {0,1}.
std::vector<Point> hypercube_set_from_json(const Json& j);

/// A certificate together with everything needed to validate it:
/// {"op", "dimension", "z", "fz", "hz", "root": node}. Nodes carry "set",
/// "z", "case", "pair", "values", "exclusivity", "image", "sum_f", "sum_h"
/// and "child" (null at the last node).
struct CertificateFile {
  PairingOp op;
  std::size_t dim = 1;
  Certificate certificate;
  SparseFn fz;
  SparseFn hz;
};

Json to_json(const CertificateFile& file);
CertificateFile certificate_file_from_json(const Json& j);

// Reports (write only).
Json to_json(const AxiomReport& r);
Json to_json(const PairDiagnostic& d);
Json to_json(const ExclusivityReport& r);
Json to_json(const ExclusivitySearchResult& r);
Json to_json(const P2PrimeReport& r);
Json to_json(const HypothesisViolation& v);
Json to_json(const ConclusionReport& r);
Json to_json(const TheoremVerdict& v);
Json to_json(const ValidationResult& v);
Json to_json(const MidpointReport& r);
Json to_json(const HypercubeSweepReport& r);
Json to_json(const LatticeChainReport& r);

}  // namespace dbm
