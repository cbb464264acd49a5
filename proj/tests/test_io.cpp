#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>

#include "dbm/errors.hpp"
#include "dbm/io.hpp"
#include "dbm/random.hpp"

using namespace dbm;

namespace {

std::string parse_error_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, Scalars) {
  EXPECT_EQ(to_json(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(rational_from_json(Json("6/8"), "v"), Rational(3, 4));
  EXPECT_EQ(rational_from_json(Json(5), "v"), 5);
  EXPECT_THROW(rational_from_json(Json(0.5), "v"), ParseError);
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_EQ(integer_from_json(Json("123456789012345678901234567890"), "z"), Integer("123456789012345678901234567890"));
  EXPECT_EQ(point_from_json(Json::array({1, -2}), "p", 2), (Point{1, -2}));
  EXPECT_THROW(point_from_json(Json::array({1}), "p", 2), ParseError);
}

TEST(Io, SparseFnRoundTrip) {
  Rng rng(1);
  const SparseFn f = random_sparse_fn(rng, 2, 3, 1, 8);
  EXPECT_EQ(sparse_fn_from_json(to_json(f), "f"), f);
}

TEST(Io, SparseFnErrorsNameTheField) {
  const Json negative = Json::parse(R"({"dimension": 1, "entries": [{"point": [0], "value": "1"},
                                       {"point": [1], "value": "-1/2"}]})");
  EXPECT_NE(parse_error_message([&] { sparse_fn_from_json(negative, "f"); }).find("f.entries[1].value"),
            std::string::npos);
  const Json dup = Json::parse(R"({"dimension": 1, "entries": [{"point": [0], "value": "1"},
                                  {"point": [0], "value": "2"}]})");
  EXPECT_THROW(sparse_fn_from_json(dup, "f"), ParseError);
  const Json zero = Json::parse(R"({"dimension": 1, "entries": [{"point": [0], "value": "0"}]})");
  EXPECT_THROW(sparse_fn_from_json(zero, "f"), ParseError);
  const Json missing = Json::parse(R"({"dimension": 1})");
  EXPECT_NE(parse_error_message([&] { sparse_fn_from_json(missing, "g"); }).find("g.entries"), std::string::npos);
  const Json bad_point = Json::parse(R"({"dimension": 2, "entries": [{"point": [0, "x"], "value": "1"}]})");
  EXPECT_NE(parse_error_message([&] { sparse_fn_from_json(bad_point, "h"); }).find("h.entries[0].point[1]"),
            std::string::npos);
}

TEST(Io, FourTuple) {
  Rng rng(2);
  const SparseFn f = random_sparse_fn(rng, 1, 3, 1, 4);
  const SparseFn g = random_sparse_fn(rng, 1, 3, 1, 4);
  auto [h, k] = tight_hk(f, g, PairingOp::meet());
  const FourTuple t(f, g, h, k);
  const FourTuple back = four_tuple_from_json(to_json(t));
  EXPECT_EQ(back.f, t.f);
  EXPECT_EQ(back.k, t.k);
  Json j = to_json(t);
  j["k"]["dimension"] = 2;
  EXPECT_THROW(four_tuple_from_json(j), ParseError);
  j.erase("g");
  EXPECT_THROW(four_tuple_from_json(j), ParseError);
}

TEST(Io, PointSets) {
  const Json j = Json::parse(R"({"dimension": 2, "points": [["1/2", "3"], [0, 1]]})");
  const auto pts = point_set_from_json(j);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0], RationalPoint({Rational(1, 2), Rational(3)}));
  EXPECT_EQ(point_set_from_json(point_set_to_json(2, pts)), pts);
  EXPECT_THROW(hypercube_set_from_json(j), ParseError);
  EXPECT_EQ(hypercube_set_from_json(Json::parse(R"({"dimension": 2, "points": [["0","1"]]})")),
            std::vector<Point>{(Point{0, 1})});
  EXPECT_THROW(hypercube_set_from_json(Json::parse(R"({"dimension": 2, "points": [["2","0"]]})")), ParseError);
  EXPECT_THROW(point_set_from_json(Json::parse(R"({"dimension": 2, "points": [["1"]]})")), ParseError);
}

TEST(Io, CertificateRoundTrip) {
  Rng rng(4);
  const PairingOp op = PairingOp::floor_mix(Rational(1, 2));
  const SparseFn f = random_sparse_fn(rng, 1, 3, 3, 5);
  const SparseFn g = random_sparse_fn(rng, 1, 3, 3, 5);
  auto [h, k] = tight_hk(f, g, op);
  const FourTuple t(f, g, h, k);
  const auto agg = sum_inequality_to_conclusion(t, op);
  const auto bop = as_binary_op(op, 1);
  for (const auto& cert : agg.certificates) {
    const CertificateFile file{op, 1, cert, fz(f, g, cert.z), fz(h, k, cert.z)};
    const Json j = to_json(file);
    EXPECT_TRUE(j["root"].contains("set"));
    EXPECT_TRUE(j["root"].contains("child"));
    const CertificateFile back = certificate_file_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.certificate.nodes.size(), cert.nodes.size());
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(validate_certificate(back.certificate, bop, back.fz, back.hz).valid);
  }
}

TEST(Io, CertificateErrors) {
  Json j = Json::parse(R"({"op": "meet", "dimension": 1, "z": [0],
    "fz": {"dimension": 1, "entries": []}, "hz": {"dimension": 1, "entries": []},
    "root": {"set": [], "z": [0], "case": "Base7", "pair": null,
             "values": {"f_x": "0", "f_y": "0", "h_xy": "0", "h_yx": "0"},
             "image": [], "sum_f": "0", "sum_h": "0", "child": null}})");
  EXPECT_NE(parse_error_message([&] { certificate_file_from_json(j); }).find("root.case"), std::string::npos);
  j["root"]["case"] = "Base0";
  EXPECT_NO_THROW(certificate_file_from_json(j));
  j["op"] = "floormix:2";
  EXPECT_NE(parse_error_message([&] { certificate_file_from_json(j); }).find("op"), std::string::npos);
}

TEST(Io, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "dbm_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "doc.json";
  write_json_file(path, Json{{"a", 1}});
  EXPECT_EQ(read_json_file(path)["a"], 1);
  {
    std::ofstream out(path);
    out << "{\n  \"a\": 1,\n  oops\n}";
  }
  const std::string msg = parse_error_message([&] { read_json_file(path); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_THROW(read_json_file(dir / "missing.json"), ParseError);
  std::filesystem::remove_all(dir);
}

TEST(Io, ReportsSerialize) {
  const auto join = as_binary_op(PairingOp::join(), 2);
  const auto r = check_exclusive(join, {Point{-1, -1}, Point{-1, 1}, Point{1, -1}, Point{1, 1}}, Point{0, 0});
  const Json j = to_json(r);
  EXPECT_EQ(j["verdict"], "Violation");
  EXPECT_EQ(j["diagnostics"].size(), 12u);
  const auto inz = to_json(check_inz({RationalPoint(Point{0})}, {RationalPoint(Point{1})}));
  EXPECT_EQ(inz["G_open"], 2);
  EXPECT_EQ(inz["S"][0][0], "1/2");
}
