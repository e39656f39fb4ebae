#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "confstudy/cli.hpp"
#include "confstudy/json_io.hpp"
#include "support.hpp"

namespace {

using namespace confstudy;
using support::Gen;
namespace fs = std::filesystem;

const std::string kFixtures = CONFSTUDY_FIXTURE_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "confstudy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "confstudy_json_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Schema, MultivectorRoundTrip) {
  Gen gen(71);
  for (int n = 0; n < 100; ++n) {
    const Multivector m = gen.multivector();
    const Json j = multivector_to_json(m);
    EXPECT_EQ(multivector_from_json(j), m);
    EXPECT_EQ(multivector_from_json(Json::parse(j.dump())), m);
  }
}

TEST(Schema, CanonicalKeyOrder) {
  const Multivector m = Multivector::basis(blade::einf, 2) + Multivector::basis(blade::scalar, 1) +
                        Multivector::basis(blade::e1 | blade::e2, Rational(-1, 3));
  EXPECT_EQ(multivector_to_json(m).dump(), R"({"blades":{"1":"1","ei":"2","e12":"-1/3"}})");
}

TEST(Schema, FourQuatAndPolyRoundTrip) {
  Gen gen(72);
  for (int n = 0; n < 50; ++n) {
    const FourQuat q = gen.fourquat();
    EXPECT_EQ(fourquat_from_json(fourquat_to_json(q)), q);
    const RotorPoly p{gen.fourquat(), gen.fourquat(), FourQuat::one()};
    EXPECT_EQ(rotor_poly_from_json(rotor_poly_to_json(p)), p);
    const RealPoly r{gen.rational(), gen.rational(), 1};
    EXPECT_EQ(real_poly_from_json(real_poly_to_json(r)), r);
  }
}

TEST(Schema, MotionRoundTrip) {
  Gen gen(73);
  for (int n = 0; n < 30; ++n) {
    const Blade2 ab = gen.blade();
    const DorstMotion m = motion_from_blade(ab.a, ab.b);
    const DorstMotion back = motion_from_json(motion_to_json(m));
    EXPECT_EQ(back.direction, m.direction);
    EXPECT_EQ(back.blade.a, m.blade.a);
    EXPECT_EQ(back.blade.b, m.blade.b);
    EXPECT_EQ(back.kind, m.kind);
  }
  const DorstMotion t = motion_from_json(read_json_file(fixture("motion_translation.json")));
  EXPECT_EQ(t.kind, MotionType::Translation);
}

TEST(Schema, PolynomialCoefficientsAsMultivectors) {
  const RotorPoly from_fourquats = rotor_poly_from_json(read_json_file(fixture("paperC.json")));
  EXPECT_EQ(from_fourquats, support::fixture::c());
  Json j = Json::object();
  j["coeffs"] = Json::array({multivector_to_json(support::fixture::h3()),
                             multivector_to_json(Multivector::basis(blade::scalar))});
  EXPECT_EQ(rotor_poly_from_json(j), support::fixture::linear(support::fixture::h3()));
}

TEST(Schema, Rejections) {
  EXPECT_THROW(rational_from_json(Json(0.5)), SchemaError);
  EXPECT_EQ(rational_from_json(Json(7)), 7);
  EXPECT_THROW(multivector_from_json(Json::parse(R"({"blades":{"e4":"1"}})")), SchemaError);
  EXPECT_THROW(multivector_from_json(Json::parse(R"({"blades":{"e1":"1"},"x":1})")), SchemaError);
  EXPECT_THROW(multivector_from_json(Json::parse(R"({"blades":{"e1":"1/0"}})")), SchemaError);
  EXPECT_THROW(fourquat_from_json(Json::parse(R"({"q0":["1","0","0"]})")), SchemaError);
  EXPECT_THROW(detect_kind(Json::parse(R"({"nothing":1})")), SchemaError);
  EXPECT_THROW(read_json_file(fixture("does_not_exist.json")), SchemaError);
}

TEST(Cli, ClassifyFixture) {
  const Outcome r = run({"classify", fixture("h3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j.at("on_study").get<bool>());
  EXPECT_EQ(j.at("null_value"), "0");
  EXPECT_EQ(j.at("motion_type"), "Transversion");
  EXPECT_EQ(j.at("branch"), "linear");
  EXPECT_EQ(j.at("generators").size(), 10u);
}

TEST(Cli, ClassifyOffVariety) {
  const fs::path p = write_file("off.json", R"({"q0":["1","0","0","0"],"q1":["0","0","0","0"],)"
                                            R"("q2":["0","0","0","0"],"q3":["0","1","0","0"]})");
  const Outcome r = run({"classify", p.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j.at("on_study").get<bool>());
  EXPECT_TRUE(j.at("norm").is_null());
}

TEST(Cli, FactorFixture) {
  const Outcome r = run({"factor", fixture("paperC.json"), "--require-count", "12"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 12u);
  for (const auto& f : j) {
    EXPECT_EQ(f.at("factors").size(), 3u);
    EXPECT_EQ(f.at("kinds").size(), 3u);
    EXPECT_FALSE(f.contains("leading"));
  }
  const Outcome wrong = run({"factor", fixture("paperC.json"), "--require-count", "11"});
  EXPECT_EQ(wrong.code, 2);
  EXPECT_EQ(Json::parse(wrong.err).at("error"), "CountMismatch");
}

TEST(Cli, ActAndDecompose) {
  const Outcome act = run({"act", fixture("scaling_rotor.json"), "--point", "1,0,0", "--normalize"});
  ASSERT_EQ(act.code, 0) << act.err;
  EXPECT_EQ(Json::parse(act.out).at("kind").at("position"), Json::parse(R"(["4","0","0"])"));

  const Outcome dec = run({"decompose", fixture("h1.json")});
  ASSERT_EQ(dec.code, 0) << dec.err;
  EXPECT_EQ(Json::parse(dec.out).at("case"), "Q3Zero");

  const Outcome zero = run({"decompose", fixture("identity.json")});
  EXPECT_EQ(zero.code, 2);
  EXPECT_EQ(Json::parse(zero.err).at("error"), "ZeroDirection");
}

TEST(Cli, MulMatchesLibrary) {
  const Outcome r = run({"mul", fixture("h1.json"), fixture("h2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(multivector_from_json(Json::parse(r.out)),
            gp(support::fixture::h1(), support::fixture::h2()));
  const Outcome mixed = run({"mul", fixture("h1.json"), fixture("paperC.json")});
  EXPECT_EQ(mixed.code, 1);
}

TEST(Cli, TrajectoryCsv) {
  const fs::path csv = scratch_dir() / "scaling.csv";
  const Outcome r = run({"trajectory", fixture("motion_scaling.json"), "--point", "1,0,0", "--t",
                     "2,1/3,1,inf", "--csv", csv.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(csv),
            "t,x,y,z,kind\n"
            "2,3,0,0,FinitePoint\n"
            "0.333333333333,-2,0,0,FinitePoint\n"
            "1,,,,PointAtInfinity\n"
            "inf,1,0,0,FinitePoint\n");
  const Outcome exact = run({"trajectory", fixture("motion_scaling.json"), "--point", "1,0,0", "--t",
                         "1/3", "--csv", csv.string(), "--exact"});
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_EQ(read_file(csv), "t,x,y,z,kind\n1/3,-2,0,0,FinitePoint\n");
}

TEST(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  const Outcome missing = run({"classify", fixture("missing.json")});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(Json::parse(missing.err).at("error"), "SchemaError");
  const fs::path broken = write_file("broken.json", "{\"blades\": ");
  EXPECT_EQ(run({"classify", broken.string()}).code, 1);
  EXPECT_EQ(run({"act", fixture("identity.json"), "--point", "1,2"}).code, 1);
}

TEST(Cli, ThreadsEnvironment) {
  ::setenv("CONFSTUDY_THREADS", "3", 1);
  const Outcome three = run({"factor", fixture("paperC.json")});
  ::setenv("CONFSTUDY_THREADS", "many", 1);
  const Outcome bad = run({"factor", fixture("paperC.json")});
  ::unsetenv("CONFSTUDY_THREADS");
  const Outcome deflt = run({"factor", fixture("paperC.json")});
  EXPECT_EQ(three.code, 0);
  EXPECT_EQ(three.out, deflt.out);
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", fixture("h2.json")},
           {"factor", fixture("paperC.json")},
           {"trajectory", fixture("motion_rotation.json"), "--point", "1,2,3", "--t", "0,1,-2"}}) {
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
