#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "document.hpp"
#include "support.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

const std::string kData = std::string(TORIC_DMOD_SOURCE_DIR) + "/tests/data/";

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Document, KeysCommentsAndContinuations) {
  auto doc = cli::parse_document(
      "# header\n"
      "n = 2   # ambient rank\n"
      "rays = [[1, 0],\n"
      "        [0, 1]]\n"
      "side = left\n"
      "note = \"a # inside a string\"\n");
  EXPECT_EQ(doc.at("n"), 2);
  EXPECT_EQ(doc.at("rays").size(), 2u);
  EXPECT_EQ(doc.at("side"), "left");
  EXPECT_EQ(doc.at("note"), "a # inside a string");
  EXPECT_THROW(cli::parse_document("n = 1\nn = 2\n"), ParseError);
  EXPECT_THROW(cli::parse_document("[1, 2]\n"), ParseError);
  EXPECT_THROW(cli::parse_document("n =\n"), ParseError);
  EXPECT_THROW(cli::parse_document("rays = [[1, 0]\n"), ParseError);
}

TEST(Document, FanParsing) {
  Fan f = cli::parse_fan(cli::parse_document("n = 1\nrays = [[1], [-1]]\nmax_cones = [[1], [2]]\n"));
  EXPECT_EQ(f.num_rays(), 2u);
  EXPECT_EQ(f.maximal_cones().size(), 2u);
  EXPECT_THROW(cli::parse_fan(cli::parse_document("n = 1\nrays = []\n")), ParseError);
  EXPECT_THROW(cli::parse_fan(cli::parse_document("n = 2\nrays = [[1]]\n")), ParseError);
  EXPECT_THROW(cli::parse_fan(cli::parse_document("n = 1\nrays = [[1], [-1]]\nmax_cones = [[3]]\n")),
               InvalidFan);
  EXPECT_THROW(cli::parse_fan(cli::parse_document("rays = [[1]]\n")), ParseError);
  Fan big = cli::parse_fan(cli::parse_document("n = 1\nrays = [[\"123456789012345678901234567890\"]]\n"));
  EXPECT_EQ(big.rays()[0][0], Integer("123456789012345678901234567890"));
}

TEST(Document, ModuleRoundTrip) {
  for (const auto& [name, fan] : fixture_fans()) {
    GradingData g = grading_data(fan);
    const std::size_t d = g.num_rays();
    std::vector<GradedPresentation> mods{d_module_left(g, g.ray_degree(0)),
                                         d_module_right(g, g.class_group().zero()),
                                         GradedPresentation{Side::Left, d, {g.class_group().zero()}, {}}};
    GradedPresentation two{Side::Left, d, {g.class_group().zero(), g.ray_degree(0)}, {}};
    two.relations.push_back({parse_weyl("x1 - 1/3*x1*d1^2", d), parse_weyl("d1", d)});
    two.relations.push_back({WeylElement(d), parse_weyl("-x1*d1", d)});
    mods.push_back(two);
    for (const auto& m : mods) {
      std::ostringstream os;
      cli::write_module(os, m);
      EXPECT_EQ(cli::parse_module(cli::parse_document(os.str()), d), m) << name << "\n" << os.str();
    }
  }
  EXPECT_THROW(cli::parse_module(cli::parse_document("side = up\ndegrees = []\nrelations = []\n"), 2),
               ParseError);
  EXPECT_THROW(cli::parse_module(cli::parse_document("side = left\ndegrees = [[0]]\nrelations = [[\"x1\", \"x2\"]]\n"), 2),
               ParseError);
}

TEST(Commands, FanInfo) {
  Result r = run({"fan-info", kData + "p1.fan"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "Cl = Z"));
  EXPECT_TRUE(has_line(r.out, "deg = [1, 1]"));
  EXPECT_TRUE(has_line(r.out, "b = (x1, x2)"));
  EXPECT_TRUE(has_line(r.out, "theta = x1*d1 + x2*d2"));
  Result m = run({"--format", "machine", "fan-info", kData + "p1.fan"});
  EXPECT_TRUE(has_line(m.out, "Cl\tZ"));
  Result after = run({"fan-info", kData + "p1.fan", "--format", "machine"});
  EXPECT_EQ(after.out, m.out);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"fan-info"}).code, cli::kUsage);
  EXPECT_EQ(run({"fan-info", kData + "missing.fan"}).code, cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "fan-info", kData + "p1.fan"}).code, cli::kUsage);
  EXPECT_EQ(run({"fan-info", kData + "empty_rays.fan"}).code, cli::kUsage);
  Result ns = run({"fan-info", kData + "nonsmooth.fan"});
  EXPECT_EQ(ns.code, cli::kInvalid);
  EXPECT_NE(ns.err.find("cone 1"), std::string::npos);
  EXPECT_EQ(run({"dl", kData + "p1.fan", "-b", "1,0"}).code, cli::kUsage);
  EXPECT_EQ(run({"dl", kData + "p1.fan", "-b", "one"}).code, cli::kUsage);
  EXPECT_EQ(run({"check", kData + "p1.fan", kData + "bad_relation.mod"}).code, cli::kUsage);
  EXPECT_EQ(run({"charvar", kData + "p1.fan", kData + "p1_free.mod"}).code, cli::kPrecondition);
  EXPECT_EQ(run({"local", kData + "p2.fan", "--cone", "1,2", "--p=-2,1", "--g=th1"}).code,
            cli::kPrecondition);
  EXPECT_EQ(run({"local", kData + "p1xp1.fan", "--cone", "1,2", "--p=0,0"}).code, cli::kInvalid);
  EXPECT_EQ(run({"local", kData + "p1.fan", "--cone", "3", "--p=0"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Commands, DlCheckCharvar) {
  Result dl = run({"dl", kData + "p1.fan", "-b", "1"});
  EXPECT_EQ(dl.code, 0);
  EXPECT_NE(dl.out.find("[\"x1*d1 + x2*d2 + 1\"]"), std::string::npos);
  Result ok = run({"check", kData + "p1.fan", kData + "p1_structure.mod"});
  EXPECT_TRUE(has_line(ok.out, "theta = OK"));
  Result fail = run({"check", kData + "p1.fan", kData + "p1_free.mod"});
  EXPECT_EQ(fail.code, 0);
  EXPECT_TRUE(has_line(fail.out, "theta = FAIL at generator 1, u = u1"));
  Result cv = run({"charvar", kData + "p1.fan", kData + "p1_dl0.mod"});
  EXPECT_TRUE(has_line(cv.out, "j = (x1*xi1 + x2*xi2)"));
  EXPECT_TRUE(has_line(cv.out, "dim = 3"));
  EXPECT_TRUE(has_line(cv.out, "sheaf-dim = 2"));
  EXPECT_TRUE(has_line(cv.out, "holonomic-sheaf = no"));
  Result st = run({"charvar", kData + "p1.fan", kData + "p1_structure.mod", "--charts"});
  EXPECT_TRUE(has_line(st.out, "dim = 2"));
  EXPECT_TRUE(has_line(st.out, "sheaf-dim = 1"));
  EXPECT_TRUE(has_line(st.out, "holonomic-A = yes"));
  EXPECT_TRUE(has_line(st.out, "holonomic-sheaf = yes"));
  EXPECT_TRUE(has_line(st.out, "chart-check = OK"));
  Result tor = run({"charvar", kData + "p1.fan", kData + "p1_torsion.mod"});
  EXPECT_TRUE(has_line(tor.out, "torsion = yes"));
  EXPECT_TRUE(has_line(tor.out, "sheaf = 0"));
}

TEST(Commands, SwapAndLocal) {
  Result sw = run({"swap", kData + "p1.fan", kData + "p1_dl2.mod"});
  EXPECT_EQ(sw.code, 0);
  GradingData g = grading_data(p1_fan());
  GradedPresentation m = cli::parse_module(cli::parse_document(sw.out), 2);
  EXPECT_EQ(m.side, Side::Right);
  EXPECT_EQ(m.generator_degrees[0], iv({0}));
  EXPECT_TRUE(check_theta_condition(g, m).holds);

  Result l = run({"local", kData + "p1.fan", "--cone", "1", "--p=-1"});
  EXPECT_TRUE(has_line(l.out, "h_p = th1"));
  EXPECT_TRUE(has_line(l.out, "rho(h_p) = v1"));
  EXPECT_TRUE(has_line(l.out, "closed-range = DISAGREE"));
  EXPECT_NE(l.out.find("oracle = AGREE"), std::string::npos);
  Result z = run({"local", kData + "p1.fan", "--cone", "1", "--p", "0"});
  EXPECT_TRUE(has_line(z.out, "h_p = 1"));
  Result p2 = run({"local", kData + "p2.fan", "--cone", "1,2", "--p=-1,0"});
  EXPECT_TRUE(has_line(p2.out, "h_p = th1"));
}
