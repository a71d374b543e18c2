#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "helpers.hpp"

using namespace ordsemi;
using namespace ordsemi::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate: exit codes and witness text") {
  auto ok = run({"validate", fixture_path("sl2.osg")});
  CHECK(ok.code == 0);

  auto px = run({"validate", fixture_path("px3.osg")});
  CHECK(px.code == 1);
  CHECK(px.out.find("associativity") != std::string::npos);
  CHECK(px.out.find("(ea)a = e but e(aa) = f") != std::string::npos);

  auto op = run({"validate", "--opposite", fixture_path("px3.osg")});
  CHECK(op.code == 1);

  auto c2 = run({"validate", fixture_path("c2.osg")});
  CHECK(c2.code == 1);
  CHECK(c2.out.find("compatibility") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", "/nonexistent/file.osg"}).code == 2);
  CHECK(run({"--format", "yaml", "validate", fixture_path("sl2.osg")}).code == 2);
  CHECK(run({"enumerate", "--order", "0"}).code == 2);
  CHECK(run({"enumerate", "--order", "5"}).code == 2);
  CHECK(run({"enumerate", "--order", "2", "--filter", "bogus"}).code == 2);
  CHECK(run({"enumerate", "--order", "2", "--shard", "3/2"}).code == 2);
  CHECK(run({"check-theorems"}).code == 2);
  CHECK(run({"check-theorems", "--order", "2", "--theorem", "THM_0"}).code == 2);
  CHECK(run({"inverses", fixture_path("sl2.osg"), "zz"}).code == 2);
  CHECK(run({"oracle", "nope"}).code == 2);

  auto bad = std::filesystem::temp_directory_path() / "ordsemi_bad.osg";
  {
    std::ofstream f(bad);
    f << "order 2\nmult 0 0\nmult 0 7\n";
  }
  auto r = run({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("text and json carry the same findings") {
  auto text = run({"analyze", fixture_path("lz2.osg")});
  auto json = run({"--format", "json", "analyze", fixture_path("lz2.osg")});
  auto after = run({"analyze", fixture_path("lz2.osg"), "--format", "json"});
  REQUIRE(text.code == 0);
  REQUIRE(json.code == 0);
  CHECK(json.out == after.out);
  auto j = Json::parse(json.out);
  CHECK(j["command"] == "analyze");
  for (auto const& f : j["findings"]) {
    CHECK(text.out.find("[" + f["kind"].get<std::string>() + "]") !=
          std::string::npos);
  }
}

TEST_CASE("analyze reports the fixture facts") {
  auto j = Json::parse(
      run({"--format", "json", "analyze", fixture_path("sl2.osg")}).out);
  bool saw_inverse = false;
  bool saw_lcsc = false;
  for (auto const& f : j["findings"]) {
    if (f["kind"] == "property" && f["property"] == "inverse") {
      saw_inverse = true;
      CHECK(f["holds"] == true);
    }
    if (f["kind"] == "least_complete_semilattice_congruence") {
      saw_lcsc = true;
      CHECK(f["equals_J"] == true);
    }
    if (f["kind"] == "greens_relations") {
      CHECK(f["H"].size() == 2);
    }
  }
  CHECK(saw_inverse);
  CHECK(saw_lcsc);
}

TEST_CASE("inverses") {
  auto r = run({"--format", "json", "inverses", fixture_path("lz2.osg"), "a"});
  REQUIRE(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["findings"][0]["inverses"] == Json::array({"a", "b"}));
  auto by_index = run({"--format", "json", "inverses", fixture_path("lz2.osg"), "0"});
  CHECK(Json::parse(by_index.out)["findings"] == j["findings"]);
}

TEST_CASE("enumerate: text corpus, json summary, out file") {
  auto r = run({"enumerate", "--order", "2"});
  REQUIRE(r.code == 0);
  CHECK(parse_corpus(r.out).size() == 20);

  auto j = Json::parse(
      run({"--format", "json", "enumerate", "--order", "2", "--up-to-iso"}).out);
  CHECK(j["findings"][0]["count"] == 11);

  auto path = std::filesystem::temp_directory_path() / "ordsemi_c3.osg";
  auto w = run({"enumerate", "--order", "3", "--up-to-iso", "--out",
                path.string()});
  REQUIRE(w.code == 0);
  CHECK(parse_corpus(read_text_file(path)).size() == 173);

  auto c = run({"check-theorems", "--corpus", path.string()});
  CHECK(c.code == 0);
  CHECK(c.out.find("173 corpus structures, all groupings consistent") !=
        std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("check-theorems") {
  auto r = run({"check-theorems", "--order", "2", "--labelled"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("24 candidate pairs, all groupings consistent", 0) == 0);

  auto one = run({"check-theorems", "--order", "3", "--theorem", "THM_3_5",
                  "--shard", "1/2"});
  CHECK(one.code == 0);
  CHECK(one.out.find("THM_BIG") == std::string::npos);
}

TEST_CASE("oracle") {
  auto r = run({"oracle", "px3"});
  CHECK(r.code == 0);
  CHECK_FALSE(r.out.empty());
}
