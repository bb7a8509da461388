#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "fplab/cli.hpp"
#include "fplab/json_io.hpp"

using namespace fplab;

namespace {

const std::string kData = FPLAB_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json doc() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "fplab_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("verify the Fano plane") {
  const auto r = run({"verify", "--family", kData + "/fano.json", "--c", "4", "--s", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.doc()["frameproof"] == true);
  CHECK(r.doc()["witness"].is_null());
}

TEST_CASE("verify reports a witness with exit 1") {
  const auto path = write_temp("square.json", R"({"n": 4, "sets": [[1,2],[3,4],[1,3],[2,4]]})");
  const auto r = run({"verify", "--family", path, "--c", "2", "--s", "1"});
  CHECK(r.code == cli::kRefuted);
  CHECK(r.doc()["witness"]["focus"] == 0);
}

TEST_CASE("matching solves the small instance") {
  const auto r = run({"matching", "--n", "4", "--t", "2", "--lambda", "2", "--k1", "2", "--k2", "2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.doc()["value"] == 3);
  CHECK(r.doc()["status"] == "exact");
}

TEST_CASE("malformed input exits 2 and names the field") {
  const auto bad_point = write_temp("bad_point.json", R"({"n": 4, "sets": [[1,2],[3,"x"]]})");
  const auto r = run({"verify", "--family", bad_point, "--c", "2", "--s", "1"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("sets[1][1]") != std::string::npos);

  const auto syntax = write_temp("syntax.json", R"({"n": 4, "sets": [[1,2)");
  CHECK(run({"verify", "--family", syntax, "--c", "2", "--s", "1"}).code == cli::kInputError);

  const auto extra = write_temp("extra.json", R"({"n": 4, "sets": [[1,2]], "colour": 1})");
  const auto e = run({"verify", "--family", extra, "--c", "2", "--s", "1"});
  CHECK(e.code == cli::kInputError);
  CHECK(e.err.find("colour") != std::string::npos);

  const auto code = write_temp("bad_code.json", R"({"q": 2, "n": 2, "words": [[1,3]]})");
  const auto c = run({"verify", "--code", code, "--c", "2", "--s", "1"});
  CHECK(c.code == cli::kInputError);
  CHECK(c.err.find("words[0][1]") != std::string::npos);

  CHECK(run({"verify", "--family", kData + "/missing.json", "--c", "2", "--s", "1"}).code == cli::kInputError);
  CHECK(run({"verify", "--family", kData + "/fano.json", "--c", "2", "--s", "2"}).code == cli::kInputError);
  CHECK(run({"construct", "rs", "--q", "6", "--n", "3", "--t", "2"}).code == cli::kInputError);
  CHECK(run({"bogus"}).code == cli::kInputError);
}

TEST_CASE("construct output round-trips through verify") {
  const auto rs = run({"construct", "rs", "--q", "3", "--n", "3", "--t", "2", "--c", "2", "--s", "1"});
  REQUIRE(rs.code == cli::kOk);
  const auto rs_path = write_temp("rs.json", rs.out);
  CHECK(run({"verify", "--code", rs_path, "--c", "2", "--s", "1"}).code == cli::kOk);

  const auto pk = run({"construct", "packing", "--n", "9", "--k", "3", "--t", "2", "--seed", "4"});
  REQUIRE(pk.code == cli::kOk);
  const auto pk_path = write_temp("pk.json", pk.out);
  CHECK(run({"verify", "--family", pk_path, "--c", "4", "--s", "2"}).code == cli::kOk);

  const auto ind = run({"construct", "induced", "--k", "3", "--c", "4", "--s", "2", "--n", "7"});
  REQUIRE(ind.code == cli::kOk);
  const auto ind_path = write_temp("ind.json", ind.out);
  CHECK(run({"verify", "--family", ind_path, "--c", "4", "--s", "2"}).code == cli::kOk);

  const auto fa = run({"construct", "faithful", "--n", "3", "--c", "2", "--s", "1", "--q", "3", "--seed", "2"});
  REQUIRE(fa.code == cli::kOk);
  const auto fa_path = write_temp("fa.json", fa.out);
  CHECK(run({"verify", "--code", fa_path, "--c", "2", "--s", "1", "--critical"}).code == cli::kOk);

  const auto de = run({"construct", "design", "--file", kData + "/sts9.txt", "--c", "4", "--s", "2"});
  REQUIRE(de.code == cli::kOk);
  CHECK(de.doc()["blocks"] == 12);
  CHECK(de.doc()["design"] == true);
}

TEST_CASE("identical seeds give byte-identical output") {
  const std::vector<std::string> pk{"construct", "packing", "--n", "10", "--k", "3", "--t", "2", "--seed", "99"};
  CHECK(run(pk).out == run(pk).out);
  const std::vector<std::string> fa{"construct", "faithful", "--n", "4", "--c", "2", "--s", "1", "--q", "3", "--seed", "7"};
  CHECK(run(fa).out == run(fa).out);
  const std::vector<std::string> ind{"construct", "induced", "--k", "4", "--c", "2", "--s", "1", "--n", "9", "--seed", "5"};
  CHECK(run(ind).out == run(ind).out);
  const auto path = write_temp("square2.json", R"({"n": 4, "sets": [[1,2],[3,4],[1,3],[2,4]]})");
  CHECK(run({"verify", "--family", path, "--c", "2", "--s", "1", "--threads", "1"}).out ==
        run({"verify", "--family", path, "--c", "2", "--s", "1", "--threads", "3"}).out);
}

TEST_CASE("partition and bounds subcommands") {
  const auto p = run({"construct", "partition", "--a", "1,2,3,4", "--given", "1,2;3,4;1,3", "--c", "5", "--s", "2"});
  CHECK(p.code == cli::kOk);
  CHECK(p.doc()["parts"] == Json::parse("[[2],[4]]"));
  const auto bad = run({"construct", "partition", "--a", "1,2,3,4", "--given", "1,2;1,3", "--c", "2", "--s", "1"});
  CHECK(bad.code == cli::kRefuted);

  const auto h = run({"bounds", "hypergraph", "--n", "7", "--k", "3", "--c", "4", "--s", "2", "--design",
                      kData + "/fano.txt"});
  CHECK(h.code == cli::kOk);
  CHECK(h.doc()["pinned"] == 7);
  const auto c = run({"bounds", "code", "--n", "5", "--c", "2", "--s", "1", "--q", "5"});
  CHECK(c.doc()["pinned"] == 125);
  const auto m = run({"bounds", "matching", "--n", "6", "--t", "2", "--lambda", "2", "--s1", "1", "--s2", "2"});
  CHECK(m.doc()["pinned"] == 5);
}

TEST_CASE("attack reports the descendant alphabet") {
  const auto path = write_temp("attack.json", R"({"q": 2, "n": 2, "words": [[1,1],[1,2],[2,1]]})");
  const auto r = run({"attack", "--code", path, "--coalition", "1,2", "--s", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.doc()["symbols"] == Json::parse("[[1,2],[1,2]]"));
  CHECK(r.doc()["feasible_words"] == "4");
  CHECK(r.doc()["can_frame_outsider"] == true);
  CHECK(run({"attack", "--code", path, "--coalition", "7", "--s", "1"}).code == cli::kInputError);
}

TEST_CASE("--output writes the same document to a file") {
  const auto target = (std::filesystem::temp_directory_path() / "fplab_cli_tests" / "out.json").string();
  const auto r = run({"matching", "--n", "4", "--t", "2", "--lambda", "2", "--k1", "2", "--k2", "2", "--output", target});
  CHECK(r.code == cli::kOk);
  std::ifstream in(target);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str())["value"] == 3);
}
