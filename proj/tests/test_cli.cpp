// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>

#include "nqsym/cli.hpp"
#include "nqsym/json_io.hpp"

using namespace nqsym;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str()};
}

}  // namespace

TEST_CASE("expand") {
  const Run r = run({"expand", "--comp", "1,2,2"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["L"].dump() ==
        R"({"basis":"L","terms":[{"comp":[1,1,3],"num":1,"den":1},{"comp":[1,1,2,1],"num":1,"den":1},)"
        R"({"comp":[1,3,1],"num":1,"den":1},{"comp":[1,4],"num":1,"den":1}]})");
  CHECK(run({"--pretty", "expand", "--comp", "122"}).out.rfind("N[122] = L[113] + L[1121] + L[131] + L[14]\n", 0) == 0);
}

TEST_CASE("matroid-f") {
  const Run r = run({"matroid-f"}, R"({"n":4,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["F"].dump() == R"({"basis":"N","terms":[{"comp":[2,2],"num":6,"den":1}]})");
  CHECK(j["bases"] == 6);
  CHECK(j["in_V"] == true);
  CHECK(j["loops_and_coloops"] == 0);
  CHECK(run({"matroid-f", "--uniform", "2,4"}).out == r.out);
  const Json m = Json::parse(run({"matroid-f", "--uniform", "2,4", "--basis", "M"}).out);
  CHECK(m["F"]["basis"] == "M");
}

TEST_CASE("recover") {
  const Json f = Json::parse(run({"matroid-f", "--partition", "3,2,1"}).out)["F"];
  const Run r = run({"recover"}, f.dump());
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["lambda"] == Json::array({3, 2, 1}));
  const Json loops = Json::parse(run({"recover", "--partition", "3,2", "--loops", "2"}).out);
  CHECK(loops["lambda"] == Json::array({3, 2}));
  CHECK(loops["loops"] == 2);
}

TEST_CASE("convert and mul") {
  const std::string n1 = R"({"basis":"N","terms":[{"comp":[1],"num":1,"den":1}]})";
  const std::string n11 = R"({"basis":"N","terms":[{"comp":[1,1],"num":1,"den":1}]})";
  const Run product = run({"mul", "--left", n1, "--right", n11});
  CHECK(product.code == 0);
  CHECK(Json::parse(product.out).dump() ==
        R"({"basis":"N","terms":[{"comp":[2,1],"num":1,"den":1},{"comp":[1,1,1],"num":1,"den":1}]})");
  CHECK(run({"mul"}, R"({"left":)" + n1 + R"(,"right":)" + n11 + "}").out == product.out);
  const Run m = run({"convert", "--basis", "M"}, R"({"basis":"N","terms":[{"comp":[2],"num":1,"den":1}]})");
  CHECK(Json::parse(m.out).dump() ==
        R"({"basis":"M","terms":[{"comp":[2],"num":1,"den":1},{"comp":[1,1],"num":2,"den":1}]})");
}

TEST_CASE("rank2-split and geom-decompose") {
  const Json s = Json::parse(run({"rank2-split", "--partition", "2,2,1", "--s", "1"}).out);
  CHECK(s["check"]["f_identity"] == true);
  CHECK(s["certificate"]["children"].size() == 2);
  const Run g = run({"geom-decompose"}, R"({"lambda":[2,2,1,1],"J":[[2,2,1,1]]})");
  CHECK(g.code == 0);
  CHECK(Json::parse(g.out)["verified"] == true);
  const Json full = Json::parse(run({"geom-decompose", "--partition", "2,2,1,1,1"}).out);
  CHECK(full["verified"] == true);
  CHECK(full["representatives"].size() == 3);
  CHECK(full["splits"].size() == 2);
}

TEST_CASE("errors") {
  Run r = run({"expand", "--comp", "1,0"});
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["kind"] == "invalid_argument");
  r = run({"matroid-f"}, R"({"n":4,"bases":[[1,2],[3,4]]})");
  CHECK(r.code == 1);
  r = run({"recover"}, R"({"basis":"N","terms":[{"comp":[3,2],"num":10,"den":1}]})");
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["error"]["kind"] == "not_rank_two");
  r = run({"convert"}, "not json");
  CHECK(r.code == 1);
  r = run({"nonsense"});
  CHECK(r.code == 1);
  r = run({"geom-decompose"}, R"({"lambda":[2,2,1,1],"J":[[2,2,2]]})");
  CHECK(Json::parse(r.out)["error"]["kind"] == "inconsistent");
}

TEST_CASE("resource limits exit with code 2") {
  const Run r = run({"convert", "--basis", "L"},
                    R"({"basis":"N","terms":[{"comp":[15],"num":1,"den":1}]})");
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["kind"] == "resource_limit");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"matroid-f", "--partition", "4,3,2,1"};
  CHECK(run(args).out == run(args).out);
}
