#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = padicmin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, std::string_view needle) {
  return s.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze: the p=3 sharp polynomial") {
  auto r = run({"analyze", "--prime", "3", "--coeffs", "1,4,0,4,0,2"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "case (1)"));
  CHECK((contains(r.out, "0, 1, 11, 15, 7, 23, 3, 13, 17") ||
         contains(r.out, "0 1 11 15 7 23 3 13 17") || contains(r.out, "(0,1,11,15,7,23,3,13,17)")));

  auto j = run({"analyze", "--prime", "3", "--coeffs", "1,4,0,4,0,2", "--format", "json"});
  CHECK(j.code == 1);
  Json rec = Json::parse(j.out);
  CHECK(rec["minimal"] == false);
  CHECK(rec["agree"] == true);
  CHECK(rec["closed_form"]["case"] == 1);
  auto& conds = rec["closed_form"]["conditions"];
  bool found = false;
  for (const auto& c : conds) {
    if (c["name"].get<std::string>().starts_with("case (1): A1 + 5 != 3a2")) {
      found = true;
      CHECK(c["pass"] == false);
      CHECK(c["residues"] == Json::array({6, 6}));
    }
  }
  CHECK(found);
  CHECK(rec["delta_rule"]["minimal"] == false);
}

TEST_CASE("analyze: odometer and fixed point") {
  CHECK(run({"analyze", "--prime", "2", "--coeffs", "1,1"}).code == 0);
  auto r = run({"analyze", "--prime", "5", "--coeffs", "1,1,1", "--format", "json"});
  CHECK(r.code == 1);
  Json rec = Json::parse(r.out);
  CHECK(rec["closed_form"].is_null());
  CHECK(rec["delta_rule"]["witness"]["level"] == 1);
  CHECK(rec["delta_rule"]["witness"]["cycle"] == Json::array({3}));
}

TEST_CASE("errors exit with 2") {
  CHECK(run({"analyze", "--prime", "4", "--coeffs", "1,1"}).code == 2);
  CHECK(run({"analyze", "--prime", "3", "--coeffs", "1,x"}).code == 2);
  CHECK(run({"analyze", "--prime", "3", "--coeffs", "7"}).code == 2);
  CHECK(run({"analyze", "--coeffs", "1,1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cycles", "--prime", "3", "--coeffs", "1,1", "--level", "30"}).code == 2);
  auto r = run({"cycles", "--prime", "2", "--coeffs", "1,1", "--level", "5", "--table-bound", "16"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("cycles") {
  auto r = run({"cycles", "--prime", "2", "--coeffs", "1,3,0,2", "--level", "3", "--format", "json"});
  CHECK(r.code == 0);
  Json rec = Json::parse(r.out);
  CHECK(rec["cycles"][0] == Json::array({0, 1, 6, 3}));

  auto odo = Json::parse(run({"cycles", "--prime", "3", "--coeffs", "1,1", "--level", "2",
                              "--format", "json"})
                             .out);
  CHECK(odo["cycle_count"] == 1);
  CHECK(odo["cycles"][0].size() == 9);

  auto sharp = Json::parse(run({"cycles", "--prime", "3", "--coeffs", "1,4,0,4,0,2", "--level", "3",
                              "--format", "json"})
                             .out);
  bool found = false;
  for (const auto& c : sharp["cycles"])
    found = found || c == Json::array({0, 1, 11, 15, 7, 23, 3, 13, 17});
  CHECK(found);

  auto text = run({"cycles", "--prime", "2", "--coeffs", "1,3,0,2", "--level", "3"});
  CHECK((contains(text.out, "(0, 1, 6, 3)") || contains(text.out, "(0 1 6 3)") ||
         contains(text.out, "(0,1,6,3)")));
}

TEST_CASE("conjugacy and stream") {
  auto t = run({"conjugacy", "--prime", "3", "--coeffs", "1,1,6", "--level", "2"});
  CHECK(t.code == 0);
  CHECK(t.out == "0 0\n1 1\n2 8\n3 6\n4 7\n5 5\n6 3\n7 4\n8 2\n");
  CHECK(run({"conjugacy", "--prime", "3", "--coeffs", "1,1,6", "--nmax", "3"}).code == 0);
  CHECK(run({"conjugacy", "--prime", "2", "--coeffs", "1,3,0,2", "--nmax", "3"}).code != 0);

  auto s = run({"stream", "--prime", "3", "--coeffs", "1,1", "--level", "2", "--count", "10"});
  CHECK(s.code == 0);
  CHECK(s.out == "0\n1\n2\n3\n4\n5\n6\n7\n8\n0\n");
  auto q = run({"stream", "--prime", "3", "--coeffs", "1,1,6", "--level", "2"});
  CHECK(q.out == "0\n1\n8\n6\n7\n5\n3\n4\n2\n");
  auto sharp = run({"stream", "--prime", "3", "--coeffs", "1,4,0,4,0,2", "--level", "2", "--count", "9"});
  CHECK(sharp.code == 0);
  CHECK(sharp.out == "0\n1\n2\n6\n7\n5\n3\n4\n8\n");
  CHECK(run({"stream", "--prime", "3", "--coeffs", "1,4,0,4,0,2", "--level", "3"}).code == 2);
}

TEST_CASE("sweep") {
  auto r = run({"sweep", "--prime", "2", "--degree", "4", "--coeff-bound", "8", "--format", "json",
                "--threads", "2"});
  CHECK(r.code == 0);
  Json rec = Json::parse(r.out);
  CHECK(rec["examined"] == 4096);
  CHECK(rec["disagreements"] == 0);

  auto s = run({"sweep", "--prime", "5", "--degree", "4", "--samples", "500", "--nmax", "4",
                "--seed", "5", "--format", "json"});
  CHECK(s.code == 0);
  Json sr = Json::parse(s.out);
  CHECK(sr["examined"] == 500);
  CHECK(sr["sampled"] == true);
  CHECK(sr["disagreements"] == 0);
}

TEST_CASE("output is byte-identical across reruns") {
  const std::vector<std::string> args{"analyze", "--prime", "3", "--coeffs", "1,1,6",
                                      "--format", "json"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> sweep{"sweep", "--prime", "3", "--degree", "3", "--threads", "3"};
  CHECK(run(sweep).out == run(sweep).out);
}
