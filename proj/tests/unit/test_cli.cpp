#include "commands.hpp"

#include "delaycode/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

namespace {

std::string data(const std::string& name) { return std::string(DELAYCODE_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = delaycode::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("delaycode_cli_" + name)).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("orbits") {
    const Run count = run({"orbits", "--k", "4"});
    CHECK(count.code == 0);
    CHECK(contains(count.out, "a_4 = 231"));
    const Run list = run({"orbits", "--k", "2", "--mode", "enumerate"});
    CHECK(list.code == 0);
    CHECK(contains(list.out, "6 classes"));
    const Run verify = run({"orbits", "--k", "3", "--mode", "verify"});
    CHECK(verify.code == 0);
    CHECK(contains(verify.out, "OK: 21 classes"));
  }

  TEST_CASE("validate") {
    CHECK(run({"validate", data("three_table_rct.json")}).code == 0);
    CHECK(run({"validate", data("three_table_rct_transport.json")}).code == 0);
    CHECK(run({"validate", data("three_table_tuple.json")}).code == 0);
    const Run empty = run({"validate", data("all_empty.json")});
    CHECK(empty.code == 1);
    CHECK(contains(empty.out, "extendable: false"));
    const Run bad = run({"validate", data("malformed.json")});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "line"));
    CHECK(run({"validate", data("three_table_tuple.json"), "--kind", "rct"}).code == 2);
  }

  TEST_CASE("analyze") {
    const Run t = run({"analyze", data("three_table_tuple.json"), "--potentials"});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "L = 85/24"));
    CHECK(contains(t.out, "h (on R_F"));
    CHECK(contains(run({"analyze", data("prefix_code.json")}).out, "L = 3/2"));
    CHECK(contains(run({"analyze", data("prefix_code.json"), "--mu", "1/3,1/3,1/3"}).out,
                   "L = 5/3"));
    const Run r = run({"analyze", data("three_table_rct.json")});
    CHECK(contains(r.out, "L~ = 9/4"));
    CHECK(run({"analyze", data("prefix_code.json"), "--mu", "0.5,0.25,0.25"}).code == 2);
  }

  TEST_CASE("reduce and expand") {
    const std::string out = temp_path("mirror_rct.json");
    const std::string trace = temp_path("mirror_trace.json");
    const Run r = run({"reduce", data("mirror_pair.json"), "-o", out, "--trace", trace});
    CHECK(r.code == 0);
    CHECK(contains(r.err, "tables: 2 -> 1"));
    const auto doc = delaycode::load_json_file(out);
    CHECK(delaycode::document_kind(doc) == "rct");
    CHECK(delaycode::load_json_file(trace)["monotone"] == true);
    const Run e = run({"expand", out});
    CHECK(e.code == 0);
    CHECK(contains(e.err, "L of the expansion = 2"));
    CHECK(run({"reduce", data("all_empty.json")}).code == 1);
    std::remove(out.c_str());
    std::remove(trace.c_str());
  }

  TEST_CASE("encode and decode") {
    const std::string rct = data("three_table_rct.json");
    const std::string seed = "00,01,10,11|000";
    const Run raw = run({"encode", rct, "--seed", seed, "--text", "acdb", "--raw"});
    CHECK(raw.code == 0);
    CHECK(raw.out == "1011110100\n");
    const Run dec = run({"decode", rct, "--seed", seed, "--bits", "1011110100"});
    CHECK(dec.code == 0);
    CHECK(dec.out == "acdb\n");

    const std::string stream = temp_path("stream.txt");
    CHECK(run({"encode", rct, "--seed", seed, "--text", "ddcbaab", "-o", stream}).code == 0);
    const Run back = run({"decode", rct, "--input", stream});
    CHECK(back.code == 0);
    CHECK(back.out == "ddcbaab\n");
    std::remove(stream.c_str());

    CHECK(run({"decode", rct, "--seed", seed, "--bits", "1"}).code == 1);
    CHECK(run({"decode", rct, "--seed", seed, "--bits", "10x"}).code == 2);
    CHECK(run({"encode", rct, "--seed", seed, "--text", "axe"}).code == 2);
  }

  TEST_CASE("micro-search") {
    const Run r = run({"micro-search", "--mu", "1/2,1/4,1/4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "L~min = 3/2"));
    CHECK(contains(r.out, "matches huffman: yes"));
    CHECK(run({"micro-search", "--mu", "1/2,1/2", "--max-len", "9"}).code == 1);
  }

  TEST_CASE("selftest and usage errors") {
    const Run s = run({"selftest"});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "selftest passed"));
    CHECK(run({}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}
