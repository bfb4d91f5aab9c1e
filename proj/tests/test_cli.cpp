#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = RINGLAB_CLI_PATH;
const fs::path kCorpus = RINGLAB_CORPUS_DIR;

int run(const std::string& args) {
  int st = std::system((kCli + " " + args).c_str());
  REQUIRE(st != -1);
  return WEXITSTATUS(st);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(bool(f));
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

json slurp_json(const fs::path& p) { return json::parse(slurp(p)); }

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ringlab_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

// an 8-element additive group F2^3 with a distributive but non-associative
// product: e2*e2 = e3, e2*e3 = e1, e3*anything = 0 except e3*e1; the first
// associativity violation sits at (2, 2, 2)
void write_nonassociative_table(const fs::path& p) {
  json add = json::array(), mul = json::array();
  auto bit = [](int x, int i) { return (x >> i) & 1; };
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      add.push_back(x ^ y);
      int a1 = bit(x, 0), a2 = bit(x, 1), a3 = bit(x, 2);
      int b1 = bit(y, 0), b2 = bit(y, 1), b3 = bit(y, 2);
      int c1 = (a1 & b1) ^ (a2 & b3);
      int c2 = (a1 & b2) ^ (a2 & b1);
      int c3 = (a1 & b3) ^ (a2 & b2) ^ (a3 & b1);
      mul.push_back(c1 | (c2 << 1) | (c3 << 2));
    }
  json spec = {{"type", "table"}, {"n", 8}, {"add", add}, {"mul", mul},
               {"one", 1}};
  std::ofstream f(p);
  f << spec.dump(2);
}

}  // namespace

TEST_CASE("classify emits a report and exit 0 on agreement") {
  fs::path d = fresh_dir("classify");
  fs::path out = d / "zmod6.json";
  CHECK(run("classify " + (kCorpus / "zmod06.json").string() + " --out " +
            out.string()) == 0);
  json j = slurp_json(out);
  CHECK(j["ring"] == "zmod(6)");
  CHECK(j["minimal_class_count"] == 4);
  CHECK(j["predicates"]["local"]["value"] == false);
  CHECK(j["predicates"]["vn_regular"]["value"] == true);
  CHECK(j["predicates"]["exchange"]["value"] == true);
  CHECK(j["routes_agree"] == true);
  CHECK(j["implications_ok"] == true);
  CHECK(j.contains("traceability"));

  fs::path out4 = d / "zmod4.json";
  CHECK(run("classify " + (kCorpus / "zmod04.json").string() + " --out " +
            out4.string()) == 0);
  json j4 = slurp_json(out4);
  CHECK(j4["predicates"]["local"]["value"] == true);
  CHECK(j4["predicates"]["semisimple"]["value"] == false);
}

TEST_CASE("classify text format is human-readable") {
  fs::path d = fresh_dir("classify_text");
  fs::path out = d / "report.txt";
  CHECK(run("classify " + (kCorpus / "zmod04.json").string() +
            " --format text --out " + out.string()) == 0);
  std::string text = slurp(out);
  CHECK(text.find("local: true") != std::string::npos);
  CHECK(text.find("routes_agree: true") != std::string::npos);
}

TEST_CASE("a non-associative table is rejected with a witnessing triple") {
  fs::path d = fresh_dir("bad_table");
  fs::path bad = d / "bad.json";
  write_nonassociative_table(bad);
  fs::path err = d / "stderr.txt";
  CHECK(run("classify " + bad.string() + " 2> " + err.string()) == 1);
  std::string msg = slurp(err);
  CHECK(msg.find("fails at (2, 2, 2)") != std::string::npos);
}

TEST_CASE("missing and malformed inputs exit 1") {
  fs::path d = fresh_dir("bad_input");
  CHECK(run("classify " + (d / "missing.json").string() + " 2> /dev/null") ==
        1);
  fs::path garbage = d / "garbage.json";
  std::ofstream(garbage) << "{not json";
  CHECK(run("classify " + garbage.string() + " 2> /dev/null") == 1);
  CHECK(run("no-such-verb 2> /dev/null") == 1);
}

TEST_CASE("rcp writes the poset and a deterministic DOT file") {
  fs::path d = fresh_dir("rcp");
  fs::path out = d / "poset.json", dot = d / "poset.dot";
  CHECK(run("rcp " + (kCorpus / "zmod06.json").string() + " --out " +
            out.string() + " --dot " + dot.string()) == 0);
  json j = slurp_json(out);
  CHECK(j["class_count"] == 9);
  CHECK(j["minimal"].size() == 4);
  CHECK(j["classes"][6]["first"]["generator"] == 2);
  std::string dtext = slurp(dot);
  CHECK(dtext.rfind("digraph rcp {", 0) == 0);
  size_t doubled = 0;
  for (size_t pos = 0; (pos = dtext.find("peripheries=2", pos)) !=
                       std::string::npos;
       ++pos)
    ++doubled;
  CHECK(doubled == 4);

  fs::path out2 = d / "poset2.json", dot2 = d / "poset2.dot";
  CHECK(run("rcp " + (kCorpus / "zmod06.json").string() + " --out " +
            out2.string() + " --dot " + dot2.string()) == 0);
  CHECK(slurp(out) == slurp(out2));
  CHECK(slurp(dot) == slurp(dot2));
}

TEST_CASE("rcp golden counts for a field and a matrix ring") {
  fs::path d = fresh_dir("rcp_counts");
  fs::path out = d / "z2.json";
  CHECK(run("rcp " + (kCorpus / "zmod02.json").string() + " --out " +
            out.string()) == 0);
  CHECK(slurp_json(out)["class_count"] == 3);

  fs::path m = d / "m2z2.json";
  CHECK(run("rcp " + (kCorpus / "m2z2.json").string() + " --out " +
            m.string()) == 0);
  json mj = slurp_json(m);
  CHECK(mj["class_count"] == 15);
  CHECK(mj["minimal"].size() == 8);
}

TEST_CASE("caps exit 3") {
  CHECK(run("rcp " + (kCorpus / "zmod06.json").string() +
            " --cap-full 4 2> /dev/null") == 3);
  CHECK(run("classify " + (kCorpus / "m2z4.json").string() +
            " --cap-full 100 2> /dev/null") == 3);
}

TEST_CASE("chains and verify-props succeed on zmod(6)") {
  fs::path d = fresh_dir("chains");
  fs::path out = d / "chains.json";
  CHECK(run("chains " + (kCorpus / "zmod06.json").string() + " --out " +
            out.string()) == 0);
  json j = slurp_json(out);
  CHECK(j["chain_count"].get<int>() > 0);
  CHECK(j["chains"][0].contains("lower_bounds"));

  CHECK(run("verify-props " + (kCorpus / "zmod06.json").string() + " --out " +
            (d / "props.json").string()) == 0);
  json p = slurp_json(d / "props.json");
  CHECK(p["ok"] == true);
}

TEST_CASE("audit isolates per-ring failures and is parallel-deterministic") {
  fs::path d = fresh_dir("audit");
  fs::path corpus = d / "corpus";
  fs::create_directories(corpus);
  for (const char* f : {"zmod02.json", "zmod06.json", "uptri2z2.json"})
    fs::copy_file(kCorpus / f, corpus / f);

  fs::path a1 = d / "a1.json", a2 = d / "a2.json";
  CHECK(run("audit " + corpus.string() + " --jobs 1 --out " + a1.string()) ==
        0);
  CHECK(run("audit " + corpus.string() + " --jobs 3 --out " + a2.string()) ==
        0);
  CHECK(slurp(a1) == slurp(a2));
  json j = slurp_json(a1);
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["pass"] == 3);
  CHECK(j["ok"] == true);

  // drop a malformed spec in: that ring errors, the others still pass
  write_nonassociative_table(corpus / "bad.json");
  fs::path a3 = d / "a3.json";
  CHECK(run("audit " + corpus.string() + " --out " + a3.string()) == 1);
  json j3 = slurp_json(a3);
  CHECK(j3["summary"]["total"] == 4);
  CHECK(j3["summary"]["pass"] == 3);
  CHECK(j3["summary"]["error_input"] == 1);
  for (const auto& rec : j3["rings"])
    if (rec["file"] == "bad.json") CHECK(rec["status"] == "error");
}

TEST_CASE("audit of an empty directory warns and exits 0") {
  fs::path d = fresh_dir("audit_empty");
  fs::path corpus = d / "corpus";
  fs::create_directories(corpus);
  fs::path out = d / "out.json", err = d / "err.txt";
  CHECK(run("audit " + corpus.string() + " --out " + out.string() + " 2> " +
            err.string()) == 0);
  json j = slurp_json(out);
  CHECK(j["summary"]["total"] == 0);
  CHECK(j["ok"] == true);
  CHECK(slurp(err).find("no spec files") != std::string::npos);
}
