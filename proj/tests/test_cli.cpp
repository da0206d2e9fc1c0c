#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "alcomb/json_io.hpp"

using namespace alcomb;

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ALCOMB_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
    out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dim command") {
  RunResult r = run_cli("dim nabla --weight 7,0 --n 2 --c 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "wfd"));
  CHECK(contains(r.output, "= 2"));

  RunResult simple = run_cli("dim simple --weight 0,0 --n 2 --c 3");
  CHECK(simple.exit_code == 0);
  CHECK(contains(simple.output, "= 0"));

  RunResult js = run_cli("dim nabla --weight 7,0 --n 2 --c 3 --format json");
  CHECK(js.exit_code == 0);
  DimReport rep = json::parse(js.output).get<DimReport>();
  CHECK(rep.value == 2);
  CHECK(rep.invariant == "wfd");
  CHECK(rep.label.weight == Weight({7, 0}));
}

TEST_CASE("dim rejects singular weights with exit code 2") {
  RunResult r = run_cli("dim nabla --weight 6,1 --n 2 --c 3");
  CHECK(r.exit_code == 2);
  CHECK(contains(r.output, "regular weights only"));
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("dim nabla --weight abc --n 2 --c 3").exit_code == 1);
  CHECK(run_cli("dim nabla --c 3").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("schur --n 2 --c 3").exit_code == 1);  // needs --r or --sweep
  CHECK(run_cli("dim nabla --weight 7,0 --n 3 --c 3").exit_code == 1);
}

TEST_CASE("dim block table") {
  RunResult r = run_cli("dim nabla --weight 7,0 --n 2 --c 3 --block --format json");
  CHECK(r.exit_code == 0);
  json doc = json::parse(r.output);
  auto rows = doc.at("block").get<std::vector<BlockDimRow>>();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].inj_L == 2);
  CHECK(rows[2].inj_nabla == 0);

  RunResult csv = run_cli("dim nabla --weight 7,0 --n 2 --c 3 --block --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(contains(csv.output,
                 "mu,inj_L,proj_L,inj_delta,proj_nabla,inj_nabla,proj_delta,"
                 "status"));
  CHECK(contains(csv.output, "\"4,3\",2,2,2,2,2,2,exact"));
}

TEST_CASE("schur command") {
  RunResult r = run_cli("schur --n 2 --r 7 --c 3 --format json");
  CHECK(r.exit_code == 0);
  SchurDimResult res = json::parse(r.output).get<SchurDimResult>();
  CHECK(res.wfd == 2);
  CHECK(res.glob == 4);
  CHECK(res.status == Status::exact);
  REQUIRE(res.witness);
  CHECK(*res.witness == Weight({7, 0}));

  RunResult sweep = run_cli("schur --n 2 --c 3 --sweep 3 --format csv");
  CHECK(sweep.exit_code == 0);
  CHECK(contains(sweep.output, "n,r,c,mode,wfd,glob,status,witness"));
  CHECK(contains(sweep.output, "2,3,3,classical,1,2,exact,\"3,0\""));

  RunResult q = run_cli("schur --n 3 --r 6 --c 3 --format json --quantum");
  SchurDimResult qres = json::parse(q.output).get<SchurDimResult>();
  CHECK(qres.wfd == 4);
  CHECK(qres.glob == 8);
  CHECK(qres.mode == Mode::quantum);
}

TEST_CASE("chain and orbit commands") {
  RunResult chain = run_cli("chain --weight 7,0 --n 2 --c 3");
  CHECK(chain.exit_code == 0);
  CHECK(contains(chain.output, "(4,3) ↑ (5,2) ↑ (7,0)"));

  RunResult orbit = run_cli("orbit --weight 7,0 --n 2 --c 3 --format json");
  CHECK(orbit.exit_code == 0);
  SaturatedSet pi = json::parse(orbit.output).get<SaturatedSet>();
  CHECK(pi.members.size() == 3);
}

TEST_CASE("verify commands") {
  RunResult pieri = run_cli("verify pieri --m 1 --j 1 --n 3 --c 3");
  CHECK(pieri.exit_code == 0);
  CHECK(contains(pieri.output, "ok"));

  RunResult pieri_json =
      run_cli("verify pieri --m 1 --j 1 --n 3 --c 3 --format json");
  PieriReport rep = json::parse(pieri_json.output).get<PieriReport>();
  CHECK(rep.ok);
  CHECK(rep.constituents.size() == 2);

  RunResult lengths =
      run_cli("verify lengths --n 2 --c 3 --dmax 2 --format json");
  CHECK(lengths.exit_code == 0);
  // JSON lines, each a verification report
  std::size_t pos = 0, count = 0;
  while (pos < lengths.output.size()) {
    std::size_t nl = lengths.output.find('\n', pos);
    if (nl == std::string::npos) break;
    VerificationReport vr =
        json::parse(lengths.output.substr(pos, nl - pos))
            .get<VerificationReport>();
    CHECK(vr.ok);
    pos = nl + 1;
    ++count;
  }
  CHECK(count > 0);

  RunResult linkage =
      run_cli("verify linkage --weight 4,0 --n 2 --c 3 --radius 6");
  CHECK(linkage.exit_code == 0);
  CHECK(contains(linkage.output, "ok"));
}

TEST_CASE("category O table") {
  RunResult r = run_cli("table o-dims --type A --rank 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "glob 6"));

  RunResult js = run_cli("table o-dims --type A --rank 3 --format json");
  json doc = json::parse(js.output);
  CHECK(doc.at("glob_O") == 12);
  CHECK(doc.at("rows").size() == 7);  // l_w = 0..6

  CHECK(run_cli("table o-dims --type B --rank 2").exit_code == 1);
}

TEST_CASE("identical invocations print identical bytes") {
  for (const std::string& cmd :
       {std::string("schur --n 3 --c 5 --sweep 8 --format json"),
        std::string("dim nabla --weight 9,3,0 --n 3 --c 5 --block --format json"),
        std::string("orbit --weight 9,3,0 --n 3 --c 5 --format json")}) {
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
  }
}
