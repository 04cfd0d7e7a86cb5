#include <sstream>

#include "doctest.h"
#include "rrcode/errors.hpp"
#include "rrcode/jobspec.hpp"
#include "testutil.hpp"

using namespace rrcode;

namespace {

const char* kGf5Job =
    "# worked (6,3,4) code over GF(5)\n"
    "field p=5 t=1\n"
    "curve f=1,4,0,0,0,1 h=0\n"
    "divisor (0,1)*1 (1,4)*1 inf*2\n"
    "g (2,1) (2,4) (3,1) (3,4) (4,1) (4,4)\n"
    "cmd encode\n";

const char* kGf31Job =
    "field p=31 t=1\n"
    "curve f=0,1,12,7,25,18,12,18 h=0 singular_ok\n"
    "divisor (0,0)*1 (1,0)*2 inf*1\n"
    "kappa 0,30,1\n"
    "g (3,25) (4,19) (5,11) (6,1)\n"
    "cmd encode\n";

std::string run_text(const std::string& text) {
    std::ostringstream out;
    run_job(parse_jobspec(text), out);
    return out.str();
}

}  // namespace

TEST_CASE("parsing the worked GF(5) job") {
    JobSpec job = parse_jobspec(kGf5Job);
    CHECK(job.field.p() == 5);
    CHECK(job.command == "encode");
    REQUIRE(job.curve);
    CHECK(job.curve->genus() == 2);
    ReducedDivisor rd = decompose_reduced(*job.curve, job.divisor);
    CHECK(rd.n == 4);
    CHECK(rd.j == 2);
    CHECK(job.gpoints.size() == 6);
}

TEST_CASE("parse errors name the line") {
    SUBCASE("empty file") {
        try {
            parse_jobspec("");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(std::string(e.what()).find("missing field") != std::string::npos);
        }
    }
    SUBCASE("unknown directive") {
        try {
            parse_jobspec("field p=5 t=1\nbogus x\ncmd points\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("unknown command") {
        CHECK_THROWS_AS(parse_jobspec("field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ncmd frobnicate\n"),
                        ParseError);
    }
    SUBCASE("duplicate directive") {
        CHECK_THROWS_AS(parse_jobspec("field p=5 t=1\nfield p=7 t=1\ncmd points\n"), ParseError);
    }
    SUBCASE("missing curve for a command that needs one") {
        CHECK_THROWS_AS(parse_jobspec("field p=5 t=1\ncmd points\n"), ParseError);
    }
    SUBCASE("malformed point") {
        CHECK_THROWS_AS(
            parse_jobspec("field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ng (2;1)\ncmd basis\n"),
            ParseError);
    }
}

TEST_CASE("semantic errors carry the source line") {
    SUBCASE("divisor point off the curve") {
        try {
            parse_jobspec("field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ndivisor (0,2)*1\ncmd basis\n");
            FAIL("expected SemanticError");
        } catch (const SemanticError& e) {
            CHECK(e.line() == 3);
        }
    }
    SUBCASE("composite p") {
        CHECK_THROWS_AS(parse_jobspec("field p=6 t=1\ncurve f=1,4,0,0,0,1 h=0\ncmd points\n"),
                        SemanticError);
    }
    SUBCASE("zero multiplicity") {
        CHECK_THROWS_AS(
            parse_jobspec("field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ndivisor (0,1)*0\ncmd basis\n"),
            SemanticError);
    }
    SUBCASE("singular curve without the waiver") {
        std::string text =
            "field p=31 t=1\ncurve f=0,1,12,7,25,18,12,18 h=0\ncmd points\n";
        CHECK_THROWS_AS(parse_jobspec(text), SemanticError);
    }
}

TEST_CASE("encode output for the worked GF(5) job") {
    std::string out = run_text(kGf5Job);
    std::string gen_block =
        "1\t1\t1\t1\t1\t1\n"
        "2\t2\t3\t3\t4\t4\n"
        "4\t3\t1\t4\t2\t1\n"
        "---\n";
    CHECK(out.rfind(gen_block, 0) == 0);
    CHECK(out.find("code m=6 k=3 d=4 mds=true goppa_bound=2\n") != std::string::npos);
}

TEST_CASE("encode output for the GF(31) job with kappa override") {
    std::string out = run_text(kGf31Job);
    CHECK(out ==
          "1\t1\t1\t1\n"
          "30\t20\t15\t12\n"
          "---\n"
          "16\t14\t1\t0\n"
          "7\t23\t0\t1\n"
          "---\n"
          "code m=4 k=2 d=3 mds=true goppa_bound=0\n");
}

TEST_CASE("basis command output") {
    std::string text =
        "field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ndivisor (0,1)*1 (1,4)*1 inf*2\ncmd basis\n";
    CHECK(run_text(text) ==
          "dim=3 case=with-psi\n"
          "1\n"
          "x\n"
          "(1 + 3*x + y)/(4*x + x^2)\n");
}

TEST_CASE("dim command with oracle") {
    std::string text =
        "field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ndivisor (0,1)*1 (1,4)*1 inf*2\ncmd dim --oracle\n";
    CHECK(run_text(text) == "dim=3\noracle=3\n");
}

TEST_CASE("dim command on a genus-5 curve, j = 4 sequence") {
    // y^2 = x^11 + x + 1 over GF(11): f' = 1, so the curve is nonsingular,
    // and on rational points f(x) = 2x + 1.
    std::vector<int> expect = {1, 1, 2, 3, 4};  // n = 4..8
    for (int omega = 0; omega <= 4; ++omega) {
        std::string text =
            "field p=11 t=1\n"
            "curve f=1,1,0,0,0,0,0,0,0,0,0,1 h=0\n"
            "divisor (0,1)*1 (1,5)*1 (2,4)*1 (4,3)*1" +
            std::string(omega ? " inf*" + std::to_string(omega) : "") + "\ncmd dim --oracle\n";
        std::string want = "dim=" + std::to_string(expect[omega]) + "\noracle=" +
                           std::to_string(expect[omega]) + "\n";
        CHECK(run_text(text) == want);
    }
}

TEST_CASE("dim command defaults to the zero divisor") {
    CHECK(run_text("field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ncmd dim\n") == "dim=1\n");
}

TEST_CASE("points command lists the rational points") {
    std::string text = "field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ncmd points\n";
    std::string out = run_text(text);
    CHECK(out.find("(2,1)\n") != std::string::npos);
    CHECK(out.rfind("inf\n") == out.size() - 4);
}

TEST_CASE("fitcurve command") {
    std::string text =
        "field p=31 t=1\n"
        "g (0,0) (3,6) (4,12) (5,20) (6,30) (7,12)\n"
        "cmd fitcurve shift=1 exps=2,7\n";
    CHECK(run_text(text) ==
          "shift=1 exponents=2..7\n"
          "shifted=22,10,26,3,14,18\n"
          "plain=0,1,12,7,25,18,12,18\n");
    CHECK_THROWS_AS(parse_jobspec("field p=31 t=1\ng (0,0)\ncmd fitcurve shift=1\n"), ParseError);
}

TEST_CASE("distance command reports without matrices") {
    std::string text =
        "field p=5 t=1\ncurve f=1,4,0,0,0,1 h=0\ndivisor (0,1)*1 (1,4)*1 inf*2\n"
        "g (2,1) (2,4) (3,1) (3,4) (4,1) (4,4)\ncmd distance\n";
    CHECK(run_text(text) == "code m=6 k=3 d=4 mds=true goppa_bound=2\n");
}

TEST_CASE("extension-field jobs use the digit syntax") {
    std::string text =
        "field p=2 t=2 mod=1,1,1\n"
        "curve f=0,1,0,1,0,1 h=1\n"
        "divisor ([1,1],0)*1 inf*3\n"
        "g (0,0) (0,1) (1,[0,1]) (1,[1,1]) ([0,1],0) ([0,1],1)\n"
        "cmd encode\n";
    std::string out = run_text(text);
    CHECK(out.find("[1,0]\t[1,0]\t[1,0]\t[1,0]\t[1,0]\t[1,0]\n") == 0);
    CHECK(out.find("code m=6 k=3 d=4 mds=true goppa_bound=2\n") != std::string::npos);
}

TEST_CASE("round trip: parse(render(job)) == job") {
    for (const char* text : {kGf5Job, kGf31Job}) {
        JobSpec job = parse_jobspec(text);
        CHECK(parse_jobspec(render(job)) == job);
    }
    std::string fits =
        "field p=31 t=1\ng (0,0) (3,6)\ncmd fitcurve shift=1 exps=2,3\n";
    JobSpec job = parse_jobspec(fits);
    CHECK(parse_jobspec(render(job)) == job);
    std::string hex =
        "field p=2 t=2 mod=1,1,1\ncurve f=0,1,0,1,0,1 h=1\ndivisor ([1,1],0)*1 inf*3\n"
        "g (0,0) (0,1)\ncmd basis\n";
    JobSpec hexjob = parse_jobspec(hex);
    CHECK(parse_jobspec(render(hexjob)) == hexjob);
}

TEST_CASE("output is deterministic") {
    std::string a = run_text(kGf31Job);
    std::string b = run_text(kGf31Job);
    CHECK(a == b);
}

TEST_CASE("parser survives token soup") {
    std::mt19937_64 rng(53);
    const char* words[] = {"field", "curve",  "divisor", "g",     "cmd",   "kappa", "p=5",
                           "t=1",   "f=1,1",  "h=0",     "(0,1)", "*2",    "inf*1", "[1,",
                           "basis", "encode", "mod=",    "p=x",   "(1",    "))",    "#",
                           "--oracle", "exps=1", "shift=", "=",   ",",     "t=0"};
    for (int rep = 0; rep < 300; ++rep) {
        std::string text;
        int lines = static_cast<int>(rng() % 6);
        for (int l = 0; l < lines; ++l) {
            int toks = static_cast<int>(rng() % 5);
            for (int t = 0; t < toks; ++t) {
                if (t) text += " ";
                text += words[rng() % (sizeof(words) / sizeof(words[0]))];
            }
            text += "\n";
        }
        try {
            JobSpec job = parse_jobspec(text);
            std::ostringstream sink;
            run_job(job, sink);
        } catch (const Error&) {
            // any structured error is acceptable; crashes or foreign
            // exception types are not
        }
    }
}
