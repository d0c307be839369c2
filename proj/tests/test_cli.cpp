#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "lexirank/cli.hpp"
#include "lexirank/report.hpp"

namespace fs = std::filesystem;
using namespace lexirank;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("lexirank_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& content) const {
        const auto p = path / name;
        std::ofstream(p, std::ios::binary) << content;
        return p.string();
    }
};

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "lexirank");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kHeader = "text_id,language,annotator_id,label,text\n";

}  // namespace

TEST_CASE("build writes a lexicon") {
    TempDir dir;
    const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,☀ nice\nt2,en,a1,1,☀☀\n");
    const auto out = (dir.path / "lex.csv").string();
    const auto r = run({"build", "--input", corpus, "--output", out, "--min-occurrences", "1", "--map",
                        (dir.path / "map.svg").string(), "--bars", (dir.path / "bars").string(), "--html",
                        (dir.path / "index.html").string()});
    CHECK(r.code == 0);
    const std::string csv = slurp(out);
    CHECK(csv == std::string(report::kLexiconHeader) +
                     "\n☀,U+2600,3,0.3333,0,0,3,0.1667,0.1667,0.6667,0.5000,0.7638,0.4410\n");
    CHECK(fs::exists(dir.path / "map.svg"));
    CHECK(fs::exists(dir.path / "bars" / "U+2600.svg"));
    CHECK(fs::exists(dir.path / "index.html"));
    CHECK(r.out.find("lexicon entries: 1") != std::string::npos);
}

TEST_CASE("build writes CSV to stdout without --output") {
    TempDir dir;
    const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,☀\n");
    const auto r = run({"build", "-i", corpus, "--min-occurrences", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind(report::kLexiconHeader, 0) == 0);
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run({"build", "--input", (dir.path / "missing.csv").string()}).code == 2);
    const auto bad_label = dir.file("b.csv", kHeader + "t1,en,a1,1,ok\nt2,en,a1,2,\"x\"\n");
    const auto r = run({"build", "--input", bad_label});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
    const auto malformed = dir.file("m.csv", kHeader + "t1,en,a1\n");
    const auto m = run({"build", "--input", malformed});
    CHECK(m.code == 2);
    CHECK(m.err.find("line 2") != std::string::npos);
    CHECK(run({"build"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "--input", bad_label, "--min-occurrences", "0"}).code == 2);
}

TEST_CASE("the installed executable honours the exit-code contract") {
    TempDir dir;
    const std::string cmd = std::string(LEXIRANK_CLI_PATH) + " build --input " + (dir.path / "nope.csv").string() +
                            " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("split-stats") {
    TempDir dir;
    SUBCASE("no symbol texts") {
        const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,hi\nt2,en,a1,0,yo\n");
        const auto r = run({"split-stats", "--input", corpus});
        CHECK(r.code == 0);
        CHECK(r.out.find("not applicable") != std::string::npos);
    }
    SUBCASE("identical subsets") {
        const auto corpus = dir.file("c.csv", kHeader + "1,en,a,1,☀\n2,en,a,-1,☀\n3,en,a,1,x\n4,en,a,-1,y\n");
        const auto r = run({"split-stats", "--input", corpus});
        CHECK(r.code == 0);
        CHECK(r.out.find("t = 0.00") != std::string::npos);
    }
    SUBCASE("csv format") {
        const auto corpus = dir.file("c.csv", kHeader + "1,en,a,1,☀\n2,en,a,-1,☀\n3,en,a,1,x\n4,en,a,0,y\n");
        const auto r = run({"split-stats", "--input", corpus, "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out.find("subset,negative,neutral,positive,total,mean,sd,sem") != std::string::npos);
        CHECK(r.out.find("with symbols,1,0,1,2,0.000,") != std::string::npos);
    }
}

TEST_CASE("agreement") {
    TempDir dir;
    SUBCASE("single perfectly agreeing pair") {
        const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,☀\nt1,en,a2,1,☀\n");
        const auto r = run({"agreement", "--input", corpus, "--output", (dir.path / "m").string()});
        CHECK(r.code == 0);
        const auto acc = r.out.find("Accuracy");
        REQUIRE(acc != std::string::npos);
        CHECK(r.out.substr(acc, r.out.find('\n', acc) - acc).find("1.000") != std::string::npos);
        CHECK(fs::exists(dir.path / "m" / "coincidence_with.csv"));
        CHECK(slurp(dir.path / "m" / "coincidence_with.csv") ==
              "label,negative,neutral,positive\nnegative,0,0,0\nneutral,0,0,0\npositive,0,0,2\n");
    }
    SUBCASE("no pairs") {
        const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,☀\n");
        const auto r = run({"agreement", "--input", corpus});
        CHECK(r.code == 0);
        CHECK(r.out.find("none") != std::string::npos);
    }
    SUBCASE("self mode") {
        const auto corpus = dir.file("c.csv", kHeader + "t1,en,a1,1,x\nt1,en,a1,0,x\nt1,en,a2,1,x\n");
        const auto r = run({"agreement", "--input", corpus, "--pair-mode", "self"});
        CHECK(r.code == 0);
        CHECK(r.out.find("pairs                0                1") != std::string::npos);
    }
}

TEST_CASE("positions") {
    TempDir dir;
    const auto corpus = dir.file("c.csv", kHeader + "1,en,a,1,ab☀\n2,en,a,0,x☁\n3,en,a,-1,☂\n");
    const auto r = run({"positions", "--input", corpus, "--min-occurrences", "1"});
    CHECK(r.code == 0);
    // "☂" alone has position 0, the others 1
    CHECK(r.out.find("mean position (all occurrences): 0.6667") != std::string::npos);
    const auto ends = dir.file("e.csv", kHeader + "1,en,a,1,ab☀\n2,en,a,0,x☁\n");
    CHECK(run({"positions", "--input", ends, "--min-occurrences", "1"}).out.find(": 1.0000") != std::string::npos);
}

TEST_CASE("correlate-counts with an identical counts file") {
    TempDir dir;
    std::string rows;
    const char* syms[] = {"☀", "☁", "☂", "☃", "★"};
    for (int i = 0; i < 5; ++i)
        for (int k = 0; k <= i * i; ++k) rows += "t" + std::to_string(i) + "_" + std::to_string(k) + ",en,a,1," + syms[i] + "\n";
    const auto corpus = dir.file("c.csv", kHeader + rows);
    const auto lex = (dir.path / "lex.csv").string();
    REQUIRE(run({"build", "--input", corpus, "--output", lex, "--min-occurrences", "1"}).code == 0);
    const auto counts = dir.file("counts.csv", "codepoint,count\nU+2600,1\nU+2601,2\nU+2602,5\nU+2603,10\nU+2605,17\nU+2764,3\n");
    const auto r = run({"correlate-counts", "--input", lex, "--counts", counts, "--min-occurrences", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("common: 5") != std::string::npos);
    CHECK(r.out.find("only in external: 1") != std::string::npos);
    CHECK(r.out.find("pearson: +1.000*") != std::string::npos);
    CHECK(r.out.find("spearman: +1.000*") != std::string::npos);

    const auto few = run({"correlate-counts", "--input", lex, "--counts", counts, "--min-occurrences", "10"});
    CHECK(few.out.find("n/a") != std::string::npos);
}

TEST_CASE("compare-langs and render") {
    TempDir dir;
    std::string rows;
    const char* syms[] = {"☀", "☁", "☂", "☃", "★", "☎"};
    int id = 0;
    for (const char* lang : {"en", "es"})
        for (int i = 0; i < 6; ++i)
            for (int k = 0; k < 6; ++k)
                rows += std::to_string(id++) + "," + lang + ",a," + (k < i ? "1" : "-1") + "," + syms[i] + "\n";
    const auto corpus = dir.file("c.csv", kHeader + rows);
    const auto r = run({"compare-langs", "--input", corpus});
    CHECK(r.code == 0);
    CHECK(r.out.find("en") != std::string::npos);
    CHECK(r.out.find("+1.000*") != std::string::npos);

    const auto lex = (dir.path / "lex.csv").string();
    REQUIRE(run({"build", "--input", corpus, "--output", lex}).code == 0);
    const auto svg = run({"render", "--input", lex});
    CHECK(svg.code == 0);
    CHECK(svg.out.rfind("<?xml", 0) == 0);
    const auto bars = run({"render", "--input", lex, "--bars", (dir.path / "bars").string()});
    CHECK(bars.code == 0);
    CHECK(fs::exists(dir.path / "bars" / "U+2600.svg"));
}
