// Runs the latinop executable and inspects its output and exit codes.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run
{
    int code;
    std::string out;
};

// `env` is a prefix of VAR=value assignments for the shell.
Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + std::string(LATINOP_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

struct Workdir
{
    fs::path path;

    Workdir()
    {
        path = fs::temp_directory_path() / ("latinop_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~Workdir() { fs::remove_all(path); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }

    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

const char* kAdd3 = "3 2\n0 1 2\n1 2 0\n2 0 1\n";

}  // namespace

TEST_CASE("check")
{
    Workdir w;
    const auto add = w.write("add3.lhc", kAdd3);
    auto r = run("check " + add);
    CHECK(r.code == 0);
    CHECK(r.out.find("latin: true") != std::string::npos);

    r = run("check " + w.write("rep.lhc", "2 2\n0 1\n0 1\n"));
    CHECK(r.code == 1);
    CHECK(r.out.find("latin: false") != std::string::npos);

    CHECK(run("check " + w.write("bad.lhc", "2 2\n0 1\n0 7\n")).code == 2);
    CHECK(run("check " + w.file("missing.lhc")).code == 2);

    CHECK(run("check --cells --n 2 " + w.write("c.tsv", "0 0 0\n0 1 1\n1 0 1\n1 1 0\n")).code == 0);
    CHECK(run("check --cells --n 2 " + w.write("d.tsv", "0 0\n1 0\n")).code == 1);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("enumerate --n 3").code == 2);
    CHECK(run("enumerate --n 3 --d 2 --bogus").code == 2);
}

TEST_CASE("enumerate and ceilings")
{
    Workdir w;
    auto r = run("enumerate --n 4 --d 2 --count");
    CHECK(r.code == 0);
    CHECK(r.out == "count: 576\n");
    CHECK(run("enumerate --n 9 --d 9 --count").code == 3);
    CHECK(run("--cell-ceiling 10 enumerate --n 4 --d 2 --count").code == 3);
    CHECK(run("enumerate --n 4 --d 2 --count", "LATINOP_CELL_CEILING=10").code == 3);
    CHECK(run("enumerate --n 4 --d 2 --count", "LATINOP_CELL_CEILING=100").code == 0);

    const auto out = w.file("all.lhcs");
    CHECK(run("enumerate --n 3 --d 2 --stream " + out).code == 0);
    const auto text = slurp(out);
    CHECK(text.rfind("3 2\n0 1 2\n1 2 0\n2 0 1\n\n3 2\n", 0) == 0);
    CHECK(run("--jobs 1 enumerate --n 3 --d 2").out == run("--jobs 4 enumerate --n 3 --d 2").out);
    CHECK(run("enumerate --n 3 --d 2").out == text);
}

TEST_CASE("compose, conjugate, act, restrict, pullback")
{
    Workdir w;
    const auto add = w.write("add3.lhc", kAdd3);
    auto r = run("compose " + add + " " + add + " --slot 2");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("3 3\n0 1 2\n1 2 0\n", 0) == 0);
    const auto out = w.file("c.lhc");
    CHECK(run("compose " + add + " " + add + " --slot 1 -o " + out).code == 0);
    CHECK(slurp(out) == r.out);
    CHECK(run("pullback-compose " + add + " " + add + " --slot 2").out == r.out);
    CHECK(run("compose " + add + " " + add + " --slot 3").code == 2);

    CHECK(run("conjugate " + add + " --slot 1").out == "3 2\n0 1 2\n2 0 1\n1 2 0\n");
    CHECK(run("conjugate " + add + " --slot 3").out == kAdd3);
    CHECK(run("act " + add + " --perm \"2 1\"").out == kAdd3);
    CHECK(run("act " + add + " --perm \"1 1\"").code == 2);
    CHECK(run("restrict " + add + " --slot 3 --value 0").out == "3 1\n0 2 1\n");
}

TEST_CASE("random is reproducible")
{
    const auto a = run("random --n 6 --d 2 --seed 9");
    CHECK(a.code == 0);
    CHECK(a.out == run("--jobs 3 random --n 6 --d 2 --seed 9").out);
    CHECK(a.out != run("random --n 6 --d 2 --seed 10").out);
}

TEST_CASE("transversals and delta")
{
    Workdir w;
    const auto add = w.write("add3.lhc", kAdd3);
    CHECK(run("transversals " + add + " --count").out == "transversals: 3\n");
    CHECK(run("transversals " + add + " --limit 1").out == "0\t0\t0\n1\t1\t2\n2\t2\t1\n");
    const auto t = w.write("t.tsv", "0 0 0\n1 1 2\n2 2 1\n");
    auto r = run("delta " + add + " --transversal " + t);
    CHECK(r.code == 0);
    CHECK(r.out == "contained: true\ncomputed: 0\nexpected: 0\npass: true\n");
    CHECK(run("delta " + add + " --transversal " + w.write("u.tsv", "0 0 0\n1 1 1\n")).code == 2);
}

TEST_CASE("canon, orbits, graph, autos, verify-operad")
{
    Workdir w;
    const auto add = w.write("add3.lhc", kAdd3);
    CHECK(run("canon " + add).out == kAdd3);
    CHECK(run("orbits --n 4 --d 2").out == "classes: 2\ntotal: 576\nclass 1: 144\nclass 2: 432\n");
    CHECK(run("canon " + w.write("a5.lhc", "5 2\n0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\n"))
              .code == 3);

    auto r = run("graph " + add + " --stats");
    CHECK(r.out.find("degree: 6\n") != std::string::npos);
    const auto edges = w.file("e.txt");
    CHECK(run("graph " + add + " --edges " + edges).code == 0);
    CHECK(slurp(edges).rfind("0 1\n0 2\n", 0) == 0);

    r = run("autos " + add);
    CHECK(r.out == "count: 2\nautomorphism: 0 1 2\nautomorphism: 0 2 1\n");

    r = run("verify-operad --n 3 --max-degree 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("result: pass") != std::string::npos);
    CHECK(r.out.find("exhaustive: true") != std::string::npos);
}
