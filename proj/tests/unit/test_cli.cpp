#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "combquad/cli.hpp"
#include "combquad/combine.hpp"
#include "combquad/error.hpp"
#include "combquad/families.hpp"
#include "combquad/io.hpp"

using namespace combquad;
using testing::R;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("combquad-cli-" + std::to_string(::getpid()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string rule(const std::string& name, const QuadRule& q) const {
        io::write_rule_file(file(name), q);
        return file(name);
    }

private:
    fs::path path_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("rule file round trip") {
    const ExactScalar s = surd_canonicalize(R("3/5"));
    for (const QuadRule& q : {catalog::simpson(), catalog::gauss2(), gauss3(), catalog::open_newton_cotes5(),
                              combine_pair(catalog::gauss2(), catalog::simpson()).flattened,
                              QuadRule({{-s, R("5/9")}, {R("1/7"), R("-3/11")}})}) {
        const io::Json j = io::rule_to_json(q);
        const QuadRule back = io::rule_from_json(io::Json::parse(j.dump()));
        CHECK(back == q);
        CHECK(back.label() == q.label());
    }
    const io::Json g2 = io::rule_to_json(catalog::gauss2());
    CHECK(g2["points"][0]["node"]["sqrt"] == "1/3");
    CHECK(g2["points"][0]["node"]["sign"] == -1);
    CHECK(io::node_from_json(io::Json{{"sqrt", "12"}, {"sign", 1}}) == ExactScalar::surd(2, 3));
    CHECK_THROWS_AS(io::node_to_json(ExactScalar(1) + s), RepresentationError);
    CHECK_THROWS_AS(io::rule_from_json(io::Json::parse(R"({"points":[{"node":"1/2","weight":0.5}]})")), DomainError);
    CHECK_THROWS_AS(io::rule_from_json(io::Json::parse(R"({"points":[{"node":{"sqrt":"-1"},"weight":"1"}]})")),
                    DomainError);
    CHECK(io::parse_rational_list("1/2, 1/3,0.25") == std::vector<Rational>{R("1/2"), R("1/3"), R("1/4")});
    CHECK_THROWS_AS(io::parse_rational_list("1/2,,1/3"), DomainError);
    CHECK(io::parse_count_list("2,4,8") == std::vector<long>{2, 4, 8});
    CHECK_THROWS_AS(io::parse_count_list("2,0"), DomainError);
}

TEST_CASE("classify") {
    TempDir dir;
    const Run r = cli({"classify", "--rule", dir.rule("s.json", catalog::simpson())});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "degree=3 gamma=-4/15 sign=negative");
    CHECK(r.out.find("mu=2/5") != std::string::npos);
    CHECK(r.out.find("mu_Q=2/3") != std::string::npos);
    CHECK(r.out.find("gamma_decimal=-2.6666666666666666667e-01") != std::string::npos);
    const Run j = cli({"classify", "--json", "--rule", dir.file("s.json")});
    const io::Json parsed = io::Json::parse(j.out);
    CHECK(parsed["degree"] == 3);
    CHECK(parsed["gamma"] == "-4/15");
    CHECK(parsed["sign"] == "negative");
}

TEST_CASE("combine and mean") {
    TempDir dir;
    const std::string m = dir.rule("m.json", catalog::midpoint());
    const std::string t = dir.rule("t.json", catalog::trapezoidal());
    const Run r = cli({"combine", "--a", m, "--b", t, "--least-squares-check"});
    REQUIRE(r.code == 0);
    const io::Json j = io::Json::parse(r.out);
    CHECK(j["alpha"] == "2/3");
    CHECK(j["beta"] == "1/3");
    CHECK(j["bracketing"] == true);
    CHECK(j["output"]["degree"] == 3);
    CHECK(j["least_squares"]["agrees"] == true);
    CHECK(io::rule_from_json(j["flattened"]) == catalog::simpson());

    const std::string g = dir.rule("g3.json", gauss3());
    const std::string nc = dir.rule("nc5.json", catalog::open_newton_cotes5());
    const io::Json mean = io::Json::parse(cli({"mean", "--a", g, "--b", nc}).out);
    CHECK(mean["alpha"] == "-223/77");
    CHECK(mean["output"]["gamma"] == "16/1125");
    const QuadRule w = io::rule_from_json(mean["flattened"]);
    CHECK(w == mean_rule(gauss3(), catalog::open_newton_cotes5()).flattened);

    const Run same = cli({"mean", "--a", m, "--b", m});
    CHECK(io::Json::parse(same.out)["alpha"] == "1/2");
    const Run bad = cli({"combine", "--a", m, "--b", dir.rule("s.json", catalog::simpson())});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error: combine:") == 0);
}

TEST_CASE("build") {
    TempDir dir;
    const Run r = cli({"build", "--nodes", "1/2,1/3,1/4", "--base", "midpoint", "--out", dir.file("w3.json")});
    REQUIRE(r.code == 0);
    const io::Json j = io::Json::parse(r.out);
    CHECK(j["coefficients"] == io::Json{"-4426/105", "5344/315", "-5589/49", "309248/2205"});
    CHECK(j["degree"] == 7);
    CHECK(j["gamma"] == "1817/15120");
    CHECK(j["gamma_decimal"].get<std::string>().rfind("1.2017195767195767196e-01", 0) == 0);
    const QuadRule saved = io::read_rule_file(dir.file("w3.json"));
    CHECK(saved == io::rule_from_json(j["flattened"]));
    CHECK(classify(saved).degree == 7);

    const Run a = cli({"build", "--random", "--seed", "7", "--k", "4", "--tol", "1/1000"});
    const Run b = cli({"build", "--random", "--seed", "7", "--k", "4", "--tol", "1/1000", "--base", "trapezoid"});
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(io::Json::parse(a.out)["nodes"] == io::Json::parse(b.out)["nodes"]);
    CHECK(io::Json::parse(a.out)["degree"] == 9);
    CHECK(io::Json::parse(b.out)["base"] == "trapezoid");

    CHECK(cli({"build"}).code == 2);
    CHECK(cli({"build", "--nodes", "1/2", "--random"}).code == 2);
    CHECK(cli({"build", "--nodes", "1/2", "--base", "simpson"}).code == 2);
    CHECK(cli({"build", "--nodes", "3/2"}).code == 1);
    CHECK(cli({"build", "--nodes", "1/2,x"}).code == 1);
}

TEST_CASE("eval") {
    TempDir dir;
    const std::string s = dir.rule("s.json", catalog::simpson());
    const Run r = cli({"eval", "--rule", s, "--expr", "2/(1+t^2)", "--n-list", "1", "--exact"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,value,signed_error,significant_digits\n1,10/3,,\n");
    const Run p = cli({"eval", "--rule", s, "--expr", "2/(1+t^2)", "--n-list", "1,2", "--exact", "--ref", "pi"});
    // Each half: (1/6)(g(-1) + 4 g(-1/2) + g(0)) = (1/6)(1 + 32/5 + 2) = 47/30.
    CHECK(p.out.find("2,47/15,8.25932e-03,2") != std::string::npos);
    CHECK(p.out.find("1,10/3,-1.91741e-01,1") != std::string::npos);
    const Run f = cli({"eval", "--rule", s, "--expr", "t^2", "--a", "0", "--b", "3", "--prec", "15", "--ref", "9"});
    CHECK(f.out == "n,value,signed_error,significant_digits\n1,9.00000000000000,0.00000e+00,15\n");
    const Run syntax = cli({"eval", "--rule", s, "--expr", "2/(1+t^2"});
    CHECK(syntax.code == 1);
    CHECK(syntax.err.find("offset 8") != std::string::npos);
    CHECK(cli({"eval", "--rule", s, "--expr", "t", "--prec", "0"}).code == 2);
    CHECK(cli({"eval", "--rule", s, "--expr", "sin(t)", "--exact"}).code == 1);
    const Run help = cli({"eval", "--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("power := atom ('^' integer)?") != std::string::npos);
}

TEST_CASE("regionmap") {
    TempDir dir;
    const Run r = cli({"regionmap", "--family", "two-point", "--grid", "9", "--out", dir.file("two.pgm")});
    REQUIRE(r.code == 0);
    CHECK(fs::file_size(dir.file("two.pgm")) == std::string("P5\n9 9\n255\n").size() + 81);
    CHECK(r.out.find("invalid=9") != std::string::npos);
    const Run c = cli({"regionmap", "--family", "three-point-slice", "--fix", "-3/4", "--grid", "8", "--band", "1/50",
                       "--out", dir.file("slice.csv")});
    REQUIRE(c.code == 0);
    std::ifstream in(dir.file("slice.csv"));
    std::string header;
    std::getline(in, header);
    CHECK(header == "t0,t1,label");
    CHECK(cli({"regionmap", "--family", "three-point-slice", "--out", dir.file("x.csv")}).code == 2);
    CHECK(cli({"regionmap", "--family", "two-point", "--out", dir.file("x.png")}).code == 2);
    CHECK(cli({"regionmap", "--family", "four-point", "--out", dir.file("x.csv")}).code == 2);
}

TEST_CASE("legendre-nodes") {
    const Run r = cli({"legendre-nodes", "--n", "10", "--positive", "--convergents"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("41349881/277750224,", 0) == 0);
    const Run three = cli({"legendre-nodes", "--n", "3", "--tol", "1/1000"});
    const auto nodes = io::parse_rational_list(first_line(three.out));
    REQUIRE(nodes.size() == 3);
    CHECK(nodes[1] == Rational(0));
    CHECK(nodes[0] == -nodes[2]);
    CHECK(((nodes[2] * nodes[2]) - R("3/5")).abs() < R("1/500"));
    CHECK(cli({"legendre-nodes", "--n", "3", "--tol", "2"}).code == 1);
    CHECK(cli({"legendre-nodes"}).code == 2);
}

TEST_CASE("pi-demo and usage errors") {
    const Run demo = cli({"pi-demo"});
    CHECK(demo.code == 0);
    CHECK(demo.out.find("FAIL") == std::string::npos);
    CHECK(demo.out.find("pi-demo: all checks passed") != std::string::npos);
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"classify", "--rule", "/nonexistent/rule.json"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}
