#include "combquad/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "combquad/builder.hpp"
#include "combquad/combine.hpp"
#include "combquad/composite.hpp"
#include "combquad/error.hpp"
#include "combquad/expr.hpp"
#include "combquad/families.hpp"
#include "combquad/io.hpp"

namespace combquad {

namespace {

Reference parse_reference(const std::string& text) {
    if (text == "pi") return PiReference{};
    return Rational::parse(text);
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

BaseRule parse_base(const std::string& text) {
    if (text == "midpoint") return BaseRule::Midpoint;
    if (text == "trapezoid") return BaseRule::Trapezoid;
    throw DomainError("cli: base must be midpoint or trapezoid");
}

void print_classification(std::ostream& out, const RuleClassification& c) {
    out << "degree=" << c.degree << " gamma=" << c.defect.to_string() << " sign=" << to_string(c.sign) << '\n';
    out << "mu=" << c.principalMoment.to_string() << '\n';
    out << "mu_Q=" << c.ruleMoment.to_string() << '\n';
    out << "gamma_decimal=" << io::decimal(c.defect) << '\n';
    if (c.notExactForConstants) {
        out << "warning=rule is not exact for constants\n";
    }
}

/// Check lines for pi-demo.
class Checks {
public:
    explicit Checks(std::ostream& out) : out_(out) {}

    void expect(bool ok, const std::string& what) {
        out_ << (ok ? "PASS " : "FAIL ") << what << '\n';
        all_ = all_ && ok;
    }
    template <typename A, typename B>
    void equal(const A& got, const B& want, const std::string& what) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", expected " << want;
        expect(got == want, msg.str());
    }
    void near(double got, double want, double tol, const std::string& what) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", expected " << want << " +- " << tol;
        expect(std::abs(got - want) <= tol, msg.str());
    }
    void run(const std::string& section, const std::function<void()>& body) {
        out_ << "# " << section << '\n';
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, section + " threw: " + e.what());
        }
    }
    bool all() const { return all_; }

private:
    std::ostream& out_;
    bool all_ = true;
};

Rational R(const char* text) { return Rational::parse(text); }

ExactScalar exact_value(const QuadRule& rule, const Expr& g) {
    CompositeJob job{rule, Rational(-1), Rational(1), 1, g, NumericContext{}, std::nullopt, true};
    return *composite_apply(job).exact;
}

}  // namespace

bool run_pi_demo(std::ostream& out) {
    Checks checks(out);
    const Expr g = parse("2/(1+t^2)");
    const NumericContext ctx{30};
    const Real pi = pi_reference(ctx);

    checks.run("combined rule of Gauss-2 and Simpson", [&] {
        const CombineReport y = combine_pair(catalog::gauss2(), catalog::simpson());
        checks.equal(y.alpha(), R("3/5"), "alpha");
        checks.equal(y.beta(), R("2/5"), "beta");
        std::ostringstream weights;
        for (const QuadPoint& p : y.flattened.points()) weights << (p.weight * Rational(15)) << ' ';
        checks.equal(weights.str(), std::string("2 9 8 9 2 "), "15 * flattened weights");
        checks.equal(y.outputClass.degree, 5, "degree");
        checks.equal(apply_monomial(y.flattened, 6), ExactScalar(R("14/45")), "Y(t^6)");
        const ExactScalar a = exact_value(catalog::gauss2(), g);
        const ExactScalar s = exact_value(catalog::simpson(), g);
        const ExactScalar w = exact_value(y.flattened, g);
        checks.equal(a, ExactScalar(3), "A(g)");
        checks.equal(s, ExactScalar(R("10/3")), "S(g)");
        checks.equal(w, ExactScalar(R("47/15")), "Y(g)");
        checks.near((pi - a.to_real(ctx.working_bits())).to_double(), 0.14, 0.005, "pi - A(g)");
        checks.near((pi - s.to_real(ctx.working_bits())).to_double(), -0.19, 0.005, "pi - S(g)");
        checks.near((pi - w.to_real(ctx.working_bits())).to_double(), 0.0083, 0.005, "pi - Y(g)");
    });

    checks.run("mean of Gauss-3 and the degree-5 combined rule", [&] {
        const QuadRule y = combine_pair(catalog::gauss2(), catalog::simpson()).flattened;
        const CombineReport w = mean_rule(gauss3(), y);
        checks.equal(w.outputClass.degree, 7, "degree");
        checks.equal(w.outputClass.defect, ExactScalar(R("-16/1575")), "gamma_8");
        checks.equal(exact_value(w.flattened, g), ExactScalar(R("1321/420")), "W(g)");
    });

    checks.run("mean of Gauss-3 and open Newton-Cotes 5", [&] {
        const CombineReport w = mean_rule(gauss3(), catalog::open_newton_cotes5());
        Rational at_zero;
        for (const QuadPoint& p : w.flattened.points()) {
            if (p.node.is_zero()) at_zero = p.weight;
        }
        checks.equal(at_zero, R("1606/11088"), "weight at 0");
        checks.equal(w.outputClass.defect, ExactScalar(R("16/1125")), "gamma_W");
        checks.equal(exact_value(gauss3(), g), ExactScalar(R("19/6")), "A(g)");
        checks.equal(exact_value(catalog::open_newton_cotes5(), g), ExactScalar(R("3756/1189")), "B(g)");
        checks.equal(exact_value(w.flattened, g), ExactScalar(R("156637/49938")), "W(g)");
    });

    checks.run("W_3 from nodes 1/2, 1/3, 1/4", [&] {
        const BuiltRule b = build_combined({{R("1/2"), R("1/3"), R("1/4")}, BaseRule::Midpoint, {}});
        const std::vector<Rational> want{R("-4426/105"), R("5344/315"), R("-5589/49"), R("309248/2205")};
        checks.expect(b.coefficients == want, "coefficients (-4426/105, 5344/315, -5589/49, 309248/2205)");
        checks.equal(b.classification.degree, 7, "degree");
        checks.equal(b.classification.defect, ExactScalar(R("1817/15120")), "gamma");
    });

    checks.run("W_5 from rational Legendre nodes", [&] {
        const std::vector<Rational> nodes{R("41349881/277750224"), R("26322066/60734531"), R("209827923/308838634"),
                                          R("130457471/150806838"), R("272617463/279921589")};
        const BuiltRule mid = build_combined({nodes, BaseRule::Midpoint, {}});
        checks.equal(mid.classification.degree, 11, "midpoint-base degree");
        const double gm = mid.classification.defect.to_real(128).to_double();
        checks.near(gm, 2.105e-17, 2.105e-19, "midpoint-base gamma");
        const BuiltRule trap = build_combined({nodes, BaseRule::Trapezoid, {}});
        const double gt = trap.classification.defect.to_real(128).to_double();
        checks.near(gt, -5.243e-18, 5.243e-20, "trapezoid-base gamma");
        const NumericContext c80{80};
        const CompositeJob job{trap.flattened, Rational(-1), Rational(1), 1024, g, c80, std::nullopt, false};
        const Real err = pi_reference(c80) - composite_apply(job).value;
        const std::string shown = err.to_scientific(4);
        checks.expect(err.to_double() >= 1.0e-61 && err.to_double() <= 1.3e-61,
                      "pi - W5~(g)_1024 at 80 digits = " + shown + " in [1.0e-61, 1.3e-61]");
    });

    out << (checks.all() ? "pi-demo: all checks passed\n" : "pi-demo: FAILED\n");
    return checks.all();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"combquad: exact construction, classification and composite evaluation of quadrature rules on [-1,1]",
                 "combquad"};
    app.require_subcommand(1, 1);

    // classify
    std::string rulePath;
    bool asJson = false;
    auto* classifyCmd = app.add_subcommand("classify", "Degree, principal moment and defect of a rule file");
    classifyCmd->add_option("--rule", rulePath, "Rule file (JSON)")->required();
    classifyCmd->add_flag("--json", asJson, "Print the classification as JSON");

    // combine / mean
    std::string aPath;
    std::string bPath;
    bool lsCheck = false;
    auto* combineCmd = app.add_subcommand("combine", "Combined rule of two rules with equal degree");
    combineCmd->add_option("--a", aPath, "First rule file")->required();
    combineCmd->add_option("--b", bPath, "Second rule file")->required();
    combineCmd->add_flag("--least-squares-check", lsCheck, "Verify the coefficients by the least-squares route");
    std::string meanA;
    std::string meanB;
    auto* meanCmd = app.add_subcommand("mean", "Mean rule of two rules with equal degree");
    meanCmd->add_option("--a", meanA, "First rule file")->required();
    meanCmd->add_option("--b", meanB, "Second rule file")->required();

    // build
    std::string nodeList;
    std::string baseName = "midpoint";
    std::string outPath;
    bool random = false;
    std::uint64_t seed = 0;
    int k = 0;
    std::string tolText = "1/10000";
    auto* buildCmd = app.add_subcommand("build", "Degree 2k+1 rule from k symmetric degree-1 rules");
    auto* nodesOpt = buildCmd->add_option("--nodes", nodeList, "Positive nodes, e.g. 1/2,1/3,1/4");
    buildCmd->add_option("--base", baseName, "midpoint or trapezoid")->check(CLI::IsMember({"midpoint", "trapezoid"}));
    buildCmd->add_option("--out", outPath, "Also write the flattened rule file here");
    auto* randomOpt = buildCmd->add_flag("--random", random, "Draw the nodes from the seeded generator");
    buildCmd->add_option("--seed", seed, "Generator seed")->needs(randomOpt);
    buildCmd->add_option("--k", k, "Number of random nodes")->needs(randomOpt);
    buildCmd->add_option("--tol", tolText, "Rationalization tolerance (rational)")->needs(randomOpt);
    nodesOpt->excludes(randomOpt);

    // eval
    std::string evalRule;
    std::string exprText;
    std::string aText = "-1";
    std::string bText = "1";
    std::string nList = "1";
    long digits = 30;
    std::string refText;
    bool exact = false;
    auto* evalCmd = app.add_subcommand("eval", "Composite rule error table as CSV");
    evalCmd->add_option("--rule", evalRule, "Rule file")->required();
    evalCmd->add_option("--expr", exprText, "Integrand g(t)")->required();
    evalCmd->add_option("--a", aText, "Left endpoint (rational)");
    evalCmd->add_option("--b", bText, "Right endpoint (rational)");
    evalCmd->add_option("--n-list", nList, "Subinterval counts, e.g. 2,4,8");
    evalCmd->add_option("--prec", digits, "Significant decimal digits")->check(CLI::Range(1L, 100000L));
    evalCmd->add_option("--ref", refText, "Reference value: pi or a rational/decimal");
    evalCmd->add_flag("--exact", exact, "Exact evaluation (rational integrand)");
    evalCmd->footer("Integrand grammar:\n" + std::string(kExprGrammar));

    // regionmap
    std::string familyName;
    std::string fixText;
    int grid = 64;
    std::string bandText = "1/100";
    std::string mapOut;
    auto* mapCmd = app.add_subcommand("regionmap", "Raster of rule classes over a node family");
    mapCmd->add_option("--family", familyName, "two-point or three-point-slice")
        ->required()
        ->check(CLI::IsMember({"two-point", "three-point-slice"}));
    mapCmd->add_option("--fix", fixText, "Fixed t2 for the three-point slice");
    mapCmd->add_option("--grid", grid, "Lattice points per axis")->check(CLI::Range(2, 4096));
    mapCmd->add_option("--band", bandText, "Boundary band width (rational)");
    mapCmd->add_option("--out", mapOut, "Output file, .pgm or .csv")->required();

    // legendre-nodes
    int legendreN = 0;
    std::string legendreTol = "1/10000000000000000";
    bool positiveOnly = false;
    bool convergents = false;
    auto* legendreCmd = app.add_subcommand("legendre-nodes", "Rationalized roots of the Legendre polynomial P_n");
    legendreCmd->add_option("--n", legendreN, "Degree")->required()->check(CLI::Range(1, 10000));
    legendreCmd->add_option("--tol", legendreTol, "Rationalization tolerance (rational)");
    legendreCmd->add_flag("--positive", positiveOnly, "Only the positive roots");
    legendreCmd->add_flag("--convergents", convergents, "Continued-fraction convergents only (no semiconvergents)");

    auto* demoCmd = app.add_subcommand("pi-demo", "Reproduce the worked examples and check them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (classifyCmd->parsed()) {
            const RuleClassification c = classify(io::read_rule_file(rulePath));
            if (asJson) {
                out << io::classification_to_json(c).dump(2) << '\n';
            } else {
                print_classification(out, c);
            }
        } else if (combineCmd->parsed()) {
            const QuadRule a = io::read_rule_file(aPath);
            const QuadRule b = io::read_rule_file(bPath);
            const CombineReport report = combine_pair(a, b);
            io::Json j = io::combine_report_to_json(report);
            if (lsCheck) {
                const auto [la, lb] = least_squares_coeffs(a, b);
                const bool agrees = la == report.alpha() && lb == report.beta();
                j["least_squares"] = {{"alpha", la.to_string()}, {"beta", lb.to_string()}, {"agrees", agrees}};
                if (!agrees) {
                    out << j.dump(2) << '\n';
                    throw InternalError("combine: least-squares coefficients differ from the combined-rule coefficients");
                }
            }
            out << j.dump(2) << '\n';
        } else if (meanCmd->parsed()) {
            const CombineReport report = mean_rule(io::read_rule_file(meanA), io::read_rule_file(meanB));
            out << io::combine_report_to_json(report).dump(2) << '\n';
        } else if (buildCmd->parsed()) {
            BuilderInput input;
            input.base = parse_base(baseName);
            if (random) {
                if (k <= 0) throw DomainError("cli: --random needs --k >= 1");
                input.positiveNodes = random_rational_nodes(seed, k, Rational::parse(tolText));
            } else if (!nodeList.empty()) {
                input.positiveNodes = io::parse_rational_list(nodeList);
            } else {
                err << "build: give --nodes LIST or --random --seed N --k K --tol RAT\n";
                return 2;
            }
            const BuiltRule built = build_combined(input);
            for (const std::string& w : built.warnings) err << "warning: " << w << '\n';
            if (!outPath.empty()) io::write_rule_file(outPath, built.flattened);
            out << io::built_rule_to_json(built, input).dump(2) << '\n';
        } else if (evalCmd->parsed()) {
            CompositeJob job{io::read_rule_file(evalRule), Rational::parse(aText), Rational::parse(bText), 1,
                             parse(exprText), NumericContext{digits}, std::nullopt, exact};
            if (!refText.empty()) job.reference = parse_reference(refText);
            const auto rows = error_table(job, io::parse_count_list(nList));
            write_error_csv(out, rows, job.context);
        } else if (mapCmd->parsed()) {
            RasterSpec spec;
            spec.family = familyName == "two-point" ? Family::TwoPoint : Family::ThreePointSlice;
            spec.gridSize = grid;
            spec.boundaryBand = Rational::parse(bandText);
            if (!fixText.empty()) spec.fixedCoordinate = Rational::parse(fixText);
            if (spec.family == Family::ThreePointSlice && !spec.fixedCoordinate) {
                err << "regionmap: three-point-slice needs --fix RAT\n";
                return 2;
            }
            const RegionRaster raster = region_raster(spec);
            const bool pgm = ends_with(mapOut, ".pgm");
            if (!pgm && !ends_with(mapOut, ".csv")) {
                err << "regionmap: --out must end in .pgm or .csv\n";
                return 2;
            }
            std::ofstream file(mapOut, std::ios::binary);
            if (!file) throw DomainError("cli: cannot write '" + mapOut + "'");
            pgm ? raster.write_pgm(file) : raster.write_csv(file);
            for (RegionLabel label : {RegionLabel::PositiveDeg1, RegionLabel::NegativeDeg1, RegionLabel::Deg2Positive,
                                      RegionLabel::Deg2Negative, RegionLabel::DegreeAtLeast3, RegionLabel::Invalid}) {
                out << to_string(label) << '=' << raster.count(label) << '\n';
            }
        } else if (legendreCmd->parsed()) {
            const Rational tol = Rational::parse(legendreTol);
            if (tol.sign() <= 0 || tol >= Rational(1)) throw DomainError("cli: --tol must lie in (0,1)");
            const long digits_needed = static_cast<long>(mpz_sizeinbase(tol.denominator().get_mpz_t(), 10)) + 20;
            std::string sep;
            for (const Real& root : legendre_roots(legendreN, static_cast<int>(digits_needed))) {
                if (positiveOnly && root.sign() <= 0) continue;
                const Rational r = convergents ? rationalize_convergent(root, tol) : rationalize(root, tol);
                out << sep << r.to_string();
                sep = ",";
            }
            out << '\n';
        } else if (demoCmd->parsed()) {
            return run_pi_demo(out) ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"combquad"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace combquad
