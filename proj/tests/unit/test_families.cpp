#include "support.hpp"

#include <sstream>

#include "combquad/error.hpp"
#include "combquad/families.hpp"

using namespace combquad;
using testing::R;

namespace {

Rational weight_at(const QuadRule& q, const ExactScalar& node) {
    for (const QuadPoint& p : q.points()) {
        if (p.node == node) return p.weight;
    }
    FAIL("node not found: " << node.to_string());
    return Rational(0);
}

/// Weights of the rule exact on 1, t, t^2 at rational nodes, by Lagrange basis integrals.
std::vector<mpq_class> lagrange_weights(const std::vector<Rational>& x) {
    std::vector<mpq_class> w;
    for (std::size_t i = 0; i < x.size(); ++i) {
        // Basis polynomial coefficients, built up by multiplying (t - x_k)/(x_i - x_k).
        std::vector<mpq_class> poly{1};
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (k == i) continue;
            const mpq_class d = x[i].value() - x[k].value();
            std::vector<mpq_class> next(poly.size() + 1, 0);
            for (std::size_t e = 0; e < poly.size(); ++e) {
                next[e + 1] += poly[e] / d;
                next[e] -= poly[e] * x[k].value() / d;
            }
            poly = next;
        }
        mpq_class integral = 0;
        for (std::size_t e = 0; e < poly.size(); ++e) integral += poly[e] * testing::gmp_moment(static_cast<unsigned>(e));
        w.push_back(integral);
    }
    return w;
}

}  // namespace

TEST_CASE("two-point rules") {
    const QuadRule t = two_point_rule(-1, 1);
    CHECK(t == catalog::trapezoidal());
    const ExactScalar s = ExactScalar::surd(R("1/3"), 3);
    const QuadRule g = two_point_rule(-s, s);
    CHECK(g == catalog::gauss2());
    CHECK(classify(g).degree == 3);
    const QuadRule q = two_point_rule(R("-1/3"), 1);
    CHECK(weight_at(q, R("-1/3")) == R("3/2"));
    CHECK(weight_at(q, 1) == R("1/2"));
    const RuleClassification c = classify(q);
    CHECK(c.degree == 2);
    CHECK(apply_monomial(q, 3) == ExactScalar(R("4/9")));
    CHECK(c.defect == ExactScalar(R("-4/9")));
    CHECK_THROWS_AS(two_point_rule(R("1/2"), R("1/2")), DegenerateNodesError);
}

TEST_CASE("two-point classification") {
    const ExactScalar s = ExactScalar::surd(R("1/3"), 3);
    CHECK(two_point_classify(-1, 1) == RegionLabel::NegativeDeg1);
    CHECK(two_point_classify(R("-1/2"), R("1/2")) == RegionLabel::PositiveDeg1);
    CHECK(two_point_classify(-s, s) == RegionLabel::DegreeAtLeast3);
    CHECK(two_point_classify(R("-1/3"), 1) == RegionLabel::Deg2Negative);
    CHECK(two_point_classify(R("1/3"), -1) == RegionLabel::Deg2Positive);
    CHECK(two_point_classify(R("1/2"), R("1/2")) == RegionLabel::Invalid);
}

TEST_CASE("two-point labels agree with classify and are symmetric") {
    testing::Gen gen(17);
    for (int i = 0; i < 400; ++i) {
        const auto nodes = gen.distinct_nodes(2, 30);
        const RegionLabel label = two_point_classify(nodes[0], nodes[1]);
        CHECK(label == two_point_classify(nodes[1], nodes[0]));
        const QuadRule q = two_point_rule(nodes[0], nodes[1]);
        CHECK(q.weight_sum() == Rational(2));
        const RuleClassification c = classify(q);
        if (c.degree == 1) {
            CHECK(label == (c.sign == RuleSign::Positive ? RegionLabel::PositiveDeg1 : RegionLabel::NegativeDeg1));
            // Defect from the closed form 2/3 + 2 t0 t1.
            CHECK(c.defect == ExactScalar(R("2/3") + Rational(2) * nodes[0] * nodes[1]));
        } else if (c.degree == 2) {
            CHECK(label == (c.sign == RuleSign::Positive ? RegionLabel::Deg2Positive : RegionLabel::Deg2Negative));
        }
    }
    // Points on the hyperbola t0 t1 = -1/3 with rational coordinates.
    for (const char* t0 : {"-1/3", "-1/2", "-2/3", "-5/6"}) {
        const Rational a = R(t0);
        const Rational b = R("-1/3") / a;
        const QuadRule q = two_point_rule(a, b);
        const RuleClassification c = classify(q);
        CHECK(c.degree == 2);
        CHECK(two_point_classify(a, b) ==
              (c.sign == RuleSign::Positive ? RegionLabel::Deg2Positive : RegionLabel::Deg2Negative));
    }
}

TEST_CASE("three-point weights") {
    const QuadRule a = three_point_weights(R("-15/16"), R("-7/8"), R("-3/4"));
    CHECK(weight_at(a, R("-15/16")) == R("2/9") * Rational(760));
    CHECK(weight_at(a, R("-7/8")) == R("2/9") * Rational(-1194));
    CHECK(weight_at(a, R("-3/4")) == R("2/9") * Rational(443));

    const ExactScalar s = surd_canonicalize(R("3/5"));
    CHECK(three_point_weights(-s, 0, s) == gauss3());

    for (const char* text : {"1/2", "-2/3", "1", "3/7"}) {
        const Rational t0 = R(text);
        const QuadRule q = three_point_weights(t0, 0, -t0);
        const Rational three = Rational(3) * t0 * t0;
        CHECK(weight_at(q, t0) == Rational(1) / three);
        // Twice the printed middle weight; the weights must sum to 2.
        CHECK(weight_at(q, 0) == Rational(2) * (three - Rational(1)) / three);
        CHECK(weight_at(q, -t0) == Rational(1) / three);
    }
    CHECK_THROWS_AS(three_point_weights(R("1/2"), R("1/2"), 0), DegenerateNodesError);
}

TEST_CASE("three-point sign examples") {
    CHECK(three_point_sign(R("-15/16"), R("-7/8"), R("-3/4")).sign() < 0);
    CHECK(three_point_classify(R("-15/16"), R("-7/8"), R("-3/4")) == RegionLabel::Deg2Positive);
    const ExactScalar s = surd_canonicalize(R("3/5"));
    CHECK(three_point_sign(-s, 0, s).is_zero());
    CHECK(three_point_classify(-s, 0, s) == RegionLabel::DegreeAtLeast3);
    CHECK(three_point_sign(R("3/4"), R("-7/8"), R("-3/4")).sign() > 0);
    CHECK(three_point_classify(R("3/4"), R("-7/8"), R("-3/4")) == RegionLabel::Deg2Negative);
}

TEST_CASE("the six symmetric points have P = 0") {
    const ExactScalar s = ExactScalar::surd(R("1/3"), 3);
    const std::vector<std::array<ExactScalar, 3>> points{{0, s, -s}, {s, 0, -s}, {s, -s, 0}};
    for (const auto& p : points) {
        CHECK(three_point_sign(p[0], p[1], p[2]).is_zero());
        CHECK(three_point_sign(-p[0], -p[1], -p[2]).is_zero());
    }
}

TEST_CASE("random triples: exactness, weight sum and nodal annihilation") {
    testing::Gen gen(77);
    for (int i = 0; i < 300; ++i) {
        const auto x = gen.distinct_nodes(3, 40);
        const QuadRule q = three_point_weights(x[0], x[1], x[2]);
        CHECK(q.weight_sum() == Rational(2));
        for (unsigned j = 0; j <= 2; ++j) CHECK(apply_monomial(q, j) == ExactScalar(moment(j)));
        const auto oracle = lagrange_weights(x);
        for (std::size_t k = 0; k < 3; ++k) CHECK(weight_at(q, x[k]).value() == oracle[k]);
        // Psi_3 = (t - x0)(t - x1)(t - x2); Psi_4 = t Psi_3; Psi_5 = t^2 Psi_3. Apply Q by monomials.
        std::vector<Rational> psi{1};
        for (const Rational& r : x) {
            std::vector<Rational> next(psi.size() + 1);
            for (std::size_t e = 0; e < psi.size(); ++e) {
                next[e + 1] += psi[e];
                next[e] -= psi[e] * r;
            }
            psi = next;
        }
        for (unsigned shift = 0; shift <= 2; ++shift) {
            ExactScalar value;
            for (std::size_t e = 0; e < psi.size(); ++e) {
                value += ExactScalar(psi[e]) * apply_monomial(q, static_cast<unsigned>(e) + shift);
            }
            CHECK(value.is_zero());
        }
        // P = Q(t^3) and the label follow classify.
        const ExactScalar p = three_point_sign(x[0], x[1], x[2]);
        CHECK(p == apply_monomial(q, 3));
        const RuleClassification c = classify(q);
        const RegionLabel label = three_point_classify(x[0], x[1], x[2]);
        if (c.degree == 2) {
            CHECK(label == (c.sign == RuleSign::Positive ? RegionLabel::Deg2Positive : RegionLabel::Deg2Negative));
        } else {
            CHECK(label == RegionLabel::DegreeAtLeast3);
        }
    }
}

TEST_CASE("Gauss-3") {
    const QuadRule g = gauss3();
    const RuleClassification c = classify(g);
    CHECK(c.degree == 5);
    CHECK(c.defect == ExactScalar(R("8/175")));
    // g = 2/(1+t^2): 5/9 * 2 * 2/(1+3/5) + 8/9 * 2 = 19/6.
    ExactScalar value;
    for (const QuadPoint& p : g.points()) {
        value += ExactScalar(p.weight) * ExactScalar(2) / (ExactScalar(1) + p.node * p.node);
    }
    CHECK(value == ExactScalar(R("19/6")));
}

TEST_CASE("two-point raster") {
    RasterSpec spec;
    spec.gridSize = 3;
    const RegionRaster small = region_raster(spec);
    CHECK(small.at(0, 0).t0 == Rational(-1));
    CHECK(small.at(0, 0).t1 == Rational(1));
    CHECK(small.at(0, 0).label == RegionLabel::NegativeDeg1);
    CHECK(small.at(1, 1).label == RegionLabel::Invalid);

    spec.gridSize = 41;
    const RegionRaster r = region_raster(spec);
    CHECK(r.cell_near(-1, 1).label == RegionLabel::NegativeDeg1);
    CHECK(r.cell_near(R("-1/2"), R("1/2")).label == RegionLabel::PositiveDeg1);
    CHECK(r.count(RegionLabel::PositiveDeg1) > r.count(RegionLabel::NegativeDeg1));
    CHECK(r.count(RegionLabel::NegativeDeg1) > 0);
    CHECK(r.count(RegionLabel::Invalid) == 41u);
    std::size_t total = 0;
    for (RegionLabel l : {RegionLabel::PositiveDeg1, RegionLabel::NegativeDeg1, RegionLabel::Deg2Positive,
                          RegionLabel::Deg2Negative, RegionLabel::DegreeAtLeast3, RegionLabel::Invalid}) {
        total += r.count(l);
    }
    CHECK(total == 41u * 41u);
    // Each cell agrees with a direct classifier call.
    for (int row = 0; row < 41; row += 5) {
        for (int col = 0; col < 41; col += 3) {
            const RasterCell& cell = r.at(row, col);
            CHECK(cell.label == two_point_classify(cell.t0, cell.t1));
        }
    }
}

TEST_CASE("three-point slice raster") {
    RasterSpec spec;
    spec.family = Family::ThreePointSlice;
    spec.fixedCoordinate = R("-3/4");
    spec.gridSize = 64;
    const RegionRaster r = region_raster(spec);
    CHECK(r.cell_near(R("-15/16"), R("-7/8")).label == RegionLabel::Deg2Positive);
    CHECK(r.cell_near(R("3/4"), R("-7/8")).label == RegionLabel::Deg2Negative);
    CHECK_THROWS_AS(region_raster(RasterSpec{Family::ThreePointSlice, 8, std::nullopt}), PreconditionError);
}

TEST_CASE("raster output formats") {
    RasterSpec spec;
    spec.gridSize = 5;
    const RegionRaster r = region_raster(spec);
    std::ostringstream pgm;
    r.write_pgm(pgm);
    const std::string bytes = pgm.str();
    CHECK(bytes.rfind("P5\n5 5\n255\n", 0) == 0);
    CHECK(bytes.size() == std::string("P5\n5 5\n255\n").size() + 25);
    CHECK(static_cast<unsigned char>(bytes[bytes.size() - 25]) == r.pixel(r.at(0, 0)));
    CHECK(r.pixel(r.at(0, 0)) == 0);
    CHECK(r.pixel(r.at(2, 2)) == 64);

    std::ostringstream csv;
    r.write_csv(csv);
    std::istringstream lines(csv.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "t0,t1,label");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 25);
}
