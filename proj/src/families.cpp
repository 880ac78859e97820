#include "combquad/families.hpp"

#include <ostream>
#include <utility>

#include "combquad/error.hpp"
#include "combquad/parallel.hpp"

namespace combquad {

namespace {

bool in_interval(const ExactScalar& x) {
    return (x - ExactScalar(1)).sign() <= 0 && (x + ExactScalar(1)).sign() >= 0;
}

const Rational& rational_weight(const ExactScalar& w) {
    if (!w.is_rational()) {
        throw RepresentationError("families: weight " + w.to_string() + " is irrational");
    }
    return w.rational_part();
}

struct ThreeWeights {
    ExactScalar w0;
    ExactScalar w1;
    ExactScalar w2;
};

ThreeWeights omega(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2) {
    if (t0 == t1 || t0 == t2 || t1 == t2) {
        throw DegenerateNodesError("families: three-point nodes must be pairwise distinct");
    }
    const ExactScalar one(1);
    const ExactScalar two(2);
    const ExactScalar three(3);
    return {two * (one + three * t1 * t2) / (three * (t1 - t0) * (t2 - t0)),
            -(two * (one + three * t0 * t2)) / (three * (t1 - t0) * (t2 - t1)),
            two * (one + three * t0 * t1) / (three * (t2 - t0) * (t2 - t1))};
}

/// Degree-1 defect of the two-point rule: the integral of (t - t0)(t - t1).
ExactScalar two_point_defect(const ExactScalar& t0, const ExactScalar& t1) {
    return ExactScalar(Rational(mpz_class(2), mpz_class(3))) + ExactScalar(2) * t0 * t1;
}

/// Integral over [-1,1] of (t - t0)^2 (t - t1) = -(4/3 t0 + 2/3 t1 + 2 t0^2 t1).
ExactScalar two_point_cubic_moment(const ExactScalar& t0, const ExactScalar& t1) {
    const ExactScalar c = ExactScalar(Rational(mpz_class(4), mpz_class(3))) * t0 +
                          ExactScalar(Rational(mpz_class(2), mpz_class(3))) * t1 + ExactScalar(2) * t0 * t0 * t1;
    return -c;
}

}  // namespace

const char* to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::PositiveDeg1: return "positive-deg1";
        case RegionLabel::NegativeDeg1: return "negative-deg1";
        case RegionLabel::Deg2Positive: return "deg2-positive";
        case RegionLabel::Deg2Negative: return "deg2-negative";
        case RegionLabel::DegreeAtLeast3: return "degree-at-least-3";
        case RegionLabel::Invalid: return "invalid";
    }
    return "invalid";
}

QuadRule two_point_rule(const ExactScalar& t0, const ExactScalar& t1) {
    if (t0 == t1) {
        throw DegenerateNodesError("families: two-point nodes coincide at " + t0.to_string());
    }
    const ExactScalar span = t1 - t0;
    const ExactScalar a0 = ExactScalar(2) * t1 / span;
    const ExactScalar a1 = -(ExactScalar(2) * t0) / span;
    return QuadRule({{t0, rational_weight(a0)}, {t1, rational_weight(a1)}}, "two-point");
}

RegionLabel two_point_classify(const ExactScalar& t0, const ExactScalar& t1) {
    if (t0 == t1 || !in_interval(t0) || !in_interval(t1)) {
        return RegionLabel::Invalid;
    }
    const int s2 = two_point_defect(t0, t1).sign();
    if (s2 != 0) {
        return s2 > 0 ? RegionLabel::PositiveDeg1 : RegionLabel::NegativeDeg1;
    }
    const int s3 = two_point_cubic_moment(t0, t1).sign();
    if (s3 != 0) {
        return s3 > 0 ? RegionLabel::Deg2Positive : RegionLabel::Deg2Negative;
    }
    return RegionLabel::DegreeAtLeast3;
}

QuadRule three_point_weights(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2) {
    const ThreeWeights w = omega(t0, t1, t2);
    return QuadRule({{t0, rational_weight(w.w0)}, {t1, rational_weight(w.w1)}, {t2, rational_weight(w.w2)}},
                    "three-point");
}

ExactScalar three_point_sign(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2) {
    const ThreeWeights w = omega(t0, t1, t2);
    return t0.pow(3) * w.w0 + t1.pow(3) * w.w1 + t2.pow(3) * w.w2;
}

RegionLabel three_point_classify(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2) {
    if (t0 == t1 || t0 == t2 || t1 == t2 || !in_interval(t0) || !in_interval(t1) || !in_interval(t2)) {
        return RegionLabel::Invalid;
    }
    const int s = three_point_sign(t0, t1, t2).sign();
    if (s == 0) {
        return RegionLabel::DegreeAtLeast3;
    }
    return s < 0 ? RegionLabel::Deg2Positive : RegionLabel::Deg2Negative;
}

QuadRule gauss3() {
    const ExactScalar t = surd_canonicalize(Rational(mpz_class(3), mpz_class(5)));
    const Rational outer(mpz_class(5), mpz_class(9));
    return QuadRule({{-t, outer}, {ExactScalar(0), Rational(mpz_class(8), mpz_class(9))}, {t, outer}},
                    "gauss-legendre-3");
}

RegionRaster::RegionRaster(RasterSpec spec, std::vector<RasterCell> cells)
    : spec_(std::move(spec)), cells_(std::move(cells)) {}

const RasterCell& RegionRaster::at(int row, int col) const {
    if (row < 0 || col < 0 || row >= size() || col >= size()) {
        throw PreconditionError("families: raster index out of range");
    }
    return cells_[static_cast<std::size_t>(row) * static_cast<std::size_t>(size()) +
                  static_cast<std::size_t>(col)];
}

const RasterCell& RegionRaster::cell_near(const Rational& t0, const Rational& t1) const {
    // index = round((t + 1) (n - 1) / 2)
    auto nearest = [this](const Rational& t) {
        const Rational pos = (t + Rational(1)) * Rational(size() - 1) / Rational(2);
        mpz_class idx;
        mpz_fdiv_q(idx.get_mpz_t(), mpz_class(pos.numerator() * 2 + pos.denominator()).get_mpz_t(),
                   mpz_class(pos.denominator() * 2).get_mpz_t());
        const long i = idx.get_si();
        return static_cast<int>(std::clamp(i, 0L, static_cast<long>(size() - 1)));
    };
    const int col = nearest(t0);
    const int row = size() - 1 - nearest(t1);
    return at(row, col);
}

std::uint8_t RegionRaster::pixel(const RasterCell& cell) const {
    if (cell.label == RegionLabel::Invalid) {
        return 64;
    }
    if (cell.boundary) {
        return 128;
    }
    const bool two_point = spec_.family == Family::TwoPoint;
    switch (cell.label) {
        case RegionLabel::PositiveDeg1: return 255;
        case RegionLabel::NegativeDeg1: return 0;
        case RegionLabel::Deg2Positive: return two_point ? 128 : 255;
        case RegionLabel::Deg2Negative: return two_point ? 128 : 0;
        default: return 128;
    }
}

std::size_t RegionRaster::count(RegionLabel label) const {
    return static_cast<std::size_t>(
        std::count_if(cells_.begin(), cells_.end(), [label](const RasterCell& c) { return c.label == label; }));
}

void RegionRaster::write_pgm(std::ostream& os) const {
    os << "P5\n" << size() << ' ' << size() << "\n255\n";
    for (const RasterCell& c : cells_) {
        os.put(static_cast<char>(pixel(c)));
    }
}

void RegionRaster::write_csv(std::ostream& os) const {
    os << "t0,t1,label\n";
    for (const RasterCell& c : cells_) {
        os << c.t0 << ',' << c.t1 << ',' << to_string(c.label) << (c.boundary ? "+boundary" : "") << '\n';
    }
}

RegionRaster region_raster(const RasterSpec& spec) {
    if (spec.gridSize < 2) {
        throw PreconditionError("families: raster grid size must be at least 2");
    }
    if (spec.boundaryBand.sign() <= 0) {
        throw PreconditionError("families: boundary band must be positive");
    }
    if (spec.family == Family::ThreePointSlice && !spec.fixedCoordinate) {
        throw PreconditionError("families: three-point slice needs a fixed t2");
    }
    const int n = spec.gridSize;
    std::vector<Rational> lattice;
    lattice.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        lattice.push_back(Rational(mpz_class(2 * i), mpz_class(n - 1)) - Rational(1));
    }
    std::vector<RasterCell> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t row) {
        const Rational& t1 = lattice[static_cast<std::size_t>(n - 1) - row];
        for (std::size_t col = 0; col < static_cast<std::size_t>(n); ++col) {
            RasterCell& cell = cells[row * static_cast<std::size_t>(n) + col];
            cell.t0 = lattice[col];
            cell.t1 = t1;
            const ExactScalar x0(cell.t0);
            const ExactScalar x1(cell.t1);
            if (spec.family == Family::TwoPoint) {
                cell.label = two_point_classify(x0, x1);
                if (cell.label != RegionLabel::Invalid) {
                    cell.boundary = two_point_defect(x0, x1).rational_part().abs() < spec.boundaryBand;
                }
            } else {
                const ExactScalar x2(*spec.fixedCoordinate);
                cell.label = three_point_classify(x0, x1, x2);
                if (cell.label != RegionLabel::Invalid) {
                    cell.boundary = three_point_sign(x0, x1, x2).rational_part().abs() < spec.boundaryBand;
                }
            }
        }
    });
    return RegionRaster(spec, std::move(cells));
}

}  // namespace combquad
