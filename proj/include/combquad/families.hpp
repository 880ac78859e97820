#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "combquad/exact.hpp"
#include "combquad/rules.hpp"

namespace combquad {

enum class RegionLabel { PositiveDeg1, NegativeDeg1, Deg2Positive, Deg2Negative, DegreeAtLeast3, Invalid };

const char* to_string(RegionLabel label);

/// A0 g(t0) + A1 g(t1) exact on 1 and t: A0 = 2 t1/(t1 - t0), A1 = -2 t0/(t1 - t0).
QuadRule two_point_rule(const ExactScalar& t0, const ExactScalar& t1);

/**
 * Region of (t0, t1) for the two-point family. The degree-1 defect is
 * 2/3 + 2 t0 t1; on the hyperbola where it vanishes the rule gains a degree and
 * the sign comes from the integral of (t - t0)^2 (t - t1).
 */
RegionLabel two_point_classify(const ExactScalar& t0, const ExactScalar& t1);

/// Three-point rule exact on 1, t, t^2 with the closed-form weights.
QuadRule three_point_weights(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2);

/// P = Q(t^3) for the three-point rule: P < 0 positive, P > 0 negative, P = 0 degree >= 3.
ExactScalar three_point_sign(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2);

RegionLabel three_point_classify(const ExactScalar& t0, const ExactScalar& t1, const ExactScalar& t2);

/// Gauss-Legendre rule with 3 nodes: 5/9, 8/9, 5/9 at -sqrt(3/5), 0, sqrt(3/5).
QuadRule gauss3();

enum class Family { TwoPoint, ThreePointSlice };

struct RasterSpec {
    Family family = Family::TwoPoint;
    int gridSize = 64;
    /// t2 for the three-point slice.
    std::optional<Rational> fixedCoordinate;
    /// Cells with |classifier value| below this are flagged as boundary (display only).
    Rational boundaryBand = Rational(mpz_class(1), mpz_class(100));
};

struct RasterCell {
    Rational t0;
    Rational t1;
    RegionLabel label = RegionLabel::Invalid;
    bool boundary = false;
};

/**
 * Grid of classified lattice points t = i * 2/(gridSize-1) - 1. Row 0 is
 * t1 = +1 (top of the image), column 0 is t0 = -1.
 */
class RegionRaster {
public:
    RegionRaster(RasterSpec spec, std::vector<RasterCell> cells);

    const RasterSpec& spec() const noexcept { return spec_; }
    int size() const noexcept { return spec_.gridSize; }
    const RasterCell& at(int row, int col) const;
    /// Cell whose lattice point is nearest to (t0, t1).
    const RasterCell& cell_near(const Rational& t0, const Rational& t1) const;
    /// 255 positive, 0 negative, 128 boundary or raised degree, 64 invalid.
    std::uint8_t pixel(const RasterCell& cell) const;

    std::size_t count(RegionLabel label) const;

    /// Binary PGM (P5), one byte per cell, row-major.
    void write_pgm(std::ostream& os) const;
    /// "t0,t1,label" lines with a header.
    void write_csv(std::ostream& os) const;

private:
    RasterSpec spec_;
    std::vector<RasterCell> cells_;
};

RegionRaster region_raster(const RasterSpec& spec);

}  // namespace combquad
