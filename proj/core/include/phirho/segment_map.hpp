#pragma once

// Piecewise linear measure-preserving maps h : [0,1] -> [0,1] with slopes
// +-1, and the copulas of (U, h(U)).  Shuffles are the special case where
// every piece has slope +1 and width 1/N.

#include <vector>

#include "phirho/rational.hpp"
#include "phirho/shuffles.hpp"

namespace phirho {

struct Piece {
    Rational lo;         // domain interval [lo, hi)
    Rational hi;
    int slope;           // +1 or -1
    Rational intercept;  // h(t) = slope*t + intercept on the piece
};

// Rounded copy of a Piece, cached so the sampling CDF does not convert
// rationals inside grid loops.
struct PieceView {
    double lo;
    double hi;
    int slope;
    double intercept;
};

class SegmentMap {
  public:
    // Validates: pieces tile [0,1] in order, slopes are +-1, each image lies
    // in [0,1], and the images tile [0,1] too (measure preservation).
    static SegmentMap validated(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    const std::vector<PieceView>& views() const { return views_; }

    // h(t); at a breakpoint the right-hand piece wins, h(1) from the last.
    Rational operator()(const Rational& t) const;

  private:
    explicit SegmentMap(std::vector<Piece> pieces);
    std::vector<Piece> pieces_;
    std::vector<PieceView> views_;
};

// The support map of the shuffle with strip order pi: piece i is
// ((i-1)/N, i/N) with slope +1 and intercept (pi(i)-i)/N.
SegmentMap shuffle_support(const Permutation& p);

// C(u,v) = lambda{t <= u : h(t) <= v}, the copula of (U, h(U)).
Rational cdf(const SegmentMap& map, const Rational& u, const Rational& v);
double cdf(const SegmentMap& map, double u, double v);

// Exact coefficients via piecewise integration of the copula.
Rational phi_exact(const SegmentMap& map);
Rational rho_exact(const SegmentMap& map);

}  // namespace phirho
