#include "phirho/segment_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace phirho {

namespace {

// Image interval of a piece, as [start, end] with start <= end.
std::pair<Rational, Rational> image_of(const Piece& p) {
    if (p.slope == 1) return {p.lo + p.intercept, p.hi + p.intercept};
    return {p.intercept - p.hi, p.intercept - p.lo};
}

}  // namespace

SegmentMap SegmentMap::validated(std::vector<Piece> pieces) {
    if (pieces.empty()) throw std::invalid_argument("segment map: no pieces");
    Rational cursor(0);
    for (const auto& p : pieces) {
        if (p.slope != 1 && p.slope != -1)
            throw std::invalid_argument("segment map: slope must be +1 or -1");
        if (!(p.lo < p.hi)) throw std::invalid_argument("segment map: empty piece");
        if (p.lo != cursor)
            throw std::invalid_argument("segment map: pieces must tile [0,1] in order");
        cursor = p.hi;
        const auto [a, b] = image_of(p);
        if (a.sign() < 0 || b > Rational(1))
            throw std::invalid_argument("segment map: image leaves [0,1]");
    }
    if (cursor != Rational(1))
        throw std::invalid_argument("segment map: pieces must tile [0,1] in order");

    // Measure preservation: since every piece is an isometry onto its image,
    // h pushes lambda forward to lambda exactly when the images tile [0,1].
    std::vector<std::pair<Rational, Rational>> images;
    images.reserve(pieces.size());
    for (const auto& p : pieces) images.push_back(image_of(p));
    std::sort(images.begin(), images.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Rational icursor(0);
    for (const auto& [a, b] : images) {
        if (a != icursor)
            throw std::invalid_argument("segment map: not measure-preserving");
        icursor = b;
    }
    if (icursor != Rational(1))
        throw std::invalid_argument("segment map: not measure-preserving");
    return SegmentMap(std::move(pieces));
}

SegmentMap::SegmentMap(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    views_.reserve(pieces_.size());
    for (const auto& p : pieces_)
        views_.push_back({p.lo.to_double(), p.hi.to_double(), p.slope, p.intercept.to_double()});
}

Rational SegmentMap::operator()(const Rational& t) const {
    if (t.sign() < 0 || t > Rational(1))
        throw std::invalid_argument("segment map: argument outside [0,1]");
    for (const auto& p : pieces_) {
        if (t < p.hi || &p == &pieces_.back()) {
            return p.slope == 1 ? t + p.intercept : p.intercept - t;
        }
    }
    return Rational(0);  // unreachable
}

SegmentMap shuffle_support(const Permutation& p) {
    const int n = p.size();
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Piece pc;
        pc.lo = Rational(i - 1, n);
        pc.hi = Rational(i, n);
        pc.slope = 1;
        pc.intercept = Rational(p(i) - i, n);
        pieces.push_back(std::move(pc));
    }
    return SegmentMap::validated(std::move(pieces));
}

Rational cdf(const SegmentMap& map, const Rational& u, const Rational& v) {
    Rational total;
    for (const auto& p : map.pieces()) {
        if (p.lo >= u) break;
        const Rational b = min(p.hi, u);
        if (p.slope == 1) {
            // t + c <= v  <=>  t <= v - c
            const Rational top = min(b, v - p.intercept);
            if (top > p.lo) total += top - p.lo;
        } else {
            // c - t <= v  <=>  t >= c - v
            const Rational bot = max(p.lo, p.intercept - v);
            if (b > bot) total += b - bot;
        }
    }
    return total;
}

double cdf(const SegmentMap& map, double u, double v) {
    double total = 0.0;
    for (const auto& p : map.views()) {
        if (p.lo >= u) break;
        const double b = std::min(p.hi, u);
        if (p.slope == 1) {
            const double top = std::min(b, v - p.intercept);
            if (top > p.lo) total += top - p.lo;
        } else {
            const double bot = std::max(p.lo, p.intercept - v);
            if (b > bot) total += b - bot;
        }
    }
    return total;
}

Rational phi_exact(const SegmentMap& map) {
    // phi = 6 int min(u, h(u)) du - 2.  Per piece the integrand is linear on
    // either side of the (at most one) crossing with the main diagonal.
    const Rational half(1, 2);
    Rational integral;
    for (const auto& p : map.pieces()) {
        if (p.slope == 1) {
            // min(u, u + c) == u + min(0, c)
            integral += half * (p.hi * p.hi - p.lo * p.lo);
            if (p.intercept.sign() < 0) integral += p.intercept * (p.hi - p.lo);
        } else {
            // h(u) = c - u >= u exactly when u <= c/2
            const Rational a = max(p.lo, min(p.hi, p.intercept * half));
            integral += half * (a * a - p.lo * p.lo);
            integral += p.intercept * (p.hi - a) - half * (p.hi * p.hi - a * a);
        }
    }
    return Rational(6) * integral - Rational(2);
}

Rational rho_exact(const SegmentMap& map) {
    // rho = 12 E[U h(U)] - 3 with U uniform on [0,1].
    Rational moment;
    for (const auto& p : map.pieces()) {
        const Rational cubes = pow_ui(p.hi, 3) - pow_ui(p.lo, 3);
        const Rational squares = p.hi * p.hi - p.lo * p.lo;
        moment += Rational(p.slope) * cubes / Rational(3) + p.intercept * squares / Rational(2);
    }
    return Rational(12) * moment - Rational(3);
}

}  // namespace phirho
