#pragma once

#include <initializer_list>
#include <string>
#include <tuple>
#include <vector>

#include "copatt/bigint.hpp"

namespace copatt {

/// Per-variable truncation degrees for the variables x, y, z.
struct Caps {
    int nx = 0, ny = 0, nz = 0;

    bool contains(int a, int b, int c) const {
        return 0 <= a && a <= nx && 0 <= b && b <= ny && 0 <= c && c <= nz;
    }
    size_t cells() const {
        return static_cast<size_t>(nx + 1) * static_cast<size_t>(ny + 1) *
               static_cast<size_t>(nz + 1);
    }
    bool operator==(const Caps&) const = default;
};

/// Three-variable power series with BigInt coefficients, truncated per
/// variable. Polynomials are the same type with the `exact` flag set; exact
/// operands use true polynomial arithmetic (caps grow), truncated operands
/// require identical caps. Coefficient reads outside the caps are an error,
/// never a silent 0.
class TruncatedSeries3 {
public:
    explicit TruncatedSeries3(Caps caps, bool exact = false);

    static TruncatedSeries3 zero(Caps caps) { return TruncatedSeries3(caps); }
    static TruncatedSeries3 one(Caps caps);

    /// Exact polynomial from (a, b, c, coefficient) terms; caps fit the terms.
    static TruncatedSeries3 poly(std::initializer_list<std::tuple<int, int, int, BigInt>> terms);

    Caps caps() const { return caps_; }
    bool exact() const { return exact_; }

    const BigInt& coeff(int a, int b, int c) const;
    void set(int a, int b, int c, BigInt v);

    /// Reinterprets within new caps: coefficients in the common box are kept,
    /// the rest dropped (truncation) or zero-filled (extension). The result is
    /// exact only if nothing nonzero was dropped from an exact operand.
    TruncatedSeries3 restricted(Caps caps) const;

    /// Equality is agreement of the coefficient tables on the common box.
    bool operator==(const TruncatedSeries3& o) const;

private:
    Caps caps_;
    bool exact_;
    std::vector<BigInt> c_;

    size_t idx(int a, int b, int c) const {
        return (static_cast<size_t>(a) * static_cast<size_t>(caps_.ny + 1) +
                static_cast<size_t>(b)) *
                   static_cast<size_t>(caps_.nz + 1) +
               static_cast<size_t>(c);
    }

    friend TruncatedSeries3 add(const TruncatedSeries3&, const TruncatedSeries3&);
    friend TruncatedSeries3 sub(const TruncatedSeries3&, const TruncatedSeries3&);
    friend TruncatedSeries3 mul_serial(const TruncatedSeries3&, const TruncatedSeries3&);
    friend TruncatedSeries3 mul(const TruncatedSeries3&, const TruncatedSeries3&);
    friend TruncatedSeries3 invert_unit(const TruncatedSeries3&);
};

TruncatedSeries3 add(const TruncatedSeries3& f, const TruncatedSeries3& g);
TruncatedSeries3 sub(const TruncatedSeries3& f, const TruncatedSeries3& g);

/// Truncated Cauchy product (or exact polynomial product when both operands
/// are exact). `mul` parallelizes over output cells for large boxes;
/// `mul_serial` is the reference implementation.
TruncatedSeries3 mul(const TruncatedSeries3& f, const TruncatedSeries3& g);
TruncatedSeries3 mul_serial(const TruncatedSeries3& f, const TruncatedSeries3& g);

/// Series inverse of a unit (constant term +-1), up to f's caps.
TruncatedSeries3 invert_unit(const TruncatedSeries3& f);

/// A rational generating function: numerator and denominator polynomials,
/// denominator constant term exactly 1.
struct RationalGF {
    TruncatedSeries3 num;
    TruncatedSeries3 den;

    RationalGF(TruncatedSeries3 n, TruncatedSeries3 d);
};

/// num * invert_unit(den), both restricted to `caps` first.
TruncatedSeries3 expand(const RationalGF& r, Caps caps);

/// Substitutes y = 1 (resp. z = 1) in an exact polynomial by collapsing the
/// variable's axis.
TruncatedSeries3 set_y1(const TruncatedSeries3& p);
TruncatedSeries3 set_z1(const TruncatedSeries3& p);

/// One line per nonzero coefficient, "a b c coefficient", lexicographic (a,b,c).
std::string dump(const TruncatedSeries3& f);

}  // namespace copatt
