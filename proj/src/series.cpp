#include "copatt/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace copatt {

namespace {

Caps common_box(Caps a, Caps b) {
    return {std::min(a.nx, b.nx), std::min(a.ny, b.ny), std::min(a.nz, b.nz)};
}

Caps max_box(Caps a, Caps b) {
    return {std::max(a.nx, b.nx), std::max(a.ny, b.ny), std::max(a.nz, b.nz)};
}

void require_same_caps(const TruncatedSeries3& f, const TruncatedSeries3& g, const char* op) {
    if (!(f.caps() == g.caps()))
        throw std::invalid_argument(std::string(op) + ": cap mismatch on truncated operands");
}

}  // namespace

TruncatedSeries3::TruncatedSeries3(Caps caps, bool exact) : caps_(caps), exact_(exact) {
    if (caps.nx < 0 || caps.ny < 0 || caps.nz < 0)
        throw std::invalid_argument("series caps must be nonnegative");
    c_.assign(caps.cells(), BigInt(0));
}

TruncatedSeries3 TruncatedSeries3::one(Caps caps) {
    TruncatedSeries3 f(caps);
    f.set(0, 0, 0, 1);
    return f;
}

TruncatedSeries3 TruncatedSeries3::poly(
    std::initializer_list<std::tuple<int, int, int, BigInt>> terms) {
    Caps caps{0, 0, 0};
    for (const auto& [a, b, c, v] : terms) {
        (void)v;
        caps.nx = std::max(caps.nx, a);
        caps.ny = std::max(caps.ny, b);
        caps.nz = std::max(caps.nz, c);
    }
    TruncatedSeries3 p(caps, true);
    for (const auto& [a, b, c, v] : terms) p.set(a, b, c, p.coeff(a, b, c) + v);
    return p;
}

const BigInt& TruncatedSeries3::coeff(int a, int b, int c) const {
    if (!caps_.contains(a, b, c))
        throw std::out_of_range("coefficient (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ") is outside the series caps");
    return c_[idx(a, b, c)];
}

void TruncatedSeries3::set(int a, int b, int c, BigInt v) {
    if (!caps_.contains(a, b, c))
        throw std::out_of_range("coefficient write outside the series caps");
    c_[idx(a, b, c)] = std::move(v);
}

TruncatedSeries3 TruncatedSeries3::restricted(Caps caps) const {
    TruncatedSeries3 out(caps, false);
    const Caps box = common_box(caps_, caps);
    bool dropped = false;
    for (int a = 0; a <= caps_.nx; ++a)
        for (int b = 0; b <= caps_.ny; ++b)
            for (int c = 0; c <= caps_.nz; ++c) {
                const BigInt& v = c_[idx(a, b, c)];
                if (v == 0) continue;
                if (box.contains(a, b, c)) out.set(a, b, c, v);
                else dropped = true;
            }
    out.exact_ = exact_ && !dropped;
    return out;
}

bool TruncatedSeries3::operator==(const TruncatedSeries3& o) const {
    const Caps box = common_box(caps_, o.caps_);
    for (int a = 0; a <= box.nx; ++a)
        for (int b = 0; b <= box.ny; ++b)
            for (int c = 0; c <= box.nz; ++c)
                if (coeff(a, b, c) != o.coeff(a, b, c)) return false;
    return true;
}

TruncatedSeries3 add(const TruncatedSeries3& f, const TruncatedSeries3& g) {
    if (f.exact_ && g.exact_) {
        TruncatedSeries3 out(max_box(f.caps_, g.caps_), true);
        for (int a = 0; a <= out.caps_.nx; ++a)
            for (int b = 0; b <= out.caps_.ny; ++b)
                for (int c = 0; c <= out.caps_.nz; ++c) {
                    BigInt v = 0;
                    if (f.caps_.contains(a, b, c)) v += f.coeff(a, b, c);
                    if (g.caps_.contains(a, b, c)) v += g.coeff(a, b, c);
                    if (v != 0) out.set(a, b, c, std::move(v));
                }
        return out;
    }
    require_same_caps(f, g, "add");
    TruncatedSeries3 out(f.caps_);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f.c_[i] + g.c_[i];
    return out;
}

TruncatedSeries3 sub(const TruncatedSeries3& f, const TruncatedSeries3& g) {
    if (f.exact_ && g.exact_) {
        TruncatedSeries3 out(max_box(f.caps_, g.caps_), true);
        for (int a = 0; a <= out.caps_.nx; ++a)
            for (int b = 0; b <= out.caps_.ny; ++b)
                for (int c = 0; c <= out.caps_.nz; ++c) {
                    BigInt v = 0;
                    if (f.caps_.contains(a, b, c)) v += f.coeff(a, b, c);
                    if (g.caps_.contains(a, b, c)) v -= g.coeff(a, b, c);
                    if (v != 0) out.set(a, b, c, std::move(v));
                }
        return out;
    }
    require_same_caps(f, g, "sub");
    TruncatedSeries3 out(f.caps_);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = f.c_[i] - g.c_[i];
    return out;
}

namespace {

// One output cell of the Cauchy product, clipped to the operand boxes.
BigInt product_cell(const TruncatedSeries3& f, const TruncatedSeries3& g, int a, int b, int c) {
    BigInt acc = 0;
    const Caps fc = f.caps(), gc = g.caps();
    const int ia_lo = std::max(0, a - gc.nx), ia_hi = std::min(a, fc.nx);
    const int ib_lo = std::max(0, b - gc.ny), ib_hi = std::min(b, fc.ny);
    const int ic_lo = std::max(0, c - gc.nz), ic_hi = std::min(c, fc.nz);
    for (int i = ia_lo; i <= ia_hi; ++i)
        for (int j = ib_lo; j <= ib_hi; ++j)
            for (int k = ic_lo; k <= ic_hi; ++k) {
                const BigInt& fv = f.coeff(i, j, k);
                if (fv == 0) continue;
                const BigInt& gv = g.coeff(a - i, b - j, c - k);
                if (gv == 0) continue;
                acc += fv * gv;
            }
    return acc;
}

Caps product_caps(const TruncatedSeries3& f, const TruncatedSeries3& g, bool& exact) {
    if (f.exact() && g.exact()) {
        exact = true;
        return {f.caps().nx + g.caps().nx, f.caps().ny + g.caps().ny, f.caps().nz + g.caps().nz};
    }
    require_same_caps(f, g, "mul");
    exact = false;
    return f.caps();
}

}  // namespace

TruncatedSeries3 mul_serial(const TruncatedSeries3& f, const TruncatedSeries3& g) {
    bool exact = false;
    const Caps caps = product_caps(f, g, exact);
    TruncatedSeries3 out(caps, exact);
    for (int a = 0; a <= out.caps_.nx; ++a)
        for (int b = 0; b <= out.caps_.ny; ++b)
            for (int c = 0; c <= out.caps_.nz; ++c)
                out.c_[out.idx(a, b, c)] = product_cell(f, g, a, b, c);
    return out;
}

TruncatedSeries3 mul(const TruncatedSeries3& f, const TruncatedSeries3& g) {
    bool exact = false;
    const Caps caps = product_caps(f, g, exact);
    TruncatedSeries3 out(caps, exact);
    const int nx = out.caps_.nx, ny = out.caps_.ny, nz = out.caps_.nz;
#pragma omp parallel for collapse(2) schedule(static) if (out.caps_.cells() >= 4096)
    for (int a = 0; a <= nx; ++a)
        for (int b = 0; b <= ny; ++b)
            for (int c = 0; c <= nz; ++c)
                out.c_[out.idx(a, b, c)] = product_cell(f, g, a, b, c);
    return out;
}

TruncatedSeries3 invert_unit(const TruncatedSeries3& f) {
    const BigInt& f0 = f.coeff(0, 0, 0);
    if (f0 != 1 && f0 != -1)
        throw std::invalid_argument("invert_unit: constant term must be +1 or -1");
    TruncatedSeries3 g(f.caps_);
    g.set(0, 0, 0, f0);
    // componentwise-increasing order, so every referenced cell is ready
    for (int a = 0; a <= f.caps_.nx; ++a)
        for (int b = 0; b <= f.caps_.ny; ++b)
            for (int c = 0; c <= f.caps_.nz; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                BigInt acc = 0;
                for (int i = 0; i <= a; ++i)
                    for (int j = 0; j <= b; ++j)
                        for (int k = 0; k <= c; ++k) {
                            if (i == 0 && j == 0 && k == 0) continue;
                            const BigInt& fv = f.c_[f.idx(i, j, k)];
                            if (fv == 0) continue;
                            acc += fv * g.c_[g.idx(a - i, b - j, c - k)];
                        }
                g.c_[g.idx(a, b, c)] = -f0 * acc;
            }
    return g;
}

RationalGF::RationalGF(TruncatedSeries3 n, TruncatedSeries3 d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.coeff(0, 0, 0) != 1)
        throw std::invalid_argument("RationalGF: denominator constant term must be 1");
}

TruncatedSeries3 expand(const RationalGF& r, Caps caps) {
    return mul(r.num.restricted(caps), invert_unit(r.den.restricted(caps)));
}

namespace {

TruncatedSeries3 collapse_axis(const TruncatedSeries3& p, int axis) {
    if (!p.exact())
        throw std::invalid_argument("variable substitution requires an exact polynomial");
    Caps caps = p.caps();
    Caps out_caps = caps;
    (axis == 1 ? out_caps.ny : out_caps.nz) = 0;
    TruncatedSeries3 out(out_caps, true);
    for (int a = 0; a <= caps.nx; ++a)
        for (int b = 0; b <= caps.ny; ++b)
            for (int c = 0; c <= caps.nz; ++c) {
                const BigInt& v = p.coeff(a, b, c);
                if (v == 0) continue;
                const int ob = axis == 1 ? 0 : b;
                const int oc = axis == 2 ? 0 : c;
                out.set(a, ob, oc, out.coeff(a, ob, oc) + v);
            }
    return out;
}

}  // namespace

TruncatedSeries3 set_y1(const TruncatedSeries3& p) { return collapse_axis(p, 1); }
TruncatedSeries3 set_z1(const TruncatedSeries3& p) { return collapse_axis(p, 2); }

std::string dump(const TruncatedSeries3& f) {
    std::string out;
    const Caps caps = f.caps();
    for (int a = 0; a <= caps.nx; ++a)
        for (int b = 0; b <= caps.ny; ++b)
            for (int c = 0; c <= caps.nz; ++c) {
                const BigInt& v = f.coeff(a, b, c);
                if (v == 0) continue;
                out += std::to_string(a) + ' ' + std::to_string(b) + ' ' + std::to_string(c) +
                       ' ' + v.str() + '\n';
            }
    return out;
}

}  // namespace copatt
