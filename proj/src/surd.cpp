#include "tds/surd.hpp"

#include <utility>

namespace tds::arith {

namespace {

// Common field tag for a binary operation; rationals adopt the other side's d.
Integer joint_field(const SurdValue& a, const SurdValue& b) {
    if (a.y() == 0) return b.y() == 0 ? Integer(1) : b.d();
    if (b.y() == 0) return a.d();
    if (a.d() != b.d())
        throw InternalError("surd arithmetic across distinct fields: sqrt(" +
                            to_string(a.d()) + ") vs sqrt(" + to_string(b.d()) + ")");
    return a.d();
}

}  // namespace

SurdValue::SurdValue(Rational x, Rational y, Integer d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
    if (y_ == 0) {
        d_ = 1;
    } else if (d_ <= 1) {
        throw InternalError("surd with d <= 1 and nonzero irrational part");
    }
}

SurdValue SurdValue::operator+(const SurdValue& o) const {
    Integer d = joint_field(*this, o);
    return SurdValue(x_ + o.x_, y_ + o.y_, d);
}

SurdValue SurdValue::operator-(const SurdValue& o) const {
    Integer d = joint_field(*this, o);
    return SurdValue(x_ - o.x_, y_ - o.y_, d);
}

SurdValue SurdValue::operator*(const SurdValue& o) const {
    Integer d = joint_field(*this, o);
    Rational dq(d);
    return SurdValue(x_ * o.x_ + dq * y_ * o.y_, x_ * o.y_ + y_ * o.x_, d);
}

SurdValue SurdValue::inverse() const {
    // Norm x^2 - d y^2 vanishes only at 0 since d is not a perfect square.
    Rational norm = x_ * x_ - Rational(d_) * y_ * y_;
    if (norm == 0) throw InternalError("inverse of zero surd");
    return SurdValue(x_ / norm, -y_ / norm, d_);
}

SurdValue SurdValue::operator/(const SurdValue& o) const { return *this * o.inverse(); }

SurdValue SurdValue::pow(long e) const {
    if (e == 0) return SurdValue(Rational(1));
    SurdValue base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    SurdValue acc{Rational(1)};
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool SurdValue::operator==(const SurdValue& o) const {
    if (x_ != o.x_ || y_ != o.y_) return false;
    return y_ == 0 || d_ == o.d_;
}

int SurdValue::sign() const {
    int sx = sgn(x_), sy = sgn(y_);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: compare x^2 against d y^2.
    Rational lhs = x_ * x_, rhs = Rational(d_) * y_ * y_;
    int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
    if (cmp == 0) throw InternalError("surd of norm zero with nonzero parts");
    return cmp > 0 ? sx : sy;
}

std::string SurdValue::str() const {
    if (y_ == 0) return to_string(x_);
    std::string s;
    if (x_ != 0) s = to_string(x_) + (sgn(y_) >= 0 ? " + " : " - ");
    else if (sgn(y_) < 0) s = "-";
    Rational ay = abs(y_);
    if (ay != 1) s += to_string(ay) + "*";
    s += "sqrt(" + to_string(d_) + ")";
    return s;
}

Integer surd_floor(const SurdValue& v) {
    // Write v = (P + Q*sqrt(d))/R with R > 0.
    Integer R = v.x().get_den() * v.y().get_den();
    Integer P = v.x().get_num() * v.y().get_den();
    Integer Q = v.y().get_num() * v.x().get_den();
    if (Q == 0) return fdiv(P, R);
    // floor(Q*sqrt(d)) from the integer square root of Q^2 d; for irrational
    // t, floor((P + t)/R) = floor((P + floor(t))/R).
    Integer s = isqrt(Q * Q * v.d());
    Integer t_floor = Q > 0 ? s : -s - 1;
    return fdiv(P + t_floor, R);
}

QuadraticIrrational QuadraticIrrational::affine(const Rational& mu, const Rational& sigma) const {
    if (mu == 0) throw InternalError("affine image with mu = 0");
    // mu*(p + q sqrt(d))/r + sigma over a common denominator.
    Integer num_scale = mu.get_num() * sigma.get_den();
    Integer den = r_ * mu.get_den() * sigma.get_den();
    Integer p_new = p_ * num_scale + sigma.get_num() * r_ * mu.get_den();
    Integer q_new = q_ * num_scale;
    return normalize_surd(p_new, q_new, den, d_);
}

std::string QuadraticIrrational::str() const {
    SurdValue v = value();
    return v.str();
}

namespace {

// Largest square divisor extraction: d = f^2 * d0 with d0 squarefree.
// Trial division up to a fixed bound, then a final perfect-square pull.
std::pair<Integer, Integer> extract_square(Integer d) {
    Integer f(1);
    Integer p(2);
    const Integer bound(1000000);
    while (p * p <= d && p <= bound) {
        Integer p2 = p * p;
        while (d % p2 == 0) {
            d /= p2;
            f *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (is_perfect_square(d)) {
        Integer s = isqrt(d);
        f *= s;
        d = 1;
    }
    return {f, d};
}

}  // namespace

QuadraticIrrational normalize_surd(Integer p, Integer q, Integer r, Integer d) {
    if (r == 0) throw InternalError("surd with zero denominator");
    if (d < 0) throw NonRealInput("sqrt of negative integer: " + to_string(d));
    auto [f, d0] = extract_square(d);
    q *= f;
    d = d0;
    if (q == 0 || d <= 1) throw RationalInput("value is rational, not a quadratic irrational");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Integer g = gcd(gcd(abs(p), abs(q)), r);
    p /= g;
    q /= g;
    r /= g;

    QuadraticIrrational rho;
    rho.p_ = p;
    rho.q_ = q;
    rho.r_ = r;
    rho.d_ = d;
    // From (r*rho - p)^2 = q^2 d: r^2 rho^2 - 2pr rho + p^2 - q^2 d = 0.
    Integer A = r * r;
    Integer B = -2 * p * r;
    Integer C = p * p - q * q * d;
    Integer gg = gcd(gcd(A, abs(B)), abs(C));
    rho.A_ = A / gg;
    rho.B_ = B / gg;
    rho.C_ = C / gg;
    rho.delta_ = rho.B_ * rho.B_ - 4 * rho.A_ * rho.C_;
    if (rho.delta_ <= 0 || is_perfect_square(rho.delta_))
        throw InternalError("degenerate discriminant in normalize_surd");
    return rho;
}

}  // namespace tds::arith
