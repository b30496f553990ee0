#include "fgdyn/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fgdyn/error.hpp"

namespace fgdyn {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t coeff) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long double IntPolynomial::eval(long double t) const {
    long double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + static_cast<long double>(*it);
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    std::vector<std::int64_t> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<std::int64_t>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<std::int64_t> r(std::max(p.c_.size(), q.c_.size()), 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
    std::vector<std::int64_t> r(std::max(p.c_.size(), q.c_.size()), 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) r[i] -= q.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<std::int64_t> r(p.c_.size() + q.c_.size() - 1, 0);
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
    }
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const std::int64_t a = c_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        const std::int64_t mag = std::llabs(a);
        if (s.empty()) {
            if (a < 0) s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        if (mag != 1 || i == 0) s += std::to_string(mag);
        if (i >= 1) s += "t";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& divisor) {
    if (divisor.is_zero() || divisor.leading() != 1) throw RangeError("divide_exact needs a monic divisor");
    std::vector<std::int64_t> rem = p.coeffs();
    const int dd = divisor.degree();
    if (p.degree() < dd) {
        if (p.is_zero()) return IntPolynomial{};
        return std::nullopt;
    }
    std::vector<std::int64_t> quot(static_cast<std::size_t>(p.degree() - dd) + 1, 0);
    for (int i = p.degree(); i >= dd; --i) {
        const std::int64_t q = rem[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor[j];
    }
    for (std::int64_t r : rem) {
        if (r != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial t_pow(int e) { return IntPolynomial::monomial(e); }
const IntPolynomial kOne = IntPolynomial::constant(1);
const IntPolynomial kTwo = IntPolynomial::constant(2);

}  // namespace

IntPolynomial char_poly(const OrbitData& d) {
    const int n1 = d.n1, n2 = d.n2, n3 = d.n3;
    if (n1 < 1 || n2 < 1 || n3 < 1) throw RangeError("orbit lengths must be positive");
    const IntPolynomial t = t_pow(1);
    switch (d.tau) {
        case Tau::Cyc123:
            return (t - kOne) * ((t_pow(n1) + kOne) * (t_pow(n2) + kOne) * (t_pow(n3) + kOne) + kOne) -
                   (t_pow(n1 + n2 + n3) - kOne);
        case Tau::Swap12:
            return (t - kOne) * (t_pow(n3) * (t_pow(n1) + kOne) * (t_pow(n2) + kOne) - t_pow(n1) - t_pow(n2) - kTwo) -
                   (t_pow(n1 + n2) - kOne) * (t_pow(n3) - kOne);
        case Tau::Id: {
            const int N = n1 + n2 + n3;
            return t * (t_pow(N) - t_pow(n1) - t_pow(n2) - t_pow(n3) + kTwo) -
                   (kTwo * t_pow(N) - t_pow(n1 + n2) - t_pow(n1 + n3) - t_pow(n2 + n3) + kOne);
        }
    }
    return {};
}

std::optional<double> largest_real_root(const IntPolynomial& p, double tol) {
    if (!(tol > 0)) throw RangeError("tolerance must be positive");
    if (p.is_zero()) throw RangeError("largest_real_root of the zero polynomial");
    const long double lead = static_cast<long double>(p.leading());
    long double maxratio = 0;
    for (int i = 0; i < p.degree(); ++i) {
        maxratio = std::max(maxratio, std::fabs(static_cast<long double>(p[i]) / lead));
    }
    const long double lo = 1.0L;
    const long double hi = 1.0L + maxratio;
    // Scan downward from the Cauchy bound for the first sign change.
    const int steps = std::max(1 << 16, 256 * std::max(1, p.degree()));
    const long double h = (hi - lo) / steps;
    long double right = hi;
    long double fr = p.eval(right);
    if (fr == 0 && right > lo) return static_cast<double>(right);
    for (int s = steps - 1; s >= 0; --s) {
        long double left = lo + h * s;
        long double fl = p.eval(left);
        if (fl == 0) {
            if (left > lo || s == 0) return static_cast<double>(left);
        }
        if ((fl < 0) != (fr < 0) && fl != 0 && fr != 0) {
            long double a = left, b = right, fa = fl;
            while (b - a > tol) {
                const long double mid = (a + b) / 2;
                const long double fm = p.eval(mid);
                if (fm == 0) return static_cast<double>(mid);
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            return static_cast<double>((a + b) / 2);
        }
        right = left;
        fr = fl;
    }
    return std::nullopt;
}

int euler_phi(int d) {
    int result = d;
    int x = d;
    for (int q = 2; q * q <= x; ++q) {
        if (x % q == 0) {
            while (x % q == 0) x /= q;
            result -= result / q;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

IntPolynomial cyclotomic(int d) {
    if (d < 1) throw RangeError("cyclotomic index must be positive");
    // Möbius product: Φ_d = Π_{e | d} (t^e - 1)^{μ(d/e)}.
    auto mobius = [](int x) {
        int sign = 1;
        for (int q = 2; q * q <= x; ++q) {
            if (x % q == 0) {
                x /= q;
                if (x % q == 0) return 0;
                sign = -sign;
            }
        }
        if (x > 1) sign = -sign;
        return sign;
    };
    IntPolynomial num = kOne;
    std::vector<IntPolynomial> den;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        const int mu = mobius(d / e);
        if (mu == 1) num = num * (t_pow(e) - kOne);
        if (mu == -1) den.push_back(t_pow(e) - kOne);
    }
    for (const IntPolynomial& q : den) num = *divide_exact(num, q);
    return num;
}

IntPolynomial cyclotomic_strip(const IntPolynomial& p) {
    IntPolynomial cur = p;
    const int deg = p.degree();
    if (deg < 1) return cur;
    // φ(d) >= sqrt(d/2), so every d with φ(d) <= deg satisfies d <= 2 deg^2.
    const int bound = 2 * deg * deg;
    for (int d = 1; d <= bound; ++d) {
        if (euler_phi(d) > cur.degree()) continue;
        const IntPolynomial phi = cyclotomic(d);
        while (cur.degree() >= phi.degree()) {
            auto q = divide_exact(cur, phi);
            if (!q) break;
            cur = *q;
        }
    }
    return cur;
}

}  // namespace fgdyn
