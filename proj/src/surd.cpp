#include "flagcurv/surd.hpp"

#include <stdexcept>

namespace flagcurv {

Surd::Surd(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
    if (d < 0) throw std::domain_error("negative radicand");
    if (b == 0 || d == 0) {
        b = 0;
        d = 0;
        return;
    }
    auto [s, df] = extract_square(d);
    if (df == 1 || df == 0) {  // perfect square: fold into the rational part
        a += b * Rat(s);
        b = 0;
        d = 0;
    } else {
        b *= Rat(s);
        d = df;
    }
}

Surd Surd::sqrt_of(const Rat& q) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    if (q == 0) return rational(0);
    // sqrt(p/r) = sqrt(p*r)/r.
    Int pr = rat_num(q) * rat_den(q);
    auto [s, d] = extract_square(pr);
    return Surd(0, Rat(s, rat_den(q)), d);
}

int Surd::sign() const {
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == sb) return sa;
    // a and b*sqrt(d) compete: compare a^2 against b^2 d.
    Rat lhs = a * a, rhs = b * b * Rat(d);
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

Surd operator+(const Surd& x, const Surd& y) {
    if (x.b == 0) return Surd(x.a + y.a, y.b, y.d);
    if (y.b == 0) return Surd(x.a + y.a, x.b, x.d);
    if (x.d != y.d) throw std::domain_error("incompatible radicands in surd addition");
    return Surd(x.a + y.a, x.b + y.b, x.d);
}

Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

Surd operator*(const Surd& x, const Surd& y) {
    if (x.b == 0) return Surd(x.a * y.a, x.a * y.b, y.d);
    if (y.b == 0) return Surd(x.a * y.a, y.a * x.b, x.d);
    if (x.d != y.d) throw std::domain_error("incompatible radicands in surd product");
    return Surd(x.a * y.a + x.b * y.b * Rat(x.d), x.a * y.b + x.b * y.a, x.d);
}

Rat Surd::approx(int prec_digits) const {
    if (b == 0) return a;
    Int scale = 1;
    for (int i = 0; i < prec_digits + 4; ++i) scale *= 10;
    // sqrt(d) ~ isqrt(d * scale^2) / scale, within 1/scale.
    Rat root(isqrt(d * scale * scale), scale);
    return a + b * root;
}

std::string Surd::decimal(int digits) const {
    return decimal_string(approx(digits + 6), digits);
}

std::string Surd::str() const {
    if (b == 0) return rat_num(a).str() + (rat_den(a) == 1 ? "" : "/" + rat_den(a).str());
    auto rat_str = [](const Rat& q) {
        return rat_num(q).str() + (rat_den(q) == 1 ? "" : "/" + rat_den(q).str());
    };
    std::string radical = "sqrt(" + d.str() + ")";
    std::string bpart;
    if (b == 1) {
        bpart = radical;
    } else if (b == -1) {
        bpart = "-" + radical;
    } else {
        bpart = rat_str(b) + "*" + radical;
    }
    if (a == 0) return bpart;
    if (b > 0) return rat_str(a) + " + " + bpart;
    if (b == -1) return rat_str(a) + " - " + radical;
    return rat_str(a) + " - " + rat_str(-b) + "*" + radical;
}

}  // namespace flagcurv
