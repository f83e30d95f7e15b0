#include "flagcurv/rational.hpp"

#include <algorithm>
#include <cctype>

namespace flagcurv {

Rat parse_rational(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    // Scientific notation: mantissa times a power of ten, still exact.
    auto epos = s.find_first_of("eE", 1);
    if (epos != std::string::npos && s.find('/') == std::string::npos) {
        Rat mant = parse_rational(s.substr(0, epos));
        std::string expstr = s.substr(epos + 1);
        if (expstr.empty()) throw std::invalid_argument("bad literal '" + text + "'");
        bool eneg = false;
        std::size_t k = 0;
        if (expstr[0] == '+' || expstr[0] == '-') {
            eneg = (expstr[0] == '-');
            k = 1;
        }
        if (k == expstr.size()) throw std::invalid_argument("bad literal '" + text + "'");
        long e = std::stol(expstr.substr(k));
        for (long t = 0; t < e; ++t) mant *= (eneg ? Rat(1, 10) : Rat(10));
        return mant;
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    auto slash = s.find('/', i);
    if (slash != std::string::npos) {
        Int num(s.substr(i, slash - i));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        Rat q(num, den);
        return neg ? Rat(-q) : q;
    }
    auto dot = s.find('.', i);
    if (dot != std::string::npos) {
        std::string whole = s.substr(i, dot - i);
        std::string frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("bad literal '" + text + "'");
        for (char c : whole)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad literal '" + text + "'");
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad literal '" + text + "'");
        Int num = whole.empty() ? Int(0) : Int(whole);
        Int den = 1;
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rat q(num, den);
        return neg ? Rat(-q) : q;
    }
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw std::invalid_argument("bad literal '" + text + "'");
    if (i == s.size()) throw std::invalid_argument("bad literal '" + text + "'");
    Rat q{Int(s.substr(i))};
    return neg ? Rat(-q) : q;
}

std::string decimal_string(const Rat& q, int sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    if (q == 0) return "0";
    bool neg = q < 0;
    Rat a = rat_abs(q);

    // Scale so that the leading digit sits at position sig_digits.
    int exp10 = 0;  // a ~ mantissa * 10^exp10 with mantissa in [1,10)
    Rat t = a;
    while (t >= 10) {
        t /= 10;
        ++exp10;
    }
    while (t < 1) {
        t *= 10;
        --exp10;
    }
    // Round a * 10^(sig_digits-1-exp10) to nearest integer (half away from zero).
    int shift = sig_digits - 1 - exp10;
    Rat scaled = a;
    for (int k = 0; k < shift; ++k) scaled *= 10;
    for (int k = 0; k < -shift; ++k) scaled /= 10;
    Int m = (rat_num(scaled) * 2 + rat_den(scaled)) / (rat_den(scaled) * 2);
    std::string digits = m.str();
    if (static_cast<int>(digits.size()) > sig_digits) {
        // Rounding overflowed (e.g. 9.99 -> 10.0); drop the extra digit.
        digits.pop_back();
        ++exp10;
    }

    // Place the decimal point at exp10 relative to the first digit.
    std::string out;
    if (exp10 >= static_cast<int>(digits.size()) - 1) {
        out = digits + std::string(exp10 - digits.size() + 1, '0');
    } else if (exp10 >= 0) {
        out = digits.substr(0, exp10 + 1) + "." + digits.substr(exp10 + 1);
    } else {
        out = "0." + std::string(-exp10 - 1, '0') + digits;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return neg ? "-" + out : out;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
    while (true) {
        Int y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

std::pair<Int, Int> extract_square(Int n) {
    if (n < 0) throw std::domain_error("extract_square of negative");
    if (n == 0) return {0, 0};
    Int s = 1, d = 1;
    for (Int p = 2; p * p <= n; p = (p == 2 ? Int(3) : p + 2)) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        for (int k = 0; k + 1 < e; k += 2) s *= p;
        if (e % 2 == 1) d *= p;
    }
    d *= n;  // leftover prime
    return {s, d};
}

}  // namespace flagcurv
