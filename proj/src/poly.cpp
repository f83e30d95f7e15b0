#include "flagcurv/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "flagcurv/errors.hpp"

namespace flagcurv {

void Poly::add_term(Mono m, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(m.size()) != nvars_) throw std::logic_error("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int index, int power) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m.at(index) = power;
    p.add_term(std::move(m), 1);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Mono& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.begin()->second;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::logic_error("polynomial arity mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (nvars_ != rhs.nvars_) throw std::logic_error("polynomial arity mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, Rat(-c));
    return *this;
}

Poly Poly::operator-() const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, Rat(-c));
    return p;
}

Poly& Poly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::logic_error("polynomial arity mismatch");
    Poly p(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Poly::Mono m(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            p.add_term(std::move(m), ca * cb);
        }
    }
    return p;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::logic_error("negative polynomial power");
    Poly r = constant(nvars_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.at(var));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = std::accumulate(m.begin(), m.end(), 0);
        if (d < 0) d = t;
        if (t != d) return false;
    }
    return true;
}

Poly Poly::coeff_of(int var, int k) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.at(var) != k) continue;
        Mono reduced = m;
        reduced[var] = 0;
        p.add_term(std::move(reduced), c);
    }
    return p;
}

Poly Poly::derivative(int var) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.at(var) == 0) continue;
        Mono d = m;
        d[var] -= 1;
        p.add_term(std::move(d), c * m.at(var));
    }
    return p;
}

Rat Poly::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::logic_error("evaluation arity mismatch");
    Rat acc = 0;
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < m[i]; ++k) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(int var, const Rat& value) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int k = 0; k < m.at(var); ++k) t *= value;
        Mono reduced = m;
        reduced[var] = 0;
        p.add_term(std::move(reduced), t);
    }
    return p;
}

Rat Poly::content() const {
    Int gnum = 0, lden = 1;
    for (const auto& [m, c] : terms_) {
        gnum = boost::multiprecision::gcd(gnum, rat_num(c) < 0 ? Int(-rat_num(c)) : rat_num(c));
        lden = lden / boost::multiprecision::gcd(lden, rat_den(c)) * rat_den(c);
    }
    if (gnum == 0) return 0;
    return Rat(gnum, lden);
}

Poly Poly::primitive() const {
    Rat c = content();
    if (c == 0 || c == 1) return *this;
    Poly p(nvars_);
    for (const auto& [m, v] : terms_) p.terms_.emplace(m, Rat(v / c));
    return p;
}

std::vector<int> Poly::vars_present() const {
    std::vector<int> out;
    for (int v = 0; v < nvars_; ++v) {
        for (const auto& [m, c] : terms_) {
            if (m[v] > 0) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

std::vector<Rat> Poly::univariate(int var) const {
    std::vector<Rat> coeffs(degree_in(var) + 1, Rat(0));
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < nvars_; ++i) {
            if (i != var && m[i] != 0)
                throw std::logic_error("polynomial is not univariate in the requested variable");
        }
        coeffs.at(m.at(var)) = c;
    }
    return coeffs;
}

bool Poly::only_even_powers(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.at(var) % 2 != 0) return false;
    return true;
}

Poly Poly::halve_powers(int var) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        Mono h = m;
        if (h.at(var) % 2 != 0) throw std::logic_error("odd power in halve_powers");
        h[var] /= 2;
        p.add_term(std::move(h), c);
    }
    return p;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    // Print highest lex monomial first.
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string varpart;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!varpart.empty()) varpart += "*";
            varpart += names.at(i);
            if (m[i] > 1) varpart += "^" + std::to_string(m[i]);
        }
        if (varpart.empty()) {
            out << a;
        } else {
            if (a != 1) out << a << "*";
            out << varpart;
        }
    }
    return out.str();
}

namespace {

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;
    const std::vector<std::string>& params;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    Poly parse_expr() {
        Poly p = parse_term();
        while (true) {
            if (accept('+')) {
                p += parse_term();
            } else if (accept('-')) {
                p -= parse_term();
            } else {
                return p;
            }
        }
    }

    Poly parse_term() {
        Poly p = parse_factor();
        while (accept('*')) p = p * parse_factor();
        return p;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("expected exponent in '" + s + "'");
            base = base.pow(std::stoi(s.substr(start, pos - start)));
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of expression '" + s + "'");
        if (accept('(')) {
            Poly p = parse_expr();
            if (!accept(')')) throw std::invalid_argument("missing ')' in '" + s + "'");
            return p;
        }
        if (accept('-')) return -parse_factor();
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' || s[pos] == '/'))
                ++pos;
            return Poly::constant(static_cast<int>(params.size()),
                                  parse_rational(s.substr(start, pos - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            auto it = std::find(params.begin(), params.end(), name);
            if (it == params.end())
                throw std::invalid_argument("unknown parameter '" + name + "' in '" + s + "'");
            return Poly::variable(static_cast<int>(params.size()),
                                  static_cast<int>(it - params.begin()));
        }
        throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in '" + s + "'");
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& params) {
    ExprParser p{text, 0, params};
    Poly result = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("trailing input in expression '" + text + "'");
    return result;
}

}  // namespace flagcurv
