#include "vcell/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vcell/errors.hpp"

namespace vcell {

BiPoly BiPoly::constant(const mpq_class& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const mpq_class& c, int i, int j) {
    BiPoly p;
    p.add_to(i, j, c);
    return p;
}

mpq_class BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void BiPoly::add_to(int i, int j, const mpq_class& v) {
    if (i < 0 || j < 0) throw DomainError("BiPoly: negative exponent");
    if (v == 0) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, v);
    if (!fresh) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

int BiPoly::degree_a() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
}

int BiPoly::degree_b() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

BiPoly BiPoly::swapped() const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(Key{k.second, k.first}, v);
    return r;
}

std::vector<std::vector<mpq_class>> BiPoly::by_b() const {
    std::vector<std::vector<mpq_class>> out(std::max(degree_b() + 1, 0),
                                            std::vector<mpq_class>(std::max(degree_a() + 1, 0)));
    for (const auto& [k, v] : terms_) out[k.second][k.first] = v;
    return out;
}

mpq_class BiPoly::eval(const mpq_class& a, const mpq_class& b) const {
    mpq_class acc = 0;
    for (const auto& [k, v] : terms_) {
        mpq_class t = v;
        for (int i = 0; i < k.first; ++i) t *= a;
        for (int j = 0; j < k.second; ++j) t *= b;
        acc += t;
    }
    return acc;
}

BiPoly operator-(const BiPoly& x) { return x * mpq_class(-1); }

BiPoly operator+(const BiPoly& x, const BiPoly& y) {
    BiPoly r = x;
    for (const auto& [k, v] : y.terms()) r.add_to(k.first, k.second, v);
    return r;
}

BiPoly operator-(const BiPoly& x, const BiPoly& y) { return x + (-y); }

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
    BiPoly r;
    for (const auto& [kx, vx] : x.terms())
        for (const auto& [ky, vy] : y.terms()) r.add_to(kx.first + ky.first, kx.second + ky.second, vx * vy);
    return r;
}

BiPoly operator*(const BiPoly& x, const mpq_class& k) {
    BiPoly r;
    if (k == 0) return r;
    for (const auto& [key, v] : x.terms()) r.add_to(key.first, key.second, v * k);
    return r;
}

BiPoly pow(const BiPoly& x, int n) {
    if (n < 0) throw DomainError("BiPoly: negative power");
    BiPoly r = BiPoly::constant(1);
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, v] = *it;
        mpq_class m = abs(v);
        os << (v < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        bool unit = m == 1 && (k.first || k.second);
        if (!unit) os << m.get_str();
        auto var = [&](char name, int e, bool lead) {
            if (!e) return;
            if (!lead) os << '*';
            os << name;
            if (e > 1) os << '^' << e;
        };
        var('a', k.first, unit);
        var('b', k.second, unit && !k.first);
        first = false;
    }
    return os.str();
}

namespace {

const BiPoly& c_squared() {
    static const BiPoly c2 = BiPoly::monomial(mpq_class(1, 2), 2, 0) + BiPoly::monomial(mpq_class(1, 2), 0, 2);
    return c2;
}

}  // namespace

QcPoly operator-(const QcPoly& x) { return {-x.u, -x.v}; }
QcPoly operator+(const QcPoly& x, const QcPoly& y) { return {x.u + y.u, x.v + y.v}; }
QcPoly operator-(const QcPoly& x, const QcPoly& y) { return {x.u - y.u, x.v - y.v}; }

QcPoly operator*(const QcPoly& x, const QcPoly& y) {
    return {x.u * y.u + x.v * y.v * c_squared(), x.u * y.v + x.v * y.u};
}

QcPoly pow(const QcPoly& x, int n) {
    if (n < 0) throw DomainError("QcPoly: negative power");
    QcPoly r{BiPoly::constant(1)};
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QcPoly parse() {
        QcPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char ch) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::string digits() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    QcPoly expr() {
        QcPoly r = term();
        for (;;) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }
    QcPoly term() {
        QcPoly r = unary();
        while (eat('*')) r = r * unary();
        return r;
    }
    QcPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        QcPoly base = atom();
        if (eat('^')) return pow(base, std::stoi(digits()));
        return base;
    }
    QcPoly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            QcPoly r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) return QcPoly{BiPoly::constant(mpq_class(digits()))};
        ++pos_;
        if (ch == 'a') return QcPoly{BiPoly::monomial(1, 1, 0)};
        if (ch == 'b') return QcPoly{BiPoly::monomial(1, 0, 1)};
        if (ch == 'c') return QcPoly{BiPoly{}, BiPoly::constant(1)};
        --pos_;
        fail(std::string("unexpected '") + ch + "'");
    }

    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

QcPoly parse_qc(std::string_view text) { return Parser(text).parse(); }

BiPoly parse_bipoly(std::string_view text) {
    if (text.find('c') != std::string_view::npos) throw DomainError("unexpected c in polynomial: " + std::string(text));
    return parse_qc(text).u;
}

ScalarCoeffs bind_a(const BiPoly& p, const BigReal& a) {
    ScalarCoeffs out;
    for (const auto& row : p.by_b()) {
        BigReal acc(0);
        for (size_t i = row.size(); i-- > 0;) {
            acc *= a;
            if (row[i] != 0) acc += BigReal(row[i]);
        }
        out.by_b.push_back(acc);
    }
    return out;
}

}  // namespace vcell
