#pragma once

#include <algorithm>
#include <climits>
#include <type_traits>
#include <string>
#include <vector>

#include "vcell/bigfloat.hpp"
#include "vcell/errors.hpp"

namespace vcell {

// Truncated Laurent series  sum_{k >= min_order} c_k S^k + O(S^prec)  over
// T = BigReal or BigComplex. prec == kExact marks a finite exact expansion.
template <class T>
class Laurent {
public:
    static constexpr int kExact = INT_MAX / 4;

    Laurent() : val_(0), prec_(kExact) {}
    Laurent(T c) : val_(0), c_{std::move(c)}, prec_(kExact) {}
    Laurent(int val, std::vector<T> c, int prec) : val_(val), c_(std::move(c)), prec_(prec) { trim(); }

    static Laurent monomial(T c, int e) { return Laurent(e, {std::move(c)}, kExact); }

    int min_order() const { return val_; }
    int prec() const { return prec_; }
    bool exact() const { return prec_ >= kExact; }
    const std::vector<T>& coeffs() const { return c_; }
    int last_order() const { return val_ + static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    T operator[](int k) const {
        if (k >= prec_) throw TruncationError("Laurent coefficient S^" + std::to_string(k) + " beyond O(S^" +
                                              std::to_string(prec_) + ")");
        if (k < val_ || k > last_order()) return T(0);
        return c_[k - val_];
    }

    Laurent truncated(int prec) const {
        Laurent r = *this;
        r.prec_ = std::min(prec_, prec);
        r.trim();
        return r;
    }

    // Drops leading coefficients whose magnitude is below rel * max|c_k|
    // (numerical zeros left by cancellation).
    Laurent strip(const BigReal& rel) const {
        if (c_.empty()) return *this;
        BigReal scale(0);
        for (const T& x : c_) scale = max(scale, magnitude(x));
        BigReal thr = scale * rel;
        size_t k = 0;
        while (k < c_.size() && magnitude(c_[k]) <= thr) ++k;
        return Laurent(val_ + static_cast<int>(k), std::vector<T>(c_.begin() + k, c_.end()), prec_);
    }

    // Value at S = x (finite part only; caller controls the truncation error).
    T evaluate(const T& x) const {
        T acc(0);
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        if (val_ >= 0) {
            for (int i = 0; i < val_; ++i) acc = acc * x;
        } else {
            for (int i = 0; i < -val_; ++i) acc = acc / x;
        }
        return acc;
    }

    friend Laurent operator-(const Laurent& a) {
        Laurent r = a;
        for (T& x : r.c_) x = -x;
        return r;
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        int prec = std::min(a.prec_, b.prec_);
        if (a.c_.empty()) return b.truncated(prec);
        if (b.c_.empty()) return a.truncated(prec);
        int lo = std::min(a.val_, b.val_);
        int hi = std::min(std::max(a.last_order(), b.last_order()), prec - 1);
        if (hi < lo) return Laurent(lo, {}, prec);
        std::vector<T> c(hi - lo + 1, T(0));
        for (int k = a.val_; k <= std::min(a.last_order(), hi); ++k) c[k - lo] = a.c_[k - a.val_];
        for (int k = b.val_; k <= std::min(b.last_order(), hi); ++k) c[k - lo] += b.c_[k - b.val_];
        return Laurent(lo, std::move(c), prec);
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        if (a.c_.empty() || b.c_.empty()) {
            int prec = std::min(sat(a.val_, b.prec_), sat(b.val_, a.prec_));
            return Laurent(0, {}, prec);
        }
        int prec = std::min(sat(a.val_, b.prec_), sat(b.val_, a.prec_));
        int lo = a.val_ + b.val_;
        int hi = std::min(a.last_order() + b.last_order(), prec - 1);
        if (hi < lo) return Laurent(lo, {}, prec);
        std::vector<T> c(hi - lo + 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_value(a.c_[i])) continue;
            int room = hi - lo - static_cast<int>(i);
            if (room < 0) break;
            size_t jmax = std::min(b.c_.size() - 1, static_cast<size_t>(room));
            for (size_t j = 0; j <= jmax; ++j) {
                if (is_zero_value(b.c_[j])) continue;
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Laurent(lo, std::move(c), prec);
    }

    friend Laurent operator+(const Laurent& a, const T& k) { return a + Laurent(k); }
    friend Laurent operator-(const Laurent& a, const T& k) { return a + Laurent(-k); }
    friend Laurent operator*(const Laurent& a, const T& k) {
        Laurent r = a;
        for (T& x : r.c_) x = x * k;
        r.trim();
        return r;
    }
    friend Laurent operator*(const T& k, const Laurent& a) { return a * k; }
    friend Laurent operator*(const Laurent& a, long k) { return a * T(BigReal(k)); }
    friend Laurent operator/(const Laurent& a, long k) {
        Laurent r = a;
        for (T& x : r.c_) x = x / k;
        return r;
    }

    // Multiplication by S^e.
    Laurent shifted(int e) const {
        Laurent r = *this;
        r.val_ += e;
        r.prec_ = sat(r.prec_, e);
        return r;
    }

private:
    static int sat(int x, int y) {
        if (x >= kExact || y >= kExact) return kExact;
        return x + y;
    }
    static bool is_zero_value(const T& x) { return magnitude(x).is_zero(); }

    void trim() {
        int hi = std::min(last_order(), prec_ - 1);
        if (hi < val_) {
            c_.clear();
            return;
        }
        c_.resize(hi - val_ + 1);
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
        size_t k = 0;
        while (k < c_.size() && is_zero_value(c_[k])) ++k;
        if (k) {
            c_.erase(c_.begin(), c_.begin() + k);
            val_ += static_cast<int>(k);
        }
    }

    int val_;
    std::vector<T> c_;
    int prec_;
};

// 1/f with at most `terms` relative terms (fewer if f is truncated).
template <class T>
Laurent<T> inverse(const Laurent<T>& f, int terms) {
    if (f.is_zero()) throw PrecisionError("Laurent inverse: series is zero to its precision");
    int v = f.min_order();
    int rel = f.exact() ? terms : std::min(terms, f.prec() - v);
    const auto& c = f.coeffs();
    std::vector<T> r(rel, T(0));
    T inv0 = T(1) / c[0];
    for (int n = 0; n < rel; ++n) {
        T acc = n == 0 ? T(1) : T(0);
        for (int k = 1; k <= n && k < static_cast<int>(c.size()); ++k) acc = acc - c[k] * r[n - k];
        r[n] = acc * inv0;
    }
    return Laurent<T>(-v, std::move(r), -v + rel);
}

template <class T>
Laurent<T> divide(const Laurent<T>& a, const Laurent<T>& b, int terms) {
    return a * inverse(b, terms);
}

// Principal square root; needs an even leading order (and a positive leading
// coefficient for real T).
template <class T>
Laurent<T> sqrt(const Laurent<T>& f, int terms) {
    if (f.is_zero()) throw PrecisionError("Laurent sqrt: series is zero to its precision");
    int v = f.min_order();
    if (v % 2 != 0) throw DomainError("Laurent sqrt: odd leading order");
    if constexpr (std::is_same_v<T, BigReal>) {
        if (f.coeffs()[0].sign() <= 0) throw DomainError("Laurent sqrt: nonpositive leading coefficient");
    }
    int rel = f.exact() ? terms : std::min(terms, f.prec() - v);
    const auto& c = f.coeffs();
    std::vector<T> r(rel, T(0));
    r[0] = sqrt(c[0]);
    T twice = r[0] * 2L;
    for (int n = 1; n < rel; ++n) {
        T acc = n < static_cast<int>(c.size()) ? c[n] : T(0);
        for (int k = 1; k < n; ++k) acc = acc - r[k] * r[n - k];
        r[n] = acc / twice;
    }
    return Laurent<T>(v / 2, std::move(r), v / 2 + rel);
}

// exp(f) for min_order >= 0, to `terms` terms (fewer if f is truncated).
template <class T>
Laurent<T> exp(const Laurent<T>& f, int terms) {
    if (!f.is_zero() && f.min_order() < 0) throw DomainError("Laurent exp: pole");
    int rel = f.exact() ? terms : std::min(terms, f.prec());
    std::vector<T> a(rel, T(0));
    for (int k = 0; k < rel; ++k) a[k] = f[k];
    std::vector<T> r(rel, T(0));
    if (rel == 0) return Laurent<T>(0, {}, 0);
    r[0] = exp(a[0]);
    // n r_n = sum_{k=1}^n k a_k r_{n-k}
    for (int n = 1; n < rel; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) acc += a[k] * r[n - k] * static_cast<long>(k);
        r[n] = acc / static_cast<long>(n);
    }
    return Laurent<T>(0, std::move(r), rel);
}

template <class T>
Laurent<T> pow(const Laurent<T>& f, int n) {
    if (n < 0) throw DomainError("Laurent pow: negative exponent");
    Laurent<T> r(T(1));
    Laurent<T> base = f;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

}  // namespace vcell
