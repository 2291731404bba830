#ifndef RSIEGEL_EXACT_TYPES_HPP
#define RSIEGEL_EXACT_TYPES_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace rsiegel {

// Arbitrary-precision rational; cpp_rational keeps gcd(num, den) = 1 and den > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_fraction(const Rational& q)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(q) << '/' << boost::multiprecision::denominator(q);
    return os.str();
}

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long long r) : re(r) {}            // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o)
    {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o)
    {
        const Rational n = o.re * o.re + o.im * o.im;
        if (n == 0) {
            throw domain_error("GaussianRational: division by zero");
        }
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& g)
    {
        return os << to_fraction(g.re) << ' ' << to_fraction(g.im);
    }
};

// Which formal variable a series is written in.
enum class Variable { x, inv_tau, inv_t };

// Finite Laurent series with exact coefficients.
//
// Stored exponents lie in [low_cutoff, high_cutoff]; absent exponents are
// zero. Arithmetic uses power-series truncation semantics: everything below
// low_cutoff is genuinely zero and everything above high_cutoff is unknown,
// so a product is only exact up to min(h1 + l2, h2 + l1).
class FormalSeries {
public:
    FormalSeries(Variable var, int low, int high) : var_(var), low_(low), high_(high)
    {
        if (low > high) {
            throw domain_error("FormalSeries: low cutoff above high cutoff");
        }
    }

    static FormalSeries constant(Variable var, const GaussianRational& c, int high)
    {
        FormalSeries s(var, 0, high);
        s.set(0, c);
        return s;
    }

    Variable variable() const { return var_; }
    int low_cutoff() const { return low_; }
    int high_cutoff() const { return high_; }
    const std::map<int, GaussianRational>& terms() const { return terms_; }

    GaussianRational coefficient(int e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational{} : it->second;
    }

    void set(int e, const GaussianRational& c)
    {
        if (e < low_ || e > high_) {
            throw domain_error("FormalSeries: exponent outside cutoffs");
        }
        if (c.is_zero()) {
            terms_.erase(e);
        } else {
            terms_[e] = c;
        }
    }

    void add_to(int e, const GaussianRational& c)
    {
        if (e < low_ || e > high_ || c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    // Drops terms above `high` and lowers the cutoff.
    FormalSeries truncated(int high) const
    {
        FormalSeries r(var_, low_, std::max(low_, std::min(high, high_)));
        for (const auto& [e, c] : terms_) {
            if (e <= r.high_) {
                r.terms_.emplace(e, c);
            }
        }
        return r;
    }

    // Multiplication by var^k.
    FormalSeries shifted(int k) const
    {
        FormalSeries r(var_, low_ + k, high_ + k);
        for (const auto& [e, c] : terms_) {
            r.terms_.emplace(e + k, c);
        }
        return r;
    }

    FormalSeries scaled(const GaussianRational& f) const
    {
        FormalSeries r(var_, low_, high_);
        if (f.is_zero()) {
            return r;
        }
        for (const auto& [e, c] : terms_) {
            r.terms_.emplace(e, c * f);
        }
        return r;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
        check_same(a, b);
        FormalSeries r(a.var_, std::min(a.low_, b.low_), std::min(a.high_, b.high_));
        for (const auto& [e, c] : a.terms_) {
            r.add_to(e, c);
        }
        for (const auto& [e, c] : b.terms_) {
            r.add_to(e, c);
        }
        return r;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return a + b.scaled(GaussianRational(-1)); }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
        check_same(a, b);
        FormalSeries r(a.var_, a.low_ + b.low_, std::min(a.high_ + b.low_, b.high_ + a.low_));
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_to(ea + eb, ca * cb);
            }
        }
        return r;
    }

    // exp of a series without terms at exponents <= 0, via e_n = (1/n) sum k s_k e_{n-k}.
    FormalSeries exp() const
    {
        for (const auto& [e, c] : terms_) {
            if (e <= 0) {
                throw domain_error("FormalSeries::exp needs a series with positive exponents only");
            }
        }
        const int top = high_;
        std::map<int, GaussianRational> out;
        out[0] = GaussianRational(1);
        for (int n = 1; n <= top; ++n) {
            GaussianRational acc;
            for (const auto& [k, sk] : terms_) {
                if (k > n) {
                    break;
                }
                auto it = out.find(n - k);
                if (it != out.end()) {
                    acc += GaussianRational(Rational(k)) * sk * it->second;
                }
            }
            if (!acc.is_zero()) {
                out[n] = acc / GaussianRational(Rational(n));
            }
        }
        FormalSeries r(var_, 0, std::max(0, top));
        for (auto& [e, c] : out) {
            r.set(e, c);
        }
        return r;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b)
    {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }

private:
    static void check_same(const FormalSeries& a, const FormalSeries& b)
    {
        if (a.var_ != b.var_) {
            throw domain_error("FormalSeries: mixing series in different variables");
        }
    }

    Variable var_;
    int low_;
    int high_;
    std::map<int, GaussianRational> terms_;
};

// Exact linear combination sum_k c_k F^(k)(delta), keyed by derivative order.
class DerivativeCombo {
public:
    DerivativeCombo() = default;
    DerivativeCombo(std::initializer_list<std::pair<const int, GaussianRational>> init)
    {
        for (const auto& [k, c] : init) {
            add(k, c);
        }
    }

    const std::map<int, GaussianRational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    int max_order() const { return entries_.empty() ? -1 : entries_.rbegin()->first; }

    GaussianRational operator[](int k) const
    {
        auto it = entries_.find(k);
        return it == entries_.end() ? GaussianRational{} : it->second;
    }

    bool contains(int k) const { return entries_.count(k) != 0; }

    void add(int k, const GaussianRational& c)
    {
        if (k < 0) {
            throw domain_error("DerivativeCombo: negative derivative order");
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = entries_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                entries_.erase(it);
            }
        }
    }

    DerivativeCombo& operator+=(const DerivativeCombo& o)
    {
        for (const auto& [k, c] : o.entries_) {
            add(k, c);
        }
        return *this;
    }

    DerivativeCombo scaled(const GaussianRational& f) const
    {
        DerivativeCombo r;
        for (const auto& [k, c] : entries_) {
            r.add(k, c * f);
        }
        return r;
    }

    friend bool operator==(const DerivativeCombo& a, const DerivativeCombo& b) { return a.entries_ == b.entries_; }

private:
    std::map<int, GaussianRational> entries_;
};

}  // namespace rsiegel

#endif
