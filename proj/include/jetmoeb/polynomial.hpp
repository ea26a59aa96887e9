#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "rational.hpp"

namespace jetmoeb {

// Sparse multivariate polynomial with rational coefficients in X1, X2, ....
// Exponent vectors carry no trailing zeros, so the constant monomial is the
// empty vector and the number of variables is implicit.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    Polynomial() = default;
    Polynomial(const Rational& c) // NOLINT: constants convert implicitly
    {
        if (sgn(c) != 0) {
            terms_.emplace(Exponents{}, c);
        }
    }

    // X_{k}, 1-based.
    static Polynomial variable(std::size_t k)
    {
        if (k == 0) {
            throw jet_error(errc::invalid_argument, "variables are numbered from 1");
        }
        Exponents e(k, 0);
        e.back() = 1;
        Polynomial p;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Number of variables actually occurring (highest index).
    std::size_t num_vars() const
    {
        std::size_t n = 0;
        for (const auto& [e, c] : terms_) {
            n = std::max(n, e.size());
        }
        return n;
    }

    // Coefficient of the monomial with the given exponents (zero if absent).
    Rational coeff(Exponents e) const
    {
        trim(e);
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned degree_in(std::size_t k) const
    {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            if (e.size() >= k) {
                d = std::max(d, e[k - 1]);
            }
        }
        return d;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_term(e, Rational(-c));
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial{} - a; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t k = 0; k < ea.size(); ++k) {
                    e[k] += ea[k];
                }
                for (std::size_t k = 0; k < eb.size(); ++k) {
                    e[k] += eb[k];
                }
                out.add_term(e, Rational(ca * cb));
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Value at X_{k+1} = x[k]; variables beyond x.size() must not occur.
    template <Field F>
    F evaluate(std::span<const F> x) const
    {
        if (num_vars() > x.size()) {
            throw jet_error(errc::invalid_argument, "not enough values to evaluate the polynomial");
        }
        F sum = from_int<F>(0);
        for (const auto& [e, c] : terms_) {
            F term = from_rational<F>(c);
            for (std::size_t k = 0; k < e.size(); ++k) {
                for (unsigned p = 0; p < e[k]; ++p) {
                    term *= x[k];
                }
            }
            sum += term;
        }
        return sum;
    }

    // e.g. "X3 + 1/2*X1*X2 + 1/16*X1^3", monomials in exponent-vector order.
    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                os << (sgn(c) < 0 ? "-" : "");
            } else {
                os << (sgn(c) < 0 ? " - " : " + ");
            }
            first = false;
            bool wrote = false;
            if (mag != 1 || e.empty()) {
                os << mag.get_str();
                wrote = true;
            }
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) {
                    continue;
                }
                os << (wrote ? "*" : "") << 'X' << (k + 1);
                if (e[k] > 1) {
                    os << '^' << e[k];
                }
                wrote = true;
            }
        }
        return os.str();
    }

private:
    static void trim(Exponents& e)
    {
        while (!e.empty() && e.back() == 0) {
            e.pop_back();
        }
    }

    void add_term(Exponents e, const Rational& c)
    {
        if (sgn(c) == 0) {
            return;
        }
        trim(e);
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    std::map<Exponents, Rational> terms_;
};

// Lets generic recursions run with polynomial coefficients.
template <>
struct field_traits<Polynomial> {
    static constexpr bool exact = true;
    static Polynomial from_rational(const Rational& q) { return Polynomial(q); }
    static Polynomial from_int(long k) { return Polynomial(Rational(k)); }
    static bool is_zero(const Polynomial& p) { return p.is_zero(); }
    static bool equal(const Polynomial& a, const Polynomial& b) { return a == b; }
};

} // namespace jetmoeb
