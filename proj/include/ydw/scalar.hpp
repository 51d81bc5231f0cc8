#pragma once

// Exact field arithmetic: cyclotomic extensions of Q and of prime fields,
// root-of-unity enumeration, the textual scalar syntax, and a small
// constraint solver over roots of unity.

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace ydw {

using Rat = mpq_class;

struct FieldSpec {
    unsigned characteristic = 0; // 0 or prime
    unsigned conductor = 1;      // order of the adjoined root of unity
    bool operator==(const FieldSpec&) const = default;
};

namespace detail {

using Poly = std::vector<Rat>; // coefficients, constant term first

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

// exact division, remainder must vanish
inline Poly poly_divexact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rat(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rat c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    if (!num.empty())
        throw Error("poly_divexact: nonzero remainder");
    return q;
}

// n-th cyclotomic polynomial over Z
inline Poly cyclotomic(unsigned n) {
    if (n == 1)
        return {Rat(-1), Rat(1)};
    Poly xn1(n + 1, Rat(0));
    xn1[0] = -1;
    xn1[n] = 1;
    Poly den{Rat(1)};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0)
            den = poly_mul(den, cyclotomic(d));
    return poly_divexact(xn1, den);
}

inline bool is_prime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Immutable field context shared by all scalars of one field.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr make(FieldSpec spec) {
        return FieldPtr(new Field(spec));
    }

    const FieldSpec& spec() const { return spec_; }
    unsigned characteristic() const { return spec_.characteristic; }
    unsigned conductor() const { return spec_.conductor; }
    unsigned degree() const { return deg_; }
    const detail::Poly& modulus() const { return modulus_; }
    const std::vector<detail::Poly>& reduction_rows() const { return red_; }

    // order of the canonical group of roots of unity (see unit_powers)
    unsigned unit_group_order() const { return unit_order_; }

    Rat base_normalize(Rat v) const {
        if (spec_.characteristic == 0) {
            v.canonicalize();
            return v;
        }
        // entries are integers reduced into [0, p)
        mpz_class num = v.get_num();
        mpz_class p(spec_.characteristic);
        mpz_class r = ((num % p) + p) % p;
        return Rat(r);
    }

    Rat base_inv(const Rat& v) const {
        if (spec_.characteristic == 0) {
            if (v == 0)
                throw DivisionByZeroError("division by zero");
            return Rat(1) / v;
        }
        long p = spec_.characteristic;
        long a = mpz_class(v.get_num()).get_si() % p;
        if (a < 0)
            a += p;
        if (a == 0)
            throw DivisionByZeroError("division by zero");
        long t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            long q = r / newr;
            std::swap(t -= q * newt, newt);
            std::swap(r -= q * newr, newr);
        }
        if (t < 0)
            t += p;
        return Rat(t);
    }

private:
    explicit Field(FieldSpec spec) : spec_(spec) {
        if (spec_.conductor < 1)
            throw Error("conductor must be >= 1");
        if (spec_.characteristic != 0) {
            if (!detail::is_prime(spec_.characteristic))
                throw Error("characteristic must be 0 or prime");
            if (spec_.conductor % spec_.characteristic == 0)
                throw Error("characteristic divides conductor");
        }
        detail::Poly phi = detail::cyclotomic(spec_.conductor);
        if (spec_.characteristic == 0) {
            modulus_ = phi;
        } else {
            for (auto& c : phi)
                c = base_normalize(c);
            modulus_ = least_irreducible_factor(phi);
        }
        deg_ = static_cast<unsigned>(modulus_.size()) - 1;
        // reduction rows: red_[k] = x^(deg+k) in powers < deg, k = 0..deg-2
        red_.clear();
        if (deg_ >= 2) {
            detail::Poly cur(deg_, Rat(0));
            for (unsigned i = 0; i < deg_; ++i)
                cur[i] = base_normalize(-modulus_[i]);
            for (unsigned k = 0; k <= deg_ - 2; ++k) {
                red_.push_back(cur);
                if (k == deg_ - 2)
                    break;
                Rat top = cur[deg_ - 1];
                detail::Poly next(deg_, Rat(0));
                for (unsigned i = deg_ - 1; i >= 1; --i)
                    next[i] = cur[i - 1];
                for (unsigned i = 0; i < deg_; ++i)
                    next[i] = base_normalize(next[i] + top * -modulus_[i]);
                cur = next;
            }
        }
        unit_order_ = spec_.characteristic == 0
                          ? std::lcm(2u, spec_.conductor)
                          : spec_.conductor;
    }

    // lexicographically-least monic degree-d divisor of phi over F_p,
    // comparing coefficient vectors constant-term first
    detail::Poly least_irreducible_factor(const detail::Poly& phi) const {
        unsigned p = spec_.characteristic;
        unsigned n = spec_.conductor;
        unsigned d = 1; // multiplicative order of p mod n
        {
            unsigned v = p % n;
            while (v != 1 % n) {
                v = (v * p) % n;
                ++d;
            }
        }
        if (d == static_cast<unsigned>(phi.size()) - 1)
            return phi; // irreducible itself
        std::vector<std::vector<unsigned>> cands;
        std::vector<unsigned> c(d, 0);
        while (true) {
            cands.push_back(c);
            unsigned i = d;
            while (i > 0 && ++c[i - 1] == p) {
                c[i - 1] = 0;
                --i;
            }
            if (i == 0)
                break;
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& cv : cands) {
            detail::Poly cand(d + 1, Rat(0));
            for (unsigned i = 0; i < d; ++i)
                cand[i] = Rat(cv[i]);
            cand[d] = 1;
            if (divides_mod_p(cand, phi))
                return cand;
        }
        throw Error("no irreducible factor found"); // unreachable
    }

    bool divides_mod_p(const detail::Poly& den, detail::Poly num) const {
        while (num.size() >= den.size() && !num.empty()) {
            Rat c = num.back(); // den monic
            size_t shift = num.size() - den.size();
            for (size_t i = 0; i < den.size(); ++i)
                num[shift + i] = base_normalize(num[shift + i] - c * den[i]);
            detail::poly_trim(num);
        }
        return num.empty();
    }

    FieldSpec spec_;
    unsigned deg_ = 0;
    detail::Poly modulus_;
    std::vector<detail::Poly> red_; // x^(deg+k) reduced, k = 0..deg-2
    unsigned unit_order_ = 1;

    friend class Scalar;
};

class Scalar {
public:
    Scalar() = default;
    Scalar(FieldPtr F, long v) : F_(std::move(F)), c_(F_->degree(), Rat(0)) {
        c_[0] = F_->base_normalize(Rat(v));
        if (F_->degree() == 0)
            throw Error("degenerate field");
    }
    static Scalar zero(const FieldPtr& F) { return Scalar(F, 0); }
    static Scalar one(const FieldPtr& F) { return Scalar(F, 1); }

    const FieldPtr& field() const { return F_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& v) { return v == 0; });
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1)
            return false;
        return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& v) { return v == 0; });
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        Scalar r = a;
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.F_->base_normalize(r.c_[i] + b.c_[i]);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        Scalar r = a;
        for (size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.F_->base_normalize(r.c_[i] - b.c_[i]);
        return r;
    }
    Scalar operator-() const {
        Scalar r = *this;
        for (auto& v : r.c_)
            v = F_->base_normalize(-v);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.check_field(b);
        unsigned d = a.F_->degree();
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (unsigned i = 0; i < d; ++i) {
            if (a.c_[i] == 0)
                continue;
            for (unsigned j = 0; j < d; ++j)
                if (b.c_[j] != 0)
                    prod[i + j] += a.c_[i] * b.c_[j];
        }
        Scalar r(a.F_, 0);
        for (unsigned i = 0; i < d; ++i)
            r.c_[i] = prod[i];
        for (unsigned k = d; k < 2 * d - 1; ++k) {
            if (prod[k] == 0)
                continue;
            const auto& row = a.F_->reduction_rows()[k - d];
            for (unsigned i = 0; i < d; ++i)
                r.c_[i] += prod[k] * row[i];
        }
        for (auto& v : r.c_)
            v = a.F_->base_normalize(v);
        return r;
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inv() const {
        if (is_zero())
            throw DivisionByZeroError("inversion of 0");
        // extended Euclid in K[x]; invariant: s_i * this == r_i (mod modulus)
        auto norm = [&](detail::Poly& p) {
            for (auto& v : p)
                v = F_->base_normalize(v);
            detail::poly_trim(p);
        };
        detail::Poly r0 = F_->modulus(), r1(c_.begin(), c_.end());
        detail::Poly s0{}, s1{Rat(1)};
        norm(r1);
        while (true) {
            if (r1.size() == 1) {
                Rat u = F_->base_inv(r1[0]);
                Scalar out(F_, 0);
                for (size_t i = 0; i < s1.size(); ++i)
                    out.c_[i] = F_->base_normalize(s1[i] * u);
                return out;
            }
            if (r1.empty())
                throw Error("inv: gcd with modulus is not constant");
            detail::Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
            detail::Poly rem = r0;
            Rat lead_inv = F_->base_inv(r1.back());
            while (rem.size() >= r1.size() && !rem.empty()) {
                Rat c = F_->base_normalize(rem.back() * lead_inv);
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = F_->base_normalize(rem[shift + i] - c * r1[i]);
                detail::poly_trim(rem);
            }
            detail::Poly s2 = s0; // s0 - q*s1
            detail::Poly qs = detail::poly_mul(q, s1);
            if (s2.size() < qs.size())
                s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i)
                s2[i] -= qs[i];
            norm(s2);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar pow(long e) const {
        Scalar base = *this;
        if (e < 0) {
            base = base.inv();
            e = -e;
        }
        Scalar r = one(F_);
        while (e > 0) {
            if (e & 1)
                r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // multiplicative order, or nullopt if not a root of unity
    std::optional<unsigned> mult_order() const {
        if (is_zero())
            return std::nullopt;
        unsigned bound = F_->unit_group_order();
        if (F_->characteristic() != 0) {
            unsigned q = 1;
            for (unsigned i = 0; i < F_->degree(); ++i)
                q *= F_->characteristic();
            bound = q - 1;
        }
        Scalar v = *this;
        for (unsigned k = 1; k <= bound; ++k) {
            if (v.is_one())
                return k;
            v *= *this;
        }
        return std::nullopt;
    }

    // the class of x, i.e. zeta_n itself; for a degree-1 modulus x - r this is r
    static Scalar make_generator(const FieldPtr& F) {
        Scalar r(F, 0);
        if (F->degree() > 1)
            r.c_[1] = 1;
        else
            r.c_[0] = F->base_normalize(-F->modulus()[0]);
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        unsigned n = F_->conductor();
        for (unsigned i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0)
                continue;
            Rat v = c_[i];
            bool neg = v < 0;
            if (first) {
                if (neg)
                    os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            Rat av = neg ? Rat(-v) : v;
            bool unit_coeff = (av == 1) && i > 0;
            if (!unit_coeff)
                os << av.get_str();
            if (i > 0) {
                if (!unit_coeff)
                    os << "*";
                os << "zeta" << n;
                if (i > 1)
                    os << "^" << i;
            }
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }

private:
    void check_field(const Scalar& o) const {
        if (!F_ || !o.F_ || !(F_->spec() == o.F_->spec()))
            throw IncompatibleFieldError("scalars from different fields");
    }

    FieldPtr F_;
    std::vector<Rat> c_;
};

// zeta_k^power as an element of the field; requires k to divide the order
// of the canonical group of roots of unity.
inline Scalar root_of_unity(const FieldPtr& F, unsigned k, long power = 1) {
    if (k == 0)
        throw UnrepresentableRootError("k must be positive");
    unsigned m = F->unit_group_order();
    if (m % k != 0)
        throw UnrepresentableRootError("no primitive root of order " + std::to_string(k) +
                                       " in conductor-" + std::to_string(F->conductor()) +
                                       " field");
    Scalar zeta_n = Scalar::make_generator(F);
    Scalar g = zeta_n;
    if (F->characteristic() == 0 && F->conductor() % 2 == 1)
        g = -zeta_n; // -zeta_n generates the full unit group of order lcm(2, n)
    long e = static_cast<long>(m / k) * power;
    return g.pow(e);
}

// all roots of unity of the canonical unit group, in canonical order:
// zeta_n^0 .. zeta_n^(n-1), then (char 0, n odd) their negatives
inline std::vector<Scalar> roots_of_unity(const FieldPtr& F) {
    std::vector<Scalar> out;
    Scalar z = Scalar::make_generator(F);
    Scalar v = Scalar::one(F);
    for (unsigned i = 0; i < F->conductor(); ++i) {
        out.push_back(v);
        v *= z;
    }
    if (F->characteristic() == 0 && F->conductor() % 2 == 1) {
        size_t n = out.size();
        for (size_t i = 0; i < n; ++i)
            out.push_back(-out[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar expressions: the textual syntax `zeta{n}^{k}`, integer literals,
// + - * / and parentheses, plus named unknowns for the constraint solver.

class Expr {
public:
    using Ptr = std::shared_ptr<const Expr>;
    enum class Kind { Int, Zeta, Var, Add, Sub, Mul, Div, Neg, Pow };

    static Ptr integer(long v) { return node(Kind::Int, v, 0, "", nullptr, nullptr); }
    static Ptr zeta(unsigned n, long k) { return node(Kind::Zeta, k, n, "", nullptr, nullptr); }
    static Ptr var(std::string name) { return node(Kind::Var, 0, 0, std::move(name), nullptr, nullptr); }
    static Ptr add(Ptr a, Ptr b) { return node(Kind::Add, 0, 0, "", std::move(a), std::move(b)); }
    static Ptr sub(Ptr a, Ptr b) { return node(Kind::Sub, 0, 0, "", std::move(a), std::move(b)); }
    static Ptr mul(Ptr a, Ptr b) { return node(Kind::Mul, 0, 0, "", std::move(a), std::move(b)); }
    static Ptr div(Ptr a, Ptr b) { return node(Kind::Div, 0, 0, "", std::move(a), std::move(b)); }
    static Ptr neg(Ptr a) { return node(Kind::Neg, 0, 0, "", std::move(a), nullptr); }
    static Ptr pow(Ptr a, long e) { return node(Kind::Pow, e, 0, "", std::move(a), nullptr); }

    Scalar eval(const FieldPtr& F, const std::map<std::string, Scalar>& vars = {}) const {
        switch (kind_) {
        case Kind::Int:
            return Scalar(F, ival_);
        case Kind::Zeta:
            return root_of_unity(F, nval_, ival_);
        case Kind::Var: {
            auto it = vars.find(name_);
            if (it == vars.end())
                throw ParseError("unbound variable: " + name_);
            return it->second;
        }
        case Kind::Add:
            return a_->eval(F, vars) + b_->eval(F, vars);
        case Kind::Sub:
            return a_->eval(F, vars) - b_->eval(F, vars);
        case Kind::Mul:
            return a_->eval(F, vars) * b_->eval(F, vars);
        case Kind::Div:
            return a_->eval(F, vars) / b_->eval(F, vars);
        case Kind::Neg:
            return -a_->eval(F, vars);
        case Kind::Pow:
            return a_->eval(F, vars).pow(ival_);
        }
        throw Error("unreachable");
    }

    void collect_vars(std::vector<std::string>& out) const {
        switch (kind_) {
        case Kind::Var:
            if (std::find(out.begin(), out.end(), name_) == out.end())
                out.push_back(name_);
            break;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div:
            a_->collect_vars(out);
            b_->collect_vars(out);
            break;
        case Kind::Neg:
        case Kind::Pow:
            a_->collect_vars(out);
            break;
        default:
            break;
        }
    }

private:
    static Ptr node(Kind k, long iv, unsigned nv, std::string name, Ptr a, Ptr b) {
        auto e = std::make_shared<Expr>();
        e->kind_ = k;
        e->ival_ = iv;
        e->nval_ = nv;
        e->name_ = std::move(name);
        e->a_ = std::move(a);
        e->b_ = std::move(b);
        return e;
    }

    Kind kind_ = Kind::Int;
    long ival_ = 0;
    unsigned nval_ = 0;
    std::string name_;
    Ptr a_, b_;

public:
    Expr() = default;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    Expr::Ptr parse() {
        auto e = expr();
        skip_ws();
        if (pos_ != s_.size())
            throw ParseError("trailing input in scalar expression: '" + std::string(s_.substr(pos_)) + "'");
        return e;
    }

private:
    Expr::Ptr expr() {
        auto lhs = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                lhs = Expr::add(lhs, term());
            } else if (peek() == '-') {
                ++pos_;
                lhs = Expr::sub(lhs, term());
            } else {
                return lhs;
            }
        }
    }

    Expr::Ptr term() {
        auto lhs = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                lhs = Expr::mul(lhs, factor());
            } else if (peek() == '/') {
                ++pos_;
                lhs = Expr::div(lhs, factor());
            } else {
                return lhs;
            }
        }
    }

    Expr::Ptr factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return Expr::neg(factor());
        }
        auto base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return Expr::pow(base, integer());
        }
        return base;
    }

    Expr::Ptr primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto e = expr();
            skip_ws();
            if (peek() != ')')
                throw ParseError("expected ')'");
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Expr::integer(integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name.size() > 4 && name.compare(0, 4, "zeta") == 0 &&
                std::all_of(name.begin() + 4, name.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                unsigned n = static_cast<unsigned>(std::stoul(name.substr(4)));
                long k = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    k = integer();
                }
                return Expr::zeta(n, k);
            }
            return Expr::var(name);
        }
        throw ParseError("unexpected character in scalar expression");
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::string ident() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::string_view s_;
    size_t pos_ = 0;
};

} // namespace detail

inline Expr::Ptr parse_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
}

inline Scalar parse_scalar(const FieldPtr& F, std::string_view text) {
    return parse_expr(text)->eval(F);
}

// A constraint is either an equation lhs = rhs or a fixed value for a name.
struct UnityConstraint {
    Expr::Ptr lhs;
    Expr::Ptr rhs; // null means lhs = 0
};

// All assignments of representable roots of unity to the named unknowns
// satisfying every constraint. Unknowns are enumerated in the given order,
// each ranging over the canonical unit list (powers of zeta_n first), so
// the output order is deterministic.
inline std::vector<std::map<std::string, Scalar>>
solve_unity_constraints(const FieldPtr& F, const std::vector<std::string>& unknowns,
                        const std::vector<UnityConstraint>& constraints) {
    std::vector<Scalar> units = roots_of_unity(F);
    std::vector<std::map<std::string, Scalar>> solutions;
    std::map<std::string, Scalar> assign;
    Scalar zero = Scalar::zero(F);

    auto satisfied = [&](const std::map<std::string, Scalar>& a) {
        for (const auto& c : constraints) {
            Scalar l = c.lhs->eval(F, a);
            Scalar r = c.rhs ? c.rhs->eval(F, a) : zero;
            if (!(l == r))
                return false;
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == unknowns.size()) {
            if (satisfied(assign))
                solutions.push_back(assign);
            return;
        }
        for (const Scalar& u : units) {
            assign[unknowns[i]] = u;
            rec(i + 1);
        }
        assign.erase(unknowns[i]);
    };
    rec(0);
    return solutions;
}

} // namespace ydw
