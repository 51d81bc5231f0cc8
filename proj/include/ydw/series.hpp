#pragma once

// Sparse polynomial series with integer coefficients: the univariate factor
// algebra (k)_t, (1 + t^j), and bivariate Hilbert series in (t1, t2).

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ydw {

struct UniSeries {
    std::vector<long long> c; // c[k] = coefficient of t^k

    static UniSeries one() { return UniSeries{{1}}; }
    // (k)_t = 1 + t + ... + t^(k-1)
    static UniSeries bracket(unsigned k) {
        UniSeries s;
        s.c.assign(k, 1);
        return s;
    }
    static UniSeries one_plus_power(unsigned j) {
        UniSeries s;
        s.c.assign(j + 1, 0);
        s.c[0] = 1;
        s.c[j] = 1;
        return s;
    }

    unsigned degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size()) - 1; }
    long long coeff(unsigned k) const {
        return k < c.size() ? c[k] : 0;
    }
    long long eval_one() const {
        long long s = 0;
        for (long long v : c)
            s += v;
        return s;
    }
    bool palindromic() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != c[c.size() - 1 - i])
                return false;
        return true;
    }

    UniSeries operator*(const UniSeries& o) const {
        UniSeries r;
        r.c.assign(c.size() + o.c.size() - 1, 0);
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j)
                r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    bool operator==(const UniSeries& o) const { return c == o.c; }

    std::string to_text(const std::string& var = "t") const {
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0)
                continue;
            if (!first)
                os << " + ";
            os << c[k];
            if (k >= 1)
                os << "*" << var << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }
};

struct BiSeries {
    std::map<std::pair<int, int>, long long> terms; // (a, b) -> coefficient

    static BiSeries one() {
        BiSeries s;
        s.terms[{0, 0}] = 1;
        return s;
    }
    // univariate factor with t -> t1^a t2^b
    static BiSeries from_uni(const UniSeries& u, int a, int b) {
        BiSeries s;
        for (size_t k = 0; k < u.c.size(); ++k)
            if (u.c[k] != 0)
                s.terms[{static_cast<int>(k) * a, static_cast<int>(k) * b}] = u.c[k];
        return s;
    }

    BiSeries operator*(const BiSeries& o) const {
        BiSeries r;
        for (const auto& [pa, ca] : terms)
            for (const auto& [pb, cb] : o.terms) {
                auto key = std::make_pair(pa.first + pb.first, pa.second + pb.second);
                r.terms[key] += ca * cb;
                if (r.terms[key] == 0)
                    r.terms.erase(key);
            }
        return r;
    }
    bool operator==(const BiSeries& o) const { return terms == o.terms; }

    long long coefficient(int a, int b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? 0 : it->second;
    }
    // evaluation at t1 = t2 = 1
    long long dimension() const {
        long long s = 0;
        for (const auto& [p, v] : terms)
            s += v;
        return s;
    }

    // terms sorted by (a+b, a)
    std::string to_text() const {
        std::vector<std::pair<std::pair<int, int>, long long>> sorted(terms.begin(),
                                                                      terms.end());
        std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
            int sx = x.first.first + x.first.second, sy = y.first.first + y.first.second;
            if (sx != sy)
                return sx < sy;
            return x.first.first < y.first.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, v] : sorted) {
            if (!first)
                os << " + ";
            os << v << " * t1^" << p.first << " * t2^" << p.second;
            first = false;
        }
        if (first)
            os << "0";
        return os.str();
    }
};

} // namespace ydw
