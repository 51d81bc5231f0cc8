#pragma once

// Finite quandles: constructors, axiom validation, isomorphism testing,
// enveloping-group presentations, and the five-quandle catalogue.

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fpgroup.hpp"

namespace ydw {

// Elements are 1-based in I/O and error messages, 0-based internally.
class FiniteQuandle {
public:
    FiniteQuandle() = default;
    explicit FiniteQuandle(std::vector<std::vector<int>> table0) : t_(std::move(table0)) {
        validate();
    }

    size_t size() const { return t_.size(); }
    int op(int i, int j) const { return t_[i][j]; } // i |> j, 0-based

    const std::vector<std::vector<int>>& table() const { return t_; }

    bool operator==(const FiniteQuandle& o) const { return t_ == o.t_; }

    // connected components under the inner group (left translations)
    std::vector<int> component_of() const {
        int n = static_cast<int>(size());
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0)
                continue;
            comp[s] = nc;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int j = stack.back();
                stack.pop_back();
                for (int i = 0; i < n; ++i) {
                    int k = op(i, j);
                    if (comp[k] < 0) {
                        comp[k] = nc;
                        stack.push_back(k);
                    }
                }
            }
            ++nc;
        }
        return comp;
    }

    std::string to_text() const;

private:
    void validate() const {
        int n = static_cast<int>(t_.size());
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(t_[i].size()) != n)
                throw NotAQuandleError("table is not square", i + 1, 0, 0);
            std::vector<char> hit(n, 0);
            for (int j = 0; j < n; ++j) {
                if (t_[i][j] < 0 || t_[i][j] >= n)
                    throw NotAQuandleError("entry out of range", i + 1, j + 1, 0);
                hit[t_[i][j]] = 1;
            }
            for (int j = 0; j < n; ++j)
                if (!hit[j])
                    throw NotAQuandleError("left translation by " + std::to_string(i + 1) +
                                               " is not bijective",
                                           i + 1, 0, 0);
            if (t_[i][i] != i)
                throw NotAQuandleError("idempotence fails at " + std::to_string(i + 1), i + 1,
                                       i + 1, 0);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (op(i, op(j, k)) != op(op(i, j), op(i, k)))
                        throw NotAQuandleError("self-distributivity fails at (" +
                                                   std::to_string(i + 1) + ", " +
                                                   std::to_string(j + 1) + ", " +
                                                   std::to_string(k + 1) + ")",
                                               i + 1, j + 1, k + 1);
    }

    std::vector<std::vector<int>> t_;
};

// --- constructors -----------------------------------------------------------

// the quandle of the vertices of the tetrahedron
inline FiniteQuandle tetrahedral() {
    std::vector<std::vector<int>> t = {
        {0, 3, 1, 2}, {2, 1, 3, 0}, {3, 0, 2, 1}, {1, 2, 0, 3}};
    return FiniteQuandle(t);
}

// z_i |> z_j = z_{2i-j mod n}
inline FiniteQuandle dihedral(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = ((2 * i - j) % n + n) % n;
    return FiniteQuandle(t);
}

inline FiniteQuandle trivial_quandle(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = j;
    return FiniteQuandle(t);
}

inline FiniteQuandle disjoint_union(const FiniteQuandle& a, const FiniteQuandle& b) {
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    std::vector<std::vector<int>> t(na + nb, std::vector<int>(na + nb));
    for (int i = 0; i < na + nb; ++i)
        for (int j = 0; j < na + nb; ++j) {
            if (i < na && j < na)
                t[i][j] = a.op(i, j);
            else if (i >= na && j >= na)
                t[i][j] = na + b.op(i - na, j - na);
            else
                t[i][j] = j; // cross actions trivial
        }
    return FiniteQuandle(t);
}

// amalgamated sum of Y and Z along sigma: Y -> Sym(Z), tau: Z -> Sym(Y);
// validated a posteriori by rebuilding and re-checking the axioms
inline FiniteQuandle amalgamated_sum(const FiniteQuandle& Y, const FiniteQuandle& Z,
                                     const std::vector<std::vector<int>>& sigma,
                                     const std::vector<std::vector<int>>& tau) {
    int ny = static_cast<int>(Y.size()), nz = static_cast<int>(Z.size());
    if (static_cast<int>(sigma.size()) != ny || static_cast<int>(tau.size()) != nz)
        throw Error("amalgamated_sum: one permutation per element required");
    std::vector<std::vector<int>> t(ny + nz, std::vector<int>(ny + nz));
    for (int i = 0; i < ny; ++i)
        for (int j = 0; j < ny; ++j)
            t[i][j] = Y.op(i, j);
    for (int i = 0; i < nz; ++i)
        for (int j = 0; j < nz; ++j)
            t[ny + i][ny + j] = ny + Z.op(i, j);
    for (int y = 0; y < ny; ++y)
        for (int z = 0; z < nz; ++z)
            t[y][ny + z] = ny + sigma[y][z]; // y |> z
    for (int z = 0; z < nz; ++z)
        for (int y = 0; y < ny; ++y)
            t[ny + z][y] = tau[z][y]; // z |> y
    return FiniteQuandle(t); // axiom check happens in the constructor
}

// conjugation quandle on the union of the conjugacy classes of the seeds,
// elements ordered by group element index
struct ConjugationQuandle {
    FiniteQuandle quandle;
    std::vector<GroupElement> labels;
};

inline ConjugationQuandle conjugation_quandle(const ImagePtr& img,
                                              const std::vector<GroupElement>& seeds) {
    std::vector<uint32_t> members;
    for (const auto& s : seeds) {
        auto cls = img->conjugacy_class(s.index());
        members.insert(members.end(), cls.begin(), cls.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    int n = static_cast<int>(members.size());
    auto pos = [&](uint32_t e) {
        auto it = std::lower_bound(members.begin(), members.end(), e);
        if (it == members.end() || *it != e)
            throw Error("conjugation quandle is not closed"); // cannot happen
        return static_cast<int>(it - members.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            t[i][j] = pos(img->conj_idx(members[i], members[j]));
    ConjugationQuandle out{FiniteQuandle(t), {}};
    for (uint32_t e : members)
        out.labels.push_back(img->element_by_index(e));
    return out;
}

// --- row-permutation text format --------------------------------------------

// One line per element: its left-translation row in cycle notation, e.g.
// `(243)` or `(24)(56)`, `id` for the identity row. Digits are single
// elements unless separated by spaces or commas.
inline FiniteQuandle from_row_permutations(const std::vector<std::string>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j)
            perm[j] = j;
        const std::string& s = rows[i];
        size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
                ++pos;
        };
        skip_ws();
        if (s.compare(pos, 2, "id") == 0)
            pos += 2;
        while (pos < s.size()) {
            skip_ws();
            if (pos >= s.size())
                break;
            if (s[pos] != '(')
                throw ParseError("expected '(' in cycle notation: " + s);
            ++pos;
            std::string body;
            while (pos < s.size() && s[pos] != ')')
                body += s[pos++];
            if (pos >= s.size())
                throw ParseError("unterminated cycle in: " + s);
            ++pos;
            std::vector<int> cyc;
            if (body.find(' ') != std::string::npos || body.find(',') != std::string::npos) {
                std::replace(body.begin(), body.end(), ',', ' ');
                std::istringstream bs(body);
                int v;
                while (bs >> v)
                    cyc.push_back(v - 1);
            } else {
                for (char c : body) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ParseError("bad cycle element in: " + s);
                    cyc.push_back(c - '0' - 1);
                }
            }
            for (size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
                if (from < 0 || from >= n || to < 0 || to >= n)
                    throw ParseError("cycle element out of range in: " + s);
                perm[from] = to;
            }
        }
        for (int j = 0; j < n; ++j)
            t[i][j] = perm[j];
    }
    return FiniteQuandle(t);
}

inline std::string FiniteQuandle::to_text() const {
    std::ostringstream os;
    int n = static_cast<int>(size());
    for (int i = 0; i < n; ++i) {
        std::vector<char> done(n, 0);
        bool any = false;
        std::ostringstream row;
        for (int j = 0; j < n; ++j) {
            if (done[j] || op(i, j) == j)
                continue;
            row << '(';
            int k = j;
            bool first = true;
            while (!done[k]) {
                done[k] = 1;
                row << (first ? "" : " ") << (k + 1);
                first = false;
                k = op(i, k);
            }
            row << ')';
            any = true;
        }
        os << (any ? row.str() : "id") << '\n';
    }
    return os.str();
}

// --- isomorphism -------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> quandle_profiles(const FiniteQuandle& q) {
    int n = static_cast<int>(q.size());
    auto comp = q.component_of();
    std::vector<int> comp_size(n, 0);
    for (int c : comp)
        ++comp_size[c];
    std::vector<std::vector<int>> prof(n);
    for (int i = 0; i < n; ++i) {
        // cycle type of the left translation by i
        std::vector<char> done(n, 0);
        std::vector<int> cyc;
        for (int j = 0; j < n; ++j) {
            if (done[j])
                continue;
            int len = 0, k = j;
            while (!done[k]) {
                done[k] = 1;
                ++len;
                k = q.op(i, k);
            }
            cyc.push_back(len);
        }
        std::sort(cyc.begin(), cyc.end());
        // how often i is fixed by other translations
        int fixed = 0;
        for (int a = 0; a < n; ++a)
            if (q.op(a, i) == i)
                ++fixed;
        std::vector<int> p{comp_size[comp[i]], fixed};
        p.insert(p.end(), cyc.begin(), cyc.end());
        prof[i] = p;
    }
    return prof;
}

} // namespace detail

// enumerate quandle isomorphisms Q1 -> Q2 in lexicographic assignment order;
// stop when the callback returns true. Returns whether a callback accepted.
inline bool enumerate_isomorphisms(const FiniteQuandle& q1, const FiniteQuandle& q2,
                                   const std::function<bool(const std::vector<int>&)>& accept) {
    if (q1.size() != q2.size())
        return false;
    int n = static_cast<int>(q1.size());
    auto p1 = detail::quandle_profiles(q1);
    auto p2 = detail::quandle_profiles(q2);
    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);

    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n)
            return accept(f);
        for (int c = 0; c < n; ++c) {
            if (used[c] || p1[i] != p2[c])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                // both directions against earlier assignments
                if (f[q1.op(i, j)] >= 0 && f[q1.op(i, j)] != q2.op(c, f[j]))
                    ok = false;
                if (ok && f[q1.op(j, i)] >= 0 && f[q1.op(j, i)] != q2.op(f[j], c))
                    ok = false;
            }
            if (f[q1.op(i, i)] >= 0 && f[q1.op(i, i)] != q2.op(c, c))
                ok = false;
            if (!ok)
                continue;
            f[i] = c;
            used[c] = 1;
            if (rec(i + 1))
                return true;
            f[i] = -1;
            used[c] = 0;
        }
        return false;
    };
    return rec(0);
}

// first isomorphism in deterministic order, if any
inline std::optional<std::vector<int>> is_isomorphic(const FiniteQuandle& q1,
                                                     const FiniteQuandle& q2) {
    std::optional<std::vector<int>> out;
    enumerate_isomorphisms(q1, q2, [&](const std::vector<int>& f) {
        // full verification of the candidate
        int n = static_cast<int>(q1.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (f[q1.op(i, j)] != q2.op(f[i], f[j]))
                    return false;
        out = f;
        return true;
    });
    return out;
}

// --- enveloping group ---------------------------------------------------------

// generators x1..xn, relators x_i x_j = x_{i|>j} x_i
inline Presentation enveloping_presentation(const FiniteQuandle& q) {
    int n = static_cast<int>(q.size());
    std::vector<std::string> gens;
    for (int i = 1; i <= n; ++i)
        gens.push_back("x" + std::to_string(i));
    Presentation p(gens, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            p.relators.push_back(
                word_reduce({i + 1, j + 1, -(i + 1), -(q.op(i, j) + 1)}));
        }
    return p;
}

// --- the five-quandle catalogue ----------------------------------------------

// Listing order and row permutations follow the catalogue display.
inline FiniteQuandle catalogue_quandle(const std::string& name) {
    if (name == "Z_T^{4,1}")
        return from_row_permutations({"(243)", "(134)", "(142)", "(123)", "id"});
    if (name == "Z_2^{2,2}")
        return from_row_permutations({"(24)", "(13)", "(24)", "(13)"});
    if (name == "Z_3^{3,1}")
        return from_row_permutations({"(23)", "(13)", "(12)", "id"});
    if (name == "Z_3^{3,2}")
        return from_row_permutations({"(23)(45)", "(13)(45)", "(12)(45)", "(123)", "(132)"});
    if (name == "Z_4^{4,2}")
        return from_row_permutations(
            {"(24)(56)", "(13)(56)", "(24)(56)", "(13)(56)", "(1234)", "(1432)"});
    throw Error("unknown catalogue quandle: " + name);
}

inline const std::vector<std::string>& catalogue_names() {
    static const std::vector<std::string> names{"Z_T^{4,1}", "Z_2^{2,2}", "Z_3^{3,1}",
                                                "Z_3^{3,2}", "Z_4^{4,2}"};
    return names;
}

} // namespace ydw
