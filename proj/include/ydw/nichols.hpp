#pragma once

// Nichols-algebra machinery: the quantum-symmetrizer oracle for graded
// dimensions, the rank-1 factor library, Hilbert-series assembly from root
// sequences, and bigraded verification.

#include <functional>

#include "series.hpp"
#include "weyl.hpp"

namespace ydw {

// A braided vector space given by its braiding on basis pairs:
// c(e_i (x) e_j) = sum of entries (scalar, a, b) meaning scalar e_a (x) e_b.
struct BraidedSpace {
    unsigned dim = 0;
    FieldPtr F;
    std::vector<std::vector<std::vector<std::tuple<unsigned, unsigned, Scalar>>>> c;

    static BraidedSpace from_module(const YDModule& M) {
        BraidedSpace s;
        s.dim = M.dim();
        s.F = M.field();
        s.c.assign(s.dim, {});
        for (unsigned i = 0; i < s.dim; ++i) {
            s.c[i].assign(s.dim, {});
            const Mat& act = M.element_action(M.degree(i).index());
            for (unsigned j = 0; j < s.dim; ++j)
                for (unsigned k = 0; k < s.dim; ++k)
                    if (!act.at(k, j).is_zero())
                        s.c[i][j].emplace_back(k, i, act.at(k, j));
        }
        return s;
    }

    // diagonal type: c(e_i (x) e_j) = q[i][j] e_j (x) e_i
    static BraidedSpace diagonal(const Mat& q) {
        BraidedSpace s;
        s.dim = q.rows;
        s.F = q.F;
        s.c.assign(s.dim, {});
        for (unsigned i = 0; i < s.dim; ++i) {
            s.c[i].assign(s.dim, {});
            for (unsigned j = 0; j < s.dim; ++j)
                s.c[i][j].emplace_back(j, i, q.at(i, j));
        }
        return s;
    }
};

namespace detail {

// sparse vectors over tuple indices; tuples encoded in base `dim`
struct TupleVec {
    std::map<uint64_t, Scalar> v;
};

// apply c at tensor positions (p, p+1) to a sparse tuple vector
inline TupleVec apply_braiding_at(const BraidedSpace& s, unsigned n, unsigned p,
                                  const TupleVec& x) {
    TupleVec out;
    std::vector<unsigned> digits(n);
    for (const auto& [code, coeff] : x.v) {
        uint64_t c = code;
        for (unsigned k = 0; k < n; ++k) {
            digits[n - 1 - k] = static_cast<unsigned>(c % s.dim);
            c /= s.dim;
        }
        unsigned i = digits[p], j = digits[p + 1];
        for (const auto& [a, b, scal] : s.c[i][j]) {
            auto nd = digits;
            nd[p] = a;
            nd[p + 1] = b;
            uint64_t ncode = 0;
            for (unsigned k = 0; k < n; ++k)
                ncode = ncode * s.dim + nd[k];
            Scalar add = coeff * scal;
            auto it = out.v.find(ncode);
            if (it == out.v.end())
                out.v.emplace(ncode, std::move(add));
            else {
                it->second += add;
                if (it->second.is_zero())
                    out.v.erase(it);
            }
        }
    }
    return out;
}

} // namespace detail

// rank of the degree-n quantum symmetrizer restricted to the columns listed
// in `tuples` (codes in base dim); the braided lifts are built over the weak
// order, so any reduced word would give the same operator
inline unsigned symmetrizer_rank_on(const BraidedSpace& s, unsigned n,
                                    const std::vector<uint64_t>& tuples,
                                    size_t capacity = 200000) {
    if (tuples.size() > capacity)
        throw OracleCapacityError("component dimension " + std::to_string(tuples.size()) +
                                  " exceeds the oracle budget");
    if (n == 0)
        return 1; // the empty tensor
    // enumerate permutations of S_n as one-line vectors, organized by length
    std::vector<std::vector<unsigned>> perms;
    {
        std::vector<unsigned> id(n);
        for (unsigned i = 0; i < n; ++i)
            id[i] = i;
        perms.push_back(id);
        // BFS over right multiplication by adjacent transpositions that
        // increase length
        for (size_t at = 0; at < perms.size(); ++at) {
            for (unsigned p = 0; p + 1 < n; ++p) {
                if (perms[at][p] < perms[at][p + 1]) {
                    auto next = perms[at];
                    std::swap(next[p], next[p + 1]);
                    if (std::find(perms.begin(), perms.end(), next) == perms.end())
                        perms.push_back(next);
                }
            }
        }
    }
    // compact column index for the component
    std::map<uint64_t, uint32_t> colidx;
    for (uint32_t k = 0; k < tuples.size(); ++k)
        colidx.emplace(tuples[k], k);

    SparseEchelon ech;
    for (uint64_t code : tuples) {
        // symmetrizer column: sum over all sigma of lift(sigma) e_code;
        // lift columns computed along the weak order BFS
        std::map<std::vector<unsigned>, detail::TupleVec> lift;
        detail::TupleVec e0;
        e0.v.emplace(code, Scalar::one(s.F));
        std::vector<unsigned> id(n);
        for (unsigned i = 0; i < n; ++i)
            id[i] = i;
        lift.emplace(id, e0);
        detail::TupleVec total = e0;
        for (size_t at = 0; at < perms.size(); ++at) {
            auto it = lift.find(perms[at]);
            if (it == lift.end())
                throw Error("weak order traversal out of order");
            for (unsigned p = 0; p + 1 < n; ++p) {
                if (perms[at][p] < perms[at][p + 1]) {
                    auto next = perms[at];
                    std::swap(next[p], next[p + 1]);
                    if (lift.count(next))
                        continue;
                    // lift(next) = c_p applied after lift(sigma)
                    auto lv = detail::apply_braiding_at(s, n, p, it->second);
                    for (const auto& [k, v] : lv.v) {
                        auto t = total.v.find(k);
                        if (t == total.v.end())
                            total.v.emplace(k, v);
                        else {
                            t->second += v;
                            if (t->second.is_zero())
                                total.v.erase(t);
                        }
                    }
                    lift.emplace(std::move(next), std::move(lv));
                }
            }
        }
        SVec col;
        for (const auto& [k, v] : total.v) {
            auto it2 = colidx.find(k);
            if (it2 == colidx.end())
                throw Error("symmetrizer leaves the component"); // cannot happen
            col.emplace_back(it2->second, v);
        }
        ech.add(std::move(col));
    }
    return ech.rank();
}

// graded dimension of the Nichols algebra in degree n = rank of the quantum
// symmetrizer on the full tensor power
inline unsigned symmetrizer_rank(const BraidedSpace& s, unsigned n, size_t capacity = 200000) {
    uint64_t count = 1;
    for (unsigned k = 0; k < n; ++k) {
        count *= s.dim;
        if (count > capacity)
            throw OracleCapacityError("tensor power dimension exceeds the oracle budget");
    }
    std::vector<uint64_t> tuples(count);
    for (uint64_t k = 0; k < count; ++k)
        tuples[k] = k;
    return symmetrizer_rank_on(s, n, tuples);
}

// --- rank-1 factor library ----------------------------------------------------

struct FactorInfo {
    UniSeries series;
    std::string name;
};

// classify a root module by (dim, support quandle, diagonal braiding scalars,
// characteristic) and return its known Nichols-algebra Hilbert series
inline FactorInfo rank1_factor(const YDModule& M) {
    const FieldPtr& F = M.field();
    bool char2 = F->characteristic() == 2;
    Scalar minus_one = -Scalar::one(F);
    // q_ii: the degree of e_i acting on e_i
    auto qii = [&](unsigned i) {
        return M.element_action(M.degree(i).index()).at(i, i);
    };
    if (M.dim() == 1) {
        auto ord = qii(0).mult_order();
        if (!ord || *ord < 2)
            throw Error("factor library: 1-dimensional braiding scalar must be a root of "
                        "unity of order >= 2");
        return {UniSeries::bracket(*ord), "(" + std::to_string(*ord) + ")_t"};
    }
    auto quandle = M.support_quandle().quandle;
    bool all_minus = true;
    for (unsigned i = 0; i < M.dim(); ++i)
        all_minus = all_minus && qii(i) == minus_one;
    if (M.dim() == 2 && all_minus && is_isomorphic(quandle, trivial_quandle(2))) {
        // diagonal type [[-1, r],[r, -1]]; Cartan A2 when char != 2
        if (!char2)
            return {UniSeries::one_plus_power(1) * UniSeries::one_plus_power(1) *
                        UniSeries::one_plus_power(2),
                    "(1+t)^2(1+t^2)"};
        return {UniSeries::one_plus_power(1) * UniSeries::one_plus_power(1), "(1+t)^2"};
    }
    if (M.dim() == 4 && all_minus && is_isomorphic(quandle, tetrahedral())) {
        if (!char2)
            return {UniSeries::bracket(2) * UniSeries::bracket(2) * UniSeries::bracket(3) *
                        UniSeries::bracket(6),
                    "(2)_t^2(3)_t(6)_t"};
        return {UniSeries::bracket(2) * UniSeries::bracket(2) * UniSeries::bracket(3) *
                    UniSeries::bracket(3),
                "(2)_t^2(3)_t^2"};
    }
    if (M.dim() == 4 && all_minus && is_isomorphic(quandle, dihedral(4))) {
        UniSeries s = UniSeries::one_plus_power(1) * UniSeries::one_plus_power(1) *
                      UniSeries::one_plus_power(1) * UniSeries::one_plus_power(1) *
                      UniSeries::one_plus_power(2) * UniSeries::one_plus_power(2);
        return {s, "(1+t)^4(1+t^2)^2"};
    }
    throw Error("factor library: no entry for this braided vector space");
}

// --- Hilbert assembly and verification ----------------------------------------

inline BiSeries hilbert_from_roots(const std::vector<Root>& roots,
                                   const std::vector<UniSeries>& factors) {
    if (roots.size() != factors.size())
        throw Error("one factor per root required");
    BiSeries h = BiSeries::one();
    for (size_t k = 0; k < roots.size(); ++k)
        h = h * BiSeries::from_uni(factors[k], roots[k].c1, roots[k].c2);
    return h;
}

struct BigradedCheck {
    int a = 0, b = 0;
    long long series_coefficient = 0;
    unsigned oracle_rank = 0;
    bool match = false;
};

// compare every coefficient of total degree <= cutoff against the
// symmetrizer rank on the corresponding component of (V (+) W)^(x) n
inline std::vector<BigradedCheck> verify_bigraded(const YDModule& V, const YDModule& W,
                                                  const BiSeries& series, unsigned cutoff,
                                                  size_t capacity = 200000) {
    auto U = YDModule::direct_sum(V, W);
    BraidedSpace s = BraidedSpace::from_module(U);
    std::vector<BigradedCheck> out;
    for (unsigned n = 0; n <= cutoff; ++n) {
        for (unsigned a = 0; a <= n; ++a) {
            unsigned b = n - a;
            // component: tuples with exactly a V-slots (indices < dim V)
            std::vector<uint64_t> tuples;
            std::function<void(unsigned, unsigned, uint64_t)> rec = [&](unsigned pos,
                                                                        unsigned na,
                                                                        uint64_t code) {
                if (pos == n) {
                    if (na == a)
                        tuples.push_back(code);
                    return;
                }
                if (na < a)
                    for (unsigned i = 0; i < V.dim(); ++i)
                        rec(pos + 1, na + 1, code * U.dim() + i);
                for (unsigned j = 0; j < W.dim(); ++j)
                    rec(pos + 1, na, code * U.dim() + V.dim() + j);
            };
            rec(0, 0, 0);
            BigradedCheck chk;
            chk.a = static_cast<int>(a);
            chk.b = static_cast<int>(b);
            chk.series_coefficient = series.coefficient(static_cast<int>(a),
                                                        static_cast<int>(b));
            chk.oracle_rank = symmetrizer_rank_on(s, n, tuples, capacity);
            chk.match = chk.series_coefficient == static_cast<long long>(chk.oracle_rank);
            out.push_back(chk);
        }
    }
    return out;
}

} // namespace ydw
