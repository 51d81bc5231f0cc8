#pragma once

// Rank-2 Cartan graphs: closure of a pair under reflections with objects
// merged up to braided isomorphism, finiteness and standardness checks, and
// root sequences from a longest word.

#include "adjoint.hpp"

namespace ydw {

// braided isomorphism of pairs: one map on V (+) W restricting to V -> V'
// and W -> W' with a common support-quandle isomorphism
inline bool pair_braided_isomorphic(const YDModule& V1, const YDModule& W1,
                                    const YDModule& V2, const YDModule& W2) {
    if (V1.dim() != V2.dim() || W1.dim() != W2.dim())
        return false;
    auto U1 = YDModule::direct_sum(V1, W1);
    auto U2 = YDModule::direct_sum(V2, W2);
    // fast path: identical braidings part by part
    if (braiding(U1, U1) == braiding(U2, U2))
        return true;
    for (uint32_t s : U1.support_set())
        if (U1.indices_of_degree(s).size() != 1)
            return false;
    for (uint32_t s : U2.support_set())
        if (U2.indices_of_degree(s).size() != 1)
            return false;
    auto q1 = U1.support_quandle();
    auto q2 = U2.support_quandle();
    if (q1.quandle.size() != U1.dim() || q2.quandle.size() != U2.dim())
        return false;

    // part membership per quandle index: true when the degree lies in supp V
    auto part_of = [](const ConjugationQuandle& q, const YDModule& V) {
        std::vector<char> in_v(q.labels.size(), 0);
        auto vs = V.support_set();
        for (size_t i = 0; i < q.labels.size(); ++i)
            in_v[i] = std::binary_search(vs.begin(), vs.end(), q.labels[i].index());
        return in_v;
    };
    auto p1 = part_of(q1, V1);
    auto p2 = part_of(q2, V2);

    // monomial braiding structure of the sum modules
    unsigned d = U1.dim();
    const FieldPtr& F = U1.field();
    auto structure = [&](const YDModule& X, std::vector<std::vector<unsigned>>& tgt,
                         std::vector<std::vector<Scalar>>& coef) {
        tgt.assign(d, std::vector<unsigned>(d, 0));
        coef.assign(d, std::vector<Scalar>(d, Scalar::zero(F)));
        for (unsigned i = 0; i < d; ++i) {
            const Mat& act = X.element_action(X.degree(i).index());
            for (unsigned j = 0; j < d; ++j)
                for (unsigned r = 0; r < d; ++r)
                    if (!act.at(r, j).is_zero()) {
                        tgt[i][j] = r;
                        coef[i][j] = act.at(r, j);
                        break;
                    }
        }
    };
    std::vector<std::vector<unsigned>> mt, nt;
    std::vector<std::vector<Scalar>> mc, nc;
    structure(U1, mt, mc);
    structure(U2, nt, nc);
    std::vector<unsigned> m_of_q(d), n_of_q(d), q_of_m(d);
    for (unsigned qi = 0; qi < d; ++qi) {
        m_of_q[qi] = U1.indices_of_degree(q1.labels[qi].index())[0];
        n_of_q[qi] = U2.indices_of_degree(q2.labels[qi].index())[0];
    }
    for (unsigned qi = 0; qi < d; ++qi)
        q_of_m[m_of_q[qi]] = qi;

    bool found = false;
    enumerate_isomorphisms(q1.quandle, q2.quandle, [&](const std::vector<int>& f) {
        for (unsigned qi = 0; qi < d; ++qi)
            if (p1[qi] != p2[f[qi]])
                return false; // must respect the V/W split
        std::vector<unsigned> pi(d);
        for (unsigned i = 0; i < d; ++i)
            pi[i] = n_of_q[f[q_of_m[i]]];
        std::vector<Scalar> lam(d, Scalar::zero(F));
        std::vector<char> have(d, 0);
        for (unsigned start = 0; start < d; ++start) {
            if (have[start])
                continue;
            lam[start] = Scalar::one(F);
            have[start] = 1;
            bool progress = true;
            while (progress) {
                progress = false;
                for (unsigned i = 0; i < d; ++i)
                    for (unsigned j = 0; j < d; ++j) {
                        unsigned k = mt[i][j];
                        Scalar ratio = mc[i][j] * nc[pi[i]][pi[j]].inv();
                        if (have[k] && !have[j]) {
                            lam[j] = ratio * lam[k];
                            have[j] = 1;
                            progress = true;
                        } else if (have[j] && !have[k]) {
                            lam[k] = ratio.inv() * lam[j];
                            have[k] = 1;
                            progress = true;
                        }
                    }
            }
        }
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                unsigned k = mt[i][j];
                if (nt[pi[i]][pi[j]] != pi[k])
                    return false;
                if (!(mc[i][j] * lam[k] == nc[pi[i]][pi[j]] * lam[j]))
                    return false;
            }
        found = true;
        return true;
    });
    return found;
}

struct WeylObject {
    YDModule V, W;
    CartanMatrix2 cartan;
    std::string label; // printable fingerprint: dims, cartan, support sizes
};

struct WeylGroupoid {
    struct Edge {
        unsigned from, to;
        int reflection; // 1 or 2
    };
    std::vector<WeylObject> objects;
    std::vector<Edge> edges;
    bool finite = false;
    CartanMatrix2 initial;
};

namespace detail {

inline std::string object_label(const YDModule& V, const YDModule& W,
                                const CartanMatrix2& c) {
    std::ostringstream os;
    os << "dims(" << V.dim() << "," << W.dim() << ") cartan[[" << c.a[0][0] << ","
       << c.a[0][1] << "],[" << c.a[1][0] << "," << c.a[1][1] << "]] supp("
       << V.support_set().size() << "," << W.support_set().size() << ")";
    return os.str();
}

} // namespace detail

// breadth-first closure of (V, W) under both reflections, merging objects by
// pairwise braided isomorphism with a common support-quandle map
inline WeylGroupoid build_groupoid(const YDModule& V, const YDModule& W,
                                   unsigned object_bound = 64, unsigned max_m = 8) {
    WeylGroupoid g;
    g.initial = cartan_matrix(V, W, max_m);
    g.objects.push_back({V, W, g.initial, detail::object_label(V, W, g.initial)});
    for (unsigned at = 0; at < g.objects.size(); ++at) {
        for (int refl : {1, 2}) {
            auto [Vr, Wr] = reflect(refl, g.objects[at].V, g.objects[at].W, max_m);
            unsigned target = static_cast<unsigned>(g.objects.size());
            for (unsigned k = 0; k < g.objects.size(); ++k)
                if (pair_braided_isomorphic(Vr, Wr, g.objects[k].V, g.objects[k].W)) {
                    target = k;
                    break;
                }
            if (target == g.objects.size()) {
                if (g.objects.size() >= object_bound)
                    throw GroupoidUnboundedError("object bound exceeded while closing the groupoid");
                CartanMatrix2 c = cartan_matrix(Vr, Wr, max_m);
                g.objects.push_back({Vr, Wr, c, detail::object_label(Vr, Wr, c)});
            }
            g.edges.push_back({at, target, refl});
        }
    }
    g.finite = true; // closure terminated within the bound
    return g;
}

// every object carries the initial Cartan matrix up to simultaneous index swap
inline bool is_standard(const WeylGroupoid& g) {
    for (const auto& o : g.objects)
        if (!(o.cartan == g.initial || o.cartan.swapped_equal(g.initial)))
            return false;
    return true;
}

inline bool is_finite(const WeylGroupoid& g) { return g.finite; }

// --- root sequences ----------------------------------------------------------

struct Root {
    int c1 = 0, c2 = 0; // coordinates in alpha_1, alpha_2
    int tag = 0;        // 1: V-type factor, 2: W-type factor
    bool operator==(const Root& o) const = default;
};

inline const char* cartan_type_name(const CartanMatrix2& c) {
    int p = c.a[0][1] * c.a[1][0];
    switch (p) {
    case 0:
        return "A1xA1";
    case 1:
        return "A2";
    case 2:
        return "B2";
    case 3:
        return "G2";
    }
    throw NotFiniteTypeError("Cartan matrix is not of finite type");
}

// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) for the reduced decomposition
// s_2 s_1 s_2 s_1 ... of the longest word
inline std::vector<Root> longest_word_roots(const CartanMatrix2& c) {
    int p = c.a[0][1] * c.a[1][0];
    unsigned len;
    switch (p) {
    case 0:
        len = 2;
        break;
    case 1:
        len = 3;
        break;
    case 2:
        len = 4;
        break;
    case 3:
        len = 6;
        break;
    default:
        throw NotFiniteTypeError("Cartan matrix is not of finite type");
    }
    auto refl = [&](int i, int v1, int v2) {
        // s_i(v) = v - <coefficient of alpha_i in v w.r.t. a_i.> alpha_i
        if (i == 1) {
            // s_1(alpha_1) = -alpha_1, s_1(alpha_2) = alpha_2 - a12 alpha_1
            return std::pair<int, int>(-v1 - c.a[0][1] * v2, v2);
        }
        return std::pair<int, int>(v1, -v2 - c.a[1][0] * v1);
    };
    std::vector<Root> roots;
    for (unsigned k = 0; k < len; ++k) {
        int ik = (k % 2 == 0) ? 2 : 1; // s2 first
        int v1 = ik == 1 ? 1 : 0, v2 = ik == 2 ? 1 : 0;
        // apply s_{i_1} ... s_{i_{k-1}} from the innermost outwards
        for (int j = static_cast<int>(k) - 1; j >= 0; --j) {
            int ij = (j % 2 == 0) ? 2 : 1;
            auto [n1, n2] = refl(ij, v1, v2);
            v1 = n1;
            v2 = n2;
        }
        roots.push_back({v1, v2, ik});
    }
    return roots;
}

} // namespace ydw
