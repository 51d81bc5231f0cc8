#pragma once

// Yetter-Drinfeld modules over a finite group image: induced modules M(g,chi),
// the degree-2 induced module of the T case, duals, sums, tensor products,
// braidings, absolute-simplicity tests, identification, and braided
// isomorphism search.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpgroup.hpp"
#include "matrix.hpp"
#include "quandle.hpp"

namespace ydw {

// character of the centralizer of base_point, given on a generating set
struct CharacterSpec {
    GroupElement base_point;
    std::vector<std::pair<GroupElement, Scalar>> values;
};

// the degree-2 representation datum of the T case: beta^2 + beta + 1 = 0
struct RepSpec2 {
    GroupElement base_point; // central
    Scalar alpha, beta;
};

class YDModule {
public:
    YDModule() = default;

    // raw constructor; validates invertibility, relator identities, and
    // degree compatibility
    YDModule(ImagePtr img, FieldPtr F, std::vector<GroupElement> degrees,
             std::vector<Mat> gen_action)
        : img_(std::move(img)), F_(std::move(F)), deg_(std::move(degrees)),
          act_(std::move(gen_action)) {
        validate();
    }

    static YDModule induce(const CharacterSpec& spec, const FieldPtr& F,
                           const std::vector<int>& letter_order = {});
    static YDModule induce_deg2(const ImagePtr& img, const RepSpec2& spec,
                                const Scalar& rho_z);
    static YDModule direct_sum(const YDModule& A, const YDModule& B);
    static YDModule tensor(const YDModule& A, const YDModule& B);
    YDModule dual() const;

private:
    struct unchecked_t {};
    // for constructions whose validity is inherited (tensor, sum, dual)
    YDModule(ImagePtr img, FieldPtr F, std::vector<GroupElement> degrees,
             std::vector<Mat> gen_action, std::vector<Mat> gen_action_inv, unchecked_t)
        : img_(std::move(img)), F_(std::move(F)), deg_(std::move(degrees)),
          act_(std::move(gen_action)), act_inv_(std::move(gen_action_inv)) {}

public:

    unsigned dim() const { return static_cast<unsigned>(deg_.size()); }
    const ImagePtr& image() const { return img_; }
    const FieldPtr& field() const { return F_; }
    const GroupElement& degree(unsigned i) const { return deg_[i]; }
    const std::vector<GroupElement>& degrees() const { return deg_; }
    const Mat& gen_action(size_t g) const { return act_[g]; }
    const Mat& gen_action_inv(size_t g) const { return act_inv_[g]; }

    const Mat& letter_action(int letter) const {
        size_t g = static_cast<size_t>(std::abs(letter)) - 1;
        return letter > 0 ? act_[g] : act_inv_[g];
    }

    Vec act_word(const Word& w, Vec v) const {
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            v = letter_action(*it).apply(v);
        return v;
    }

    // action of an arbitrary group element, memoized
    const Mat& element_action(uint32_t e) const {
        auto it = elem_cache_.find(e);
        if (it != elem_cache_.end())
            return it->second;
        // word l1 l2 ... lk denotes g_{l1} g_{l2} ... g_{lk}
        Mat m = Mat::identity(F_, dim());
        for (int l : img_->word_of(e))
            m = m * letter_action(l);
        return elem_cache_.emplace(e, std::move(m)).first->second;
    }

    std::vector<uint32_t> support_set() const {
        std::vector<uint32_t> s;
        for (const auto& d : deg_)
            s.push_back(d.index());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }

    std::vector<unsigned> indices_of_degree(uint32_t e) const {
        std::vector<unsigned> out;
        for (unsigned i = 0; i < dim(); ++i)
            if (deg_[i].index() == e)
                out.push_back(i);
        return out;
    }

    ConjugationQuandle support_quandle() const {
        std::vector<GroupElement> seeds(deg_.begin(), deg_.end());
        return conjugation_quandle(img_, seeds);
    }

    // true if every generator action matrix is monomial (at most one nonzero
    // per column); then all element actions are monomial too
    bool is_monomial() const {
        for (const auto& m : act_) {
            for (unsigned j = 0; j < m.cols; ++j) {
                int nz = 0;
                for (unsigned i = 0; i < m.rows; ++i)
                    if (!m.at(i, j).is_zero())
                        ++nz;
                if (nz > 1)
                    return false;
            }
        }
        return true;
    }

private:
    void validate() {
        if (act_.size() != img_->ngens())
            throw Error("one action matrix per presentation generator required");
        for (const auto& m : act_) {
            if (m.rows != dim() || m.cols != dim())
                throw Error("action matrix shape mismatch");
            act_inv_.push_back(m.inverse()); // throws if singular
        }
        // every relator and extra relator acts as the identity
        std::vector<Word> rels = img_->presentation().relators;
        for (const Word& w : img_->extra_relators())
            rels.push_back(w);
        for (const Word& w : rels) {
            Mat m = Mat::identity(F_, dim());
            for (int l : w)
                m = m * letter_action(l);
            if (!m.is_identity())
                throw InvalidCharacterError("action violates group relator");
        }
        // degree compatibility: generator g maps the degree-x component into
        // the degree-(g x g^-1) component
        for (size_t g = 0; g < act_.size(); ++g) {
            uint32_t ge = img_->gen_element(g);
            for (unsigned i = 0; i < dim(); ++i) {
                uint32_t target = img_->conj_idx(ge, deg_[i].index());
                for (unsigned j = 0; j < dim(); ++j)
                    if (!act_[g].at(j, i).is_zero() && deg_[j].index() != target)
                        throw Error("action is not compatible with the grading");
            }
        }
    }

    ImagePtr img_;
    FieldPtr F_;
    std::vector<GroupElement> deg_;
    std::vector<Mat> act_, act_inv_;
    mutable std::map<uint32_t, Mat> elem_cache_;
};

inline YDModule YDModule::induce(const CharacterSpec& spec, const FieldPtr& F,
                                 const std::vector<int>& letter_order) {
    const ImagePtr img = spec.base_point.image();
    uint32_t base = spec.base_point.index();
    std::vector<int> letters = letter_order;
    if (letters.empty())
        for (size_t g = 0; g < img->ngens(); ++g) {
            letters.push_back(static_cast<int>(g) + 1);
            letters.push_back(-static_cast<int>(g) - 1);
        }

    // breadth-first class enumeration and transversal with the given letter order
    std::vector<uint32_t> cls{base}, tr{0};
    std::vector<int32_t> pos(img->order(), -1);
    pos[base] = 0;
    for (size_t i = 0; i < cls.size(); ++i)
        for (int l : letters) {
            uint32_t t = img->eval_word({l});
            uint32_t c = img->conj_idx(t, cls[i]);
            if (pos[c] < 0) {
                pos[c] = static_cast<int32_t>(cls.size());
                cls.push_back(c);
                tr.push_back(img->mul_idx(t, tr[i]));
            }
        }

    // the prescribed values must generate the full centralizer
    std::vector<uint32_t> cent = img->centralizer_elements(base);
    std::vector<uint32_t> keys;
    for (const auto& [k, v] : spec.values)
        keys.push_back(k.index());
    if (img->subgroup_closure(keys) != cent)
        throw InvalidCharacterError("character values do not generate the centralizer");

    // propagate the character over the centralizer, checking every edge
    std::map<uint32_t, Scalar> chi;
    chi.emplace(0u, Scalar::one(F));
    std::vector<uint32_t> queue{0};
    for (size_t i = 0; i < queue.size(); ++i) {
        uint32_t e = queue[i];
        for (const auto& [k, v] : spec.values) {
            uint32_t e2 = img->mul_idx(e, k.index());
            Scalar val = chi.at(e) * v;
            auto it = chi.find(e2);
            if (it == chi.end()) {
                chi.emplace(e2, std::move(val));
                queue.push_back(e2);
            } else if (!(it->second == val)) {
                std::ostringstream os;
                os << "character violates the relation closing at element index " << e2
                   << " (reached via index " << e << " times key index " << k.index() << ")";
                throw InvalidCharacterError(os.str());
            }
        }
    }

    unsigned d = static_cast<unsigned>(cls.size());
    std::vector<GroupElement> degrees;
    for (uint32_t c : cls)
        degrees.push_back(img->element_by_index(c));
    std::vector<Mat> action;
    for (size_t g = 0; g < img->ngens(); ++g) {
        uint32_t gs = img->gen_element(g);
        Mat A(F, d, d);
        for (unsigned i = 0; i < d; ++i) {
            uint32_t dj = img->conj_idx(gs, cls[i]);
            unsigned j = static_cast<unsigned>(pos[dj]);
            uint32_t h = img->mul_idx(img->mul_idx(img->inv_idx(tr[j]), gs), tr[i]);
            A.at(j, i) = chi.at(h);
        }
        action.push_back(std::move(A));
    }
    return YDModule(img, F, std::move(degrees), std::move(action));
}

inline YDModule YDModule::induce_deg2(const ImagePtr& img, const RepSpec2& spec,
                                      const Scalar& rho_z) {
    const FieldPtr& F = spec.alpha.field();
    if (F->characteristic() == 2)
        throw Error("degree-2 induction requires characteristic != 2");
    Scalar b = spec.beta;
    if (!(b * b + b + Scalar::one(F)).is_zero())
        throw Error("beta^2 + beta + 1 = 0 required");
    if (!img->is_central(spec.base_point.index()))
        throw Error("degree-2 base point must be central");
    if (img->ngens() != 3)
        throw Error("degree-2 induction expects the T presentation (zeta, chi1, chi2)");
    Scalar a = spec.alpha;
    Mat mz = Mat::identity(F, 2).scaled(rho_z);
    Mat m1(F, 2, 2), m2(F, 2, 2);
    m1.at(0, 0) = a;
    m1.at(0, 1) = -(a * a * b * b);
    m1.at(1, 1) = a * b;
    m2.at(0, 1) = -(a * a * b);
    m2.at(1, 0) = Scalar::one(F);
    m2.at(1, 1) = -(a * b * b);
    std::vector<GroupElement> degrees{spec.base_point, spec.base_point};
    return YDModule(img, F, std::move(degrees), {mz, m1, m2});
}

inline YDModule YDModule::direct_sum(const YDModule& A, const YDModule& B) {
    unsigned d = A.dim() + B.dim();
    std::vector<GroupElement> degrees = A.deg_;
    degrees.insert(degrees.end(), B.deg_.begin(), B.deg_.end());
    auto block = [&](const std::vector<Mat>& X, const std::vector<Mat>& Y, size_t g) {
        Mat m(A.F_, d, d);
        for (unsigned i = 0; i < A.dim(); ++i)
            for (unsigned j = 0; j < A.dim(); ++j)
                m.at(i, j) = X[g].at(i, j);
        for (unsigned i = 0; i < B.dim(); ++i)
            for (unsigned j = 0; j < B.dim(); ++j)
                m.at(A.dim() + i, A.dim() + j) = Y[g].at(i, j);
        return m;
    };
    std::vector<Mat> action, action_inv;
    for (size_t g = 0; g < A.img_->ngens(); ++g) {
        action.push_back(block(A.act_, B.act_, g));
        action_inv.push_back(block(A.act_inv_, B.act_inv_, g));
    }
    return YDModule(A.img_, A.F_, std::move(degrees), std::move(action),
                    std::move(action_inv), unchecked_t{});
}

inline YDModule YDModule::tensor(const YDModule& A, const YDModule& B) {
    std::vector<GroupElement> degrees;
    for (unsigned i = 0; i < A.dim(); ++i)
        for (unsigned j = 0; j < B.dim(); ++j)
            degrees.push_back(A.deg_[i] * B.deg_[j]);
    std::vector<Mat> action, action_inv;
    for (size_t g = 0; g < A.img_->ngens(); ++g) {
        action.push_back(kronecker(A.act_[g], B.act_[g]));
        action_inv.push_back(kronecker(A.act_inv_[g], B.act_inv_[g]));
    }
    return YDModule(A.img_, A.F_, std::move(degrees), std::move(action),
                    std::move(action_inv), unchecked_t{});
}

inline YDModule YDModule::dual() const {
    std::vector<GroupElement> degrees;
    for (const auto& d : deg_)
        degrees.push_back(d.inverse());
    std::vector<Mat> action, action_inv;
    for (size_t g = 0; g < act_.size(); ++g) {
        action.push_back(act_inv_[g].transpose()); // (g f)(x) = f(g^-1 x)
        action_inv.push_back(act_[g].transpose());
    }
    return YDModule(img_, F_, std::move(degrees), std::move(action),
                    std::move(action_inv), unchecked_t{});
}

// braiding c_{X,Y}: X tensor Y -> Y tensor X, c(x (x) y) = (deg x) y (x) x
inline Mat braiding(const YDModule& X, const YDModule& Y) {
    Mat c(X.field(), Y.dim() * X.dim(), X.dim() * Y.dim());
    for (unsigned i = 0; i < X.dim(); ++i) {
        const Mat& act = Y.element_action(X.degree(i).index());
        for (unsigned j = 0; j < Y.dim(); ++j)
            for (unsigned k = 0; k < Y.dim(); ++k)
                if (!act.at(k, j).is_zero())
                    c.at(k * X.dim() + i, i * Y.dim() + j) = act.at(k, j);
    }
    return c;
}

// c_{Y,X} c_{X,Y} as an endomorphism of X tensor Y
inline Mat double_braiding(const YDModule& X, const YDModule& Y) {
    return braiding(Y, X) * braiding(X, Y);
}

// --- simplicity, identification, braided isomorphism -------------------------

struct SimplicityReport {
    bool simple = false;
    std::string witness; // failing criterion when not simple
};

// graded commutant dimension: matrices commuting with every generator action
// and preserving every degree component
inline unsigned graded_commutant_dimension(const YDModule& M) {
    unsigned d = M.dim();
    const FieldPtr& F = M.field();
    std::vector<std::pair<unsigned, unsigned>> unknowns;
    std::map<std::pair<unsigned, unsigned>, unsigned> upos;
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            if (M.degree(i).index() == M.degree(j).index()) {
                upos[{i, j}] = static_cast<unsigned>(unknowns.size());
                unknowns.emplace_back(i, j);
            }
    unsigned nu = static_cast<unsigned>(unknowns.size());
    Echelon ech(F, nu);
    for (size_t g = 0; g < M.image()->ngens(); ++g) {
        const Mat& Ag = M.gen_action(g);
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                // (A * Ag - Ag * A)[i][j] = 0
                Vec row = vec_zero(F, nu);
                bool nontrivial = false;
                for (unsigned k = 0; k < d; ++k) {
                    auto it = upos.find({i, k});
                    if (it != upos.end() && !Ag.at(k, j).is_zero()) {
                        row[it->second] += Ag.at(k, j);
                        nontrivial = true;
                    }
                    auto it2 = upos.find({k, j});
                    if (it2 != upos.end() && !Ag.at(i, k).is_zero()) {
                        row[it2->second] -= Ag.at(i, k);
                        nontrivial = true;
                    }
                }
                if (nontrivial)
                    ech.add(std::move(row));
            }
    }
    return nu - ech.rank();
}

inline SimplicityReport is_absolutely_simple(const YDModule& M) {
    if (M.dim() == 0)
        throw Error("is_absolutely_simple: module is zero");
    const ImagePtr& img = M.image();
    // support must be a single conjugacy class
    auto support = M.support_set();
    auto cls = img->conjugacy_class(M.degree(0).index());
    std::sort(cls.begin(), cls.end());
    if (support != cls)
        return {false, "support is not a single conjugacy class"};
    // a degree component of dimension > 1 over an abelian centralizer splits
    // after base change
    for (uint32_t s : support) {
        auto comp = M.indices_of_degree(s);
        if (comp.size() > 1) {
            auto cent = img->centralizer_elements(s);
            bool abelian = true;
            for (uint32_t a : cent) {
                for (uint32_t b : cent)
                    if (img->mul_idx(a, b) != img->mul_idx(b, a)) {
                        abelian = false;
                        break;
                    }
                if (!abelian)
                    break;
            }
            if (abelian)
                return {false, "degree component of dimension " +
                                   std::to_string(comp.size()) +
                                   " over an abelian centralizer"};
        }
    }
    // every basis vector must generate
    for (unsigned i = 0; i < M.dim(); ++i) {
        Echelon span(M.field(), M.dim());
        Vec e = vec_zero(M.field(), M.dim());
        e[i] = Scalar::one(M.field());
        span.add(e);
        std::vector<Vec> frontier{std::move(e)};
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const Vec& v : frontier)
                for (size_t g = 0; g < img->ngens(); ++g)
                    for (int sign : {+1, -1}) {
                        Vec w = M.letter_action(sign * (static_cast<int>(g) + 1)).apply(v);
                        if (span.add(w))
                            next.push_back(std::move(w));
                    }
            frontier = std::move(next);
        }
        if (span.rank() != M.dim())
            return {false, "basis vector " + std::to_string(i + 1) +
                               " generates a proper submodule of dimension " +
                               std::to_string(span.rank())};
    }
    unsigned cdim = graded_commutant_dimension(M);
    if (cdim != 1)
        return {false, "commutant has dimension " + std::to_string(cdim)};
    return {true, ""};
}

// base point (least support element in canonical order) and the character of
// its centralizer on the base degree component
inline std::pair<GroupElement, CharacterSpec> identify(const YDModule& M) {
    auto rep = is_absolutely_simple(M);
    if (!rep.simple)
        throw NotSimpleError("identify: module is not absolutely simple: " + rep.witness);
    auto support = M.support_set();
    uint32_t base = support.front();
    auto comp = M.indices_of_degree(base);
    if (comp.size() != 1)
        throw NotSimpleError("identify: base degree component is not 1-dimensional");
    unsigned i = comp[0];
    CharacterSpec spec;
    spec.base_point = M.image()->element_by_index(base);
    for (uint32_t h : M.image()->centralizer_generators(base)) {
        const Mat& act = M.element_action(h);
        // h preserves the base component; the value is the (i,i) entry
        spec.values.emplace_back(M.image()->element_by_index(h), act.at(i, i));
    }
    return {spec.base_point, spec};
}

// evaluate an identified character on an arbitrary centralizer element
inline Scalar character_value(const CharacterSpec& spec, const FieldPtr& F,
                              const GroupElement& e) {
    const ImagePtr img = spec.base_point.image();
    std::map<uint32_t, Scalar> chi;
    chi.emplace(0u, Scalar::one(F));
    std::vector<uint32_t> queue{0};
    for (size_t i = 0; i < queue.size(); ++i) {
        for (const auto& [k, v] : spec.values) {
            uint32_t e2 = img->mul_idx(queue[i], k.index());
            if (!chi.count(e2)) {
                chi.emplace(e2, chi.at(queue[i]) * v);
                queue.push_back(e2);
            }
        }
        if (chi.count(e.index()))
            break;
    }
    auto it = chi.find(e.index());
    if (it == chi.end())
        throw InvalidCharacterError("element outside the centralizer of the base point");
    return it->second;
}

// braided vector space isomorphism search. Homogeneous-basis-respecting maps
// only: a quandle isomorphism of supports fixes the block structure, the
// scalars solve a multiplicative system. Requires 1-dimensional degree
// components except for the fast path (equal braiding matrices).
inline std::optional<Mat> braided_isomorphic(const YDModule& M, const YDModule& N) {
    if (M.dim() != N.dim())
        return std::nullopt;
    const FieldPtr& F = M.field();
    // fast path: identical braiding matrices
    if (braiding(M, M) == braiding(N, N))
        return Mat::identity(F, M.dim());

    for (uint32_t s : M.support_set())
        if (M.indices_of_degree(s).size() != 1)
            return std::nullopt;
    for (uint32_t s : N.support_set())
        if (N.indices_of_degree(s).size() != 1)
            return std::nullopt;

    auto qm = M.support_quandle();
    auto qn = N.support_quandle();
    if (qm.quandle.size() != M.dim() || qn.quandle.size() != N.dim())
        return std::nullopt;

    // module basis index <-> support quandle index
    std::vector<unsigned> m_of_q(M.dim()), n_of_q(N.dim());
    for (unsigned qi = 0; qi < qm.labels.size(); ++qi)
        m_of_q[qi] = M.indices_of_degree(qm.labels[qi].index())[0];
    for (unsigned qi = 0; qi < qn.labels.size(); ++qi)
        n_of_q[qi] = N.indices_of_degree(qn.labels[qi].index())[0];
    std::vector<unsigned> q_of_m(M.dim());
    for (unsigned qi = 0; qi < qm.labels.size(); ++qi)
        q_of_m[m_of_q[qi]] = qi;

    // monomial braiding structure: c(e_i (x) e_j) = q_{ij} e_{m(i,j)} (x) e_i
    unsigned d = M.dim();
    auto structure = [&](const YDModule& X, std::vector<std::vector<unsigned>>& tgt,
                         std::vector<std::vector<Scalar>>& coef) {
        tgt.assign(d, std::vector<unsigned>(d, 0));
        coef.assign(d, std::vector<Scalar>(d, Scalar::zero(F)));
        for (unsigned i = 0; i < d; ++i) {
            const Mat& act = X.element_action(X.degree(i).index());
            for (unsigned j = 0; j < d; ++j) {
                unsigned k = d;
                for (unsigned r = 0; r < d; ++r)
                    if (!act.at(r, j).is_zero()) {
                        k = r;
                        break;
                    }
                if (k == d)
                    throw Error("zero column in a group action");
                tgt[i][j] = k;
                coef[i][j] = act.at(k, j);
            }
        }
    };
    std::vector<std::vector<unsigned>> mt, nt;
    std::vector<std::vector<Scalar>> mc, nc;
    structure(M, mt, mc);
    structure(N, nt, nc);

    std::optional<Mat> result;
    enumerate_isomorphisms(qm.quandle, qn.quandle, [&](const std::vector<int>& f) {
        // pi: M basis index -> N basis index
        std::vector<unsigned> pi(d);
        for (unsigned i = 0; i < d; ++i)
            pi[i] = n_of_q[f[q_of_m[i]]];
        // solve lambda_j = ratio_{ij} lambda_{m(i,j)} by propagation
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
        // verify all constraints: q^M_{ij} lam_k = lam_j q^N_{pi(i) pi(j)}
        for (unsigned i = 0; i < d; ++i)
            for (unsigned j = 0; j < d; ++j) {
                unsigned k = mt[i][j];
                if (nt[pi[i]][pi[j]] != pi[k])
                    return false;
                if (!(mc[i][j] * lam[k] == nc[pi[i]][pi[j]] * lam[j]))
                    return false;
            }
        Mat phi(F, d, d);
        for (unsigned i = 0; i < d; ++i)
            phi.at(pi[i], i) = lam[i];
        result = phi;
        return true;
    });
    return result;
}

} // namespace ydw
