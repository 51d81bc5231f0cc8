#pragma once

// The phi_m recursion, adjoint ladders X_m isomorphic to (ad A)^m(B),
// Cartan matrices, and rank-2 reflections.
//
// X_m = phi_m(A (x) X_{m-1}) is computed in nested coordinates: each X_m is
// stored as a subspace of A (x) X_{m-1} with X_{m-1} abstracted as a module
// in its own right. phi_m restricts to A (x) X_{m-1} because X_{m-1} is the
// image of phi_{m-1}, so the full tensor power never needs to materialize.
// Ambient coordinates are recovered on demand for reports.

#include <optional>

#include "ydmodule.hpp"

namespace ydw {

struct LadderEntry {
    unsigned m = 0;
    // canonical echelon basis of X_m inside A (x) X_{m-1} (nested coordinates)
    std::vector<Vec> basis;
    std::optional<YDModule> module; // absent when dim = 0
    unsigned dim() const { return static_cast<unsigned>(basis.size()); }
};

enum class LadderStatus { terminated, unbounded };

class AdjointContext {
public:
    AdjointContext(YDModule A, YDModule B) : A_(std::move(A)), B_(std::move(B)) {
        xmod_.push_back(B_); // X_0 = B
        iota_.emplace_back();
        pmap_.emplace_back();
        phi_.emplace_back();
    }

    const YDModule& left() const { return A_; }
    const YDModule& right() const { return B_; }

    // X_{m-1} as an abstract module (X_0 = B); requires the ladder computed
    const YDModule& xmodule(unsigned m) const { return xmod_.at(m); }
    bool has_level(unsigned m) const { return m < xmod_.size(); }

    // phi_m as an endomorphism of A (x) X_{m-1} in nested coordinates
    const Mat& phi(unsigned m) {
        ensure_phi(m);
        return phi_[m];
    }

    // the tensor module A (x) X_{m-1} that phi_m acts on
    const YDModule& domain(unsigned m) {
        ensure_phi(m);
        return domain_.at(m);
    }

    // advance the ladder by one step; returns the new entry
    LadderEntry step() {
        unsigned m = static_cast<unsigned>(xmod_.size()) - 1 + 1;
        ensure_phi(m);
        const YDModule& dom = domain_.at(m);
        const FieldPtr& F = A_.field();
        Echelon ech(F, dom.dim());
        for (unsigned c = 0; c < dom.dim(); ++c) {
            Vec in = vec_zero(F, dom.dim());
            in[c] = Scalar::one(F);
            ech.add(phi_[m].apply(in));
        }
        LadderEntry e;
        e.m = m;
        e.basis = ech.rows();
        if (!e.basis.empty()) {
            e.module = submodule_from_rows(dom, e.basis);
            // P_m: coordinates map (coords of phi_m images), iota_m: inclusion
            Mat iota(F, dom.dim(), e.dim());
            for (unsigned j = 0; j < e.dim(); ++j)
                for (unsigned i = 0; i < dom.dim(); ++i)
                    iota.at(i, j) = e.basis[j][i];
            Mat pm(F, e.dim(), dom.dim());
            for (unsigned c = 0; c < dom.dim(); ++c) {
                Vec in = vec_zero(F, dom.dim());
                in[c] = Scalar::one(F);
                auto coord = ech.coordinates(phi_[m].apply(in));
                if (!coord)
                    throw Error("phi image escaped its own span");
                for (unsigned r = 0; r < e.dim(); ++r)
                    pm.at(r, c) = (*coord)[r];
            }
            xmod_.push_back(*e.module);
            iota_.push_back(std::move(iota));
            pmap_.push_back(std::move(pm));
        }
        return e;
    }

    // expand a vector given in X_m coordinates to ambient A^(x)m (x) B
    Vec ambient_vector(unsigned m, Vec v) const {
        if (m == 0)
            return v;
        const FieldPtr& F = A_.field();
        v = iota_.at(m).apply(v); // now in A (x) X_{m-1}
        for (unsigned k = m - 1; k >= 1; --k) {
            // expand the rightmost X_k factor inside every A-block
            const Mat& io = iota_.at(k);
            unsigned blocks = static_cast<unsigned>(v.size()) / io.cols;
            Vec out = vec_zero(F, static_cast<size_t>(blocks) * io.rows);
            for (unsigned b = 0; b < blocks; ++b) {
                Vec part(v.begin() + static_cast<size_t>(b) * io.cols,
                         v.begin() + static_cast<size_t>(b + 1) * io.cols);
                Vec li = io.apply(part);
                for (unsigned r = 0; r < io.rows; ++r)
                    out[static_cast<size_t>(b) * io.rows + r] = li[r];
            }
            v = std::move(out);
        }
        return v;
    }

private:

    static YDModule submodule_from_rows(const YDModule& amb, const std::vector<Vec>& rows) {
        const FieldPtr& F = amb.field();
        unsigned n = static_cast<unsigned>(rows.size());
        Echelon ech(F, amb.dim());
        for (const Vec& r : rows)
            ech.add(r);
        std::vector<GroupElement> degrees;
        for (const Vec& r : rows) {
            unsigned pivot = 0;
            while (r[pivot].is_zero())
                ++pivot;
            degrees.push_back(amb.degree(pivot));
        }
        std::vector<Mat> action;
        for (size_t g = 0; g < amb.image()->ngens(); ++g) {
            Mat m(F, n, n);
            for (unsigned i = 0; i < n; ++i) {
                Vec im = amb.gen_action(g).apply(rows[i]);
                auto coord = ech.coordinates(im);
                if (!coord)
                    throw Error("ladder entry is not closed under the action");
                for (unsigned j = 0; j < n; ++j)
                    m.at(j, i) = (*coord)[j];
            }
            action.push_back(std::move(m));
        }
        return YDModule(amb.image(), F, std::move(degrees), std::move(action));
    }

    void ensure_phi(unsigned m) {
        if (m >= xmod_.size() + 1 || m == 0)
            throw Error("phi level not available; advance the ladder first");
        while (domain_.size() <= m)
            domain_.push_back(YDModule()), phi_.resize(domain_.size());
        if (domain_[m].dim() == 0) {
            const YDModule& X = xmod_[m - 1];
            domain_[m] = YDModule::tensor(A_, X);
            const FieldPtr& F = A_.field();
            Mat p = Mat::identity(F, domain_[m].dim()) - double_braiding(A_, X);
            if (m >= 2) {
                // (id (x) P_{m-1} phi-composed) c_{1,2} (id (x) iota_{m-1})
                const YDModule& Xprev = xmod_[m - 2];
                Mat c12 = kronecker(braiding(A_, A_), Mat::identity(F, Xprev.dim()));
                Mat t = kronecker(Mat::identity(F, A_.dim()), pmap_[m - 1]) * c12 *
                        kronecker(Mat::identity(F, A_.dim()), iota_[m - 1]);
                p = p + t;
            }
            phi_[m] = std::move(p);
        }
    }

    YDModule A_, B_;
    std::vector<YDModule> xmod_; // xmod_[k] = X_k (only nonzero levels stored)
    std::vector<Mat> iota_;      // X_k -> A (x) X_{k-1}, k >= 1
    std::vector<Mat> pmap_;      // coords of phi_k: A (x) X_{k-1} -> X_k, k >= 1
    std::vector<YDModule> domain_;
    std::vector<Mat> phi_;
};

struct AdjointLadder {
    LadderStatus status = LadderStatus::terminated;
    std::vector<LadderEntry> entries; // entries[k] = X_{k+1}

    std::vector<unsigned> dims() const {
        std::vector<unsigned> d;
        for (const auto& e : entries)
            d.push_back(e.dim());
        return d;
    }
    unsigned last_nonzero_m() const {
        unsigned m = 0;
        for (const auto& e : entries)
            if (e.dim() > 0)
                m = e.m;
        return m;
    }
    const LadderEntry& entry(unsigned m) const { return entries.at(m - 1); }
};

// each X_m as the span of phi_m over a full basis of A (x) X_{m-1}, stopping
// at the first zero entry
inline AdjointLadder compute_ladder(AdjointContext& ctx, unsigned max_m) {
    if (max_m < 1)
        throw Error("compute_ladder: max_m must be at least 1");
    AdjointLadder out;
    for (unsigned m = 1; m <= max_m; ++m) {
        LadderEntry e = ctx.step();
        bool zero = e.dim() == 0;
        out.entries.push_back(std::move(e));
        if (zero)
            return out;
    }
    out.status = LadderStatus::unbounded;
    return out;
}

inline AdjointLadder compute_ladder(const YDModule& A, const YDModule& B, unsigned max_m) {
    AdjointContext ctx(A, B);
    return compute_ladder(ctx, max_m);
}

// phi_m applied to a vector of A (x) X_{m-1} in nested coordinates
inline Vec phi_apply(AdjointContext& ctx, unsigned m, const Vec& v) {
    return ctx.phi(m).apply(v);
}

struct CartanMatrix2 {
    int a[2][2] = {{2, 0}, {0, 2}};
    bool operator==(const CartanMatrix2& o) const {
        return a[0][0] == o.a[0][0] && a[0][1] == o.a[0][1] && a[1][0] == o.a[1][0] &&
               a[1][1] == o.a[1][1];
    }
    bool swapped_equal(const CartanMatrix2& o) const {
        return a[0][0] == o.a[1][1] && a[0][1] == o.a[1][0] && a[1][0] == o.a[0][1] &&
               a[1][1] == o.a[0][0];
    }
};

// off-diagonal entries from the last nonvanishing ladder index; the paper's
// literal sup-of-zero-set display disagrees with its own usage, so the usage
// wins (see README)
inline CartanMatrix2 cartan_matrix(const YDModule& V, const YDModule& W, unsigned max_m) {
    AdjointLadder lv = compute_ladder(V, W, max_m);
    AdjointLadder lw = compute_ladder(W, V, max_m);
    if (lv.status == LadderStatus::unbounded || lw.status == LadderStatus::unbounded)
        throw LadderUnboundedError("adjoint ladder did not terminate within max_m");
    CartanMatrix2 c;
    c.a[0][1] = -static_cast<int>(lv.last_nonzero_m());
    c.a[1][0] = -static_cast<int>(lw.last_nonzero_m());
    return c;
}

// re-induced canonical form of an absolutely simple module; modules whose
// base component is not 1-dimensional (higher-degree inducing representation)
// are returned as they are
inline YDModule canonical_form(const YDModule& M) {
    try {
        auto [base, spec] = identify(M);
        return YDModule::induce(spec, M.field());
    } catch (const NotSimpleError&) {
        auto rep = is_absolutely_simple(M);
        if (!rep.simple)
            throw;
        return M;
    }
}

// R_1(V,W) = (V^*, X_{-a12}^{V,W}), R_2(V,W) = (X_{-a21}^{W,V}, W^*)
inline std::pair<YDModule, YDModule> reflect(int i, const YDModule& V, const YDModule& W,
                                             unsigned max_m) {
    if (i != 1 && i != 2)
        throw Error("reflect: index must be 1 or 2");
    const YDModule& A = (i == 1) ? V : W;
    const YDModule& B = (i == 1) ? W : V;
    AdjointLadder ladder = compute_ladder(A, B, max_m);
    if (ladder.status == LadderStatus::unbounded)
        throw LadderUnboundedError("adjoint ladder did not terminate within max_m");
    unsigned top = ladder.last_nonzero_m();
    YDModule topmod = top == 0 ? B : *ladder.entry(top).module;
    auto rep = is_absolutely_simple(topmod);
    if (!rep.simple)
        throw ReflectionUndefinedError("top nonvanishing adjoint power is not absolutely simple: " +
                                       rep.witness);
    YDModule reflected = canonical_form(topmod);
    YDModule dual_part = canonical_form(A.dual());
    if (i == 1)
        return {std::move(dual_part), std::move(reflected)};
    return {std::move(reflected), std::move(dual_part)};
}

// Second computation path: phi_m on the reduced generator set (orbit
// representatives of supp A x {deg u} for the canonical generator u of
// X_{m-1}), closed under the group action afterwards.
inline std::vector<Vec> ladder_step_via_generators(AdjointContext& ctx, unsigned m) {
    const FieldPtr& F = ctx.left().field();
    const YDModule& dom = ctx.domain(m);
    const YDModule& X = ctx.xmodule(m - 1);
    const ImagePtr& img = ctx.left().image();
    // u = first basis vector of X_{m-1} (a unit vector in its own coordinates)
    uint32_t du = X.degree(0).index();
    std::vector<unsigned> reps;
    std::vector<std::pair<uint32_t, uint32_t>> covered;
    for (unsigned i = 0; i < ctx.left().dim(); ++i) {
        std::pair<uint32_t, uint32_t> p{ctx.left().degree(i).index(), du};
        if (std::find(covered.begin(), covered.end(), p) != covered.end())
            continue;
        reps.push_back(i);
        std::vector<std::pair<uint32_t, uint32_t>> orbit{p};
        for (size_t k = 0; k < orbit.size(); ++k)
            for (size_t g = 0; g < img->ngens(); ++g)
                for (int sign : {+1, -1}) {
                    uint32_t t = sign > 0 ? img->gen_element(g)
                                          : img->inv_idx(img->gen_element(g));
                    std::pair<uint32_t, uint32_t> q{img->conj_idx(t, orbit[k].first),
                                                    img->conj_idx(t, orbit[k].second)};
                    if (std::find(orbit.begin(), orbit.end(), q) == orbit.end())
                        orbit.push_back(q);
                }
        covered.insert(covered.end(), orbit.begin(), orbit.end());
    }
    Echelon ech(F, dom.dim());
    std::vector<Vec> frontier;
    for (unsigned i : reps) {
        Vec in = vec_zero(F, dom.dim());
        in[i * X.dim() + 0] = Scalar::one(F); // e_i (x) u
        Vec im = ctx.phi(m).apply(in);
        if (ech.add(im))
            frontier.push_back(std::move(im));
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier)
            for (size_t g = 0; g < img->ngens(); ++g)
                for (int sign : {+1, -1}) {
                    Vec w = (sign > 0 ? dom.gen_action(g) : dom.gen_action_inv(g)).apply(v);
                    if (ech.add(w))
                        next.push_back(std::move(w));
                }
        frontier = std::move(next);
    }
    return ech.rows();
}

} // namespace ydw
