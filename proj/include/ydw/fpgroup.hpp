#pragma once

// Finitely presented groups realized concretely: HLT Todd-Coxeter coset
// enumeration over the trivial subgroup (regular permutation representation),
// conjugacy classes, centralizers, centers, and homomorphism checks.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ydw {

// A word is a sequence of signed 1-based generator indices: +i means
// generator i-1, -i its inverse.
using Word = std::vector<int>;

inline Word word_inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (int& l : r)
        l = -l;
    return r;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// free reduction only; equality of group elements is tested via permutations
inline Word word_reduce(const Word& w) {
    Word r;
    for (int l : w) {
        if (!r.empty() && r.back() == -l)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(std::vector<std::string> gens, std::vector<Word> rels)
        : generators(std::move(gens)), relators(std::move(rels)) {
        if (generators.empty())
            throw Error("presentation needs at least one generator");
        for (const Word& w : relators)
            check_word(w);
    }

    void check_word(const Word& w) const {
        for (int l : w)
            if (l == 0 || static_cast<size_t>(std::abs(l)) > generators.size())
                throw BadWordError("word uses undeclared generator index");
    }

    int generator_index(const std::string& name) const {
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name)
                return static_cast<int>(i) + 1;
        return 0;
    }
};

// Presentation text format: `gens: a b v` / `rels: b a B A V, ...`,
// uppercase = inverse, token `name^k` = k-th power.
inline Word parse_word(const Presentation& p, const std::string& text) {
    Word out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        long exp = 1;
        std::string base = tok;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            exp = std::stol(tok.substr(caret + 1));
        }
        int idx = p.generator_index(base);
        if (idx == 0) {
            std::string lower = base;
            std::transform(lower.begin(), lower.end(), lower.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            idx = p.generator_index(lower);
            if (idx == 0)
                throw BadWordError("unknown generator: " + base);
            idx = -idx;
        }
        long n = exp < 0 ? -exp : exp;
        int letter = exp < 0 ? -idx : idx;
        for (long i = 0; i < n; ++i)
            out.push_back(letter);
    }
    return word_reduce(out);
}

inline Presentation parse_presentation(const std::string& text) {
    std::vector<std::string> gens;
    std::vector<std::string> relator_chunks;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto colon = line.find(':');
        if (colon == std::string::npos)
            continue;
        std::string key = line.substr(0, colon);
        std::string rest = line.substr(colon + 1);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key == "gens") {
            std::istringstream gs(rest);
            std::string g;
            while (gs >> g)
                gens.push_back(g);
        } else if (key == "rels") {
            std::string chunk;
            std::istringstream rs(rest);
            while (std::getline(rs, chunk, ','))
                relator_chunks.push_back(chunk);
        }
    }
    Presentation p(gens, {});
    for (const auto& chunk : relator_chunks) {
        Word w = parse_word(p, chunk);
        if (!w.empty())
            p.relators.push_back(w);
    }
    return p;
}

class FiniteGroupImage;
using ImagePtr = std::shared_ptr<const FiniteGroupImage>;

class GroupElement {
public:
    GroupElement() = default;
    GroupElement(ImagePtr img, uint32_t idx) : img_(std::move(img)), idx_(idx) {}

    const ImagePtr& image() const { return img_; }
    uint32_t index() const { return idx_; }
    const Word& word() const;
    bool is_identity() const { return idx_ == 0; }

    GroupElement operator*(const GroupElement& o) const;
    GroupElement inverse() const;
    GroupElement pow(long e) const;
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.idx_ == b.idx_;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        return a.idx_ < b.idx_;
    }

private:
    ImagePtr img_;
    uint32_t idx_ = 0;
};

// conjugate(a, b) = a b a^-1, the quandle operation a |> b
inline GroupElement conjugate(const GroupElement& a, const GroupElement& b) {
    return a * b * a.inverse();
}

class FiniteGroupImage : public std::enable_shared_from_this<FiniteGroupImage> {
public:
    // HLT coset enumeration over the trivial subgroup with deterministic scan
    // order. Throws EnumerationOverflowError if max_cosets live cosets are
    // exceeded even after a lookahead pass.
    static ImagePtr enumerate(const Presentation& p, const std::vector<Word>& extras,
                              uint32_t max_cosets = 1'000'000);

    uint32_t order() const { return order_; }
    size_t ngens() const { return pres_.generators.size(); }
    const Presentation& presentation() const { return pres_; }
    const std::vector<Word>& extra_relators() const { return extras_; }

    uint32_t apply_letter(uint32_t c, int letter) const {
        size_t g = static_cast<size_t>(std::abs(letter)) - 1;
        return letter > 0 ? gen_right_[g][c] : gen_right_inv_[g][c];
    }
    uint32_t apply_word(uint32_t c, const Word& w) const {
        for (int l : w)
            c = apply_letter(c, l);
        return c;
    }
    uint32_t eval_word(const Word& w) const { return apply_word(0, w); }
    uint32_t mul_idx(uint32_t a, uint32_t b) const { return apply_word(a, words_[b]); }
    uint32_t inv_idx(uint32_t a) const { return inv_[a]; }
    uint32_t conj_idx(uint32_t a, uint32_t b) const { // a b a^-1
        return mul_idx(mul_idx(a, b), inv_[a]);
    }
    const Word& word_of(uint32_t c) const { return words_[c]; }
    uint32_t gen_element(size_t g) const { return gen_right_[g][0]; }

    GroupElement element(const Word& w) const {
        pres_.check_word(w);
        return GroupElement(shared_from_this(), eval_word(word_reduce(w)));
    }
    GroupElement element_by_index(uint32_t idx) const {
        return GroupElement(shared_from_this(), idx);
    }
    GroupElement identity() const { return element_by_index(0); }
    GroupElement generator(size_t g) const { return element_by_index(gen_element(g)); }

    unsigned element_order(uint32_t a) const {
        unsigned n = 1;
        uint32_t c = a;
        while (c != 0) {
            c = mul_idx(c, a);
            ++n;
        }
        return n;
    }

    bool is_central(uint32_t a) const {
        for (size_t g = 0; g < ngens(); ++g) {
            uint32_t ge = gen_element(g);
            if (mul_idx(a, ge) != mul_idx(ge, a))
                return false;
        }
        return true;
    }

    // conjugacy class in breadth-first order from the seed, conjugating by
    // generators and their inverses in presentation order
    std::vector<uint32_t> conjugacy_class(uint32_t a) const {
        std::vector<uint32_t> cls{a};
        std::vector<char> seen(order_, 0);
        seen[a] = 1;
        for (size_t i = 0; i < cls.size(); ++i) {
            for (size_t g = 0; g < ngens(); ++g) {
                for (int sign : {+1, -1}) {
                    uint32_t t = sign > 0 ? gen_element(g) : inv_[gen_element(g)];
                    uint32_t c = conj_idx(t, cls[i]);
                    if (!seen[c]) {
                        seen[c] = 1;
                        cls.push_back(c);
                    }
                }
            }
        }
        return cls;
    }

    // transversal parallel to conjugacy_class(a): t[i] with
    // class[i] = t[i] * a * t[i]^-1
    std::vector<uint32_t> class_transversal(uint32_t a) const {
        std::vector<uint32_t> cls{a}, tr{0};
        std::vector<int32_t> pos(order_, -1);
        pos[a] = 0;
        for (size_t i = 0; i < cls.size(); ++i) {
            for (size_t g = 0; g < ngens(); ++g) {
                for (int sign : {+1, -1}) {
                    uint32_t t = sign > 0 ? gen_element(g) : inv_[gen_element(g)];
                    uint32_t c = conj_idx(t, cls[i]);
                    if (pos[c] < 0) {
                        pos[c] = static_cast<int32_t>(cls.size());
                        cls.push_back(c);
                        tr.push_back(mul_idx(t, tr[i]));
                    }
                }
            }
        }
        return tr;
    }

    std::vector<uint32_t> centralizer_elements(uint32_t a) const {
        std::vector<uint32_t> out;
        for (uint32_t e = 0; e < order_; ++e)
            if (mul_idx(e, a) == mul_idx(a, e))
                out.push_back(e);
        return out;
    }

    // subgroup closure of a generating set (sorted element list)
    std::vector<uint32_t> subgroup_closure(std::vector<uint32_t> gens) const {
        std::vector<char> seen(order_, 0);
        std::vector<uint32_t> members{0};
        seen[0] = 1;
        for (size_t i = 0; i < members.size(); ++i) {
            for (uint32_t g : gens) {
                for (uint32_t t : {g, inv_[g]}) {
                    uint32_t c = mul_idx(members[i], t);
                    if (!seen[c]) {
                        seen[c] = 1;
                        members.push_back(c);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    }

    // small generating set of the full centralizer, greedy over element order
    std::vector<uint32_t> centralizer_generators(uint32_t a) const {
        std::vector<uint32_t> elems = centralizer_elements(a);
        std::vector<uint32_t> gens;
        std::vector<uint32_t> closure{0};
        for (uint32_t e : elems) {
            if (std::binary_search(closure.begin(), closure.end(), e))
                continue;
            gens.push_back(e);
            closure = subgroup_closure(gens);
            if (closure.size() == elems.size())
                break;
        }
        return gens;
    }

    std::vector<uint32_t> center_elements() const {
        std::vector<uint32_t> out;
        for (uint32_t e = 0; e < order_; ++e)
            if (is_central(e))
                out.push_back(e);
        return out;
    }

private:
    Presentation pres_;
    std::vector<Word> extras_;
    uint32_t order_ = 0;
    std::vector<std::vector<uint32_t>> gen_right_;     // column maps c -> c*g
    std::vector<std::vector<uint32_t>> gen_right_inv_; // c -> c*g^-1
    std::vector<Word> words_;                          // canonical BFS word per element
    std::vector<uint32_t> inv_;                        // inverse element index

    friend class ToddCoxeter;
};

inline const Word& GroupElement::word() const { return img_->word_of(idx_); }
inline GroupElement GroupElement::operator*(const GroupElement& o) const {
    return GroupElement(img_, img_->mul_idx(idx_, o.idx_));
}
inline GroupElement GroupElement::inverse() const {
    return GroupElement(img_, img_->inv_idx(idx_));
}
inline GroupElement GroupElement::pow(long e) const {
    GroupElement base = e < 0 ? inverse() : *this;
    if (e < 0)
        e = -e;
    GroupElement r = img_->element_by_index(0);
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// HLT Todd-Coxeter with coincidence handling and a single lookahead pass.

class ToddCoxeter {
public:
    ToddCoxeter(const Presentation& p, const std::vector<Word>& extras, uint32_t max_cosets)
        : ngens_(p.generators.size()), ncols_(2 * p.generators.size()), max_(max_cosets) {
        for (const Word& w : p.relators)
            relators_.push_back(w);
        for (const Word& w : extras)
            relators_.push_back(word_reduce(w));
        relators_.erase(std::remove_if(relators_.begin(), relators_.end(),
                                       [](const Word& w) { return w.empty(); }),
                        relators_.end());
        new_coset(); // coset 0 = trivial subgroup
    }

    // runs the enumeration; returns the complete standardized table
    void run() {
        for (uint32_t c = 0; c < ncosets(); ++c) {
            if (dead(c))
                continue;
            for (const Word& r : relators_) {
                scan_and_fill(c, r);
                if (dead(c))
                    break;
            }
            if (dead(c))
                continue;
            for (size_t x = 0; x < ncols_; ++x) {
                if (dead(c))
                    break;
                if (entry(c, x) < 0)
                    define(c, x);
            }
        }
        compress_standardize();
    }

    uint32_t nalive() const { return nalive_; }
    size_t ncols() const { return ncols_; }
    int32_t entry(uint32_t c, size_t col) const { return table_[c * ncols_ + col]; }
    uint32_t ncosets() const { return static_cast<uint32_t>(table_.size() / ncols_); }

private:
    static size_t col_of(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }
    static size_t inv_col(size_t col) { return col ^ 1; }

    int32_t& entry_ref(uint32_t c, size_t col) { return table_[c * ncols_ + col]; }
    bool dead(uint32_t c) const { return p_[c] != c; }

    uint32_t rep(uint32_t c) {
        while (p_[c] != c)
            c = p_[c];
        return c;
    }

    uint32_t new_coset() {
        if (nalive_ >= max_) {
            lookahead();
            if (nalive_ >= max_)
                throw EnumerationOverflowError(
                    "coset limit exceeded (" + std::to_string(max_) +
                    "); quotient may be infinite or the limit too small");
        }
        uint32_t c = ncosets();
        table_.resize(table_.size() + ncols_, -1);
        p_.push_back(c);
        ++nalive_;
        return c;
    }

    void define(uint32_t c, size_t col) {
        uint32_t n = new_coset();
        entry_ref(c, col) = static_cast<int32_t>(n);
        entry_ref(n, inv_col(col)) = static_cast<int32_t>(c);
    }

    void merge(uint32_t a, uint32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b)
            return;
        if (a > b)
            std::swap(a, b);
        p_[b] = a;
        --nalive_;
        dedq_.push_back(b);
    }

    void coincidence(uint32_t a, uint32_t b) {
        merge(a, b);
        while (!dedq_.empty()) {
            uint32_t e = dedq_.front();
            dedq_.pop_front();
            for (size_t x = 0; x < ncols_; ++x) {
                int32_t f = entry(e, x);
                if (f < 0)
                    continue;
                entry_ref(static_cast<uint32_t>(f), inv_col(x)) = -1;
                uint32_t mu = rep(e), nu = rep(static_cast<uint32_t>(f));
                int32_t mx = entry(mu, x);
                if (mx >= 0) {
                    merge(nu, static_cast<uint32_t>(mx));
                } else {
                    int32_t nx = entry(nu, inv_col(x));
                    if (nx >= 0) {
                        merge(mu, static_cast<uint32_t>(nx));
                    } else {
                        entry_ref(mu, x) = static_cast<int32_t>(nu);
                        entry_ref(nu, inv_col(x)) = static_cast<int32_t>(mu);
                    }
                }
            }
        }
    }

    void scan_and_fill(uint32_t alpha, const Word& w) {
        size_t i = 0, j = w.size(); // letters [i, j) not yet traversed
        uint32_t f = alpha, b = alpha;
        while (true) {
            while (i < j) {
                int32_t t = entry(f, col_of(w[i]));
                if (t < 0)
                    break;
                f = static_cast<uint32_t>(t);
                ++i;
            }
            if (i == j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j > i) {
                int32_t t = entry(b, inv_col(col_of(w[j - 1])));
                if (t < 0)
                    break;
                b = static_cast<uint32_t>(t);
                --j;
            }
            if (j == i) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                // deduction closing the single gap
                entry_ref(f, col_of(w[i])) = static_cast<int32_t>(b);
                entry_ref(b, inv_col(col_of(w[i]))) = static_cast<int32_t>(f);
                return;
            }
            define(f, col_of(w[i]));
        }
    }

    // scan all relators over all live cosets without defining, to process
    // pending coincidences before giving up
    void lookahead() {
        for (uint32_t c = 0; c < ncosets(); ++c) {
            for (const Word& w : relators_) {
                if (dead(c))
                    break;
                scan_only(c, w);
            }
        }
    }

    void scan_only(uint32_t alpha, const Word& w) {
        size_t i = 0, j = w.size();
        uint32_t f = alpha, b = alpha;
        while (i < j) {
            int32_t t = entry(f, col_of(w[i]));
            if (t < 0)
                break;
            f = static_cast<uint32_t>(t);
            ++i;
        }
        if (i == j) {
            if (f != b)
                coincidence(f, b);
            return;
        }
        while (j > i) {
            int32_t t = entry(b, inv_col(col_of(w[j - 1])));
            if (t < 0)
                break;
            b = static_cast<uint32_t>(t);
            --j;
        }
        if (j == i && f != b)
            coincidence(f, b);
        if (j == i + 1) {
            entry_ref(f, col_of(w[i])) = static_cast<int32_t>(b);
            entry_ref(b, inv_col(col_of(w[i]))) = static_cast<int32_t>(f);
        }
    }

    // renumber live cosets in BFS order from coset 0 (standardization)
    void compress_standardize() {
        // replace entries by representatives first
        for (uint32_t c = 0; c < ncosets(); ++c) {
            if (dead(c))
                continue;
            for (size_t x = 0; x < ncols_; ++x) {
                int32_t t = entry(c, x);
                if (t >= 0)
                    entry_ref(c, x) = static_cast<int32_t>(rep(static_cast<uint32_t>(t)));
            }
        }
        std::vector<int32_t> newidx(ncosets(), -1);
        std::vector<uint32_t> bfs;
        bfs.push_back(rep(0));
        newidx[rep(0)] = 0;
        for (size_t i = 0; i < bfs.size(); ++i) {
            for (size_t x = 0; x < ncols_; ++x) {
                int32_t t = entry(bfs[i], x);
                if (t >= 0 && newidx[t] < 0) {
                    newidx[t] = static_cast<int32_t>(bfs.size());
                    bfs.push_back(static_cast<uint32_t>(t));
                }
            }
        }
        if (bfs.size() != nalive_)
            throw Error("coset table not transitive after enumeration");
        std::vector<int32_t> newtable(nalive_ * ncols_, -1);
        for (size_t i = 0; i < bfs.size(); ++i)
            for (size_t x = 0; x < ncols_; ++x) {
                int32_t t = entry(bfs[i], x);
                if (t < 0)
                    throw Error("incomplete coset table");
                newtable[i * ncols_ + x] = newidx[t];
            }
        table_ = std::move(newtable);
        p_.resize(nalive_);
        std::iota(p_.begin(), p_.end(), 0);
    }

    size_t ngens_;
    size_t ncols_;
    uint32_t max_;
    std::vector<Word> relators_;
    std::vector<int32_t> table_;
    std::vector<uint32_t> p_; // union-find forest
    uint32_t nalive_ = 0;
    std::deque<uint32_t> dedq_;
};

inline ImagePtr FiniteGroupImage::enumerate(const Presentation& p,
                                            const std::vector<Word>& extras,
                                            uint32_t max_cosets) {
    ToddCoxeter tc(p, extras, max_cosets);
    tc.run();
    auto img = std::make_shared<FiniteGroupImage>();
    img->pres_ = p;
    img->extras_ = extras;
    img->order_ = tc.nalive();
    size_t ng = p.generators.size();
    img->gen_right_.assign(ng, std::vector<uint32_t>(img->order_));
    img->gen_right_inv_.assign(ng, std::vector<uint32_t>(img->order_));
    for (size_t g = 0; g < ng; ++g)
        for (uint32_t c = 0; c < img->order_; ++c) {
            img->gen_right_[g][c] = static_cast<uint32_t>(tc.entry(c, 2 * g));
            img->gen_right_inv_[g][c] = static_cast<uint32_t>(tc.entry(c, 2 * g + 1));
        }
    // canonical shortest words by BFS over letters (+1, -1, +2, -2, ...)
    img->words_.assign(img->order_, {});
    std::vector<char> seen(img->order_, 0);
    std::vector<uint32_t> bfs{0};
    seen[0] = 1;
    for (size_t i = 0; i < bfs.size(); ++i) {
        uint32_t c = bfs[i];
        for (size_t g = 0; g < ng; ++g) {
            for (int sign : {+1, -1}) {
                int letter = sign * static_cast<int>(g + 1);
                uint32_t t = img->apply_letter(c, letter);
                if (!seen[t]) {
                    seen[t] = 1;
                    img->words_[t] = img->words_[c];
                    img->words_[t].push_back(letter);
                    bfs.push_back(t);
                }
            }
        }
    }
    img->inv_.assign(img->order_, 0);
    for (uint32_t c = 0; c < img->order_; ++c)
        img->inv_[c] = img->apply_word(0, word_inverse(img->words_[c]));
    // post-condition: every relator acts trivially
    std::vector<Word> all = p.relators;
    for (const Word& w : extras)
        all.push_back(w);
    for (const Word& w : all)
        for (uint32_t c = 0; c < img->order_; ++c)
            if (img->apply_word(c, w) != c)
                throw Error("relator fails on completed table");
    return img;
}

// true iff every relator of `source` maps to the identity of `target` under
// generator -> images[i]
inline bool hom_check(const Presentation& source, const FiniteGroupImage& target,
                      const std::vector<Word>& images) {
    if (images.size() != source.generators.size())
        throw BadWordError("hom_check: one image word per source generator required");
    for (const Word& w : images)
        target.presentation().check_word(w);
    for (const Word& rel : source.relators) {
        Word mapped;
        for (int l : rel) {
            const Word& im = images[std::abs(l) - 1];
            Word piece = l > 0 ? im : word_inverse(im);
            mapped.insert(mapped.end(), piece.begin(), piece.end());
        }
        if (target.eval_word(word_reduce(mapped)) != 0)
            return false;
    }
    return true;
}

// do the images generate the whole target image?
inline bool images_generate(const FiniteGroupImage& target, const std::vector<Word>& images) {
    std::vector<uint32_t> gens;
    for (const Word& w : images)
        gens.push_back(target.eval_word(word_reduce(w)));
    return target.subgroup_closure(gens).size() == target.order();
}

} // namespace ydw
