#pragma once

// Executable Grace/Asano machinery. A MultiAffinePoly is a polynomial in
// named variables in which no variable appears squared; grace_extension
// produces the unique symmetric multi-affine polynomial agreeing with a
// univariate polynomial on the diagonal, and asano_contract replaces the
// pair (a, b) in A + B a + C b + D a b by a fresh variable: A + D c.
// build_by_asano reproduces the counting polynomial through this pipeline.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lyl/bigint.hpp"
#include "lyl/count.hpp"
#include "lyl/errors.hpp"
#include "lyl/graph.hpp"
#include "lyl/poly.hpp"

namespace lyl {

class MultiAffinePoly {
public:
    MultiAffinePoly() = default;
    explicit MultiAffinePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.size() > 64) throw ResourceError("multi-affine variable universe exceeds 64");
        std::set<std::string> uniq(vars_.begin(), vars_.end());
        if (uniq.size() != vars_.size()) throw InputError("duplicate variable names");
    }

    const std::vector<std::string>& variables() const { return vars_; }

    int var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        throw InputError("variable '" + name + "' not in the polynomial's universe");
    }

    void set_monomial(std::uint64_t mask, BigInt coeff) {
        if (coeff.is_zero()) terms_.erase(mask);
        else terms_[mask] = std::move(coeff);
    }
    void add_monomial(std::uint64_t mask, const BigInt& coeff) {
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            if (!coeff.is_zero()) terms_.emplace(mask, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    const std::map<std::uint64_t, BigInt>& terms() const { return terms_; }

    BigInt coefficient(const std::set<std::string>& var_subset) const {
        std::uint64_t mask = 0;
        for (const auto& v : var_subset) mask |= 1ULL << var_index(v);
        auto it = terms_.find(mask);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // product; operand variable supports must be disjoint (multi-affinity)
    friend MultiAffinePoly operator*(const MultiAffinePoly& a, const MultiAffinePoly& b) {
        MultiAffinePoly r(merge_universes(a, b));
        std::vector<std::uint64_t> amap = reindex(a, r), bmap = reindex(b, r);
        for (const auto& [ma, ca] : a.terms_) {
            std::uint64_t ra = remap(ma, amap);
            for (const auto& [mb, cb] : b.terms_) {
                std::uint64_t rb = remap(mb, bmap);
                if (ra & rb)
                    throw InputError("product would square a shared variable");
                r.add_monomial(ra | rb, ca * cb);
            }
        }
        return r;
    }

    // substitute the same value z for every variable; entry k of the result
    // collects the coefficients of all size-k monomials
    std::vector<BigInt> diagonal() const {
        std::vector<BigInt> out(vars_.size() + 1, BigInt(0));
        for (const auto& [mask, c] : terms_)
            out[static_cast<std::size_t>(std::popcount(mask))] += c;
        return out;
    }

private:
    std::vector<std::string> vars_;
    std::map<std::uint64_t, BigInt> terms_;

    static std::vector<std::string> merge_universes(const MultiAffinePoly& a, const MultiAffinePoly& b) {
        std::vector<std::string> u = a.vars_;
        for (const auto& v : b.vars_)
            if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
        if (u.size() > 64) throw ResourceError("multi-affine variable universe exceeds 64");
        return u;
    }
    static std::vector<std::uint64_t> reindex(const MultiAffinePoly& p, const MultiAffinePoly& target) {
        std::vector<std::uint64_t> m(p.vars_.size());
        for (std::size_t i = 0; i < p.vars_.size(); ++i)
            m[i] = 1ULL << target.var_index(p.vars_[i]);
        return m;
    }
    static std::uint64_t remap(std::uint64_t mask, const std::vector<std::uint64_t>& m) {
        std::uint64_t r = 0;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1ULL) r |= m[static_cast<std::size_t>(i)];
        return r;
    }
};

// The unique symmetric multi-affine polynomial Q with Q(z,...,z) = p(z):
// the coefficient of each size-k variable subset is p_k / binom(d,k).
inline MultiAffinePoly grace_extension(const CountPolynomial& p, int d,
                                       const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != d) throw InputError("grace extension needs exactly d variables");
    if (p.degree() > d) throw InputError("polynomial degree exceeds variable count");
    MultiAffinePoly q(vars);
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt& pk = p.coeff(k);
        if (pk.is_zero()) continue;
        BigInt bk = binomial(static_cast<unsigned>(d), static_cast<unsigned>(k));
        BigInt coeff, rem;
        BigInt::divmod(pk, bk, coeff, rem);
        if (!rem.is_zero())
            throw InputError("grace extension needs binom(" + std::to_string(d) + "," +
                             std::to_string(k) + ") to divide coefficient " + pk.to_decimal());
        // walk all size-k subsets of d variables (Gosper)
        if (k == 0) {
            q.set_monomial(0, coeff);
            continue;
        }
        std::uint64_t mask = (k == 64) ? ~0ULL : ((1ULL << k) - 1);
        std::uint64_t limit = (d == 64) ? ~0ULL : ((1ULL << d) - 1);
        while (mask <= limit) {
            q.set_monomial(mask, coeff);
            std::uint64_t c = mask & static_cast<std::uint64_t>(-static_cast<std::int64_t>(mask));
            std::uint64_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return q;
}

// Writing q = A + B a + C b + D a b, returns A + D c on the universe with
// a and b removed and the fresh variable c appended.
inline MultiAffinePoly asano_contract(const MultiAffinePoly& q, const std::string& a,
                                      const std::string& b, const std::string& c) {
    int ia = q.var_index(a), ib = q.var_index(b);
    if (ia == ib) throw InputError("asano contraction needs two distinct variables");
    std::vector<std::string> new_vars;
    for (const auto& v : q.variables())
        if (v != a && v != b) new_vars.push_back(v);
    new_vars.push_back(c);
    MultiAffinePoly out(new_vars);
    const std::uint64_t ba = 1ULL << ia, bb = 1ULL << ib;
    const std::uint64_t cbit = 1ULL << (new_vars.size() - 1);

    // old index -> new bit for the surviving variables
    std::vector<std::uint64_t> remap(q.variables().size(), 0);
    {
        std::size_t j = 0;
        for (std::size_t i = 0; i < q.variables().size(); ++i) {
            if (static_cast<int>(i) == ia || static_cast<int>(i) == ib) continue;
            remap[i] = 1ULL << j;
            ++j;
        }
    }
    auto translate = [&](std::uint64_t mask) {
        std::uint64_t r = 0;
        for (int i = 0; mask; ++i, mask >>= 1)
            if (mask & 1ULL) r |= remap[static_cast<std::size_t>(i)];
        return r;
    };
    for (const auto& [mask, coeff] : q.terms()) {
        bool has_a = mask & ba, has_b = mask & bb;
        if (has_a != has_b) continue; // B and C parts are discarded
        std::uint64_t base = translate(mask & ~(ba | bb));
        out.add_monomial(has_a ? (base | cbit) : base, coeff);
    }
    return out;
}

// Contracted zero-free disc radius: discs |z| < r1, |z| < r2 combine to |z| < r1*r2.
inline double zero_region_product(double r1, double r2) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InputError("zero-free radii must be positive");
    return r1 * r2;
}

namespace asano_detail {

// Interleaved pipeline state: monomials over a sliding window of live
// vertex-edge variables; the z-power accumulated by contracted edges is kept
// per monomial (substituting z for a contracted variable commutes with every
// later contraction, which never touches it).
struct BuildState {
    std::map<std::uint64_t, std::vector<BigInt>> terms; // mask -> poly in z
    std::vector<int> free_slots;
    std::size_t monomial_cap;

    explicit BuildState(std::size_t cap) : monomial_cap(cap) {
        for (int i = 63; i >= 0; --i) free_slots.push_back(i);
        terms.emplace(0, std::vector<BigInt>{BigInt(1)});
    }
    int take_slot() {
        if (free_slots.empty())
            throw ResourceError("asano build exceeded the 64-variable window");
        int s = free_slots.back();
        free_slots.pop_back();
        return s;
    }
    void check_cap() const {
        if (terms.size() > monomial_cap)
            throw ResourceError("asano build exceeded the monomial cap");
    }
};

inline void add_term(std::map<std::uint64_t, std::vector<BigInt>>& dst, std::uint64_t mask,
                     const std::vector<BigInt>& zpoly, int shift) {
    auto& acc = dst[mask];
    if (acc.size() < zpoly.size() + static_cast<std::size_t>(shift))
        acc.resize(zpoly.size() + static_cast<std::size_t>(shift), BigInt(0));
    for (std::size_t i = 0; i < zpoly.size(); ++i)
        acc[i + static_cast<std::size_t>(shift)] += zpoly[i];
}

} // namespace asano_detail

// Builds P_(C) by multiplying the Grace extensions of all vertex polynomials
// and Asano-contracting the two variables of each edge, following the given
// edge order (the result is order-independent).
inline CountPolynomial build_by_asano(const Graph& g, const ConstraintProfile& cp,
                                      const std::vector<int>& edge_order,
                                      int cap_edges = kDefaultEnumerationCap,
                                      std::size_t monomial_cap = (1u << 22)) {
    const int E = g.num_edges();
    if (E > cap_edges)
        throw ResourceError("asano build cap exceeded: |E| = " + std::to_string(E) +
                            " > cap " + std::to_string(cap_edges));
    {
        std::vector<int> sorted = edge_order;
        std::sort(sorted.begin(), sorted.end());
        for (int e = 0; e < E; ++e)
            if (sorted[static_cast<std::size_t>(e)] != e)
                throw InputError("edge order is not a permutation of the edge set");
    }

    asano_detail::BuildState st(monomial_cap);
    // slot of variable z_{v,e} once v's extension has been multiplied in
    std::map<std::pair<int, int>, int> slot_of;
    std::vector<bool> entered(static_cast<std::size_t>(g.num_vertices()), false);

    auto enter_vertex = [&](int v) {
        if (entered[static_cast<std::size_t>(v)]) return;
        entered[static_cast<std::size_t>(v)] = true;
        const auto& inc = g.incident_edges(v);
        const int d = static_cast<int>(inc.size());
        std::vector<int> slots;
        slots.reserve(static_cast<std::size_t>(d));
        for (int e : inc) {
            int s = st.take_slot();
            slot_of[{v, e}] = s;
            slots.push_back(s);
        }
        // vertex polynomial has coefficient binom(d,k) at k in C(v), so its
        // Grace extension gives every size-k slot subset coefficient 1
        std::vector<std::uint64_t> submasks;
        for (int k : cp.allowed(v)) {
            if (k > d) continue;
            std::vector<int> idx(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                std::uint64_t m = 0;
                for (int i : idx) m |= 1ULL << slots[static_cast<std::size_t>(i)];
                submasks.push_back(m);
                if (k == 0) break;
                int i = k - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == d - k + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j)
                    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
        std::map<std::uint64_t, std::vector<BigInt>> next;
        for (const auto& [mask, zpoly] : st.terms)
            for (std::uint64_t sm : submasks)
                asano_detail::add_term(next, mask | sm, zpoly, 0);
        st.terms = std::move(next);
        st.check_cap();
    };

    for (int e : edge_order) {
        auto [u, v] = g.edge(e);
        enter_vertex(u);
        enter_vertex(v);
        int sa = slot_of.at({u, e}), sb = slot_of.at({v, e});
        const std::uint64_t ba = 1ULL << sa, bb = 1ULL << sb;
        std::map<std::uint64_t, std::vector<BigInt>> next;
        for (const auto& [mask, zpoly] : st.terms) {
            bool has_a = mask & ba, has_b = mask & bb;
            if (has_a != has_b) continue;              // discard B and C parts
            std::uint64_t base = mask & ~(ba | bb);
            asano_detail::add_term(next, base, zpoly, has_a ? 1 : 0); // z_e -> z
        }
        st.terms = std::move(next);
        st.check_cap();
        st.free_slots.push_back(sa);
        st.free_slots.push_back(sb);
        slot_of.erase({u, e});
        slot_of.erase({v, e});
    }

    if (st.terms.empty())
        throw InputError("no admissible edge subset: (C) is empty");
    if (st.terms.size() != 1 || st.terms.begin()->first != 0)
        throw NumericalError("asano build left uncontracted variables");
    return CountPolynomial(st.terms.begin()->second);
}

inline CountPolynomial build_by_asano(const Graph& g, const ConstraintProfile& cp,
                                      int cap_edges = kDefaultEnumerationCap) {
    return build_by_asano(g, cp, choose_edge_order(g), cap_edges);
}

} // namespace lyl
