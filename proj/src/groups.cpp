#include "divalg/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace divalg {

MetacyclicGroup make_hewett_group(long p, long m, long alpha, const std::optional<Int>& explicit_t) {
    if (p < 3 || !is_probable_prime(Int(p)))
        throw std::invalid_argument("make_hewett_group: p must be an odd prime");
    if (m < 1 || m % p == 0) throw std::invalid_argument("make_hewett_group: need gcd(m, p) = 1");
    if (alpha < 1) throw std::invalid_argument("make_hewett_group: alpha must be >= 1");

    MetacyclicGroup G;
    G.p = p;
    G.m = m;
    G.alpha = alpha;
    G.p_alpha = pow_int(Int(p), static_cast<unsigned long>(alpha));
    G.order_a = G.p_alpha * (pow_int(Int(p), static_cast<unsigned long>(m)) - 1);
    G.quot = p - 1;

    const Int pm1 = pow_int(Int(p), static_cast<unsigned long>(m)) - 1;
    if (explicit_t) {
        G.t = mod_reduce(*explicit_t, G.order_a);
    } else {
        // (Z/p^alpha)^x is cyclic of order (p-1)p^(alpha-1); an element of
        // order p-1 always exists for odd p.
        Int s = 0;
        for (Int cand = 2; cand < G.p_alpha; ++cand) {
            if (cand % p == 0) continue;
            if (mult_order(cand, G.p_alpha) == G.quot) {
                s = cand;
                break;
            }
        }
        if (s == 0) throw std::logic_error("make_hewett_group: no element of order p-1");
        G.t = crt_solve({{s, G.p_alpha}, {Int(1), pm1}});
    }
    if (mult_order(G.t, G.p_alpha) != G.quot)
        throw std::invalid_argument("make_hewett_group: t does not have order p-1 mod p^alpha");
    if (mod_reduce(G.t, pm1) != mod_reduce(Int(1), pm1))
        throw std::invalid_argument("make_hewett_group: t != 1 mod p^m-1 (presentation inconsistent)");
    return G;
}

GroupElement group_identity() { return GroupElement{Int(0), 0}; }

GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const MetacyclicGroup& G) {
    // (a^i1 b^j1)(a^i2 b^j2) = a^(i1 + i2 t^j1) b^(j1+j2), folding
    // b^(p-1) = a^(p^alpha) into the a-exponent on overflow.
    GroupElement r;
    r.i = mod_reduce(g1.i + g2.i * pow_mod(G.t, Int(g1.j), G.order_a), G.order_a);
    long j = g1.j + g2.j;
    if (j >= G.quot) {
        j -= G.quot;
        r.i = mod_reduce(r.i + G.p_alpha, G.order_a);
    }
    r.j = j;
    return r;
}

GroupElement group_inverse(const GroupElement& g, const MetacyclicGroup& G) {
    // Search-free inverse: b^-j = a^(-p^alpha) b^(p-1-j) for j > 0.
    GroupElement inv_b_part = group_identity();
    if (g.j > 0) {
        inv_b_part.i = mod_reduce(-G.p_alpha, G.order_a);
        inv_b_part.j = G.quot - g.j;
    }
    // (a^i)^-1 conjugated into place: (a^i b^j)^-1 = b^-j a^-i.
    GroupElement a_inv{mod_reduce(-g.i, G.order_a), 0};
    return multiply(inv_b_part, a_inv, G);
}

GroupElement group_power(const GroupElement& g, const Int& k, const MetacyclicGroup& G) {
    Int e = mod_reduce(k, G.order());
    GroupElement acc = group_identity();
    GroupElement base = g;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = multiply(acc, base, G);
        e >>= 1;
        if (e > 0) base = multiply(base, base, G);
    }
    return acc;
}

Int element_order(const GroupElement& g, const MetacyclicGroup& G) {
    GroupElement acc = g;
    Int k = 1;
    const Int cap = G.order();
    while (!acc.is_identity()) {
        acc = multiply(acc, g, G);
        ++k;
        if (k > cap) throw std::logic_error("element_order: exceeded group order");
    }
    return k;
}

std::vector<GroupElement> enumerate_elements(const MetacyclicGroup& G) {
    std::vector<GroupElement> out;
    for (Int i = 0; i < G.order_a; ++i)
        for (long j = 0; j < G.quot; ++j) out.push_back(GroupElement{i, j});
    return out;
}

long MulTable::order_of(int g) const {
    long order = 1;
    int cur = g;
    while (cur != identity) {
        cur = at(cur, g);
        ++order;
        if (order > static_cast<long>(size()))
            throw std::invalid_argument("MulTable: not a group table");
    }
    return order;
}

std::vector<long> MulTable::order_spectrum() const {
    std::vector<long> spec;
    spec.reserve(size());
    for (int g = 0; g < static_cast<int>(size()); ++g) spec.push_back(order_of(g));
    std::sort(spec.begin(), spec.end());
    return spec;
}

MulTable group_multiplication_table(const MetacyclicGroup& G) {
    const std::vector<GroupElement> elems = enumerate_elements(G);
    return make_multiplication_table(elems, group_identity(),
                                     [&G](const GroupElement& x, const GroupElement& y) {
                                         return multiply(x, y, G);
                                     });
}

namespace {

// Greedy generating sequence: repeatedly adjoin the element of largest
// order outside the current closure.
std::vector<int> generating_sequence(const MulTable& G) {
    const int n = static_cast<int>(G.size());
    std::vector<bool> in_closure(n, false);
    auto close_over = [&](std::vector<int>& gens) {
        std::fill(in_closure.begin(), in_closure.end(), false);
        in_closure[static_cast<size_t>(G.identity)] = true;
        std::vector<int> work{G.identity};
        while (!work.empty()) {
            int x = work.back();
            work.pop_back();
            for (int g : gens) {
                int y = G.at(x, g);
                if (!in_closure[static_cast<size_t>(y)]) {
                    in_closure[static_cast<size_t>(y)] = true;
                    work.push_back(y);
                }
            }
        }
    };
    std::vector<long> orders(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) orders[static_cast<size_t>(g)] = G.order_of(g);

    std::vector<int> gens;
    close_over(gens);
    while (true) {
        int best = -1;
        for (int g = 0; g < n; ++g) {
            if (in_closure[static_cast<size_t>(g)]) continue;
            if (best == -1 || orders[static_cast<size_t>(g)] > orders[static_cast<size_t>(best)])
                best = g;
        }
        if (best == -1) break;
        gens.push_back(best);
        close_over(gens);
    }
    return gens;
}

// Attempts the unique extension of gen -> image to a full map; fails on a
// homomorphism or injectivity conflict.  Returns the witness map or empty.
std::vector<int> try_extension(const MulTable& G, const MulTable& H, const std::vector<int>& gens,
                               const std::vector<int>& images, size_t& budget, bool& out_of_budget) {
    const int n = static_cast<int>(G.size());
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<int> preimage(static_cast<size_t>(n), -1);
    map[static_cast<size_t>(G.identity)] = H.identity;
    preimage[static_cast<size_t>(H.identity)] = G.identity;
    std::vector<int> work{G.identity};
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (size_t k = 0; k < gens.size(); ++k) {
            if (budget == 0) {
                out_of_budget = true;
                return {};
            }
            --budget;
            const int y = G.at(x, gens[k]);
            const int z = H.at(map[static_cast<size_t>(x)], images[k]);
            int& slot = map[static_cast<size_t>(y)];
            if (slot == -1) {
                if (preimage[static_cast<size_t>(z)] != -1) return {};  // not injective
                slot = z;
                preimage[static_cast<size_t>(z)] = y;
                work.push_back(y);
            } else if (slot != z) {
                return {};  // relation conflict
            }
        }
    }
    for (int v : map)
        if (v == -1) return {};  // gens do not generate G (cannot happen)
    return map;
}

}  // namespace

IsoResult isomorphic(const MulTable& G, const MulTable& H, size_t node_cap) {
    IsoResult res;
    if (G.size() > 5000 || H.size() > 5000)
        throw CapExceeded("isomorphic: group order cap (5000) exceeded");
    if (G.size() != H.size()) {
        res.certificate = "orders differ: " + std::to_string(G.size()) + " vs " +
                          std::to_string(H.size());
        return res;
    }
    const std::vector<long> spec_g = G.order_spectrum();
    const std::vector<long> spec_h = H.order_spectrum();
    if (spec_g != spec_h) {
        std::string detail;
        for (size_t i = 0; i < spec_g.size(); ++i)
            if (spec_g[i] != spec_h[i]) {
                detail = "first mismatch at rank " + std::to_string(i) + ": " +
                         std::to_string(spec_g[i]) + " vs " + std::to_string(spec_h[i]);
                break;
            }
        res.certificate = "order spectrum mismatch (" + detail + ")";
        return res;
    }

    const std::vector<int> gens = generating_sequence(G);
    std::vector<long> h_orders(H.size());
    for (int g = 0; g < static_cast<int>(H.size()); ++g)
        h_orders[static_cast<size_t>(g)] = H.order_of(g);

    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        const long want = G.order_of(gens[k]);
        for (int h = 0; h < static_cast<int>(H.size()); ++h)
            if (h_orders[static_cast<size_t>(h)] == want) candidates[k].push_back(h);
    }

    size_t budget = node_cap;
    std::vector<int> images(gens.size(), -1);
    bool out_of_budget = false;

    std::function<bool(size_t)> search = [&](size_t level) -> bool {
        if (level == gens.size()) {
            std::vector<int> witness = try_extension(G, H, gens, images, budget, out_of_budget);
            if (!witness.empty()) {
                res.isomorphic = true;
                res.witness = std::move(witness);
                return true;
            }
            return false;
        }
        for (int cand : candidates[level]) {
            if (out_of_budget) return false;
            images[level] = cand;
            if (search(level + 1)) return true;
        }
        return false;
    };
    search(0);
    if (out_of_budget) throw CapExceeded("isomorphic: search node cap exceeded");
    if (!res.isomorphic)
        res.certificate = "exhausted generator-image search over " + std::to_string(gens.size()) +
                          " generators";
    return res;
}

}  // namespace divalg
