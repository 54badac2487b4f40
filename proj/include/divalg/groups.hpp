#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divalg/arith.hpp"
#include "divalg/error.hpp"

namespace divalg {

/// Metacyclic presentation
///   < a, b : a^(p^alpha(p^m-1)) = 1, b a b^-1 = a^t, b^(p-1) = a^(p^alpha) >
/// with t of multiplicative order p-1 mod p^alpha and t = 1 mod p^m-1
/// (the second congruence is what makes the presentation consistent:
/// conjugation by b must fix b^(p-1) = a^(p^alpha)).
struct MetacyclicGroup {
    long p = 0;
    long m = 0;
    long alpha = 0;
    Int t;
    Int order_a;   // p^alpha * (p^m - 1)
    Int p_alpha;   // p^alpha
    long quot = 0; // p - 1

    Int order() const { return order_a * quot; }
};

/// Canonical presentation: t is the CRT combination of the minimal residue
/// of order p-1 in (Z/p^alpha)^x with 1 mod (p^m-1).  An explicit t may be
/// supplied instead (it is validated against both conditions).
MetacyclicGroup make_hewett_group(long p, long m, long alpha,
                                  const std::optional<Int>& explicit_t = std::nullopt);

/// Normal form a^i b^j with 0 <= i < order_a, 0 <= j < p-1.
struct GroupElement {
    Int i;
    long j = 0;

    bool operator==(const GroupElement& o) const { return i == o.i && j == o.j; }
    bool operator<(const GroupElement& o) const { return i < o.i || (i == o.i && j < o.j); }
    bool is_identity() const { return i == 0 && j == 0; }
};

GroupElement group_identity();
GroupElement multiply(const GroupElement& g1, const GroupElement& g2, const MetacyclicGroup& G);
GroupElement group_inverse(const GroupElement& g, const MetacyclicGroup& G);
GroupElement group_power(const GroupElement& g, const Int& k, const MetacyclicGroup& G);
Int element_order(const GroupElement& g, const MetacyclicGroup& G);

/// All |G| normal forms, sorted.
std::vector<GroupElement> enumerate_elements(const MetacyclicGroup& G);

/// Closure of gens under an ambient multiplication, starting from the
/// identity.  Throws CapExceeded past `cap` elements.
template <class T, class Mul, class Cmp = std::less<T>>
std::vector<T> generated_subgroup(const std::vector<T>& gens, const T& identity, Mul&& mul,
                                  size_t cap = 100000, Cmp cmp = Cmp{}) {
    std::map<T, bool, Cmp> closure(cmp);
    closure.emplace(identity, true);
    std::vector<T> work{identity};
    while (!work.empty()) {
        T x = std::move(work.back());
        work.pop_back();
        for (const T& g : gens) {
            T y = mul(x, g);
            if (closure.emplace(y, true).second) {
                if (closure.size() > cap)
                    throw CapExceeded("generated_subgroup: closure cap exceeded");
                work.push_back(std::move(y));
            }
        }
    }
    std::vector<T> out;
    out.reserve(closure.size());
    for (auto& [k, v] : closure) out.push_back(k);
    return out;
}

/// Finite multiplication table; t[i][j] is the index of the product of
/// elements i and j.
struct MulTable {
    std::vector<std::vector<int>> t;
    int identity = -1;

    size_t size() const { return t.size(); }
    int at(int i, int j) const { return t[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    long order_of(int g) const;
    std::vector<long> order_spectrum() const;  // sorted multiset of element orders
};

/// Builds a table from a closed element list (as produced by
/// generated_subgroup) and a multiplication callback.
template <class T, class Mul, class Cmp = std::less<T>>
MulTable make_multiplication_table(const std::vector<T>& elements, const T& identity, Mul&& mul,
                                   Cmp cmp = Cmp{}) {
    std::map<T, int, Cmp> index(cmp);
    for (size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
    MulTable table;
    table.t.assign(elements.size(), std::vector<int>(elements.size(), -1));
    auto id_it = index.find(identity);
    if (id_it == index.end()) throw std::invalid_argument("make_multiplication_table: no identity");
    table.identity = id_it->second;
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = 0; j < elements.size(); ++j) {
            auto it = index.find(mul(elements[i], elements[j]));
            if (it == index.end())
                throw std::invalid_argument("make_multiplication_table: set not closed");
            table.t[i][j] = it->second;
        }
    return table;
}

MulTable group_multiplication_table(const MetacyclicGroup& G);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> witness;  // index map G -> H when isomorphic
    std::string certificate;   // distinguishing invariant or search summary
};

/// Brute-force isomorphism test: order-spectrum comparison, then a
/// generator-image backtracking search with relation pruning.  Caps: group
/// order 5000, 10^7 search nodes.
IsoResult isomorphic(const MulTable& G, const MulTable& H, size_t node_cap = 10000000);

}  // namespace divalg
