/*
   Copyright 2026 The knotalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   Structural checks: special biserial conditions and the Frobenius form.

   Special biserial (Q, rho):
     1. every vertex is the source of at most two arrows and the target of at
        most two arrows;
     2. if arrows c != d start at t(a), then ca or da is in rho;
     3. if arrows a != b end at s(c), then ca or cb is in rho.
   Only the monomial members of rho are consulted.

   Frobenius form. For a positive-length basis path d starting at e with
   first-arrow sign s, d' is the follow path with d' d = gamma_e^s; for a
   vertex, e' = gamma_e^+ (and (gamma_e^+)' = e). The Gram matrix is
     beta(d', d) = 1       if d is a vertex or starts on a +-source arrow,
     beta(d', d) = tau(e)  if d starts on a --source arrow at e,
   and zero off the pairing.
*/

#ifndef KNOTALG_PROPERTIES_HPP
#define KNOTALG_PROPERTIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "quiver.hpp"

namespace knotalg {

/// An unsigned quiver, for the biserial check on arbitrary input.
struct PlainQuiver {
    std::size_t vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> arrows;  // (source, target)

    static PlainQuiver from(const SignedQuiver& q) {
        PlainQuiver p{q.vertex_count(), {}};
        for (const auto& a : q.arrows()) p.arrows.emplace_back(a.source, a.target);
        return p;
    }
};

struct BiserialWitness {
    int condition;
    std::string description;
};

struct BiserialReport {
    struct VertexDegrees {
        std::size_t out = 0;
        std::size_t in = 0;
    };
    std::vector<VertexDegrees> degrees;
    bool condition1 = true;
    bool condition2 = true;
    bool condition3 = true;
    std::optional<BiserialWitness> witness;  // first failure found
    bool pass() const noexcept { return condition1 && condition2 && condition3; }
};

/// `in_rho` decides membership of a monomial written in composition order.
template <typename Membership>
BiserialReport check_special_biserial(const PlainQuiver& q, Membership&& in_rho) {
    BiserialReport r;
    r.degrees.resize(q.vertex_count);
    for (const auto& [s, t] : q.arrows) {
        ++r.degrees.at(s).out;
        ++r.degrees.at(t).in;
    }
    auto fail = [&r](int condition, std::string text) {
        if (!r.witness) r.witness = BiserialWitness{condition, std::move(text)};
    };
    for (VertexId v = 0; v < q.vertex_count; ++v) {
        if (r.degrees[v].out > 2 || r.degrees[v].in > 2) {
            r.condition1 = false;
            fail(1, "vertex " + std::to_string(v + 1) + " has out-degree " + std::to_string(r.degrees[v].out) +
                        " and in-degree " + std::to_string(r.degrees[v].in));
        }
    }
    const std::size_t m = q.arrows.size();
    for (ArrowId a = 0; a < m; ++a) {
        for (ArrowId c = 0; c < m; ++c) {
            for (ArrowId d = c + 1; d < m; ++d) {
                // Condition 2: c, d leave t(a).
                if (q.arrows[c].first == q.arrows[a].second && q.arrows[d].first == q.arrows[a].second) {
                    if (!in_rho(std::vector<ArrowId>{c, a}) && !in_rho(std::vector<ArrowId>{d, a})) {
                        r.condition2 = false;
                        fail(2, "neither a" + std::to_string(c + 1) + "a" + std::to_string(a + 1) + " nor a" +
                                    std::to_string(d + 1) + "a" + std::to_string(a + 1) + " is a relation");
                    }
                }
                // Condition 3: c, d end at s(a); here a plays the role of the later arrow.
                if (q.arrows[c].second == q.arrows[a].first && q.arrows[d].second == q.arrows[a].first) {
                    if (!in_rho(std::vector<ArrowId>{a, c}) && !in_rho(std::vector<ArrowId>{a, d})) {
                        r.condition3 = false;
                        fail(3, "neither a" + std::to_string(a + 1) + "a" + std::to_string(c + 1) + " nor a" +
                                    std::to_string(a + 1) + "a" + std::to_string(d + 1) + " is a relation");
                    }
                }
            }
        }
    }
    return r;
}

inline BiserialReport check_special_biserial(const SignedQuiver& q, const RelationSet& rho) {
    return check_special_biserial(PlainQuiver::from(q),
                                  [&rho](const std::vector<ArrowId>& p) { return rho.contains_monomial(p); });
}

struct FrobeniusData {
    /// partner[i] = index of basis[i]'.
    std::vector<std::size_t> partner;
    /// coefficient[i] = beta(basis[i]', basis[i]).
    std::vector<Scalar> coefficient;

    /// Gram entry beta(basis[i], basis[j]).
    std::optional<Scalar> gram(std::size_t i, std::size_t j) const {
        if (partner.at(j) != i) return std::nullopt;
        return coefficient[j];
    }
};

inline FrobeniusData frobenius_form(const DiagramAlgebra& A) {
    if (A.variant() != Variant::lambda) throw InvalidArgument("the Frobenius form is defined for the lambda variant");
    const SignedQuiver& q = A.quiver();
    const std::size_t n = q.arrow_count();
    FrobeniusData f;
    f.partner.resize(A.dimension());
    f.coefficient.reserve(A.dimension());
    for (std::size_t i = 0; i < A.dimension(); ++i) {
        const BasisPath& p = A.basis(i);
        const Scalar one = Scalar::one(A.field());
        switch (p.kind) {
            case BasisPath::Kind::trivial:
                f.partner[i] = A.index_of(BasisPath::cycle_plus(p.id));
                f.coefficient.push_back(one);
                break;
            case BasisPath::Kind::cycle_plus:
                f.partner[i] = A.index_of(BasisPath::trivial(p.id));
                f.coefficient.push_back(one);
                break;
            case BasisPath::Kind::follow: {
                const SignedArrow& first = q.arrow(p.id);
                f.partner[i] = A.index_of(BasisPath::follow(q.advance(p.id, p.length), n - p.length));
                f.coefficient.push_back(first.source_sign == EndSign::plus ? one : A.tau()(first.source));
                break;
            }
        }
    }
    return f;
}

/// beta(x, y) for arbitrary elements.
inline Scalar bilinear_form(const DiagramAlgebra& A, const FrobeniusData& f, const AlgebraElement& x,
                            const AlgebraElement& y) {
    A.check_owner(x);
    A.check_owner(y);
    Scalar s = Scalar::zero(A.field());
    for (const auto& [j, b] : y.terms())
        if (auto a = x.coefficient(f.partner[j])) s += *a * b * f.coefficient[j];
    return s;
}

/// t(x) = beta(x, 1).
inline Scalar trace(const DiagramAlgebra& A, const FrobeniusData& f, const AlgebraElement& x) {
    return bilinear_form(A, f, x, A.one());
}

struct FrobeniusReport {
    bool bijective = false;     // d -> d' is a permutation of the basis
    bool nondegenerate = false; // one nonzero Gram entry in each row and column
    bool associative = false;   // beta(xy, z) = beta(x, yz) on all basis triples
    std::size_t triples_checked = 0;
    std::optional<std::string> witness;
    bool pass() const noexcept { return bijective && nondegenerate && associative; }
};

inline FrobeniusReport check_frobenius(const DiagramAlgebra& A, const FrobeniusData& f) {
    FrobeniusReport r;
    const std::size_t d = A.dimension();
    if (f.partner.size() != d || f.coefficient.size() != d) {
        r.witness = "Frobenius data does not match the algebra dimension";
        return r;
    }
    std::vector<std::size_t> hits(d, 0);
    for (std::size_t i = 0; i < d; ++i)
        if (f.partner[i] < d) ++hits[f.partner[i]];
    r.bijective = std::all_of(hits.begin(), hits.end(), [](std::size_t h) { return h == 1; });
    r.nondegenerate = r.bijective;
    for (std::size_t i = 0; i < d; ++i) {
        if (f.coefficient[i].is_zero()) {
            r.nondegenerate = false;
            if (!r.witness) r.witness = "zero Gram coefficient at " + A.describe(i);
        }
    }
    if (!r.bijective && !r.witness) r.witness = "pairing d -> d' is not a bijection";

    // Products are cached once; the triple loop then only touches scalars
    // when one side is nonzero.
    std::vector<std::optional<BasisProduct>> table(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) table[x * d + y] = A.multiply_basis(x, y);

    r.associative = true;
    for (std::size_t x = 0; x < d && r.associative; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            const auto& xy = table[x * d + y];
            for (std::size_t z = 0; z < d; ++z) {
                ++r.triples_checked;
                const auto& yz = table[y * d + z];
                const bool lhs_nonzero = xy && f.partner[z] == xy->index;
                const bool rhs_nonzero = yz && f.partner[yz->index] == x;
                if (!lhs_nonzero && !rhs_nonzero) continue;
                const Scalar lhs = lhs_nonzero ? xy->coefficient * f.coefficient[z] : Scalar::zero(A.field());
                const Scalar rhs = rhs_nonzero ? yz->coefficient * f.coefficient[yz->index] : Scalar::zero(A.field());
                if (!(lhs == rhs)) {
                    r.associative = false;
                    r.witness = "beta(xy,z) != beta(x,yz) for x=" + A.describe(x) + ", y=" + A.describe(y) +
                                ", z=" + A.describe(z) + ": " + lhs.to_string() + " vs " + rhs.to_string();
                    break;
                }
            }
            if (!r.associative) break;
        }
    }
    return r;
}

inline FrobeniusReport check_frobenius(const DiagramAlgebra& A) { return check_frobenius(A, frobenius_form(A)); }

/// e -> source vertex of e' (the socle element paired with e).
inline std::vector<VertexId> nakayama_permutation(const DiagramAlgebra& A, const FrobeniusData& f) {
    const std::size_t c = A.quiver().vertex_count();
    std::vector<VertexId> nu(c);
    std::vector<bool> hit(c, false);
    for (VertexId e = 0; e < c; ++e) {
        nu[e] = A.source(f.partner[e]);
        if (hit[nu[e]]) throw InvalidArgument("Nakayama map is not a permutation");
        hit[nu[e]] = true;
    }
    return nu;
}

}  // namespace knotalg

#endif
