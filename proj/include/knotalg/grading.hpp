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
   Group-valued degrees on the quiver of a diagram.

   Generators of the knot group are the arcs. A crossing with over-arc o,
   incoming under-arc i and outgoing under-arc u contributes the relator
     u o i^-1 o^-1   (positive crossing)
     u o^-1 i^-1 o   (negative crossing).
   An arrow is graded by its arc generator when both endpoint crossings have
   the same sign and by the identity otherwise. Degrees multiply in
   composition order: deg(b a) = deg(b) deg(a).

   Triviality of a word is semi-decided in both directions:
     NO   a permutation representation of degree <= N sending the word to a
          non-identity permutation;
     YES  an expression of the word as a product of at most B conjugates of
          relators with conjugators of length <= L.
   Both witnesses are checked again by verify_certificate.
*/

#ifndef KNOTALG_GRADING_HPP
#define KNOTALG_GRADING_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "algebra.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "group.hpp"
#include "quiver.hpp"

namespace knotalg {

// ---------------------------------------------------------------------------
// Presentation and degrees

struct WirtingerRelation {
    CrossingId crossing;
    Sign sign;
    ArcId over;
    ArcId incoming;
    ArcId outgoing;
    GroupWord relator;
};

struct WirtingerPresentation {
    std::size_t generator_count = 0;
    std::vector<WirtingerRelation> relations;

    std::vector<GroupWord> relators() const {
        std::vector<GroupWord> out;
        out.reserve(relations.size());
        for (const auto& r : relations) out.push_back(r.relator);
        return out;
    }
};

inline WirtingerPresentation wirtinger(const Diagram& d) {
    WirtingerPresentation p;
    p.generator_count = d.arcs().size();
    for (const Crossing& x : d.crossings()) {
        const ArcId o = d.segment(x.over_in).arc;
        const ArcId i = d.segment(x.under_in).arc;
        const ArcId u = d.segment(x.under_out).arc;
        const int e = x.sign == Sign::positive ? 1 : -1;
        GroupWord r = GroupWord::generator(u) * GroupWord::generator(o, e) * GroupWord::generator(i, -1) *
                      GroupWord::generator(o, -e);
        p.relations.push_back({x.id, x.sign, o, i, u, std::move(r)});
    }
    return p;
}

struct DegreeAssignment {
    std::size_t generator_count = 0;
    std::vector<GroupWord> arrow;  // indexed by ArrowId
};

inline DegreeAssignment arrow_degrees(const SignedQuiver& q, const Diagram& d) {
    if (q.arrow_count() != d.segment_count()) throw InvalidArgument("quiver does not belong to the diagram");
    DegreeAssignment a;
    a.generator_count = d.arcs().size();
    for (const SignedArrow& arr : q.arrows()) {
        const bool same = d.crossing(arr.source).sign == d.crossing(arr.target).sign;
        a.arrow.push_back(same ? GroupWord::generator(arr.arc) : GroupWord{});
    }
    return a;
}

/// Degree of a path given last arrow first.
inline GroupWord path_degree(const DegreeAssignment& a, const std::vector<ArrowId>& raw) {
    GroupWord w;
    for (ArrowId x : raw) w *= a.arrow.at(x);
    return w;
}

inline GroupWord path_degree(const DegreeAssignment& a, const SignedQuiver& q, const FollowPath& p) {
    GroupWord w;
    for (std::size_t k = p.length; k-- > 0;) w *= a.arrow.at(q.advance(p.first, k));
    return w;
}

/// One step of a walk in the underlying graph; a reversed arrow carries the
/// inverse degree.
struct WalkStep {
    ArrowId arrow;
    bool forward;
};

/// Degree of a walk given in traversal order.
inline GroupWord walk_degree(const DegreeAssignment& a, const std::vector<WalkStep>& walk) {
    GroupWord w;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
        const GroupWord& g = a.arrow.at(it->arrow);
        w *= it->forward ? g : g.inverse();
    }
    return w;
}

inline std::vector<WalkStep> reverse_walk(const std::vector<WalkStep>& walk) {
    std::vector<WalkStep> r;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) r.push_back({it->arrow, !it->forward});
    return r;
}

struct HomogeneityWord {
    VertexId vertex;
    GroupWord alpha_degree;
    GroupWord beta_degree;
    GroupWord word;  // [deg alpha_e, deg beta_e]
};

inline std::vector<HomogeneityWord> homogeneity_words(const DiagramAlgebra& A, const DegreeAssignment& a) {
    const SignedQuiver& q = A.quiver();
    std::vector<HomogeneityWord> out;
    for (VertexId e = 0; e < q.vertex_count(); ++e) {
        GroupWord da = path_degree(a, q, q.alpha(e));
        GroupWord db = path_degree(a, q, q.beta(e));
        GroupWord w = commutator(da, db);
        out.push_back({e, std::move(da), std::move(db), std::move(w)});
    }
    return out;
}

/// Type-I generators are single paths, which are homogeneous for every
/// assignment. This confirms that shape for the given relation set.
inline bool type_one_homogeneous(const SignedQuiver& q, const RelationSet& rho) {
    for (const auto& path : rho.type_one) {
        if (path.empty()) return false;
        for (std::size_t k = 0; k + 1 < path.size(); ++k)
            if (q.arrow(path[k + 1]).target != q.arrow(path[k]).source) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Budgets

struct Budgets {
    int rep_degree_max = 6;     // N
    int conjugator_max = 8;     // L
    int search_depth = 6;       // B
    int node_max = 200000;      // states generated by one YES-search
    std::optional<double> seconds;

    void validate() const {
        if (rep_degree_max <= 0 || conjugator_max <= 0 || search_depth <= 0 || node_max <= 0)
            throw InvalidArgument("search budgets must be positive");
        if (rep_degree_max > static_cast<int>(Permutation::max_degree))
            throw InvalidArgument("representation degree above " + std::to_string(Permutation::max_degree));
        if (seconds && !(*seconds > 0)) throw InvalidArgument("time budget must be positive");
    }

    /// Defaults with the time cap taken from KNOTALG_BUDGET_SECONDS when set.
    static Budgets from_environment() {
        Budgets b;
        if (const char* env = std::getenv("KNOTALG_BUDGET_SECONDS"); env && *env) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end == env || *end != '\0' || !(v > 0))
                throw InvalidArgument("KNOTALG_BUDGET_SECONDS must be a positive number");
            b.seconds = v;
        }
        return b;
    }
};

class Deadline {
   public:
    Deadline() = default;
    explicit Deadline(std::optional<double> seconds) {
        if (seconds)
            at_ = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
    }
    bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

   private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

// ---------------------------------------------------------------------------
// Finite representations

struct Representation {
    std::size_t degree = 0;
    std::vector<Permutation> images;  // one per generator

    Permutation operator()(const GroupWord& w) const { return evaluate(w, images, degree); }

    bool satisfies(const WirtingerPresentation& p) const {
        if (images.size() != p.generator_count) return false;
        for (const auto& r : p.relations)
            if (!(*this)(r.relator).is_identity()) return false;
        return true;
    }
};

struct RepresentationSet {
    std::vector<Representation> reps;
    int max_degree = 0;
    bool complete = true;  // false when the deadline cut the enumeration short
};

namespace detail {

class RepresentationEnumerator {
   public:
    RepresentationEnumerator(const WirtingerPresentation& p, const Deadline& deadline, RepresentationSet& out)
        : p_(p), deadline_(deadline), out_(out) {}

    void run(std::size_t degree) {
        degree_ = degree;
        std::vector<Permutation> all;
        std::vector<std::uint8_t> v(degree);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        do all.emplace_back(v);
        while (std::next_permutation(v.begin(), v.end()));
        std::map<std::vector<std::size_t>, std::vector<Permutation>> classes;
        for (const Permutation& x : all)
            if (!x.is_identity()) classes[x.cycle_type()].push_back(x);
        for (auto& [type, members] : classes) {
            if (!stopped_ && deadline_.expired()) stopped_ = true;
            if (stopped_) return;
            class_ = &members;
            std::vector<std::optional<Permutation>> img(p_.generator_count);
            img[0] = members.front();
            search(img);
        }
    }

    bool stopped() const noexcept { return stopped_; }

   private:
    bool propagate(std::vector<std::optional<Permutation>>& img) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rel : p_.relations) {
                const auto& ls = rel.relator.letters();
                std::optional<std::size_t> unknown;
                std::size_t count = 0;
                bool several = false;
                for (const Letter& l : ls) {
                    if (img[l.gen]) continue;
                    if (!unknown) {
                        unknown = l.gen;
                        count = 1;
                    } else if (*unknown == l.gen) {
                        ++count;
                    } else {
                        several = true;
                    }
                }
                if (several) continue;
                if (!unknown) {
                    Permutation r = Permutation::identity(degree_);
                    for (const Letter& l : ls) r = r * (l.exp > 0 ? *img[l.gen] : img[l.gen]->inverse());
                    if (!r.is_identity()) return false;
                    continue;
                }
                if (count != 1) continue;
                // relator = A x^e B, so x^e = A^-1 B^-1.
                Permutation before = Permutation::identity(degree_);
                Permutation after = Permutation::identity(degree_);
                int e = 0;
                bool seen = false;
                for (const Letter& l : ls) {
                    if (l.gen == *unknown) {
                        seen = true;
                        e = l.exp;
                        continue;
                    }
                    const Permutation g = l.exp > 0 ? *img[l.gen] : img[l.gen]->inverse();
                    if (seen)
                        after = after * g;
                    else
                        before = before * g;
                }
                Permutation x = before.inverse() * after.inverse();
                img[*unknown] = e > 0 ? x : x.inverse();
                changed = true;
            }
        }
        return true;
    }

    std::size_t choose(const std::vector<std::optional<Permutation>>& img) const {
        std::size_t best = img.size();
        std::size_t best_score = 0;
        for (std::size_t g = 0; g < img.size(); ++g) {
            if (img[g]) continue;
            std::size_t score = 0;
            for (const auto& rel : p_.relations) {
                bool has = false;
                std::size_t known = 0;
                for (const Letter& l : rel.relator.letters()) {
                    if (l.gen == g) has = true;
                    if (img[l.gen]) ++known;
                }
                if (has) score += known + 1;
            }
            if (best == img.size() || score > best_score) {
                best = g;
                best_score = score;
            }
        }
        return best;
    }

    void search(std::vector<std::optional<Permutation>> img) {
        if (stopped_) return;
        if (++visits_ % 1024 == 0 && deadline_.expired()) {
            stopped_ = true;
            return;
        }
        if (!propagate(img)) return;
        const std::size_t g = choose(img);
        if (g == img.size()) {
            Representation r{degree_, {}};
            for (auto& x : img) r.images.push_back(*x);
            out_.reps.push_back(std::move(r));
            return;
        }
        for (const Permutation& m : *class_) {
            img[g] = m;
            search(img);
            if (stopped_) return;
        }
    }

    const WirtingerPresentation& p_;
    const Deadline& deadline_;
    RepresentationSet& out_;
    std::size_t degree_ = 0;
    const std::vector<Permutation>* class_ = nullptr;
    std::size_t visits_ = 0;
    bool stopped_ = false;
};

}  // namespace detail

/// Every homomorphism from the knot group to S_n, 2 <= n <= max_degree, with
/// non-identity image of the first generator, up to conjugation fixing that
/// image to a canonical member of its class.
inline RepresentationSet enumerate_representations(const WirtingerPresentation& p, int max_degree,
                                                   const Deadline& deadline = Deadline{}) {
    if (max_degree <= 0 || max_degree > static_cast<int>(Permutation::max_degree))
        throw InvalidArgument("representation degree must be in 1..8");
    RepresentationSet out;
    out.max_degree = max_degree;
    if (p.generator_count == 0) return out;
    detail::RepresentationEnumerator e(p, deadline, out);
    for (int n = 2; n <= max_degree; ++n) {
        e.run(static_cast<std::size_t>(n));
        if (e.stopped()) {
            out.complete = false;
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Certificates

struct ConjugateFactor {
    GroupWord conjugator;
    std::size_t relator;  // index into the presentation's relations
    int exponent;         // +1 or -1

    GroupWord value(const WirtingerPresentation& p) const {
        const GroupWord& r = p.relations.at(relator).relator;
        return conjugator * (exponent > 0 ? r : r.inverse()) * conjugator.inverse();
    }
};

struct ProvedTrivial {
    std::vector<ConjugateFactor> factors;
};

struct ProvedNontrivial {
    Representation representation;
    Permutation image;
};

struct Inconclusive {
    std::string reason;
};

using Certificate = std::variant<ProvedTrivial, ProvedNontrivial, Inconclusive>;

inline const char* certificate_kind(const Certificate& c) {
    switch (c.index()) {
        case 0:
            return "proved-trivial";
        case 1:
            return "proved-nontrivial";
        default:
            return "inconclusive";
    }
}

/// Re-checks a witness from scratch. Inconclusive certificates verify as false.
inline bool verify_certificate(const Certificate& c, const GroupWord& w, const WirtingerPresentation& p) {
    if (const auto* t = std::get_if<ProvedTrivial>(&c)) {
        GroupWord product;
        for (const auto& f : t->factors) {
            if (f.relator >= p.relations.size() || (f.exponent != 1 && f.exponent != -1)) return false;
            product *= f.value(p);
        }
        return product == w;
    }
    if (const auto* n = std::get_if<ProvedNontrivial>(&c)) {
        const Representation& r = n->representation;
        if (!r.satisfies(p)) return false;
        const Permutation img = r(w);
        return !img.is_identity() && img == n->image;
    }
    return false;
}

namespace detail {

struct Rotation {
    std::vector<Letter> letters;  // h^-1 R h with R = relator^exponent
    GroupWord h_inverse;
    std::size_t relator;
    int exponent;
};

inline std::vector<Rotation> relator_rotations(const WirtingerPresentation& p) {
    std::vector<Rotation> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        for (int e : {1, -1}) {
            const GroupWord R = e > 0 ? p.relations[i].relator : p.relations[i].relator.inverse();
            const auto& ls = R.letters();
            for (std::size_t k = 0; k < ls.size(); ++k) {
                std::vector<Letter> rot(ls.begin() + static_cast<std::ptrdiff_t>(k), ls.end());
                rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k));
                GroupWord h(std::vector<Letter>(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(k)));
                out.push_back({std::move(rot), h.inverse(), i, e});
            }
        }
    }
    return out;
}

inline std::string word_key(const std::vector<Letter>& w) {
    std::string k;
    k.reserve(w.size() * sizeof(std::uint32_t));
    for (const Letter& l : w) {
        const std::uint32_t code = static_cast<std::uint32_t>(l.gen * 2 + (l.exp < 0 ? 1 : 0));
        char buf[sizeof code];
        std::memcpy(buf, &code, sizeof code);
        k.append(buf, sizeof code);
    }
    return k;
}

/// Best-first search (shortest word first) for w as a product of relator
/// conjugates. Each move rewrites a subword s of the current word, where
/// s t is a cyclic rotation of a relator or its inverse, into t^-1.
inline std::optional<ProvedTrivial> search_trivial(const GroupWord& w, const WirtingerPresentation& p,
                                                   const Budgets& b, const Deadline& deadline) {
    struct Node {
        GroupWord word;
        std::size_t parent;
        ConjugateFactor factor;
        bool left;
        int depth;
    };
    const auto rotations = relator_rotations(p);
    const std::size_t length_cap = w.size() + 8;
    std::vector<Node> nodes;
    nodes.push_back({w, 0, {}, true, 0});
    std::unordered_map<std::string, int> best_depth{{word_key(w.letters()), 0}};
    using Entry = std::tuple<std::size_t, int, std::size_t>;  // (length, depth, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    open.emplace(w.size(), 0, 0);
    int expanded = 0;

    auto witness = [&nodes](std::size_t id) {
        std::vector<ConjugateFactor> left;
        std::vector<ConjugateFactor> right;
        for (; id != 0; id = nodes[id].parent) (nodes[id].left ? left : right).push_back(nodes[id].factor);
        std::reverse(left.begin(), left.end());
        ProvedTrivial t;
        t.factors = std::move(left);
        t.factors.insert(t.factors.end(), right.begin(), right.end());
        return t;
    };

    while (!open.empty()) {
        const auto [len, depth, id] = open.top();
        open.pop();
        if (len == 0) return witness(id);
        if (depth >= b.search_depth) continue;
        if (nodes.size() > static_cast<std::size_t>(b.node_max)) return std::nullopt;
        if (++expanded % 256 == 0 && deadline.expired()) return std::nullopt;
        const std::vector<Letter> W = nodes[id].word.letters();
        const std::size_t n = W.size();
        for (std::size_t pos = 0; pos < n; ++pos) {
            for (const Rotation& rot : rotations) {
                const auto& r = rot.letters;
                for (std::size_t j = 1; j <= r.size() && pos + j <= n && W[pos + j - 1] == r[j - 1]; ++j) {
                    // W = P s S with s = r[0..j), t = r[j..).
                    const std::size_t h = rot.h_inverse.size();
                    const std::size_t left_floor = pos > h ? pos - h : 0;
                    const std::size_t right_floor = n - pos - j > j + h ? n - pos - j - j - h : 0;
                    if (std::min(left_floor, right_floor) > static_cast<std::size_t>(b.conjugator_max)) continue;
                    std::vector<Letter> next(W.begin(), W.begin() + static_cast<std::ptrdiff_t>(pos));
                    for (std::size_t k = r.size(); k-- > j;) next.push_back(r[k].inverse());
                    next.insert(next.end(), W.begin() + static_cast<std::ptrdiff_t>(pos + j), W.end());
                    GroupWord nw(next);
                    if (nw.size() > length_cap) continue;
                    const std::string key = word_key(nw.letters());
                    if (auto it = best_depth.find(key); it != best_depth.end() && it->second <= depth + 1) continue;

                    const GroupWord P(std::vector<Letter>(W.begin(), W.begin() + static_cast<std::ptrdiff_t>(pos)));
                    const GroupWord s(std::vector<Letter>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j)));
                    const GroupWord S(
                        std::vector<Letter>(W.begin() + static_cast<std::ptrdiff_t>(pos + j), W.end()));
                    GroupWord g_left = P * rot.h_inverse;
                    GroupWord g_right = S.inverse() * s.inverse() * rot.h_inverse;
                    const bool use_left = g_left.size() <= g_right.size();
                    GroupWord& g = use_left ? g_left : g_right;
                    if (g.size() > static_cast<std::size_t>(b.conjugator_max)) continue;

                    best_depth[key] = depth + 1;
                    nodes.push_back({std::move(nw), id, {std::move(g), rot.relator, rot.exponent}, use_left, depth + 1});
                    open.emplace(nodes.back().word.size(), depth + 1, nodes.size() - 1);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// NO-search over `reps`, then YES-search. The empty word is trivial at once.
inline Certificate decide_trivial(const GroupWord& w, const WirtingerPresentation& p, const Budgets& b,
                                  const RepresentationSet& reps, const Deadline& deadline = Deadline{}) {
    b.validate();
    if (w.empty()) return ProvedTrivial{};
    for (const Representation& r : reps.reps) {
        Permutation img = r(w);
        if (!img.is_identity()) return ProvedNontrivial{r, std::move(img)};
    }
    if (auto t = detail::search_trivial(w, p, b, deadline)) return *t;
    std::string reason = "no representation of degree <= " + std::to_string(reps.max_degree) +
                         " detects the word and no product of <= " + std::to_string(b.search_depth) +
                         " relator conjugates was found";
    if (!reps.complete) reason += "; representation enumeration hit the time limit";
    if (deadline.expired()) reason += "; time limit reached";
    return Inconclusive{std::move(reason)};
}

inline Certificate decide_trivial(const GroupWord& w, const WirtingerPresentation& p, const Budgets& b) {
    b.validate();
    const Deadline deadline(b.seconds);
    if (w.empty()) return ProvedTrivial{};
    return decide_trivial(w, p, b, enumerate_representations(p, b.rep_degree_max, deadline), deadline);
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { yes, no, inconclusive };

inline const char* homogeneity_verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes:
            return "homogeneous";
        case Verdict::no:
            return "not-homogeneous";
        default:
            return "inconclusive";
    }
}

inline const char* connected_verdict_name(Verdict v) {
    switch (v) {
        case Verdict::yes:
            return "connected";
        case Verdict::no:
            return "not-connected";
        default:
            return "inconclusive";
    }
}

struct VertexCertificate {
    HomogeneityWord word;
    Certificate certificate;
    bool verified = false;
};

struct HomogeneityReport {
    bool type_one_homogeneous = false;
    std::vector<VertexCertificate> vertices;
    Verdict verdict = Verdict::inconclusive;
    std::size_t representations = 0;
    bool enumeration_complete = true;
};

inline HomogeneityReport check_homogeneity(const DiagramAlgebra& A, const DegreeAssignment& a,
                                           const WirtingerPresentation& p, const Budgets& b,
                                           const RepresentationSet& reps, const Deadline& deadline = Deadline{}) {
    b.validate();
    HomogeneityReport r;
    r.type_one_homogeneous = type_one_homogeneous(A.quiver(), relations(A.quiver(), A.tau(), A.variant()));
    r.representations = reps.reps.size();
    r.enumeration_complete = reps.complete;
    bool all_trivial = true;
    bool some_nontrivial = false;
    for (HomogeneityWord& hw : homogeneity_words(A, a)) {
        Certificate c = decide_trivial(hw.word, p, b, reps, deadline);
        const bool ok = verify_certificate(c, hw.word, p);
        all_trivial = all_trivial && ok && std::holds_alternative<ProvedTrivial>(c);
        some_nontrivial = some_nontrivial || (ok && std::holds_alternative<ProvedNontrivial>(c));
        r.vertices.push_back({std::move(hw), std::move(c), ok});
    }
    if (some_nontrivial)
        r.verdict = Verdict::no;
    else if (all_trivial && r.type_one_homogeneous)
        r.verdict = Verdict::yes;
    return r;
}

struct ClosedWalk {
    ArrowId arrow;  // the non-tree arrow closing the walk
    std::vector<WalkStep> steps;
    GroupWord degree;
};

struct ConnectedReport {
    VertexId base = 0;
    std::vector<ClosedWalk> walks;
    Verdict verdict = Verdict::inconclusive;
    /// Generators shown to lie in the walk subgroup, in the order found.
    std::vector<std::size_t> reached;
    /// NO witness: a representation whose walk image is a proper subgroup.
    std::optional<Representation> witness;
    std::size_t image_order = 0;
    std::size_t walk_image_order = 0;
};

/// Fundamental closed walks at vertex 0 from a breadth-first spanning tree of
/// the underlying undirected graph.
inline std::vector<ClosedWalk> fundamental_walks(const SignedQuiver& q, const DegreeAssignment& a) {
    const std::size_t c = q.vertex_count();
    std::vector<std::optional<std::vector<WalkStep>>> path(c);  // tree walk 0 -> v
    std::vector<bool> tree_arrow(q.arrow_count(), false);
    path[0] = std::vector<WalkStep>{};
    std::vector<VertexId> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        for (const SignedArrow& arr : q.arrows()) {
            if (arr.source == v && !path[arr.target]) {
                auto w = *path[v];
                w.push_back({arr.id, true});
                path[arr.target] = std::move(w);
                tree_arrow[arr.id] = true;
                queue.push_back(arr.target);
            } else if (arr.target == v && !path[arr.source]) {
                auto w = *path[v];
                w.push_back({arr.id, false});
                path[arr.source] = std::move(w);
                tree_arrow[arr.id] = true;
                queue.push_back(arr.source);
            }
        }
    }
    std::vector<ClosedWalk> out;
    for (const SignedArrow& arr : q.arrows()) {
        if (tree_arrow[arr.id]) continue;
        std::vector<WalkStep> steps = *path[arr.source];
        steps.push_back({arr.id, true});
        for (const WalkStep& s : reverse_walk(*path[arr.target])) steps.push_back(s);
        GroupWord deg = walk_degree(a, steps);
        out.push_back({arr.id, std::move(steps), std::move(deg)});
    }
    return out;
}

/// YES when every generator is reached: first by free-group membership in the
/// subgroup spanned by the walk degrees, then by solving a relator for its
/// only unreached generator, repeated to a fixed point. NO when some finite
/// representation maps the walk degrees onto a proper subgroup of the image.
inline ConnectedReport check_connected(const SignedQuiver& q, const DegreeAssignment& a,
                                       const WirtingerPresentation& p, const RepresentationSet& reps) {
    ConnectedReport r;
    r.walks = fundamental_walks(q, a);
    std::vector<GroupWord> H;
    for (const auto& w : r.walks)
        if (!w.degree.empty()) H.push_back(w.degree);

    std::vector<bool> in(p.generator_count, false);
    bool changed = true;
    while (changed) {
        changed = false;
        const StallingsGraph graph(H);
        for (std::size_t g = 0; g < p.generator_count; ++g) {
            if (!in[g] && graph.contains(GroupWord::generator(g))) {
                in[g] = true;
                r.reached.push_back(g);
                changed = true;
            }
        }
        for (const auto& rel : p.relations) {
            std::optional<std::size_t> missing;
            std::size_t occurrences = 0;
            bool several = false;
            for (const Letter& l : rel.relator.letters()) {
                if (in[l.gen]) continue;
                if (missing && *missing != l.gen) several = true;
                missing = l.gen;
                ++occurrences;
            }
            if (missing && !several && occurrences == 1) {
                in[*missing] = true;
                r.reached.push_back(*missing);
                H.push_back(GroupWord::generator(*missing));
                changed = true;
            }
        }
    }
    if (std::all_of(in.begin(), in.end(), [](bool x) { return x; })) {
        r.verdict = Verdict::yes;
        return r;
    }
    for (const Representation& rep : reps.reps) {
        std::vector<Permutation> walk_images;
        for (const auto& w : r.walks) walk_images.push_back(rep(w.degree));
        const std::size_t whole = subgroup_order(rep.images, rep.degree);
        const std::size_t part = subgroup_order(walk_images, rep.degree);
        if (part < whole) {
            r.verdict = Verdict::no;
            r.witness = rep;
            r.image_order = whole;
            r.walk_image_order = part;
            return r;
        }
    }
    return r;
}

/// Everything the grading command reports for one algebra.
struct GradingReport {
    WirtingerPresentation presentation;
    DegreeAssignment degrees;
    Budgets budgets;
    HomogeneityReport homogeneity;
    ConnectedReport connected;
    /// Degrees of basis paths, filled when the ideal is homogeneous.
    std::optional<std::vector<GroupWord>> basis_degrees;
};

inline std::vector<GroupWord> basis_degrees(const DiagramAlgebra& A, const DegreeAssignment& a) {
    const SignedQuiver& q = A.quiver();
    std::vector<GroupWord> out;
    for (std::size_t i = 0; i < A.dimension(); ++i) {
        const BasisPath& b = A.basis(i);
        switch (b.kind) {
            case BasisPath::Kind::trivial:
                out.emplace_back();
                break;
            case BasisPath::Kind::cycle_plus:
                out.push_back(path_degree(a, q, q.fundamental_cycle(b.id, EndSign::plus)));
                break;
            case BasisPath::Kind::follow:
                out.push_back(path_degree(a, q, FollowPath{b.id, b.length}));
                break;
        }
    }
    return out;
}

inline GradingReport grade(const Diagram& d, const DiagramAlgebra& A, const Budgets& b) {
    b.validate();
    const Deadline deadline(b.seconds);
    GradingReport g;
    g.presentation = wirtinger(d);
    g.degrees = arrow_degrees(A.quiver(), d);
    g.budgets = b;
    const RepresentationSet reps = enumerate_representations(g.presentation, b.rep_degree_max, deadline);
    g.homogeneity = check_homogeneity(A, g.degrees, g.presentation, b, reps, deadline);
    g.connected = check_connected(A.quiver(), g.degrees, g.presentation, reps);
    if (g.homogeneity.verdict == Verdict::yes) g.basis_degrees = basis_degrees(A, g.degrees);
    return g;
}

}  // namespace knotalg

#endif
