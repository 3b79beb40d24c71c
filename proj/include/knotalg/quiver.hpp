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
   The signed quiver of a diagram: one vertex per crossing, one arrow per
   segment. An arrow end is signed + when the segment leaves (or reaches) the
   crossing on the over-strand and - on the under-strand.

   Composition is right-to-left throughout the library: for arrows a, b with
   t(a) = s(b) the path "b a" runs a first. Arrow sequences handed to the
   algebra are written in that order, last arrow first.
*/

#ifndef KNOTALG_QUIVER_HPP
#define KNOTALG_QUIVER_HPP

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"

namespace knotalg {

using VertexId = std::size_t;
using ArrowId = std::size_t;

enum class EndSign { plus, minus };

inline EndSign end_sign(Strand s) { return s == Strand::over ? EndSign::plus : EndSign::minus; }
inline char end_sign_char(EndSign s) { return s == EndSign::plus ? '+' : '-'; }
inline std::size_t sign_index(EndSign s) { return s == EndSign::plus ? 0 : 1; }

struct SignedArrow {
    ArrowId id;
    VertexId source;
    EndSign source_sign;
    VertexId target;
    EndSign target_sign;
    ArcId arc;
};

/// A path obtained by following the diagram: `length` arrows starting with
/// `first`, each the follow-successor of the previous one.
struct FollowPath {
    ArrowId first;
    std::size_t length;

    friend bool operator==(const FollowPath&, const FollowPath&) = default;
};

class SignedQuiver {
   public:
    explicit SignedQuiver(const Diagram& d) : vertex_count_(d.crossing_count()) {
        const std::size_t n = d.segment_count();
        arrows_.reserve(n);
        for (const Segment& s : d.segments())
            arrows_.push_back({s.id, s.from, end_sign(s.departure), s.to, end_sign(s.arrival), s.arc});
        init();
    }

    /// Direct construction, used for synthetic quivers in tests. Throws if the
    /// degree or single-cycle invariants fail.
    SignedQuiver(std::size_t vertex_count, std::vector<SignedArrow> arrows)
        : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
        init();
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<SignedArrow>& arrows() const noexcept { return arrows_; }
    const SignedArrow& arrow(ArrowId a) const {
        if (a >= arrows_.size()) throw InvalidArgument("unknown arrow id " + std::to_string(a));
        return arrows_[a];
    }

    ArrowId outgoing(VertexId v, EndSign s) const { return out_.at(v)[sign_index(s)]; }
    ArrowId incoming(VertexId v, EndSign s) const { return in_.at(v)[sign_index(s)]; }

    /// The unique arrow continuing `a` along the diagram.
    ArrowId successor(ArrowId a) const { return successor_.at(a); }

    /// Arrow reached after k successor steps from a.
    ArrowId advance(ArrowId a, std::size_t k) const {
        const std::size_t n = arrows_.size();
        return cycle_[(position_.at(a) + k) % n];
    }

    ArrowId last_arrow(const FollowPath& p) const { return advance(p.first, p.length - 1); }
    VertexId source(const FollowPath& p) const { return arrow(p.first).source; }
    VertexId target(const FollowPath& p) const { return arrow(last_arrow(p)).target; }

    /// Arrows of a follow path, first arrow first.
    std::vector<ArrowId> arrows_of(const FollowPath& p) const {
        std::vector<ArrowId> out;
        out.reserve(p.length);
        for (std::size_t k = 0; k < p.length; ++k) out.push_back(advance(p.first, k));
        return out;
    }

    /// From the +-source arrow at e up to the arrow reaching e with - target.
    FollowPath alpha(VertexId e) const { return closing_path(e, EndSign::plus, EndSign::minus); }

    /// From the --source arrow at e up to the arrow reaching e with + target.
    FollowPath beta(VertexId e) const { return closing_path(e, EndSign::minus, EndSign::plus); }

    /// gamma^+ = beta alpha starts on the over-strand; gamma^- = alpha beta.
    FollowPath fundamental_cycle(VertexId e, EndSign s) const {
        check_vertex(e);
        return {outgoing(e, s), arrows_.size()};
    }

    /// DOT export; arrow labels carry "<source sign><target sign>".
    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph Q {\n";
        for (VertexId v = 0; v < vertex_count_; ++v) os << "  v" << v + 1 << " [label=\"" << v + 1 << "\"];\n";
        for (const SignedArrow& a : arrows_) {
            os << "  v" << a.source + 1 << " -> v" << a.target + 1 << " [label=\"" << a.id + 1 << ": "
               << end_sign_char(a.source_sign) << end_sign_char(a.target_sign) << "\"];\n";
        }
        os << "}\n";
        return os.str();
    }

   private:
    void check_vertex(VertexId v) const {
        if (v >= vertex_count_) throw InvalidArgument("unknown vertex id " + std::to_string(v));
    }

    FollowPath closing_path(VertexId e, EndSign start, EndSign end) const {
        check_vertex(e);
        const ArrowId first = outgoing(e, start);
        ArrowId a = first;
        std::size_t length = 1;
        while (!(arrows_[a].target == e && arrows_[a].target_sign == end)) {
            a = successor_[a];
            ++length;
        }
        return {first, length};
    }

    void init() {
        const std::size_t n = arrows_.size();
        if (vertex_count_ == 0) throw InvalidArgument("quiver without vertices");
        constexpr ArrowId none = static_cast<ArrowId>(-1);
        out_.assign(vertex_count_, {none, none});
        in_.assign(vertex_count_, {none, none});
        for (ArrowId a = 0; a < n; ++a) {
            const SignedArrow& arr = arrows_[a];
            if (arr.id != a) throw InvalidArgument("arrow ids must be 0..n-1 in order");
            if (arr.source >= vertex_count_ || arr.target >= vertex_count_)
                throw InvalidArgument("arrow endpoint out of range");
            auto& o = out_[arr.source][sign_index(arr.source_sign)];
            auto& i = in_[arr.target][sign_index(arr.target_sign)];
            if (o != none || i != none)
                throw InvalidArgument("vertex with two arrow ends of the same sign and direction");
            o = a;
            i = a;
        }
        for (VertexId v = 0; v < vertex_count_; ++v)
            for (std::size_t k = 0; k < 2; ++k)
                if (out_[v][k] == none || in_[v][k] == none)
                    throw InvalidArgument("vertex " + std::to_string(v) + " lacks a signed arrow end");
        successor_.resize(n);
        for (ArrowId a = 0; a < n; ++a) successor_[a] = outgoing(arrows_[a].target, arrows_[a].target_sign);
        cycle_.clear();
        position_.assign(n, none);
        ArrowId a = 0;
        do {
            position_[a] = cycle_.size();
            cycle_.push_back(a);
            a = successor_[a];
        } while (a != 0 && cycle_.size() <= n);
        if (cycle_.size() != n) throw InvalidArgument("follow-successor map is not a single cycle");
    }

    std::size_t vertex_count_;
    std::vector<SignedArrow> arrows_;
    std::vector<std::array<ArrowId, 2>> out_;
    std::vector<std::array<ArrowId, 2>> in_;
    std::vector<ArrowId> successor_;
    std::vector<ArrowId> cycle_;
    std::vector<std::size_t> position_;
};

inline SignedQuiver build_quiver(const Diagram& d) { return SignedQuiver(d); }

}  // namespace knotalg

#endif
