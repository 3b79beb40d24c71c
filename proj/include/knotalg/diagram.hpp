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
   Oriented knot diagrams.

   A diagram with c crossings has 2c segments (pieces of the curve between
   consecutive crossings) and c arcs (pieces between consecutive under-passes).
   Segments are indexed 0..2c-1 in traversal order: segment k+1 continues
   segment k (indices mod 2c). Their 1-based labels are what the PD input used.

   PD convention: X(a,b,c,d) lists the four segment labels counterclockwise,
   starting from the incoming under-strand, so a is under-in and c under-out.
   Orientation follows increasing labels (mod 2c). The crossing is positive
   (the under-strand passes from right to left seen along the over-strand)
   exactly when d is the incoming over-strand.
*/

#ifndef KNOTALG_DIAGRAM_HPP
#define KNOTALG_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace knotalg {

using CrossingId = std::size_t;
using SegmentId = std::size_t;
using ArcId = std::size_t;

enum class Sign { positive, negative };
enum class Strand { over, under };

inline char sign_char(Sign s) { return s == Sign::positive ? '+' : '-'; }
inline Sign flip(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }

struct Crossing {
    CrossingId id;
    int label;  // as written in the input
    Sign sign;
    SegmentId over_in;
    SegmentId over_out;
    SegmentId under_in;
    SegmentId under_out;
    /// Counterclockwise slot order starting at under_in, when known (PD input).
    std::optional<std::array<SegmentId, 4>> ccw;
};

struct Segment {
    SegmentId id;
    int label;
    CrossingId from;
    Strand departure;
    CrossingId to;
    Strand arrival;
    ArcId arc;
};

struct Arc {
    ArcId id;
    std::vector<SegmentId> segments;  // in traversal order
};

enum class InputFormat { pd, gauss };

class Diagram {
   public:
    /// Validates and completes a diagram given crossings whose slot fields
    /// reference segment indices 0..2c-1 in traversal order. Throws ParseError
    /// on any inconsistency.
    Diagram(std::vector<Crossing> crossings, InputFormat format, std::string source)
        : crossings_(std::move(crossings)), format_(format), source_(std::move(source)) {
        build();
    }

    std::size_t crossing_count() const noexcept { return crossings_.size(); }
    std::size_t segment_count() const noexcept { return segments_.size(); }
    const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
    const std::vector<Segment>& segments() const noexcept { return segments_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Crossing& crossing(CrossingId x) const {
        if (x >= crossings_.size()) throw InvalidArgument("unknown crossing id " + std::to_string(x));
        return crossings_[x];
    }
    const Segment& segment(SegmentId s) const {
        if (s >= segments_.size()) throw InvalidArgument("unknown segment id " + std::to_string(s));
        return segments_[s];
    }
    SegmentId next_segment(SegmentId s) const { return (s + 1) % segments_.size(); }

    InputFormat format() const noexcept { return format_; }
    const std::string& source() const noexcept { return source_; }
    /// Non-fatal findings, e.g. a Gauss code that cannot be drawn in the plane.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    /// True when the input was checked to describe a planar diagram.
    bool planarity_verified() const noexcept { return planar_; }

    /// Gauss code of the diagram, token k describing the departure of segment k.
    std::string gauss_code() const {
        std::string out;
        for (const Segment& s : segments_) {
            const Crossing& x = crossings_[s.from];
            out += s.departure == Strand::over ? 'O' : 'U';
            out += std::to_string(x.label);
            out += sign_char(x.sign);
        }
        return out;
    }

   private:
    void build() {
        const std::size_t c = crossings_.size();
        if (c == 0) throw ParseError("empty diagram");
        const std::size_t n = 2 * c;
        std::vector<int> departures(n, 0), arrivals(n, 0);
        segments_.assign(n, Segment{});
        for (std::size_t s = 0; s < n; ++s) {
            segments_[s].id = s;
            segments_[s].label = static_cast<int>(s) + 1;
        }
        for (CrossingId x = 0; x < c; ++x) {
            Crossing& cr = crossings_[x];
            cr.id = x;
            for (SegmentId s : {cr.over_in, cr.over_out, cr.under_in, cr.under_out})
                if (s >= n) throw ParseError("segment index out of range");
            auto depart = [&](SegmentId s, Strand role) {
                ++departures[s];
                segments_[s].from = x;
                segments_[s].departure = role;
            };
            auto arrive = [&](SegmentId s, Strand role) {
                ++arrivals[s];
                segments_[s].to = x;
                segments_[s].arrival = role;
            };
            depart(cr.over_out, Strand::over);
            depart(cr.under_out, Strand::under);
            arrive(cr.over_in, Strand::over);
            arrive(cr.under_in, Strand::under);
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (departures[s] != 1 || arrivals[s] != 1)
                throw ParseError("segment " + std::to_string(s + 1) + " must start and end exactly once");
        }
        // Traversal: the strand arriving at a crossing leaves on the same strand.
        std::vector<SegmentId> next(n);
        for (std::size_t s = 0; s < n; ++s) {
            const Crossing& x = crossings_[segments_[s].to];
            next[s] = segments_[s].arrival == Strand::over ? x.over_out : x.under_out;
        }
        std::size_t length = 0;
        SegmentId s = 0;
        do {
            s = next[s];
            ++length;
        } while (s != 0 && length <= n);
        if (length != n) throw ParseError("diagram has more than one component (links are not supported)");
        for (std::size_t k = 0; k < n; ++k) {
            if (next[k] != (k + 1) % n)
                throw ParseError("segment labels do not follow the orientation at crossing " +
                                 std::to_string(crossings_[segments_[k].to].label));
        }
        compute_arcs();
        check_planarity();
    }

    void compute_arcs() {
        const std::size_t n = segments_.size();
        arcs_.clear();
        for (SegmentId start = 0; start < n; ++start) {
            if (segments_[start].departure != Strand::under) continue;
            Arc arc{arcs_.size(), {}};
            SegmentId s = start;
            while (true) {
                arc.segments.push_back(s);
                segments_[s].arc = arc.id;
                if (segments_[s].arrival == Strand::under) break;
                s = (s + 1) % n;
            }
            arcs_.push_back(std::move(arc));
        }
    }

    void check_planarity() {
        warnings_.clear();
        planar_ = false;
        if (format_ == InputFormat::pd) {
            // Faces of the 4-valent map given by the counterclockwise slot orders;
            // a connected map on the sphere has V - E + F = 2, i.e. F = c + 2.
            const std::size_t c = crossings_.size();
            std::vector<std::array<std::size_t, 2>> ends(segments_.size(), {SIZE_MAX, SIZE_MAX});
            for (const Crossing& x : crossings_) {
                if (!x.ccw) return;
                for (std::size_t k = 0; k < 4; ++k) {
                    auto& e = ends[(*x.ccw)[k]];
                    (e[0] == SIZE_MAX ? e[0] : e[1]) = 4 * x.id + k;
                }
            }
            std::vector<bool> used(4 * c, false);
            std::size_t faces = 0;
            for (std::size_t d = 0; d < 4 * c; ++d) {
                if (used[d]) continue;
                ++faces;
                std::size_t cur = d;
                while (!used[cur]) {
                    used[cur] = true;
                    const auto& e = ends[(*crossings_[cur / 4].ccw)[cur % 4]];
                    const std::size_t other = e[0] == cur ? e[1] : e[0];
                    cur = 4 * (other / 4) + (other % 4 + 1) % 4;
                }
            }
            planar_ = faces == c + 2;
            if (!planar_)
                warnings_.push_back("PD code is not planar: " + std::to_string(faces) + " faces, expected " +
                                    std::to_string(c + 2));
        } else {
            // Gauss's parity condition: between the two visits of a crossing the
            // traversal meets an even number of crossing visits. Necessary only.
            const std::size_t n = segments_.size();
            std::vector<std::vector<std::size_t>> visits(crossings_.size());
            for (std::size_t k = 0; k < n; ++k) visits[segments_[k].from].push_back(k);
            bool parity = true;
            for (const auto& v : visits)
                if ((v[1] - v[0] - 1) % 2 != 0) parity = false;
            if (!parity)
                warnings_.push_back("Gauss code violates the parity condition; the diagram is virtual");
            else
                warnings_.push_back("planarity of Gauss code input is not verified");
        }
    }

    std::vector<Crossing> crossings_;
    std::vector<Segment> segments_;
    std::vector<Arc> arcs_;
    InputFormat format_;
    std::string source_;
    std::vector<std::string> warnings_;
    bool planar_ = false;
};

namespace detail {

inline std::string strip_spaces(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    return s;
}

inline std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

}  // namespace detail

/// Parses "X(a,b,c,d);X(...);..." (whitespace-insensitive).
inline Diagram parse_pd(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty diagram");
    static const std::regex entry(R"(X\((\d+),(\d+),(\d+),(\d+)\))");
    std::vector<std::array<int, 4>> tuples;
    std::size_t pos = 0;
    while (pos < s.size()) {
        const std::size_t end = s.find(';', pos);
        const std::string piece = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? s.size() : end + 1;
        if (piece.empty()) {
            if (pos >= s.size()) break;  // trailing ';'
            throw ParseError("empty PD entry");
        }
        std::smatch m;
        if (!std::regex_match(piece, m, entry)) throw ParseError("malformed PD entry '" + piece + "'");
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            if (m[k + 1].length() > 6) throw ParseError("label out of range in '" + piece + "'");
            t[k] = std::stoi(m[k + 1].str());
        }
        tuples.push_back(t);
    }
    if (tuples.empty()) throw ParseError("empty diagram");
    const int n = static_cast<int>(2 * tuples.size());

    std::map<int, int> counts;
    for (const auto& t : tuples)
        for (int v : t) ++counts[v];
    std::vector<int> bad;
    for (int label = 1; label <= n; ++label)
        if (counts[label] != 2) bad.push_back(label);
    for (const auto& [label, count] : counts)
        if ((label < 1 || label > n) && count > 0) bad.push_back(label);
    if (!bad.empty()) {
        std::sort(bad.begin(), bad.end());
        bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
        throw ParseError("labels " + detail::join_ints(bad) + " must appear exactly twice in 1.." +
                         std::to_string(n));
    }

    // Strands join a to c and b to d; more than one class of labels means a link.
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) parent[k] = k;
    auto find = [&parent](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int classes = n;
    for (const auto& t : tuples) {
        for (auto [u, v] : {std::pair{t[0], t[2]}, std::pair{t[1], t[3]}}) {
            const int ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[ru] = rv;
                --classes;
            }
        }
    }
    if (classes != 1) throw ParseError("diagram has more than one component (links are not supported)");

    auto succ = [n](int label) { return label % n + 1; };
    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        const auto [a, b, c, d] = tuples[i];
        if (c != succ(a))
            throw ParseError("X(" + detail::join_ints({a, b, c, d}) + "): under-strand labels are not consecutive");
        int over_in = 0, over_out = 0;
        if (n == 2) {
            // Single crossing: the segment leaving underneath returns on top.
            if (std::set<int>{b, d} != std::set<int>{1, 2})
                throw ParseError("X(" + detail::join_ints({a, b, c, d}) + "): bad over-strand labels");
            over_in = c;
            over_out = a;
        } else if (d == succ(b)) {
            over_in = b;
            over_out = d;
        } else if (b == succ(d)) {
            over_in = d;
            over_out = b;
        } else {
            throw ParseError("X(" + detail::join_ints({a, b, c, d}) + "): over-strand labels are not consecutive");
        }
        if (!((over_in == b && over_out == d) || (over_in == d && over_out == b)))
            throw ParseError("X(" + detail::join_ints({a, b, c, d}) + "): inconsistent over-strand");
        Crossing x{};
        x.label = static_cast<int>(i) + 1;
        x.sign = over_in == d ? Sign::positive : Sign::negative;
        x.over_in = static_cast<SegmentId>(over_in - 1);
        x.over_out = static_cast<SegmentId>(over_out - 1);
        x.under_in = static_cast<SegmentId>(a - 1);
        x.under_out = static_cast<SegmentId>(c - 1);
        x.ccw = std::array<SegmentId, 4>{static_cast<SegmentId>(a - 1), static_cast<SegmentId>(b - 1),
                                         static_cast<SegmentId>(c - 1), static_cast<SegmentId>(d - 1)};
        crossings.push_back(x);
    }
    return Diagram(std::move(crossings), InputFormat::pd, std::string(text));
}

/// Parses a signed Gauss code such as "O1+U2+O3+U1+O2+U3+".
/// Realizability in the plane is not decided; see Diagram::warnings().
inline Diagram parse_gauss(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty diagram");
    static const std::regex token(R"(([OU])(\d+)([+-]))");
    struct Token {
        Strand role;
        int label;
        Sign sign;
    };
    std::vector<Token> tokens;
    for (std::size_t pos = 0; pos < s.size();) {
        std::smatch m;
        if (!std::regex_search(s.cbegin() + static_cast<std::ptrdiff_t>(pos), s.cend(), m, token,
                               std::regex_constants::match_continuous))
            throw ParseError("malformed Gauss code near position " + std::to_string(pos));
        if (m[2].length() > 6) throw ParseError("crossing label " + m[2].str() + " is too large");
        tokens.push_back({m[1] == "O" ? Strand::over : Strand::under, std::stoi(m[2].str()),
                          m[3] == "+" ? Sign::positive : Sign::negative});
        pos += static_cast<std::size_t>(m.length(0));
    }

    std::map<int, std::pair<int, int>> seen;  // label -> (#over, #under)
    std::map<int, Sign> signs;
    for (const auto& t : tokens) {
        auto& [o, u] = seen[t.label];
        (t.role == Strand::over ? o : u) += 1;
        auto [it, fresh] = signs.emplace(t.label, t.sign);
        if (!fresh && it->second != t.sign)
            throw ParseError("crossing " + std::to_string(t.label) + " has inconsistent signs");
    }
    std::vector<int> bad;
    for (const auto& [label, ou] : seen)
        if (ou.first != 1 || ou.second != 1) bad.push_back(label);
    if (!bad.empty())
        throw ParseError("crossings " + detail::join_ints(bad) + " must appear exactly once over and once under");

    std::map<int, CrossingId> index;
    for (const auto& [label, ou] : seen) index.emplace(label, index.size());
    std::vector<Crossing> crossings(index.size());
    for (const auto& [label, id] : index) {
        crossings[id].label = label;
        crossings[id].sign = signs[label];
    }
    const std::size_t n = tokens.size();
    for (std::size_t k = 0; k < n; ++k) {
        // Token k: segment k departs here and segment k-1 arrives here.
        Crossing& x = crossings[index[tokens[k].label]];
        const SegmentId in = (k + n - 1) % n;
        if (tokens[k].role == Strand::over) {
            x.over_in = in;
            x.over_out = k;
        } else {
            x.under_in = in;
            x.under_out = k;
        }
    }
    return Diagram(std::move(crossings), InputFormat::gauss, std::string(text));
}

/// Signed crossing type per the right-to-left convention.
inline Sign crossing_sign(const Diagram& d, CrossingId x) { return d.crossing(x).sign; }

inline const std::vector<Arc>& compute_arcs(const Diagram& d) { return d.arcs(); }

/// Reflection in the projection plane: same curve and over/under data,
/// opposite crossing signs.
inline Diagram mirror(const Diagram& d) {
    std::vector<Crossing> crossings = d.crossings();
    for (Crossing& x : crossings) {
        x.sign = flip(x.sign);
        if (x.ccw) std::swap((*x.ccw)[1], (*x.ccw)[3]);
    }
    return Diagram(std::move(crossings), d.format(), "mirror(" + d.source() + ")");
}

struct BuiltinEntry {
    std::string_view name;
    std::string_view pd;
};

/// Table of stored diagrams. Knot Atlas PD codes for the prime knots; the
/// unknot entries are a one-crossing kink and a diagram with two kinks.
inline const std::vector<BuiltinEntry>& builtin_table() {
    static const std::vector<BuiltinEntry> table = {
        {"unknot_1", "X(1,2,2,1)"},
        {"unknot_2", "X(1,4,2,1);X(3,2,4,3)"},
        {"3_1", "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)"},
        {"4_1", "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)"},
        {"5_1", "X(1,6,2,7);X(3,8,4,9);X(5,10,6,1);X(7,2,8,3);X(9,4,10,5)"},
        {"5_2", "X(1,4,2,5);X(3,8,4,9);X(5,10,6,1);X(9,6,10,7);X(7,2,8,3)"},
        {"6_1", "X(1,4,2,5);X(7,10,8,11);X(3,9,4,8);X(9,3,10,2);X(5,12,6,1);X(11,6,12,7)"},
        {"6_2", "X(1,4,2,5);X(5,10,6,11);X(3,9,4,8);X(9,3,10,2);X(7,12,8,1);X(11,6,12,7)"},
        {"6_3", "X(4,2,5,1);X(8,4,9,3);X(12,9,1,10);X(10,5,11,6);X(6,11,7,12);X(2,8,3,7)"},
    };
    return table;
}

inline Diagram builtin(std::string_view name) {
    for (const auto& entry : builtin_table())
        if (entry.name == name) return parse_pd(entry.pd);
    throw InvalidArgument("unknown builtin diagram '" + std::string(name) + "'");
}

}  // namespace knotalg

#endif
