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

#ifndef KNOTALG_GROUP_HPP
#define KNOTALG_GROUP_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace knotalg {

/// x_gen^exp with exp = +1 or -1.
struct Letter {
    std::size_t gen;
    int exp;

    Letter inverse() const noexcept { return {gen, -exp}; }
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators x_0, x_1, ...
class GroupWord {
   public:
    GroupWord() = default;

    explicit GroupWord(const std::vector<Letter>& letters) {
        for (const Letter& l : letters) push(l);
    }

    static GroupWord generator(std::size_t g, int exp = 1) {
        if (exp == 0) return {};
        GroupWord w;
        for (int k = 0; k < std::abs(exp); ++k) w.push({g, exp > 0 ? 1 : -1});
        return w;
    }

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    GroupWord inverse() const {
        GroupWord w;
        w.letters_.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
        return w;
    }

    GroupWord& operator*=(const GroupWord& o) {
        for (const Letter& l : o.letters_) push(l);
        return *this;
    }
    friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }

    int exponent_sum(std::size_t g) const {
        int s = 0;
        for (const Letter& l : letters_)
            if (l.gen == g) s += l.exp;
        return s;
    }

    int total_exponent() const {
        int s = 0;
        for (const Letter& l : letters_) s += l.exp;
        return s;
    }

    /// "x1 x3^-1 x2", 1-based generator names; the empty word is "1".
    std::string to_string() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (const Letter& l : letters_) {
            if (!out.empty()) out += ' ';
            out += 'x' + std::to_string(l.gen + 1);
            if (l.exp < 0) out += "^-1";
        }
        return out;
    }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& a, const GroupWord& b) { return a.letters_ <=> b.letters_; }

   private:
    void push(const Letter& l) {
        if (l.exp != 1 && l.exp != -1) throw InvalidArgument("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    std::vector<Letter> letters_;
};

/// [a, b] = a b a^-1 b^-1.
inline GroupWord commutator(const GroupWord& a, const GroupWord& b) { return a * b * a.inverse() * b.inverse(); }

/// Permutation of {0, ..., n-1}; (p * q)(i) = p(q(i)).
class Permutation {
   public:
    static constexpr std::size_t max_degree = 8;

    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
        if (img_.size() > max_degree) throw InvalidArgument("permutation degree above 8");
        std::vector<bool> seen(img_.size(), false);
        for (auto x : img_) {
            if (x >= img_.size() || seen[x]) throw InvalidArgument("not a permutation");
            seen[x] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint8_t> v(n);
        std::iota(v.begin(), v.end(), std::uint8_t{0});
        return Permutation(std::move(v));
    }

    std::size_t degree() const noexcept { return img_.size(); }
    std::size_t operator()(std::size_t i) const { return img_.at(i); }
    const std::vector<std::uint8_t>& images() const noexcept { return img_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<std::uint8_t> v(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) v[img_[i]] = static_cast<std::uint8_t>(i);
        return Permutation(Trusted{}, std::move(v));
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.degree() != q.degree()) throw InvalidArgument("permutation degree mismatch");
        std::vector<std::uint8_t> v(q.img_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.img_[q.img_[i]];
        return Permutation(Trusted{}, std::move(v));
    }

    /// Sorted cycle lengths, fixed points included.
    std::vector<std::size_t> cycle_type() const {
        std::vector<std::size_t> t;
        std::vector<bool> seen(img_.size(), false);
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = img_[j]) {
                seen[j] = true;
                ++len;
            }
            t.push_back(len);
        }
        std::sort(t.begin(), t.end());
        return t;
    }

    std::uint64_t key() const noexcept {
        std::uint64_t k = 0;
        for (auto x : img_) k = (k << 4) | x;
        return k;
    }

    /// One-line notation on 1..n, e.g. "[2,3,1]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < img_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(img_[i] + 1);
        }
        return s + "]";
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

   private:
    struct Trusted {};
    Permutation(Trusted, std::vector<std::uint8_t> images) : img_(std::move(images)) {}

    std::vector<std::uint8_t> img_;
};

/// Evaluates a word under generator images.
inline Permutation evaluate(const GroupWord& w, const std::vector<Permutation>& images, std::size_t degree) {
    Permutation p = Permutation::identity(degree);
    for (const Letter& l : w.letters()) {
        const Permutation& g = images.at(l.gen);
        p = p * (l.exp > 0 ? g : g.inverse());
    }
    return p;
}

/// Order of the subgroup generated by `gens` (all of one degree).
inline std::size_t subgroup_order(const std::vector<Permutation>& gens, std::size_t degree) {
    const Permutation id = Permutation::identity(degree);
    std::unordered_set<std::uint64_t> seen{id.key()};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& p : frontier) {
            for (const Permutation& g : gens) {
                Permutation r = g * p;
                if (seen.insert(r.key()).second) next.push_back(std::move(r));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

/// Subgroup of a free group in Stallings form: a folded graph with base
/// vertex 0 whose closed reduced walks at the base spell exactly the
/// subgroup's elements.
class StallingsGraph {
   public:
    explicit StallingsGraph(const std::vector<GroupWord>& generators) {
        parent_.push_back(0);
        for (const GroupWord& w : generators) {
            if (w.empty()) continue;
            std::size_t cur = 0;
            const auto& ls = w.letters();
            for (std::size_t k = 0; k < ls.size(); ++k) {
                std::size_t next = 0;
                if (k + 1 < ls.size()) {
                    next = parent_.size();
                    parent_.push_back(next);
                }
                add_edge(cur, ls[k], next);
                cur = next;
            }
        }
        fold();
    }

    bool contains(const GroupWord& w) const {
        std::size_t cur = 0;
        for (const Letter& l : w.letters()) {
            auto it = out_.find({cur, l.gen, l.exp});
            if (it == out_.end()) return false;
            cur = it->second;
        }
        return cur == 0;
    }

    std::size_t vertex_count() const {
        std::size_t k = 0;
        for (std::size_t v = 0; v < parent_.size(); ++v)
            if (parent_[v] == v) ++k;
        return k;
    }

   private:
    struct Edge {
        std::size_t from;
        std::size_t gen;
        std::size_t to;
    };

    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    void add_edge(std::size_t from, const Letter& l, std::size_t to) {
        if (l.exp > 0)
            edges_.push_back({from, l.gen, to});
        else
            edges_.push_back({to, l.gen, from});
    }

    void fold() {
        bool changed = true;
        while (changed) {
            changed = false;
            std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> ends;
            for (Edge& e : edges_) {
                e.from = find(e.from);
                e.to = find(e.to);
                for (const auto& [key, other] : {std::pair{std::tuple{e.from, e.gen, 1}, e.to},
                                                 std::pair{std::tuple{e.to, e.gen, -1}, e.from}}) {
                    auto [it, fresh] = ends.emplace(key, other);
                    if (!fresh && find(it->second) != find(other)) {
                        unite(it->second, other);
                        changed = true;
                    }
                }
            }
        }
        out_.clear();
        for (Edge& e : edges_) {
            e.from = find(e.from);
            e.to = find(e.to);
            out_[{e.from, e.gen, 1}] = e.to;
            out_[{e.to, e.gen, -1}] = e.from;
        }
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);  // the base vertex 0 stays a root
        parent_[b] = a;
    }

    std::vector<std::size_t> parent_;
    std::vector<Edge> edges_;
    std::map<std::tuple<std::size_t, std::size_t, int>, std::size_t> out_;
};

}  // namespace knotalg

#endif
