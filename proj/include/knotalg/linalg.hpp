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

#ifndef KNOTALG_LINALG_HPP
#define KNOTALG_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "scalar.hpp"

namespace knotalg {

/// Sparse vector: coordinate -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Scalar>;

/// v += f * w, dropping coordinates that cancel.
inline void axpy(SparseVector& v, const Scalar& f, const SparseVector& w) {
    for (const auto& [k, x] : w) {
        auto it = v.find(k);
        if (it == v.end()) {
            v.emplace(k, f * x);
        } else {
            it->second += f * x;
            if (it->second.is_zero()) v.erase(it);
        }
    }
}

/// Incremental row echelon form. Each stored row has leading coordinate equal
/// to its pivot with coefficient one.
class EchelonBasis {
   public:
    SparseVector reduce(SparseVector v) const {
        auto it = v.begin();
        while (it != v.end()) {
            const auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const std::size_t key = it->first;
            const Scalar f = -it->second;
            axpy(v, f, row->second);
            it = v.upper_bound(key);
        }
        return v;
    }

    /// Adds v to the span; returns false when v was already in it.
    bool insert(const SparseVector& v) {
        SparseVector r = reduce(v);
        if (r.empty()) return false;
        const Scalar inv = r.begin()->second.inverse();
        for (auto& [k, x] : r) x *= inv;
        const std::size_t pivot = r.begin()->first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    std::size_t rank() const noexcept { return rows_.size(); }

    std::vector<SparseVector> rows() const {
        std::vector<SparseVector> out;
        out.reserve(rows_.size());
        for (const auto& [p, r] : rows_) out.push_back(r);
        return out;
    }

   private:
    std::map<std::size_t, SparseVector> rows_;
};

}  // namespace knotalg

#endif
