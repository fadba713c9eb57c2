/*
   Copyright 2026 The quadcover authors

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

#ifndef QUADCOVER_LINALG_HPP
#define QUADCOVER_LINALG_HPP

#include <vector>

#include "quadcover/rings.hpp"

namespace quadcover {

struct Vec2 {
    RingElem x;
    RingElem y;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {add(a.x, b.x), add(a.y, b.y)}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {sub(a.x, b.x), sub(a.y, b.y)}; }

/// Coefficient of v wedge w on e1^e2.
inline RingElem wedge(const Vec2& v, const Vec2& w) {
    return sub(mul(v.x, w.y), mul(v.y, w.x));
}

/// Row-major 2x2 matrix [[a,b],[c,d]] over one ring.
struct Mat2 {
    RingElem a, b, c, d;

    static Mat2 identity(const Ring& r) { return {one(r), zero(r), zero(r), one(r)}; }
    static Mat2 zero_matrix(const Ring& r) { return {zero(r), zero(r), zero(r), zero(r)}; }

    RingElem trace() const { return add(a, d); }
    RingElem det() const { return sub(mul(a, d), mul(b, c)); }

    Vec2 apply(const Vec2& v) const {
        return {add(mul(a, v.x), mul(b, v.y)), add(mul(c, v.x), mul(d, v.y))};
    }

    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

inline Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {add(mul(m.a, n.a), mul(m.b, n.c)), add(mul(m.a, n.b), mul(m.b, n.d)),
            add(mul(m.c, n.a), mul(m.d, n.c)), add(mul(m.c, n.b), mul(m.d, n.d))};
}

inline Mat2 operator+(const Mat2& m, const Mat2& n) {
    return {add(m.a, n.a), add(m.b, n.b), add(m.c, n.c), add(m.d, n.d)};
}

inline Mat2 operator-(const Mat2& m, const Mat2& n) {
    return {sub(m.a, n.a), sub(m.b, n.b), sub(m.c, n.c), sub(m.d, n.d)};
}

inline Mat2 scale(const RingElem& s, const Mat2& m) {
    return {mul(s, m.a), mul(s, m.b), mul(s, m.c), mul(s, m.d)};
}

inline Mat2 transpose(const Mat2& m) { return {m.a, m.c, m.b, m.d}; }

inline RingElem det3(const std::vector<std::vector<RingElem>>& m) {
    // m is 3x3
    RingElem t1 = mul(m[0][0], sub(mul(m[1][1], m[2][2]), mul(m[1][2], m[2][1])));
    RingElem t2 = mul(m[0][1], sub(mul(m[1][0], m[2][2]), mul(m[1][2], m[2][0])));
    RingElem t3 = mul(m[0][2], sub(mul(m[1][0], m[2][1]), mul(m[1][1], m[2][0])));
    return add(sub(t1, t2), t3);
}

/// Gauss-reduce rows in place (unit pivots only). Returns the rank.
/// Throws DomainError if some column cannot be cleared because no remaining
/// nonzero entry is a decidable unit (never happens over a field).
inline std::size_t row_reduce(std::vector<std::vector<RingElem>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rows.size();
        bool has_nonzero = false;
        for (std::size_t i = rank; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            has_nonzero = true;
            if (is_unit(rows[i][col]) == Decision::Yes) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows.size()) {
            if (has_nonzero)
                throw DomainError("no_unit_pivot",
                                  "exact elimination needs a unit pivot; base ring too coarse");
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        RingElem s = inv(rows[rank][col]);
        for (auto& v : rows[rank]) v = mul(s, v);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col].is_zero()) continue;
            RingElem f = rows[i][col];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i][j] = sub(rows[i][j], mul(f, rows[rank][j]));
        }
        ++rank;
    }
    return rank;
}

/// Membership of v in the row span of gens, by exact rank comparison.
inline bool in_row_span(std::vector<std::vector<RingElem>> gens, const std::vector<RingElem>& v) {
    std::size_t r1 = row_reduce(gens);
    gens.push_back(v);
    std::size_t r2 = row_reduce(gens);
    return r1 == r2;
}

}  // namespace quadcover

#endif  // QUADCOVER_LINALG_HPP
