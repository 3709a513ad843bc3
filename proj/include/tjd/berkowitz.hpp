#pragma once

#include <algorithm>
#include <functional>
#include <vector>

namespace tjd::detail {

// Berkowitz's division-free characteristic polynomial over any commutative
// ring.  `at(i, j)` supplies the matrix entries, `zero`/`one` the ring
// constants.  Returns the coefficients of det(xI - M), low -> high (monic).
template <class Elem, class At>
std::vector<Elem> berkowitz_charpoly(long n, const At& at, const Elem& zero, const Elem& one) {
    // coefficients for the leading principal r x r block, stored high -> low
    std::vector<Elem> p{one, -at(0, 0)};
    for (long m = 2; m <= n; ++m) {
        // s_0 = new diagonal entry, s_j = R * sub^{j-1} * C
        std::vector<Elem> s;
        s.push_back(at(m - 1, m - 1));
        std::vector<Elem> w;
        w.reserve(m - 1);
        for (long i = 0; i < m - 1; ++i) w.push_back(at(i, m - 1));
        for (long j = 1; j <= m - 1; ++j) {
            Elem dot = zero;
            for (long i = 0; i < m - 1; ++i) dot = dot + at(m - 1, i) * w[i];
            s.push_back(dot);
            if (j < m - 1) {
                std::vector<Elem> w2(m - 1, zero);
                for (long i = 0; i < m - 1; ++i)
                    for (long l = 0; l < m - 1; ++l)
                        w2[i] = w2[i] + at(i, l) * w[l];
                w = std::move(w2);
            }
        }
        // Toeplitz step: p_new[i] = p[i] - sum_{j<i} s_{i-j-1} p[j]
        std::vector<Elem> pn(m + 1, zero);
        for (long i = 0; i <= m; ++i) {
            if (i < static_cast<long>(p.size())) pn[i] = pn[i] + p[i];
            for (long j = 0; j <= std::min<long>(i - 1, m - 1); ++j)
                pn[i] = pn[i] - s[i - j - 1] * p[j];
        }
        p = std::move(pn);
    }
    return std::vector<Elem>(p.rbegin(), p.rend());
}

} // namespace tjd::detail
