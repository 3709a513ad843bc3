#pragma once

#include <cstdint>

#include "tjd/matq.hpp"
#include "tjd/profinite.hpp"

namespace tjd {

// splitmix64; byte-identical streams for a given seed on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n <= 1 ? 0 : next() % n; }
    long below_long(long n) { return static_cast<long>(below(static_cast<uint64_t>(n))); }
    BigInt below_big(const BigInt& n);

private:
    uint64_t s_;
};

FqElem random_fq(Rng& rng, const CtxPtr& ctx);
FqElem random_fq_nonzero(Rng& rng, const CtxPtr& ctx);
ZqElem random_zq(Rng& rng, const CtxPtr& ctx);
ZqElem random_zq_unit(Rng& rng, const CtxPtr& ctx);

// Product of random elementary matrices, a permutation matrix and a
// Teichmuller diagonal: an element of GL_n(O) with unit det by construction.
MatQq random_gl_integral(Rng& rng, const CtxPtr& ctx, long n, long steps = 6);

// Random canonical HNF lattice with diagonal exponents <= max_exp.
Lattice random_lattice(Rng& rng, const CtxPtr& ctx, long n, long max_exp);

// B u B^{-1} for a random lattice basis B and random u in GL_n(O); bounded,
// usually with non-integral entries.
MatQq random_bounded(Rng& rng, const CtxPtr& ctx, long n, long max_exp);

Perm random_perm(Rng& rng, long n);

} // namespace tjd
