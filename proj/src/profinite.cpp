#include "tjd/profinite.hpp"

#include <algorithm>
#include <numeric>

#include "tjd/error.hpp"

namespace tjd {

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t v : img_) {
        if (v >= img_.size() || seen[v])
            throw ValidationError("images do not form a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(long n) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::cycle(long n, const std::vector<uint32_t>& pts) {
    Perm e = identity(n);
    for (size_t i = 0; i < pts.size(); ++i)
        e.img_[pts[i]] = pts[(i + 1) % pts.size()];
    return Perm(e.img_); // revalidate
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& o) const {
    if (degree() != o.degree()) throw ValidationError("permutation degree mismatch");
    std::vector<uint32_t> img(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) img[i] = img_[o.img_[i]];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<uint32_t> img(img_.size());
    for (uint32_t i = 0; i < img_.size(); ++i) img[img_[i]] = i;
    return Perm(std::move(img));
}

Perm Perm::pow(const BigInt& e) const {
    BigInt ord = perm_order(*this);
    BigInt r = e % ord;
    if (r < 0) r += ord;
    Perm acc = identity(degree());
    Perm base = *this;
    unsigned long m = r.get_ui(); // order of a permutation of <= 20 points fits easily
    while (m) {
        if (m & 1) acc = acc * base;
        base = base * base;
        m >>= 1;
    }
    return acc;
}

Perm Perm::extend(long n_prime) const {
    if (n_prime < degree()) throw ValidationError("cannot shrink a permutation");
    std::vector<uint32_t> img = img_;
    for (long i = degree(); i < n_prime; ++i) img.push_back(static_cast<uint32_t>(i));
    return Perm(std::move(img));
}

std::vector<std::vector<uint32_t>> Perm::cycles() const {
    std::vector<std::vector<uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (uint32_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<uint32_t> cyc;
        uint32_t x = i;
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = img_[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

BigInt perm_order(const Perm& g) {
    BigInt ord = 1;
    for (const auto& cyc : g.cycles()) ord = big_lcm(ord, BigInt(cyc.size()));
    return ord;
}

PJordanPair p_jordan_perm(const Perm& g, long p) {
    if (!is_small_prime(p)) throw ValidationError("p must be prime");
    BigInt ord = perm_order(g);
    BigInt m_prime = ord;
    long a = remove_p(m_prime, BigInt(p));
    BigInt pa = big_pow(BigInt(p), a);
    BigInt c_s = crt_pair(0, pa, 1, m_prime);
    BigInt c_u = crt_pair(1, pa, 0, m_prime);
    return PJordanPair{g.pow(c_s), g.pow(c_u), p, c_s, c_u};
}

std::vector<Perm> symmetric_group(long n) {
    std::vector<uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

bool verify_unique_p_jordan(const Perm& g, long p) {
    if (g.degree() > 7) throw SearchTooLarge("exhaustive search limited to N <= 7");
    PJordanPair expect = p_jordan_perm(g, p);
    long count = 0;
    bool matches = false;
    for (const Perm& s : symmetric_group(g.degree())) {
        Perm u = s.inverse() * g;
        if (!(s * u == u * s)) continue;
        BigInt os = perm_order(s);
        if (mpz_divisible_ui_p(os.get_mpz_t(), p)) continue;
        BigInt ou = perm_order(u);
        long dummy = remove_p(ou, BigInt(p));
        (void)dummy;
        if (ou != 1) continue; // order not a p-power
        ++count;
        if (s == expect.s && u == expect.u) matches = true;
    }
    return count == 1 && matches;
}

} // namespace tjd
