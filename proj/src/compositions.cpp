#include "brg/compositions.hpp"

#include <functional>
#include <stdexcept>

namespace brg::compositions {

Count binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binom(n-k+i, i) after each step
    }
    return r;
}

Count multinomial(long long p, const std::vector<long long>& parts) {
    Count r = 1;
    long long used = 0;
    for (long long part : parts) {
        if (part < 0) return 0;
        used += part;
        r *= binomial(used, part);
    }
    if (used != p) return 0;
    return r;
}

int indicator(IndicatorKind kind, long long q) {
    if (q < 0) throw std::invalid_argument("indicator: q must be nonnegative");
    switch (kind) {
        case IndicatorKind::Parity: return q % 2 == 1 ? 1 : 0;
        case IndicatorKind::Mod3: return q % 3 == 2 ? 1 : 0;
        case IndicatorKind::Mod4: return q % 4 == 3 ? 1 : 0;
    }
    return 0;
}

Count count_odd(long long n, long long p, long long i) {
    if (p == 0) return (n == 0 && i == 0) ? 1 : 0;
    if (n < 0 || p < 0 || i < 0 || i > p) return 0;
    if ((n + i) % 2 != 0) return 0;
    return binomial((n + i) / 2 - 1, p - 1) * binomial(p, i);
}

Count count_residue(long long n, long long p, long long i, int modulus, int residue) {
    const long long D = modulus;
    const long long d = residue;
    if (D < 2 || d < 1 || d > D - 1)
        throw std::invalid_argument("count_residue: need modulus >= 2 and 1 <= residue < modulus");
    if (p == 0) return (n == 0 && i == 0) ? 1 : 0;
    if (n < 0 || p < 0 || i < 0 || i > p) return 0;

    // Residue classes other than d, their part counts l_alpha summing to
    // p - i. Whether a term contributes depends on the residue of
    // S = sum_(alpha<D) (D-alpha) l_alpha matching the one forced by n, i.
    std::vector<long long> classes;
    for (long long a = 1; a <= D; ++a)
        if (a != d) classes.push_back(a);

    const long long forced = (n + (D - d) * i) % D;
    const long long want = forced == 0 ? 0 : D - forced;
    Count total = 0;
    std::vector<long long> l(classes.size(), 0);
    std::function<void(std::size_t, long long)> walk = [&](std::size_t slot, long long left) {
        if (slot + 1 == l.size()) {
            l[slot] = left;
            long long s = 0;
            for (std::size_t j = 0; j < classes.size(); ++j)
                if (classes[j] < D) s += (D - classes[j]) * l[j];
            if (s % D != want) return;
            const long long m = (n + (D - d) * i + s) / D - 1;
            std::vector<long long> parts(l.begin(), l.end());
            parts.push_back(i);
            total += multinomial(p, parts) * binomial(m, p - 1);
            return;
        }
        for (long long v = 0; v <= left; ++v) {
            l[slot] = v;
            walk(slot + 1, left - v);
        }
    };
    walk(0, p - i);
    return total;
}

std::vector<std::vector<int>> enumerate(int n, int p) {
    if (n > 25) throw std::length_error("enumerate: n exceeds the cap of 25");
    std::vector<std::vector<int>> out;
    if (p < 0 || n < 0) return out;
    if (p == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> parts(static_cast<std::size_t>(p));
    std::function<void(int, int)> walk = [&](int slot, int left) {
        if (slot + 1 == p) {
            if (left >= 1) {
                parts[static_cast<std::size_t>(slot)] = left;
                out.push_back(parts);
            }
            return;
        }
        for (int v = 1; v <= left - (p - slot - 1); ++v) {
            parts[static_cast<std::size_t>(slot)] = v;
            walk(slot + 1, left - v);
        }
    };
    walk(0, n);
    return out;
}

}  // namespace brg::compositions
