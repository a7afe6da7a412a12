#include "wpc/lgroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

namespace wpc {

mpz_class WeightType::lcm() const {
    mpz_class l = 1;
    for (int p : weights)
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(p));
    return l;
}

mpz_class WeightType::weight_product() const {
    mpz_class r = 1;
    for (int p : weights)
        r *= p;
    return r;
}

mpz_class WeightType::torsion_order() const {
    // (prod p_i) / lcm(p_i); the division is exact.
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), weight_product().get_mpz_t(), lcm().get_mpz_t());
    return q;
}

std::string WeightType::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < weights.size(); i++)
        os << (i ? "," : "") << weights[i];
    os << ")";
    return os.str();
}

void validate_weights(const WeightType& p) {
    for (int w : p.weights)
        if (w < 1)
            throw bad_weights("weights must be >= 1, got " + std::to_string(w));
}

LElement normal_form(const WeightType& p, const std::vector<long long>& coeffs,
                     long long c_coeff) {
    if (coeffs.size() != p.weights.size())
        throw internal_check("coefficient count does not match weight count");
    LElement e;
    e.coeffs.resize(coeffs.size());
    long long carry = c_coeff;
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        long long pi = p.weights[i];
        long long q = coeffs[i] / pi;
        long long r = coeffs[i] % pi;
        if (r < 0) { r += pi; q -= 1; }           // floored division
        e.coeffs[i] = static_cast<int>(r);
        carry += q;                               // p_i x_i = c
    }
    e.c_coeff = carry;
    return e;
}

LElement lel_zero(const WeightType& p) {
    LElement e;
    e.coeffs.assign(p.weights.size(), 0);
    return e;
}

LElement lel_basis(const WeightType& p, int i) {
    if (i < 1 || i > p.count())
        throw index_out_of_range("x" + std::to_string(i) + " does not exist in L" + p.str());
    std::vector<long long> a(p.weights.size(), 0);
    a[i - 1] = 1;
    return normal_form(p, a, 0);
}

LElement lel_c(const WeightType& p) {
    std::vector<long long> a(p.weights.size(), 0);
    return normal_form(p, a, 1);
}

static std::vector<long long> raw(const LElement& x) {
    return std::vector<long long>(x.coeffs.begin(), x.coeffs.end());
}

LElement lel_add(const WeightType& p, const LElement& x, const LElement& y) {
    std::vector<long long> a = raw(x);
    for (std::size_t i = 0; i < a.size(); i++)
        a[i] += y.coeffs[i];
    return normal_form(p, a, x.c_coeff + y.c_coeff);
}

LElement lel_neg(const WeightType& p, const LElement& x) {
    std::vector<long long> a = raw(x);
    for (auto& v : a)
        v = -v;
    return normal_form(p, a, -x.c_coeff);
}

LElement lel_sub(const WeightType& p, const LElement& x, const LElement& y) {
    return lel_add(p, x, lel_neg(p, y));
}

LElement lel_scale(const WeightType& p, long long k, const LElement& x) {
    std::vector<long long> a = raw(x);
    for (auto& v : a)
        v *= k;
    return normal_form(p, a, k * x.c_coeff);
}

mpz_class delta(const WeightType& p, const LElement& x) {
    mpz_class l = p.lcm();
    mpz_class d = static_cast<long>(x.c_coeff);
    d *= l;
    for (std::size_t i = 0; i < x.coeffs.size(); i++) {
        mpz_class q;
        mpz_divexact_ui(q.get_mpz_t(), l.get_mpz_t(),
                        static_cast<unsigned long>(p.weights[i]));
        d += q * x.coeffs[i];
    }
    return d;
}

bool is_torsion(const WeightType& p, const LElement& x) {
    return delta(p, x) == 0;
}

std::optional<mpz_class> element_order(const WeightType& p, const LElement& x) {
    if (!is_torsion(p, x))
        return std::nullopt;    // infinite order off the kernel of delta
    // On the kernel, the order equals the order of the coefficient image in
    // prod Z/p_i: k x has c-coordinate zero whenever all coordinates vanish.
    mpz_class ord = 1;
    for (std::size_t i = 0; i < x.coeffs.size(); i++) {
        long long g = std::gcd(static_cast<long long>(p.weights[i]),
                               static_cast<long long>(x.coeffs[i]));
        mpz_lcm_ui(ord.get_mpz_t(), ord.get_mpz_t(),
                   static_cast<unsigned long>(p.weights[i] / g));
    }
    return ord;
}

LElement dualizing_element(const WeightType& p) {
    std::vector<long long> a(p.weights.size(), -1);
    return normal_form(p, a, p.count() - 2);
}

std::vector<LElement> torsion_generators(const WeightType& p) {
    std::vector<LElement> gens;
    LElement zero = lel_zero(p);
    for (int i = 0; i < p.count(); i++) {
        for (int j = i + 1; j < p.count(); j++) {
            long long d = std::gcd(static_cast<long long>(p.weights[i]),
                                   static_cast<long long>(p.weights[j]));
            std::vector<long long> a(p.weights.size(), 0);
            a[i] = p.weights[i] / d;
            a[j] = -(p.weights[j] / d);
            LElement e = normal_form(p, a, 0);
            if (e != zero)
                gens.push_back(e);
        }
    }
    return gens;
}

// Closure of torsion elements under addition (negatives come for free since
// every generator has finite order). Throws once the closure passes `bound`.
static std::set<LElement> close_under_addition(const WeightType& p,
                                               const std::vector<LElement>& gens,
                                               std::uint64_t bound) {
    std::set<LElement> s;
    s.insert(lel_zero(p));
    std::queue<LElement> work;
    work.push(lel_zero(p));
    while (!work.empty()) {
        LElement v = work.front();
        work.pop();
        for (const LElement& g : gens) {
            LElement w = lel_add(p, v, g);
            if (s.insert(w).second) {
                if (s.size() > bound)
                    throw torsion_too_large("subgroup closure exceeds bound " +
                                            std::to_string(bound));
                work.push(w);
            }
        }
    }
    return s;
}

std::vector<LElement> torsion_elements(const WeightType& p, std::uint64_t bound) {
    validate_weights(p);
    mpz_class n = p.torsion_order();
    if (n > mpz_class(static_cast<unsigned long>(bound)))
        throw torsion_too_large("torsion subgroup of L" + p.str() + " has order " +
                                n.get_str() + " > bound " + std::to_string(bound));
    std::set<LElement> s = close_under_addition(p, torsion_generators(p), bound);
    if (mpz_class(static_cast<unsigned long>(s.size())) != n)
        throw internal_check("torsion closure has size " + std::to_string(s.size()) +
                             ", expected " + n.get_str());
    return std::vector<LElement>(s.begin(), s.end());
}

Subgroup subgroup_generate(const WeightType& p, const std::vector<LElement>& gens,
                           std::uint64_t bound) {
    validate_weights(p);
    for (const LElement& g : gens)
        if (!is_torsion(p, g))
            throw non_torsion_generator("generator has infinite order in L" + p.str());
    std::set<LElement> s = close_under_addition(p, gens, bound);
    Subgroup h;
    h.ambient = p;
    h.generators = gens;
    h.elements.assign(s.begin(), s.end());
    return h;
}

Subgroup full_torsion_subgroup(const WeightType& p, std::uint64_t bound) {
    Subgroup h;
    h.ambient = p;
    h.generators = torsion_generators(p);
    h.elements = torsion_elements(p, bound);
    return h;
}

bool subgroup_contains(const Subgroup& h, const LElement& x) {
    return std::binary_search(h.elements.begin(), h.elements.end(), x);
}

// ---------------------------------------------------------------------------
// Subgroup lattice enumeration.
//
// Elements of tL(p) are indexed 0..N-1 in sorted order (index 0 is zero).
// Subgroups are bitsets over these indices; the lattice is walked breadth
// first, extending each known subgroup H by every element g not yet in it:
// <H, g> = union of the cosets H + m g over multiples m of g. Elements in
// the same coset H + g generate the same extension, so each coset is tried
// once. Addition goes through a dense Cayley table when N is small enough
// for that to be worthwhile.
// ---------------------------------------------------------------------------

namespace {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool operator==(const Bits&) const = default;

    std::size_t count() const {
        std::size_t c = 0;
        for (auto v : w)
            c += static_cast<std::size_t>(__builtin_popcountll(v));
        return c;
    }
    template <class F> void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w.size(); wi++) {
            std::uint64_t v = w[wi];
            while (v) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(v));
                f(wi * 64 + b);
                v &= v - 1;
            }
        }
    }
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : b.w) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

constexpr std::size_t kCayleyLimit = 2048;   // table is N^2 uint32 beyond this

} // namespace

std::vector<Subgroup> enumerate_subgroups(const WeightType& p, std::uint64_t bound) {
    std::vector<LElement> elems = torsion_elements(p, bound);
    const std::size_t n = elems.size();

    auto lookup = [&](const LElement& e) -> std::size_t {
        auto it = std::lower_bound(elems.begin(), elems.end(), e);
        return static_cast<std::size_t>(it - elems.begin());
    };

    std::vector<std::uint32_t> table;
    if (n <= kCayleyLimit) {
        table.resize(n * n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = i; j < n; j++) {
                std::uint32_t k =
                    static_cast<std::uint32_t>(lookup(lel_add(p, elems[i], elems[j])));
                table[i * n + j] = k;
                table[j * n + i] = k;
            }
        }
    }
    auto add_idx = [&](std::size_t i, std::size_t j) -> std::size_t {
        if (!table.empty())
            return table[i * n + j];
        return lookup(lel_add(p, elems[i], elems[j]));
    };

    std::vector<Bits> groups;
    std::vector<std::vector<std::size_t>> gen_idx;
    std::unordered_set<Bits, BitsHash> seen;

    Bits trivial(n);
    trivial.set(0);
    groups.push_back(trivial);
    gen_idx.emplace_back();
    seen.insert(trivial);

    for (std::size_t at = 0; at < groups.size(); at++) {
        const Bits h = groups[at];           // copy: groups reallocates as it grows
        Bits tried = h;
        for (std::size_t g = 1; g < n; g++) {
            if (tried.test(g))
                continue;
            Bits k = h;
            std::size_t m = g;
            bool first = true;
            while (m != 0) {
                h.for_each([&](std::size_t e) {
                    std::size_t s = add_idx(e, m);
                    k.set(s);
                    if (first)
                        tried.set(s);        // the coset H + g, tried once
                });
                m = add_idx(m, g);
                first = false;
            }
            if (seen.insert(k).second) {
                groups.push_back(k);
                std::vector<std::size_t> gi = gen_idx[at];
                gi.push_back(g);
                gen_idx.push_back(std::move(gi));
            }
        }
    }

    std::vector<Subgroup> out;
    out.reserve(groups.size());
    for (std::size_t i = 0; i < groups.size(); i++) {
        Subgroup s;
        s.ambient = p;
        for (std::size_t g : gen_idx[i])
            s.generators.push_back(elems[g]);
        groups[i].for_each([&](std::size_t e) { s.elements.push_back(elems[e]); });
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Permutation canonicalization.
// ---------------------------------------------------------------------------

std::string SubgroupKey::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < weights.size(); i++)
        os << (i ? "," : "") << weights[i];
    os << ")|";
    for (std::size_t e = 0; e < elements.size(); e++) {
        if (e)
            os << ";";
        os << "[";
        for (std::size_t i = 0; i < elements[e].coeffs.size(); i++)
            os << (i ? "," : "") << elements[e].coeffs[i];
        os << ":" << elements[e].c_coeff << "]";
    }
    return os.str();
}

SubgroupKey permutation_canonical(const WeightType& p, const Subgroup& h) {
    const int t = p.count();
    std::vector<int> sorted_idx(t);
    std::iota(sorted_idx.begin(), sorted_idx.end(), 0);
    std::stable_sort(sorted_idx.begin(), sorted_idx.end(),
                     [&](int a, int b) { return p.weights[a] < p.weights[b]; });

    std::vector<int> ws(t);
    for (int j = 0; j < t; j++)
        ws[j] = p.weights[sorted_idx[j]];

    // Valid relabelings permute source indices within blocks of equal weight;
    // walk them odometer-style with next_permutation per block.
    std::vector<std::vector<int>> blocks;
    for (int j = 0; j < t; j++) {
        if (j == 0 || ws[j] != ws[j - 1])
            blocks.emplace_back();
        blocks.back().push_back(sorted_idx[j]);
    }
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());

    std::optional<std::vector<LElement>> best;
    for (;;) {
        std::vector<int> sigma;
        sigma.reserve(t);
        for (const auto& b : blocks)
            sigma.insert(sigma.end(), b.begin(), b.end());

        std::vector<LElement> image;
        image.reserve(h.elements.size());
        for (const LElement& e : h.elements) {
            LElement im;
            im.coeffs.resize(t);
            for (int j = 0; j < t; j++)
                im.coeffs[j] = e.coeffs[sigma[j]];   // stays reduced: same weight
            im.c_coeff = e.c_coeff;
            image.push_back(std::move(im));
        }
        std::sort(image.begin(), image.end());
        if (!best || image < *best)
            best = std::move(image);

        // advance the odometer
        int b = static_cast<int>(blocks.size()) - 1;
        while (b >= 0 && !std::next_permutation(blocks[b].begin(), blocks[b].end()))
            b--;
        if (b < 0)
            break;
    }

    SubgroupKey key;
    key.weights = std::move(ws);
    key.elements = std::move(*best);
    return key;
}

} // namespace wpc
