#include "wpc/quotient.hpp"

#include <numeric>
#include <set>

#include "wpc/classify.hpp"

namespace wpc {

std::vector<int> coordinate_gcds(const WeightType& p, const Subgroup& h) {
    std::vector<long long> g(p.weights.begin(), p.weights.end());
    for (const LElement& e : h.elements)
        for (std::size_t j = 0; j < g.size(); j++)
            g[j] = std::gcd(g[j], static_cast<long long>(e.coeffs[j]));
    return std::vector<int>(g.begin(), g.end());
}

QuotientCurve quotient_curve(const WeightType& p, const Subgroup& h) {
    QuotientCurve q;
    q.order = h.order();
    std::vector<int> d = coordinate_gcds(p, h);

    Rational n(static_cast<long>(q.order));
    Rational ramification(0);   // sum_j (1 - d_j/p_j)
    q.smooth = true;
    for (std::size_t j = 0; j < d.size(); j++) {
        // n_j = n d_j / p_j is the number of weight-d_j points over index j
        // (it is the order of the kernel of H -> Z/p_j, hence integral).
        Rational nj = n * Rational(d[j], p.weights[j]);
        if (!nj.is_integer())
            throw non_integral_multiplicity("n*d_j/p_j is not an integer at index " +
                                            std::to_string(j + 1));
        long long njv = static_cast<long long>(nj.num().get_si());
        q.full_weights.emplace_back(d[j], njv);
        ramification += Rational(njv) * (Rational(1) - Rational(1, d[j]));
        if (d[j] > 1) {
            q.smooth = false;
            for (long long r = 0; r < njv; r++)
                q.weights.push_back(d[j]);
        }
    }
    std::sort(q.weights.begin(), q.weights.end());

    // genus: (n/2) sum_j (1 - d_j/p_j) - n + 1
    Rational s(0);
    for (std::size_t j = 0; j < d.size(); j++)
        s += Rational(1) - Rational(d[j], p.weights[j]);
    Rational g = n / Rational(2) * s - n + Rational(1);
    if (!g.is_integer() || g.sign() < 0)
        throw non_integral_genus("quotient genus " + g.str() + " is not a nonnegative integer");
    q.genus = static_cast<long long>(g.num().get_si());

    // Riemann-Hurwitz for the degree-n quotient map, exact in rationals.
    Rational lhs = n * euler_char(p);
    Rational rhs = Rational(2) * (Rational(1) - g) - ramification;
    if (lhs != rhs)
        throw internal_check("Riemann-Hurwitz failed: " + lhs.str() + " != " + rhs.str());
    return q;
}

bool is_smooth_quotient(const WeightType& p, const Subgroup& h) {
    for (int d : coordinate_gcds(p, h))
        if (d != 1)
            return false;
    return true;
}

Rational quotient_euler(const QuotientCurve& q) {
    Rational e = Rational(2) * (Rational(1) - Rational(static_cast<long>(q.genus)));
    for (const auto& [d, nj] : q.full_weights)
        e -= Rational(static_cast<long>(nj)) * (Rational(1) - Rational(1, d));
    return e;
}

namespace {

bool is_prime_ll(long long q) {
    if (q < 2)
        return false;
    mpz_class z(static_cast<long>(q));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

// Distinct primes dividing any weight.
std::set<long long> weight_primes(const WeightType& p) {
    std::set<long long> primes;
    for (int w : p.weights) {
        long long m = w;
        for (long long d = 2; d * d <= m; d++) {
            while (m % d == 0) {
                primes.insert(d);
                m /= d;
            }
        }
        if (m > 1)
            primes.insert(m);
    }
    return primes;
}

} // namespace

int index_q(const WeightType& p, long long q) {
    if (!is_prime_ll(q))
        throw not_prime(std::to_string(q) + " is not prime");
    int best = 0;
    int count = p.count();   // exponent 0 everywhere when q divides no weight
    for (int w : p.weights) {
        int e = 0;
        long long m = w;
        while (m % q == 0) {
            e++;
            m /= q;
        }
        if (e > best) {
            best = e;
            count = 1;
        } else if (e == best && best > 0) {
            count++;
        }
    }
    return best == 0 ? p.count() : count;
}

std::pair<bool, std::optional<Subgroup>>
exists_smooth_subgroup(const WeightType& p, std::uint64_t bound) {
    validate_weights(p);
    for (long long q : weight_primes(p))
        if (index_q(p, q) < 2)
            return {false, std::nullopt};
    Subgroup h = full_torsion_subgroup(p, bound);
    if (!is_smooth_quotient(p, h))
        throw internal_check("full torsion subgroup fails smoothness despite the prime test");
    return {true, std::move(h)};
}

std::pair<WeightType, Subgroup> hyperelliptic_subgroup(long long g) {
    if (g < 1)
        throw invalid_action("hyperelliptic family needs genus >= 1");
    WeightType p(std::vector<int>(static_cast<std::size_t>(g + 3), 2));

    std::vector<long long> a(p.weights.size(), 0);
    a[0] = 1;
    a[1] = -1;
    LElement g1 = normal_form(p, a, 0);

    std::vector<long long> b(p.weights.size(), 0);
    if (g % 2 == 0)
        b[1] = 1;
    for (long long i = 3; i <= g + 3; i++)
        b[static_cast<std::size_t>(i - 1)] = (i % 2 == 0) ? 1 : -1;
    LElement g2 = normal_form(p, b, 0);

    return {p, subgroup_generate(p, {g1, g2})};
}

} // namespace wpc
