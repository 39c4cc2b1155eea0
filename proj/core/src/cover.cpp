#include "gausslab/cover.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

namespace gausslab {

std::uint64_t ResidueSet::count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::vector<std::uint64_t> ResidueSet::elements() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < q_; ++r)
        if (test(r)) out.push_back(r);
    return out;
}

std::vector<std::uint64_t>
CoverState::witness_factorization(std::uint64_t r) const {
    if (r == 0 || r >= q || !covered(r))
        throw std::out_of_range("witness_factorization: residue not covered");
    std::vector<std::uint64_t> out;
    std::uint64_t cur = r;
    while (true) {
        out.push_back(witness_prime[cur]);
        if (first_level[cur] == 1) break;
        cur = witness_pred[cur];
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    ResidueSet out(a.modulus());
    for (std::uint64_t r = 0; r < a.modulus(); ++r)
        if (a.test(r) || b.test(r)) out.set(r);
    return out;
}

void check_cover_preconditions(std::uint64_t q, std::uint64_t X, unsigned kmax) {
    if (!is_prime(q)) throw std::domain_error("cover: q must be prime");
    if (X < 2) throw std::domain_error("cover: X must be >= 2");
    if (kmax < 1 || kmax > 200) throw std::domain_error("cover: kmax out of range");
    if (q > (std::uint64_t(1) << 26))
        throw std::length_error("cover: q above 2^26 bitset guard");
}

CoverState init_state(std::uint64_t q, std::uint64_t X) {
    CoverState st;
    st.q = q;
    st.X = X;
    for (std::uint64_t p : sieve_primes(X - 1).primes)
        if (p % q != 0) st.primes.push_back(p);
    st.no_primes = st.primes.empty();
    st.first_level.assign(q, 0);
    st.witness_prime.assign(q, 0);
    st.witness_pred.assign(q, 0);
    return st;
}

/// Appends levels until `upto` levels exist (or full coverage, if stop_full).
void expand_levels(CoverState& st, unsigned upto, bool stop_full) {
    const std::uint64_t q = st.q;
    while (st.levels.size() < upto) {
        const unsigned k = static_cast<unsigned>(st.levels.size()) + 1;
        ResidueSet next(q);
        if (!st.no_primes) {
            if (k == 1) {
                for (std::uint64_t p : st.primes) {
                    const std::uint64_t r = p % q;
                    next.set(r);
                    if (st.first_level[r] == 0) {
                        st.first_level[r] = 1;
                        st.witness_prime[r] = static_cast<std::uint32_t>(p);
                    }
                }
            } else {
                const ResidueSet& prev = st.levels[k - 2];
                for (std::uint64_t p : st.primes) {
                    const std::uint64_t pr = p % q;
                    std::uint64_t t = pr;  // t = s * p mod q, stepped by pr
                    for (std::uint64_t s = 1; s < q; ++s) {
                        if (prev.test(s)) {
                            next.set(t);
                            if (st.first_level[t] == 0) {
                                st.first_level[t] = static_cast<std::uint8_t>(k);
                                st.witness_prime[t] = static_cast<std::uint32_t>(p);
                                st.witness_pred[t] = static_cast<std::uint32_t>(s);
                            }
                        }
                        t += pr;
                        if (t >= q) t -= q;
                    }
                }
            }
        }
        st.levels.push_back(next);
        st.cumulative.push_back(k == 1 ? next
                                       : set_union(st.cumulative[k - 2], next));
        if (stop_full && st.cumulative.back().count() == q - 1) return;
    }
}

}  // namespace

CoverState product_levels(std::uint64_t q, std::uint64_t X, unsigned kmax) {
    check_cover_preconditions(q, X, kmax);
    CoverState st = init_state(q, X);
    expand_levels(st, kmax, false);
    return st;
}

std::optional<unsigned> minimal_cover_k(const CoverState& st) {
    for (std::size_t k = 0; k < st.cumulative.size(); ++k)
        if (st.cumulative[k].count() == st.q - 1)
            return static_cast<unsigned>(k + 1);
    return std::nullopt;
}

std::optional<unsigned> minimal_cover_k(std::uint64_t q, std::uint64_t X,
                                        unsigned kmax) {
    check_cover_preconditions(q, X, kmax);
    CoverState st = init_state(q, X);
    expand_levels(st, kmax, true);
    return minimal_cover_k(st);
}

namespace {

/// Order-m cyclic discrete-log table for (Z/qZ)^*, built from a primitive root.
std::vector<std::uint64_t> dlog_table(std::uint64_t q) {
    const std::uint64_t m = q - 1;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> mfac;
    {
        std::uint64_t n = m;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p) continue;
            std::uint32_t e = 0;
            while (n % p == 0) { n /= p; ++e; }
            mfac.emplace_back(p, e);
        }
        if (n > 1) mfac.emplace_back(n, 1);
    }
    std::uint64_t g = 0;
    for (std::uint64_t cand = 2; cand < q; ++cand) {
        bool primitive = true;
        for (auto& [p, e] : mfac)
            if (pow_mod(cand, m / p, q) == 1) { primitive = false; break; }
        if (primitive) { g = cand; break; }
    }
    std::vector<std::uint64_t> log(q, 0);
    std::uint64_t v = 1;
    for (std::uint64_t e = 0; e < m; ++e) {
        log[v] = e;
        v = mul_mod(v, g, q);
    }
    return log;
}

FreimanResult freiman_impl(std::uint64_t m,
                           const std::vector<std::uint64_t>& S_add) {
    if (m == 0 || m > 100000)
        throw std::domain_error("freiman_check: group order out of range");
    if (S_add.empty()) return FreimanResult::PreconditionFailed;

    // S lies in a coset of the subgroup dZ_m iff d | every pairwise difference
    std::uint64_t d = m;
    for (std::uint64_t s : S_add) {
        std::uint64_t diff = (s + m - S_add[0]) % m;
        d = std::gcd(d, diff);
    }
    if (d > 1) return FreimanResult::PreconditionFailed;

    std::vector<std::uint64_t> S = S_add;
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());

    std::vector<bool> s2(m, false);
    for (std::uint64_t a : S)
        for (std::uint64_t b : S) s2[(a + b) % m] = true;
    std::vector<std::uint64_t> S2;
    for (std::uint64_t r = 0; r < m; ++r)
        if (s2[r]) S2.push_back(r);

    if (2 * S2.size() >= 3 * S.size()) return FreimanResult::Grows;

    std::vector<bool> s4(m, false);
    std::uint64_t covered = 0;
    for (std::uint64_t a : S2)
        for (std::uint64_t b : S2) {
            std::uint64_t r = (a + b) % m;
            if (!s4[r]) { s4[r] = true; ++covered; }
        }
    if (covered == m) return FreimanResult::Covers;
    throw std::logic_error("freiman_check: dichotomy violated");
}

}  // namespace

FreimanResult freiman_check_cyclic(std::uint64_t m,
                                   const std::vector<std::uint64_t>& S) {
    for (std::uint64_t s : S)
        if (s >= m) throw std::invalid_argument("freiman_check: element >= m");
    return freiman_impl(m, S);
}

FreimanResult freiman_check(std::uint64_t q, const std::vector<std::uint64_t>& S) {
    if (!is_prime(q)) throw std::domain_error("freiman_check: q must be prime");
    if (q - 1 > 100000)
        throw std::domain_error("freiman_check: group order out of range");
    auto log = dlog_table(q);
    std::vector<std::uint64_t> add;
    add.reserve(S.size());
    for (std::uint64_t s : S) {
        std::uint64_t r = s % q;
        if (r == 0)
            throw std::invalid_argument("freiman_check: element not in (Z/qZ)^*");
        add.push_back(log[r]);
    }
    return freiman_impl(q - 1, add);
}

Representative find_representative(std::uint64_t b, std::uint64_t q,
                                   std::uint64_t X, unsigned K1, unsigned K2) {
    check_cover_preconditions(q, X, std::max(1u, K2));
    b %= q;
    if (b == 0) throw std::domain_error("find_representative: b must be nonzero");

    Representative rep;
    rep.b = b;

    const bool square = q > 2 && legendre_symbol(static_cast<std::int64_t>(b), q) == 1;
    rep.is_square_witness = square;

    // for a residue, both square roots are candidates; BFS picks the closer
    std::vector<std::uint64_t> targets;
    if (square) {
        std::uint64_t r0 = sqrt_mod(b, q);
        targets.push_back(std::min(r0, q - r0));
        if (q - r0 != r0) targets.push_back(std::max(r0, q - r0));
    } else {
        targets.push_back(b);
    }

    // BFS from 1 through multiplication by primes < X
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p : sieve_primes(X >= 1 ? X - 1 : 0).primes)
        if (p % q != 0) primes.push_back(p);

    std::vector<std::int32_t> dist(q, -1);
    std::vector<std::uint32_t> pred(q, 0), via(q, 0);
    std::vector<std::uint64_t> frontier{1};
    dist[1] = 0;
    std::uint64_t covered = 1;
    unsigned depth = 0;
    auto reached = [&]() -> std::optional<std::uint64_t> {
        for (std::uint64_t t : targets)
            if (dist[t] >= 0) return t;
        return std::nullopt;
    };
    while (!reached() && depth < K2 && !frontier.empty()) {
        ++depth;
        std::vector<std::uint64_t> next;
        for (std::uint64_t s : frontier) {
            for (std::uint64_t p : primes) {
                std::uint64_t t = mul_mod(s, p % q, q);
                if (dist[t] < 0) {
                    dist[t] = static_cast<std::int32_t>(depth);
                    pred[t] = static_cast<std::uint32_t>(s);
                    via[t] = static_cast<std::uint32_t>(p);
                    next.push_back(t);
                    ++covered;
                }
            }
        }
        frontier = std::move(next);
    }
    auto found = reached();
    if (!found)
        throw NotReachableError("find_representative: residue " +
                                    std::to_string(b) + " not reachable at depth " +
                                    std::to_string(K2),
                                depth, covered);
    const std::uint64_t target = *found;

    std::vector<std::uint64_t> chain;
    for (std::uint64_t cur = target; dist[cur] > 0; cur = pred[cur])
        chain.push_back(via[cur]);
    if (square) {
        std::vector<std::uint64_t> doubled;
        for (std::uint64_t p : chain) { doubled.push_back(p); doubled.push_back(p); }
        chain = std::move(doubled);
    }
    std::sort(chain.begin(), chain.end());
    rep.factorization = chain;

    unsigned __int128 value = 1;
    double log_value = 0.0;
    for (std::uint64_t p : chain) {
        value *= p;
        log_value += std::log(static_cast<double>(p));
    }
    rep.P_b = value;
    rep.within_value_bound =
        log_value < 2.0 * static_cast<double>(K1) * std::log(static_cast<double>(q));
    return rep;
}

std::string cover_curve_csv(const CoverState& st) {
    std::ostringstream os;
    os << "k,level_size,cumulative_size,coverage_fraction\n";
    os.precision(17);
    for (std::size_t k = 0; k < st.levels.size(); ++k) {
        const double frac = static_cast<double>(st.cumulative[k].count()) /
                            static_cast<double>(st.q - 1);
        os << (k + 1) << ',' << st.levels[k].count() << ','
           << st.cumulative[k].count() << ',' << frac << '\n';
    }
    return os.str();
}

namespace {

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace

std::string cover_witness_lines(const CoverState& st) {
    std::ostringstream os;
    for (std::uint64_t b = 1; b < st.q; ++b) {
        if (!st.covered(b)) continue;
        auto fac = st.witness_factorization(b);
        unsigned __int128 v = 1;
        for (std::uint64_t p : fac) v *= p;
        os << b << ',' << u128_to_string(v) << ',';
        for (std::size_t i = 0; i < fac.size(); ++i) {
            if (i) os << '*';
            os << fac[i];
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace gausslab
