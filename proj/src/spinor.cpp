#include "ulrich/spinor.hpp"

#include "ulrich/config.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace ulrich {

int spinor_rank(int n) {
    return 1 << ((n - 1) / 2);
}

namespace {

struct PrimePair {
    CohClass sprime;       // c(S') on Q_n
    CohClass sdoubleprime; // c(S'')
};

CohClass halve_exact(const CohClass& x) {
    CohClass out(x.ring());
    for (int i = 0; i < x.size(); ++i) {
        if (x.coefficient(i) % 2 != 0)
            throw std::logic_error("non-exact halving in spinor recursion");
        out.set_coefficient(i, x.coefficient(i) / 2);
    }
    return out;
}

// The two compatible restriction sums on P^m: even-twist forms and
// odd-twist forms. Their ranks both equal 2^(m-1).
BundleClass forms_parity_sum(int m, int parity) {
    BundleClass acc = chern_of_twisted_forms(m, parity, parity);
    for (int p = parity + 2; p <= m; p += 2)
        acc = whitney_sum(acc, chern_of_twisted_forms(m, p, p));
    return acc;
}

PrimePair compute_prime_pair(int n) {
    const int m = n / 2;
    auto ring = Ring::get(RingDescriptor::quadric(n));
    const int r = spinor_rank(n);

    CohClass cs(ring), css(ring);
    cs.set_coefficient(0, 1);
    css.set_coefficient(0, 1);

    if (n == 2) {
        // S'(1) = O(1) box O, fixed by the base convention
        cs.set_coefficient(ring->middle_lp(), -1);
        css.set_coefficient(ring->middle_l(), -1);
        return {cs, css};
    }

    BundleClass even_sum = forms_parity_sum(m, 0);
    BundleClass odd_sum = forms_parity_sum(m, 1);
    if (even_sum.rank != r || odd_sum.rank != r)
        throw std::logic_error("restriction rank bookkeeping failed");

    auto pring = even_sum.ring;
    auto tpow = [&](int e) { return pring->monomial_index({e}); };

    // S' restricts to the odd-twist sum on the family of l and to the
    // even-twist sum on the other; both must report the same c_i below
    // the middle.
    for (int i = 1; i < m; ++i) {
        const Int& ge = even_sum.chern.coefficient(tpow(i));
        const Int& go = odd_sum.chern.coefficient(tpow(i));
        if (ge != go)
            throw std::logic_error("family consistency mismatch below the middle");
        cs.set_coefficient(i, ge);
        css.set_coefficient(i, ge);
    }
    const Int xe = even_sum.chern.coefficient(tpow(m));
    const Int xo = odd_sum.chern.coefficient(tpow(m));
    // Invert the middle restriction: on its own family l pulls back to t^m
    // when m is even and to 0 when m is odd.
    Int alpha, beta;
    if (m % 2 == 0) {
        alpha = xo;
        beta = xe;
    } else {
        alpha = xe;
        beta = xo;
    }
    cs.set_coefficient(ring->middle_l(), alpha);
    cs.set_coefficient(ring->middle_lp(), beta);
    css.set_coefficient(ring->middle_l(), beta);
    css.set_coefficient(ring->middle_lp(), alpha);

    // c_j for j > m from the degree-j part of c(S') c(S''(1)) = 1, where the
    // unknown c_j enters with coefficient 2.
    CohClass h = hyperplane(ring);
    for (int j = m + 1; j <= n; ++j) {
        BundleClass ss_twisted = twist(BundleClass(ring, r, css), h);
        CohClass known = mul(cs, ss_twisted.chern).component(j);
        CohClass cj = -halve_exact(known);
        if (!cj.is_homogeneous(j))
            throw std::logic_error("spinor recursion produced mixed degrees");
        cs.set_coefficient(j, cj.coefficient(j));
        css.set_coefficient(j, cj.coefficient(j));
    }

    // construction-time closure: both sequence identities must hold exactly
    BundleClass bs(ring, r, cs), bss(ring, r, css);
    if (!(mul(bs.chern, twist(bss, h).chern) == CohClass::unit(ring)))
        throw std::logic_error("spinor closure identity failed (S' side)");
    if (!(mul(bss.chern, twist(bs, h).chern) == CohClass::unit(ring)))
        throw std::logic_error("spinor closure identity failed (S'' side)");
    return {cs, css};
}

const PrimePair& prime_pair(int n) {
    static std::mutex mu;
    static std::map<int, PrimePair> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, compute_prime_pair(n)).first;
    return it->second;
}

} // namespace

BundleClass spinor_chern(int n, SpinorKind kind) {
    if (n < 2 || n > engine_config().n_max)
        throw std::invalid_argument("quadric dimension out of the supported range");
    const bool even = (n % 2 == 0);
    if (even && kind.base == SpinorBase::s)
        throw std::invalid_argument("S lives on odd-dimensional quadrics");
    if (!even && kind.base != SpinorBase::s)
        throw std::invalid_argument("S'/S'' live on even-dimensional quadrics");

    BundleClass out;
    if (even) {
        const auto& pp = prime_pair(n);
        auto ring = Ring::get(RingDescriptor::quadric(n));
        out = BundleClass(ring, spinor_rank(n),
                          kind.base == SpinorBase::sprime ? pp.sprime : pp.sdoubleprime);
    } else {
        const auto& pp = prime_pair(n + 1);
        auto ring = Ring::get(RingDescriptor::quadric(n));
        CohClass c = restrict_to_hyperplane_quadric(pp.sprime);
        out = BundleClass(ring, spinor_rank(n), std::move(c));
    }
    if (kind.ulrich_twist)
        out = twist(out, hyperplane(out.ring));
    return out;
}

std::vector<std::pair<int, int>> spinor_nu_table(int lo, int hi) {
    if (lo < 2 || hi > engine_config().n_max || lo > hi)
        throw std::invalid_argument("nu table range out of bounds");
    std::vector<std::pair<int, int>> rows;
    for (int n = lo; n <= hi; ++n) {
        SpinorKind k;
        k.base = (n % 2 == 0) ? SpinorBase::sprime : SpinorBase::s;
        k.ulrich_twist = true;
        rows.emplace_back(n, nu(spinor_chern(n, k)));
    }
    return rows;
}

VerificationReport spinor_identities_check(int n) {
    if (n < 2 || n % 2 != 0 || n > engine_config().n_max)
        throw std::invalid_argument("identities check needs an even n in range");
    VerificationReport rep;
    rep.suite = "spinor-identities-q" + std::to_string(n);
    const int m = n / 2;
    auto ring = Ring::get(RingDescriptor::quadric(n));
    CohClass h = hyperplane(ring);
    BundleClass sp = spinor_chern(n, {SpinorBase::sprime, false});
    BundleClass sdp = spinor_chern(n, {SpinorBase::sdoubleprime, false});

    rep.add_flag("c(S')*c(S''(1)) == 1", Provenance::paper,
                 mul(sp.chern, twist(sdp, h).chern) == CohClass::unit(ring));
    rep.add_flag("c(S'')*c(S'(1)) == 1", Provenance::paper,
                 mul(sdp.chern, twist(sp, h).chern) == CohClass::unit(ring));
    // dual pairing flips between S'self and S'' with the parity of m
    if (m % 2 == 1) {
        rep.add_flag("c((S')^*) == c(S''(1))", Provenance::paper,
                     dual(sp).chern == twist(sdp, h).chern);
        rep.add_flag("c(S')*c((S')^*) == 1", Provenance::paper,
                     mul(sp.chern, dual(sp).chern) == CohClass::unit(ring));
    } else {
        rep.add_flag("c((S')^*) == c(S'(1))", Provenance::derived,
                     dual(sp).chern == twist(sp, h).chern);
        rep.add_flag("c((S'')^*) == c(S''(1))", Provenance::derived,
                     dual(sdp).chern == twist(sdp, h).chern);
    }
    bool off_middle_equal = true;
    for (int i = 0; i < sp.chern.size(); ++i)
        if (ring->codegree(i) != m && sp.chern.coefficient(i) != sdp.chern.coefficient(i))
            off_middle_equal = false;
    rep.add_flag("c_i(S') == c_i(S'') off the middle", Provenance::paper, off_middle_equal);
    return rep;
}

} // namespace ulrich
