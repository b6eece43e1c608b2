#include "ulrich/bundle.hpp"

#include <stdexcept>

namespace ulrich {

BundleClass::BundleClass(RingPtr r, int rk, CohClass c)
    : ring(std::move(r)), rank(rk), chern(std::move(c)) {
    if (rank < 0)
        throw std::invalid_argument("negative rank");
    if (!(chern.ring()->descriptor() == ring->descriptor()))
        throw std::invalid_argument("chern class lives in a different ring");
    if (chern.coefficient(0) != 1)
        throw std::invalid_argument("total chern class must start with 1");
    const int bound = std::min(rank, ring->dimension());
    for (int i = 0; i < chern.size(); ++i)
        if (chern.coefficient(i) != 0 && ring->codegree(i) > bound)
            throw std::invalid_argument("chern class exceeds rank truncation");
}

BundleClass BundleClass::trivial(RingPtr r, int rk) {
    CohClass c = CohClass::unit(r);
    return BundleClass(std::move(r), rk, std::move(c));
}

BundleClass dual(const BundleClass& e) {
    CohClass c(e.ring);
    for (int i = 0; i < c.size(); ++i) {
        const Int& v = e.chern.coefficient(i);
        c.set_coefficient(i, (e.ring->codegree(i) % 2 == 0) ? v : -v);
    }
    return BundleClass(e.ring, e.rank, std::move(c));
}

BundleClass twist(const BundleClass& e, const CohClass& lambda) {
    if (!(lambda.ring()->descriptor() == e.ring->descriptor()))
        throw std::invalid_argument("twist class lives in a different ring");
    if (!lambda.is_homogeneous(1))
        throw std::invalid_argument("twist requires a pure codegree-1 class");
    const int dim = e.ring->dimension();
    const int kmax = std::min(e.rank, dim);
    std::vector<CohClass> lam_pow;
    lam_pow.push_back(CohClass::unit(e.ring));
    for (int j = 1; j <= kmax; ++j)
        lam_pow.push_back(mul(lam_pow.back(), lambda));

    CohClass out(e.ring);
    out.set_coefficient(0, 1);
    for (int k = 1; k <= kmax; ++k) {
        CohClass ck(e.ring);
        for (int i = 0; i <= k; ++i) {
            Int b = binomial(e.rank - i, k - i);
            if (b == 0)
                continue;
            ck = ck + mul(e.chern.component(i), lam_pow[k - i]) * b;
        }
        for (int idx = 0; idx < ck.size(); ++idx)
            if (e.ring->codegree(idx) == k)
                out.set_coefficient(idx, ck.coefficient(idx));
    }
    return BundleClass(e.ring, e.rank, std::move(out));
}

BundleClass whitney_sum(const BundleClass& e, const BundleClass& f) {
    if (!(e.ring->descriptor() == f.ring->descriptor()))
        throw std::invalid_argument("ring mismatch in direct sum");
    return BundleClass(e.ring, e.rank + f.rank, mul(e.chern, f.chern));
}

CohClass segre(const BundleClass& e) {
    const int dim = e.ring->dimension();
    CohClass s = CohClass::unit(e.ring);
    std::vector<CohClass> sk;
    sk.push_back(CohClass::unit(e.ring));
    for (int k = 1; k <= dim; ++k) {
        CohClass v(e.ring);
        for (int i = 1; i <= k; ++i)
            v = v - mul(e.chern.component(i), sk[k - i]);
        sk.push_back(v.component(k));
        s = s + sk.back();
    }
    return s;
}

CohClass segre_dual(const BundleClass& e, int i) {
    if (i < 0 || i > e.ring->dimension())
        throw std::invalid_argument("segre codegree out of range");
    CohClass si = segre(e).component(i);
    return (i % 2 == 0) ? si : -si;
}

int nu(const BundleClass& e) {
    int k = segre(e).max_nonzero_codegree();
    return e.rank - 1 + std::max(k, 0);
}

BignessWitness is_big(const BundleClass& e) {
    BignessWitness w;
    w.witness = integrate(segre_dual(e, e.ring->dimension()));
    w.big = w.witness > 0;
    return w;
}

SumCertificate sum_big_certificate(const BundleClass& e, const BundleClass& f) {
    if (!(e.ring->descriptor() == f.ring->descriptor()))
        throw std::invalid_argument("ring mismatch in sum certificate");
    const int n = e.ring->dimension();
    SumCertificate cert;
    CohClass se = segre(e), sf = segre(f);
    for (int i = 0; i <= n; ++i) {
        CohClass a = se.component(i);
        if (i % 2 == 1) a = -a;
        CohClass b = sf.component(n - i);
        if ((n - i) % 2 == 1) b = -b;
        Int t = integrate(mul(a, b));
        if (t < 0)
            throw std::logic_error("negative direct-sum certificate term");
        if (t > 0)
            cert.big = true;
        cert.terms.push_back(std::move(t));
    }
    return cert;
}

BundleClass chern_of_twisted_forms(int m, int p, int t) {
    if (m < 1)
        throw std::invalid_argument("projective space dimension must be >= 1");
    if (p < 0 || p > m)
        throw std::invalid_argument("form degree out of range");
    auto ring = Ring::get(RingDescriptor::multiprojective({m}));
    CohClass tc = hyperplane(ring);

    // W^p(p) along 0 -> W^p(p) -> Lambda^p V (x) O -> W^(p-1)(p) -> 0:
    // its total class is the inverse of c(W^(p-1)(p)).
    BundleClass wp = BundleClass::trivial(ring, 1); // W^0(0) = O
    for (int q = 1; q <= p; ++q) {
        BundleClass prev_twisted = twist(wp, tc); // W^(q-1)(q)
        // degreewise inversion of the total class
        CohClass inv = CohClass::unit(ring);
        std::vector<CohClass> ik;
        ik.push_back(CohClass::unit(ring));
        for (int k = 1; k <= m; ++k) {
            CohClass v(ring);
            for (int i = 1; i <= k; ++i)
                v = v - mul(prev_twisted.chern.component(i), ik[k - i]);
            ik.push_back(v.component(k));
            inv = inv + ik.back();
        }
        long rk = static_cast<long>(binomial(m, q).convert_to<long>());
        // rank truncation: components above the rank must already vanish
        for (int idx = 0; idx < inv.size(); ++idx)
            if (inv.coefficient(idx) != 0 && ring->codegree(idx) > rk)
                throw std::logic_error("form bundle class exceeds its rank");
        wp = BundleClass(ring, static_cast<int>(rk), std::move(inv));
    }
    return twist(wp, tc * Int(t - p));
}

} // namespace ulrich
