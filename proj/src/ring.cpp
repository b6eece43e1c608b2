#include "ulrich/ring.hpp"

#include "ulrich/config.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ulrich {

EngineConfig& engine_config() {
    static EngineConfig cfg;
    return cfg;
}

RingDescriptor RingDescriptor::quadric(int n) {
    if (n < 2)
        throw std::invalid_argument("quadric dimension must be >= 2");
    RingDescriptor d;
    d.kind = RingKind::quadric;
    d.quadric_dim = n;
    return d;
}

RingDescriptor RingDescriptor::multiprojective(std::vector<int> dims) {
    if (dims.empty())
        throw std::invalid_argument("product ring needs at least one factor");
    for (int a : dims)
        if (a < 1)
            throw std::invalid_argument("factor dimensions must be >= 1");
    RingDescriptor d;
    d.kind = RingKind::multiprojective;
    d.factor_dims = std::move(dims);
    return d;
}

int RingDescriptor::total_dimension() const {
    if (kind == RingKind::quadric)
        return quadric_dim;
    return std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
}

std::string RingDescriptor::to_string() const {
    if (kind == RingKind::quadric)
        return "Q" + std::to_string(quadric_dim);
    std::string s = "P";
    for (size_t i = 0; i < factor_dims.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(factor_dims[i]);
    }
    return s;
}

Ring::Ring(RingDescriptor d) : desc_(std::move(d)) {
    dim_ = desc_.total_dimension();
    if (dim_ > engine_config().n_max)
        throw std::invalid_argument("ring dimension exceeds configured n_max");
    if (desc_.kind == RingKind::quadric) {
        const int n = desc_.quadric_dim;
        m_ = (n + 1) / 2;
        for (int i = 0; i <= n; ++i) {
            codegree_.push_back(i);
            key_.push_back("b" + std::to_string(i));
        }
        if (n % 2 == 0) {
            mid_l_ = m_;
            mid_lp_ = n + 1;
            codegree_.push_back(m_);
            key_.push_back("bp" + std::to_string(m_));
        }
        top_ = n;
    } else {
        const auto& a = desc_.factor_dims;
        const int k = static_cast<int>(a.size());
        strides_.assign(k, 1);
        for (int f = k - 2; f >= 0; --f)
            strides_[f] = strides_[f + 1] * (a[f + 1] + 1);
        long size = static_cast<long>(strides_[0]) * (a[0] + 1);
        if (size > 1 << 20)
            throw std::invalid_argument("product ring basis too large");
        for (long idx = 0; idx < size; ++idx) {
            auto e = monomial_exponents(static_cast<int>(idx));
            codegree_.push_back(std::accumulate(e.begin(), e.end(), 0));
            std::string key;
            for (int f = 0; f < k; ++f) {
                if (f) key += "*";
                key += "t" + std::to_string(f + 1) + "^" + std::to_string(e[f]);
            }
            key_.push_back(key);
        }
        std::vector<int> full(a.begin(), a.end());
        top_ = monomial_index(full);
    }
    emit_order_.resize(basis_size());
    std::iota(emit_order_.begin(), emit_order_.end(), 0);
    std::stable_sort(emit_order_.begin(), emit_order_.end(),
                     [&](int x, int y) { return codegree_[x] < codegree_[y]; });
}

std::shared_ptr<const Ring> Ring::get(const RingDescriptor& d) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const Ring>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = d.to_string();
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto r = std::shared_ptr<const Ring>(new Ring(d));
    cache.emplace(std::move(key), r);
    return r;
}

int Ring::index_of_key(const std::string& key) const {
    for (int i = 0; i < basis_size(); ++i)
        if (key_[i] == key)
            return i;
    return -1;
}

int Ring::monomial_index(const std::vector<int>& expo) const {
    const auto& a = desc_.factor_dims;
    if (expo.size() != a.size())
        throw std::invalid_argument("exponent arity mismatch");
    int idx = 0;
    for (size_t f = 0; f < a.size(); ++f) {
        if (expo[f] < 0 || expo[f] > a[f])
            throw std::invalid_argument("exponent out of range");
        idx += expo[f] * strides_[f];
    }
    return idx;
}

std::vector<int> Ring::monomial_exponents(int idx) const {
    const auto& a = desc_.factor_dims;
    std::vector<int> e(a.size());
    for (size_t f = 0; f < a.size(); ++f) {
        e[f] = idx / strides_[f];
        idx %= strides_[f];
    }
    return e;
}

std::vector<std::pair<int, long>> Ring::basis_product(int i, int j) const {
    std::vector<std::pair<int, long>> out;
    if (desc_.kind == RingKind::multiprojective) {
        auto ei = monomial_exponents(i);
        auto ej = monomial_exponents(j);
        for (size_t f = 0; f < ei.size(); ++f) {
            ei[f] += ej[f];
            if (ei[f] > desc_.factor_dims[f])
                return out; // truncated by t^(a+1) = 0
        }
        out.emplace_back(monomial_index(ei), 1);
        return out;
    }

    const int n = desc_.quadric_dim;
    const int m = m_;
    const bool even = (n % 2 == 0);
    const bool mid_square_is_top = even && (m % 2 == 0);

    auto is_mid = [&](int idx) { return even && (idx == mid_l_ || idx == mid_lp_); };
    auto deg = [&](int idx) { return codegree_[idx]; };

    if (is_mid(i) && !is_mid(j))
        std::swap(i, j);

    if (is_mid(i) && is_mid(j)) {
        const bool same = (i == j);
        if (mid_square_is_top) {
            if (same) out.emplace_back(top_, 1);
        } else {
            if (!same) out.emplace_back(top_, 1);
        }
        return out;
    }

    if (is_mid(j)) {
        // b_i * middle, i != m
        const int di = deg(i);
        if (di == 0) {
            out.emplace_back(j, 1);
        } else if (di < m) {
            // h^i * l = b_{m+i}
            out.emplace_back(m + di, 1);
        }
        // deg > m: codegree overflow, zero
        return out;
    }

    const int s = deg(i) + deg(j);
    if (s > n)
        return out;
    const bool ilow = deg(i) < m;
    const bool jlow = deg(j) < m;
    if (ilow && jlow) {
        if (s < m) {
            out.emplace_back(s, 1);
        } else if (even && s == m) {
            out.emplace_back(mid_l_, 1);
            out.emplace_back(mid_lp_, 1);
        } else {
            out.emplace_back(s, 2); // h^s = 2 b_s
        }
    } else if (ilow || jlow) {
        out.emplace_back(s, 1);
    }
    // high*high: codegree >= 2m > n for even, = n+1 for odd; s > n already
    return out;
}

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {
    if (ring_)
        c_.assign(ring_->basis_size(), Int(0));
}

CohClass CohClass::unit(RingPtr ring) {
    CohClass x(std::move(ring));
    x.c_[0] = 1;
    return x;
}

CohClass CohClass::basis(RingPtr ring, int idx) {
    CohClass x(std::move(ring));
    x.c_.at(idx) = 1;
    return x;
}

bool CohClass::is_zero() const {
    for (const auto& v : c_)
        if (v != 0)
            return false;
    return true;
}

CohClass CohClass::component(int codegree) const {
    CohClass out(ring_);
    for (int i = 0; i < size(); ++i)
        if (ring_->codegree(i) == codegree)
            out.c_[i] = c_[i];
    return out;
}

int CohClass::max_nonzero_codegree() const {
    int best = -1;
    for (int i = 0; i < size(); ++i)
        if (c_[i] != 0)
            best = std::max(best, ring_->codegree(i));
    return best;
}

bool CohClass::is_homogeneous(int codegree) const {
    for (int i = 0; i < size(); ++i)
        if (c_[i] != 0 && ring_->codegree(i) != codegree)
            return false;
    return true;
}

static void check_same_ring(const CohClass& a, const CohClass& b) {
    if (!a.ring() || !b.ring() || !(a.ring()->descriptor() == b.ring()->descriptor()))
        throw std::invalid_argument("ring descriptor mismatch");
}

CohClass CohClass::operator+(const CohClass& o) const {
    check_same_ring(*this, o);
    CohClass out(ring_);
    for (int i = 0; i < size(); ++i)
        out.c_[i] = c_[i] + o.c_[i];
    return out;
}

CohClass CohClass::operator-(const CohClass& o) const {
    check_same_ring(*this, o);
    CohClass out(ring_);
    for (int i = 0; i < size(); ++i)
        out.c_[i] = c_[i] - o.c_[i];
    return out;
}

CohClass CohClass::operator-() const {
    CohClass out(ring_);
    for (int i = 0; i < size(); ++i)
        out.c_[i] = -c_[i];
    return out;
}

CohClass CohClass::operator*(const Int& s) const {
    CohClass out(ring_);
    for (int i = 0; i < size(); ++i)
        out.c_[i] = c_[i] * s;
    return out;
}

bool CohClass::operator==(const CohClass& o) const {
    if (!ring_ || !o.ring_)
        return !ring_ && !o.ring_;
    if (!(ring_->descriptor() == o.ring_->descriptor()))
        return false;
    return c_ == o.c_;
}

CohClass mul(const CohClass& x, const CohClass& y) {
    check_same_ring(x, y);
    const auto& ring = x.ring();
    CohClass out(ring);
    for (int i = 0; i < x.size(); ++i) {
        if (x.coefficient(i) == 0)
            continue;
        for (int j = 0; j < y.size(); ++j) {
            if (y.coefficient(j) == 0)
                continue;
            for (const auto& [idx, f] : ring->basis_product(i, j))
                out.set_coefficient(idx, out.coefficient(idx) +
                                              x.coefficient(i) * y.coefficient(j) * f);
        }
    }
    return out;
}

CohClass pow(const CohClass& x, int e) {
    if (e < 0)
        throw std::invalid_argument("negative power");
    CohClass acc = CohClass::unit(x.ring());
    CohClass base = x;
    while (e > 0) {
        if (e & 1)
            acc = mul(acc, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return acc;
}

Int integrate(const CohClass& x) {
    return x.coefficient(x.ring()->top_index());
}

CohClass hyperplane(const RingPtr& ring) {
    CohClass h(ring);
    if (ring->is_quadric()) {
        if (ring->descriptor().quadric_dim == 2) {
            h.set_coefficient(ring->middle_l(), 1);
            h.set_coefficient(ring->middle_lp(), 1);
        } else {
            h.set_coefficient(1, 1);
        }
    } else {
        const auto& dims = ring->descriptor().factor_dims;
        for (size_t f = 0; f < dims.size(); ++f) {
            std::vector<int> e(dims.size(), 0);
            e[f] = 1;
            h.set_coefficient(ring->monomial_index(e), 1);
        }
    }
    return h;
}

CohClass restrict_to_linear(PlaneFamily family, const CohClass& x) {
    const auto& src = x.ring();
    if (!src->is_quadric() || src->descriptor().quadric_dim % 2 != 0)
        throw std::invalid_argument("restriction to m-planes needs an even quadric");
    const int m = src->half_dim();
    auto dst = Ring::get(RingDescriptor::multiprojective({m}));
    CohClass out(dst);
    const bool m_even = (m % 2 == 0);
    auto t_power = [&](int e) { return dst->monomial_index({e}); };
    for (int i = 0; i < x.size(); ++i) {
        const Int& v = x.coefficient(i);
        if (v == 0)
            continue;
        if (i == src->middle_l()) {
            const bool hits = (m_even == (family == PlaneFamily::l));
            if (hits)
                out.set_coefficient(t_power(m), out.coefficient(t_power(m)) + v);
        } else if (i == src->middle_lp()) {
            const bool hits = (m_even == (family == PlaneFamily::lp));
            if (hits)
                out.set_coefficient(t_power(m), out.coefficient(t_power(m)) + v);
        } else if (src->codegree(i) < m) {
            out.set_coefficient(t_power(src->codegree(i)),
                                out.coefficient(t_power(src->codegree(i))) + v);
        }
        // codegree > m: dies on P^m
    }
    return out;
}

CohClass restrict_to_hyperplane_quadric(const CohClass& x) {
    const auto& src = x.ring();
    if (!src->is_quadric() || src->descriptor().quadric_dim % 2 != 0)
        throw std::invalid_argument("hyperplane-quadric restriction needs an even source");
    const int n = src->descriptor().quadric_dim;
    const int m = src->half_dim();
    auto dst = Ring::get(RingDescriptor::quadric(n - 1));
    CohClass out(dst);
    for (int i = 0; i < x.size(); ++i) {
        const Int& v = x.coefficient(i);
        if (v == 0)
            continue;
        int target;
        if (i == src->middle_l() || i == src->middle_lp())
            target = m;
        else if (src->codegree(i) <= n - 1)
            target = src->codegree(i);
        else
            continue; // top class dies
        out.set_coefficient(target, out.coefficient(target) + v);
    }
    return out;
}

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

std::string to_pretty_string(const CohClass& x) {
    if (x.is_zero())
        return "0";
    std::string out;
    for (int idx : x.ring()->emission_order()) {
        const Int& v = x.coefficient(idx);
        if (v == 0)
            continue;
        if (out.empty())
            out += (v < 0 ? "-" : "");
        else
            out += (v < 0 ? " - " : " + ");
        Int a = abs(v);
        const std::string& key = x.ring()->basis_key(idx);
        if (idx == 0)
            out += a.str();
        else if (a == 1)
            out += key;
        else
            out += a.str() + "*" + key;
    }
    return out;
}

} // namespace ulrich
