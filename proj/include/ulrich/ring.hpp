#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ulrich {

using Int = boost::multiprecision::cpp_int;

enum class RingKind { quadric, multiprojective };

// Identifies one of the two supported graded rings:
//   - H*(Q_n) for a smooth quadric of dimension n >= 2,
//   - H*(P^{a1} x ... x P^{ak}) for a product of projective spaces.
struct RingDescriptor {
    RingKind kind = RingKind::quadric;
    int quadric_dim = 0;          // n, quadric only
    std::vector<int> factor_dims; // a1..ak, multiprojective only

    static RingDescriptor quadric(int n);
    static RingDescriptor multiprojective(std::vector<int> dims);

    int total_dimension() const;
    bool operator==(const RingDescriptor&) const = default;
    std::string to_string() const;
};

// Integral basis of H*(Q_n), n = 2m or 2m-1, with deg Q_n = 2:
//   b_i = h^i for i < m,   h^i = 2*b_i for i > m (odd n: also h^m = 2*b_m),
// and for even n the middle codegree m is spanned by the two plane classes
//   l = b_m, l' = b'_m with h^m = l + l'.
// Middle products depend on m mod 2: l^2 = l'^2 = b_n, l*l' = 0 when m is
// even; l^2 = l'^2 = 0, l*l' = b_n when m is odd. Normalization: the
// integral of b_n is 1, so the integral of h^n is 2.
//
// For products, the basis is the monomials t1^e1...tk^ek with ei <= ai.
class Ring {
public:
    static std::shared_ptr<const Ring> get(const RingDescriptor& d);

    const RingDescriptor& descriptor() const { return desc_; }
    int dimension() const { return dim_; }
    int basis_size() const { return static_cast<int>(codegree_.size()); }
    int codegree(int idx) const { return codegree_[idx]; }
    const std::string& basis_key(int idx) const { return key_[idx]; }
    // -1 when the key names no basis element of this ring
    int index_of_key(const std::string& key) const;
    int top_index() const { return top_; }

    bool is_quadric() const { return desc_.kind == RingKind::quadric; }
    // quadric middle classes; -1 unless the quadric dimension is even
    int middle_l() const { return mid_l_; }
    int middle_lp() const { return mid_lp_; }
    int half_dim() const { return m_; } // m = ceil(n/2), quadric only

    // product of basis elements i, j as a sparse list of (index, coefficient)
    std::vector<std::pair<int, long>> basis_product(int i, int j) const;

    // multiprojective monomial <-> index
    int monomial_index(const std::vector<int>& expo) const;
    std::vector<int> monomial_exponents(int idx) const;

    // basis indices in emission order (codegree ascending, then key order)
    const std::vector<int>& emission_order() const { return emit_order_; }

private:
    explicit Ring(RingDescriptor d);

    RingDescriptor desc_;
    int dim_ = 0;
    int m_ = 0;                 // quadric: ceil(n/2)
    int top_ = 0;
    int mid_l_ = -1, mid_lp_ = -1;
    std::vector<int> codegree_;
    std::vector<std::string> key_;
    std::vector<int> strides_;  // multiprojective mixed radix
    std::vector<int> emit_order_;
};

using RingPtr = std::shared_ptr<const Ring>;

// A cohomology class with exact integer coefficients over the ring basis.
// Immutable in spirit: every operation returns a fresh value.
class CohClass {
public:
    CohClass() = default;
    explicit CohClass(RingPtr ring);

    static CohClass zero(RingPtr ring) { return CohClass(std::move(ring)); }
    static CohClass unit(RingPtr ring);
    static CohClass basis(RingPtr ring, int idx);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;
    const Int& coefficient(int idx) const { return c_[idx]; }
    void set_coefficient(int idx, Int v) { c_[idx] = std::move(v); }
    int size() const { return static_cast<int>(c_.size()); }

    CohClass component(int codegree) const; // homogeneous part
    int max_nonzero_codegree() const;       // -1 for the zero class
    bool is_homogeneous(int codegree) const;

    CohClass operator+(const CohClass& o) const;
    CohClass operator-(const CohClass& o) const;
    CohClass operator-() const;
    CohClass operator*(const Int& s) const;
    bool operator==(const CohClass& o) const;

private:
    RingPtr ring_;
    std::vector<Int> c_;
};

CohClass mul(const CohClass& x, const CohClass& y);
CohClass pow(const CohClass& x, int e);
Int integrate(const CohClass& x);

// h on Q_n (= l + l' when n = 2), t1+...+tk on a product
CohClass hyperplane(const RingPtr& ring);

enum class PlaneFamily { l, lp };

// Pullback to a maximal linear subspace P^m in one of the two families of
// m-planes of Q_{2m}. Which family kills which middle class depends on
// m mod 2; see the basis notes above.
CohClass restrict_to_linear(PlaneFamily family, const CohClass& x);

// Pullback under Q_{2m-1} in Q_{2m}: h^i -> h^i, so both middle classes
// map to b_m.
CohClass restrict_to_hyperplane_quadric(const CohClass& x);

Int binomial(long n, long k);

// "-244*b5 - 220*bp5" style rendering, basis keys in emission order
std::string to_pretty_string(const CohClass& x);

} // namespace ulrich
