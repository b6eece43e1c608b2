#include "ulrich/classifier.hpp"

#include "ulrich/config.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ulrich {

std::string UlrichModel::label() const {
    std::ostringstream os;
    if (n % 2 == 1) {
        os << "S^+" << a;
    } else {
        os << "S'^" << a << "+S''^" << b;
    }
    return os.str();
}

Json ClassificationRow::to_json() const {
    Json j;
    j["n"] = model.n;
    j["a"] = model.a;
    j["b"] = model.b;
    j["rank"] = rank;
    j["nu"] = nu;
    j["big"] = big;
    j["witness"] = Json::array();
    for (const auto& w : witness)
        j["witness"].push_back(int_to_json(w));
    return j;
}

static void validate_model(const UlrichModel& m) {
    if (m.a < 0 || m.b < 0 || m.a + m.b < 1)
        throw std::invalid_argument("model multiplicities must be nonnegative, not all zero");
    if (m.n % 2 == 1 && m.b != 0)
        throw std::invalid_argument("odd-dimensional quadrics carry a single spinor");
}

BundleClass model_class(const UlrichModel& m) {
    validate_model(m);
    auto ring = Ring::get(RingDescriptor::quadric(m.n));
    const int r = spinor_rank(m.n);
    CohClass total = CohClass::unit(ring);
    if (m.n % 2 == 1) {
        BundleClass s = spinor_chern(m.n, {SpinorBase::s, true});
        total = pow(s.chern, m.a);
    } else {
        BundleClass sp = spinor_chern(m.n, {SpinorBase::sprime, true});
        BundleClass sdp = spinor_chern(m.n, {SpinorBase::sdoubleprime, true});
        total = mul(pow(sp.chern, m.a), pow(sdp.chern, m.b));
    }
    return BundleClass(ring, (m.a + m.b) * r, std::move(total));
}

int nu_of_model(const UlrichModel& m) {
    return nu(model_class(m));
}

ClassificationRow evaluate_model(const UlrichModel& m) {
    ClassificationRow row;
    row.model = m;
    BundleClass e = model_class(m);
    row.rank = e.rank;
    row.nu = nu(e);
    BignessWitness w = is_big(e);
    row.big = w.big;
    if (m.is_single_spinor()) {
        row.witness.push_back(w.witness);
    } else {
        // split one spinor summand off and certify the sum
        UlrichModel head = m, tail = m;
        if (m.a >= 1) {
            head.a = 1; head.b = 0;
            tail.a = m.a - 1;
        } else {
            head.a = 0; head.b = 1;
            tail.b = m.b - 1;
        }
        SumCertificate cert = sum_big_certificate(model_class(head), model_class(tail));
        Int sum = 0;
        for (const auto& t : cert.terms)
            sum += t;
        if (sum != w.witness || cert.big != w.big)
            throw std::logic_error("certificate terms disagree with the top Segre witness");
        row.witness = std::move(cert.terms);
    }
    return row;
}

static std::vector<UlrichModel> enumerate_models(int n, int r_max) {
    const int r = spinor_rank(n);
    if (r_max < r)
        throw std::invalid_argument("r_max below the rank of one spinor");
    std::vector<UlrichModel> models;
    const int mult_max = r_max / r;
    if (n % 2 == 1) {
        for (int a = 1; a <= mult_max; ++a)
            models.push_back({n, a, 0});
    } else {
        for (int total = 1; total <= mult_max; ++total)
            for (int a = 0; a <= total; ++a)
                models.push_back({n, a, total - a});
    }
    return models; // already (total rank, lexicographic (a,b)) ordered
}

static void assert_downward_closed(const std::vector<ClassificationRow>& rows) {
    std::set<std::pair<int, int>> nonbig;
    for (const auto& row : rows)
        nonbig.insert({row.model.a, row.model.b});
    for (const auto& row : rows) {
        const int a = row.model.a, b = row.model.b;
        if (a + b < 2)
            continue;
        if (a >= 1 && a - 1 + b >= 1 && !nonbig.count({a - 1, b}))
            throw std::logic_error("non-big region is not downward-closed");
        if (b >= 1 && a + b - 1 >= 1 && !nonbig.count({a, b - 1}))
            throw std::logic_error("non-big region is not downward-closed");
    }
}

std::vector<ClassificationRow> classify_nonbig(int n, int r_max) {
    if (n < 2 || n > engine_config().n_max)
        throw std::invalid_argument("quadric dimension out of range");
    auto models = enumerate_models(n, r_max);
    std::vector<ClassificationRow> slots(models.size());

    spinor_chern(n, {n % 2 == 1 ? SpinorBase::s : SpinorBase::sprime, true}); // warm memo

#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(models.size()); ++i)
        slots[i] = evaluate_model(models[i]);

    std::vector<ClassificationRow> rows;
    for (auto& s : slots)
        if (!s.big)
            rows.push_back(std::move(s));
    assert_downward_closed(rows);
    return rows;
}

std::vector<ClassificationRow> classify_nonbig_serial(int n, int r_max) {
    if (n < 2 || n > engine_config().n_max)
        throw std::invalid_argument("quadric dimension out of range");
    auto models = enumerate_models(n, r_max);
    std::vector<ClassificationRow> rows;
    // once a model is big every componentwise-larger model is big; prune
    std::vector<std::pair<int, int>> big_minimal;
    for (const auto& m : models) {
        bool dominated = false;
        for (const auto& [ba, bb] : big_minimal)
            if (m.a >= ba && m.b >= bb) {
                dominated = true;
                break;
            }
        if (dominated)
            continue;
        ClassificationRow row = evaluate_model(m);
        if (row.big)
            big_minimal.emplace_back(m.a, m.b);
        else
            rows.push_back(std::move(row));
    }
    assert_downward_closed(rows);
    return rows;
}

long dim_lines_through_point_quadric(int n) {
    return n - 2;
}

Int trivial_summand_count_on_lines(int n) {
    return Int(1) << ((n - 3) / 2);
}

long dim_mplanes_through_point_even_quadric(int m) {
    return static_cast<long>(m) * (m - 1) / 2;
}

long dim_mplanes_through_point_line_grassmannian() {
    return 1;
}

bool line_criterion_forces_big(int n) {
    if (n < 3)
        throw std::invalid_argument("line criterion needs n >= 3");
    Int lhs = Int(dim_lines_through_point_quadric(n)) + trivial_summand_count_on_lines(n);
    Int rhs = Int(spinor_rank(n));
    return lhs < rhs;
}

VerificationReport theorem2_case_checks(int m_max) {
    if (m_max < 3)
        throw std::invalid_argument("case checks need m_max >= 3");
    VerificationReport rep;
    rep.suite = "theorem2-cases";
    for (int m = 2; m <= m_max; ++m) {
        Int planes = dim_mplanes_through_point_even_quadric(m);
        Int needed = (Int(1) << (m - 1)) - 1;
        const bool holds = planes >= needed;
        rep.add("quadric m=" + std::to_string(m) + ": m(m-1)/2 >= 2^(m-1)-1",
                Json(m == 2 || m == 3), Provenance::paper, Json(holds));
    }
    for (int m = 3; m <= m_max; ++m) {
        // degree of the Plucker-embedded line Grassmannian in P^(2d-1)
        Int d = 1;
        for (long i = 1; i <= 2L * m; ++i) d *= i;
        Int fm = 1, fm1 = 1;
        for (long i = 1; i <= m; ++i) fm *= i;
        for (long i = 1; i <= m + 1; ++i) fm1 *= i;
        d /= fm * fm1;
        const bool solves = (Int(m) + 1 == 2 * d - 1);
        rep.add("grassmannian m=" + std::to_string(m) + ": m+1 == 2d-1 has no solution",
                Json(true), Provenance::paper, Json(!solves));
    }
    return rep;
}

} // namespace ulrich
