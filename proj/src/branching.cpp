#include "loopslice/branching.hpp"

#include <algorithm>
#include <functional>

#include "loopslice/errors.hpp"

namespace loopslice {

namespace {

bool weakly_decreasing(const Weight& w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

std::vector<std::string> x_vars(int rank) {
    std::vector<std::string> v;
    for (int i = 1; i <= rank; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

// Characters of partitions (nonnegative weights) by the interlacing
// recursion s_lambda(x_1..x_r) = sum_mu s_mu(x_1..x_{r-1}) x_r^{|l|-|mu|}.
MultiPoly schur_partition(const Weight& lambda, int rank, const std::vector<std::string>& vars) {
    if (rank == 0) return MultiPoly::constant(vars, Rational(1));
    if (rank == 1) {
        MultiPoly::Expo e(vars.size(), 0);
        e[0] = static_cast<int>(lambda.empty() ? 0 : lambda[0]);
        return MultiPoly::monomial(vars, e, Rational(1));
    }
    MultiPoly out(vars);
    long total = 0;
    for (long li : lambda) total += li;
    // Enumerate interlacing mu: lambda_{i+1} <= mu_i <= lambda_i.
    Weight padded = lambda;
    padded.resize(static_cast<size_t>(rank), 0);
    Weight mu(static_cast<size_t>(rank - 1));
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == mu.size()) {
            long msum = 0;
            for (long v : mu) msum += v;
            MultiPoly sub = schur_partition(mu, rank - 1, vars);
            MultiPoly::Expo e(vars.size(), 0);
            e[static_cast<size_t>(rank - 1)] = static_cast<int>(total - msum);
            out = out + sub * MultiPoly::monomial(vars, e, Rational(1));
            return;
        }
        for (long v = padded[i + 1]; v <= padded[i]; ++v) {
            mu[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace

MultiPoly gl_character(const Weight& lambda, int rank) {
    if (static_cast<int>(lambda.size()) > rank)
        throw precondition_error("weight longer than the rank");
    if (!weakly_decreasing(lambda))
        throw precondition_error("weight must be weakly decreasing (dominant)");
    Weight padded = lambda;
    padded.resize(static_cast<size_t>(rank), 0);
    const auto vars = x_vars(rank);
    const long shift = std::min<long>(0, padded.empty() ? 0 : padded.back());
    Weight part = padded;
    for (auto& v : part) v -= shift;
    MultiPoly chi = schur_partition(part, rank, vars);
    if (shift != 0) {
        MultiPoly::Expo det(vars.size(), static_cast<int>(shift));
        chi = chi * MultiPoly::monomial(vars, det, Rational(1));
    }
    return chi;
}

GradedMultiplicity graded_restriction(const Weight& lambda, int m, int n) {
    if (n >= m) throw precondition_error("graded restriction requires n < m");
    if (n < 1) throw precondition_error("graded restriction requires n >= 1");
    const MultiPoly chi = gl_character(lambda, m);

    // Target ring: x1..xn and q; the sl2 weights of the complementary block
    // descend m-n-1, m-n-3, ..., 1-(m-n).
    std::vector<std::string> tvars = x_vars(n);
    tvars.push_back("q");
    std::map<std::string, MultiPoly> images;
    for (int i = 1; i <= n; ++i)
        images.emplace("x" + std::to_string(i), MultiPoly::variable(tvars, "x" + std::to_string(i)));
    for (int j = 1; j <= m - n; ++j) {
        MultiPoly::Expo e(tvars.size(), 0);
        e.back() = (m - n - 1) - 2 * (j - 1);
        images.emplace("x" + std::to_string(n + j), MultiPoly::monomial(tvars, e, Rational(1)));
    }
    MultiPoly spec = chi.substitute_monomials(images, tvars);

    GradedMultiplicity out;
    while (!spec.is_zero()) {
        const auto [lead, lead_c] = spec.leading_term();
        (void)lead_c;
        Weight mu(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) mu[static_cast<size_t>(i)] = lead[static_cast<size_t>(i)];
        if (!weakly_decreasing(mu))
            throw internal_error("peeling hit a non-dominant leading monomial");
        // Collect the full q-coefficient of the monomial x^mu.
        QLaurent coeff;
        for (const auto& [e, c] : spec.terms()) {
            bool match = true;
            for (int i = 0; i < n; ++i)
                if (e[static_cast<size_t>(i)] != lead[static_cast<size_t>(i)]) match = false;
            if (!match) continue;
            if (!c.is_integer())
                throw internal_error("peeling hit a non-integer multiplicity");
            coeff[e.back()] += c.num().get_si();
        }
        for (const auto& [qe, qc] : coeff)
            if (qc < 0) throw internal_error("peeling produced a negative coefficient");

        MultiPoly smu = gl_character(mu, n);
        std::map<std::string, MultiPoly> lift;
        for (int i = 1; i <= n; ++i)
            lift.emplace("x" + std::to_string(i),
                         MultiPoly::variable(tvars, "x" + std::to_string(i)));
        MultiPoly smu_t = smu.substitute_monomials(lift, tvars);
        MultiPoly qpoly(tvars);
        for (const auto& [qe, qc] : coeff) {
            MultiPoly::Expo e(tvars.size(), 0);
            e.back() = static_cast<int>(qe);
            qpoly = qpoly + MultiPoly::monomial(tvars, e, Rational(qc));
        }
        spec = spec - smu_t * qpoly;
        for (const auto& [qe, qc] : coeff) {
            if (qc == 0) continue;
            out[mu][qe] += qc;
        }
    }
    return out;
}

std::map<Weight, long> classical_multiplicities(const GradedMultiplicity& gm) {
    std::map<Weight, long> out;
    for (const auto& [w, ql] : gm) {
        long t = 0;
        for (const auto& [e, c] : ql) t += c;
        if (t != 0) out[w] = t;
    }
    return out;
}

namespace {

// Weight multiset of the GL_rank irreducible by explicit Gelfand-Tsetlin
// pattern enumeration.
std::map<Weight, long> gt_weights(const Weight& lambda, int rank) {
    Weight top = lambda;
    top.resize(static_cast<size_t>(rank), 0);
    std::map<Weight, long> out;
    // rows[r] has length rank - r; weight_i = |row_{rank-i}| - |row_{rank-i+1}|.
    std::vector<Weight> rows{top};
    std::function<void()> rec = [&]() {
        const Weight prev = rows.back(); // by value: rows reallocates below
        if (prev.size() == 1) {
            Weight wt(static_cast<size_t>(rank), 0);
            std::vector<long> sums;
            for (const auto& r : rows) {
                long s = 0;
                for (long v : r) s += v;
                sums.push_back(s);
            }
            // sums[k] is the sum of the row of length rank - k.
            for (int i = 0; i < rank; ++i) {
                const long si = sums[static_cast<size_t>(rank - 1 - i)];
                const long sprev = i == 0 ? 0 : sums[static_cast<size_t>(rank - i)];
                wt[static_cast<size_t>(i)] = si - sprev;
            }
            out[wt] += 1;
            return;
        }
        Weight next(prev.size() - 1);
        std::function<void(size_t)> fill = [&](size_t i) {
            if (i == next.size()) {
                rows.push_back(next);
                rec();
                rows.pop_back();
                return;
            }
            for (long v = prev[i + 1]; v <= prev[i]; ++v) {
                next[i] = v;
                fill(i + 1);
            }
        };
        fill(0);
    };
    rec();
    return out;
}

} // namespace

std::map<Weight, long> branching_oracle(const Weight& lambda, int m, int n) {
    if (n >= m) throw precondition_error("branching oracle requires n < m");
    std::map<Weight, long> rest;
    for (const auto& [w, c] : gt_weights(lambda, m)) {
        Weight r(w.begin(), w.begin() + n);
        rest[r] += c;
    }
    std::map<Weight, long> mult;
    while (!rest.empty()) {
        // The lexicographically greatest weight present is a highest weight.
        auto it = std::prev(rest.end());
        const Weight hw = it->first;
        const long c = it->second;
        if (c < 0) throw internal_error("oracle stripped below zero");
        if (!weakly_decreasing(hw)) throw internal_error("oracle hit a non-dominant maximum");
        mult[hw] += c;
        for (const auto& [w, k] : gt_weights(hw, n)) {
            rest[w] -= c * k;
            if (rest[w] == 0) rest.erase(w);
        }
    }
    return mult;
}

} // namespace loopslice
