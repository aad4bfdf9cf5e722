// Series/product primitives: q-Pochhammer products with certified tails,
// partition numbers, and the exact rational layer for the harmonic-number
// generating functions.

#include "qtheta/series.hpp"

#include <cmath>
#include <cstdlib>

#include "qtheta/errors.hpp"

namespace qtheta {

double q_pochhammer_inf(double a, double q, const TruncationPolicy& policy) {
    policy.validate();
    if (!(std::abs(q) < 1.0)) throw DomainError("q_pochhammer_inf: |q| must be < 1");
    if (!std::isfinite(a)) throw DomainError("q_pochhammer_inf: a must be finite");
    if (a == 0.0) return 1.0;

    const double abs_q = std::abs(q);
    double prod = 1.0;
    double aq = a;  // a q^k
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        prod *= (1.0 - aq);
        const double aq_next = aq * q;
        const double m = std::abs(aq_next);
        if (m < 1.0) {
            // |sum_{j>k} log(1 - a q^j)| <= sum_{j>k} |a q^j| / (1 - |a q^{k+1}|)
            const double tail = m / ((1.0 - abs_q) * (1.0 - m));
            if (tail < policy.term_eps) return prod;
        }
        aq = aq_next;
    }
    throw ConvergenceError("q_pochhammer_inf: max_terms reached before tail certified");
}

double log_q_pochhammer_inf(double a, double q, const TruncationPolicy& policy) {
    policy.validate();
    if (!(q > 0.0 && q < 1.0)) throw DomainError("log_q_pochhammer_inf: q must lie in (0,1)");
    if (!(a >= 0.0 && a < 1.0)) throw DomainError("log_q_pochhammer_inf: a must lie in [0,1)");
    if (a == 0.0) return 0.0;

    double sum = 0.0;
    double aq = a;
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        sum += std::log1p(-aq);
        const double aq_next = aq * q;
        const double tail = aq_next / ((1.0 - q) * (1.0 - aq_next));
        if (tail < policy.term_eps) return sum;
        aq = aq_next;
    }
    throw ConvergenceError("log_q_pochhammer_inf: max_terms reached before tail certified");
}

PartitionTable partition_numbers(std::size_t n_max) {
    PartitionTable table;
    table.values.resize(n_max + 1);
    table.values[0] = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt acc = 0;
        for (std::size_t k = 1;; ++k) {
            const std::size_t g1 = k * (3 * k - 1) / 2;  // generalized pentagonal numbers
            const std::size_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const bool plus = (k % 2 == 1);
            if (plus)
                acc += table.values[n - g1];
            else
                acc -= table.values[n - g1];
            if (g2 <= n) {
                if (plus)
                    acc += table.values[n - g2];
                else
                    acc -= table.values[n - g2];
            }
        }
        table.values[n] = acc;
    }
    return table;
}

double partition_gf(double p, std::size_t n_max, const TruncationPolicy& policy) {
    policy.validate();
    if (!(p > 0.0 && p < 1.0)) throw DomainError("partition_gf: p must lie in (0,1)");

    // Grow the table geometrically as the certificate demands.
    std::size_t capacity = 64;
    PartitionTable table = partition_numbers(std::min(capacity, n_max + 1));

    double sum = 0.0;
    double comp = 0.0;  // Kahan compensation
    double p_pow = 1.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n + 1 >= table.values.size()) {
            capacity = std::min(2 * table.values.size(), n_max + 2);
            table = partition_numbers(capacity);
        }
        const double term = table.values[n].convert_to<double>() * p_pow;
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        p_pow *= p;

        // P is log-concave for n >= 26, so the current ratio P(n+1)/P(n)
        // dominates every later one; with r*p < 1 the tail is geometric.
        if (n >= 26) {
            const double r =
                Rational(table.values[n + 1], table.values[n]).convert_to<double>() *
                (1.0 + 1e-12);
            if (r * p < 1.0) {
                const double next = table.values[n + 1].convert_to<double>() * p_pow;
                const double tail = next / (1.0 - r * p);
                if (tail < policy.term_eps) return sum;
            }
        }
    }
    throw ConvergenceError("partition_gf: tail not certified within n_max terms");
}

double partition_gf(double p, const TruncationPolicy& policy) {
    return partition_gf(p, policy.max_terms, policy);
}

Rational harmonic(unsigned n) {
    Rational h = 0;
    for (unsigned k = 1; k <= n; ++k) h += Rational(1, k);
    return h;
}

Rational harmonic2(unsigned n) {
    Rational h = 0;
    for (unsigned k = 1; k <= n; ++k) h += Rational(1, BigInt(k) * k);
    return h;
}

namespace {

using Series = std::vector<Rational>;

// coefficients of log(1-z): -z^n/n
Series log1m_series(std::size_t order) {
    Series s(order + 1);
    for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(-1, n);
    return s;
}

// coefficients of Li2(z): z^n/n^2
Series dilog_series(std::size_t order) {
    Series s(order + 1);
    for (std::size_t n = 1; n <= order; ++n) s[n] = Rational(1, BigInt(n) * n);
    return s;
}

Series cauchy_square(const Series& f) {
    Series s(f.size());
    for (std::size_t n = 0; n < f.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= n; ++k) acc += f[k] * f[n - k];
        s[n] = acc;
    }
    return s;
}

// division by (1-z) is prefix summation
Series divide_by_1mz(const Series& f) {
    Series s(f.size());
    Rational acc = 0;
    for (std::size_t n = 0; n < f.size(); ++n) {
        acc += f[n];
        s[n] = acc;
    }
    return s;
}

Series add(const Series& a, const Series& b) {
    Series s(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) s[n] = a[n] + b[n];
    return s;
}

Series scale(Series f, const Rational& c) {
    for (auto& x : f) x *= c;
    return f;
}

}  // namespace

RationalCoefficientList genfunc_coeffs_closed(GenFuncKind kind, std::size_t order) {
    const Series logs = log1m_series(order);
    RationalCoefficientList out;
    switch (kind) {
        case GenFuncKind::Hn:
            out.coeffs = divide_by_1mz(logs);
            break;
        case GenFuncKind::HnSq:
            out.coeffs = divide_by_1mz(add(dilog_series(order), cauchy_square(logs)));
            break;
        case GenFuncKind::Hn2:
            out.coeffs = divide_by_1mz(dilog_series(order));
            break;
        case GenFuncKind::HnOverN:
            out.coeffs = add(dilog_series(order), scale(cauchy_square(logs), Rational(1, 2)));
            break;
    }
    return out;
}

const char* genfunc_kind_name(GenFuncKind kind) {
    switch (kind) {
        case GenFuncKind::Hn: return "hn";
        case GenFuncKind::HnSq: return "hn_sq";
        case GenFuncKind::Hn2: return "hn2";
        case GenFuncKind::HnOverN: return "hn_over_n";
    }
    std::abort();
}

CheckReport genfunc_identity_check(GenFuncKind kind, std::size_t order) {
    const RationalCoefficientList closed = genfunc_coeffs_closed(kind, order);

    std::size_t mismatches = 0;
    Rational h = 0, h2 = 0;
    Rational last_direct = 0;
    for (std::size_t n = 0; n <= order; ++n) {
        if (n >= 1) {
            h += Rational(1, n);
            h2 += Rational(1, BigInt(n) * n);
        }
        Rational direct;
        switch (kind) {
            case GenFuncKind::Hn: direct = -h; break;
            case GenFuncKind::HnSq: direct = h * h; break;
            case GenFuncKind::Hn2: direct = h2; break;
            case GenFuncKind::HnOverN: direct = (n == 0) ? Rational(0) : h / int(n); break;
        }
        if (closed.coeffs[n] != direct) ++mismatches;
        if (n == order) last_direct = direct;
    }

    const std::string id = std::string("genfunc_") + genfunc_kind_name(kind);
    CheckReport report = make_report(
        id, {{"order", double(order)}},
        closed.coeffs[order].convert_to<double>(), last_direct.convert_to<double>(), 0.0,
        "exact rational comparison, coefficients 0.." + std::to_string(order));
    report.abs_err = double(mismatches);  // exact: any mismatch fails
    report.rel_err = double(mismatches);
    report.pass = (mismatches == 0);
    return report;
}

}  // namespace qtheta
