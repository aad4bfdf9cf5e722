#ifndef QTHETA_CHECK_REPORT_HPP
#define QTHETA_CHECK_REPORT_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace qtheta {

// Outcome of one identity check: both sides, their discrepancy, and the
// tolerance it was judged against.  params keeps insertion order so that
// serialized reports are reproducible.
struct CheckReport {
    std::string check_id;
    std::vector<std::pair<std::string, double>> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string notes;
};

// pass <=> abs_err <= tol OR rel_err <= tol, with rel_err = abs_err/max(1,|rhs|).
inline CheckReport make_report(std::string check_id,
                               std::vector<std::pair<std::string, double>> params,
                               double lhs, double rhs, double tol,
                               std::string notes = {}) {
    CheckReport r;
    r.check_id = std::move(check_id);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max(1.0, std::abs(rhs));
    r.tol = tol;
    r.pass = (r.abs_err <= tol) || (r.rel_err <= tol);
    r.notes = std::move(notes);
    return r;
}

}  // namespace qtheta

#endif
