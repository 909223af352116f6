#ifndef OCO_TRACE_IO_HPP
#define OCO_TRACE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "oco/game.hpp"

namespace oco {

// Flat CSV trace, one row per round, full double precision so replay is
// exact. Header: "# oco-trace v1 D=<D> G=<G> T=<T> d=<d> env=<kind>".
void write_trace(const RunTrace& trace, std::ostream& out);
void write_trace_file(const RunTrace& trace, const std::string& path);

RunTrace read_trace(std::istream& in);
RunTrace read_trace_file(const std::string& path);

// One measured-vs-bound (or plain metric) report row.
struct ReportRow {
    std::string check;
    std::string tau_or_interval;
    double measured = 0.0;
    bool has_bound = false;
    double bound = 0.0;
    bool pass = true;
};

void write_report(const std::vector<ReportRow>& rows, std::ostream& out);
void write_report_file(const std::vector<ReportRow>& rows, const std::string& path);

// 12 significant digits, the precision of all human-facing numeric output.
std::string format_sig(double x);

}  // namespace oco

#endif
