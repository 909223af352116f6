#include "oco/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oco {

namespace {

std::string full(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::runtime_error("trace: bad number '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::string format_sig(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_trace(const RunTrace& trace, std::ostream& out) {
    out << "# oco-trace v1 D=" << full(trace.D) << " G=" << full(trace.G) << " T=" << trace.T
        << " d=" << trace.dim << " env=" << (trace.env ? trace.env->kind() : "custom") << "\n";
    out << "t";
    for (int i = 0; i < trace.dim; ++i) out << ",action_" << i;
    out << ",loss";
    for (int i = 0; i < trace.dim; ++i) out << ",theta_" << i;
    for (int i = 0; i < trace.dim; ++i) out << ",minimizer_" << i;
    out << ",n_active_experts\n";
    for (int t = 1; t <= trace.T; ++t) {
        out << t;
        for (double v : trace.actions[t - 1]) out << ',' << full(v);
        out << ',' << full(trace.losses[t - 1]);
        const Vec& th = trace.env->theta(t);
        for (double v : th) out << ',' << full(v);
        const Vec mz = trace.env->minimizer_at(t);
        for (double v : mz) out << ',' << full(v);
        out << ',' << trace.n_active[t - 1] << "\n";
    }
}

void write_trace_file(const RunTrace& trace, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open trace file for writing: " + path);
    write_trace(trace, f);
    if (!f) throw std::runtime_error("failed writing trace file: " + path);
}

RunTrace read_trace(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("# oco-trace v1 ", 0) != 0)
        throw std::runtime_error("trace: missing oco-trace v1 header");

    double D = 0, G = 0;
    int T = 0, d = 1;
    std::string env_kind = "custom";
    {
        std::istringstream hs(header.substr(15));
        std::string tok;
        while (hs >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "D") D = parse_double(val);
            else if (key == "G") G = parse_double(val);
            else if (key == "T") T = std::stoi(val);
            else if (key == "d") d = std::stoi(val);
            else if (key == "env") env_kind = val;
        }
    }
    if (T < 1 || d < 1) throw std::runtime_error("trace: bad header");

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("trace: missing column header");

    RunTrace trace;
    trace.D = D;
    trace.G = G;
    trace.T = T;
    trace.dim = d;
    std::vector<Vec> thetas;
    for (int t = 1; t <= T; ++t) {
        if (!std::getline(in, line)) throw std::runtime_error("trace: truncated file");
        const auto cells = split(line, ',');
        const std::size_t expected = 1 + d + 1 + d + d + 1;
        if (cells.size() != expected) throw std::runtime_error("trace: bad row width");
        std::size_t c = 0;
        if (std::stoi(cells[c++]) != t) throw std::runtime_error("trace: rounds out of order");
        Vec a(d);
        for (int i = 0; i < d; ++i) a[i] = parse_double(cells[c++]);
        trace.actions.push_back(std::move(a));
        trace.losses.push_back(parse_double(cells[c++]));
        Vec th(d);
        for (int i = 0; i < d; ++i) th[i] = parse_double(cells[c++]);
        thetas.push_back(std::move(th));
        c += d;  // minimizer columns are derivable
        trace.n_active.push_back(std::stoi(cells[c]));
    }
    trace.env = rebuild_environment(env_kind, d, thetas);
    return trace;
}

RunTrace read_trace_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open trace file: " + path);
    return read_trace(f);
}

void write_report(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "check,tau_or_interval,measured,bound,pass\n";
    for (const ReportRow& r : rows) {
        out << r.check << ',' << r.tau_or_interval << ',' << format_sig(r.measured) << ',';
        if (r.has_bound)
            out << format_sig(r.bound) << ',' << (r.pass ? 1 : 0);
        else
            out << ',';
        out << "\n";
    }
}

void write_report_file(const std::vector<ReportRow>& rows, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open report file for writing: " + path);
    write_report(rows, f);
    if (!f) throw std::runtime_error("failed writing report file: " + path);
}

}  // namespace oco
