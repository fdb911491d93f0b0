#include "cesarolab/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cesarolab {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_sequence_csv(std::ostream& os, const FiniteSequence& f) {
    os << "n,re,im\n";
    for (std::size_t n = 0; n < f.size(); ++n)
        os << n << ',' << format_double(f(n).real()) << ',' << format_double(f(n).imag()) << '\n';
}

FiniteSequence read_sequence_csv(std::istream& is) {
    std::string line;
    std::vector<cx> vals;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.find_first_not_of("0123456789") != std::string::npos &&
                line.find("n,") == 0)
                continue; // header row
        }
        std::size_t n = 0;
        double re = 0, im = 0;
        if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &n, &re, &im) < 2)
            throw std::runtime_error("read_sequence_csv: malformed row: " + line);
        if (n >= vals.size()) vals.resize(n + 1, cx{});
        vals[n] = cx(re, im);
    }
    if (vals.empty()) throw std::runtime_error("read_sequence_csv: no data rows");
    return FiniteSequence(std::move(vals));
}

FiniteSequence read_sequence_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sequence_csv(in);
}

void write_sequence_csv_file(const std::string& path, const FiniteSequence& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_sequence_csv(out, f);
}

void write_curve_csv(std::ostream& os, const SpectralCurve& curve) {
    os << "t,re,im\n";
    for (std::size_t i = 0; i < curve.size(); ++i)
        os << format_double(curve.t[i]) << ',' << format_double(curve.w[i].real()) << ','
           << format_double(curve.w[i].imag()) << '\n';
}

void write_curve_csv_file(const std::string& path, const SpectralCurve& curve) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_curve_csv(out, curve);
}

} // namespace cesarolab
