#pragma once

#include <iosfwd>
#include <string>

#include "cesarolab/sequence.hpp"
#include "cesarolab/spectra.hpp"

namespace cesarolab {

/// Shortest-exact formatting ("%.17g"), locale-independent.
std::string format_double(double x);

/// Sequence CSV: header "n,re,im", one row per index.
void write_sequence_csv(std::ostream& os, const FiniteSequence& f);
FiniteSequence read_sequence_csv(std::istream& is);
FiniteSequence read_sequence_csv_file(const std::string& path);
void write_sequence_csv_file(const std::string& path, const FiniteSequence& f);

/// Curve CSV: header "t,re,im", one row per sample.
void write_curve_csv(std::ostream& os, const SpectralCurve& curve);
void write_curve_csv_file(const std::string& path, const SpectralCurve& curve);

} // namespace cesarolab
