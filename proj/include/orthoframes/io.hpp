#pragma once

#include <string>
#include <vector>

#include "orthoframes/common.hpp"
#include "orthoframes/synth.hpp"

namespace orthoframes {

// x,psi_re,psi_im on count points spanning the truncated support.
std::string psi_to_csv(const SynthesizedFunction& psi, std::size_t count = 2001);

// Same plot format for arbitrary sampled data (spectra, phitilde, ...).
std::string samples_to_csv(const std::vector<double>& xs, const std::vector<Complex>& ys);

std::string gram_to_json(const GramReport& report);

// Minimal static SVG line plot of (x, re) pairs.
std::string samples_to_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                           const std::string& title);

void write_file(const std::string& path, const std::string& content);

// Round to the 12-significant-digit emission grid so JSON numbers match the
// CSV formatting rule.
double round12(double v);

}  // namespace orthoframes
