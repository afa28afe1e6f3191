#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qfcs/harness/experiment.hpp"

namespace qfcs::harness::detail {

void register_mode_experiments(std::vector<Experiment>& out);
void register_boundary_experiments(std::vector<Experiment>& out);
void register_bulk_experiments(std::vector<Experiment>& out);
void register_local_experiments(std::vector<Experiment>& out);
void register_algebra_experiments(std::vector<Experiment>& out);

// "0.4", "0.8i", "0.3+0.2i"
std::complex<double> parse_complex(const std::string& text);

}  // namespace qfcs::harness::detail
