#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iqmis::checks {

// pair-correlator closed form measured against the exact simulator
struct AppcStudy {
  int samples = 0;
  double fitted_scale = 0.0;      // least-squares c mapping formula values onto exact ones
  double max_error_raw = 0.0;     // before scaling
  double max_error_scaled = 0.0;  // after scaling
  double gamma0_formula = 0.0;    // K2 at gamma = 0, beta = pi/8
  double gamma0_simulator = 0.0;  // exact value there (zero phase layer)
  bool reconciled = false;        // scaled error within 1e-9
};

AppcStudy appc_study();
void print_appc(const AppcStudy& s, std::ostream& out);

std::vector<std::string> verify_suite_names();

// runs one named suite, logging to out; true on pass
bool verify_suite(const std::string& name, std::ostream& out);

}  // namespace iqmis::checks
