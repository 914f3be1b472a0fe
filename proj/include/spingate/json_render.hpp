#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spingate/gate.hpp"
#include "spingate/linalg.hpp"
#include "spingate/search.hpp"

namespace spingate {

// Machine-readable output: complex numbers as [re, im], matrices as arrays
// of row arrays, fixed key order, numbers with 17 significant digits.
std::string json_number(double value);
std::string json_string(const std::string& value);
std::string render_complex(const cplx& z);
std::string render_matrix(const ComplexMatrix& m);
std::string render_real_vector(const std::vector<double>& values);
std::string render_induced_map(const std::optional<SignedPermutation>& map);
std::string render_report(const VerificationReport& report);
std::string render_search_result(const SearchResult& result, const std::string& ham_text);

}  // namespace spingate
