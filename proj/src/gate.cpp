#include "spingate/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spingate {

std::size_t index_of(const std::vector<int>& bits) {
    const std::size_t n = bits.size();
    if (n == 0 || n >= 8 * sizeof(std::size_t))
        throw std::invalid_argument("index_of: bad tuple length");
    std::size_t index = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (bits[k] != 0 && bits[k] != 1) throw std::invalid_argument("index_of: bits must be 0/1");
        if (bits[k] == 0) index |= std::size_t{1} << (n - 1 - k);
    }
    return index;
}

std::vector<int> bits_of(std::size_t index, std::size_t site_count) {
    if (site_count == 0 || site_count >= 8 * sizeof(std::size_t))
        throw std::invalid_argument("bits_of: bad site count");
    if (index >= (std::size_t{1} << site_count))
        throw std::out_of_range("bits_of: index out of range");
    std::vector<int> bits(site_count);
    for (std::size_t k = 0; k < site_count; ++k)
        bits[k] = 1 - static_cast<int>((index >> (site_count - 1 - k)) & 1u);
    return bits;
}

GateSpec::GateSpec(std::vector<int> truth_table, std::vector<std::size_t> input_sites,
                   std::size_t output_site)
    : table_(std::move(truth_table)), input_sites_(std::move(input_sites)),
      output_site_(output_site) {
    if (input_sites_.empty()) throw std::invalid_argument("GateSpec: no input sites");
    if (table_.size() != (std::size_t{1} << input_sites_.size()))
        throw std::invalid_argument("GateSpec: truth table must cover all input tuples");
    for (int bit : table_)
        if (bit != 0 && bit != 1) throw std::invalid_argument("GateSpec: table entries must be 0/1");
    std::vector<std::size_t> sites = input_sites_;
    sites.push_back(output_site_);
    std::sort(sites.begin(), sites.end());
    if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
        throw std::invalid_argument("GateSpec: sites must be distinct");
}

std::size_t GateSpec::min_site_count() const {
    std::size_t top = output_site_;
    for (std::size_t s : input_sites_) top = std::max(top, s);
    return top + 1;
}

int GateSpec::output_bit(const std::vector<int>& input_bits) const {
    if (input_bits.size() != input_sites_.size())
        throw std::invalid_argument("GateSpec: wrong number of input bits");
    std::size_t key = 0;
    for (std::size_t i = 0; i < input_bits.size(); ++i) {
        if (input_bits[i] != 0 && input_bits[i] != 1)
            throw std::invalid_argument("GateSpec: bits must be 0/1");
        key = (key << 1) | static_cast<std::size_t>(input_bits[i]);
    }
    return table_[key];
}

GateSpec xor_gate_spec() {
    // keys big-endian (a,b): 00 -> 0, 01 -> 1, 10 -> 1, 11 -> 0
    return GateSpec({0, 1, 1, 0}, {0, 1}, 2);
}

namespace {

std::size_t site_count_for_dim(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim)
        throw std::invalid_argument("matrix dimension is not a power of two");
    return n;
}

}  // namespace

VerificationReport verify_gate(const ComplexMatrix& u, const GateSpec& spec, double tolerance) {
    const std::size_t dim = u.dim();
    const std::size_t n = site_count_for_dim(dim);
    if (spec.min_site_count() > n)
        throw std::invalid_argument("verify_gate: gate references sites outside the system");
    const double defect = unitarity_defect(u);
    if (defect > 1e-10)
        throw std::invalid_argument("verify_gate: input is not unitary (defect " +
                                    std::to_string(defect) + ")");

    VerificationReport report;
    report.tolerance = tolerance;
    report.column_leakage.resize(dim, 0.0);

    for (std::size_t j = 0; j < dim; ++j) {
        const std::vector<int> in_bits_full = bits_of(j, n);
        std::vector<int> inputs;
        inputs.reserve(spec.input_count());
        for (std::size_t s : spec.input_sites()) inputs.push_back(in_bits_full[s]);
        const int want = spec.output_bit(inputs);

        double leak = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const int got = bits_of(i, n)[spec.output_site()];
            if (got != want) leak += std::norm(u(i, j));
        }
        report.column_leakage[j] = leak;
        report.max_leakage = std::max(report.max_leakage, leak);
    }
    report.passed = report.max_leakage <= tolerance;
    report.induced_map = induced_map(u, 1e-8);
    return report;
}

std::optional<SignedPermutation> induced_map(const ComplexMatrix& u, double tolerance) {
    const std::size_t dim = u.dim();
    const double defect = unitarity_defect(u);
    if (defect > 1e-10)
        throw std::invalid_argument("induced_map: input is not unitary (defect " +
                                    std::to_string(defect) + ")");

    SignedPermutation map;
    map.image.resize(dim);
    map.phase.resize(dim);
    std::vector<bool> hit(dim, false);

    for (std::size_t j = 0; j < dim; ++j) {
        std::size_t where = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            const double mag = std::abs(u(i, j));
            if (std::abs(mag - 1.0) <= tolerance) {
                if (where != dim) return std::nullopt;  // two near-unit entries
                where = i;
            } else if (mag >= tolerance) {
                return std::nullopt;  // entry neither ~1 nor ~0
            }
        }
        if (where == dim) return std::nullopt;
        if (hit[where]) return std::nullopt;  // not a bijection
        hit[where] = true;
        map.image[j] = where;
        map.phase[j] = u(where, j) / std::abs(u(where, j));
    }
    return map;
}

ComplexMatrix canonical_xor_unitary() {
    // column -> (row, sign): the one nonzero entry per column
    static constexpr struct {
        std::size_t row;
        double sign;
    } kColumns[8] = {{1, 1.0},  {3, 1.0},  {0, -1.0}, {2, 1.0},
                     {6, -1.0}, {4, -1.0}, {7, -1.0}, {5, 1.0}};
    ComplexMatrix u(8);
    for (std::size_t j = 0; j < 8; ++j) u(kColumns[j].row, j) = kColumns[j].sign;
    return u;
}

}  // namespace spingate
