#include "spingate/json_render.hpp"

#include <cstdio>

namespace spingate {

std::string json_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string json_string(const std::string& value) {
    std::string out = "\"";
    for (char c : value) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string render_complex(const cplx& z) {
    return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]";
}

std::string render_matrix(const ComplexMatrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (i) out += ',';
        out += '[';
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out += ',';
            out += render_complex(m(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

std::string render_real_vector(const std::vector<double>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += json_number(values[i]);
    }
    out += ']';
    return out;
}

std::string render_induced_map(const std::optional<SignedPermutation>& map) {
    if (!map) return "null";
    std::string out = "{\"image\":[";
    for (std::size_t i = 0; i < map->image.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(map->image[i]);
    }
    out += "],\"phases\":[";
    for (std::size_t i = 0; i < map->phase.size(); ++i) {
        if (i) out += ',';
        out += render_complex(map->phase[i]);
    }
    out += "]}";
    return out;
}

std::string render_report(const VerificationReport& report) {
    std::string out = "{\"passed\":";
    out += report.passed ? "true" : "false";
    out += ",\"tolerance\":" + json_number(report.tolerance);
    out += ",\"max_leakage\":" + json_number(report.max_leakage);
    out += ",\"column_leakage\":" + render_real_vector(report.column_leakage);
    out += ",\"induced_map\":" + render_induced_map(report.induced_map);
    out += '}';
    return out;
}

std::string render_search_result(const SearchResult& result, const std::string& ham_text) {
    std::string out = "{\"succeeded\":";
    out += result.succeeded ? "true" : "false";
    out += ",\"best_objective\":" + json_number(result.best_objective);
    out += ",\"restart_index\":" + std::to_string(result.restart_index);
    out += ",\"iterations_used\":" + std::to_string(result.iterations_used);
    out += ",\"parameters\":" + render_real_vector(result.best_parameters);
    out += ",\"hamiltonian\":" + json_string(ham_text);
    out += '}';
    return out;
}

}  // namespace spingate
