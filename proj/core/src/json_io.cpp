#include "opineq/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace opineq {

using nlohmann::json;

namespace {

json must_parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

double number_at(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ParseError(std::string("expected numeric field \"") + key + "\"");
    return j[key].get<double>();
}

Matrix matrix_from_rows(const json& rows, const char* what) {
    if (!rows.is_array() || rows.empty()) throw ParseError(std::string(what) + ": expected rows");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != c)
            throw ParseError(std::string(what) + ": ragged rows");
        for (int k = 0; k < c; ++k) {
            if (!rows[i][k].is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
            m(i, k) = rows[i][k].get<double>();
        }
    }
    return m;
}

}  // namespace

SymMatrix parse_matrix_json(const std::string& text) {
    const json j = must_parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON needs fields \"n\" and \"entries\"");
    const int n = j["n"].get<int>();
    const Matrix m = matrix_from_rows(j["entries"], "matrix entries");
    if (m.rows != n || m.cols != n)
        throw ParseError("matrix entries do not form the declared n-by-n block");
    double asym = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k) asym = std::max(asym, std::fabs(m(i, k) - m(k, i)));
    if (asym > 1e-12)
        throw ParseError("matrix is not symmetric (asymmetry " + std::to_string(asym) +
                         " exceeds 1e-12)");
    return SymMatrix::from_entries(n, m.d);
}

std::string matrix_to_json(const SymMatrix& a) {
    std::string out = "{\"n\":" + std::to_string(a.dim()) + ",\"entries\":[";
    for (int i = 0; i < a.dim(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < a.dim(); ++j) {
            if (j) out += ",";
            out += format_number(a(i, j));
        }
        out += "]";
    }
    return out + "]}";
}

FunctionDescriptor parse_function_json(const std::string& text) {
    const json j = must_parse(text);
    if (!j.is_object() || !j.contains("kind")) throw ParseError("function JSON needs \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "exp") return FunctionDescriptor::exp();
    if (kind == "power") return FunctionDescriptor::power(number_at(j, "r"));
    if (kind == "affine_power")
        return FunctionDescriptor::affine_of_power(number_at(j, "scale"), number_at(j, "shift"),
                                                   number_at(j, "r"));
    throw ParseError("unknown function kind \"" + kind + "\"");
}

std::string function_to_json(const FunctionDescriptor& f) {
    switch (f.kind()) {
        case FunctionDescriptor::Kind::Exp: return "{\"kind\":\"exp\"}";
        case FunctionDescriptor::Kind::Power:
            return "{\"kind\":\"power\",\"r\":" + format_number(f.exponent()) + "}";
        case FunctionDescriptor::Kind::AffineOfPower:
            return "{\"kind\":\"affine_power\",\"scale\":" + format_number(f.scale()) +
                   ",\"shift\":" + format_number(f.shift()) + ",\"r\":" +
                   format_number(f.exponent()) + "}";
    }
    throw InvalidParameterError("unknown function kind");
}

MapDescriptor parse_map_json(const std::string& text) {
    const json j = must_parse(text);
    if (!j.is_object() || !j.contains("map")) throw ParseError("map JSON needs \"map\"");
    const std::string kind = j["map"].get<std::string>();
    try {
        if (kind == "normalized_trace") return MapDescriptor::normalized_trace();
        if (kind == "compression")
            return MapDescriptor::compression(matrix_from_rows(j.at("v"), "compression v"));
        if (kind == "pinching") {
            if (!j.contains("blocks") || !j["blocks"].is_array())
                throw ParseError("pinching needs \"blocks\"");
            return MapDescriptor::pinching(j["blocks"].get<std::vector<int>>());
        }
        if (kind == "unitary_mixture") {
            if (!j.contains("weights") || !j.contains("unitaries"))
                throw ParseError("unitary mixture needs \"weights\" and \"unitaries\"");
            std::vector<Matrix> us;
            for (const auto& u : j["unitaries"]) us.push_back(matrix_from_rows(u, "unitary"));
            return MapDescriptor::unitary_mixture(j["weights"].get<std::vector<double>>(),
                                                  std::move(us));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("map JSON: ") + e.what());
    } catch (const InvalidParameterError& e) {
        throw ParseError(std::string("map JSON: ") + e.what());
    } catch (const ShapeError& e) {
        throw ParseError(std::string("map JSON: ") + e.what());
    }
    throw ParseError("unknown map kind \"" + kind + "\"");
}

namespace {

std::string rows_to_json(const Matrix& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += format_number(m(i, j));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace

std::string map_to_json(const MapDescriptor& phi) {
    switch (phi.kind()) {
        case MapDescriptor::Kind::NormalizedTrace: return "{\"map\":\"normalized_trace\"}";
        case MapDescriptor::Kind::Compression:
            return "{\"map\":\"compression\",\"v\":" + rows_to_json(phi.isometry()) + "}";
        case MapDescriptor::Kind::Pinching: {
            std::string out = "{\"map\":\"pinching\",\"blocks\":[";
            for (size_t i = 0; i < phi.blocks().size(); ++i) {
                if (i) out += ",";
                out += std::to_string(phi.blocks()[i]);
            }
            return out + "]}";
        }
        case MapDescriptor::Kind::UnitaryMixture: {
            std::string out = "{\"map\":\"unitary_mixture\",\"weights\":[";
            for (size_t i = 0; i < phi.weights().size(); ++i) {
                if (i) out += ",";
                out += format_number(phi.weights()[i]);
            }
            out += "],\"unitaries\":[";
            for (size_t i = 0; i < phi.unitaries().size(); ++i) {
                if (i) out += ",";
                out += rows_to_json(phi.unitaries()[i]);
            }
            return out + "]}";
        }
    }
    throw InvalidParameterError("unknown map kind");
}

QuadratureConfig parse_quad_json(const std::string& text) {
    const json j = must_parse(text);
    if (!j.is_object() || !j.contains("scheme")) throw ParseError("quad JSON needs \"scheme\"");
    const std::string scheme = j["scheme"].get<std::string>();
    try {
        if (scheme == "gauss_legendre")
            return QuadratureConfig::gauss_legendre(static_cast<int>(number_at(j, "nodes")));
        if (scheme == "adaptive_simpson")
            return QuadratureConfig::adaptive_simpson(number_at(j, "abs_tol"),
                                                      static_cast<int>(number_at(j, "max_depth")));
    } catch (const InvalidParameterError& e) {
        throw ParseError(std::string("quad JSON: ") + e.what());
    }
    throw ParseError("unknown quadrature scheme \"" + scheme + "\"");
}

std::string quad_to_json(const QuadratureConfig& cfg) {
    if (cfg.scheme == QuadratureConfig::Scheme::GaussLegendre)
        return "{\"scheme\":\"gauss_legendre\",\"nodes\":" + std::to_string(cfg.nodes) + "}";
    return "{\"scheme\":\"adaptive_simpson\",\"abs_tol\":" + format_number(cfg.abs_tol) +
           ",\"max_depth\":" + std::to_string(cfg.max_depth) + "}";
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string constants_to_json(const ChainConstants& c) {
    std::string out = "{";
    bool first = true;
    const auto put = [&](const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (!first) out += ",";
        first = false;
        out += std::string("\"") + key + "\":" + format_number(*v);
    };
    put("alpha", c.alpha);
    put("beta", c.beta);
    put("K", c.k);
    put("C", c.c);
    return out + "}";
}

}  // namespace

std::string report_to_json(const ChainReport& rep) {
    std::string out = "{\"name\":" + quoted(rep.name) + ",\"mode\":" + quoted(rep.mode);
    if (rep.window)
        out += ",\"interval\":[" + format_number(rep.window->m) + "," +
               format_number(rep.window->M) + "]";
    out += ",\"labels\":[";
    for (size_t i = 0; i < rep.labels.size(); ++i) {
        if (i) out += ",";
        out += quoted(rep.labels[i]);
    }
    out += "],\"terms\":[";
    for (size_t i = 0; i < rep.terms.size(); ++i) {
        if (i) out += ",";
        const SymMatrix& m = rep.terms[i];
        out += "[";
        for (int r = 0; r < m.dim(); ++r) {
            out += r ? ",[" : "[";
            for (int c = 0; c < m.dim(); ++c) {
                if (c) out += ",";
                out += format_number(m(r, c));
            }
            out += "]";
        }
        out += "]";
    }
    out += "],\"gaps\":[";
    for (size_t i = 0; i < rep.links.size(); ++i) {
        if (i) out += ",";
        out += format_number(rep.links[i].min_gap_eigenvalue);
    }
    out += "],\"constants\":" + constants_to_json(rep.constants);
    out += ",\"passed\":" + std::string(rep.passed ? "true" : "false");
    out += ",\"tolerance\":" + format_number(rep.tolerance);
    return out + "}";
}

std::string report_to_csv(const ChainReport& rep) {
    std::ostringstream out;
    out << "section,key,row,col,value\n";
    out << "name," << rep.name << ",,,\n";
    out << "mode," << rep.mode << ",,,\n";
    if (rep.window) {
        out << "interval,m,,," << format_number(rep.window->m) << "\n";
        out << "interval,M,,," << format_number(rep.window->M) << "\n";
    }
    for (size_t i = 0; i < rep.labels.size(); ++i)
        out << "label," << i << ",,," << rep.labels[i] << "\n";
    for (size_t i = 0; i < rep.terms.size(); ++i)
        for (int r = 0; r < rep.terms[i].dim(); ++r)
            for (int c = 0; c < rep.terms[i].dim(); ++c)
                out << "term," << i << "," << r << "," << c << ","
                    << format_number(rep.terms[i](r, c)) << "\n";
    for (size_t i = 0; i < rep.links.size(); ++i)
        out << "gap," << i << ",,," << format_number(rep.links[i].min_gap_eigenvalue) << "\n";
    const auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) out << "constant," << key << ",,," << format_number(*v) << "\n";
    };
    put("alpha", rep.constants.alpha);
    put("beta", rep.constants.beta);
    put("K", rep.constants.k);
    put("C", rep.constants.c);
    out << "passed,,,," << (rep.passed ? 1 : 0) << "\n";
    out << "tolerance,,,," << format_number(rep.tolerance) << "\n";
    return out.str();
}

std::string report_to_pretty(const ChainReport& rep) {
    std::ostringstream out;
    out << rep.name << " (" << rep.mode << " mode)";
    if (rep.window)
        out << "  interval=[" << format_number(rep.window->m) << ", "
            << format_number(rep.window->M) << "]";
    out << "\n";
    const auto put = [&](const char* key, const std::optional<double>& v) {
        if (v) out << "  " << key << " = " << format_number(*v) << "\n";
    };
    put("alpha", rep.constants.alpha);
    put("beta", rep.constants.beta);
    put("K", rep.constants.k);
    put("C", rep.constants.c);
    for (size_t i = 0; i < rep.terms.size(); ++i) {
        out << "  T" << i + 1 << " " << rep.labels[i] << " =";
        const SymMatrix& m = rep.terms[i];
        if (m.dim() == 1) {
            out << " " << format_number(m(0, 0)) << "\n";
        } else {
            out << "\n";
            for (int r = 0; r < m.dim(); ++r) {
                out << "      [";
                for (int c = 0; c < m.dim(); ++c)
                    out << (c ? ", " : " ") << format_number(m(r, c));
                out << " ]\n";
            }
        }
        if (i < rep.links.size()) {
            const LoewnerVerdict& v = rep.links[i];
            out << "    T" << i + 1 << " <= T" << i + 2 << " : gap "
                << format_number(v.min_gap_eigenvalue) << (v.holds ? "  ok" : "  VIOLATED")
                << "\n";
        }
    }
    out << (rep.passed ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

}  // namespace opineq
