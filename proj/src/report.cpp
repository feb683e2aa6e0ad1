#include "einq/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace einq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json value_to_json(const CertifiedValue& v) {
    if (v.exact) return format_rational(*v.exact);
    return ordered_json::array(
        {format_rational(v.enclosure.lo), format_rational(v.enclosure.hi)});
}

std::string value_to_text(const CertifiedValue& v) {
    if (v.exact) return format_rational(*v.exact);
    return "[" + format_rational(v.enclosure.lo) + ", " + format_rational(v.enclosure.hi) + "]";
}

}  // namespace

std::string solve_report_to_json(const SolveReport& report, bool include_timing) {
    ordered_json j;
    j["schema_version"] = 1;
    j["quadruple"] = ordered_json::parse(quadruple_to_json(report.quadruple));
    j["exception_class"] = exception_class_name(report.exception_class);
    ordered_json sols = ordered_json::array();
    for (const auto& s : report.solutions) {
        ordered_json js;
        js["branch"] = branch_name(s.branch);
        js["x"] = value_to_json(s.x);
        js["y"] = value_to_json(s.y);
        js["lambda"] = value_to_json(s.lambda);
        js["naturally_reductive"] = s.naturally_reductive;
        js["reasons"] = s.reasons;
        js["residual_bound"] = format_rational(s.residual_bound);
        sols.push_back(std::move(js));
    }
    j["solutions"] = std::move(sols);
    if (include_timing) j["timing_ms"] = report.timing_ms;
    return j.dump(2) + "\n";
}

std::string solve_report_to_table(const SolveReport& report) {
    std::ostringstream out;
    const Quadruple& q = report.quadruple;
    out << "quadruple " << q.provenance << "  dims(g,l,k,h)=(" << q.dims.dim_g << ","
        << q.dims.dim_l << "," << q.dims.dim_k << "," << q.dims.dim_h << ")\n";
    out << "  c1=" << format_rational(q.c1) << " c2=" << format_rational(q.c2)
        << " l_p=" << format_rational(q.casimir.l_p) << " k_p=" << format_rational(q.casimir.k_p)
        << " h_p=" << format_rational(q.casimir.h_p) << "\n";
    out << "  exception_class=" << exception_class_name(report.exception_class) << "\n";
    out << "  solutions (" << report.solutions.size() << "):\n";
    for (const auto& s : report.solutions) {
        out << "    [" << branch_name(s.branch) << "] x=" << value_to_text(s.x)
            << " y=" << value_to_text(s.y) << " lambda=" << value_to_text(s.lambda)
            << (s.naturally_reductive ? "  naturally-reductive (" : "  NOT naturally reductive (");
        for (size_t i = 0; i < s.reasons.size(); ++i) out << (i ? "," : "") << s.reasons[i];
        out << ")  residual<=" << format_rational(s.residual_bound) << "\n";
    }
    return out.str();
}

std::vector<std::string> validate_solve_report_json(const std::string& json_text) {
    std::vector<std::string> problems;
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        problems.push_back(std::string("parse error: ") + e.what());
        return problems;
    }
    auto require = [&](const ordered_json& node, const char* key, const char* type) {
        if (!node.contains(key)) {
            problems.push_back(std::string("missing key: ") + key);
            return false;
        }
        const auto& v = node.at(key);
        std::string t = type;
        bool ok = (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer()) ||
                  (t == "boolean" && v.is_boolean()) || (t == "object" && v.is_object()) ||
                  (t == "array" && v.is_array());
        if (!ok) problems.push_back(std::string(key) + " has wrong type, expected " + type);
        return ok;
    };
    require(j, "schema_version", "integer");
    require(j, "exception_class", "string");
    if (require(j, "quadruple", "object")) {
        const auto& q = j["quadruple"];
        require(q, "dims", "object");
        require(q, "c1", "string");
        require(q, "c2", "string");
        require(q, "casimir", "object");
        require(q, "flags", "object");
    }
    auto rational_or_pair = [&](const ordered_json& v, const std::string& where) {
        if (v.is_string()) return;
        if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) return;
        problems.push_back(where + " must be \"p/q\" or [\"lo\",\"hi\"]");
    };
    if (require(j, "solutions", "array")) {
        for (const auto& s : j["solutions"]) {
            require(s, "branch", "string");
            require(s, "naturally_reductive", "boolean");
            require(s, "reasons", "array");
            require(s, "residual_bound", "string");
            for (const char* key : {"x", "y", "lambda"}) {
                if (s.contains(key))
                    rational_or_pair(s.at(key), key);
                else
                    problems.push_back(std::string("missing key: ") + key);
            }
        }
    }
    return problems;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

}  // namespace

std::string verify_checks_to_csv(const std::vector<VerifyCheck>& checks) {
    std::ostringstream out;
    out << "scope,check,expected,actual,status\n";
    for (const auto& c : checks)
        out << c.scope << "," << csv_escape(c.name) << "," << csv_escape(c.expected) << ","
            << csv_escape(c.actual) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string exception_rows_to_csv(const std::vector<ExceptionScanRow>& rows) {
    std::ostringstream out;
    out << "family,n1,n2,n3,k,c1,c2,l_p,k_p,h_p,omega1,omega2,exception_class\n";
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : rows) {
        out << family_name(r.id) << "," << opt(r.params.n1) << "," << opt(r.params.n2) << ","
            << opt(r.params.n3) << "," << opt(r.params.k) << ",";
        if (r.id == FamilyId::A3 || r.id == FamilyId::B2) {
            out << ",,,,,";  // structural constants need the user-classified term
        } else {
            Quadruple q = instantiate(r.id, r.params);
            out << format_rational(q.c1) << "," << format_rational(q.c2) << ","
                << format_rational(q.casimir.l_p) << "," << format_rational(q.casimir.k_p) << ","
                << format_rational(q.casimir.h_p) << ",";
        }
        out << format_rational(r.omega1) << "," << format_rational(r.omega2) << ","
            << exception_class_name(r.exception_class) << "\n";
    }
    return out.str();
}

}  // namespace einq
