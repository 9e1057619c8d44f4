#include "cyclo/json_io.hpp"

#include "cyclo/error.hpp"

namespace cyclo::json_io {

ordered_json to_json(const polyring::IntPolynomial& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : f.coefficients()) arr.push_back(c.get_str());
    return arr;
}

ordered_json to_json(const polyring::RatPolynomial& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : f.coefficients()) {
        arr.push_back(ordered_json::array({c.get_num().get_str(), c.get_den().get_str()}));
    }
    return arr;
}

ordered_json to_json(const matrixrep::DenseRatMatrix& m) {
    ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    ordered_json entries = ordered_json::array();
    for (const auto& e : m.entries()) {
        entries.push_back(ordered_json::array({e.get_num().get_str(), e.get_den().get_str()}));
    }
    j["entries"] = std::move(entries);
    return j;
}

ordered_json to_json(const ansearch::SparseSignature& s) {
    ordered_json j;
    j["degree"] = s.degree;
    j["inner"] = s.inner;
    return j;
}

ordered_json to_json(const ansearch::BoundReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["lower"] = r.lower;
    ordered_json uppers = ordered_json::array();
    for (const auto& u : r.uppers) {
        ordered_json entry;
        entry["value"] = u.value;
        entry["source"] = u.source;
        entry["witness"] = to_json(u.witness);
        uppers.push_back(std::move(entry));
    }
    j["uppers"] = std::move(uppers);
    if (r.exact) {
        ordered_json exact;
        exact["value"] = r.exact->value;
        exact["witness"] = to_json(r.exact->witness);
        exact["strategy"] = r.exact->strategy;
        j["exact"] = std::move(exact);
    } else {
        j["exact"] = nullptr;
    }
    j["empty"] = r.empty_set;
    ordered_json skipped = ordered_json::array();
    for (const auto& s : r.skipped) {
        ordered_json entry;
        entry["source"] = s.source;
        entry["reason"] = s.reason;
        skipped.push_back(std::move(entry));
    }
    j["skipped"] = std::move(skipped);
    return j;
}

polyring::IntPolynomial int_polynomial_from_json(const ordered_json& j) {
    if (!j.is_array()) {
        throw DomainError("BadInput", "polynomial JSON must be an array of decimal strings");
    }
    std::vector<mpz_class> coeffs;
    coeffs.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string()) {
            throw DomainError("BadInput", "polynomial coefficients must be decimal strings");
        }
        coeffs.emplace_back(item.get<std::string>());
    }
    return polyring::IntPolynomial(std::move(coeffs));
}

matrixrep::DenseRatMatrix matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw DomainError("BadInput", "matrix JSON needs rows, cols and entries");
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (rows < 1 || cols < 1 || !entries.is_array() ||
        entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw DomainError("BadInput", "matrix entry count does not match rows * cols");
    }
    matrixrep::DenseRatMatrix m(rows, cols);
    std::size_t idx = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw DomainError("BadInput", "matrix entries must be [\"num\",\"den\"] string pairs");
        }
        mpz_class num(e[0].get<std::string>());
        mpz_class den(e[1].get<std::string>());
        if (den == 0) throw DomainError("BadInput", "matrix entry with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        m.entries()[idx++] = std::move(q);
    }
    return m;
}

}  // namespace cyclo::json_io
