#include "matineq/io.hpp"

#include <nlohmann/json.hpp>

namespace matineq {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    std::vector<double> re, im;
    re.reserve(m.data().size());
    im.reserve(m.data().size());
    for (const auto& v : m.data()) {
        re.push_back(v.real());
        im.push_back(v.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const auto re = j.at("re").get<std::vector<double>>();
        const auto im = j.at("im").get<std::vector<double>>();
        if (re.size() != rows * cols || im.size() != rows * cols)
            throw ParseError("matrix entry count does not match rows*cols");
        std::vector<cplx> entries(rows * cols);
        for (std::size_t k = 0; k < entries.size(); ++k) entries[k] = {re[k], im[k]};
        Matrix m(rows, cols, std::move(entries));
        if (!m.all_finite()) throw ParseError("matrix contains non-finite entries");
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad matrix json: ") + e.what());
    }
}

}  // namespace matineq
