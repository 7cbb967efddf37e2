#include "subdiff/problem_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace subdiff {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::invalid_argument(std::string("problem: missing numeric field '") + key + "'");
    return j[key].get<double>();
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("problem: invalid JSON: ") + e.what());
    }

    const double alpha = require_number(j, "alpha");
    const double T = require_number(j, "T");
    const int n = (int)require_number(j, "n_time");
    const double L = require_number(j, "L");
    const int M = (int)require_number(j, "M");
    if (M < 1) throw std::invalid_argument("problem: M must be at least 1");

    if (!j.contains("g_coeffs") || !j["g_coeffs"].is_array() || (int)j["g_coeffs"].size() != M)
        throw std::invalid_argument("problem: g_coeffs must be an array of length M");
    std::vector<double> g = j["g_coeffs"].get<std::vector<double>>();

    TimeGrid grid(T, n);
    std::vector<std::vector<double>> rows((std::size_t)M, std::vector<double>((std::size_t)n + 1, 0.0));
    if (!j.contains("forcing")) throw std::invalid_argument("problem: missing 'forcing'");
    const json& f = j["forcing"];
    if (f.is_string()) {
        if (f.get<std::string>() != "zero")
            throw std::invalid_argument("problem: string forcing must be \"zero\"");
    } else if (f.is_object() && f.contains("constant")) {
        double c = f["constant"].get<double>();
        for (auto& row : rows) std::fill(row.begin(), row.end(), c);
    } else if (f.is_object() && f.contains("samples")) {
        const json& s = f["samples"];
        if (!s.is_array() || (int)s.size() != M)
            throw std::invalid_argument("problem: forcing samples must hold M rows");
        for (int k = 0; k < M; ++k) {
            auto row = s[(std::size_t)k].get<std::vector<double>>();
            if ((int)row.size() != n + 1)
                throw std::invalid_argument("problem: each forcing row needs n_time+1 samples");
            rows[(std::size_t)k] = std::move(row);
        }
    } else {
        throw std::invalid_argument("problem: forcing must be \"zero\", {constant}, or {samples}");
    }

    return ProblemSpec(FracOrder{alpha}, grid, L, SpectralField(L, std::move(g)),
                       ModeTrajectories(grid, L, std::move(rows)));
}

ProblemSpec load_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("problem: cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace subdiff
