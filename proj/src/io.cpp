#include "cmv/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace cmv::io {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw std::runtime_error("read error on " + path);
    return buf.str();
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out.good()) {
            out.close();
            std::remove(tmp.c_str());
            throw std::runtime_error("write error on " + tmp);
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
    }
}

json parse_json_text(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument(what + ": malformed JSON");
    return j;
}

std::string fmt(double x) {
    char buf[40];
    const std::to_chars_result r = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, r.ptr);
}

std::string fmt(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

namespace {

cplx complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw std::invalid_argument(where + ": expected a [re, im] pair");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

} // namespace

VerblunskySequence verblunsky_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw std::invalid_argument("coeffs: expected an array of [re, im] pairs");
    std::vector<cplx> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (std::size_t i = 0; i < j["coeffs"].size(); ++i)
        coeffs.push_back(complex_from_json(j["coeffs"][i], "coeffs[" + std::to_string(i) + "]"));
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("kind: expected \"proper\" or \"improper\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "proper") return VerblunskySequence::proper(std::move(coeffs));
    if (kind == "improper") return VerblunskySequence::improper(std::move(coeffs));
    throw std::invalid_argument("kind: expected \"proper\" or \"improper\", got \"" + kind + "\"");
}

json verblunsky_to_json(const VerblunskySequence& v) {
    json coeffs = json::array();
    for (cplx a : v.coeffs()) coeffs.push_back(complex_to_json(a));
    return json{{"coeffs", std::move(coeffs)},
                {"kind", v.is_improper() ? "improper" : "proper"}};
}

DiscreteCircleMeasure measure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
        throw std::invalid_argument("atoms: expected an array of {theta, weight} objects");
    std::vector<CircleAtom> atoms;
    atoms.reserve(j["atoms"].size());
    for (std::size_t i = 0; i < j["atoms"].size(); ++i) {
        const json& a = j["atoms"][i];
        const std::string where = "atoms[" + std::to_string(i) + "]";
        if (!a.is_object() || !a.contains("theta") || !a.contains("weight") ||
            !a["theta"].is_number() || !a["weight"].is_number())
            throw std::invalid_argument(where + ": expected numeric theta and weight");
        atoms.push_back(CircleAtom{a["theta"].get<double>(), a["weight"].get<double>()});
    }
    return DiscreteCircleMeasure(std::move(atoms));
}

json measure_to_json(const DiscreteCircleMeasure& mu) {
    json atoms = json::array();
    for (const CircleAtom& a : mu.atoms())
        atoms.push_back(json{{"theta", a.theta}, {"weight", a.weight}});
    return json{{"atoms", std::move(atoms)}};
}

json banded_to_json(const BandedUnitary& c) {
    json diags = json::object();
    for (int offset = -2; offset <= 2; ++offset) {
        json d = json::array();
        for (cplx v : c.diagonal(offset)) d.push_back(complex_to_json(v));
        diags[std::to_string(offset)] = std::move(d);
    }
    return json{{"n", c.dim()}, {"diagonals", std::move(diags)}};
}

json jacobi_to_json(const JacobiOperator& op) {
    return json{{"a", op.a}, {"b", op.b}};
}

MatrixVerblunsky matrix_verblunsky_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
        throw std::invalid_argument("k: expected the block size");
    const int k = j["k"].get<int>();
    if (k <= 0) throw std::invalid_argument("k: block size must be positive");
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("blocks: expected an array of k x k matrices");
    std::vector<Matrix> blocks;
    for (std::size_t b = 0; b < j["blocks"].size(); ++b) {
        const json& rows = j["blocks"][b];
        const std::string where = "blocks[" + std::to_string(b) + "]";
        if (!rows.is_array() || static_cast<int>(rows.size()) != k)
            throw std::invalid_argument(where + ": expected " + std::to_string(k) + " rows");
        Matrix m(k, k);
        for (int r = 0; r < k; ++r) {
            if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != k)
                throw std::invalid_argument(where + ": row " + std::to_string(r) + " must have " +
                                            std::to_string(k) + " entries");
            for (int c = 0; c < k; ++c)
                m(r, c) = complex_from_json(rows[r][c], where);
        }
        blocks.push_back(std::move(m));
    }
    const std::string kind =
        j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "proper";
    if (kind == "proper") return MatrixVerblunsky::proper(std::move(blocks));
    if (kind == "improper") return MatrixVerblunsky::improper(std::move(blocks));
    throw std::invalid_argument("kind: expected \"proper\" or \"improper\", got \"" + kind + "\"");
}

json matrix_verblunsky_to_json(const MatrixVerblunsky& v) {
    const int k = v.block_size();
    json blocks = json::array();
    for (std::size_t b = 0; b < v.size(); ++b) {
        json rows = json::array();
        for (int r = 0; r < k; ++r) {
            json row = json::array();
            for (int c = 0; c < k; ++c) row.push_back(complex_to_json(v.at(b)(r, c)));
            rows.push_back(std::move(row));
        }
        blocks.push_back(std::move(rows));
    }
    return json{{"k", k},
                {"kind", v.is_improper() ? "improper" : "proper"},
                {"blocks", std::move(blocks)}};
}

} // namespace cmv::io
