#include "hodgedr/io.hpp"

#include <fstream>
#include <sstream>

#include "hodgedr/errors.hpp"

namespace hodgedr {

namespace {

std::string at(const std::string& path, std::size_t k)
{
    return path + "[" + std::to_string(k) + "]";
}

std::string field(const std::string& path, const std::string& key)
{
    return path.empty() ? key : path + "." + key;
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t k = 0; k < end; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::to_string(line) + ":" + std::to_string(col), "invalid JSON");
    }
}

const Json& require(const Json& obj, const std::string& key, const std::string& path)
{
    if (!obj.is_object())
        throw ParseError(path.empty() ? "<root>" : path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(field(path, key), "missing field");
    return *it;
}

std::string as_string(const Json& v, const std::string& path)
{
    if (!v.is_string())
        throw ParseError(path, "expected a string");
    return v.get<std::string>();
}

std::size_t as_index(const Json& v, const std::string& path)
{
    if (!v.is_number_integer())
        throw ParseError(path, "expected an integer");
    const long long k = v.get<long long>();
    if (k < 0)
        throw ParseError(path, "expected a non-negative integer");
    return static_cast<std::size_t>(k);
}

Rational as_rational(const Json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Rational(v.get<long>());
    if (!v.is_string())
        throw ParseError(path, "expected a rational number as a string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(path, std::string("bad rational '") + v.get<std::string>() + "': " + e.what());
    }
}

Scalar as_gaussian(const Json& v, const std::string& path)
{
    if (v.is_number_integer())
        return Scalar(Rational(v.get<long>()));
    if (!v.is_string())
        throw ParseError(path, "expected a Gaussian rational as a string");
    try {
        return Scalar::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(path, std::string("bad number '") + v.get<std::string>() + "': " + e.what());
    }
}

template <class Entry>
Matrix as_matrix(const Json& v, const std::string& path, std::size_t n, Entry entry)
{
    if (!v.is_array() || v.size() != n)
        throw ParseError(path, "expected " + std::to_string(n) + " rows");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Json& row = v[r];
        if (!row.is_array() || row.size() != n)
            throw ParseError(at(path, r), "expected " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = entry(row[c], at(at(path, r), c));
    }
    return m;
}

Matrix as_rational_matrix(const Json& v, const std::string& path, std::size_t n)
{
    return as_matrix(v, path, n, [](const Json& e, const std::string& p) { return Scalar(as_rational(e, p)); });
}

LieAlgebraPresentation parse_algebra(const Json& doc)
{
    LieAlgebraPresentation p;
    p.name = as_string(require(doc, "name", ""), "name");
    const std::size_t dim = as_index(require(doc, "dimension", ""), "dimension");
    if (dim == 0 || dim > 16)
        throw ParseError("dimension", "dimension must be between 1 and 16");
    p.dimension = dim;
    const Json& br = require(doc, "brackets", "");
    if (!br.is_array())
        throw ParseError("brackets", "expected an array");
    for (std::size_t k = 0; k < br.size(); ++k) {
        const std::string path = at("brackets", k);
        const Json& e = br[k];
        if (!e.is_array() || e.size() != 4)
            throw ParseError(path, "expected [i, j, k, \"c\"]");
        std::size_t idx[3];
        for (std::size_t t = 0; t < 3; ++t) {
            idx[t] = as_index(e[t], at(path, t));
            if (idx[t] < 1 || idx[t] > dim)
                throw ParseError(at(path, t), "index out of range 1.." + std::to_string(dim));
        }
        if (idx[0] >= idx[1])
            throw ParseError(path, "bracket indices must satisfy i < j");
        p.brackets.push_back({idx[0] - 1, idx[1] - 1, idx[2] - 1, as_rational(e[3], at(path, 3))});
    }
    return p;
}

AnalysisFlags parse_flags(const Json& doc)
{
    AnalysisFlags f;
    auto it = doc.find("flags");
    if (it == doc.end())
        return f;
    if (!it->is_object())
        throw ParseError("flags", "expected an object");
    for (auto kv = it->begin(); kv != it->end(); ++kv) {
        const std::string path = field("flags", kv.key());
        if (!kv.value().is_boolean())
            throw ParseError(path, "expected a boolean");
        if (kv.key() == "allow_non_nilpotent")
            f.allow_non_nilpotent = kv.value().get<bool>();
        else if (kv.key() == "include_harmonic")
            f.include_harmonic = kv.value().get<bool>();
        else
            throw ParseError(path, "unknown flag");
    }
    return f;
}

HermitianMetric metric_from(const Json& v, const std::string& path, std::size_t n)
{
    return {as_matrix(require(v, "gram", path), field(path, "gram"), n, as_gaussian)};
}

Matrix checked_structure(const Json& v, const std::string& path, std::size_t n)
{
    Matrix j = as_rational_matrix(v, path, n);
    check_complex_structure({path, j});
    return j;
}

Json rational_json(const Scalar& s)
{
    return s.re().str();
}

void write_flags(Json& doc, const AnalysisFlags& f)
{
    if (f == AnalysisFlags{})
        return;
    doc["flags"] = {{"allow_non_nilpotent", f.allow_non_nilpotent}, {"include_harmonic", f.include_harmonic}};
}

} // namespace

AnalysisInput parse_analysis_input(std::string_view text)
{
    const Json doc = parse_json(text);
    AnalysisInput in;
    in.algebra = parse_algebra(doc);
    in.j = checked_structure(require(doc, "J", ""), "J", in.algebra.dimension);
    if (auto it = doc.find("metric"); it != doc.end())
        in.metric = metric_from(*it, "metric", in.algebra.dimension);
    in.flags = parse_flags(doc);
    return in;
}

ScanInput parse_scan_input(std::string_view text)
{
    const Json doc = parse_json(text);
    ScanInput in;
    in.algebra = parse_algebra(doc);
    in.flags = parse_flags(doc);
    const Json& samples = require(doc, "samples", "");
    if (!samples.is_array() || samples.empty())
        throw ParseError("samples", "expected a non-empty array");
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const std::string path = at("samples", k);
        ScanSample s;
        s.tag = as_string(require(samples[k], "tag", path), field(path, "tag"));
        s.j = checked_structure(require(samples[k], "J", path), field(path, "J"), in.algebra.dimension);
        in.samples.push_back(std::move(s));
    }
    return in;
}

HermitianMetric parse_metric(std::string_view text)
{
    const Json doc = parse_json(text);
    const Json& gram = require(doc, "gram", "");
    if (!gram.is_array())
        throw ParseError("gram", "expected an array");
    return metric_from(doc, "", gram.size());
}

Json matrix_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json grid_json(const Grid& g)
{
    Json rows = Json::array();
    for (const auto& r : g)
        rows.push_back(r);
    return rows;
}

Json to_json(const LieAlgebraPresentation& p)
{
    Json doc;
    doc["name"] = p.name;
    doc["dimension"] = p.dimension;
    Json br = Json::array();
    for (const auto& b : p.brackets)
        br.push_back(Json::array({b.i + 1, b.j + 1, b.k + 1, b.coeff.str()}));
    doc["brackets"] = std::move(br);
    return doc;
}

Json to_json(const HermitianMetric& m)
{
    return Json{{"gram", matrix_json(m.gram)}};
}

Json to_json(const AnalysisInput& in)
{
    Json doc = to_json(in.algebra);
    Json j = Json::array();
    for (std::size_t r = 0; r < in.j.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < in.j.cols(); ++c)
            row.push_back(rational_json(in.j(r, c)));
        j.push_back(std::move(row));
    }
    doc["J"] = std::move(j);
    if (in.metric)
        doc["metric"] = to_json(*in.metric);
    write_flags(doc, in.flags);
    return doc;
}

Json to_json(const ScanInput& in)
{
    Json doc = to_json(in.algebra);
    write_flags(doc, in.flags);
    Json samples = Json::array();
    for (const auto& s : in.samples) {
        Json j = Json::array();
        for (std::size_t r = 0; r < s.j.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t c = 0; c < s.j.cols(); ++c)
                row.push_back(rational_json(s.j(r, c)));
            j.push_back(std::move(row));
        }
        samples.push_back(Json{{"tag", s.tag}, {"J", std::move(j)}});
    }
    doc["samples"] = std::move(samples);
    return doc;
}

namespace {

bool scalar_array(const Json& v)
{
    if (!v.is_array())
        return false;
    for (const auto& e : v)
        if (e.is_structured())
            return false;
    return true;
}

void pretty_into(const Json& v, std::string& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    if (v.is_object() && !v.empty()) {
        out += "{\n";
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            pretty_into(it.value(), out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
    } else if (v.is_array() && !v.empty() && !scalar_array(v)) {
        out += "[\n";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k)
                out += ",\n";
            out += pad;
            pretty_into(v[k], out, indent + 2);
        }
        out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
    } else if (v.is_array()) {
        out += "[";
        for (std::size_t k = 0; k < v.size(); ++k)
            out += (k ? ", " : "") + v[k].dump();
        out += "]";
    } else {
        out += v.dump();
    }
}

} // namespace

std::string pretty(const Json& doc)
{
    std::string out;
    pretty_into(doc, out, 0);
    return out + "\n";
}

std::string serialize(const AnalysisInput& in)
{
    return pretty(to_json(in));
}

std::string serialize(const ScanInput& in)
{
    return pretty(to_json(in));
}

std::string serialize(const HermitianMetric& m)
{
    return pretty(to_json(m));
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot read '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace hodgedr
