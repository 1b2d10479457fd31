#include "serialize.hpp"

#include <stdexcept>

namespace weylwit::tools {

namespace {

std::string rat_str(const Rational& r) { return r.get_str(); }

Rational rat_parse(const std::string& s) { return rational_from_string(s); }

std::vector<int> ints_from_json(const Json& j) {
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

std::vector<Vec> vecs_from_json(const Json& j) {
    std::vector<Vec> out;
    for (const auto& v : j) out.push_back(vec_from_json(v));
    return out;
}

Json vecs_to_json(const std::vector<Vec>& vs) {
    Json out = Json::array();
    for (const Vec& v : vs) out.push_back(vec_to_json(v));
    return out;
}

void require_schema(const Json& j) {
    if (!j.is_object() || j.value("schema", std::string()) != "v1")
        throw std::invalid_argument("expected an object with schema \"v1\"");
}

}  // namespace

Json scalar_to_json(const GaussRational& v) {
    if (v.im == Rational(0)) return rat_str(v.re);
    Json j;
    j["re"] = rat_str(v.re);
    j["im"] = rat_str(v.im);
    return j;
}

GaussRational scalar_from_json(const Json& j) {
    if (j.is_string()) return GaussRational(rat_parse(j.get<std::string>()));
    if (j.is_number_integer()) return GaussRational(static_cast<long>(j.get<long long>()));
    if (j.is_object())
        return GaussRational(rat_parse(j.at("re").get<std::string>()),
                             rat_parse(j.at("im").get<std::string>()));
    throw std::invalid_argument("scalar must be a string, integer, or {re, im} object");
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const GaussRational& x : v) out.push_back(scalar_to_json(x));
    return out;
}

Vec vec_from_json(const Json& j) {
    Vec out;
    for (const auto& x : j) out.push_back(scalar_from_json(x));
    return out;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j) {
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j.at(i).at(c));
    }
    return m;
}

std::string witness_kind(const Json& j) {
    require_schema(j);
    const std::string kind = j.value("kind", std::string());
    if (kind != "iso" && kind != "twisted")
        throw std::invalid_argument("kind must be \"iso\" or \"twisted\"");
    return kind;
}

Json iso_to_json(const IsoWitness& w) {
    Json j;
    j["schema"] = "v1";
    j["kind"] = "iso";
    j["a"] = w.seq.a;
    j["b"] = w.seq.b;
    j["epsilon"] = w.seq.epsilon;
    j["gram"] = matrix_to_json(w.gram);
    j["g"] = matrix_to_json(w.g);
    j["lines"] = vecs_to_json(w.lines);
    if (w.is_normalized()) j["normalized"] = vecs_to_json(w.normalized);
    return j;
}

IsoWitness iso_from_json(const Json& j) {
    if (witness_kind(j) != "iso") throw std::invalid_argument("not an iso witness file");
    IsoWitness w;
    w.seq = derive_iso(ints_from_json(j.at("a")), ints_from_json(j.at("b")));
    if (j.contains("epsilon") && j.at("epsilon").get<int>() != w.seq.epsilon)
        throw std::invalid_argument("epsilon does not match the entry parities");
    w.gram = matrix_from_json(j.at("gram"));
    w.g = matrix_from_json(j.at("g"));
    w.lines = vecs_from_json(j.at("lines"));
    if (j.contains("normalized")) w.normalized = vecs_from_json(j.at("normalized"));
    return w;
}

Json twisted_to_json(const TwistedWitness& w) {
    Json j;
    j["schema"] = "v1";
    j["kind"] = "twisted";
    j["a"] = w.seq.a;
    j["b"] = w.seq.b;
    j["form"] = matrix_to_json(w.form);
    j["lines"] = vecs_to_json(w.lines);
    if (w.is_normalized()) j["normalized"] = vecs_to_json(w.normalized);
    return j;
}

TwistedWitness twisted_from_json(const Json& j) {
    if (witness_kind(j) != "twisted") throw std::invalid_argument("not a twisted witness file");
    TwistedWitness w;
    w.seq = derive_twisted(ints_from_json(j.at("a")), ints_from_json(j.at("b")));
    w.form = matrix_from_json(j.at("form"));
    w.lines = vecs_from_json(j.at("lines"));
    if (j.contains("normalized")) w.normalized = vecs_from_json(j.at("normalized"));
    return w;
}

}  // namespace weylwit::tools
