#include "logbundle/io.hpp"

#include <fstream>
#include <sstream>

#include "logbundle/errors.hpp"

namespace logbundle::io {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Json to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"coefficient", to_json(c)}});
    return out;
}

Json to_json(const std::vector<ProjPoint>& pts) {
    Json out = Json::array();
    for (const auto& p : pts) out.push_back(to_json(p.coords()));
    return out;
}

Json to_json(const Arrangement& a) { return {{"n", a.n()}, {"forms", to_json(a.form_list())}}; }

Json to_json(const SteinerTensor& t) {
    Json slices = Json::array();
    for (const auto& s : t.slices) slices.push_back(to_json(s));
    return {{"n", t.dim_v - 1}, {"dim_i", t.dim_i}, {"dim_w", t.dim_w}, {"slices", slices}};
}

Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                      : Rational(Integer(std::to_string(j.get<std::int64_t>())));
    }
    throw InputError("expected a rational string, got " + j.dump());
}

Vector vector_from(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    Vector v;
    for (const auto& x : j) v.push_back(rational_from(x));
    return v;
}

Matrix matrix_from(const Json& j, std::size_t cols) {
    if (!j.is_array()) throw InputError("expected an array of rows");
    std::vector<Vector> rows;
    for (const auto& r : j) {
        rows.push_back(vector_from(r));
        if (cols == 0) cols = rows.back().size();
        if (rows.back().size() != cols) throw InputError("ragged matrix rows");
    }
    return Matrix::from_rows(rows, cols);
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) throw InputError(std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

}  // namespace

MultiPoly poly_from(const Json& j, std::size_t n_vars) {
    if (!j.is_array()) throw InputError("expected a list of polynomial terms");
    MultiPoly p(n_vars);
    for (const auto& term : j) {
        const Json& e = field(term, "exponents");
        if (!e.is_array() || e.size() != n_vars) throw InputError("exponent vector of the wrong length");
        Exponent ex;
        for (const auto& k : e) {
            if (!k.is_number_unsigned()) throw InputError("exponents must be nonnegative integers");
            ex.push_back(k.get<unsigned>());
        }
        p.add_term(ex, rational_from(field(term, "coefficient")));
    }
    return p;
}

std::vector<ProjPoint> points_from(const Json& j) {
    const std::size_t n = size_field(j, "n");
    const Json& list = j.contains("forms") ? j.at("forms") : field(j, "points");
    if (!list.is_array() || list.empty()) throw InputError("expected a nonempty list of coordinate vectors");
    std::vector<ProjPoint> out;
    for (const auto& row : list) {
        Vector v = vector_from(row);
        if (v.size() != n + 1) throw InputError("coordinate vector of length " + std::to_string(v.size()) +
                                                ", expected " + std::to_string(n + 1));
        out.emplace_back(std::move(v));
    }
    return out;
}

Arrangement arrangement_from(const Json& j) { return Arrangement(points_from(j)); }

SteinerTensor tensor_from(const Json& j) {
    const std::size_t n = size_field(j, "n");
    const std::size_t di = size_field(j, "dim_i"), dw = size_field(j, "dim_w");
    const Json& s = field(j, "slices");
    if (!s.is_array() || s.size() != n + 1) throw InputError("expected n+1 slices");
    std::vector<Matrix> slices;
    for (const auto& m : s) {
        Matrix mat = matrix_from(m, di);
        if (mat.rows() != dw) throw InputError("slice must be dim_w x dim_i");
        slices.push_back(std::move(mat));
    }
    return SteinerTensor(std::move(slices));
}

Matrix span_from(const Json& j, std::size_t n) {
    const Json& rows = j.is_object() ? field(j, "rows") : j;
    const Matrix m = matrix_from(rows, n + 1);
    if (m.rows() != 2) throw InputError("expected exactly two rows");
    return m;
}

ProjPoint point_from(const Json& j, std::size_t n) {
    const Json& p = j.is_object() ? field(j, "point") : j;
    Vector v = vector_from(p);
    if (v.size() != n + 1) throw InputError("point of the wrong dimension");
    return ProjPoint(std::move(v));
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace logbundle::io
