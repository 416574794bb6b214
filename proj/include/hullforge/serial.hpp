// JSON serialization for fields, codes, certificates, constructions, and
// tables. Output is canonical: lexicographically sorted keys, two-space
// indent, trailing newline. Parsers validate shape and ranges and rebuild
// through the same constructors as the rest of the library, so malformed or
// tampered payloads fail with the usual precondition errors.

#pragma once

#include "eaqecc.hpp"

#include <json.hpp>

namespace hullforge {

using json = nlohmann::json;

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw PreconditionError(std::string("missing JSON member: ") + key);
    return j.at(key);
}

inline std::uint64_t get_u64(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_unsigned())
        throw PreconditionError(std::string("JSON member must be a nonnegative integer: ") + key);
    return v.get<std::uint64_t>();
}

inline bool get_bool(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_boolean()) throw PreconditionError(std::string("JSON member must be a bool: ") + key);
    return v.get<bool>();
}

inline std::string get_str(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_string()) throw PreconditionError(std::string("JSON member must be a string: ") + key);
    return v.get<std::string>();
}

inline std::vector<Elem> get_elems(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_array()) throw PreconditionError(std::string("JSON member must be an array: ") + key);
    std::vector<Elem> out;
    out.reserve(v.size());
    for (const json& x : v) {
        if (!x.is_number_unsigned())
            throw PreconditionError(std::string("array entries must be nonnegative integers: ") +
                                    key);
        std::uint64_t e = x.get<std::uint64_t>();
        if (e > std::numeric_limits<Elem>::max())
            throw PreconditionError(std::string("array entry out of range: ") + key);
        out.push_back(static_cast<Elem>(e));
    }
    return out;
}

}  // namespace detail

inline json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

inline FieldPtr field_from_json(const json& j) {
    std::uint64_t p = detail::get_u64(j, "p");
    std::uint64_t m = detail::get_u64(j, "m");
    if (p > std::numeric_limits<std::uint32_t>::max() || m > 64)
        throw PreconditionError("field parameters out of range");
    std::vector<Elem> mod = detail::get_elems(j, "modulus");
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), mod);
}

inline json matrix_to_json(const Matrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}};
}

inline Matrix matrix_from_json(const json& j, FieldPtr f) {
    std::uint64_t rows = detail::get_u64(j, "rows");
    std::uint64_t cols = detail::get_u64(j, "cols");
    std::vector<Elem> entries = detail::get_elems(j, "entries");
    if (entries.size() != rows * cols)
        throw PreconditionError("matrix entry count does not match its shape");
    for (Elem e : entries)
        if (e >= f->q()) throw PreconditionError("matrix entry out of field range");
    Matrix out(f, rows, cols);
    out.entries() = std::move(entries);
    return out;
}

inline json code_to_json(const GrsCode& c) {
    return json{{"field", field_to_json(*c.field)},
                {"a", c.a},
                {"v", c.v},
                {"k", c.k},
                {"extended", c.extended}};
}

inline GrsCode code_from_json(const json& j) {
    FieldPtr f = field_from_json(detail::member(j, "field"));
    std::vector<Elem> a = detail::get_elems(j, "a");
    std::vector<Elem> v = detail::get_elems(j, "v");
    std::uint64_t k = detail::get_u64(j, "k");
    if (k == 0 || k > a.size() + 1) throw PreconditionError("code dimension out of range");
    bool extended = detail::get_bool(j, "extended");
    return make_grs(std::move(f), std::move(a), std::move(v), static_cast<std::uint32_t>(k),
                    extended);
}

inline json certificate_to_json(const HullCertificate& c) {
    return json{{"kind", inner_product_name(c.kind)},
                {"dim", c.dim},
                {"basis", matrix_to_json(c.basis)}};
}

inline HullCertificate certificate_from_json(const json& j, FieldPtr f) {
    std::string kind = detail::get_str(j, "kind");
    HullCertificate out;
    if (kind == "euclidean")
        out.kind = InnerProduct::euclidean;
    else if (kind == "hermitian")
        out.kind = InnerProduct::hermitian;
    else
        throw PreconditionError("certificate kind must be euclidean or hermitian");
    std::uint64_t dim = detail::get_u64(j, "dim");
    out.basis = matrix_from_json(detail::member(j, "basis"), std::move(f));
    if (out.basis.rows() != dim) throw PreconditionError("certificate basis row count != dim");
    out.dim = static_cast<std::uint32_t>(dim);
    return out;
}

inline json spec_to_json(const ConstructionSpec& s) {
    return json{{"theorem", theorem_name(s.theorem)},
                {"q", s.q},
                {"r", s.r},
                {"z", s.z},
                {"t", s.t},
                {"nprime", s.nprime},
                {"n", s.n},
                {"k", s.k},
                {"ell", s.ell}};
}

inline ConstructionSpec spec_from_json(const json& j) {
    ConstructionSpec s;
    s.theorem = theorem_from_name(detail::get_str(j, "theorem"));
    s.q = detail::get_u64(j, "q");
    s.r = detail::get_u64(j, "r");
    s.z = detail::get_u64(j, "z");
    s.t = detail::get_u64(j, "t");
    s.nprime = detail::get_u64(j, "nprime");
    s.n = detail::get_u64(j, "n");
    s.k = detail::get_u64(j, "k");
    s.ell = detail::get_u64(j, "ell");
    return s;
}

inline json point_set_to_json(const Construction& c) {
    if (c.additive) {
        const AdditivePointSet& s = *c.additive;
        return json{{"kind", "additive"}, {"r", s.r},          {"z", s.z},
                    {"t", s.t},           {"eta", s.eta},      {"epsilon", s.epsilon},
                    {"betas", s.betas}};
    }
    if (c.multiplicative) {
        const MultiplicativePointSet& s = *c.multiplicative;
        return json{{"kind", "multiplicative"},
                    {"nprime", s.nprime},
                    {"t", s.t},
                    {"with_zero", s.with_zero},
                    {"leaders", s.leaders}};
    }
    return json{{"kind", "explicit"}};
}

inline json construction_to_json(const Construction& c) {
    return json{{"code", code_to_json(c.code)},
                {"certificate", certificate_to_json(c.certificate)},
                {"spec", spec_to_json(c.spec)},
                {"point_set", point_set_to_json(c)}};
}

inline json params_to_json(const EaqeccParams& p) {
    return json{{"n", p.n}, {"kappa", p.kappa}, {"d", p.d}, {"c", p.c}, {"q", p.q}};
}

inline json table_to_json(TableFamily family, const std::vector<TableRow>& rows, bool payload) {
    json out{{"family", family_name(family)}, {"rows", json::array()}};
    for (const TableRow& r : rows) {
        json row{{"k", r.k}, {"ell", r.ell}, {"params", params_to_json(r.params)}};
        if (payload) row["construction"] = construction_to_json(r.constr);
        out["rows"].push_back(std::move(row));
    }
    return out;
}

}  // namespace hullforge
