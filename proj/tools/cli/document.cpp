#include "cli/document.hpp"

#include <set>

namespace hopfaz::cli {

using json = nlohmann::ordered_json;

namespace {

std::string escape_token(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape_token(key); }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

const json& member(const json& obj, const std::string& ptr, const std::string& key)
{
    if (!obj.contains(key)) throw DocumentError(ptr, "missing required member '" + key + "'");
    return obj.at(key);
}

void require_object(const json& j, const std::string& ptr)
{
    if (!j.is_object()) throw DocumentError(ptr, "expected an object");
}

void require_array(const json& j, const std::string& ptr, std::optional<std::size_t> size = std::nullopt)
{
    if (!j.is_array()) throw DocumentError(ptr, "expected an array");
    if (size && j.size() != *size)
        throw DocumentError(ptr, "expected " + std::to_string(*size) + " entries, found " + std::to_string(j.size()));
}

Scalar scalar_at(const Field& f, const json& j, const std::string& ptr)
{
    try {
        if (j.is_number_integer()) return f.from_int(j.get<long long>());
        if (j.is_string()) return f.parse_scalar(j.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError(ptr, e.what());
    }
    throw DocumentError(ptr, "expected an integer or a string scalar such as \"-3/4\"");
}

json scalar_json(const Scalar& s) { return s.to_string(); }

class Labels {
public:
    Labels(const json& j, const std::string& ptr)
    {
        require_array(j, ptr);
        if (j.empty()) throw DocumentError(ptr, "basis must be nonempty");
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (!j[i].is_string()) throw DocumentError(child(ptr, i), "label must be a string");
            std::string l = j[i].get<std::string>();
            if (l.empty() || l.find(',') != std::string::npos) throw DocumentError(child(ptr, i), "label must be nonempty and contain no comma");
            if (!index_.emplace(l, i).second) throw DocumentError(child(ptr, i), "duplicate label '" + l + "'");
            names_.push_back(l);
        }
    }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t at(const json& j, const std::string& ptr) const
    {
        if (!j.is_string()) throw DocumentError(ptr, "expected a basis label");
        auto it = index_.find(j.get<std::string>());
        if (it == index_.end()) throw DocumentError(ptr, "unknown basis label '" + j.get<std::string>() + "'");
        return it->second;
    }
    std::size_t at_key(const std::string& key, const std::string& ptr) const
    {
        auto it = index_.find(key);
        if (it == index_.end()) throw DocumentError(ptr, "unknown basis label '" + key + "'");
        return it->second;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

// {"label": scalar, ...} as a coordinate vector.
Vector sparse_vector(const Field& f, const Labels& labels, const json& j, const std::string& ptr)
{
    require_object(j, ptr);
    Vector v = zero_vector(f, labels.size());
    for (const auto& [key, value] : j.items()) {
        std::string p = child(ptr, key);
        v[labels.at_key(key, p)] += scalar_at(f, value, p);
    }
    return v;
}

json sparse_json(const Vector& v, const std::vector<std::string>& labels)
{
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[labels[i]] = scalar_json(v[i]);
    return out;
}

std::vector<Vector> product_table(const Field& f, const Labels& labels, const json& j, const std::string& ptr)
{
    const std::size_t d = labels.size();
    require_array(j, ptr, d);
    std::vector<Vector> mult(d * d);
    for (std::size_t a = 0; a < d; ++a) {
        require_array(j[a], child(ptr, a), d);
        for (std::size_t b = 0; b < d; ++b) mult[a * d + b] = sparse_vector(f, labels, j[a][b], child(child(ptr, a), b));
    }
    return mult;
}

json product_json(const Algebra& alg, const std::vector<std::string>& labels)
{
    json out = json::array();
    for (std::size_t a = 0; a < alg.dim; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < alg.dim; ++b) row.push_back(sparse_json(alg.product(a, b), labels));
        out.push_back(row);
    }
    return out;
}

// [[coeff, left, right], ...] per basis element.
std::vector<std::vector<Term>> term_lists(const Field& f, const Labels& left, const Labels& right, std::size_t count,
                                          const json& j, const std::string& ptr)
{
    require_array(j, ptr, count);
    std::vector<std::vector<Term>> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::string pk = child(ptr, k);
        require_array(j[k], pk);
        for (std::size_t t = 0; t < j[k].size(); ++t) {
            std::string pt = child(pk, t);
            require_array(j[k][t], pt, 3);
            Scalar c = scalar_at(f, j[k][t][0], child(pt, 0));
            std::size_t l = left.at(j[k][t][1], child(pt, 1));
            std::size_t r = right.at(j[k][t][2], child(pt, 2));
            if (!c.is_zero()) out[k].push_back({c, l, r});
        }
    }
    return out;
}

json term_json(const std::vector<std::vector<Term>>& lists, const std::vector<std::string>& left,
               const std::vector<std::string>& right)
{
    json out = json::array();
    for (const auto& terms : lists) {
        json arr = json::array();
        for (const auto& t : terms) arr.push_back(json::array({scalar_json(t.coeff), left[t.left], right[t.right]}));
        out.push_back(arr);
    }
    return out;
}

} // namespace

StructureConstantDocument parse_document(const json& j)
{
    require_object(j, "");
    const json& schema = member(j, "", "schema");
    if (!schema.is_string() || schema.get<std::string>() != kDocumentSchema)
        throw DocumentError("/schema", std::string("expected \"") + kDocumentSchema + "\"");
    static const std::set<std::string> known{"schema", "field", "labels", "mult", "unit", "comult", "counit", "antipode",
                                             "functionals", "comodule_algebra"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw DocumentError(child("", key), "unknown member");

    const json& field_j = member(j, "", "field");
    if (!field_j.is_string()) throw DocumentError("/field", "expected \"rational\" or \"prime:p\"");
    Field f = Field::rational();
    try {
        f = Field::parse(field_j.get<std::string>());
    } catch (const std::exception& e) {
        throw DocumentError("/field", e.what());
    }

    Labels labels(member(j, "", "labels"), "/labels");
    const std::size_t d = labels.size();
    HopfAlgebra h;
    h.labels = labels.names();
    h.algebra.field = f;
    h.algebra.dim = d;
    h.algebra.mult = product_table(f, labels, member(j, "", "mult"), "/mult");
    h.algebra.unit = sparse_vector(f, labels, member(j, "", "unit"), "/unit");
    h.coalgebra.field = f;
    h.coalgebra.dim = d;
    h.coalgebra.comult = term_lists(f, labels, labels, d, member(j, "", "comult"), "/comult");
    const json& counit = member(j, "", "counit");
    require_array(counit, "/counit", d);
    for (std::size_t i = 0; i < d; ++i) h.coalgebra.counit.push_back(scalar_at(f, counit[i], child("/counit", i)));
    const json& antipode = member(j, "", "antipode");
    require_array(antipode, "/antipode", d);
    h.antipode = Matrix(f, d, d);
    for (std::size_t i = 0; i < d; ++i) h.antipode.set_column(i, sparse_vector(f, labels, antipode[i], child("/antipode", i)));

    StructureConstantDocument doc;
    doc.hopf = std::make_shared<const HopfAlgebra>(std::move(h));

    if (j.contains("functionals")) {
        const json& fs = j.at("functionals");
        require_object(fs, "/functionals");
        for (const auto& [name, block] : fs.items()) {
            std::string pn = child("/functionals", name);
            require_object(block, pn);
            Matrix values(f, d, d);
            for (const auto& [key, value] : block.items()) {
                std::string pk = child(pn, key);
                auto comma = key.find(',');
                if (comma == std::string::npos) throw DocumentError(pk, "key must be \"left,right\"");
                std::size_t a = labels.at_key(key.substr(0, comma), pk);
                std::size_t b = labels.at_key(key.substr(comma + 1), pk);
                values(a, b) = scalar_at(f, value, pk);
            }
            doc.functionals.emplace(name, Functional2{values});
        }
    }

    if (j.contains("comodule_algebra")) {
        const json& ca = j.at("comodule_algebra");
        const std::string p = "/comodule_algebra";
        require_object(ca, p);
        Labels al(member(ca, p, "labels"), p + "/labels");
        ComoduleAlgebraBlock block;
        block.algebra.labels = al.names();
        block.algebra.algebra.field = f;
        block.algebra.algebra.dim = al.size();
        block.algebra.algebra.mult = product_table(f, al, member(ca, p, "mult"), p + "/mult");
        block.algebra.algebra.unit = sparse_vector(f, al, member(ca, p, "unit"), p + "/unit");
        block.algebra.coaction = term_lists(f, al, labels, al.size(), member(ca, p, "coaction"), p + "/coaction");
        block.algebra.hopf = doc.hopf;
        if (ca.contains("side")) {
            const json& side = ca.at("side");
            if (side == "plain")
                block.side = CoactionSide::plain;
            else if (side == "opposite")
                block.side = CoactionSide::opposite;
            else
                throw DocumentError(p + "/side", "expected \"plain\" or \"opposite\"");
        }
        doc.comodule_algebra = std::move(block);
    }
    return doc;
}

json emit_document(const StructureConstantDocument& doc)
{
    const HopfAlgebra& h = *doc.hopf;
    json j;
    j["schema"] = kDocumentSchema;
    j["field"] = h.field().to_string();
    j["labels"] = h.labels;
    j["mult"] = product_json(h.algebra, h.labels);
    j["unit"] = sparse_json(h.algebra.unit, h.labels);
    j["comult"] = term_json(h.coalgebra.comult, h.labels, h.labels);
    json counit = json::array();
    for (const auto& c : h.coalgebra.counit) counit.push_back(scalar_json(c));
    j["counit"] = counit;
    json antipode = json::array();
    for (std::size_t i = 0; i < h.dim(); ++i) antipode.push_back(sparse_json(h.antipode.column(i), h.labels));
    j["antipode"] = antipode;
    if (!doc.functionals.empty()) {
        json fs = json::object();
        for (const auto& [name, fn] : doc.functionals) {
            json block = json::object();
            for (std::size_t a = 0; a < h.dim(); ++a)
                for (std::size_t b = 0; b < h.dim(); ++b)
                    if (!fn(a, b).is_zero()) block[h.labels[a] + "," + h.labels[b]] = scalar_json(fn(a, b));
            fs[name] = block;
        }
        j["functionals"] = fs;
    }
    if (doc.comodule_algebra) {
        const ComoduleAlgebra& a = doc.comodule_algebra->algebra;
        json ca;
        ca["labels"] = a.labels;
        ca["mult"] = product_json(a.algebra, a.labels);
        ca["unit"] = sparse_json(a.algebra.unit, a.labels);
        ca["coaction"] = term_json(a.coaction, a.labels, h.labels);
        ca["side"] = doc.comodule_algebra->side == CoactionSide::plain ? "plain" : "opposite";
        j["comodule_algebra"] = ca;
    }
    return j;
}

} // namespace hopfaz::cli
