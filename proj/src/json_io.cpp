#include "defex/json_io.hpp"

#include <cctype>
#include <climits>
#include <sstream>

namespace defex {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

json matrix_to_json(const IntMatrix& m) {
    if (m.empty_shape())
        return json{{"rows", m.rows()}, {"cols", m.cols()}};
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (j.is_object()) {
        std::size_t r = j.at("rows").get<std::size_t>();
        std::size_t c = j.at("cols").get<std::size_t>();
        IntMatrix m(r, c);
        if (j.contains("entries")) {
            const json& e = j.at("entries");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(e.at(i).at(k));
        }
        return m;
    }
    if (!j.is_array()) throw std::invalid_argument("matrix: expected array or shape object");
    std::size_t r = j.size();
    std::size_t c = r == 0 ? 0 : j.at(0).size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (j.at(i).size() != c) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(j.at(i).at(k));
    }
    return m;
}

json group_to_json(const PresentedGroup& g) {
    json rel = json::array();
    for (std::size_t i = 0; i < g.relations().rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < g.generators(); ++j)
            row.push_back(int_to_json(g.relations()(i, j)));
        rel.push_back(std::move(row));
    }
    return json{{"generators", g.generators()}, {"relations", std::move(rel)}};
}

PresentedGroup group_from_json(const json& j) {
    std::size_t gens = j.at("generators").get<std::size_t>();
    const json& rel = j.at("relations");
    IntMatrix m(rel.size(), gens);
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (rel.at(i).size() != gens)
            throw std::invalid_argument("group: relator width != generator count");
        for (std::size_t k = 0; k < gens; ++k) m(i, k) = int_from_json(rel.at(i).at(k));
    }
    return PresentedGroup(gens, std::move(m));
}

json morphism_to_json(const GroupMorphism& f) {
    return json{{"source", group_to_json(f.source())},
                {"target", group_to_json(f.target())},
                {"matrix", matrix_to_json(f.matrix())}};
}

GroupMorphism morphism_from_json(const json& j) {
    PresentedGroup src = group_from_json(j.at("source"));
    PresentedGroup tgt = group_from_json(j.at("target"));
    IntMatrix m = matrix_from_json(j.at("matrix"));
    if (m.rows() != tgt.generators() || m.cols() != src.generators()) {
        // allow array form losing the shape of empty matrices
        if (m.rows() == 0 || m.cols() == 0)
            m = IntMatrix(tgt.generators(), src.generators());
        else
            throw std::invalid_argument("morphism: matrix shape mismatch");
    }
    return GroupMorphism(std::move(src), std::move(tgt), std::move(m));
}

json complex_to_json(const ChainComplex& c) {
    json objects = json::object();
    json diffs = json::object();
    if (c.is_periodic()) {
        for (int r = 0; r < static_cast<int>(c.period()); ++r) {
            objects[std::to_string(r)] = group_to_json(c.object_at(r));
            diffs[std::to_string(r)] = matrix_to_json(c.differential_at(r).matrix());
        }
        return json{{"window", json{{"period", c.period()}}},
                    {"objects", std::move(objects)},
                    {"differentials", std::move(diffs)}};
    }
    for (int n = c.lo(); n <= c.hi(); ++n) {
        objects[std::to_string(n)] = group_to_json(c.object_at(n));
        if (n < c.hi()) diffs[std::to_string(n)] = matrix_to_json(c.differential_at(n).matrix());
    }
    return json{{"window", json::array({c.lo(), c.hi()})},
                {"objects", std::move(objects)},
                {"differentials", std::move(diffs)}};
}

ChainComplex complex_from_json(const json& j) {
    const json& w = j.at("window");
    auto object_of = [&](int n) -> PresentedGroup {
        const json& objs = j.at("objects");
        auto key = std::to_string(n);
        if (!objs.contains(key)) return PresentedGroup::zero();
        return group_from_json(objs.at(key));
    };
    auto matrix_of = [&](int n, const PresentedGroup& src,
                         const PresentedGroup& tgt) -> GroupMorphism {
        const json& d = j.at("differentials");
        auto key = std::to_string(n);
        if (!d.contains(key)) return GroupMorphism::zero(src, tgt);
        IntMatrix m = matrix_from_json(d.at(key));
        if ((m.rows() == 0 || m.cols() == 0) &&
            (m.rows() != tgt.generators() || m.cols() != src.generators()))
            m = IntMatrix(tgt.generators(), src.generators());
        return GroupMorphism(src, tgt, std::move(m));
    };
    if (w.is_object() && w.contains("period")) {
        int t = w.at("period").get<int>();
        if (t < 1) throw std::invalid_argument("complex: period must be >= 1");
        std::vector<PresentedGroup> objs;
        for (int r = 0; r < t; ++r) objs.push_back(object_of(r));
        std::vector<GroupMorphism> diffs;
        for (int r = 0; r < t; ++r) diffs.push_back(matrix_of(r, objs[r], objs[(r + 1) % t]));
        return ChainComplex::periodic(std::move(objs), std::move(diffs));
    }
    int lo = w.at(0).get<int>();
    int hi = w.at(1).get<int>();
    if (lo > hi) return ChainComplex::zero_complex();
    std::vector<PresentedGroup> objs;
    for (int n = lo; n <= hi; ++n) objs.push_back(object_of(n));
    std::vector<GroupMorphism> diffs;
    for (int n = lo; n < hi; ++n) diffs.push_back(matrix_of(n, objs[n - lo], objs[n - lo + 1]));
    return ChainComplex::bounded(lo, std::move(objs), std::move(diffs));
}

json conflation_to_json(const Conflation& c) {
    return json{{"inflation", morphism_to_json(c.inflation)},
                {"deflation", morphism_to_json(c.deflation)}};
}

Conflation conflation_from_json(const json& j) {
    return Conflation{morphism_from_json(j.at("inflation")),
                      morphism_from_json(j.at("deflation"))};
}

json axiom_report_to_json(const AxiomReport& r) {
    json axioms = json::array();
    for (const auto& res : r.results) {
        json entry{{"axiom", axiom_name(res.axiom)},
                   {"status", axiom_status_name(res.status)},
                   {"samples", res.samples}};
        if (!res.witness.empty())
            entry["witness"] = json::parse(res.witness);
        else
            entry["witness"] = nullptr;
        axioms.push_back(std::move(entry));
    }
    return json{{"structure", r.structure},
                {"seed", r.seed},
                {"budget", r.budget},
                {"axioms", std::move(axioms)}};
}

PresentedGroup parse_group_spec(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty group spec");
    if (t[0] == '{') return group_from_json(json::parse(text));
    if (t == "0") return PresentedGroup::zero();

    std::vector<Int> factors;
    std::size_t pos = 0;
    while (pos < t.size()) {
        std::size_t next = t.find('+', pos);
        std::string term = t.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? t.size() : next + 1;

        Int factor;
        std::string body = term;
        long power = 1;
        auto caret = term.find('^');
        if (caret != std::string::npos) {
            body = term.substr(0, caret);
            power = std::stol(term.substr(caret + 1));
            if (power < 0) throw std::invalid_argument("group spec: negative power");
        }
        if (body == "Z")
            factor = 0;
        else if (body.rfind("Z/", 0) == 0)
            factor = Int(body.substr(2));
        else
            throw std::invalid_argument("group spec: expected Z or Z/n, got " + term);
        for (long i = 0; i < power; ++i) factors.push_back(factor);
    }
    return PresentedGroup::from_invariants(factors);
}

}  // namespace defex
