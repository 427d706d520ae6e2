#include "chopf/json_io.hpp"

namespace chopf {

OrderedJson poly_to_json(const LaurentPoly& p) {
    OrderedJson terms = OrderedJson::array();
    const auto& names = p.registry()->names();
    for (const auto& [exps, coeff] : p.terms()) {
        OrderedJson e = OrderedJson::object();
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) e[names[i]] = exps[i];
        OrderedJson term;
        term["exps"] = std::move(e);
        term["coeff"] = rational_to_string(coeff);
        terms.push_back(std::move(term));
    }
    return terms;
}

OrderedJson matrix_to_json(const RingMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    OrderedJson out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = std::move(rows);
    return out;
}

OrderedJson tag_to_json(const ColourTag& t) {
    OrderedJson arr = poly_to_json(t.poly());
    return arr.empty() ? OrderedJson::object() : arr[0];
}

OrderedJson word_to_json(const Word& w) {
    OrderedJson out = OrderedJson::array();
    for (const auto& l : w) {
        OrderedJson lj;
        lj["i"] = l.i;
        lj["j"] = l.j;
        lj["colour"] = tag_to_json(l.colour);
        out.push_back(std::move(lj));
    }
    return out;
}

OrderedJson elem_to_json(const FreeElem& e) {
    OrderedJson out = OrderedJson::array();
    for (const auto& [w, coeff] : e.terms()) {
        OrderedJson term;
        term["word"] = word_to_json(w);
        term["coeff"] = poly_to_json(coeff);
        out.push_back(std::move(term));
    }
    return out;
}

OrderedJson relations_to_json(const RelationSet& rs) {
    OrderedJson out;
    OrderedJson colours;
    colours["lambda"] = tag_to_json(rs.lambda);
    colours["mu"] = tag_to_json(rs.mu);
    colours["nu"] = tag_to_json(rs.nu);
    out["colours"] = std::move(colours);
    OrderedJson rels = OrderedJson::array();
    for (const auto& rel : rs.relations) {
        OrderedJson rj;
        rj["slot"] = {{"row", {rel.i, rel.k}}, {"col", {rel.j, rel.l}}};
        rj["element"] = elem_to_json(rel.element);
        rels.push_back(std::move(rj));
    }
    out["relations"] = std::move(rels);
    return out;
}

OrderedJson report_to_json(const CheckReport& r) {
    OrderedJson out;
    out["check"] = r.name;
    out["passed"] = r.passed;
    out["context"] = r.context;
    OrderedJson nonzero = OrderedJson::array();
    for (const auto& res : r.residuals) {
        if (res.is_zero()) continue;
        OrderedJson rj;
        rj["label"] = res.label;
        if (const auto* m = std::get_if<RingMatrix>(&res.value)) {
            rj["kind"] = "matrix";
            rj["value"] = matrix_to_json(*m);
        } else {
            rj["kind"] = "element";
            rj["value"] = elem_to_json(std::get<FreeElem>(res.value));
        }
        nonzero.push_back(std::move(rj));
    }
    out["nonzero_residuals"] = std::move(nonzero);
    return out;
}

OrderedJson gram_to_json(const GramTable& g) {
    OrderedJson out;
    out["degree"] = g.degree;
    out["q"] = g.q_eval ? OrderedJson(rational_to_string(*g.q_eval)) : OrderedJson(nullptr);
    OrderedJson words = OrderedJson::array();
    for (const auto& w : g.words) words.push_back(word_to_json(w));
    out["words"] = std::move(words);
    OrderedJson pbws = OrderedJson::array();
    for (const auto& x : g.pbws) {
        OrderedJson xj;
        xj["e"] = x.e;
        xj["k"] = x.k;
        xj["f"] = x.f;
        pbws.push_back(std::move(xj));
    }
    out["pbw"] = std::move(pbws);
    OrderedJson values = OrderedJson::array();
    for (std::size_t r = 0; r < g.words.size(); ++r) {
        OrderedJson row = OrderedJson::array();
        for (std::size_t c = 0; c < g.pbws.size(); ++c) row.push_back(poly_to_json(g.at(r, c)));
        values.push_back(std::move(row));
    }
    out["values"] = std::move(values);
    if (g.rank) out["rank"] = *g.rank;
    return out;
}

OrderedJson model_to_json(const ModelSpec& m) {
    OrderedJson out;
    out["model"] = m.name();
    out["variables"] = m.registry()->names();
    OrderedJson rep, cop, anti, counit;
    for (Generator g : all_generators) {
        const std::string n = generator_name(g);
        rep[n] = matrix_to_json(m.rep(g));
        cop[n] = matrix_to_json(m.coproduct_image(g));
        anti[n] = matrix_to_json(m.antipode_image(g));
        counit[n] = poly_to_json(m.counit(g));
    }
    out["representation"] = std::move(rep);
    out["coproduct_images"] = std::move(cop);
    out["antipode_images"] = std::move(anti);
    out["counit"] = std::move(counit);
    out["r_matrix"] = matrix_to_json(m.r_matrix());
    out["colour_action"] = "sigma^nu = conjugation by diag(nu, 1); E -> nu E, F -> F/nu, K -> K";
    return out;
}

std::string dump_line(const OrderedJson& j) {
    return j.dump() + "\n";
}

}  // namespace chopf
