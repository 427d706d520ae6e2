#include "chopf/pairing.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace chopf {

std::string PBWMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* sym, int exp) {
        if (exp == 0) return;
        if (!first) os << "*";
        first = false;
        os << sym;
        if (exp != 1) os << "^" << exp;
    };
    emit("E", e);
    emit("K", k);
    emit("F", f);
    return os.str();
}

std::vector<Word> words_up_to(const RegistryPtr& reg, int max_len) {
    const ColourTag one = ColourTag::one(reg);
    const std::array<std::pair<int, int>, 4> letters{{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
    std::vector<Word> out{Word{}};
    std::vector<Word> level{Word{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        next.reserve(level.size() * letters.size());
        for (const auto& w : level)
            for (const auto& [i, j] : letters) {
                Word nw = w;
                nw.emplace_back(i, j, one);
                next.push_back(std::move(nw));
            }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<PBWMonomial> pbw_monomials_up_to(int max_degree) {
    std::vector<PBWMonomial> out;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int a = deg; a >= 0; --a) {
            const int rem = deg - a;
            for (int b = rem; b >= -rem; --b) {
                const int c = rem - (b < 0 ? -b : b);
                out.push_back({a, b, c});
            }
        }
    return out;
}

namespace {

struct IteratedImages {
    RingMatrix e, f, k, kinv;
};

// Images of Delta^{(len-1)} of the generators in D^{⊗len}, built by the
// recursion induced by Delta(E)=E⊗K+1⊗E, Delta(F)=F⊗1+K^{-1}⊗F.
IteratedImages iterated_images(const ModelSpec& model, int len,
                               const std::optional<ColourTag>& twist) {
    auto base = [&](Generator g) {
        return twist ? sigma_conjugate(*twist, model.rep(g)) : model.rep(g);
    };
    const RingMatrix de = base(Generator::E), df = base(Generator::F);
    const RingMatrix dk = base(Generator::K), dki = base(Generator::Kinv);
    IteratedImages img{de, df, dk, dki};
    std::size_t dim = 2;
    for (int step = 1; step < len; ++step) {
        const RingMatrix id = RingMatrix::identity(model.registry(), dim);
        img.e = kron(img.e, dk) + kron(id, de);
        img.f = kron(img.f, RingMatrix::identity(model.registry(), 2)) + kron(img.kinv, df);
        img.k = kron(img.k, dk);
        img.kinv = kron(img.kinv, dki);
        dim *= 2;
    }
    return img;
}

LaurentPoly rho_word_factor(const Word& w, const ColourTag& nu, bool corrupted) {
    LaurentPoly f = LaurentPoly::constant(nu.poly().registry(), 1);
    for (const auto& l : w) {
        if (corrupted) {
            // drop the c_j factor
            if (l.i == 1) f *= nu.inverse().poly();
        } else {
            f *= rho_letter_factor(l.i, l.j, nu);
        }
    }
    return f;
}

CheckReport duality_report(const ModelSpec& model, const ColourTag& nu, int degree,
                           bool corrupted, const std::string& name) {
    const auto words = words_up_to(model.registry(), degree);
    const auto pbws = pbw_monomials_up_to(degree);
    RingMatrix residual(model.registry(), words.size(), pbws.size());
    for (std::size_t r = 0; r < words.size(); ++r) {
        const LaurentPoly scale = rho_word_factor(words[r], nu, corrupted);
        for (std::size_t c = 0; c < pbws.size(); ++c) {
            const LaurentPoly lhs = scale * pair_word_pbw(model, words[r], pbws[c], nu);
            const LaurentPoly rhs = pair_word_pbw(model, words[r], pbws[c]);
            residual.at(r, c) = lhs - rhs;
        }
    }
    nlohmann::ordered_json ctx;
    ctx["nu"] = nu.str();
    ctx["degree"] = degree;
    if (corrupted) ctx["control"] = "rho drops the c_j factor";
    return make_report(name, std::move(ctx), {{"pairing-table", std::move(residual)}});
}

}  // namespace

LaurentPoly pair_word_pbw(const ModelSpec& model, const Word& w, const PBWMonomial& x,
                          const std::optional<ColourTag>& twist) {
    if (x.e < 0 || x.f < 0) throw std::invalid_argument("negative E/F exponent in PBW monomial");
    const int len = static_cast<int>(w.size());
    if (len == 0) {
        // <1, X> = eps(X)
        return LaurentPoly::constant(model.registry(), x.e == 0 && x.f == 0 ? 1 : 0);
    }
    const IteratedImages img = iterated_images(model, len, twist);
    RingMatrix m = RingMatrix::identity(model.registry(), std::size_t(1) << len);
    for (int i = 0; i < x.e; ++i) m = m * img.e;
    const RingMatrix& kpow = x.k >= 0 ? img.k : img.kinv;
    for (int i = 0; i < (x.k >= 0 ? x.k : -x.k); ++i) m = m * kpow;
    for (int i = 0; i < x.f; ++i) m = m * img.f;
    std::size_t row = 0, col = 0;
    for (const auto& l : w) {
        row = row * 2 + static_cast<std::size_t>(l.i - 1);
        col = col * 2 + static_cast<std::size_t>(l.j - 1);
    }
    return m.at(row, col);
}

CheckReport check_duality_compat(const ModelSpec& model, const ColourTag& nu, int degree) {
    return duality_report(model, nu, degree, false, "duality-compat");
}

CheckReport check_duality_corrupted_control(const ModelSpec& model, const ColourTag& nu,
                                            int degree) {
    return duality_report(model, nu, degree, true, "duality-negative-control");
}

RationalMatrix GramTable::numeric() const {
    if (!q_eval) throw std::domain_error("gram table was not evaluated");
    RationalMatrix m(words.size(), pbws.size());
    for (std::size_t r = 0; r < words.size(); ++r)
        for (std::size_t c = 0; c < pbws.size(); ++c) m.at(r, c) = at(r, c).constant_value();
    return m;
}

GramTable gram_matrix(const ModelSpec& model, int degree,
                      const std::optional<Rational>& q_eval) {
    if (degree < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (q_eval) {
        const Rational& qv = *q_eval;
        if (is_zero(qv) || qv == 1 || qv == -1)
            throw std::invalid_argument("degenerate deformation point q in {0, 1, -1}");
    }
    GramTable g;
    g.degree = degree;
    g.q_eval = q_eval;
    g.words = words_up_to(model.registry(), degree);
    g.pbws = pbw_monomials_up_to(degree);
    g.values.reserve(g.words.size() * g.pbws.size());
    std::map<std::string, LaurentPoly> assign;
    if (q_eval)
        assign.emplace("q", LaurentPoly::constant(model.registry(), *q_eval));
    for (const auto& w : g.words)
        for (const auto& x : g.pbws) {
            LaurentPoly v = pair_word_pbw(model, w, x);
            if (q_eval) v = v.substitute(model.registry(), assign);
            g.values.push_back(std::move(v));
        }
    if (q_eval) g.rank = g.numeric().rank();
    return g;
}

CheckReport truncated_t_check(const ModelSpec& model, int degree, const Rational& q_eval,
                              const std::vector<FreeElem>& unit_relations) {
    GramTable gram = gram_matrix(model, degree, q_eval);
    const RationalMatrix n = gram.numeric();
    const auto elim = n.eliminate();
    if (elim.rank == 0) throw std::domain_error("gram block has rank 0");

    nlohmann::ordered_json ctx;
    ctx["degree"] = degree;
    ctx["q"] = rational_to_string(q_eval);
    ctx["rows"] = gram.words.size();
    ctx["cols"] = gram.pbws.size();
    ctx["rank"] = elim.rank;
    ctx["rank_deficient"] = elim.rank < std::min(gram.words.size(), gram.pbws.size());

    const RationalMatrix block = n.submatrix(elim.pivot_rows, elim.pivot_cols);
    const RationalMatrix binv = block.inverse();

    std::vector<NamedResidual> residuals;
    const RegistryPtr& reg = model.registry();
    auto as_row = [&](const std::vector<Rational>& v) {
        RingMatrix m(reg, 1, v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            m.at(0, i) = LaurentPoly::constant(reg, v[i]);
        return m;
    };

    // Counit law (eps~ ⊗ id)T = 1: the dual basis must satisfy
    // <x^A, 1> = delta_{A,unit} on the retained block.
    std::size_t unit_col = gram.pbws.size();
    for (std::size_t c = 0; c < gram.pbws.size(); ++c)
        if (gram.pbws[c].is_unit()) unit_col = c;
    const auto unit_pos_it = std::find(elim.pivot_cols.begin(), elim.pivot_cols.end(), unit_col);
    std::size_t empty_row = gram.words.size();
    for (std::size_t r = 0; r < gram.words.size(); ++r)
        if (gram.words[r].empty()) empty_row = r;
    const auto empty_pos_it = std::find(elim.pivot_rows.begin(), elim.pivot_rows.end(), empty_row);
    ctx["unit_column_retained"] = unit_pos_it != elim.pivot_cols.end();
    ctx["empty_word_row_retained"] = empty_pos_it != elim.pivot_rows.end();

    {
        std::vector<Rational> law1(elim.rank, Rational(0));
        if (unit_pos_it != elim.pivot_cols.end()) {
            const std::size_t unit_pos =
                static_cast<std::size_t>(unit_pos_it - elim.pivot_cols.begin());
            for (std::size_t a = 0; a < elim.rank; ++a) {
                Rational acc(0);
                for (std::size_t wpos = 0; wpos < elim.rank; ++wpos)
                    acc += binv.at(a, wpos) * n.at(elim.pivot_rows[wpos], unit_col);
                law1[a] = acc - Rational(a == unit_pos ? 1 : 0);
            }
        } else {
            law1.assign(elim.rank, Rational(1));  // law cannot hold without the unit column
        }
        residuals.push_back({"counit-law-dual-of-unit", as_row(law1)});
    }
    {
        std::vector<Rational> law2(elim.rank, Rational(0));
        if (empty_pos_it != elim.pivot_rows.end()) {
            const std::size_t empty_pos =
                static_cast<std::size_t>(empty_pos_it - elim.pivot_rows.begin());
            for (std::size_t wpos = 0; wpos < elim.rank; ++wpos) {
                Rational acc(0);
                for (std::size_t a = 0; a < elim.rank; ++a) {
                    const PBWMonomial& xa = gram.pbws[elim.pivot_cols[a]];
                    if (xa.e == 0 && xa.f == 0) acc += binv.at(a, wpos);
                }
                law2[wpos] = acc - Rational(wpos == empty_pos ? 1 : 0);
            }
        } else {
            law2.assign(elim.rank, Rational(1));
        }
        residuals.push_back({"counit-law-eps-expansion", as_row(law2)});
    }

    const std::size_t full_kernel_dim = gram.words.size() - elim.rank;
    ctx["left_kernel_dim"] = full_kernel_dim;

    if (degree == 2 && !unit_relations.empty()) {
        // Homogeneous length-2 block: the RTT relations live there, and only
        // there can "kernel = relation span" hold exactly.
        std::vector<std::size_t> len2_rows;
        std::map<Word, std::size_t, WordLess> word_pos;
        for (std::size_t r = 0; r < gram.words.size(); ++r)
            if (gram.words[r].size() == 2) {
                word_pos.emplace(gram.words[r], len2_rows.size());
                len2_rows.push_back(r);
            }
        std::vector<std::size_t> all_cols(gram.pbws.size());
        for (std::size_t c = 0; c < gram.pbws.size(); ++c) all_cols[c] = c;
        const RationalMatrix block2 = n.submatrix(len2_rows, all_cols);
        const auto block_kernel = block2.left_kernel();

        std::vector<std::vector<Rational>> rel_rows;
        for (const auto& rel : unit_relations) {
            std::vector<Rational> row(len2_rows.size(), Rational(0));
            for (const auto& [w, coeff] : rel.terms()) {
                auto it = word_pos.find(w);
                if (it == word_pos.end())
                    throw std::invalid_argument("relation term is not a length-2 word");
                row[it->second] = coeff.eval_at({{"q", q_eval}}).constant_value();
            }
            rel_rows.push_back(std::move(row));
        }
        const RationalMatrix rel_m = RationalMatrix::from_rows(rel_rows);
        const std::size_t rel_rank = rel_m.rank();

        // Relations must annihilate the pairing table.
        const RationalMatrix annih = rel_m * block2;
        RingMatrix annih_res(reg, annih.rows(), annih.cols());
        for (std::size_t r = 0; r < annih.rows(); ++r)
            for (std::size_t c = 0; c < annih.cols(); ++c)
                annih_res.at(r, c) = LaurentPoly::constant(reg, annih.at(r, c));
        residuals.push_back({"relations-annihilate-gram", std::move(annih_res)});

        // Span equality: rank(relations) == dim(block kernel) == rank(union).
        std::vector<std::vector<Rational>> stacked = rel_rows;
        stacked.insert(stacked.end(), block_kernel.begin(), block_kernel.end());
        const std::size_t union_rank = RationalMatrix::from_rows(stacked).rank();
        std::vector<Rational> span_dev{
            Rational(static_cast<long>(block_kernel.size())) - Rational(static_cast<long>(rel_rank)),
            Rational(static_cast<long>(union_rank)) - Rational(static_cast<long>(rel_rank))};
        residuals.push_back({"kernel-equals-relation-span", as_row(span_dev)});

        ctx["block_kernel_dim"] = block_kernel.size();
        ctx["relation_rank"] = rel_rank;
        ctx["kernel_matches_relations"] =
            block_kernel.size() == rel_rank && union_rank == rel_rank;
        ctx["truncation_artifact_dim"] = full_kernel_dim - block_kernel.size();
    }

    return make_report("t-check", std::move(ctx), std::move(residuals));
}

}  // namespace chopf
