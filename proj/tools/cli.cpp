#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "chopf/checks.hpp"
#include "chopf/json_io.hpp"
#include "chopf/pairing.hpp"

namespace chopf::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string model = "slq2-colour";
    std::vector<std::string> colours;
    int degree = 2;
    std::string q_str;
    std::string colour_single;  // pair check-duality --colour
    unsigned long long seed = 0;
    std::string out_path;
    int random_n = 0;
    bool corrupt_r = false;
};

bool is_rational_token(const std::string& tok) {
    static const std::regex re(R"(^-?[0-9]+(/[0-9]+)?$)");
    return std::regex_match(tok, re);
}

bool is_identifier(const std::string& tok) {
    static const std::regex re(R"(^[A-Za-z_][A-Za-z0-9_]*$)");
    return std::regex_match(tok, re);
}

// Builds the computation registry: q first, then the distinct symbolic colour
// tokens in first-use order. Keeps output deterministic for a given config.
RegistryPtr registry_for(const std::vector<std::string>& tokens) {
    std::vector<std::string> names{"q"};
    for (const auto& tok : tokens) {
        if (is_rational_token(tok)) continue;
        if (!is_identifier(tok))
            throw ConfigError("colour token is neither a rational nor an identifier: " + tok);
        if (tok == "q") throw ConfigError("'q' is the deformation parameter, not a colour");
        if (std::find(names.begin(), names.end(), tok) == names.end()) names.push_back(tok);
    }
    return make_registry(std::move(names));
}

ColourTag tag_for(const RegistryPtr& reg, const std::string& tok) {
    if (is_rational_token(tok)) {
        Rational v = rational_from_string(tok);
        if (is_zero(v)) throw ConfigError("colour values must be nonzero");
        return ColourTag(reg, v);
    }
    return ColourTag(reg, tok);
}

ModelSpec load_model(const RunConfig& cfg, const RegistryPtr& reg) {
    if (cfg.model != "slq2-colour")
        throw ConfigError("unknown model: " + cfg.model + " (available: slq2-colour)");
    return ModelSpec::slq2_colour(reg, cfg.corrupt_r);
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int n = 0;
    while (n == 0) n = num(rng);
    return make_rational(n, den(rng));
}

class Reporter {
public:
    Reporter(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    void add(const CheckReport& report) {
        all_passed_ &= report.passed;
        out_ << dump_line(report_to_json(report));
        err_ << report.name << ": " << (report.passed ? "PASS" : "FAIL") << "\n";
    }

    // For controls and property groups: `ok` already encodes the expectation.
    void add_line(const std::string& name, bool ok, OrderedJson context) {
        all_passed_ &= ok;
        OrderedJson j;
        j["check"] = name;
        j["passed"] = ok;
        j["context"] = std::move(context);
        out_ << dump_line(j);
        err_ << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    }

    int exit_code() const { return all_passed_ ? kExitOk : kExitCheckFailed; }

private:
    std::ostream& out_;
    std::ostream& err_;
    bool all_passed_ = true;
};

std::vector<std::string> default_colours(const std::string& kind) {
    if (kind == "coassoc") return {"a", "b", "l", "m", "k", "n"};
    return {"l", "m", "n"};
}

std::size_t colour_arity(const std::string& kind) { return kind == "coassoc" ? 6 : 3; }

CheckReport run_one_check(const std::string& kind, const ModelSpec& model,
                          const std::vector<ColourTag>& tags) {
    if (kind == "ybe") return check_cybe(model, tags[0], tags[1], tags[2]);
    if (kind == "coassoc")
        return check_coassoc_coloured(model, tags[0], tags[1], tags[2], tags[3], tags[4], tags[5]);
    if (kind == "counit") return check_counit_coloured(model, tags[0], tags[1], tags[2]);
    if (kind == "antipode") return check_antipode_coloured(model, tags[0], tags[1], tags[2]);
    if (kind == "rtt")
        return check_rtt_consistency(model,
                                     derive_rtt_relations(model, tags[0], tags[1], tags[2]));
    throw ConfigError("unknown check: " + kind);
}

int cmd_check(const std::string& kind, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
    Reporter rep(out, err);
    if (cfg.random_n > 0) {
        if (!cfg.colours.empty())
            throw ConfigError("--random and --colours are mutually exclusive");
        std::mt19937_64 rng(cfg.seed);
        RegistryPtr reg = registry_for({});
        ModelSpec model = load_model(cfg, reg);
        for (int t = 0; t < cfg.random_n; ++t) {
            std::vector<ColourTag> tags;
            for (std::size_t i = 0; i < colour_arity(kind); ++i)
                tags.emplace_back(reg, random_nonzero_rational(rng));
            CheckReport r = run_one_check(kind, model, tags);
            r.name += "-random-" + std::to_string(t);
            r.context["trial"] = t;
            r.context["seed"] = cfg.seed;
            rep.add(r);
        }
        return rep.exit_code();
    }
    std::vector<std::string> tokens = cfg.colours.empty() ? default_colours(kind) : cfg.colours;
    if (tokens.size() != colour_arity(kind))
        throw ConfigError("check " + kind + " needs " + std::to_string(colour_arity(kind)) +
                          " colours" + (kind == "coassoc" ? " (alpha,beta,lambda,mu,kappa,nu)" : ""));
    RegistryPtr reg = registry_for(tokens);
    ModelSpec model = load_model(cfg, reg);
    std::vector<ColourTag> tags;
    for (const auto& tok : tokens) tags.push_back(tag_for(reg, tok));
    rep.add(run_one_check(kind, model, tags));
    return rep.exit_code();
}

int cmd_derive_rtt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<std::string> tokens = cfg.colours.empty() ? default_colours("rtt") : cfg.colours;
    if (tokens.size() != 3) throw ConfigError("derive rtt needs 3 colours (lambda,mu,nu)");
    RegistryPtr reg = registry_for(tokens);
    ModelSpec model = load_model(cfg, reg);
    RelationSet rs =
        derive_rtt_relations(model, tag_for(reg, tokens[0]), tag_for(reg, tokens[1]),
                             tag_for(reg, tokens[2]));
    const std::string text = relations_to_json(rs).dump(2) + "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + cfg.out_path);
        f << text;
        err << "wrote " << rs.relations.size() << " relations to " << cfg.out_path << "\n";
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_model_dump(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RegistryPtr reg = registry_for({"l", "m", "n"});
    ModelSpec model = load_model(cfg, reg);
    const std::string text = model_to_json(model).dump(2) + "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + cfg.out_path);
        f << text;
        err << "wrote model '" << model.name() << "' to " << cfg.out_path << "\n";
    } else {
        out << text;
    }
    return kExitOk;
}

int cmd_pair_gram(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RegistryPtr reg = registry_for({});
    ModelSpec model = load_model(cfg, reg);
    std::optional<Rational> qv;
    if (!cfg.q_str.empty()) qv = rational_from_string(cfg.q_str);
    GramTable g = gram_matrix(model, cfg.degree, qv);
    const std::string text = gram_to_json(g).dump(2) + "\n";
    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw ConfigError("cannot open output file: " + cfg.out_path);
        f << text;
    } else {
        out << text;
    }
    if (g.rank)
        err << "gram degree " << cfg.degree << ": " << g.words.size() << "x" << g.pbws.size()
            << ", rank " << *g.rank << "\n";
    return kExitOk;
}

int cmd_pair_duality(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const std::string tok = cfg.colour_single.empty() ? "n" : cfg.colour_single;
    RegistryPtr reg = registry_for({tok});
    ModelSpec model = load_model(cfg, reg);
    Reporter rep(out, err);
    rep.add(check_duality_compat(model, tag_for(reg, tok), cfg.degree));
    return rep.exit_code();
}

int cmd_pair_tcheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.q_str.empty()) throw ConfigError("pair t-check requires --q");
    RegistryPtr reg = registry_for({});
    ModelSpec model = load_model(cfg, reg);
    const ColourTag one = ColourTag::one(reg);
    std::vector<FreeElem> unit_relations;
    if (cfg.degree >= 2)
        for (const auto& rel : derive_rtt_relations(model, one, one, one).relations)
            unit_relations.push_back(rel.element);
    Reporter rep(out, err);
    rep.add(truncated_t_check(model, cfg.degree, rational_from_string(cfg.q_str), unit_relations));
    return rep.exit_code();
}

// ---- selftest ------------------------------------------------------------

LaurentPoly random_poly(const RegistryPtr& reg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), expo(-2, 2), coeff(-4, 4);
    LaurentPoly p = LaurentPoly::zero(reg);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<int> e(reg->size());
        for (auto& x : e) x = expo(rng);
        p += LaurentPoly::monomial(reg, std::move(e), Rational(coeff(rng)));
    }
    return p;
}

RingMatrix random_matrix(const RegistryPtr& reg, std::size_t n, std::mt19937_64& rng) {
    RingMatrix m(reg, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_poly(reg, rng);
    return m;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::mt19937_64 rng(cfg.seed);
    RegistryPtr reg = make_registry({"q", "a", "b", "l", "m", "k", "n"});
    ModelSpec model = load_model(cfg, reg);
    const ColourTag one = ColourTag::one(reg);
    const ColourTag la(reg, "l"), mu(reg, "m"), nu(reg, "n");
    const ColourTag al(reg, "a"), be(reg, "b"), ka(reg, "k");

    struct Line {
        std::string name;
        bool ok;
        OrderedJson context;
    };
    std::vector<Line> lines;
    std::vector<CheckReport> reports;

    // ring axioms on random polynomials
    {
        bool ok = true;
        for (int t = 0; t < 40 && ok; ++t) {
            LaurentPoly a = random_poly(reg, rng), b = random_poly(reg, rng),
                        c = random_poly(reg, rng);
            ok &= (a + b) + c == a + (b + c);
            ok &= a * b == b * a;
            ok &= a * (b + c) == a * b + a * c;
            ok &= a + LaurentPoly::zero(reg) == a;
            ok &= a * LaurentPoly::constant(reg, 1) == a;
            ok &= (a - a).is_zero();
        }
        lines.push_back({"selftest/ring-axioms", ok, {{"trials", 40}, {"seed", cfg.seed}}});
    }
    // substitution is a ring homomorphism
    {
        bool ok = true;
        std::map<std::string, LaurentPoly> assign{
            {"l", LaurentPoly::constant(reg, Rational(2))},
            {"m", LaurentPoly::variable(reg, "n")}};
        for (int t = 0; t < 20 && ok; ++t) {
            LaurentPoly a = random_poly(reg, rng), b = random_poly(reg, rng);
            ok &= (a * b).substitute(reg, assign) ==
                  a.substitute(reg, assign) * b.substitute(reg, assign);
            ok &= (a + b).substitute(reg, assign) ==
                  a.substitute(reg, assign) + b.substitute(reg, assign);
        }
        lines.push_back({"selftest/ring-substitution", ok, {{"trials", 20}}});
    }
    // tensor: mixed product and embed oracle
    {
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            RingMatrix a = random_matrix(reg, 2, rng), b = random_matrix(reg, 2, rng);
            RingMatrix c = random_matrix(reg, 2, rng), d = random_matrix(reg, 2, rng);
            ok &= kron(a, b) * kron(c, d) == kron(a * c, b * d);
        }
        lines.push_back({"selftest/tensor-mixed-product", ok, {{"trials", 10}}});
    }
    {
        bool ok = true;
        for (int t = 0; t < 5 && ok; ++t) {
            RingMatrix r = random_matrix(reg, 4, rng), s = random_matrix(reg, 4, rng);
            RingMatrix lhs = embed_leg(r, LegPair::L12) * embed_leg(s, LegPair::L23);
            auto ri = [&](std::size_t i1, std::size_t i2, std::size_t i3) {
                return i1 * 4 + i2 * 2 + i3;
            };
            RingMatrix direct(reg, 8, 8);
            for (std::size_t i1 = 0; i1 < 2; ++i1)
                for (std::size_t i2 = 0; i2 < 2; ++i2)
                    for (std::size_t i3 = 0; i3 < 2; ++i3)
                        for (std::size_t j1 = 0; j1 < 2; ++j1)
                            for (std::size_t j2 = 0; j2 < 2; ++j2)
                                for (std::size_t j3 = 0; j3 < 2; ++j3) {
                                    LaurentPoly acc = LaurentPoly::zero(reg);
                                    for (std::size_t x = 0; x < 2; ++x)
                                        acc += r.at(i1 * 2 + i2, j1 * 2 + x) *
                                               s.at(x * 2 + i3, j2 * 2 + j3);
                                    direct.at(ri(i1, i2, i3), ri(j1, j2, j3)) = acc;
                                }
            ok &= lhs == direct;
        }
        lines.push_back({"selftest/tensor-embed-oracle", ok, {{"trials", 5}}});
    }
    // free algebra: concatenation and coloured product structure
    {
        FreeElem x = FreeElem::letter(reg, 1, 1, la) + FreeElem::letter(reg, 1, 2, la);
        FreeElem y = FreeElem::letter(reg, 2, 1, la);
        FreeElem z = FreeElem::letter(reg, 2, 2, la);
        bool ok = (x * y) * z == x * (y * z);
        ok &= FreeElem::unit(reg) * x == x && x * FreeElem::unit(reg) == x;
        FreeElem xl = FreeElem::letter(reg, 1, 2, la), ym = FreeElem::letter(reg, 2, 1, la);
        ok &= coloured_product(xl, ym, la) == xl * ym;  // unit-colour reduction
        lines.push_back({"selftest/freealg-concat", ok, {}});
    }
    {
        // coloured coassociativity analogue: ((x ∘k y) ∘n z) == cp with
        // rescaling composed through an intermediate colour.
        FreeElem x = FreeElem::letter(reg, 1, 2, la);
        FreeElem y = FreeElem::letter(reg, 2, 1, mu);
        FreeElem z = FreeElem::letter(reg, 1, 1, ka);
        FreeElem lhs = coloured_product(coloured_product(x, y, be), z, nu);
        FreeElem rhs = coloured_product(x, coloured_product(y, z, be), nu);
        lines.push_back({"selftest/freealg-cp-coassoc", lhs == rhs, {}});
    }
    // model structure
    {
        const RingMatrix de = model.rep(Generator::E), df = model.rep(Generator::F);
        const RingMatrix dk = model.rep(Generator::K), dki = model.rep(Generator::Kinv);
        const LaurentPoly q = model.q(), qi = q.inverse_monomial();
        bool ok = dk * de * dki == de.scaled(q * q);
        ok &= dk * df * dki == df.scaled(qi * qi);
        RingMatrix comm = de * df - df * de;
        RingMatrix rhs(reg, 2, 2);
        rhs.at(0, 0) = LaurentPoly::constant(reg, 1);
        rhs.at(1, 1) = LaurentPoly::constant(reg, -1);
        ok &= comm == rhs;
        ok &= (dk * dki) == RingMatrix::identity(reg, 2);
        lines.push_back({"selftest/model-representation-relations", ok, {}});
    }
    {
        bool ok = true;
        for (Generator g : all_generators) {
            RingMatrix m = model.rep(g);
            ok &= sigma_conjugate(la, sigma_conjugate(mu, m)) == sigma_conjugate(la * mu, m);
            ok &= sigma_conjugate(one, m) == m;
        }
        lines.push_back({"selftest/model-sigma-group", ok, {}});
    }
    {
        // coloured quasitriangularity in the representation
        bool ok = true;
        const RingMatrix r = coloured_r_matrix(model, la, mu);
        for (Generator g : all_generators) {
            RingMatrix lhs = r * coloured_coproduct(model, g, la, mu, nu);
            RingMatrix rhs = flip_conjugate(coloured_coproduct(model, g, mu, la, nu)) * r;
            ok &= lhs == rhs;
        }
        lines.push_back({"selftest/model-intertwining", ok, {}});
    }
    {
        // R^{lm} depends on colours only through l/m
        RingMatrix a = coloured_r_matrix(model, la * ka, mu * ka);
        RingMatrix b = coloured_r_matrix(model, la, mu);
        lines.push_back({"selftest/model-r-ratio", a == b, {}});
    }

    // core checks, symbolic
    reports.push_back(check_cybe(model, la, mu, nu));
    reports.back().name = "check/ybe-symbolic";
    reports.push_back(check_coassoc_coloured(model, al, be, la, mu, ka, nu));
    reports.back().name = "check/coassoc-symbolic";
    reports.push_back(check_counit_coloured(model, la, mu, nu));
    reports.back().name = "check/counit-symbolic";
    reports.push_back(check_antipode_coloured(model, la, mu, nu));
    reports.back().name = "check/antipode-symbolic";
    reports.push_back(check_rtt_consistency(model, derive_rtt_relations(model, la, mu, nu)));
    reports.back().name = "check/rtt-consistency-symbolic";
    reports.push_back(check_duality_compat(model, nu, 2));
    reports.back().name = "pair/duality-symbolic-d2";

    // uncoloured specializations
    reports.push_back(check_cybe(model, one, one, one));
    reports.back().name = "check/ybe-unit-colour";
    reports.push_back(check_rtt_consistency(model, derive_rtt_relations(model, one, one, one)));
    reports.back().name = "check/rtt-consistency-unit-colour";

    // random rational colour triples
    {
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            ColourTag cl(reg, random_nonzero_rational(rng));
            ColourTag cm(reg, random_nonzero_rational(rng));
            ColourTag cn(reg, random_nonzero_rational(rng));
            ColourTag ca(reg, random_nonzero_rational(rng));
            ColourTag cb(reg, random_nonzero_rational(rng));
            ColourTag ck(reg, random_nonzero_rational(rng));
            ok &= check_cybe(model, cl, cm, cn).passed;
            ok &= check_coassoc_coloured(model, ca, cb, cl, cm, ck, cn).passed;
            ok &= check_counit_coloured(model, cl, cm, cn).passed;
            ok &= check_antipode_coloured(model, cl, cm, cn).passed;
            ok &= check_rtt_consistency(model, derive_rtt_relations(model, cl, cm, cn)).passed;
        }
        lines.push_back({"check/random-rational-triples", ok, {{"trials", 20}, {"seed", cfg.seed}}});
    }

    // negative controls: these must FAIL
    lines.push_back({"control/ybe", !check_cybe_negative_control(model, la, mu, nu).passed,
                     {{"expected", "failure"}}});
    lines.push_back(
        {"control/coassoc", !check_coassoc_mismatch_control(model, al, be, la, mu, ka, nu).passed,
         {{"expected", "failure"}}});
    lines.push_back({"control/counit",
                     !check_counit_wrong_target_control(model, la, mu, nu).passed,
                     {{"expected", "failure"}}});
    lines.push_back({"control/antipode",
                     !check_antipode_wrong_colour_control(model, la, mu, nu).passed,
                     {{"expected", "failure"}}});
    {
        RelationSet rs = derive_rtt_relations(model, la, mu, nu);
        rs.relations[1].element =
            rs.relations[1].element.scaled(LaurentPoly::constant(reg, 2));
        lines.push_back({"control/rtt", !check_rtt_consistency(model, rs).passed,
                         {{"expected", "failure"}}});
    }
    lines.push_back({"control/duality", !check_duality_corrupted_control(model, nu, 1).passed,
                     {{"expected", "failure"}}});

    // truncated T-matrix laws
    {
        const Rational q32 = make_rational(3, 2);
        std::vector<FreeElem> unit_rels;
        for (const auto& rel : derive_rtt_relations(model, one, one, one).relations)
            unit_rels.push_back(rel.element);
        reports.push_back(truncated_t_check(model, 1, q32));
        reports.back().name = "pair/t-check-d1";
        reports.push_back(truncated_t_check(model, 2, q32, unit_rels));
        reports.back().name = "pair/t-check-d2";
    }

    for (const auto& r : reports) lines.push_back({r.name, r.passed, r.context});
    std::sort(lines.begin(), lines.end(),
              [](const Line& a, const Line& b) { return a.name < b.name; });

    Reporter rep(out, err);
    for (const auto& l : lines) rep.add_line(l.name, l.ok, l.context);
    err << (rep.exit_code() == kExitOk ? "selftest: all checks passed"
                                       : "selftest: FAILURES present")
        << " (" << lines.size() << " entries)\n";
    return rep.exit_code();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"exact symbolic verification for a coloured U_q(sl2) Hopf model"};
    app.require_subcommand(1);
    app.fallthrough(false);

    auto add_common = [&](CLI::App* cmd, bool with_colours) {
        cmd->add_option("--model", cfg.model, "model name")->capture_default_str();
        if (with_colours)
            cmd->add_option("--colours", cfg.colours,
                            "comma-separated colour values (identifiers or rationals)")
                ->delimiter(',');
        cmd->add_option("--seed", cfg.seed, "random seed")->envname("CHROMATIC_HOPF_SEED");
        cmd->add_option("--out", cfg.out_path, "output file path");
        cmd->add_flag("--corrupt-r", cfg.corrupt_r,
                      "debug: corrupt an R-matrix entry (checks must fail)");
    };

    CLI::App* check = app.add_subcommand("check", "run a verification check");
    check->require_subcommand(1);
    std::vector<std::pair<std::string, CLI::App*>> check_cmds;
    for (const char* kind : {"ybe", "coassoc", "counit", "antipode", "rtt"}) {
        CLI::App* c = check->add_subcommand(kind);
        add_common(c, true);
        c->add_option("--random", cfg.random_n, "run N random rational colour assignments");
        check_cmds.emplace_back(kind, c);
    }

    CLI::App* derive = app.add_subcommand("derive", "derive relation sets");
    CLI::App* derive_rtt = derive->add_subcommand("rtt", "coloured RTT relations");
    add_common(derive_rtt, true);

    CLI::App* model_cmd = app.add_subcommand("model", "model inspection");
    CLI::App* model_dump = model_cmd->add_subcommand("dump", "dump the model tables as JSON");
    add_common(model_dump, false);

    CLI::App* pair = app.add_subcommand("pair", "dual pairing tools");
    CLI::App* pair_gram = pair->add_subcommand("gram", "pairing table");
    add_common(pair_gram, false);
    pair_gram->add_option("--degree", cfg.degree, "degree bound")->capture_default_str();
    pair_gram->add_option("--q", cfg.q_str, "evaluate q at an exact rational p/r");
    CLI::App* pair_dual = pair->add_subcommand("check-duality", "rho/sigma compatibility");
    add_common(pair_dual, false);
    pair_dual->add_option("--degree", cfg.degree, "degree bound")->capture_default_str();
    pair_dual->add_option("--colour", cfg.colour_single, "colour value (default: symbolic n)");
    CLI::App* pair_tcheck = pair->add_subcommand("t-check", "truncated T-matrix counit laws");
    add_common(pair_tcheck, false);
    pair_tcheck->add_option("--degree", cfg.degree, "degree bound")->capture_default_str();
    pair_tcheck->add_option("--q", cfg.q_str, "evaluate q at an exact rational p/r");

    CLI::App* selftest = app.add_subcommand("selftest", "run the full property suite");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        out << help.str();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cfg.degree < 0) throw ConfigError("degree must be >= 0");
        for (const auto& [kind, cmd] : check_cmds)
            if (cmd->parsed()) return cmd_check(kind, cfg, out, err);
        if (derive_rtt->parsed()) return cmd_derive_rtt(cfg, out, err);
        if (model_dump->parsed()) return cmd_model_dump(cfg, out, err);
        if (pair_gram->parsed()) return cmd_pair_gram(cfg, out, err);
        if (pair_dual->parsed()) return cmd_pair_duality(cfg, out, err);
        if (pair_tcheck->parsed()) return cmd_pair_tcheck(cfg, out, err);
        if (selftest->parsed()) return cmd_selftest(cfg, out, err);
        err << "usage error: no command\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace chopf::cli
