#include "qcf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "qcf/configs.hpp"
#include "qcf/errors.hpp"
#include "qcf/formulas.hpp"
#include "qcf/json_io.hpp"
#include "qcf/mobius.hpp"
#include "qcf/suites.hpp"

namespace qcf {

namespace {

// --- JSON renderings of combinatorial objects -------------------------------

Json partition_to_json(const Partition& p) {
    Json j = Json::array();
    for (int v : p.parts()) j.push_back(v);
    return j;
}

Json config_to_json(const DeltaConfig& c) {
    Json arrows = Json::array();
    for (const Arrow& a : c.arrows) {
        Json ja;
        ja["o"] = a.o == Orientation::Horizontal ? "h" : "v";
        ja["kind"] = a.kind == ArrowKind::KArrow ? "full" : "reduced";
        ja["i"] = a.index;
        arrows.push_back(std::move(ja));
    }
    Json j;
    j["k"] = c.k;
    j["parts"] = partition_to_json(c.lambda);
    j["arrows"] = std::move(arrows);
    return j;
}

Json half_config_to_json(const HalfConfig& c) {
    Json j;
    j["k"] = c.k;
    j["parts"] = partition_to_json(c.lambda);
    j["arrow_rows"] = c.arrow_rows;
    return j;
}

Json overpartition_to_json(const Overpartition& mu) {
    Json parts = Json::array();
    for (const auto& p : mu.parts) {
        Json jp;
        jp["v"] = p.value;
        jp["over"] = p.overlined;
        parts.push_back(std::move(jp));
    }
    Json j;
    j["parts"] = std::move(parts);
    return j;
}

std::string overpartition_to_text(const Overpartition& mu) {
    std::string s;
    for (std::size_t i = 0; i < mu.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(mu.parts[i].value);
        if (mu.parts[i].overlined) s += "~";
    }
    return s;
}

// --- compute ----------------------------------------------------------------

LambdaSequence family_by_name(const std::string& name, const Rational& a,
                              const Rational& b) {
    if (name == "touchard") return touchard_lambda();
    if (name == "qsecant") return qsecant_lambda();
    if (name == "jtp") return jtp_lambda();
    if (name == "mu") return mu_lambda(a, b);
    if (name == "jtp_scaled") return jtp_scaled_lambda(a, b);
    if (name == "genocchi") return genocchi_lambda();
    if (name == "genocchi_scaled") return genocchi_scaled_lambda();
    if (name == "eab") {
        if (!a.is_integer() || !b.is_integer())
            throw DomainError("family eab requires integer a and b");
        return e_ab_lambda(static_cast<long>(a.num().get_si()),
                           static_cast<long>(b.num().get_si()));
    }
    if (name == "v") return v_seq_lambda();
    if (name == "xi") return xi_lambda();
    throw DomainError("unknown family: " + name);
}

int cmd_compute(const std::string& family, const std::string& form, int n,
                const std::string& a_str, const std::string& b_str, std::ostream& out) {
    Rational a = Rational::from_string(a_str);
    Rational b = Rational::from_string(b_str);
    LambdaSequence lambda = family_by_name(family, a, b);
    ZSeries f = (form == "t") ? eval_t_fraction(lambda, n) : eval_s_fraction(lambda, n);
    Json j;
    j["family"] = family;
    j["form"] = form;
    j["n"] = n;
    j["a"] = a_str;
    j["b"] = b_str;
    j["coefficient"] = laurent_to_json(f.coeff(n));
    out << canonical_dump(j) << "\n";
    return 0;
}

// --- enumerate ---------------------------------------------------------------

const std::map<std::string, WeightSequencePair>& path_weight_presets() {
    static const std::map<std::string, WeightSequencePair> presets = {
        {"uu", {ws_u(), ws_u()}},
        {"jj", {ws_j(), ws_j_prime()}},
        {"v1v1", {ws_minus_one(ws_v()), ws_minus_one(ws_v())}},
        {"v1zero", {ws_minus_one(ws_v()), ws_zero()}},
        {"g1g2", {ws_g1(), ws_g2()}},
    };
    return presets;
}

int cmd_enumerate(const std::string& objects, int k, const std::string& weight,
                  long long limit, long a, long b, std::ostream& out) {
    Json j;
    j["objects"] = objects;
    j["k"] = k;
    Json items = Json::array();
    Laurent sum;
    bool weighted = !weight.empty();

    static const std::map<std::string, PathKind> path_kinds = {
        {"dyck", PathKind::Dyck},
        {"schroder", PathKind::Schroder},
        {"marked_dyck", PathKind::MarkedDyck},
        {"marked_schroder", PathKind::MarkedSchroder},
        {"md_star", PathKind::MdStar},
    };
    static const std::map<std::string, ConfigKind> config_kinds = {
        {"delta_plus", ConfigKind::DeltaPlus},
        {"delta_minus", ConfigKind::DeltaMinus},
        {"general", ConfigKind::General},
    };
    static const std::map<std::string, WeightScheme> config_schemes = {
        {"q", WeightScheme::Q},
        {"yq", WeightScheme::YQ},
        {"ab", WeightScheme::AB},
        {"prime", WeightScheme::Prime},
    };

    if (auto it = path_kinds.find(objects); it != path_kinds.end()) {
        const WeightSequencePair* w = nullptr;
        if (weighted) {
            auto wit = path_weight_presets().find(weight);
            if (wit == path_weight_presets().end())
                throw DomainError("unknown path weight preset: " + weight);
            w = &wit->second;
        }
        enumerate_paths(it->second, k,
                        [&](const LatticePath& p) {
                            items.push_back(p.to_text());
                            if (w) sum += path_weight(p, *w);
                        },
                        limit);
    } else if (auto ct = config_kinds.find(objects); ct != config_kinds.end()) {
        WeightScheme scheme = WeightScheme::Q;
        if (weighted) {
            auto sit = config_schemes.find(weight);
            if (sit == config_schemes.end())
                throw DomainError("unknown configuration weight preset: " + weight);
            scheme = sit->second;
        }
        enumerate_configs(ct->second, k,
                          [&](const DeltaConfig& c) {
                              items.push_back(c.to_text());
                              if (weighted) sum += config_weight(c, scheme, a, b);
                          },
                          limit);
    } else if (objects == "half") {
        if (weighted && weight != "halfq")
            throw DomainError("half configurations support only the halfq weight");
        enumerate_half_configs(k,
                               [&](const HalfConfig& c) {
                                   items.push_back(half_config_to_mdstar(c).to_text());
                                   if (weighted) sum += half_config_weight(c);
                               },
                               limit);
    } else if (objects == "overpartition") {
        if (weighted && weight != "signed")
            throw DomainError("overpartitions support only the signed weight");
        enumerate_overpartitions(k,
                                 [&](const Overpartition& mu) {
                                     items.push_back(overpartition_to_text(mu));
                                     if (weighted) {
                                         Laurent w = Laurent::q_power(Rational(static_cast<long>(mu.size())));
                                         sum += (mu.overlined_count() % 2 != 0) ? -w : w;
                                     }
                                 },
                                 limit);
    } else {
        throw DomainError("unknown object family: " + objects);
    }

    j["count"] = items.size();
    j["items"] = std::move(items);
    if (weighted) {
        j["weight"] = weight;
        j["weight_sum"] = laurent_to_json(sum);
    }
    out << canonical_dump(j) << "\n";
    return 0;
}

// --- bijection ----------------------------------------------------------------

struct BijectionOutcome {
    bool pass = true;
    long long count = 0;
    std::string detail;
    Json traces = Json::array();
};

void fail(BijectionOutcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

BijectionOutcome run_psi_phi(int k, bool forward, bool trace) {
    BijectionOutcome o;
    std::set<DeltaConfig> images;
    ConfigKind domain = forward ? ConfigKind::DeltaPlus : ConfigKind::DeltaMinus;
    const MoveKind stages_fwd[] = {MoveKind::Ascend, MoveKind::Fill, MoveKind::Shrink,
                                   MoveKind::Fill};
    const MoveKind stages_bwd[] = {MoveKind::Remove, MoveKind::Stretch, MoveKind::Remove,
                                   MoveKind::Descend};
    enumerate_configs(domain, k, [&](const DeltaConfig& c) {
        ++o.count;
        Json steps = Json::array();
        if (trace) steps.push_back(config_to_json(c));
        DeltaConfig cur = c;
        const MoveKind* stages = forward ? stages_fwd : stages_bwd;
        for (int s = 0; s < 4; ++s) {
            cur = op_closure(cur, stages[s]);
            if (trace) steps.push_back(config_to_json(cur));
        }
        if (trace) o.traces.push_back(std::move(steps));
        bool member = forward ? is_delta_minus(cur) : is_delta_plus(cur);
        if (!member) return fail(o, "image outside target family: " + c.to_text());
        DeltaConfig back = forward ? phi(cur) : psi(cur);
        if (back != c) return fail(o, "round trip failed: " + c.to_text());
        if (config_weight(cur, WeightScheme::Q) != config_weight(c, WeightScheme::Q))
            return fail(o, "weight not preserved: " + c.to_text());
        if (!images.insert(cur).second) return fail(o, "not injective: " + c.to_text());
    });
    return o;
}

BijectionOutcome run_psi1_phi1(int k, bool forward, bool trace) {
    BijectionOutcome o;
    if (forward) {
        enumerate_half_configs(k, [&](const HalfConfig& c) {
            ++o.count;
            Overpartition mu = psi1(c);
            if (trace)
                o.traces.push_back(Json::array({half_config_to_json(c),
                                                overpartition_to_json(mu)}));
            if (!mu.member_of(k)) return fail(o, "image not in the overpartition family");
            if (!(phi1(mu, k) == c)) return fail(o, "round trip failed");
            Laurent w = Laurent::q_power(Rational(static_cast<long>(mu.size())));
            if (mu.overlined_count() % 2 != 0) w = -w;
            if (half_config_weight(c) != w) return fail(o, "weight not preserved");
        });
    } else {
        enumerate_overpartitions(k, [&](const Overpartition& mu) {
            ++o.count;
            HalfConfig c = phi1(mu, k);
            if (trace)
                o.traces.push_back(Json::array({overpartition_to_json(mu),
                                                half_config_to_json(c)}));
            if (!(psi1(c) == mu)) return fail(o, "round trip failed");
        });
    }
    return o;
}

BijectionOutcome run_involution_f(int k, bool trace) {
    BijectionOutcome o;
    auto [fp1, fp2] = involution_fixed_points(k);
    if (k >= 1 && (!is_delta_minus(fp1) || !is_delta_minus(fp2)))
        fail(o, "fixed points outside the minus family");
    Laurent fixed_weight = Laurent::monomial(
        Rational(k % 2 == 0 ? 1 : -1), static_cast<long long>(k) * k, 0);
    if (k >= 1 && (config_weight(fp1, WeightScheme::Q) != fixed_weight ||
                   config_weight(fp2, WeightScheme::Q) != fixed_weight))
        fail(o, "fixed points have unexpected weight");
    enumerate_configs(ConfigKind::DeltaMinus, k, [&](const DeltaConfig& c) {
        if (is_embedded_delta_plus(c)) return;
        if (c == fp1 || c == fp2) return;
        ++o.count;
        DeltaConfig image = involution_f(c);
        if (trace) o.traces.push_back(Json::array({config_to_json(c), config_to_json(image)}));
        if (image == c) return fail(o, "unexpected fixed point: " + c.to_text());
        if (!is_delta_minus(image) || is_embedded_delta_plus(image))
            return fail(o, "image outside the domain: " + c.to_text());
        if (involution_f(image) != c) return fail(o, "not an involution: " + c.to_text());
        if (config_weight(image, WeightScheme::Q) != -config_weight(c, WeightScheme::Q))
            return fail(o, "not sign reversing: " + c.to_text());
    });
    return o;
}

BijectionOutcome run_overpartition_involution(int k, bool trace) {
    BijectionOutcome o;
    enumerate_overpartitions(k, [&](const Overpartition& mu) {
        ++o.count;
        if (mu.parts.empty()) return; // the unique fixed point
        Overpartition image = overpartition_involution(mu);
        if (trace)
            o.traces.push_back(Json::array({overpartition_to_json(mu),
                                            overpartition_to_json(image)}));
        if (!image.member_of(k)) return fail(o, "image left the family");
        if (!(overpartition_involution(image) == mu)) return fail(o, "not an involution");
        if (image.size() != mu.size()) return fail(o, "size not preserved");
        if ((image.overlined_count() + mu.overlined_count()) % 2 == 0)
            return fail(o, "not sign reversing");
    });
    return o;
}

int cmd_bijection(const std::string& name, int k, bool trace, std::ostream& out) {
    BijectionOutcome o;
    if (name == "psi") o = run_psi_phi(k, true, trace);
    else if (name == "phi") o = run_psi_phi(k, false, trace);
    else if (name == "psi1") o = run_psi1_phi1(k, true, trace);
    else if (name == "phi1") o = run_psi1_phi1(k, false, trace);
    else if (name == "f") o = run_involution_f(k, trace);
    else if (name == "overpartition-involution") o = run_overpartition_involution(k, trace);
    else throw DomainError("unknown bijection: " + name);

    Json j;
    j["name"] = name;
    j["k"] = k;
    j["count"] = o.count;
    j["pass"] = o.pass;
    if (!o.detail.empty()) j["detail"] = o.detail;
    if (trace) j["traces"] = std::move(o.traces);
    out << canonical_dump(j) << "\n";
    return o.pass ? 0 : 1;
}

// --- funeq / matrix -----------------------------------------------------------

int cmd_funeq(const std::string& which, int order, std::ostream& out) {
    FunctionalEquation eq;
    if (which == "theta") eq = FunctionalEquation::ThetaSeries;
    else if (which == "jtp") eq = FunctionalEquation::JtpFraction;
    else if (which == "genocchi-closed") eq = FunctionalEquation::GenocchiClosed;
    else if (which == "genocchi-fraction") eq = FunctionalEquation::GenocchiFraction;
    else throw DomainError("unknown functional equation: " + which);
    ZSeries residual = functional_equation_residual(eq, order);
    Json j;
    j["which"] = which;
    j["order"] = order;
    j["pass"] = residual.is_zero();
    j["residual"] = zseries_to_json(residual);
    out << canonical_dump(j) << "\n";
    return residual.is_zero() ? 0 : 1;
}

int cmd_matrix(const std::string& family, int n, std::ostream& out) {
    MatrixFamily which;
    if (family == "omega") which = MatrixFamily::Omega;
    else if (family == "lambda") which = MatrixFamily::Lambda;
    else throw DomainError("unknown matrix family: " + family);
    bool rec = verify_matrix_recurrence(which, n);
    bool base = verify_matrix_base(which);
    Json j;
    j["family"] = family;
    j["n"] = n;
    j["recurrence"] = rec;
    j["base"] = base;
    j["pass"] = rec && base;
    out << canonical_dump(j) << "\n";
    return (rec && base) ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verifier for moment formulas, configurations and bijections"};
    app.require_subcommand(1);

    std::string family = "touchard", form = "s", a_str = "0", b_str = "0";
    int n = 0;
    CLI::App* compute = app.add_subcommand("compute", "Continued-fraction coefficient");
    compute->add_option("--family", family)->required();
    compute->add_option("--form", form)->check(CLI::IsMember({"s", "t"}));
    compute->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    compute->add_option("--a", a_str);
    compute->add_option("--b", b_str);

    std::string suite;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));

    std::string objects, weight;
    int k = 0;
    long long limit = kDefaultPathLimit;
    long a_int = 0, b_int = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "List a combinatorial family");
    enumerate->add_option("--objects", objects)->required();
    enumerate->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--weight", weight);
    enumerate->add_option("--limit", limit);
    enumerate->add_option("--a", a_int);
    enumerate->add_option("--b", b_int);

    std::string bname;
    int bk = 0;
    bool trace = false;
    CLI::App* bijection = app.add_subcommand("bijection", "Exercise a bijection exhaustively");
    bijection->add_option("--name", bname)->required();
    bijection->add_option("--k", bk)->required()->check(CLI::NonNegativeNumber);
    bijection->add_flag("--trace", trace);

    std::string which;
    int order = 10;
    CLI::App* funeq = app.add_subcommand("funeq", "Functional-equation residual");
    funeq->add_option("--which", which)->required();
    funeq->add_option("--order", order)->check(CLI::NonNegativeNumber);

    std::string mfamily;
    int mn = 0;
    CLI::App* matrix = app.add_subcommand("matrix", "Transfer-matrix recurrence check");
    matrix->add_option("--family", mfamily)->required();
    matrix->add_option("--n", mn)->check(CLI::NonNegativeNumber);

    try {
        // CLI11's vector-parse consumes arguments from the back.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(family, form, n, a_str, b_str, out);
        if (app.got_subcommand(verify)) {
            RunReport report = run_suite(suite);
            out << canonical_dump(report_to_json(report)) << "\n";
            return report.pass ? 0 : 1;
        }
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(objects, k, weight, limit, a_int, b_int, out);
        if (app.got_subcommand(bijection)) return cmd_bijection(bname, bk, trace, out);
        if (app.got_subcommand(funeq)) return cmd_funeq(which, order, out);
        if (app.got_subcommand(matrix)) return cmd_matrix(mfamily, mn, out);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace qcf
