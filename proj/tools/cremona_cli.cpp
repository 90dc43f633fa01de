// Command-line front end: reproducible experiments over the map families
// with machine-readable output. All subcommands emit JSON (CSV for plain
// sequences); identical invocations produce byte-identical output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/catalog.hpp"
#include "cremona/mapspec.hpp"
#include "cremona/reproduce.hpp"

using json = nlohmann::ordered_json;
using namespace cremona;

namespace {

json point_json(const ProjPoint& p)
{
    json a = json::array();
    for (int i = 0; i < 4; ++i) a.push_back(p[static_cast<std::size_t>(i)].get_str());
    return a;
}

json matrix_json(const GroupElement& g)
{
    json m = json::array();
    for (const auto& row : g.matrix()) {
        json r = json::array();
        for (long v : row) r.push_back(v);
        m.push_back(r);
    }
    return m;
}

json unipoly_json(const UniPoly& p)
{
    json a = json::array();
    for (const auto& c : p) a.push_back(c.get_str());
    return a;
}

json entropy_json(const EntropyValue& e)
{
    json out;
    out["kind"] = e.is_zero() ? "zero" : "log_algebraic";
    if (!e.is_zero()) {
        out["min_poly"] = unipoly_json(e.minimal_polynomial);
        out["interval"] = json::array({e.isolating_interval.first.get_str(), e.isolating_interval.second.get_str()});
        out["approx"] = e.float_approx;
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

GroupElement group_element_of(const std::string& text)
{
    json j = json::parse(text);
    if (!j.is_array() || j.size() != 4) fail(errc::parse_error, "expected a 4x4 integer matrix");
    GroupElement::Mat m{};
    for (int i = 0; i < 4; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_array() || j[static_cast<std::size_t>(i)].size() != 4)
            fail(errc::parse_error, "expected a 4x4 integer matrix");
        for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].get<long>();
    }
    return GroupElement(m);
}

// {"compose": [{"matrix": M}, {"cremona": 3}]} gives the group element whose
// composite with the Cremona map is meant.
std::optional<GroupElement> group_element_of_spec(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.contains("compose") && j["compose"].is_array() && j["compose"].size() == 2 &&
        j["compose"][0].is_object() && j["compose"][0].contains("matrix") && j["compose"][1].is_object() &&
        j["compose"][1].contains("cremona"))
        return group_element_of(j["compose"][0]["matrix"].dump());
    return std::nullopt;
}

std::vector<Int> parse_int_list(const std::string& csv)
{
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.emplace_back(csv.substr(pos, comma - pos), 10);
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact birational dynamics of Cremona-cubes composites"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags like --format may follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* group_cmd = app.add_subcommand("group", "the Cremona-cubes group");
    group_cmd->require_subcommand(1);
    auto* enum_cmd = group_cmd->add_subcommand("enumerate", "closure of the generators, 576 elements");
    bool count_only = false;
    enum_cmd->add_flag("--count-only", count_only, "emit only the total and per-type counts");
    std::string classify_matrix;
    auto* classify_cmd = group_cmd->add_subcommand("classify", "type, order, and orbit size of one element");
    classify_cmd->add_option("--matrix", classify_matrix, "4x4 integer matrix as JSON")->required();

    auto* degrees_cmd = app.add_subcommand("degrees", "reduced degrees of the iterates");
    std::string map_spec;
    int n = 8;
    long long degree_cap = 300;
    degrees_cmd->add_option("--map", map_spec, "map spec (JSON)")->required();
    degrees_cmd->add_option("--n", n, "number of iterates");
    degrees_cmd->add_option("--degree-cap", degree_cap, "stop before the degree exceeds this bound");

    auto* entropy_cmd = app.add_subcommand("entropy", "algebraic entropy, exact or fitted from degree data");
    std::string entropy_map;
    bool exact = false;
    int entropy_n = 14;
    long long entropy_cap = 300;
    entropy_cmd->add_option("--map", entropy_map, "map spec (JSON)")->required();
    entropy_cmd->add_flag("--exact", exact, "use the lattice pushforward (composites of a group element with the Cremona map)");
    entropy_cmd->add_option("--n", entropy_n, "iterates to fit when estimating");
    entropy_cmd->add_option("--degree-cap", entropy_cap, "degree cap for the fitted sequence");

    auto* orbit_cmd = app.add_subcommand("orbit", "singular orbit of a contracted plane");
    std::string orbit_map, plane_arg = "x1";
    int max_steps = 24, seed_probe = 0;
    orbit_cmd->add_option("--map", orbit_map, "map spec (JSON)")->required();
    orbit_cmd->add_option("--plane", plane_arg, "x1..x4 or a linear form like \"2*x1-x3\"");
    orbit_cmd->add_option("--max-steps", max_steps, "iteration bound");
    orbit_cmd->add_option("--seed-probe", seed_probe, "probe-point offset");

    auto* invariant_cmd = app.add_subcommand("invariant", "rational-function invariance");
    auto* inv_check = invariant_cmd->add_subcommand("check", "classify a candidate invariant");
    std::string inv_map, inv_fn;
    int kmax = 6;
    inv_check->add_option("--map", inv_map, "map spec (JSON)")->required();
    inv_check->add_option("--function", inv_fn, "rational function \"<poly>/<poly>\"")->required();
    inv_check->add_option("--kmax", kmax, "largest iterate order tested");

    auto* covariance_cmd = app.add_subcommand("covariance", "covariant linear systems");
    auto* cov_check = covariance_cmd->add_subcommand("check", "induced automorphism on a built-in system");
    std::string cov_map, cov_system = "sigmaP", cov_divisor = "1,1,1,1";
    cov_check->add_option("--map", cov_map, "map spec (JSON)")->required();
    cov_check->add_option("--system", cov_system, "sigmaP | sigmaQ | sigmaB | desmic")
        ->check(CLI::IsMember({"sigmaP", "sigmaQ", "sigmaB", "desmic"}));
    cov_check->add_option("--divisor", cov_divisor, "coordinate-plane multiplicities n1,n2,n3,n4");

    auto* euler_cmd = app.add_subcommand("euler", "the discretised Euler top");
    euler_cmd->set_help_flag("--help", "print help"); // frees -h for the step size
    std::string a_csv = "1,4,9", h_str = "1", verify = "all";
    euler_cmd->add_option("--a", a_csv, "three positive rational squares, comma separated");
    euler_cmd->add_option("--h", h_str, "step size (nonzero rational)");
    euler_cmd->add_option("--verify", verify, "what to verify (all)");

    auto* fit_cmd = app.add_subcommand("fit", "recurrence, generating function, and entropy from a sequence");
    std::string seq_csv;
    fit_cmd->add_option("--sequence", seq_csv, "comma-separated integers")->required();

    auto* reproduce_cmd = app.add_subcommand("reproduce", "rerun a verified result");
    std::string prop_id;
    reproduce_cmd->add_option("prop_id", prop_id, "check id or \"all\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*enum_cmd) {
            const auto& all = enumerate_group();
            if (count_only) {
                std::map<ElemType, int> counts;
                for (const auto& g : all) counts[classify(g).tag]++;
                json out;
                out["total"] = all.size();
                out["by_type"] = {{"A", counts[ElemType::A]}, {"B", counts[ElemType::B]}, {"C", counts[ElemType::C]}};
                emit(out);
            } else {
                json out;
                out["total"] = all.size();
                json elems = json::array();
                for (const auto& g : all) elems.push_back(matrix_json(g));
                out["elements"] = std::move(elems);
                emit(out);
            }
        } else if (*classify_cmd) {
            GroupElement g = group_element_of(classify_matrix);
            if (!is_member(g.matrix())) {
                emit(json{{"error", "matrix does not preserve the twelve special points"}});
                return 1;
            }
            ElementType t = classify(g);
            json out;
            out["type"] = to_string(t.tag);
            out["order"] = element_order(g);
            out["orbit_size"] = t.orbit_size;
            emit(out);
        } else if (*degrees_cmd) {
            ProjMap m = parse_map_spec(map_spec);
            DegreeSequence s = degree_sequence(m, n, degree_cap);
            if (format == "csv") {
                std::string line;
                for (std::size_t i = 0; i < s.values.size(); ++i) line += (i ? "," : "") + std::to_string(s.values[i]);
                std::cout << line << "\n";
            } else {
                json out;
                out["degrees"] = s.values;
                if (s.truncated) out["truncated"] = true;
                emit(out);
            }
        } else if (*entropy_cmd) {
            json out;
            if (exact) {
                auto g = group_element_of_spec(entropy_map);
                if (!g) {
                    emit(json{{"error", "--exact needs a spec of the form {\"compose\": [{\"matrix\": ...}, {\"cremona\": 3}]}"}});
                    return 2;
                }
                if (!is_member(g->matrix())) {
                    emit(json{{"error", "matrix does not preserve the twelve special points"}});
                    return 1;
                }
                out["entropy"] = entropy_json(exact_entropy(*g));
            } else {
                ProjMap m = parse_map_spec(entropy_map);
                DegreeSequence s = degree_sequence(m, entropy_n, entropy_cap);
                SequenceFit fit = fit_sequence(s);
                out["entropy"] = entropy_json(fit.entropy);
                if (fit.provisional) out["provisional"] = true;
            }
            emit(out);
        } else if (*orbit_cmd) {
            ProjMap m = parse_map_spec(orbit_map);
            LinearForm plane = [&] {
                if (plane_arg.size() == 2 && plane_arg[0] == 'x' && plane_arg[1] >= '1' && plane_arg[1] <= '4')
                    return LinearForm::coordinate(plane_arg[1] - '1');
                return LinearForm::from_poly(HomogPoly::parse(plane_arg));
            }();
            SingularOrbit orbit = trace_singular_orbit(m, plane, max_steps, seed_probe);
            json out;
            out["plane"] = plane.to_string();
            json chain = json::array();
            for (const auto& p : orbit.chain) chain.push_back(point_json(p));
            out["chain"] = std::move(chain);
            out["outcome"] = to_string(orbit.outcome);
            out["length"] = orbit.length();
            emit(out);
        } else if (*inv_check) {
            ProjMap m = parse_map_spec(inv_map);
            RationalFunction r = RationalFunction::parse(inv_fn);
            InvarianceClass c = invariance_class(m, r, kmax);
            emit(json{{"class", c.to_string()}});
        } else if (*cov_check) {
            ProjMap m = parse_map_spec(cov_map);
            LinearSystem system = [&] {
                if (cov_system == "sigmaP") return catalog::sigma_P();
                if (cov_system == "sigmaQ") return catalog::sigma_Q();
                if (cov_system == "sigmaB") return catalog::sigma_B();
                return catalog::desmic_pencil();
            }();
            auto ns = parse_int_list(cov_divisor);
            if (ns.size() != 4) fail(errc::parse_error, "--divisor needs four comma-separated integers");
            DivisorSpec d = DivisorSpec::coordinate_planes(
                {static_cast<int>(ns[0].get_si()), static_cast<int>(ns[1].get_si()), static_cast<int>(ns[2].get_si()),
                 static_cast<int>(ns[3].get_si())});
            RatMatrix auto_m = check_covariance(m, system, d);
            json out;
            out["system"] = system.label;
            out["dimension"] = system.dim();
            json rows = json::array();
            for (const auto& row : auto_m) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.get_str());
                rows.push_back(r);
            }
            out["matrix"] = std::move(rows);
            out["invertible"] = rat_det(auto_m) != 0;
            emit(out);
        } else if (*euler_cmd) {
            auto as_parts = [&] {
                std::vector<Rat> r;
                std::size_t pos = 0;
                while (pos < a_csv.size()) {
                    std::size_t comma = a_csv.find(',', pos);
                    if (comma == std::string::npos) comma = a_csv.size();
                    r.push_back(parse_rational(a_csv.substr(pos, comma - pos)));
                    pos = comma + 1;
                }
                return r;
            }();
            if (as_parts.size() != 3) fail(errc::parse_error, "--a needs three comma-separated rationals");
            EulerParams p = EulerParams::make(as_parts[0], as_parts[1], as_parts[2], parse_rational(h_str));
            ProjMap phi = build_euler(p);
            EulerDecomposition d = verify_euler_decomposition(p);
            auto [kappa, lambda] = kappa_lambda(phi);
            KappaFactorization f = factor_linear_forms_partial(kappa, euler_candidate_forms(p));
            bool kappa_ok = f.complete() && f.factors.size() == 4;
            for (const auto& [form, mult] : f.factors) kappa_ok = kappa_ok && mult == 2;
            bool inv_ok = invariance_class(phi, euler_invariant_I1(p)).kind == InvarianceClass::Kind::invariant &&
                          invariance_class(phi, euler_invariant_I2(p)).kind == InvarianceClass::Kind::invariant;
            bool rel_ok =
                euler_invariant_F1(p) == constant_function(Rat(1)) + scale(-p.a1 * p.a3 * p.h * p.h / 4, euler_invariant_I2(p)) &&
                euler_invariant_F2(p) * (constant_function(Rat(1)) + scale(-p.a2 * p.a3 * p.h * p.h / 4, euler_invariant_I1(p))) ==
                    constant_function(Rat(1));
            json out;
            out["a"] = json::array({p.a1.get_str(), p.a2.get_str(), p.a3.get_str()});
            out["h"] = p.h.get_str();
            out["degree"] = phi.degree();
            out["verify"] = {{"recomposes", d.recomposes},
                             {"product_is_g0", d.product_is_g0},
                             {"conjugates_to_g0_cremona", d.conjugates_to_g0c3},
                             {"kappa_is_product_of_squares", kappa_ok},
                             {"invariants", inv_ok},
                             {"functional_relation", rel_ok}};
            emit(out);
            if (!(d.pass() && kappa_ok && inv_ok && rel_ok)) return 1;
        } else if (*fit_cmd) {
            std::vector<Int> seq = parse_int_list(seq_csv);
            if (seq.size() < 4) {
                emit(json{{"error", "need at least 4 terms"}});
                return 2;
            }
            SequenceFit fit = fit_sequence(seq);
            json rec;
            rec["order"] = fit.recurrence.order;
            json coeffs = json::array();
            for (const auto& c : fit.recurrence.coefficients) coeffs.push_back(c.get_str());
            rec["coefficients"] = std::move(coeffs);
            rec["valid_from"] = fit.recurrence.valid_from;
            json out;
            out["recurrence"] = std::move(rec);
            out["generating_function"] = {{"numerator", unipoly_json(fit.gf.numerator)},
                                          {"denominator", unipoly_json(fit.gf.denominator)}};
            out["entropy"] = entropy_json(fit.entropy);
            emit(out);
        } else if (*reproduce_cmd) {
            bool all_pass = true;
            json out;
            if (prop_id == "all") {
                json arr = json::array();
                for (const auto& [id, fn] : reproduce_catalog()) {
                    CheckReport rep = fn();
                    all_pass = all_pass && rep.pass;
                    arr.push_back(json{{"id", rep.id}, {"pass", rep.pass}, {"details", rep.lines}});
                }
                out["checks"] = std::move(arr);
                out["pass"] = all_pass;
            } else {
                CheckReport rep = reproduce(prop_id);
                all_pass = rep.pass;
                out["id"] = rep.id;
                out["pass"] = rep.pass;
                out["details"] = rep.lines;
            }
            emit(out);
            if (!all_pass) return 1;
        }
    } catch (const error& e) {
        emit(json{{"error", e.what()}});
        switch (e.code()) {
            case errc::parse_error:
            case errc::precondition:
            case errc::unknown_prop_id:
            case errc::no_recurrence_found: return 2;
            default: return 1;
        }
    } catch (const nlohmann::json::exception& e) {
        emit(json{{"error", std::string("invalid JSON: ") + e.what()}});
        return 2;
    }
    return 0;
}
