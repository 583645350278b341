// Command-line interface: JSON in, JSON out, deterministic given --seed.
// Exit codes: 0 success or verified-true, 1 verified-false, 2 input error,
// 3 mathematical precondition failure (certificate in the error payload).
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dualvol/json_io.hpp"

using namespace dualvol;

namespace {

struct Options {
    uint64_t seed = 0;
    bool pretty = false;
    int threads = 1;  // accepted as a hint; evaluation is sequential
};

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

RatVec parse_vec(const std::string& s) {
    RatVec out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(parse_rational(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(parse_rational(cur));
    return out;
}

int emit(const Options& opt, json out, const std::string& pretty_text = "", int code = 0) {
    out["seed"] = opt.seed;
    if (opt.pretty && !pretty_text.empty())
        std::cout << pretty_text << "\n";
    else
        std::cout << out.dump() << "\n";
    return code;
}

json rf_payload(const RationalFunction& f) { return rational_function_to_json(f, true); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual volumes, dual mixed volumes, and their verifications"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--seed", opt.seed, "random seed echoed in output metadata");
    app.add_flag("--pretty", opt.pretty, "human-readable rendering");
    app.add_option("--threads", opt.threads, "worker hint (accepted, single job per process)");

    std::string polytope_path, fan_path, seq_path, sub_path, gens_path, tiling_path, j_path;
    std::string dir_str, z_str, level_str = "1";
    int n = 0;
    double tol = 1e-6;
    bool with_z = false;

    auto* c_dualvol = app.add_subcommand("dualvol", "dual volume of a polytope or ingested fan");
    c_dualvol->add_option("--polytope", polytope_path);
    c_dualvol->add_option("--fan", fan_path, "support data file {fan, values}");

    auto* c_fn = app.add_subcommand("dualvol-fn",
                                    "dual volume function (canonical form coefficient)");
    c_fn->add_option("--polytope", polytope_path)->required();

    auto* c_adj = app.add_subcommand("adjoint", "adjoint polynomial of the dual cone");
    c_adj->add_option("--polytope", polytope_path)->required();

    auto* c_mixed = app.add_subcommand("mixedvol", "dual mixed volume of a sequence");
    c_mixed->add_option("--seq", seq_path)->required();
    c_mixed->add_flag("--with-z", with_z, "include the translation variables z");

    auto* c_vsub = app.add_subcommand("verify-subdivision",
                                      "validate a mixed subdivision and check additivity");
    c_vsub->add_option("--seq", seq_path)->required();
    c_vsub->add_option("--sub", sub_path)->required();

    auto* c_vcay = app.add_subcommand("verify-cayley", "check the Cayley change of variables");
    c_vcay->add_option("--seq", seq_path)->required();

    auto* c_evol = app.add_subcommand("evol", "hyperplane dual (mixed) volume");
    c_evol->add_option("--polytope", polytope_path);
    c_evol->add_option("--level", level_str, "hyperplane level k");
    c_evol->add_option("--seq", seq_path, "parts in the hyperplane <y,1>=1");

    auto* c_gp = app.add_subcommand("genperm", "generalized permutohedron closed form");
    c_gp->add_option("--n", n)->required();

    auto* c_assoc = app.add_subcommand("associahedron", "associahedron closed form");
    c_assoc->add_option("--n", n)->required();

    auto* c_amp = app.add_subcommand("amplitude", "planar phi^3 tree amplitude");
    c_amp->add_option("--n", n)->required();

    auto* c_zono = app.add_subcommand("zonotope", "zonotope dual mixed volume");
    c_zono->add_option("--generators", gens_path)->required();
    c_zono->add_option("--tiling", tiling_path, "sign-vector tiling to check");

    auto* c_split = app.add_subcommand("split", "deletion-contraction split along a direction");
    c_split->add_option("--polytope", polytope_path)->required();
    c_split->add_option("--dir", dir_str)->required();

    auto* c_int = app.add_subcommand("check-integral", "numeric integral cross-check");
    c_int->add_option("--polytope", polytope_path)->required();
    c_int->add_option("--z", z_str)->required();
    c_int->add_option("--tol", tol);

    auto* c_pcell = app.add_subcommand("permutohedron-cell",
                                       "spanning-tree cell of the generalized permutohedron");
    c_pcell->add_option("--J", j_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_dualvol->parsed()) {
            if (!polytope_path.empty()) {
                Polytope p = polytope_from_json(load(polytope_path));
                Rational v = dual_volume(p);
                return emit(opt, {{"value", to_string(v)}}, to_string(v));
            }
            if (fan_path.empty()) throw std::invalid_argument("need --polytope or --fan");
            SupportData s = support_data_from_json(load(fan_path));
            Rational v = std::get<Rational>(f_fan(s));
            return emit(opt, {{"value", to_string(v)}}, to_string(v));
        }
        if (c_fn->parsed()) {
            Polytope p = polytope_from_json(load(polytope_path));
            DualVolumeResult dv = dual_volume_function(p);
            json out{{"function", rf_payload(dv.function)},
                     {"numerator", polynomial_to_json(dv.numerator)}};
            json dens = json::array();
            for (const auto& f : dv.denominator_factors)
                dens.push_back(linear_form_to_json(f, *dv.function.vars));
            out["denominator_factors"] = dens;
            if (dv.value_at_origin)
                out["value_at_origin"] = to_string(*dv.value_at_origin);
            else
                out["pole_at_origin"] = true;
            return emit(opt, out, to_string(dv.function));
        }
        if (c_adj->parsed()) {
            Polytope p = polytope_from_json(load(polytope_path));
            ConeGens dual = dual_cone(cone_over(p));
            ConeGens scaled;
            scaled.dim = dual.dim;
            for (const auto& w : dual.generators) {
                RatVec v(w.begin() + 1, w.end());
                v = primitive(v);
                RatVec g{support_value(p, v)};
                g.insert(g.end(), v.begin(), v.end());
                scaled.generators.push_back(std::move(g));
            }
            SparsePolynomial adj = adjoint_polynomial(scaled);
            return emit(opt, {{"adjoint", polynomial_to_json(adj)}}, to_string(adj));
        }
        if (c_mixed->parsed()) {
            MinkowskiSequence seq = sequence_from_json(load(seq_path));
            RationalFunction m = with_z ? dual_mixed_volume_z(seq) : dual_mixed_volume(seq);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        if (c_vsub->parsed()) {
            MinkowskiSequence seq = sequence_from_json(load(seq_path));
            MixedSubdivision sub = subdivision_from_json(load(sub_path));
            bool valid = validate_mixed_subdivision(seq, sub);
            bool additive = valid && verify_subdivision_additivity(seq, sub);
            json out{{"valid", valid}, {"additive", additive}};
            return emit(opt, out, valid && additive ? "verified" : "FAILED",
                        valid && additive ? 0 : 1);
        }
        if (c_vcay->parsed()) {
            MinkowskiSequence seq = sequence_from_json(load(seq_path));
            bool ok = verify_cayley_identity(seq);
            return emit(opt, {{"verified", ok}}, ok ? "verified" : "FAILED", ok ? 0 : 1);
        }
        if (c_evol->parsed()) {
            if (!seq_path.empty()) {
                MinkowskiSequence seq = sequence_from_json(load(seq_path));
                RationalFunction m = hyperplane_dual_mixed_volume(seq.parts);
                return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
            }
            if (polytope_path.empty()) throw std::invalid_argument("need --polytope or --seq");
            AffinePolytope p(polytope_from_json(load(polytope_path)),
                             parse_rational(level_str));
            RationalFunction m = hyperplane_dual_volume(p);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        if (c_gp->parsed()) {
            RationalFunction m = genperm_dmv_closed_form(n);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        if (c_assoc->parsed()) {
            RationalFunction m = associahedron_dmv(n);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        if (c_amp->parsed()) {
            RationalFunction m = phi3_amplitude(n);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        if (c_zono->parsed()) {
            json g = load(gens_path);
            std::vector<RatVec> gens;
            for (const auto& row : g.at("generators")) gens.push_back(vec_from_json(row));
            Zonotope z(g.at("dim").get<int>(), gens);
            RationalFunction m = zonotope_dmv(z);
            json out{{"function", rf_payload(m)}};
            int code = 0;
            if (!tiling_path.empty()) {
                json t = load(tiling_path);
                std::vector<SignVector> signs;
                for (const auto& row : t.at("tiling")) {
                    SignVector s;
                    for (const auto& e : row) s.entries.push_back(e.get<int>());
                    signs.push_back(std::move(s));
                }
                bool match = rf_equal(tiling_dmv(z, signs), m, opt.seed);
                out["tiling_matches"] = match;
                if (!match) code = 1;
            }
            return emit(opt, out, to_string(m), code);
        }
        if (c_split->parsed()) {
            Polytope p = polytope_from_json(load(polytope_path));
            RatVec dir = parse_vec(dir_str);
            auto [wp, wm] = deletion_contraction_split(p, dir);
            json out{{"w_plus", rf_payload(wp)}, {"w_minus", rf_payload(wm)}};
            return emit(opt, out, "W+ = " + to_string(wp) + "\nW- = " + to_string(wm));
        }
        if (c_int->parsed()) {
            Polytope p = polytope_from_json(load(polytope_path));
            bool ok = integral_check(p, parse_vec(z_str), tol);
            return emit(opt, {{"within_tolerance", ok}}, ok ? "verified" : "FAILED", ok ? 0 : 1);
        }
        if (c_pcell->parsed()) {
            json j = load(j_path);
            int nn = j.at("n").get<int>();
            auto J = j.at("J").get<std::vector<std::vector<int>>>();
            RationalFunction m = genperm_cell_dmv(nn, J);
            return emit(opt, {{"function", rf_payload(m)}}, to_string(m));
        }
        throw std::invalid_argument("no subcommand handled");
    } catch (const Codegenerate& e) {
        std::cout << json{{"error", e.what()}, {"ray", vec_to_json(e.ray)}}.dump() << "\n";
        return 3;
    } catch (const ZeroSupportValue& e) {
        std::cout << json{{"error", e.what()}, {"ray", vec_to_json(e.ray)}}.dump() << "\n";
        return 3;
    } catch (const NotRegular& e) {
        std::cout << json{{"error", e.what()}, {"ray", vec_to_json(e.ray)}}.dump() << "\n";
        return 3;
    } catch (const NotFullDimensional& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const NotFullDimensionalInHyperplane& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const NotPointed& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const OriginNotInterior& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const SingularCellGeometry& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const NonGenericLifting& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const DegenerateSubstitution& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const PoleError& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const NotSpanningTree& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const InvalidTiling& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const DimensionTooLarge& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const InvalidCell& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}
