// Command-line front end: law checking, spectra of forms and integrals,
// constructions, catalog emission, and brute-force product searches over
// prime fields.  All output is deterministic; exit codes are 0 (pass),
// 1 (law failure / negative answer), 2 (usage or input error).

#include <CLI11.hpp>
#include <iostream>

#include "jnp/construct.hpp"
#include "jnp/frobenius.hpp"
#include "jnp/io.hpp"
#include "jnp/laurent.hpp"
#include "jnp/modules.hpp"
#include "jnp/search.hpp"

namespace {

using namespace jnp;

constexpr const char* kVersion = "jnp 1.0.0 (file format 1)";

struct SetOption {
    std::vector<std::string> raw;
    Assignment parsed() const {
        Assignment a;
        for (const std::string& s : raw) {
            auto eq = s.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError("--set expects NAME=VALUE, got '" + s + "'");
            a[s.substr(0, eq)] = s.substr(eq + 1);
        }
        return a;
    }
};

Field parse_field_flag(const std::string& text) {
    if (text == "rational" || text == "q" || text == "Q") return Field::rational();
    if (text.rfind("p=", 0) == 0)
        return Field::prime(static_cast<std::uint32_t>(std::stoul(text.substr(2))));
    throw ParseError("--field expects 'rational' or 'p=P', got '" + text + "'");
}

std::pair<long long, long long> parse_grid(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw ParseError("--grid expects LO..HI");
    long long lo = std::stoll(text.substr(0, dots));
    long long hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw ParseError("--grid range is empty");
    return {lo, hi};
}

/// Image of an algebra over the rationals in another coefficient field.
Algebra to_field(const Algebra& alg, const Field& f) {
    if (alg.field == f) return alg;
    if (!alg.field.is_rational())
        throw FieldMismatch("can only move an algebra from the rationals into another field");
    Algebra out = Algebra::make(f, alg.dim);
    auto conv = [&](const Scalar& s) { return Scalar::from_rational(f, s.rational_value()); };
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j)
            for (std::size_t k = 0; k < alg.dim; ++k)
                out.dot.at(i, j, k) = conv(alg.dot.at(i, j, k));
    if (alg.circ) {
        StructureTensor t(f, alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j)
                for (std::size_t k = 0; k < alg.dim; ++k)
                    t.at(i, j, k) = conv(alg.circ->at(i, j, k));
        out.circ = t;
        out.circ_orientation = alg.circ_orientation;
    }
    for (std::size_t i = 0; i < alg.dim; ++i) out.unit[i] = conv(alg.unit[i]);
    if (alg.form) {
        Matrix g(f, alg.dim, alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j) g.at(i, j) = conv(alg.form->at(i, j));
        out.form = g;
    }
    for (const auto& [name, m] : alg.maps) {
        Matrix g(f, alg.dim, alg.dim);
        for (std::size_t i = 0; i < alg.dim; ++i)
            for (std::size_t j = 0; j < alg.dim; ++j) g.at(i, j) = conv(m.at(i, j));
        out.maps.emplace(name, g);
    }
    return out;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

void print_verdict(const Verdict& v, bool json) {
    if (json) {
        std::cout << canonical_dump(verdict_to_json(v));
        return;
    }
    if (v.pass) {
        std::cout << "law " << v.law << ": PASS\n";
        return;
    }
    std::cout << "law " << v.law << ": FAIL";
    if (v.counterexample) {
        std::cout << " at (";
        for (std::size_t i = 0; i < v.counterexample->indices.size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << v.counterexample->indices[i];
        }
        std::cout << ")  lhs=" << vec_str(v.counterexample->lhs)
                  << "  rhs=" << vec_str(v.counterexample->rhs);
    }
    std::cout << "\n";
}

int verdict_exit(const Verdict& v) {
    return v.pass ? 0 : 1;
}

void emit_algebra(const Algebra& alg, const std::string& out_path) {
    if (out_path.empty())
        std::cout << canonical_dump(algebra_to_json(alg));
    else
        write_algebra_file(out_path, alg);
}

// ---- subcommand handlers --------------------------------------------------

int run_check(const std::string& file, const std::string& law, bool json, std::uint64_t budget) {
    Algebra alg = read_algebra_file(file);
    Verdict v = [&]() {
        if (law == "quadratic") {
            if (!alg.form) throw ConstraintViolation("file carries no form");
            return check_quadratic(alg, *alg.form);
        }
        if (law == "derivation") return check_derivation(alg, Product::Dot, alg.named_map("P"));
        if (law == "circ-derivation")
            return check_derivation(alg, Product::Circ, alg.named_map("P"));
        if (law == "admissible")
            return check_admissible_pair(alg, alg.named_map("P"), alg.named_map("Q"));
        return check_law(alg, law, budget);
    }();
    print_verdict(v, json);
    return verdict_exit(v);
}

int run_spaces(const std::string& file, bool forms, bool json) {
    Algebra alg = read_algebra_file(file);
    if (forms) {
        std::vector<Matrix> basis = invariant_form_space(alg);
        if (json) {
            Json j;
            j["dim"] = basis.size();
            Json arr = Json::array();
            for (const Matrix& g : basis) arr.push_back(matrix_to_json(g));
            j["basis"] = arr;
            std::cout << canonical_dump(j);
        } else {
            std::cout << "invariant symmetric forms: dimension " << basis.size() << "\n";
            for (const Matrix& g : basis) {
                for (std::size_t i = 0; i < g.rows(); ++i)
                    std::cout << "  " << vec_str(g.row(i)) << "\n";
                std::cout << "\n";
            }
        }
    } else {
        std::vector<Vec> basis = integral_space(alg);
        if (json) {
            Json j;
            j["dim"] = basis.size();
            Json arr = Json::array();
            for (const Vec& v : basis) arr.push_back(vec_to_json(v));
            j["basis"] = arr;
            std::cout << canonical_dump(j);
        } else {
            std::cout << "integrals: dimension " << basis.size() << "\n";
            for (const Vec& v : basis) std::cout << "  " << vec_str(v) << "\n";
        }
    }
    return 0;
}

int run_frobenius(const std::string& file, bool json) {
    Algebra alg = read_algebra_file(file);
    FrobeniusDecision dec = is_frobenius(alg);
    if (!dec.frobenius) {
        if (json) {
            Json j;
            j["frobenius"] = false;
            j["reason"] = "no nondegenerate integral";
            std::cout << canonical_dump(j);
        } else {
            std::cout << "no nondegenerate integral\n";
        }
        return 1;
    }
    FrobeniusPair pair = frobenius_pair(alg, *dec.integral);
    if (json) {
        Json j;
        j["frobenius"] = true;
        j["v"] = vec_to_json(pair.integral);
        j["form"] = matrix_to_json(*dec.form);
        j["E"] = matrix_to_json(pair.casimir);
        j["omega"] = vec_to_json(pair.euler_casimir);
        std::cout << canonical_dump(j);
    } else {
        std::cout << "nondegenerate integral: " << vec_str(pair.integral) << "\n";
        std::cout << "euler-casimir: " << vec_str(pair.euler_casimir) << "\n";
    }
    return 0;
}

int run_affinize(const std::string& file, const std::string& grid, bool allow_prime, bool json) {
    Algebra alg = read_algebra_file(file);
    auto [lo, hi] = parse_grid(grid);
    AffinizationReport rep = verify_affinization(alg, lo, hi, allow_prime);
    if (json) {
        Json j = verdict_to_json(rep.verdict);
        j["grid"] = {rep.grid_lo, rep.grid_hi};
        j["tuples"] = rep.triples_checked;
        if (rep.prime_field_override) j["prime_field_override"] = true;
        std::cout << canonical_dump(j);
    } else {
        std::cout << "grid [" << rep.grid_lo << ", " << rep.grid_hi << "], "
                  << rep.triples_checked << " tuples\n";
        if (rep.prime_field_override)
            std::cout << "warning: prime-field run, grid evidence only\n";
        print_verdict(rep.verdict, false);
    }
    return verdict_exit(rep.verdict);
}

int run_simple(const std::string& file, std::uint64_t budget, bool json) {
    Algebra alg = read_algebra_file(file);
    Verdict v = check_simple_novikov(alg, budget);
    print_verdict(v, json);
    return verdict_exit(v);
}

int run_search(const std::string& base_file, const std::string& field_flag,
               const std::string& law, std::uint64_t budget, bool cross, bool json) {
    Algebra base = read_algebra_file(base_file);
    if (!field_flag.empty()) base = to_field(base, parse_field_flag(field_flag));
    if (cross) {
        bool equal = cross_check_reduction(base, budget);
        if (json) {
            Json j;
            j["reduction_complete"] = equal;
            std::cout << canonical_dump(j);
        } else {
            std::cout << (equal ? "operator reduction matches the full scan\n"
                                : "operator reduction MISSES solutions\n");
        }
        return equal ? 0 : 1;
    }
    SearchResult res = enumerate_jnp(base, parse_search_law(law), budget);
    if (json) {
        Json j;
        j["candidates"] = res.candidates;
        j["solutions"] = res.solutions.size();
        Json buckets = Json::array();
        for (const SearchBucket& b : res.buckets) {
            Json bj;
            bj["profile"] = b.profile.as_array();
            bj["size"] = b.members.size();
            Algebra repr = base;
            repr.circ = res.solutions[b.representative].circ;
            bj["representative"] = algebra_to_json(repr);
            buckets.push_back(bj);
        }
        j["buckets"] = buckets;
        std::cout << canonical_dump(j);
    } else {
        std::cout << res.candidates << " candidates, " << res.solutions.size()
                  << " solutions, " << res.buckets.size() << " invariant classes\n";
        for (const SearchBucket& b : res.buckets) {
            const auto prof = b.profile.as_array();
            std::cout << "  class (ann.dot=" << prof[0] << ", ann.circ=" << prof[1]
                      << ", sym.rank=" << prof[2] << ", integrals=" << prof[3]
                      << "): " << b.members.size() << " solutions\n";
        }
    }
    return 0;
}

int run_catalog_list(bool json) {
    if (json) {
        Json arr = Json::array();
        for (const CatalogEntry& e : catalog_entries()) {
            Json j;
            j["name"] = e.name;
            j["summary"] = e.summary;
            j["law"] = e.law;
            j["field"] = e.field_note;
            Json params = Json::array();
            for (const ParamSpec& p : e.params) params.push_back(p.name);
            j["params"] = params;
            arr.push_back(j);
        }
        std::cout << canonical_dump(arr);
    } else {
        for (const CatalogEntry& e : catalog_entries()) {
            std::cout << e.name << "  [" << e.law << ", field: " << e.field_note << "]";
            if (!e.params.empty()) {
                std::cout << "  params:";
                for (const ParamSpec& p : e.params) std::cout << " " << p.name;
            }
            std::cout << "\n    " << e.summary << "\n";
        }
    }
    return 0;
}

int run_catalog_emit(const std::string& name, const SetOption& sets,
                     const std::string& field_flag, const std::string& out_path) {
    Field f = field_flag.empty() ? Field::rational() : parse_field_flag(field_flag);
    Emission em = catalog_emit(name, f, sets.parsed());
    emit_algebra(em.algebra, out_path);
    return 0;
}

int run_catalog_verify(const std::string& plan_path, bool json) {
    VerifyPlan plan;
    if (!plan_path.empty()) {
        Json j = read_json_file(plan_path);
        for (const Json& entry : j.at("entries")) {
            std::string name = entry.at("name").get<std::string>();
            Field f = field_from_json(entry.at("field"));
            for (const Json& asg : entry.at("assignments")) {
                VerifyCase vc;
                vc.field = f;
                for (const auto& [key, value] : asg.items())
                    vc.assignment[key] = value.get<std::string>();
                plan.cases[name].push_back(std::move(vc));
            }
        }
    }
    VerifyReport rep = catalog_verify(plan);
    if (json) {
        Json arr = Json::array();
        for (const EntryReport& e : rep.entries) {
            Json j;
            j["name"] = e.name;
            j["instances"] = e.instances;
            j["failures"] = e.failures;
            if (e.first_failure) j["first_failure"] = verdict_to_json(*e.first_failure);
            arr.push_back(j);
        }
        std::cout << canonical_dump(arr);
    } else {
        for (const EntryReport& e : rep.entries)
            std::cout << e.name << ": " << (e.instances - e.failures) << "/" << e.instances
                      << " pass\n";
    }
    return rep.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with two-product algebras and their brackets"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string file, file_b, out_path, law = "jnp", grid = "-2..2", field_flag, plan_path;
    std::string map_name = "P", q_value = "0", vec_text, entry_name;
    bool json = false, allow_prime = false, use_adjoint = false, cross = false;
    std::uint64_t budget = 1u << 24;
    SetOption sets;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", json, "JSON output"); };

    CLI::App* check = app.add_subcommand("check", "check a law on an algebra file");
    check->add_option("file", file)->required();
    check->add_option("--law", law,
                      "unital-comm-assoc|novikov|right-novikov|dnp|jnp|right-jnp|jacobi|"
                      "transposed-poisson|quadratic|derivation|circ-derivation|admissible|"
                      "simple-novikov");
    check->add_option("--budget", budget);
    add_json(check);

    CLI::App* integrals = app.add_subcommand("integrals", "basis of the integral space");
    integrals->add_option("file", file)->required();
    add_json(integrals);

    CLI::App* forms = app.add_subcommand("forms", "basis of the invariant symmetric forms");
    forms->add_option("file", file)->required();
    add_json(forms);

    CLI::App* frobenius = app.add_subcommand("frobenius", "decide Frobenius-ness");
    frobenius->add_option("file", file)->required();
    add_json(frobenius);

    CLI::App* affinize = app.add_subcommand("affinize", "grid check of the Laurent extension");
    affinize->add_option("file", file)->required();
    affinize->add_option("--grid", grid, "degree grid LO..HI (default -2..2)");
    affinize->add_flag("--allow-prime", allow_prime, "run over a prime field anyway");
    add_json(affinize);

    CLI::App* simple = app.add_subcommand("simple", "simplicity of the second product");
    simple->add_option("file", file)->required();
    simple->add_option("--budget", budget);
    add_json(simple);

    CLI::App* construct = app.add_subcommand("construct", "derived algebras");
    construct->require_subcommand(1);
    auto add_construct = [&](const std::string& name, const std::string& desc, bool two_files) {
        CLI::App* c = construct->add_subcommand(name, desc);
        c->add_option("file", file)->required();
        if (two_files) c->add_option("file_b", file_b)->required();
        c->add_option("-o,--output", out_path);
        return c;
    };
    add_construct("from-derivation", "second product a . P(b)", false)
        ->add_option("--map", map_name, "name of the derivation in the file (default P)");
    CLI::App* c_q = add_construct("circ-q", "second product a . (P + qQ)(b)", false);
    c_q->add_option("--q", q_value)->required();
    c_q->add_flag("--use-adjoint", use_adjoint, "take Q as the form-adjoint of P");
    add_construct("commutator", "bracket a o b - b o a", false);
    add_construct("twisted", "bracket P(a) o b - P(b) o a", false)
        ->add_option("--map", map_name);
    add_construct("tensor-jnp", "tensor of two algebras, left products", true);
    add_construct("tensor-jacobi", "tensor with a right-product factor", true);
    add_construct("xi-shift", "shift a o b + xi . a . b", false)
        ->add_option("--xi", vec_text, "comma-separated coefficients")->required();
    add_construct("kantor", "deformed product a o (u . b)", false)
        ->add_option("--u", vec_text)->required();
    add_construct("conformal", "bracket u^{-1} . [u . a, u . b]", false)
        ->add_option("--u", vec_text)->required();

    CLI::App* module = app.add_subcommand("module", "module structures");
    module->require_subcommand(1);
    CLI::App* mod_check = module->add_subcommand("check", "check module axioms");
    mod_check->add_option("alg", file)->required();
    mod_check->add_option("mod", file_b)->required();
    add_json(mod_check);
    CLI::App* mod_adj = module->add_subcommand("adjoint", "adjoint module of an algebra");
    mod_adj->add_option("alg", file)->required();
    mod_adj->add_option("-o,--output", out_path);
    CLI::App* mod_dual = module->add_subcommand("dual", "dual of a module");
    mod_dual->add_option("alg", file)->required();
    mod_dual->add_option("mod", file_b)->required();
    mod_dual->add_option("-o,--output", out_path);

    CLI::App* catalog = app.add_subcommand("catalog", "built-in parametric families");
    catalog->require_subcommand(1);
    CLI::App* cat_list = catalog->add_subcommand("list", "list entries");
    add_json(cat_list);
    CLI::App* cat_emit = catalog->add_subcommand("emit", "emit an instance");
    cat_emit->add_option("name", entry_name)->required();
    cat_emit->add_option("--set", sets.raw, "parameter NAME=VALUE (repeatable)");
    cat_emit->add_option("--field", field_flag, "'rational' or p=P (default rational)");
    cat_emit->add_option("-o,--output", out_path);
    CLI::App* cat_verify = catalog->add_subcommand("verify", "run the asserted law checkers");
    cat_verify->add_option("--plan", plan_path, "JSON sampling plan");
    add_json(cat_verify);

    CLI::App* search = app.add_subcommand("search", "enumerate second products over F_p");
    search->add_option("--base", file, "dot-only algebra file")->required();
    search->add_option("--field", field_flag, "p=P to move a rational base into F_p");
    search->add_option("--law", law, "jnp|novikov|dnp (default jnp)");
    search->add_option("--budget", budget);
    search->add_flag("--cross-check", cross, "compare against the unreduced tensor scan");
    add_json(search);

    try {
        app.parse(argc, argv);

        if (*check) return run_check(file, law, json, budget);
        if (*integrals) return run_spaces(file, false, json);
        if (*forms) return run_spaces(file, true, json);
        if (*frobenius) return run_frobenius(file, json);
        if (*affinize) return run_affinize(file, grid, allow_prime, json);
        if (*simple) return run_simple(file, budget, json);

        if (*construct) {
            Algebra alg = read_algebra_file(file);
            ConstructionReport rep = [&]() {
                CLI::App* sub = construct->get_subcommands().front();
                const std::string& name = sub->get_name();
                if (name == "from-derivation") return from_derivation(alg, alg.named_map(map_name));
                if (name == "circ-q") {
                    Scalar q = Scalar::parse(alg.field, q_value);
                    Matrix P = alg.named_map("P");
                    Matrix Q(alg.field, 0, 0);
                    if (use_adjoint) {
                        if (!alg.form) throw ConstraintViolation("--use-adjoint needs a form");
                        Q = adjoint_operator(alg, P, *alg.form);
                    } else {
                        Q = alg.named_map("Q");
                    }
                    return circ_q(alg, P, Q, q);
                }
                if (name == "commutator") return commutator_jacobi(alg);
                if (name == "twisted") return twisted_jacobi(alg, alg.named_map(map_name));
                if (name == "tensor-jnp") return tensor_jnp(alg, read_algebra_file(file_b));
                if (name == "tensor-jacobi") return tensor_jacobi(alg, read_algebra_file(file_b));
                if (name == "xi-shift")
                    return xi_shift(alg, parse_vec(alg.field, vec_text, alg.dim));
                if (name == "kantor") {
                    Vec u = parse_vec(alg.field, vec_text, alg.dim);
                    return alg.circ_orientation == Orientation::Right
                               ? right_kantor_deform(alg, u)
                               : kantor_deform(alg, u);
                }
                if (name == "conformal")
                    return conformal_deform_jacobi(alg, parse_vec(alg.field, vec_text, alg.dim));
                throw Error("unknown construction");
            }();
            emit_algebra(rep.out, out_path);
            return 0;
        }

        if (*module) {
            if (*mod_check) {
                Algebra alg = read_algebra_file(file);
                ModuleStructure mod = module_from_json(alg.field, read_json_file(file_b));
                Verdict v = check_module(alg, mod);
                print_verdict(v, json);
                return verdict_exit(v);
            }
            Algebra alg = read_algebra_file(file);
            ModuleStructure mod;
            if (*mod_adj) {
                mod = adjoint_module(alg);
            } else {
                ModuleStructure in = module_from_json(alg.field, read_json_file(file_b));
                mod = dual_module(alg, in);
            }
            Json j = module_to_json(alg, mod);
            if (out_path.empty())
                std::cout << canonical_dump(j);
            else
                write_json_file(out_path, j);
            return 0;
        }

        if (*catalog) {
            if (*cat_list) return run_catalog_list(json);
            if (*cat_emit) return run_catalog_emit(entry_name, sets, field_flag, out_path);
            return run_catalog_verify(plan_path, json);
        }

        if (*search) return run_search(file, field_flag, law, budget, cross, json);

        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // 0 for --help / --version
        return code == 0 ? 0 : 2;
    } catch (const InternalCheckFailure& e) {
        std::cerr << "internal check failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
