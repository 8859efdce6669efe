// Command-line front end: parse group files, assemble product instances,
// run the constructions and verifications, and emit reports.
//
// Exit codes: 0 = all requested checks pass, 1 = a mathematical check failed,
// 2 = input or usage error.

#include <iostream>

#include "CLI11.hpp"
#include "fusys/catalog.hpp"
#include "fusys/groupfile.hpp"

using namespace fusys;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Report {
public:
    explicit Report(bool kv) : kv_(kv) {}
    void section(const std::string& name) {
        if (!kv_) std::cout << "[" << name << "]\n";
        prefix_ = kv_ ? name + "." : "  ";
    }
    void emit(const std::string& key, const std::string& value) {
        std::cout << prefix_ << key << " = " << value << "\n";
    }
    void emit(const std::string& key, bool value) {
        emit(key, std::string(value ? "true" : "false"));
    }
    void emit(const std::string& key, long long value) { emit(key, std::to_string(value)); }

private:
    bool kv_;
    std::string prefix_;
};

Subgroup resolve_carrier(const GroupFile& gf, const std::string& sel, int p) {
    if (sel == "sylow") return sylow_in(full_subgroup(gf.group), p);
    if (sel.rfind("gens:", 0) == 0) {
        std::vector<Elt> seed;
        std::string rest = sel.substr(5);
        for (const std::string& w : detail::split_words(rest)) seed.push_back(evaluate_word(gf, w));
        return generate_subgroup(gf.group, std::move(seed));
    }
    auto it = gf.subgroups.find(sel);
    if (it == gf.subgroups.end()) throw UsageError("unknown subgroup selector: " + sel);
    return it->second;
}

struct FileInstance {
    GroupFile gf;
    Subgroup N, S, T;
    int p;
};

FileInstance load_instance(const std::string& path, int p, const std::string& normal_sel,
                           const std::string& carrier_sel) {
    FileInstance fi{parse_group_file(path), {}, {}, {}, p};
    fi.N = resolve_carrier(fi.gf, normal_sel, p);
    if (!is_normal_in(full_subgroup(fi.gf.group), fi.N))
        throw UsageError("selected subgroup '" + normal_sel + "' is not normal");
    fi.S = sylow_in(full_subgroup(fi.gf.group), p);
    fi.T = carrier_sel.empty() ? fi.S : resolve_carrier(fi.gf, carrier_sel, p);
    if (!is_p_group(fi.T, p)) throw UsageError("carrier is not a p-group");
    if (!fi.S.contains_all(fi.T)) {
        // allow any p-subgroup whose Sylow sits elsewhere: require T inside a Sylow
        throw UsageError("carrier does not lie inside the chosen Sylow subgroup");
    }
    Subgroup S0 = intersect(fi.S, fi.N);
    if (!fi.T.contains_all(S0)) throw UsageError("carrier does not contain S \xE2\x88\xA9 N");
    return fi;
}

int run_case_checks(const CatalogCase& c, Report& rep, bool with_verify) {
    ProductInstance inst = instance_of(c);
    const FusionSystem& D = inst.D();
    FusionSystem orc = oracle_product(c.G, c.N, c.T, c.p);
    bool oracle_equal = systems_equal(D, orc).equal;
    bool sat = is_saturated(D).saturated;
    bool op_id = systems_equal(op_residual_subsystem(D), op_residual_subsystem(inst.F0)).equal;
    rep.emit("carrier_order", (long long)c.T.order());
    rep.emit("morphisms", D.morphism_count());
    rep.emit("oracle_equal", oracle_equal);
    rep.emit("saturated", sat);
    rep.emit("op_identity", op_id);
    bool ok = oracle_equal == c.oracle_equal && sat == c.saturated && op_id == c.op_identity;
    if (with_verify) {
        VerificationReport v = verify_main_theorem(inst, {orc});
        rep.emit("automizer_centric", v.automizer_centric);
        rep.emit("automizer_containment", v.automizer_containment);
        rep.emit("candidates_ok", v.candidates_ok);
        for (const std::string& w : v.witnesses) rep.emit("witness", w);
        ok = ok && v.pass();
    }
    rep.emit("pass", ok);
    return ok ? 0 : 1;
}

int cmd_product(const std::string& path, int p, const std::string& normal_sel,
                const std::string& carrier_sel, Report& rep) {
    FileInstance fi = load_instance(path, p, normal_sel, carrier_sel);
    FusionSystem F = fusion_system_of_group(fi.gf.group, fi.S, p);
    Subgroup S0 = intersect(fi.S, fi.N);
    FusionSystem F0 = fusion_system_of(fi.N, S0, p);
    NormalityReport nr = is_normal_subsystem(F, F0);
    if (!nr.normal) throw UsageError("not a normal subsystem: " + nr.failed_condition);
    ProductInstance inst(std::move(F), std::move(F0), fi.T, false);
    const FusionSystem& D = inst.D();
    FusionSystem orc = oracle_product(fi.gf.group, fi.N, fi.T, p);
    rep.section("product");
    rep.emit("carrier_order", (long long)fi.T.order());
    rep.emit("morphisms", D.morphism_count());
    bool oracle_equal = systems_equal(D, orc).equal;
    bool sat = is_saturated(D).saturated;
    bool op_id = systems_equal(op_residual_subsystem(D), op_residual_subsystem(inst.F0)).equal;
    rep.emit("oracle_equal", oracle_equal);
    rep.emit("saturated", sat);
    rep.emit("op_identity", op_id);
    return (oracle_equal && sat && op_id) ? 0 : 1;
}

int cmd_verify(const std::string& case_sel, Report& rep) {
    if (case_sel.rfind("catalog:", 0) != 0)
        throw UsageError("verify expects --case catalog:<name>|catalog:all");
    std::string name = case_sel.substr(8);
    std::vector<CatalogCase> cat = standard_catalog();
    int rc = 0;
    if (name == "all") {
        for (const CatalogCase& c : cat) {
            rep.section(c.name);
            rc |= run_case_checks(c, rep, true);
        }
        return rc;
    }
    const CatalogCase* c = find_case(cat, name);
    if (!c) throw UsageError("unknown catalog case: " + name);
    rep.section(c->name);
    return run_case_checks(*c, rep, true);
}

int cmd_oracle_compare(const std::string& case_sel, const std::string& path, int p,
                       const std::string& normal_sel, const std::string& carrier_sel,
                       Report& rep) {
    if (!case_sel.empty()) {
        if (case_sel.rfind("catalog:", 0) != 0)
            throw UsageError("oracle-compare expects --case catalog:<name>");
        const std::vector<CatalogCase> cat = standard_catalog();
        const CatalogCase* c = find_case(cat, case_sel.substr(8));
        if (!c) throw UsageError("unknown catalog case: " + case_sel.substr(8));
        rep.section(c->name);
        ProductInstance inst = instance_of(*c);
        FusionSystem orc = oracle_product(c->G, c->N, c->T, c->p);
        auto eq = systems_equal(inst.D(), orc);
        rep.emit("product_morphisms", inst.D().morphism_count());
        rep.emit("oracle_morphisms", orc.morphism_count());
        rep.emit("oracle_equal", eq.equal);
        if (!eq.equal) rep.emit("witness", eq.witness);
        return eq.equal ? 0 : 1;
    }
    FileInstance fi = load_instance(path, p, normal_sel, carrier_sel);
    FusionSystem F = fusion_system_of_group(fi.gf.group, fi.S, p);
    Subgroup S0 = intersect(fi.S, fi.N);
    FusionSystem F0 = fusion_system_of(fi.N, S0, p);
    ProductInstance inst(std::move(F), std::move(F0), fi.T);
    FusionSystem orc = oracle_product(fi.gf.group, fi.N, fi.T, p);
    auto eq = systems_equal(inst.D(), orc);
    rep.section("oracle-compare");
    rep.emit("product_morphisms", inst.D().morphism_count());
    rep.emit("oracle_morphisms", orc.morphism_count());
    rep.emit("oracle_equal", eq.equal);
    if (!eq.equal) rep.emit("witness", eq.witness);
    return eq.equal ? 0 : 1;
}

int cmd_example(const std::string& name, int q, Report& rep) {
    if (name == "7.4") {
        if (q < 3) throw UsageError("example 7.4 requires q >= 3");
        Fixture74 fx = fixture_example_7_4(q);
        bool f_eq_g = systems_equal(fx.F, fx.Gsys).equal;
        bool op_eq =
            systems_equal(op_residual_subsystem(fx.F), op_residual_subsystem(fx.Gsys)).equal;
        ProductInstance iF(fx.F, fx.F0, fx.S);
        ProductInstance iG(fx.Gsys, fx.F0, fx.S);
        bool products_eq = systems_equal(iF.D(), iG.D()).equal;
        rep.section("example-7.4");
        rep.emit("F_eq_G", f_eq_g);
        rep.emit("Op_eq", op_eq);
        rep.emit("products_eq", products_eq);
        return (!f_eq_g && op_eq && !products_eq) ? 0 : 1;
    }
    if (name == "7.5") {
        if (q < 3) throw UsageError("example 7.5 requires q >= 3");
        Fixture75 fx = fixture_example_7_5(q);
        ProductInstance inst(fx.F, fx.F0, fx.S);
        AutGroup ac = a_circ(inst, fx.P);
        AutMap alphaP;
        for (Elt x : fx.P.members) alphaP.push_back(fx.vs.group->conj(x, fx.alpha));
        AutGroup autD = inst.D().aut(inst.D().subgroup_index(fx.P.members));
        bool alpha_in_acirc = ac.contains(alphaP);
        bool autF0S_trivial = autD.order() == 1;
        bool acirc_in_F0S = true;
        for (const AutMap& a : ac.elems)
            if (!autD.contains(a)) { acirc_in_F0S = false; break; }
        rep.section("example-7.5");
        rep.emit("alpha_in_acirc", alpha_in_acirc);
        rep.emit("autF0S_trivial", autF0S_trivial);
        rep.emit("acirc_in_F0S", acirc_in_F0S);
        return (alpha_in_acirc && autF0S_trivial && !acirc_in_F0S) ? 0 : 1;
    }
    if (name == "7.1") {
        CatalogCase c = case_ex71();
        ProductInstance inst = instance_of(c);
        FusionSystem F = fusion_system_of_group(c.G, c.S, c.p);
        bool product_is_f0 = systems_equal(inst.D(), inst.F0).equal;
        bool proper = is_subsystem_of(inst.D(), F) && !systems_equal(inst.D(), F).equal;
        QuotientSystem qs = quotient_system(F, inst.F0.carrier);
        bool quotient_trivial = qs.quotient.carrier.order() == 1;
        rep.section("example-7.1");
        rep.emit("product_is_F0", product_is_f0);
        rep.emit("F0T_proper_in_F", proper);
        rep.emit("quotient_trivial", quotient_trivial);
        return (product_is_f0 && proper && quotient_trivial) ? 0 : 1;
    }
    throw UsageError("unknown example: " + name + " (expected 7.1, 7.4 or 7.5)");
}

int cmd_catalog(Report& rep) {
    for (const CatalogCase& c : standard_catalog()) {
        rep.section(c.name);
        rep.emit("group_order", (long long)c.G->order());
        rep.emit("prime", (long long)c.p);
        rep.emit("normal_order", (long long)c.N.order());
        rep.emit("sylow_order", (long long)c.S.order());
        rep.emit("carrier_order", (long long)c.T.order());
        rep.emit("expect_oracle_equal", c.oracle_equal);
        rep.emit("expect_saturated", c.saturated);
        rep.emit("expect_op_identity", c.op_identity);
    }
    return 0;
}

int cmd_dump(const std::string& path, int p, const std::string& carrier_sel) {
    GroupFile gf = parse_group_file(path);
    Subgroup S = carrier_sel.empty() ? sylow_in(full_subgroup(gf.group), p)
                                     : resolve_carrier(gf, carrier_sel, p);
    FusionSystem F = fusion_system_of_group(gf.group, S, p);
    std::cout << dump_fusion_system(F);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fusion-system product engine"};
    app.require_subcommand(1);
    bool kv = false;
    app.add_flag("--kv", kv, "key-value output (one 'name = value' per line)");

    std::string group_path, normal_sel, carrier_sel, case_sel, example_name;
    int prime = 0, q = 3;

    CLI::App* sub_product = app.add_subcommand("product", "build F0T from a group file");
    sub_product->add_option("--group", group_path)->required();
    sub_product->add_option("--prime", prime)->required();
    sub_product->add_option("--normal", normal_sel)->required();
    sub_product->add_option("--carrier", carrier_sel);

    CLI::App* sub_verify = app.add_subcommand("verify", "run the theorem checks on catalog cases");
    sub_verify->add_option("--case", case_sel)->required();

    CLI::App* sub_oracle = app.add_subcommand("oracle-compare", "compare F0T with F_T(NT)");
    sub_oracle->add_option("--case", case_sel);
    sub_oracle->add_option("--group", group_path);
    sub_oracle->add_option("--prime", prime);
    sub_oracle->add_option("--normal", normal_sel);
    sub_oracle->add_option("--carrier", carrier_sel);

    CLI::App* sub_example = app.add_subcommand("example", "reproduce a worked example");
    sub_example->add_option("--name", example_name)->required();
    sub_example->add_option("--q", q);

    app.add_subcommand("catalog", "list the standard catalog cases");

    CLI::App* sub_dump = app.add_subcommand("dump", "print the fusion system of a group file");
    sub_dump->add_option("--group", group_path)->required();
    sub_dump->add_option("--prime", prime)->required();
    sub_dump->add_option("--carrier", carrier_sel);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Report rep(kv);
    try {
        if (sub_product->parsed()) return cmd_product(group_path, prime, normal_sel, carrier_sel, rep);
        if (sub_verify->parsed()) return cmd_verify(case_sel, rep);
        if (sub_oracle->parsed()) {
            if (case_sel.empty() && (group_path.empty() || prime == 0 || normal_sel.empty()))
                throw UsageError("oracle-compare needs --case or --group/--prime/--normal");
            return cmd_oracle_compare(case_sel, group_path, prime, normal_sel, carrier_sel, rep);
        }
        if (sub_example->parsed()) return cmd_example(example_name, q, rep);
        if (sub_dump->parsed()) return cmd_dump(group_path, prime, carrier_sel);
        return cmd_catalog(rep);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
