#include "wz/parser.hpp"
#include "wz/summation.hpp"
#include "wz/verify.hpp"
#include "wz/wzengine.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace wz;

namespace {

struct Options {
    std::string term;
    std::string device;
    std::string id;
    std::string out;
    long pmin = 0;
    long pmax = 0;
    int mod_exp = 0;
    int max_order = 6;
    int grid = 12;
    long collapse_a = 0;
    int collapse_m = 0;
    bool json_out = false;
};

json empty_doc(const std::string& command) {
    json doc;
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["results"] = json::array();
    doc["derived_operators"] = json::array();
    doc["warnings"] = json::array();
    return doc;
}

int emit(const Options& o, const json& doc, const std::string& text) {
    std::string payload = o.json_out ? doc.dump(2) + "\n" : text;
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot open " << o.out << "\n";
            return 2;
        }
        f << payload;
    } else {
        std::cout << payload;
    }
    return 0;
}

json operator_json(const DifferenceOperator& op) {
    json coeffs = json::array();
    for (const auto& c : op.coeffs) coeffs.push_back(c.str());
    return json{{"coeffs", coeffs}};
}

long default_pmax(const SupercongruenceSpec& row) {
    int strongest = row.exponent;
    for (const auto& e : row.extensions)
        strongest = std::max(strongest, e.exponent);
    return strongest >= 4 ? 50 : 100;
}

std::vector<const SupercongruenceSpec*> selected_rows(const Options& o,
                                                     bool pipeline_only) {
    std::vector<const SupercongruenceSpec*> rows;
    if (!o.id.empty()) {
        rows.push_back(&catalog_row(o.id));
    } else {
        for (const auto& row : catalog())
            if (!pipeline_only || row.has_pipeline()) rows.push_back(&row);
    }
    return rows;
}

std::vector<long> selected_primes(const SupercongruenceSpec& row,
                                  const Options& o, size_t default_count) {
    if (o.pmin > 0 || o.pmax > 0) {
        long lo = o.pmin > 0 ? o.pmin : 3;
        long hi = o.pmax > 0 ? o.pmax + 1 : default_pmax(row);
        return qualifying_primes(row, lo, hi);
    }
    if (default_count > 0) {
        std::vector<long> ps = qualifying_primes(row, 3, 1000);
        if (ps.size() > default_count) ps.resize(default_count);
        return ps;
    }
    return qualifying_primes(row, 3, default_pmax(row));
}

CongruenceReport check_at(const SupercongruenceSpec& row, long p, int N) {
    if (N <= 0) return check(row, p);
    CongruenceReport rep;
    rep.id = row.id;
    rep.p = p;
    rep.exponent = N;
    rep.lhs = lhs_sum(row, p);
    rep.rhs = rhs_value(row, p, N);
    Rational diff = rep.lhs - Rational(rep.rhs.value);
    rep.difference_valuation =
        diff == 0 ? kExactValuation : padic_val(diff, Integer(p));
    rep.pass = rep.difference_valuation >= N;
    return rep;
}

json congruence_json(const CongruenceReport& rep) {
    json row;
    row["id"] = rep.id;
    row["p"] = rep.p;
    row["exponent"] = rep.exponent;
    row["lhs"] = to_string(rep.lhs);
    row["rhs_residue"] = rep.rhs.value.get_str();
    row["difference_valuation"] = rep.difference_valuation;
    row["pass"] = rep.pass;
    return row;
}

std::string congruence_text(const CongruenceReport& rep) {
    std::ostringstream os;
    os << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.id << " p=" << rep.p
       << ": sum = " << to_string(rep.lhs) << " = " << rep.rhs.value.get_str()
       << " mod " << rep.p << "^" << rep.exponent << " (valuation "
       << rep.difference_valuation << ")";
    for (const auto& n : rep.notes) os << "; " << n;
    os << "\n";
    return os.str();
}

int run_gosper(const Options& o) {
    HyperTerm t = parse_term(o.term);
    auto cert = gosper(t);
    json doc = empty_doc("gosper");
    doc["inputs"]["term"] = o.term;
    std::ostringstream text;
    if (cert) {
        json row;
        row["found"] = true;
        row["R"] = cert->R.str();
        row["G"] = cert->G.str();
        doc["results"].push_back(row);
        text << "R(n) = " << cert->R.str() << "\n"
             << "G(n) = " << cert->G.str() << "\n";
    } else {
        json row;
        row["found"] = false;
        doc["results"].push_back(row);
        doc["warnings"].push_back("no hypergeometric antidifference");
        text << "no hypergeometric antidifference\n";
    }
    return emit(o, doc, text.str());
}

int run_ct(const Options& o) {
    HyperTerm F = parse_term(o.term);
    json doc = empty_doc("ct");
    doc["inputs"]["term"] = o.term;
    doc["inputs"]["max_order"] = o.max_order;
    TelescopingResult res = creative_telescoping(F, o.max_order);
    VerificationReport vr = verify_ct(F, res, o.grid);
    doc["derived_operators"].push_back(operator_json(res.op));
    json row;
    row["order"] = res.op.order();
    row["operator"] = res.op.str();
    row["R"] = res.R.str();
    row["identity_ok"] = vr.identity_ok;
    row["grid_ok"] = vr.grid_ok;
    row["points_checked"] = vr.points_checked;
    row["points_skipped"] = vr.points_skipped;
    row["pass"] = vr.ok();
    doc["results"].push_back(row);
    std::ostringstream text;
    text << "operator: " << res.op.str() << "\n"
         << "R(n,k) = " << res.R.str() << "\n"
         << "identity " << (vr.identity_ok ? "ok" : "FAILED") << ", grid "
         << (vr.grid_ok ? "ok" : "FAILED") << " (" << vr.points_checked
         << " points, " << vr.points_skipped << " skipped)\n";
    int rc = emit(o, doc, text.str());
    return rc != 0 ? rc : (vr.ok() ? 0 : 1);
}

int run_collapse(const Options& o) {
    HyperTerm F = parse_term(o.term);
    HyperTerm collapsed = degree_collapse(F, o.collapse_a, o.collapse_m);
    json doc = empty_doc("collapse");
    doc["inputs"]["term"] = o.term;
    doc["inputs"]["a"] = o.collapse_a;
    doc["inputs"]["m"] = o.collapse_m;
    json row;
    row["term"] = collapsed.str();
    doc["results"].push_back(row);
    return emit(o, doc, collapsed.str() + "\n");
}

int run_pair(const Options& o) {
    json doc = empty_doc("pair");
    HyperTerm F;
    long a = o.collapse_a;
    int m = o.collapse_m;
    const SupercongruenceSpec* row_spec = nullptr;
    if (!o.id.empty()) {
        row_spec = &catalog_row(o.id);
        if (!row_spec->has_pipeline())
            throw Error(o.id + ": no telescoping pipeline");
        F = *row_spec->lift;
        a = row_spec->collapse_a;
        m = row_spec->collapse_m;
        doc["inputs"]["id"] = o.id;
    } else {
        F = parse_term(o.term);
        doc["inputs"]["term"] = o.term;
        doc["inputs"]["a"] = a;
        doc["inputs"]["m"] = m;
    }
    WZPair pair = build_pair(F, a, m, o.max_order);
    PairReport rep = certify_pair(pair, o.grid);
    bool device_match =
        row_spec && row_spec->device ? pair.device == *row_spec->device : true;
    doc["derived_operators"].push_back(operator_json(pair.op));
    json row;
    row["operator"] = pair.op.str();
    row["q"] = pair.q.str();
    row["device"] = pair.device.str();
    row["S"] = pair.S.str();
    row["identity_ok"] = rep.identity_ok;
    row["grid_ok"] = rep.grid_ok;
    row["base_ok"] = rep.base_ok;
    row["boundary_ok"] = rep.boundary_ok;
    row["points_checked"] = rep.points_checked;
    row["points_skipped"] = rep.points_skipped;
    if (row_spec && row_spec->device) row["device_matches"] = device_match;
    bool pass = rep.ok() && device_match;
    row["pass"] = pass;
    doc["results"].push_back(row);
    std::ostringstream text;
    text << "operator: " << pair.op.str() << "\n"
         << "q(k) = " << pair.q.str() << "\n"
         << "device w(n,k) = " << pair.device.str() << "\n"
         << "S(n,k) = " << pair.S.str() << "\n"
         << (pass ? "[PASS]" : "[FAIL]") << " identity "
         << (rep.identity_ok ? "ok" : "FAILED") << ", grid "
         << (rep.grid_ok ? "ok" : "FAILED") << ", base "
         << (rep.base_ok ? "ok" : "FAILED") << ", boundary "
         << (rep.boundary_ok ? "ok" : "FAILED");
    if (row_spec && row_spec->device)
        text << ", catalog device " << (device_match ? "matched" : "MISMATCH");
    text << "\n";
    int rc = emit(o, doc, text.str());
    return rc != 0 ? rc : (pass ? 0 : 1);
}

int run_device(const Options& o) {
    json doc = empty_doc("device");
    HyperTerm w, F;
    if (!o.id.empty()) {
        const auto& row_spec = catalog_row(o.id);
        if (!row_spec.device) throw Error(o.id + ": no device in the catalog");
        w = *row_spec.device;
        F = row_spec.summand;
        doc["inputs"]["id"] = o.id;
    } else {
        w = parse_term(o.device);
        F = parse_term(o.term);
        doc["inputs"]["device"] = o.device;
        doc["inputs"]["term"] = o.term;
    }
    DeviceReport rep = is_wz_device(w, F, o.max_order);
    doc["derived_operators"].push_back(operator_json(rep.op));
    json row;
    row["base_ok"] = rep.base_ok;
    row["order"] = rep.order;
    row["splitting"] = rep.splitting;
    row["operator"] = rep.op.str();
    row["pass"] = rep.pass;
    doc["results"].push_back(row);
    std::ostringstream text;
    text << (rep.pass ? "[PASS]" : "[FAIL]") << " base "
         << (rep.base_ok ? "ok" : "FAILED") << ", operator order " << rep.order
         << ", coefficients " << (rep.splitting ? "split" : "do not split")
         << "\noperator: " << rep.op.str() << "\n";
    int rc = emit(o, doc, text.str());
    return rc != 0 ? rc : (rep.pass ? 0 : 1);
}

int run_gamma_p(const Options& o) {
    json doc = empty_doc("gamma-p");
    HyperTerm t = parse_term(o.term);
    if (t.depends_on(Var::n) || t.depends_on(Var::k))
        throw Error("gamma-p: the argument must be a rational constant");
    ExtendedValue v = t.eval(0, 0);
    if (v.is_pole) throw Error("gamma-p: the argument must be finite");
    Rational arg = v.value;
    int N = o.mod_exp > 0 ? o.mod_exp : 3;
    long lo = o.pmin > 0 ? o.pmin : 3;
    long hi = o.pmax > 0 ? o.pmax : lo;
    doc["inputs"]["term"] = to_string(arg);
    doc["inputs"]["exponent"] = N;
    std::ostringstream text;
    for (long p : primes_in(std::max(lo, 3L), hi + 1)) {
        GammaPEvaluator gp(Integer(p), N);
        PadicResidue r = gp(arg);
        json row;
        row["p"] = p;
        row["exponent"] = N;
        row["arg"] = to_string(arg);
        row["value"] = r.value.get_str();
        doc["results"].push_back(row);
        text << "gamma_" << p << "(" << to_string(arg) << ") = " << r.str()
             << "\n";
    }
    return emit(o, doc, text.str());
}

int run_verify(const Options& o) {
    json doc = empty_doc("verify");
    if (!o.id.empty()) doc["inputs"]["id"] = o.id;
    std::ostringstream text;
    bool all_pass = true;
    for (const auto* row_spec : selected_rows(o, false)) {
        for (long p : selected_primes(*row_spec, o, 0)) {
            CongruenceReport rep = check_at(*row_spec, p, o.mod_exp);
            all_pass = all_pass && rep.pass;
            doc["results"].push_back(congruence_json(rep));
            for (const auto& n : rep.notes)
                doc["warnings"].push_back(rep.id + " p=" + std::to_string(p) +
                                          ": " + n);
            text << congruence_text(rep);
        }
    }
    int rc = emit(o, doc, text.str());
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

int run_chain(const Options& o) {
    json doc = empty_doc("chain");
    if (!o.id.empty()) doc["inputs"]["id"] = o.id;
    std::ostringstream text;
    bool all_pass = true;
    for (const auto* row_spec : selected_rows(o, true)) {
        if (!row_spec->has_pipeline())
            throw Error(row_spec->id + ": no telescoping pipeline");
        for (long p : selected_primes(*row_spec, o, 3)) {
            CongruenceReport rep = check(*row_spec, p);
            ChainReport cr = chain_check(*row_spec, p);
            bool pass = rep.pass && cr.pass;
            all_pass = all_pass && pass;
            json row = congruence_json(rep);
            json chain = json::array();
            for (size_t k = 0; k < cr.tail_valuations.size(); ++k)
                chain.push_back(json{{"k", k},
                                     {"valuation", cr.tail_valuations[k]}});
            row["chain"] = chain;
            row["chain_required"] = cr.required_valuation;
            row["tail_ok"] = cr.tail_ok;
            row["shift_identity_ok"] = cr.shift_identity_ok;
            row["boundary_ok"] = cr.boundary_ok;
            row["diagonal_ok"] = cr.diagonal_ok;
            row["corner_residue"] = cr.corner.value.get_str();
            row["corner_ok"] = cr.corner_ok;
            row["pass"] = pass;
            doc["results"].push_back(row);
            text << (pass ? "[PASS] " : "[FAIL] ") << rep.id << " p=" << p
                 << " chain: tail valuations [";
            for (size_t k = 0; k < cr.tail_valuations.size(); ++k)
                text << (k ? "," : "") << cr.tail_valuations[k];
            text << "] >= " << cr.required_valuation << " "
                 << (cr.tail_ok ? "ok" : "FAILED") << ", telescoping "
                 << (cr.shift_identity_ok && cr.diagonal_ok ? "exact" : "FAILED")
                 << ", boundary " << (cr.boundary_ok ? "ok" : "FAILED")
                 << ", corner " << cr.corner.str() << " "
                 << (cr.corner_ok ? "ok" : "FAILED") << "\n";
        }
    }
    int rc = emit(o, doc, text.str());
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized WZ pairs and truncated hypergeometric congruences"};
    app.require_subcommand(1);
    Options o;

    auto add_output = [&](CLI::App* c) {
        c->add_flag("--json", o.json_out, "emit a JSON report");
        c->add_option("--out", o.out, "write the report to this file");
    };

    auto* gosper_cmd =
        app.add_subcommand("gosper", "hypergeometric antidifference of a term");
    gosper_cmd->add_option("--term", o.term, "term in n")->required();
    add_output(gosper_cmd);

    auto* ct_cmd =
        app.add_subcommand("ct", "creative telescoping on a bivariate term");
    ct_cmd->add_option("--term", o.term, "term in n and k")->required();
    ct_cmd->add_option("--max-order", o.max_order, "largest operator order");
    ct_cmd->add_option("--grid", o.grid, "verification grid size");
    add_output(ct_cmd);

    auto* collapse_cmd =
        app.add_subcommand("collapse", "divide away the k-only Pochhammer factor");
    collapse_cmd->add_option("--term", o.term, "term in n and k")->required();
    collapse_cmd->add_option("--a", o.collapse_a, "Pochhammer argument 1/a")
        ->required();
    collapse_cmd->add_option("--m", o.collapse_m, "power of the n symbol")
        ->required();
    add_output(collapse_cmd);

    auto* pair_cmd =
        app.add_subcommand("pair", "derive and certify a generalized WZ pair");
    pair_cmd->add_option("--id", o.id, "catalog row");
    pair_cmd->add_option("--term", o.term, "lifted term in n and k");
    pair_cmd->add_option("--a", o.collapse_a, "collapse parameter a");
    pair_cmd->add_option("--m", o.collapse_m, "collapse parameter m");
    pair_cmd->add_option("--max-order", o.max_order, "largest operator order");
    pair_cmd->add_option("--grid", o.grid, "certification grid size");
    add_output(pair_cmd);

    auto* device_cmd =
        app.add_subcommand("device", "test a candidate telescoping device");
    device_cmd->add_option("--id", o.id, "catalog row");
    device_cmd->add_option("--device", o.device, "device w(n,k)");
    device_cmd->add_option("--term", o.term, "summand F(n)");
    device_cmd->add_option("--max-order", o.max_order, "largest operator order");
    add_output(device_cmd);

    auto* gamma_cmd =
        app.add_subcommand("gamma-p", "p-adic gamma values at a rational point");
    gamma_cmd->add_option("--term", o.term, "rational argument")->required();
    gamma_cmd->add_option("--pmin", o.pmin, "first prime");
    gamma_cmd->add_option("--pmax", o.pmax, "last prime");
    gamma_cmd->add_option("--mod-exp", o.mod_exp, "precision exponent");
    add_output(gamma_cmd);

    auto* verify_cmd =
        app.add_subcommand("verify", "check catalog congruences at primes");
    verify_cmd->add_option("--id", o.id, "catalog row, all when omitted");
    verify_cmd->add_option("--pmin", o.pmin, "first prime");
    verify_cmd->add_option("--pmax", o.pmax, "last prime");
    verify_cmd->add_option("--mod-exp", o.mod_exp,
                           "exponent override, strongest when omitted");
    add_output(verify_cmd);

    auto* chain_cmd = app.add_subcommand(
        "chain", "replay the telescoping argument at concrete primes");
    chain_cmd->add_option("--id", o.id, "catalog row, all pipeline rows when omitted");
    chain_cmd->add_option("--pmin", o.pmin, "first prime");
    chain_cmd->add_option("--pmax", o.pmax, "last prime");
    add_output(chain_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gosper_cmd->parsed()) return run_gosper(o);
        if (ct_cmd->parsed()) return run_ct(o);
        if (collapse_cmd->parsed()) return run_collapse(o);
        if (pair_cmd->parsed()) return run_pair(o);
        if (device_cmd->parsed()) return run_device(o);
        if (gamma_cmd->parsed()) return run_gamma_p(o);
        if (verify_cmd->parsed()) return run_verify(o);
        if (chain_cmd->parsed()) return run_chain(o);
    } catch (const std::exception& e) {
        if (o.json_out) {
            json err;
            err["error"] = e.what();
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return 2;
    }
    return 2;
}
