#include "qnull/cli.hpp"

#include "qnull/groebner.hpp"
#include "qnull/nullstellensatz.hpp"
#include "qnull/textio.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace qnull::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_names(const std::string& text) {
    std::vector<std::string> names;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        names.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return names;
}

void write_output(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write '" + path + "'");
}

class Session {
public:
    Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    const std::vector<std::string>& vars() const {
        if (cfg_.variables.empty()) throw UsageError("--vars is required for this command");
        return cfg_.variables;
    }
    MonomialOrder order() const { return MonomialOrder(cfg_.order, vars().size()); }
    std::string show(const Polynomial& p) const { return print_poly(p, vars(), order()); }
    bool doc() const { return cfg_.mode == OutputMode::doc; }

    LeftIdeal ideal(const std::string& path) const {
        return buchberger(parse_ideal(read_input(path), vars()), order());
    }

    int eval_cmd(const std::string& poly_text, const std::string& point_text) {
        Polynomial f = parse_poly(poly_text, vars());
        CommutingPoint p = parse_point(point_text);
        std::string value = to_string(eval(f, p));
        if (doc()) out_ << json{{"value", value}}.dump(2) << "\n";
        else out_ << value << "\n";
        return kSuccess;
    }

    int gb_cmd(const std::string& path) {
        LeftIdeal I = ideal(path);
        if (doc()) {
            json j;
            j["basis"] = json::array();
            for (const Polynomial& b : I.basis()) j["basis"].push_back(show(b));
            if (cfg_.cofactors) j["cofactors"] = cofactor_rows(I.cofactors());
            out_ << j.dump(2) << "\n";
            return kSuccess;
        }
        for (std::size_t k = 0; k < I.basis().size(); ++k) {
            out_ << show(I.basis()[k]) << "\n";
            if (cfg_.cofactors) print_cofactors(I.cofactors()[k], "  ");
        }
        return kSuccess;
    }

    int member_cmd(const std::string& path, const std::string& poly_text) {
        LeftIdeal I = ideal(path);
        Membership m = is_member(parse_poly(poly_text, vars()), I);
        if (doc()) {
            json j{{"member", m.member}};
            if (m.member) j["cofactors"] = cofactor_row(m.cofactors);
            out_ << j.dump(2) << "\n";
        } else {
            out_ << (m.member ? "yes" : "no") << "\n";
            if (m.member) print_cofactors(m.cofactors, "");
        }
        return m.member ? kSuccess : kNegative;
    }

    int condition_cmd(const std::string& path, const std::string& f_text, const std::string& a_text,
                      unsigned fixed_n) {
        LeftIdeal I = ideal(path);
        Polynomial f = parse_poly(f_text, vars());
        if (!cfg_.scalars.empty()) return family(I, f);
        if (a_text.empty()) throw UsageError("a scalar or --scalars is required");
        Quaternion a = parse_quaternion(a_text);
        auto w = fixed_n ? condition_holds(I, f, a, fixed_n) : search_N(I, f, a, cfg_.n_max);
        std::string bound = fixed_n ? "N = " + std::to_string(fixed_n) : "N <= " + std::to_string(cfg_.n_max);
        if (doc()) {
            json j{{"scalar", to_string(a)}, {"holds", w.has_value()}};
            if (w) {
                j["N"] = w->N;
                j["G"] = json::array();
                for (const Polynomial& g : w->by_power) j["G"].push_back(show(g));
                j["G_cofactors"] = cofactor_rows(w->cofactors);
            } else {
                j["searched"] = bound;
            }
            out_ << j.dump(2) << "\n";
        } else if (w) {
            out_ << "holds at N = " << w->N << " for a = " << to_string(a) << "\n";
            out_ << "(aF)^N = sum_m G[m] (aF)^m with\n";
            for (std::size_t m = 0; m < w->by_power.size(); ++m)
                out_ << "G[" << m << "]: " << show(w->by_power[m]) << "\n";
        } else {
            out_ << "does not hold for a = " << to_string(a) << " with " << bound << "\n";
        }
        return w ? kSuccess : kNegative;
    }

    int cert_cmd(const std::string& path, const std::string& f_text, const std::string& a_text) {
        LeftIdeal I = ideal(path);
        Polynomial f = parse_poly(f_text, vars());
        Quaternion a = parse_quaternion(a_text);
        if (a.is_zero()) throw UsageError("the scalar must be nonzero");
        CertificateOutcome outcome = rabinowitsch_certificate(I, f, a);
        if (outcome.status == CertificateStatus::not_unit_ideal) {
            out_ << "1 is not in the ideal generated by I and (aF)y - 1 for a = " << to_string(a) << "\n";
            return kNegative;
        }
        CertificateDocument docu{vars(), fresh_variable_name(vars()), cfg_.order, *outcome.certificate};
        std::string text = write_certificate(docu);
        if (!cfg_.output_path.empty()) write_output(cfg_.output_path, text);
        if (doc()) {
            if (cfg_.output_path.empty()) out_ << text;
        } else {
            print_certificate(docu);
        }
        return kSuccess;
    }

    int verify_cmd(const std::string& path) {
        CertificateDocument docu = read_certificate(read_input(path));
        CertificateCheck check = check_certificate(docu.certificate);
        if (!check.ok) {
            out_ << "verification failed: " << check.failure << "\n";
            return kVerificationFailed;
        }
        out_ << "verified\n";
        return kSuccess;
    }

    int paper_example_cmd() {
        PaperExampleReport r = reproduce_paper_example(cfg_.n_max);
        auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
        out_ << "I = <x - i>, F = 1\n";
        out_ << mark(r.i_in_zero_locus) << "  (i) lies in V(I)\n";
        out_ << mark(!r.one_vanishes_on_locus) << "  F = 1 does not vanish on {(i)}\n";
        for (const PaperExampleRow& row : r.rows) {
            out_ << mark(row.passed) << "  b = " << to_string(row.b) << ": ";
            if (row.expect_identity) {
                out_ << "identity " << (row.identity_holds ? "holds" : "fails") << ", condition "
                     << (row.found_N ? "holds at N = " + std::to_string(*row.found_N) : std::string("fails"))
                     << "\n";
            } else {
                out_ << "bi - ib = 0 (" << (row.coefficient_undefined ? "coefficient undefined" : "defined?")
                     << "), condition " << (row.found_N ? "holds" : "fails") << " for N <= " << r.n_max << "\n";
            }
        }
        out_ << (r.passed() ? "all checks passed" : "some checks FAILED") << "\n";
        return r.passed() ? kSuccess : kNegative;
    }

private:
    int family(const LeftIdeal& I, const Polynomial& f) {
        std::vector<Quaternion> scalars;
        for (const std::string& s : cfg_.scalars) scalars.push_back(parse_quaternion(s));
        ScalarFamilyReport r = check_scalar_family(I, f, scalars, cfg_.n_max);
        if (doc()) {
            json j;
            j["n_max"] = r.n_max;
            j["results"] = json::array();
            for (const ScalarOutcome& o : r.outcomes) {
                json row{{"scalar", to_string(o.scalar)}};
                row["N"] = o.N ? json(*o.N) : json(nullptr);
                j["results"].push_back(row);
            }
            j["note"] = ScalarFamilyReport::scope_note();
            out_ << j.dump(2) << "\n";
        } else {
            for (const ScalarOutcome& o : r.outcomes) {
                out_ << to_string(o.scalar) << ": ";
                if (o.N) out_ << "holds at N = " << *o.N << "\n";
                else out_ << "not found for N <= " << r.n_max << "\n";
            }
            out_ << "note: " << ScalarFamilyReport::scope_note() << "\n";
        }
        return r.all_passed() ? kSuccess : kNegative;
    }

    json cofactor_row(const std::vector<Polynomial>& row) const {
        json r = json::array();
        for (const Polynomial& c : row) r.push_back(show(c));
        return r;
    }

    json cofactor_rows(const std::vector<std::vector<Polynomial>>& rows) const {
        json out = json::array();
        for (const auto& row : rows) out.push_back(cofactor_row(row));
        return out;
    }

    void print_cofactors(const std::vector<Polynomial>& row, const char* indent) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out_ << indent << "cofactor[" << j << "]: " << show(row[j]) << "\n";
    }

    void print_certificate(const CertificateDocument& d) {
        const Certificate& c = d.certificate;
        std::vector<std::string> ext = d.variables;
        ext.push_back(d.extra_variable);
        out_ << "verified certificate for a = " << to_string(c.scalar) << ", N = " << c.N << "\n";
        out_ << "(aF)^N = sum_m G[m] (aF)^(N-m) with\n";
        for (std::size_t m = 0; m < c.G.size(); ++m) out_ << "G[" << m << "]: " << show(c.G[m]) << "\n";
        out_ << "H: " << print_poly(c.H, ext, order().extended()) << "\n";
    }

    const RunConfig& cfg_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Exact quaternion polynomial kernel: evaluation, left Groebner bases, Nullstellensatz certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string order_name = "degrevlex";
    std::string format_name = "text";
    std::string scalars_text;
    std::string vars_text;
    app.add_option("--vars", vars_text, "Variable names, comma separated");
    app.add_option("--order", order_name, "Monomial order")->check(CLI::IsMember({"degrevlex", "deglex", "lex"}));
    app.add_option("--nmax", cfg.n_max, "Largest N tried when searching")->check(CLI::PositiveNumber);
    app.add_option("--scalars", scalars_text, "Comma-separated scalars for a family check");
    app.add_flag("--cofactors", cfg.cofactors, "Print cofactors over the input generators");
    app.add_option("--format", format_name, "Output mode")->check(CLI::IsMember({"text", "doc"}));

    std::string poly_text, point_text, f_text, a_text;
    unsigned fixed_n = 0;

    auto* eval = app.add_subcommand("eval", "Evaluate a polynomial at a commuting point");
    eval->add_option("poly", poly_text)->required();
    eval->add_option("point", point_text)->required();

    auto* gb = app.add_subcommand("gb", "Reduced left Groebner basis of an ideal file");
    gb->add_option("ideal", cfg.input_path, "Ideal file ('-' for stdin)")->required();

    auto* member = app.add_subcommand("member", "Left ideal membership with cofactors");
    member->add_option("ideal", cfg.input_path)->required();
    member->add_option("poly", poly_text)->required();

    auto* condition = app.add_subcommand("condition", "Check (aF)^N in I + I(aF) + ... + I(aF)^N");
    condition->add_option("ideal", cfg.input_path)->required();
    condition->add_option("F", f_text)->required();
    condition->add_option("a", a_text);
    condition->add_option("-N,--power", fixed_n, "Check this N only instead of searching up to --nmax")
        ->check(CLI::PositiveNumber);

    auto* cert = app.add_subcommand("cert", "Rabinowitsch certificate for a scalar");
    cert->add_option("ideal", cfg.input_path)->required();
    cert->add_option("F", f_text)->required();
    cert->add_option("a", a_text)->required();
    cert->add_option("-o,--output", cfg.output_path, "Write the certificate document here");

    auto* verify = app.add_subcommand("verify", "Re-verify a certificate document");
    verify->add_option("certificate", cfg.input_path)->required();

    auto* paper = app.add_subcommand("paper-example", "Run the <x - i> example checks");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        cfg.order = *parse_order_kind(order_name);
        cfg.mode = format_name == "doc" ? OutputMode::doc : OutputMode::text;
        if (!scalars_text.empty()) {
            // Validate eagerly so a bad list is a usage error.
            for (const Quaternion& s : parse_scalar_list(scalars_text)) cfg.scalars.push_back(to_string(s));
        }
        cfg.variables = split_names(vars_text);
        if (!cfg.variables.empty()) validate_variable_names(cfg.variables);

        Session s(cfg, out);
        if (*eval) return s.eval_cmd(poly_text, point_text);
        if (*gb) return s.gb_cmd(cfg.input_path);
        if (*member) return s.member_cmd(cfg.input_path, poly_text);
        if (*condition) return s.condition_cmd(cfg.input_path, f_text, a_text, fixed_n);
        if (*cert) return s.cert_cmd(cfg.input_path, f_text, a_text);
        if (*verify) return s.verify_cmd(cfg.input_path);
        if (*paper) return s.paper_example_cmd();
    } catch (const VerificationFailed& e) {
        err << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace qnull::cli
