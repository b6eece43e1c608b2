#include "ulrich/cli.hpp"

#include "ulrich/classifier.hpp"
#include "ulrich/config.hpp"
#include "ulrich/products.hpp"
#include "ulrich/spinor.hpp"
#include "ulrich/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace ulrich::cli {

namespace {

struct Options {
    std::string format = "md";
    std::string config_file;
};

void load_config(const Options& opt) {
    if (!opt.config_file.empty()) {
        std::ifstream in(opt.config_file);
        if (!in)
            throw std::invalid_argument("cannot open config file: " + opt.config_file);
        Json j = Json::parse(in);
        if (j.contains("n_max"))
            engine_config().n_max = j.at("n_max").get<int>();
        if (j.contains("table_width"))
            engine_config().table_width = j.at("table_width").get<int>();
    }
    if (const char* env = std::getenv("ULRICH_N_MAX"))
        engine_config().n_max = std::atoi(env);
}

Json read_json_input(const std::string& path) {
    if (path.empty() || path == "-")
        return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    return Json::parse(in);
}

void print_coh(const CohClass& x, const std::string& format) {
    if (format == "json")
        std::cout << coh_to_json(x).dump(2) << "\n";
    else
        std::cout << to_pretty_string(x) << "\n";
}

void print_bundle(const BundleClass& e, const std::string& format) {
    if (format == "json") {
        std::cout << bundle_to_json(e).dump(2) << "\n";
    } else {
        std::cout << "rank " << e.rank << " on " << e.ring->descriptor().to_string()
                  << "\n  c = " << to_pretty_string(e.chern) << "\n";
    }
}

int report_exit(const VerificationReport& rep, const std::string& format) {
    if (format == "json")
        std::cout << rep.to_json().dump(2) << "\n";
    else
        std::cout << rep.to_markdown();
    return rep.pass() ? 0 : 1;
}

int record_exit(const DeductionRecord& rec, const std::string& format) {
    if (format == "json")
        std::cout << rec.to_json().dump(2) << "\n";
    else
        std::cout << rec.to_markdown();
    return rec.ok() ? 0 : 1;
}

SpinorKind parse_kind(const std::string& s, bool ulrich_twist) {
    SpinorKind k;
    k.ulrich_twist = ulrich_twist;
    if (s == "s")
        k.base = SpinorBase::s;
    else if (s == "sprime")
        k.base = SpinorBase::sprime;
    else if (s == "sdoubleprime")
        k.base = SpinorBase::sdoubleprime;
    else
        throw CLI::ValidationError("--kind", "must be s, sprime or sdoubleprime");
    return k;
}

int run_ring_eval(const std::string& input, const std::string& format) {
    Json j = read_json_input(input);
    const auto op = j.at("op").get<std::string>();
    if (op == "hyperplane") {
        print_coh(hyperplane(Ring::get(ring_from_json(j.at("ring")))), format);
    } else if (op == "mul") {
        print_coh(mul(coh_from_json(j.at("x")), coh_from_json(j.at("y"))), format);
    } else if (op == "pow") {
        print_coh(pow(coh_from_json(j.at("x")), j.at("e").get<int>()), format);
    } else if (op == "integrate") {
        Json out{{"value", int_to_json(integrate(coh_from_json(j.at("x"))))}};
        std::cout << (format == "json" ? out.dump(2) : out.at("value").dump()) << "\n";
    } else if (op == "restrict-linear") {
        auto fam = j.at("family").get<std::string>();
        if (fam != "l" && fam != "lp")
            throw std::invalid_argument("family must be 'l' or 'lp'");
        print_coh(restrict_to_linear(fam == "l" ? PlaneFamily::l : PlaneFamily::lp,
                                     coh_from_json(j.at("x"))),
                  format);
    } else if (op == "restrict-hyperplane") {
        print_coh(restrict_to_hyperplane_quadric(coh_from_json(j.at("x"))), format);
    } else {
        throw std::invalid_argument("unknown ring op: " + op);
    }
    return 0;
}

std::string pad(const std::string& s) {
    std::ostringstream os;
    os << std::setw(engine_config().table_width) << s;
    return os.str();
}

void print_classification(const std::vector<ClassificationRow>& rows,
                          const std::string& format) {
    if (format == "json") {
        Json out = Json::array();
        for (const auto& r : rows)
            out.push_back(r.to_json());
        std::cout << out.dump(2) << "\n";
        return;
    }
    std::cout << "| n | a | b | rank | nu | big | witness |\n";
    std::cout << "|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        std::string w;
        for (size_t i = 0; i < r.witness.size(); ++i)
            w += (i ? "," : "") + r.witness[i].str();
        std::cout << "| " << r.model.n << " | " << r.model.a << " | " << r.model.b << " | "
                  << r.rank << " | " << r.nu << " | " << (r.big ? "yes" : "no") << " | " << w
                  << " |\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact intersection-theory calculator for quadrics and products "
                 "of projective spaces"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"md", "json"}))
        ->capture_default_str();
    app.add_option("--config", opt.config_file, "JSON config file (n_max, table_width)");

    // ring eval
    auto* ring_cmd = app.add_subcommand("ring", "graded ring arithmetic");
    auto* ring_eval = ring_cmd->add_subcommand("eval", "evaluate a ring op from JSON");
    std::string ring_input = "-";
    ring_eval->add_option("--input", ring_input, "op JSON file, or - for stdin");

    // bundle <op>
    auto* bundle_cmd = app.add_subcommand("bundle", "Chern/Segre bundle calculus");
    std::string b_input = "-", b_input2, b_lambda;
    int b_i = 0, b_m = 2, b_p = 1, b_t = 0;
    auto* b_dual = bundle_cmd->add_subcommand("dual", "dual bundle class");
    b_dual->add_option("--input", b_input, "BundleClass JSON file or -");
    auto* b_twist = bundle_cmd->add_subcommand("twist", "twist by a codegree-1 class");
    b_twist->add_option("--input", b_input, "BundleClass JSON file or -");
    b_twist->add_option("--lambda", b_lambda, "codegree-1 class as coeffs JSON")->required();
    auto* b_sum = bundle_cmd->add_subcommand("sum", "direct sum of two classes");
    b_sum->add_option("--input", b_input, "first BundleClass JSON file or -");
    b_sum->add_option("--input2", b_input2, "second BundleClass JSON file")->required();
    auto* b_segre = bundle_cmd->add_subcommand("segre", "total Segre class");
    b_segre->add_option("--input", b_input, "BundleClass JSON file or -");
    auto* b_segre_dual = bundle_cmd->add_subcommand("segre-dual", "s_i of the dual");
    b_segre_dual->add_option("--input", b_input, "BundleClass JSON file or -");
    b_segre_dual->add_option("--i", b_i, "codegree")->required();
    auto* b_nu = bundle_cmd->add_subcommand("nu", "numerical dimension");
    b_nu->add_option("--input", b_input, "BundleClass JSON file or -");
    auto* b_big = bundle_cmd->add_subcommand("is-big", "top dual Segre witness");
    b_big->add_option("--input", b_input, "BundleClass JSON file or -");
    auto* b_cert = bundle_cmd->add_subcommand("sum-certificate", "direct-sum bigness terms");
    b_cert->add_option("--input", b_input, "first BundleClass JSON file or -");
    b_cert->add_option("--input2", b_input2, "second BundleClass JSON file")->required();
    auto* b_forms = bundle_cmd->add_subcommand("forms", "twisted forms on projective space");
    b_forms->add_option("--m", b_m, "projective dimension")->required();
    b_forms->add_option("--p", b_p, "form degree")->required();
    b_forms->add_option("--t", b_t, "twist")->required();

    // spinor
    auto* spinor_cmd = app.add_subcommand("spinor", "spinor bundle Chern data");
    auto* sp_chern = spinor_cmd->add_subcommand("chern", "Chern vector on Q_n");
    int sp_n = 10;
    std::string sp_kind = "sprime";
    bool sp_twist = false, sp_json = false;
    sp_chern->add_option("--n", sp_n, "quadric dimension")->required();
    sp_chern->add_option("--kind", sp_kind, "s | sprime | sdoubleprime");
    sp_chern->add_flag("--ulrich-twist", sp_twist, "twist by h");
    sp_chern->add_flag("--json", sp_json, "shorthand for --format json");
    auto* sp_table = spinor_cmd->add_subcommand("nu-table", "nu of Ulrich spinors");
    int sp_lo = 2, sp_hi = 10;
    sp_table->add_option("--from", sp_lo, "first n");
    sp_table->add_option("--to", sp_hi, "last n");
    auto* sp_ident = spinor_cmd->add_subcommand("identities", "closure identities at even n");
    int sp_ident_n = 10;
    sp_ident->add_option("--n", sp_ident_n, "even quadric dimension")->required();

    // quadric
    auto* quadric_cmd = app.add_subcommand("quadric", "Ulrich models on quadrics");
    auto* q_classify = quadric_cmd->add_subcommand("classify", "non-big models up to a rank");
    int q_n = 4, q_rmax = -1, q_a = 1, q_b = 0;
    std::string q_verify;
    q_classify->add_option("--n", q_n, "quadric dimension")->required();
    q_classify->add_option("--rmax", q_rmax, "rank bound (default: 2 spinor ranks)");
    q_classify->add_option("--verify", q_verify, "compare against a frozen table")
        ->check(CLI::IsMember({"table1"}));
    auto* q_nu = quadric_cmd->add_subcommand("nu", "nu of one model");
    q_nu->add_option("--n", q_n, "quadric dimension")->required();
    q_nu->add_option("--a", q_a, "multiplicity of S'(1) (or S(1) for odd n)")->required();
    q_nu->add_option("--b", q_b, "multiplicity of S''(1)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "built-in verification suites");
    auto* v_table1 = verify_cmd->add_subcommand("table1", "non-big classification table");
    int v_rmax_factor = 4;
    v_table1->add_option("--rmax", v_rmax_factor, "bound in spinor-rank multiples");
    verify_cmd->add_subcommand("chern-q10", "Chern vector of S' on Q_10");
    verify_cmd->add_subcommand("nu-table", "spinor nu values, n = 2..10");
    verify_cmd->add_subcommand("certificates", "named certificate integers");
    verify_cmd->add_subcommand("thm4", "product-of-planes deduction, r = 1..8");
    auto* v_un = verify_cmd->add_subcommand("example-un", "Ulrich family on P1 x P(n-1)");
    int v_n = 3, v_r = 2;
    v_un->add_option("--n", v_n, "total dimension");
    v_un->add_option("--r", v_r, "rank");
    auto* v_t2 = verify_cmd->add_subcommand("theorem2-cases", "closed-form case checks");
    int v_mmax = 12;
    v_t2->add_option("--mmax", v_mmax, "largest m");
    verify_cmd->add_subcommand("line-criterion", "forces-big boundary, n = 3..40");

    std::vector<const char*> argv;
    argv.push_back("ulrich");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        load_config(opt);

        if (ring_eval->parsed())
            return run_ring_eval(ring_input, opt.format);

        if (b_dual->parsed()) {
            print_bundle(dual(bundle_from_json(read_json_input(b_input))), opt.format);
            return 0;
        }
        if (b_twist->parsed()) {
            BundleClass e = bundle_from_json(read_json_input(b_input));
            CohClass lam = coeffs_from_json(e.ring, Json::parse(b_lambda));
            print_bundle(twist(e, lam), opt.format);
            return 0;
        }
        if (b_sum->parsed()) {
            print_bundle(whitney_sum(bundle_from_json(read_json_input(b_input)),
                                     bundle_from_json(read_json_input(b_input2))),
                         opt.format);
            return 0;
        }
        if (b_segre->parsed()) {
            print_coh(segre(bundle_from_json(read_json_input(b_input))), opt.format);
            return 0;
        }
        if (b_segre_dual->parsed()) {
            print_coh(segre_dual(bundle_from_json(read_json_input(b_input)), b_i), opt.format);
            return 0;
        }
        if (b_nu->parsed()) {
            std::cout << nu(bundle_from_json(read_json_input(b_input))) << "\n";
            return 0;
        }
        if (b_big->parsed()) {
            auto w = is_big(bundle_from_json(read_json_input(b_input)));
            Json out{{"big", w.big}, {"witness", int_to_json(w.witness)}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (b_cert->parsed()) {
            auto cert = sum_big_certificate(bundle_from_json(read_json_input(b_input)),
                                            bundle_from_json(read_json_input(b_input2)));
            Json terms = Json::array();
            for (const auto& t : cert.terms)
                terms.push_back(int_to_json(t));
            Json out{{"big", cert.big}, {"terms", terms}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (b_forms->parsed()) {
            print_bundle(chern_of_twisted_forms(b_m, b_p, b_t), opt.format);
            return 0;
        }

        if (sp_chern->parsed()) {
            BundleClass e = spinor_chern(sp_n, parse_kind(sp_kind, sp_twist));
            print_bundle(e, sp_json ? "json" : opt.format);
            return 0;
        }
        if (sp_table->parsed()) {
            auto rows = spinor_nu_table(sp_lo, sp_hi);
            if (opt.format == "json") {
                Json out = Json::array();
                for (const auto& [n, v] : rows)
                    out.push_back({{"n", n}, {"nu", v}});
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "| n | nu |\n|---|---|\n";
                for (const auto& [n, v] : rows)
                    std::cout << "| " << n << " | " << v << " |\n";
            }
            return 0;
        }
        if (sp_ident->parsed())
            return report_exit(spinor_identities_check(sp_ident_n), opt.format);

        if (q_classify->parsed()) {
            if (q_rmax < 0)
                q_rmax = 2 * spinor_rank(q_n);
            auto rows = classify_nonbig(q_n, q_rmax);
            print_classification(rows, opt.format);
            if (q_verify == "table1") {
                auto expected = expected_table1_pairs(q_n, q_rmax / spinor_rank(q_n));
                std::vector<std::pair<int, int>> got;
                for (const auto& r : rows)
                    got.emplace_back(r.model.a, r.model.b);
                if (got != expected) {
                    std::cerr << "table1 mismatch at n=" << q_n << "\n";
                    return 1;
                }
            }
            return 0;
        }
        if (q_nu->parsed()) {
            std::cout << nu_of_model({q_n, q_a, q_b}) << "\n";
            return 0;
        }

        if (v_table1->parsed())
            return report_exit(verify_table1(v_rmax_factor), opt.format);
        if (verify_cmd->got_subcommand("chern-q10"))
            return report_exit(verify_chern_q10(), opt.format);
        if (verify_cmd->got_subcommand("nu-table"))
            return report_exit(verify_nu_table(), opt.format);
        if (verify_cmd->got_subcommand("certificates"))
            return report_exit(verify_certificates(), opt.format);
        if (verify_cmd->got_subcommand("thm4"))
            return report_exit(verify_thm4(), opt.format);
        if (v_un->parsed())
            return record_exit(example_un_pipeline(v_n, v_r), opt.format);
        if (v_t2->parsed())
            return report_exit(verify_theorem2_cases(v_mmax), opt.format);
        if (verify_cmd->got_subcommand("line-criterion"))
            return report_exit(verify_line_criterion(), opt.format);

        std::cerr << "missing subcommand\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ulrich::cli
