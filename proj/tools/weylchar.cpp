#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weyl/filtration.hpp"
#include "weyl/graded_char.hpp"
#include "weyl/json_io.hpp"
#include "weyl/module_lab.hpp"
#include "weyl/verify_suites.hpp"

namespace {

using namespace weyl;

Window parse_window(const std::string& s) {
    auto pos = s.find(':', 1); // allow a leading minus sign
    if (pos == std::string::npos)
        throw std::invalid_argument("window must be lo:hi, e.g. -4:10");
    Window w{std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
    if (w.lo > w.hi) throw std::invalid_argument("window lo must be <= hi");
    return w;
}

GradedChar family_char(const std::string& family, int lambda, Window w) {
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
    if (family == "weyl-local" || family == "local")
        return weyl_local_char(lambda);
    if (family == "weyl-global" || family == "global")
        return weyl_global_char(lambda, w);
    if (family == "dual-local")
        return weyl_local_char(lambda).dual();
    if (family == "tilting")
        return tilting_char(lambda, w);
    if (family == "wedge-w1")
        return wedge_power_char(lambda, w);
    throw std::invalid_argument("unknown family: " + family);
}

GradedChar parse_family(const std::string& arg, Window w) {
    auto pos = arg.rfind(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("expected family:lambda, e.g. global:2");
    return family_char(arg.substr(0, pos), std::stoi(arg.substr(pos + 1)), w);
}

void emit_char(const GradedChar& c, const std::string& format) {
    if (format == "json")
        std::cout << to_json(c).dump(2) << "\n";
    else if (format == "csv")
        std::cout << to_csv(c);
    else
        std::cout << pretty(c);
}

int cmd_char(const std::string& family, int lambda, const std::string& window,
             const std::string& format) {
    Window w = window.empty() ? default_window(lambda) : parse_window(window);
    GradedChar c;
    try {
        c = family_char(family, lambda, w);
    } catch (const std::runtime_error& e) {
        // window/truncation problems here are bad input, not internal failures
        throw std::invalid_argument(e.what());
    }
    emit_char(c, format);
    return 0;
}

int cmd_decompose(const std::vector<std::string>& tensor_args, const std::string& dual_arg,
                  const std::string& char_arg, const std::string& json_path,
                  const std::string& basis, const std::string& window,
                  const std::string& format) {
    GradedChar chi;
    Window w{0, 24};
    if (!window.empty()) w = parse_window(window);
    if (!tensor_args.empty()) {
        if (tensor_args.size() != 2)
            throw std::invalid_argument("--tensor takes exactly two family:lambda arguments");
        chi = tensor(parse_family(tensor_args[0], w), parse_family(tensor_args[1], w));
    } else if (!dual_arg.empty()) {
        chi = parse_family(dual_arg, w).dual();
    } else if (!char_arg.empty()) {
        chi = parse_family(char_arg, w);
    } else if (!json_path.empty()) {
        try {
            nlohmann::json j;
            if (json_path == "-") {
                j = nlohmann::json::parse(std::cin);
            } else {
                std::ifstream in(json_path);
                if (!in) throw std::invalid_argument("cannot open " + json_path);
                j = nlohmann::json::parse(in);
            }
            chi = gchar_from_json(j);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
        }
    } else {
        throw std::invalid_argument("give one of --tensor, --dual, --char, --json");
    }
    FiltBasis b = basis_from_string(basis);
    FiltMultiplicity fm;
    try {
        fm = peel(chi, b);
    } catch (const std::exception& e) {
        std::cerr << "decompose failed: " << e.what() << "\n";
        return 1;
    }
    if (format == "json")
        std::cout << to_json(fm).dump(2) << "\n";
    else
        std::cout << pretty(fm);
    return 0;
}

int cmd_module(const std::string& kind_name, int lambda, int trunc, int safe_degree,
               const std::string& matrix_arg, const std::string& format,
               lab::BuildLimits lim) {
    lab::Kind kind;
    if (kind_name == "tensor")
        kind = lab::Kind::Tensor;
    else if (kind_name == "sym")
        kind = lab::Kind::Sym;
    else if (kind_name == "wedge")
        kind = lab::Kind::Wedge;
    else if (kind_name == "local-quotient")
        kind = lab::Kind::LocalQuotient;
    else
        throw std::invalid_argument("unknown kind: " + kind_name);
    lab::Realization m = lab::Realization::build(kind, lambda, trunc, lim);
    int safe = safe_degree < 0 ? trunc : safe_degree;
    GradedChar chr = lab::graded_char_of(m, safe);
    if (!matrix_arg.empty()) {
        auto pos = matrix_arg.find(':');
        if (pos == std::string::npos)
            throw std::invalid_argument("--matrix takes gen:power, e.g. x:1");
        std::string gname = matrix_arg.substr(0, pos);
        int r = std::stoi(matrix_arg.substr(pos + 1));
        lab::Gen g;
        if (gname == "x")
            g = lab::Gen::X;
        else if (gname == "y")
            g = lab::Gen::Y;
        else if (gname == "h")
            g = lab::Gen::H;
        else
            throw std::invalid_argument("generator must be x, y or h");
        for (const auto& [key, basis] : m.blocks()) {
            std::cout << "# block degree " << key.degree << " weight " << key.weight
                      << " -> degree " << key.degree + r << "\n";
            std::cout << matrix_text(m.gen_matrix(g, r, key));
        }
        return 0;
    }
    if (format == "pretty")
        std::cout << pretty(chr);
    else
        std::cout << module_report(m, chr).dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, VerifyCaps caps) {
    std::vector<CheckResult> results;
    if (suite == "qseries")
        results = verify_qseries(caps);
    else if (suite == "characters")
        results = verify_characters(caps);
    else if (suite == "filtration")
        results = verify_filtration(caps);
    else if (suite == "modulelab")
        results = verify_modulelab(caps);
    else if (suite == "all")
        results = verify_all(caps);
    else
        throw std::invalid_argument("unknown suite: " + suite);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact graded characters, filtration multiplicities and "
                 "brute-force verification for sl2[t] modules"};
    app.set_config("--config");
    app.require_subcommand(1);

    std::string family, window, format = "pretty";
    int lambda = 0;
    auto* c_char = app.add_subcommand("char", "Print a named graded character");
    c_char->add_option("family", family,
                       "weyl-local|weyl-global|dual-local|tilting|wedge-w1")
        ->required();
    c_char->add_option("lambda", lambda, "highest weight")->required();
    c_char->add_option("--window", window, "exponent window lo:hi");
    c_char->add_option("--format", format, "json|csv|pretty");

    std::vector<std::string> tensor_args;
    std::string dual_arg, char_arg, json_path, basis = "global";
    auto* c_dec = app.add_subcommand("decompose",
                                     "Filtration multiplicities of a character");
    c_dec->add_option("--tensor", tensor_args,
                      "two family:lambda arguments to tensor")
        ->expected(2);
    c_dec->add_option("--dual", dual_arg, "family:lambda, then dualized");
    c_dec->add_option("--char", char_arg, "family:lambda");
    c_dec->add_option("--json", json_path, "graded-character JSON file, or -");
    c_dec->add_option("--basis", basis, "global|local|dual-local");
    c_dec->add_option("--window", window, "exponent window lo:hi");
    c_dec->add_option("--format", format, "json|pretty");

    std::string kind_name = "sym", matrix_arg, mod_format = "json";
    int trunc = 6, safe_degree = -1;
    lab::BuildLimits lim;
    auto* c_mod = app.add_subcommand("module", "Build an explicit realization");
    c_mod->add_option("--kind", kind_name, "tensor|sym|wedge|local-quotient");
    c_mod->add_option("--lambda", lambda, "number of factors")->required();
    c_mod->add_option("--trunc", trunc, "degree truncation");
    c_mod->add_option("--safe-degree", safe_degree, "report character up to here");
    c_mod->add_option("--matrix", matrix_arg, "dump generator matrices, gen:power");
    c_mod->add_option("--format", mod_format, "json|pretty");
    c_mod->add_option("--max-lambda", lim.max_lambda, "cap on factors");
    c_mod->add_option("--max-trunc", lim.max_trunc, "cap on truncation");
    c_mod->add_option("--max-basis", lim.max_basis, "cap on basis size");

    std::string suite = "all";
    VerifyCaps caps;
    auto* c_ver = app.add_subcommand("verify", "Run identity suites");
    c_ver->add_option("suite", suite, "qseries|characters|filtration|modulelab|all");
    c_ver->add_option("--lambda-max", caps.lambda_max, "cap on lambda");
    c_ver->add_option("--trunc", caps.trunc, "degree truncation for module suites");
    c_ver->add_option("--window-hi", caps.window_hi, "window top for series suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_char->parsed()) return cmd_char(family, lambda, window, format);
        if (c_dec->parsed())
            return cmd_decompose(tensor_args, dual_arg, char_arg, json_path, basis,
                                 window, format);
        if (c_mod->parsed())
            return cmd_module(kind_name, lambda, trunc, safe_degree, matrix_arg,
                              mod_format, lim);
        if (c_ver->parsed()) return cmd_verify(suite, caps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
