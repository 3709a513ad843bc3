#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tjd/cli.hpp"

namespace {

using tjd::Json;

// --ctx / --matrix accept inline JSON or a path to a JSON file
Json json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in) throw tjd::ValidationError("cannot open file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return Json::parse(text);
}

Json perm_arg(const std::string& arg) {
    // space-separated images, e.g. "1 2 0"
    Json out = Json::array();
    std::istringstream ss(arg);
    long v;
    while (ss >> v) out.push_back(v);
    return out;
}

int emit(const tjd::cli::RunResult& r, const std::string& out_path) {
    std::string text = r.report.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        out << text << "\n";
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological Jordan decompositions over Z_q"};
    app.require_subcommand(1);

    std::string ctx_arg, matrix_arg, value_arg, perm_str, suite, out_path;
    long p = 2;
    unsigned long long seed = 1;
    long trials = 100;
    bool mod_center = false;

    auto* dec = app.add_subcommand("decompose", "topological Jordan decomposition");
    dec->add_option("--ctx", ctx_arg, "context JSON or file")->required();
    dec->add_option("--matrix", matrix_arg, "matrix JSON or file")->required();
    dec->add_flag("--mod-center", mod_center, "decompose modulo the centre");
    dec->add_option("--out", out_path, "write the report to a file");

    auto* chk = app.add_subcommand("check", "boundedness and type predicates");
    chk->add_option("--ctx", ctx_arg, "context JSON or file")->required();
    chk->add_option("--matrix", matrix_arg, "matrix JSON or file")->required();
    chk->add_option("--out", out_path, "write the report to a file");

    auto* tei = app.add_subcommand("teichmuller", "Teichmuller lift of a residue");
    tei->add_option("--ctx", ctx_arg, "context JSON or file")->required();
    tei->add_option("--value", value_arg, "residue: integer or coefficient array")->required();
    tei->add_option("--out", out_path, "write the report to a file");

    auto* pro = app.add_subcommand("profinite", "finite-group decompositions");
    auto* prodec = pro->add_subcommand("decompose", "p-Jordan decomposition of a permutation");
    prodec->add_option("--perm", perm_str, "images, e.g. \"1 2 0\"")->required();
    prodec->add_option("--p", p, "prime")->required();
    prodec->add_option("--out", out_path, "write the report to a file");

    auto* ver = app.add_subcommand("verify", "run a seeded invariant suite");
    ver->add_option("--suite", suite, "suite name")->required();
    ver->add_option("--seed", seed, "RNG seed");
    ver->add_option("--trials", trials, "trial count");
    ver->add_option("--out", out_path, "write the report to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dec->parsed())
            return emit(tjd::cli::run_decompose(json_arg(ctx_arg), json_arg(matrix_arg),
                                                mod_center),
                        out_path);
        if (chk->parsed())
            return emit(tjd::cli::run_check(json_arg(ctx_arg), json_arg(matrix_arg)), out_path);
        if (tei->parsed())
            return emit(tjd::cli::run_teichmuller(json_arg(ctx_arg), Json::parse(value_arg)),
                        out_path);
        if (pro->parsed() && prodec->parsed())
            return emit(tjd::cli::run_profinite_decompose(perm_arg(perm_str), p), out_path);
        if (ver->parsed())
            return emit(tjd::cli::run_verify(suite, seed, trials), out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
    std::cerr << "error: no subcommand\n";
    return 5;
}
