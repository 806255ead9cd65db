// Command-line front end. Every subcommand prints one JSON document; identical
// inputs produce byte-identical output. Exit codes: 0 success, 1 a mathematical
// check failed, 2 input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nz/jsonio.hpp"
#include "nz/verify.hpp"

namespace {

using nz::Json;

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad word entry: " + tok);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty word");
    return out;
}

nz::Weight parse_lambda(const std::string& s, int rank) {
    nz::Weight out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad weight entry: " + tok);
        out.push_back(v);
    }
    if (static_cast<int>(out.size()) != rank)
        throw std::invalid_argument("weight has " + std::to_string(out.size()) +
                                    " coordinates, rank is " + std::to_string(rank));
    return out;
}

nz::QVec parse_start(const std::string& s) {
    nz::QVec out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(nz::parse_rational(tok));
    if (out.empty()) throw std::invalid_argument("empty start vector");
    return out;
}

// Atomic-ish output: full document to a temp file, then rename over the target.
void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::string tmp = out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << text;
    }
    if (std::rename(tmp.c_str(), out_path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + out_path);
}

struct CommonArgs {
    std::string type_str;
    std::string word_str;
    std::string lambda_str;
    std::string g2_convention = "standard";
    std::string out_path;
    long cap = 200000;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool need_lambda) {
    cmd->add_option("--type", a.type_str, "Type descriptor, e.g. A2, C3, G2")->required();
    cmd->add_option("--word", a.word_str, "Comma-separated 1-based letters")->required();
    if (need_lambda)
        cmd->add_option("--lambda", a.lambda_str, "Comma-separated <lambda, h_i>")->required();
    cmd->add_option("--cap", a.cap, "Crystal size cap");
    cmd->add_option("--g2-convention", a.g2_convention, "standard or swapped")
        ->check(CLI::IsMember({"standard", "swapped"}));
    cmd->add_option("--out", a.out_path, "Write the JSON document to this file");
}

nz::RootDatum datum_of(const CommonArgs& a) {
    auto [type, rank] = nz::parse_type_string(a.type_str);
    bool swapped = a.g2_convention == "swapped";
    if (swapped && type != nz::LieType::G)
        throw std::invalid_argument("--g2-convention applies to type G only");
    return nz::make_root_datum(type, rank, swapped);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact crystal embeddings, their polytopes, and chain verification"};
    app.require_subcommand(1);

    CommonArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Generate a highest-weight crystal");
    add_common(gen, gen_args, true);

    CommonArgs poly_args;
    int poly_m = 2;
    long poly_max_scale = 4;
    CLI::App* poly = app.add_subcommand("polytope", "Hull of the embedded crystal");
    add_common(poly, poly_args, true);
    poly->add_option("--stabilization-m", poly_m, "Compare dilations up to this multiple");
    poly->add_option("--max-scale", poly_max_scale, "Parapolytope scan resolution bound");

    CommonArgs chain_args;
    std::string chain_start;
    CLI::App* chain = app.add_subcommand("demazure-chain", "Run an expansion chain");
    add_common(chain, chain_args, false);
    chain->add_option("--lambda", chain_args.lambda_str,
                      "Dominant weight (crystal-coordinate model)");
    chain->add_option("--start", chain_start, "Rational start vector (scaled model)");

    std::string oracle_system;
    CommonArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "Print an independent inequality system");
    oracle->add_option("--system", oracle_system, "gz, hoshino, or counterexample")
        ->required()
        ->check(CLI::IsMember({"gz", "hoshino", "counterexample"}));
    oracle->add_option("--type", oracle_args.type_str, "Type descriptor");
    oracle->add_option("--lambda", oracle_args.lambda_str, "Comma-separated <lambda, h_i>");
    oracle->add_option("--out", oracle_args.out_path, "Write the JSON document to this file");

    std::string scenario;
    nz::VerifyOptions vopts;
    std::string verify_g2 = "standard";
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification scenario");
    verify->add_option("--scenario", scenario, "Scenario name or 'all'")->required();
    verify->add_option("--cap", vopts.cap, "Crystal size cap");
    verify->add_option("--stabilization-m", vopts.stabilization_m,
                       "Dilation comparisons per polytope");
    verify->add_option("--max-scale", vopts.max_scale, "Parapolytope scan resolution bound");
    verify->add_option("--g2-convention", verify_g2, "standard or swapped")
        ->check(CLI::IsMember({"standard", "swapped"}));
    verify->add_flag("--timings", vopts.timings, "Record per-case wall times");
    verify->add_option("--out", verify_out, "Write the JSON document to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            nz::RootDatum datum = datum_of(gen_args);
            std::vector<int> word = parse_word(gen_args.word_str);
            nz::Weight lambda = parse_lambda(gen_args.lambda_str, datum.rank);
            nz::CrystalGraph g = nz::generate_crystal(datum, word, lambda, gen_args.cap);
            Json j = nz::crystal_json(g);
            j["type"] = gen_args.type_str;
            emit(j, gen_args.out_path);
        } else if (*poly) {
            nz::RootDatum datum = datum_of(poly_args);
            std::vector<int> word = parse_word(poly_args.word_str);
            nz::Weight lambda = parse_lambda(poly_args.lambda_str, datum.rank);
            nz::NzPolytopeResult res =
                nz::nz_polytope(datum, word, lambda, poly_m, poly_args.cap);
            nz::ParapolytopeCheck pc = nz::check_parapolytope(res.polytope, word, poly_max_scale);
            Json j;
            j["type"] = poly_args.type_str;
            j["word"] = word;
            j["lambda"] = nz::weight_json(lambda);
            j["polytope"] = nz::polytope_json(res.polytope);
            j["stabilized"] = res.stabilized;
            j["checked_m"] = res.checked_m;
            j["parapolytope"] = Json{{"consistent", pc.consistent},
                                     {"checked_scale", poly_max_scale}};
            if (!pc.consistent) {
                j["parapolytope"]["failing_scale"] = pc.failing_scale;
                j["parapolytope"]["failing_color"] = pc.failing_color;
                if (pc.witness) j["parapolytope"]["witness"] = nz::fiber_json(*pc.witness);
            }
            emit(j, poly_args.out_path);
        } else if (*chain) {
            nz::RootDatum datum = datum_of(chain_args);
            std::vector<int> word = parse_word(chain_args.word_str);
            bool have_lambda = !chain_args.lambda_str.empty();
            bool have_start = !chain_start.empty();
            if (have_lambda == have_start)
                throw std::invalid_argument("give exactly one of --lambda and --start");
            nz::ChainResult r;
            Json j;
            if (have_lambda) {
                nz::Weight lambda = parse_lambda(chain_args.lambda_str, datum.rank);
                r = nz::run_chain_crystal_model(datum, word, lambda);
                j = nz::chain_json(r);
                j["model"] = "crystal";
                j["lambda"] = nz::weight_json(lambda);
            } else {
                nz::QVec start = parse_start(chain_start);
                if (start.size() != word.size())
                    throw std::invalid_argument("start vector length must match the word");
                r = nz::run_chain_scaled(datum, word, start);
                j = nz::chain_json(r);
                j["model"] = "scaled";
                j["start"] = nz::qvec_json(start);
            }
            j["type"] = chain_args.type_str;
            j["word"] = word;
            emit(j, chain_args.out_path);
        } else if (*oracle) {
            Json j;
            if (oracle_system == "counterexample") {
                j = nz::counterexample_json(nz::counterexample_a3());
            } else {
                if (oracle_args.type_str.empty() || oracle_args.lambda_str.empty())
                    throw std::invalid_argument("--system " + oracle_system +
                                                " needs --type and --lambda");
                auto [type, rank] = nz::parse_type_string(oracle_args.type_str);
                nz::Weight lambda = parse_lambda(oracle_args.lambda_str, rank);
                if (oracle_system == "gz") {
                    if (type != nz::LieType::A)
                        throw std::invalid_argument("gz systems exist for type A only");
                    j = nz::gz_json(nz::gz_system(rank, lambda));
                } else {
                    j = nz::hoshino_json(nz::hoshino_system(type, rank, lambda));
                }
                j["type"] = oracle_args.type_str;
            }
            j["system_kind"] = oracle_system;
            emit(j, oracle_args.out_path);
        } else if (*verify) {
            vopts.g2_swapped = verify_g2 == "swapped";
            bool pass = true;
            Json j;
            if (scenario == "all") {
                Json list = Json::array();
                for (const std::string& name : nz::scenario_names()) {
                    nz::VerificationReport rep = nz::run_scenario(name, vopts);
                    pass = pass && rep.pass;
                    list.push_back(nz::report_json(rep));
                }
                j["scenarios"] = list;
                j["pass"] = pass;
            } else {
                nz::VerificationReport rep = nz::run_scenario(scenario, vopts);
                pass = rep.pass;
                j = nz::report_json(rep);
            }
            emit(j, verify_out);
            return pass ? 0 : 1;
        }
    } catch (const nz::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
