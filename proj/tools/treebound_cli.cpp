// treebound: zeroth-order general Randic index of trees vs domination number.
// Enumerates free trees, evaluates the sharp bounds and extremal families,
// and certifies the theorems exhaustively over a configurable order range.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "treebound/bounds.hpp"
#include "treebound/enumeration.hpp"
#include "treebound/families.hpp"
#include "treebound/invariants.hpp"
#include "treebound/io.hpp"
#include "treebound/verify.hpp"

using namespace treebound;

namespace {

Tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return tree_from_json(buf.str());
}

std::vector<double> parse_alphas(const std::string& csv) {
    std::vector<double> out;
    std::istringstream is(csv);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(std::stod(item));
    return out;
}

nlohmann::ordered_json bound_result_json(const BoundResult& b) {
    return {{"theorem", theorem_name(b.theorem)},
            {"direction", direction_name(b.direction)},
            {"value", b.value},
            {"gamma_range", b.gamma_range},
            {"regime", regime_name(b.regime)},
            {"n", b.n},
            {"gamma", b.gamma}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeroth-order general Randic index bounds on trees"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list free trees of a given order");
    int enum_order = 0;
    std::string enum_format = "json";
    enumerate->add_option("--order", enum_order, "tree order")->required();
    enumerate->add_option("--format", enum_format, "json|codes")
        ->check(CLI::IsMember({"json", "codes"}));

    // index
    auto* index = app.add_subcommand("index", "zeroth-order general Randic index");
    std::string index_file;
    double index_alpha = 0;
    index->add_option("--tree", index_file, "edge-list JSON file")->required();
    index->add_option("--alpha", index_alpha, "exponent")->required();

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "domination number with certificate");
    std::string gamma_file;
    gamma_cmd->add_option("--tree", gamma_file, "edge-list JSON file")->required();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "theorem bound values");
    int b_order = 0, b_gamma = 0;
    double b_alpha = 0;
    bool b_all_gamma = false;
    bounds_cmd->add_option("--order", b_order, "tree order")->required();
    bounds_cmd->add_option("--gamma", b_gamma, "domination number");
    bounds_cmd->add_option("--alpha", b_alpha, "exponent")->required();
    bounds_cmd->add_flag("--all-gamma", b_all_gamma, "all feasible gamma values");

    // family
    auto* family_cmd = app.add_subcommand("family", "construct extremal family members");
    std::string f_kind;
    int f_order = 0, f_gamma = 0;
    bool f_all = false;
    family_cmd->add_option("--kind", f_kind, "f1|f2|f3")
        ->required()
        ->check(CLI::IsMember({"f1", "f2", "f3"}));
    family_cmd->add_option("--order", f_order, "tree order")->required();
    family_cmd->add_option("--gamma", f_gamma, "domination number")->required();
    family_cmd->add_flag("--all", f_all, "emit every member (f1 only)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "certify the theorems exhaustively");
    int v_min = 3, v_max = 14, v_jobs = 1;
    std::string v_alphas, v_format = "json", v_out;
    verify_cmd->add_option("--min-order", v_min, "smallest order")->required();
    verify_cmd->add_option("--max-order", v_max, "largest order")->required();
    verify_cmd->add_option("--alphas", v_alphas, "comma-separated alpha grid");
    verify_cmd->add_option("--format", v_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--jobs", v_jobs, "worker threads");
    verify_cmd->add_option("--out", v_out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) {
            for (const Tree& t : free_trees(enum_order)) {
                if (enum_format == "json")
                    std::cout << tree_to_json(t) << "\n";
                else
                    std::cout << canonical_code(t).to_string() << "\n";
            }
        } else if (*index) {
            Tree t = load_tree(index_file);
            std::printf("%.12g\n", zeroth_order_general_randic(t, index_alpha));
        } else if (*gamma_cmd) {
            Tree t = load_tree(gamma_file);
            auto cert = domination_number(t);
            nlohmann::ordered_json j{{"gamma", cert.gamma},
                                     {"vertex_set", cert.vertex_set}};
            std::cout << j.dump() << "\n";
        } else if (*bounds_cmd) {
            if (!b_all_gamma && bounds_cmd->count("--gamma") == 0)
                throw std::runtime_error("need --gamma or --all-gamma");
            auto arr = nlohmann::ordered_json::array();
            if (b_all_gamma) {
                for (int g = 1; 2 * g <= b_order; ++g)
                    for (const auto& b : bounds_for(b_order, g, b_alpha))
                        arr.push_back(bound_result_json(b));
            } else {
                for (const auto& b : bounds_for(b_order, b_gamma, b_alpha))
                    arr.push_back(bound_result_json(b));
            }
            std::cout << arr.dump(2) << "\n";
        } else if (*family_cmd) {
            if (f_kind == "f3") {
                std::cout << tree_to_json(build_f3(f_order, f_gamma)) << "\n";
            } else if (f_kind == "f2") {
                std::cout << tree_to_json(build_f2_member(f_order, f_gamma)) << "\n";
            } else {
                auto members = build_f1_members(f_order, f_gamma);
                if (!f_all && members.size() > 1)
                    members.erase(members.begin() + 1, members.end());
                for (const Tree& m : members) std::cout << tree_to_json(m) << "\n";
            }
        } else if (*verify_cmd) {
            std::vector<double> grid =
                v_alphas.empty() ? default_alpha_grid() : parse_alphas(v_alphas);
            VerifyOptions opts;
            opts.jobs = v_jobs;
            auto reports = verify(v_min, v_max, grid, opts);
            std::string text = v_format == "csv" ? emit_csv(reports) : emit_json(reports);
            if (v_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(v_out);
                out << text;
            }
            return all_passed(reports) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
