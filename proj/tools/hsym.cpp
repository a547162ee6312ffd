// Command-line front end: classification runs, codimension scans, DOT
// emission, and regeneration/verification of the reference tables.
//
// Exit codes: 0 success, 1 usage error, 2 table verification mismatch,
// 3 internal assertion failure.

#include "hsym/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <fstream>
#include <iostream>

namespace {

hsym::RootSystem build_family(const std::string& name) {
    return hsym::RootSystem::build(hsym::FamilySpec::parse(name).family);
}

hsym::SigmaElement parse_sigma(const hsym::RootSystem& rs, const std::string& text) {
    std::vector<int> simples;
    bool theta = false;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        if (cur == "theta") {
            theta = !theta;
        } else if (cur.rfind("psi_", 0) == 0) {
            simples.push_back(std::stoi(cur.substr(4)));
        } else if (cur == "id") {
            // empty product
        } else {
            throw std::invalid_argument("bad sigma token '" + cur + "' (use psi_k, theta, id)");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == '*' || isspace(static_cast<unsigned char>(c))) flush();
        else cur += c;
    }
    flush();
    return hsym::make_sigma(rs, simples, theta);
}

int cmd_classify(const std::string& family, int max_hodge, const std::string& format,
                 bool unbalanced) {
    hsym::RootSystem rs = build_family(family);
    int r_max = max_hodge > 0 ? max_hodge : hsym::c_of_X(rs);
    std::vector<hsym::ClassRecord> records = hsym::classify_records(rs, r_max, unbalanced);
    if (format == "json") std::cout << hsym::records_json(rs, records);
    else std::cout << hsym::records_markdown(rs, records);
    return 0;
}

nlohmann::json codim_json(const hsym::RootSystem& rs, const hsym::CodimReport& rep) {
    nlohmann::json j;
    nlohmann::json names = nlohmann::json::array();
    for (int i = 0; i < rs.rank(); ++i)
        if ((rep.sigma.compact_mask >> i) & 1) names.push_back("psi_" + std::to_string(i + 1));
    j["sigma"] = {{"S", names}, {"theta", rep.sigma.theta}};
    j["codim"] = rep.codim;
    j["fixed_counts"] = {{"noncompact", rep.fixed_noncompact},
                         {"total_noncompact", rs.num_noncompact_positive()}};
    return j;
}

// Table-2 style markdown row: | type | g_0 | sigma | c(X) |
std::string table2_row(const hsym::RootSystem& rs) {
    const char* type = nullptr;
    switch (rs.family().type) {
        case hsym::FamilyType::AIII: type = "AIII"; break;
        case hsym::FamilyType::BDI: type = "BDI"; break;
        case hsym::FamilyType::CI: type = "CI"; break;
        case hsym::FamilyType::DIII: type = "DIII"; break;
        case hsym::FamilyType::EIII: type = "EIII"; break;
        case hsym::FamilyType::EVII: type = "EVII"; break;
    }
    std::string sigma = hsym::bdi_outer_tau(rs) ? std::string("tau")
                                                : hsym::min_codim_over_sigma(rs).second.str();
    std::ostringstream os;
    os << "| " << type << " | " << rs.family().name() << " | " << sigma << " | "
       << hsym::c_of_X(rs) << " |\n";
    return os.str();
}

int cmd_codim(const std::string& family, bool all_sigma, const std::string& sigma_text,
              const std::string& format) {
    hsym::RootSystem rs = build_family(family);
    if (format == "md") {
        std::cout << "| type | g_0 | sigma | c(X) |\n|---|---|---|---|\n" << table2_row(rs);
        return 0;
    }
    if (format == "json" && !all_sigma) {
        std::cout << codim_json(rs, hsym::codim(rs, parse_sigma(rs, sigma_text))).dump(2) << "\n";
        return 0;
    }
    std::cout << "sigma|codim|fixed_noncompact\n";
    if (all_sigma) {
        std::vector<hsym::CodimReport> reports;
        std::vector<int> compact;
        for (int i = 1; i <= rs.rank(); ++i)
            if (rs.simple_is_compact(i)) compact.push_back(i);
        for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << compact.size()); ++sub)
            for (bool theta : {false, true}) {
                hsym::SigmaElement s;
                s.theta = theta;
                for (std::size_t k = 0; k < compact.size(); ++k)
                    if ((sub >> k) & 1) s.compact_mask |= std::uint32_t{1} << (compact[k] - 1);
                reports.push_back(hsym::codim(rs, s));
            }
        std::stable_sort(reports.begin(), reports.end(),
                         [](const hsym::CodimReport& a, const hsym::CodimReport& b) {
                             if (a.codim != b.codim) return a.codim < b.codim;
                             if (a.sigma.theta != b.sigma.theta) return !a.sigma.theta;
                             return a.sigma.compact_mask < b.sigma.compact_mask;
                         });
        for (const auto& rep : reports)
            std::cout << rep.sigma.str() << "|" << rep.codim << "|" << rep.fixed_noncompact
                      << "\n";
        auto [min_c, min_s] = hsym::min_codim_over_sigma(rs);
        std::cout << "min|" << min_c << "|" << min_s.str() << "\n";
        std::cout << "c(X)|" << hsym::c_of_X(rs) << "|"
                  << (hsym::bdi_outer_tau(rs) ? "tau" : min_s.str()) << "\n";
    } else {
        hsym::CodimReport rep = hsym::codim(rs, parse_sigma(rs, sigma_text));
        std::cout << rep.sigma.str() << "|" << rep.codim << "|" << rep.fixed_noncompact << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of irreducible Hermitian symmetric pairs"};
    app.require_subcommand(1);

    std::string family, format = "", sigma_text, fixtures = "fixtures", out_dir;
    int max_hodge = 0;
    bool unbalanced = false, all_sigma = false, want_dot = false, verify = false, emit = false;

    CLI::App* classify = app.add_subcommand("classify", "enumerate parabolic classes");
    classify->add_option("family", family)->required();
    classify->add_option("--max-hodge", max_hodge, "largest r to search (default c(X))");
    classify->add_option("--format", format)->check(CLI::IsMember({"md", "json"}));
    classify->add_flag("--unbalanced", unbalanced, "include classes with R+ != R-");

    CLI::App* codim = app.add_subcommand("codim", "codimension reports over Sigma");
    codim->add_option("family", family)->required();
    codim->add_flag("--all-sigma", all_sigma);
    codim->add_option("--sigma", sigma_text, "e.g. \"psi_3,theta\"");
    codim->add_option("--format", format)->check(CLI::IsMember({"text", "md", "json"}));

    CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of the noncompact poset");
    hasse->add_option("family", family)->required();
    hasse->add_flag("--dot", want_dot, "emit DOT (default)");

    CLI::App* dynkin = app.add_subcommand("dynkin", "extended Dynkin diagram");
    dynkin->add_option("family", family)->required();
    dynkin->add_flag("--dot", want_dot, "emit DOT (default)");

    CLI::App* tables = app.add_subcommand("tables", "emit or verify the reference tables");
    tables->add_flag("--verify", verify);
    tables->add_flag("--emit", emit);
    tables->add_option("--fixtures", fixtures, "fixtures directory for --verify");
    tables->add_option("--out", out_dir, "output directory for --emit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) return cmd_classify(family, max_hodge, format, unbalanced);
        if (codim->parsed()) {
            if (!all_sigma && sigma_text.empty() && format != "md")
                throw std::invalid_argument("codim: give --all-sigma, --sigma, or --format md");
            return cmd_codim(family, all_sigma, sigma_text, format);
        }
        if (hasse->parsed()) {
            std::cout << build_family(family).hasse_dot();
            return 0;
        }
        if (dynkin->parsed()) {
            std::cout << build_family(family).extended_dynkin_dot();
            return 0;
        }
        if (tables->parsed()) {
            if (verify == emit)
                throw std::invalid_argument("tables: give exactly one of --verify or --emit");
            if (emit) {
                if (out_dir.empty()) {
                    for (const std::string& id : hsym::table_ids())
                        std::cout << hsym::compute_table(id).render() << "\n";
                } else {
                    hsym::emit_tables_to_dir(out_dir);
                }
                return 0;
            }
            hsym::VerifyReport report = hsym::verify_tables(fixtures);
            for (const std::string& m : report.mismatches) std::cout << "MISMATCH " << m << "\n";
            std::cout << report.tables_checked << " tables checked, " << report.mismatches.size()
                      << " mismatches\n";
            return report.ok() ? 0 : 2;
        }
    } catch (const hsym::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
