#include "hsym/tables.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace hsym {

// ---------------------------------------------------------------------------
// FamilySpec
// ---------------------------------------------------------------------------

FamilySpec FamilySpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += static_cast<char>(tolower(c));
    auto bad = [&]() -> FamilySpec {
        throw std::invalid_argument(
            "unrecognized family '" + text +
            "' (expected su(p,q), so(2,p), sp(n), so*(2n), e6-1, e7-7)");
    };
    auto parse_ints = [&](const std::string& inner) {
        std::vector<int> vals;
        std::istringstream is(inner);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) bad();
                vals.push_back(v);
            } catch (const std::exception&) {
                bad();
            }
        }
        return vals;
    };

    if (s == "e6" || s == "e6-1" || s == "e6-3" || s == "eiii")
        return {HermitianFamily::eiii()};
    if (s == "e7" || s == "e7-7" || s == "evii")
        return {HermitianFamily::evii()};

    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') bad();
    std::string head = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::vector<int> vals = parse_ints(inner);

    if (head == "su") {
        if (vals.size() != 2) bad();
        return {HermitianFamily::aiii(vals[0], vals[1])};
    }
    if (head == "so") {
        if (vals.size() != 2 || vals[0] != 2) bad();
        return {HermitianFamily::bdi(vals[1])};
    }
    if (head == "sp") {
        if (vals.size() != 1) bad();
        return {HermitianFamily::ci(vals[0])};
    }
    if (head == "so*") {
        if (vals.size() != 1 || vals[0] % 2 != 0) bad();
        return {HermitianFamily::diii(vals[0] / 2)};
    }
    return bad();
}

// ---------------------------------------------------------------------------
// Class records
// ---------------------------------------------------------------------------

std::vector<ClassRecord> classify_records(const RootSystem& rs, int r_max, bool unbalanced) {
    std::vector<ClassRecord> out;
    for (ParabolicClass& cls : classify(rs, r_max, unbalanced)) {
        ClassRecord rec;
        rec.levi = levi_factorize(rs, cls);
        rec.dual = compact_dual(rs, rec.levi);
        rec.cls = std::move(cls);
        out.push_back(std::move(rec));
    }
    return out;
}

std::string records_markdown(const RootSystem& rs, const std::vector<ClassRecord>& records) {
    std::ostringstream os;
    os << "| lambda | R+ | R- | Y_q | chi |\n|---|---|---|---|---|\n";
    for (const ClassRecord& r : records)
        os << "| " << rs.fw_display(r.cls.witness) << " | " << r.cls.r_plus << " | "
           << r.cls.r_minus << " | " << r.dual.name() << " | " << r.dual.euler.str() << " |\n";
    return os.str();
}

std::string records_json(const RootSystem& rs, const std::vector<ClassRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClassRecord& r : records) {
        nlohmann::json j;
        j["family"] = rs.family().name();
        j["r_plus"] = r.cls.r_plus;
        j["r_minus"] = r.cls.r_minus;
        auto root_list = [&](const std::vector<int>& members) {
            nlohmann::json l = nlohmann::json::array();
            NoncompactPoset poset = rs.noncompact_poset();
            for (int m : members) l.push_back(rs.positive_roots()[poset.nodes[m]].coeffs);
            return l;
        };
        j["U"] = root_list(r.cls.U.members);
        j["D"] = root_list(r.cls.D.members);
        nlohmann::json wit = nlohmann::json::array();
        for (const Rat& c : r.cls.witness.fw_coeffs) wit.push_back(rat_str(c));
        j["witness_fw"] = wit;
        j["witness_epsilon"] = rs.epsilon_display(r.cls.witness);
        nlohmann::json dual;
        dual["dim_c"] = r.dual.dim_c;
        dual["euler"] = r.dual.euler.str();
        nlohmann::json betti = nlohmann::json::array();
        for (const Int& b : r.dual.poincare) betti.push_back(b.str());
        dual["poincare"] = betti;
        nlohmann::json factors = nlohmann::json::array();
        for (const HermitianFactor& f : r.dual.factors) {
            nlohmann::json jf;
            jf["type"] = std::string(1, f.type.letter);
            jf["rank"] = f.type.rank;
            jf["node"] = f.node;
            jf["dual_name"] = f.dual_name;
            factors.push_back(jf);
        }
        dual["factors"] = factors;
        j["dual"] = dual;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Golden tables
// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string GoldenTable::render() const {
    std::ostringstream os;
    os << "# " << id << "\n" << join(columns, "|") << "\n";
    for (const auto& row : rows) os << join(row, "|") << "\n";
    return os.str();
}

GoldenTable GoldenTable::parse(const std::string& text) {
    GoldenTable t;
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0 || line.size() < 3)
        throw std::invalid_argument("golden table: missing '# <id>' header");
    t.id = line.substr(2);
    if (!std::getline(is, line) || line.empty())
        throw std::invalid_argument("golden table: missing column line");
    t.columns = split(line, '|');
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row = split(line, '|');
        if (row.size() != t.columns.size())
            throw std::invalid_argument("golden table " + t.id + ": row with " +
                                        std::to_string(row.size()) + " cells, expected " +
                                        std::to_string(t.columns.size()));
        t.rows.push_back(std::move(row));
    }
    return t;
}

const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {"T1", "T2", "T3", "T4", "T5", "X1"};
    return ids;
}

namespace {

// The concrete families each table instantiates.
const std::vector<std::string> kT1Families = {
    "su(3,7)", "su(4,5)", "su(4,4)", "so(2,7)", "so(2,8)",
    "sp(5)",   "so*(18)", "e6-1",    "e7-7"};

const std::vector<std::string> kT2Families = {
    "su(1,3)", "su(2,3)", "su(2,5)", "su(3,4)", "su(3,7)", "su(4,4)",
    "so(2,5)", "so(2,7)", "so(2,9)", "so(2,4)", "so(2,6)", "so(2,8)", "so(2,10)",
    "sp(2)",   "sp(3)",   "sp(4)",   "sp(5)",   "sp(6)",
    "so*(8)",  "so*(10)", "so*(12)", "so*(14)", "so*(18)",
    "e6-1",    "e7-7"};

const std::vector<std::string> kT5Families = {
    "su(3,7)", "so(2,7)", "so(2,8)", "sp(5)", "so*(18)"};

// (family, r cap) pairs for the low-rank exceptional table.
const std::vector<std::pair<std::string, int>> kX1Families = {
    {"su(2,3)", 2}, {"su(2,4)", 2}, {"su(3,3)", 3}, {"su(3,4)", 3}, {"su(4,4)", 4},
    {"sp(4)", 3},   {"so*(8)", 3},  {"so*(10)", 4}, {"so*(12)", 5}, {"so*(14)", 6},
    {"so*(16)", 7}};

std::vector<int> n_profile(const RootSystem& rs, int r_cap) {
    std::vector<int> counts(r_cap + 1, 0);
    for (const ParabolicClass& cls : classify(rs, r_cap)) ++counts[cls.r_plus];
    return counts;
}

GoldenTable compute_T1() {
    GoldenTable t;
    t.id = "T1";
    t.columns = {"family", "c(X)", "r", "sumN"};
    for (const std::string& name : kT1Families) {
        RootSystem rs = RootSystem::build(FamilySpec::parse(name).family);
        int c = c_of_X(rs);
        std::vector<int> counts = n_profile(rs, c);
        int sum = 0, r0 = 0;
        for (int r = 1; r <= c; ++r) {
            sum += counts[r];
            if (r0 == 0 && counts[r] > 0) r0 = r;
        }
        t.rows.push_back({name, std::to_string(c), std::to_string(r0), std::to_string(sum)});
    }
    return t;
}

GoldenTable compute_T2() {
    GoldenTable t;
    t.id = "T2";
    t.columns = {"family", "sigma", "c(X)"};
    for (const std::string& name : kT2Families) {
        RootSystem rs = RootSystem::build(FamilySpec::parse(name).family);
        std::string sigma;
        if (bdi_outer_tau(rs)) {
            sigma = "tau";
        } else {
            sigma = min_codim_over_sigma(rs).second.str();
        }
        t.rows.push_back({name, sigma, std::to_string(c_of_X(rs))});
    }
    return t;
}

GoldenTable compute_class_table(const std::string& id, const std::string& family, int r_cap) {
    GoldenTable t;
    t.id = id;
    t.columns = {"lambda", "R", "Y_q", "chi"};
    RootSystem rs = RootSystem::build(FamilySpec::parse(family).family);
    for (const ClassRecord& rec : classify_records(rs, r_cap))
        t.rows.push_back({rs.fw_display(rec.cls.witness), std::to_string(rec.cls.r_plus),
                          rec.dual.name(), rec.dual.euler.str()});
    return t;
}

GoldenTable compute_T5() {
    GoldenTable t;
    t.id = "T5";
    t.columns = {"family", "r", "Y_q", "chi"};
    for (const std::string& name : kT5Families) {
        RootSystem rs = RootSystem::build(FamilySpec::parse(name).family);
        int r0 = r_zero(rs);
        std::vector<ClassRecord> recs = classify_records(rs, r0);
        std::vector<const ClassRecord*> at_r0;
        for (const ClassRecord& rec : recs)
            if (rec.cls.r_plus == r0) at_r0.push_back(&rec);
        check(at_r0.size() == 1, "T5: class at r(g_0) is not unique for " + name);
        t.rows.push_back({name, std::to_string(r0), at_r0[0]->dual.name(),
                          at_r0[0]->dual.euler.str()});
    }
    return t;
}

GoldenTable compute_X1() {
    GoldenTable t;
    t.id = "X1";
    t.columns = {"family", "r", "count", "lambdas"};
    for (const auto& [name, r_cap] : kX1Families) {
        RootSystem rs = RootSystem::build(FamilySpec::parse(name).family);
        std::vector<ClassRecord> recs = classify_records(rs, r_cap);
        for (int r = 1; r <= r_cap; ++r) {
            std::vector<std::string> lambdas;
            int count = 0;
            for (const ClassRecord& rec : recs)
                if (rec.cls.r_plus == r) {
                    ++count;
                    lambdas.push_back(rs.epsilon_display(rec.cls.witness));
                }
            t.rows.push_back({name, std::to_string(r), std::to_string(count), join(lambdas, ";")});
        }
    }
    return t;
}

} // namespace

GoldenTable compute_table(const std::string& id) {
    if (id == "T1") return compute_T1();
    if (id == "T2") return compute_T2();
    if (id == "T3") return compute_class_table("T3", "e6-1", 6);
    if (id == "T4") return compute_class_table("T4", "e7-7", 11);
    if (id == "T5") return compute_T5();
    if (id == "X1") return compute_X1();
    throw std::invalid_argument("unknown table id: " + id);
}

VerifyReport verify_tables(const std::string& fixtures_dir) {
    VerifyReport report;
    for (const std::string& id : table_ids()) {
        std::filesystem::path path = std::filesystem::path(fixtures_dir) / (id + ".txt");
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("missing fixture file: " + path.string());
        std::stringstream buf;
        buf << in.rdbuf();
        GoldenTable golden = GoldenTable::parse(buf.str());
        GoldenTable computed = compute_table(id);
        ++report.tables_checked;

        if (golden.columns != computed.columns)
            report.mismatches.push_back(id + ": column header differs");
        std::size_t nrows = std::max(golden.rows.size(), computed.rows.size());
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r >= golden.rows.size()) {
                report.mismatches.push_back(id + " row " + std::to_string(r + 1) +
                                            ": computed extra row [" +
                                            join(computed.rows[r], "|") + "]");
                continue;
            }
            if (r >= computed.rows.size()) {
                report.mismatches.push_back(id + " row " + std::to_string(r + 1) +
                                            ": fixture extra row [" + join(golden.rows[r], "|") +
                                            "]");
                continue;
            }
            for (std::size_t c = 0; c < golden.columns.size(); ++c) {
                if (c >= computed.rows[r].size() || c >= golden.rows[r].size()) continue;
                if (golden.rows[r][c] != computed.rows[r][c])
                    report.mismatches.push_back(
                        id + " row " + std::to_string(r + 1) + " col '" + golden.columns[c] +
                        "': fixture '" + golden.rows[r][c] + "' vs computed '" +
                        computed.rows[r][c] + "'");
            }
        }
    }
    return report;
}

void emit_tables_to_dir(const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    for (const std::string& id : table_ids()) {
        std::ofstream out(std::filesystem::path(out_dir) / (id + ".txt"));
        out << compute_table(id).render();
    }
}

} // namespace hsym
