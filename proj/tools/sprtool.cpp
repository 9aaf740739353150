// Command-line front end: exact Springer/reflection-group combinatorics
// with machine-readable reports.
//
// Exit codes: 0 = verified/pass, 1 = a mathematical check failed,
// 2 = usage or budget error.

#include "CLI11.hpp"
#include "json.hpp"

#include "spr/arrangement.hpp"
#include "spr/group.hpp"
#include "spr/ledger.hpp"
#include "spr/partition.hpp"
#include "spr/series.hpp"
#include "spr/symbol.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace spr;

namespace {

struct RunConfig {
    long element_budget = 200000;
    int series_degree_bound = 64;
    int u_bound = 64;
    int arr_n_bound = 6;
    int arr_d_bound = 6;
    std::string format = "text";
    int parallelism = static_cast<int>(std::thread::hardware_concurrency());
};

void load_config(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("config", "cannot open config file " + path);
    json j = json::parse(in);
    if (j.contains("element_budget")) cfg.element_budget = j["element_budget"].get<long>();
    if (j.contains("series_degree_bound")) cfg.series_degree_bound = j["series_degree_bound"].get<int>();
    if (j.contains("u_bound")) cfg.u_bound = j["u_bound"].get<int>();
    if (j.contains("arr_n_bound")) cfg.arr_n_bound = j["arr_n_bound"].get<int>();
    if (j.contains("arr_d_bound")) cfg.arr_d_bound = j["arr_d_bound"].get<int>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("parallelism")) cfg.parallelism = j["parallelism"].get<int>();
    if (cfg.element_budget <= 0 || cfg.series_degree_bound <= 0 || cfg.parallelism < 0)
        throw CLI::ValidationError("config", "bounds must be positive");
}

// run f(i) for i in [0, count) on the configured pool; results land at index i
template <typename F>
void parallel_for(int count, int width, F&& f) {
    if (width <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    int nthreads = std::min(width, count);
    for (int t = 0; t < nthreads; ++t)
        workers.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
        });
    for (auto& w : workers) w.join();
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (int x : p.parts) a.push_back(x);
    return a;
}

json bipartition_json(const BiPartition& bp) {
    return json::array({partition_json(bp.first), partition_json(bp.second)});
}

json character_json(const std::map<int, int>& c) {
    json o = json::object();
    for (auto [part, v] : c) o[std::to_string(part)] = v;
    return o;
}

std::string plain_list(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(p.parts[i]);
    return s.empty() ? "-" : s;
}

Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return partition_from_unsorted(std::move(parts));
}

json elem_json(const MonoElem& e) {
    json z = json::array(), s = json::array();
    for (int v : e.z) z.push_back(v);
    for (int v : e.sigma) s.push_back(v);
    return json{{"z", z}, {"sigma", s}};
}

void emit(const RunConfig& cfg, const json& report, const std::string& text_form,
          const std::string& tsv_form) {
    if (cfg.format == "json")
        std::cout << report.dump(2) << "\n";
    else if (cfg.format == "tsv")
        std::cout << tsv_form;
    else
        std::cout << text_form;
}

int cmd_springer(const RunConfig& cfg, const std::string& type_str, int n) {
    if (type_str != "B" && type_str != "D")
        throw CLI::ValidationError("springer", "type must be B or D");
    BD type = type_str == "B" ? BD::B : BD::D;
    auto table = springer_table(n, type);

    json rows = json::array();
    std::string text, tsv = "orbit\tvery_even_tag\tcharacter\tbipartition\tmu\n";
    for (const auto& [irrep, label] : table) {
        Partition mu = piece_mu(label, type);
        json row;
        row["orbit"] = partition_json(label.orbit);
        row["very_even_tag"] =
            label.very_even_tag ? json(*label.very_even_tag == 0 ? "I" : "II") : json(nullptr);
        row["character"] = character_json(label.character);
        row["bipartition"] = bipartition_json(irrep.bp);
        row["mu"] = partition_json(mu);
        rows.push_back(row);
        std::string tag = label.very_even_tag ? (*label.very_even_tag == 0 ? "I" : "II") : "-";
        text += label.orbit.to_string() + " tag=" + tag + " char=" +
                character_json(label.character).dump() + " -> " + irrep.to_string() +
                "  mu=" + mu.to_string() + "\n";
        tsv += plain_list(label.orbit) + "\t" + tag + "\t" + character_json(label.character).dump() +
               "\t" + irrep.bp.to_string() + "\t" + plain_list(mu) + "\n";
    }
    json report{{"command", "springer"}, {"type", type_str}, {"n", n}, {"rows", rows}};
    emit(cfg, report, text, tsv);
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& slug, int degree) {
    if (degree > cfg.series_degree_bound)
        throw CLI::ValidationError("verify", "degree exceeds the configured series bound");
    auto name = identity_from_slug(slug);
    if (!name) {
        std::string valid;
        for (const auto& s : identity_slugs()) valid += s + " ";
        throw CLI::ValidationError("verify", "unknown identity '" + slug + "'; valid: " + valid);
    }
    if (required_ubound(SeriesName::FW_B, degree) > cfg.u_bound)
        throw CLI::ValidationError("verify", "degree needs more u-variables than the configured bound");
    auto report = verify_identity(*name, degree);
    json j{{"identity", slug},
           {"degree", degree},
           {"equal", report.equal},
           {"first_diff", report.first_diff
                              ? json{{"x_degree", report.first_diff->first},
                                     {"difference", report.first_diff->second}}
                              : json(nullptr)},
           {"elapsed_ms", report.elapsed_ms}};
    std::string text = "identity " + slug + " degree " + std::to_string(degree) + ": " +
                       (report.equal ? "equal" : "NOT equal") + "\n";
    if (report.first_diff)
        text += "  first difference at x^" + std::to_string(report.first_diff->first) + ": " +
                report.first_diff->second + "\n";
    std::string tsv = "identity\tdegree\tequal\n" + slug + "\t" + std::to_string(degree) + "\t" +
                      (report.equal ? "true" : "false") + "\n";
    emit(cfg, j, text, tsv);
    return report.equal ? 0 : 1;
}

int cmd_star(const RunConfig& cfg, const std::string& descriptor) {
    Group G = group_from_descriptor(descriptor, cfg.element_budget);
    const auto& classes = G.conjugacy_classes();
    std::vector<char> fails(classes.size(), 0);
    parallel_for(static_cast<int>(classes.size()), cfg.parallelism,
                 [&](int i) { fails[i] = !star_check(G, classes[i].rep).holds; });

    json failing = json::array();
    std::string text = "group " + G.descriptor() + ": " + std::to_string(classes.size()) + " classes\n";
    std::string tsv = "class_rep\tstar\n";
    long nfail = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& e = G.element(classes[i].rep);
        if (fails[i]) {
            ++nfail;
            failing.push_back(elem_json(e));
            text += "  star fails on class of " + e.to_string() + "\n";
        }
        tsv += e.to_string() + "\t" + (fails[i] ? "false" : "true") + "\n";
    }
    text += nfail ? "star: " + std::to_string(nfail) + " failing class(es)\n"
                  : "star holds for every class\n";
    json report{{"command", "star"},
                {"group", G.descriptor()},
                {"classes", classes.size()},
                {"failing_classes", failing}};
    emit(cfg, report, text, tsv);
    return nfail ? 1 : 0;
}

int cmd_smooth(const RunConfig& cfg, const std::string& descriptor) {
    Group G = group_from_descriptor(descriptor, cfg.element_budget);
    const auto& classes = G.conjugacy_classes();
    std::vector<char> fails(classes.size(), 0);
    parallel_for(static_cast<int>(classes.size()), cfg.parallelism,
                 [&](int i) { fails[i] = !smooth_check(G, classes[i].rep); });

    json failing = json::array();
    std::string text = "group " + G.descriptor() + ": " + std::to_string(classes.size()) + " classes\n";
    std::string tsv = "class_rep\tsmooth\n";
    long nfail = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& e = G.element(classes[i].rep);
        if (fails[i]) {
            ++nfail;
            failing.push_back(elem_json(e));
            text += "  quotient singular on class of " + e.to_string() + "\n";
        }
        tsv += e.to_string() + "\t" + (fails[i] ? "false" : "true") + "\n";
    }
    text += nfail ? "smooth: " + std::to_string(nfail) + " singular class(es)\n"
                  : "all fixed-space quotients smooth\n";
    json report{{"command", "smooth"},
                {"group", G.descriptor()},
                {"classes", classes.size()},
                {"failing_classes", failing}};
    emit(cfg, report, text, tsv);
    return nfail ? 1 : 0;
}

int cmd_classes(const RunConfig& cfg, const std::string& descriptor) {
    Group G = group_from_descriptor(descriptor, cfg.element_budget);
    const auto& classes = G.conjugacy_classes();

    // formula count when a parametrization applies
    long formula = -1;
    if (G.p() == 1) {
        formula = static_cast<long>(motivic_pieces(LedgerType::Gm1n, G.n(), G.m()).size());
    } else if (G.m() == 2 && G.p() == 2) {
        formula = static_cast<long>(motivic_pieces(LedgerType::D, G.n()).size());
    }

    json rows = json::array();
    std::string text = "group " + G.descriptor() + ": " + std::to_string(classes.size()) + " classes\n";
    std::string tsv = "size\trep\tlabel\n";
    for (const auto& c : classes) {
        std::string label;
        if (G.m() == 2 && (G.p() == 1 || G.p() == 2))
            label = signed_class_label(G, c.rep).to_string();
        else {
            for (auto [len, color] : G.colored_partition(G.element(c.rep)))
                label += "(" + std::to_string(len) + ";" + std::to_string(color) + ")";
        }
        rows.push_back(json{{"size", c.members.size()},
                            {"rep", elem_json(G.element(c.rep))},
                            {"label", label}});
        text += "  size " + std::to_string(c.members.size()) + "  " + label + "\n";
        tsv += std::to_string(c.members.size()) + "\t" + G.element(c.rep).to_string() + "\t" + label + "\n";
    }
    bool ok = formula < 0 || formula == static_cast<long>(classes.size());
    if (formula >= 0)
        text += "formula count " + std::to_string(formula) + (ok ? " (agrees)\n" : " (MISMATCH)\n");
    json report{{"command", "classes"},
                {"group", G.descriptor()},
                {"count", classes.size()},
                {"formula_count", formula < 0 ? json(nullptr) : json(formula)},
                {"rows", rows}};
    emit(cfg, report, text, tsv);
    return ok ? 0 : 1;
}

int cmd_match(const RunConfig& cfg, const std::string& type_str, int n, int m) {
    auto type = ledger_type_from_name(type_str);
    if (!type) throw CLI::ValidationError("match", "type must be one of A, B, D, Gm1n");
    auto report = match_check(*type, n, m);
    json j{{"command", "match"},
           {"type", ledger_type_name(report.type)},
           {"n", n},
           {"m", *type == LedgerType::Gm1n ? json(m) : json(nullptr)},
           {"categorical_pieces", report.categorical_count},
           {"motivic_pieces", report.motivic_count},
           {"equal", report.equal},
           {"first_diff", report.first_diff.empty() ? json(nullptr) : json(report.first_diff)}};
    std::string text = "match " + ledger_type_name(report.type) + " n=" + std::to_string(n) +
                       (report.equal ? ": multisets agree (" : ": MISMATCH (") +
                       std::to_string(report.categorical_count) + " vs " +
                       std::to_string(report.motivic_count) + ")\n";
    std::string tsv = "type\tn\tcategorical\tmotivic\tequal\n" + ledger_type_name(report.type) +
                      "\t" + std::to_string(n) + "\t" + std::to_string(report.categorical_count) +
                      "\t" + std::to_string(report.motivic_count) + "\t" +
                      (report.equal ? "true" : "false") + "\n";
    emit(cfg, j, text, tsv);
    return report.equal ? 0 : 1;
}

int cmd_ledger(const RunConfig& cfg, const std::string& type_str, int n) {
    auto type = ledger_type_from_name(type_str);
    if (!type || *type == LedgerType::Gm1n)
        throw CLI::ValidationError("ledger", "type must be one of A, B, D");
    auto pieces = categorical_pieces(*type, n);

    json rows = json::array();
    std::string text;
    std::string tsv = "orbit\ttag\tcharacter\tbipartition\tkind\tmu\texpansion\n";
    for (const auto& piece : pieces) {
        std::string tag = piece.very_even_tag ? (*piece.very_even_tag == 0 ? "I" : "II") : "-";
        std::string kind = piece.noncommutative ? "noncommutative" : "commutative";
        std::string expansion;
        for (std::size_t i = 0; i < piece.expansion.size(); ++i)
            expansion += (i ? " " : "") + piece.expansion[i].to_string();
        json row{{"orbit", partition_json(piece.orbit)},
                 {"very_even_tag", piece.very_even_tag ? json(tag) : json(nullptr)},
                 {"character", character_json(piece.character)},
                 {"bipartition", bipartition_json(piece.bipartition)},
                 {"kind", kind},
                 {"mu", partition_json(piece.mu)},
                 {"expansion", json::parse("[]")}};
        json exp = json::array();
        for (const auto& e : piece.expansion) exp.push_back(partition_json(e));
        row["expansion"] = exp;
        rows.push_back(row);
        text += piece.orbit.to_string() + " tag=" + tag + " " + kind + " mu=" + piece.mu.to_string() +
                " expansion=" + expansion + "\n";
        tsv += plain_list(piece.orbit) + "\t" + tag + "\t" + character_json(piece.character).dump() +
               "\t" + piece.bipartition.to_string() + "\t" + kind + "\t" + plain_list(piece.mu) +
               "\t" + expansion + "\n";
    }
    json report{{"command", "ledger"}, {"type", type_str}, {"n", n}, {"pieces", rows}};
    emit(cfg, report, text, tsv);
    return 0;
}

int cmd_arr(const RunConfig& cfg, const std::string& lambda_str, int n, int dmax,
            const std::string& check) {
    Partition lambda = parse_partition(lambda_str);
    if (lambda.size() != n) throw CLI::ValidationError("arr", "|lambda| must equal n");
    if (n > cfg.arr_n_bound || dmax > cfg.arr_d_bound)
        throw CLI::ValidationError("arr", "n or dmax exceeds the configured arrangement bounds");
    bool assert_equal = false;
    if (check == "equal-parts") {
        for (int part : lambda.parts)
            if (part != lambda.parts[0])
                throw CLI::ValidationError("arr", "--check equal-parts needs all parts equal");
        assert_equal = true;
    } else if (!check.empty()) {
        throw CLI::ValidationError("arr", "unknown check '" + check + "'; valid: equal-parts");
    }

    auto report = equal_parts_check(lambda, n, dmax);
    json rows = json::array();
    std::string text = "lambda=" + lambda.to_string() + " n=" + std::to_string(n) +
                       "  components: S=" + std::to_string(report.s_components) +
                       " Zbar=" + std::to_string(report.z_bar_components) + "\n";
    std::string tsv = "d\tdim_S\tdim_Z_invariants\tequal\n";
    for (const auto& row : report.rows) {
        rows.push_back(json{{"d", row.d},
                            {"dim_S", row.dim_S},
                            {"dim_Z_invariants", row.dim_Z_inv},
                            {"equal", row.equal}});
        text += "  d=" + std::to_string(row.d) + "  dim S=" + std::to_string(row.dim_S) +
                "  dim Zbar=" + std::to_string(row.dim_Z_inv) +
                (row.equal ? "  equal" : "  DIFFER") + "\n";
        tsv += std::to_string(row.d) + "\t" + std::to_string(row.dim_S) + "\t" +
               std::to_string(row.dim_Z_inv) + "\t" + (row.equal ? "true" : "false") + "\n";
    }
    json j{{"command", "arr"},
           {"lambda", partition_json(lambda)},
           {"n", n},
           {"component_counts_agree", report.component_counts_agree},
           {"rows", rows},
           {"all_equal", report.all_equal}};
    emit(cfg, j, text, tsv);
    if (!report.component_counts_agree) return 1;
    if (assert_equal && !report.all_equal) return 1;
    return 0;
}

int cmd_selftest(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    struct Item {
        std::string name;
        bool ok;
    };
    std::vector<Item> items;
    auto run = [&](const std::string& name, bool ok) {
        items.push_back({name, ok});
        std::cerr << (ok ? "ok   " : "FAIL ") << name << "\n";
    };

    run("partitions: p(5)=7", enumerate_partitions(5).size() == 7);
    run("partitions: odd-B filter at 5",
        enumerate_partitions(5, PartitionFilter::OddB).size() == 4);
    run("kostka support at n=5", [] {
        for (const auto& la : enumerate_partitions(5))
            for (const auto& mu : enumerate_partitions(5))
                if ((kostka(la, mu) > 0) != dominance_leq(mu, la)) return false;
        return true;
    }());
    run("springer bijection B n<=5, D n<=5", [] {
        for (int n = 1; n <= 5; ++n) {
            springer_table(n, BD::B);
            springer_table(n, BD::D);
        }
        return true;
    }());
    run("identity bn-comb to degree 21", verify_identity(IdentityName::BnCombId, 21).equal);
    run("identity bn-match to degree 11", verify_identity(IdentityName::BnMatch, 11).equal);
    run("identity dn-match to degree 10", verify_identity(IdentityName::DnMatch, 10).equal);
    run("identity jacobi to degree 10", verify_identity(IdentityName::Jacobi, 10).equal);
    run("ledger match A,B n<=5; D n<=4", [] {
        for (int n = 1; n <= 5; ++n) {
            if (!match_check(LedgerType::A, n).equal) return false;
            if (!match_check(LedgerType::B, n).equal) return false;
            if (n <= 4 && !match_check(LedgerType::D, n).equal) return false;
        }
        return true;
    }());
    run("G(3,1,2) piece bijection", gm1n_bijection_check(3, 2).verified);
    run("star holds on W(B3)", star_check_group(group_from_descriptor("B3")).all_pass());
    run("star fails on the G(4,2,5) example class", [&cfg] {
        Group G = Group::build(4, 2, 5, cfg.element_budget);
        MonoElem g{{0, 0, 2, 0, 2}, {0, 2, 1, 4, 3}};
        return !star_check(G, G.index_of(g)).holds;
    }());
    run("smooth fails on (12) in G(3,3,3)", [] {
        Group G = Group::build(3, 3, 3);
        MonoElem g{{0, 0, 0}, {1, 0, 2}};
        return !smooth_check(G, G.index_of(g));
    }());
    run("conjugacy identity on S3/S4 abelian subgroups", [] {
        for (const auto& d : {std::string("A2"), std::string("A3")}) {
            Group G = group_from_descriptor(d);
            for (const auto& H : abelian_subgroups(G))
                if (!conjugacy_identity_check(G, H).equal()) return false;
        }
        return true;
    }());
    run("arrangement dims for S_(2,1), n=3", [] {
        Arrangement S = build_S(Partition{2, 1}, 3);
        return graded_dim(S, 0).value == 1 && graded_dim(S, 1).value == 3 &&
               graded_dim(S, 2).value == 6 && graded_dim(S, 3).value == 9;
    }());
    run("equal-parts check for (2,2), n=4, d<=3", [] {
        auto r = equal_parts_check(Partition{2, 2}, 4, 3);
        return r.component_counts_agree && r.all_equal;
    }());
    run("selftest finished inside five minutes",
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() < 300);

    bool all = true;
    json rows = json::array();
    for (const auto& item : items) {
        all = all && item.ok;
        rows.push_back(json{{"name", item.name}, {"ok", item.ok}});
    }
    json report{{"command", "selftest"}, {"pass", all}, {"checks", rows}};
    std::string text;
    for (const auto& item : items) text += (item.ok ? "ok   " : "FAIL ") + item.name + "\n";
    text += all ? "selftest: all checks passed\n" : "selftest: FAILURES\n";
    std::string tsv = "check\tok\n";
    for (const auto& item : items) tsv += item.name + "\t" + (item.ok ? "true" : "false") + "\n";
    emit(cfg, report, text, tsv);
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Springer-correspondence and reflection-group checks"};
    app.require_subcommand(1);
    app.fallthrough(); // let --format and friends appear after the subcommand

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file overriding defaults");
    app.add_option("--format", cfg.format, "output format: json | tsv | text")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--budget", cfg.element_budget, "group element budget");
    app.add_option("--parallelism", cfg.parallelism, "task pool width");

    std::string type_str, descriptor, slug, lambda_str, check;
    int n = 0, m = 0, degree = 0, dmax = 0;

    auto* springer = app.add_subcommand("springer", "Springer correspondence table");
    springer->add_option("type", type_str, "B or D")->required();
    springer->add_option("n", n, "rank")->required()->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "verify a generating-function identity");
    verify->add_option("--identity", slug, "identity name")->required();
    verify->add_option("--degree", degree, "truncation degree")->required()->check(CLI::PositiveNumber);

    auto* star = app.add_subcommand("star", "birationality property for a reflection group");
    star->add_option("group", descriptor, "group descriptor, e.g. G(4,2,5), B3, A5")->required();

    auto* smooth = app.add_subcommand("smooth", "fixed-space quotient smoothness per class");
    smooth->add_option("group", descriptor, "group descriptor")->required();

    auto* classes = app.add_subcommand("classes", "conjugacy classes and labels");
    classes->add_option("group", descriptor, "group descriptor")->required();

    auto* match = app.add_subcommand("match", "categorical vs motivic mu-multisets");
    match->add_option("--type", type_str, "A, B, D or Gm1n")->required();
    match->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);
    match->add_option("--m", m, "color count for Gm1n");

    auto* ledger = app.add_subcommand("ledger", "semiorthogonal ledger rows");
    ledger->add_option("--type", type_str, "A, B or D")->required();
    ledger->add_option("--n", n, "rank")->required()->check(CLI::PositiveNumber);

    auto* arr = app.add_subcommand("arr", "linear arrangement graded dimensions");
    arr->add_option("--lambda", lambda_str, "partition, e.g. 2,2")->required();
    arr->add_option("--n", n, "ambient rank")->required()->check(CLI::PositiveNumber);
    arr->add_option("--dmax", dmax, "largest degree")->required()->check(CLI::NonNegativeNumber);
    arr->add_option("--check", check, "equal-parts");

    auto* selftest = app.add_subcommand("selftest", "fast deterministic property suite");
    (void)selftest;

    try {
        app.parse(argc, argv);
        if (!config_path.empty()) load_config(cfg, config_path);

        if (springer->parsed()) return cmd_springer(cfg, type_str, n);
        if (verify->parsed()) return cmd_verify(cfg, slug, degree);
        if (star->parsed()) return cmd_star(cfg, descriptor);
        if (smooth->parsed()) return cmd_smooth(cfg, descriptor);
        if (classes->parsed()) return cmd_classes(cfg, descriptor);
        if (match->parsed()) return cmd_match(cfg, type_str, n, m);
        if (ledger->parsed()) return cmd_ledger(cfg, type_str, n);
        if (arr->parsed()) return cmd_arr(cfg, lambda_str, n, dmax, check);
        if (selftest->parsed()) return cmd_selftest(cfg);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the parse diagnostic
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
