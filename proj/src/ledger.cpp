#include "spr/ledger.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace spr {

std::string ledger_type_name(LedgerType t) {
    switch (t) {
    case LedgerType::A: return "A";
    case LedgerType::B: return "B";
    case LedgerType::D: return "D";
    case LedgerType::Gm1n: return "Gm1n";
    }
    return "?";
}

std::optional<LedgerType> ledger_type_from_name(const std::string& s) {
    if (s == "A" || s == "a") return LedgerType::A;
    if (s == "B" || s == "b") return LedgerType::B;
    if (s == "D" || s == "d") return LedgerType::D;
    if (s == "Gm1n" || s == "gm1n" || s == "G") return LedgerType::Gm1n;
    return std::nullopt;
}

namespace {

bool all_parts_even(const Partition& p) {
    for (int part : p.parts)
        if (part % 2 != 0) return false;
    return true;
}

} // namespace

std::vector<MotivicPiece> motivic_pieces(LedgerType type, int n, int m) {
    std::vector<MotivicPiece> out;
    switch (type) {
    case LedgerType::A:
        for (const auto& la : enumerate_partitions(n)) out.push_back({la, {}, std::nullopt, {}});
        return out;
    case LedgerType::B:
        for (const auto& bp : enumerate_bipartitions(n))
            out.push_back({bp.first, bp.second, std::nullopt, {}});
        return out;
    case LedgerType::D:
        for (const auto& bp : enumerate_bipartitions(n)) {
            if (bp.second.length() % 2 != 0) continue;
            if (bp.second.length() == 0 && all_parts_even(bp.first) && bp.first.length() > 0) {
                out.push_back({bp.first, bp.second, 0, {}});
                out.push_back({bp.first, bp.second, 1, {}});
            } else {
                out.push_back({bp.first, bp.second, std::nullopt, {}});
            }
        }
        return out;
    case LedgerType::Gm1n: {
        if (m < 1) throw std::invalid_argument("motivic_pieces: G(m,1,n) needs m >= 1");
        // colored partitions: one partition per color, sizes summing to n
        std::vector<std::vector<Partition>> acc{{}};
        for (int color = 0; color < m; ++color) {
            std::vector<std::vector<Partition>> next;
            for (const auto& partial : acc) {
                int used = 0;
                for (const auto& p : partial) used += p.size();
                int rest = n - used;
                int lo = color == m - 1 ? rest : 0; // last color absorbs the rest
                for (int k = lo; k <= rest; ++k)
                    for (const auto& p : enumerate_partitions(k)) {
                        auto t = partial;
                        t.push_back(p);
                        next.push_back(std::move(t));
                    }
            }
            acc = std::move(next);
        }
        for (const auto& t : acc) {
            MotivicPiece piece;
            piece.mu = t[0];
            for (int color = 0; color < m; ++color)
                for (int part : t[color].parts) piece.colored.push_back({part, color});
            std::sort(piece.colored.begin(), piece.colored.end(),
                      [](auto& a, auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
            out.push_back(std::move(piece));
        }
        return out;
    }
    }
    throw std::logic_error("motivic_pieces: unknown type");
}

bool motivic_matches_brute_force(LedgerType type, int n, int m, long element_budget) {
    auto formula = motivic_pieces(type, n, m);
    switch (type) {
    case LedgerType::A: {
        Group G = Group::build(1, 1, n, element_budget);
        auto classes = G.conjugacy_classes();
        std::multiset<Partition> brute;
        for (const auto& c : classes) {
            std::vector<int> lens;
            for (const auto& [cyc, color] : Group::colored_cycles(G.element(c.rep), 1))
                lens.push_back(static_cast<int>(cyc.size()));
            brute.insert(partition_from_unsorted(std::move(lens)));
        }
        std::multiset<Partition> form;
        for (const auto& p : formula) form.insert(p.mu);
        return brute == form;
    }
    case LedgerType::B:
    case LedgerType::D: {
        Group G = Group::build(2, type == LedgerType::B ? 1 : 2, n, element_budget);
        std::multiset<std::string> brute;
        for (const auto& c : G.conjugacy_classes())
            brute.insert(signed_class_label(G, c.rep).to_string());
        std::multiset<std::string> form;
        for (const auto& p : formula) {
            SignedClassLabel l{p.mu, p.mu_prime, p.split_tag};
            form.insert(l.to_string());
        }
        return brute == form;
    }
    case LedgerType::Gm1n: {
        Group G = Group::build(m, 1, n, element_budget);
        std::multiset<std::vector<std::pair<int, int>>> brute;
        for (const auto& c : G.conjugacy_classes())
            brute.insert(G.colored_partition(G.element(c.rep)));
        std::multiset<std::vector<std::pair<int, int>>> form;
        for (const auto& p : formula) form.insert(p.colored);
        return brute == form;
    }
    }
    return false;
}

std::vector<PieceLabel> categorical_pieces(LedgerType type, int n) {
    std::vector<PieceLabel> out;
    switch (type) {
    case LedgerType::A:
        // one piece per orbit partition, labeled by the partition itself
        for (const auto& la : enumerate_partitions(n)) {
            PieceLabel piece;
            piece.orbit = la;
            piece.mu = la;
            piece.expansion = {la};
            out.push_back(std::move(piece));
        }
        return out;
    case LedgerType::B: {
        for (const auto& lambda : enumerate_partitions(2 * n + 1, PartitionFilter::OddB)) {
            for (const auto& label : spr_characters(lambda, BD::B)) {
                PieceLabel piece;
                piece.orbit = lambda;
                piece.character = label.character;
                piece.bipartition = character_to_bipartition(label, BD::B);
                piece.mu = piece_mu(label, BD::B);
                piece.expansion = {piece.mu};
                out.push_back(std::move(piece));
            }
        }
        return out;
    }
    case LedgerType::D: {
        for (const auto& lambda : enumerate_partitions(2 * n, PartitionFilter::OddD)) {
            auto data = odd_part_data(lambda, BD::D);
            bool noncomm = data.i_minus().empty() && !data.entries.empty();
            if (noncomm) {
                // one piece absorbing several motivic monomials
                PieceLabel piece;
                piece.noncommutative = true;
                piece.orbit = lambda;
                piece.mu = lambda_red(lambda);
                piece.bipartition =
                    character_to_bipartition({lambda, std::nullopt, {}}, BD::D);
                for (const auto& [mono, c] : noncommutative_expansion(u_monomial(piece.mu))) {
                    std::vector<int> parts;
                    for (auto [i, e] : mono.u)
                        for (int r = 0; r < e; ++r) parts.push_back(i);
                    if (c != 1) throw std::logic_error("categorical_pieces: unexpected expansion coefficient");
                    piece.expansion.push_back(partition_from_unsorted(std::move(parts)));
                }
                out.push_back(std::move(piece));
                continue;
            }
            for (const auto& label : spr_characters(lambda, BD::D)) {
                PieceLabel piece;
                piece.orbit = lambda;
                piece.very_even_tag = label.very_even_tag;
                piece.character = label.character;
                piece.bipartition = character_to_bipartition(label, BD::D);
                piece.mu = piece_mu(label, BD::D);
                piece.expansion = {piece.mu};
                out.push_back(std::move(piece));
            }
        }
        return out;
    }
    case LedgerType::Gm1n:
        throw std::invalid_argument("categorical_pieces: use gm1n_bijection_check for G(m,1,n)");
    }
    throw std::logic_error("categorical_pieces: unknown type");
}

std::vector<Partition> categorical_mu_multiset(LedgerType type, int n) {
    std::vector<Partition> out;
    for (const auto& piece : categorical_pieces(type, n))
        for (const auto& mu : piece.expansion) out.push_back(mu);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> motivic_mu_multiset(LedgerType type, int n, int m) {
    std::vector<Partition> out;
    for (const auto& piece : motivic_pieces(type, n, m)) out.push_back(piece.mu);
    std::sort(out.begin(), out.end());
    return out;
}

MatchReport match_check(LedgerType type, int n, int m) {
    MatchReport report;
    report.type = type;
    report.n = n;
    report.m = m;
    if (type == LedgerType::Gm1n) {
        auto bij = gm1n_bijection_check(m, n);
        report.categorical_count = bij.piece_count;
        report.motivic_count = bij.class_count;
        report.equal = bij.verified;
        return report;
    }
    auto cat = categorical_mu_multiset(type, n);
    auto mot = motivic_mu_multiset(type, n);
    report.categorical_count = static_cast<long>(cat.size());
    report.motivic_count = static_cast<long>(mot.size());
    report.equal = cat == mot;
    if (!report.equal) {
        std::multiset<Partition> a(cat.begin(), cat.end()), b(mot.begin(), mot.end());
        for (const auto& p : a)
            if (a.count(p) != b.count(p)) {
                report.first_diff = p.to_string();
                break;
            }
        if (report.first_diff.empty())
            for (const auto& p : b)
                if (a.count(p) != b.count(p)) {
                    report.first_diff = p.to_string();
                    break;
                }
    }
    return report;
}

Gm1nBijectionReport gm1n_bijection_check(int m, int n, long element_budget) {
    Gm1nBijectionReport report;
    report.m = m;
    report.n = n;

    // pieces: a partition lambda with parts in [1, m-1] and at most n parts,
    // paired with mu^(a) of size r_a(lambda) for each a >= 1 and mu^(0) of
    // size n - l(lambda)
    std::vector<std::vector<Partition>> pieces;
    std::vector<Partition> lambdas;
    {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int maxpart) -> void {
            lambdas.push_back(partition_from_unsorted(cur));
            if (static_cast<int>(cur.size()) >= n) return;
            for (int part = maxpart; part >= 1; --part) {
                cur.push_back(part);
                self(self, part);
                cur.pop_back();
            }
        };
        rec(rec, m - 1);
    }
    // a piece needs l(lambda) colored cycles and n - l(lambda) plain ones;
    // sizes of the colored partitions are the multiplicities in lambda
    for (const auto& la : lambdas) {
        std::vector<std::vector<Partition>> partials{{}};
        for (int a = 1; a <= m - 1; ++a) {
            int size = la.multiplicity(a);
            std::vector<std::vector<Partition>> next;
            for (const auto& partial : partials)
                for (const auto& p : enumerate_partitions(size)) {
                    auto t = partial;
                    t.push_back(p);
                    next.push_back(std::move(t));
                }
            partials = std::move(next);
        }
        for (const auto& partial : partials)
            for (const auto& mu0 : enumerate_partitions(n - la.length())) {
                std::vector<Partition> tuple{mu0};
                tuple.insert(tuple.end(), partial.begin(), partial.end());
                pieces.push_back(std::move(tuple));
            }
    }
    report.piece_count = static_cast<long>(pieces.size());

    // classes from brute force, as the same tuples
    Group G = Group::build(m, 1, n, element_budget);
    std::vector<std::vector<Partition>> classes;
    for (const auto& c : G.conjugacy_classes()) {
        std::vector<std::vector<int>> by_color(m);
        for (const auto& [cyc, color] : Group::colored_cycles(G.element(c.rep), m))
            by_color[color].push_back(static_cast<int>(cyc.size()));
        std::vector<Partition> tuple;
        for (int a = 0; a < m; ++a) tuple.push_back(partition_from_unsorted(by_color[a]));
        // the stratum label of the class is its color-0 partition
        if (G.fixed_space_dim(G.element(c.rep)) != tuple[0].length()) return report;
        classes.push_back(std::move(tuple));
    }
    report.class_count = static_cast<long>(classes.size());

    std::sort(pieces.begin(), pieces.end());
    std::sort(classes.begin(), classes.end());
    if (std::adjacent_find(pieces.begin(), pieces.end()) != pieces.end()) return report;
    report.verified = pieces == classes;
    return report;
}

Poly mu_multiset_poly(const std::vector<PieceLabel>& pieces) {
    Poly out;
    for (const auto& piece : pieces)
        for (const auto& mu : piece.expansion) out = poly_add(out, poly_u(u_monomial(mu)));
    return out;
}

} // namespace spr
