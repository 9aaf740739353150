#include "spr/group.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace spr {

namespace {

void compose_into(int m, const MonoElem& a, const MonoElem& b, MonoElem& out,
                  const std::vector<int>& a_sigma_inv) {
    int n = static_cast<int>(a.z.size());
    out.z.resize(n);
    out.sigma.resize(n);
    for (int i = 0; i < n; ++i) {
        out.z[i] = (a.z[i] + b.z[a_sigma_inv[i]]) % m;
        out.sigma[i] = a.sigma[b.sigma[i]];
    }
}

std::vector<int> sigma_inverse(const MonoElem& a) {
    std::vector<int> inv(a.sigma.size());
    for (std::size_t i = 0; i < a.sigma.size(); ++i) inv[a.sigma[i]] = static_cast<int>(i);
    return inv;
}

} // namespace

std::string MonoElem::to_string() const {
    std::string s = "(z=[";
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    s += "];s=[";
    for (std::size_t i = 0; i < sigma.size(); ++i) s += (i ? "," : "") + std::to_string(sigma[i]);
    return s + "])";
}

std::uint64_t Group::key(const MonoElem& e) const {
    std::uint64_t base = static_cast<std::uint64_t>(std::max(m_, n_));
    std::uint64_t k = 0;
    for (int i = 0; i < n_; ++i) k = k * base + e.z[i];
    for (int i = 0; i < n_; ++i) k = k * base + e.sigma[i];
    return k;
}

Group Group::build(int m, int p, int n, long element_budget) {
    if (m < 1 || p < 1 || n < 1 || m % p != 0)
        throw std::invalid_argument("Group::build: need n >= 1 and p | m");
    double order_estimate = 1;
    for (int i = 0; i < n; ++i) order_estimate *= m;
    for (int i = 2; i <= n; ++i) order_estimate *= i;
    order_estimate /= p;
    if (order_estimate > static_cast<double>(element_budget))
        throw std::invalid_argument("Group::build: order " +
                                    std::to_string(static_cast<long long>(order_estimate)) +
                                    " exceeds the element budget");

    Group G;
    G.m_ = m;
    G.p_ = p;
    G.n_ = n;
    G.field_ = make_cyclo_field(m);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> colors(n, 0);
    do {
        // enumerate color vectors with color sum divisible by p
        std::fill(colors.begin(), colors.end(), 0);
        while (true) {
            int total = std::accumulate(colors.begin(), colors.end(), 0);
            if (total % p == 0) G.elements_.push_back({colors, perm});
            int i = 0;
            for (; i < n; ++i) {
                if (++colors[i] < m) break;
                colors[i] = 0;
            }
            if (i == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(G.elements_.begin(), G.elements_.end(),
              [&G](const MonoElem& a, const MonoElem& b) { return G.key(a) < G.key(b); });
    for (std::size_t i = 0; i < G.elements_.size(); ++i)
        G.index_[G.key(G.elements_[i])] = static_cast<int>(i);

    // generators: adjacent transpositions, the first color raised to p, and a
    // (1, -1) color pair when p < m
    std::vector<MonoElem> gens;
    for (int i = 0; i + 1 < n; ++i) {
        MonoElem t{std::vector<int>(n, 0), {}};
        t.sigma.resize(n);
        std::iota(t.sigma.begin(), t.sigma.end(), 0);
        std::swap(t.sigma[i], t.sigma[i + 1]);
        gens.push_back(std::move(t));
    }
    if (p < m) {
        MonoElem c{std::vector<int>(n, 0), {}};
        c.sigma.resize(n);
        std::iota(c.sigma.begin(), c.sigma.end(), 0);
        c.z[0] = p;
        gens.push_back(std::move(c));
    }
    if (m > 1 && n >= 2) {
        MonoElem c{std::vector<int>(n, 0), {}};
        c.sigma.resize(n);
        std::iota(c.sigma.begin(), c.sigma.end(), 0);
        c.z[0] = 1;
        c.z[1] = m - 1;
        gens.push_back(std::move(c));
    }
    for (const auto& g : gens) {
        int idx = G.index_of(g);
        if (idx < 0) throw std::logic_error("Group::build: generator outside the group");
        G.generators_.push_back(idx);
    }
    if (G.subgroup_closure(G.generators_).size() != G.elements_.size())
        throw std::logic_error("Group::build: generators do not generate");
    return G;
}

int Group::index_of(const MonoElem& e) const {
    auto it = index_.find(key(e));
    return it == index_.end() ? -1 : it->second;
}

MonoElem Group::compose(const MonoElem& a, const MonoElem& b) const {
    MonoElem out;
    compose_into(m_, a, b, out, sigma_inverse(a));
    return out;
}

MonoElem Group::inverse(const MonoElem& a) const {
    auto inv = sigma_inverse(a);
    MonoElem out;
    out.z.resize(n_);
    out.sigma = inv;
    for (int i = 0; i < n_; ++i) out.z[i] = (m_ - a.z[a.sigma[i]]) % m_;
    return out;
}

MonoElem Group::identity() const {
    MonoElem e{std::vector<int>(n_, 0), std::vector<int>(n_)};
    std::iota(e.sigma.begin(), e.sigma.end(), 0);
    return e;
}

int Group::compose_idx(int a, int b) const {
    int idx = index_of(compose(elements_[a], elements_[b]));
    if (idx < 0) throw std::logic_error("compose_idx: product left the group");
    return idx;
}

int Group::inverse_idx(int a) const {
    int idx = index_of(inverse(elements_[a]));
    if (idx < 0) throw std::logic_error("inverse_idx: inverse left the group");
    return idx;
}

CycloVec Group::act(const MonoElem& g, const CycloVec& x) const {
    auto inv = sigma_inverse(g);
    CycloVec y(n_);
    for (int i = 0; i < n_; ++i)
        y[i] = cyclo_mul(field_, cyclo_zeta_pow(field_, g.z[i]), x[inv[i]]);
    return y;
}

const std::vector<ConjClass>& Group::conjugacy_classes() const {
    if (!classes_.empty() || elements_.empty()) return classes_;
    class_of_.assign(elements_.size(), -1);

    // precompute generator data for conjugation
    std::vector<MonoElem> gens, gen_invs;
    std::vector<std::vector<int>> gen_sinv;
    for (int gi : generators_) {
        gens.push_back(elements_[gi]);
        gen_invs.push_back(inverse(elements_[gi]));
        gen_sinv.push_back(sigma_inverse(gens.back()));
    }

    MonoElem tmp, conj;
    std::vector<int> tmp_sinv(n_);
    for (std::size_t start = 0; start < elements_.size(); ++start) {
        if (class_of_[start] >= 0) continue;
        int cls = static_cast<int>(classes_.size());
        ConjClass c;
        c.rep = static_cast<int>(start);
        std::vector<int> queue = {static_cast<int>(start)};
        class_of_[start] = cls;
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            c.members.push_back(x);
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                compose_into(m_, gens[gi], elements_[x], tmp, gen_sinv[gi]);
                for (int i = 0; i < n_; ++i) tmp_sinv[tmp.sigma[i]] = i;
                compose_into(m_, tmp, gen_invs[gi], conj, tmp_sinv);
                int y = index_of(conj);
                if (class_of_[y] < 0) {
                    class_of_[y] = cls;
                    queue.push_back(y);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.rep = c.members.front();
        classes_.push_back(std::move(c));
    }
    return classes_;
}

int Group::class_of(int element_index) const {
    conjugacy_classes();
    return class_of_[element_index];
}

std::vector<std::pair<std::vector<int>, int>> Group::colored_cycles(const MonoElem& g, int m) {
    int n = static_cast<int>(g.sigma.size());
    std::vector<bool> seen(n, false);
    std::vector<std::pair<std::vector<int>, int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int color = 0, j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            color = (color + g.z[j]) % m;
            j = g.sigma[j];
        } while (j != i);
        cycles.push_back({std::move(cyc), color});
    }
    return cycles;
}

std::vector<std::pair<int, int>> Group::colored_partition(const MonoElem& g) const {
    std::vector<std::pair<int, int>> inv;
    for (const auto& [cyc, color] : colored_cycles(g, m_))
        inv.push_back({static_cast<int>(cyc.size()), color});
    std::sort(inv.begin(), inv.end(), [](auto& a, auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    return inv;
}

int Group::fixed_space_dim(const MonoElem& g) const {
    int d = 0;
    for (const auto& [cyc, color] : colored_cycles(g, m_))
        if (color == 0) ++d;
    return d;
}

int Group::fixed_space_dim_linalg(const MonoElem& g) const {
    auto inv = sigma_inverse(g);
    CycloMat mat(n_, CycloVec(n_, cyclo_zero(field_)));
    for (int i = 0; i < n_; ++i) {
        mat[i][inv[i]] = cyclo_add(mat[i][inv[i]], cyclo_zeta_pow(field_, g.z[i]));
        mat[i][i] = cyclo_sub(mat[i][i], cyclo_one(field_));
    }
    return n_ - cyclo_rank(field_, std::move(mat));
}

CycloVec Group::fixed_vector_for_cycle(const MonoElem& g, const std::vector<int>& cycle) const {
    // phases accumulate along the cycle: x_{s(i)} picks up zeta^{z_{s(i)}}
    CycloVec v(n_, cyclo_zero(field_));
    int phase = 0;
    v[cycle[0]] = cyclo_one(field_);
    for (std::size_t t = 1; t < cycle.size(); ++t) {
        phase = (phase + g.z[cycle[t]]) % m_;
        v[cycle[t]] = cyclo_zeta_pow(field_, phase);
    }
    return v;
}

std::vector<CycloVec> Group::fixed_space(const MonoElem& g) const {
    std::vector<CycloVec> basis;
    for (const auto& [cyc, color] : colored_cycles(g, m_))
        if (color == 0) basis.push_back(fixed_vector_for_cycle(g, cyc));
    return basis;
}

std::vector<int> Group::centralizer(int g) const {
    const MonoElem& ge = elements_[g];
    auto g_sinv = sigma_inverse(ge);
    std::vector<int> out;
    MonoElem xg, gx;
    for (std::size_t x = 0; x < elements_.size(); ++x) {
        const MonoElem& xe = elements_[x];
        compose_into(m_, xe, ge, xg, sigma_inverse(xe));
        compose_into(m_, ge, xe, gx, g_sinv);
        if (xg == gx) out.push_back(static_cast<int>(x));
    }
    return out;
}

namespace {

// phase representation of a vector whose entries are zeta powers or zero
struct PhaseVec {
    std::vector<int> ph; // -1 for zero, else exponent of zeta
};

PhaseVec phase_vector(const MonoElem& g, const std::vector<int>& cycle, int m, int n) {
    PhaseVec v;
    v.ph.assign(n, -1);
    int phase = 0;
    v.ph[cycle[0]] = 0;
    for (std::size_t t = 1; t < cycle.size(); ++t) {
        phase = (phase + g.z[cycle[t]]) % m;
        v.ph[cycle[t]] = phase;
    }
    return v;
}

bool fixes_phase_vector(const MonoElem& h, const std::vector<int>& h_sinv, const PhaseVec& v,
                        int m) {
    int n = static_cast<int>(h.z.size());
    for (int i = 0; i < n; ++i) {
        int src = v.ph[h_sinv[i]];
        int expect = v.ph[i];
        if (src < 0 || expect < 0) {
            if (src != expect) return false;
            continue;
        }
        if ((h.z[i] + src) % m != expect) return false;
    }
    return true;
}

std::vector<PhaseVec> fixed_phase_basis(const Group& G, const MonoElem& g) {
    std::vector<PhaseVec> basis;
    for (const auto& [cyc, color] : Group::colored_cycles(g, G.m()))
        if (color == 0) basis.push_back(phase_vector(g, cyc, G.m(), G.n()));
    return basis;
}

std::vector<int> pointwise_stabilizer_phases(const Group& G, const std::vector<PhaseVec>& basis) {
    std::vector<int> out;
    for (long x = 0; x < G.order(); ++x) {
        const MonoElem& h = G.element(static_cast<int>(x));
        auto sinv = sigma_inverse(h);
        bool ok = true;
        for (const auto& v : basis)
            if (!fixes_phase_vector(h, sinv, v, G.m())) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<int>(x));
    }
    return out;
}

} // namespace

std::vector<int> Group::pointwise_stabilizer(const std::vector<CycloVec>& basis) const {
    std::vector<int> out;
    for (std::size_t x = 0; x < elements_.size(); ++x) {
        bool ok = true;
        for (const auto& v : basis)
            if (act(elements_[x], v) != v) {
                ok = false;
                break;
            }
        if (ok) out.push_back(static_cast<int>(x));
    }
    return out;
}

std::vector<int> Group::subgroup_closure(const std::vector<int>& generators) const {
    std::set<int> seen;
    std::vector<int> queue;
    int id = index_of(identity());
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g : generators) {
            int y = compose_idx(x, g);
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<int> Group::small_generating_set(const std::vector<int>& subgroup) const {
    std::set<int> members(subgroup.begin(), subgroup.end());
    std::vector<int> gens;
    std::vector<int> closure = subgroup_closure(gens);
    while (closure.size() < subgroup.size()) {
        std::set<int> have(closure.begin(), closure.end());
        int next = -1;
        for (int x : subgroup)
            if (!have.count(x)) {
                next = x;
                break;
            }
        if (next < 0) throw std::logic_error("small_generating_set: input not closed");
        gens.push_back(next);
        closure = subgroup_closure(gens);
    }
    for (int x : closure)
        if (!members.count(x))
            throw std::invalid_argument("small_generating_set: input is not a subgroup");
    return gens;
}

std::vector<int> Group::normalizer(const std::vector<int>& subgroup) const {
    auto gens = small_generating_set(subgroup);
    std::set<int> member_set(subgroup.begin(), subgroup.end());
    std::vector<int> out;
    MonoElem tmp, conj, xinv;
    std::vector<int> x_sinv(n_), tmp_sinv(n_);
    xinv.z.resize(n_);
    xinv.sigma.resize(n_);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
        const MonoElem& xe = elements_[x];
        for (int i = 0; i < n_; ++i) x_sinv[xe.sigma[i]] = i;
        xinv.sigma = x_sinv;
        for (int i = 0; i < n_; ++i) xinv.z[i] = (m_ - xe.z[xe.sigma[i]]) % m_;
        bool ok = true;
        for (int h : gens) {
            compose_into(m_, xe, elements_[h], tmp, x_sinv);
            for (int i = 0; i < n_; ++i) tmp_sinv[tmp.sigma[i]] = i;
            compose_into(m_, tmp, xinv, conj, tmp_sinv);
            if (!member_set.count(index_of(conj))) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(static_cast<int>(x));
    }
    return out;
}

std::string Group::descriptor() const {
    if (m_ == 1 && p_ == 1) return "A" + std::to_string(n_ - 1);
    if (m_ == 2 && p_ == 1) return "B" + std::to_string(n_);
    if (m_ == 2 && p_ == 2) return "D" + std::to_string(n_);
    return "G(" + std::to_string(m_) + "," + std::to_string(p_) + "," + std::to_string(n_) + ")";
}

StarResult star_check(const Group& G, int g) {
    auto basis = fixed_phase_basis(G, G.element(g));
    auto H = pointwise_stabilizer_phases(G, basis);
    auto C = G.centralizer(g);
    auto N = G.normalizer(H);

    std::set<int> c_set(C.begin(), C.end());
    long both = 0;
    for (int h : H)
        if (c_set.count(h)) ++both;

    StarResult r;
    r.normalizer_order = static_cast<long>(N.size());
    r.product_order = static_cast<long>(C.size()) * static_cast<long>(H.size()) / both;
    if (r.product_order > r.normalizer_order)
        throw std::logic_error("star_check: C(g)H_g escaped the normalizer");
    r.holds = r.product_order == r.normalizer_order;
    return r;
}

bool star_check_conjugacy_route(const Group& G, int g) {
    auto basis = fixed_phase_basis(G, G.element(g));
    auto H = pointwise_stabilizer_phases(G, basis);
    auto N = G.normalizer(H);
    auto h_gens = G.small_generating_set(H);

    // orbit of g under conjugation by H
    std::set<int> orbit{g};
    std::vector<int> queue{g};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int h : h_gens) {
            int y = G.compose_idx(G.compose_idx(h, x), G.inverse_idx(h));
            if (orbit.insert(y).second) queue.push_back(y);
        }
    }
    for (int x : N) {
        int y = G.compose_idx(G.compose_idx(x, g), G.inverse_idx(x));
        if (!orbit.count(y)) return false;
    }
    return true;
}

GroupStarReport star_check_group(const Group& G) {
    GroupStarReport report;
    report.group = G.descriptor();
    for (const auto& cls : G.conjugacy_classes())
        if (!star_check(G, cls.rep).holds) report.failing_class_reps.push_back(cls.rep);
    return report;
}

bool smooth_check(const Group& G, int g) {
    const MonoElem& ge = G.element(g);
    auto cycles = Group::colored_cycles(ge, G.m());

    std::vector<std::vector<int>> trivial;   // supports
    std::vector<PhaseVec> basis;
    std::vector<int> anchor, cycle_of(G.n(), -1);
    for (const auto& [cyc, color] : cycles) {
        if (color != 0) continue;
        int j = static_cast<int>(trivial.size());
        for (int i : cyc) cycle_of[i] = j;
        trivial.push_back(cyc);
        anchor.push_back(cyc[0]);
        basis.push_back(phase_vector(ge, cyc, G.m(), G.n()));
    }
    int d = static_cast<int>(trivial.size());
    if (d == 0) return true; // the quotient is a point

    // image of the centralizer inside GL(V^g): monomial matrices on the
    // trivial cycles, encoded as d-coordinate monomial elements
    std::set<std::pair<std::vector<int>, std::vector<int>>> image;
    for (int c : G.centralizer(g)) {
        const MonoElem& ce = G.element(c);
        auto sinv = sigma_inverse(ce);
        std::vector<int> tau(d), w(d, 0);
        for (int j = 0; j < d; ++j) {
            int target = cycle_of[ce.sigma[anchor[j]]];
            if (target < 0) throw std::logic_error("smooth_check: centralizer broke V^g");
            tau[j] = target;
            // scalar: compare c.b_j with b_target on the whole support
            int delta = -2;
            for (int i : trivial[target]) {
                int src = basis[j].ph[sinv[i]];
                if (src < 0) throw std::logic_error("smooth_check: support mismatch");
                int got = (ce.z[i] + src) % G.m();
                int diff = (got - basis[target].ph[i] + G.m()) % G.m();
                if (delta == -2) delta = diff;
                else if (delta != diff) throw std::logic_error("smooth_check: non-scalar action on a cycle line");
            }
            w[target] = delta;
        }
        image.insert({w, tau});
    }

    // pseudo-reflections: fixed space inside V^g of codimension exactly 1
    std::set<std::pair<std::vector<int>, std::vector<int>>> refl;
    for (const auto& [w, tau] : image) {
        MonoElem h{w, tau};
        int fd = 0;
        for (const auto& [cyc, color] : Group::colored_cycles(h, G.m()))
            if (color == 0) ++fd;
        if (fd == d - 1) refl.insert({w, tau});
    }

    // subgroup generated by the reflections, inside the image group
    std::set<std::pair<std::vector<int>, std::vector<int>>> closure;
    std::vector<int> idsigma(d);
    std::iota(idsigma.begin(), idsigma.end(), 0);
    closure.insert({std::vector<int>(d, 0), idsigma});
    std::vector<std::pair<std::vector<int>, std::vector<int>>> queue(closure.begin(), closure.end());
    while (!queue.empty()) {
        auto [wz, wt] = queue.back();
        queue.pop_back();
        MonoElem x{wz, wt};
        auto x_sinv = sigma_inverse(x);
        for (const auto& [rz, rt] : refl) {
            MonoElem r{rz, rt}, prod;
            compose_into(G.m(), x, r, prod, x_sinv);
            auto key = std::make_pair(prod.z, prod.sigma);
            if (closure.insert(key).second) queue.push_back(key);
        }
    }
    return closure.size() == image.size();
}

GroupSmoothReport smooth_check_group(const Group& G) {
    GroupSmoothReport report;
    report.group = G.descriptor();
    for (const auto& cls : G.conjugacy_classes())
        if (!smooth_check(G, cls.rep)) report.failing_class_reps.push_back(cls.rep);
    return report;
}

std::string SignedClassLabel::to_string() const {
    std::string s = positive.to_string() + "|" + negative.to_string();
    if (split_tag) s += *split_tag == 0 ? "[I]" : "[II]";
    return s;
}

SignedClassLabel signed_class_label(const Group& G, int g) {
    if (G.m() != 2 || (G.p() != 1 && G.p() != 2))
        throw std::invalid_argument("signed_class_label: needs G(2,1,n) or G(2,2,n)");
    const MonoElem& ge = G.element(g);
    std::vector<int> pos, neg;
    for (const auto& [cyc, color] : Group::colored_cycles(ge, 2))
        (color == 0 ? pos : neg).push_back(static_cast<int>(cyc.size()));
    SignedClassLabel label;
    label.positive = partition_from_unsorted(std::move(pos));
    label.negative = partition_from_unsorted(std::move(neg));

    if (G.p() == 2 && label.negative.length() == 0) {
        bool all_even = true;
        for (int part : label.positive.parts)
            if (part % 2 != 0) all_even = false;
        if (all_even) {
            // the split pair is distinguished by brute-force conjugacy against
            // the all-positive standard representative
            MonoElem std_rep{std::vector<int>(G.n(), 0), std::vector<int>(G.n())};
            int at = 0;
            for (int part : label.positive.parts) {
                for (int i = 0; i < part; ++i)
                    std_rep.sigma[at + i] = at + (i + 1) % part;
                at += part;
            }
            int std_idx = G.index_of(std_rep);
            if (std_idx < 0) throw std::logic_error("signed_class_label: standard representative missing");
            label.split_tag = G.class_of(g) == G.class_of(std_idx) ? 0 : 1;
        }
    }
    return label;
}

ConjugacyIdentityReport conjugacy_identity_check(const Group& G, const std::vector<int>& H) {
    if (H.empty()) throw std::invalid_argument("conjugacy_identity_check: empty subgroup");
    std::set<int> h_set(H.begin(), H.end());
    for (int a : H)
        for (int b : H) {
            int ab = G.compose_idx(a, b);
            if (!h_set.count(ab))
                throw std::invalid_argument("conjugacy_identity_check: input is not a subgroup");
            if (ab != G.compose_idx(b, a))
                throw std::invalid_argument("conjugacy_identity_check: subgroup is not abelian");
        }

    // left cosets of H
    std::vector<int> coset_of(G.order(), -1);
    std::vector<int> coset_rep;
    for (long x = 0; x < G.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        int id = static_cast<int>(coset_rep.size());
        coset_rep.push_back(static_cast<int>(x));
        for (int h : H) coset_of[G.compose_idx(static_cast<int>(x), h)] = id;
    }

    int identity = G.index_of(G.identity());
    std::set<int> seen_classes;
    long lhs = 0;
    for (int h : H) {
        if (h == identity) continue;
        if (!seen_classes.insert(G.class_of(h)).second) continue;
        // fixed cosets of h acting by left multiplication
        std::vector<int> fixed;
        for (std::size_t c = 0; c < coset_rep.size(); ++c)
            if (coset_of[G.compose_idx(h, coset_rep[c])] == static_cast<int>(c))
                fixed.push_back(static_cast<int>(c));
        // orbits of C(h) on the fixed cosets
        auto C = G.centralizer(h);
        std::set<int> fixed_set(fixed.begin(), fixed.end());
        std::set<int> visited;
        for (int c : fixed) {
            if (visited.count(c)) continue;
            ++lhs;
            for (int x : C) {
                int img = coset_of[G.compose_idx(x, coset_rep[c])];
                visited.insert(img);
            }
        }
    }
    ConjugacyIdentityReport r;
    r.lhs = lhs;
    r.rhs = static_cast<long>(H.size()) - 1;
    return r;
}

std::vector<std::vector<int>> abelian_subgroups(const Group& G) {
    int identity = G.index_of(G.identity());

    // commuting mask per element, filled on demand
    std::map<int, std::vector<char>> commutes;
    auto mask_of = [&](int a) -> const std::vector<char>& {
        auto it = commutes.find(a);
        if (it != commutes.end()) return it->second;
        std::vector<char> mask(G.order());
        for (long x = 0; x < G.order(); ++x) {
            int xi = static_cast<int>(x);
            mask[x] = G.compose_idx(xi, a) == G.compose_idx(a, xi);
        }
        return commutes.emplace(a, std::move(mask)).first->second;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> trivial{identity};
    seen.insert(trivial);
    queue.push_back(trivial);

    std::vector<std::vector<int>> out;
    while (!queue.empty()) {
        auto A = queue.back();
        queue.pop_back();
        out.push_back(A);
        std::set<int> a_set(A.begin(), A.end());
        auto gens = G.small_generating_set(A);

        for (long x = 0; x < G.order(); ++x) {
            int xi = static_cast<int>(x);
            if (a_set.count(xi)) continue;
            bool central = true;
            for (int g : gens)
                if (!mask_of(g)[x]) {
                    central = false;
                    break;
                }
            if (!central) continue;
            auto ext = gens;
            ext.push_back(xi);
            auto B = G.subgroup_closure(ext);
            std::sort(B.begin(), B.end());
            if (seen.insert(B).second) queue.push_back(B);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Group group_from_descriptor(const std::string& descriptor, long element_budget) {
    auto fail = [&]() {
        throw std::invalid_argument(
            "unknown group descriptor '" + descriptor +
            "'; expected one of: G(m,p,n), A<k>, B<k>, D<k>");
    };
    if (descriptor.empty()) fail();
    if (descriptor[0] == 'G') {
        int m, p, n;
        if (std::sscanf(descriptor.c_str(), "G(%d,%d,%d)", &m, &p, &n) != 3) fail();
        return Group::build(m, p, n, element_budget);
    }
    char kind = descriptor[0];
    int k = 0;
    try {
        k = std::stoi(descriptor.substr(1));
    } catch (...) {
        fail();
    }
    if (k < 1) fail();
    switch (kind) {
    case 'A': return Group::build(1, 1, k + 1, element_budget);
    case 'B': return Group::build(2, 1, k, element_budget);
    case 'D': return Group::build(2, 2, k, element_budget);
    default: fail();
    }
    throw std::logic_error("unreachable");
}

} // namespace spr
