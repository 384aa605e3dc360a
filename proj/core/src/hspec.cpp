#include "qna/hspec.hpp"

#include "qna/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace qna {

CauchonDiagram CauchonDiagram::from_members(int n, const std::vector<int>& members) {
    CauchonDiagram w(n, 0);
    for (int i : members) {
        if (i < 1 || i > n) throw std::out_of_range("CauchonDiagram: member out of range");
        w.mask |= 1u << (i - 1);
    }
    return w;
}

int CauchonDiagram::black_count() const {
    int c = 0;
    for (int i = 1; i <= n; ++i)
        if (contains(i)) ++c;
    return c;
}

std::vector<int> CauchonDiagram::members() const {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
        if (contains(i)) v.push_back(i);
    return v;
}

std::vector<int> CauchonDiagram::white_indices() const {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
        if (!contains(i)) v.push_back(i);
    return v;
}

int CauchonDiagram::max_member() const {
    for (int i = n; i >= 1; --i)
        if (contains(i)) return i;
    return 0;
}

CauchonDiagram CauchonDiagram::remove_max() const {
    const int k = max_member();
    if (k == 0) return *this;
    return CauchonDiagram(n, mask & ~(1u << (k - 1)));
}

std::string diagram_render(const CauchonDiagram& w) {
    std::string s(static_cast<std::size_t>(w.n), 'W');
    for (int i = 1; i <= w.n; ++i)
        if (w.contains(i)) s[static_cast<std::size_t>(i - 1)] = 'B';
    return s;
}

CauchonDiagram diagram_parse(const std::string& s) {
    CauchonDiagram w(static_cast<int>(s.size()), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 'B')
            w.mask |= 1u << i;
        else if (s[i] != 'W')
            throw ParseError("diagram_parse: expected 'B' or 'W' at position " +
                                 std::to_string(i + 1),
                             1, static_cast<int>(i + 1));
    }
    return w;
}

LiftStepResult lift_step(const PresentationTower& tower, int s, const IdealHandle& Js,
                         const CauchonDiagram& w, int pair_cap) {
    const int n = tower.length();
    if (s < 2 || s > n) throw std::out_of_range("lift_step: step out of range");
    if (!Js.complete) throw std::invalid_argument("lift_step: ideal handle not completed");
    const CglPresentation& Plevel = tower.level(s);
    const CglPresentation& Pnext = tower.level(s + 1);

    LiftStepResult out;

    const bool member = ideal_member(Js, gen_poly(Plevel, s));
    const bool black = w.contains(s);
    if (member != black) {
        std::ostringstream os;
        os << "lift_step: x_" << s << (member ? " lies in" : " is missing from")
           << " the level-" << s << " ideal but box " << s << " is "
           << (black ? "black" : "white")
           << "; an earlier lift is unsaturated or the pipeline is buggy";
        throw InternalError(os.str());
    }

    if (!black) {
        // white: push every generator through the change of generators and
        // clear localized denominators on the right
        for (const auto& g : Js.gens) {
            if (g.is_zero()) continue;
            LocElement img = theta_image(tower, s, g);
            const std::int64_t minexp = img.min_xj_exponent();
            if (minexp < 0) {
                out.cleared_negative_power = true;
                Expo xs(static_cast<std::size_t>(n), 0);
                xs[static_cast<std::size_t>(s - 1)] = -minexp;
                img = loc_multiply(tower, s, img, LocElement::monomial(s, std::move(xs), RatQ(1)));
            }
            auto poly = img.to_poly();
            if (!poly)
                throw InternalError("lift_step: clearing failed to produce a polynomial");
            if (!poly->is_zero()) out.next_gens.push_back(make_primitive(*poly));
        }
        // strip exact right factors of x_s from the completed basis; x_s is
        // outside the lifted prime here, so each quotient still belongs to it
        if (!out.next_gens.empty()) {
            for (int round = 0;; ++round) {
                if (round > n + 8)
                    throw InternalError("lift_step: right-strip pass failed to stabilize");
                IdealHandle h = two_sided_gb(tower.level_ptr(s + 1), out.next_gens, pair_cap);
                bool stripped = false;
                std::vector<NFPoly> next;
                for (const auto& b : h.gb) {
                    NFPoly cur = b;
                    while (auto quot = right_divide_by_gen(Pnext, cur, s)) {
                        cur = make_primitive(*quot);
                        stripped = true;
                    }
                    next.push_back(cur);
                }
                out.next_gens = std::move(next);
                if (!stripped) break;
            }
        }
        return out;
    }

    // black: the reinstated delta entries of level s+1 must already belong
    // to the ideal; then the lifted ideal is <x_s> plus the relabelled input
    for (int i = 1; i < s; ++i) {
        if (const NFPoly* d = Pnext.delta_entry(s, i)) {
            NFPoly witness = *d; // level-s reading of the entry is coefficientwise
            if (!ideal_member(Js, witness)) {
                out.rejected = true;
                out.rejection.step = s;
                std::ostringstream os;
                os << "kernel generator delta_" << s << "(x_" << i
                   << ") is not in the level-" << s << " ideal";
                out.rejection.reason = os.str();
                out.rejection.witness = witness;
                return out;
            }
        }
    }
    out.next_gens.push_back(gen_poly(Pnext, s));
    for (const auto& g : Js.gens) {
        if (g.is_zero()) continue;
        NFPoly r = rename_up(tower, s, g);
        bool dup = false;
        for (const auto& existing : out.next_gens)
            if (existing == r) dup = true;
        if (!dup) out.next_gens.push_back(std::move(r));
    }
    return out;
}

HPrimeRecord admissible(const PresentationTower& tower, const CauchonDiagram& w, int pair_cap) {
    const int n = tower.length();
    if (w.n != n) throw std::invalid_argument("admissible: diagram length mismatch");
    HPrimeRecord rec;
    rec.w = w;
    std::vector<NFPoly> gens;
    for (int i : w.members()) gens.push_back(gen_poly(tower.level(2), i));
    rec.ideal_tower.push_back(gens);
    for (int s = 2; s <= n; ++s) {
        IdealHandle h = two_sided_gb(tower.level_ptr(s), gens, pair_cap);
        LiftStepResult step = lift_step(tower, s, h, w, pair_cap);
        if (step.rejected) {
            rec.admissible = false;
            rec.reject = step.rejection;
            rec.ideal_tower.clear();
            return rec;
        }
        rec.saturation_flag = rec.saturation_flag || step.cleared_negative_power;
        gens = std::move(step.next_gens);
        rec.ideal_tower.push_back(gens);
    }
    rec.admissible = true;
    rec.height = w.black_count();
    rec.gk = w.white_count();
    rec.stratum_dim = stratum_dimension(tower, w);
    return rec;
}

std::vector<HPrimeRecord> enumerate_hspec(const PresentationTower& tower, int pair_cap,
                                          int jobs) {
    const int n = tower.length();
    const std::uint32_t total = 1u << n;
    std::vector<HPrimeRecord> records(total);
    auto run_one = [&](std::uint32_t mask) {
        CauchonDiagram w(n, mask);
        try {
            records[mask] = admissible(tower, w, pair_cap);
        } catch (const std::exception& e) {
            records[mask] = HPrimeRecord{};
            records[mask].w = w;
            records[mask].error = e.what();
        }
    };
    if (jobs <= 1) {
        for (std::uint32_t mask = 0; mask < total; ++mask) run_one(mask);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        const int count = std::min<int>(jobs, static_cast<int>(total));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    std::uint32_t mask = next.fetch_add(1);
                    if (mask >= total) return;
                    run_one(mask);
                }
            });
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<NFPoly> jw_generators(const HPrimeRecord& rec) {
    if (!rec.admissible) throw std::invalid_argument("jw_generators: record not admissible");
    return rec.ideal_tower.back();
}

HPrimeRecord HSpecCache::record(const CauchonDiagram& w) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = records_.find(w.mask);
        if (it != records_.end()) return it->second;
    }
    HPrimeRecord rec = admissible(tower_, w, pair_cap_);
    std::lock_guard<std::mutex> lock(mu_);
    return records_.emplace(w.mask, std::move(rec)).first->second;
}

IdealHandle HSpecCache::top_handle(const CauchonDiagram& w) {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = handles_.find(w.mask);
        if (it != handles_.end()) return it->second;
    }
    HPrimeRecord rec = record(w);
    IdealHandle h = two_sided_gb(tower_.level_ptr(tower_.length() + 1), jw_generators(rec),
                                 pair_cap_);
    std::lock_guard<std::mutex> lock(mu_);
    return handles_.emplace(w.mask, std::move(h)).first->second;
}

void HSpecCache::prime(const std::vector<HPrimeRecord>& records) {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& r : records)
        if (!r.error) records_.emplace(r.w.mask, r);
}

std::vector<ChainLink> blackbox_chain(HSpecCache& cache, const CauchonDiagram& w) {
    HPrimeRecord rec = cache.record(w);
    if (!rec.admissible)
        throw std::invalid_argument("blackbox_chain: diagram " + diagram_render(w) +
                                    " is not admissible");
    std::vector<ChainLink> chain;
    chain.push_back({w, rec, NFPoly(), true});
    CauchonDiagram cur = w;
    while (!cur.empty()) {
        CauchonDiagram nxt = cur.remove_max();
        HPrimeRecord nrec = cache.record(nxt);
        if (!nrec.admissible)
            throw InternalError("blackbox_chain: removing the maximal black box of " +
                                diagram_render(cur) + " produced the inadmissible " +
                                diagram_render(nxt));
        // containment: every generator of the smaller ideal is in the larger
        IdealHandle big = cache.top_handle(cur);
        if (!ideal_contains(big, jw_generators(nrec)))
            throw InternalError("blackbox_chain: containment certificate failed between " +
                                diagram_render(cur) + " and " + diagram_render(nxt));
        // strictness: some generator of the larger fails membership below
        IdealHandle small = cache.top_handle(nxt);
        NFPoly witness;
        bool found = false;
        for (const auto& g : jw_generators(cache.record(cur))) {
            if (!ideal_member(small, g)) {
                witness = g;
                found = true;
                break;
            }
        }
        if (!found)
            throw InternalError("blackbox_chain: no strictness witness between " +
                                diagram_render(cur) + " and " + diagram_render(nxt));
        chain.push_back({nxt, nrec, witness, true});
        cur = nxt;
    }
    return chain;
}

std::vector<ChainLink> blackbox_chain(const PresentationTower& tower, const CauchonDiagram& w,
                                      int pair_cap) {
    HSpecCache cache(tower, pair_cap);
    return blackbox_chain(cache, w);
}

CenterDecomposition center_decomposition(const std::vector<std::vector<std::int64_t>>& torus_exp) {
    const std::size_t r = torus_exp.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (torus_exp[i].size() != r)
            throw std::invalid_argument("center_decomposition: matrix not square");
        for (std::size_t j = 0; j < r; ++j)
            if (torus_exp[i][j] != -torus_exp[j][i])
                throw std::invalid_argument("center_decomposition: matrix not antisymmetric");
    }
    IntMat a(r, IntVec(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) a[i][j] = torus_exp[i][j];

    CenterDecomposition cd;
    if (r == 0) return cd;
    DiagResult dg = diagonalize(a);
    for (std::size_t j = 0; j < r; ++j) {
        IntVec col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = dg.v[i][j];
        if (j < static_cast<std::size_t>(dg.rank))
            cd.w_basis.push_back(std::move(col));
        else
            cd.z_basis.push_back(std::move(col));
    }
    cd.rank_z = static_cast<int>(cd.z_basis.size());
    // sanity: the kernel basis really is killed by the pairing
    for (const auto& z : cd.z_basis) {
        IntVec y = mat_vec(a, z);
        for (const auto& v : y)
            if (v != 0) throw InternalError("center_decomposition: kernel basis check failed");
    }
    // index of Z + W inside the full lattice: |det [W | Z]| (V is unimodular,
    // so this is 1, but it is computed honestly)
    {
        IntMat full(r, IntVec(r, 0));
        std::size_t col = 0;
        for (const auto& wv : cd.w_basis) {
            for (std::size_t i = 0; i < r; ++i) full[i][col] = wv[i];
            ++col;
        }
        for (const auto& zv : cd.z_basis) {
            for (std::size_t i = 0; i < r; ++i) full[i][col] = zv[i];
            ++col;
        }
        BigInt det = int_det(full);
        cd.index_s = det < 0 ? BigInt(-det) : det;
        if (cd.index_s == 0)
            throw InternalError("center_decomposition: Z + W is not of full rank");
    }
    // the pairing restricted to W must have trivial radical
    if (!cd.w_basis.empty()) {
        const std::size_t k = cd.w_basis.size();
        IntMat b(k, IntVec(k, 0));
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t s = 0; s < k; ++s) {
                BigInt acc = 0;
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        acc += cd.w_basis[p][i] * a[i][j] * cd.w_basis[s][j];
                b[p][s] = acc;
            }
        cd.radical_trivial = int_det(b) != 0;
    }
    return cd;
}

namespace {

std::vector<std::vector<std::int64_t>> white_restricted_pairing(const PresentationTower& tower,
                                                                const CauchonDiagram& w) {
    const CglPresentation& P = tower.level(tower.length() + 1);
    const auto idx = w.white_indices();
    std::vector<std::vector<std::int64_t>> m(idx.size(),
                                             std::vector<std::int64_t>(idx.size(), 0));
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = P.m(idx[a], idx[b]);
    return m;
}

} // namespace

int stratum_dimension(const PresentationTower& tower, const CauchonDiagram& w) {
    return center_decomposition(white_restricted_pairing(tower, w)).rank_z;
}

StratumReport stratum_report(const PresentationTower& tower, const CauchonDiagram& w) {
    StratumReport rep;
    rep.w = w;
    rep.white_indices = w.white_indices();
    rep.torus_exp = white_restricted_pairing(tower, w);
    rep.cd = center_decomposition(rep.torus_exp);
    rep.stratum_dim = rep.cd.rank_z;
    return rep;
}

PosetResult poset(const PresentationTower& tower, const std::vector<HPrimeRecord>& records,
                  int pair_cap) {
    std::vector<const HPrimeRecord*> adm;
    for (const auto& r : records)
        if (r.admissible) adm.push_back(&r);
    std::sort(adm.begin(), adm.end(), [](const HPrimeRecord* a, const HPrimeRecord* b) {
        return a->w.mask < b->w.mask;
    });

    std::map<std::uint32_t, IdealHandle> handles;
    for (const auto* r : adm)
        handles.emplace(r->w.mask,
                        two_sided_gb(tower.level_ptr(tower.length() + 1), r->ideal_tower.back(),
                                     pair_cap));

    const std::size_t k = adm.size();
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false)); // lt[a][b]: I_a < I_b
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (a == b) continue;
            const bool a_in_b =
                ideal_contains(handles.at(adm[b]->w.mask), adm[a]->ideal_tower.back());
            if (!a_in_b) continue;
            const bool b_in_a =
                ideal_contains(handles.at(adm[a]->w.mask), adm[b]->ideal_tower.back());
            if (b_in_a)
                throw InternalError("poset: distinct diagrams produced equal ideals: " +
                                    diagram_render(adm[a]->w) + " and " +
                                    diagram_render(adm[b]->w));
            lt[a][b] = true;
        }

    PosetResult out;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            if (!lt[a][b]) continue;
            bool covering = true;
            for (std::size_t c = 0; c < k && covering; ++c)
                if (lt[a][c] && lt[c][b]) covering = false;
            if (covering) out.cover_edges.push_back({adm[a]->w.mask, adm[b]->w.mask});
        }

    // grading: every saturated chain from the minimum up to a node has
    // length equal to the node's height label
    std::ostringstream detail;
    bool ok = true;
    std::vector<int> longest(k, -1), shortest(k, -1);
    // process in increasing height order; the zero ideal is the unique minimum
    std::vector<std::size_t> order(k);
    for (std::size_t i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return adm[x]->height < adm[y]->height; });
    for (std::size_t idx : order) {
        bool has_pred = false;
        int lo = 0, hi = 0;
        for (const auto& e : out.cover_edges) {
            if (e.to_mask != adm[idx]->w.mask) continue;
            std::size_t p = 0;
            for (; p < k; ++p)
                if (adm[p]->w.mask == e.from_mask) break;
            if (!has_pred) {
                has_pred = true;
                lo = shortest[p] + 1;
                hi = longest[p] + 1;
            } else {
                lo = std::min(lo, shortest[p] + 1);
                hi = std::max(hi, longest[p] + 1);
            }
        }
        if (!has_pred) {
            shortest[idx] = 0;
            longest[idx] = 0;
            if (!adm[idx]->w.empty()) {
                ok = false;
                detail << diagram_render(adm[idx]->w) << " has no lower cover yet is nonzero; ";
            }
        } else {
            shortest[idx] = lo;
            longest[idx] = hi;
        }
        if (shortest[idx] != adm[idx]->height || longest[idx] != adm[idx]->height) {
            ok = false;
            detail << diagram_render(adm[idx]->w) << " has chains of length [" << shortest[idx]
                   << "," << longest[idx] << "] but height " << adm[idx]->height << "; ";
        }
    }
    out.grading_ok = ok;
    out.detail = detail.str();
    return out;
}

TauvelReport tauvel_report(const PresentationTower& tower, int pair_cap, int jobs) {
    TauvelReport rep;
    rep.n = tower.length();
    rep.gk_total = tower.length();
    std::vector<HPrimeRecord> records = enumerate_hspec(tower, pair_cap, jobs);
    for (const auto& r : records) {
        if (!r.error) continue;
        const std::string msg =
            "tauvel_report: record " + diagram_render(r.w) + " failed: " + *r.error;
        if (r.error->find("cap") != std::string::npos) throw CapExceeded(msg);
        throw InternalError(msg);
    }
    HSpecCache cache(tower, pair_cap);
    cache.prime(records);
    rep.all_ok = true;
    for (const auto& r : records) {
        if (!r.admissible) continue;
        ++rep.admissible_count;
        TauvelRow row;
        row.w = r.w;
        row.black = r.w.black_count();
        row.white = r.w.white_count();
        row.gk = r.gk;
        row.stratum_dim = r.stratum_dim;
        row.saturation_flag = r.saturation_flag;
        auto chain = blackbox_chain(cache, r.w);
        row.chain_len = static_cast<int>(chain.size()) - 1;
        row.sum_ok = (row.chain_len == row.black) && (row.black + row.gk == rep.n) &&
                     (r.height == row.black);
        row.prim_gk = row.white - row.stratum_dim;
        row.prim_height = row.black + row.stratum_dim;
        row.prim_sum_ok = (row.prim_gk + row.prim_height == rep.n) && row.prim_gk >= 0;
        row.ok = row.sum_ok && row.prim_sum_ok;
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace qna
