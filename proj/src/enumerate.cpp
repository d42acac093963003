/*
   Copyright 2026 The weilfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "weil/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "weil/quad.hpp"
#include "weil/sturm.hpp"

namespace weil {

const char* to_string(EnumMode m) {
    switch (m) {
        case EnumMode::Any: return "any";
        case EnumMode::Ordinary: return "ordinary";
        case EnumMode::Squarefree: return "squarefree";
        case EnumMode::OrdinarySquarefree: return "ordinary+squarefree";
    }
    return "any";
}

EnumMode enum_mode_from_string(const std::string& s) {
    for (EnumMode m : {EnumMode::Any, EnumMode::Ordinary, EnumMode::Squarefree, EnumMode::OrdinarySquarefree})
        if (s == to_string(m)) return m;
    throw std::invalid_argument("unknown mode: " + s);
}

int thread_count() {
    if (const char* env = std::getenv("WEILFQ_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    const unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

namespace {

using LD = long double;

struct Ctx {
    Int q;
    PrimePower pp;
    int n = 0;
    EnumMode mode = EnumMode::Any;
    LD B = 0;
    std::vector<std::vector<LD>> binom;  // binom[a][b]
    std::vector<IntPoly> basis;          // x^{n-k} (x^2 + q)^k
    Int fourQ;
    long sepBits = 40;
};

Ctx make_ctx(const Int& q, int n, EnumMode mode) {
    if (n < 1 || n > 6) throw std::invalid_argument("enum_weil: dimension must be in [1, 6]");
    if (q > 1000000) throw std::invalid_argument("enum_weil: q too large for 64-bit coefficient search");
    Ctx c;
    c.q = q;
    c.pp = prime_power(q);
    c.n = n;
    c.mode = mode;
    c.B = 2.0L * std::sqrt(static_cast<LD>(q.get_d()));
    c.binom.assign(static_cast<std::size_t>(n) + 1, std::vector<LD>(static_cast<std::size_t>(n) + 1, 0));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= a; ++b) c.binom[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = binom(a, b).get_d();
    IntPoly pw = IntPoly::constant(1);
    const IntPoly base{q, Int(0), Int(1)};
    for (int k = 0; k <= n; ++k) {
        c.basis.push_back(pw.shifted(static_cast<std::size_t>(n - k)));
        pw = pw * base;
    }
    c.fourQ = 4 * q;
    return c;
}

// Depth-first search over c_1..c_n. D_k = G^{(n-k)} / (n-k)! depends on c_1..c_k only and has
// all roots in [-B, B] whenever G does; D_k' = (n-k+1) D_{k-1}, so the roots of D_{k-1} are the
// critical points of D_k and bound c_k through the alternating-sign conditions.
class Searcher {
   public:
    Searcher(const Ctx& ctx, std::vector<EnumRecord>* out, EnumStats* st)
        : ctx_(ctx), out_(out), st_(st), c_(static_cast<std::size_t>(ctx.n) + 1, 0),
          roots_(static_cast<std::size_t>(ctx.n) + 1) {
        c_[0] = 1;
    }

    // Walks the given prefix (returns false if infeasible), then explores or collects prefixes.
    bool enter(const std::vector<long>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const int k = static_cast<int>(i) + 1;
            long lo = 0, hi = 0;
            if (!range(k, lo, hi) || prefix[i] < lo || prefix[i] > hi) return false;
            c_[static_cast<std::size_t>(k)] = prefix[i];
            if (k < ctx_.n) roots_of(k);
        }
        return true;
    }

    void explore(int fromLevel) {
        if (fromLevel > ctx_.n) {
            leaf();
            return;
        }
        descend(fromLevel);
    }

    void collect(int k, int depth, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
        if (static_cast<int>(cur.size()) == depth) {
            out.push_back(cur);
            return;
        }
        long lo = 0, hi = 0;
        if (!range(k, lo, hi)) return;
        for (long v = lo; v <= hi; ++v) {
            c_[static_cast<std::size_t>(k)] = v;
            if (k < ctx_.n) roots_of(k);
            cur.push_back(v);
            collect(k + 1, depth, cur, out);
            cur.pop_back();
        }
    }

   private:
    // E_k(x) + c_k with E_k(x) = sum_{i<k} c_i C(n-i, k-i) x^{k-i}
    LD D(int k, LD x, LD ck) const {
        LD r = 0;
        for (int i = 0; i < k; ++i)
            r = r * x + static_cast<LD>(c_[static_cast<std::size_t>(i)]) *
                            ctx_.binom[static_cast<std::size_t>(ctx_.n - i)][static_cast<std::size_t>(k - i)];
        return r * x + ck;
    }

    LD point(int k, int j) const {  // y_0 = -B, y_1..y_{k-1} roots of D_{k-1}, y_k = B
        if (j == 0) return -ctx_.B;
        if (j == k) return ctx_.B;
        return roots_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }

    bool range(int k, long& lo, long& hi) const {
        LD l = -INFINITY, h = INFINITY;
        for (int j = 0; j <= k; ++j) {
            const LD v = -D(k, point(k, j), 0);
            if ((k - j) % 2 == 0) l = std::max(l, v);
            else h = std::min(h, v);
        }
        // bounds are evaluated at critical points, so root errors enter only to second order
        l -= 1e-9L * (1 + std::fabs(l));
        h += 1e-9L * (1 + std::fabs(h));
        if (l > h) return false;
        lo = static_cast<long>(std::ceil(l));
        hi = static_cast<long>(std::floor(h));
        return lo <= hi;
    }

    LD bisect(int k, LD a, LD b) const {
        const LD ck = static_cast<LD>(c_[static_cast<std::size_t>(k)]);
        LD fa = D(k, a, ck), fb = D(k, b, ck);
        if (fa == 0) return a;
        if (fb == 0) return b;
        if ((fa < 0) == (fb < 0)) return std::fabs(fa) < std::fabs(fb) ? a : b;
        for (int it = 0; it < 200; ++it) {
            const LD m = (a + b) / 2;
            if (m <= a || m >= b) break;
            const LD fm = D(k, m, ck);
            if (fm == 0) return m;
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        return (a + b) / 2;
    }

    void roots_of(int k) {
        auto& r = roots_[static_cast<std::size_t>(k)];
        r.resize(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) r[static_cast<std::size_t>(j - 1)] = bisect(k, point(k, j - 1), point(k, j));
    }

    void descend(int k) {
        ++st_->nodes;
        long lo = 0, hi = 0;
        if (!range(k, lo, hi)) return;
        for (long v = lo; v <= hi; ++v) {
            c_[static_cast<std::size_t>(k)] = v;
            if (k < ctx_.n) {
                roots_of(k);
                descend(k + 1);
            } else {
                leaf();
            }
        }
    }

    IntPoly companion() const {
        std::vector<Int> g(static_cast<std::size_t>(ctx_.n) + 1);
        for (int i = 0; i <= ctx_.n; ++i) g[static_cast<std::size_t>(ctx_.n - i)] = c_[static_cast<std::size_t>(i)];
        return IntPoly(std::move(g));
    }

    // Exact certificate from floating separators: sign changes of G at n+1 dyadic points inside
    // [-B, B] prove n simple roots there. Returns false when the roots are too clustered.
    bool separated(const IntPoly& g) {
        const int n = ctx_.n;
        roots_of(n);
        const auto& x = roots_[static_cast<std::size_t>(n)];
        const LD gap = std::ldexp(1.0L, -static_cast<int>(ctx_.sepBits) + 6);
        std::vector<LD> sep;
        sep.push_back((-ctx_.B + x[0]) / 2);
        if (x[0] + ctx_.B < gap) return false;
        for (int j = 1; j < n; ++j) {
            if (x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(j - 1)] < gap) return false;
            sep.push_back((x[static_cast<std::size_t>(j)] + x[static_cast<std::size_t>(j - 1)]) / 2);
        }
        if (ctx_.B - x[static_cast<std::size_t>(n - 1)] < gap) return false;
        sep.push_back((x[static_cast<std::size_t>(n - 1)] + ctx_.B) / 2);
        const Int scale = Int(1) << static_cast<mp_bitcnt_t>(ctx_.sepBits);
        const Int bound = ctx_.fourQ * scale * scale;
        for (int j = 0; j <= n; ++j) {
            const Int a(static_cast<long>(std::llround(std::ldexp(sep[static_cast<std::size_t>(j)], static_cast<int>(ctx_.sepBits)))));
            if (a * a > bound) return false;  // separator outside [-B, B]
            // sign of g(a / 2^S) * 2^{S n}
            Int v = 0;
            for (int i = n; i >= 0; --i) v = v * a + g.c[static_cast<std::size_t>(i)] * pow_int(scale, static_cast<unsigned long>(n - i));
            const int want = ((n - j) % 2 == 0) ? 1 : -1;
            if (sgn(v) != want) return false;
        }
        return true;
    }

    void leaf() {
        ++st_->leaves;
        const IntPoly g = companion();
        bool squarefree = true;
        if (!separated(g)) {
            if (!companion_roots_in_range(g, ctx_.q)) return;
            squarefree = is_squarefree(g) && sign_at(g, two_sqrt(ctx_.q)) != 0 && sign_at(g, -two_sqrt(ctx_.q)) != 0;
        }
        if ((ctx_.mode == EnumMode::Squarefree || ctx_.mode == EnumMode::OrdinarySquarefree) && !squarefree) return;
        IntPoly f;
        for (int k = 0; k <= ctx_.n; ++k) {
            const Int& gk = g.c[static_cast<std::size_t>(k)];
            if (gk != 0) f += ctx_.basis[static_cast<std::size_t>(k)] * gk;
        }
        EnumRecord rec;
        Certificate& cert = rec.cert;
        cert.monic = cert.qSymmetric = cert.rootsOnCircle = true;
        cert.squarefree = squarefree;
        cert.order = g.eval(Int(ctx_.q + 1));
        cert.ordinary = !mpz_divisible_p(f.c[static_cast<std::size_t>(ctx_.n)].get_mpz_t(), ctx_.pp.p.get_mpz_t());
        const bool wantOrdinary = ctx_.mode == EnumMode::Ordinary || ctx_.mode == EnumMode::OrdinarySquarefree;
        if (wantOrdinary && !cert.ordinary) return;
        cert.pRank = p_rank(f, ctx_.pp.p);
        if (cert.ordinary) cert.hondaTate = HondaTate::VerifiedOrdinary;
        else if (ctx_.pp.e == 1) cert.hondaTate = HondaTate::VerifiedPrimeQ;
        else cert.hondaTate = newton_verdict(f, ctx_.pp, &cert.note);
        if (cert.hondaTate == HondaTate::Failed) return;
        if (cert.hondaTate == HondaTate::Unknown) ++st_->unknown;
        ++st_->emitted;
        rec.w.q = ctx_.q;
        rec.w.p = ctx_.pp.p;
        rec.w.e = ctx_.pp.e;
        rec.w.n = ctx_.n;
        rec.w.f = std::move(f);
        rec.w.provenance = "enumerate";
        rec.c.assign(c_.begin() + 1, c_.end());
        out_->push_back(std::move(rec));
    }

    const Ctx& ctx_;
    std::vector<EnumRecord>* out_;
    EnumStats* st_;
    std::vector<long> c_;
    std::vector<std::vector<LD>> roots_;
};

}  // namespace

EnumStats enum_weil(const EnumTask& task, const std::function<void(const EnumRecord&)>& visit, int threads) {
    const Ctx ctx = make_ctx(task.q, task.n, task.mode);
    if (static_cast<int>(task.prefix.size()) > ctx.n) throw std::invalid_argument("enum_weil: prefix longer than n");
    if (threads <= 0) threads = thread_count();
    EnumStats total;

    // work slots: feasible prefixes of a fixed depth
    const int depth = std::max(static_cast<int>(task.prefix.size()), std::min(ctx.n, ctx.n >= 3 ? 2 : 1));
    std::vector<std::vector<long>> slots;
    {
        std::vector<EnumRecord> none;
        EnumStats st;
        Searcher s(ctx, &none, &st);
        if (!s.enter(task.prefix)) return total;
        std::vector<long> cur = task.prefix;
        s.collect(static_cast<int>(task.prefix.size()) + 1, depth, cur, slots);
    }

    std::vector<std::vector<EnumRecord>> results(slots.size());
    std::vector<char> done(slots.size(), 0);
    std::exception_ptr failure;
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= slots.size()) return;
            std::vector<EnumRecord> local;
            EnumStats st;
            try {
                Searcher s(ctx, &local, &st);
                if (s.enter(slots[i])) s.explore(static_cast<int>(slots[i].size()) + 1);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!failure) failure = std::current_exception();
            }
            std::lock_guard<std::mutex> lk(mu);
            results[i] = std::move(local);
            done[i] = 1;
            total.nodes += st.nodes;
            total.leaves += st.leaves;
            total.emitted += st.emitted;
            total.unknown += st.unknown;
            cv.notify_all();
        }
    };
    std::vector<std::thread> pool;
    const int nt = std::max(1, std::min<int>(threads, static_cast<int>(slots.size())));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        std::vector<EnumRecord> batch;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return done[i] != 0; });
            batch = std::move(results[i]);
        }
        if (!failure)
            for (const auto& r : batch) visit(r);
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return total;
}

std::vector<EnumRecord> enum_weil(const EnumTask& task, int threads) {
    std::vector<EnumRecord> out;
    enum_weil(task, [&](const EnumRecord& r) { out.push_back(r); }, threads);
    return out;
}

std::vector<std::vector<long>> enum_weil_bruteforce(const Int& q, int n) {
    std::vector<long> bound(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        // floor(C(n,i) (2 sqrt q)^i) = isqrt(C^2 4^i q^i)
        const Int c = binom(static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        bound[static_cast<std::size_t>(i)] = to_long(isqrt_floor(c * c * pow_int(4 * q, static_cast<unsigned long>(i))));
    }
    std::vector<std::vector<long>> out;
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            std::vector<Int> g(static_cast<std::size_t>(n) + 1);
            g[static_cast<std::size_t>(n)] = 1;
            for (int i = 1; i <= n; ++i) g[static_cast<std::size_t>(n - i)] = c[static_cast<std::size_t>(i)];
            if (companion_roots_in_range(IntPoly(std::move(g)), q)) out.emplace_back(c.begin() + 1, c.end());
            return;
        }
        for (long v = -bound[static_cast<std::size_t>(k)]; v <= bound[static_cast<std::size_t>(k)]; ++v) {
            c[static_cast<std::size_t>(k)] = v;
            rec(k + 1);
        }
    };
    rec(1);
    return out;
}

RealizableSet realizable_orders(const Int& q, int nMax, EnumMode mode, std::optional<Int> maxOrder, int threads) {
    RealizableSet rs;
    rs.q = q;
    rs.nMax = nMax;
    rs.mode = mode;
    for (int n = 1; n <= nMax; ++n) {
        EnumTask t;
        t.q = q;
        t.n = n;
        t.mode = mode;
        enum_weil(
            t,
            [&](const EnumRecord& r) {
                if (maxOrder && r.cert.order > *maxOrder) return;
                if (r.cert.hondaTate == HondaTate::Unknown) rs.unknownOrders.emplace(r.cert.order, r);
                else rs.orders.emplace(r.cert.order, r);
            },
            threads);
    }
    for (auto it = rs.unknownOrders.begin(); it != rs.unknownOrders.end();)
        it = rs.orders.count(it->first) ? rs.unknownOrders.erase(it) : std::next(it);
    return rs;
}

int compare_weil_floor(const Int& q, int k, const Int& x) {
    const QuadNum base(Rat(q + 1), Rat(-2), q);
    QuadNum v(1);
    for (int i = 0; i < k; ++i) v *= base;
    return (v - QuadNum(Rat(x))).sign();
}

ExceptionReport exceptions(const Int& q, const Int& bound, EnumMode mode, int nMax, int threads) {
    ExceptionReport rep;
    rep.q = q;
    rep.bound = bound;
    rep.mode = mode;
    if (nMax < 0) {
        for (int n = 0; n <= 6; ++n)
            if (compare_weil_floor(q, n + 1, bound) > 0) {
                nMax = std::max(n, 1);
                break;
            }
        if (nMax < 0) {
            // (sqrt q - 1)^2 <= 1 or the bound is too large: cover [1, bound] by Hasse-Weil upper ends
            const QuadNum up(Rat(q + 1), Rat(2), q);
            QuadNum v(1);
            nMax = 6;
            for (int n = 1; n <= 6; ++n) {
                v *= up;
                if ((v - QuadNum(Rat(bound))).sign() >= 0) {
                    nMax = std::min(6, n + 1);
                    break;
                }
            }
        }
    }
    rep.nMax = nMax;
    const RealizableSet rs = realizable_orders(q, nMax, mode, bound, threads);
    // m = 1 is the zero-dimensional variety, realized in every mode
    for (Int m = 2; m <= bound; ++m) {
        if (rs.orders.count(m)) continue;
        (rs.unknownOrders.count(m) ? rep.undecided : rep.exceptions).push_back(m);
    }
    rep.complete = true;
    for (const auto* list : {&rep.exceptions, &rep.undecided})
        for (const Int& m : *list)
            if (compare_weil_floor(q, nMax + 1, m) <= 0) rep.complete = false;
    rep.dimensionLimited = !rep.complete;
    rep.note = rep.complete ? "complete: every missing order lies below (sqrt q - 1)^(2(nMax+1))"
                            : "verified up to dimension nMax only";
    return rep;
}

std::vector<std::pair<Int, long>> figure_data(const Int& q, int threads) {
    std::vector<std::pair<Int, long>> pts;
    EnumTask t;
    t.q = q;
    t.n = 2;
    enum_weil(t, [&](const EnumRecord& r) { pts.emplace_back(r.cert.order, r.c[0]); }, threads);
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace weil
