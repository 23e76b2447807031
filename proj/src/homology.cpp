#include "rtk/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace rtk {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::logic_error("homology: " + msg); }

// Smith normal form tracking the column transform: returns diag, fills Q
// with the accumulated column operations (m -> m*Q in smith form).
std::vector<long long> smith_with_q(IntMat m, IntMat& Q) {
    Q = IntMat(m.cols, m.cols);
    for (int i = 0; i < m.cols; ++i) Q.at(i, i) = 1;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        for (int r = 0; r < Q.rows; ++r) std::swap(Q.at(r, i), Q.at(r, j));
    };
    auto add_row = [&](int i, int j, long long k) {
        for (int c = 0; c < m.cols; ++c) m.at(i, c) += k * m.at(j, c);
    };
    auto add_col = [&](int i, int j, long long k) {
        for (int r = 0; r < m.rows; ++r) m.at(r, i) += k * m.at(r, j);
        for (int r = 0; r < Q.rows; ++r) Q.at(r, i) += k * Q.at(r, j);
    };

    std::vector<long long> diag;
    int t = 0;
    while (t < m.rows && t < m.cols) {
        int pr = -1, pc = -1;
        long long best = 0;
        for (int r = t; r < m.rows; ++r)
            for (int c = t; c < m.cols; ++c) {
                long long v = std::llabs(m.at(r, c));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (int r = t + 1; r < m.rows; ++r) {
            long long q = m.at(r, t) / m.at(t, t);
            if (q != 0) add_row(r, t, -q);
            if (m.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < m.cols; ++c) {
            long long q = m.at(t, c) / m.at(t, t);
            if (q != 0) add_col(c, t, -q);
            if (m.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;
        long long p = std::llabs(m.at(t, t));
        bool divides = true;
        for (int r = t + 1; r < m.rows && divides; ++r)
            for (int c = t + 1; c < m.cols && divides; ++c)
                if (m.at(r, c) % p != 0) {
                    add_row(t, r, 1);
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(p);
        ++t;
    }
    return diag;
}

}  // namespace

void ensure_frame(const Surface& s) {
    if (!s.frame.empty()) return;
    if (!s.connected()) fail("frame on disconnected complex");

    auto canon = [&](Id h) { return std::min(h, s.halves[h].twin); };

    std::set<Id> tree;
    std::map<Id, char> seen_v;
    Id root = kNone;
    for (size_t v = 0; v < s.verts.size(); ++v)
        if (s.verts[v].alive) {
            root = static_cast<Id>(v);
            break;
        }
    if (root == kNone) fail("empty complex");
    std::map<Id, std::vector<Id>> out;
    for (size_t h = 0; h < s.halves.size(); ++h)
        if (s.halves[h].alive) out[s.halves[h].org].push_back(static_cast<Id>(h));
    std::vector<Id> stack{root};
    seen_v[root] = 1;
    while (!stack.empty()) {
        Id v = stack.back();
        stack.pop_back();
        for (Id h : out[v]) {
            Id w = s.head(h);
            if (!seen_v.count(w)) {
                seen_v[w] = 1;
                tree.insert(canon(h));
                stack.push_back(w);
            }
        }
    }

    std::map<Id, int> gen;
    for (size_t h = 0; h < s.halves.size(); ++h) {
        Id ch = canon(static_cast<Id>(h));
        if (!s.halves[h].alive || static_cast<Id>(h) != ch) continue;
        if (!tree.count(ch)) {
            int idx = static_cast<int>(gen.size());
            gen[ch] = idx;
        }
    }
    int m = static_cast<int>(gen.size());

    int nf = 0;
    for (const auto& f : s.faces) nf += f.alive;
    IntMat B(nf, m);
    {
        int row = 0;
        for (size_t f = 0; f < s.faces.size(); ++f) {
            if (!s.faces[f].alive) continue;
            Id h0 = s.faces[f].half;
            Id cur = h0;
            do {
                Id ch = canon(cur);
                auto it = gen.find(ch);
                if (it != gen.end()) B.at(row, it->second) += (cur == ch ? 1 : -1);
                cur = s.halves[cur].next;
            } while (cur != h0);
            ++row;
        }
    }

    IntMat Q;
    std::vector<long long> diag = smith_with_q(B, Q);
    int t = static_cast<int>(diag.size());
    for (long long d : diag)
        if (d != 1) fail("torsion in surface homology (impossible with boundary)");
    int r = m - t;
    int expected = 2 * s.genus() + s.n_boundary_circles() - 1;
    if (r != expected) fail("frame rank mismatch");

    s.frame.assign(s.halves.size(), {});
    s.frame_rank = r;
    for (size_t h = 0; h < s.halves.size(); ++h) {
        if (!s.halves[h].alive) continue;
        Id ch = canon(static_cast<Id>(h));
        if (static_cast<Id>(h) != ch) continue;
        std::vector<long long> coords(r, 0);
        auto it = gen.find(ch);
        if (it != gen.end()) {
            int i = it->second;
            for (int j = 0; j < r; ++j) coords[j] = Q.at(i, t + j);
        }
        s.frame[ch] = coords;
        std::vector<long long> neg = coords;
        for (auto& x : neg) x = -x;
        s.frame[s.halves[ch].twin] = neg;
    }

    for (size_t f = 0; f < s.faces.size(); ++f) {
        if (!s.faces[f].alive) continue;
        std::vector<long long> acc(r, 0);
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            for (int j = 0; j < r; ++j) acc[j] += s.frame[cur][j];
            cur = s.halves[cur].next;
        } while (cur != h0);
        for (long long x : acc)
            if (x != 0) fail("face relation violated by frame");
    }
}

std::vector<long long> homology_class(const Surface& s, Id curve) {
    ensure_frame(s);
    const CurveRec& c = s.curves[curve];
    if (!c.closed) fail("homology_class of an open arc");
    std::vector<long long> acc(s.frame_rank, 0);
    for (Id h : c.halves) {
        if (s.frame[h].empty()) fail("frame hole under curve");
        for (int j = 0; j < s.frame_rank; ++j) acc[j] += s.frame[h][j];
    }
    return acc;
}

void align_frame(Surface& s, const std::vector<Id>& basis_curves) {
    ensure_frame(s);
    int r = s.frame_rank;
    if (static_cast<int>(basis_curves.size()) != r) fail("align_frame: wrong basis size");
    IntMat M(r, r);
    for (int i = 0; i < r; ++i) {
        auto cls = homology_class(s, basis_curves[i]);
        for (int j = 0; j < r; ++j) M.at(i, j) = cls[j];
    }
    IntMat Minv(r, r);
    for (int i = 0; i < r; ++i) {
        std::vector<long long> e(r, 0);
        e[i] = 1;
        auto x = solve_left(M, e);
        if (x.empty()) fail("align_frame: basis not unimodular");
        for (int j = 0; j < r; ++j) Minv.at(i, j) = x[j];
    }
    // want: class'(basis_i) = e_i.  class'(c)_j = <class(c), row j of Minv>.
    for (size_t h = 0; h < s.frame.size(); ++h) {
        if (s.frame[h].empty()) continue;
        std::vector<long long> nv(r, 0);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) nv[j] += Minv.at(j, k) * s.frame[h][k];
        s.frame[h] = nv;
    }
}

int algebraic_intersection(const Surface& s, Id c1, Id c2) { return s.signed_crossings(c2, c1); }

AbelianGroup h1_quotient(const Surface& s, const std::vector<Id>& curve_ids) {
    ensure_frame(s);
    IntMat M(static_cast<int>(curve_ids.size()), s.frame_rank);
    for (size_t i = 0; i < curve_ids.size(); ++i) {
        auto cls = homology_class(s, curve_ids[i]);
        for (int j = 0; j < s.frame_rank; ++j) M.at(static_cast<int>(i), j) = cls[j];
    }
    return cokernel(M);
}

int span_rank(const Surface& s, const std::vector<Id>& curve_ids) {
    ensure_frame(s);
    IntMat M(static_cast<int>(curve_ids.size()), s.frame_rank);
    for (size_t i = 0; i < curve_ids.size(); ++i) {
        auto cls = homology_class(s, curve_ids[i]);
        for (int j = 0; j < s.frame_rank; ++j) M.at(static_cast<int>(i), j) = cls[j];
    }
    return rank_of(M);
}

AbelianGroup Presentation::abelianized() const {
    IntMat M(static_cast<int>(relators.size()), n_generators);
    for (size_t i = 0; i < relators.size(); ++i)
        for (int g : relators[i]) {
            int idx = std::abs(g) - 1;
            M.at(static_cast<int>(i), idx) += g > 0 ? 1 : -1;
        }
    return cokernel(M);
}

namespace {

std::vector<int> reduce_word(std::vector<int> w) {
    std::vector<int> out;
    for (int g : w) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

std::vector<int> substitute(const std::vector<int>& w, int g, const std::vector<int>& sub) {
    std::vector<int> out;
    std::vector<int> sub_inv(sub.rbegin(), sub.rend());
    for (auto& x : sub_inv) x = -x;
    for (int x : w) {
        if (x == g)
            out.insert(out.end(), sub.begin(), sub.end());
        else if (x == -g)
            out.insert(out.end(), sub_inv.begin(), sub_inv.end());
        else
            out.push_back(x);
    }
    return reduce_word(out);
}

}  // namespace

Presentation pi1_presentation(const Surface& s, const std::vector<Id>& curve_ids) {
    if (!s.connected()) fail("pi1 on disconnected complex");
    auto canon = [&](Id h) { return std::min(h, s.halves[h].twin); };

    std::set<Id> tree;
    std::map<Id, char> seen_v;
    Id root = kNone;
    for (size_t v = 0; v < s.verts.size(); ++v)
        if (s.verts[v].alive) {
            root = static_cast<Id>(v);
            break;
        }
    std::map<Id, std::vector<Id>> out;
    for (size_t h = 0; h < s.halves.size(); ++h)
        if (s.halves[h].alive) out[s.halves[h].org].push_back(static_cast<Id>(h));
    std::vector<Id> stack{root};
    seen_v[root] = 1;
    while (!stack.empty()) {
        Id v = stack.back();
        stack.pop_back();
        for (Id h : out[v]) {
            Id w = s.head(h);
            if (!seen_v.count(w)) {
                seen_v[w] = 1;
                tree.insert(canon(h));
                stack.push_back(w);
            }
        }
    }
    std::map<Id, int> gen;
    for (size_t h = 0; h < s.halves.size(); ++h) {
        Id ch = canon(static_cast<Id>(h));
        if (!s.halves[h].alive || static_cast<Id>(h) != ch || tree.count(ch)) continue;
        gen[ch] = static_cast<int>(gen.size()) + 1;
    }

    auto word_of_walk = [&](const std::vector<Id>& halves) {
        std::vector<int> w;
        for (Id h : halves) {
            Id ch = canon(h);
            auto it = gen.find(ch);
            if (it != gen.end()) w.push_back(h == ch ? it->second : -it->second);
        }
        return reduce_word(w);
    };

    struct FaceWord {
        std::vector<int> w;
        bool used = false;
    };
    std::vector<FaceWord> fwords;
    for (size_t f = 0; f < s.faces.size(); ++f) {
        if (!s.faces[f].alive) continue;
        std::vector<Id> cyc;
        Id h0 = s.faces[f].half;
        Id cur = h0;
        do {
            cyc.push_back(cur);
            cur = s.halves[cur].next;
        } while (cur != h0);
        fwords.push_back({word_of_walk(cyc), false});
    }
    std::vector<std::vector<int>> relators;
    for (Id c : curve_ids) relators.push_back(word_of_walk(s.curves[c].halves));

    std::set<int> dead;
    int live = static_cast<int>(gen.size());
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& fw : fwords) {
            if (fw.used) continue;
            if (fw.w.empty()) {
                fw.used = true;
                continue;
            }
            std::map<int, int> count;
            for (int x : fw.w) ++count[std::abs(x)];
            int pick = 0;
            for (auto& [g, n] : count)
                if (n == 1 && !dead.count(g)) {
                    pick = g;
                    break;
                }
            if (pick == 0) continue;
            std::vector<int> w = fw.w;
            size_t pos = 0;
            for (size_t i = 0; i < w.size(); ++i)
                if (std::abs(w[i]) == pick) pos = i;
            std::rotate(w.begin(), w.begin() + pos, w.end());
            std::vector<int> rest(w.begin() + 1, w.end());
            std::vector<int> sub(rest.rbegin(), rest.rend());
            for (auto& x : sub) x = -x;
            if (w[0] < 0) sub = rest;
            for (auto& other : fwords)
                if (!other.used) other.w = substitute(other.w, pick, sub);
            for (auto& rel : relators) rel = substitute(rel, pick, sub);
            fw.used = true;
            dead.insert(pick);
            --live;
            progress = true;
        }
    }
    for (auto& fw : fwords)
        if (!fw.used && !fw.w.empty()) fail("pi1: shelling stuck (unexpected complex)");

    std::map<int, int> renum;
    for (auto& [ch, g] : gen)
        if (!dead.count(g)) renum[g] = static_cast<int>(renum.size()) + 1;
    Presentation p;
    p.n_generators = static_cast<int>(renum.size());
    for (auto& rel : relators) {
        std::vector<int> w;
        for (int x : rel) {
            int g = renum.at(std::abs(x));
            w.push_back(x > 0 ? g : -g);
        }
        p.relators.push_back(reduce_word(w));
    }
    if (live != p.n_generators) fail("pi1: bookkeeping");
    return p;
}

}  // namespace rtk
