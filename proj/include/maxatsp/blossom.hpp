#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace maxatsp {

// Maximum-weight matching in a general undirected graph via Edmonds' blossom
// method with dual variables, following the well-known van Rantwijk layout
// (endpoint arrays, nested blossom bookkeeping, single-tree phases).
//
// With max_cardinality set, the result is a maximum-cardinality matching of
// maximum weight, which is how perfect matchings are requested: run with the
// flag and reject results that leave vertices single.
//
// Weights are any signed integer-like type (int64_t, boost cpp_int). They are
// doubled internally; every halving site asserts evenness, so integer
// arithmetic is exact end to end.
template <typename W>
class Blossom {
  public:
    struct Edge {
        int i, j;
        W wt;
    };

    Blossom(int n, std::vector<Edge> edges, bool max_cardinality)
        : nv_(n), maxcard_(max_cardinality), edges_(std::move(edges)) {
        for (auto& e : edges_) e.wt = e.wt + e.wt;  // keep duals integral
    }

    // Returns mate[v] as a vertex id, or -1 for single vertices.
    std::vector<int> solve() {
        if (nv_ == 0) return {};
        ne_ = static_cast<int>(edges_.size());
        W maxweight = W(0);
        for (const auto& e : edges_) {
            assert(e.i != e.j && e.i >= 0 && e.j >= 0 && e.i < nv_ && e.j < nv_);
            if (e.wt > maxweight) maxweight = e.wt;
        }
        endpoint_.resize(2 * ne_);
        for (int k = 0; k < ne_; ++k) {
            endpoint_[2 * k] = edges_[k].i;
            endpoint_[2 * k + 1] = edges_[k].j;
        }
        neighbend_.assign(nv_, {});
        for (int k = 0; k < ne_; ++k) {
            neighbend_[edges_[k].i].push_back(2 * k + 1);
            neighbend_[edges_[k].j].push_back(2 * k);
        }
        mate_.assign(nv_, -1);
        label_.assign(2 * nv_, 0);
        labelend_.assign(2 * nv_, -1);
        inblossom_.resize(nv_);
        for (int v = 0; v < nv_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * nv_, -1);
        blossomchilds_.assign(2 * nv_, {});
        blossombase_.resize(2 * nv_);
        for (int v = 0; v < nv_; ++v) blossombase_[v] = v;
        for (int b = nv_; b < 2 * nv_; ++b) blossombase_[b] = -1;
        blossomendps_.assign(2 * nv_, {});
        bestedge_.assign(2 * nv_, -1);
        blossombestedges_.assign(2 * nv_, {});
        has_best_list_.assign(2 * nv_, false);
        unusedblossoms_.clear();
        for (int b = nv_; b < 2 * nv_; ++b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * nv_, W(0));
        for (int v = 0; v < nv_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(ne_, false);
        queue_.clear();

        for (int t = 0; t < nv_; ++t) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; ++b) has_best_list_[b] = false;
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < nv_; ++v)
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            bool augmented = false;
            for (;;) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        W kslack{};
                        bool have_slack = false;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            have_slack = true;
                            if (kslack <= W(0)) allowedge_[k] = true;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(v, k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[inblossom_[w]] == 2);
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            assert(have_slack);
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b]))
                                bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            assert(have_slack);
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w]))
                                bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // No augmenting path under the current duals; pick the delta.
                int deltatype = -1;
                W delta{};
                int deltaedge = -1, deltablossom = -1;
                if (!maxcard_) {
                    deltatype = 1;
                    delta = dualvar_[0];
                    for (int v = 1; v < nv_; ++v)
                        if (dualvar_[v] < delta) delta = dualvar_[v];
                }
                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        W d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        W kslack = slack(bestedge_[b]);
                        assert(kslack % W(2) == W(0));
                        W d = kslack / W(2);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // Max-cardinality mode and the frontier is exhausted.
                    assert(maxcard_);
                    deltatype = 1;
                    W m = dualvar_[0];
                    for (int v = 1; v < nv_; ++v)
                        if (dualvar_[v] < m) m = dualvar_[v];
                    delta = m < W(0) ? W(0) : m;
                }

                for (int v = 0; v < nv_; ++v) {
                    int lb = label_[inblossom_[v]];
                    if (lb == 1)
                        dualvar_[v] = dualvar_[v] - delta;
                    else if (lb == 2)
                        dualvar_[v] = dualvar_[v] + delta;
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1)
                            dualvar_[b] = dualvar_[b] + delta;
                        else if (label_[b] == 2)
                            dualvar_[b] = dualvar_[b] - delta;
                    }
                }

                if (deltatype == 1) break;
                if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].i, j = edges_[deltaedge].j;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].i;
                    assert(label_[inblossom_[i]] == 1);
                    queue_.push_back(i);
                } else if (deltatype == 4) {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) break;
            for (int b = nv_; b < 2 * nv_; ++b)
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == W(0))
                    expand_blossom(b, true);
        }

        std::vector<int> result(nv_, -1);
        for (int v = 0; v < nv_; ++v)
            if (mate_[v] >= 0) result[v] = endpoint_[mate_[v]];
        for (int v = 0; v < nv_; ++v) assert(result[v] == -1 || result[result[v]] == v);
        return result;
    }

  private:
    W slack(int k) const {
        return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - edges_[k].wt - edges_[k].wt;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            for (int v : leaves) queue_.push_back(v);
        } else if (t == 2) {
            int base = blossombase_[b];
            assert(mate_[base] >= 0);
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            assert(labelend_[b] == mate_[blossombase_[b]]);
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                assert(label_[b] == 2);
                assert(labelend_[b] >= 0);
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) std::swap(v, w);
        }
        for (int b : path) label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].i, w = edges_[k].j;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto& path = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
            assert(labelend_[bv] >= 0);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
            assert(labelend_[bw] >= 0);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        assert(label_[bb] == 1);
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = W(0);
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int lv : leaves) {
            if (label_[inblossom_[lv]] == 2) queue_.push_back(lv);
            inblossom_[lv] = b;
        }
        // Merge least-slack edge lists of the children.
        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!has_best_list_[child]) {
                std::vector<int> cl;
                blossom_leaves(child, cl);
                for (int lv : cl) {
                    std::vector<int> lst;
                    lst.reserve(neighbend_[lv].size());
                    for (int p : neighbend_[lv]) lst.push_back(p / 2);
                    nblists.push_back(std::move(lst));
                }
            } else {
                nblists.push_back(blossombestedges_[child]);
            }
            for (const auto& nblist : nblists) {
                for (int ek : nblist) {
                    int i = edges_[ek].i, j = edges_[ek].j;
                    if (inblossom_[j] == b) std::swap(i, j);
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ek) < slack(bestedgeto[bj])))
                        bestedgeto[bj] = ek;
                }
            }
            has_best_list_[child] = false;
            blossombestedges_[child].clear();
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int ek : bestedgeto)
            if (ek != -1) blossombestedges_[b].push_back(ek);
        has_best_list_[b] = true;
        bestedge_[b] = -1;
        for (int ek : blossombestedges_[b])
            if (bestedge_[b] == -1 || slack(ek) < slack(bestedge_[b])) bestedge_[b] = ek;
    }

    // Euclidean-mod child access; the traversals below walk with negative
    // indices the way the reference formulation does.
    int chd(int b, long long j) const {
        long long L = static_cast<long long>(blossomchilds_[b].size());
        return blossomchilds_[b][static_cast<size_t>(((j % L) + L) % L)];
    }
    int endp(int b, long long j) const {
        long long L = static_cast<long long>(blossomendps_[b].size());
        return blossomendps_[b][static_cast<size_t>(((j % L) + L) % L)];
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == W(0)) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int v : leaves) inblossom_[v] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            assert(labelend_[b] >= 0);
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            long long L = static_cast<long long>(blossomchilds_[b].size());
            long long j = 0;
            for (long long idx = 0; idx < L; ++idx)
                if (blossomchilds_[b][idx] == entrychild) j = idx;
            long long jstep;
            int endptrick;
            if (j & 1) {
                j -= L;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp(b, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp(b, j - endptrick) / 2] = true;
                j += jstep;
                p = endp(b, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = chd(b, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (chd(b, j) != entrychild) {
                bv = chd(b, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int lv = -1;
                for (int cand : leaves) {
                    lv = cand;
                    if (label_[cand] != 0) break;
                }
                if (lv >= 0 && label_[lv] != 0) {
                    assert(label_[lv] == 2);
                    assert(inblossom_[lv] == bv);
                    label_[lv] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(lv, 2, labelend_[lv]);
                }
                j += jstep;
            }
        }
        label_[b] = -1;
        labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        has_best_list_[b] = false;
        blossombestedges_[b].clear();
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= nv_) augment_blossom(t, v);
        long long L = static_cast<long long>(blossomchilds_[b].size());
        long long i = 0;
        for (long long idx = 0; idx < L; ++idx)
            if (blossomchilds_[b][idx] == t) i = idx;
        long long j = i, jstep;
        int endptrick;
        if (i & 1) {
            j -= L;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = chd(b, j);
            int p = endp(b, j - endptrick) ^ endptrick;
            if (t >= nv_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = chd(b, j);
            if (t >= nv_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i,
                    blossomchilds_[b].end());
        std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i,
                    blossomendps_[b].end());
        blossombase_[b] = blossombase_[blossomchilds_[b][0]];
        assert(blossombase_[b] == v);
    }

    void augment_matching(int v, int k) {
        int w = edges_[k].j == v ? edges_[k].i : edges_[k].j;
        assert((edges_[k].i == v && edges_[k].j == w) || (edges_[k].i == w && edges_[k].j == v));
        const int starts[2] = {v, w};
        const int ps[2] = {edges_[k].i == v ? 2 * k + 1 : 2 * k,
                           edges_[k].i == v ? 2 * k : 2 * k + 1};
        for (int side = 0; side < 2; ++side) {
            int s = starts[side];
            int p = ps[side];
            for (;;) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert(labelend_[bs] == mate_[blossombase_[bs]]);
                if (bs >= nv_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                assert(labelend_[bt] >= 0);
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                assert(blossombase_[bt] == t);
                if (bt >= nv_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_ = 0;
    int ne_ = 0;
    bool maxcard_ = false;
    std::vector<Edge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_best_list_;
    std::vector<int> unusedblossoms_;
    std::vector<W> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

}  // namespace maxatsp
