// Copyright 2026 The flqas authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Maximum-weight matching on general graphs: the primal-dual blossom
// method of Edmonds, following Galil's exposition. Blossoms are kept as an
// explicit forest over 2n slots (vertices 0..n-1, blossoms n..2n-1); duals
// carry a factor 2 so slacks stay additive. Runs in O(n^3).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "flqas/layergen.hpp"

namespace flqas {

namespace {

class BlossomMatcher {
  public:
    BlossomMatcher(int n, const std::vector<WeightedEdge>& edge_list) : nvertex(n) {
        for (const auto& e : edge_list) {
            if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n || e.a == e.b) {
                throw std::invalid_argument("bad matching edge");
            }
            edges.push_back(e);
        }
        nedge = static_cast<int>(edges.size());
        maxweight = 0;
        for (const auto& e : edges) {
            maxweight = std::max(maxweight, e.weight);
        }
        eps = 1e-9 * std::max(1.0, maxweight);

        endpoint.resize(2 * nedge);
        neighbend.assign(nvertex, {});
        for (int k = 0; k < nedge; k++) {
            endpoint[2 * k] = edges[k].a;
            endpoint[2 * k + 1] = edges[k].b;
            neighbend[edges[k].a].push_back(2 * k + 1);
            neighbend[edges[k].b].push_back(2 * k);
        }

        mate.assign(nvertex, -1);
        label.assign(2 * nvertex, 0);
        labelend.assign(2 * nvertex, -1);
        inblossom.resize(nvertex);
        for (int v = 0; v < nvertex; v++) {
            inblossom[v] = v;
        }
        blossomparent.assign(2 * nvertex, -1);
        blossomchilds.assign(2 * nvertex, {});
        blossombase.assign(2 * nvertex, -1);
        for (int v = 0; v < nvertex; v++) {
            blossombase[v] = v;
        }
        blossomendps.assign(2 * nvertex, {});
        bestedge.assign(2 * nvertex, -1);
        blossombestedges.assign(2 * nvertex, {});
        has_bestedges.assign(2 * nvertex, false);
        for (int b = 2 * nvertex - 1; b >= nvertex; b--) {
            unusedblossoms.push_back(b);
        }
        dualvar.assign(2 * nvertex, 0.0);
        for (int v = 0; v < nvertex; v++) {
            dualvar[v] = maxweight;
        }
        allowedge.assign(nedge, false);
    }

    std::vector<int> solve() {
        for (int t = 0; t < nvertex; t++) {
            if (!stage()) {
                break;
            }
        }
        return mate_vertices();
    }

  private:
    int nvertex;
    int nedge;
    double maxweight;
    double eps;
    std::vector<WeightedEdge> edges;
    std::vector<int> endpoint;
    std::vector<std::vector<int>> neighbend;
    std::vector<int> mate;  // remote endpoint of matched edge, or -1
    std::vector<int> label, labelend, inblossom;
    std::vector<int> blossomparent, blossombase, bestedge;
    std::vector<std::vector<int>> blossomchilds, blossomendps, blossombestedges;
    std::vector<bool> has_bestedges;
    std::vector<int> unusedblossoms;
    std::vector<double> dualvar;
    std::vector<bool> allowedge;
    std::vector<int> queue;

    double slack(int k) const {
        return dualvar[edges[k].a] + dualvar[edges[k].b] - 2 * edges[k].weight;
    }

    void blossom_leaves(int b, std::vector<int>& out) const {
        if (b < nvertex) {
            out.push_back(b);
            return;
        }
        for (int child : blossomchilds[b]) {
            blossom_leaves(child, out);
        }
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom[w];
        label[w] = label[b] = t;
        labelend[w] = labelend[b] = p;
        bestedge[w] = bestedge[b] = -1;
        if (t == 1) {
            std::vector<int> leaves;
            blossom_leaves(b, leaves);
            queue.insert(queue.end(), leaves.begin(), leaves.end());
        } else if (t == 2) {
            int base = blossombase[b];
            assign_label(endpoint[mate[base]], 1, mate[base] ^ 1);
        }
    }

    // Traces back from both ends of an S-S edge looking for a common
    // ancestor; returns its base vertex or -1 (augmenting path found).
    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom[v];
            if (label[b] & 4) {
                base = blossombase[b];
                break;
            }
            path.push_back(b);
            label[b] |= 4;
            if (labelend[b] == -1) {
                v = -1;
            } else {
                v = endpoint[labelend[b]];
                b = inblossom[v];
                v = endpoint[labelend[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label[b] &= ~4;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges[k].a;
        int w = edges[k].b;
        int bb = inblossom[base];
        int bv = inblossom[v];
        int bw = inblossom[w];
        int b = unusedblossoms.back();
        unusedblossoms.pop_back();
        blossombase[b] = base;
        blossomparent[b] = -1;
        blossomparent[bb] = b;
        std::vector<int> path, endps;
        while (bv != bb) {
            blossomparent[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend[bv]);
            v = endpoint[labelend[bv]];
            bv = inblossom[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend[bw] ^ 1);
            w = endpoint[labelend[bw]];
            bw = inblossom[w];
        }
        blossomchilds[b] = path;
        blossomendps[b] = endps;
        label[b] = 1;
        labelend[b] = labelend[bb];
        dualvar[b] = 0;
        std::vector<int> leaves;
        blossom_leaves(b, leaves);
        for (int leaf : leaves) {
            if (label[inblossom[leaf]] == 2) {
                queue.push_back(leaf);
            }
            inblossom[leaf] = b;
        }
        // Recompute least-slack edges out of the new blossom.
        std::vector<int> bestedgeto(2 * nvertex, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!has_bestedges[child]) {
                std::vector<int> child_leaves;
                blossom_leaves(child, child_leaves);
                for (int leaf : child_leaves) {
                    std::vector<int> ks;
                    for (int p : neighbend[leaf]) {
                        ks.push_back(p / 2);
                    }
                    nblists.push_back(std::move(ks));
                }
            } else {
                nblists.push_back(blossombestedges[child]);
            }
            for (const auto& nblist : nblists) {
                for (int ke : nblist) {
                    int i = edges[ke].a;
                    int j = edges[ke].b;
                    if (inblossom[j] == b) {
                        std::swap(i, j);
                    }
                    int bj = inblossom[j];
                    if (bj != b && label[bj] == 1 &&
                        (bestedgeto[bj] == -1 || slack(ke) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = ke;
                    }
                }
            }
            blossombestedges[child].clear();
            has_bestedges[child] = false;
            bestedge[child] = -1;
        }
        blossombestedges[b].clear();
        for (int ke : bestedgeto) {
            if (ke != -1) {
                blossombestedges[b].push_back(ke);
            }
        }
        has_bestedges[b] = true;
        bestedge[b] = -1;
        for (int ke : blossombestedges[b]) {
            if (bestedge[b] == -1 || slack(ke) < slack(bestedge[b])) {
                bestedge[b] = ke;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        for (int s : blossomchilds[b]) {
            blossomparent[s] = -1;
            if (s < nvertex) {
                inblossom[s] = s;
            } else if (endstage && dualvar[s] <= eps) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                blossom_leaves(s, leaves);
                for (int leaf : leaves) {
                    inblossom[leaf] = s;
                }
            }
        }
        if (!endstage && label[b] == 2) {
            // Relabel the children on the path from the entry child to the
            // base, preserving the alternating structure.
            int entrychild = inblossom[endpoint[labelend[b] ^ 1]];
            int nchilds = static_cast<int>(blossomchilds[b].size());
            int j = 0;
            while (blossomchilds[b][j] != entrychild) {
                j++;
            }
            int jstep, endptrick;
            if (j & 1) {
                j -= nchilds;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            auto child_at = [&](int idx) { return blossomchilds[b][(idx % nchilds + nchilds) % nchilds]; };
            auto endp_at = [&](int idx) { return blossomendps[b][(idx % nchilds + nchilds) % nchilds]; };
            int p = labelend[b];
            while (j != 0) {
                label[endpoint[p ^ 1]] = 0;
                label[endpoint[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint[p ^ 1], 2, p);
                allowedge[endp_at(j - endptrick) / 2] = true;
                j += jstep;
                p = endp_at(j - endptrick) ^ endptrick;
                allowedge[p / 2] = true;
                j += jstep;
            }
            int bv = child_at(j);
            label[endpoint[p ^ 1]] = label[bv] = 2;
            labelend[endpoint[p ^ 1]] = labelend[bv] = p;
            bestedge[bv] = -1;
            j += jstep;
            while (child_at(j) != entrychild) {
                bv = child_at(j);
                if (label[bv] == 1) {
                    j += jstep;
                    continue;
                }
                std::vector<int> leaves;
                blossom_leaves(bv, leaves);
                int labeled = -1;
                for (int leaf : leaves) {
                    if (label[leaf] != 0) {
                        labeled = leaf;
                        break;
                    }
                }
                if (labeled != -1) {
                    label[labeled] = 0;
                    label[endpoint[mate[blossombase[bv]]]] = 0;
                    assign_label(labeled, 2, labelend[labeled]);
                }
                j += jstep;
            }
        }
        label[b] = -1;
        labelend[b] = -1;
        blossomchilds[b].clear();
        blossomendps[b].clear();
        blossombase[b] = -1;
        blossombestedges[b].clear();
        has_bestedges[b] = false;
        bestedge[b] = -1;
        unusedblossoms.push_back(b);
    }

    // Swaps matched/unmatched edges along b's internal path ending at
    // vertex v, then rotates the child list so v's child becomes the base.
    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent[t] != b) {
            t = blossomparent[t];
        }
        if (t >= nvertex) {
            augment_blossom(t, v);
        }
        int nchilds = static_cast<int>(blossomchilds[b].size());
        int i = 0;
        while (blossomchilds[b][i] != t) {
            i++;
        }
        int j = i;
        int jstep, endptrick;
        if (i & 1) {
            j -= nchilds;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        auto child_at = [&](int idx) { return blossomchilds[b][(idx % nchilds + nchilds) % nchilds]; };
        auto endp_at = [&](int idx) { return blossomendps[b][(idx % nchilds + nchilds) % nchilds]; };
        while (j != 0) {
            j += jstep;
            int tt = child_at(j);
            int p = endp_at(j - endptrick) ^ endptrick;
            if (tt >= nvertex) {
                augment_blossom(tt, endpoint[p]);
            }
            j += jstep;
            tt = child_at(j);
            if (tt >= nvertex) {
                augment_blossom(tt, endpoint[p ^ 1]);
            }
            mate[endpoint[p]] = p ^ 1;
            mate[endpoint[p ^ 1]] = p;
        }
        std::rotate(blossomchilds[b].begin(), blossomchilds[b].begin() + i, blossomchilds[b].end());
        std::rotate(blossomendps[b].begin(), blossomendps[b].begin() + i, blossomendps[b].end());
        blossombase[b] = blossombase[blossomchilds[b][0]];
    }

    void augment_matching(int k) {
        for (int side = 0; side < 2; side++) {
            int s = side == 0 ? edges[k].a : edges[k].b;
            int p = side == 0 ? 2 * k + 1 : 2 * k;
            while (true) {
                int bs = inblossom[s];
                if (bs >= nvertex) {
                    augment_blossom(bs, s);
                }
                mate[s] = p;
                if (labelend[bs] == -1) {
                    break;
                }
                int t = endpoint[labelend[bs]];
                int bt = inblossom[t];
                s = endpoint[labelend[bt]];
                int j = endpoint[labelend[bt] ^ 1];
                if (bt >= nvertex) {
                    augment_blossom(bt, j);
                }
                mate[j] = labelend[bt];
                p = labelend[bt] ^ 1;
            }
        }
    }

    // One stage: grow an alternating forest until a matching augmentation
    // happens or the duals prove optimality. Returns false at optimality.
    bool stage() {
        std::fill(label.begin(), label.end(), 0);
        std::fill(bestedge.begin(), bestedge.end(), -1);
        for (int b = nvertex; b < 2 * nvertex; b++) {
            blossombestedges[b].clear();
            has_bestedges[b] = false;
        }
        std::fill(allowedge.begin(), allowedge.end(), false);
        queue.clear();
        for (int v = 0; v < nvertex; v++) {
            if (mate[v] == -1 && label[inblossom[v]] == 0) {
                assign_label(v, 1, -1);
            }
        }
        bool augmented = false;
        while (true) {
            while (!queue.empty() && !augmented) {
                int v = queue.back();
                queue.pop_back();
                for (int p : neighbend[v]) {
                    int k = p / 2;
                    int w = endpoint[p];
                    if (inblossom[v] == inblossom[w]) {
                        continue;
                    }
                    double kslack = 0;
                    if (!allowedge[k]) {
                        kslack = slack(k);
                        if (kslack <= eps) {
                            allowedge[k] = true;
                        }
                    }
                    if (allowedge[k]) {
                        if (label[inblossom[w]] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label[inblossom[w]] == 1) {
                            int base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label[w] == 0) {
                            label[w] = 2;
                            labelend[w] = p ^ 1;
                        }
                    } else if (label[inblossom[w]] == 1) {
                        int b = inblossom[v];
                        if (bestedge[b] == -1 || kslack < slack(bestedge[b])) {
                            bestedge[b] = k;
                        }
                    } else if (label[w] == 0) {
                        if (bestedge[w] == -1 || kslack < slack(bestedge[w])) {
                            bestedge[w] = k;
                        }
                    }
                }
            }
            if (augmented) {
                break;
            }
            // Choose the smallest dual adjustment that creates progress.
            int deltatype = 1;
            double delta = 0;
            for (int v = 0; v < nvertex; v++) {
                delta = v == 0 ? dualvar[v] : std::min(delta, dualvar[v]);
            }
            delta = std::max(0.0, delta);
            int deltaedge = -1, deltablossom = -1;
            for (int v = 0; v < nvertex; v++) {
                if (label[inblossom[v]] == 0 && bestedge[v] != -1) {
                    double d = slack(bestedge[v]);
                    if (d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge[v];
                    }
                }
            }
            for (int b = 0; b < 2 * nvertex; b++) {
                if (blossomparent[b] == -1 && label[b] == 1 && bestedge[b] != -1) {
                    double d = slack(bestedge[b]) / 2;
                    if (d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge[b];
                    }
                }
            }
            for (int b = nvertex; b < 2 * nvertex; b++) {
                if (blossombase[b] >= 0 && blossomparent[b] == -1 && label[b] == 2 &&
                    dualvar[b] < delta) {
                    delta = dualvar[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            for (int v = 0; v < nvertex; v++) {
                int lb = label[inblossom[v]];
                if (lb == 1) {
                    dualvar[v] -= delta;
                } else if (lb == 2) {
                    dualvar[v] += delta;
                }
            }
            for (int b = nvertex; b < 2 * nvertex; b++) {
                if (blossombase[b] >= 0 && blossomparent[b] == -1) {
                    if (label[b] == 1) {
                        dualvar[b] += delta;
                    } else if (label[b] == 2) {
                        dualvar[b] -= delta;
                    }
                }
            }
            if (deltatype == 1) {
                break;  // optimum reached
            } else if (deltatype == 2) {
                allowedge[deltaedge] = true;
                int i = edges[deltaedge].a;
                if (label[inblossom[i]] == 0) {
                    i = edges[deltaedge].b;
                }
                queue.push_back(i);
            } else if (deltatype == 3) {
                allowedge[deltaedge] = true;
                queue.push_back(edges[deltaedge].a);
            } else {
                expand_blossom(deltablossom, false);
            }
        }
        // Retire S-blossoms whose dual dropped to zero.
        for (int b = nvertex; b < 2 * nvertex; b++) {
            if (blossomparent[b] == -1 && blossombase[b] >= 0 && label[b] == 1 &&
                dualvar[b] <= eps) {
                expand_blossom(b, true);
            }
        }
        return augmented;
    }

    std::vector<int> mate_vertices() const {
        std::vector<int> result(nvertex, -1);
        for (int v = 0; v < nvertex; v++) {
            if (mate[v] != -1) {
                result[v] = endpoint[mate[v]];
            }
        }
        return result;
    }
};

}  // namespace

std::vector<int> max_weight_matching_mates(int n_nodes, const std::vector<WeightedEdge>& edges) {
    if (n_nodes < 0) {
        throw std::invalid_argument("negative node count");
    }
    if (n_nodes == 0 || edges.empty()) {
        return std::vector<int>(n_nodes, -1);
    }
    return BlossomMatcher(n_nodes, edges).solve();
}

}  // namespace flqas
