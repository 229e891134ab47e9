#include "posit/bench/level2.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace posit::bench {

namespace {

using Point = std::array<Scalar, 4>;

std::vector<Point> parse_features(ScalarBackend& be, const IrisData& iris) {
    std::vector<Point> xs(iris.size());
    for (std::size_t i = 0; i < iris.size(); ++i)
        for (int f = 0; f < 4; ++f) xs[i][f] = be.parse(iris.features[i][f]);
    return xs;
}

Scalar squared_distance(ScalarBackend& be, const Point& a, const Point& b) {
    Scalar sum = be.parse("0");
    for (int f = 0; f < 4; ++f) {
        const Scalar d = be.sub(a[f], b[f]);
        sum = be.add(sum, be.mul(d, d));
    }
    return sum;
}

Scalar distance(ScalarBackend& be, const Point& a, const Point& b) {
    return be.sqrt(squared_distance(be, a, b));
}

bool strictly_less(ScalarBackend& be, Scalar a, Scalar b) {
    return be.compare(a, b) == Ordering::Less;
}

}  // namespace

IrisData load_iris_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset: " + path);
    IrisData data;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::array<std::string, 4> fields;
        std::string label;
        for (auto& f : fields)
            if (!std::getline(row, f, ','))
                throw std::runtime_error("malformed iris row: " + line);
        if (!std::getline(row, label))
            throw std::runtime_error("malformed iris row: " + line);
        int id = -1;
        for (std::size_t c = 0; c < data.classes.size(); ++c)
            if (data.classes[c] == label) id = static_cast<int>(c);
        if (id < 0) {
            id = static_cast<int>(data.classes.size());
            data.classes.push_back(label);
        }
        data.features.push_back(fields);
        data.labels.push_back(id);
    }
    return data;
}

double mm_checksum(ScalarBackend& be, int n, std::uint64_t seed) {
    // deterministic one-decimal values in [0, 99.9]
    std::uint64_t state = seed;
    const auto next_text = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        const unsigned v = static_cast<unsigned>((state >> 33) % 1000);
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%u.%u", v / 10, v % 10);
        return std::string(buf);
    };
    std::vector<Scalar> a(static_cast<std::size_t>(n) * n);
    std::vector<Scalar> b(a.size());
    for (auto& x : a) x = be.parse(next_text());
    for (auto& x : b) x = be.parse(next_text());

    Scalar total = be.parse("0");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Scalar c = be.parse("0");
            for (int k = 0; k < n; ++k)
                c = be.add(c, be.mul(a[i * n + k], b[k * n + j]));
            total = be.add(total, c);
        }
    }
    return be.to_binary64(total);
}

std::vector<int> km_cluster(ScalarBackend& be, const IrisData& iris,
                            int max_sweeps) {
    const auto xs = parse_features(be, iris);
    const int k = 3;
    // deterministic init: one seed row per class block
    std::array<Point, 3> centroids = {xs[0], xs[50], xs[100]};
    std::vector<int> assign(xs.size(), -1);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            int best = 0;
            Scalar best_d = distance(be, xs[i], centroids[0]);
            for (int c = 1; c < k; ++c) {
                const Scalar d = distance(be, xs[i], centroids[c]);
                if (strictly_less(be, d, best_d)) {
                    best_d = d;
                    best = c;
                }
            }
            if (assign[i] != best) {
                assign[i] = best;
                changed = true;
            }
        }
        if (!changed) break;
        for (int c = 0; c < k; ++c) {
            Point sum = {be.parse("0"), be.parse("0"), be.parse("0"),
                         be.parse("0")};
            int count = 0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                if (assign[i] != c) continue;
                ++count;
                for (int f = 0; f < 4; ++f) sum[f] = be.add(sum[f], xs[i][f]);
            }
            if (count == 0) continue;  // keep the old centroid
            const Scalar n = be.from_int(count);
            for (int f = 0; f < 4; ++f) centroids[c][f] = be.div(sum[f], n);
        }
    }
    return assign;
}

std::vector<int> knn_loo(ScalarBackend& be, const IrisData& iris, int k) {
    const auto xs = parse_features(be, iris);
    const int nclass = static_cast<int>(iris.classes.size());
    std::vector<int> pred(xs.size());

    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Scalar> dist_to(xs.size());
        std::vector<std::size_t> rest;
        rest.reserve(xs.size() - 1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            dist_to[j] = distance(be, xs[i], xs[j]);
            rest.push_back(j);
        }
        // select the k nearest; ties resolve to the lower row index
        std::vector<int> votes(nclass, 0);
        for (int picked = 0; picked < k; ++picked) {
            std::size_t best = picked;
            for (std::size_t m = picked + 1; m < rest.size(); ++m)
                if (strictly_less(be, dist_to[rest[m]], dist_to[rest[best]]))
                    best = m;
            std::swap(rest[picked], rest[best]);
            ++votes[iris.labels[rest[picked]]];
        }
        int label = 0;
        for (int c = 1; c < nclass; ++c)
            if (votes[c] > votes[label]) label = c;
        pred[i] = label;
    }
    return pred;
}

namespace {

// 3x3 determinant, first-row cofactor expansion
Scalar det3(ScalarBackend& be, const std::array<Scalar, 9>& m) {
    const Scalar m00 = be.mul(m[0], be.sub(be.mul(m[4], m[8]), be.mul(m[5], m[7])));
    const Scalar m01 = be.mul(m[1], be.sub(be.mul(m[3], m[8]), be.mul(m[5], m[6])));
    const Scalar m02 = be.mul(m[2], be.sub(be.mul(m[3], m[7]), be.mul(m[4], m[6])));
    return be.add(be.sub(m00, m01), m02);
}

Scalar det4(ScalarBackend& be, const std::array<Scalar, 16>& m) {
    const auto minor = [&](int col) {
        std::array<Scalar, 9> sub;
        int w = 0;
        for (int r = 1; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (c != col) sub[w++] = m[r * 4 + c];
        return det3(be, sub);
    };
    Scalar det = be.mul(m[0], minor(0));
    det = be.sub(det, be.mul(m[1], minor(1)));
    det = be.add(det, be.mul(m[2], minor(2)));
    det = be.sub(det, be.mul(m[3], minor(3)));
    return det;
}

}  // namespace

std::array<double, 4> lr_coefficients(ScalarBackend& be, const IrisData& iris) {
    // multivariate regression of petal width on [1, other three features],
    // solved by normal equations and Cramer's rule with explicit determinants
    const auto xs = parse_features(be, iris);
    const Scalar one = be.parse("1");

    const auto design = [&](std::size_t i, int c) {
        return c == 0 ? one : xs[i][c - 1];
    };
    std::array<Scalar, 16> ata;
    std::array<Scalar, 4> atb;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Scalar s = be.parse("0");
            for (std::size_t i = 0; i < xs.size(); ++i)
                s = be.add(s, be.mul(design(i, r), design(i, c)));
            ata[r * 4 + c] = s;
        }
        Scalar s = be.parse("0");
        for (std::size_t i = 0; i < xs.size(); ++i)
            s = be.add(s, be.mul(design(i, r), xs[i][3]));
        atb[r] = s;
    }

    const Scalar det = det4(be, ata);
    std::array<double, 4> coef;
    for (int i = 0; i < 4; ++i) {
        std::array<Scalar, 16> m = ata;
        for (int r = 0; r < 4; ++r) m[r * 4 + i] = atb[r];
        coef[i] = be.to_binary64(be.div(det4(be, m), det));
    }
    return coef;
}

Scalar exp_scalar(ScalarBackend& be, Scalar x) {
    const Scalar one = be.parse("1");
    const Scalar ln2 = be.parse("0.69314718055994530942");
    const Scalar inv_ln2 = be.parse("1.4426950408889634074");

    std::int64_t k = be.to_int(be.mul(x, inv_ln2));
    k = std::clamp<std::int64_t>(k, -300, 300);
    const Scalar r = be.sub(x, be.mul(be.from_int(k), ln2));

    Scalar p = one;
    for (int i = 12; i >= 1; --i)
        p = be.add(one, be.div(be.mul(r, p), be.from_int(i)));

    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", std::ldexp(1.0, static_cast<int>(k)));
    return be.mul(p, be.parse(buf));
}

std::vector<int> nb_classify(ScalarBackend& be, const IrisData& iris) {
    const auto xs = parse_features(be, iris);
    const int nclass = static_cast<int>(iris.classes.size());
    const Scalar zero = be.parse("0");
    const Scalar one = be.parse("1");
    const Scalar two = be.parse("2");
    const Scalar two_pi = be.parse("6.2831853071795864769");

    // Gaussian class-conditional moments (population variance)
    std::vector<std::array<Scalar, 4>> mean(nclass, {zero, zero, zero, zero});
    std::vector<std::array<Scalar, 4>> var(nclass, {zero, zero, zero, zero});
    std::vector<int> count(nclass, 0);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ++count[iris.labels[i]];
        for (int f = 0; f < 4; ++f) {
            auto& m = mean[iris.labels[i]][f];
            m = be.add(m, xs[i][f]);
        }
    }
    for (int c = 0; c < nclass; ++c) {
        const Scalar n = be.from_int(count[c]);
        for (int f = 0; f < 4; ++f) mean[c][f] = be.div(mean[c][f], n);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int c = iris.labels[i];
        for (int f = 0; f < 4; ++f) {
            const Scalar d = be.sub(xs[i][f], mean[c][f]);
            var[c][f] = be.add(var[c][f], be.mul(d, d));
        }
    }
    for (int c = 0; c < nclass; ++c) {
        const Scalar n = be.from_int(count[c]);
        for (int f = 0; f < 4; ++f) var[c][f] = be.div(var[c][f], n);
    }

    std::vector<int> pred(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Scalar best_score = zero;
        int best = 0;
        for (int c = 0; c < nclass; ++c) {
            Scalar score = one;  // uniform priors cancel
            for (int f = 0; f < 4; ++f) {
                const Scalar d = be.sub(xs[i][f], mean[c][f]);
                const Scalar q = be.div(be.mul(d, d), be.mul(two, var[c][f]));
                const Scalar gauss = be.div(
                    exp_scalar(be, be.sub(zero, q)),
                    be.sqrt(be.mul(two_pi, var[c][f])));
                score = be.mul(score, gauss);
            }
            if (c == 0 || strictly_less(be, best_score, score)) {
                best_score = score;
                best = c;
            }
        }
        pred[i] = best;
    }
    return pred;
}

namespace {

struct CtNode {
    int feature = -1;
    Scalar threshold;
    int left = -1;
    int right = -1;
    int label = -1;
};

struct CtBuilder {
    ScalarBackend& be;
    const std::vector<Point>& xs;
    const std::vector<int>& labels;
    int nclass;
    int max_depth;
    Scalar two;
    std::vector<CtNode> nodes;

    int majority(const std::vector<std::size_t>& idx) const {
        std::vector<int> votes(nclass, 0);
        for (auto i : idx) ++votes[labels[i]];
        int best = 0;
        for (int c = 1; c < nclass; ++c)
            if (votes[c] > votes[best]) best = c;
        return best;
    }

    Scalar gini(const std::vector<std::size_t>& idx) {
        const Scalar one = be.parse("1");
        if (idx.empty()) return be.parse("0");
        std::vector<int> votes(nclass, 0);
        for (auto i : idx) ++votes[labels[i]];
        const Scalar n = be.from_int(static_cast<std::int64_t>(idx.size()));
        Scalar acc = be.parse("0");
        for (int c = 0; c < nclass; ++c) {
            const Scalar p = be.div(be.from_int(votes[c]), n);
            acc = be.add(acc, be.mul(p, p));
        }
        return be.sub(one, acc);
    }

    bool pure(const std::vector<std::size_t>& idx) const {
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (labels[idx[i]] != labels[idx[0]]) return false;
        return true;
    }

    int build(std::vector<std::size_t> idx, int depth) {
        const int me = static_cast<int>(nodes.size());
        nodes.push_back(CtNode{});
        if (depth >= max_depth || idx.size() < 2 || pure(idx)) {
            nodes[me].label = majority(idx);
            return me;
        }

        const Scalar parent = gini(idx);
        bool have_split = false;
        Scalar best_score = parent;
        int best_feature = -1;
        Scalar best_thr;
        std::vector<std::size_t> best_left, best_right;

        for (int f = 0; f < 4; ++f) {
            std::vector<std::size_t> order = idx;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const Ordering o = be.compare(xs[a][f], xs[b][f]);
                          if (o == Ordering::Less) return true;
                          if (o == Ordering::Greater) return false;
                          return a < b;
                      });
            for (std::size_t m = 0; m + 1 < order.size(); ++m) {
                const Scalar lo = xs[order[m]][f];
                const Scalar hi = xs[order[m + 1]][f];
                if (be.compare(lo, hi) != Ordering::Less) continue;
                const Scalar thr = be.div(be.add(lo, hi), two);
                std::vector<std::size_t> left, right;
                for (auto i : idx)
                    (le(i, f, thr) ? left : right).push_back(i);
                if (left.empty() || right.empty()) continue;
                const Scalar n = be.from_int(static_cast<std::int64_t>(idx.size()));
                const Scalar wl = be.div(be.from_int(static_cast<std::int64_t>(left.size())), n);
                const Scalar wr = be.div(be.from_int(static_cast<std::int64_t>(right.size())), n);
                const Scalar score =
                    be.add(be.mul(wl, gini(left)), be.mul(wr, gini(right)));
                if (strictly_less(be, score, best_score)) {
                    best_score = score;
                    best_feature = f;
                    best_thr = thr;
                    best_left = std::move(left);
                    best_right = std::move(right);
                    have_split = true;
                }
            }
        }

        if (!have_split) {
            nodes[me].label = majority(idx);
            return me;
        }
        nodes[me].feature = best_feature;
        nodes[me].threshold = best_thr;
        const int l = build(std::move(best_left), depth + 1);
        const int r = build(std::move(best_right), depth + 1);
        nodes[me].left = l;
        nodes[me].right = r;
        return me;
    }

    bool le(std::size_t i, int f, Scalar thr) {
        const Ordering o = be.compare(xs[i][f], thr);
        return o == Ordering::Less || o == Ordering::Equal;
    }

    int predict(std::size_t i) {
        int at = 0;
        while (nodes[at].label < 0)
            at = le(i, nodes[at].feature, nodes[at].threshold) ? nodes[at].left
                                                               : nodes[at].right;
        return nodes[at].label;
    }
};

}  // namespace

std::vector<int> ct_classify(ScalarBackend& be, const IrisData& iris,
                             int max_depth) {
    const auto xs = parse_features(be, iris);
    CtBuilder builder{be, xs, iris.labels,
                      static_cast<int>(iris.classes.size()), max_depth,
                      be.parse("2"), {}};
    std::vector<std::size_t> all(xs.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    builder.build(std::move(all), 0);
    std::vector<int> pred(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        pred[i] = builder.predict(i);
    return pred;
}

Level2Result level_two_suite(ScalarBackend& be, const IrisData& iris,
                             const Level2Options& opt) {
    Level2Result r;
    r.mm_checksum = mm_checksum(be, opt.mm_n, opt.mm_seed);
    r.km_assignments = km_cluster(be, iris, opt.km_max_sweeps);
    r.knn_predictions = knn_loo(be, iris, opt.knn_k);
    r.lr_coefficients = lr_coefficients(be, iris);
    r.nb_predictions = nb_classify(be, iris);
    r.ct_predictions = ct_classify(be, iris, opt.ct_max_depth);
    return r;
}

}  // namespace posit::bench
