#include "pms/l2_local.hpp"

namespace pms {

const Subspace& WeightFiltration::at(int k) const {
    if (k < -max_weight - 1) k = -max_weight - 1;
    if (k > max_weight) k = max_weight;
    return w.at(k);
}

WeightFiltration weight_filtration(const NilpotentOp& op) {
    const QMat& n = op.n;
    if (!n.is_square()) throw std::invalid_argument("weight_filtration: operator must be square");
    std::size_t dim = n.rows();
    if (op.basis_names.size() != dim)
        throw std::invalid_argument("weight_filtration: one name per basis vector required");

    /* Powers and their ranks. */
    std::vector<QMat> pw = {QMat::identity(dim)};
    while (!pw.back().is_zero() && pw.size() <= dim + 1) pw.push_back(pw.back() * n);
    if (!pw.back().is_zero())
        throw NotNilpotent("operator is not nilpotent on the " + std::to_string(dim) +
                           "-dimensional fiber");
    int index = static_cast<int>(pw.size()) - 1; /* smallest e with N^e = 0 */
    while (pw.size() <= dim + 1) pw.push_back(QMat(dim, dim));

    WeightFiltration wf;
    wf.fiber_dim = static_cast<int>(dim);
    wf.max_weight = index - 1;

    std::vector<std::size_t> rank(dim + 2, 0);
    for (std::size_t e = 0; e <= dim + 1; ++e) rank[e] = pw[e].rank();

    /* Jordan strings: the count of strings of length l, and from them the
     * multiset of weights. */
    std::map<int, int> weight_count;
    for (std::size_t l = 1; l <= dim; ++l) {
        long strings = static_cast<long>(rank[l - 1]) + static_cast<long>(rank[l + 1]) -
                       2 * static_cast<long>(rank[l]);
        if (strings < 0) throw std::logic_error("rank sequence of nilpotent powers is not concave");
        for (long t = 0; t < strings; ++t)
            for (int k = -static_cast<int>(l) + 1; k <= static_cast<int>(l) - 1; k += 2)
                weight_count[k]++;
    }

    /* Subspaces from the kernel/image formula. */
    auto kernel_of = [&](int e) {
        if (e <= 0) return Subspace(dim);
        return Subspace::span(pw[static_cast<std::size_t>(std::min(e, index))].kernel_basis(), dim);
    };
    auto image_of = [&](int e) {
        if (e >= index) return Subspace(dim);
        std::vector<QVec> cols;
        const QMat& m = pw[static_cast<std::size_t>(std::max(e, 0))];
        for (std::size_t j = 0; j < dim; ++j) {
            QVec v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = m.at(i, j);
            cols.push_back(std::move(v));
        }
        return Subspace::span(cols, dim);
    };

    for (int k = -wf.max_weight - 1; k <= wf.max_weight; ++k) {
        Subspace acc(dim);
        for (int j = std::max(0, -k); j <= index; ++j)
            acc = acc + kernel_of(k + j + 1).intersect(image_of(j));
        wf.w.emplace(k, acc);
    }

    for (int k = -wf.max_weight; k <= wf.max_weight; ++k) {
        int d = static_cast<int>(wf.at(k).dim()) - static_cast<int>(wf.at(k - 1).dim());
        if (d != 0) wf.gr_dim[k] = d;
        int expected = weight_count.count(k) ? weight_count[k] : 0;
        if (d != expected)
            throw std::logic_error("weight filtration disagrees with Jordan string weights at k=" +
                                   std::to_string(k));
    }

    /* N must shift the filtration by two and induce Gr_k ~ Gr_{-k}. */
    for (int k = -wf.max_weight; k <= wf.max_weight; ++k) {
        if (!wf.at(k - 2).contains(wf.at(k).apply(n)))
            throw std::logic_error("weight filtration is not shifted by two under N");
    }
    for (int k = 1; k <= wf.max_weight; ++k) {
        Subspace img = wf.at(k).apply(pw[static_cast<std::size_t>(k)]) + wf.at(-k - 1);
        int induced = static_cast<int>(img.dim()) - static_cast<int>(wf.at(-k - 1).dim());
        int gk = wf.gr_dim.count(k) ? wf.gr_dim[k] : 0;
        if (induced != gk)
            throw std::logic_error("N^k does not induce an isomorphism Gr_k -> Gr_{-k}");
    }

    /* Name the graded pieces when the filtration is spanned by standard
     * basis vectors. */
    std::map<int, std::vector<std::string>> names;
    std::map<int, int> named_count;
    for (std::size_t i = 0; i < dim; ++i) {
        QVec e(dim);
        e[i] = Rat(1);
        int k = -wf.max_weight - 1;
        while (k < wf.max_weight && !wf.at(k).contains(e)) ++k;
        if (wf.at(k).contains(e)) {
            names[k].push_back(op.basis_names[i]);
            named_count[k]++;
        }
    }
    wf.coordinate = true;
    for (int k = -wf.max_weight; k <= wf.max_weight; ++k) {
        int gk = wf.gr_dim.count(k) ? wf.gr_dim[k] : 0;
        int nk = named_count.count(k) ? named_count[k] : 0;
        if (gk != nk) wf.coordinate = false;
    }
    if (wf.coordinate) wf.gr_names = std::move(names);
    return wf;
}

bool gr_matches(const WeightFiltration& wf, int k, const std::vector<QVec>& generators) {
    const Subspace& lower = wf.at(k - 1);
    const Subspace& upper = wf.at(k);
    int gk = static_cast<int>(upper.dim()) - static_cast<int>(lower.dim());
    if (gk != static_cast<int>(generators.size())) return false;
    Subspace spanned = lower;
    for (const auto& g : generators) {
        if (!upper.contains(g)) return false;
        spanned = spanned + Subspace::span({g}, upper.ambient_dim());
    }
    return spanned == upper;
}

LocalModel sym_local(int n) {
    if (n < 1) throw std::invalid_argument("sym_local: power must be positive");
    LocalModel m;
    m.n = n;
    /* Basis: monomials v1^a v2^b v^c with a+b+c = n, enumerated with a
     * descending, then b descending. */
    std::vector<std::array<int, 3>> monos;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b) monos.push_back({a, b, n - a - b});
    auto index_of = [&](int a, int b, int c) {
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (monos[i][0] == a && monos[i][1] == b && monos[i][2] == c)
                return i;
        throw std::logic_error("sym_local: monomial not found");
    };
    for (const auto& mo : monos) {
        std::string name;
        for (int t = 0; t < mo[0]; ++t) name += (name.empty() ? "" : "*") + std::string("v1");
        for (int t = 0; t < mo[1]; ++t) name += (name.empty() ? "" : "*") + std::string("v2");
        for (int t = 0; t < mo[2]; ++t) name += (name.empty() ? "" : "*") + std::string("v");
        m.names.push_back(name);
    }
    std::size_t d = monos.size();
    m.n1 = QMat(d, d);
    m.n2 = QMat(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto [a, b, c] = monos[j];
        if (a >= 1) m.n1.at(index_of(a - 1, b, c + 1), j) = Rat(a);
        if (b >= 1) m.n2.at(index_of(a, b - 1, c + 1), j) = Rat(b);
    }
    return m;
}

LocalL2Module module_from_generators(
    int truncation, std::size_t ambient,
    const std::map<std::pair<int, int>, std::vector<std::tuple<int, int, Subspace>>>& gens) {
    LocalL2Module mod;
    mod.truncation = truncation;
    for (const auto& [part, list] : gens) {
        for (int a = 0; a <= truncation; ++a)
            for (int b = 0; b <= truncation; ++b) {
                Subspace fiber(ambient);
                for (const auto& [ga, gb, sp] : list)
                    if (ga <= a && gb <= b) fiber = fiber + sp;
                mod.parts[part].emplace(std::make_pair(a, b), fiber);
            }
    }
    return mod;
}

std::array<LocalL2Module, 3> l2_subcomplex(const LocalModel& model, DivisorType type, int bound) {
    if (bound < 2) throw TruncationTooSmall("truncation bound must be at least 2");
    std::size_t dim = model.dim();
    WeightFiltration wf1 = weight_filtration({model.n1, model.names});
    WeightFiltration wf2 =
        type == DivisorType::NormalCrossing ? weight_filtration({model.n2, model.names}) : WeightFiltration{};

    auto fiber = [&](int e1, int e2, int a, int b) {
        Subspace f = Subspace::full(dim);
        if (a == 0) f = f.intersect(wf1.at(-2 * e1));
        if (type == DivisorType::NormalCrossing && b == 0) f = f.intersect(wf2.at(-2 * e2));
        return f;
    };

    auto build = [&](std::vector<std::pair<int, int>> parts) {
        LocalL2Module mod;
        mod.truncation = bound;
        for (auto [e1, e2] : parts)
            for (int a = 0; a <= bound; ++a)
                for (int b = 0; b <= bound; ++b)
                    mod.parts[{e1, e2}].emplace(std::make_pair(a, b), fiber(e1, e2, a, b));
        return mod;
    };

    return {build({{0, 0}}), build({{1, 0}, {0, 1}}), build({{1, 1}})};
}

bool module_equal(const LocalL2Module& x, const LocalL2Module& y, int bound) {
    if (bound < 2) throw TruncationTooSmall("truncation bound must be at least 2");
    if (x.truncation < bound || y.truncation < bound)
        throw TruncationTooSmall("stored truncation below comparison bound");
    if (x.parts.size() != y.parts.size()) return false;
    for (const auto& [part, table] : x.parts) {
        auto it = y.parts.find(part);
        if (it == y.parts.end()) return false;
        for (int a = 0; a <= bound; ++a)
            for (int b = 0; b <= bound; ++b)
                if (!(table.at({a, b}) == it->second.at({a, b}))) return false;
    }
    return true;
}

bool complex_equal(const std::array<LocalL2Module, 3>& x, const std::array<LocalL2Module, 3>& y,
                   int bound) {
    for (int i = 0; i < 3; ++i)
        if (!module_equal(x[i], y[i], bound)) return false;
    return true;
}

bool theta_stable(const std::array<LocalL2Module, 3>& mods, const LocalModel& model, int bound) {
    if (bound < 2) throw TruncationTooSmall("truncation bound must be at least 2");
    for (const auto& mod : mods)
        if (mod.truncation < bound) throw TruncationTooSmall("stored truncation below check bound");

    /* Each theta component fixes the monomial bidegree: multiplying by
     * dz1/z1, dz2/z2 or dz2 leaves powers of z1, z2 unchanged. */
    auto check = [&](const LocalL2Module& src, std::pair<int, int> from, const QMat& op,
                     const LocalL2Module& tgt, std::pair<int, int> to) {
        auto sit = src.parts.find(from);
        auto tit = tgt.parts.find(to);
        if (sit == src.parts.end() || tit == tgt.parts.end())
            throw std::invalid_argument("theta_stable: missing form part");
        for (int a = 0; a <= bound; ++a)
            for (int b = 0; b <= bound; ++b)
                if (!tit->second.at({a, b}).contains(sit->second.at({a, b}).apply(op)))
                    return false;
        return true;
    };

    return check(mods[0], {0, 0}, model.n1, mods[1], {1, 0}) &&
           check(mods[0], {0, 0}, model.n2, mods[1], {0, 1}) &&
           check(mods[1], {1, 0}, model.n2, mods[2], {1, 1}) &&
           check(mods[1], {0, 1}, model.n1, mods[2], {1, 1});
}

}  // namespace pms
