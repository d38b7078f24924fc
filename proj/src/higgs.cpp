#include "pms/higgs.hpp"

#include <algorithm>

namespace pms {

std::string Monomial::serialize() const {
    std::vector<std::string> parts;
    if (s == 1) parts.push_back("W");
    else if (s >= 2) parts.push_back("S" + std::to_string(s) + "W");
    if (l != 0) parts.push_back("L^" + std::to_string(l));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::string Monomial::serialize_twisted() const {
    std::vector<std::string> parts;
    if (s == 1) parts.push_back("W(-D)");
    else if (s >= 2) parts.push_back("S" + std::to_string(s) + "W(-D)");
    if (l != 0) parts.push_back("L^" + std::to_string(l));
    if (parts.empty()) return "1";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
    return out;
}

std::vector<int> RealizedHiggs::piece_ranks() const {
    std::vector<int> r;
    for (const auto& p : pieces) r.push_back(p.m.fiber_dim());
    return r;
}

int RealizedHiggs::rank() const {
    int total = 0;
    for (const auto& p : pieces) total += p.m.fiber_dim();
    return total;
}

bool operator==(const RealizedHiggs& a, const RealizedHiggs& b) {
    if (a.pieces.size() != b.pieces.size()) return false;
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        if (a.pieces[i].m != b.pieces[i].m || a.pieces[i].p != b.pieces[i].p ||
            a.pieces[i].q != b.pieces[i].q)
            return false;
    }
    return a.theta == b.theta;
}

RealizedHiggs uniformizing() {
    RealizedHiggs h;
    h.pieces = {{Monomial(1, -1), 1, 0}, {Monomial(0, -1), 0, 1}};
    QMat tx(1, 2), ty(1, 2);
    tx.at(0, 0) = Rat(1);
    ty.at(0, 1) = Rat(1);
    h.theta[{0, 1}] = {tx, ty};
    return h;
}

RealizedHiggs sym_power(const RealizedHiggs& e, int n) {
    if (!(e == uniformizing()))
        throw std::invalid_argument("sym_power is realized for the uniformizing bundle");
    if (n < 1) throw std::invalid_argument("sym_power: exponent must be positive");
    RealizedHiggs h;
    for (int k = 0; k <= n; ++k) {
        int a = n - k;
        h.pieces.push_back({Monomial(a, -n), a, n - a});
    }
    /* theta acts as a derivation: it lowers the symmetric degree in the
     * first factor by one and emits the matching form coordinate. */
    for (int k = 0; k < n; ++k) {
        int a = n - k;
        QMat tx(a, a + 1), ty(a, a + 1);
        for (int i = 0; i <= a; ++i) {
            if (i <= a - 1) tx.at(i, i) = Rat(a - i);
            if (i >= 1) ty.at(i - 1, i) = Rat(i);
        }
        h.theta[{k, k + 1}] = {tx, ty};
    }
    return h;
}

namespace {

/* Flattened 3x3 matrices over the fiber of the uniformizing bundle with
 * ordered basis (X, Y, Z) = (x-part of W x L^{-1}, y-part, L^{-1}). */
QVec unit_mat(int r, int c) {
    QVec v(9);
    v[static_cast<std::size_t>(3 * r + c)] = Rat(1);
    return v;
}

QVec mat_commutator(const QMat& t, const QVec& u) {
    QMat um(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) um.at(i, j) = u[static_cast<std::size_t>(3 * i + j)];
    QMat c = t * um - um * t;
    QVec out(9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(3 * i + j)] = c.at(i, j);
    return out;
}

}  // namespace

RealizedHiggs end0(const RealizedHiggs& e) {
    if (!(e == uniformizing()))
        throw std::invalid_argument("end0 is realized for the uniformizing bundle");
    /* Adapted basis of trace-free endomorphisms, grouped by Hodge degree:
     *   p = +1: h_x = X Z*, h_y = Y Z*                      (W)
     *   p =  0: s2x = X Y*, s1 = (Y Y* - X X*)/2, s0 = -Y X* (S^2 W x L^-3)
     *           t0 = X X* + Y Y* - 2 Z Z*                    (trivial)
     *   p = -1: g_x = Z Y*, g_y = -Z X*                      (W x L^-3)
     * s2x, s1, s0 match the S^2 W basis (x^2, xy, y^2) and g_x, g_y match
     * the W basis (x, y) under contraction with the wedge form. */
    std::vector<std::vector<QVec>> piece_basis = {
        {unit_mat(0, 2), unit_mat(1, 2)},
        {unit_mat(0, 1), qvec_scale(Rat(1, 2), qvec_add(qvec_scale(Rat(-1), unit_mat(0, 0)), unit_mat(1, 1))),
         qvec_scale(Rat(-1), unit_mat(1, 0))},
        {qvec_add(qvec_add(unit_mat(0, 0), unit_mat(1, 1)), qvec_scale(Rat(-2), unit_mat(2, 2)))},
        {unit_mat(2, 1), qvec_scale(Rat(-1), unit_mat(2, 0))}};

    RealizedHiggs h;
    h.pieces = {{Monomial(1, 0), 1, -1},
                {Monomial(2, -3), 0, 0},
                {Monomial(0, 0), 0, 0},
                {Monomial(1, -3), -1, 1}};

    /* Solve coordinates in the adapted basis extended by the identity. */
    std::vector<QVec> cols;
    for (const auto& pb : piece_basis)
        for (const auto& v : pb) cols.push_back(v);
    cols.push_back(qvec_add(qvec_add(unit_mat(0, 0), unit_mat(1, 1)), unit_mat(2, 2)));
    QMat basis_mat(9, 9);
    for (std::size_t j = 0; j < 9; ++j)
        for (std::size_t i = 0; i < 9; ++i) basis_mat.at(i, j) = cols[j][i];

    QMat tx3(3, 3), ty3(3, 3);
    tx3.at(2, 0) = Rat(1);
    ty3.at(2, 1) = Rat(1);

    std::vector<std::size_t> piece_offset = {0, 2, 5, 6};
    std::vector<std::size_t> piece_dim = {2, 3, 1, 2};
    auto block_row_range = [&](std::size_t t) {
        return std::make_pair(piece_offset[t], piece_offset[t] + piece_dim[t]);
    };

    for (std::size_t src = 0; src < 4; ++src) {
        std::vector<QMat> tx_blocks, ty_blocks;
        for (std::size_t t = 0; t < 4; ++t) {
            tx_blocks.emplace_back(piece_dim[t], piece_dim[src]);
            ty_blocks.emplace_back(piece_dim[t], piece_dim[src]);
        }
        for (std::size_t col = 0; col < piece_dim[src]; ++col) {
            for (int part = 0; part < 2; ++part) {
                const QMat& t3 = part == 0 ? tx3 : ty3;
                QVec image = mat_commutator(t3, piece_basis[src][col]);
                QVec coords = basis_mat.solve(image);
                if (!coords[8].is_zero())
                    throw std::logic_error("end0: commutator left the trace-free subspace");
                for (std::size_t t = 0; t < 4; ++t) {
                    auto [lo, hi] = block_row_range(t);
                    for (std::size_t r = lo; r < hi; ++r) {
                        QMat& blk = part == 0 ? tx_blocks[t] : ty_blocks[t];
                        blk.at(r - lo, col) = coords[r];
                    }
                }
            }
        }
        for (std::size_t t = 0; t < 4; ++t) {
            if (tx_blocks[t].is_zero() && ty_blocks[t].is_zero()) continue;
            if (h.pieces[t].p != h.pieces[src].p - 1)
                throw std::logic_error("end0: Higgs field does not lower the Hodge degree by one");
            h.theta[{static_cast<int>(src), static_cast<int>(t)}] = {tx_blocks[t], ty_blocks[t]};
        }
    }
    return h;
}

std::array<std::vector<std::string>, 3> HComplex::serialize() const {
    std::array<std::vector<std::string>, 3> out;
    for (int k = 0; k < 3; ++k)
        for (const auto& m : obj[k]) out[k].push_back(m.serialize());
    return out;
}

std::array<int, 3> HComplex::degree_dims() const {
    std::array<int, 3> dims{0, 0, 0};
    for (int k = 0; k < 3; ++k)
        for (const auto& m : obj[k]) dims[k] += m.fiber_dim();
    return dims;
}

int HComplex::euler() const {
    auto d = degree_dims();
    return d[0] - d[1] + d[2];
}

namespace {

struct Occurrence {
    Monomial m;
    int piece;
    int refine; /* +1 symmetric part, -1 wedge part, 0 unrefined */
};

/* Inclusion of the symmetric part S^{s+1} W into S^s W x W; target
 * coordinates are indexed (monomial j, form part w) as 2*j + w. */
QMat incl_sym(int s) {
    QMat m(2 * (s + 1), s + 2);
    for (int t = 0; t <= s + 1; ++t) {
        if (t <= s) m.at(2 * t + 0, t) = Rat(s + 1 - t);
        if (t >= 1) m.at(2 * (t - 1) + 1, t) = Rat(t);
    }
    return m;
}

/* Inclusion of the wedge part S^{s-1} W x Lambda^2 W: u -> (u x) (x) y - (u y) (x) x. */
QMat incl_wedge(int s) {
    QMat m(2 * (s + 1), s);
    for (int t = 0; t <= s - 1; ++t) {
        m.at(2 * t + 1, t) = Rat(1);
        m.at(2 * (t + 1) + 0, t) = Rat(-1);
    }
    return m;
}

QMat proj_sym(int s) {
    QMat m(s + 2, 2 * (s + 1));
    for (int j = 0; j <= s; ++j) {
        m.at(j, 2 * j + 0) = Rat(1, s + 1);
        m.at(j + 1, 2 * j + 1) = Rat(1, s + 1);
    }
    return m;
}

QMat proj_wedge(int s) {
    QMat m(s, 2 * (s + 1));
    for (int j = 0; j <= s; ++j) {
        if (j >= 1) m.at(j - 1, 2 * j + 0) = Rat(-j, s + 1);
        if (j <= s - 1) m.at(j, 2 * j + 1) = Rat(s - j, s + 1);
    }
    return m;
}

/* theta as a single matrix fiber(src) -> fiber(tgt) x W. */
QMat theta_into_w(const RealizedHiggs& h, int src, int tgt) {
    auto it = h.theta.find({src, tgt});
    int sd = h.pieces[static_cast<std::size_t>(src)].m.fiber_dim();
    int td = h.pieces[static_cast<std::size_t>(tgt)].m.fiber_dim();
    QMat m(2 * td, sd);
    if (it == h.theta.end()) return m;
    const auto& [tx, ty] = it->second;
    for (int i = 0; i < td; ++i)
        for (int j = 0; j < sd; ++j) {
            m.at(2 * i + 0, j) = tx.at(i, j);
            m.at(2 * i + 1, j) = ty.at(i, j);
        }
    return m;
}

/* Wedging the form coordinate of fiber(src) x W against theta:
 * e (x) x -> -ty(e), e (x) y -> tx(e), valued in fiber(tgt) x Lambda^2 W. */
QMat theta_wedge(const RealizedHiggs& h, int src, int tgt) {
    auto it = h.theta.find({src, tgt});
    int sd = h.pieces[static_cast<std::size_t>(src)].m.fiber_dim();
    int td = h.pieces[static_cast<std::size_t>(tgt)].m.fiber_dim();
    QMat m(td, 2 * sd);
    if (it == h.theta.end()) return m;
    const auto& [tx, ty] = it->second;
    for (int i = 0; i < td; ++i)
        for (int j = 0; j < sd; ++j) {
            m.at(i, 2 * j + 0) = -ty.at(i, j);
            m.at(i, 2 * j + 1) = tx.at(i, j);
        }
    return m;
}

Label classify(const QMat& m, const Monomial& src, const Monomial& tgt) {
    if (m.is_zero()) return Label::Zero;
    if (src != tgt)
        throw std::logic_error("nonzero map between distinct monomials " + src.serialize() +
                               " and " + tgt.serialize());
    if (!m.is_square() || m.rank() != m.rows())
        throw std::logic_error("nonzero non-invertible map on monomial " + src.serialize());
    return Label::Iso;
}

}  // namespace

HComplex build_complex(const RealizedHiggs& h) {
    std::vector<Occurrence> occ0, occ1, occ2;
    std::size_t np = h.pieces.size();
    for (std::size_t i = 0; i < np; ++i) {
        const Monomial& m = h.pieces[i].m;
        occ0.push_back({m, static_cast<int>(i), 0});
        if (m.s >= 1) {
            occ1.push_back({Monomial(m.s + 1, m.l), static_cast<int>(i), +1});
            occ1.push_back({Monomial::with_wedge(m.s - 1, 1, m.l), static_cast<int>(i), -1});
        } else {
            occ1.push_back({Monomial(1, m.l), static_cast<int>(i), +1});
        }
        occ2.push_back({Monomial::with_wedge(m.s, 1, m.l), static_cast<int>(i), 0});
    }

    /* Explicit entry matrices for both differentials. */
    std::vector<std::vector<QMat>> d0mat(occ0.size(), std::vector<QMat>(occ1.size()));
    std::vector<std::vector<QMat>> d1mat(occ1.size(), std::vector<QMat>(occ2.size()));

    for (std::size_t a = 0; a < occ0.size(); ++a)
        for (std::size_t b = 0; b < occ1.size(); ++b) {
            int i = occ0[a].piece, j = occ1[b].piece;
            int sj = h.pieces[static_cast<std::size_t>(j)].m.s;
            QMat theta = theta_into_w(h, i, j);
            QMat proj = occ1[b].refine == +1
                            ? (sj >= 1 ? proj_sym(sj) : QMat::identity(2))
                            : proj_wedge(sj);
            d0mat[a][b] = proj * theta;
        }
    for (std::size_t b = 0; b < occ1.size(); ++b)
        for (std::size_t c = 0; c < occ2.size(); ++c) {
            int i = occ1[b].piece, j = occ2[c].piece;
            int si = h.pieces[static_cast<std::size_t>(i)].m.s;
            QMat incl = occ1[b].refine == +1
                            ? (si >= 1 ? incl_sym(si) : QMat::identity(2))
                            : incl_wedge(si);
            d1mat[b][c] = theta_wedge(h, i, j) * incl;
        }

    /* The square of the differential must be the zero matrix. */
    for (std::size_t a = 0; a < occ0.size(); ++a)
        for (std::size_t c = 0; c < occ2.size(); ++c) {
            QMat total(d1mat[0][c].rows(), d0mat[a][0].cols());
            for (std::size_t b = 0; b < occ1.size(); ++b)
                total = total + d1mat[b][c] * d0mat[a][b];
            if (!total.is_zero())
                throw SquareNotZero("matrix-level square of the differential is nonzero from " +
                                    occ0[a].m.serialize() + " to " + occ2[c].m.serialize());
        }

    HComplex c;
    for (const auto& o : occ0) c.obj[0].push_back(o.m);
    for (const auto& o : occ1) c.obj[1].push_back(o.m);
    for (const auto& o : occ2) c.obj[2].push_back(o.m);
    c.d[0].assign(occ0.size(), std::vector<Label>(occ1.size(), Label::Zero));
    c.d[1].assign(occ1.size(), std::vector<Label>(occ2.size(), Label::Zero));
    for (std::size_t a = 0; a < occ0.size(); ++a)
        for (std::size_t b = 0; b < occ1.size(); ++b)
            c.d[0][a][b] = classify(d0mat[a][b], occ0[a].m, occ1[b].m);
    for (std::size_t b = 0; b < occ1.size(); ++b)
        for (std::size_t j = 0; j < occ2.size(); ++j)
            c.d[1][b][j] = classify(d1mat[b][j], occ1[b].m, occ2[j].m);

    /* Label-level square check: a single nonzero path from a degree-0 term
     * to a degree-2 term cannot cancel. */
    for (std::size_t a = 0; a < occ0.size(); ++a)
        for (std::size_t j = 0; j < occ2.size(); ++j) {
            int paths = 0;
            for (std::size_t b = 0; b < occ1.size(); ++b)
                if (c.d[0][a][b] != Label::Zero && c.d[1][b][j] != Label::Zero) ++paths;
            if (paths == 1)
                throw SquareNotZero("label-level square has a lone nonzero path from " +
                                    occ0[a].m.serialize() + " to " + occ2[j].m.serialize());
        }
    return c;
}

namespace {

void erase_obj(HComplex& c, int deg, std::size_t idx) {
    c.obj[deg].erase(c.obj[deg].begin() + static_cast<std::ptrdiff_t>(idx));
    if (deg == 0) {
        c.d[0].erase(c.d[0].begin() + static_cast<std::ptrdiff_t>(idx));
    } else if (deg == 1) {
        for (auto& row : c.d[0]) row.erase(row.begin() + static_cast<std::ptrdiff_t>(idx));
        c.d[1].erase(c.d[1].begin() + static_cast<std::ptrdiff_t>(idx));
    } else {
        for (auto& row : c.d[1]) row.erase(row.begin() + static_cast<std::ptrdiff_t>(idx));
    }
}

/* A contraction of the iso at (s, t) in d[k] is legal iff every correction
 * term it would introduce has a zero factor. */
bool contraction_legal(const HComplex& c, int k, std::size_t s, std::size_t t) {
    for (std::size_t i = 0; i < c.d[k].size(); ++i) {
        if (i == s || c.d[k][i][t] == Label::Zero) continue;
        for (std::size_t j = 0; j < c.d[k][s].size(); ++j) {
            if (j == t || c.d[k][s][j] == Label::Zero) continue;
            return false;
        }
    }
    return true;
}

void contract(HComplex& c, int k, std::size_t s, std::size_t t) {
    erase_obj(c, k + 1, t);
    erase_obj(c, k, s);
}

}  // namespace

HComplex reduce(const HComplex& c) {
    HComplex r = c;
    for (;;) {
        bool found_iso = false;
        bool contracted = false;
        for (int k = 0; k < 2 && !contracted; ++k)
            for (std::size_t s = 0; s < r.d[k].size() && !contracted; ++s)
                for (std::size_t t = 0; t < r.d[k][s].size() && !contracted; ++t) {
                    if (r.d[k][s][t] != Label::Iso) continue;
                    found_iso = true;
                    if (contraction_legal(r, k, s, t)) {
                        contract(r, k, s, t);
                        contracted = true;
                    }
                }
        if (contracted) continue;
        if (found_iso)
            throw NonzeroCorrection("every remaining iso contraction introduces a nonzero correction");
        break;
    }
    for (int k = 0; k < 2; ++k)
        for (const auto& row : r.d[k])
            for (Label l : row)
                if (l != Label::Zero)
                    throw HiggsError("complex does not reduce to zero differentials");
    return r;
}

std::vector<HypercohTerm> hypercoh(const HComplex& reduced, const AxiomRegistry& reg) {
    for (int k = 0; k < 2; ++k)
        for (const auto& row : reduced.d[k])
            for (Label l : row)
                if (l != Label::Zero)
                    throw std::invalid_argument("hypercoh expects a fully reduced complex");
    std::vector<HypercohTerm> terms;
    for (int total = 0; total <= 4; ++total)
        for (int deg = 0; deg < 3; ++deg) {
            int q = total - deg;
            if (q < 0 || q > 2) continue;
            for (const auto& m : reduced.obj[deg]) {
                HypercohTerm t;
                t.total_degree = total;
                t.complex_degree = deg;
                t.coh_degree = q;
                t.group = "h" + std::to_string(q) + "(" + m.serialize() + ")";
                if (auto ax = reg.find_group(m.serialize())) {
                    std::optional<int> dim;
                    if (q == 0) dim = ax->h0;
                    if (q == 1) dim = ax->h1;
                    if (dim.has_value()) {
                        t.dim = dim;
                        t.axiom_id = ax->id;
                    }
                }
                terms.push_back(std::move(t));
            }
        }
    return terms;
}

L2Outcome l2_refine(const HComplex& reduced, const VanishingCertificate& cert,
                    const AxiomRegistry& reg) {
    L2Outcome out;
    if (!cert.valid) {
        out.verdict = L2Verdict::Unknown;
        out.notes.push_back("certificate invalid: " + cert.note);
        return out;
    }

    if (cert.kind == VanishingCertificate::Kind::GlobalH1) {
        /* The whole first L2 cohomology vanishes, so every constituent does. */
        out.verdict = L2Verdict::Vanishes;
        out.axioms_used = cert.axioms_used;
        for (int deg = 0; deg < 2; ++deg) {
            int q = 1 - deg;
            for (const auto& m : reduced.obj[deg]) {
                LocatedTerm lt;
                lt.group = m.serialize();
                lt.complex_degree = deg;
                lt.conclusion = "h" + std::to_string(q) + "_L2(" + m.serialize() + ") = 0";
                if (deg == 1 && m.s >= 1) {
                    lt.twisted_form = m.serialize_twisted();
                    lt.twist_note =
                        "the (-D) twist is imported from the boundary integrability "
                        "condition, not derived at label level";
                }
                out.located.push_back(std::move(lt));
            }
        }
        return out;
    }

    /* H0Chase: resolve each constituent of the first hypercohomology. */
    bool all_zero = true;
    bool all_resolved = true;
    int total_bound = 0;
    auto use_axiom = [&](const std::string& id) {
        if (std::find(out.axioms_used.begin(), out.axioms_used.end(), id) == out.axioms_used.end())
            out.axioms_used.push_back(id);
    };
    for (int deg = 0; deg < 2; ++deg) {
        int q = 1 - deg;
        for (const auto& m : reduced.obj[deg]) {
            std::string g = m.serialize();
            std::optional<int> dim;
            if (auto ax = reg.find_group(g)) {
                dim = (q == 0) ? ax->h0 : ax->h1;
                if (dim.has_value()) use_axiom(ax->id);
            }
            if (!dim.has_value() && q == 0 && g == cert.target_group) {
                dim = cert.h0_bound;
                for (const auto& id : cert.axioms_used) use_axiom(id);
                LocatedTerm lt;
                lt.group = g;
                lt.complex_degree = deg;
                lt.conclusion = "h0_L2(" + g + ") <= " + std::to_string(cert.h0_bound);
                out.located.push_back(std::move(lt));
            }
            if (!dim.has_value()) {
                all_resolved = false;
                out.notes.push_back("unresolved term h" + std::to_string(q) + "(" + g + ")");
                continue;
            }
            if (dim.value() != 0) all_zero = false;
            total_bound += dim.value();
        }
    }
    if (!all_resolved) {
        out.verdict = L2Verdict::Unknown;
    } else if (all_zero) {
        out.verdict = L2Verdict::Vanishes;
    } else {
        out.verdict = L2Verdict::BoundedBy;
        out.bound = total_bound;
    }
    return out;
}

}  // namespace pms
