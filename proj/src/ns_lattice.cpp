#include "pms/ns_lattice.hpp"

namespace pms {

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.ambient != y.ambient) throw AmbientMismatch("divisor classes live on different surfaces");
    DivisorClass z = x;
    for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] += y.c[i];
    return z;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.ambient != y.ambient) throw AmbientMismatch("divisor classes live on different surfaces");
    DivisorClass z = x;
    for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] -= y.c[i];
    return z;
}

DivisorClass DivisorClass::operator*(const Int& n) const {
    DivisorClass z = *this;
    for (auto& v : z.c) v *= n;
    return z;
}

std::string DivisorClass::str() const {
    static const char* prod_names[] = {"T1", "Tw", "A", "B"};
    static const char* blow_names[] = {"T1", "Tw", "A", "B", "Z1", "Z2", "Z3"};
    const char** names = (ambient == Ambient::Product) ? prod_names : blow_names;
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " ";
        s += (c[i] > 0 ? "+" : "-") + Int(boost::multiprecision::abs(c[i])).str() + "*" + names[i];
    }
    return s.empty() ? "0" : s;
}

DivisorClass product_class(Int t1, Int tw, Int a, Int b) {
    return DivisorClass{Ambient::Product, {std::move(t1), std::move(tw), std::move(a), std::move(b)}};
}

DivisorClass blowup_class(Int t1, Int tw, Int a, Int b, Int z1, Int z2, Int z3) {
    return DivisorClass{Ambient::Blowup,
                        {std::move(t1), std::move(tw), std::move(a), std::move(b),
                         std::move(z1), std::move(z2), std::move(z3)}};
}

QMat gram_matrix(Ambient amb) {
    /* Product block: distinct basis curves meet once except T1.Tw = 3;
     * each basis curve has self-intersection 0. */
    QMat g4{{Rat(0), Rat(3), Rat(1), Rat(1)},
            {Rat(3), Rat(0), Rat(1), Rat(1)},
            {Rat(1), Rat(1), Rat(0), Rat(1)},
            {Rat(1), Rat(1), Rat(1), Rat(0)}};
    if (amb == Ambient::Product) return g4;
    QMat g7(7, 7);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g7.at(i, j) = g4.at(i, j);
    for (std::size_t i = 4; i < 7; ++i) g7.at(i, i) = Rat(-1);
    return g7;
}

Int intersect(const DivisorClass& x, const DivisorClass& y) {
    if (x.ambient != y.ambient) throw AmbientMismatch("intersection of classes on different surfaces");
    QMat g = gram_matrix(x.ambient);
    Int total = 0;
    for (std::size_t i = 0; i < x.c.size(); ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < y.c.size(); ++j) {
            if (y.c[j] == 0) continue;
            total += x.c[i] * y.c[j] * rat_to_int(g.at(i, j));
        }
    }
    return total;
}

DivisorClass graph_class(const Eisenstein& phi) {
    QMat g = gram_matrix(Ambient::Product);
    QVec rhs = {Rat((phi - Eisenstein::one()).norm()),
                Rat((phi - Eisenstein::omega()).norm()),
                Rat(1),
                Rat(phi.norm())};
    QVec x = g.solve(rhs);
    DivisorClass d{Ambient::Product, {}};
    for (const auto& v : x) {
        if (!v.is_integer())
            throw NonIntegralSolution("graph class has non-integral coefficient " + v.str());
        d.c.push_back(v.num);
    }
    return d;
}

DivisorClass pullback(const DivisorClass& x) {
    if (x.ambient != Ambient::Product) throw AmbientMismatch("pullback expects a product class");
    return blowup_class(x.c[0], x.c[1], x.c[2], x.c[3], 0, 0, 0);
}

std::optional<DivisorClass> divide(const DivisorClass& x, const Int& n) {
    if (n == 0) throw ZeroDivisor("division of a divisor class by zero");
    DivisorClass z = x;
    for (auto& v : z.c) {
        if (v % n != 0) return std::nullopt;
        v /= n;
    }
    return z;
}

bool verify_relation(const DivisorClass& lhs, const DivisorClass& rhs) {
    if (lhs.ambient != rhs.ambient) throw AmbientMismatch("relation compares different surfaces");
    return lhs == rhs;
}

std::map<std::string, DivisorClass> strict_transform_catalog() {
    std::map<std::string, DivisorClass> cat;
    DivisorClass t1 = pullback(graph_class(Eisenstein::one()));
    DivisorClass tw = pullback(graph_class(Eisenstein::omega()));
    DivisorClass tw2 = pullback(graph_class(Eisenstein::omega_sq()));
    DivisorClass a = blowup_class(0, 0, 1, 0, 0, 0, 0);
    DivisorClass b = blowup_class(0, 0, 0, 1, 0, 0, 0);
    DivisorClass z1 = blowup_class(0, 0, 0, 0, 1, 0, 0);
    DivisorClass z2 = blowup_class(0, 0, 0, 0, 0, 1, 0);
    DivisorClass z3 = blowup_class(0, 0, 0, 0, 0, 0, 1);
    DivisorClass z = z1 + z2 + z3;
    cat["T1"] = t1;
    cat["Tw"] = tw;
    cat["Tw2"] = tw2;
    cat["A"] = a;
    cat["B"] = b;
    cat["Z1"] = z1;
    cat["Z2"] = z2;
    cat["Z3"] = z3;
    cat["Z"] = z;
    /* Each graph passes through all three blown-up diagonal points, so its
     * strict transform drops the whole exceptional sum Z.  Each ruling curve
     * passes through exactly one of them. */
    cat["D1"] = t1 - z;
    cat["D2"] = tw - z;
    cat["D3"] = tw2 - z;
    cat["D0"] = a - z1;
    cat["D4"] = b - z1;
    cat["D5"] = b - z2;
    cat["D6"] = b - z3;
    cat["D"] = cat["D1"] + cat["D2"] + cat["D3"] + cat["D4"] + cat["D5"] + cat["D6"];
    /* The product surface is abelian, so the blowup's canonical class is
     * exactly the exceptional sum. */
    cat["K"] = z;
    cat["KD"] = cat["K"] + cat["D"];
    cat["L"] = a - z + b * 2;
    return cat;
}

DivisorClass canonical_plus_boundary() {
    auto cat = strict_transform_catalog();
    return cat.at("KD");
}

PositivityReport positivity_report(const DivisorClass& x) {
    if (x.ambient != Ambient::Blowup)
        throw AmbientMismatch("positivity report expects a blowup class");
    auto cat = strict_transform_catalog();
    PositivityReport rep;
    rep.self_int = intersect(x, x);
    for (const char* name : {"D0", "D1", "D2", "D3", "D4", "D5", "D6", "Z1", "Z2", "Z3"})
        rep.degrees[name] = intersect(x, cat.at(name));
    return rep;
}

}  // namespace pms
