#include "pms/rep_decomp.hpp"

#include "pms/schur.hpp"

namespace pms {

void RepExpr::add(const std::string& tag, int k) {
    mult[tag] += k;
    if (mult[tag] == 0) mult.erase(tag);
}

int rep_tag_dim(const std::string& tag) {
    if (tag == "triv") return 1;
    if (tag == "V1" || tag == "V2" || tag == "L2V1" || tag == "L2V2") return 3;
    if (tag == "S2V1" || tag == "S2V2") return 6;
    if (tag == "End0V1") return 8;
    throw OutOfRange("unknown summand tag " + tag);
}

int rep_tag_cm_exponent(const std::string& tag) {
    if (tag == "triv" || tag == "End0V1") return 0;
    if (tag == "V1" || tag == "L2V2" || tag == "S2V2") return 1;
    if (tag == "V2" || tag == "L2V1" || tag == "S2V1") return 2;
    throw OutOfRange("unknown summand tag " + tag);
}

Int RepExpr::dim() const {
    Int d = 0;
    for (const auto& [tag, k] : mult) d += Int(k) * rep_tag_dim(tag);
    return d;
}

std::string RepExpr::str() const {
    std::string s;
    for (const auto& [tag, k] : mult) {
        if (!s.empty()) s += " + ";
        if (k != 1) s += std::to_string(k) + "*";
        s += tag;
    }
    return s.empty() ? "0" : s;
}

/* Tag for Lambda^a of one piece appearing alone (tensored only with
 * Lambda^0 or Lambda^3 of the other piece, both trivial). */
static std::string pure_wedge_tag(int a, int piece) {
    std::string v = piece == 1 ? "V1" : "V2";
    switch (a) {
        case 0:
        case 3: return "triv";
        case 1: return v;
        case 2: return "L2" + v;
    }
    throw OutOfRange("wedge power out of range");
}

/* Littlewood-Richardson multiplicities of a mixed product, translated back
 * to summand tags.  The dictionary keying the translation: as rank-3 Schur
 * functors of V1, the conjugate piece V2 behaves as Lambda^2 V1 and
 * Lambda^2 V2 behaves as V1, and a full column (1,1,1) is trivial. */
static RepExpr mixed_product(int a, int b) {
    auto run = [](const Partition& lam, const Partition& mu,
                  const std::map<Partition, std::string>& dict) {
        RepExpr out;
        for (const auto& [nu, coeff] : decompose_product(lam, mu, 3)) {
            auto it = dict.find(nu);
            if (it == dict.end())
                throw std::logic_error("unexpected constituent " + partition_str(nu));
            out.add(it->second, static_cast<int>(coeff));
        }
        return out;
    };
    if (a == 1 && b == 1)
        return run({1}, {1, 1}, {{{2, 1}, "End0V1"}, {{1, 1, 1}, "triv"}});
    if (a == 2 && b == 2)
        return run({1, 1}, {1}, {{{2, 1}, "End0V1"}, {{1, 1, 1}, "triv"}});
    if (a == 1 && b == 2)
        return run({1}, {1}, {{{2}, "S2V1"}, {{1, 1}, "L2V1"}});
    if (a == 2 && b == 1)
        return run({1, 1}, {1, 1}, {{{2, 2}, "S2V2"}, {{2, 1, 1}, "L2V2"}});
    throw OutOfRange("mixed product out of range");
}

RepExpr decompose_lambda_k(int k) {
    if (k < 0 || k > 6) throw OutOfRange("exterior power degree must lie in [0,6]");
    RepExpr out;
    for (int a = 0; a <= 3; ++a) {
        int b = k - a;
        if (b < 0 || b > 3) continue;
        bool a_pure = (a == 0 || a == 3);
        bool b_pure = (b == 0 || b == 3);
        if (a_pure && b_pure) {
            out.add("triv");
        } else if (a_pure) {
            out.add(pure_wedge_tag(b, 2));
        } else if (b_pure) {
            out.add(pure_wedge_tag(a, 1));
        } else {
            RepExpr mixed = mixed_product(a, b);
            for (const auto& [tag, m] : mixed.mult) out.add(tag, m);
        }
    }
    return out;
}

int trivial_summand_count(int k) {
    RepExpr e = decompose_lambda_k(k);
    auto it = e.mult.find("triv");
    return it == e.mult.end() ? 0 : it->second;
}

}  // namespace pms
