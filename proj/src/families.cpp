#include "repairforge/families.hpp"

#include "repairforge/errors.hpp"

#include <string>
#include <vector>

namespace repairforge {

Fact dnFact(std::size_t i, std::size_t j) {
    // t_{i1} = r(a, b_i); t_{i2} = r(a_i, b_i); t_{i3} = r(a_i, b_i')
    std::string ai = "a_" + std::to_string(i);
    std::string bi = "b_" + std::to_string(i);
    switch (j) {
        case 1: return Fact{"r", {Value::symbol("a"), Value::symbol(bi)}};
        case 2: return Fact{"r", {Value::symbol(ai), Value::symbol(bi)}};
        case 3: return Fact{"r", {Value::symbol(ai), Value::symbol(bi + "p")}};
        default: throw Error("dnFact: j must be 1, 2 or 3");
    }
}

FamilyInstance generate(const FamilySpec& spec) {
    FamilyInstance out;
    switch (spec.family) {
        case FamilySpec::Family::DnTwoKeys: {
            if (spec.n < 1) throw Error("DnTwoKeys: n must be positive");
            for (std::size_t i = 1; i <= spec.n; ++i) {
                for (std::size_t j = 1; j <= 3; ++j) out.db.insert(dnFact(i, j));
            }
            out.constraints = parseConstraints("KEY r: 1.\nKEY r: 2.\n", &out.db.schema());
            break;
        }
        case FamilySpec::Family::OneFdExponential: {
            if (spec.n < 1) throw Error("OneFdExponential: n must be positive");
            for (std::size_t i = 1; i <= spec.n; ++i) {
                std::string bi = "b_" + std::to_string(i);
                out.db.insert(Fact{"r", {Value::symbol("a"), Value::symbol(bi),
                                         Value::symbol("c_1")}});
                out.db.insert(Fact{"r", {Value::symbol("a"), Value::symbol(bi),
                                         Value::symbol("c_2")}});
            }
            out.constraints = parseConstraints("FD r: 1 -> 2.\n", &out.db.schema());
            break;
        }
        case FamilySpec::Family::OneKeyCliques: {
            if (spec.cliqueSizes.empty()) throw Error("OneKeyCliques: need clique sizes");
            std::size_t clique = 0;
            for (std::size_t size : spec.cliqueSizes) {
                if (size < 1) throw Error("OneKeyCliques: clique sizes must be positive");
                ++clique;
                std::string key = "k_" + std::to_string(clique);
                for (std::size_t i = 1; i <= size; ++i) {
                    out.db.insert(Fact{"r", {Value::symbol(key),
                                             Value::symbol("v_" + std::to_string(clique) + "_" +
                                                           std::to_string(i))}});
                }
            }
            out.constraints = parseConstraints("KEY r: 1.\n", &out.db.schema());
            break;
        }
    }
    return out;
}

std::size_t expectedSize(const FamilySpec& spec, RepairKind semantics) {
    switch (spec.family) {
        case FamilySpec::Family::DnTwoKeys: {
            std::size_t n = spec.n;
            std::size_t pow = std::size_t(1) << n;
            if (semantics == RepairKind::SRepair) {
                return 2 * n + (n + 1) * n * (pow / 2);  // 2n + (n+1) * n * 2^(n-1)
            }
            return 2 * n + n * pow;  // 2n + n * 2^n
        }
        case FamilySpec::Family::OneFdExponential:
            // equal cluster cardinalities: both semantics coincide
            return spec.n * (std::size_t(1) << spec.n);
        case FamilySpec::Family::OneKeyCliques: {
            std::size_t total = 0;  // one key: ||D_min|| = |r| under either semantics
            for (std::size_t s : spec.cliqueSizes) total += s;
            return total;
        }
    }
    throw Error("expectedSize: unsupported family");
}

DisjunctiveDatabase closedFormDn(std::size_t n, RepairKind semantics) {
    if (n < 1) throw Error("closedFormDn: n must be positive");
    std::vector<Disjunction> disjunctions;
    for (std::size_t i = 1; i <= n; ++i) {
        disjunctions.push_back({dnFact(i, 2), dnFact(i, 3)});
    }
    if (semantics == RepairKind::SRepair) {
        // { t_i1 v t_i2 v V_{z != i} t_z  |  t_z in {t_z1, t_z3} }
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t others = n - 1;
            for (std::size_t bits = 0; bits < (std::size_t(1) << others); ++bits) {
                Disjunction d{dnFact(i, 1), dnFact(i, 2)};
                std::size_t b = 0;
                for (std::size_t z = 1; z <= n; ++z) {
                    if (z == i) continue;
                    d.insert(dnFact(z, (bits >> b) & 1 ? 3 : 1));
                    ++b;
                }
                disjunctions.push_back(std::move(d));
            }
        }
    } else {
        // { t_1 v ... v t_n  |  t_i in {t_i1, t_i3} }
        for (std::size_t bits = 0; bits < (std::size_t(1) << n); ++bits) {
            Disjunction d;
            for (std::size_t i = 1; i <= n; ++i) {
                d.insert(dnFact(i, (bits >> (i - 1)) & 1 ? 3 : 1));
            }
            disjunctions.push_back(std::move(d));
        }
    }
    return DisjunctiveDatabase(std::move(disjunctions));
}

}  // namespace repairforge
