#include "whirl/ppartition.hpp"

#include <algorithm>
#include <stdexcept>

namespace whirl {

bool is_ppartition(const Poset& P, const PPartition& f) {
    if (static_cast<int>(f.labels.size()) != P.size() || f.bound < 0) return false;
    for (int x = 0; x < P.size(); ++x) {
        if (f.labels[x] < 0 || f.labels[x] > f.bound) return false;
        for (int y : P.covers_above(x))
            if (f.labels[x] < f.labels[y]) return false;
    }
    return true;
}

namespace {
// Order-reversing locally at x against its Hasse neighbors.
bool label_fits(const Poset& P, const std::vector<int>& labels, int x, int v) {
    for (int y : P.covers_above(x))
        if (v < labels[y]) return false;
    for (int y : P.covers_below(x))
        if (labels[y] < v) return false;
    return true;
}
}  // namespace

PPartition whirl_at(const Poset& P, PPartition f, int x) {
    P.check_index(x);
    int mod = f.bound + 1;
    int v = f.labels[x];
    do {
        v = (v + 1) % mod;
    } while (!label_fits(P, f.labels, x, v));
    f.labels[x] = v;
    return f;
}

PPartition whirl(const Poset& P, const PPartition& f) {
    auto ext = linear_extension(P);
    PPartition g = f;
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) g = whirl_at(P, g, *it);
    return g;
}

PPartition whirl_iterate(const Poset& P, PPartition f, int times) {
    for (int i = 0; i < times; ++i) f = whirl(P, f);
    return f;
}

OrderIdeal phi(const Poset& product, const PPartition& f) {
    if (!product.product()) throw std::invalid_argument("phi needs a product-with-chain poset");
    int k = product.product()->k;
    if (f.bound != k) throw std::invalid_argument("partition bound does not match the chain factor");
    OrderIdeal I = 0;
    for (int x = 0; x < product.product()->base->size(); ++x)
        for (int level = 1; level <= f.labels[x]; ++level)
            I |= std::uint64_t{1} << product.product_index(x, level);
    return I;
}

PPartition phi_inv(const Poset& product, OrderIdeal I) {
    if (!product.product()) throw std::invalid_argument("phi_inv needs a product-with-chain poset");
    const auto& info = *product.product();
    PPartition f;
    f.bound = info.k;
    f.labels.assign(info.base->size(), 0);
    for (int x = 0; x < info.base->size(); ++x)
        for (int level = 1; level <= info.k; ++level)
            if ((I >> product.product_index(x, level)) & 1) f.labels[x] = level;
    return f;
}

std::vector<PPartition> enumerate_ppartitions(const Poset& P, int k, std::size_t cap) {
    Poset PK = product_with_chain(P, k);
    std::vector<PPartition> out;
    for (OrderIdeal I : enumerate_ideals(PK, cap)) out.push_back(phi_inv(PK, I));
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> value_set_A(const Poset& claw, const PPartition& f) {
    if (!claw.claw()) throw std::invalid_argument("A(f) is defined on claw posets only");
    std::set<int> A;
    for (int x : claw.claw()->outer) A.insert(f.labels[x]);
    return A;
}

int alpha(const Poset& claw, const PPartition& f) {
    return static_cast<int>(value_set_A(claw, f).size());
}

PPartition whirl_bar_A(const Poset& claw, const PPartition& f) {
    auto A = value_set_A(claw, f);
    PPartition g = f;
    for (int x : claw.claw()->outer) {
        auto it = A.upper_bound(f.labels[x]);
        g.labels[x] = (it == A.end()) ? *A.begin() : *it;
    }
    return g;
}

std::string ppartition_tuple(const Poset& P, const PPartition& f) {
    std::string s = "(";
    bool first = true;
    for (int x : P.display_order()) {
        if (!first) s += ",";
        s += std::to_string(f.labels[x]);
        first = false;
    }
    return s + ")";
}

}  // namespace whirl
