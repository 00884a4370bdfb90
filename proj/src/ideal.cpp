#include "whirl/ideal.hpp"

#include <algorithm>

namespace whirl {

bool is_order_ideal(const Poset& P, OrderIdeal S) {
    for (int b = 0; b < P.size(); ++b)
        if ((S >> b) & 1) {
            if ((P.down_set(b) & ~S) != 0) return false;
        }
    return true;
}

OrderIdeal toggle(const Poset& P, OrderIdeal I, int x) {
    P.check_index(x);
    std::uint64_t bit = std::uint64_t{1} << x;
    if (I & bit) {
        // removable iff nothing in I sits strictly above x
        if ((P.up_set(x) & I) == bit) return I & ~bit;
    } else {
        // addable iff everything strictly below x is already in I
        if ((P.down_set(x) & ~I) == bit) return I | bit;
    }
    return I;
}

OrderIdeal rowmotion_direct(const Poset& P, OrderIdeal I) {
    std::uint64_t complement = ~I & ((P.size() == 64) ? ~std::uint64_t{0}
                                                      : ((std::uint64_t{1} << P.size()) - 1));
    OrderIdeal next = 0;
    for (int x = 0; x < P.size(); ++x) {
        if (!((complement >> x) & 1)) continue;
        // minimal in the complement: nothing else of the complement below it
        if ((P.down_set(x) & complement) == (std::uint64_t{1} << x)) next |= P.down_set(x);
    }
    return next;
}

OrderIdeal rowmotion_toggles(const Poset& P, OrderIdeal I, const std::vector<int>& ext) {
    if (!is_linear_extension(P, ext))
        throw std::invalid_argument("not a linear extension of this poset");
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) I = toggle(P, I, *it);
    return I;
}

namespace {
void extend_ideals(const Poset& P, const std::vector<int>& ext, std::size_t depth,
                   OrderIdeal I, std::vector<OrderIdeal>& out, std::size_t cap) {
    if (depth == ext.size()) {
        if (out.size() >= cap) throw ResourceError("ideal enumeration cap exceeded");
        out.push_back(I);
        return;
    }
    int x = ext[depth];
    extend_ideals(P, ext, depth + 1, I, out, cap);
    // include x only if everything below it made it in
    if ((P.down_set(x) & ~I) == (std::uint64_t{1} << x))
        extend_ideals(P, ext, depth + 1, I | (std::uint64_t{1} << x), out, cap);
}
}  // namespace

std::vector<OrderIdeal> enumerate_ideals(const Poset& P, std::size_t cap) {
    std::vector<OrderIdeal> out;
    extend_ideals(P, linear_extension(P), 0, 0, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t claw_ideal_count(int n, int k) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(k) + 1; ++i) {
        std::uint64_t pw = 1;
        for (int e = 0; e < n; ++e) pw *= i;
        total += pw;
    }
    return total;
}

std::string ideal_bitstring(const Poset& P, OrderIdeal I) {
    std::string s(P.size(), '0');
    for (int i = 0; i < P.size(); ++i)
        if ((I >> i) & 1) s[i] = '1';
    return s;
}

std::vector<std::string> ideal_names(const Poset& P, OrderIdeal I) {
    std::vector<std::string> out;
    for (int i = 0; i < P.size(); ++i)
        if ((I >> i) & 1) out.push_back(P.name(i));
    return out;
}

}  // namespace whirl
