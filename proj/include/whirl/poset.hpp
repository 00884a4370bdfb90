#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whirl {

// Enumeration guard for exhaustive sweeps (|J(P)| walks, orbit closures).
// Exhaustive verification must fail loudly, not hang.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 10'000'000;

class Poset;
using PosetPtr = std::shared_ptr<const Poset>;

// Claw family metadata: n outer elements each covering a unique minimum.
// V is the n = 2 instance with elements named l, r, c.
struct ClawInfo {
    int n = 0;
    std::vector<int> outer;  // b_1, ..., b_n
    int bottom = -1;         // the 0-hat element
};

// Product-with-chain metadata; element (x, level) sits at index x*k + level - 1.
struct ProductInfo {
    PosetPtr base;
    int k = 0;
};

// Finite poset on dense indices 0..p-1. Immutable after construction;
// covers is the transitive reduction of leq, leq its reflexive-transitive
// closure. Element count is limited to 64 so subsets fit in one word.
class Poset {
public:
    static constexpr int kMaxElements = 64;

    // Validates acyclicity and that covers is transitively reduced.
    static Poset from_covers(int size, std::vector<std::pair<int, int>> covers,
                             std::vector<std::string> names = {});

    int size() const { return size_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int a) const { return names_[a]; }
    int index_of(const std::string& name) const;

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int a, int b) const {
        check_index(a);
        check_index(b);
        return (up_[a] >> b) & 1;
    }
    // {b : a <= b} and {a : a <= b} as bitmasks.
    std::uint64_t up_set(int a) const { check_index(a); return up_[a]; }
    std::uint64_t down_set(int b) const { check_index(b); return down_[b]; }

    const std::vector<int>& covers_above(int a) const { check_index(a); return above_[a]; }
    const std::vector<int>& covers_below(int a) const { check_index(a); return below_[a]; }

    const std::optional<ClawInfo>& claw() const { return claw_; }
    const std::optional<ProductInfo>& product() const { return product_; }

    // Element index of (base element x, level in [1,k]) for product posets.
    int product_index(int x, int level) const;

    // Column order used when rendering states: (l, c, r) for V, identity
    // otherwise.
    const std::vector<int>& display_order() const { return display_order_; }

    void check_index(int a) const {
        if (a < 0 || a >= size_) throw std::out_of_range("poset element index out of range");
    }

private:
    friend Poset make_chain(int);
    friend Poset make_claw(int);
    friend Poset product_with_chain(const Poset&, int, std::size_t);

    Poset() = default;
    void finalize();  // builds leq closure and neighbor lists, validates

    int size_ = 0;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::uint64_t> up_;
    std::vector<std::uint64_t> down_;
    std::vector<std::vector<int>> above_;
    std::vector<std::vector<int>> below_;
    std::vector<int> display_order_;
    std::optional<ClawInfo> claw_;
    std::optional<ProductInfo> product_;
};

// Chain poset on elements 0..n-1 with covers (i, i+1).
Poset make_chain(int n);

// Claw poset C_n: bottom element covered by n incomparable elements.
// Elements are indexed b_1..b_n then the bottom; make_claw(2) is the V
// poset with names l, r, c and display order (l, c, r).
Poset make_claw(int n);

// P x [k] with the product cover rule; elements ordered fiber-major.
Poset product_with_chain(const Poset& P, int k, std::size_t cap = kDefaultCap);

// Deterministic linear extension: smallest-index-first topological order,
// except product posets are traversed fiber by fiber following a linear
// extension of the base.
std::vector<int> linear_extension(const Poset& P);

// True iff `order` lists every element once and respects the poset order.
bool is_linear_extension(const Poset& P, const std::vector<int>& order);

// All linear extensions (for small posets in exhaustive tests).
std::vector<std::vector<int>> all_linear_extensions(const Poset& P,
                                                    std::size_t cap = 100'000);

}  // namespace whirl
