#include "whirl/poset.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace whirl {

int Poset::index_of(const std::string& name) const {
    for (int i = 0; i < size_; ++i)
        if (names_[i] == name) return i;
    return -1;
}

int Poset::product_index(int x, int level) const {
    if (!product_) throw std::logic_error("product_index on a non-product poset");
    int k = product_->k;
    if (level < 1 || level > k) throw std::out_of_range("fiber level out of range");
    product_->base->check_index(x);
    return x * k + (level - 1);
}

void Poset::finalize() {
    if (size_ < 1) throw std::invalid_argument("poset must have at least one element");
    if (size_ > kMaxElements) throw ResourceError("poset exceeds the 64-element cap");
    if (names_.empty()) {
        for (int i = 0; i < size_; ++i) names_.push_back(std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != size_)
        throw std::invalid_argument("name table size mismatch");

    above_.assign(size_, {});
    below_.assign(size_, {});
    std::vector<int> indeg(size_, 0);
    for (auto [a, b] : covers_) {
        check_index(a);
        check_index(b);
        if (a == b) throw std::invalid_argument("cover relation is irreflexive");
        below_[b].push_back(a);
        above_[a].push_back(b);
        ++indeg[b];
    }
    for (int i = 0; i < size_; ++i) {
        std::sort(above_[i].begin(), above_[i].end());
        std::sort(below_[i].begin(), below_[i].end());
    }

    // Topological order; a leftover element means the covers contain a cycle.
    std::vector<int> topo;
    std::vector<int> deg = indeg;
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < size_; ++i)
        if (deg[i] == 0) ready.push(i);
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        topo.push_back(a);
        for (int b : above_[a])
            if (--deg[b] == 0) ready.push(b);
    }
    if (static_cast<int>(topo.size()) != size_)
        throw std::invalid_argument("cover relation contains a cycle");

    // Reflexive-transitive closure, sweeping the topological order backwards.
    up_.assign(size_, 0);
    down_.assign(size_, 0);
    for (int i = size_ - 1; i >= 0; --i) {
        int a = topo[i];
        up_[a] = std::uint64_t{1} << a;
        for (int b : above_[a]) up_[a] |= up_[b];
    }
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if ((up_[a] >> b) & 1) down_[b] |= std::uint64_t{1} << a;

    // covers must be the transitive reduction: no cover implied by two others.
    for (auto [a, b] : covers_) {
        for (int m : above_[a]) {
            if (m != b && leq(m, b))
                throw std::invalid_argument("cover " + names_[a] + " < " + names_[b] +
                                            " is implied by other covers");
        }
    }
    std::sort(covers_.begin(), covers_.end());

    if (display_order_.empty()) {
        display_order_.resize(size_);
        for (int i = 0; i < size_; ++i) display_order_[i] = i;
    }
}

Poset Poset::from_covers(int size, std::vector<std::pair<int, int>> covers,
                         std::vector<std::string> names) {
    Poset P;
    P.size_ = size;
    P.covers_ = std::move(covers);
    P.names_ = std::move(names);
    P.finalize();
    return P;
}

Poset make_chain(int n) {
    if (n < 1) throw std::invalid_argument("chain size must be positive");
    Poset P;
    P.size_ = n;
    for (int i = 0; i + 1 < n; ++i) P.covers_.emplace_back(i, i + 1);
    P.finalize();
    return P;
}

Poset make_claw(int n) {
    if (n < 1) throw std::invalid_argument("claw size must be positive");
    Poset P;
    P.size_ = n + 1;
    ClawInfo info;
    info.n = n;
    info.bottom = n;
    for (int i = 0; i < n; ++i) {
        P.covers_.emplace_back(n, i);
        info.outer.push_back(i);
    }
    if (n == 2) {
        P.names_ = {"l", "r", "c"};
        P.display_order_ = {0, 2, 1};  // (l, c, r), matching the usual V picture
    } else {
        for (int i = 1; i <= n; ++i) P.names_.push_back("b" + std::to_string(i));
        P.names_.push_back("0");
    }
    P.claw_ = std::move(info);
    P.finalize();
    return P;
}

Poset product_with_chain(const Poset& P, int k, std::size_t cap) {
    if (k < 1) throw std::invalid_argument("chain factor must be positive");
    std::size_t total = static_cast<std::size_t>(P.size()) * k;
    if (total > std::min<std::size_t>(cap, Poset::kMaxElements))
        throw ResourceError("product poset exceeds the element cap");

    Poset Q;
    Q.size_ = static_cast<int>(total);
    auto idx = [k](int x, int level) { return x * k + (level - 1); };
    for (int x = 0; x < P.size(); ++x) {
        bool digit_tail = !P.name(x).empty() && std::isdigit(P.name(x).back());
        for (int level = 1; level <= k; ++level) {
            Q.names_.push_back(P.name(x) + (digit_tail ? "." : "") + std::to_string(level));
            if (level < k) Q.covers_.emplace_back(idx(x, level), idx(x, level + 1));
        }
        for (int y : P.covers_above(x))
            for (int level = 1; level <= k; ++level)
                Q.covers_.emplace_back(idx(x, level), idx(y, level));
    }
    Q.product_ = ProductInfo{std::make_shared<Poset>(P), k};
    Q.finalize();
    return Q;
}

std::vector<int> linear_extension(const Poset& P) {
    if (P.product()) {
        auto base_ext = linear_extension(*P.product()->base);
        std::vector<int> ext;
        ext.reserve(P.size());
        for (int x : base_ext)
            for (int level = 1; level <= P.product()->k; ++level)
                ext.push_back(P.product_index(x, level));
        return ext;
    }
    std::vector<int> indeg(P.size(), 0);
    for (auto [a, b] : P.covers()) {
        (void)a;
        ++indeg[b];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < P.size(); ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> ext;
    while (!ready.empty()) {
        int a = ready.top();
        ready.pop();
        ext.push_back(a);
        for (int b : P.covers_above(a))
            if (--indeg[b] == 0) ready.push(b);
    }
    if (static_cast<int>(ext.size()) != P.size())
        throw std::logic_error("malformed poset: cycle detected");
    return ext;
}

bool is_linear_extension(const Poset& P, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != P.size()) return false;
    std::vector<int> pos(P.size(), -1);
    for (int i = 0; i < P.size(); ++i) {
        if (order[i] < 0 || order[i] >= P.size() || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (int a = 0; a < P.size(); ++a)
        for (int b : P.covers_above(a))
            if (pos[a] > pos[b]) return false;
    return true;
}

namespace {
void extend_all(const Poset& P, std::uint64_t placed, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out, std::size_t cap) {
    if (static_cast<int>(prefix.size()) == P.size()) {
        if (out.size() >= cap) throw ResourceError("too many linear extensions");
        out.push_back(prefix);
        return;
    }
    for (int a = 0; a < P.size(); ++a) {
        if ((placed >> a) & 1) continue;
        // a is available iff everything below it is already placed
        if ((P.down_set(a) & ~placed) != (std::uint64_t{1} << a)) continue;
        prefix.push_back(a);
        extend_all(P, placed | (std::uint64_t{1} << a), prefix, out, cap);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> all_linear_extensions(const Poset& P, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    extend_all(P, 0, prefix, out, cap);
    return out;
}

}  // namespace whirl
