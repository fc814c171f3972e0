#include "ih/perversity.hpp"

namespace ih {

namespace {
int middle_value(int c) { return (c - 2) / 2; }
} // namespace

Perversity::Perversity(Kind kind, int k) : kind_(kind), k_(k) {
    switch (kind_) {
        case Kind::Zero: name_ = "zero"; break;
        case Kind::Middle: name_ = "middle"; break;
        case Kind::Log: name_ = "log"; break;
        case Kind::Top: name_ = "top"; break;
        case Kind::KFamily: name_ = "k=" + std::to_string(k_); break;
        case Kind::Custom: name_ = "custom"; break;
    }
}

Perversity Perversity::k_family(int k) {
    if (k < 0) throw parse_error("k-family perversity needs k >= 0");
    return Perversity(Kind::KFamily, k);
}

Perversity Perversity::custom(std::map<int, int> values) {
    Perversity p(Kind::Custom);
    int prev = 0;
    for (const auto& [c, v] : values) {
        if (c < 2) throw parse_error("perversity codimension must be >= 2");
        if (v < 0 || v > c - 1) throw parse_error("perversity value out of range at codim " +
                                                  std::to_string(c));
        if (v < prev) throw parse_error("perversity values must be nondecreasing");
        prev = v;
    }
    p.custom_ = std::move(values);
    return p;
}

int Perversity::value(int codim) const {
    if (codim < 2) throw precondition_error("perversity evaluated at codimension < 2");
    switch (kind_) {
        case Kind::Zero: return 0;
        case Kind::Middle: return middle_value(codim);
        case Kind::Log: return middle_value(codim) + 1;
        case Kind::Top: return codim - 2;
        case Kind::KFamily: {
            if (codim % 2 == 1) return middle_value(codim) + 1;
            int i = codim / 2;
            return i <= k_ ? i - 1 : i;
        }
        case Kind::Custom: {
            auto it = custom_.find(codim);
            if (it != custom_.end()) return it->second;
            // Extend a partial table: constant below the first entry,
            // last value above, nondecreasing interpolation is the caller's
            // responsibility via explicit entries.
            if (custom_.empty()) return 0;
            if (codim < custom_.begin()->first) return custom_.begin()->second;
            return std::prev(custom_.upper_bound(codim))->second;
        }
    }
    throw invariant_error("unreachable perversity kind");
}

bool Perversity::leq(const Perversity& other, int limit) const {
    for (int c = 2; c <= limit; ++c)
        if (value(c) > other.value(c)) return false;
    return true;
}

} // namespace ih
