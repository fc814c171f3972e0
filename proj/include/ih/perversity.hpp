#pragma once

#include <map>
#include <string>

#include "ih/errors.hpp"

namespace ih {

/**
 * Integer function of codimension (>= 2) controlling how far chains may
 * deviate from transversality.
 *
 * Built-ins on even codimension 2i: zero = 0, middle = i-1, log = i,
 * top = 2i-2, and the k-family which follows middle up to complex
 * codimension k and log above it.  Odd codimensions are filled in by
 * middle(c) = floor((c-2)/2), log = middle+1, top = c-2; the k-family uses
 * the middle+1 value on odd codimensions.
 */
class Perversity {
  public:
    enum class Kind { Zero, Middle, Log, Top, KFamily, Custom };

    static Perversity zero() { return Perversity(Kind::Zero); }
    static Perversity middle() { return Perversity(Kind::Middle); }
    static Perversity logarithmic() { return Perversity(Kind::Log); }
    static Perversity top() { return Perversity(Kind::Top); }
    static Perversity k_family(int k);
    // Explicit table codim -> value; values must be admissible
    // (nonnegative, nondecreasing, value <= codim - 1).
    static Perversity custom(std::map<int, int> values);

    int operator()(int codim) const { return value(codim); }
    int value(int codim) const;

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    // Pointwise comparison over codimensions 2..limit.
    bool leq(const Perversity& other, int limit = 64) const;

  private:
    explicit Perversity(Kind kind, int k = 0);
    Kind kind_;
    int k_ = 0;
    std::map<int, int> custom_;
    std::string name_;
};

} // namespace ih
