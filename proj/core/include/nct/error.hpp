// Error taxonomy shared by all modules.  The code maps onto process exit
// codes (invalid_input -> 2, inconclusive -> 3, cap_exceeded -> 4).
#ifndef NCT_ERROR_HPP
#define NCT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nct {

enum class errc {
    invalid_input,
    inconclusive,
    cap_exceeded,
    internal,
};

// Finer-grained reason, so callers (and tests) can tell apart the distinct
// rejection causes the same errc groups together.
enum class reason {
    generic,
    parse,
    non_monic,
    reducible,
    degree_cap,
    enumeration_cap,
    budget_exhausted,
    index_obstruction,
    invalid_embedding,
    composite_modulus,
    division_by_zero,
    parent_mismatch,
    precision_cap,
};

class error : public std::runtime_error {
  public:
    error(errc c, reason r, const std::string& what)
        : std::runtime_error(what), code_(c), reason_(r) {}
    error(errc c, const std::string& what) : error(c, reason::generic, what) {}

    errc code() const { return code_; }
    reason why() const { return reason_; }

  private:
    errc code_;
    reason reason_;
};

inline error invalid_input(const std::string& what, reason r = reason::generic) {
    return error(errc::invalid_input, r, what);
}
inline error inconclusive(const std::string& what) {
    return error(errc::inconclusive, reason::precision_cap, what);
}
inline error cap_exceeded(const std::string& what, reason r = reason::degree_cap) {
    return error(errc::cap_exceeded, r, what);
}

} // namespace nct

#endif
