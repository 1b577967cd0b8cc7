#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace topocode {

// Every failure surfaced to callers carries a short machine-readable code
// (e.g. "not-a-tree") plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// alpha*k + a*d
struct LinForm {
    std::int64_t k = 0;
    std::int64_t d = 0;

    constexpr LinForm() = default;
    constexpr LinForm(std::int64_t kc, std::int64_t dc) : k(kc), d(dc) {}

    static constexpr LinForm plain(std::int64_t v) { return {0, v}; }
    static constexpr LinForm K() { return {1, 0}; }
    static constexpr LinForm D() { return {0, 1}; }

    // Ordering is the symbolic one: k outweighs any multiple of d.
    friend constexpr auto operator<=>(const LinForm&, const LinForm&) = default;

    LinForm operator+(const LinForm& o) const { return {checked_add(k, o.k), checked_add(d, o.d)}; }
    LinForm operator-(const LinForm& o) const { return {checked_sub(k, o.k), checked_sub(d, o.d)}; }
    LinForm operator-() const { return {checked_sub(0, k), checked_sub(0, d)}; }
    LinForm operator*(std::int64_t s) const { return {checked_mul(k, s), checked_mul(d, s)}; }
    LinForm& operator+=(const LinForm& o) { return *this = *this + o; }
    LinForm& operator-=(const LinForm& o) { return *this = *this - o; }

    bool is_zero() const { return k == 0 && d == 0; }
    int sign() const { return k != 0 ? (k > 0 ? 1 : -1) : (d > 0 ? 1 : (d < 0 ? -1 : 0)); }
    std::int64_t eval(std::int64_t k0, std::int64_t d0) const {
        return checked_add(checked_mul(k, k0), checked_mul(d, d0));
    }
};

inline LinForm operator*(std::int64_t s, const LinForm& f) { return f * s; }

LinForm sym_abs(const LinForm& f);

// Plain integer when k-coefficient is zero, else "a*k+b*d".
std::string to_string(const LinForm& f);
// Accepts "12", "k", "2*k+5*d", "k+5d", "-3*d", "2k-d".
LinForm parse_linform(const std::string& text);

}  // namespace topocode
