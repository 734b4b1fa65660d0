#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace pollyanna
{
    using BigInt = boost::multiprecision::cpp_int;

    /// Non-negative integer coefficients c_0..c_d, constant term first.
    class Polynomial
    {
        public:
            /// Throws InvalidParameter on an empty or negative coefficient list.
            explicit Polynomial(std::vector<BigInt> coefficients);

            /// Parses "c0,c1,...,cd". Throws InvalidParameter.
            static auto parse(const std::string & text) -> Polynomial;

            auto operator()(const BigInt & x) const -> BigInt;
            auto degree() const -> std::size_t { return _coefficients.size() - 1; }
            auto coefficients() const -> const std::vector<BigInt> & { return _coefficients; }

            /// Human-readable form, e.g. "x^3 + 2".
            auto to_string() const -> std::string;

            /// Round-trips through parse().
            auto encode() const -> std::string;

        private:
            std::vector<BigInt> _coefficients;
    };
}
