#include <pollyanna/errors.hh>
#include <pollyanna/polynomial.hh>

#include <sstream>

using std::string;
using std::vector;

namespace pollyanna
{
    Polynomial::Polynomial(vector<BigInt> coefficients) :
        _coefficients(std::move(coefficients))
    {
        if (_coefficients.empty())
            throw InvalidParameter("a polynomial needs at least one coefficient");
        for (auto & c : _coefficients)
            if (c < 0)
                throw InvalidParameter("polynomial coefficients must be non-negative");
    }

    auto Polynomial::parse(const string & text) -> Polynomial
    {
        vector<BigInt> coefficients;
        std::stringstream ss(text);
        for (string item; std::getline(ss, item, ',');) {
            auto first = item.find_first_not_of(" \t");
            auto last = item.find_last_not_of(" \t");
            if (first == string::npos)
                throw InvalidParameter("empty coefficient in '" + text + "'");
            item = item.substr(first, last - first + 1);
            if (item.find_first_not_of("0123456789") != string::npos)
                throw InvalidParameter("coefficient '" + item + "' is not a non-negative integer");
            coefficients.emplace_back(item);
        }
        if (! text.empty() && text.back() == ',')
            throw InvalidParameter("empty coefficient in '" + text + "'");
        return Polynomial(std::move(coefficients));
    }

    auto Polynomial::operator()(const BigInt & x) const -> BigInt
    {
        BigInt result = 0;
        for (auto c = _coefficients.rbegin(); c != _coefficients.rend(); ++c)
            result = result * x + *c;
        return result;
    }

    auto Polynomial::to_string() const -> string
    {
        string result;
        for (auto i = _coefficients.size(); i-- > 0;) {
            auto & c = _coefficients[i];
            if (c == 0)
                continue;
            if (! result.empty())
                result += " + ";
            if (c != 1 || i == 0)
                result += c.str();
            if (i >= 1)
                result += "x";
            if (i >= 2)
                result += "^" + std::to_string(i);
        }
        return result.empty() ? "0" : result;
    }

    auto Polynomial::encode() const -> string
    {
        string result;
        for (auto & c : _coefficients) {
            if (! result.empty())
                result += ",";
            result += c.str();
        }
        return result;
    }
}
