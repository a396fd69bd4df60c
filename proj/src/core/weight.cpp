/*
 * Copyright 2026 The cmc Authors.
 * License: Apache License 2.0
 */
#include "cmc/weight.hpp"

#include "cmc/error.hpp"

#include <algorithm>
#include <cctype>

namespace cmc {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

BigInt parse_digits(std::string_view s)
{
    BigInt v = 0;
    for (char c : s) {
        v *= 10;
        v += c - '0';
    }
    return v;
}

} // namespace

Weight parse_weight(std::string_view text)
{
    if (text.empty())
        throw InvalidInput("empty weight");
    if (text.front() == '-')
        throw InvalidInput("negative weight '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash);
        auto den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidInput("malformed fraction '" + std::string(text) + "'");
        BigInt d = parse_digits(den);
        if (d == 0)
            throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        return Weight(parse_digits(num), d);
    }

    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                          : text.substr(dot + 1);
    if (whole.empty() && frac.empty())
        throw InvalidInput("malformed weight '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
        throw InvalidInput("malformed weight '" + std::string(text) + "'");

    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i)
        scale *= 10;
    BigInt num = (whole.empty() ? BigInt(0) : parse_digits(whole)) * scale
                 + (frac.empty() ? BigInt(0) : parse_digits(frac));
    return Weight(num, scale);
}

std::string format_weight(const Weight& w)
{
    BigInt num = boost::multiprecision::numerator(w);
    BigInt den = boost::multiprecision::denominator(w);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    if (den == 1)
        return sign + num.str();

    BigInt rest = den;
    int twos = 0;
    int fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1)
        return sign + num.str() + "/" + den.str();

    int digits = std::max(twos, fives);
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    std::string s = BigInt(num * (scale / den)).str();
    if (static_cast<int>(s.size()) <= digits)
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return sign + s;
}

double to_double(const Weight& w)
{
    return w.convert_to<double>();
}

} // namespace cmc
