#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cuspcenter/parameters.hpp"
#include "cuspcenter/polynomial.hpp"

namespace testsupport {

inline const nlohmann::json& expected()
{
    static const nlohmann::json data = [] {
        std::ifstream in(CUSPCENTER_ORACLE_FILE);
        return nlohmann::json::parse(in);
    }();
    return data;
}

struct Case {
    std::string name;
    std::int64_t q, ell;
    int n, d;
};

inline const std::vector<Case>& cases()
{
    static const std::vector<Case> all = {
        {"P1", 2, 3, 2, 1}, {"P2", 2, 7, 3, 1}, {"P3", 8, 3, 2, 1},
        {"P4", 4, 5, 2, 1}, {"P5", 3, 5, 4, 1}, {"P4u", 2, 5, 4, 2},
    };
    return all;
}

inline cuspcenter::ParameterSet params(const Case& c)
{
    return cuspcenter::validate_parameters(c.q, c.ell, c.n, c.d);
}

inline cuspcenter::ParameterSet reduced(const Case& c)
{
    return cuspcenter::reduce_parameters(params(c));
}

inline cuspcenter::IntPolynomial poly(const std::vector<long>& low_to_high)
{
    std::vector<cuspcenter::Rational> c;
    for (long x : low_to_high)
        c.emplace_back(x);
    return cuspcenter::IntPolynomial(std::move(c));
}

inline cuspcenter::IntPolynomial poly_from_json(const nlohmann::json& j)
{
    std::vector<cuspcenter::Rational> c;
    for (const auto& x : j) {
        cuspcenter::Rational r(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
        r.canonicalize();
        c.push_back(r);
    }
    return cuspcenter::IntPolynomial(std::move(c));
}

inline cuspcenter::Rational rat(const std::string& s)
{
    cuspcenter::Rational r(s);
    r.canonicalize();
    return r;
}

struct CaseName {
    std::string operator()(const testing::TestParamInfo<Case>& info) const { return info.param.name; }
};

}  // namespace testsupport
