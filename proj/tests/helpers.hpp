#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <jetmoeb/jetmoeb.hpp>

namespace jt {

using jetmoeb::ComplexExact;
using C = ComplexExact;
using Jet = jetmoeb::PowerJet<ComplexExact>;
using LJet = jetmoeb::LaurentJet<ComplexExact>;

inline C q(long p, long d = 1)
{
    return C(jetmoeb::make_rational(p, d));
}

inline C z(const char* text)
{
    return jetmoeb::parse_complex(text);
}

inline std::vector<C> cs(std::initializer_list<const char*> texts)
{
    std::vector<C> v;
    for (const char* t : texts) {
        v.push_back(z(t));
    }
    return v;
}

inline Jet jet(std::initializer_list<const char*> texts)
{
    return Jet(cs(texts));
}

inline LJet ljet(int pole, std::initializer_list<const char*> texts)
{
    return LJet(pole, cs(texts));
}

} // namespace jt

#define EXPECT_JET_ERROR(stmt, code_)                                                                           \
    do {                                                                                                        \
        try {                                                                                                   \
            (void)(stmt);                                                                                       \
            ADD_FAILURE() << "expected " << jetmoeb::error_name(code_);                                        \
        } catch (const jetmoeb::jet_error& e) {                                                                 \
            EXPECT_EQ(e.code(), code_) << e.what();                                                             \
        }                                                                                                       \
    } while (0)
