#pragma once

// Embedded catalogue representatives in the +/- text format.
namespace bellex::detail {

extern const char* const had_12_0;
extern const char* const had_16_0;
extern const char* const had_16_1;
extern const char* const had_16_2;
extern const char* const had_16_3;
extern const char* const had_16_4;
extern const char* const had_20_0;
extern const char* const had_20_1;
extern const char* const had_20_2;

}  // namespace bellex::detail
