#include "bellex/catalog_data.hpp"

namespace bellex::detail {

const char* const had_12_0 =
    "-+++++++++++\n"
    "+++-+++---+-\n"
    "+-++-+++---+\n"
    "++-++-+++---\n"
    "+-+-++-+++--\n"
    "+--+-++-+++-\n"
    "+---+-++-+++\n"
    "++---+-++-++\n"
    "+++---+-++-+\n"
    "++++---+-++-\n"
    "+-+++---+-++\n"
    "++-+++---+-+\n";

const char* const had_16_0 =
    "++++++++++++++++\n"
    "+-+-+-+-+-+-+-+-\n"
    "++--++--++--++--\n"
    "+--++--++--++--+\n"
    "++++----++++----\n"
    "+-+--+-++-+--+-+\n"
    "++----++++----++\n"
    "+--+-++-+--+-++-\n"
    "++++++++--------\n"
    "+-+-+-+--+-+-+-+\n"
    "++--++----++--++\n"
    "+--++--+-++--++-\n"
    "++++--------++++\n"
    "+-+--+-+-+-++-+-\n"
    "++----++--++++--\n"
    "+--+-++--++-+--+\n";

const char* const had_16_1 =
    "++++++++++++++++\n"
    "+-+-+--+-++++---\n"
    "+-+++++-+---+---\n"
    "-++-+---+-+-+++-\n"
    "----+++--+-++++-\n"
    "--++-+---++-+-++\n"
    "--+-++-+++---+-+\n"
    "-++--++-++++----\n"
    "-+--++++--+-+--+\n"
    "-+-++---++-++--+\n"
    "+++---+--+--++-+\n"
    "-++++-++-+----+-\n"
    "+++-++-----+--++\n"
    "--+---+++--++-++\n"
    "+---+-+-+++---++\n"
    "--+++-+---++-+-+\n";

const char* const had_16_2 =
    "++++++++++++++++\n"
    "++---+-+--++++--\n"
    "+++----+-+--+-++\n"
    "+-++-+--+-+-+--+\n"
    "---+++-+-+-++--+\n"
    "--+---+--+++++-+\n"
    "-+++--+++--++---\n"
    "-++-++++--+----+\n"
    "+++++------+-+-+\n"
    "+-++-+++-+---+--\n"
    "--+--+-++--+-+++\n"
    "-+++-+---+++--+-\n"
    "--+++--+--+-+++-\n"
    "-+-+---++++--+-+\n"
    "+--+--++--++--++\n"
    "-+-+-++-----++++\n";

const char* const had_16_3 =
    "++++++++++++++++\n"
    "+----++--+-+++-+\n"
    "-++-++------++++\n"
    "--+++-++-+---+-+\n"
    "+-+++++-+---+---\n"
    "---+-+-+++--+-++\n"
    "+--+++-+---+-++-\n"
    "+-+-+---++-+--++\n"
    "+++--+-+++---+--\n"
    "--+-++-+-++++---\n"
    "++++---+---++--+\n"
    "--++-+--+-++-+-+\n"
    "-+-++---++-+++--\n"
    "+-++-----++-+++-\n"
    "-+++-++--+-+--+-\n"
    "++-+++---++----+\n";

const char* const had_16_4 =
    "++++++++++++++++\n"
    "--+--++++-++--+-\n"
    "+-----++++-+++--\n"
    "-+---+--+++-+++-\n"
    "--+++--+++--+-+-\n"
    "+-+------++++-++\n"
    "+++--+-++---+--+\n"
    "---+-+-+---+++++\n"
    "+---+--++-+--+++\n"
    "-+-+---+++++---+\n"
    "-+--+-+-+--++-++\n"
    "----++++-++-+--+\n"
    "++--++-+-+-+--+-\n"
    "+--+-++-++----++\n"
    "++-+--++--+-+-+-\n"
    "+--+++--+-+++---\n";

const char* const had_20_0 =
    "-+++++++++++++++++++\n"
    "+++--++++-+-+----++-\n"
    "+-++--++++-+-+----++\n"
    "++-++--++++-+-+----+\n"
    "+++-++--++++-+-+----\n"
    "+-++-++--++++-+-+---\n"
    "+--++-++--++++-+-+--\n"
    "+---++-++--++++-+-+-\n"
    "+----++-++--++++-+-+\n"
    "++----++-++--++++-+-\n"
    "+-+----++-++--++++-+\n"
    "++-+----++-++--++++-\n"
    "+-+-+----++-++--++++\n"
    "++-+-+----++-++--+++\n"
    "+++-+-+----++-++--++\n"
    "++++-+-+----++-++--+\n"
    "+++++-+-+----++-++--\n"
    "+-++++-+-+----++-++-\n"
    "+--++++-+-+----++-++\n"
    "++--++++-+-+----++-+\n";

const char* const had_20_1 =
    "++++++++++++++++++++\n"
    "+-++-++-++-----+-++-\n"
    "-++---+-++-+++-++---\n"
    "+-++--++-+--+-+-+--+\n"
    "--+--+++-+++-++--+--\n"
    "+--+-++---++-+-++--+\n"
    "--++++-+---++--+++--\n"
    "++-+-+-+-+-+++----+-\n"
    "---++-+--++++-++--+-\n"
    "+++-+++----+--+-+-+-\n"
    "+---+++++---++++----\n"
    "-+++++---+---+++---+\n"
    "+-+-++--+++++------+\n"
    "----+++--+--++--++++\n"
    "+--++---++-+-++-++--\n"
    "-+-++++++++-----+---\n"
    "--+++-+++--+-+----++\n"
    "-+-+-++-+--++-+--+-+\n"
    "-----+-+++-+--+++-++\n"
    "--++-+--+-+-+++-+-+-\n";

const char* const had_20_2 =
    "++++++++++++++++++++\n"
    "+---+-+-+---++-+-+++\n"
    "++--+--+-+++---+--++\n"
    "---++-++++-+-+-++---\n"
    "+--++---+++---+-++-+\n"
    "-+-+---+++--+++---++\n"
    "-+-+++-----+-+++-+-+\n"
    "+-+++-++---++-+----+\n"
    "+++-+----+--+++++---\n"
    "+--+-+-+--+-++-++--+\n"
    "-+--++++-+--+---++-+\n"
    "+++----++--+-+--++-+\n"
    "--+-++-++-----+++-++\n"
    "+----++--+-+-++-+-++\n"
    "----+--+--+++++-+++-\n"
    "+----+-+++-++-++-+--\n"
    "++-+++--+--++---+-+-\n"
    "--++-----+-++--+++++\n"
    "++-+--++------+++++-\n"
    "+-++++-+-+---+---++-\n";

}  // namespace bellex::detail
