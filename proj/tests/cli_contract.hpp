#pragma once

// Exit-code contract of the command line, shared by the CLI test and the acceptance run.

#include <sstream>
#include <string>
#include <vector>

#include "qk/cli.hpp"

namespace contract {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

inline Outcome call(std::vector<std::string> args) {
    for (auto& a : args)
        if (a.size() > 3 && a.ends_with(".qk") && a.find('/') == std::string::npos) a = std::string(QK_FIXTURE_DIR) + "/" + a;
    std::ostringstream out, err;
    const int code = qk::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Case {
    std::vector<std::string> args;
    int code;
};

// One or more rows per subcommand, covering each exit code it can produce.
inline const std::vector<Case> kContract = {
    {{"validate", "bool2.qk"}, 0},
    {{"validate", "/no/such/file.qk"}, 2},
    {{"compose", "chain-vs-doubled.qk", "F", "G"}, 0},
    {{"compose", "tropical3.qk", "d", "d"}, 0},
    {{"compose", "tropical3.qk", "T/2", "T/1"}, 0},
    {{"compose", "chain-vs-doubled.qk", "F", "nope"}, 2},
    {{"compose", "chain-vs-doubled.qk", "A", "F"}, 2},
    {{"lift", "tropical3.qk", "T/1", "T/3"}, 0},
    {{"lift", "tropical3.qk", "d", "d"}, 0},
    {{"lift", "tropical3.qk", "T/9", "T/3"}, 2},
    {{"ext", "tropical3.qk", "d", "d"}, 0},
    {{"ext", "rel3.qk", "R/p/q/h", "R/p/q/h"}, 2},
    {{"colim", "antichain.qk", "phi", "id"}, 1},
    {{"colim", "antichain.qk", "id", "phi"}, 2},
    {{"lim", "antichain.qk", "phi", "id"}, 2},
    {{"presheaves", "bool2.qk", "C"}, 0},
    {{"--cap", "10", "presheaves", "tropical3.qk", "Pts"}, 3},
    {{"presheaves", "bool2.qk", "Two"}, 2},
    {{"yoneda-check", "rel3.qk", "P"}, 0},
    {{"--cap", "3", "yoneda-check", "rel3.qk", "P"}, 3},
    {{"kan", "antichain.qk", "id", "id"}, 0},
    {{"kan", "antichain.qk", "id", "collapse"}, 1},
    {{"kan", "antichain.qk", "id", "collapse", "--right"}, 1},
    {{"kan", "antichain.qk", "id", "collapse", "--bruteforce"}, 1},
    {{"kan", "chain-vs-doubled.qk", "F", "G"}, 2},
    {{"cocomplete", "bool2.qk", "C"}, 0},
    {{"cocomplete", "antichain.qk", "A"}, 1},
    {{"--cap", "2", "cocomplete", "tropical3.qk", "Pts"}, 3},
    {{"cauchy-complete", "bool2.qk", "C"}, 0},
    {{"cauchy-complete", "rel3.qk", "P"}, 1},
    {{"cauchy-test", "antichain.qk", "phi"}, 1},
    {{"cauchy-test", "tropical3.qk", "yb"}, 0},
    {{"cauchy-test", "tropical3.qk", "d"}, 1},
    {{"morita", "chain-vs-doubled.qk", "A", "B"}, 0},
    {{"morita", "chain-vs-doubled.qk", "A", "D"}, 1},
    {{"morita", "rel3.qk", "P", "S"}, 2},
    {{"matr", "tropical3.qk", "d", "d"}, 0},
    {{"matr", "antichain.qk", "phi", "phi"}, 2},
    {{"bim", "tropical3.qk"}, 0},
    {{"bim", "chain-vs-doubled.qk"}, 0},
    {{"dsum", "chain-vs-doubled.qk", "A", "D"}, 0},
    {{"dsum", "chain-vs-doubled.qk", "A", "F"}, 2},
    {{"split", "bool2.qk", "Two", "*", "1", "1"}, 0},
    {{"split", "bool2.qk", "Two", "*", "1", "0"}, 2},
    {{"lax-colim", "lax.qk", "L"}, 0},
    {{"lax-colim", "lax.qk", "M"}, 0},
    {{"lax-colim", "lax.qk", "C"}, 2},
    {{"laws", "bool2.qk", "--suite", "lemma04"}, 0},
    {{"laws", "bool2.qk", "--suite", "nope"}, 2},
    {{"--cap", "2", "laws", "tropical3.qk"}, 3},
    {{"bogus", "bool2.qk"}, 2},
    {{}, 2},
    {{"validate"}, 2},
};

}  // namespace contract
